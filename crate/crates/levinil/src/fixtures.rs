//! Bundled algebras: Heisenberg, standard filiform, the 8-dimensional
//! characteristically nilpotent algebra, the 6-dimensional glued algebra
//! on the Heisenberg radical, and the 52-dimensional non-quasi-cyclic
//! fixture with its block sl2 action.

use crate::lie::LieAlgebra;
use crate::mat::Matrix;
use crate::rat::{one, rat_int};
use crate::sl2::Sl2Action;
use crate::Error;

/// Heisenberg algebra `h_n` in the standard basis
/// `x_1..x_n, y_1..y_n, z` with `[x_i, y_i] = z`.
pub fn heisenberg(n: usize) -> LieAlgebra {
    assert!(n >= 1, "heisenberg requires n >= 1");
    let dim = 2 * n + 1;
    let mut l = LieAlgebra::abelian(dim);
    for i in 0..n {
        l.add_term(i, n + i, 2 * n, one()).unwrap();
    }
    let mut labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    labels.extend((1..=n).map(|i| format!("y{i}")));
    labels.push("z".into());
    l.set_labels(labels);
    l.set_name(format!("h{n}"));
    l.set_grade(
        std::iter::repeat_n(1, 2 * n)
            .chain(std::iter::once(2))
            .collect(),
    )
    .unwrap();
    l
}

/// The derivation of `h_n` that is the identity on the symplectic part and
/// multiplication by 2 on the center.
pub fn heisenberg_grading_derivation(n: usize) -> Matrix {
    let dim = 2 * n + 1;
    let mut d = Matrix::identity(dim);
    d.set(dim - 1, dim - 1, rat_int(2));
    d
}

/// Standard filiform model of dimension `n`: `[e_1, e_i] = e_{i+1}` for
/// `2 <= i <= n-1`. Nilindex `n - 1`, type 2.
pub fn standard_filiform(n: usize) -> LieAlgebra {
    assert!(n >= 3, "filiform requires n >= 3");
    let mut l = LieAlgebra::abelian(n);
    for i in 1..(n - 1) {
        l.add_term(0, i, i + 1, one()).unwrap();
    }
    l.set_name(format!("f{n}"));
    l
}

/// The 8-dimensional characteristically nilpotent algebra `Dl8`.
pub fn dl8() -> LieAlgebra {
    let mut l = LieAlgebra::abelian(8);
    // [a1,a2] = -[a3,a4] = a5
    l.add_term(0, 1, 4, one()).unwrap();
    l.add_term(2, 3, 4, -one()).unwrap();
    // [a1,a3] = [a2,a4] = a6
    l.add_term(0, 2, 5, one()).unwrap();
    l.add_term(1, 3, 5, one()).unwrap();
    // [a1,a4] = -[a2,a6] = -[a3,a5] = a7
    l.add_term(0, 3, 6, one()).unwrap();
    l.add_term(1, 5, 6, -one()).unwrap();
    l.add_term(2, 4, 6, -one()).unwrap();
    // [a1,a5] = -[a2,a3] = [a4,a6] = -a8
    l.add_term(0, 4, 7, -one()).unwrap();
    l.add_term(1, 2, 7, one()).unwrap();
    l.add_term(3, 5, 7, -one()).unwrap();
    l.set_labels((1..=8).map(|i| format!("a{i}")).collect());
    l.set_name("dl8");
    l
}

/// Split simple 3-dimensional algebra in the basis `(h, e, f)`:
/// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    let mut l = LieAlgebra::abelian(3);
    l.add_term(0, 1, 1, rat_int(2)).unwrap();
    l.add_term(0, 2, 2, rat_int(-2)).unwrap();
    l.add_term(1, 2, 0, one()).unwrap();
    l.set_labels(vec!["h".into(), "e".into(), "f".into()]);
    l.set_name("sl2");
    l
}

/// The 6-dimensional algebra `sl2 + h1` in the basis `(x, y, z, h, e, f)`
/// with nonzero products `xy=z, hx=x, hy=-y, ey=x, fx=y, he=2e, hf=-2f,
/// ef=h`.
pub fn glued_l0_h1() -> LieAlgebra {
    let mut l = LieAlgebra::abelian(6);
    let (x, y, z, h, e, f) = (0, 1, 2, 3, 4, 5);
    l.add_term(x, y, z, one()).unwrap(); // xy = z
    l.add_term(h, x, x, one()).unwrap(); // hx = x
    l.add_term(h, y, y, -one()).unwrap(); // hy = -y
    l.add_term(e, y, x, one()).unwrap(); // ey = x
    l.add_term(f, x, y, one()).unwrap(); // fx = y
    l.add_term(h, e, e, rat_int(2)).unwrap(); // he = 2e
    l.add_term(h, f, f, rat_int(-2)).unwrap(); // hf = -2f
    l.add_term(e, f, h, one()).unwrap(); // ef = h
    l.set_labels(
        ["x", "y", "z", "h", "e", "f"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    );
    l.set_name("l0h1");
    l
}

const TABLE2_DATA: &str = include_str!("../data/table2.lie");

/// The bundled 52-dimensional non-quasi-cyclic 3-nilpotent algebra of type
/// 11 (basis `v0..v10, w0..w18, z0..z6, x0..x14`), loaded verbatim from the
/// data file. Consistency is the verifier's job, not the loader's.
pub fn table2() -> LieAlgebra {
    let mut l = crate::files::read_lieconst(TABLE2_DATA).expect("bundled fixture parses");
    let mut labels: Vec<String> = (0..=10).map(|i| format!("v{i}")).collect();
    labels.extend((0..=18).map(|i| format!("w{i}")));
    labels.extend((0..=6).map(|i| format!("z{i}")));
    labels.extend((0..=14).map(|i| format!("x{i}")));
    l.set_labels(labels);
    l
}

/// The block-diagonal sl2 action on the 52-dimensional fixture: standard
/// irreducible actions of highest weights 10, 18, 6 and 14 on the four
/// basis blocks.
pub fn table2_action() -> Sl2Action {
    Sl2Action::direct_sum(&[
        Sl2Action::irreducible(10),
        Sl2Action::irreducible(18),
        Sl2Action::irreducible(6),
        Sl2Action::irreducible(14),
    ])
}

/// Fixture lookup by name, shared by the CLI.
pub fn build(name: &str, arg: Option<usize>) -> Result<LieAlgebra, Error> {
    match (name, arg) {
        ("table2", None) => Ok(table2()),
        ("dl8", None) => Ok(dl8()),
        ("l0h1", None) => Ok(glued_l0_h1()),
        ("heisenberg", Some(n)) if n >= 1 => Ok(heisenberg(n)),
        ("filiform", Some(n)) if n >= 3 => Ok(standard_filiform(n)),
        ("heisenberg", _) => Err(Error::Parse("heisenberg requires N >= 1".into())),
        ("filiform", _) => Err(Error::Parse("filiform requires N >= 3".into())),
        ("table2" | "dl8" | "l0h1", Some(_)) => {
            Err(Error::Parse(format!("fixture {name} takes no argument")))
        }
        _ => Err(Error::Parse(format!("unknown fixture `{name}`"))),
    }
}
