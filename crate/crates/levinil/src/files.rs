//! Plain-text interchange formats.
//!
//! Three headers are understood, all 1-based sparse:
//!
//! ```text
//! lieconst 1          sl2act 1            linmap 1
//! dim N               dim N               dim R [C]
//! name ...            H i j p/q           M i j p/q
//! grade g1 ... gN     E i j p/q           ...
//! c i j k p/q         F i j p/q
//! ```
//!
//! `c i j k p/q` means `[b_i, b_j] += (p/q) b_k` and requires `i < j`;
//! duplicate `(i,j,k)` lines are rejected. Lines starting with `#` are
//! comments. Writers emit canonical form: sorted lines, rationals reduced
//! with positive denominators, integers without `/1`.

use std::collections::BTreeSet;

use crate::lie::LieAlgebra;
use crate::mat::Matrix;
use crate::rat::{format_rat, parse_rat};
use crate::sl2::Sl2Action;
use crate::Error;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_index(tok: &str, dim: usize, line: usize) -> Result<usize, Error> {
    let i: usize = tok
        .parse()
        .map_err(|_| Error::Parse(format!("line {line}: bad index `{tok}`")))?;
    if i == 0 || i > dim {
        return Err(Error::Parse(format!(
            "line {line}: index {i} out of range 1..={dim}"
        )));
    }
    Ok(i - 1)
}

pub fn read_lieconst(text: &str) -> Result<LieAlgebra, Error> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "lieconst 1")) => {}
        other => {
            return Err(Error::Parse(format!(
                "expected header `lieconst 1`, got {:?}",
                other.map(|(_, l)| l)
            )))
        }
    }
    let dim = match lines.next() {
        Some((n, l)) => {
            let rest = l
                .strip_prefix("dim ")
                .ok_or_else(|| Error::Parse(format!("line {n}: expected `dim N`")))?;
            rest.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {n}: bad dimension `{rest}`")))?
        }
        None => return Err(Error::Parse("missing `dim` line".into())),
    };
    let mut alg = LieAlgebra::abelian(dim);
    let mut grade: Option<Vec<usize>> = None;
    let mut seen: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
    for (n, l) in lines {
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("name") => {
                let rest = l["name".len()..].trim();
                if rest.is_empty() {
                    return Err(Error::Parse(format!("line {n}: empty name")));
                }
                alg.set_name(rest);
            }
            Some("grade") => {
                let g: Result<Vec<usize>, _> = toks.map(str::parse).collect();
                let g =
                    g.map_err(|_| Error::Parse(format!("line {n}: bad grade list")))?;
                if g.len() != dim {
                    return Err(Error::Parse(format!(
                        "line {n}: grade list has {} entries, expected {dim}",
                        g.len()
                    )));
                }
                if g.contains(&0) {
                    return Err(Error::Parse(format!("line {n}: grades must be positive")));
                }
                grade = Some(g);
            }
            Some("c") => {
                let (i, j, k, v) = match (toks.next(), toks.next(), toks.next(), toks.next()) {
                    (Some(i), Some(j), Some(k), Some(v)) => (i, j, k, v),
                    _ => {
                        return Err(Error::Parse(format!(
                            "line {n}: expected `c i j k p/q`"
                        )))
                    }
                };
                if toks.next().is_some() {
                    return Err(Error::Parse(format!("line {n}: trailing tokens")));
                }
                let i = parse_index(i, dim, n)?;
                let j = parse_index(j, dim, n)?;
                let k = parse_index(k, dim, n)?;
                if i >= j {
                    return Err(Error::Parse(format!(
                        "line {n}: requires i < j (got {} {})",
                        i + 1,
                        j + 1
                    )));
                }
                if !seen.insert((i, j, k)) {
                    return Err(Error::Parse(format!(
                        "line {n}: duplicate entry ({} {} {})",
                        i + 1,
                        j + 1,
                        k + 1
                    )));
                }
                let c = parse_rat(v).map_err(|e| Error::Parse(format!("line {n}: {e}")))?;
                alg.add_term(i, j, k, c)?;
            }
            Some(tok) => {
                return Err(Error::Parse(format!("line {n}: unknown directive `{tok}`")))
            }
            None => unreachable!(),
        }
    }
    if let Some(g) = grade {
        alg.set_grade(g)?;
    }
    Ok(alg)
}

pub fn write_lieconst(alg: &LieAlgebra) -> String {
    let mut out = String::from("lieconst 1\n");
    out.push_str(&format!("dim {}\n", alg.dim()));
    if let Some(name) = alg.name() {
        out.push_str(&format!("name {name}\n"));
    }
    if let Some(grade) = alg.grade() {
        let g: Vec<String> = grade.iter().map(usize::to_string).collect();
        out.push_str(&format!("grade {}\n", g.join(" ")));
    }
    for (i, j, k, c) in alg.entries() {
        out.push_str(&format!(
            "c {} {} {} {}\n",
            i + 1,
            j + 1,
            k + 1,
            format_rat(c)
        ));
    }
    out
}

fn read_matrix_lines(
    text: &str,
    header: &str,
    keys: &[&str],
) -> Result<(usize, usize, Vec<Matrix>), Error> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, l)) if l == header => {}
        other => {
            return Err(Error::Parse(format!(
                "expected header `{header}`, got {:?}",
                other.map(|(_, l)| l)
            )))
        }
    }
    let (rows, cols) = match lines.next() {
        Some((n, l)) => {
            let rest = l
                .strip_prefix("dim ")
                .ok_or_else(|| Error::Parse(format!("line {n}: expected `dim R [C]`")))?;
            let nums: Result<Vec<usize>, _> =
                rest.split_whitespace().map(str::parse).collect();
            let nums = nums.map_err(|_| Error::Parse(format!("line {n}: bad dim")))?;
            match nums.as_slice() {
                [n1] => (*n1, *n1),
                [r, c] => (*r, *c),
                _ => return Err(Error::Parse(format!("line {n}: bad dim line"))),
            }
        }
        None => return Err(Error::Parse("missing `dim` line".into())),
    };
    let mut mats = vec![Matrix::zeros(rows, cols); keys.len()];
    let mut seen: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
    for (n, l) in lines {
        let mut toks = l.split_whitespace();
        let key = toks.next().unwrap();
        let Some(which) = keys.iter().position(|k| *k == key) else {
            return Err(Error::Parse(format!("line {n}: unknown directive `{key}`")));
        };
        let (i, j, v) = match (toks.next(), toks.next(), toks.next()) {
            (Some(i), Some(j), Some(v)) => (i, j, v),
            _ => {
                return Err(Error::Parse(format!(
                    "line {n}: expected `{key} i j p/q`"
                )))
            }
        };
        if toks.next().is_some() {
            return Err(Error::Parse(format!("line {n}: trailing tokens")));
        }
        let i = parse_index(i, rows, n)?;
        let j = parse_index(j, cols, n)?;
        if !seen.insert((which, i, j)) {
            return Err(Error::Parse(format!(
                "line {n}: duplicate entry {key} {} {}",
                i + 1,
                j + 1
            )));
        }
        let c = parse_rat(v).map_err(|e| Error::Parse(format!("line {n}: {e}")))?;
        mats[which].set(i, j, c);
    }
    Ok((rows, cols, mats))
}

fn write_matrix_lines(out: &mut String, key: &str, m: &Matrix) {
    use num_traits::Zero;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = m.at(i, j);
            if !v.is_zero() {
                out.push_str(&format!("{key} {} {} {}\n", i + 1, j + 1, format_rat(v)));
            }
        }
    }
}

pub fn read_sl2act(text: &str) -> Result<Sl2Action, Error> {
    let (rows, cols, mut mats) = read_matrix_lines(text, "sl2act 1", &["H", "E", "F"])?;
    if rows != cols {
        return Err(Error::Parse("sl2act requires a square dimension".into()));
    }
    let f = mats.pop().unwrap();
    let e = mats.pop().unwrap();
    let h = mats.pop().unwrap();
    Sl2Action::new(h, e, f)
}

pub fn write_sl2act(act: &Sl2Action) -> String {
    let mut out = String::from("sl2act 1\n");
    out.push_str(&format!("dim {}\n", act.dim()));
    write_matrix_lines(&mut out, "H", act.h());
    write_matrix_lines(&mut out, "E", act.e());
    write_matrix_lines(&mut out, "F", act.f());
    out
}

pub fn read_linmap(text: &str) -> Result<Matrix, Error> {
    let (_, _, mut mats) = read_matrix_lines(text, "linmap 1", &["M"])?;
    Ok(mats.pop().unwrap())
}

pub fn write_linmap(m: &Matrix) -> String {
    let mut out = String::from("linmap 1\n");
    if m.rows() == m.cols() {
        out.push_str(&format!("dim {}\n", m.rows()));
    } else {
        out.push_str(&format!("dim {} {}\n", m.rows(), m.cols()));
    }
    write_matrix_lines(&mut out, "M", m);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn lieconst_round_trip_is_byte_identical() {
        for alg in [
            fixtures::heisenberg(2),
            fixtures::dl8(),
            fixtures::glued_l0_h1(),
            fixtures::table2(),
        ] {
            let text = write_lieconst(&alg);
            let back = read_lieconst(&text).unwrap();
            assert!(back.same_structure(&alg));
            assert_eq!(write_lieconst(&back), text);
        }
    }

    #[test]
    fn lieconst_rejects_malformed() {
        let cases = [
            "lieconst 1\ndim 2\nc 2 1 1 1\n",       // i >= j
            "lieconst 1\ndim 2\nc 1 2 3 1\n",       // index out of range
            "lieconst 1\ndim 2\nc 1 2 1 1\nc 1 2 1 2\n", // duplicate
            "lieconst 1\ndim 2\nc 1 2 1 x\n",       // non-rational
            "lieconst 1\ndim 2\nc 1 2 1 1/0\n",     // zero denominator
            "lieconst 2\ndim 2\n",                  // wrong header
            "lieconst 1\nc 1 2 1 1\n",              // missing dim
            "lieconst 1\ndim 2\nq 1 2 1 1\n",       // unknown directive
            "lieconst 1\ndim 2\ngrade 1\n",         // short grade list
        ];
        for c in cases {
            assert!(read_lieconst(c).is_err(), "accepted: {c:?}");
        }
    }

    #[test]
    fn lieconst_accepts_integer_shorthand_and_comments() {
        let text = "# comment\nlieconst 1\ndim 3\nname test\nc 1 2 3 2\n";
        let alg = read_lieconst(text).unwrap();
        assert_eq!(alg.c(0, 1, 2), crate::rat::rat_int(2));
        assert_eq!(alg.name(), Some("test"));
        // canonical output keeps integer shorthand
        assert!(write_lieconst(&alg).contains("c 1 2 3 2\n"));
    }

    #[test]
    fn sl2act_round_trip_and_validation() {
        let act = fixtures::table2_action();
        let text = write_sl2act(&act);
        let back = read_sl2act(&text).unwrap();
        assert_eq!(write_sl2act(&back), text);
        // breaking a ladder entry violates the sl2 relations
        let broken = text.replace("E 1 2 10", "E 1 2 9");
        assert!(read_sl2act(&broken).is_err());
    }

    #[test]
    fn linmap_round_trip_rect() {
        let m = Matrix::from_i64(vec![vec![1, 0, 2], vec![0, -1, 0]]);
        let text = write_linmap(&m);
        assert!(text.starts_with("linmap 1\ndim 2 3\n"));
        assert_eq!(read_linmap(&text).unwrap(), m);
    }
}
