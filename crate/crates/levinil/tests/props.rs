//! Property tests for the exact linear algebra substrate and the file
//! formats.

use proptest::prelude::*;

use levinil::mat::Matrix;
use levinil::rat::{rat, Rat};
use levinil::subspace::Subspace;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(arb_rat(), r * c)
            .prop_map(move |data| Matrix::from_flat(r, c, data))
    })
}

proptest! {
    #[test]
    fn rank_nullity(m in arb_matrix(5, 6)) {
        let rank = m.rank();
        let kernel = m.kernel_basis();
        prop_assert_eq!(rank + kernel.rows(), m.cols());
        // every kernel row really is killed
        for i in 0..kernel.rows() {
            let img = m.apply(kernel.row(i));
            prop_assert!(img.iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn rref_is_idempotent(m in arb_matrix(5, 6)) {
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn grassmann_identity(a in arb_matrix(3, 5), b in arb_matrix(3, 5)) {
        // pad to a common ambient dimension
        let n = 5;
        let widen = |m: &Matrix| {
            Matrix::from_fn(m.rows(), n, |i, j| {
                if j < m.cols() { m.at(i, j).clone() } else { levinil::rat::zero() }
            })
        };
        let a = Subspace::from_matrix(widen(&a));
        let b = Subspace::from_matrix(widen(&b));
        let sum = a.sum(&b).unwrap();
        let inter = a.intersect(&b).unwrap();
        prop_assert_eq!(a.dim() + b.dim(), sum.dim() + inter.dim());
        prop_assert!(sum.contains(&a) && sum.contains(&b));
        prop_assert!(a.contains(&inter) && b.contains(&inter));
    }

    #[test]
    fn subspace_equality_is_spanning_set_independent(
        m in arb_matrix(3, 4),
        coeffs in proptest::collection::vec((-3i64..=3, -3i64..=3), 3),
    ) {
        // second spanning set: original rows plus random combinations
        let s1 = Subspace::from_matrix(m.clone());
        let mut rows: Vec<Vec<Rat>> = (0..m.rows()).map(|i| m.row_vec(i)).collect();
        for (c1, c2) in coeffs {
            let i = 0;
            let j = m.rows() - 1;
            let combo: Vec<Rat> = (0..m.cols())
                .map(|c| {
                    levinil::rat::rat_int(c1) * m.at(i, c) + levinil::rat::rat_int(c2) * m.at(j, c)
                })
                .collect();
            rows.push(combo);
        }
        let s2 = Subspace::from_rows(m.cols(), rows);
        prop_assert_eq!(s1, s2);
    }

    #[test]
    fn solve_finds_consistent_solutions(m in arb_matrix(4, 4), xs in proptest::collection::vec(arb_rat(), 4)) {
        // build rhs from a known solution, then solve
        let x = &xs[..m.cols()];
        let rhs = m.apply(x);
        let sol = m.solve(&rhs).unwrap();
        prop_assert!(sol.is_some());
        let sol = sol.unwrap();
        prop_assert_eq!(m.apply(&sol), rhs);
    }

    #[test]
    fn lieconst_round_trip(entries in proptest::collection::vec(
        (0usize..4, 0usize..4, 0usize..4, -5i64..=5, 1i64..=3), 0..10))
    {
        // random sparse antisymmetric tables (not necessarily Jacobi) must
        // survive write/read byte-identically
        let mut alg = levinil::lie::LieAlgebra::abelian(4);
        for (i, j, k, p, q) in entries {
            if i != j {
                alg.add_term(i, j, k, rat(p, q)).unwrap();
            }
        }
        let text = levinil::files::write_lieconst(&alg);
        let back = levinil::files::read_lieconst(&text).unwrap();
        prop_assert!(back.same_structure(&alg));
        prop_assert_eq!(levinil::files::write_lieconst(&back), text);
    }

    #[test]
    fn complement_within_is_a_direct_summand(m in arb_matrix(3, 5)) {
        let n = 5;
        let widened = Matrix::from_fn(m.rows(), n, |i, j| {
            if j < m.cols() { m.at(i, j).clone() } else { levinil::rat::zero() }
        });
        let a = Subspace::from_matrix(widened);
        let full = Subspace::full(n);
        let c = a.complement_within(&full).unwrap();
        prop_assert_eq!(a.dim() + c.dim(), n);
        prop_assert!(a.intersect(&c).unwrap().is_zero());
        prop_assert_eq!(a.sum(&c).unwrap(), full);
    }
}
