//! Independent character-count oracles for the module structure of free
//! nilpotent algebras under extended sl2 actions.
//!
//! The oracles work purely with H-eigenvalue multiplicities of monomial
//! bases (no kernels, no matrices) and greedy peeling, so they share no
//! code path with `Sl2Action::decompose`.

use std::collections::BTreeMap;

use levinil::freenil::free_nilpotent;
use levinil::sl2::{clebsch_gordan, wedge2_weights, Sl2Action};

/// Greedy peeling: recover the highest weights of a completely reducible
/// module from its H-weight multiset.
fn peel(mut weights: BTreeMap<i64, usize>) -> Vec<usize> {
    let mut out = Vec::new();
    loop {
        weights.retain(|_, m| *m > 0);
        let Some((&top, _)) = weights.iter().next_back() else {
            return out;
        };
        assert!(top >= 0, "weight multiset is not symmetric");
        out.push(top as usize);
        let mut w = top;
        loop {
            let m = weights.get_mut(&w).expect("chain present");
            assert!(*m > 0, "chain multiplicity exhausted at {w}");
            *m -= 1;
            if w <= -top {
                break;
            }
            w -= 2;
        }
    }
}

/// H-weights of the wedge cube of the irreducible V(n), by brute force
/// over index triples.
fn wedge3_weight_multiset(n: usize) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for i in 0..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                let w = (n as i64 - 2 * i as i64)
                    + (n as i64 - 2 * j as i64)
                    + (n as i64 - 2 * k as i64);
                *out.entry(w).or_insert(0) += 1;
            }
        }
    }
    out
}

fn chain(weights: &mut BTreeMap<i64, usize>, top: usize, sign: i64) {
    let mut w = top as i64;
    loop {
        let e = weights.entry(w).or_insert(0);
        *e = (*e as i64 + sign) as usize;
        if w <= -(top as i64) {
            break;
        }
        w -= 2;
    }
}

/// The degree-3 block of the free 3-nilpotent algebra on V(n) is
/// (V(n) ⊗ Λ²V(n)) / Λ³V(n): its highest weights, via pure character
/// arithmetic.
fn degree3_weights_oracle(n: usize) -> Vec<usize> {
    let mut weights: BTreeMap<i64, usize> = BTreeMap::new();
    for w2 in wedge2_weights(n) {
        for cg in clebsch_gordan(n, w2) {
            chain(&mut weights, cg, 1);
        }
    }
    for top in peel(wedge3_weight_multiset(n)) {
        chain(&mut weights, top, -1);
    }
    let mut out = peel(weights);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[test]
fn peeling_recovers_known_decompositions() {
    // V(1) ⊗ V(1): weights {2,0,0,-2} -> [2, 0]
    let mut w = BTreeMap::new();
    for (a, b) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
        *w.entry(a + b).or_insert(0) += 1;
    }
    assert_eq!(peel(w), vec![2, 0]);
    // Λ³V(10) against the dimension count C(11,3)
    let total: usize = wedge3_weight_multiset(10).values().sum();
    assert_eq!(total, 165);
    let dims: usize = peel(wedge3_weight_multiset(10))
        .iter()
        .map(|t| t + 1)
        .sum();
    assert_eq!(dims, 165);
}

#[test]
fn small_free_algebra_degree3_matches_oracle() {
    // d = 3, generators V(2): decompose through matrices and compare
    let f = free_nilpotent(3, 3).unwrap();
    let ext = f.extend_sl2(&Sl2Action::irreducible(2)).unwrap();
    let act3 = ext.restrict(&f.degree_subspace(3)).unwrap();
    let mut computed = act3.decompose().unwrap().weights();
    computed.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(computed, degree3_weights_oracle(2));
}

#[test]
fn big_free_algebra_blocks_match_oracle() {
    // the full 506-dimensional algebra on V(10)
    let f = free_nilpotent(11, 3).unwrap();
    let ext = f.extend_sl2(&Sl2Action::irreducible(10)).unwrap();

    // the extended operators really are derivations of the big algebra
    for m in [ext.h(), ext.e(), ext.f()] {
        assert!(f.algebra.is_derivation(m));
    }

    let act2 = ext.restrict(&f.degree_subspace(2)).unwrap();
    let mut w2 = act2.decompose().unwrap().weights();
    w2.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(w2, wedge2_weights(10));

    let act3 = ext.restrict(&f.degree_subspace(3)).unwrap();
    let mut w3 = act3.decompose().unwrap().weights();
    w3.sort_unstable_by(|a, b| b.cmp(a));
    let oracle = degree3_weights_oracle(10);
    assert_eq!(w3, oracle, "degree-3 block of the 506-dim algebra");
    let dim3: usize = oracle.iter().map(|t| t + 1).sum();
    assert_eq!(dim3, 440);
}
