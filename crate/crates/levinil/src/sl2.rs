//! sl2 actions by explicit rational matrices: standard irreducibles,
//! tensor/wedge constructions, weight spaces, highest-weight decomposition
//! and the Clebsch-Gordan oracle.

use num_traits::{Signed, Zero};

use crate::lie::LieAlgebra;
use crate::mat::{unit_vec, vec_is_zero, Matrix};
use crate::rat::{rat_int, zero, Rat};
use crate::subspace::Subspace;
use crate::Error;

/// A triple of matrices satisfying `[H,E] = 2E`, `[H,F] = -2F`,
/// `[E,F] = H` (checked at construction).
#[derive(Clone, PartialEq, Eq)]
pub struct Sl2Action {
    dim: usize,
    h: Matrix,
    e: Matrix,
    f: Matrix,
}

impl std::fmt::Debug for Sl2Action {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Sl2Action(dim {})", self.dim)
    }
}

/// Decomposition into irreducibles: for each highest weight `n` (listed
/// descending) the multiplicity and the canonical (RREF) basis of the
/// highest-weight space.
#[derive(Clone, Debug)]
pub struct Sl2Decomposition {
    pub summands: Vec<(usize, usize, Subspace)>,
    pub dim: usize,
}

impl Sl2Decomposition {
    /// All weights with multiplicity, descending: `V(2)+2V(1)` gives
    /// `[2, 1, 1]`.
    pub fn weights(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (n, mult, _) in &self.summands {
            out.extend(std::iter::repeat_n(*n, *mult));
        }
        out
    }

    pub fn multiplicity(&self, n: usize) -> usize {
        self.summands
            .iter()
            .find(|(w, _, _)| *w == n)
            .map_or(0, |(_, m, _)| *m)
    }

    pub fn hw_space(&self, n: usize) -> Option<&Subspace> {
        self.summands
            .iter()
            .find(|(w, _, _)| *w == n)
            .map(|(_, _, s)| s)
    }
}

/// `V(m) ⊗ V(n) = ⊕ V(m + n - 2i)`, weights descending.
pub fn clebsch_gordan(m: usize, n: usize) -> Vec<usize> {
    (0..=m.min(n)).map(|i| m + n - 2 * i).collect()
}

/// Highest weights of `Λ² V(n)`: `{2n - 2 - 4i : i >= 0}` down to 0.
pub fn wedge2_weights(n: usize) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut w = 2 * n - 2;
    loop {
        out.push(w);
        if w < 4 {
            break;
        }
        w -= 4;
    }
    out
}

impl Sl2Action {
    pub fn new(h: Matrix, e: Matrix, f: Matrix) -> Result<Self, Error> {
        let dim = h.rows();
        for (name, m) in [("H", &h), ("E", &e), ("F", &f)] {
            if !m.is_square() || m.rows() != dim {
                return Err(Error::Dimension(format!(
                    "sl2 action: {name} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let he = h.commutator(&e).sub(&e.scale(&rat_int(2)));
        let hf = h.commutator(&f).add(&f.scale(&rat_int(2)));
        let ef = e.commutator(&f).sub(&h);
        if !he.is_zero() || !hf.is_zero() || !ef.is_zero() {
            return Err(Error::NotAnSl2Action);
        }
        Ok(Sl2Action { dim, h, e, f })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn h(&self) -> &Matrix {
        &self.h
    }

    pub fn e(&self) -> &Matrix {
        &self.e
    }

    pub fn f(&self) -> &Matrix {
        &self.f
    }

    pub fn matrices(&self) -> [(&'static str, &Matrix); 3] {
        [("H", &self.h), ("E", &self.e), ("F", &self.f)]
    }

    /// The trivial action on a space of the given dimension.
    pub fn trivial(dim: usize) -> Self {
        Sl2Action {
            dim,
            h: Matrix::zeros(dim, dim),
            e: Matrix::zeros(dim, dim),
            f: Matrix::zeros(dim, dim),
        }
    }

    /// The irreducible `(n+1)`-dimensional action on the standard basis
    /// `a_0..a_n`:
    /// `h a_i = (n-2i) a_i`, `e a_i = (n-i+1) a_{i-1}`, `f a_i = (i+1) a_{i+1}`.
    pub fn irreducible(n: usize) -> Self {
        let dim = n + 1;
        let mut h = Matrix::zeros(dim, dim);
        let mut e = Matrix::zeros(dim, dim);
        let mut f = Matrix::zeros(dim, dim);
        for i in 0..dim {
            h.set(i, i, rat_int(n as i64 - 2 * i as i64));
            if i > 0 {
                e.set(i - 1, i, rat_int((n - i + 1) as i64));
            }
            if i < n {
                f.set(i + 1, i, rat_int((i + 1) as i64));
            }
        }
        Sl2Action::new(h, e, f).expect("standard irreducible satisfies the relations")
    }

    /// Block-diagonal sum of actions.
    pub fn direct_sum(parts: &[Sl2Action]) -> Self {
        let dim: usize = parts.iter().map(Sl2Action::dim).sum();
        let mut h = Matrix::zeros(dim, dim);
        let mut e = Matrix::zeros(dim, dim);
        let mut f = Matrix::zeros(dim, dim);
        let mut off = 0;
        for p in parts {
            for i in 0..p.dim {
                for j in 0..p.dim {
                    for (src, dst) in [(&p.h, &mut h), (&p.e, &mut e), (&p.f, &mut f)] {
                        let v = src.at(i, j);
                        if !v.is_zero() {
                            dst.set(off + i, off + j, v.clone());
                        }
                    }
                }
            }
            off += p.dim;
        }
        Sl2Action { dim, h, e, f }
    }

    fn leibniz_pairs(
        a: &Sl2Action,
        b: &Sl2Action,
        m: impl Fn(&Sl2Action) -> Matrix,
    ) -> Matrix {
        // action on a ⊗ b: m(a) ⊗ I + I ⊗ m(b), basis lexicographic pairs
        let (da, db) = (a.dim, b.dim);
        let mut out = Matrix::zeros(da * db, da * db);
        let ma = m(a);
        let mb = m(b);
        for i in 0..da {
            for j in 0..db {
                let col = i * db + j;
                for r in 0..da {
                    let v = ma.at(r, i);
                    if !v.is_zero() {
                        out.set(r * db + j, col, v.clone());
                    }
                }
                for r in 0..db {
                    let v = mb.at(r, j);
                    if !v.is_zero() {
                        let cur = out.at(i * db + r, col).clone();
                        out.set(i * db + r, col, cur + v.clone());
                    }
                }
            }
        }
        out
    }

    /// Tensor product action, basis = lexicographic pairs.
    pub fn tensor(a: &Sl2Action, b: &Sl2Action) -> Self {
        Sl2Action {
            dim: a.dim * b.dim,
            h: Self::leibniz_pairs(a, b, |x| x.h.clone()),
            e: Self::leibniz_pairs(a, b, |x| x.e.clone()),
            f: Self::leibniz_pairs(a, b, |x| x.f.clone()),
        }
    }

    /// Exterior square, basis = index-increasing pairs `(i, j)` with `i < j`.
    pub fn wedge2(a: &Sl2Action) -> Self {
        let n = a.dim;
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
        let index = |i: usize, j: usize| -> (usize, bool) {
            // returns (pair index, negate)
            if i < j {
                (pairs.iter().position(|&p| p == (i, j)).unwrap(), false)
            } else {
                (pairs.iter().position(|&p| p == (j, i)).unwrap(), true)
            }
        };
        let build = |m: &Matrix| {
            let mut out = Matrix::zeros(pairs.len(), pairs.len());
            for (col, &(i, j)) in pairs.iter().enumerate() {
                // m(e_i) ∧ e_j + e_i ∧ m(e_j)
                for r in 0..n {
                    let v = m.at(r, i);
                    if !v.is_zero() && r != j {
                        let (idx, neg) = index(r, j);
                        let add = if neg { -v.clone() } else { v.clone() };
                        let cur = out.at(idx, col).clone();
                        out.set(idx, col, cur + add);
                    }
                    let v = m.at(r, j);
                    if !v.is_zero() && i != r {
                        let (idx, neg) = index(i, r);
                        let add = if neg { -v.clone() } else { v.clone() };
                        let cur = out.at(idx, col).clone();
                        out.set(idx, col, cur + add);
                    }
                }
            }
            out
        };
        Sl2Action {
            dim: pairs.len(),
            h: build(&a.h),
            e: build(&a.e),
            f: build(&a.f),
        }
    }

    /// Exterior cube, basis = index-increasing triples.
    pub fn wedge3(a: &Sl2Action) -> Self {
        let n = a.dim;
        let mut triples = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    triples.push((i, j, k));
                }
            }
        }
        let index = |mut t: [usize; 3]| -> Option<(usize, bool)> {
            // sort with sign; None when two indices coincide
            let mut neg = false;
            for a in 0..3 {
                for b in (a + 1)..3 {
                    if t[a] == t[b] {
                        return None;
                    }
                    if t[a] > t[b] {
                        t.swap(a, b);
                        neg = !neg;
                    }
                }
            }
            let idx = triples
                .iter()
                .position(|&p| p == (t[0], t[1], t[2]))
                .unwrap();
            Some((idx, neg))
        };
        let build = |m: &Matrix| {
            let mut out = Matrix::zeros(triples.len(), triples.len());
            for (col, &(i, j, k)) in triples.iter().enumerate() {
                for &(slot, orig) in [(0usize, i), (1, j), (2, k)].iter() {
                    for r in 0..n {
                        let v = m.at(r, orig);
                        if v.is_zero() {
                            continue;
                        }
                        let mut t = [i, j, k];
                        t[slot] = r;
                        if let Some((idx, neg)) = index(t) {
                            let add = if neg { -v.clone() } else { v.clone() };
                            let cur = out.at(idx, col).clone();
                            out.set(idx, col, cur + add);
                        }
                    }
                }
            }
            out
        };
        Sl2Action {
            dim: triples.len(),
            h: build(&a.h),
            e: build(&a.e),
            f: build(&a.f),
        }
    }

    /// Is `s` invariant under all three operators?
    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim
            && [&self.h, &self.e, &self.f].iter().all(|m| {
                s.basis_rows().all(|r| s.contains_vec(&m.apply(r)))
            })
    }

    /// Restriction to an invariant subspace (in its canonical basis).
    pub fn restrict(&self, s: &Subspace) -> Result<Sl2Action, Error> {
        if !self.is_submodule(s) {
            return Err(Error::NotInvariant);
        }
        let restrict_one = |m: &Matrix| -> Matrix {
            let rows: Vec<Vec<Rat>> = s
                .basis_rows()
                .map(|r| s.coords(&m.apply(r)).expect("invariance checked"))
                .collect();
            if rows.is_empty() {
                Matrix::zeros(0, 0)
            } else {
                // rows are images of basis vectors: transpose to a matrix
                Matrix::from_rows(rows).transpose()
            }
        };
        Ok(Sl2Action {
            dim: s.dim(),
            h: restrict_one(&self.h),
            e: restrict_one(&self.e),
            f: restrict_one(&self.f),
        })
    }

    /// Quotient action on the canonical complement coordinates.
    pub fn quotient(&self, s: &Subspace) -> Result<Sl2Action, Error> {
        if !self.is_submodule(s) {
            return Err(Error::NotInvariant);
        }
        let n = self.dim;
        let q_cols: Vec<usize> = (0..n).filter(|c| !s.pivots().contains(c)).collect();
        let qdim = q_cols.len();
        let quotient_one = |m: &Matrix| -> Matrix {
            let mut out = Matrix::zeros(qdim, qdim);
            for (col, &c) in q_cols.iter().enumerate() {
                let img = s.reduce(&m.apply(&unit_vec(n, c)));
                for (r, &rc) in q_cols.iter().enumerate() {
                    if !img[rc].is_zero() {
                        out.set(r, col, img[rc].clone());
                    }
                }
            }
            out
        };
        Ok(Sl2Action {
            dim: qdim,
            h: quotient_one(&self.h),
            e: quotient_one(&self.e),
            f: quotient_one(&self.f),
        })
    }

    /// The diagonal of `H` when `H` is a diagonal matrix (the common case
    /// for constructor-built actions; weight spaces become coordinate
    /// subspaces).
    fn h_diagonal(&self) -> Option<Vec<Rat>> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j && !self.h.at(i, j).is_zero() {
                    return None;
                }
            }
        }
        Some((0..self.dim).map(|i| self.h.at(i, i).clone()).collect())
    }

    /// `ker(H - m I)` as a subspace.
    pub fn weight_space(&self, m: i64) -> Subspace {
        if let Some(diag) = self.h_diagonal() {
            let target = rat_int(m);
            let rows: Vec<Vec<Rat>> = (0..self.dim)
                .filter(|&i| diag[i] == target)
                .map(|i| unit_vec(self.dim, i))
                .collect();
            return Subspace::from_rows(self.dim, rows);
        }
        let shifted = self.h.sub(&Matrix::identity(self.dim).scale(&rat_int(m)));
        Subspace::kernel_of(&shifted)
    }

    /// Canonical highest-weight space of weight `n`:
    /// `ker E ∩ ker(H - n I)`, RREF basis.
    pub fn hw_space(&self, n: usize) -> Subspace {
        if let Some(diag) = self.h_diagonal() {
            // restrict E to the weight-n coordinates and take its kernel
            let target = rat_int(n as i64);
            let cols: Vec<usize> =
                (0..self.dim).filter(|&i| diag[i] == target).collect();
            if cols.is_empty() {
                return Subspace::zero(self.dim);
            }
            let restricted =
                Matrix::from_fn(self.dim, cols.len(), |i, j| self.e.at(i, cols[j]).clone());
            let kernel = restricted.kernel_basis();
            let rows: Vec<Vec<Rat>> = (0..kernel.rows())
                .map(|r| {
                    let mut v = vec![zero(); self.dim];
                    for (j, &c) in cols.iter().enumerate() {
                        if !kernel.at(r, j).is_zero() {
                            v[c] = kernel.at(r, j).clone();
                        }
                    }
                    v
                })
                .collect();
            return Subspace::from_rows(self.dim, rows);
        }
        let shifted = self
            .h
            .sub(&Matrix::identity(self.dim).scale(&rat_int(n as i64)));
        let mut rows = Vec::with_capacity(2 * self.dim);
        for i in 0..self.dim {
            rows.push(shifted.row_vec(i));
        }
        for i in 0..self.dim {
            rows.push(self.e.row_vec(i));
        }
        Subspace::kernel_of(&Matrix::from_rows(rows))
    }

    /// Integer eigenvalue candidates for `H` from Gershgorin intervals.
    fn weight_candidates(&self) -> Vec<i64> {
        use std::collections::BTreeSet;
        let mut cands = BTreeSet::new();
        for i in 0..self.dim {
            let center = self.h.at(i, i).clone();
            let mut radius = zero();
            for j in 0..self.dim {
                if j != i {
                    radius += self.h.at(i, j).abs();
                }
            }
            let lo = &center - &radius;
            let hi = &center + &radius;
            for m in crate::rat::integer_range(&lo, &hi) {
                cands.insert(m);
            }
        }
        cands.into_iter().collect()
    }

    /// Full decomposition into irreducibles. Errors when `H` is not
    /// diagonalizable with integer eigenvalues (this module only produces
    /// algebraic actions, so that is a usage error).
    pub fn decompose(&self) -> Result<Sl2Decomposition, Error> {
        if self.dim == 0 {
            return Ok(Sl2Decomposition {
                summands: Vec::new(),
                dim: 0,
            });
        }
        let mut total = 0;
        let mut weights: Vec<(i64, usize)> = Vec::new();
        if let Some(diag) = self.h_diagonal() {
            let mut counts: std::collections::BTreeMap<i64, usize> =
                std::collections::BTreeMap::new();
            for d in &diag {
                let int = crate::rat::to_integer(d)
                    .ok_or(Error::NotAnAlgebraicSl2Action)?;
                use num_traits::ToPrimitive;
                let m = int.to_i64().ok_or(Error::NotAnAlgebraicSl2Action)?;
                *counts.entry(m).or_insert(0) += 1;
            }
            for (m, c) in counts {
                total += c;
                weights.push((m, c));
            }
        } else {
            for m in self.weight_candidates() {
                let ws = self.weight_space(m);
                if ws.dim() > 0 {
                    total += ws.dim();
                    weights.push((m, ws.dim()));
                }
            }
        }
        if total != self.dim {
            return Err(Error::NotAnAlgebraicSl2Action);
        }
        let mut summands = Vec::new();
        let mut accounted = 0;
        for &(m, _) in weights.iter().rev() {
            if m < 0 {
                continue;
            }
            let hw = self.hw_space(m as usize);
            if hw.dim() > 0 {
                accounted += hw.dim() * (m as usize + 1);
                summands.push((m as usize, hw.dim(), hw));
            }
        }
        if accounted != self.dim {
            return Err(Error::NotAnAlgebraicSl2Action);
        }
        Ok(Sl2Decomposition {
            summands,
            dim: self.dim,
        })
    }

    /// Smallest invariant subspace containing the given vectors.
    pub fn submodule_generated(&self, vectors: &[Vec<Rat>]) -> Subspace {
        let mut span = Subspace::from_rows(self.dim, vectors.to_vec());
        loop {
            let mut rows: Vec<Vec<Rat>> = span.basis_rows().map(<[Rat]>::to_vec).collect();
            let before = span.dim();
            for m in [&self.h, &self.e, &self.f] {
                for r in span.basis_rows() {
                    let img = m.apply(r);
                    if !vec_is_zero(&img) {
                        rows.push(img);
                    }
                }
            }
            span = Subspace::from_rows(self.dim, rows);
            if span.dim() == before {
                return span;
            }
        }
    }

    /// An invariant complement of the invariant subspace `w` inside the
    /// invariant subspace `u` (complete reducibility realized by lifting
    /// highest-weight vectors of the quotient).
    pub fn invariant_complement(&self, w: &Subspace, u: &Subspace) -> Result<Subspace, Error> {
        if !u.contains(w) {
            return Err(Error::NotASubspace);
        }
        let restricted = self.restrict(u)?;
        let w_in_u = Subspace::from_rows(
            u.dim(),
            w.basis_rows()
                .map(|r| u.coords(r).expect("w inside u"))
                .collect(),
        );
        let mut parts: Vec<Vec<Rat>> = Vec::new();
        let dec = restricted.decompose()?;
        for (n, _, hw_u) in &dec.summands {
            // lift: the part of the HW space transverse to w
            let hw_in_w = hw_u.intersect(&w_in_u)?;
            let lift = hw_in_w.complement_within(hw_u)?;
            for v in lift.basis_rows() {
                // generate span{v, Fv, ..., F^n v}
                let mut cur = v.to_vec();
                parts.push(cur.clone());
                for _ in 0..*n {
                    cur = restricted.f.apply(&cur);
                    parts.push(cur.clone());
                }
            }
        }
        let comp_in_u = Subspace::from_rows(u.dim(), parts);
        // sanity: direct sum with w inside u
        if comp_in_u.dim() + w.dim() != u.dim()
            || !comp_in_u.intersect(&w_in_u)?.is_zero()
        {
            return Err(Error::NotInvariant);
        }
        let rows: Vec<Vec<Rat>> = comp_in_u.basis_rows().map(|r| u.from_coords(r)).collect();
        let out = Subspace::from_rows(self.dim, rows);
        debug_assert!(self.is_submodule(&out));
        Ok(out)
    }
}

/// One equivariance failure: operator `sym` applied to the bracket of basis
/// pair `(i, j)` does not satisfy the Leibniz rule.
#[derive(Clone, Debug)]
pub struct EquivarianceViolation {
    pub sym: &'static str,
    pub i: usize,
    pub j: usize,
    pub residual: Vec<Rat>,
}

/// Check that H, E, F are derivations of `alg`'s bracket; equivalently the
/// bracket is an sl2-module map.
pub fn equivariance_violations(
    act: &Sl2Action,
    alg: &LieAlgebra,
) -> Result<Vec<EquivarianceViolation>, Error> {
    if act.dim() != alg.dim() {
        return Err(Error::Dimension(format!(
            "action dim {} != algebra dim {}",
            act.dim(),
            alg.dim()
        )));
    }
    let mut out = Vec::new();
    for (sym, m) in act.matrices() {
        for (i, j, residual) in alg.derivation_residuals(m) {
            out.push(EquivarianceViolation {
                sym,
                i,
                j,
                residual,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::mat::vec_add;

    #[test]
    fn irreducible_matches_ladder_formulas() {
        let v0 = Sl2Action::irreducible(0);
        assert!(v0.h().is_zero() && v0.e().is_zero() && v0.f().is_zero());

        let v1 = Sl2Action::irreducible(1);
        assert_eq!(v1.h(), &Matrix::from_i64(vec![vec![1, 0], vec![0, -1]]));
        // e a_1 = a_0, f a_0 = a_1
        assert_eq!(v1.e().apply(&unit_vec(2, 1)), unit_vec(2, 0));
        assert_eq!(v1.f().apply(&unit_vec(2, 0)), unit_vec(2, 1));

        let v2 = Sl2Action::irreducible(2);
        assert_eq!(
            v2.h(),
            &Matrix::from_i64(vec![vec![2, 0, 0], vec![0, 0, 0], vec![0, 0, -2]])
        );
        // e a_1 = 2 a_0, e a_2 = a_1
        assert_eq!(
            v2.e().apply(&unit_vec(3, 1)),
            crate::mat::vec_scale(&rat_int(2), &unit_vec(3, 0))
        );
        assert_eq!(v2.e().apply(&unit_vec(3, 2)), unit_vec(3, 1));
    }

    #[test]
    fn clebsch_gordan_oracle() {
        assert_eq!(clebsch_gordan(1, 1), vec![2, 0]);
        assert_eq!(clebsch_gordan(5, 0), vec![5]);
        assert_eq!(clebsch_gordan(2, 3), vec![5, 3, 1]);
        assert_eq!(wedge2_weights(10), vec![18, 14, 10, 6, 2]);
        assert_eq!(wedge2_weights(1), vec![0]);
        assert!(wedge2_weights(0).is_empty());
    }

    #[test]
    fn wedge2_weights_against_brute_force_pair_count() {
        // character count: number of wedge pairs with each H-weight must
        // match the multiset of weights of ⊕ V(w) over the oracle's list
        for n in 1..=10usize {
            let mut from_pairs = std::collections::BTreeMap::new();
            for i in 0..=n {
                for j in (i + 1)..=n {
                    let w = (n as i64 - 2 * i as i64) + (n as i64 - 2 * j as i64);
                    *from_pairs.entry(w).or_insert(0usize) += 1;
                }
            }
            let mut from_oracle = std::collections::BTreeMap::new();
            for hw in wedge2_weights(n) {
                let mut w = hw as i64;
                loop {
                    *from_oracle.entry(w).or_insert(0usize) += 1;
                    if w <= -(hw as i64) {
                        break;
                    }
                    w -= 2;
                }
            }
            assert_eq!(from_pairs, from_oracle, "n = {n}");
        }
    }

    #[test]
    fn decompose_tensor_v1_v1() {
        let v1 = Sl2Action::irreducible(1);
        let t = Sl2Action::tensor(&v1, &v1);
        let dec = t.decompose().unwrap();
        assert_eq!(dec.weights(), vec![2, 0]);
    }

    #[test]
    fn decompose_irreducible_is_itself() {
        for n in [0, 1, 4, 7] {
            let dec = Sl2Action::irreducible(n).decompose().unwrap();
            assert_eq!(dec.weights(), vec![n]);
        }
    }

    #[test]
    fn decompose_agrees_with_clebsch_gordan() {
        for m in 0..=8 {
            for n in 0..=8 {
                let t = Sl2Action::tensor(
                    &Sl2Action::irreducible(m),
                    &Sl2Action::irreducible(n),
                );
                assert_eq!(
                    t.decompose().unwrap().weights(),
                    clebsch_gordan(m, n),
                    "V({m}) ⊗ V({n})"
                );
            }
        }
    }

    #[test]
    fn tensor_square_splits_into_wedge_and_sym() {
        // character bookkeeping: weights(V⊗V) = weights(Λ²V) ⊎ weights(S²V)
        for n in 1..=6usize {
            let a = Sl2Action::irreducible(n);
            let tensor = Sl2Action::tensor(&a, &a).decompose().unwrap().weights();
            let wedge = Sl2Action::wedge2(&a).decompose().unwrap().weights();
            // S²V(n) carries the complementary highest weights 2n, 2n-4, ...
            let mut sym = Vec::new();
            let mut w = 2 * n as i64;
            while w >= 0 {
                sym.push(w as usize);
                w -= 4;
            }
            let mut combined = [wedge.clone(), sym.clone()].concat();
            combined.sort_unstable_by(|a, b| b.cmp(a));
            let mut expected = tensor.clone();
            expected.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(combined, expected, "n = {n}");
            let dim_sum: usize = wedge.iter().map(|w| w + 1).sum::<usize>()
                + sym.iter().map(|w| w + 1).sum::<usize>();
            assert_eq!(dim_sum, (n + 1) * (n + 1));
        }
    }

    #[test]
    fn restrict_rejects_non_invariant_subspace() {
        let a = Sl2Action::irreducible(2);
        let line = Subspace::from_rows(3, vec![unit_vec(3, 0)]);
        assert!(matches!(a.restrict(&line), Err(Error::NotInvariant)));
        assert!(matches!(a.quotient(&line), Err(Error::NotInvariant)));
    }

    #[test]
    fn wedge2_of_v1_is_trivial() {
        let w = Sl2Action::wedge2(&Sl2Action::irreducible(1));
        assert_eq!(w.dim(), 1);
        assert_eq!(w.decompose().unwrap().weights(), vec![0]);
    }

    #[test]
    fn wedge3_of_v1_is_zero_dimensional() {
        let w = Sl2Action::wedge3(&Sl2Action::irreducible(1));
        assert_eq!(w.dim(), 0);
    }

    #[test]
    fn wedge2_of_v10_matches_oracle() {
        let w = Sl2Action::wedge2(&Sl2Action::irreducible(10));
        assert_eq!(w.dim(), 55);
        assert_eq!(w.decompose().unwrap().weights(), wedge2_weights(10));
    }

    #[test]
    fn tensor_with_trivial_preserves_weights() {
        let a = Sl2Action::irreducible(3);
        let t = Sl2Action::tensor(&Sl2Action::irreducible(0), &a);
        assert_eq!(t.decompose().unwrap().weights(), vec![3]);
    }

    #[test]
    fn hw_vectors_are_killed_by_e_and_powers_of_f() {
        let t = Sl2Action::tensor(
            &Sl2Action::irreducible(2),
            &Sl2Action::irreducible(2),
        );
        let dec = t.decompose().unwrap();
        let mut total = 0;
        for (n, mult, hw) in &dec.summands {
            assert_eq!(hw.dim(), *mult);
            total += mult * (n + 1);
            for v in hw.basis_rows() {
                assert!(vec_is_zero(&t.e().apply(v)));
                assert_eq!(t.h().apply(v), crate::mat::vec_scale(&rat_int(*n as i64), v));
                let mut cur = v.to_vec();
                for _ in 0..=*n {
                    cur = t.f().apply(&cur);
                }
                assert!(vec_is_zero(&cur), "F^{} should kill V({n}) HW vector", n + 1);
            }
        }
        assert_eq!(total, t.dim());
    }

    #[test]
    fn restrict_quotient_partition_weights() {
        // V(1) ⊕ V(1) with the diagonal submodule
        let a = Sl2Action::direct_sum(&[
            Sl2Action::irreducible(1),
            Sl2Action::irreducible(1),
        ]);
        let diag = a.submodule_generated(&[vec_add(
            &unit_vec(4, 0),
            &unit_vec(4, 2),
        )]);
        assert_eq!(diag.dim(), 2);
        let sub = a.restrict(&diag).unwrap().decompose().unwrap().weights();
        let quo = a.quotient(&diag).unwrap().decompose().unwrap().weights();
        let mut all = [sub, quo].concat();
        all.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(all, a.decompose().unwrap().weights());
    }

    #[test]
    fn submodule_generated_edge_cases() {
        let v3 = Sl2Action::irreducible(3);
        // HW vector generates everything
        let full = v3.submodule_generated(&[unit_vec(4, 0)]);
        assert_eq!(full, Subspace::full(4));
        // zero vector generates nothing
        let z = v3.submodule_generated(&[vec![zero(); 4]]);
        assert!(z.is_zero());
    }

    #[test]
    fn equivariance_of_trivial_action() {
        let l = fixtures::dl8();
        let v = equivariance_violations(&Sl2Action::trivial(8), &l).unwrap();
        assert!(v.is_empty());
    }

    #[test]
    fn invariant_complement_splits_modules() {
        let a = Sl2Action::direct_sum(&[
            Sl2Action::irreducible(2),
            Sl2Action::irreducible(0),
            Sl2Action::irreducible(2),
        ]);
        // w = the diagonal V(2) copy
        let w = a.submodule_generated(&[vec_add(&unit_vec(7, 0), &unit_vec(7, 4))]);
        let c = a.invariant_complement(&w, &Subspace::full(7)).unwrap();
        assert_eq!(c.dim(), 4);
        assert!(a.is_submodule(&c));
        assert!(w.intersect(&c).unwrap().is_zero());
    }
}
