//! Structure-constant Lie algebras: brackets, Jacobi verification, central
//! series, derivations, Killing form, ideals and quotients.
//!
//! Constants are stored sparsely for `i < j` only; the `(j, i)` value is the
//! negation, so antisymmetry cannot be violated by input.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::mat::{unit_vec, vec_is_zero, LinearMap, Matrix};
use crate::rat::{zero, Rat};
use crate::subspace::Subspace;
use crate::Error;

/// Sparse vector as sorted `(index, coefficient)` pairs.
pub type SparseVec = Vec<(usize, Rat)>;

#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    name: Option<String>,
    labels: Vec<String>,
    grade: Option<Vec<usize>>,
    /// `(i, j) -> [b_i, b_j]` for `i < j`; missing pairs are zero.
    table: BTreeMap<(usize, usize), SparseVec>,
}

/// One failed Jacobi triple: `J(b_i, b_j, b_k) = residual != 0`.
#[derive(Clone, Debug)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual: Vec<Rat>,
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "LieAlgebra(dim {}, {} nonzero pairs)",
            self.dim,
            self.table.len()
        )
    }
}

impl LieAlgebra {
    /// The abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            name: None,
            labels: (0..dim).map(|i| format!("b{}", i + 1)).collect(),
            grade: None,
            table: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = Some(name.into());
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn grade(&self) -> Option<&[usize]> {
        self.grade.as_deref()
    }

    /// Attach a grading; fails unless every stored constant is homogeneous
    /// (`grade(k) = grade(i) + grade(j)`).
    pub fn set_grade(&mut self, grade: Vec<usize>) -> Result<(), Error> {
        assert_eq!(grade.len(), self.dim);
        for (&(i, j), v) in &self.table {
            for (k, c) in v {
                if !c.is_zero() && grade[*k] != grade[i] + grade[j] {
                    return Err(Error::NotGraded { i, j, k: *k });
                }
            }
        }
        self.grade = Some(grade);
        Ok(())
    }

    /// Add `c * b_k` to `[b_i, b_j]`. Indices are 0-based; `i > j` negates,
    /// `i == j` requires `c = 0`.
    pub fn add_term(&mut self, i: usize, j: usize, k: usize, c: Rat) -> Result<(), Error> {
        if i >= self.dim || j >= self.dim || k >= self.dim {
            return Err(Error::Dimension(format!(
                "structure constant index out of range: ({i},{j},{k}) in dim {}",
                self.dim
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        if i == j {
            return Err(Error::Parse(format!(
                "nonzero constant on diagonal pair ({i},{i})"
            )));
        }
        let (i, j, c) = if i < j { (i, j, c) } else { (j, i, -c) };
        let entry = self.table.entry((i, j)).or_default();
        match entry.binary_search_by_key(&k, |(kk, _)| *kk) {
            Ok(pos) => {
                entry[pos].1 += c;
                if entry[pos].1.is_zero() {
                    entry.remove(pos);
                }
            }
            Err(pos) => entry.insert(pos, (k, c)),
        }
        if entry.is_empty() {
            self.table.remove(&(i, j));
        }
        Ok(())
    }

    /// The coefficient of `b_k` in `[b_i, b_j]` (sign-aware).
    pub fn c(&self, i: usize, j: usize, k: usize) -> Rat {
        if i == j {
            return zero();
        }
        let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let Some(v) = self.table.get(&(a, b)) else {
            return zero();
        };
        match v.binary_search_by_key(&k, |(kk, _)| *kk) {
            Ok(pos) => {
                if sign > 0 {
                    v[pos].1.clone()
                } else {
                    -v[pos].1.clone()
                }
            }
            Err(_) => zero(),
        }
    }

    /// `[b_i, b_j]` as a sparse vector (sign-aware).
    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseVec {
        if i == j {
            return Vec::new();
        }
        let (a, b, neg) = if i < j { (i, j, false) } else { (j, i, true) };
        let Some(v) = self.table.get(&(a, b)) else {
            return Vec::new();
        };
        if neg {
            v.iter().map(|(k, c)| (*k, -c.clone())).collect()
        } else {
            v.clone()
        }
    }

    /// Iterate stored `(i, j, k, c)` entries with `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rat)> {
        self.table
            .iter()
            .flat_map(|(&(i, j), v)| v.iter().map(move |(k, c)| (i, j, *k, c)))
    }

    pub fn nonzero_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.table.keys().copied()
    }

    /// Bilinear extension of the structure constants to full vectors.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>, Error> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::Dimension(format!(
                "bracket: vector lengths {} / {} != dim {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let mut out = vec![zero(); self.dim];
        for (&(i, j), v) in &self.table {
            let a = if x[i].is_zero() || y[j].is_zero() {
                zero()
            } else {
                &x[i] * &y[j]
            };
            let b = if x[j].is_zero() || y[i].is_zero() {
                zero()
            } else {
                &x[j] * &y[i]
            };
            let coef = a - b;
            if coef.is_zero() {
                continue;
            }
            for (k, c) in v {
                let add = &coef * c;
                out[*k] += add;
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(b_i)`: column `j` is `[b_i, b_j]`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad(&unit_vec(self.dim, i))
    }

    /// Matrix of `ad(x)` for a full vector `x`.
    pub fn ad(&self, x: &[Rat]) -> Matrix {
        assert_eq!(x.len(), self.dim);
        let mut m = Matrix::zeros(self.dim, self.dim);
        // single pass over the table: the (a,b) entry contributes
        // x_a c(a,b,k) to column b and -x_b c(a,b,k) to column a
        for (&(a, b), v) in &self.table {
            if !x[a].is_zero() {
                for (k, c) in v {
                    let add = &x[a] * c;
                    let cur = m.at(*k, b).clone();
                    m.set(*k, b, cur + add);
                }
            }
            if !x[b].is_zero() {
                for (k, c) in v {
                    let sub = &x[b] * c;
                    let cur = m.at(*k, a).clone();
                    m.set(*k, a, cur - sub);
                }
            }
        }
        m
    }

    /// Exhaustive Jacobi sweep over all `i < j < k`, reporting every
    /// violating triple. The sweep is parallel with deterministic ordering.
    pub fn verify_jacobi(&self) -> Vec<JacobiViolation> {
        let n = self.dim;
        let triples: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|i| {
                ((i + 1)..n).flat_map(move |j| ((j + 1)..n).map(move |k| (i, j, k)))
            })
            .collect();
        triples
            .into_par_iter()
            .filter_map(|(i, j, k)| {
                let r = self.jacobi_residual(i, j, k);
                if vec_is_zero(&r) {
                    None
                } else {
                    Some(JacobiViolation { i, j, k, residual: r })
                }
            })
            .collect()
    }

    /// `[[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]`.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vec<Rat> {
        let mut out = vec![zero(); self.dim];
        let mut acc = |v: SparseVec, c3: usize| {
            for (m, c) in v {
                for (t, ct) in self.bracket_basis(m, c3) {
                    let add = &c * &ct;
                    out[t] += add;
                }
            }
        };
        acc(self.bracket_basis(i, j), k);
        acc(self.bracket_basis(j, k), i);
        acc(self.bracket_basis(k, i), j);
        out
    }

    /// `[A, B]` for subspaces: the span of brackets of basis pairs.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Result<Subspace, Error> {
        let mut rows = Vec::new();
        for u in a.basis_rows() {
            for v in b.basis_rows() {
                let w = self.bracket(u, v)?;
                if !vec_is_zero(&w) {
                    rows.push(w);
                }
            }
        }
        Ok(Subspace::from_rows(self.dim, rows))
    }

    /// Lower central series `N, [N,N], [N,[N,N]], ...` down to (and
    /// including) the first zero term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let last = series.last().unwrap();
            let next = self
                .bracket_subspaces(&Subspace::full(self.dim), last)
                .expect("ambient dims agree");
            let stable = next.dim() == last.dim();
            series.push(next);
            let cur = series.last().unwrap();
            if cur.is_zero() || stable {
                break;
            }
        }
        series
    }

    /// Derived series `L, [L,L], [[L,L],[L,L]], ...` down to the first
    /// stable term.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_subspaces(last, last).expect("same ambient");
            let stable = next.dim() == last.dim();
            series.push(next);
            if series.last().unwrap().is_zero() || stable {
                break;
            }
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    /// Largest `t` with `N^t != 0`; an error for non-nilpotent algebras.
    pub fn nilindex(&self) -> Result<usize, Error> {
        let lcs = self.lower_central_series();
        if !lcs.last().unwrap().is_zero() {
            return Err(Error::NotNilpotent);
        }
        Ok(lcs.len() - 1)
    }

    /// `dim N / N^2`, the minimal number of generators for nilpotent `N`.
    pub fn type_of(&self) -> usize {
        let derived = self
            .bracket_subspaces(&Subspace::full(self.dim), &Subspace::full(self.dim))
            .expect("same ambient");
        self.dim - derived.dim()
    }

    pub fn center(&self) -> Subspace {
        // v is central iff [v, b_j] = 0 for all j: rows (j,k) x cols i
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                let row: Vec<Rat> = (0..self.dim).map(|i| self.c(i, j, k)).collect();
                if !vec_is_zero(&row) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Subspace::full(self.dim);
        }
        Subspace::kernel_of(&Matrix::from_rows(rows))
    }

    /// Sparse columns of a square matrix on this algebra's space.
    fn sparse_columns(&self, d: &LinearMap) -> Vec<SparseVec> {
        assert!(d.is_square() && d.rows() == self.dim);
        let mut cols = vec![Vec::new(); self.dim];
        for i in 0..self.dim {
            for (j, v) in d.row(i).iter().enumerate() {
                if !v.is_zero() {
                    cols[j].push((i, v.clone()));
                }
            }
        }
        cols
    }

    /// Leibniz residual of one pair, accumulated sparsely:
    /// `d([b_i,b_j]) - [d b_i, b_j] - [b_i, d b_j]`.
    fn leibniz_residual(
        &self,
        cols: &[SparseVec],
        i: usize,
        j: usize,
    ) -> std::collections::BTreeMap<usize, Rat> {
        let mut acc: std::collections::BTreeMap<usize, Rat> = std::collections::BTreeMap::new();
        let mut add = |k: usize, v: Rat| {
            let e = acc.entry(k).or_insert_with(zero);
            *e += v;
            if e.is_zero() {
                acc.remove(&k);
            }
        };
        for (k, c) in self.bracket_basis(i, j) {
            for (t, v) in &cols[k] {
                add(*t, c.clone() * v);
            }
        }
        for (a, xa) in &cols[i] {
            for (t, ct) in self.bracket_basis(*a, j) {
                add(t, -(xa * &ct));
            }
        }
        for (b, xb) in &cols[j] {
            for (t, ct) in self.bracket_basis(i, *b) {
                add(t, -(xb * &ct));
            }
        }
        acc
    }

    /// Leibniz residuals `d([b_i,b_j]) - [d b_i, b_j] - [b_i, d b_j]` for
    /// all pairs `i < j` where they are nonzero. The sweep follows the
    /// sparsity of `d` and of the structure constants.
    pub fn derivation_residuals(&self, d: &LinearMap) -> Vec<(usize, usize, Vec<Rat>)> {
        let cols = self.sparse_columns(d);
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let acc = self.leibniz_residual(&cols, i, j);
                if !acc.is_empty() {
                    let mut residual = vec![zero(); n];
                    for (k, v) in acc {
                        residual[k] = v;
                    }
                    out.push((i, j, residual));
                }
            }
        }
        out
    }

    /// Pairs `(i, j)` where the Leibniz rule fails for `d`.
    pub fn derivation_violations(&self, d: &LinearMap) -> Vec<(usize, usize)> {
        self.derivation_residuals(d)
            .into_iter()
            .map(|(i, j, _)| (i, j))
            .collect()
    }

    pub fn is_derivation(&self, d: &LinearMap) -> bool {
        let cols = self.sparse_columns(d);
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if !self.leibniz_residual(&cols, i, j).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Basis of the derivation algebra, canonicalized by RREF of the
    /// row-major vectorizations.
    pub fn derivation_algebra(&self) -> Vec<Matrix> {
        let n = self.dim;
        // Unknowns D[t][s] (n^2, row-major). For each pair i<j and each
        // component t: sum_k c(i,j,k) D[t][k] - sum_s c(s,j,t) D[s][i]
        //                                     - sum_s c(i,s,t) D[s][j] = 0.
        let mut rows = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let bij = self.bracket_basis(i, j);
                for t in 0..n {
                    let mut row = vec![zero(); n * n];
                    for (k, c) in &bij {
                        row[t * n + k] += c;
                    }
                    for s in 0..n {
                        let c1 = self.c(s, j, t);
                        if !c1.is_zero() {
                            row[s * n + i] -= c1;
                        }
                        let c2 = self.c(i, s, t);
                        if !c2.is_zero() {
                            row[s * n + j] -= c2;
                        }
                    }
                    if !vec_is_zero(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        let kernel = if rows.is_empty() {
            Matrix::identity(n * n)
        } else {
            Matrix::from_rows(rows).kernel_basis()
        };
        (0..kernel.rows())
            .map(|r| Matrix::from_flat(n, n, kernel.row_vec(r)))
            .collect()
    }

    /// `K(i, j) = trace(ad b_i ∘ ad b_j)`.
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut k = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let t = ads[i].mul(&ads[j]).trace();
                k.set(i, j, t.clone());
                if i != j {
                    k.set(j, i, t);
                }
            }
        }
        k
    }

    /// Cartan's criterion for semisimplicity: `det K != 0`.
    pub fn is_semisimple(&self) -> bool {
        self.killing_form().rank() == self.dim
    }

    /// Cartan's criterion for solvability: `K(L, [L, L]) = 0`.
    pub fn cartan_solvable(&self) -> bool {
        let k = self.killing_form();
        let derived = self
            .bracket_subspaces(&Subspace::full(self.dim), &Subspace::full(self.dim))
            .expect("same ambient");
        let ok = derived.basis_rows().all(|w| vec_is_zero(&k.apply(w)));
        ok
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        if s.ambient_dim() != self.dim {
            return false;
        }
        for w in s.basis_rows() {
            for i in 0..self.dim {
                let v = self
                    .bracket(&unit_vec(self.dim, i), w)
                    .expect("dims agree");
                if !s.contains_vec(&v) {
                    return false;
                }
            }
        }
        true
    }

    /// Quotient by an ideal. The quotient basis is the canonical complement
    /// (non-pivot coordinates of `ideal`); the returned map is the
    /// projection, verified to be a Lie homomorphism.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, LinearMap), Error> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let n = self.dim;
        let q_cols: Vec<usize> = (0..n).filter(|c| !ideal.pivots().contains(c)).collect();
        let qdim = q_cols.len();
        // projection: reduce mod ideal, then read non-pivot coordinates
        let mut proj = Matrix::zeros(qdim, n);
        for j in 0..n {
            let red = ideal.reduce(&unit_vec(n, j));
            for (r, &c) in q_cols.iter().enumerate() {
                if !red[c].is_zero() {
                    proj.set(r, j, red[c].clone());
                }
            }
        }
        let mut q = LieAlgebra::abelian(qdim);
        q.labels = q_cols.iter().map(|&c| self.labels[c].clone()).collect();
        for a in 0..qdim {
            for b in (a + 1)..qdim {
                let w = self
                    .bracket(&unit_vec(n, q_cols[a]), &unit_vec(n, q_cols[b]))
                    .expect("dims agree");
                let pw = proj.apply(&w);
                for (k, c) in pw.into_iter().enumerate() {
                    q.add_term(a, b, k, c)?;
                }
            }
        }
        // cross-check: projection respects brackets on all basis pairs
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = proj.apply(
                    &self
                        .bracket(&unit_vec(n, i), &unit_vec(n, j))
                        .expect("dims agree"),
                );
                let rhs = q.bracket(&proj.col_vec(i), &proj.col_vec(j))?;
                if lhs != rhs {
                    return Err(Error::NotAHomomorphism(format!(
                        "quotient projection fails at basis pair ({i},{j})"
                    )));
                }
            }
        }
        Ok((q, proj))
    }

    /// Derived series of a subspace inside this algebra (used for ideals of
    /// matrix algebras realized as subspaces).
    pub fn derived_series_of(&self, s: &Subspace) -> Vec<Subspace> {
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_subspaces(last, last).expect("same ambient");
            let stable = next.dim() == last.dim();
            series.push(next);
            if series.last().unwrap().is_zero() || stable {
                break;
            }
        }
        series
    }
}

/// Closure/solvability/nilpotency report for a set of matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixLieInfo {
    pub closed: bool,
    pub solvable: Option<bool>,
    pub nilpotent: Option<bool>,
}

/// Tests whether the span of `basis` is closed under commutators and, if
/// so, whether the resulting matrix Lie algebra is solvable / nilpotent.
pub fn matrix_lie_tests(basis: &[Matrix]) -> MatrixLieInfo {
    match abstract_from_matrices(basis) {
        Some(alg) => MatrixLieInfo {
            closed: true,
            solvable: Some(alg.is_solvable()),
            nilpotent: Some(alg.is_nilpotent()),
        },
        None => MatrixLieInfo {
            closed: false,
            solvable: None,
            nilpotent: None,
        },
    }
}

/// Structure constants of the span of `basis` under commutators, or `None`
/// when the span is not closed. The matrices need not be RREF-canonical.
pub fn abstract_from_matrices(basis: &[Matrix]) -> Option<LieAlgebra> {
    if basis.is_empty() {
        return Some(LieAlgebra::abelian(0));
    }
    let n = basis[0].rows();
    assert!(basis.iter().all(|m| m.rows() == n && m.cols() == n));
    let span = Subspace::from_rows(n * n, basis.iter().map(Matrix::vectorize).collect());
    if span.dim() != basis.len() {
        // linearly dependent input: work with the canonical basis instead
        let canon: Vec<Matrix> = span
            .basis_rows()
            .map(|r| Matrix::from_flat(n, n, r.to_vec()))
            .collect();
        return abstract_from_matrices(&canon);
    }
    let mut alg = LieAlgebra::abelian(basis.len());
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let comm = basis[i].commutator(&basis[j]).vectorize();
            let coords = span.coords(&comm)?;
            // coords are w.r.t. the canonical RREF basis; re-express in the
            // given basis by solving against the input vectorizations
            let m = Matrix::from_rows(basis.iter().map(Matrix::vectorize).collect()).transpose();
            let x = m.solve(&comm).ok()??;
            let _ = coords;
            for (k, c) in x.into_iter().enumerate() {
                alg.add_term(i, j, k, c).ok()?;
            }
        }
    }
    Some(alg)
}

impl LieAlgebra {
    /// Copy without name/labels/grade, for structural comparisons.
    pub fn strip_meta(&self) -> LieAlgebra {
        LieAlgebra {
            dim: self.dim,
            name: None,
            labels: (0..self.dim).map(|i| format!("b{}", i + 1)).collect(),
            grade: None,
            table: self.table.clone(),
        }
    }

    /// Structure-constant equality, ignoring names/labels/grading.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.dim == other.dim && self.table == other.table
    }
}
