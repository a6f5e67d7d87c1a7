//! Free t-nilpotent Lie algebras on classical Hall bases.
//!
//! Hall trees are ordered by degree first, then recursive lexicographic
//! comparison of subtrees, with generators `x_1 < ... < x_d`. A pair
//! `[u, v]` is a Hall tree when `u > v`, both are Hall, and either `u` is a
//! generator or `right(u) <= v`. Arbitrary brackets are rewritten into the
//! basis with antisymmetry and the Jacobi identity, truncating above
//! degree `t`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::lie::{LieAlgebra, SparseVec};
use crate::mat::{unit_vec, vec_is_zero, LinearMap, Matrix};
use crate::rat::{rat, zero, Rat};
use crate::subspace::Subspace;
use crate::Error;

/// Hard cap on the basis size of a generated free nilpotent algebra.
pub const DIMENSION_CAP: usize = 20_000;

/// A Hall tree: a generator or an ordered bracket of two Hall trees
/// (stored as basis indices of the owning [`FreeNilpotent`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HallWord {
    Generator(usize),
    Pair(usize, usize),
}

/// The free `t`-nilpotent Lie algebra on `d` generators, with its Hall
/// basis ordered degree-ascending and the induced graded structure
/// constants.
pub struct FreeNilpotent {
    pub d: usize,
    pub t: usize,
    pub algebra: LieAlgebra,
    pub hall: Vec<HallWord>,
    degree: Vec<usize>,
    /// `degree_offsets[m]` is the basis index where degree `m+1` starts;
    /// the final entry is the total dimension.
    pub degree_offsets: Vec<usize>,
}

/// Number of degree-`m` basis elements of the free Lie algebra on `d`
/// generators: the necklace count `(1/m) Σ_{k|m} μ(k) d^{m/k}`. Computed
/// independently of Hall generation.
pub fn witt_oracle(d: usize, m: usize) -> usize {
    assert!(m >= 1);
    let mobius = |mut n: usize| -> i64 {
        let mut mu = 1i64;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                mu = -mu;
            }
            p += 1;
        }
        if n > 1 {
            mu = -mu;
        }
        mu
    };
    let mut total: i64 = 0;
    for k in 1..=m {
        if m.is_multiple_of(k) {
            total += mobius(k) * (d as i64).pow((m / k) as u32);
        }
    }
    assert!(total >= 0 && total % m as i64 == 0);
    (total / m as i64) as usize
}

impl FreeNilpotent {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degree[i]
    }

    /// Basis index range of the degree-`m` block (1-based degree).
    pub fn degree_block(&self, m: usize) -> std::ops::Range<usize> {
        assert!(m >= 1 && m <= self.t);
        self.degree_offsets[m - 1]..self.degree_offsets[m]
    }

    pub fn degree_subspace(&self, m: usize) -> Subspace {
        Subspace::coordinate_block(self.dim(), self.degree_block(m))
    }

    /// Coordinate subspace spanned by all degrees `>= m`.
    pub fn degrees_from(&self, m: usize) -> Subspace {
        Subspace::coordinate_block(self.dim(), self.degree_offsets[m - 1]..self.dim())
    }

    pub fn graded_dims(&self) -> Vec<usize> {
        (1..=self.t)
            .map(|m| self.degree_block(m).len())
            .collect()
    }

    /// Readable bracketed form of a basis word.
    pub fn word_string(&self, i: usize) -> String {
        match self.hall[i] {
            HallWord::Generator(g) => format!("x{}", g + 1),
            HallWord::Pair(a, b) => {
                format!("[{},{}]", self.word_string(a), self.word_string(b))
            }
        }
    }
}

/// Tree order: degree first, then recursive lexicographic comparison.
fn cmp_words(
    hall: &[HallWord],
    degree: &[usize],
    a: usize,
    b: usize,
) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    if a == b {
        return Ordering::Equal;
    }
    match degree[a].cmp(&degree[b]) {
        Ordering::Equal => {}
        o => return o,
    }
    match (&hall[a], &hall[b]) {
        (HallWord::Generator(x), HallWord::Generator(y)) => x.cmp(y),
        (HallWord::Pair(a1, a2), HallWord::Pair(b1, b2)) => {
            match cmp_words(hall, degree, *a1, *b1) {
                Ordering::Equal => cmp_words(hall, degree, *a2, *b2),
                o => o,
            }
        }
        // same degree >= 2 cannot mix generators and pairs
        (HallWord::Generator(_), _) => Ordering::Less,
        (_, HallWord::Generator(_)) => Ordering::Greater,
    }
}

struct Builder {
    t: usize,
    hall: Vec<HallWord>,
    degree: Vec<usize>,
    pair_index: HashMap<(usize, usize), usize>,
    products: HashMap<(usize, usize), SparseVec>,
}

impl Builder {
    fn is_hall_pair(&self, u: usize, v: usize) -> bool {
        use std::cmp::Ordering;
        if cmp_words(&self.hall, &self.degree, u, v) != Ordering::Greater {
            return false;
        }
        match self.hall[u] {
            HallWord::Generator(_) => true,
            HallWord::Pair(_, b) => {
                cmp_words(&self.hall, &self.degree, b, v) != Ordering::Greater
            }
        }
    }

    /// `[w_u, w_v]` expanded in the Hall basis, truncated above degree `t`.
    fn product(&mut self, u: usize, v: usize) -> SparseVec {
        use std::cmp::Ordering;
        if u == v {
            return Vec::new();
        }
        if self.degree[u] + self.degree[v] > self.t {
            return Vec::new();
        }
        if let Some(p) = self.products.get(&(u, v)) {
            return p.clone();
        }
        let result = match cmp_words(&self.hall, &self.degree, u, v) {
            Ordering::Less => negate(&self.product(v, u)),
            Ordering::Equal => unreachable!("distinct indices compare equal"),
            Ordering::Greater => {
                if self.is_hall_pair(u, v) {
                    vec![(self.pair_index[&(u, v)], crate::rat::one())]
                } else {
                    // u = [a, b] with b > v: Jacobi
                    // [[a,b],v] = [[a,v],b] + [a,[b,v]]
                    let HallWord::Pair(a, b) = self.hall[u] else {
                        unreachable!("non-Hall left factor must be a pair")
                    };
                    let av = self.product(a, v);
                    let bv = self.product(b, v);
                    let mut acc: HashMap<usize, Rat> = HashMap::new();
                    for (k, c) in av {
                        for (m, cm) in self.product(k, b) {
                            let e = acc.entry(m).or_insert_with(zero);
                            *e += &c * &cm;
                        }
                    }
                    for (k, c) in bv {
                        for (m, cm) in self.product(a, k) {
                            let e = acc.entry(m).or_insert_with(zero);
                            *e += &c * &cm;
                        }
                    }
                    let mut out: SparseVec = acc
                        .into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .collect();
                    out.sort_by_key(|(k, _)| *k);
                    out
                }
            }
        };
        self.products.insert((u, v), result.clone());
        result
    }
}

fn negate(v: &SparseVec) -> SparseVec {
    v.iter().map(|(k, c)| (*k, -c.clone())).collect()
}

/// Build the free `t`-nilpotent Lie algebra on `d` generators.
pub fn free_nilpotent(d: usize, t: usize) -> Result<FreeNilpotent, Error> {
    if d < 1 || t < 1 {
        return Err(Error::Construction(
            "free_nilpotent requires d >= 1 and t >= 1".into(),
        ));
    }
    let dim: usize = (1..=t).map(|m| witt_oracle(d, m)).sum();
    if dim > DIMENSION_CAP {
        return Err(Error::ResourceBound(format!(
            "free nilpotent algebra would have dimension {dim} > {DIMENSION_CAP}"
        )));
    }
    let mut b = Builder {
        t,
        hall: (0..d).map(HallWord::Generator).collect(),
        degree: vec![1; d],
        pair_index: HashMap::new(),
        products: HashMap::new(),
    };
    let mut degree_offsets = vec![0usize, d];
    for m in 2..=t {
        let mut block: Vec<(usize, usize)> = Vec::new();
        for p in 1..m {
            let q = m - p;
            if p < q {
                continue;
            }
            for u in degree_offsets[p - 1]..degree_offsets[p] {
                for v in degree_offsets[q - 1]..degree_offsets[q] {
                    if b.is_hall_pair(u, v) {
                        block.push((u, v));
                    }
                }
            }
        }
        // sort the new block by tree order of the pair words
        let hall_ref = &b.hall;
        let deg_ref = &b.degree;
        block.sort_by(|&(a1, a2), &(b1, b2)| {
            cmp_words(hall_ref, deg_ref, a1, b1)
                .then_with(|| cmp_words(hall_ref, deg_ref, a2, b2))
        });
        for (u, v) in block {
            let idx = b.hall.len();
            b.hall.push(HallWord::Pair(u, v));
            b.degree.push(m);
            b.pair_index.insert((u, v), idx);
        }
        degree_offsets.push(b.hall.len());
    }
    let dim = b.hall.len();
    let mut algebra = LieAlgebra::abelian(dim);
    for i in 0..dim {
        for j in (i + 1)..dim {
            if b.degree[i] + b.degree[j] > t {
                continue;
            }
            // basis order equals tree order, so w_i < w_j here
            let prod = negate(&b.product(j, i));
            for (k, c) in prod {
                algebra.add_term(i, j, k, c)?;
            }
        }
    }
    algebra.set_grade(b.degree.clone())?;
    algebra.set_name(format!("free_{d}_{t}"));
    let mut f = FreeNilpotent {
        d,
        t,
        algebra,
        hall: b.hall,
        degree: b.degree,
        degree_offsets,
    };
    let labels = (0..dim).map(|i| f.word_string(i)).collect();
    f.algebra.set_labels(labels);
    Ok(f)
}

/// A natural homomorphism `θ_G` from a free nilpotent algebra onto a
/// nilpotent target, together with its kernel.
pub struct NaturalHom {
    /// `target_dim x free_dim` matrix of the evaluation map.
    pub map: LinearMap,
    pub kernel: Subspace,
    pub surjective: bool,
}

impl FreeNilpotent {
    /// Evaluate each Hall word in `target` on the generator images `gens`
    /// and verify the result is a Lie homomorphism on all basis pairs.
    pub fn natural_hom(
        &self,
        target: &LieAlgebra,
        gens: &[Vec<Rat>],
    ) -> Result<NaturalHom, Error> {
        if gens.len() != self.d {
            return Err(Error::Dimension(format!(
                "natural_hom: {} generator images for d = {}",
                gens.len(),
                self.d
            )));
        }
        let n = target.dim();
        let mut columns: Vec<Vec<Rat>> = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let col = match self.hall[i] {
                HallWord::Generator(g) => gens[g].clone(),
                HallWord::Pair(a, b) => target.bracket(&columns[a], &columns[b])?,
            };
            columns.push(col);
        }
        let mut map = Matrix::zeros(n, self.dim());
        for (j, col) in columns.iter().enumerate() {
            for (i, c) in col.iter().enumerate() {
                if !c.is_zero() {
                    map.set(i, j, c.clone());
                }
            }
        }
        // Lie homomorphism on all basis pairs, including truncated ones
        for i in 0..self.dim() {
            for j in (i + 1)..self.dim() {
                let mut lhs = vec![zero(); n];
                for (k, c) in self.algebra.bracket_basis(i, j) {
                    for (t, v) in columns[k].iter().enumerate() {
                        if !v.is_zero() {
                            let add = &c * v;
                            lhs[t] += add;
                        }
                    }
                }
                let rhs = target.bracket(&columns[i], &columns[j])?;
                if lhs != rhs {
                    return Err(Error::NotAHomomorphism(format!(
                        "natural_hom fails at basis pair ({i},{j}): target is \
                         not {}-nilpotent on these generators",
                        self.t
                    )));
                }
            }
        }
        let kernel = Subspace::kernel_of(&map);
        let surjective = map.rank() == n;
        Ok(NaturalHom {
            map,
            kernel,
            surjective,
        })
    }

    /// Unique derivation extending the linear map `d0` (columns are images
    /// of the generators, as vectors in this algebra).
    pub fn derivation_extension(&self, d0: &LinearMap) -> Result<LinearMap, Error> {
        if d0.cols() != self.d || d0.rows() != self.dim() {
            return Err(Error::Dimension(format!(
                "derivation_extension: map is {}x{}, expected {}x{}",
                d0.rows(),
                d0.cols(),
                self.dim(),
                self.d
            )));
        }
        let mut columns: Vec<Vec<Rat>> = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let col = match self.hall[i] {
                HallWord::Generator(g) => d0.col_vec(g),
                HallWord::Pair(a, b) => {
                    let ua = unit_vec(self.dim(), a);
                    let ub = unit_vec(self.dim(), b);
                    crate::mat::vec_add(
                        &self.algebra.bracket(&columns[a], &ub)?,
                        &self.algebra.bracket(&ua, &columns[b])?,
                    )
                }
            };
            columns.push(col);
        }
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (j, col) in columns.iter().enumerate() {
            for (i, c) in col.iter().enumerate() {
                if !c.is_zero() {
                    m.set(i, j, c.clone());
                }
            }
        }
        Ok(m)
    }

    /// Extend square maps on the generator space to derivations; the
    /// assignment is a Lie-algebra monomorphism `gl(m) -> Der`.
    pub fn delta_hom(&self, maps: &[Matrix]) -> Result<Vec<LinearMap>, Error> {
        maps.iter()
            .map(|m| {
                if !m.is_square() || m.rows() != self.d {
                    return Err(Error::Dimension(format!(
                        "delta_hom: expected {0}x{0} generator maps",
                        self.d
                    )));
                }
                // embed the d x d map as a dim x d map into the degree-1 block
                let mut d0 = Matrix::zeros(self.dim(), self.d);
                for i in 0..self.d {
                    for j in 0..self.d {
                        let v = m.at(i, j);
                        if !v.is_zero() {
                            d0.set(i, j, v.clone());
                        }
                    }
                }
                self.derivation_extension(&d0)
            })
            .collect()
    }

    /// Extend an sl2 action on the generator space to the whole algebra.
    pub fn extend_sl2(&self, act: &crate::sl2::Sl2Action) -> Result<crate::sl2::Sl2Action, Error> {
        if act.dim() != self.d {
            return Err(Error::Dimension(format!(
                "extend_sl2: action dim {} != d = {}",
                act.dim(),
                self.d
            )));
        }
        let ext = self.delta_hom(&[act.h().clone(), act.e().clone(), act.f().clone()])?;
        let [h, e, f]: [Matrix; 3] = ext.try_into().expect("three maps in, three out");
        crate::sl2::Sl2Action::new(h, e, f)
    }
}

/// The metabelian wedge model `m ⊕ Λ²m` with `[x, y] = x ∧ y`.
pub fn wedge_model_2(m_dim: usize) -> LieAlgebra {
    assert!(m_dim >= 2);
    let d = m_dim;
    let wedge = d * (d - 1) / 2;
    let widx = |i: usize, j: usize| -> usize {
        // index of e_i ∧ e_j for i < j among increasing pairs
        debug_assert!(i < j);
        d + (0..i).map(|a| d - 1 - a).sum::<usize>() + (j - i - 1)
    };
    let mut l = LieAlgebra::abelian(d + wedge);
    for i in 0..d {
        for j in (i + 1)..d {
            l.add_term(i, j, widx(i, j), crate::rat::one()).unwrap();
        }
    }
    let mut grade = vec![1; d];
    grade.extend(vec![2; wedge]);
    l.set_grade(grade).unwrap();
    l.set_name(format!("wedge2_{d}"));
    l
}

/// The nilindex-3 wedge model `m ⊕ Λ²m ⊕ s` where `s` is the canonical
/// complement of `Λ³m` inside `m ⊗ Λ²m`, with brackets
/// `[x, y] = x ∧ y` and
/// `[x, y∧z] = (2/3) x⊗(y∧z) + (1/3) y⊗(x∧z) + (1/3) z⊗(y∧x)`.
pub struct WedgeModel3 {
    pub algebra: LieAlgebra,
    pub m_dim: usize,
    /// Basis of `s` inside `m ⊗ Λ²m` coordinates (RREF canonical).
    pub s_basis: Subspace,
}

impl WedgeModel3 {
    fn wedge_index(d: usize, i: usize, j: usize) -> (usize, bool) {
        debug_assert!(i != j);
        if i < j {
            ((0..i).map(|a| d - 1 - a).sum::<usize>() + (j - i - 1), false)
        } else {
            ((0..j).map(|a| d - 1 - a).sum::<usize>() + (i - j - 1), true)
        }
    }

    /// `x_a ⊗ (x_b ∧ x_c)` as a vector in `m ⊗ Λ²m` coordinates.
    fn tensor_vec(d: usize, a: usize, b: usize, c: usize, coef: &Rat) -> Vec<Rat> {
        let wedge = d * (d - 1) / 2;
        let mut v = vec![zero(); d * wedge];
        if b == c {
            return v;
        }
        let (w, neg) = Self::wedge_index(d, b, c);
        v[a * wedge + w] = if neg { -coef.clone() } else { coef.clone() };
        v
    }

    /// The projection of `x ⊗ (y ∧ z)` onto `s`:
    /// `(2/3) x⊗(y∧z) + (1/3) y⊗(x∧z) + (1/3) z⊗(y∧x)`, as a vector in
    /// `m ⊗ Λ²m` coordinates.
    pub fn s_projection(d: usize, x: usize, y: usize, z: usize) -> Vec<Rat> {
        let mut v = Self::tensor_vec(d, x, y, z, &rat(2, 3));
        let t2 = Self::tensor_vec(d, y, x, z, &rat(1, 3));
        let t3 = Self::tensor_vec(d, z, y, x, &rat(1, 3));
        for (a, b) in v.iter_mut().zip(t2.iter().zip(t3.iter())) {
            *a += b.0;
            *a += b.1;
        }
        v
    }
}

pub fn wedge_model_3(m_dim: usize) -> Result<WedgeModel3, Error> {
    assert!(m_dim >= 2);
    let d = m_dim;
    let wedge = d * (d - 1) / 2;
    // canonical s-basis: RREF span of all projections
    let mut rows = Vec::new();
    for x in 0..d {
        for y in 0..d {
            for z in (y + 1)..d {
                let v = WedgeModel3::s_projection(d, x, y, z);
                if !vec_is_zero(&v) {
                    rows.push(v);
                }
            }
        }
    }
    let s_basis = Subspace::from_rows(d * wedge, rows);
    let s_dim = s_basis.dim();
    let dim = d + wedge + s_dim;
    let mut l = LieAlgebra::abelian(dim);
    for i in 0..d {
        for j in (i + 1)..d {
            let (w, _) = WedgeModel3::wedge_index(d, i, j);
            l.add_term(i, j, d + w, crate::rat::one())?;
        }
    }
    // [x_i, x_y ∧ x_z] in s coordinates
    for i in 0..d {
        for y in 0..d {
            for z in (y + 1)..d {
                let proj = WedgeModel3::s_projection(d, i, y, z);
                let coords = s_basis
                    .coords(&proj)
                    .expect("projection lies in s by construction");
                let (w, _) = WedgeModel3::wedge_index(d, y, z);
                for (k, c) in coords.into_iter().enumerate() {
                    l.add_term(i, d + w, d + wedge + k, c)?;
                }
            }
        }
    }
    let mut grade = vec![1; d];
    grade.extend(vec![2; wedge]);
    grade.extend(vec![3; s_dim]);
    l.set_grade(grade)?;
    l.set_name(format!("wedge3_{d}"));
    Ok(WedgeModel3 {
        algebra: l,
        m_dim,
        s_basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rat::rat_int;

    #[test]
    fn witt_oracle_small_values() {
        assert_eq!(witt_oracle(2, 1), 2);
        assert_eq!(witt_oracle(2, 2), 1);
        assert_eq!(witt_oracle(2, 3), 2);
        assert_eq!(witt_oracle(2, 4), 3);
        assert_eq!(witt_oracle(2, 5), 6);
        assert_eq!(witt_oracle(3, 3), 8);
        assert_eq!(witt_oracle(11, 3), 440);
    }

    #[test]
    fn dims_of_small_free_nilpotents() {
        assert_eq!(free_nilpotent(2, 2).unwrap().dim(), 3);
        assert_eq!(free_nilpotent(4, 1).unwrap().dim(), 4);
        let f23 = free_nilpotent(2, 3).unwrap();
        assert_eq!(f23.dim(), 5);
        assert_eq!(f23.graded_dims(), vec![2, 1, 2]);
        assert_eq!(free_nilpotent(3, 3).unwrap().dim(), 14);
    }

    #[test]
    fn abelian_when_t_is_one() {
        let f = free_nilpotent(5, 1).unwrap();
        assert_eq!(f.dim(), 5);
        assert!(f.algebra.entries().next().is_none());
    }

    #[test]
    fn graded_dims_match_witt_oracle() {
        for d in 1..=4 {
            for t in 1..=4 {
                let f = free_nilpotent(d, t).unwrap();
                let dims = f.graded_dims();
                for m in 1..=t {
                    assert_eq!(dims[m - 1], witt_oracle(d, m), "d={d} t={t} m={m}");
                }
            }
        }
    }

    #[test]
    fn jacobi_passes_on_generated_algebras() {
        for (d, t) in [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 3)] {
            let f = free_nilpotent(d, t).unwrap();
            assert!(
                f.algebra.verify_jacobi().is_empty(),
                "Jacobi fails on free({d},{t})"
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            free_nilpotent(30, 4),
            Err(Error::ResourceBound(_))
        ));
    }

    #[test]
    fn natural_hom_onto_h1_is_bijective() {
        let f = free_nilpotent(2, 2).unwrap();
        let h1 = fixtures::heisenberg(1);
        let hom = f
            .natural_hom(&h1, &[unit_vec(3, 0), unit_vec(3, 1)])
            .unwrap();
        assert!(hom.surjective);
        assert!(hom.kernel.is_zero());
    }

    #[test]
    fn natural_hom_onto_abelian_kills_degree_two() {
        let f = free_nilpotent(2, 2).unwrap();
        let ab = LieAlgebra::abelian(2);
        let hom = f
            .natural_hom(&ab, &[unit_vec(2, 0), unit_vec(2, 1)])
            .unwrap();
        assert!(hom.surjective);
        assert_eq!(hom.kernel, f.degree_subspace(2));
    }

    #[test]
    fn natural_hom_rejects_target_of_higher_nilindex() {
        // f(2,2) cannot map onto the filiform of nilindex 3 generators
        let f = free_nilpotent(2, 2).unwrap();
        let fil = fixtures::standard_filiform(4);
        let res = f.natural_hom(&fil, &[unit_vec(4, 0), unit_vec(4, 1)]);
        assert!(matches!(res, Err(Error::NotAHomomorphism(_))));
    }

    #[test]
    fn universal_property_over_fixtures() {
        // every nilpotent fixture of type d and nilindex t is an image of
        // free(d, t) on its generators
        let h2 = fixtures::heisenberg(2);
        let f = free_nilpotent(4, 2).unwrap();
        let gens: Vec<Vec<Rat>> = (0..4).map(|i| unit_vec(5, i)).collect();
        assert!(f.natural_hom(&h2, &gens).unwrap().surjective);

        let fil = fixtures::standard_filiform(5);
        let f = free_nilpotent(2, 4).unwrap();
        let gens = vec![unit_vec(5, 0), unit_vec(5, 1)];
        assert!(f.natural_hom(&fil, &gens).unwrap().surjective);

        let dl8 = fixtures::dl8();
        let f = free_nilpotent(4, 3).unwrap();
        let gens: Vec<Vec<Rat>> = (0..4).map(|i| unit_vec(8, i)).collect();
        let hom = f.natural_hom(&dl8, &gens).unwrap();
        assert!(hom.surjective);
        assert_eq!(hom.kernel.dim(), f.dim() - 8);
        assert!(f.algebra.is_ideal(&hom.kernel));
    }

    #[test]
    fn identity_extends_to_grading_derivation() {
        let f = free_nilpotent(2, 3).unwrap();
        let ext = f.delta_hom(&[Matrix::identity(2)]).unwrap();
        let d = &ext[0];
        assert!(f.algebra.is_derivation(d));
        // eigenvalue m on the degree-m block
        for i in 0..f.dim() {
            let col = d.col_vec(i);
            let expected =
                crate::mat::vec_scale(&rat_int(f.degree(i) as i64), &unit_vec(f.dim(), i));
            assert_eq!(col, expected);
        }
    }

    #[test]
    fn zero_extends_to_zero() {
        let f = free_nilpotent(2, 2).unwrap();
        let d = f
            .derivation_extension(&Matrix::zeros(3, 2))
            .unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn nilpotent_part_of_v1_action_kills_wedge() {
        // d0 = e-action on V(1): e x = 0, e y = x extends with
        // [x,y] -> [ex,y] + [x,ey] = 0
        let f = free_nilpotent(2, 2).unwrap();
        let mut d0 = Matrix::zeros(3, 2);
        d0.set(0, 1, crate::rat::one());
        let d = f.derivation_extension(&d0).unwrap();
        assert!(f.algebra.is_derivation(&d));
        assert!(vec_is_zero(&d.col_vec(2)));
    }

    #[test]
    fn delta_is_a_homomorphism_on_sl2() {
        let f = free_nilpotent(2, 3).unwrap();
        let act = crate::sl2::Sl2Action::irreducible(1);
        let ext = f
            .delta_hom(&[act.e().clone(), act.f().clone(), act.h().clone()])
            .unwrap();
        let (de, df, dh) = (&ext[0], &ext[1], &ext[2]);
        assert_eq!(de.commutator(df), *dh);
        for d in [de, df, dh] {
            assert!(f.algebra.is_derivation(d));
        }
    }

    #[test]
    fn extended_action_satisfies_sl2_relations() {
        let f = free_nilpotent(2, 3).unwrap();
        let ext = f.extend_sl2(&crate::sl2::Sl2Action::irreducible(1)).unwrap();
        let dec = ext.decompose().unwrap();
        let mut weights = dec.weights();
        weights.sort_unstable();
        assert_eq!(weights, vec![0, 1, 1]);
    }

    #[test]
    fn wedge_model_2_matches_free() {
        for d in 2..=4 {
            let w = wedge_model_2(d);
            assert!(w.verify_jacobi().is_empty());
            let f = free_nilpotent(d, 2).unwrap();
            assert_eq!(w.dim(), f.dim());
            let gens: Vec<Vec<Rat>> = (0..d).map(|i| unit_vec(w.dim(), i)).collect();
            let hom = f.natural_hom(&w, &gens).unwrap();
            assert!(hom.surjective && hom.kernel.is_zero());
        }
    }

    #[test]
    fn wedge_model_3_matches_free() {
        for d in 2..=4 {
            let w = wedge_model_3(d).unwrap();
            assert!(w.algebra.verify_jacobi().is_empty());
            let f = free_nilpotent(d, 3).unwrap();
            assert_eq!(w.algebra.dim(), f.dim());
            let gens: Vec<Vec<Rat>> =
                (0..d).map(|i| unit_vec(w.algebra.dim(), i)).collect();
            let hom = f.natural_hom(&w.algebra, &gens).unwrap();
            assert!(hom.surjective && hom.kernel.is_zero(), "d = {d}");
        }
    }

    #[test]
    fn wedge_model_3_blocks_for_d3() {
        let w = wedge_model_3(3).unwrap();
        assert_eq!(w.algebra.dim(), 14);
        assert_eq!(w.s_basis.dim(), 8); // 3*3 - 1
        let grade = w.algebra.grade().unwrap();
        assert_eq!(grade.iter().filter(|&&g| g == 1).count(), 3);
        assert_eq!(grade.iter().filter(|&&g| g == 2).count(), 3);
        assert_eq!(grade.iter().filter(|&&g| g == 3).count(), 8);
    }

    #[test]
    fn wedge_model_3_single_s_product_for_d2() {
        // [x, x∧y] is a single s-basis vector
        let w = wedge_model_3(2).unwrap();
        let l = &w.algebra;
        let bracket = l.bracket_basis(0, 2);
        assert_eq!(bracket.len(), 1);
        assert_eq!(bracket[0].0, 3);
    }

    #[test]
    fn cyclic_jacobi_sum_vanishes_in_wedge_model() {
        let w = wedge_model_3(3).unwrap();
        let l = &w.algebra;
        let n = l.dim();
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    let mut sum = vec![zero(); n];
                    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                        let ab = l
                            .bracket(&unit_vec(n, a), &unit_vec(n, b))
                            .unwrap();
                        let abc = l.bracket(&ab, &unit_vec(n, c)).unwrap();
                        sum = crate::mat::vec_add(&sum, &abc);
                    }
                    assert!(vec_is_zero(&sum));
                }
            }
        }
    }
}
