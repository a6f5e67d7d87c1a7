//! Gluing semisimple algebras onto nilpotent radicals and carving nilpotent
//! algebras with prescribed Levi extensions out of free nilpotent algebras:
//! invariant-ideal quotients, quasi-cyclic and graph-ideal constructions,
//! Heisenberg quotients, layer decompositions, and central extensions of
//! characteristically nilpotent algebras.

use num_traits::Zero;

use crate::freenil::FreeNilpotent;
use crate::lie::LieAlgebra;
use crate::mat::{unit_vec, vec_add, vec_is_zero, Matrix};
use crate::rat::{one, zero, Rat};
use crate::sl2::{clebsch_gordan, Sl2Action};
use crate::subspace::Subspace;
use crate::Error;

/// A representation of a semisimple algebra `S` (given by structure
/// constants) on some target space: `images[i]` is the operator for the
/// `i`-th basis vector of `S`.
#[derive(Clone)]
pub struct Representation {
    pub s: LieAlgebra,
    pub images: Vec<Matrix>,
}

impl Representation {
    pub fn new(s: LieAlgebra, images: Vec<Matrix>) -> Result<Self, Error> {
        if images.len() != s.dim() {
            return Err(Error::Dimension(format!(
                "representation: {} images for an algebra of dimension {}",
                images.len(),
                s.dim()
            )));
        }
        let rep = Representation { s, images };
        rep.verify_homomorphism()?;
        Ok(rep)
    }

    /// An sl2 action as a representation of the `(h, e, f)` algebra.
    pub fn sl2(act: &Sl2Action) -> Self {
        Representation {
            s: crate::fixtures::sl2(),
            images: vec![act.h().clone(), act.e().clone(), act.f().clone()],
        }
    }

    /// Recover an [`Sl2Action`] when `S` has the `(h, e, f)` structure.
    pub fn as_sl2(&self) -> Option<Sl2Action> {
        if !self.s.same_structure(&crate::fixtures::sl2()) {
            return None;
        }
        Sl2Action::new(
            self.images[0].clone(),
            self.images[1].clone(),
            self.images[2].clone(),
        )
        .ok()
    }

    pub fn target_dim(&self) -> usize {
        self.images.first().map_or(0, Matrix::rows)
    }

    /// `[rho(s_i), rho(s_j)] = sum_k c(i,j,k) rho(s_k)` on all pairs.
    pub fn verify_homomorphism(&self) -> Result<(), Error> {
        for i in 0..self.s.dim() {
            for j in (i + 1)..self.s.dim() {
                let mut expected = Matrix::zeros(self.target_dim(), self.target_dim());
                for (k, c) in self.s.bracket_basis(i, j) {
                    expected = expected.add(&self.images[k].scale(&c));
                }
                if self.images[i].commutator(&self.images[j]) != expected {
                    return Err(Error::NotAHomomorphism(format!(
                        "representation fails on S-basis pair ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Kernel `{a : sum a_i rho(s_i) = 0}` inside the coefficient space of `S`.
    pub fn kernel(&self) -> Subspace {
        let n = self.target_dim();
        if self.s.dim() == 0 {
            return Subspace::zero(0);
        }
        let stacked = Matrix::from_fn(n * n, self.s.dim(), |r, c| {
            self.images[c].at(r / n, r % n).clone()
        });
        Subspace::kernel_of(&stacked)
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel().is_zero()
    }
}

/// `S ⊕_ρ N`: the Lie algebra on the direct sum with `[s, n] = ρ(s)(n)`.
pub struct GluedAlgebra {
    pub algebra: LieAlgebra,
    pub s_dim: usize,
    pub n_dim: usize,
    pub rho: Representation,
    /// Cartan-criterion check on `S`; gluing only needs `ρ(S) ⊆ Der N`,
    /// so a non-semisimple `S` is reported rather than rejected.
    pub s_semisimple: bool,
}

impl GluedAlgebra {
    pub fn s_range(&self) -> std::ops::Range<usize> {
        0..self.s_dim
    }

    pub fn n_range(&self) -> std::ops::Range<usize> {
        self.s_dim..self.s_dim + self.n_dim
    }

    pub fn n_subspace(&self) -> Subspace {
        Subspace::coordinate_block(self.algebra.dim(), self.n_range())
    }

    /// The adjoint action of the `S = sl2` block on the whole glued space.
    pub fn adjoint_sl2(&self) -> Option<Sl2Action> {
        if !self.rho.s.same_structure(&crate::fixtures::sl2()) {
            return None;
        }
        Sl2Action::new(
            self.algebra.ad_basis(0),
            self.algebra.ad_basis(1),
            self.algebra.ad_basis(2),
        )
        .ok()
    }

    /// Extract the N-block as a Lie algebra in its own right.
    pub fn nilradical(&self) -> LieAlgebra {
        restrict_to_block(&self.algebra, self.n_range()).expect("N block closes")
    }
}

/// Subalgebra on a coordinate block, failing if products escape the block.
pub fn restrict_to_block(
    alg: &LieAlgebra,
    range: std::ops::Range<usize>,
) -> Result<LieAlgebra, Error> {
    let mut out = LieAlgebra::abelian(range.len());
    for (i, j, k, c) in alg.entries() {
        let (in_i, in_j) = (range.contains(&i), range.contains(&j));
        if in_i && in_j {
            if !range.contains(&k) {
                return Err(Error::Construction(format!(
                    "block is not a subalgebra: [{},{}] has a component outside",
                    i, j
                )));
            }
            out.add_term(i - range.start, j - range.start, k - range.start, c.clone())?;
        }
    }
    let labels = range.map(|i| alg.label(i).to_string()).collect();
    out.set_labels(labels);
    Ok(out)
}

/// Glue a semisimple algebra onto a nilpotent/solvable one through a
/// representation by derivations. The result is fully Jacobi-verified.
pub fn glue(s: &LieAlgebra, n: &LieAlgebra, rho: &Representation) -> Result<GluedAlgebra, Error> {
    if !rho.s.same_structure(s) {
        return Err(Error::Construction(
            "representation is not over the given S".into(),
        ));
    }
    if rho.target_dim() != n.dim() {
        return Err(Error::Dimension(format!(
            "representation acts on dim {}, N has dim {}",
            rho.target_dim(),
            n.dim()
        )));
    }
    rho.verify_homomorphism()?;
    for img in &rho.images {
        if !n.is_derivation(img) {
            return Err(Error::NotADerivation);
        }
    }
    let s_semisimple = s.is_semisimple();
    let sd = s.dim();
    let nd = n.dim();
    let mut glued = LieAlgebra::abelian(sd + nd);
    for (i, j, k, c) in s.entries() {
        glued.add_term(i, j, k, c.clone())?;
    }
    for (i, j, k, c) in n.entries() {
        glued.add_term(sd + i, sd + j, sd + k, c.clone())?;
    }
    for (i, img) in rho.images.iter().enumerate() {
        for j in 0..nd {
            for (k, c) in img.col_vec(j).into_iter().enumerate() {
                if !c.is_zero() {
                    glued.add_term(i, sd + j, sd + k, c)?;
                }
            }
        }
    }
    let mut labels: Vec<String> = (0..sd).map(|i| s.label(i).to_string()).collect();
    labels.extend((0..nd).map(|i| n.label(i).to_string()));
    glued.set_labels(labels);
    let bad = glued.verify_jacobi();
    if !bad.is_empty() {
        return Err(Error::Construction(format!(
            "glued algebra fails Jacobi at {} triples",
            bad.len()
        )));
    }
    let out = GluedAlgebra {
        algebra: glued,
        s_dim: sd,
        n_dim: nd,
        rho: rho.clone(),
        s_semisimple,
    };
    debug_assert!(out.algebra.is_ideal(&out.n_subspace()));
    Ok(out)
}

/// Extend a representation on the generator space of `f` to the whole free
/// nilpotent algebra through derivation extensions. Faithfulness is
/// preserved; each extended image is verified to be a derivation.
pub fn extend_to_free(f: &FreeNilpotent, rho0: &Representation) -> Result<Representation, Error> {
    if rho0.target_dim() != f.d {
        return Err(Error::Dimension(format!(
            "generator representation acts on dim {}, expected {}",
            rho0.target_dim(),
            f.d
        )));
    }
    let images = f.delta_hom(&rho0.images)?;
    for img in &images {
        if !f.algebra.is_derivation(img) {
            return Err(Error::NotADerivation);
        }
    }
    let rep = Representation::new(rho0.s.clone(), images)?;
    if rep.kernel() != rho0.kernel() {
        return Err(Error::Construction(
            "extension changed the representation kernel".into(),
        ));
    }
    Ok(rep)
}

/// An ideal of a free nilpotent algebra that is also a module for the
/// acting operators, with computed (never asserted) flags.
#[derive(Clone, Debug)]
pub struct SIdeal {
    pub subspace: Subspace,
    pub is_ideal: bool,
    pub is_invariant: bool,
    pub is_homogeneous: bool,
}

/// Intersection with a coordinate block via a column-permuted RREF: rows
/// whose pivot lands in the trailing block have support only there.
fn intersect_with_block(s: &Subspace, block: std::ops::Range<usize>, ambient: usize) -> Subspace {
    if s.is_zero() {
        return Subspace::zero(ambient);
    }
    let outside: Vec<usize> = (0..ambient).filter(|c| !block.contains(c)).collect();
    let perm: Vec<usize> = outside.iter().chain(block.clone().collect::<Vec<_>>().iter()).copied().collect();
    let n_outside = outside.len();
    let rows: Vec<Vec<Rat>> = s
        .basis_rows()
        .map(|r| perm.iter().map(|&c| r[c].clone()).collect())
        .collect();
    let (rref, pivots) = Matrix::from_rows(rows).rref();
    let mut out_rows = Vec::new();
    for (row, &p) in pivots.iter().enumerate() {
        if p >= n_outside {
            let mut v = vec![zero(); ambient];
            for (pc, &oc) in perm.iter().enumerate() {
                if !rref.at(row, pc).is_zero() {
                    v[oc] = rref.at(row, pc).clone();
                }
            }
            out_rows.push(v);
        }
    }
    Subspace::from_rows(ambient, out_rows)
}

/// Is the subspace a direct sum of its intersections with the degree
/// blocks of `f`?
pub fn is_homogeneous_ideal(f: &FreeNilpotent, s: &Subspace) -> bool {
    let total: usize = (1..=f.t)
        .map(|m| intersect_with_block(s, f.degree_block(m), f.dim()).dim())
        .sum();
    total == s.dim()
}

/// Per-degree intersection dims, for reporting.
pub fn block_intersection_dims(f: &FreeNilpotent, s: &Subspace) -> Vec<usize> {
    (1..=f.t)
        .map(|m| intersect_with_block(s, f.degree_block(m), f.dim()).dim())
        .collect()
}

impl SIdeal {
    /// Compute all flags for a candidate subspace.
    pub fn analyze(f: &FreeNilpotent, rep: &Representation, subspace: Subspace) -> SIdeal {
        let is_ideal = f.algebra.is_ideal(&subspace);
        let is_invariant = rep.images.iter().all(|m| {
            subspace
                .basis_rows()
                .all(|r| subspace.contains_vec(&m.apply(r)))
        });
        let is_homogeneous = is_homogeneous_ideal(f, &subspace);
        SIdeal {
            subspace,
            is_ideal,
            is_invariant,
            is_homogeneous,
        }
    }
}

/// `J + [J, m]` for an invariant `J` inside the positive-degree part of a
/// free 3-nilpotent algebra; the result is an ideal and invariant, and the
/// closure is a fixed point.
pub fn s_ideal_closure(
    f: &FreeNilpotent,
    rep: &Representation,
    j_module: &Subspace,
) -> Result<SIdeal, Error> {
    if f.t != 3 {
        return Err(Error::Construction(
            "s_ideal_closure is specific to nilindex 3".into(),
        ));
    }
    if !rep.images.iter().all(|m| {
        j_module
            .basis_rows()
            .all(|r| j_module.contains_vec(&m.apply(r)))
    }) {
        return Err(Error::NotInvariant);
    }
    let gens = f.degree_subspace(1);
    let brackets = f.algebra.bracket_subspaces(j_module, &gens)?;
    let closure = j_module.sum(&brackets)?;
    let ideal = SIdeal::analyze(f, rep, closure);
    if !ideal.is_ideal || !ideal.is_invariant {
        return Err(Error::Construction(
            "closure failed to produce an invariant ideal".into(),
        ));
    }
    Ok(ideal)
}

/// Quotient of a free nilpotent algebra by an invariant ideal inside the
/// positive-degree part, with the induced representation and the re-glued
/// algebra, all verified.
pub struct LeviQuotient {
    pub quotient: LieAlgebra,
    pub projection: Matrix,
    pub rep: Representation,
    pub glued: GluedAlgebra,
}

pub fn quotient_with_levi(
    f: &FreeNilpotent,
    rep: &Representation,
    ideal: &SIdeal,
) -> Result<LeviQuotient, Error> {
    if !ideal.is_ideal {
        return Err(Error::NotAnIdeal);
    }
    if !ideal.is_invariant {
        return Err(Error::NotInvariant);
    }
    // the ideal must avoid the generator block
    if !intersect_with_block(&ideal.subspace, f.degree_block(1), f.dim()).is_zero() {
        return Err(Error::Construction(
            "ideal meets the generator block".into(),
        ));
    }
    // and must not swallow the whole top-degree block
    if ideal.subspace.contains(&f.degree_subspace(f.t)) {
        return Err(Error::NilindexCollapsed);
    }
    let (quotient, projection) = f.algebra.quotient(&ideal.subspace)?;
    let qdim = quotient.dim();
    let q_cols: Vec<usize> = (0..f.dim())
        .filter(|c| !ideal.subspace.pivots().contains(c))
        .collect();
    let mut lift = Matrix::zeros(f.dim(), qdim);
    for (a, &c) in q_cols.iter().enumerate() {
        lift.set(c, a, one());
    }
    let images: Vec<Matrix> = rep
        .images
        .iter()
        .map(|m| projection.mul(m).mul(&lift))
        .collect();
    for img in &images {
        if !quotient.is_derivation(img) {
            return Err(Error::NotADerivation);
        }
    }
    let induced = Representation::new(rep.s.clone(), images)?;
    if induced.kernel() != rep.kernel() {
        return Err(Error::Construction(
            "quotient changed the representation kernel".into(),
        ));
    }
    if quotient.nilindex()? != f.t {
        return Err(Error::NilindexCollapsed);
    }
    let glued = glue(&rep.s, &quotient, &induced)?;
    Ok(LeviQuotient {
        quotient,
        projection,
        rep: induced,
        glued,
    })
}

/// Quasi-cyclic quotient `N(m,3) / (P ⊕ ([P,m] + Q))` for invariant
/// `P ⊆ Λ²m` and `Q` inside the degree-3 block.
pub fn quasi_cyclic_quotient(
    f: &FreeNilpotent,
    rep: &Representation,
    p: &Subspace,
    q: &Subspace,
) -> Result<LeviQuotient, Error> {
    if f.t != 3 {
        return Err(Error::Construction(
            "quasi_cyclic_quotient is specific to nilindex 3".into(),
        ));
    }
    let deg2 = f.degree_subspace(2);
    let deg3 = f.degree_subspace(3);
    if !deg2.contains(p) || !deg3.contains(q) {
        return Err(Error::NotASubspace);
    }
    let tail = f
        .algebra
        .bracket_subspaces(p, &f.degree_subspace(1))?
        .sum(q)?;
    if tail.contains(&deg3) {
        return Err(Error::NilindexCollapsed);
    }
    let ideal = SIdeal::analyze(f, rep, p.sum(&tail)?);
    if !ideal.is_invariant {
        return Err(Error::NotInvariant);
    }
    if !ideal.is_homogeneous {
        return Err(Error::Construction(
            "P ⊕ ([P,m] + Q) should be homogeneous by construction".into(),
        ));
    }
    quotient_with_levi(f, rep, &ideal)
}

/// Sign-normalized nonzero coefficient combinations over a multiplicity
/// space, with coefficients drawn from `{0, ±1}`.
pub fn hw_combinations(hw: &Subspace) -> Vec<Vec<Rat>> {
    let m = hw.dim();
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    let digits = [0i64, 1, -1];
    for code in 1..3usize.pow(m as u32) {
        let mut c = code;
        let coeffs: Vec<i64> = (0..m)
            .map(|_| {
                let d = digits[c % 3];
                c /= 3;
                d
            })
            .collect();
        // sign-normalize: first nonzero coefficient must be +1
        match coeffs.iter().find(|&&c| c != 0) {
            Some(1) => {}
            _ => continue,
        }
        let combo: Vec<Rat> = coeffs.iter().map(|&c| crate::rat::rat_int(c)).collect();
        out.push(hw.from_coords(&combo));
    }
    out
}

/// Result of the Heisenberg-as-quotient construction.
pub struct HeisenbergQuotient {
    pub free: FreeNilpotent,
    pub ideal: Subspace,
    pub quotient: LieAlgebra,
    pub projection: Matrix,
    /// Induced alternating form on the generator block of the quotient.
    pub form: Matrix,
    pub center_dim: usize,
    pub derived_is_center: bool,
    pub form_nondegenerate: bool,
    pub symplectic_derivations_ok: bool,
}

/// Build `N_{2n,2}` and quotient by the kernel of the symplectic
/// contraction `u ∧ v -> b(u, v)`; the result is the Heisenberg algebra
/// `h_n`, certified by its center/derived-algebra/form properties, and all
/// symplectic matrices descend to derivations.
pub fn heisenberg_quotient(n: usize) -> Result<HeisenbergQuotient, Error> {
    if n < 1 {
        return Err(Error::Construction("heisenberg_quotient needs n >= 1".into()));
    }
    let d = 2 * n;
    let f = crate::freenil::free_nilpotent(d, 2)?;
    // generators ordered x_1..x_n, y_1..y_n; b(x_i, y_i) = 1
    let b_form = |a: usize, bb: usize| -> Rat {
        if a < n && bb == a + n {
            one()
        } else if bb < n && a == bb + n {
            -one()
        } else {
            zero()
        }
    };
    // contraction functional on the degree-2 block: [g_a, g_b] -> b(g_a, g_b)
    let deg2 = f.degree_subspace(2);
    let functional: Vec<Rat> = f
        .degree_block(2)
        .map(|idx| {
            let crate::freenil::HallWord::Pair(u, v) = f.hall[idx] else {
                unreachable!("degree-2 word is a pair")
            };
            let (
                crate::freenil::HallWord::Generator(a),
                crate::freenil::HallWord::Generator(bb),
            ) = (&f.hall[u], &f.hall[v])
            else {
                unreachable!("degree-2 word brackets generators")
            };
            b_form(*a, *bb)
        })
        .collect();
    // ideal = kernel of the contraction inside the degree-2 block
    let in_block = Matrix::from_rows(vec![functional]).kernel_basis();
    let rows: Vec<Vec<Rat>> = (0..in_block.rows())
        .map(|r| deg2.from_coords(in_block.row(r)))
        .collect();
    let ideal = Subspace::from_rows(f.dim(), rows);
    let (quotient, projection) = f.algebra.quotient(&ideal)?;
    let qdim = quotient.dim();
    if qdim != 2 * n + 1 {
        return Err(Error::Construction(format!(
            "heisenberg quotient has dim {qdim}, expected {}",
            2 * n + 1
        )));
    }
    let center = quotient.center();
    let derived = quotient.bracket_subspaces(&Subspace::full(qdim), &Subspace::full(qdim))?;
    let center_dim = center.dim();
    let derived_is_center = derived == center;
    // induced alternating form: coefficient of the central coordinate
    let mut form = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            form.set(i, j, quotient.c(i, j, d));
        }
    }
    let form_nondegenerate = form.rank() == d;
    // symplectic matrices descend through the derivation extension
    let mut symplectic_derivations_ok = true;
    for x in symplectic_basis(n) {
        let ext = f.delta_hom(&[x])?;
        let dx = &ext[0];
        // descends iff the ideal is invariant
        let descends = ideal
            .basis_rows()
            .all(|r| ideal.contains_vec(&dx.apply(r)));
        if !descends {
            symplectic_derivations_ok = false;
            break;
        }
        let q_cols: Vec<usize> = (0..f.dim())
            .filter(|c| !ideal.pivots().contains(c))
            .collect();
        let mut lift = Matrix::zeros(f.dim(), qdim);
        for (a, &c) in q_cols.iter().enumerate() {
            lift.set(c, a, one());
        }
        let induced = projection.mul(dx).mul(&lift);
        if !quotient.is_derivation(&induced) {
            symplectic_derivations_ok = false;
            break;
        }
    }
    Ok(HeisenbergQuotient {
        free: f,
        ideal,
        quotient,
        projection,
        form,
        center_dim,
        derived_is_center,
        form_nondegenerate,
        symplectic_derivations_ok,
    })
}

/// Basis of `sp_{2n}` for the form with `b(x_i, y_i) = 1`: matrices
/// `[[A, B], [C, -A^T]]` with `B`, `C` symmetric.
pub fn symplectic_basis(n: usize) -> Vec<Matrix> {
    let d = 2 * n;
    let mut out = Vec::with_capacity(n * (2 * n + 1));
    for a in 0..n {
        for b in 0..n {
            let mut m = Matrix::zeros(d, d);
            m.set(a, b, one());
            m.set(n + b, n + a, -one());
            out.push(m);
        }
    }
    for a in 0..n {
        for b in a..n {
            let mut m = Matrix::zeros(d, d);
            m.set(a, n + b, one());
            m.set(b, n + a, one());
            out.push(m);
            let mut m = Matrix::zeros(d, d);
            m.set(n + a, b, one());
            m.set(n + b, a, one());
            out.push(m);
        }
    }
    out
}

/// Successful graph-ideal construction: a non-homogeneous invariant ideal
/// built from a module with nonzero isomorphic projections on both
/// positive-degree blocks, and its quotient.
pub struct GraphQuotient {

    pub ideal: SIdeal,
    pub quotient: LieAlgebra,
    pub projection: Matrix,
    pub action: Sl2Action,
    pub graph_module: Subspace,
    pub weights: Vec<usize>,
}

impl std::fmt::Debug for GraphQuotient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GraphQuotient(quotient dim {}, ideal dim {})",
            self.quotient.dim(),
            self.ideal.subspace.dim()
        )
    }
}

/// Search report when no highest-weight combination yields a valid ideal.
#[derive(Debug)]
pub struct GraphFailure {
    pub weight: usize,
    pub candidates_tried: usize,
    pub reason: String,
}

/// Build a non-quasi-cyclic quotient of the free 3-nilpotent algebra on
/// which `ext` acts: pick highest-weight vectors `u` (degree 2) and `w`
/// (degree 3) of the common weight, form the graph module generated by
/// `u + λ w`, close `extra_p ⊕ graph ⊕ extra_q` to an ideal and quotient.
///
/// When `extra_q` is `None` an invariant complement is computed so that
/// exactly one copy of the common-weight module survives in degree 3.
/// Canonical highest-weight vectors are tried first; on failure the finite
/// set of `{0, ±1}` combinations over the multiplicity spaces is searched
/// and the failure is reported exhaustively.
pub fn nonhomogeneous_graph_quotient(
    f: &FreeNilpotent,
    ext: &Sl2Action,
    weight: usize,
    lambda: &Rat,
    extra_p: &Subspace,
    extra_q: Option<&Subspace>,
) -> Result<GraphQuotient, Box<GraphFailure>> {
    let fail = |tried: usize, reason: String| {
        Err(Box::new(GraphFailure {
            weight,
            candidates_tried: tried,
            reason,
        }))
    };
    if f.t != 3 {
        return fail(0, "construction is specific to nilindex 3".into());
    }
    if lambda.is_zero() {
        return fail(0, "λ = 0 would make the ideal homogeneous".into());
    }
    let deg2 = f.degree_subspace(2);
    let deg3 = f.degree_subspace(3);
    let act2 = match ext.restrict(&deg2) {
        Ok(a) => a,
        Err(e) => return fail(0, format!("degree-2 block is not invariant: {e}")),
    };
    let act3 = match ext.restrict(&deg3) {
        Ok(a) => a,
        Err(e) => return fail(0, format!("degree-3 block is not invariant: {e}")),
    };
    let hw2 = act2.hw_space(weight);
    let hw3 = act3.hw_space(weight);
    if hw2.is_zero() || hw3.is_zero() {
        return fail(
            0,
            format!(
                "weight {weight} must occur in both blocks (multiplicities {} and {})",
                hw2.dim(),
                hw3.dim()
            ),
        );
    }
    // candidate pairs: canonical first, then {0,±1} combinations
    let mut u_cands: Vec<Vec<Rat>> = vec![hw2.basis().row_vec(0)];
    let mut w_cands: Vec<Vec<Rat>> = vec![hw3.basis().row_vec(0)];
    for c in hw_combinations(&hw2) {
        if !u_cands.contains(&c) {
            u_cands.push(c);
        }
    }
    for c in hw_combinations(&hw3) {
        if !w_cands.contains(&c) {
            w_cands.push(c);
        }
    }
    let mut tried = 0;
    let mut last_reason = String::new();
    for u_c in &u_cands {
        for w_c in &w_cands {
            tried += 1;
            let u = deg2.from_coords(u_c);
            let w = deg3.from_coords(w_c);
            let glue_vec = vec_add(&u, &crate::mat::vec_scale(lambda, &w));
            match try_graph_candidate(f, ext, weight, extra_p, extra_q, &glue_vec) {
                Ok(gq) => return Ok(gq),
                Err(e) => last_reason = e.to_string(),
            }
        }
    }
    fail(
        tried,
        format!("no highest-weight combination produced a valid ideal: {last_reason}"),
    )
}

fn try_graph_candidate(
    f: &FreeNilpotent,
    ext: &Sl2Action,
    weight: usize,
    extra_p: &Subspace,
    extra_q: Option<&Subspace>,
    glue_vec: &[Rat],
) -> Result<GraphQuotient, Error> {
    let deg3 = f.degree_subspace(3);
    let graph_module = ext.submodule_generated(&[glue_vec.to_vec()]);
    if graph_module.dim() != weight + 1 {
        return Err(Error::Construction(format!(
            "graph module has dim {}, expected {}",
            graph_module.dim(),
            weight + 1
        )));
    }
    let q_part = match extra_q {
        Some(q) => q.clone(),
        None => {
            // keep exactly one surviving weight module in degree 3: take an
            // invariant complement of [P ⊕ B, m] ⊕ proj_3(B) in the block
            let j0 = extra_p.sum(&graph_module)?;
            let c = f
                .algebra
                .bracket_subspaces(&j0, &f.degree_subspace(1))?;
            let proj3_rows: Vec<Vec<Rat>> = graph_module
                .basis_rows()
                .map(|r| {
                    let mut v = vec![zero(); f.dim()];
                    for idx in f.degree_block(3) {
                        v[idx] = r[idx].clone();
                    }
                    v
                })
                .collect();
            let q_copy = Subspace::from_rows(f.dim(), proj3_rows);
            if !c.intersect(&q_copy)?.is_zero() {
                return Err(Error::Construction(
                    "bracket closure already meets the surviving module".into(),
                ));
            }
            let m = c.sum(&q_copy)?;
            let m3 = m.intersect(&deg3)?;
            ext.invariant_complement(&m3, &deg3)?
        }
    };
    let rep = Representation::sl2(ext);
    let j = extra_p.sum(&graph_module)?.sum(&q_part)?;
    let ideal = s_ideal_closure(f, &rep, &j)?;
    if ideal.is_homogeneous {
        return Err(Error::Construction("ideal came out homogeneous".into()));
    }
    if ideal.subspace.contains(&deg3) {
        return Err(Error::NilindexCollapsed);
    }
    let lq = quotient_with_levi(f, &rep, &ideal)?;
    let action = lq
        .rep
        .as_sl2()
        .ok_or_else(|| Error::Construction("induced action lost the sl2 relations".into()))?;
    let weights = action
        .decompose()
        .map_err(|_| Error::NotAnAlgebraicSl2Action)?
        .weights();
    Ok(GraphQuotient {
        ideal,
        quotient: lq.quotient,
        projection: lq.projection,
        action,
        graph_module,
        weights,
    })
}

/// One layer of the module filtration `N^j = m_j ⊕ N^{j+1}`.
pub struct Layer {
    pub j: usize,
    pub module: Subspace,
    pub weights: Vec<usize>,
    pub inside_bracket: bool,
    pub weights_in_tensor: bool,
}

pub struct LayerReport {
    pub layers: Vec<Layer>,
    pub pass: bool,
}

/// Decompose the nilradical of a glued algebra into module layers along
/// its lower central series and check the structural conditions: each
/// `m_j` sits inside `[m_1, m_{j-1}]` and its weights occur in the
/// Clebsch-Gordan expansion of `m_1 ⊗ m_{j-1}`. Rank-1 (sl2) Levi factors
/// only.
pub fn verify_layers(g: &GluedAlgebra) -> Result<LayerReport, Error> {
    let act_n = g
        .rho
        .as_sl2()
        .ok_or_else(|| Error::Construction("layer check supports sl2 Levi factors only".into()))?;
    let n = g.nilradical();
    let lcs = n.lower_central_series();
    let mut layers: Vec<Layer> = Vec::new();
    let mut pass = true;
    let depth = lcs.len() - 1; // number of nonzero terms
    for j in 1..=depth {
        let whole = &lcs[j - 1];
        let next = &lcs[j];
        let module = act_n.invariant_complement(next, whole)?;
        let weights = act_n.restrict(&module)?.decompose()?.weights();
        let (inside_bracket, weights_in_tensor) = if j == 1 {
            (true, true)
        } else {
            let m1 = &layers[0];
            let prev = &layers[j - 2];
            let target = n.bracket_subspaces(&m1.module, &prev.module)?;
            let inside = target.contains(&module);
            let mut expansion: Vec<usize> = Vec::new();
            for a in &m1.weights {
                for b in &prev.weights {
                    expansion.extend(clebsch_gordan(*a, *b));
                }
            }
            let in_tensor = weights.iter().all(|w| expansion.contains(w));
            (inside, in_tensor)
        };
        pass &= inside_bracket && weights_in_tensor;
        layers.push(Layer {
            j,
            module,
            weights,
            inside_bracket,
            weights_in_tensor,
        });
    }
    Ok(LayerReport { layers, pass })
}

/// Central extension of a characteristically nilpotent algebra by a
/// symplectic plane bundle: `L = n ⊕ V_m` with `[x_i, y_i] = z_0`,
/// `[V_m, n] = 0`.
pub struct CnExtension {
    pub algebra: LieAlgebra,
    pub n_dim: usize,
    pub m: usize,
    pub nilindex: usize,
    pub der_dim: usize,
    pub symplectic_derivations_ok: bool,
}

impl CnExtension {
    /// For `m = 1` the symplectic block is an sl2 action on the extension.
    pub fn sl2_block(&self) -> Option<Sl2Action> {
        if self.m != 1 {
            return None;
        }
        let dim = self.algebra.dim();
        let x = self.n_dim;
        let y = self.n_dim + 1;
        let mut h = Matrix::zeros(dim, dim);
        h.set(x, x, one());
        h.set(y, y, -one());
        let mut e = Matrix::zeros(dim, dim);
        e.set(x, y, one());
        let mut f = Matrix::zeros(dim, dim);
        f.set(y, x, one());
        Sl2Action::new(h, e, f).ok()
    }
}

/// Build `L_m(n, z0)`. Requires `z0` central, the derivation algebra of
/// `n` nilpotent, and `{x : [x, n] ⊆ Z(n)} ⊆ n²`.
pub fn cn_extension(n: &LieAlgebra, z0: &[Rat], m: usize) -> Result<CnExtension, Error> {
    let nd = n.dim();
    if z0.len() != nd {
        return Err(Error::Dimension("z0 has the wrong length".into()));
    }
    let center = n.center();
    if !center.contains_vec(z0) {
        return Err(Error::NotCentral("z0 is not central".into()));
    }
    let der = n.derivation_algebra();
    let info = crate::lie::matrix_lie_tests(&der);
    if info.nilpotent != Some(true) {
        return Err(Error::Construction(
            "the base algebra is not characteristically nilpotent".into(),
        ));
    }
    // {x : [x, n] ⊆ Z(n)} ⊆ n²
    let derived = n.bracket_subspaces(&Subspace::full(nd), &Subspace::full(nd))?;
    let almost_central = {
        let mut rows = Vec::new();
        for j in 0..nd {
            // condition rows: [x, b_j] reduced mod center
            let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(nd);
            for i in 0..nd {
                cols.push(
                    n.bracket(&unit_vec(nd, i), &unit_vec(nd, j))
                        .expect("dims"),
                );
            }
            for t in 0..nd {
                let row: Vec<Rat> = (0..nd)
                    .map(|i| center.reduce(&cols[i])[t].clone())
                    .collect();
                if !vec_is_zero(&row) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            Subspace::full(nd)
        } else {
            Subspace::kernel_of(&Matrix::from_rows(rows))
        }
    };
    if !derived.contains(&almost_central) {
        return Err(Error::Construction(
            "{x : [x,n] ⊆ Z(n)} is not contained in n²".into(),
        ));
    }
    let dim = nd + 2 * m;
    let mut l = LieAlgebra::abelian(dim);
    for (i, j, k, c) in n.entries() {
        l.add_term(i, j, k, c.clone())?;
    }
    for p in 0..m {
        let (xi, yi) = (nd + p, nd + m + p);
        for (k, c) in z0.iter().enumerate() {
            if !c.is_zero() {
                l.add_term(xi, yi, k, c.clone())?;
            }
        }
    }
    let mut labels: Vec<String> = (0..nd).map(|i| n.label(i).to_string()).collect();
    labels.extend((1..=m).map(|i| format!("x{i}")));
    labels.extend((1..=m).map(|i| format!("y{i}")));
    l.set_labels(labels);
    let bad = l.verify_jacobi();
    if !bad.is_empty() {
        return Err(Error::Construction(format!(
            "extension fails Jacobi at {} triples",
            bad.len()
        )));
    }
    let nilindex = l.nilindex()?;
    if m > 0 && nilindex != n.nilindex()? {
        return Err(Error::Construction(
            "extension changed the nilindex".into(),
        ));
    }
    let der_l = l.derivation_algebra();
    // symplectic block: zero on n, symplectic on V_m
    let mut symplectic_derivations_ok = true;
    for x in symplectic_basis(m) {
        let mut big = Matrix::zeros(dim, dim);
        for i in 0..2 * m {
            for j in 0..2 * m {
                let v = x.at(i, j);
                if !v.is_zero() {
                    big.set(nd + i, nd + j, v.clone());
                }
            }
        }
        if !l.is_derivation(&big) {
            symplectic_derivations_ok = false;
        }
    }
    Ok(CnExtension {
        algebra: l,
        n_dim: nd,
        m,
        nilindex,
        der_dim: der_l.len(),
        symplectic_derivations_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::freenil::free_nilpotent;
    use crate::rat::rat_int;

    fn v1_on_h1() -> Representation {
        // sl2 acting on h1 = V(1) ⊕ V(0)
        let act = Sl2Action::direct_sum(&[Sl2Action::irreducible(1), Sl2Action::trivial(1)]);
        Representation::sl2(&act)
    }

    #[test]
    fn glue_sl2_onto_h1_matches_prop_table() {
        let g = glue(&fixtures::sl2(), &fixtures::heisenberg(1), &v1_on_h1()).unwrap();
        assert_eq!(g.algebra.dim(), 6);
        assert!(g.s_semisimple);
        // compare constant-for-constant with the fixture under the basis
        // permutation (h,e,f,x,y,z) -> (x,y,z,h,e,f)
        let reference = fixtures::glued_l0_h1();
        let perm = [3usize, 4, 5, 0, 1, 2];
        for i in 0..6 {
            for j in 0..6 {
                for k in 0..6 {
                    assert_eq!(
                        g.algebra.c(i, j, k),
                        reference.c(perm[i], perm[j], perm[k]),
                        "mismatch at ({i},{j},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn glue_split_null_extension() {
        // abelian V = V(2) as a module: split null extension
        let act = Sl2Action::irreducible(2);
        let rho = Representation::sl2(&act);
        let g = glue(&fixtures::sl2(), &LieAlgebra::abelian(3), &rho).unwrap();
        assert_eq!(g.algebra.dim(), 6);
        assert!(g.algebra.verify_jacobi().is_empty());
        assert!(g.algebra.is_ideal(&g.n_subspace()));
    }

    #[test]
    fn glue_rejects_non_derivation() {
        // rho(h) = identity on h1 is not a derivation
        let id = Matrix::identity(3);
        let rho = Representation {
            s: fixtures::sl2(),
            images: vec![
                id,
                Matrix::zeros(3, 3),
                Matrix::zeros(3, 3),
            ],
        };
        // not even a homomorphism check matters: derivation fails first
        let err = glue(&fixtures::sl2(), &fixtures::heisenberg(1), &rho);
        assert!(err.is_err());
    }

    #[test]
    fn extend_to_free_gives_example_weights() {
        let f = free_nilpotent(2, 3).unwrap();
        let rho0 = Representation::sl2(&Sl2Action::irreducible(1));
        let rep = extend_to_free(&f, &rho0).unwrap();
        assert!(rep.is_faithful());
        let act = rep.as_sl2().unwrap();
        let mut w = act.decompose().unwrap().weights();
        w.sort_unstable();
        assert_eq!(w, vec![0, 1, 1]);
    }

    #[test]
    fn trivial_rep_extends_trivially() {
        let f = free_nilpotent(2, 2).unwrap();
        let rho0 = Representation::sl2(&Sl2Action::trivial(2));
        let rep = extend_to_free(&f, &rho0).unwrap();
        assert!(rep.images.iter().all(Matrix::is_zero));
        assert!(!rep.is_faithful());
    }

    #[test]
    fn s_ideal_closure_examples() {
        let f = free_nilpotent(2, 3).unwrap();
        let rep = extend_to_free(&f, &Representation::sl2(&Sl2Action::irreducible(1))).unwrap();
        // J = Λ²m (the 1-dim degree-2 block) closes to the whole tail
        let j = f.degree_subspace(2);
        let closed = s_ideal_closure(&f, &rep, &j).unwrap();
        assert_eq!(closed.subspace.dim(), 3);
        assert!(closed.is_ideal && closed.is_invariant && closed.is_homogeneous);
        // J = 0 stays 0
        let z = s_ideal_closure(&f, &rep, &Subspace::zero(5)).unwrap();
        assert!(z.subspace.is_zero());
        // idempotence
        let again = s_ideal_closure(&f, &rep, &closed.subspace).unwrap();
        assert_eq!(again.subspace, closed.subspace);
    }

    #[test]
    fn quotient_with_levi_identity_ideal() {
        let f = free_nilpotent(2, 2).unwrap();
        let rep = extend_to_free(&f, &Representation::sl2(&Sl2Action::irreducible(1))).unwrap();
        let ideal = SIdeal::analyze(&f, &rep, Subspace::zero(3));
        let lq = quotient_with_levi(&f, &rep, &ideal).unwrap();
        assert_eq!(lq.quotient.dim(), 3);
        assert_eq!(lq.glued.algebra.dim(), 6);
        // free(2,2) is h1 with the Hall sign convention [x1,x2] = -[x2,x1]
        let mut expected = LieAlgebra::abelian(3);
        expected.add_term(0, 1, 2, rat_int(-1)).unwrap();
        assert!(lq.quotient.same_structure(&expected));
    }

    #[test]
    fn quotient_with_levi_detects_collapse() {
        let f = free_nilpotent(2, 2).unwrap();
        let rep = extend_to_free(&f, &Representation::sl2(&Sl2Action::irreducible(1))).unwrap();
        let ideal = SIdeal::analyze(&f, &rep, f.degree_subspace(2));
        assert!(matches!(
            quotient_with_levi(&f, &rep, &ideal),
            Err(Error::NilindexCollapsed)
        ));
    }

    #[test]
    fn metabelian_family_enumeration() {
        // generators V(2) ⊕ V(0): Λ² = V(2) ⊕ V(2); enumerate the {0,±1}
        // highest-weight combinations and quotient by each proper module
        let f = free_nilpotent(4, 2).unwrap();
        let act0 = Sl2Action::direct_sum(&[Sl2Action::irreducible(2), Sl2Action::trivial(1)]);
        let rep = extend_to_free(&f, &Representation::sl2(&act0)).unwrap();
        let ext = rep.as_sl2().unwrap();
        let deg2 = f.degree_subspace(2);
        let act2 = ext.restrict(&deg2).unwrap();
        let dec = act2.decompose().unwrap();
        assert_eq!(dec.weights(), vec![2, 2]);
        let hw = dec.hw_space(2).unwrap();
        let combos = hw_combinations(hw);
        assert_eq!(combos.len(), 4); // (1,0),(0,1),(1,1),(1,-1) up to sign
        let mut quotients = 0;
        for c in combos {
            let vec_full = deg2.from_coords(&c);
            let sub = ext.submodule_generated(&[vec_full]);
            assert_eq!(sub.dim(), 3);
            let ideal = SIdeal::analyze(&f, &rep, sub);
            assert!(ideal.is_ideal && ideal.is_invariant && ideal.is_homogeneous);
            let lq = quotient_with_levi(&f, &rep, &ideal).unwrap();
            assert_eq!(lq.quotient.dim(), 7);
            assert_eq!(lq.quotient.nilindex().unwrap(), 2);
            quotients += 1;
        }
        assert_eq!(quotients, 4);
    }

    #[test]
    fn quasi_cyclic_quotient_zero_modules_is_identity() {
        let f = free_nilpotent(2, 3).unwrap();
        let rep = extend_to_free(&f, &Representation::sl2(&Sl2Action::irreducible(1))).unwrap();
        let lq = quasi_cyclic_quotient(&f, &rep, &Subspace::zero(5), &Subspace::zero(5)).unwrap();
        assert_eq!(lq.quotient.dim(), 5);
    }

    #[test]
    fn quasi_cyclic_quotient_collapse_detected() {
        let f = free_nilpotent(2, 3).unwrap();
        let rep = extend_to_free(&f, &Representation::sl2(&Sl2Action::irreducible(1))).unwrap();
        // P = Λ²m: [P, m] = s, so the tail swallows degree 3
        let p = f.degree_subspace(2);
        assert!(matches!(
            quasi_cyclic_quotient(&f, &rep, &p, &Subspace::zero(5)),
            Err(Error::NilindexCollapsed)
        ));
    }

    #[test]
    fn heisenberg_quotient_small_cases() {
        // n = 1: N_{2,2} is already h1, the ideal is zero
        let r1 = heisenberg_quotient(1).unwrap();
        assert!(r1.ideal.is_zero());
        assert_eq!(r1.quotient.dim(), 3);
        assert_eq!(r1.center_dim, 1);
        assert!(r1.derived_is_center && r1.form_nondegenerate);
        assert!(r1.symplectic_derivations_ok);

        // n = 2: Λ² has dim 6, the ideal dim 5, quotient dim 5
        let r2 = heisenberg_quotient(2).unwrap();
        assert_eq!(r2.free.dim(), 10);
        assert_eq!(r2.ideal.dim(), 5);
        assert_eq!(r2.quotient.dim(), 5);
        assert_eq!(r2.center_dim, 1);
        assert!(r2.derived_is_center && r2.form_nondegenerate);
        assert!(r2.symplectic_derivations_ok);
    }

    #[test]
    fn graph_quotient_fails_for_v1_generators() {
        // Λ²V(1) = V(0), s = V(1): no common weight
        let f = free_nilpotent(2, 3).unwrap();
        let ext = f.extend_sl2(&Sl2Action::irreducible(1)).unwrap();
        let err = nonhomogeneous_graph_quotient(
            &f,
            &ext,
            1,
            &one(),
            &Subspace::zero(5),
            None,
        )
        .unwrap_err();
        assert_eq!(err.weight, 1);
        assert_eq!(err.candidates_tried, 0);
    }

    #[test]
    fn graph_quotient_rejects_zero_lambda() {
        let f = free_nilpotent(2, 3).unwrap();
        let ext = f.extend_sl2(&Sl2Action::irreducible(1)).unwrap();
        let err = nonhomogeneous_graph_quotient(
            &f,
            &ext,
            1,
            &zero(),
            &Subspace::zero(5),
            None,
        )
        .unwrap_err();
        assert!(err.reason.contains("λ = 0"));
    }

    #[test]
    fn layers_of_the_universal_h1_algebra() {
        let g = glue(&fixtures::sl2(), &fixtures::heisenberg(1), &v1_on_h1()).unwrap();
        let report = verify_layers(&g).unwrap();
        assert!(report.pass);
        assert_eq!(report.layers.len(), 2);
        assert_eq!(report.layers[0].weights, vec![1]);
        assert_eq!(report.layers[1].weights, vec![0]);
        // 0 occurs in CG(1,1) = {2, 0}
    }

    #[test]
    fn layers_of_split_null_extension_are_vacuous() {
        let act = Sl2Action::irreducible(2);
        let rho = Representation::sl2(&act);
        let g = glue(&fixtures::sl2(), &LieAlgebra::abelian(3), &rho).unwrap();
        let report = verify_layers(&g).unwrap();
        assert!(report.pass);
        assert_eq!(report.layers.len(), 1);
    }

    #[test]
    fn cn_extension_of_dl8() {
        let n = fixtures::dl8();
        let z0 = unit_vec(8, 6); // e7 is central
        let ext = cn_extension(&n, &z0, 1).unwrap();
        assert_eq!(ext.algebra.dim(), 10);
        assert_eq!(ext.nilindex, 3);
        assert!(ext.symplectic_derivations_ok);
        let act = ext.sl2_block().unwrap();
        let mut w = act.decompose().unwrap().weights();
        w.sort_unstable();
        assert_eq!(w, vec![0, 0, 0, 0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn cn_extension_m_zero_returns_base() {
        let n = fixtures::dl8();
        let ext = cn_extension(&n, &unit_vec(8, 6), 0).unwrap();
        assert!(ext.algebra.same_structure(&n));
    }

    #[test]
    fn cn_extension_rejects_non_central() {
        let n = fixtures::dl8();
        assert!(matches!(
            cn_extension(&n, &unit_vec(8, 0), 1),
            Err(Error::NotCentral(_))
        ));
    }

    #[test]
    fn cn_extension_rejects_non_cn_base() {
        // h1 is not characteristically nilpotent
        let h = fixtures::heisenberg(1);
        assert!(cn_extension(&h, &unit_vec(3, 2), 1).is_err());
    }

    #[test]
    fn layers_of_the_bundled_52_dim_algebra() {
        // glue sl2 onto the repaired bundled algebra through the block
        // action and check the full layer filtration
        let raw = crate::fixtures::table2();
        let act = crate::fixtures::table2_action();
        let n = crate::repair::repair_equivariant(&raw, &act).unwrap().repaired;
        let g = glue(&crate::fixtures::sl2(), &n, &Representation::sl2(&act)).unwrap();
        let report = verify_layers(&g).unwrap();
        assert!(report.pass);
        assert_eq!(report.layers.len(), 3);
        assert_eq!(report.layers[0].weights, vec![10]);
        let mut w2 = report.layers[1].weights.clone();
        w2.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(w2, vec![18, 6]);
        assert_eq!(report.layers[2].weights, vec![14]);
        // degree-2 layer weights occur among the wedge-square weights
        for w in &report.layers[1].weights {
            assert!(crate::sl2::wedge2_weights(10).contains(w));
        }
    }

    #[test]
    fn homogeneity_of_block_sums() {
        let f = free_nilpotent(2, 3).unwrap();
        assert!(is_homogeneous_ideal(&f, &f.degree_subspace(2)));
        assert!(is_homogeneous_ideal(
            &f,
            &f.degree_subspace(2).sum(&f.degree_subspace(3)).unwrap()
        ));
        // a slanted line across degrees is not homogeneous
        let slanted = Subspace::from_rows(
            5,
            vec![vec_add(&unit_vec(5, 2), &unit_vec(5, 3))],
        );
        assert!(!is_homogeneous_ideal(&f, &slanted));
    }
}
