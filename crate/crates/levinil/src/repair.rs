//! Localization and repair of structure constants that break sl2
//! equivariance.
//!
//! Verification flags every structure constant that appears in a violated
//! Leibniz equation; those entries become unknowns, all other entries stay
//! fixed, and the full set of equivariance equations touching the unknowns
//! is solved exactly. The repair is emitted as a diff and is only accepted
//! when the system has a unique solution — nothing is patched silently.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::lie::LieAlgebra;
use crate::mat::Matrix;
use crate::rat::{zero, Rat};
use crate::sl2::{equivariance_violations, EquivarianceViolation, Sl2Action};
use crate::Error;

/// One corrected structure constant (0-based indices, `i < j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub old: Rat,
    pub new: Rat,
}

pub struct RepairOutcome {
    pub violations: Vec<EquivarianceViolation>,
    pub flagged: Vec<(usize, usize, usize)>,
    pub diff: Vec<DiffEntry>,
    pub repaired: LieAlgebra,
}

/// Canonical variable key for `c(a, b, k)`: ordered pair plus sign.
fn var_key(a: usize, b: usize, k: usize) -> Option<((usize, usize, usize), bool)> {
    match a.cmp(&b) {
        std::cmp::Ordering::Less => Some(((a, b, k), false)),
        std::cmp::Ordering::Greater => Some(((b, a, k), true)),
        std::cmp::Ordering::Equal => None,
    }
}

/// The variables (with signs) appearing in equation `(m, i, j, t)`:
/// `Σ_k' m[t,k'] c(i,j,k') − Σ_i' m[i',i] c(i',j,t) − Σ_j' m[j',j] c(i,j',t)`.
fn equation_terms(
    m: &Matrix,
    i: usize,
    j: usize,
    t: usize,
) -> Vec<((usize, usize, usize), bool, Rat)> {
    let n = m.rows();
    let mut terms = Vec::new();
    for kp in 0..n {
        let c = m.at(t, kp);
        if !c.is_zero() {
            if let Some((key, neg)) = var_key(i, j, kp) {
                terms.push((key, neg, c.clone()));
            }
        }
    }
    for ip in 0..n {
        let c = m.at(ip, i);
        if !c.is_zero() {
            if let Some((key, neg)) = var_key(ip, j, t) {
                terms.push((key, neg, -c.clone()));
            }
        }
    }
    for jp in 0..n {
        let c = m.at(jp, j);
        if !c.is_zero() {
            if let Some((key, neg)) = var_key(i, jp, t) {
                terms.push((key, neg, -c.clone()));
            }
        }
    }
    terms
}

/// Attempt to repair `alg` so that the bracket is equivariant under `act`.
pub fn repair_equivariant(alg: &LieAlgebra, act: &Sl2Action) -> Result<RepairOutcome, Error> {
    let violations = equivariance_violations(act, alg)?;
    if violations.is_empty() {
        return Ok(RepairOutcome {
            violations,
            flagged: Vec::new(),
            diff: Vec::new(),
            repaired: alg.clone(),
        });
    }
    let n = alg.dim();
    // flag every entry appearing in a violated equation component
    let mut flagged: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
    for v in &violations {
        let m = match v.sym {
            "H" => act.h(),
            "E" => act.e(),
            _ => act.f(),
        };
        for (t, r) in v.residual.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            for (key, _, _) in equation_terms(m, v.i, v.j, t) {
                flagged.insert(key);
            }
        }
    }
    // collect every equation that touches a flagged variable
    let mut equations: BTreeSet<(usize, usize, usize, usize)> = BTreeSet::new();
    let mats = [act.h(), act.e(), act.f()];
    for &(a, b, k) in &flagged {
        for (mi, m) in mats.iter().enumerate() {
            // LHS occurrences: equation (m, a, b, t) for t with m[t,k] != 0
            for t in 0..n {
                if !m.at(t, k).is_zero() {
                    equations.insert((mi, a, b, t));
                }
            }
            // second-term occurrences: equation (m, i, b, k) when m[a,i] != 0,
            // and (m, b, i, k)-style pairs through antisymmetry
            for i in 0..n {
                if !m.at(a, i).is_zero()
                    && i != b {
                        equations.insert((mi, i.min(b), i.max(b), k));
                    }
                if !m.at(b, i).is_zero()
                    && i != a {
                        equations.insert((mi, i.min(a), i.max(a), k));
                    }
            }
        }
    }
    let vars: Vec<(usize, usize, usize)> = flagged.iter().copied().collect();
    let var_index: BTreeMap<(usize, usize, usize), usize> =
        vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    for &(mi, i, j, t) in &equations {
        let m = mats[mi];
        let mut row = vec![zero(); vars.len()];
        let mut constant = zero();
        let mut touches_flagged = false;
        for (key, neg, coef) in equation_terms(m, i, j, t) {
            let signed = if neg { -coef } else { coef };
            if let Some(&vi) = var_index.get(&key) {
                row[vi] += signed;
                touches_flagged = true;
            } else {
                let cur = alg.c(key.0, key.1, key.2);
                if !cur.is_zero() {
                    constant += signed * cur;
                }
            }
        }
        if touches_flagged {
            rows.push(row);
            rhs.push(-constant);
        }
    }
    if rows.is_empty() {
        return Err(Error::Construction(
            "violations found but no constraining equations".into(),
        ));
    }
    let a = Matrix::from_rows(rows);
    let solution = a
        .solve(&rhs)?
        .ok_or_else(|| Error::Construction("repair system is inconsistent".into()))?;
    if a.rank() < vars.len() {
        return Err(Error::Construction(format!(
            "repair system is underdetermined: {} unknowns, rank {}",
            vars.len(),
            a.rank()
        )));
    }
    let mut repaired = alg.clone();
    let mut diff = Vec::new();
    for (vi, &(i, j, k)) in vars.iter().enumerate() {
        let old = alg.c(i, j, k);
        let new = solution[vi].clone();
        if old != new {
            // add_term accumulates: shift by (new - old)
            repaired.add_term(i, j, k, &new - &old)?;
            diff.push(DiffEntry { i, j, k, old, new });
        }
    }
    // the fix must actually restore equivariance
    let residual_violations = equivariance_violations(act, &repaired)?;
    if !residual_violations.is_empty() {
        return Err(Error::Construction(format!(
            "repair left {} equivariance violations",
            residual_violations.len()
        )));
    }
    Ok(RepairOutcome {
        violations,
        flagged: vars,
        diff,
        repaired,
    })
}
