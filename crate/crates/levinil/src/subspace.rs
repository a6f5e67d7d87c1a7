//! Subspaces of `k^n` in canonical (RREF) form.
//!
//! Two subspaces are equal iff their canonical matrices are identical, so
//! equality of ideals, submodules, kernels and centers is a plain `==`.

use num_traits::Zero;

use crate::mat::{unit_vec, Matrix};
use crate::rat::{zero, Rat};
use crate::Error;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// RREF matrix, one basis vector per row, no zero rows.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} of k^{}, pivots {:?})",
            self.dim(),
            self.ambient,
            self.pivots
        )
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors, canonicalized.
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Rat>>) -> Self {
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        assert!(rows.iter().all(|r| r.len() == ambient));
        Subspace::from_matrix(Matrix::from_rows(rows))
    }

    /// Span of the rows of `m`, canonicalized.
    pub fn from_matrix(m: Matrix) -> Self {
        let ambient = m.cols();
        let (r, pivots) = m.rref();
        let dim = pivots.len();
        let basis = Matrix::from_fn(dim, ambient, |i, j| r.at(i, j).clone());
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    /// Span of coordinates `range` (a coordinate block).
    pub fn coordinate_block(ambient: usize, range: std::ops::Range<usize>) -> Self {
        let rows: Vec<Vec<Rat>> = range.clone().map(|i| unit_vec(ambient, i)).collect();
        Subspace {
            ambient,
            basis: if rows.is_empty() {
                Matrix::zeros(0, ambient)
            } else {
                Matrix::from_rows(rows)
            },
            pivots: range.collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.dim()).map(move |i| self.basis.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// `v` reduced modulo the subspace: pivot coordinates are eliminated.
    /// The result is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (j, b) in self.basis.row(row).iter().enumerate() {
                if !b.is_zero() {
                    let sub = &c * b;
                    w[j] -= sub;
                }
            }
        }
        w
    }

    pub fn contains_vec(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis_rows().all(|r| self.contains_vec(r))
    }

    /// Coordinates of `v` in this basis (read off the pivot columns), or
    /// `None` when `v` is outside the subspace.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// v1*b1 + ... from coordinates in this basis.
    pub fn from_coords(&self, coords: &[Rat]) -> Vec<Rat> {
        assert_eq!(coords.len(), self.dim());
        let mut v = vec![zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    let add = c * b;
                    v[j] += add;
                }
            }
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let mut rows: Vec<Vec<Rat>> = self.basis_rows().map(<[Rat]>::to_vec).collect();
        rows.extend(other.basis_rows().map(<[Rat]>::to_vec));
        Ok(Subspace::from_rows(self.ambient, rows))
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for r in self.basis_rows() {
            let mut row = r.to_vec();
            row.extend_from_slice(r);
            rows.push(row);
        }
        for r in other.basis_rows() {
            let mut row = r.to_vec();
            row.extend(vec![zero(); n]);
            rows.push(row);
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(n));
        }
        let (rr, pivots) = Matrix::from_rows(rows).rref();
        let mut inter_rows = Vec::new();
        for (row, &p) in pivots.iter().enumerate() {
            if p >= n {
                inter_rows.push(rr.row(row)[n..].to_vec());
            }
        }
        Ok(Subspace::from_rows(n, inter_rows))
    }

    /// Canonical complement of `self` inside `sup`: the `sup`-basis vectors
    /// whose pivots are not pivots of `self`. Requires `self ⊆ sup`.
    pub fn complement_within(&self, sup: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(sup)?;
        if !sup.contains(self) {
            return Err(Error::NotASubspace);
        }
        let rows: Vec<Vec<Rat>> = (0..sup.dim())
            .filter(|&i| !self.pivots.contains(&sup.pivots[i]))
            .map(|i| sup.basis.row(i).to_vec())
            .collect();
        Ok(Subspace::from_rows(self.ambient, rows))
    }

    /// Kernel of `m` as a subspace of its source space.
    pub fn kernel_of(m: &Matrix) -> Subspace {
        Subspace::from_matrix(m.kernel_basis())
    }

    /// Image of this subspace under `m` (applied to each basis vector).
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        let rows: Vec<Vec<Rat>> = self.basis_rows().map(|r| m.apply(r)).collect();
        Subspace::from_rows(m.rows(), rows)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), Error> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "ambient dims differ: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn e(n: usize, i: usize) -> Vec<Rat> {
        unit_vec(n, i)
    }

    #[test]
    fn intersect_line_with_line() {
        // span{e1+e2} ∩ span{e1} = 0
        let a = Subspace::from_rows(2, vec![vec![rat_int(1), rat_int(1)]]);
        let b = Subspace::from_rows(2, vec![e(2, 0)]);
        assert!(a.intersect(&b).unwrap().is_zero());
    }

    #[test]
    fn sum_of_axes() {
        let a = Subspace::from_rows(2, vec![e(2, 0)]);
        let b = Subspace::from_rows(2, vec![e(2, 1)]);
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(2));
    }

    #[test]
    fn complement_by_pivots() {
        let a = Subspace::from_rows(3, vec![e(3, 0)]);
        let c = a.complement_within(&Subspace::full(3)).unwrap();
        assert_eq!(c, Subspace::from_rows(3, vec![e(3, 1), e(3, 2)]));
        // direct sum property
        assert_eq!(a.sum(&c).unwrap(), Subspace::full(3));
        assert!(a.intersect(&c).unwrap().is_zero());
    }

    #[test]
    fn complement_requires_containment() {
        let a = Subspace::from_rows(2, vec![e(2, 0)]);
        let b = Subspace::from_rows(2, vec![e(2, 1)]);
        assert!(a.complement_within(&b).is_err());
    }

    #[test]
    fn canonical_equality_from_different_spans() {
        let a = Subspace::from_rows(
            3,
            vec![
                vec![rat_int(1), rat_int(1), rat_int(0)],
                vec![rat_int(0), rat_int(2), rat_int(2)],
            ],
        );
        let b = Subspace::from_rows(
            3,
            vec![
                vec![rat_int(1), rat_int(3), rat_int(2)],
                vec![rat_int(2), rat_int(2), rat_int(0)],
            ],
        );
        assert_eq!(a, b);
    }

    #[test]
    fn coords_round_trip() {
        let s = Subspace::from_rows(
            3,
            vec![vec![rat_int(1), rat_int(0), rat_int(2)], e(3, 1)],
        );
        let v = s.from_coords(&[rat_int(3), rat_int(-1)]);
        assert_eq!(s.coords(&v).unwrap(), vec![rat_int(3), rat_int(-1)]);
        assert_eq!(s.coords(&e(3, 2)), None);
    }
}
