//! Dense matrices over exact rationals: RREF, kernels, linear solves.
//!
//! Entries are stored row-major. Elimination skips zero coefficients, so
//! sparse inputs (structure constants, ladder operators) stay cheap even
//! through the generic dense interface.

use num_traits::Zero;

use crate::rat::{zero, Rat};
use crate::Error;

/// A `rows x cols` matrix of exact rationals. Dimensions are fixed at
/// creation; equality is entrywise.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Linear maps are plain matrices: `rows` is the target dimension and
/// `cols` the source dimension.
pub type LinearMap = Matrix;

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(crate::rat::format_rat).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, crate::rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Integer convenience constructor, mostly for tests.
    pub fn from_i64(rows: Vec<Vec<i64>>) -> Self {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(crate::rat::rat_int).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rat> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b;
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a -= b;
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            if !a.is_zero() {
                *a *= c;
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    let cur = &mut out.data[i * out.cols + j];
                    *cur += prod;
                }
            }
        }
        out
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in apply");
        let mut out = vec![zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = zero();
            for (j, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let a = self.at(i, j);
                if !a.is_zero() {
                    acc += a * x;
                }
            }
            out[i] = acc;
        }
        out
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        let mut t = zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        t
    }

    /// Row-major flattening, used to canonicalize bases of matrix spaces.
    pub fn vectorize(&self) -> Vec<Rat> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// The RREF of a matrix is unique, so this doubles as a canonical form
    /// for row spaces.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in c..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = {
                let p = m.at(r, c).clone();
                crate::rat::one() / p
            };
            for j in c..m.cols {
                let idx = r * m.cols + j;
                if !m.data[idx].is_zero() {
                    m.data[idx] *= &inv;
                }
            }
            // support of the pivot row, reused across eliminations
            let support: Vec<usize> = (c..m.cols).filter(|&j| !m.at(r, j).is_zero()).collect();
            for rr in 0..m.rows {
                if rr == r || m.at(rr, c).is_zero() {
                    continue;
                }
                let f = m.at(rr, c).clone();
                for &j in &support {
                    let sub = &f * m.at(r, j);
                    let idx = rr * m.cols + j;
                    m.data[idx] -= sub;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{ v : self * v = 0 }`, one vector per row, in RREF
    /// canonical form.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let n = self.cols;
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; n];
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = Some(row);
            }
            v
        };
        let free: Vec<usize> = (0..n).filter(|c| pivot_of_col[*c].is_none()).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![zero(); n];
            v[f] = crate::rat::one();
            for (row, &c) in pivots.iter().enumerate() {
                let entry = r.at(row, f);
                if !entry.is_zero() {
                    v[c] = -entry.clone();
                }
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Matrix::zeros(0, n);
        }
        // canonicalize: the free-column pattern is echelon-like but pivots
        // may not be leftmost
        let (m, _) = Matrix::from_rows(rows).rref();
        m
    }

    /// Solve `self * x = rhs`. Returns `None` when inconsistent; free
    /// variables are fixed to 0 so the answer is deterministic.
    pub fn solve(&self, rhs: &[Rat]) -> Result<Option<Vec<Rat>>, Error> {
        if rhs.len() != self.rows {
            return Err(Error::Dimension(format!(
                "solve: rhs length {} != rows {}",
                rhs.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![zero(); self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = r.at(row, self.cols).clone();
        }
        Ok(Some(x))
    }
}

/// v + w
pub fn vec_add(v: &[Rat], w: &[Rat]) -> Vec<Rat> {
    v.iter().zip(w).map(|(a, b)| a + b).collect()
}

/// v - w
pub fn vec_sub(v: &[Rat], w: &[Rat]) -> Vec<Rat> {
    v.iter().zip(w).map(|(a, b)| a - b).collect()
}

/// c * v
pub fn vec_scale(c: &Rat, v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|a| if a.is_zero() { zero() } else { c * a }).collect()
}

pub fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Standard basis vector `e_i` in dimension `n`.
pub fn unit_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![zero(); n];
    v[i] = crate::rat::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64(vec![vec![2, 4], vec![1, 2]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::from_i64(vec![vec![1, 2], vec![0, 0]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_identity_fixed() {
        let m = Matrix::identity(3);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_zero_row() {
        let m = Matrix::from_i64(vec![vec![0, 0]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, m);
        assert!(pivots.is_empty());
    }

    #[test]
    fn kernel_of_difference_functional() {
        // [1, -1] has kernel spanned by (1, 1)
        let m = Matrix::from_i64(vec![vec![1, -1]]);
        let k = m.kernel_basis();
        assert_eq!(k, Matrix::from_i64(vec![vec![1, 1]]));
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let k = Matrix::identity(4).kernel_basis();
        assert_eq!(k.rows(), 0);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = Matrix::zeros(2, 3).kernel_basis();
        assert_eq!(k, Matrix::identity(3));
    }

    #[test]
    fn solve_identity() {
        let m = Matrix::identity(2);
        let x = m.solve(&[rat_int(1), rat_int(2)]).unwrap().unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(2)]);
    }

    #[test]
    fn solve_underdetermined_fixes_free_vars() {
        // x + y = 2 with y free -> (2, 0)
        let m = Matrix::from_i64(vec![vec![1, 1]]);
        let x = m.solve(&[rat_int(2)]).unwrap().unwrap();
        assert_eq!(x, vec![rat_int(2), rat_int(0)]);
    }

    #[test]
    fn solve_inconsistent() {
        let m = Matrix::from_i64(vec![vec![0]]);
        assert_eq!(m.solve(&[rat_int(1)]).unwrap(), None);
    }

    #[test]
    fn mul_and_commutator() {
        let a = Matrix::from_i64(vec![vec![0, 1], vec![0, 0]]);
        let b = Matrix::from_i64(vec![vec![0, 0], vec![1, 0]]);
        let h = a.commutator(&b);
        assert_eq!(h, Matrix::from_i64(vec![vec![1, 0], vec![0, -1]]));
    }
}
