//! Root systems in orthogonal coordinates and the Weyl dimension formula,
//! plus the audit of the bundled module-structure table for free nilpotent
//! algebras of nilindex 2 and 3.
//!
//! Only the simple roots are hard-coded (standard realizations); the full
//! root system is generated by reflection closure and validated against
//! the classical positive-root counts.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rat::{rat, rat_int, zero, Rat};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl std::fmt::Display for CartanType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E6 => write!(f, "E6"),
            CartanType::E7 => write!(f, "E7"),
            CartanType::E8 => write!(f, "E8"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::G2 => write!(f, "G2"),
        }
    }
}

impl CartanType {
    pub fn rank(&self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => *n,
            CartanType::E6 => 6,
            CartanType::E7 => 7,
            CartanType::E8 => 8,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    /// Classical number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        match self {
            CartanType::A(n) => n * (n + 1) / 2,
            CartanType::B(n) | CartanType::C(n) => n * n,
            CartanType::D(n) => n * (n - 1),
            CartanType::E6 => 36,
            CartanType::E7 => 63,
            CartanType::E8 => 120,
            CartanType::F4 => 24,
            CartanType::G2 => 6,
        }
    }

    fn simple_roots(&self) -> Vec<Vec<Rat>> {
        fn e(dim: usize, i: usize) -> Vec<Rat> {
            let mut v = vec![zero(); dim];
            v[i] = crate::rat::one();
            v
        }
        fn diff(dim: usize, i: usize, j: usize) -> Vec<Rat> {
            let mut v = vec![zero(); dim];
            v[i] = crate::rat::one();
            v[j] = -crate::rat::one();
            v
        }
        match *self {
            CartanType::A(n) => (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
            CartanType::B(n) => {
                let mut out: Vec<Vec<Rat>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
                out.push(e(n, n - 1));
                out
            }
            CartanType::C(n) => {
                let mut out: Vec<Vec<Rat>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
                let mut last = e(n, n - 1);
                last[n - 1] = rat_int(2);
                out.push(last);
                out
            }
            CartanType::D(n) => {
                let mut out: Vec<Vec<Rat>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
                let mut last = e(n, n - 2);
                last[n - 1] = crate::rat::one();
                out.push(last);
                out
            }
            CartanType::E8 | CartanType::E7 | CartanType::E6 => {
                let mut alpha = Vec::with_capacity(8);
                let mut a1 = vec![rat(-1, 2); 8];
                a1[0] = rat(1, 2);
                a1[7] = rat(1, 2);
                alpha.push(a1);
                let mut a2 = vec![zero(); 8];
                a2[0] = crate::rat::one();
                a2[1] = crate::rat::one();
                alpha.push(a2);
                for i in 0..6 {
                    alpha.push(diff(8, i + 1, i));
                }
                let take = match self {
                    CartanType::E6 => 6,
                    CartanType::E7 => 7,
                    _ => 8,
                };
                alpha.truncate(take);
                alpha
            }
            CartanType::F4 => vec![
                diff(4, 1, 2),
                diff(4, 2, 3),
                e(4, 3),
                vec![rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2)],
            ],
            CartanType::G2 => {
                // ambient R^3, sum-zero hyperplane
                let mut a1 = vec![zero(); 3];
                a1[0] = crate::rat::one();
                a1[1] = -crate::rat::one();
                let mut a2 = vec![rat_int(-2); 3];
                a2[1] = crate::rat::one();
                a2[2] = crate::rat::one();
                vec![a1, a2]
            }
        }
    }
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut s = zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

/// Root data sufficient to evaluate the Weyl dimension formula.
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub simple_roots: Vec<Vec<Rat>>,
    pub positive_roots: Vec<Vec<Rat>>,
    pub fundamental_weights: Vec<Vec<Rat>>,
    /// Half-sum of the positive roots.
    pub rho: Vec<Rat>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Result<Self, Error> {
        let simple = cartan_type.simple_roots();
        let rank = simple.len();
        // generate all roots by reflection closure
        let mut roots: Vec<Vec<Rat>> = simple.clone();
        let mut frontier = simple.clone();
        while !frontier.is_empty() {
            let mut fresh = Vec::new();
            for r in &frontier {
                for s in &simple {
                    let coef = rat_int(2) * dot(r, s) / dot(s, s);
                    let img: Vec<Rat> = r
                        .iter()
                        .zip(s)
                        .map(|(a, b)| a - &coef * b)
                        .collect();
                    if !roots.contains(&img) && !fresh.contains(&img) {
                        fresh.push(img);
                    }
                }
            }
            roots.extend(fresh.iter().cloned());
            frontier = fresh;
        }
        // positivity: nonnegative coordinates in the simple-root basis
        let gram = crate::mat::Matrix::from_fn(rank, rank, |i, j| dot(&simple[i], &simple[j]));
        let mut positive_roots = Vec::new();
        for r in &roots {
            let rhs: Vec<Rat> = (0..rank).map(|i| dot(&simple[i], r)).collect();
            let coords = gram
                .solve(&rhs)?
                .ok_or_else(|| Error::Construction("root outside simple-root span".into()))?;
            if coords.iter().all(|c| !c.is_negative()) {
                positive_roots.push(r.clone());
            }
        }
        if positive_roots.len() != cartan_type.positive_root_count() {
            return Err(Error::Construction(format!(
                "{cartan_type}: generated {} positive roots, expected {}",
                positive_roots.len(),
                cartan_type.positive_root_count()
            )));
        }
        // fundamental weights: <w_i, a_j^v> = delta_ij inside span(simple)
        let m = crate::mat::Matrix::from_fn(rank, rank, |j, k| {
            rat_int(2) * dot(&simple[k], &simple[j]) / dot(&simple[j], &simple[j])
        });
        let dim = simple[0].len();
        let mut fundamental_weights = Vec::with_capacity(rank);
        for i in 0..rank {
            let mut rhs = vec![zero(); rank];
            rhs[i] = crate::rat::one();
            let coords = m
                .solve(&rhs)?
                .ok_or_else(|| Error::Construction("Cartan matrix is singular".into()))?;
            let mut w = vec![zero(); dim];
            for (k, c) in coords.iter().enumerate() {
                for (t, v) in simple[k].iter().enumerate() {
                    let add = c * v;
                    w[t] += add;
                }
            }
            fundamental_weights.push(w);
        }
        let mut rho = vec![zero(); dim];
        for r in &positive_roots {
            for (t, v) in r.iter().enumerate() {
                rho[t] += v;
            }
        }
        for v in rho.iter_mut() {
            *v /= rat_int(2);
        }
        Ok(RootSystem {
            cartan_type,
            simple_roots: simple,
            positive_roots,
            fundamental_weights,
            rho,
        })
    }

    /// Ambient vector of a weight given by coefficients on the fundamental
    /// weights.
    pub fn weight_vector(&self, lambda: &[usize]) -> Vec<Rat> {
        assert_eq!(lambda.len(), self.fundamental_weights.len());
        let dim = self.rho.len();
        let mut w = vec![zero(); dim];
        for (i, &c) in lambda.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (t, v) in self.fundamental_weights[i].iter().enumerate() {
                let add = rat_int(c as i64) * v;
                w[t] += add;
            }
        }
        w
    }

    /// `dim V(λ) = Π_{α>0} <λ+ρ, α> / <ρ, α>`, an exact integer.
    pub fn weyl_dim(&self, lambda: &[usize]) -> Result<BigInt, Error> {
        let lam = self.weight_vector(lambda);
        let lam_rho: Vec<Rat> = lam.iter().zip(&self.rho).map(|(a, b)| a + b).collect();
        let mut acc = Rat::one();
        for alpha in &self.positive_roots {
            let num = dot(&lam_rho, alpha);
            let den = dot(&self.rho, alpha);
            if den.is_zero() || num.is_zero() || num.is_negative() {
                return Err(Error::Construction(format!(
                    "weight is not dominant for {}",
                    self.cartan_type
                )));
            }
            acc *= num / den;
        }
        crate::rat::to_integer(&acc).ok_or_else(|| {
            Error::Construction("Weyl dimension formula gave a non-integer".into())
        })
    }
}

/// One summand `mult * V(λ)` in a table column; `λ` is given by
/// fundamental-weight coefficients (empty/all-zero means the trivial
/// module `k`).
pub type Summand = (usize, Vec<usize>);

/// A row of the module-structure table for `N(m, 2)` and `N(m, 3)`:
/// the generator module and the decompositions of `Λ²m`, `Λ³m` and
/// `s = (m ⊗ Λ²m) / Λ³m`.
pub struct Table1Row {
    pub cartan_type: CartanType,
    pub m_weight: Vec<usize>,
    pub wedge2: Vec<Summand>,
    pub wedge3: Vec<Summand>,
    pub s_col: Vec<Summand>,
}

/// One audited identity.
pub struct AuditLine {
    pub cartan_type: CartanType,
    pub row: String,
    pub column: &'static str,
    pub computed: BigInt,
    pub listed: BigInt,
}

impl AuditLine {
    pub fn ok(&self) -> bool {
        self.computed == self.listed
    }
}

impl std::fmt::Display for AuditLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {} {} computed={} listed={} {}",
            self.cartan_type,
            self.row,
            self.column,
            self.computed,
            self.listed,
            if self.ok() { "OK" } else { "MISMATCH" }
        )
    }
}

fn weight_name(lambda: &[usize]) -> String {
    if lambda.iter().all(|&c| c == 0) {
        return "k".into();
    }
    let parts: Vec<String> = lambda
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| {
            if c == 1 {
                format!("w{}", i + 1)
            } else {
                format!("{}w{}", c, i + 1)
            }
        })
        .collect();
    parts.join("+")
}

/// Audit one row: the three exact dimension identities
/// `Σ dim Λ² = C(D,2)`, `Σ dim Λ³ = C(D,3)`,
/// `Σ dim s = D·C(D,2) − C(D,3)` with `D = dim V(m_weight)`.
pub fn audit_row(row: &Table1Row) -> Result<Vec<AuditLine>, Error> {
    let rs = RootSystem::new(row.cartan_type)?;
    let d = rs.weyl_dim(&row.m_weight)?;
    let column_sum = |col: &[Summand]| -> Result<BigInt, Error> {
        let mut total = BigInt::zero();
        for (mult, lam) in col {
            let dim = if lam.iter().all(|&c| c == 0) {
                BigInt::one()
            } else {
                rs.weyl_dim(lam)?
            };
            total += BigInt::from(*mult) * dim;
        }
        Ok(total)
    };
    let choose2 = (&d * (&d - 1)) / 2;
    let choose3 = (&d * (&d - 1) * (&d - 2)) / 6;
    let s_expected = &d * &choose2 - &choose3;
    let row_name = format!("m=V({})", weight_name(&row.m_weight));
    Ok(vec![
        AuditLine {
            cartan_type: row.cartan_type,
            row: row_name.clone(),
            column: "wedge2",
            computed: choose2,
            listed: column_sum(&row.wedge2)?,
        },
        AuditLine {
            cartan_type: row.cartan_type,
            row: row_name.clone(),
            column: "wedge3",
            computed: choose3,
            listed: column_sum(&row.wedge3)?,
        },
        AuditLine {
            cartan_type: row.cartan_type,
            row: row_name,
            column: "s",
            computed: s_expected,
            listed: column_sum(&row.s_col)?,
        },
    ])
}

/// Shorthand for building weight vectors: `w(&[(1, 1), (2, 1)], rank)` is
/// `λ1 + λ2`.
fn w(parts: &[(usize, usize)], rank: usize) -> Vec<usize> {
    let mut v = vec![0usize; rank];
    for &(idx, coef) in parts {
        v[idx - 1] = coef;
    }
    v
}

/// The bundled table: module structure of free nilpotent algebras of
/// nilindex 2 and 3 over each listed generator module. Generic-rank rows
/// are instantiated at the two smallest admissible ranks.
pub fn table1_rows() -> Vec<Table1Row> {
    let mut rows = Vec::new();
    // A1: m = V(λ1), Λ² = k, Λ³ = 0, s = V(λ1)
    rows.push(Table1Row {
        cartan_type: CartanType::A(1),
        m_weight: w(&[(1, 1)], 1),
        wedge2: vec![(1, w(&[], 1))],
        wedge3: vec![],
        s_col: vec![(1, w(&[(1, 1)], 1))],
    });
    // A2, m = V(λ1)
    rows.push(Table1Row {
        cartan_type: CartanType::A(2),
        m_weight: w(&[(1, 1)], 2),
        wedge2: vec![(1, w(&[(2, 1)], 2))],
        wedge3: vec![(1, w(&[], 2))],
        s_col: vec![(1, w(&[(1, 1), (2, 1)], 2))],
    });
    // A2, m = V(λ2)
    rows.push(Table1Row {
        cartan_type: CartanType::A(2),
        m_weight: w(&[(2, 1)], 2),
        wedge2: vec![(1, w(&[(1, 1)], 2))],
        wedge3: vec![(1, w(&[], 2))],
        s_col: vec![(1, w(&[(1, 1), (2, 1)], 2))],
    });
    // A_n (n >= 3), m = V(λ1): instantiate at n = 3, 4
    for n in [3usize, 4] {
        rows.push(Table1Row {
            cartan_type: CartanType::A(n),
            m_weight: w(&[(1, 1)], n),
            wedge2: vec![(1, w(&[(2, 1)], n))],
            wedge3: vec![(1, w(&[(3, 1)], n))],
            s_col: vec![(1, w(&[(1, 1), (2, 1)], n))],
        });
    }
    // B3
    rows.push(Table1Row {
        cartan_type: CartanType::B(3),
        m_weight: w(&[(1, 1)], 3),
        wedge2: vec![(1, w(&[(2, 1)], 3))],
        wedge3: vec![(1, w(&[(3, 2)], 3))],
        s_col: vec![(1, w(&[(1, 1), (2, 1)], 3)), (1, w(&[(1, 1)], 3))],
    });
    // B_n (n >= 4): instantiate at n = 4, 5
    for n in [4usize, 5] {
        rows.push(Table1Row {
            cartan_type: CartanType::B(n),
            m_weight: w(&[(1, 1)], n),
            wedge2: vec![(1, w(&[(2, 1)], n))],
            wedge3: vec![(1, w(&[(3, 1)], n))],
            s_col: vec![(1, w(&[(1, 1), (2, 1)], n)), (1, w(&[(1, 1)], n))],
        });
    }
    // C2, m = V(λ1)
    rows.push(Table1Row {
        cartan_type: CartanType::C(2),
        m_weight: w(&[(1, 1)], 2),
        wedge2: vec![(1, w(&[(2, 1)], 2)), (1, w(&[], 2))],
        wedge3: vec![(1, w(&[(1, 1)], 2))],
        s_col: vec![(1, w(&[(1, 1), (2, 1)], 2)), (1, w(&[(1, 1)], 2))],
    });
    // C2, m = V(λ2)
    rows.push(Table1Row {
        cartan_type: CartanType::C(2),
        m_weight: w(&[(2, 1)], 2),
        wedge2: vec![(1, w(&[(1, 2)], 2))],
        wedge3: vec![(1, w(&[(1, 2)], 2))],
        s_col: vec![(1, w(&[(1, 2), (2, 1)], 2)), (1, w(&[(2, 1)], 2))],
    });
    // C_n (n >= 3): instantiate at n = 3, 4
    for n in [3usize, 4] {
        rows.push(Table1Row {
            cartan_type: CartanType::C(n),
            m_weight: w(&[(1, 1)], n),
            wedge2: vec![(1, w(&[(2, 1)], n)), (1, w(&[], n))],
            wedge3: vec![(1, w(&[(1, 1)], n)), (1, w(&[(3, 1)], n))],
            s_col: vec![(1, w(&[(1, 1), (2, 1)], n)), (1, w(&[(1, 1)], n))],
        });
    }
    // D4
    rows.push(Table1Row {
        cartan_type: CartanType::D(4),
        m_weight: w(&[(1, 1)], 4),
        wedge2: vec![(1, w(&[(2, 1)], 4))],
        wedge3: vec![(1, w(&[(3, 1), (4, 1)], 4))],
        s_col: vec![(1, w(&[(1, 1), (2, 1)], 4)), (1, w(&[(1, 1)], 4))],
    });
    // D_n (n >= 5): instantiate at n = 5, 6
    for n in [5usize, 6] {
        rows.push(Table1Row {
            cartan_type: CartanType::D(n),
            m_weight: w(&[(1, 1)], n),
            wedge2: vec![(1, w(&[(2, 1)], n))],
            wedge3: vec![(1, w(&[(3, 1)], n))],
            s_col: vec![(1, w(&[(1, 1), (2, 1)], n)), (1, w(&[(1, 1)], n))],
        });
    }
    // G2, m = V(λ1)
    rows.push(Table1Row {
        cartan_type: CartanType::G2,
        m_weight: w(&[(1, 1)], 2),
        wedge2: vec![(1, w(&[(1, 1)], 2)), (1, w(&[(2, 1)], 2))],
        wedge3: vec![(1, w(&[(1, 2)], 2)), (1, w(&[(1, 1)], 2)), (1, w(&[], 2))],
        s_col: vec![
            (1, w(&[(1, 1), (2, 1)], 2)),
            (1, w(&[(1, 2)], 2)),
            (1, w(&[(1, 1)], 2)),
            (1, w(&[(2, 1)], 2)),
        ],
    });
    // G2, m = V(λ2)
    rows.push(Table1Row {
        cartan_type: CartanType::G2,
        m_weight: w(&[(2, 1)], 2),
        wedge2: vec![(1, w(&[(1, 3)], 2)), (1, w(&[(2, 1)], 2))],
        wedge3: vec![
            (1, w(&[(1, 4)], 2)),
            (1, w(&[(1, 3)], 2)),
            (1, w(&[(1, 2)], 2)),
            (1, w(&[(2, 2)], 2)),
            (1, w(&[(2, 1)], 2)),
            (1, w(&[], 2)),
        ],
        s_col: vec![
            (1, w(&[(1, 3), (2, 1)], 2)),
            (1, w(&[(1, 2), (2, 1)], 2)),
            (1, w(&[(1, 1), (2, 1)], 2)),
            (1, w(&[(2, 2)], 2)),
            (1, w(&[(2, 1)], 2)),
            (1, w(&[(1, 3)], 2)),
            (1, w(&[(1, 2)], 2)),
        ],
    });
    // F4
    rows.push(Table1Row {
        cartan_type: CartanType::F4,
        m_weight: w(&[(1, 1)], 4),
        wedge2: vec![(1, w(&[(1, 1)], 4)), (1, w(&[(2, 1)], 4))],
        wedge3: vec![
            (1, w(&[(1, 2)], 4)),
            (1, w(&[(2, 1)], 4)),
            (1, w(&[(3, 2)], 4)),
            (1, w(&[(4, 2)], 4)),
            (1, w(&[], 4)),
        ],
        s_col: vec![
            (1, w(&[(1, 2)], 4)),
            (1, w(&[(1, 1)], 4)),
            (1, w(&[(2, 1)], 4)),
            (1, w(&[(4, 2)], 4)),
            (1, w(&[(1, 1), (2, 1)], 4)),
            (1, w(&[(1, 1), (4, 2)], 4)),
            (1, w(&[(3, 1), (4, 1)], 4)),
        ],
    });
    // E6
    rows.push(Table1Row {
        cartan_type: CartanType::E6,
        m_weight: w(&[(1, 1)], 6),
        wedge2: vec![(1, w(&[(3, 1)], 6))],
        wedge3: vec![(1, w(&[(4, 1)], 6))],
        s_col: vec![
            (1, w(&[(1, 1), (3, 1)], 6)),
            (1, w(&[(1, 1), (6, 1)], 6)),
            (1, w(&[(2, 1)], 6)),
        ],
    });
    // E7
    rows.push(Table1Row {
        cartan_type: CartanType::E7,
        m_weight: w(&[(1, 1)], 7),
        wedge2: vec![(1, w(&[(1, 1)], 7)), (1, w(&[(3, 1)], 7))],
        wedge3: vec![
            (1, w(&[(1, 2)], 7)),
            (1, w(&[(3, 1)], 7)),
            (1, w(&[(4, 1)], 7)),
            (1, w(&[(6, 1)], 7)),
            (1, w(&[], 7)),
        ],
        s_col: vec![
            (1, w(&[(1, 1), (3, 1)], 7)),
            (1, w(&[(1, 1), (6, 1)], 7)),
            (1, w(&[(2, 1), (7, 1)], 7)),
            (1, w(&[(1, 2)], 7)),
            (2, w(&[(1, 1)], 7)),
            (1, w(&[(3, 1)], 7)),
            (1, w(&[(6, 1)], 7)),
        ],
    });
    // E8 (with the footnote column)
    rows.push(Table1Row {
        cartan_type: CartanType::E8,
        m_weight: w(&[(1, 1)], 8),
        wedge2: vec![
            (1, w(&[(1, 1), (8, 1)], 8)),
            (1, w(&[(3, 1)], 8)),
            (1, w(&[(7, 1)], 8)),
            (1, w(&[(8, 1)], 8)),
        ],
        wedge3: vec![
            (1, w(&[(1, 2), (8, 1)], 8)),
            (1, w(&[(3, 1), (8, 1)], 8)),
            (1, w(&[(1, 1), (2, 1)], 8)),
            (1, w(&[(6, 1), (8, 1)], 8)),
            (2, w(&[(1, 1), (7, 1)], 8)),
            (2, w(&[(2, 1), (8, 1)], 8)),
            (2, w(&[(7, 1), (8, 1)], 8)),
            (3, w(&[(1, 1), (8, 1)], 8)),
            (2, w(&[(1, 1)], 8)),
            (1, w(&[(2, 1)], 8)),
            (2, w(&[(3, 1)], 8)),
            (1, w(&[(4, 1)], 8)),
            (1, w(&[(6, 1)], 8)),
            (3, w(&[(7, 1)], 8)),
            (3, w(&[(8, 1)], 8)),
            (1, w(&[(8, 1)], 8)),
        ],
        s_col: vec![
            (2, w(&[(5, 1)], 8)),
            (2, w(&[(1, 1), (8, 2)], 8)),
            (2, w(&[(1, 2)], 8)),
            (3, w(&[(7, 1), (8, 1)], 8)),
            (3, w(&[(6, 1)], 8)),
            (4, w(&[(2, 1)], 8)),
            (2, w(&[(8, 2)], 8)),
            (1, w(&[(1, 1), (3, 1)], 8)),
            (1, w(&[(1, 1), (6, 1)], 8)),
            (1, w(&[(2, 1), (7, 1)], 8)),
            (1, w(&[(1, 2), (8, 1)], 8)),
            (1, w(&[(3, 1), (8, 1)], 8)),
            (2, w(&[(1, 1), (2, 1)], 8)),
            (1, w(&[(6, 1), (8, 1)], 8)),
            (3, w(&[(1, 1), (7, 1)], 8)),
            (3, w(&[(2, 1), (8, 1)], 8)),
            (3, w(&[(3, 1)], 8)),
            (5, w(&[(1, 1), (8, 1)], 8)),
            (3, w(&[(1, 1)], 8)),
            (3, w(&[(7, 1)], 8)),
            (2, w(&[(8, 1)], 8)),
        ],
    });
    rows
}

/// Run the full audit, one line per identity.
pub fn table1_audit() -> Result<Vec<AuditLine>, Error> {
    let mut out = Vec::new();
    for row in table1_rows() {
        out.extend(audit_row(&row)?);
    }
    Ok(out)
}
