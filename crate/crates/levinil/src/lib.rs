//! Exact-arithmetic toolkit for finite-dimensional nilpotent Lie algebras
//! and their Levi extensions.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point in the core. The main pieces:
//!
//! - [`rat`], [`mat`], [`subspace`]: exact scalars, dense rational linear
//!   algebra (RREF, kernels, solves) and canonical-form subspaces.
//! - [`lie`]: structure-constant Lie algebras with Jacobi verification,
//!   central series, derivation algebras, Killing form, ideals/quotients.
//! - [`fixtures`]: Heisenberg, filiform, the 8-dimensional
//!   characteristically nilpotent algebra, and the bundled 52-dimensional
//!   non-quasi-cyclic algebra with its block sl2 action.
//! - [`freenil`]: free nilpotent Lie algebras on Hall bases, natural
//!   homomorphisms onto nilpotent targets, derivation extensions of linear
//!   maps, and explicit wedge models in nilindex 2 and 3.
//! - [`sl2`]: explicit sl2 actions, weight spaces, highest-weight
//!   decomposition, Clebsch-Gordan.
//! - [`levi`]: gluing semisimple algebras onto nilpotent radicals,
//!   invariant-ideal quotients of free nilpotent algebras, Heisenberg
//!   quotients, graph-ideal (non-quasi-cyclic) constructions, layer checks,
//!   and central extensions of characteristically nilpotent algebras.
//! - [`weyl`]: root systems and the Weyl dimension formula, plus the
//!   bundled module-structure table audit.
//! - [`files`]: the `lieconst 1` / `sl2act 1` / `linmap 1` text formats.
//! - [`repair`]: localization and unique equivariant repair of defective
//!   structure constants.

pub mod fixtures;
pub mod files;
pub mod freenil;
pub mod levi;
pub mod lie;
pub mod mat;
pub mod rat;
pub mod repair;
pub mod sl2;
pub mod subspace;
pub mod weyl;

pub use lie::{LieAlgebra, MatrixLieInfo};
pub use mat::{LinearMap, Matrix};
pub use rat::Rat;
pub use sl2::{Sl2Action, Sl2Decomposition};
pub use subspace::Subspace;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("subspace is not contained where required")]
    NotASubspace,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("map is not a derivation")]
    NotADerivation,
    #[error("not a Lie algebra homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("matrices do not satisfy the sl2 relations")]
    NotAnSl2Action,
    #[error("H is not diagonalizable with integer eigenvalues")]
    NotAnAlgebraicSl2Action,
    #[error("structure constants are not graded at ({i},{j}) -> {k}")]
    NotGraded { i: usize, j: usize, k: usize },
    #[error("central element required: {0}")]
    NotCentral(String),
    #[error("nilindex collapsed: the quotient loses the top central term")]
    NilindexCollapsed,
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
