//! Numerical layer: isometries `t ∈ O(n)`, their planes `(𝕀, t)` in the
//! neutral space, Witt rebasing of transversal pairs, and the continuous
//! cover explorer.
//!
//! Coordinates of ℝⁿ'ⁿ are `(x, y)` with metric `B = diag(+1ₙ, −1ₙ)`;
//! `γ₂ᵢ₋₁` is `eᵢ` in the first block and `γ₂ᵢ` is `eᵢ` in the second.

mod explore;
mod frame;
mod matrix;
mod witt;

pub use explore::{explore_cover, strict_membership, ExploreReport};
pub use frame::{
    eigen_one_multiplicity, intersect_dim, is_null_plane, is_transversal, metric,
    mtnp_from_isometry, witt_vector_coords, NullFrame,
};
pub use matrix::{parse_matrices, sample_orthogonal, sample_orthogonal_with, OrthogonalMatrix};
pub use witt::{witt_rebase, WittBasis, WittResiduals};

/// Orthogonality tolerance at construction.
pub const CONSTRUCTION_TOL: f64 = 1e-9;
/// Tolerance for verification predicates.
pub const VERIFY_TOL: f64 = 1e-6;
/// Relative singular-value cutoff for rank decisions.
pub const RANK_CUTOFF: f64 = 1e-8;
