//! Exact symbolic engine for the Extended Fock Basis (EFB) fragment of the
//! Clifford algebra of the neutral space ℝⁿ'ⁿ.
//!
//! Two kinds of elements are supported:
//!
//! - [`EfbTerm`]: a single EFB basis element `ψ₁ψ₂⋯ψₙ` with
//!   `ψᵢ ∈ {qᵢpᵢ, pᵢqᵢ, pᵢ, qᵢ}` and an integer coefficient. Every such term
//!   is a simple spinor, annihilated by the maximal totally null plane
//!   returned by [`mtnp_of_spinor`].
//! - [`DiagonalElement`]: sparse integer combinations of products of the
//!   commuting idempotents `qᵢpᵢ`, `pᵢqᵢ` and the anticommutators
//!   `{qᵢ, pᵢ} = 𝟙`. This is the subalgebra where Boolean formulas live.
//!
//! Variable positions are 0-based internally.

mod diagonal;
mod split;
mod symbol;
mod term;

pub use diagonal::{
    diag_mul, identity_element, omega_element, DiagSymbol, DiagonalElement, Pattern,
    DEFAULT_EXPANSION_LIMIT,
};
pub use split::{is_zero, SplitStats};
pub use symbol::{EfbSymbol, NullKind, WittVector};
pub use term::{annihilates, mtnp_of_spinor, vector_action, EfbTerm};

/// Largest `n` the bit-packed representations support.
pub const MAX_VARIABLES: usize = 64;

pub(crate) fn check_dimension(n: usize) -> crate::Result<()> {
    if n == 0 {
        Err(crate::Error::EmptyDimension)
    } else if n > MAX_VARIABLES {
        Err(crate::Error::TooManyVariables {
            n,
            max: MAX_VARIABLES,
        })
    } else {
        Ok(())
    }
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
