//! Boolean satisfiability in the Clifford algebra of the neutral space ℝⁿ'ⁿ
//! and in the orthogonal group `O(n)`.
//!
//! A CNF formula `C₁ ∧ ⋯ ∧ C_m` is encoded as the idempotent
//! `S = ∏ⱼ (𝟙 − zⱼ)`, where `zⱼ` is the clause's falsifying partial
//! assignment written with `ρᵢ ↦ qᵢpᵢ` and `ρ̄ᵢ ↦ pᵢqᵢ`. The formula is
//! unsatisfiable exactly when `S = 0`. The same question is answered
//! geometrically, as whether the diagonal isometries induced by the clauses
//! cover `×ⁿO(1)`, and both routes are checked against truth tables, DPLL and
//! an exact matrix representation of the algebra.
//!
//! - [`clifford`]: EFB terms, diagonal elements, the zero test.
//! - [`sat`]: DIMACS, the encoding, model extraction.
//! - [`geometry`]: null planes of clauses and assignments, the cover test.
//! - [`orthogonal`]: `O(n)`, planes `(𝕀, t)`, Witt rebasing.
//! - [`oracle`]: brute force, DPLL, gamma matrices.

pub mod acceptance;
pub mod cli;
pub mod clifford;
mod error;
pub mod geometry;
pub mod oracle;
pub mod orthogonal;
pub mod sat;

pub use error::{Error, Result};
