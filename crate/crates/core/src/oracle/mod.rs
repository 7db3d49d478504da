//! Independent ground truth: truth-table SAT, a small DPLL solver and an
//! exact matrix representation of the Clifford algebra.

mod brute;
mod dpll;
mod gamma;

pub use brute::{brute_force, BruteForce, BRUTE_FORCE_LIMIT};
pub use dpll::{dpll, DpllResult};
pub use gamma::{build_gamma, Dyadic, DyadicMatrix, GammaRep, GAMMA_LIMIT};
