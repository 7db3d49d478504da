//! Assignments as maximal totally null planes, clauses as totally null
//! planes, and the discrete cover of `×ⁿO(1)` induced by a formula.
//!
//! Sign convention: `ε = +1` at position `i` selects `pᵢ`, `ε = −1` selects
//! `qᵢ`. The all-`+1` vector is the plane `P`, the all-`−1` vector is `Q`.

mod cover;
mod plane;
mod psi;
mod sign;

pub use cover::{cover_check, covers, induced_patterns, witness_uncovered, CoverStats};
pub use plane::{
    compatibility_definitions, compatible, is_totally_null, mtnp_of_assignment, mtnp_plane,
    tnp_of_clause, TotallyNullPlane,
};
pub use psi::{check_intersection, psi_z_expansion, PsiExpansion};
pub use sign::{
    assignment_of_sign_vector, induced_pattern, parse_patterns, write_patterns, SignVector, Slot,
    TernaryPattern,
};
