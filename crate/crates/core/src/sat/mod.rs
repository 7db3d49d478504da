//! CNF formulas, the DIMACS front end and the algebraic encoding
//! `S = ∏ⱼ (𝟙 − zⱼ)`.

mod cnf;
mod dimacs;
mod encode;
mod random;

pub use cnf::{Assignment, Clause, CnfFormula, Literal, SourceMeta};
pub use dimacs::{parse_dimacs, serialize_dimacs};
pub use encode::{
    check_algebraic, count_models, encode_clause, encode_formula, encode_formula_with,
    is_unsatisfiable, models, models_with_limit, substitute, AlgebraicVerdict, ClauseOrder,
    EncodeOptions, EncodeStats, DEFAULT_MODEL_LIMIT, DEFAULT_TERM_BUDGET,
};
pub use random::{random_clause, random_formula, random_ksat};
