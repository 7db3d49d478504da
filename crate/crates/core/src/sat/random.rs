use rand::seq::index::sample;
use rand::Rng;

use super::{Clause, CnfFormula, Literal};

/// A clause over `width` distinct variables with random signs.
pub fn random_clause<R: Rng + ?Sized>(n: usize, width: usize, rng: &mut R) -> Clause {
    assert!(width >= 1 && width <= n, "clause width {width} for n = {n}");
    let lits = sample(rng, n, width)
        .into_iter()
        .map(|var| Literal {
            var,
            negated: rng.random_bool(0.5),
        })
        .collect();
    Clause::new(lits).expect("nonempty")
}

/// Uniform random k-SAT with `m` clauses.
pub fn random_ksat<R: Rng + ?Sized>(n: usize, m: usize, k: usize, rng: &mut R) -> CnfFormula {
    let clauses = (0..m).map(|_| random_clause(n, k, rng)).collect();
    CnfFormula::new(n, clauses).expect("variables in range")
}

/// Random formula with clause widths drawn uniformly from `1..=max_width`.
pub fn random_formula<R: Rng + ?Sized>(
    n: usize,
    m: usize,
    max_width: usize,
    rng: &mut R,
) -> CnfFormula {
    let max_width = max_width.min(n);
    let clauses = (0..m)
        .map(|_| {
            let w = rng.random_range(1..=max_width);
            random_clause(n, w, rng)
        })
        .collect();
    CnfFormula::new(n, clauses).expect("variables in range")
}
