use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::{Assignment, Clause, CnfFormula};
use crate::clifford::{check_dimension, DiagSymbol, DiagonalElement, Pattern, SplitStats};
use crate::{Error, Result};

pub const DEFAULT_TERM_BUDGET: usize = 1 << 20;
pub const DEFAULT_MODEL_LIMIT: usize = 20;

/// Order in which the factors `(𝟙 − zⱼ)` are multiplied.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClauseOrder {
    /// Clause order of the input.
    #[default]
    Given,
    /// Clauses over frequently occurring variables first.
    Activity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EncodeOptions {
    pub budget: usize,
    pub order: ClauseOrder,
}

impl Default for EncodeOptions {
    fn default() -> Self {
        EncodeOptions {
            budget: DEFAULT_TERM_BUDGET,
            order: ClauseOrder::Given,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EncodeStats {
    pub factors: usize,
    pub peak_terms: usize,
    pub final_terms: usize,
}

/// `zⱼ = ρ̄ⱼ₁ ρ̄ⱼ₂ ⋯ ρ̄ⱼₖ`: the clause's unique falsifying partial assignment.
///
/// A positive literal ρ contributes `PQ` at its position, a negated one `QP`.
pub fn encode_clause(c: &Clause, n: usize) -> Result<DiagonalElement> {
    DiagonalElement::from_pattern(n, clause_pattern(c, n)?, 1)
}

pub(crate) fn clause_pattern(c: &Clause, n: usize) -> Result<Pattern> {
    check_dimension(n)?;
    if c.is_tautology() {
        return Err(Error::TautologicalClause);
    }
    let mut p = Pattern::IDENTITY;
    for l in c.literals() {
        if l.var >= n {
            return Err(Error::IndexOutOfRange { index: l.var, n });
        }
        p = p.with(
            l.var,
            if l.negated {
                DiagSymbol::QP
            } else {
                DiagSymbol::PQ
            },
        );
    }
    Ok(p)
}

/// `S = ∏ⱼ (𝟙 − zⱼ)` with the default options.
pub fn encode_formula(f: &CnfFormula) -> Result<DiagonalElement> {
    encode_formula_with(f, &EncodeOptions::default()).map(|(s, _)| s)
}

pub fn encode_formula_with(
    f: &CnfFormula,
    opts: &EncodeOptions,
) -> Result<(DiagonalElement, EncodeStats)> {
    let n = f.n();
    check_dimension(n)?;
    let mut stats = EncodeStats::default();
    if f.has_empty_clause() {
        return Ok((DiagonalElement::zero(n)?, stats));
    }
    let mut s = DiagonalElement::identity(n)?;
    stats.peak_terms = 1;
    for c in ordered(f, opts.order) {
        let z = clause_pattern(c, n)?;
        s = s.mul_complement(z, opts.budget)?;
        stats.factors += 1;
        stats.peak_terms = stats.peak_terms.max(s.len());
        if s.is_empty() {
            break;
        }
    }
    stats.final_terms = s.len();
    Ok((s, stats))
}

fn ordered(f: &CnfFormula, order: ClauseOrder) -> Vec<&Clause> {
    let mut cs: Vec<&Clause> = f.effective_clauses().collect();
    if order == ClauseOrder::Activity {
        let mut activity = vec![0usize; f.n()];
        for c in &cs {
            for l in c.literals() {
                activity[l.var] += 1;
            }
        }
        let score = |c: &Clause| -> usize { c.literals().iter().map(|l| activity[l.var]).sum() };
        // stable: ties keep input order
        cs.sort_by_key(|c| std::cmp::Reverse(score(c)));
    }
    cs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraicVerdict {
    pub unsat: bool,
    pub encode: EncodeStats,
    pub split: SplitStats,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

/// Build `S` and zero-test it.
pub fn check_algebraic(f: &CnfFormula, opts: &EncodeOptions) -> Result<AlgebraicVerdict> {
    let start = Instant::now();
    let (s, encode) = encode_formula_with(f, opts)?;
    let (unsat, split) = crate::clifford::is_zero(&s);
    Ok(AlgebraicVerdict {
        unsat,
        encode,
        split,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// `S = 0`.
pub fn is_unsatisfiable(f: &CnfFormula) -> Result<bool> {
    check_algebraic(f, &EncodeOptions::default()).map(|v| v.unsat)
}

/// Coefficient of the primitive idempotent of `σ` in `a`, i.e. the product
/// `σ · a` read as a multiple of `σ`.
pub fn substitute(sigma: &Assignment, a: &DiagonalElement) -> Result<BigInt> {
    a.eval_at(sigma)
}

/// Satisfying assignments, read off the primitive expansion of `S`.
pub fn models(f: &CnfFormula) -> Result<Vec<Assignment>> {
    models_with_limit(f, DEFAULT_MODEL_LIMIT)
}

pub fn models_with_limit(f: &CnfFormula, limit: usize) -> Result<Vec<Assignment>> {
    if f.n() > limit {
        return Err(Error::EnumerationLimit { n: f.n(), limit });
    }
    let s = encode_formula(f)?.expand_primitive_with(limit)?;
    let mut out: Vec<Assignment> = s
        .terms()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, _)| Assignment::from_bits(f.n(), p.value))
        .collect();
    out.sort();
    Ok(out)
}

/// `Σ_σ eval(S, σ)`, computed term by term without enumeration.
pub fn count_models(f: &CnfFormula) -> Result<BigInt> {
    Ok(encode_formula(f)?.total())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::parse_dimacs;

    fn all(n: usize) -> impl Iterator<Item = Assignment> {
        (0..1u64 << n).map(move |b| Assignment::from_bits(n, b))
    }

    #[test]
    fn clause_patterns() {
        let c = Clause::from_dimacs(&[1, 2]).unwrap();
        assert_eq!(
            encode_clause(&c, 2)
                .unwrap()
                .terms()
                .next()
                .unwrap()
                .0
                .symbols(2),
            vec![DiagSymbol::PQ, DiagSymbol::PQ]
        );
        let c = Clause::from_dimacs(&[-1]).unwrap();
        assert_eq!(
            encode_clause(&c, 1)
                .unwrap()
                .terms()
                .next()
                .unwrap()
                .0
                .symbols(1),
            vec![DiagSymbol::QP]
        );
        let c = Clause::from_dimacs(&[1, -2, 3]).unwrap();
        let z = encode_clause(&c, 4).unwrap();
        assert_eq!(
            z.terms().next().unwrap().0.symbols(4),
            vec![
                DiagSymbol::PQ,
                DiagSymbol::QP,
                DiagSymbol::PQ,
                DiagSymbol::Id
            ]
        );
        // z = 1 exactly on the falsifying assignments (F,T,F,·)
        for s in all(4) {
            let falsifies = !s.get(0) && s.get(1) && !s.get(2);
            assert_eq!(z.eval_at(&s).unwrap(), BigInt::from(falsifies as i32));
        }
        let taut = Clause::from_dimacs(&[1, -1]).unwrap();
        assert_eq!(encode_clause(&taut, 1), Err(Error::TautologicalClause));
    }

    #[test]
    fn empty_product_is_identity() {
        let f = CnfFormula::new(3, vec![]).unwrap();
        let s = encode_formula(&f).unwrap();
        assert_eq!(s, DiagonalElement::identity(3).unwrap());
        assert_eq!(count_models(&f).unwrap(), BigInt::from(8));
        assert_eq!(models(&f).unwrap().len(), 8);
    }

    #[test]
    fn contradictory_units_vanish() {
        let f = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n").unwrap();
        assert!(encode_formula(&f).unwrap().is_zero());
        assert!(is_unsatisfiable(&f).unwrap());
        assert!(models(&f).unwrap().is_empty());
    }

    #[test]
    fn four_clause_instance() {
        let f = parse_dimacs("c x\np cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0").unwrap();
        let s = encode_formula(&f).unwrap();
        for a in all(2) {
            assert_eq!(s.eval_at(&a).unwrap(), BigInt::zero());
        }
        assert!(is_unsatisfiable(&f).unwrap());
    }

    #[test]
    fn single_clause_substitution() {
        let f = parse_dimacs("p cnf 2 1\n1 2 0\n").unwrap();
        let s = encode_formula(&f).unwrap();
        assert!(!is_unsatisfiable(&f).unwrap());
        let tt = Assignment::new(vec![true, true]);
        let ff = Assignment::new(vec![false, false]);
        assert_eq!(substitute(&tt, &s).unwrap(), BigInt::from(1));
        assert_eq!(substitute(&ff, &s).unwrap(), BigInt::from(0));
        assert_eq!(count_models(&f).unwrap(), BigInt::from(3));
        assert!(substitute(&Assignment::new(vec![true]), &s).is_err());
    }

    #[test]
    fn naive_product_agrees() {
        let f = parse_dimacs("p cnf 4 4\n1 -2 0\n2 3 -4 0\n-1 4 0\n-3 0\n").unwrap();
        let one = DiagonalElement::identity(4).unwrap();
        let mut naive = one.clone();
        for c in f.clauses() {
            let z = encode_clause(c, 4).unwrap();
            naive = naive.mul(&(&one - &z)).unwrap();
        }
        let s = encode_formula(&f).unwrap();
        assert_eq!(s, naive);
        assert!(s.is_disjoint_unit_sum());
    }

    #[test]
    fn activity_order_same_element() {
        let f = parse_dimacs("p cnf 4 5\n1 -2 0\n2 3 -4 0\n-1 4 0\n-3 0\n3 4 1 0\n").unwrap();
        let given = encode_formula(&f).unwrap();
        let opts = EncodeOptions {
            order: ClauseOrder::Activity,
            ..Default::default()
        };
        let (act, _) = encode_formula_with(&f, &opts).unwrap();
        assert_eq!(given, act);
    }

    #[test]
    fn budget_guard() {
        let f = parse_dimacs("p cnf 12 3\n1 2 3 4 5 6 0\n7 8 9 10 11 12 0\n-1 -7 0\n").unwrap();
        let opts = EncodeOptions {
            budget: 4,
            ..Default::default()
        };
        assert!(matches!(
            encode_formula_with(&f, &opts),
            Err(Error::TermBudget { budget: 4 })
        ));
    }

    #[test]
    fn model_limit() {
        let f = CnfFormula::new(30, vec![]).unwrap();
        assert!(matches!(models(&f), Err(Error::EnumerationLimit { .. })));
        // counting needs no enumeration
        assert_eq!(count_models(&f).unwrap(), BigInt::from(1u64 << 30));
    }
}
