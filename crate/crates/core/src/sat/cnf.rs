use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// A literal over a 0-based variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            negated: false,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    /// From a signed 1-based DIMACS literal. Zero is not a literal.
    pub fn from_dimacs(lit: i64) -> Option<Self> {
        if lit == 0 {
            return None;
        }
        Some(Literal {
            var: lit.unsigned_abs() as usize - 1,
            negated: lit < 0,
        })
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.negated {
            -v
        } else {
            v
        }
    }

    pub fn is_true_under(self, value: bool) -> bool {
        value != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// A disjunction of literals, sorted by variable with duplicates removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    /// Fails on an empty literal list. Duplicate literals are merged; a
    /// clause containing both polarities of a variable is kept and reported
    /// by [`Clause::is_tautology`].
    pub fn new(mut literals: Vec<Literal>) -> Result<Self> {
        if literals.is_empty() {
            return Err(Error::parse(0, "empty clause"));
        }
        literals.sort();
        literals.dedup();
        Ok(Clause { literals })
    }

    pub fn from_dimacs(lits: &[i64]) -> Result<Self> {
        let literals = lits
            .iter()
            .map(|&l| Literal::from_dimacs(l).ok_or_else(|| Error::parse(0, "literal 0")))
            .collect::<Result<Vec<_>>>()?;
        Self::new(literals)
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn width(&self) -> usize {
        self.literals.len()
    }

    pub fn is_tautology(&self) -> bool {
        self.literals.windows(2).any(|w| w[0].var == w[1].var)
    }

    pub fn max_var(&self) -> usize {
        self.literals.iter().map(|l| l.var).max().unwrap_or(0)
    }

    pub fn is_satisfied_by(&self, a: &Assignment) -> bool {
        self.literals
            .iter()
            .any(|l| l.is_true_under(a.values[l.var]))
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.literals {
            write!(f, "{l} ")?;
        }
        write!(f, "0")
    }
}

/// Header and diagnostics carried over from the DIMACS source.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SourceMeta {
    pub declared_clauses: usize,
    pub comments: Vec<String>,
    pub warnings: Vec<String>,
}

/// `S ≡ C₁ ∧ C₂ ∧ ⋯ ∧ C_m` over `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    n: usize,
    clauses: Vec<Clause>,
    has_empty_clause: bool,
    pub meta: SourceMeta,
}

impl CnfFormula {
    pub fn new(n: usize, clauses: Vec<Clause>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDimension);
        }
        for c in &clauses {
            if c.max_var() >= n {
                return Err(Error::IndexOutOfRange {
                    index: c.max_var(),
                    n,
                });
            }
        }
        Ok(CnfFormula {
            n,
            clauses,
            has_empty_clause: false,
            meta: SourceMeta::default(),
        })
    }

    /// Convenience constructor from signed 1-based literals.
    pub fn from_dimacs_clauses(n: usize, clauses: &[&[i64]]) -> Result<Self> {
        let cs = clauses
            .iter()
            .map(|c| Clause::from_dimacs(c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, cs)
    }

    pub(crate) fn set_empty_clause(&mut self) {
        self.has_empty_clause = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// The source contained an empty clause, making the formula UNSAT.
    pub fn has_empty_clause(&self) -> bool {
        self.has_empty_clause
    }

    /// Clauses that carry a falsifying assignment (non-tautological).
    pub fn effective_clauses(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.is_tautology())
    }

    /// Standard Boolean semantics.
    pub fn evaluate(&self, a: &Assignment) -> bool {
        assert_eq!(a.len(), self.n, "assignment width");
        !self.has_empty_clause && self.clauses.iter().all(|c| c.is_satisfied_by(a))
    }

    pub fn with_clauses(&self, clauses: Vec<Clause>) -> Self {
        CnfFormula {
            n: self.n,
            clauses,
            has_empty_clause: self.has_empty_clause,
            meta: self.meta.clone(),
        }
    }
}

/// A total truth assignment.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    /// Bit `i` of `bits` is the value of variable `i`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        Assignment {
            values: (0..n).map(|i| bits >> i & 1 == 1).collect(),
        }
    }

    /// Packed form; only meaningful for `n ≤ 64`.
    pub fn bits(&self) -> u64 {
        self.values
            .iter()
            .enumerate()
            .take(64)
            .fold(0, |acc, (i, &v)| acc | (u64::from(v) << i))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn get(&self, var: usize) -> bool {
        self.values[var]
    }

    /// DIMACS-style signed literals, one per variable.
    pub fn to_dimacs(&self) -> Vec<i64> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| if v { i as i64 + 1 } else { -(i as i64 + 1) })
            .collect()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.values {
            f.write_str(if *v { "T" } else { "F" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clause_normalisation() {
        let c = Clause::from_dimacs(&[2, 1, 2]).unwrap();
        assert_eq!(c.literals(), &[Literal::pos(0), Literal::pos(1)]);
        assert!(!c.is_tautology());
        assert!(Clause::from_dimacs(&[1, -1]).unwrap().is_tautology());
        assert!(Clause::new(vec![]).is_err());
    }

    #[test]
    fn formula_bounds() {
        assert!(CnfFormula::from_dimacs_clauses(1, &[&[2]]).is_err());
        assert!(CnfFormula::new(0, vec![]).is_err());
    }

    #[test]
    fn assignment_bits() {
        let a = Assignment::new(vec![true, false, true]);
        assert_eq!(a.bits(), 0b101);
        assert_eq!(Assignment::from_bits(3, 0b101), a);
        assert_eq!(a.to_dimacs(), vec![1, -2, 3]);
        assert_eq!(a.to_string(), "TFT");
    }
}
