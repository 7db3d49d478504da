use crate::sat::{Assignment, CnfFormula};
use crate::{Error, Result};

pub const BRUTE_FORCE_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForce {
    pub unsat: bool,
    /// Sorted satisfying assignments.
    pub models: Vec<Assignment>,
}

/// Exhaustive truth-table evaluation over packed clause masks.
pub fn brute_force(f: &CnfFormula) -> Result<BruteForce> {
    let n = f.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::EnumerationLimit {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    // (positive literals, negative literals) per clause
    let masks: Vec<(u64, u64)> = f
        .clauses()
        .iter()
        .map(|c| {
            c.literals().iter().fold((0, 0), |(pos, neg), l| {
                if l.negated {
                    (pos, neg | 1 << l.var)
                } else {
                    (pos | 1 << l.var, neg)
                }
            })
        })
        .collect();
    let mut models = Vec::new();
    if !f.has_empty_clause() {
        for bits in 0..(1u64 << n) {
            if masks
                .iter()
                .all(|&(pos, neg)| bits & pos != 0 || !bits & neg != 0)
            {
                models.push(Assignment::from_bits(n, bits));
            }
        }
    }
    models.sort();
    Ok(BruteForce {
        unsat: models.is_empty(),
        models,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f = CnfFormula::from_dimacs_clauses(1, &[&[1], &[-1]]).unwrap();
        assert!(brute_force(&f).unwrap().unsat);
        let f = CnfFormula::new(2, vec![]).unwrap();
        assert_eq!(brute_force(&f).unwrap().models.len(), 4);
        let f =
            CnfFormula::from_dimacs_clauses(2, &[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]]).unwrap();
        assert!(brute_force(&f).unwrap().unsat);
        let f = CnfFormula::new(25, vec![]).unwrap();
        assert!(brute_force(&f).is_err());
    }
}
