//! Tautology check for a family of ternary patterns: does the union of the
//! sets `T′ⱼ` exhaust `×ⁿO(1)`?
//!
//! This works on sign patterns only and shares no code with the algebraic
//! zero test, so agreement between the two is a real cross-check.

use serde::Serialize;

use super::{induced_pattern, SignVector, TernaryPattern};
use crate::clifford::check_dimension;
use crate::sat::CnfFormula;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoverStats {
    pub patterns: usize,
    pub splits: u64,
}

/// The induced patterns of every non-tautological clause. An empty clause
/// contributes the all-free pattern.
pub fn induced_patterns(f: &CnfFormula) -> Result<Vec<TernaryPattern>> {
    let mut out = f
        .effective_clauses()
        .map(|c| induced_pattern(c, f.n()))
        .collect::<Result<Vec<_>>>()?;
    if f.has_empty_clause() {
        out.push(TernaryPattern::from_slots(&vec![super::Slot::Free; f.n()])?);
    }
    Ok(out)
}

pub fn covers(patterns: &[TernaryPattern], n: usize) -> Result<bool> {
    Ok(witness_uncovered(patterns, n)?.is_none())
}

/// A sign vector matched by no pattern, if one exists.
pub fn witness_uncovered(patterns: &[TernaryPattern], n: usize) -> Result<Option<SignVector>> {
    cover_check(patterns, n).map(|(w, _)| w)
}

pub fn cover_check(
    patterns: &[TernaryPattern],
    n: usize,
) -> Result<(Option<SignVector>, CoverStats)> {
    check_dimension(n)?;
    for p in patterns {
        if p.n() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: p.n(),
            });
        }
    }
    let mut stats = CoverStats {
        patterns: patterns.len(),
        splits: 0,
    };
    let pats: Vec<(u64, u64)> = patterns.iter().map(|p| (p.care(), p.minus())).collect();
    let w = search(pats, 0, &mut stats);
    Ok((
        w.map(|minus| SignVector::new(n, minus).expect("in range")),
        stats,
    ))
}

fn search(pats: Vec<(u64, u64)>, fixed_minus: u64, stats: &mut CoverStats) -> Option<u64> {
    if pats.iter().any(|&(care, _)| care == 0) {
        return None;
    }
    if pats.is_empty() {
        // every unsplit slot may be +1
        return Some(fixed_minus);
    }
    let mut counts = [0u32; 64];
    for &(care, _) in &pats {
        let mut c = care;
        while c != 0 {
            counts[c.trailing_zeros() as usize] += 1;
            c &= c - 1;
        }
    }
    let pos = (0..64)
        .max_by(|&a, &b| counts[a].cmp(&counts[b]).then(b.cmp(&a)))
        .unwrap();
    stats.splits += 1;
    let bit = 1u64 << pos;
    for minus_branch in [false, true] {
        let sub: Vec<(u64, u64)> = pats
            .iter()
            .filter(|&&(care, minus)| care & bit == 0 || ((minus & bit != 0) == minus_branch))
            .map(|&(care, minus)| (care & !bit, minus & !bit))
            .collect();
        let fm = if minus_branch {
            fixed_minus | bit
        } else {
            fixed_minus
        };
        if let Some(w) = search(sub, fm, stats) {
            return Some(w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Slot;
    use crate::sat::parse_dimacs;

    fn pat(s: &[Slot]) -> TernaryPattern {
        TernaryPattern::from_slots(s).unwrap()
    }

    #[test]
    fn contradictory_units_cover() {
        let ps = [pat(&[Slot::Minus]), pat(&[Slot::Plus])];
        assert!(covers(&ps, 1).unwrap());
    }

    #[test]
    fn single_pattern_leaves_witness() {
        let p = pat(&[Slot::Plus, Slot::Plus]);
        let w = witness_uncovered(&[p], 2).unwrap().unwrap();
        assert!(!p.contains(&w));
    }

    #[test]
    fn four_clause_instance_covers() {
        let f = parse_dimacs("p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0").unwrap();
        let ps = induced_patterns(&f).unwrap();
        assert!(covers(&ps, 2).unwrap());
        // enumeration oracle
        for v in SignVector::all(2).unwrap() {
            assert!(ps.iter().any(|p| p.contains(&v)));
        }
    }

    #[test]
    fn width_mismatch() {
        let p = pat(&[Slot::Plus]);
        assert!(covers(&[p], 2).is_err());
    }

    #[test]
    fn empty_family() {
        assert!(!covers(&[], 3).unwrap());
    }
}
