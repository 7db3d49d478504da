//! Semantic zero test for diagonal elements by positionwise co-factor
//! splitting.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{DiagonalElement, Pattern};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct SplitStats {
    /// Number of positions split on.
    pub splits: u64,
    /// Largest term list seen at any node.
    pub peak_terms: usize,
}

/// Decide whether `a` evaluates to zero on every primitive idempotent.
///
/// Splits on a position into its `QP` and `PQ` co-factors (terms with `Id`
/// there go to both) until every branch is decided. A branch whose surviving
/// coefficients share one sign is nonzero, since every term covers at least
/// one primitive idempotent.
pub fn is_zero(a: &DiagonalElement) -> (bool, SplitStats) {
    let mut stats = SplitStats::default();
    let terms: Vec<(Pattern, BigInt)> = a.terms().map(|(p, c)| (*p, c.clone())).collect();
    let zero = zero_rec(terms, &mut stats);
    (zero, stats)
}

fn zero_rec(mut terms: Vec<(Pattern, BigInt)>, stats: &mut SplitStats) -> bool {
    merge(&mut terms);
    stats.peak_terms = stats.peak_terms.max(terms.len());
    if terms.is_empty() {
        return true;
    }
    let first = terms[0].1.sign();
    if terms.iter().all(|(_, c)| c.sign() == first) {
        return false;
    }
    // Most-constrained position: fixed by the most terms, lowest index on ties.
    let mut counts = [0u32; 64];
    let mut any = 0u64;
    for (p, _) in &terms {
        any |= p.care;
        let mut c = p.care;
        while c != 0 {
            counts[c.trailing_zeros() as usize] += 1;
            c &= c - 1;
        }
    }
    if any == 0 {
        // all patterns identical after merging; handled by the sign check
        unreachable!("merged identity patterns with mixed signs");
    }
    let pos = (0..64)
        .filter(|&i| any >> i & 1 == 1)
        .max_by(|&a, &b| counts[a].cmp(&counts[b]).then(b.cmp(&a)))
        .unwrap();
    stats.splits += 1;
    let bit = 1u64 << pos;
    let mut qp = Vec::with_capacity(terms.len());
    let mut pq = Vec::with_capacity(terms.len());
    for (p, c) in terms {
        let rest = Pattern {
            care: p.care & !bit,
            value: p.value & !bit,
        };
        if p.care & bit == 0 {
            qp.push((rest, c.clone()));
            pq.push((rest, c));
        } else if p.value & bit != 0 {
            qp.push((rest, c));
        } else {
            pq.push((rest, c));
        }
    }
    zero_rec(qp, stats) && zero_rec(pq, stats)
}

fn merge(terms: &mut Vec<(Pattern, BigInt)>) {
    terms.sort_unstable_by_key(|(p, _)| *p);
    let mut out: Vec<(Pattern, BigInt)> = Vec::with_capacity(terms.len());
    for (p, c) in terms.drain(..) {
        match out.last_mut() {
            Some((q, d)) if *q == p => *d += c,
            _ => out.push((p, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    *terms = out;
}
