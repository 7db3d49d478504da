use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    is_transversal, sample_orthogonal_with, witt_rebase, OrthogonalMatrix, CONSTRUCTION_TOL,
};
use crate::geometry::{covers, induced_patterns, SignVector};
use crate::sat::{Clause, CnfFormula};
use crate::Result;

/// `t ∈ Tⱼ` read pointwise: every null vector of `M(zⱼ)` lies in `(𝕀, t)`.
///
/// `pᵢ ∝ (eᵢ, eᵢ)` lies in the plane iff `t eᵢ = eᵢ`, and `qᵢ` iff
/// `t eᵢ = −eᵢ`.
pub fn strict_membership(t: &OrthogonalMatrix, c: &Clause) -> bool {
    if c.is_tautology() {
        return false;
    }
    let m = t.matrix();
    let n = t.n();
    c.literals().iter().all(|l| {
        if l.var >= n {
            return false;
        }
        let sign = if l.negated { -1.0 } else { 1.0 };
        (0..n).all(|r| {
            let expect = if r == l.var { sign } else { 0.0 };
            (m[(r, l.var)] - expect).abs() <= CONSTRUCTION_TOL
        })
    })
}

/// Reporting only: no verdict on the continuous cover is derived from it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExploreReport {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    /// Every diagonal `±1` matrix strictly belongs to some `Tⱼ`. `None` when
    /// `n` is too large to enumerate.
    pub discrete_cover: Option<bool>,
    /// `discrete_cover` equals the pattern-cover verdict.
    pub discrete_matches_cover: Option<bool>,
    /// Fraction of Haar samples strictly in some `Tⱼ`.
    pub strict_fraction: f64,
    /// Fraction of Haar samples whose plane is transversal to `P` and whose
    /// Witt rebase against `P` passes its invariants.
    pub transversal_fraction: f64,
    /// Fraction transversal to `P` or to `Q`. For odd `n` every rotation
    /// fixes a direction, so only this reading can approach 1.
    pub transversal_p_or_q_fraction: f64,
}

const DISCRETE_LIMIT: usize = 20;
const REBASE_TOL: f64 = 1e-9;

pub fn explore_cover(f: &CnfFormula, samples: usize, seed: u64) -> Result<ExploreReport> {
    let n = f.n();
    let clauses: Vec<&Clause> = f.effective_clauses().collect();
    let (discrete_cover, discrete_matches_cover) = if n <= DISCRETE_LIMIT && !f.has_empty_clause() {
        let mut all = true;
        for v in SignVector::all(n)? {
            let lambda = OrthogonalMatrix::diagonal(&v.to_vec())?;
            if !clauses.iter().any(|c| strict_membership(&lambda, c)) {
                all = false;
                break;
            }
        }
        let by_patterns = covers(&induced_patterns(f)?, n)?;
        (Some(all), Some(all == by_patterns))
    } else if f.has_empty_clause() {
        (Some(true), Some(true))
    } else {
        (None, None)
    };

    let p = OrthogonalMatrix::identity(n);
    let q = OrthogonalMatrix::diagonal(&vec![-1; n])?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut strict, mut transversal, mut either) = (0usize, 0usize, 0usize);
    for _ in 0..samples {
        let t = sample_orthogonal_with(n, &mut rng)?;
        if clauses.iter().any(|c| strict_membership(&t, c)) {
            strict += 1;
        }
        let to_p = rebases(&p, &t);
        if to_p {
            transversal += 1;
        }
        if to_p || rebases(&q, &t) {
            either += 1;
        }
    }
    let frac = |k: usize| {
        if samples == 0 {
            0.0
        } else {
            k as f64 / samples as f64
        }
    };
    Ok(ExploreReport {
        n,
        samples,
        seed,
        discrete_cover,
        discrete_matches_cover,
        strict_fraction: frac(strict),
        transversal_fraction: frac(transversal),
        transversal_p_or_q_fraction: frac(either),
    })
}

fn rebases(reference: &OrthogonalMatrix, t: &OrthogonalMatrix) -> bool {
    if !is_transversal(reference, t) {
        return false;
    }
    match witt_rebase(reference, t) {
        Ok(w) => {
            let r = w.residuals();
            r.pairing <= REBASE_TOL
                && r.null <= REBASE_TOL
                && w.plane_residual(reference, t) <= REBASE_TOL
        }
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::induced_pattern;
    use crate::sat::parse_dimacs;

    #[test]
    fn identity_in_positive_clause_set() {
        let c = Clause::from_dimacs(&[1, 2]).unwrap();
        assert!(strict_membership(&OrthogonalMatrix::identity(3), &c));
    }

    #[test]
    fn quarter_turn_moves_e1() {
        let t = OrthogonalMatrix::rotation(2, 0, 1, std::f64::consts::FRAC_PI_2);
        assert!(!strict_membership(&t, &Clause::from_dimacs(&[-1]).unwrap()));
    }

    #[test]
    fn diagonal_membership_is_pattern_matching() {
        let clauses = [
            Clause::from_dimacs(&[1, -3]).unwrap(),
            Clause::from_dimacs(&[-2]).unwrap(),
            Clause::from_dimacs(&[1, 2, -3, 4]).unwrap(),
        ];
        for c in &clauses {
            let pat = induced_pattern(c, 4).unwrap();
            for v in SignVector::all(4).unwrap() {
                let lambda = OrthogonalMatrix::diagonal(&v.to_vec()).unwrap();
                assert_eq!(strict_membership(&lambda, c), pat.contains(&v));
            }
        }
    }

    #[test]
    fn small_report() {
        let f = parse_dimacs("p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0").unwrap();
        let r = explore_cover(&f, 200, 5).unwrap();
        assert_eq!(r.discrete_cover, Some(true));
        assert_eq!(r.discrete_matches_cover, Some(true));
        assert_eq!(r.strict_fraction, 0.0);
        assert_eq!(r, explore_cover(&f, 200, 5).unwrap());
    }
}
