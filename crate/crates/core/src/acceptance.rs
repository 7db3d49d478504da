//! The embedded acceptance suite, shared by `wittsat selftest` and the
//! `acceptance` test target. Every check compares a route against an
//! independent oracle; nothing here feeds a result back into the routes.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use nalgebra::{DMatrix, Schur};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clifford::{
    annihilates, mtnp_of_spinor, DiagSymbol, DiagonalElement, EfbTerm, Pattern, WittVector,
};
use crate::geometry::{
    assignment_of_sign_vector, check_intersection, compatibility_definitions, cover_check,
    induced_pattern, induced_patterns, psi_z_expansion, SignVector,
};
use crate::oracle::{brute_force, build_gamma, dpll, DpllResult, Dyadic};
use crate::orthogonal::{
    eigen_one_multiplicity, explore_cover, sample_orthogonal_with, witt_rebase, OrthogonalMatrix,
};
use crate::sat::{
    check_algebraic, is_unsatisfiable, models_with_limit, random_clause, random_formula,
    random_ksat, Assignment, Clause, CnfFormula, EncodeOptions, Literal,
};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl std::fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] criterion {:>2} {}: {} ({} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed_ms
        )
    }
}

pub type Criterion = fn() -> CriterionReport;

pub const CRITERIA: [Criterion; 10] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
];

pub fn run_all() -> Vec<CriterionReport> {
    CRITERIA.iter().map(|c| c()).collect()
}

/// Runs `body`, folding errors into a failed report. `budget` is the time
/// allowance, if the criterion has one.
fn run(
    id: u8,
    name: &'static str,
    budget: Option<Duration>,
    body: impl FnOnce() -> Result<(bool, String)>,
) -> CriterionReport {
    let start = Instant::now();
    let (mut passed, mut detail) = match body() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail.push_str(&format!("; exceeded {} s", b.as_secs()));
        }
    }
    CriterionReport {
        id,
        name,
        passed,
        detail,
        elapsed_ms: elapsed.as_millis(),
    }
}

/// Every non-tautological clause over `n` variables: each variable is absent,
/// positive or negative, minus the empty choice.
fn all_clauses(n: usize) -> Vec<Clause> {
    let mut out = Vec::new();
    let mut code = vec![0u8; n];
    loop {
        let mut carry = true;
        for c in code.iter_mut() {
            if carry {
                *c = (*c + 1) % 3;
                carry = *c == 0;
            }
        }
        if carry {
            break;
        }
        let lits = code
            .iter()
            .enumerate()
            .filter_map(|(v, &c)| match c {
                1 => Some(Literal::pos(v)),
                2 => Some(Literal::neg(v)),
                _ => None,
            })
            .collect();
        out.push(Clause::new(lits).expect("valid literals"));
    }
    out
}

fn subset_formulas(n: usize, clauses: &[Clause]) -> Vec<CnfFormula> {
    (0..1u64 << clauses.len())
        .map(|mask| {
            let chosen = clauses
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, c)| c.clone())
                .collect();
            CnfFormula::new(n, chosen).expect("valid formula")
        })
        .collect()
}

pub fn criterion_1() -> CriterionReport {
    run(
        1,
        "S = 0 iff UNSAT (n = 2, 3)",
        Some(Duration::from_secs(10)),
        || {
            let widths: Vec<Clause> = all_clauses(2)
                .into_iter()
                .filter(|c| c.width() <= 2)
                .collect();
            let mut formulas = subset_formulas(2, &widths);
            let exhaustive = formulas.len();
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            for _ in 0..1000 {
                let m = rng.random_range(0..=4);
                formulas.push(random_formula(3, m, 3, &mut rng));
            }
            let mut mismatches = 0;
            let mut unsat = 0;
            for f in &formulas {
                let algebra = is_unsatisfiable(f)?;
                if algebra != brute_force(f)?.unsat {
                    mismatches += 1;
                }
                unsat += algebra as usize;
            }
            Ok((
            mismatches == 0 && exhaustive == 256,
            format!(
                "{} formulas ({exhaustive} exhaustive n=2, 1000 seeded n=3), {unsat} unsat, {mismatches} mismatches",
                formulas.len()
            ),
        ))
        },
    )
}

pub fn criterion_2() -> CriterionReport {
    run(
        2,
        "algebra = cover = DPLL on random 3-SAT",
        Some(Duration::from_secs(120)),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(2);
            let opts = EncodeOptions::default();
            let (mut divergences, mut unsat, mut bad_models) = (0, 0, 0);
            for _ in 0..500 {
                let m = rng.random_range(12..=60);
                let f = random_ksat(12, m, 3, &mut rng);
                let algebra = check_algebraic(&f, &opts)?.unsat;
                let (witness, _) = cover_check(&induced_patterns(&f)?, f.n())?;
                let cover = witness.is_none();
                let d = dpll(&f);
                if let DpllResult::Sat(a) = &d {
                    if !f.evaluate(a) {
                        bad_models += 1;
                    }
                }
                if algebra != cover || cover != d.is_unsat() {
                    divergences += 1;
                }
                unsat += algebra as usize;
            }
            Ok((
            divergences == 0 && bad_models == 0,
            format!("500 instances, {unsat} unsat, {divergences} divergences, {bad_models} bad DPLL models"),
        ))
        },
    )
}

pub fn criterion_3() -> CriterionReport {
    run(3, "support of S equals the model set", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut mismatches = 0;
        let mut total_models = 0;
        for _ in 0..200 {
            let n = rng.random_range(1..=10);
            let m = rng.random_range(0..=3 * n);
            let f = random_formula(n, m, 3.min(n), &mut rng);
            let support: BTreeSet<Assignment> = models_with_limit(&f, 10)?.into_iter().collect();
            let truth: BTreeSet<Assignment> = brute_force(&f)?.models.into_iter().collect();
            if support != truth {
                mismatches += 1;
            }
            total_models += truth.len();
        }
        Ok((
            mismatches == 0,
            format!("200 instances, {total_models} models in total, {mismatches} set mismatches"),
        ))
    })
}

fn random_diagonal<R: Rng>(n: usize, rng: &mut R) -> Result<DiagonalElement> {
    let terms = (0..rng.random_range(1..=4)).map(|_| {
        let symbols: Vec<DiagSymbol> = (0..n)
            .map(|_| match rng.random_range(0..3) {
                0 => DiagSymbol::QP,
                1 => DiagSymbol::PQ,
                _ => DiagSymbol::Id,
            })
            .collect();
        (
            Pattern::from_symbols(&symbols),
            BigInt::from(rng.random_range(-3i32..=3)),
        )
    });
    let terms: Vec<_> = terms.collect();
    DiagonalElement::from_terms(n, terms)
}

pub fn criterion_4() -> CriterionReport {
    run(
        4,
        "gamma matrices: relations, homomorphism, evaluation",
        None,
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(4);
            let reps = (1..=4).map(build_gamma).collect::<Result<Vec<_>>>()?;
            let relations = reps.iter().all(|g| g.generator_relations_hold());
            let mut hom_failures = 0;
            let mut eval_failures = 0;
            for k in 0..1000 {
                let n = 1 + k % 4;
                let g = &reps[n - 1];
                let a = random_diagonal(n, &mut rng)?;
                let b = random_diagonal(n, &mut rng)?;
                let ab = g.matrix_of_diagonal(&a.mul(&b)?)?;
                let ma = g.matrix_of_diagonal(&a)?;
                if ab != &ma * &g.matrix_of_diagonal(&b)? {
                    hom_failures += 1;
                }
                for bits in 0..1u64 << n {
                    let sigma = Assignment::from_bits(n, bits);
                    let i = g.index_of(&sigma);
                    let entry = ma.get(i, i);
                    let value = i128::try_from(a.eval_at(&sigma)?)
                        .map_err(|_| Error::CoefficientOverflow)?;
                    if !ma.is_diagonal() || entry != Dyadic::int(value) {
                        eval_failures += 1;
                    }
                }
            }
            Ok((
            relations && hom_failures == 0 && eval_failures == 0,
            format!(
                "relations {}, 1000 pairs: {hom_failures} homomorphism failures, {eval_failures} evaluation failures",
                if relations { "exact" } else { "violated" }
            ),
        ))
        },
    )
}

pub fn criterion_5() -> CriterionReport {
    run(5, "annihilation iff membership in M(psi)", None, || {
        let n = 3;
        let g = build_gamma(n)?;
        let vectors: Vec<WittVector> = (0..n)
            .flat_map(|i| [WittVector::p(i), WittVector::q(i)])
            .collect();
        let terms = EfbTerm::all(n)?;
        let (mut symbolic, mut matrix, mut checked) = (0, 0, 0);
        for psi in &terms {
            let m = mtnp_of_spinor(psi);
            let mpsi = g.matrix_of_term(psi)?;
            for &v in &vectors {
                let member = m.contains(&v);
                if annihilates(v, psi)? != member {
                    symbolic += 1;
                }
                if (g.vector(v)? * &mpsi).is_zero() != member {
                    matrix += 1;
                }
                checked += 1;
            }
        }
        Ok((
            symbolic == 0 && matrix == 0 && terms.len() == 64,
            format!("{} terms x 6 vectors = {checked} pairs, {symbolic} symbolic and {matrix} matrix mismatches", terms.len()),
        ))
    })
}

pub fn criterion_6() -> CriterionReport {
    run(6, "intersection of expansion MTNPs is M(z)", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut failures = 0;
        for _ in 0..200 {
            let n = rng.random_range(4..=8);
            let k = rng.random_range(1..=n - 3);
            let c = random_clause(n, k, &mut rng);
            let e = psi_z_expansion(&c, n)?;
            if !e.proved_regime || e.terms.len() != 1 << (n - k) || !check_intersection(&c, n)? {
                failures += 1;
            }
        }
        Ok((
            failures == 0,
            format!("200 clauses with k < n - 2, {failures} failures"),
        ))
    })
}

pub fn criterion_7() -> CriterionReport {
    run(7, "pattern cover iff UNSAT", None, || {
        let mut formulas = Vec::new();
        for n in 1..=2 {
            formulas.extend(subset_formulas(n, &all_clauses(n)));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 3..=4 {
            for _ in 0..5000 {
                let m = rng.random_range(0..=4 * n);
                formulas.push(random_formula(n, m, n, &mut rng));
            }
        }
        let (mut mismatches, mut bad_witness, mut covered) = (0, 0, 0);
        for f in &formulas {
            let patterns = induced_patterns(f)?;
            let (witness, _) = cover_check(&patterns, f.n())?;
            // direct enumeration of the sign vectors as a second oracle
            let enumerated =
                SignVector::all(f.n())?.all(|v| patterns.iter().any(|p| p.contains(&v)));
            let unsat = brute_force(f)?.unsat;
            if witness.is_none() != unsat || enumerated != unsat {
                mismatches += 1;
            }
            if let Some(w) = witness {
                if !f.evaluate(&assignment_of_sign_vector(&w)) {
                    bad_witness += 1;
                }
            }
            covered += unsat as usize;
        }
        Ok((
            mismatches == 0 && bad_witness == 0 && formulas.len() >= 10_000,
            format!(
                "{} formulas, {covered} covered, {mismatches} mismatches, {bad_witness} witnesses not satisfying",
                formulas.len()
            ),
        ))
    })
}

/// `O · diag(𝕀_r, rotations, −1…) · Oᵀ`: eigenvalue 1 with multiplicity `r`.
fn with_fixed_space<R: Rng>(n: usize, r: usize, rng: &mut R) -> Result<DMatrix<f64>> {
    let mut d = DMatrix::<f64>::identity(n, n);
    let mut i = r;
    while i + 1 < n {
        let theta = rng.random_range(0.3..std::f64::consts::PI - 0.3);
        let (s, c) = theta.sin_cos();
        d[(i, i)] = c;
        d[(i + 1, i + 1)] = c;
        d[(i, i + 1)] = -s;
        d[(i + 1, i)] = s;
        i += 2;
    }
    if i < n {
        d[(i, i)] = -1.0;
    }
    let o = sample_orthogonal_with(n, rng)?;
    Ok(o.matrix() * d * o.matrix().transpose())
}

/// Eigenvalue-1 multiplicity from the real Schur form. `None` if the QR
/// iteration does not converge.
fn eigen_one_oracle(m: &DMatrix<f64>) -> Option<usize> {
    let schur = Schur::try_new(m.clone(), 1e-13, 10_000)?;
    Some(
        schur
            .complex_eigenvalues()
            .iter()
            .filter(|l| ((l.re - 1.0).powi(2) + l.im.powi(2)).sqrt() < 1e-6)
            .count(),
    )
}

pub fn criterion_8() -> CriterionReport {
    run(8, "transversal Witt rebase", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut worst: f64 = 0.0;
        let (mut failures, mut rejected_ok, mut rejected_total) = (0, 0, 0);
        for n in 2..=6 {
            let mut found = 0;
            let mut draws = 0;
            while found < 100 {
                draws += 1;
                if draws > 10_000 {
                    return Ok((false, format!("n = {n}: too few transversal samples")));
                }
                let t1 = sample_orthogonal_with(n, &mut rng)?;
                let t2 = sample_orthogonal_with(n, &mut rng)?;
                if eigen_one_oracle(&(t1.matrix().transpose() * t2.matrix())) != Some(0) {
                    continue;
                }
                found += 1;
                match witt_rebase(&t1, &t2) {
                    Ok(w) => {
                        let r = w.residuals();
                        let res = r.pairing.max(r.null).max(w.plane_residual(&t1, &t2));
                        worst = worst.max(res);
                        if res > 1e-9 {
                            failures += 1;
                        }
                    }
                    Err(_) => failures += 1,
                }
            }
            for r in 1..=n {
                for _ in 0..5 {
                    let t1 = sample_orthogonal_with(n, &mut rng)?;
                    let rmat = with_fixed_space(n, r, &mut rng)?;
                    let t2 = OrthogonalMatrix::new(t1.matrix() * &rmat)?;
                    let oracle = eigen_one_oracle(&(t1.matrix().transpose() * t2.matrix()));
                    rejected_total += 1;
                    if oracle == Some(r)
                        && eigen_one_multiplicity(&rmat) == r
                        && matches!(witt_rebase(&t1, &t2), Err(Error::NotTransversal { dim }) if dim == r)
                    {
                        rejected_ok += 1;
                    }
                }
            }
        }
        Ok((
            failures == 0 && rejected_ok == rejected_total,
            format!(
                "500 transversal pairs, worst residual {worst:.2e}, {failures} failures; {rejected_ok}/{rejected_total} non-transversal pairs rejected with the right dimension"
            ),
        ))
    })
}

pub fn criterion_9() -> CriterionReport {
    run(9, "O(n) explorer on an unsat n = 3 instance", None, || {
        let clauses = all_clauses(3)
            .into_iter()
            .filter(|c| c.width() == 3)
            .collect();
        let f = CnfFormula::new(3, clauses)?;
        let report = explore_cover(&f, 1000, 9)?;
        let deterministic = report == explore_cover(&f, 1000, 9)?;
        let passed = report.discrete_cover == Some(true)
            && report.discrete_matches_cover == Some(true)
            && report.strict_fraction == 0.0
            && report.transversal_fraction >= 0.99
            && deterministic;
        Ok((
            passed,
            format!(
                "discrete_cover {:?}, strict_fraction {}, transversal_fraction {:.3} (to P or Q: {:.3}), deterministic {deterministic}",
                report.discrete_cover,
                report.strict_fraction,
                report.transversal_fraction,
                report.transversal_p_or_q_fraction
            ),
        ))
    })
}

pub fn criterion_10() -> CriterionReport {
    run(10, "three compatibility definitions agree", None, || {
        let (mut pairs, mut disagreements) = (0, 0);
        for n in 1..=4 {
            for c in all_clauses(n) {
                let pattern = induced_pattern(&c, n)?;
                for bits in 0..1u64 << n {
                    let sigma = Assignment::from_bits(n, bits);
                    let defs = compatibility_definitions(&c, &sigma)?;
                    let falsifies = !c.is_satisfied_by(&sigma);
                    let matched = pattern.contains(&crate::geometry::mtnp_of_assignment(&sigma)?);
                    if defs.iter().any(|&d| d != falsifies) || matched != falsifies {
                        disagreements += 1;
                    }
                    pairs += 1;
                }
            }
        }
        Ok((
            disagreements == 0,
            format!("{pairs} (clause, assignment) pairs, {disagreements} disagreements"),
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clause_enumeration_counts() {
        assert_eq!(all_clauses(1).len(), 2);
        assert_eq!(all_clauses(2).len(), 8);
        assert_eq!(all_clauses(3).len(), 26);
        assert!(all_clauses(3).iter().all(|c| !c.is_tautology()));
    }

    #[test]
    fn fixed_space_has_requested_multiplicity() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for n in 2..=5 {
            for r in 0..=n {
                let m = with_fixed_space(n, r, &mut rng).unwrap();
                assert_eq!(eigen_one_oracle(&m), Some(r), "n={n} r={r}");
            }
        }
    }
}
