use std::fmt;

use serde::Serialize;

use super::SignVector;
use crate::clifford::{low_mask, DiagonalElement, NullKind, Pattern, WittVector};
use crate::sat::{encode_clause, Assignment, Clause};
use crate::{Error, Result};

/// `{u, v} = 0` for every pair of generators, including each with itself.
pub fn is_totally_null(generators: &[WittVector]) -> bool {
    generators
        .iter()
        .all(|u| generators.iter().all(|v| u.anticommutator(v) == 0))
}

/// A coordinate totally null plane of the Witt frame, given by generators at
/// distinct positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TotallyNullPlane {
    generators: Vec<WittVector>,
}

impl TotallyNullPlane {
    pub fn new(mut generators: Vec<WittVector>) -> Result<Self> {
        generators.sort();
        generators.dedup();
        if !is_totally_null(&generators) {
            return Err(Error::NotTotallyNull);
        }
        Ok(TotallyNullPlane { generators })
    }

    pub fn generators(&self) -> &[WittVector] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn is_subspace_of(&self, other: &TotallyNullPlane) -> bool {
        self.generators
            .iter()
            .all(|g| other.generators.binary_search(g).is_ok())
    }

    pub fn intersection(&self, other: &TotallyNullPlane) -> TotallyNullPlane {
        TotallyNullPlane {
            generators: self
                .generators
                .iter()
                .filter(|g| other.generators.binary_search(g).is_ok())
                .copied()
                .collect(),
        }
    }
}

impl Serialize for TotallyNullPlane {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let names: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        names.serialize(s)
    }
}

impl fmt::Display for TotallyNullPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("span{")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

/// `M(ρ₁⋯ρₙ)` as a sign vector: a true variable selects `qᵢ` (`−1`).
pub fn mtnp_of_assignment(sigma: &Assignment) -> Result<SignVector> {
    SignVector::new(sigma.len(), sigma.bits())
}

/// The coordinate plane spanned by the null vectors a sign vector selects.
pub fn mtnp_plane(v: &SignVector) -> TotallyNullPlane {
    TotallyNullPlane {
        generators: (0..v.n())
            .map(|i| WittVector {
                position: i,
                kind: if v.eps(i) > 0 {
                    NullKind::P
                } else {
                    NullKind::Q
                },
            })
            .collect(),
    }
}

/// `M(zⱼ)`: `pᵢ` for each positive clause literal (`ρ̄ᵢ = pᵢqᵢ` in `zⱼ`),
/// `qᵢ` for each negated one.
pub fn tnp_of_clause(c: &Clause, n: usize) -> Result<TotallyNullPlane> {
    if c.is_tautology() {
        return Err(Error::TautologicalClause);
    }
    let gens = c
        .literals()
        .iter()
        .map(|l| {
            if l.var >= n {
                return Err(Error::IndexOutOfRange { index: l.var, n });
            }
            Ok(if l.negated {
                WittVector::q(l.var)
            } else {
                WittVector::p(l.var)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    TotallyNullPlane::new(gens)
}

/// The three equivalent readings of "clause and assignment are compatible":
/// literal containment, `σ zⱼ = σ` in the algebra, and `M(zⱼ) ⊆ M(σ)`.
pub fn compatibility_definitions(c: &Clause, sigma: &Assignment) -> Result<[bool; 3]> {
    let n = sigma.len();
    if c.max_var() >= n {
        return Err(Error::IndexOutOfRange {
            index: c.max_var(),
            n,
        });
    }
    if c.is_tautology() {
        // zⱼ = 0: no assignment makes σ·0 = σ, and no plane exists
        return Ok([false, false, false]);
    }

    // The literals of zⱼ (the negations of the clause's) appear in σ.
    let containment = c.literals().iter().all(|l| sigma.get(l.var) == l.negated);

    let rho = DiagonalElement::from_pattern(
        n,
        Pattern {
            care: low_mask(n),
            value: sigma.bits(),
        },
        1,
    )?;
    let z = encode_clause(c, n)?;
    let algebraic = rho.mul(&z)? == rho;

    let planar = tnp_of_clause(c, n)?.is_subspace_of(&mtnp_plane(&mtnp_of_assignment(sigma)?));

    Ok([containment, algebraic, planar])
}

/// Whether `sigma` falsifies `c`.
///
/// In debug builds all three equivalent definitions are evaluated and
/// required to agree.
pub fn compatible(c: &Clause, sigma: &Assignment) -> bool {
    let direct = !c.is_tautology() && !c.is_satisfied_by(sigma);
    if cfg!(debug_assertions) {
        if let Ok(defs) = compatibility_definitions(c, sigma) {
            debug_assert!(
                defs.iter().all(|&d| d == direct),
                "compatibility definitions disagree: {defs:?} vs {direct}"
            );
        }
    }
    direct
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assignment_planes() {
        let ff = Assignment::new(vec![false; 3]);
        assert_eq!(mtnp_of_assignment(&ff).unwrap().to_vec(), vec![1, 1, 1]);
        let tt = Assignment::new(vec![true; 3]);
        assert_eq!(mtnp_of_assignment(&tt).unwrap().to_vec(), vec![-1, -1, -1]);
        let tft = Assignment::new(vec![true, false, true]);
        assert_eq!(mtnp_of_assignment(&tft).unwrap().to_vec(), vec![-1, 1, -1]);
    }

    #[test]
    fn clause_planes() {
        let c = Clause::from_dimacs(&[1, 2]).unwrap();
        assert_eq!(
            tnp_of_clause(&c, 2).unwrap().generators(),
            &[WittVector::p(0), WittVector::p(1)]
        );
        let c = Clause::from_dimacs(&[-1]).unwrap();
        assert_eq!(
            tnp_of_clause(&c, 1).unwrap().generators(),
            &[WittVector::q(0)]
        );
        let c = Clause::from_dimacs(&[1, -2, -3, 4]).unwrap();
        let m = tnp_of_clause(&c, 4).unwrap();
        assert_eq!(m.dim(), 4);
        assert_eq!(
            m.generators()
                .iter()
                .filter(|g| g.kind == NullKind::Q)
                .count(),
            2
        );
        assert_eq!(
            tnp_of_clause(&Clause::from_dimacs(&[1, -1]).unwrap(), 1),
            Err(Error::TautologicalClause)
        );
    }

    #[test]
    fn compatibility_examples() {
        let c = Clause::from_dimacs(&[1, 2]).unwrap();
        assert!(compatible(&c, &Assignment::new(vec![false, false])));
        assert!(!compatible(&c, &Assignment::new(vec![false, true])));
        assert_eq!(
            compatibility_definitions(&c, &Assignment::new(vec![false, false])).unwrap(),
            [true; 3]
        );
    }

    #[test]
    fn union_of_contradictory_units_is_not_null() {
        let a = tnp_of_clause(&Clause::from_dimacs(&[1]).unwrap(), 1).unwrap();
        let b = tnp_of_clause(&Clause::from_dimacs(&[-1]).unwrap(), 1).unwrap();
        let union: Vec<WittVector> = a
            .generators()
            .iter()
            .chain(b.generators())
            .copied()
            .collect();
        assert!(!is_totally_null(&union));
        assert_eq!(TotallyNullPlane::new(union), Err(Error::NotTotallyNull));
    }
}
