use crate::clifford::{mtnp_of_spinor, EfbSymbol, EfbTerm, DEFAULT_EXPANSION_LIMIT};
use crate::sat::Clause;
use crate::{Error, Result};

use super::{tnp_of_clause, TotallyNullPlane};

/// The simple spinors of `ψ_{zⱼ}`.
#[derive(Clone, Debug)]
pub struct PsiExpansion {
    pub terms: Vec<EfbTerm>,
    /// `k < n − 2`, where `M(ψ_{zⱼ}) = M(zⱼ)` is established; outside it the
    /// geometry is still computed but carries no such guarantee.
    pub proved_regime: bool,
}

/// Expand `zⱼ = ρ̄ⱼ₁⋯ρ̄ⱼₖ ∏_{i∉j} {qᵢ, pᵢ}` into its `2^{n−k}` EFB terms.
pub fn psi_z_expansion(c: &Clause, n: usize) -> Result<PsiExpansion> {
    let plane = tnp_of_clause(c, n)?;
    let k = c.width();
    let free: Vec<usize> = (0..n)
        .filter(|&i| c.literals().iter().all(|l| l.var != i))
        .collect();
    if free.len() > DEFAULT_EXPANSION_LIMIT {
        return Err(Error::ExpansionLimit {
            n: free.len(),
            limit: DEFAULT_EXPANSION_LIMIT,
        });
    }
    let mut base = vec![EfbSymbol::QP; n];
    for l in c.literals() {
        base[l.var] = if l.negated {
            EfbSymbol::QP
        } else {
            EfbSymbol::PQ
        };
    }
    debug_assert_eq!(plane.dim(), k);
    let mut terms = Vec::with_capacity(1 << free.len());
    for mask in 0..(1u64 << free.len()) {
        let mut symbols = base.clone();
        for (j, &pos) in free.iter().enumerate() {
            symbols[pos] = if mask >> j & 1 == 1 {
                EfbSymbol::PQ
            } else {
                EfbSymbol::QP
            };
        }
        terms.push(EfbTerm::unit(&symbols)?);
    }
    Ok(PsiExpansion {
        terms,
        proved_regime: k + 2 < n,
    })
}

/// Whether the intersection of the expansion's MTNPs is exactly `M(zⱼ)`.
pub fn check_intersection(c: &Clause, n: usize) -> Result<bool> {
    let expansion = psi_z_expansion(c, n)?;
    let mut acc: Option<TotallyNullPlane> = None;
    for t in &expansion.terms {
        let m = TotallyNullPlane::new(mtnp_of_spinor(t))?;
        acc = Some(match acc {
            None => m,
            Some(a) => a.intersection(&m),
        });
    }
    Ok(acc.expect("at least one term") == tnp_of_clause(c, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::WittVector;

    #[test]
    fn single_literal_in_three() {
        let c = Clause::from_dimacs(&[1]).unwrap();
        let e = psi_z_expansion(&c, 3).unwrap();
        assert_eq!(e.terms.len(), 4);
        assert!(!e.proved_regime);
        assert!(check_intersection(&c, 3).unwrap());
        assert_eq!(
            tnp_of_clause(&c, 3).unwrap().generators(),
            &[WittVector::p(0)]
        );
    }

    #[test]
    fn full_width_clause() {
        let c = Clause::from_dimacs(&[1, -2, 3]).unwrap();
        let e = psi_z_expansion(&c, 3).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert!(check_intersection(&c, 3).unwrap());
    }

    #[test]
    fn proved_regime_flag() {
        let c = Clause::from_dimacs(&[1, 2]).unwrap();
        assert!(psi_z_expansion(&c, 5).unwrap().proved_regime);
        assert!(!psi_z_expansion(&c, 4).unwrap().proved_regime);
    }
}
