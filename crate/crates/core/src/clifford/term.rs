use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{check_dimension, low_mask, EfbSymbol, NullKind, WittVector};
use crate::{Error, Result};

/// A single EFB basis element `coeff · ψ₁ψ₂⋯ψₙ`.
///
/// Symbols are packed two bits per position into a pair of bit planes:
/// `lo` holds bit 0 of each code and `hi` holds bit 1 (the parity), so the
/// number of odd symbols before a position is one popcount.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EfbTerm {
    n: usize,
    lo: u64,
    hi: u64,
    coeff: BigInt,
}

impl EfbTerm {
    pub fn new(symbols: &[EfbSymbol], coeff: impl Into<BigInt>) -> Result<Self> {
        let n = symbols.len();
        check_dimension(n)?;
        let (mut lo, mut hi) = (0u64, 0u64);
        for (i, s) in symbols.iter().enumerate() {
            let c = s.code() as u64;
            lo |= (c & 1) << i;
            hi |= (c >> 1) << i;
        }
        Ok(EfbTerm {
            n,
            lo,
            hi,
            coeff: coeff.into(),
        })
    }

    /// Term with unit coefficient.
    pub fn unit(symbols: &[EfbSymbol]) -> Result<Self> {
        Self::new(symbols, 1)
    }

    /// All `4ⁿ` unit EFB terms in lexicographic code order.
    pub fn all(n: usize) -> Result<Vec<EfbTerm>> {
        check_dimension(n)?;
        if n > 12 {
            return Err(Error::ExpansionLimit { n, limit: 12 });
        }
        let mut out = Vec::with_capacity(1 << (2 * n));
        for code in 0..(1u64 << (2 * n)) {
            let symbols: Vec<EfbSymbol> = (0..n)
                .map(|i| EfbSymbol::from_code(((code >> (2 * i)) & 0b11) as u8))
                .collect();
            out.push(EfbTerm::unit(&symbols)?);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self) -> &BigInt {
        &self.coeff
    }

    pub fn symbol(&self, position: usize) -> EfbSymbol {
        let code = ((self.lo >> position) & 1) | (((self.hi >> position) & 1) << 1);
        EfbSymbol::from_code(code as u8)
    }

    pub fn symbols(&self) -> Vec<EfbSymbol> {
        (0..self.n).map(|i| self.symbol(i)).collect()
    }

    /// Number of odd-grade symbols strictly before `position`.
    pub fn odd_before(&self, position: usize) -> u32 {
        (self.hi & low_mask(position)).count_ones()
    }

    fn with_symbol(&self, position: usize, s: EfbSymbol, negate: bool) -> EfbTerm {
        let bit = 1u64 << position;
        let c = s.code() as u64;
        let lo = (self.lo & !bit) | ((c & 1) << position);
        let hi = (self.hi & !bit) | ((c >> 1) << position);
        let coeff = if negate {
            -self.coeff.clone()
        } else {
            self.coeff.clone()
        };
        EfbTerm {
            n: self.n,
            lo,
            hi,
            coeff,
        }
    }
}

/// Left Clifford product `v · t` of a Witt vector with an EFB term.
///
/// Returns `Ok(None)` when the product vanishes.
pub fn vector_action(v: WittVector, t: &EfbTerm) -> Result<Option<EfbTerm>> {
    v.check(t.n)?;
    use EfbSymbol::*;
    let i = v.position;
    let rewritten = match (v.kind, t.symbol(i)) {
        // p qp = ({p,q} - qp) p = p
        (NullKind::P, QP) => Some(P),
        (NullKind::P, Q) => Some(PQ),
        (NullKind::P, PQ | P) => None,
        // q pq = q
        (NullKind::Q, PQ) => Some(Q),
        (NullKind::Q, P) => Some(QP),
        (NullKind::Q, QP | Q) => None,
    };
    // v anticommutes with every odd factor it moves past.
    Ok(rewritten.map(|s| t.with_symbol(i, s, t.odd_before(i) % 2 == 1)))
}

/// `v ψ = 0`.
pub fn annihilates(v: WittVector, psi: &EfbTerm) -> Result<bool> {
    Ok(vector_action(v, psi)?.is_none())
}

/// The maximal totally null plane of a simple spinor: at every position the
/// null vector appearing first in the symbol.
pub fn mtnp_of_spinor(psi: &EfbTerm) -> Vec<WittVector> {
    (0..psi.n)
        .map(|i| WittVector {
            position: i,
            kind: psi.symbol(i).leading_vector(),
        })
        .collect()
}

impl fmt::Display for EfbTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} *", self.coeff)?;
        for s in self.symbols() {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

impl FromStr for EfbTerm {
    type Err = Error;

    /// Parses `coeff * s₁ s₂ … sₙ` with `sᵢ ∈ {qp, pq, p, q}`; a bare symbol
    /// list has coefficient 1.
    fn from_str(s: &str) -> Result<Self> {
        let (coeff, rest) = s.split_once('*').unwrap_or(("1", s));
        let coeff: BigInt = coeff
            .trim()
            .parse()
            .map_err(|_| Error::parse(1, format!("bad coefficient {:?}", coeff.trim())))?;
        let symbols = rest
            .split_whitespace()
            .map(|tok| {
                EfbSymbol::parse(tok).ok_or_else(|| Error::parse(1, format!("bad symbol {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coeff.is_zero() {
            return Err(Error::parse(1, "zero coefficient"));
        }
        EfbTerm::new(&symbols, coeff)
    }
}

impl EfbTerm {
    pub fn is_unit(&self) -> bool {
        self.coeff.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use EfbSymbol::*;

    fn t(s: &[EfbSymbol]) -> EfbTerm {
        EfbTerm::unit(s).unwrap()
    }

    #[test]
    fn q_kills_q() {
        assert!(vector_action(WittVector::q(0), &t(&[Q, QP]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn p_on_qp_gives_p() {
        let r = vector_action(WittVector::p(0), &t(&[QP, QP]))
            .unwrap()
            .unwrap();
        assert_eq!(r.symbols(), vec![P, QP]);
        assert_eq!(r.coeff(), &BigInt::from(1));
    }

    #[test]
    fn sign_from_preceding_odd_symbol() {
        let r = vector_action(WittVector::p(1), &t(&[P, Q]))
            .unwrap()
            .unwrap();
        assert_eq!(r.symbols(), vec![P, PQ]);
        assert_eq!(r.coeff(), &BigInt::from(-1));
    }

    #[test]
    fn out_of_range() {
        assert!(vector_action(WittVector::p(2), &t(&[P, Q])).is_err());
    }

    #[test]
    fn mtnp_of_example_spinor() {
        // p1 q1 · q2 p2 · q3 p3
        let psi = t(&[PQ, QP, QP]);
        assert_eq!(
            mtnp_of_spinor(&psi),
            vec![WittVector::p(0), WittVector::q(1), WittVector::q(2)]
        );
    }

    #[test]
    fn annihilation_matches_mtnp_exhaustively() {
        for psi in EfbTerm::all(3).unwrap() {
            let m = mtnp_of_spinor(&psi);
            for i in 0..3 {
                for kind in [NullKind::P, NullKind::Q] {
                    let v = WittVector { position: i, kind };
                    assert_eq!(annihilates(v, &psi).unwrap(), m.contains(&v));
                }
            }
        }
    }

    #[test]
    fn odd_actions_anticommute() {
        // acting at i then j equals minus acting at j then i when both
        // actions change the parity of their position.
        for psi in EfbTerm::all(3).unwrap() {
            for a in [WittVector::p(0), WittVector::q(0)] {
                for b in [WittVector::p(2), WittVector::q(2)] {
                    let ab = vector_action(a, &psi)
                        .unwrap()
                        .and_then(|x| vector_action(b, &x).unwrap());
                    let ba = vector_action(b, &psi)
                        .unwrap()
                        .and_then(|x| vector_action(a, &x).unwrap());
                    match (ab, ba) {
                        (None, None) => {}
                        (Some(x), Some(y)) => {
                            assert_eq!(x.symbols(), y.symbols());
                            assert_eq!(x.coeff(), &-y.coeff().clone());
                        }
                        other => panic!("asymmetric vanishing: {other:?}"),
                    }
                }
            }
        }
    }

    #[test]
    fn text_roundtrip() {
        let psi = EfbTerm::new(&[PQ, P, Q, QP], -3).unwrap();
        let s = psi.to_string();
        assert_eq!(s, "-3 * pq p q qp");
        assert_eq!(s.parse::<EfbTerm>().unwrap(), psi);
        assert_eq!("pq p".parse::<EfbTerm>().unwrap(), t(&[PQ, P]));
        assert!("2 * pq x".parse::<EfbTerm>().is_err());
    }
}
