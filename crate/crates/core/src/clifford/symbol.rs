use std::fmt;

use crate::{Error, Result};

/// Which member of the Witt pair `(pᵢ, qᵢ)` a null vector is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NullKind {
    P,
    Q,
}

impl NullKind {
    pub fn opposite(self) -> Self {
        match self {
            NullKind::P => NullKind::Q,
            NullKind::Q => NullKind::P,
        }
    }
}

/// A Witt basis vector `pᵢ` or `qᵢ` (0-based position).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WittVector {
    pub position: usize,
    pub kind: NullKind,
}

impl WittVector {
    pub fn p(position: usize) -> Self {
        WittVector {
            position,
            kind: NullKind::P,
        }
    }

    pub fn q(position: usize) -> Self {
        WittVector {
            position,
            kind: NullKind::Q,
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.position < n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: self.position,
                n,
            })
        }
    }

    /// `{u, v}`: 1 for a Witt pair `pᵢ, qᵢ`, 0 otherwise.
    pub fn anticommutator(&self, other: &WittVector) -> i32 {
        i32::from(self.position == other.position && self.kind != other.kind)
    }
}

impl fmt::Display for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            NullKind::P => 'p',
            NullKind::Q => 'q',
        };
        write!(f, "{}{}", k, self.position + 1)
    }
}

/// One factor `ψᵢ` of an EFB term.
///
/// The discriminant is the 2-bit code used by [`EfbTerm`](super::EfbTerm):
/// the high bit is the grade parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum EfbSymbol {
    /// `qᵢpᵢ`
    QP = 0b00,
    /// `pᵢqᵢ`
    PQ = 0b01,
    /// `pᵢ`
    P = 0b10,
    /// `qᵢ`
    Q = 0b11,
}

impl EfbSymbol {
    pub const ALL: [EfbSymbol; 4] = [EfbSymbol::QP, EfbSymbol::PQ, EfbSymbol::P, EfbSymbol::Q];

    pub(crate) fn from_code(code: u8) -> Self {
        match code & 0b11 {
            0b00 => EfbSymbol::QP,
            0b01 => EfbSymbol::PQ,
            0b10 => EfbSymbol::P,
            _ => EfbSymbol::Q,
        }
    }

    pub(crate) fn code(self) -> u8 {
        self as u8
    }

    /// 0 for the even symbols `QP`, `PQ`; 1 for the vectors `P`, `Q`.
    pub fn parity(self) -> u8 {
        self.code() >> 1
    }

    /// The null vector appearing first in the symbol.
    pub fn leading_vector(self) -> NullKind {
        match self {
            EfbSymbol::PQ | EfbSymbol::P => NullKind::P,
            EfbSymbol::QP | EfbSymbol::Q => NullKind::Q,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EfbSymbol::QP => "qp",
            EfbSymbol::PQ => "pq",
            EfbSymbol::P => "p",
            EfbSymbol::Q => "q",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "qp" => Some(EfbSymbol::QP),
            "pq" => Some(EfbSymbol::PQ),
            "p" => Some(EfbSymbol::P),
            "q" => Some(EfbSymbol::Q),
            _ => None,
        }
    }
}

impl fmt::Display for EfbSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_split() {
        assert_eq!(EfbSymbol::QP.parity(), 0);
        assert_eq!(EfbSymbol::PQ.parity(), 0);
        assert_eq!(EfbSymbol::P.parity(), 1);
        assert_eq!(EfbSymbol::Q.parity(), 1);
        for s in EfbSymbol::ALL {
            assert_eq!(EfbSymbol::from_code(s.code()), s);
            assert_eq!(EfbSymbol::parse(s.as_str()), Some(s));
        }
    }

    #[test]
    fn witt_pairing() {
        assert_eq!(WittVector::p(0).anticommutator(&WittVector::q(0)), 1);
        assert_eq!(WittVector::p(0).anticommutator(&WittVector::p(0)), 0);
        assert_eq!(WittVector::q(2).anticommutator(&WittVector::q(2)), 0);
        assert_eq!(WittVector::p(0).anticommutator(&WittVector::q(1)), 0);
        assert!(WittVector::p(3).check(3).is_err());
    }
}
