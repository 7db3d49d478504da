use std::fmt;

use serde::Serialize;

use crate::clifford::{check_dimension, low_mask};
use crate::sat::{Assignment, Clause};
use crate::{Error, Result};

/// A diagonal isometry `λ ∈ ×ⁿO(1)`, stored as the set of `−1` entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    n: usize,
    minus: u64,
}

impl SignVector {
    pub fn new(n: usize, minus: u64) -> Result<Self> {
        check_dimension(n)?;
        if minus & !low_mask(n) != 0 {
            return Err(Error::IndexOutOfRange {
                index: 63 - minus.leading_zeros() as usize,
                n,
            });
        }
        Ok(SignVector { n, minus })
    }

    pub fn from_eps(eps: &[i8]) -> Result<Self> {
        let mut minus = 0;
        for (i, &e) in eps.iter().enumerate() {
            match e {
                1 => {}
                -1 => minus |= 1 << i,
                _ => return Err(Error::parse(0, format!("sign {e} is not ±1"))),
            }
        }
        Self::new(eps.len(), minus)
    }

    pub fn all(n: usize) -> Result<impl Iterator<Item = SignVector>> {
        check_dimension(n)?;
        if n > 30 {
            return Err(Error::EnumerationLimit { n, limit: 30 });
        }
        Ok((0..1u64 << n).map(move |minus| SignVector { n, minus }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn minus_mask(&self) -> u64 {
        self.minus
    }

    pub fn eps(&self, i: usize) -> i8 {
        if self.minus >> i & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn to_vec(&self) -> Vec<i8> {
        (0..self.n).map(|i| self.eps(i)).collect()
    }
}

impl Serialize for SignVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            f.write_str(if self.eps(i) < 0 { "-" } else { "+" })?;
        }
        Ok(())
    }
}

/// Inverse of [`mtnp_of_assignment`](super::mtnp_of_assignment): `−1` is true.
pub fn assignment_of_sign_vector(v: &SignVector) -> Assignment {
    Assignment::from_bits(v.n, v.minus)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Plus,
    Minus,
    Free,
}

/// The set `T′ⱼ` of sign vectors agreeing with a clause's fixed slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernaryPattern {
    n: usize,
    care: u64,
    minus: u64,
}

impl TernaryPattern {
    pub fn from_slots(slots: &[Slot]) -> Result<Self> {
        let n = slots.len();
        check_dimension(n)?;
        let (mut care, mut minus) = (0, 0);
        for (i, s) in slots.iter().enumerate() {
            match s {
                Slot::Plus => care |= 1 << i,
                Slot::Minus => {
                    care |= 1 << i;
                    minus |= 1 << i;
                }
                Slot::Free => {}
            }
        }
        Ok(TernaryPattern { n, care, minus })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn care(&self) -> u64 {
        self.care
    }

    pub fn minus(&self) -> u64 {
        self.minus
    }

    pub fn slot(&self, i: usize) -> Slot {
        if self.care >> i & 1 == 0 {
            Slot::Free
        } else if self.minus >> i & 1 == 1 {
            Slot::Minus
        } else {
            Slot::Plus
        }
    }

    pub fn fixed(&self) -> usize {
        self.care.count_ones() as usize
    }

    /// `2^{n−k}`
    pub fn member_count(&self) -> u128 {
        1u128 << (self.n - self.fixed())
    }

    pub fn contains(&self, v: &SignVector) -> bool {
        v.n == self.n && (v.minus ^ self.minus) & self.care == 0
    }

    pub fn members(&self) -> impl Iterator<Item = SignVector> + '_ {
        let free = low_mask(self.n) & !self.care;
        let mut sub = free;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let v = SignVector {
                n: self.n,
                minus: self.minus | sub,
            };
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & free;
            }
            Some(v)
        })
    }
}

impl fmt::Display for TernaryPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            f.write_str(match self.slot(i) {
                Slot::Plus => "+",
                Slot::Minus => "-",
                Slot::Free => "*",
            })?;
        }
        Ok(())
    }
}

/// `λⱼ` with its free slots: `+1` where the clause literal is positive (so
/// `zⱼ` holds the complemented literal and `pᵢ` stays), `−1` where it is
/// negated (`tᵢ` swaps `pᵢ ↔ qᵢ`), free elsewhere.
pub fn induced_pattern(c: &Clause, n: usize) -> Result<TernaryPattern> {
    check_dimension(n)?;
    if c.is_tautology() {
        return Err(Error::TautologicalClause);
    }
    let (mut care, mut minus) = (0u64, 0u64);
    for l in c.literals() {
        if l.var >= n {
            return Err(Error::IndexOutOfRange { index: l.var, n });
        }
        care |= 1 << l.var;
        if l.negated {
            minus |= 1 << l.var;
        }
    }
    Ok(TernaryPattern { n, care, minus })
}

/// One pattern per line over `{+, -, *}`.
pub fn write_patterns(patterns: &[TernaryPattern]) -> String {
    patterns.iter().map(|p| format!("{p}\n")).collect()
}

pub fn parse_patterns(text: &str) -> Result<Vec<TernaryPattern>> {
    let mut out = Vec::new();
    let mut width = None;
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let slots = line
            .chars()
            .map(|ch| match ch {
                '+' => Ok(Slot::Plus),
                '-' => Ok(Slot::Minus),
                '*' => Ok(Slot::Free),
                _ => Err(Error::parse(idx + 1, format!("bad slot {ch:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if *width.get_or_insert(slots.len()) != slots.len() {
            return Err(Error::parse(
                idx + 1,
                "pattern width differs from first line",
            ));
        }
        out.push(
            TernaryPattern::from_slots(&slots).map_err(|_| Error::parse(idx + 1, "bad width"))?,
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_clause_keeps_p() {
        let c = Clause::from_dimacs(&[1, 2]).unwrap();
        let t = induced_pattern(&c, 3).unwrap();
        assert_eq!(t.to_string(), "++*");
        assert_eq!(t.member_count(), 2);
        // r = 0: identity on the fixed slots
        for m in t.members() {
            assert_eq!(m.eps(0), 1);
            assert_eq!(m.eps(1), 1);
        }
    }

    #[test]
    fn negated_unit() {
        let c = Clause::from_dimacs(&[-1]).unwrap();
        let t = induced_pattern(&c, 2).unwrap();
        assert_eq!(t.to_string(), "-*");
        assert_eq!(t.members().count(), 2);
    }

    #[test]
    fn dump_roundtrip() {
        let ps = vec![
            TernaryPattern::from_slots(&[Slot::Plus, Slot::Free, Slot::Minus]).unwrap(),
            TernaryPattern::from_slots(&[Slot::Free, Slot::Free, Slot::Free]).unwrap(),
        ];
        let txt = write_patterns(&ps);
        assert_eq!(txt, "+*-\n***\n");
        assert_eq!(parse_patterns(&txt).unwrap(), ps);
        assert!(parse_patterns("+*\n+\n").is_err());
        assert!(parse_patterns("+x\n").is_err());
    }

    #[test]
    fn sign_vector_bounds() {
        assert!(SignVector::from_eps(&[1, -1, 1]).is_ok());
        assert!(SignVector::from_eps(&[1, 0]).is_err());
        assert!(SignVector::new(2, 0b100).is_err());
        assert!(SignVector::new(0, 0).is_err());
    }
}
