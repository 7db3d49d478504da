use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{check_dimension, is_zero, low_mask};
use crate::sat::Assignment;
use crate::{Error, Result};

/// Default cap on the number of positions [`DiagonalElement::expand_primitive`]
/// will enumerate.
pub const DEFAULT_EXPANSION_LIMIT: usize = 24;

/// One factor of a diagonal term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagSymbol {
    /// `qᵢpᵢ`, the literal ρᵢ
    QP,
    /// `pᵢqᵢ`, the literal ¬ρᵢ
    PQ,
    /// `{qᵢ, pᵢ}`, the identity at position i
    Id,
}

impl DiagSymbol {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagSymbol::QP => "qp",
            DiagSymbol::PQ => "pq",
            DiagSymbol::Id => "1",
        }
    }
}

/// A ternary pattern over `{QP, PQ, Id}` packed into two masks.
///
/// `care` marks fixed positions; within them `value` is set for `QP`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    pub care: u64,
    pub value: u64,
}

impl Pattern {
    pub const IDENTITY: Pattern = Pattern { care: 0, value: 0 };

    pub fn from_symbols(symbols: &[DiagSymbol]) -> Self {
        let mut p = Pattern::IDENTITY;
        for (i, s) in symbols.iter().enumerate() {
            p = p.with(i, *s);
        }
        p
    }

    pub fn with(self, position: usize, s: DiagSymbol) -> Self {
        let bit = 1u64 << position;
        match s {
            DiagSymbol::Id => Pattern {
                care: self.care & !bit,
                value: self.value & !bit,
            },
            DiagSymbol::QP => Pattern {
                care: self.care | bit,
                value: self.value | bit,
            },
            DiagSymbol::PQ => Pattern {
                care: self.care | bit,
                value: self.value & !bit,
            },
        }
    }

    pub fn symbol(&self, position: usize) -> DiagSymbol {
        let bit = 1u64 << position;
        if self.care & bit == 0 {
            DiagSymbol::Id
        } else if self.value & bit != 0 {
            DiagSymbol::QP
        } else {
            DiagSymbol::PQ
        }
    }

    pub fn symbols(&self, n: usize) -> Vec<DiagSymbol> {
        (0..n).map(|i| self.symbol(i)).collect()
    }

    /// Positionwise product; `None` when some position meets `QP·PQ`.
    #[inline]
    pub fn meet(self, other: Pattern) -> Option<Pattern> {
        let both = self.care & other.care;
        if (self.value ^ other.value) & both != 0 {
            None
        } else {
            Some(Pattern {
                care: self.care | other.care,
                value: self.value | other.value,
            })
        }
    }

    /// Whether the primitive idempotent with `QP` exactly at the set bits of
    /// `assignment` appears in the expansion of this pattern.
    #[inline]
    pub fn matches(&self, assignment: u64) -> bool {
        (assignment ^ self.value) & self.care == 0
    }

    pub fn fixed_count(&self) -> u32 {
        self.care.count_ones()
    }
}

/// Sparse integer combination of diagonal patterns.
///
/// The stored form is not canonical: equality is semantic, i.e. two
/// elements are equal when they agree on every primitive idempotent.
#[derive(Clone, Debug)]
pub struct DiagonalElement {
    n: usize,
    terms: BTreeMap<Pattern, BigInt>,
}

pub fn identity_element(n: usize) -> Result<DiagonalElement> {
    DiagonalElement::identity(n)
}

/// `a · b`; same as [`DiagonalElement::mul`].
pub fn diag_mul(a: &DiagonalElement, b: &DiagonalElement) -> Result<DiagonalElement> {
    a.mul(b)
}

/// `ω = γ₁γ₂⋯γ₂ₙ = [q₁,p₁]⋯[qₙ,pₙ]` expanded into its `2ⁿ` primitive terms.
pub fn omega_element(n: usize) -> Result<DiagonalElement> {
    check_dimension(n)?;
    if n > DEFAULT_EXPANSION_LIMIT {
        return Err(Error::ExpansionLimit {
            n,
            limit: DEFAULT_EXPANSION_LIMIT,
        });
    }
    let full = low_mask(n);
    let mut terms = BTreeMap::new();
    for value in 0..(1u64 << n) {
        let pq_count = n as u32 - value.count_ones();
        let c = if pq_count.is_multiple_of(2) { 1 } else { -1 };
        terms.insert(Pattern { care: full, value }, BigInt::from(c));
    }
    Ok(DiagonalElement { n, terms })
}

impl DiagonalElement {
    pub fn zero(n: usize) -> Result<Self> {
        check_dimension(n)?;
        Ok(DiagonalElement {
            n,
            terms: BTreeMap::new(),
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_pattern(n, Pattern::IDENTITY, 1)
    }

    pub fn from_pattern(n: usize, pattern: Pattern, coeff: impl Into<BigInt>) -> Result<Self> {
        let mut e = Self::zero(n)?;
        e.add_term(pattern, coeff.into())?;
        Ok(e)
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Pattern, BigInt)>,
    ) -> Result<Self> {
        let mut e = Self::zero(n)?;
        for (p, c) in terms {
            e.add_term(p, c)?;
        }
        Ok(e)
    }

    /// The literal `ρᵢ = qᵢpᵢ` (`negated = false`) or `ρ̄ᵢ = pᵢqᵢ`.
    pub fn literal(n: usize, position: usize, negated: bool) -> Result<Self> {
        if position >= n {
            return Err(Error::IndexOutOfRange { index: position, n });
        }
        let s = if negated {
            DiagSymbol::PQ
        } else {
            DiagSymbol::QP
        };
        Self::from_pattern(n, Pattern::IDENTITY.with(position, s), 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// No stored terms. Semantic zero-testing is [`DiagonalElement::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Pattern, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, pattern: &Pattern) -> Option<&BigInt> {
        self.terms.get(pattern)
    }

    pub(crate) fn add_term(&mut self, pattern: Pattern, coeff: BigInt) -> Result<()> {
        if pattern.care & !low_mask(self.n) != 0 || pattern.value & !pattern.care != 0 {
            return Err(Error::IndexOutOfRange {
                index: 63 - (pattern.care | pattern.value).leading_zeros() as usize,
                n: self.n,
            });
        }
        accumulate(&mut self.terms, pattern, coeff);
        Ok(())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            })
        } else {
            Ok(())
        }
    }

    /// Clifford product of two diagonal elements.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut terms = BTreeMap::new();
        for (pa, ca) in &self.terms {
            for (pb, cb) in &other.terms {
                if let Some(p) = pa.meet(*pb) {
                    accumulate(&mut terms, p, ca * cb);
                }
            }
        }
        Ok(DiagonalElement { n: self.n, terms })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            accumulate(&mut out.terms, *p, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = DiagonalElement {
            n: self.n,
            terms: BTreeMap::new(),
        };
        if !k.is_zero() {
            for (p, c) in &self.terms {
                out.terms.insert(*p, c * k);
            }
        }
        out
    }

    /// Coefficient of the primitive idempotent selected by `assignment`.
    pub fn eval_at(&self, assignment: &Assignment) -> Result<BigInt> {
        if assignment.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: assignment.len(),
            });
        }
        Ok(self.eval_bits(assignment.bits()))
    }

    pub(crate) fn eval_bits(&self, bits: u64) -> BigInt {
        self.terms
            .iter()
            .filter(|(p, _)| p.matches(bits))
            .map(|(_, c)| c)
            .sum()
    }

    /// Sum of the element's values over all `2ⁿ` assignments.
    pub fn total(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(p, c)| c << (self.n - p.fixed_count() as usize))
            .sum()
    }

    /// Expand every `Id` position as `QP + PQ` with the default limit.
    pub fn expand_primitive(&self) -> Result<Self> {
        self.expand_primitive_with(DEFAULT_EXPANSION_LIMIT)
    }

    pub fn expand_primitive_with(&self, limit: usize) -> Result<Self> {
        if self.n > limit {
            return Err(Error::ExpansionLimit { n: self.n, limit });
        }
        let full = low_mask(self.n);
        let mut terms = BTreeMap::new();
        for (p, c) in &self.terms {
            let free = full & !p.care;
            // enumerate all subsets of `free`
            let mut sub = free;
            loop {
                accumulate(
                    &mut terms,
                    Pattern {
                        care: full,
                        value: p.value | sub,
                    },
                    c.clone(),
                );
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
        }
        Ok(DiagonalElement { n: self.n, terms })
    }

    /// Semantic zero test.
    pub fn is_zero(&self) -> bool {
        is_zero(self).0
    }

    /// Multiply by `(𝟙 − z)` for a single pattern `z`.
    ///
    /// A term `t` meeting `z` is rewritten as `t − t·z`, with `𝟙 = ρ + ρ̄`
    /// applied at each position fixed by `z` but free in `t`; the resulting
    /// terms are pairwise orthogonal. Terms disjoint from `z` are unchanged.
    pub fn mul_complement(&self, z: Pattern, budget: usize) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (p, c) in &self.terms {
            if p.meet(z).is_none() {
                accumulate(&mut terms, *p, c.clone());
                continue;
            }
            let mut open = z.care & !p.care;
            let mut prefix = *p;
            while open != 0 {
                let bit = open & open.wrapping_neg();
                open &= !bit;
                let flipped = Pattern {
                    care: prefix.care | bit,
                    value: prefix.value | (!z.value & bit),
                };
                accumulate(&mut terms, flipped, c.clone());
                prefix = Pattern {
                    care: prefix.care | bit,
                    value: prefix.value | (z.value & bit),
                };
            }
            if terms.len() > budget {
                return Err(Error::TermBudget { budget });
            }
        }
        if terms.len() > budget {
            return Err(Error::TermBudget { budget });
        }
        Ok(DiagonalElement { n: self.n, terms })
    }

    /// Parse the one-term-per-line text form `coeff * s₁ s₂ … sₙ` with
    /// `s ∈ {qp, pq, 1}`. Blank lines are ignored.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut e = Self::zero(n)?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::parse(lineno + 1, msg);
            let (coeff, rest) = line
                .split_once('*')
                .ok_or_else(|| err("expected `coeff * symbols`".into()))?;
            let coeff: BigInt = coeff
                .trim()
                .parse()
                .map_err(|_| err(format!("bad coefficient {:?}", coeff.trim())))?;
            let mut p = Pattern::IDENTITY;
            let mut width = 0;
            for (i, tok) in rest.split_whitespace().enumerate() {
                let s = match tok {
                    "qp" => DiagSymbol::QP,
                    "pq" => DiagSymbol::PQ,
                    "1" => DiagSymbol::Id,
                    _ => return Err(err(format!("bad symbol {tok:?}"))),
                };
                if i >= n {
                    return Err(err(format!("more than {n} symbols")));
                }
                p = p.with(i, s);
                width = i + 1;
            }
            if width != n {
                return Err(err(format!("expected {n} symbols, found {width}")));
            }
            e.add_term(p, coeff)?;
        }
        Ok(e)
    }
}

fn accumulate(terms: &mut BTreeMap<Pattern, BigInt>, p: Pattern, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(p) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl PartialEq for DiagonalElement {
    fn eq(&self, other: &Self) -> bool {
        match self.try_sub(other) {
            Ok(d) => d.is_zero(),
            Err(_) => false,
        }
    }
}

impl Eq for DiagonalElement {}

impl Neg for &DiagonalElement {
    type Output = DiagonalElement;

    fn neg(self) -> DiagonalElement {
        DiagonalElement {
            n: self.n,
            terms: self.terms.iter().map(|(p, c)| (*p, -c)).collect(),
        }
    }
}

impl Add for &DiagonalElement {
    type Output = DiagonalElement;

    /// Panics on dimension mismatch; see [`DiagonalElement::try_add`].
    fn add(self, rhs: Self) -> DiagonalElement {
        self.try_add(rhs).expect("dimension mismatch")
    }
}

impl Sub for &DiagonalElement {
    type Output = DiagonalElement;

    fn sub(self, rhs: Self) -> DiagonalElement {
        self.try_sub(rhs).expect("dimension mismatch")
    }
}

impl fmt::Display for DiagonalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, c) in &self.terms {
            write!(f, "{c} *")?;
            for s in p.symbols(self.n) {
                write!(f, " {}", s.as_str())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl DiagonalElement {
    /// Every coefficient is +1 and the terms are pairwise orthogonal.
    pub fn is_disjoint_unit_sum(&self) -> bool {
        let pats: Vec<&Pattern> = self.terms.keys().collect();
        self.terms.values().all(|c| c.is_one())
            && pats
                .iter()
                .enumerate()
                .all(|(i, a)| pats[i + 1..].iter().all(|b| a.meet(**b).is_none()))
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }
}
