//! Exact real matrix representation of Cl(ℝⁿ'ⁿ) ≅ ℝ(2ⁿ).
//!
//! Generators are built by the tensor ladder
//! `γ₂ᵢ₋₁ = σz^{⊗(i−1)} ⊗ σx ⊗ 𝟙`, `γ₂ᵢ = σz^{⊗(i−1)} ⊗ J ⊗ 𝟙` with
//! `J = [[0, −1], [1, 0]]`, so `γ₂ᵢ₋₁² = 𝟙` and `γ₂ᵢ² = −𝟙`. Position 1 is the
//! leftmost tensor factor, hence the most significant bit of a row index, and
//! `qᵢpᵢ` projects onto bit value 0.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::ToPrimitive;

use crate::clifford::{DiagSymbol, DiagonalElement, EfbSymbol, EfbTerm, NullKind, WittVector};
use crate::sat::Assignment;
use crate::{Error, Result};

pub const GAMMA_LIMIT: usize = 5;

/// `num / 2^exp`, kept normalised (odd numerator or `exp == 0`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: i128,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };
    pub const HALF: Dyadic = Dyadic { num: 1, exp: 1 };

    pub fn new(num: i128, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        d.normalise();
        d
    }

    pub fn int(v: i128) -> Self {
        Dyadic { num: v, exp: 0 }
    }

    fn normalise(&mut self) {
        if self.num == 0 {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().min(self.exp);
        self.num >>= tz;
        self.exp -= tz;
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / 2f64.powi(self.exp as i32)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        if self.num == 0 {
            return rhs;
        }
        if rhs.num == 0 {
            return self;
        }
        let exp = self.exp.max(rhs.exp);
        let a = self
            .num
            .checked_shl(exp - self.exp)
            .expect("dyadic overflow");
        let b = rhs.num.checked_shl(exp - rhs.exp).expect("dyadic overflow");
        Dyadic::new(a.checked_add(b).expect("dyadic overflow"), exp)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            exp: self.exp,
        }
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + -rhs
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: Dyadic) -> Dyadic {
        if self.num == 0 || rhs.num == 0 {
            return Dyadic::ZERO;
        }
        Dyadic::new(
            self.num.checked_mul(rhs.num).expect("dyadic overflow"),
            self.exp + rhs.exp,
        )
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u128 << self.exp)
        }
    }
}

/// Dense square matrix of dyadic rationals, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicMatrix {
    dim: usize,
    data: Vec<Dyadic>,
}

impl DyadicMatrix {
    pub fn zero(dim: usize) -> Self {
        DyadicMatrix {
            dim,
            data: vec![Dyadic::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Dyadic::ONE;
        }
        m
    }

    pub fn from_ints(dim: usize, entries: &[i128]) -> Self {
        assert_eq!(entries.len(), dim * dim);
        DyadicMatrix {
            dim,
            data: entries.iter().map(|&v| Dyadic::int(v)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> Dyadic {
        self.data[r * self.dim + c]
    }

    pub fn scale(&self, k: Dyadic) -> Self {
        DyadicMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&v| v * k).collect(),
        }
    }

    pub fn kron(&self, other: &Self) -> Self {
        let d = self.dim * other.dim;
        let mut out = Self::zero(d);
        for r1 in 0..self.dim {
            for c1 in 0..self.dim {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.dim {
                    for c2 in 0..other.dim {
                        out.data[(r1 * other.dim + r2) * d + c1 * other.dim + c2] =
                            a * other.get(r2, c2);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Dyadic::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|r| (0..self.dim).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Dyadic> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }
}

impl Add for &DyadicMatrix {
    type Output = DyadicMatrix;

    fn add(self, rhs: &DyadicMatrix) -> DyadicMatrix {
        assert_eq!(self.dim, rhs.dim);
        DyadicMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &DyadicMatrix {
    type Output = DyadicMatrix;

    fn sub(self, rhs: &DyadicMatrix) -> DyadicMatrix {
        assert_eq!(self.dim, rhs.dim);
        DyadicMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &DyadicMatrix {
    type Output = DyadicMatrix;

    fn mul(self, rhs: &DyadicMatrix) -> DyadicMatrix {
        assert_eq!(self.dim, rhs.dim);
        let d = self.dim;
        let mut out = DyadicMatrix::zero(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.data[r * d + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = rhs.data[k * d + c];
                    if !b.is_zero() {
                        out.data[r * d + c] = out.data[r * d + c] + a * b;
                    }
                }
            }
        }
        out
    }
}

/// The `2n` generators and the derived Witt vectors as exact matrices.
#[derive(Clone, Debug)]
pub struct GammaRep {
    n: usize,
    gamma: Vec<DyadicMatrix>,
    p: Vec<DyadicMatrix>,
    q: Vec<DyadicMatrix>,
    qp: Vec<DyadicMatrix>,
    pq: Vec<DyadicMatrix>,
}

pub fn build_gamma(n: usize) -> Result<GammaRep> {
    GammaRep::new(n)
}

impl GammaRep {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDimension);
        }
        if n > GAMMA_LIMIT {
            return Err(Error::TooManyVariables {
                n,
                max: GAMMA_LIMIT,
            });
        }
        let id2 = DyadicMatrix::identity(2);
        let sx = DyadicMatrix::from_ints(2, &[0, 1, 1, 0]);
        let j = DyadicMatrix::from_ints(2, &[0, -1, 1, 0]);
        let sz = DyadicMatrix::from_ints(2, &[1, 0, 0, -1]);
        let ladder = |slot: usize, m: &DyadicMatrix| {
            let mut out = DyadicMatrix::identity(1);
            for i in 0..n {
                let f = match i.cmp(&slot) {
                    std::cmp::Ordering::Less => &sz,
                    std::cmp::Ordering::Equal => m,
                    std::cmp::Ordering::Greater => &id2,
                };
                out = out.kron(f);
            }
            out
        };
        let mut gamma = Vec::with_capacity(2 * n);
        for i in 0..n {
            gamma.push(ladder(i, &sx));
            gamma.push(ladder(i, &j));
        }
        let mut p = Vec::with_capacity(n);
        let mut q = Vec::with_capacity(n);
        for i in 0..n {
            p.push((&gamma[2 * i] + &gamma[2 * i + 1]).scale(Dyadic::HALF));
            q.push((&gamma[2 * i] - &gamma[2 * i + 1]).scale(Dyadic::HALF));
        }
        let qp = (0..n).map(|i| &q[i] * &p[i]).collect();
        let pq = (0..n).map(|i| &p[i] * &q[i]).collect();
        Ok(GammaRep {
            n,
            gamma,
            p,
            q,
            qp,
            pq,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    /// Generator `γᵢ`, 1-based as in the algebra's conventions.
    pub fn gamma(&self, i: usize) -> &DyadicMatrix {
        &self.gamma[i - 1]
    }

    pub fn identity(&self) -> DyadicMatrix {
        DyadicMatrix::identity(self.dim())
    }

    /// `γᵢγⱼ + γⱼγᵢ = 2δᵢⱼ(−1)^{i+1}𝟙` for all `i, j`.
    pub fn generator_relations_hold(&self) -> bool {
        let id = self.identity();
        let zero = DyadicMatrix::zero(self.dim());
        for i in 1..=2 * self.n {
            for j in 1..=2 * self.n {
                let a = self.gamma(i);
                let b = self.gamma(j);
                let ac = &(a * b) + &(b * a);
                let expect = if i != j {
                    zero.clone()
                } else if i % 2 == 1 {
                    id.scale(Dyadic::int(2))
                } else {
                    id.scale(Dyadic::int(-2))
                };
                if ac != expect {
                    return false;
                }
            }
        }
        true
    }

    pub fn vector(&self, v: WittVector) -> Result<&DyadicMatrix> {
        v.check(self.n)?;
        Ok(match v.kind {
            NullKind::P => &self.p[v.position],
            NullKind::Q => &self.q[v.position],
        })
    }

    fn symbol(&self, position: usize, s: EfbSymbol) -> &DyadicMatrix {
        match s {
            EfbSymbol::QP => &self.qp[position],
            EfbSymbol::PQ => &self.pq[position],
            EfbSymbol::P => &self.p[position],
            EfbSymbol::Q => &self.q[position],
        }
    }

    pub fn matrix_of_term(&self, t: &EfbTerm) -> Result<DyadicMatrix> {
        if t.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: t.n(),
            });
        }
        let c = t.coeff().to_i128().ok_or(Error::CoefficientOverflow)?;
        let mut m = self.identity();
        for (i, s) in t.symbols().into_iter().enumerate() {
            m = &m * self.symbol(i, s);
        }
        Ok(m.scale(Dyadic::int(c)))
    }

    pub fn matrix_of_diagonal(&self, a: &DiagonalElement) -> Result<DyadicMatrix> {
        if a.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: a.n(),
            });
        }
        let mut out = DyadicMatrix::zero(self.dim());
        for (pat, c) in a.terms() {
            let c = c.to_i128().ok_or(Error::CoefficientOverflow)?;
            let mut m = self.identity();
            for i in 0..self.n {
                match pat.symbol(i) {
                    DiagSymbol::QP => m = &m * &self.qp[i],
                    DiagSymbol::PQ => m = &m * &self.pq[i],
                    // {qᵢ, pᵢ}
                    DiagSymbol::Id => m = &m * &(&self.qp[i] + &self.pq[i]),
                }
            }
            out = &out + &m.scale(Dyadic::int(c));
        }
        Ok(out)
    }

    /// `γ₁γ₂⋯γ₂ₙ`
    pub fn omega(&self) -> DyadicMatrix {
        self.gamma.iter().fold(self.identity(), |acc, g| &acc * g)
    }

    /// Row of the primitive idempotent selected by `sigma`: variable 1 is the
    /// most significant bit, a true variable (`QP`) contributes bit 0.
    pub fn index_of(&self, sigma: &Assignment) -> usize {
        sigma
            .values()
            .iter()
            .fold(0usize, |acc, &v| (acc << 1) | usize::from(!v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyadic_arithmetic() {
        let h = Dyadic::HALF;
        assert_eq!(h + h, Dyadic::ONE);
        assert_eq!(h * Dyadic::int(4), Dyadic::int(2));
        assert_eq!((h - Dyadic::ONE).to_string(), "-1/2");
        assert_eq!(Dyadic::new(6, 2), Dyadic::new(3, 1));
    }

    #[test]
    fn relations_exact() {
        for n in 1..=GAMMA_LIMIT {
            assert!(
                build_gamma(n).unwrap().generator_relations_hold(),
                "n = {n}"
            );
        }
        assert!(build_gamma(6).is_err());
        assert!(build_gamma(0).is_err());
    }

    #[test]
    fn witt_pair_anticommutator_is_identity() {
        let g = build_gamma(3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let p = g.vector(WittVector::p(i)).unwrap();
                let q = g.vector(WittVector::q(j)).unwrap();
                let ac = &(p * q) + &(q * p);
                if i == j {
                    assert_eq!(ac, g.identity());
                } else {
                    assert!(ac.is_zero());
                }
                let p2 = g.vector(WittVector::p(j)).unwrap();
                assert!((&(p * p2) + &(p2 * p)).is_zero());
            }
        }
    }

    #[test]
    fn literal_matrix_idempotent() {
        let g = build_gamma(2).unwrap();
        let rho = DiagonalElement::literal(2, 0, false).unwrap();
        let m = g.matrix_of_diagonal(&rho).unwrap();
        assert_eq!(&m * &m, m);
        // ρ₁ true ↦ row bit 0 at the most significant position
        assert_eq!(
            m.diagonal(),
            vec![Dyadic::ONE, Dyadic::ONE, Dyadic::ZERO, Dyadic::ZERO]
        );
    }

    #[test]
    fn omega_matches_expansion() {
        for n in 1..=3 {
            let g = build_gamma(n).unwrap();
            let w = crate::clifford::omega_element(n).unwrap();
            assert_eq!(g.matrix_of_diagonal(&w).unwrap(), g.omega());
        }
    }

    #[test]
    fn identity_maps_to_identity() {
        let g = build_gamma(3).unwrap();
        let one = DiagonalElement::identity(3).unwrap();
        assert_eq!(g.matrix_of_diagonal(&one).unwrap(), g.identity());
    }
}
