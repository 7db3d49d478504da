use std::fmt;

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::CONSTRUCTION_TOL;
use crate::{Error, Result};

/// An `n × n` matrix with `‖tᵀt − 𝕀‖_max ≤ tol`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthogonalMatrix {
    m: DMatrix<f64>,
    tol: f64,
}

impl OrthogonalMatrix {
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        Self::with_tol(m, CONSTRUCTION_TOL)
    }

    pub fn with_tol(m: DMatrix<f64>, tol: f64) -> Result<Self> {
        if m.nrows() == 0 {
            return Err(Error::EmptyDimension);
        }
        if m.nrows() != m.ncols() {
            return Err(Error::DimensionMismatch {
                left: m.nrows(),
                right: m.ncols(),
            });
        }
        let residual = orthogonality_residual(&m);
        if residual.is_nan() || residual > tol {
            return Err(Error::NotOrthogonal { residual });
        }
        Ok(OrthogonalMatrix { m, tol })
    }

    pub fn identity(n: usize) -> Self {
        OrthogonalMatrix {
            m: DMatrix::identity(n, n),
            tol: CONSTRUCTION_TOL,
        }
    }

    /// Diagonal `±1` matrix.
    pub fn diagonal(signs: &[i8]) -> Result<Self> {
        let m = DMatrix::from_fn(signs.len(), signs.len(), |r, c| {
            if r == c {
                f64::from(signs[r])
            } else {
                0.0
            }
        });
        Self::new(m)
    }

    /// Rotation by `theta` in the plane of coordinates `i < j`.
    pub fn rotation(n: usize, i: usize, j: usize, theta: f64) -> Self {
        let mut m = DMatrix::identity(n, n);
        let (s, c) = theta.sin_cos();
        m[(i, i)] = c;
        m[(j, j)] = c;
        m[(i, j)] = -s;
        m[(j, i)] = s;
        OrthogonalMatrix {
            m,
            tol: CONSTRUCTION_TOL,
        }
    }

    pub fn n(&self) -> usize {
        self.m.nrows()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn residual(&self) -> f64 {
        orthogonality_residual(&self.m)
    }

    pub fn det(&self) -> f64 {
        self.m.determinant()
    }

    pub fn transpose(&self) -> Self {
        OrthogonalMatrix {
            m: self.m.transpose(),
            tol: self.tol,
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        OrthogonalMatrix {
            m: &self.m * &other.m,
            tol: self.tol.max(other.tol),
        }
    }

    /// Text form: a header line `n`, then `n` rows of `n` numbers.
    pub fn to_text(&self) -> String {
        format!("{self}")
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut ms = parse_matrices(text)?;
        if ms.len() != 1 {
            return Err(Error::parse(
                1,
                format!("expected one matrix, found {}", ms.len()),
            ));
        }
        Ok(ms.remove(0))
    }
}

impl fmt::Display for OrthogonalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n())?;
        for r in 0..self.n() {
            let row: Vec<String> = (0..self.n())
                .map(|c| format!("{}", self.m[(r, c)]))
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Parse consecutive matrices in the row-major text form.
pub fn parse_matrices(text: &str) -> Result<Vec<OrthogonalMatrix>> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let (lineno, header) = lines[i];
        let n: usize = header
            .parse()
            .map_err(|_| Error::parse(lineno, format!("bad matrix header {header:?}")))?;
        if n == 0 {
            return Err(Error::parse(lineno, "matrix dimension must be at least 1"));
        }
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            let (ln, row) = *lines
                .get(i + 1 + r)
                .ok_or_else(|| Error::parse(lineno, format!("expected {n} rows")))?;
            let vals = row
                .split_whitespace()
                .map(|t| {
                    t.parse::<f64>()
                        .map_err(|_| Error::parse(ln, format!("bad number {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if vals.len() != n {
                return Err(Error::parse(
                    ln,
                    format!("expected {n} entries, found {}", vals.len()),
                ));
            }
            data.extend(vals);
        }
        out.push(OrthogonalMatrix::new(DMatrix::from_row_slice(n, n, &data))?);
        i += n + 1;
    }
    Ok(out)
}

fn orthogonality_residual(m: &DMatrix<f64>) -> f64 {
    let g = m.transpose() * m - DMatrix::<f64>::identity(m.nrows(), m.ncols());
    g.amax()
}

/// Haar sample from `O(n)`: QR of a seeded Gaussian matrix with the signs
/// of `R`'s diagonal absorbed into `Q`.
pub fn sample_orthogonal(n: usize, seed: u64) -> Result<OrthogonalMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_orthogonal_with(n, &mut rng)
}

pub fn sample_orthogonal_with<R: rand::Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<OrthogonalMatrix> {
    if n == 0 {
        return Err(Error::EmptyDimension);
    }
    let data: Vec<f64> = (0..n * n).map(|_| StandardNormal.sample(rng)).collect();
    let g = DMatrix::from_row_slice(n, n, &data);
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    OrthogonalMatrix::new(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimensional_samples_are_signs() {
        for seed in 0..20 {
            let t = sample_orthogonal(1, seed).unwrap();
            assert_eq!(t.matrix()[(0, 0)].abs(), 1.0);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let a = sample_orthogonal(4, 42).unwrap();
        let b = sample_orthogonal(4, 42).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_orthogonal(4, 43).unwrap());
    }

    #[test]
    fn rejects_non_orthogonal() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 0.1, 0.0, 1.0]);
        assert!(matches!(
            OrthogonalMatrix::new(m),
            Err(Error::NotOrthogonal { .. })
        ));
    }

    #[test]
    fn text_roundtrip_is_exact() {
        let t = sample_orthogonal(3, 7).unwrap();
        let back = OrthogonalMatrix::from_text(&t.to_text()).unwrap();
        assert_eq!(back, t);
        let two = parse_matrices(&format!("{}{}", t, OrthogonalMatrix::identity(2))).unwrap();
        assert_eq!(two.len(), 2);
        assert!(parse_matrices("2\n1 0\n").is_err());
        assert!(parse_matrices("2\n1 0\n0 x\n").is_err());
    }
}
