use nalgebra::{DMatrix, DVector};

use super::{OrthogonalMatrix, RANK_CUTOFF, VERIFY_TOL};
use crate::clifford::{NullKind, WittVector};
use crate::{Error, Result};

/// `B = diag(+1ₙ, −1ₙ)`.
pub fn metric(n: usize) -> DMatrix<f64> {
    DMatrix::from_fn(2 * n, 2 * n, |r, c| {
        if r != c {
            0.0
        } else if r < n {
            1.0
        } else {
            -1.0
        }
    })
}

/// Coordinates of `pᵢ = ½(γ₂ᵢ₋₁ + γ₂ᵢ)` or `qᵢ = ½(γ₂ᵢ₋₁ − γ₂ᵢ)` in ℝ²ⁿ.
pub fn witt_vector_coords(v: WittVector, n: usize) -> Result<DVector<f64>> {
    v.check(n)?;
    let mut x = DVector::zeros(2 * n);
    x[v.position] = 0.5;
    x[n + v.position] = match v.kind {
        NullKind::P => 0.5,
        NullKind::Q => -0.5,
    };
    Ok(x)
}

/// A plane of ℝⁿ'ⁿ given by basis columns in a `2n × k` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct NullFrame {
    n: usize,
    basis: DMatrix<f64>,
}

impl NullFrame {
    pub fn new(basis: DMatrix<f64>) -> Result<Self> {
        if basis.nrows() == 0 || !basis.nrows().is_multiple_of(2) {
            return Err(Error::DimensionMismatch {
                left: basis.nrows(),
                right: basis.ncols(),
            });
        }
        Ok(NullFrame {
            n: basis.nrows() / 2,
            basis,
        })
    }

    pub fn from_witt_vectors(vectors: &[WittVector], n: usize) -> Result<Self> {
        let cols = vectors
            .iter()
            .map(|v| witt_vector_coords(*v, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(DMatrix::from_columns(&cols))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis(&self) -> &DMatrix<f64> {
        &self.basis
    }

    /// `FᵀBF`
    pub fn gram(&self) -> DMatrix<f64> {
        self.basis.transpose() * metric(self.n) * &self.basis
    }
}

/// `(𝕀, t)`: columns `(eᵢ, t eᵢ)`.
pub fn mtnp_from_isometry(t: &OrthogonalMatrix) -> NullFrame {
    let n = t.n();
    let mut basis = DMatrix::zeros(2 * n, n);
    basis.view_mut((0, 0), (n, n)).fill_with_identity();
    basis.view_mut((n, 0), (n, n)).copy_from(t.matrix());
    NullFrame { n, basis }
}

pub fn is_null_plane(frame: &NullFrame) -> bool {
    frame.gram().amax() <= VERIFY_TOL
}

fn numerical_rank(m: &DMatrix<f64>) -> usize {
    let sv = m.clone().singular_values();
    let largest = sv.iter().cloned().fold(0.0, f64::max);
    if largest == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > RANK_CUTOFF * largest).count()
}

/// `dim(F₁ ∩ F₂) = dim F₁ + dim F₂ − rank[F₁ F₂]`.
pub fn intersect_dim(a: &NullFrame, b: &NullFrame) -> Result<usize> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            left: a.n,
            right: b.n,
        });
    }
    let mut cat = DMatrix::zeros(2 * a.n, a.dim() + b.dim());
    cat.view_mut((0, 0), (2 * a.n, a.dim())).copy_from(&a.basis);
    cat.view_mut((0, a.dim()), (2 * a.n, b.dim()))
        .copy_from(&b.basis);
    Ok(a.dim() + b.dim() - numerical_rank(&cat))
}

/// Multiplicity of the eigenvalue 1 of an orthogonal matrix.
///
/// Orthogonal matrices are normal, so the singular values of `m − 𝕀` are
/// exactly the distances `|λ − 1|` over its eigenvalues.
pub fn eigen_one_multiplicity(m: &DMatrix<f64>) -> usize {
    let n = m.nrows();
    let d = m - DMatrix::<f64>::identity(n, n);
    let sv = d.singular_values();
    let largest = sv.iter().cloned().fold(0.0, f64::max);
    let cutoff = RANK_CUTOFF * largest.max(1.0);
    sv.iter().filter(|&&s| s <= cutoff).count()
}

/// `(𝕀, t₁) ∩ (𝕀, t₂) = {0}`, decided on the spectrum of `t₁ᵀt₂`.
pub fn is_transversal(t1: &OrthogonalMatrix, t2: &OrthogonalMatrix) -> bool {
    eigen_one_multiplicity(&(t1.matrix().transpose() * t2.matrix())) == 0
}
