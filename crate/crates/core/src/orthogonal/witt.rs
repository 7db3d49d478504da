use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::{eigen_one_multiplicity, metric, mtnp_from_isometry, OrthogonalMatrix};
use crate::{Error, Result};

/// A null basis `{p′ᵢ, q′ᵢ}` of ℝⁿ'ⁿ normalised so that
/// `2B(p′ᵢ, q′ⱼ) = δᵢⱼ` and `B(p′ᵢ, p′ⱼ) = B(q′ᵢ, q′ⱼ) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct WittBasis {
    n: usize,
    p: DMatrix<f64>,
    q: DMatrix<f64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct WittResiduals {
    /// `max |2B(p′ᵢ, q′ⱼ) − δᵢⱼ|`
    pub pairing: f64,
    /// `max |B(p′ᵢ, p′ⱼ)|, |B(q′ᵢ, q′ⱼ)|`
    pub null: f64,
}

impl WittBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p_vectors(&self) -> Vec<DVector<f64>> {
        self.p.column_iter().map(|c| c.into_owned()).collect()
    }

    pub fn q_vectors(&self) -> Vec<DVector<f64>> {
        self.q.column_iter().map(|c| c.into_owned()).collect()
    }

    pub fn residuals(&self) -> WittResiduals {
        let b = metric(self.n);
        let pq =
            (self.p.transpose() * &b * &self.q) * 2.0 - DMatrix::<f64>::identity(self.n, self.n);
        let pp = self.p.transpose() * &b * &self.p;
        let qq = self.q.transpose() * &b * &self.q;
        WittResiduals {
            pairing: pq.amax(),
            null: pp.amax().max(qq.amax()),
        }
    }

    /// Coordinates of `x` in the basis `(p′₁…p′ₙ, q′₁…q′ₙ)`.
    pub fn coordinates(&self, x: &DMatrix<f64>) -> Option<DMatrix<f64>> {
        let mut w = DMatrix::zeros(2 * self.n, 2 * self.n);
        w.view_mut((0, 0), (2 * self.n, self.n)).copy_from(&self.p);
        w.view_mut((0, self.n), (2 * self.n, self.n))
            .copy_from(&self.q);
        w.lu().solve(x)
    }

    /// How far `(𝕀, t₁)` and `(𝕀, t₂)`, written in this basis, are from the
    /// coordinate planes `P` (no q′ components) and `Q` (no p′ components).
    pub fn plane_residual(&self, t1: &OrthogonalMatrix, t2: &OrthogonalMatrix) -> f64 {
        let n = self.n;
        let u = mtnp_from_isometry(t1);
        let v = mtnp_from_isometry(t2);
        let (Some(cu), Some(cv)) = (self.coordinates(u.basis()), self.coordinates(v.basis()))
        else {
            return f64::INFINITY;
        };
        let u_off = cu.view((n, 0), (n, n)).amax();
        let v_off = cv.view((0, 0), (n, n)).amax();
        u_off.max(v_off)
    }
}

/// Choose a Witt basis in which `(𝕀, t₁)` is `P` and `(𝕀, t₂)` is `Q`.
///
/// `p′ᵢ = (eᵢ, t₁eᵢ)` spans the first plane; `q′ⱼ` is the dual basis of the
/// second plane under `G = 2UᵀBV = 2(𝕀 − t₁ᵀt₂)`, which is invertible exactly
/// when the planes are transversal.
pub fn witt_rebase(t1: &OrthogonalMatrix, t2: &OrthogonalMatrix) -> Result<WittBasis> {
    if t1.n() != t2.n() {
        return Err(Error::DimensionMismatch {
            left: t1.n(),
            right: t2.n(),
        });
    }
    let n = t1.n();
    let dim = eigen_one_multiplicity(&(t1.matrix().transpose() * t2.matrix()));
    if dim > 0 {
        return Err(Error::NotTransversal { dim });
    }
    let u = mtnp_from_isometry(t1).basis().clone();
    let v = mtnp_from_isometry(t2).basis().clone();
    let g = u.transpose() * metric(n) * &v * 2.0;
    let ginv = g.try_inverse().ok_or(Error::NotTransversal { dim: 0 })?;
    Ok(WittBasis {
        n,
        p: u,
        q: v * ginv,
    })
}
