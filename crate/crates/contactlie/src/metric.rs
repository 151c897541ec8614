//! Positive-definite inner products with an exactly computed, cached inverse.
//!
//! Definiteness is certified by Sylvester's criterion on the leading
//! principal minors — an exact test, since all entries are rational. The
//! inverse is computed once at construction; every Ricci contraction and
//! index-raising downstream reuses it, so no orthogonalization (and no square
//! root) is ever needed.

use crate::forms::VectorValuedForm;
use crate::linalg::{Endomorphism, Matrix};
use crate::rational::{rint, Rational};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricError {
    #[error("metric matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("metric matrix is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("metric is not positive definite: leading principal minor {k} is not positive")]
    NotPositiveDefinite { k: usize },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Metric {
    g: Matrix,
    g_inv: Matrix,
}

impl Metric {
    pub fn new(g: Matrix) -> Result<Self, MetricError> {
        if !g.is_square() {
            return Err(MetricError::NotSquare {
                rows: g.rows(),
                cols: g.cols(),
            });
        }
        for i in 0..g.rows() {
            for j in 0..i {
                if g.get(i, j) != g.get(j, i) {
                    return Err(MetricError::NotSymmetric { i, j });
                }
            }
        }
        for (k, minor) in g.leading_principal_minors().iter().enumerate() {
            if minor <= &rint(0) {
                return Err(MetricError::NotPositiveDefinite { k: k + 1 });
            }
        }
        let g_inv = g.inverse().expect("positive definite matrices are invertible");
        Ok(Metric { g, g_inv })
    }

    /// The standard inner product (orthonormal basis).
    pub fn standard(n: usize) -> Self {
        Metric {
            g: Matrix::identity(n),
            g_inv: Matrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.g
    }

    /// The exact inverse gram matrix g^{ab}, computed once at construction.
    pub fn inverse_matrix(&self) -> &Matrix {
        &self.g_inv
    }

    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        crate::linalg::dot(x, &self.g.mul_vec(y))
    }

    /// Lowers an index: x ↦ g(x, ·) as a covector.
    pub fn flat(&self, x: &[Rational]) -> Vec<Rational> {
        self.g.mul_vec(x)
    }

    /// Raises an index: covector α ↦ the unique x with g(x, ·) = α.
    pub fn sharp(&self, alpha: &[Rational]) -> Vec<Rational> {
        self.g_inv.mul_vec(alpha)
    }

    /// g(Ax, y) = −g(x, Ay) for all x, y ⟺ AᵀG + GA = 0.
    pub fn is_skew_adjoint(&self, a: &Endomorphism) -> bool {
        a.transpose().mul(&self.g).add(&self.g.mul(a)).is_zero()
    }

    /// Symmetric part of A with respect to g: ½(A + A^♯), where A^♯ is the
    /// g-adjoint G⁻¹AᵀG.
    pub fn symmetric_part(&self, a: &Endomorphism) -> Endomorphism {
        let adjoint = self.g_inv.mul(&a.transpose()).mul(&self.g);
        a.add(&adjoint).scale(&crate::rational::rat(1, 2))
    }

    /// g(φX, φY) = g(X, Y) − η(X)η(Y) (almost contact compatibility), as the
    /// exact matrix identity φᵀGφ = G − ηᵀη.
    pub fn is_contact_compatible(&self, phi: &Endomorphism, eta: &[Rational]) -> bool {
        let lhs = phi.transpose().mul(&self.g).mul(phi);
        let eta_outer = Matrix::from_fn(self.dim(), self.dim(), |i, j| &eta[i] * &eta[j]);
        lhs == self.g.sub(&eta_outer)
    }

    /// Fundamental 2-form Φ(X, Y) = g(X, φY). Returns `None` when the
    /// resulting bilinear form is not antisymmetric (i.e. g and φ are not
    /// compatible enough to define a 2-form).
    pub fn fundamental_form(&self, phi: &Endomorphism) -> Option<VectorValuedForm> {
        let n = self.dim();
        let m = self.g.mul(phi); // Φ(e_i, e_j) = (GΦ)_{ij}
        if !m.is_antisymmetric() {
            return None;
        }
        let mut form = VectorValuedForm::zero(n, 2, 1);
        for i in 0..n {
            for j in i + 1..n {
                if !m.get(i, j).is_zero() {
                    form.set_coeff(&[i, j], vec![m.get(i, j).clone()]);
                }
            }
        }
        Some(form)
    }
}
