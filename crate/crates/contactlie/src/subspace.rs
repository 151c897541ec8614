//! Subspaces of the ambient coordinate space, stored canonically.
//!
//! The basis is kept in reduced row echelon form, so two subspaces are equal
//! as sets iff their stored bases are identical — no representation games.
//! These house 𝔥, 𝔳, the center, the derived ideals, Ker ψ and Im ψ.

use crate::linalg::{vec_is_zero, Matrix};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    /// Rows are the reduced echelon basis; no zero rows.
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of the given vectors, canonicalized.
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length != ambient dimension");
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let (reduced, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
        if pivots.is_empty() {
            // keep the zero subspace in its canonical 0×ambient shape
            return Subspace::zero(ambient);
        }
        let rows: Vec<Vec<Rational>> = (0..pivots.len()).map(|i| reduced.row(i)).collect();
        Subspace {
            ambient,
            basis: Matrix::from_rows(rows),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// The canonical basis vectors (reduced echelon rows).
    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|i| self.basis.row(i)).collect()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if vec_is_zero(v) {
            return true;
        }
        let mut rows = self.basis_vectors();
        rows.push(v.to_vec());
        Matrix::from_rows(rows).rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Sum of subspaces (span of the union of bases).
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.ambient, &rows)
    }

    /// Intersection, via the kernel of [Uᵀ | −Vᵀ].
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let p = self.dim();
        let q = other.dim();
        if p == 0 || q == 0 {
            return Subspace::zero(self.ambient);
        }
        let u = self.basis_vectors();
        let v = other.basis_vectors();
        // columns: coefficients (a_1..a_p, b_1..b_q); rows: ambient coords.
        let m = Matrix::from_fn(self.ambient, p + q, |i, j| {
            if j < p {
                u[j][i].clone()
            } else {
                -v[j - p][i].clone()
            }
        });
        let vectors: Vec<Vec<Rational>> = m
            .kernel_basis()
            .into_iter()
            .map(|coeffs| {
                let mut w = crate::linalg::vec_zero(self.ambient);
                for (j, uj) in u.iter().enumerate() {
                    for i in 0..self.ambient {
                        w[i] = &w[i] + &(&coeffs[j] * &uj[i]);
                    }
                }
                w
            })
            .collect();
        Subspace::span(self.ambient, &vectors)
    }

    /// Image of the subspace under an endomorphism.
    pub fn map_by(&self, a: &Matrix) -> Subspace {
        let vectors: Vec<Vec<Rational>> = self
            .basis_vectors()
            .iter()
            .map(|v| a.mul_vec(v))
            .collect();
        Subspace::span(self.ambient, &vectors)
    }
}
