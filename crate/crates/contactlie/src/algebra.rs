//! Lie algebras as exact structure-constant tensors: Jacobi checking, center,
//! derived series, the Chevalley–Eilenberg differential on vector-valued
//! forms, and the derivation / complex-structure predicates.

use crate::forms::VectorValuedForm;
use crate::linalg::{vec_add, vec_is_zero, vec_zero, Endomorphism, Matrix};
use crate::rational::Rational;
use crate::subspace::Subspace;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("bracket index ({i},{j}) out of range for dimension {dim}")]
    IndexOutOfRange { i: usize, j: usize, dim: usize },
    #[error("bracket coefficient vector for ({i},{j}) has length {got}, expected {expected}")]
    BadCoefficientLength { i: usize, j: usize, got: usize, expected: usize },
    #[error("bracket for ({i},{j}) given twice")]
    DuplicatePair { i: usize, j: usize },
    #[error("diagonal bracket [e_{i},e_{i}] must vanish")]
    NonzeroDiagonal { i: usize },
    #[error("Jacobi identity fails at ({i},{j},{k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("form degree {degree} ≥ dimension {dim}: differential not defined here")]
    DegreeTooHigh { degree: usize, dim: usize },
    #[error("form lives on dimension {form_dim}, algebra has dimension {dim}")]
    FormDimensionMismatch { form_dim: usize, dim: usize },
}

/// An antisymmetric bracket tensor that has *not* necessarily passed the
/// Jacobi test. [`LieAlgebra`] wraps one that has; keeping the raw tensor
/// around lets the d² = 0 ⟺ Jacobi equivalence be exercised in both
/// directions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BracketTensor {
    dim: usize,
    /// c[i][j] = coordinates of [e_i, e_j]; antisymmetry enforced at build.
    c: Vec<Vec<Vec<Rational>>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum JacobiReport {
    Ok,
    /// First violating triple i < j < k with the nonzero defect vector
    /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
    Violation {
        i: usize,
        j: usize,
        k: usize,
        defect: Vec<Rational>,
    },
}

impl JacobiReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, JacobiReport::Ok)
    }
}

impl BracketTensor {
    /// Builds from sparse pairs (i, j, coefficients of [e_i, e_j]), 0-based,
    /// i ≠ j; omitted pairs are zero. The mirrored entries are filled in.
    pub fn from_pairs(
        dim: usize,
        pairs: &[(usize, usize, Vec<Rational>)],
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        let mut c = vec![vec![vec_zero(dim); dim]; dim];
        let mut seen = std::collections::HashSet::new();
        for (i, j, coeffs) in pairs {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(AlgebraError::IndexOutOfRange { i, j, dim });
            }
            if coeffs.len() != dim {
                return Err(AlgebraError::BadCoefficientLength {
                    i,
                    j,
                    got: coeffs.len(),
                    expected: dim,
                });
            }
            if i == j {
                if !vec_is_zero(coeffs) {
                    return Err(AlgebraError::NonzeroDiagonal { i });
                }
                continue;
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(AlgebraError::DuplicatePair { i, j });
            }
            c[i][j] = coeffs.clone();
            c[j][i] = coeffs.iter().map(|x| -x).collect();
        }
        Ok(BracketTensor { dim, c })
    }

    pub fn zero(dim: usize) -> Self {
        BracketTensor::from_pairs(dim, &[]).expect("dim > 0")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of [e_i, e_j].
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        &self.c[i][j]
    }

    /// Bilinear bracket of arbitrary coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec_zero(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let scale = &x[i] * &y[j];
                for k in 0..self.dim {
                    let cij = &self.c[i][j][k];
                    if !cij.is_zero() {
                        out[k] = &out[k] + &(&scale * cij);
                    }
                }
            }
        }
        out
    }

    /// Matrix of ad_x = [x, ·].
    pub fn ad(&self, x: &[Rational]) -> Endomorphism {
        let cols: Vec<Vec<Rational>> = (0..self.dim)
            .map(|j| self.bracket(x, &crate::linalg::basis_vec(self.dim, j)))
            .collect();
        Matrix::from_columns(&cols)
    }

    pub fn jacobi_check(&self) -> JacobiReport {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let mut defect = self.bracket(&self.c[i][j], &crate::linalg::basis_vec(self.dim, k));
                    defect = vec_add(&defect, &self.bracket(&self.c[j][k], &crate::linalg::basis_vec(self.dim, i)));
                    defect = vec_add(&defect, &self.bracket(&self.c[k][i], &crate::linalg::basis_vec(self.dim, j)));
                    if !vec_is_zero(&defect) {
                        return JacobiReport::Violation { i, j, k, defect };
                    }
                }
            }
        }
        JacobiReport::Ok
    }

    /// Pushes the tensor through an invertible change of basis whose columns
    /// are the new basis vectors in old coordinates.
    pub fn change_of_basis(&self, t: &Matrix) -> Result<BracketTensor, AlgebraError> {
        assert_eq!((t.rows(), t.cols()), (self.dim, self.dim));
        let t_inv = t.inverse().expect("change of basis must be invertible");
        let mut pairs = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let b = self.bracket(&t.column(i), &t.column(j));
                pairs.push((i, j, t_inv.mul_vec(&b)));
            }
        }
        BracketTensor::from_pairs(self.dim, &pairs)
    }
}

/// A bracket tensor that passed the Jacobi test at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    tensor: BracketTensor,
}

impl LieAlgebra {
    pub fn new(tensor: BracketTensor) -> Result<Self, AlgebraError> {
        match tensor.jacobi_check() {
            JacobiReport::Ok => Ok(LieAlgebra { tensor }),
            JacobiReport::Violation { i, j, k, .. } => {
                Err(AlgebraError::JacobiViolation { i, j, k })
            }
        }
    }

    pub fn from_pairs(
        dim: usize,
        pairs: &[(usize, usize, Vec<Rational>)],
    ) -> Result<Self, AlgebraError> {
        LieAlgebra::new(BracketTensor::from_pairs(dim, pairs)?)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            tensor: BracketTensor::zero(dim),
        }
    }

    pub fn tensor(&self) -> &BracketTensor {
        &self.tensor
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.tensor.bracket(x, y)
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        self.tensor.basis_bracket(i, j)
    }

    pub fn ad(&self, x: &[Rational]) -> Endomorphism {
        self.tensor.ad(x)
    }

    pub fn jacobi_check(&self) -> JacobiReport {
        self.tensor.jacobi_check()
    }

    pub fn change_of_basis(&self, t: &Matrix) -> Result<LieAlgebra, AlgebraError> {
        LieAlgebra::new(self.tensor.change_of_basis(t)?)
    }

    /// Direct sum: brackets of the summands, no cross terms.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim();
        let m = other.dim();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = self.basis_bracket(i, j).to_vec();
                v.extend(vec_zero(m));
                pairs.push((i, j, v));
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let mut v = vec_zero(n);
                v.extend(other.basis_bracket(i, j).to_vec());
                pairs.push((n + i, n + j, v));
            }
        }
        LieAlgebra::from_pairs(n + m, &pairs).expect("direct sum of Lie algebras is a Lie algebra")
    }

    /// Center 𝔷(𝔤) = {x : ad_x = 0}, via the kernel of the n² × n system.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let m = Matrix::from_fn(n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            self.tensor.c[i][j][k].clone()
        });
        Subspace::span(n, &m.kernel_basis())
    }

    /// Span of [A, B] for subspaces A, B.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for u in a.basis_vectors() {
            for v in b.basis_vectors() {
                vectors.push(self.bracket(&u, &v));
            }
        }
        Subspace::span(self.dim(), &vectors)
    }

    /// Commutator ideal 𝔤′ = [𝔤, 𝔤].
    pub fn derived_ideal(&self) -> Subspace {
        let full = Subspace::full(self.dim());
        self.bracket_span(&full, &full)
    }

    pub fn derived_series(&self) -> DerivedSeries {
        let mut terms = vec![Subspace::full(self.dim())];
        loop {
            let last = terms.last().unwrap();
            let next = self.bracket_span(last, last);
            if &next == last {
                break;
            }
            terms.push(next);
            if terms.last().unwrap().is_zero() {
                break;
            }
        }
        let is_solvable = terms.last().unwrap().is_zero();
        // derived length ≤ 2: 𝔤″ = 0  (abelian and 2-step cases included)
        let is_2step_solvable = match terms.len() {
            1 => terms[0].is_zero(),
            2 => true,
            _ => terms.get(2).map_or(false, Subspace::is_zero),
        };
        // nilpotency needs the lower central series
        let mut lcs = vec![Subspace::full(self.dim())];
        let full = Subspace::full(self.dim());
        loop {
            let last = lcs.last().unwrap();
            let next = self.bracket_span(&full, last);
            if &next == last {
                break;
            }
            lcs.push(next);
            if lcs.last().unwrap().is_zero() {
                break;
            }
        }
        let is_nilpotent = lcs.last().unwrap().is_zero();
        DerivedSeries {
            terms,
            is_solvable,
            is_2step_solvable,
            is_nilpotent,
        }
    }

    /// True iff D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
    pub fn is_derivation(&self, d: &Endomorphism) -> bool {
        let n = self.dim();
        assert_eq!((d.rows(), d.cols()), (n, n));
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(self.basis_bracket(i, j));
                let rhs = vec_add(
                    &self.bracket(&d.column(i), &crate::linalg::basis_vec(n, j)),
                    &self.bracket(&crate::linalg::basis_vec(n, i), &d.column(j)),
                );
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug)]
pub struct DerivedSeries {
    /// 𝔤 ⊇ 𝔤′ ⊇ 𝔤″ ⊇ … until stabilization.
    pub terms: Vec<Subspace>,
    pub is_solvable: bool,
    pub is_2step_solvable: bool,
    pub is_nilpotent: bool,
}

// --- Chevalley–Eilenberg differential --------------------------------------

/// d of a vector-valued k-form (trivial coefficients), componentwise on the
/// target:
/// dω(x₀,…,x_k) = Σ_{a<b} (−1)^{a+b} ω([x_a,x_b], x₀,…,x̂_a,…,x̂_b,…,x_k).
/// For 1-forms this is dω(x,y) = −ω([x,y]).
pub fn ce_differential(
    tensor: &BracketTensor,
    omega: &VectorValuedForm,
) -> Result<VectorValuedForm, AlgebraError> {
    let n = tensor.dim();
    if omega.ambient_dim() != n {
        return Err(AlgebraError::FormDimensionMismatch {
            form_dim: omega.ambient_dim(),
            dim: n,
        });
    }
    let k = omega.degree();
    if k >= n {
        return Err(AlgebraError::DegreeTooHigh { degree: k, dim: n });
    }
    let m = omega.target_dim();
    Ok(VectorValuedForm::from_fn(n, k + 1, m, |t| {
        let mut acc = vec![Rational::zero(); m];
        for a in 0..k + 1 {
            for b in a + 1..k + 1 {
                let bracket = tensor.basis_bracket(t[a], t[b]);
                if vec_is_zero(bracket) {
                    continue;
                }
                let rest: Vec<usize> = (0..k + 1).filter(|&p| p != a && p != b).map(|p| t[p]).collect();
                // ω(bracket, rest…), expanding the first slot linearly
                let mut val = vec![Rational::zero(); m];
                for (l, coef) in bracket.iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    let mut args = Vec::with_capacity(k);
                    args.push(l);
                    args.extend_from_slice(&rest);
                    let w = omega.value_on_basis(&args);
                    for (acc_c, w_c) in val.iter_mut().zip(&w) {
                        *acc_c = &*acc_c + &(coef * w_c);
                    }
                }
                let sign_neg = (a + b) % 2 == 1;
                for (acc_c, v_c) in acc.iter_mut().zip(&val) {
                    if sign_neg {
                        *acc_c = &*acc_c - v_c;
                    } else {
                        *acc_c = &*acc_c + v_c;
                    }
                }
            }
        }
        acc
    }))
}

/// True iff dω = 0. Forms of degree ≥ dim are cocycles trivially (the target
/// of d is the zero space).
pub fn is_cocycle(tensor: &BracketTensor, omega: &VectorValuedForm) -> bool {
    if omega.degree() >= tensor.dim() {
        return true;
    }
    ce_differential(tensor, omega)
        .map(|d| d.is_zero())
        .unwrap_or(true)
}

// --- complex structures -----------------------------------------------------

/// J² = −I.
pub fn is_complex_structure(j: &Endomorphism) -> bool {
    j.is_square() && j.mul(j) == Matrix::identity(j.rows()).neg()
}

/// Abelian complex structure: J² = −I and [Jx, Jy] = [x, y] on basis pairs.
pub fn is_abelian_complex(l: &LieAlgebra, j: &Endomorphism) -> bool {
    if !is_complex_structure(j) {
        return false;
    }
    let n = l.dim();
    for a in 0..n {
        for b in a + 1..n {
            if l.bracket(&j.column(a), &j.column(b)) != l.basis_bracket(a, b) {
                return false;
            }
        }
    }
    true
}

/// Integrability defect J[x,y] − [Jx,y] − [x,Jy] − J[Jx,Jy] on a basis pair;
/// J is integrable iff this vanishes for all pairs.
pub fn nijenhuis_defect(l: &LieAlgebra, j: &Endomorphism, a: usize, b: usize) -> Vec<Rational> {
    let n = l.dim();
    let ea = crate::linalg::basis_vec(n, a);
    let eb = crate::linalg::basis_vec(n, b);
    let mut out = j.mul_vec(l.basis_bracket(a, b));
    out = crate::linalg::vec_sub(&out, &l.bracket(&j.column(a), &eb));
    out = crate::linalg::vec_sub(&out, &l.bracket(&ea, &j.column(b)));
    out = crate::linalg::vec_sub(&out, &j.mul_vec(&l.bracket(&j.column(a), &j.column(b))));
    out
}

pub fn is_integrable_complex(l: &LieAlgebra, j: &Endomorphism) -> bool {
    if !is_complex_structure(j) {
        return false;
    }
    let n = l.dim();
    (0..n).all(|a| (a + 1..n).all(|b| vec_is_zero(&nijenhuis_defect(l, j, a, b))))
}

// Abelian complex structures are integrable: [Jx,Jy]=[x,y] makes the defect
// J[x,y] − [Jx,y] − [x,Jy] − J[x,y] = −([Jx,y] + [x,Jy]), and replacing
// y ↦ Jy in the abelian identity shows that sum vanishes. Tests assert this.

/// Convenience: scale a coordinate vector list into a bracket-pair list.
pub fn pair(i: usize, j: usize, coeffs: Vec<Rational>) -> (usize, usize, Vec<Rational>) {
    (i, j, coeffs)
}

/// Sparse single-target bracket: [e_i, e_j] = s·e_k in dimension n.
pub fn single(n: usize, i: usize, j: usize, k: usize, s: Rational) -> (usize, usize, Vec<Rational>) {
    let mut v = vec_zero(n);
    v[k] = s;
    (i, j, v)
}

/// [e_i, e_j] = Σ s_r · e_{k_r}.
pub fn multi(n: usize, i: usize, j: usize, terms: &[(usize, Rational)]) -> (usize, usize, Vec<Rational>) {
    let mut v = vec_zero(n);
    for (k, s) in terms {
        v[*k] = &v[*k] + s;
    }
    (i, j, v)
}
