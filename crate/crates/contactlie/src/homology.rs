//! Exact integer linear algebra and first homology of lattice groups: Smith
//! normal form with unimodular transformation matrices, the order-m plane
//! rotations that preserve a lattice, and abelianizations of the cocompact
//! lattices acting on the model geometries — both from their explicit
//! presentation matrices and through general semidirect-product
//! presentations, which the tests play against each other.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("no order-{0} rotation of the plane preserves a lattice")]
    NoLatticeRotation(usize),
    #[error("parameter `{0}` must be nonzero")]
    ZeroParameter(&'static str),
    #[error("presentation has {got} action matrices for {expected} generators")]
    ActionCountMismatch { got: usize, expected: usize },
    #[error("action matrix {index} is {rows}×{cols}, expected square of size {expected}")]
    ActionShapeMismatch {
        index: usize,
        rows: usize,
        cols: usize,
        expected: usize,
    },
    #[error("action matrix {index} is not invertible over the integers")]
    ActionNotUnimodular { index: usize },
    #[error("relator {index} has {got} exponents for {expected} generators")]
    RelatorLengthMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },
}

/// Dense matrix over arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = IntegerMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntegerMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    /// Block-diagonal assembly of the given matrices.
    pub fn block_diagonal(blocks: &[&IntegerMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = IntegerMatrix::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.data[ro + i][co + j] = b.data[i][j].clone();
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i][j] = value;
    }

    pub fn transpose(&self) -> Self {
        IntegerMatrix::from_fn(self.cols, self.rows, |i, j| self.data[j][i].clone())
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        IntegerMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| &self.data[i][k] * &other.data[k][j]).sum()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|row| row.iter().all(BigInt::is_zero))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in &mut self.data {
            row.swap(a, b);
        }
    }

    /// row a ← row a − q · row b
    fn row_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let delta = q * &self.data[b][j];
            self.data[a][j] -= delta;
        }
    }

    /// col a ← col a − q · col b
    fn col_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        for row in &mut self.data {
            let delta = q * &row[b];
            row[a] -= delta;
        }
    }

    /// row a ← row a + row b
    fn row_add(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            let v = self.data[b][j].clone();
            self.data[a][j] += v;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for v in &mut self.data[a] {
            *v = -std::mem::take(v);
        }
    }
}

/// Decomposition U·M·V = S with U, V unimodular and S diagonal with
/// d₁ | d₂ | … ≥ 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub s: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        (0..self.s.rows.min(self.s.cols))
            .take_while(|&d| !self.s.get(d, d).is_zero())
            .count()
    }
}

fn min_abs_nonzero(s: &IntegerMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..s.rows() {
        for j in from..s.cols() {
            let e = s.get(i, j);
            if e.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some((bi, bj)) => e.abs() < s.get(bi, bj).abs(),
            };
            if better {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smith normal form over ℤ by Euclidean row and column reduction, returning
/// the diagonal form together with the unimodular transformations realizing
/// it. Every intermediate step is an elementary operation of determinant ±1,
/// so U and V are exactly invertible over the integers.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_nonzero(&s, t) else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            // Euclid on column t: remainders strictly shrink the pivot.
            let mut dirty = false;
            for i in t + 1..rows {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let q = s.get(i, t) / s.get(t, t);
                if !q.is_zero() {
                    s.row_sub(i, t, &q);
                    u.row_sub(i, t, &q);
                }
                if !s.get(i, t).is_zero() {
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Euclid on row t; a column swap can repopulate column t, which
            // the next pass then clears.
            for j in t + 1..cols {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let q = s.get(t, j) / s.get(t, t);
                if !q.is_zero() {
                    s.col_sub(j, t, &q);
                    v.col_sub(j, t, &q);
                }
                if !s.get(t, j).is_zero() {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Pivot row and column are clear; fold in any entry of the
            // remaining block the pivot does not divide, so the divisibility
            // chain holds globally.
            let pivot = s.get(t, t).clone();
            let offender = (t + 1..rows).find_map(|i| {
                (t + 1..cols)
                    .find(|&j| !(s.get(i, j) % &pivot).is_zero())
                    .map(|_| i)
            });
            match offender {
                Some(i) => {
                    s.row_add(t, i);
                    u.row_add(t, i);
                }
                None => break,
            }
        }
        t += 1;
    }
    for d in 0..rows.min(cols) {
        if s.get(d, d).is_negative() {
            s.negate_row(d);
            u.negate_row(d);
        }
    }
    SmithDecomposition { s, u, v }
}

/// A finitely generated abelian group ℤ^free_rank ⊕ ⊕ᵢ ℤ/dᵢ with each
/// invariant factor dᵢ > 1 and d₁ | d₂ | ….
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abelianization {
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl Abelianization {
    /// First Betti number: the rank of the free part.
    pub fn b1(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }
}

impl std::fmt::Display for Abelianization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("ℤ".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("ℤ^{}", self.free_rank));
        }
        for d in &self.invariant_factors {
            parts.push(format!("ℤ/{d}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

/// Cokernel ℤ^cols / rowspan(P) of a presentation matrix whose rows are the
/// relations, read off the Smith normal form.
pub fn cokernel(p: &IntegerMatrix) -> Abelianization {
    let snf = smith_normal_form(p);
    let mut invariant_factors = Vec::new();
    let mut rank = 0;
    for d in 0..p.rows().min(p.cols()) {
        let e = snf.s.get(d, d);
        if e.is_zero() {
            break;
        }
        rank += 1;
        if !e.is_one() {
            invariant_factors.push(e.clone());
        }
    }
    Abelianization {
        invariant_factors,
        free_rank: p.cols() - rank,
    }
}

/// The order-m rotation of the plane in its lattice basis, when one exists:
/// the identity for m = 1, the half-turn −I for m = 2, and for m ∈ {3, 4, 6}
/// the companion matrix of x² − tx + 1 with t = 2cos(2π/m) ∈ {−1, 0, 1}.
/// Every other order is excluded by the crystallographic restriction.
pub fn rotation_integer_form(m: usize) -> Option<IntegerMatrix> {
    let trace = match m {
        1 => return Some(IntegerMatrix::identity(2)),
        2 => return Some(IntegerMatrix::from_int_rows(&[&[-1, 0], &[0, -1]])),
        3 => -1,
        4 => 0,
        6 => 1,
        _ => return None,
    };
    Some(IntegerMatrix::from_int_rows(&[&[0, -1], &[1, trace]]))
}

/// The order-m rotation acting diagonally on 2n lattice planes of ℤ^{4n}.
fn horizontal_rotation(m: usize, n: usize) -> Result<IntegerMatrix, HomologyError> {
    let r = rotation_integer_form(m).ok_or(HomologyError::NoLatticeRotation(m))?;
    let blocks = vec![&r; 2 * n];
    Ok(IntegerMatrix::block_diagonal(&blocks))
}

/// First homology of the lattice Γ_m(n) acting on the model geometry in
/// dimension 4n + 3: on the generators (central t, horizontal a₁ … a₄ₙ) the
/// relations abelianize to the presentation matrix diag(m) ⊕ (E − I), where
/// E is the order-m rotation acting diagonally on 2n lattice planes.
pub fn gamma_abelianization(m: usize, n: usize) -> Result<Abelianization, HomologyError> {
    if n == 0 {
        return Err(HomologyError::ZeroParameter("n"));
    }
    let e = horizontal_rotation(m, n)?;
    let k = 4 * n;
    let mut p = IntegerMatrix::zeros(1 + k, 1 + k);
    p.set(0, 0, BigInt::from(m as i64));
    for i in 0..k {
        for j in 0..k {
            let mut v = e.get(i, j).clone();
            if i == j {
                v -= BigInt::one();
            }
            p.set(1 + i, 1 + j, v);
        }
    }
    Ok(cokernel(&p))
}

/// Presentation of ℤᵏ ⋊_ρ Q for a finitely presented group
/// Q = ⟨x₁ … x_r | w₁ … w_s⟩ acting by ρ(xᵢ) ∈ GL(k, ℤ). Only the exponent
/// sums of the relators enter the abelianization, so that is all the
/// presentation stores; consistency of ρ with the relators is the caller's
/// responsibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidirectPresentation {
    pub generators: usize,
    pub relator_exponents: Vec<Vec<i64>>,
    pub action: Vec<IntegerMatrix>,
}

impl SemidirectPresentation {
    pub fn lattice_rank(&self) -> usize {
        self.action.first().map_or(0, IntegerMatrix::rows)
    }
}

/// Abelianization of ℤᵏ ⋊_ρ Q from its presentation: on the generators
/// (x₁ … x_r, a₁ … a_k) the relations are the relator exponent rows and, for
/// each generator, the conjugation relations a ↦ ρ(xᵢ)a contributing the
/// columns of ρ(xᵢ) − I.
pub fn semidirect_abelianization(
    p: &SemidirectPresentation,
) -> Result<Abelianization, HomologyError> {
    let r = p.generators;
    if p.action.len() != r {
        return Err(HomologyError::ActionCountMismatch {
            got: p.action.len(),
            expected: r,
        });
    }
    let k = p.lattice_rank();
    for (index, a) in p.action.iter().enumerate() {
        if a.rows() != k || a.cols() != k {
            return Err(HomologyError::ActionShapeMismatch {
                index,
                rows: a.rows(),
                cols: a.cols(),
                expected: k,
            });
        }
        if !a.is_unimodular() {
            return Err(HomologyError::ActionNotUnimodular { index });
        }
    }
    for (index, w) in p.relator_exponents.iter().enumerate() {
        if w.len() != r {
            return Err(HomologyError::RelatorLengthMismatch {
                index,
                got: w.len(),
                expected: r,
            });
        }
    }

    let s = p.relator_exponents.len();
    let mut pm = IntegerMatrix::zeros(s + r * k, r + k);
    for (i, w) in p.relator_exponents.iter().enumerate() {
        for (j, e) in w.iter().enumerate() {
            pm.set(i, j, BigInt::from(*e));
        }
    }
    for (g, a) in p.action.iter().enumerate() {
        for j in 0..k {
            // relation (ρ(x_g) − I)·e_j, one row per lattice generator
            for i in 0..k {
                let mut v = a.get(i, j).clone();
                if i == j {
                    v -= BigInt::one();
                }
                pm.set(s + g * k + j, r + i, v);
            }
        }
    }
    Ok(cokernel(&pm))
}

/// Γ_m(n) as a semidirect presentation: the cyclic group ⟨g | gᵐ⟩ acting on
/// ℤ^{4n} by the diagonal order-m rotation. Independent route to the same
/// homology as [`gamma_abelianization`].
pub fn gamma_semidirect_presentation(
    m: usize,
    n: usize,
) -> Result<SemidirectPresentation, HomologyError> {
    if n == 0 {
        return Err(HomologyError::ZeroParameter("n"));
    }
    Ok(SemidirectPresentation {
        generators: 1,
        relator_exponents: vec![vec![m as i64]],
        action: vec![horizontal_rotation(m, n)?],
    })
}

/// ℤ^{4n} ⋊ Q₈ with the quaternion group ⟨x, y | x⁴, x²y⁻², yxy⁻¹x⟩ acting
/// on each copy of the quaternion lattice by left multiplication by i and j.
pub fn quaternion_semidirect_presentation(
    n: usize,
) -> Result<SemidirectPresentation, HomologyError> {
    if n == 0 {
        return Err(HomologyError::ZeroParameter("n"));
    }
    // left multiplication by i and j on the basis (1, i, j, k)
    let li = IntegerMatrix::from_int_rows(&[
        &[0, -1, 0, 0],
        &[1, 0, 0, 0],
        &[0, 0, 0, -1],
        &[0, 0, 1, 0],
    ]);
    let lj = IntegerMatrix::from_int_rows(&[
        &[0, 0, -1, 0],
        &[0, 0, 0, 1],
        &[1, 0, 0, 0],
        &[0, -1, 0, 0],
    ]);
    let blocks_i = vec![&li; n];
    let blocks_j = vec![&lj; n];
    Ok(SemidirectPresentation {
        generators: 2,
        relator_exponents: vec![vec![4, 0], vec![2, -2], vec![2, 0]],
        action: vec![
            IntegerMatrix::block_diagonal(&blocks_i),
            IntegerMatrix::block_diagonal(&blocks_j),
        ],
    })
}
