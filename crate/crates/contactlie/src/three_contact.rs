//! Almost 3-contact structures: quaternion-like triples of almost contact
//! structures, abelianness, the invariants ζ_i / 𝒵 / δ / ψ, the sphere of
//! structures, the rank-of-ψ case analysis, the dimension-7 classification,
//! and the canonical-connection criteria with the Reeb-Killing tensors A_ij.

use crate::algebra::{ce_differential, is_abelian_complex, is_cocycle, LieAlgebra};
use crate::contact::{is_abelian_contact, normality_tensor, AbelianWitness, AlmostContact, ContactError};
use crate::forms::VectorValuedForm;
use crate::linalg::{basis_vec, dot, vec_add, vec_is_zero, vec_scale, vec_sub, Endomorphism, Matrix};
use crate::metric::Metric;
use crate::rational::{rint, Rational};
use crate::subspace::Subspace;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ThreeContactError {
    #[error("structures live in dimension {got}, algebra has dimension {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("dimension {0} is not congruent to 3 modulo 4")]
    DimensionNot3Mod4(usize),
    #[error("quaternion-like identities violated: {0:?}")]
    InvalidTriple(Vec<TripleViolation>),
    #[error("structure {index} is not abelian ({witness})")]
    NotAbelian { index: usize, witness: AbelianWitness },
    #[error("sphere parameter is not a unit vector")]
    NotUnitVector,
    #[error("η_r([ξ_s,ξ_t]) is not of the form 2δ·ε_rst")]
    DeltaPattern,
    #[error("metric is not compatible with structure {index}")]
    IncompatibleMetric { index: usize },
    #[error("structure is not canonical")]
    NotCanonical,
    #[error("operation requires dimension 7, got {0}")]
    Dim7Only(usize),
    #[error("classification theorem violated: {0}")]
    TheoremViolation(String),
    #[error("internal cross-check failed: {0}")]
    InternalCrossCheck(String),
    #[error(transparent)]
    Contact(#[from] ContactError),
}

/// One failed identity of a quaternion-like triple, tagged by the even
/// permutation (i, j, k) it was checked for (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleViolation {
    pub permutation: (usize, usize, usize),
    pub identity: TripleIdentity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleIdentity {
    /// φ_k = φ_iφ_j − ξ_i⊗η_j
    PhiComposition,
    /// φ_k = −φ_jφ_i + ξ_j⊗η_i
    PhiAnticomposition,
    /// ξ_k = φ_iξ_j
    XiImage,
    /// ξ_k = −φ_jξ_i
    XiAntiImage,
    /// η_k = η_i∘φ_j
    EtaComposition,
    /// η_k = −η_j∘φ_i
    EtaAnticomposition,
}

const EVEN_PERMS: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];

fn outer(u: &[Rational], v: &[Rational]) -> Matrix {
    Matrix::from_fn(u.len(), v.len(), |r, c| &u[r] * &v[c])
}

fn triple_violations(s: &[AlmostContact; 3]) -> Vec<TripleViolation> {
    let mut out = Vec::new();
    for &(i, j, k) in &EVEN_PERMS {
        let perm = (i + 1, j + 1, k + 1);
        let mut push = |identity| out.push(TripleViolation { permutation: perm, identity });
        let comp = s[i].phi().mul(s[j].phi()).sub(&outer(s[i].xi(), s[j].eta()));
        if &comp != s[k].phi() {
            push(TripleIdentity::PhiComposition);
        }
        let anticomp = s[j].phi().mul(s[i].phi()).neg().add(&outer(s[j].xi(), s[i].eta()));
        if &anticomp != s[k].phi() {
            push(TripleIdentity::PhiAnticomposition);
        }
        if s[i].phi().mul_vec(s[j].xi()) != s[k].xi() {
            push(TripleIdentity::XiImage);
        }
        if crate::linalg::vec_neg(&s[j].phi().mul_vec(s[i].xi())) != s[k].xi() {
            push(TripleIdentity::XiAntiImage);
        }
        let n = s[i].dim();
        let eta_i_phi_j: Vec<Rational> = (0..n).map(|c| dot(s[i].eta(), &s[j].phi().column(c))).collect();
        if eta_i_phi_j != s[k].eta() {
            push(TripleIdentity::EtaComposition);
        }
        let eta_j_phi_i: Vec<Rational> =
            (0..n).map(|c| -dot(s[j].eta(), &s[i].phi().column(c))).collect();
        if eta_j_phi_i != s[k].eta() {
            push(TripleIdentity::EtaAnticomposition);
        }
    }
    out
}

/// A triple of almost contact structures satisfying the quaternion-like
/// compatibility identities, on a space of dimension 4n + 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Almost3Contact {
    structures: [AlmostContact; 3],
}

impl Almost3Contact {
    pub fn new(structures: [AlmostContact; 3]) -> Result<Self, ThreeContactError> {
        let n = structures[0].dim();
        for s in &structures {
            if s.dim() != n {
                return Err(ThreeContactError::DimensionMismatch { got: s.dim(), expected: n });
            }
        }
        if n % 4 != 3 {
            return Err(ThreeContactError::DimensionNot3Mod4(n));
        }
        let violations = triple_violations(&structures);
        if !violations.is_empty() {
            return Err(ThreeContactError::InvalidTriple(violations));
        }
        Ok(Almost3Contact { structures })
    }

    pub fn dim(&self) -> usize {
        self.structures[0].dim()
    }

    pub fn structures(&self) -> &[AlmostContact; 3] {
        &self.structures
    }

    pub fn structure(&self, i: usize) -> &AlmostContact {
        &self.structures[i]
    }

    pub fn phi(&self, i: usize) -> &Endomorphism {
        self.structures[i].phi()
    }

    pub fn xi(&self, i: usize) -> &[Rational] {
        self.structures[i].xi()
    }

    pub fn eta(&self, i: usize) -> &[Rational] {
        self.structures[i].eta()
    }

    /// 𝔥 = ∩ Ker η_i.
    pub fn horizontal(&self) -> Subspace {
        let rows: Vec<Vec<Rational>> = (0..3).map(|i| self.eta(i).to_vec()).collect();
        let m = Matrix::from_rows(rows);
        Subspace::span(self.dim(), &m.kernel_basis())
    }

    /// 𝔳 = span(ξ₁, ξ₂, ξ₃).
    pub fn vertical(&self) -> Subspace {
        Subspace::span(self.dim(), &[self.xi(0).to_vec(), self.xi(1).to_vec(), self.xi(2).to_vec()])
    }

    /// Projection onto 𝔥 along 𝔳: x ↦ x − Σ η_i(x)ξ_i.
    pub fn project_horizontal(&self, x: &[Rational]) -> Vec<Rational> {
        let mut v = x.to_vec();
        for i in 0..3 {
            v = vec_sub(&v, &vec_scale(&dot(self.eta(i), x), self.xi(i)));
        }
        v
    }
}

/// The standard triple (vertical rotations plus the quaternionic action on
/// 4n horizontal directions) in the basis (ξ₁, ξ₂, ξ₃, τ₁, …, τ₄ₙ):
/// φ_i τ_r = τ_{in+r}, φ_i τ_{in+r} = −τ_r, φ_i τ_{jn+r} = τ_{kn+r},
/// φ_i τ_{kn+r} = −τ_{jn+r} for each even permutation (i, j, k).
pub fn standard_phi_triple(n: usize) -> [Endomorphism; 3] {
    let dim = 4 * n + 3;
    let mut phis = Vec::with_capacity(3);
    for &(i, j, k) in &EVEN_PERMS {
        let mut phi = Matrix::zeros(dim, dim);
        phi.set(k, j, rint(1)); // φ_i ξ_j = ξ_k
        phi.set(j, k, rint(-1)); // φ_i ξ_k = −ξ_j
        let tau = |block: usize, r: usize| 3 + block * n + r;
        for r in 0..n {
            phi.set(tau(i + 1, r), tau(0, r), rint(1));
            phi.set(tau(0, r), tau(i + 1, r), rint(-1));
            phi.set(tau(k + 1, r), tau(j + 1, r), rint(1));
            phi.set(tau(j + 1, r), tau(k + 1, r), rint(-1));
        }
        phis.push(phi);
    }
    [phis[0].clone(), phis[1].clone(), phis[2].clone()]
}

/// The standard triple with ξ_i = e_i, η_i = e^i on dimension 4n + 3.
pub fn standard_3contact(n: usize) -> Almost3Contact {
    let dim = 4 * n + 3;
    let [p1, p2, p3] = standard_phi_triple(n);
    let make = |phi: Endomorphism, i: usize| {
        AlmostContact::new(phi, basis_vec(dim, i), basis_vec(dim, i))
            .expect("standard triple satisfies the almost contact identities")
    };
    Almost3Contact::new([make(p1, 0), make(p2, 1), make(p3, 2)])
        .expect("standard triple satisfies the quaternion-like identities")
}

/// Validation report for a candidate triple against an algebra.
#[derive(Debug, Clone)]
pub struct ThreeContactValidation {
    pub violations: Vec<TripleViolation>,
    pub horizontal: Subspace,
    pub vertical: Subspace,
    pub horizontal_dim: usize,
}

impl ThreeContactValidation {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the quaternion-like identities for every even permutation, in both
/// composition orders, and reports 𝔥 = ∩Ker η_i and 𝔳 = ⟨ξ₁, ξ₂, ξ₃⟩.
pub fn validate_almost_3contact(
    l: &LieAlgebra,
    structures: &[AlmostContact; 3],
) -> Result<ThreeContactValidation, ThreeContactError> {
    let n = l.dim();
    for s in structures {
        if s.dim() != n {
            return Err(ThreeContactError::DimensionMismatch { got: s.dim(), expected: n });
        }
    }
    if n % 4 != 3 {
        return Err(ThreeContactError::DimensionNot3Mod4(n));
    }
    let violations = triple_violations(structures);
    let rows: Vec<Vec<Rational>> = (0..3).map(|i| structures[i].eta().to_vec()).collect();
    let horizontal = Subspace::span(n, &Matrix::from_rows(rows).kernel_basis());
    let vertical = Subspace::span(
        n,
        &[
            structures[0].xi().to_vec(),
            structures[1].xi().to_vec(),
            structures[2].xi().to_vec(),
        ],
    );
    if violations.is_empty() && horizontal.dim() != n - 3 {
        return Err(ThreeContactError::InternalCrossCheck(format!(
            "valid triple with horizontal dimension {} ≠ {}",
            horizontal.dim(),
            n - 3
        )));
    }
    let horizontal_dim = horizontal.dim();
    Ok(ThreeContactValidation { violations, horizontal, vertical, horizontal_dim })
}

/// All three structures abelian. The two-out-of-three property (if two
/// structures of a valid triple are abelian, so is the third) is re-verified;
/// a count of exactly two is an internal error.
pub fn is_abelian_3contact(l: &LieAlgebra, t: &Almost3Contact) -> Result<bool, ThreeContactError> {
    let mut abelian = [false; 3];
    let mut witness = None;
    for i in 0..3 {
        let r = is_abelian_contact(l, t.structure(i))?;
        abelian[i] = r.is_abelian;
        if !r.is_abelian && witness.is_none() {
            witness = Some((i, r.witness.unwrap()));
        }
    }
    let count = abelian.iter().filter(|&&b| b).count();
    if count == 2 {
        return Err(ThreeContactError::InternalCrossCheck(
            "exactly two of the three structures are abelian".into(),
        ));
    }
    Ok(count == 3)
}

fn require_abelian(l: &LieAlgebra, t: &Almost3Contact) -> Result<(), ThreeContactError> {
    for i in 0..3 {
        let r = is_abelian_contact(l, t.structure(i))?;
        if !r.is_abelian {
            return Err(ThreeContactError::NotAbelian { index: i + 1, witness: r.witness.unwrap() });
        }
    }
    Ok(())
}

/// Change of basis adapted to the vertical/horizontal splitting:
/// columns ξ₁, ξ₂, ξ₃ followed by the canonical basis of 𝔥.
struct VerticalSplit {
    basis: Matrix,
    inv: Matrix,
    h_vectors: Vec<Vec<Rational>>,
    m: usize,
}

impl VerticalSplit {
    fn new(t: &Almost3Contact) -> Result<Self, ThreeContactError> {
        let h_vectors = t.horizontal().basis_vectors();
        let m = h_vectors.len();
        let mut columns = vec![t.xi(0).to_vec(), t.xi(1).to_vec(), t.xi(2).to_vec()];
        columns.extend(h_vectors.iter().cloned());
        let basis = Matrix::from_columns(&columns);
        let inv = basis.inverse().ok_or_else(|| {
            ThreeContactError::InternalCrossCheck("ξ_i together with Ker η do not span".into())
        })?;
        Ok(VerticalSplit { basis, inv, h_vectors, m })
    }

    fn coords(&self, v: &[Rational]) -> Vec<Rational> {
        self.inv.mul_vec(v)
    }

    /// Restricts an 𝔥-preserving map (given by its values on the 𝔥-basis) to
    /// an m×m matrix; errors if any image leaves 𝔥.
    fn restrict<F>(&self, mut image: F, what: &str) -> Result<Matrix, ThreeContactError>
    where
        F: FnMut(&[Rational]) -> Vec<Rational>,
    {
        let mut out = Matrix::zeros(self.m, self.m);
        for (a, h) in self.h_vectors.iter().enumerate() {
            let coords = self.coords(&image(h));
            if coords[..3].iter().any(|c| !c.is_zero()) {
                return Err(ThreeContactError::InternalCrossCheck(format!(
                    "{what} does not preserve the horizontal space"
                )));
            }
            for r in 0..self.m {
                out.set(r, a, coords[3 + r].clone());
            }
        }
        Ok(out)
    }
}

fn epsilon(r: usize, s: usize, t: usize) -> i64 {
    match (r, s, t) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// The invariants of an abelian triple: ζ_k = [ξ_i, ξ_j], the horizontal
/// vector 𝒵 = φ_iζ_i, the Reeb commutator constant δ with
/// η_r([ξ_s, ξ_t]) = 2δ·ε_rst, and ψ = (ad_{ξ_i}∘φ_i)|𝔥 in the canonical
/// basis of 𝔥 (columns of `h_basis`).
#[derive(Debug, Clone)]
pub struct StructureInvariants {
    pub zeta: [Vec<Rational>; 3],
    pub z: Vec<Rational>,
    pub delta: Rational,
    pub psi: Endomorphism,
    pub psi_rank: usize,
    pub h_basis: Vec<Vec<Rational>>,
}

impl StructureInvariants {
    pub fn z_is_zero(&self) -> bool {
        vec_is_zero(&self.z)
    }
}

/// Computes ζ_i, 𝒵, δ, ψ and re-derives every identity relating them:
/// i-independence of 𝒵 and ψ (in both composition orders), the δ pattern,
/// ζ_i = −φ_i𝒵 + 2δξ_i, ψ(𝒵) = 0, ad_𝒵|𝔥 = 2(ψ² + δψ), and 4 | rank ψ.
pub fn structure_invariants(
    l: &LieAlgebra,
    t: &Almost3Contact,
) -> Result<StructureInvariants, ThreeContactError> {
    require_same_dim(l, t)?;
    require_abelian(l, t)?;
    let split = VerticalSplit::new(t)?;

    // ζ_k = [ξ_i, ξ_j] for even permutations
    let mut zeta: [Vec<Rational>; 3] = [vec![], vec![], vec![]];
    for &(i, j, k) in &EVEN_PERMS {
        zeta[k] = l.bracket(t.xi(i), t.xi(j));
    }

    // δ via η_r([ξ_s, ξ_t]) = 2δ·ε_rst, checked for all 27 index triples
    let two_delta = dot(t.eta(0), &zeta[0]);
    for r in 0..3 {
        for s in 0..3 {
            for u in 0..3 {
                let lhs = dot(t.eta(r), &l.bracket(t.xi(s), t.xi(u)));
                if lhs != &two_delta * rint(epsilon(r, s, u)) {
                    return Err(ThreeContactError::DeltaPattern);
                }
            }
        }
    }
    let delta = two_delta / rint(2);

    // 𝒵 = φ_iζ_i, independent of i
    let z = t.phi(0).mul_vec(&zeta[0]);
    for i in 1..3 {
        if t.phi(i).mul_vec(&zeta[i]) != z {
            return Err(ThreeContactError::InternalCrossCheck(
                "φ_iζ_i depends on i although the structure is abelian".into(),
            ));
        }
    }
    if split.coords(&z)[..3].iter().any(|c| !c.is_zero()) {
        return Err(ThreeContactError::InternalCrossCheck("𝒵 is not horizontal".into()));
    }

    // ζ_i = −φ_i𝒵 + 2δξ_i
    for i in 0..3 {
        let expected = vec_add(
            &crate::linalg::vec_neg(&t.phi(i).mul_vec(&z)),
            &vec_scale(&(rint(2) * &delta), t.xi(i)),
        );
        if zeta[i] != expected {
            return Err(ThreeContactError::InternalCrossCheck(
                "ζ_i ≠ −φ_i𝒵 + 2δξ_i".into(),
            ));
        }
    }

    // ψ = (ad_{ξ_i}∘φ_i)|𝔥 = (φ_i∘ad_{ξ_i})|𝔥, independent of i
    let mut psi: Option<Matrix> = None;
    for i in 0..3 {
        let a = split.restrict(|h| l.bracket(t.xi(i), &t.phi(i).mul_vec(h)), "ad_ξ∘φ")?;
        let b = split.restrict(|h| t.phi(i).mul_vec(&l.bracket(t.xi(i), h)), "φ∘ad_ξ")?;
        if a != b {
            return Err(ThreeContactError::InternalCrossCheck(
                "ad_{ξ_i}∘φ_i ≠ φ_i∘ad_{ξ_i} on 𝔥".into(),
            ));
        }
        match &psi {
            None => psi = Some(a),
            Some(p) if *p == a => {}
            Some(_) => {
                return Err(ThreeContactError::InternalCrossCheck(
                    "ψ depends on the index i although the structure is abelian".into(),
                ))
            }
        }
    }
    let psi = psi.unwrap();

    // ψ(𝒵) = 0
    let z_h: Vec<Rational> = split.coords(&z)[3..].to_vec();
    if !vec_is_zero(&psi.mul_vec(&z_h)) {
        return Err(ThreeContactError::InternalCrossCheck("ψ(𝒵) ≠ 0".into()));
    }

    // ad_𝒵|𝔥 = 2(ψ² + δψ)
    let ad_z = split.restrict(|h| l.bracket(&z, h), "ad_𝒵")?;
    let expected = psi.mul(&psi).add(&psi.scale(&delta)).scale(&rint(2));
    if ad_z != expected {
        return Err(ThreeContactError::InternalCrossCheck("ad_𝒵|𝔥 ≠ 2(ψ² + δψ)".into()));
    }

    let psi_rank = psi.rank();
    if psi_rank % 4 != 0 {
        return Err(ThreeContactError::InternalCrossCheck(format!(
            "rank ψ = {psi_rank} is not a multiple of 4"
        )));
    }
    Ok(StructureInvariants { zeta, z, delta, psi, psi_rank, h_basis: split.h_vectors })
}

fn require_same_dim(l: &LieAlgebra, t: &Almost3Contact) -> Result<(), ThreeContactError> {
    if l.dim() != t.dim() {
        return Err(ThreeContactError::DimensionMismatch { got: t.dim(), expected: l.dim() });
    }
    Ok(())
}

/// (φ_a, ξ_a, η_a) = (Σa_iφ_i, Σa_iξ_i, Σa_iη_i) for a rational unit vector.
pub fn sphere_structure(
    t: &Almost3Contact,
    a: &[Rational; 3],
) -> Result<AlmostContact, ThreeContactError> {
    let norm: Rational = a.iter().map(|c| c * c).sum();
    if !norm.is_one() {
        return Err(ThreeContactError::NotUnitVector);
    }
    let n = t.dim();
    let mut phi = Matrix::zeros(n, n);
    let mut xi = vec![Rational::zero(); n];
    let mut eta = vec![Rational::zero(); n];
    for i in 0..3 {
        phi = phi.add(&t.phi(i).scale(&a[i]));
        xi = vec_add(&xi, &vec_scale(&a[i], t.xi(i)));
        eta = vec_add(&eta, &vec_scale(&a[i], t.eta(i)));
    }
    AlmostContact::new(phi, xi, eta).map_err(|e| {
        ThreeContactError::InternalCrossCheck(format!(
            "sphere point of a valid triple is not a valid structure: {e}"
        ))
    })
}

// --- case analysis -------------------------------------------------------------

/// The horizontal space as an algebra in its own right, with the restricted
/// quaternion triple J_i = φ_i|𝔥. `basis` has columns ξ₁, ξ₂, ξ₃ followed by
/// the canonical basis of 𝔥 (ambient coordinates).
#[derive(Debug, Clone)]
pub struct HorizontalAlgebra {
    pub h: LieAlgebra,
    pub j: [Endomorphism; 3],
    pub basis: Matrix,
}

#[derive(Debug, Clone)]
pub enum CaseReport {
    /// ψ invertible: 𝔤 ≅ so(3) ⋉ ℝ⁴ⁿ with [ξ_i,ξ_j] = 2δξ_k, [ξ_i,X] = δφ_iX.
    PsiInvertible { delta: Rational },
    /// ψ = 0, 𝒵 = 0, δ = 0: 𝔳 central, 𝔤 = 𝔳 ⊕_θ 𝔥 with hypercomplex 𝔥 and a
    /// J_i-invariant 𝔳-valued 2-cocycle θ. `horizontal` is `None` in
    /// dimension 3, where 𝔥 is trivial.
    PsiZeroZZeroDeltaZero { horizontal: Option<HorizontalAlgebra>, theta: VectorValuedForm },
    /// ψ = 0, 𝒵 = 0, δ ≠ 0: 𝔤 = so(3) × 𝔥 as a direct product of ideals.
    PsiZeroZZeroDeltaNonzero { delta: Rational, horizontal: Option<HorizontalAlgebra> },
    /// ψ = 0, 𝒵 ≠ 0: 𝔥 ideal, 𝒵 and 𝒵_i = φ_i𝒵 central in 𝔥,
    /// [ξ_i,ξ_j] = 2δξ_k − 𝒵_k, [ξ_i,X] = 0; for δ ≠ 0 the span of
    /// 2δξ_i − 𝒵_i is an so(3) ideal (`u_basis`).
    PsiZeroZNonzero {
        delta: Rational,
        horizontal: HorizontalAlgebra,
        z: Vec<Rational>,
        u_basis: Option<[Vec<Rational>; 3]>,
    },
    /// 0 < rank ψ < dim 𝔥: no structure theorem applies.
    Intermediate { rank: usize },
}

impl CaseReport {
    /// Stable tag used by serialized output.
    pub fn tag(&self) -> &'static str {
        match self {
            CaseReport::PsiInvertible { .. } => "PsiInvertible",
            CaseReport::PsiZeroZZeroDeltaZero { .. } => "PsiZero_ZZero_DeltaZero",
            CaseReport::PsiZeroZZeroDeltaNonzero { .. } => "PsiZero_ZZero_DeltaNonzero",
            CaseReport::PsiZeroZNonzero { .. } => "PsiZero_ZNonzero",
            CaseReport::Intermediate { .. } => "Intermediate",
        }
    }
}

/// Builds 𝔥 as an algebra together with J_i = φ_i|𝔥 and the vertical part of
/// the horizontal brackets (the candidate cocycle values).
#[allow(clippy::type_complexity)]
fn split_horizontal(
    l: &LieAlgebra,
    t: &Almost3Contact,
    split: &VerticalSplit,
) -> Result<(Option<HorizontalAlgebra>, Vec<((usize, usize), Vec<Rational>)>), ThreeContactError> {
    let m = split.m;
    let mut vertical_parts = Vec::new();
    let mut h_pairs = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let coords = split.coords(&l.bracket(&split.h_vectors[a], &split.h_vectors[b]));
            vertical_parts.push(((a, b), coords[..3].to_vec()));
            h_pairs.push((a, b, coords[3..].to_vec()));
        }
    }
    if m == 0 {
        return Ok((None, vertical_parts));
    }
    let h = LieAlgebra::from_pairs(m, &h_pairs).map_err(|e| {
        ThreeContactError::InternalCrossCheck(format!("horizontal bracket is not a Lie bracket: {e}"))
    })?;
    let mut j = Vec::with_capacity(3);
    for i in 0..3 {
        j.push(split.restrict(|h| t.phi(i).mul_vec(h), "φ_i")?);
    }
    let j: [Endomorphism; 3] = [j[0].clone(), j[1].clone(), j[2].clone()];
    // J_i is a hypercomplex triple and each member is abelian on 𝔥
    let id = Matrix::identity(m);
    for ji in &j {
        if ji.mul(ji) != id.neg() {
            return Err(ThreeContactError::InternalCrossCheck("J_i² ≠ −I on 𝔥".into()));
        }
    }
    if j[0].mul(&j[1]) != j[2] || j[1].mul(&j[0]) != j[2].neg() {
        return Err(ThreeContactError::InternalCrossCheck("J₁J₂ ≠ J₃ = −J₂J₁ on 𝔥".into()));
    }
    for ji in &j {
        if !is_abelian_complex(&h, ji) {
            return Err(ThreeContactError::InternalCrossCheck(
                "J_i is not abelian on the horizontal algebra".into(),
            ));
        }
    }
    Ok((Some(HorizontalAlgebra { h, j, basis: split.basis.clone() }), vertical_parts))
}

/// Dispatches on (rank ψ, 𝒵, δ) and re-verifies the structural claims of the
/// matching case before reporting it.
pub fn case_analysis(l: &LieAlgebra, t: &Almost3Contact) -> Result<CaseReport, ThreeContactError> {
    let inv = structure_invariants(l, t)?;
    let split = VerticalSplit::new(t)?;
    let m = split.m;

    if m > 0 && inv.psi_rank == m {
        // ψ invertible ⟹ ψ = −δI, δ ≠ 0, 𝒵 = 0, 𝔥 abelian ideal, brackets fixed
        if inv.psi != Matrix::identity(m).scale(&-inv.delta.clone()) || inv.delta.is_zero() {
            return Err(ThreeContactError::InternalCrossCheck(
                "invertible ψ is not −δI with δ ≠ 0".into(),
            ));
        }
        if !inv.z_is_zero() {
            return Err(ThreeContactError::InternalCrossCheck("invertible ψ with 𝒵 ≠ 0".into()));
        }
        for a in 0..m {
            for b in a + 1..m {
                if !vec_is_zero(&l.bracket(&split.h_vectors[a], &split.h_vectors[b])) {
                    return Err(ThreeContactError::InternalCrossCheck(
                        "𝔥 is not abelian although ψ is invertible".into(),
                    ));
                }
            }
        }
        for &(i, j, k) in &EVEN_PERMS {
            let expected = vec_scale(&(rint(2) * &inv.delta), t.xi(k));
            if l.bracket(t.xi(i), t.xi(j)) != expected {
                return Err(ThreeContactError::InternalCrossCheck("[ξ_i,ξ_j] ≠ 2δξ_k".into()));
            }
        }
        for i in 0..3 {
            for h in &split.h_vectors {
                if l.bracket(t.xi(i), h) != vec_scale(&inv.delta, &t.phi(i).mul_vec(h)) {
                    return Err(ThreeContactError::InternalCrossCheck("[ξ_i,X] ≠ δφ_iX".into()));
                }
            }
        }
        return Ok(CaseReport::PsiInvertible { delta: inv.delta });
    }

    if inv.psi_rank == 0 {
        // [ξ_i, X] = 0 for horizontal X (ψ = 0 and φ_i|𝔥 invertible)
        for i in 0..3 {
            for h in &split.h_vectors {
                if !vec_is_zero(&l.bracket(t.xi(i), h)) {
                    return Err(ThreeContactError::InternalCrossCheck(
                        "ψ = 0 but ad_ξ does not vanish on 𝔥".into(),
                    ));
                }
            }
        }
        let (horizontal, vertical_parts) = split_horizontal(l, t, &split)?;

        if inv.z_is_zero() && inv.delta.is_zero() {
            // 𝔳 central; θ = vertical part of the horizontal brackets
            for i in 0..3 {
                if !l.ad(t.xi(i)).is_zero() {
                    return Err(ThreeContactError::InternalCrossCheck(
                        "𝒵 = 0, δ = 0, ψ = 0 but ξ_i is not central".into(),
                    ));
                }
            }
            let mut theta = VectorValuedForm::zero(m, 2, 3);
            for ((a, b), v) in &vertical_parts {
                theta.set_coeff(&[*a, *b], v.clone());
            }
            if let Some(ha) = &horizontal {
                for ji in &ha.j {
                    for a in 0..m {
                        for b in a + 1..m {
                            if theta.eval(&[&ji.column(a), &ji.column(b)])
                                != theta.value_on_basis(&[a, b])
                            {
                                return Err(ThreeContactError::InternalCrossCheck(
                                    "θ is not J_i-invariant".into(),
                                ));
                            }
                        }
                    }
                }
                if !is_cocycle(ha.h.tensor(), &theta) {
                    return Err(ThreeContactError::InternalCrossCheck("θ is not a cocycle".into()));
                }
            }
            return Ok(CaseReport::PsiZeroZZeroDeltaZero { horizontal, theta });
        }

        if inv.z_is_zero() {
            // δ ≠ 0: direct product so(3) × 𝔥
            for ((_, _), v) in &vertical_parts {
                if !vec_is_zero(v) {
                    return Err(ThreeContactError::InternalCrossCheck(
                        "horizontal bracket leaves 𝔥 although δ ≠ 0, 𝒵 = 0".into(),
                    ));
                }
            }
            for &(i, j, k) in &EVEN_PERMS {
                let expected = vec_scale(&(rint(2) * &inv.delta), t.xi(k));
                if l.bracket(t.xi(i), t.xi(j)) != expected {
                    return Err(ThreeContactError::InternalCrossCheck("[ξ_i,ξ_j] ≠ 2δξ_k".into()));
                }
            }
            return Ok(CaseReport::PsiZeroZZeroDeltaNonzero { delta: inv.delta, horizontal });
        }

        // 𝒵 ≠ 0 (so 𝔥 ≠ 0): verify the adjoint brackets and centrality of 𝒵, 𝒵_i
        let horizontal = horizontal.expect("𝒵 ≠ 0 requires a nontrivial horizontal space");
        for ((_, _), v) in &vertical_parts {
            if !vec_is_zero(v) {
                return Err(ThreeContactError::InternalCrossCheck(
                    "𝔥 is not an ideal although ψ = 0, 𝒵 ≠ 0".into(),
                ));
            }
        }
        let z_i: Vec<Vec<Rational>> = (0..3).map(|i| t.phi(i).mul_vec(&inv.z)).collect();
        for &(i, j, k) in &EVEN_PERMS {
            let expected = vec_sub(&vec_scale(&(rint(2) * &inv.delta), t.xi(k)), &z_i[k]);
            if l.bracket(t.xi(i), t.xi(j)) != expected {
                return Err(ThreeContactError::InternalCrossCheck(
                    "[ξ_i,ξ_j] ≠ 2δξ_k − 𝒵_k".into(),
                ));
            }
        }
        for h in &split.h_vectors {
            if !vec_is_zero(&l.bracket(&inv.z, h))
                || z_i.iter().any(|zi| !vec_is_zero(&l.bracket(zi, h)))
            {
                return Err(ThreeContactError::InternalCrossCheck(
                    "𝒵 or 𝒵_i is not central in 𝔥".into(),
                ));
            }
        }
        let u_basis = if inv.delta.is_zero() {
            None
        } else {
            let u: Vec<Vec<Rational>> = (0..3)
                .map(|i| vec_sub(&vec_scale(&(rint(2) * &inv.delta), t.xi(i)), &z_i[i]))
                .collect();
            let four_delta_sq = rint(4) * &inv.delta * &inv.delta;
            for &(i, j, k) in &EVEN_PERMS {
                if l.bracket(&u[i], &u[j]) != vec_scale(&four_delta_sq, &u[k]) {
                    return Err(ThreeContactError::InternalCrossCheck(
                        "[u_i,u_j] ≠ 4δ²u_k on the so(3) complement".into(),
                    ));
                }
            }
            Some([u[0].clone(), u[1].clone(), u[2].clone()])
        };
        return Ok(CaseReport::PsiZeroZNonzero {
            delta: inv.delta,
            horizontal,
            z: inv.z,
            u_basis,
        });
    }

    Ok(CaseReport::Intermediate { rank: inv.psi_rank })
}

// --- dimension-7 classification ---------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dim7Label {
    So3SemidirectR4,
    R3AffC,
    H2RxR2,
    H1CxR,
    H1H,
    So3xR4,
    So3xAffC,
    NxR,
    R7,
}

impl std::fmt::Display for Dim7Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Dim7Label::So3SemidirectR4 => "so(3)⋉ℝ⁴",
            Dim7Label::R3AffC => "ℝ³×aff(ℂ)",
            Dim7Label::H2RxR2 => "𝔥₂^ℝ×ℝ²",
            Dim7Label::H1CxR => "𝔥₁^ℂ×ℝ",
            Dim7Label::H1H => "𝔥₁^ℍ",
            Dim7Label::So3xR4 => "so(3)×ℝ⁴",
            Dim7Label::So3xAffC => "so(3)×aff(ℂ)",
            Dim7Label::NxR => "𝔫×ℝ",
            Dim7Label::R7 => "ℝ⁷",
        };
        f.write_str(s)
    }
}

/// Basis of 𝔥 in which the hypercomplex triple takes the standard
/// quaternionic matrix form: greedily picks the lowest-index standard vector
/// W not yet spanned and extends by (W, J₁W, J₂W, J₃W).
fn hypercomplex_adapted_basis(j: &[Endomorphism; 3]) -> Result<Matrix, ThreeContactError> {
    let m = j[0].rows();
    let mut columns: Vec<Vec<Rational>> = Vec::new();
    let mut span = Subspace::zero(m);
    let mut idx = 0;
    while columns.len() < m {
        while idx < m && span.contains(&basis_vec(m, idx)) {
            idx += 1;
        }
        if idx == m {
            return Err(ThreeContactError::InternalCrossCheck(
                "ran out of seed vectors while adapting a hypercomplex basis".into(),
            ));
        }
        let w = basis_vec(m, idx);
        let block = vec![w.clone(), j[0].mul_vec(&w), j[1].mul_vec(&w), j[2].mul_vec(&w)];
        let extended = span.sum(&Subspace::span(m, &block));
        if extended.dim() != span.dim() + 4 {
            return Err(ThreeContactError::InternalCrossCheck(
                "quaternionic orbit of a fresh vector is not 4-dimensional".into(),
            ));
        }
        span = extended;
        columns.extend(block);
    }
    Ok(Matrix::from_columns(&columns))
}

/// The 3×3 matrix A whose entry (r, s) is the ξ_{r+1}-component of
/// [b₁, b_{s+2}] in a hypercomplex-adapted basis (b₁, b₂, b₃, b₄) of 𝔥 ≅ ℝ⁴;
/// the remaining brackets are determined by J-invariance and are re-checked.
fn bracket_matrix(
    theta: &VectorValuedForm,
    adapted: &Matrix,
) -> Result<Matrix, ThreeContactError> {
    let b: Vec<Vec<Rational>> = (0..4).map(|c| adapted.column(c)).collect();
    let th = |x: usize, y: usize| theta.eval(&[&b[x], &b[y]]);
    let cols = [th(0, 1), th(0, 2), th(0, 3)];
    let consistent = th(2, 3) == crate::linalg::vec_neg(&cols[0])
        && th(1, 3) == cols[1]
        && th(1, 2) == crate::linalg::vec_neg(&cols[2]);
    if !consistent {
        return Err(ThreeContactError::InternalCrossCheck(
            "cocycle values are not paired as J-invariance requires".into(),
        ));
    }
    Ok(Matrix::from_columns(&cols))
}

pub(crate) fn looks_like_aff_c(h: &LieAlgebra) -> bool {
    h.dim() == 4
        && h.derived_ideal().dim() == 2
        && h.center().is_zero()
        && h.derived_series().is_2step_solvable
}

/// Classification of 7-dimensional algebras carrying an abelian triple. In
/// the central-extension case the isomorphism class is read off the rank of
/// the bracket matrix A (0 → ℝ⁷, 1 → 𝔥₂^ℝ×ℝ², 2 → 𝔥₁^ℂ×ℝ, 3 → 𝔥₁^ℍ) when
/// 𝔥 ≅ ℝ⁴, and is ℝ³×aff(ℂ) when 𝔥 is not abelian; an intermediate ψ-rank
/// contradicts the classification theorem and is reported as such.
pub fn classify_dim7(l: &LieAlgebra, t: &Almost3Contact) -> Result<Dim7Label, ThreeContactError> {
    require_same_dim(l, t)?;
    if l.dim() != 7 {
        return Err(ThreeContactError::Dim7Only(l.dim()));
    }
    match case_analysis(l, t)? {
        CaseReport::PsiInvertible { .. } => Ok(Dim7Label::So3SemidirectR4),
        CaseReport::PsiZeroZZeroDeltaZero { horizontal, theta } => {
            let ha = horizontal.expect("dimension 7 has a 4-dimensional horizontal space");
            if ha.h.derived_ideal().is_zero() {
                let adapted = hypercomplex_adapted_basis(&ha.j)?;
                let a = bracket_matrix(&theta, &adapted)?;
                match a.rank() {
                    0 => Ok(Dim7Label::R7),
                    1 => Ok(Dim7Label::H2RxR2),
                    2 => Ok(Dim7Label::H1CxR),
                    3 => Ok(Dim7Label::H1H),
                    r => Err(ThreeContactError::InternalCrossCheck(format!(
                        "3×3 matrix with rank {r}"
                    ))),
                }
            } else if looks_like_aff_c(&ha.h) {
                Ok(Dim7Label::R3AffC)
            } else {
                Err(ThreeContactError::TheoremViolation(
                    "non-abelian 4-dimensional horizontal algebra with abelian hypercomplex \
                     structure does not match aff(ℂ)"
                        .into(),
                ))
            }
        }
        CaseReport::PsiZeroZZeroDeltaNonzero { horizontal, .. } => {
            let ha = horizontal.expect("dimension 7 has a 4-dimensional horizontal space");
            if ha.h.derived_ideal().is_zero() {
                Ok(Dim7Label::So3xR4)
            } else if looks_like_aff_c(&ha.h) {
                Ok(Dim7Label::So3xAffC)
            } else {
                Err(ThreeContactError::TheoremViolation(
                    "direct factor is neither ℝ⁴ nor aff(ℂ)".into(),
                ))
            }
        }
        CaseReport::PsiZeroZNonzero { delta, horizontal, .. } => {
            if !horizontal.h.derived_ideal().is_zero() {
                return Err(ThreeContactError::TheoremViolation(
                    "𝒵 ≠ 0 forces an abelian horizontal algebra in dimension 7".into(),
                ));
            }
            if delta.is_zero() {
                Ok(Dim7Label::NxR)
            } else {
                Ok(Dim7Label::So3xR4)
            }
        }
        CaseReport::Intermediate { rank } => Err(ThreeContactError::TheoremViolation(format!(
            "ψ has rank {rank} in dimension 7; it must be 0 or 4"
        ))),
    }
}

// --- canonical structures -------------------------------------------------------

/// Returns β when 𝒵 = 0 and 2ψ = −βI (the structure is then canonical;
/// β = 0 is the parallel case). Re-asserts [ξ_i,ξ_j] = 2δξ_k and the
/// equivalent formulation ad_{ξ_i}|𝔥 = (β/2)φ_i|𝔥.
pub fn canonical_check(
    l: &LieAlgebra,
    t: &Almost3Contact,
) -> Result<Option<Rational>, ThreeContactError> {
    let inv = structure_invariants(l, t)?;
    if !inv.z_is_zero() {
        return Ok(None);
    }
    let m = inv.psi.rows();
    let beta = if m == 0 {
        Rational::zero()
    } else {
        let s = inv.psi.get(0, 0).clone();
        if inv.psi != Matrix::identity(m).scale(&s) {
            return Ok(None);
        }
        -(rint(2) * s)
    };
    // 𝒵 = 0 makes 𝔳 a subalgebra with [ξ_i,ξ_j] = 2δξ_k
    for &(i, j, k) in &EVEN_PERMS {
        let expected = vec_scale(&(rint(2) * &inv.delta), t.xi(k));
        if l.bracket(t.xi(i), t.xi(j)) != expected {
            return Err(ThreeContactError::InternalCrossCheck(
                "𝒵 = 0 but [ξ_i,ξ_j] ≠ 2δξ_k".into(),
            ));
        }
    }
    // ad_{ξ_i}|𝔥 = (β/2)φ_i|𝔥 (the φ-composed form of 2ψ = −βI)
    let half_beta = &beta / rint(2);
    for i in 0..3 {
        for h in &inv.h_basis {
            if l.bracket(t.xi(i), h) != vec_scale(&half_beta, &t.phi(i).mul_vec(h)) {
                return Err(ThreeContactError::InternalCrossCheck(
                    "2ψ = −βI but ad_{ξ_i}|𝔥 ≠ (β/2)φ_i|𝔥".into(),
                ));
            }
        }
    }
    Ok(Some(beta))
}

/// Reeb-Killing data: the tensors A_ij on 𝔥 (matrices over the canonical
/// 𝔥-basis), whether they fit the canonical pattern A_ii = 0,
/// A_ij = −A_ji = βΦ_k, whether each ξ_i is Killing, and the resulting
/// verdict.
#[derive(Debug, Clone)]
pub struct ReebKillingReport {
    pub a: Vec<Vec<Matrix>>,
    pub beta: Option<Rational>,
    pub xi_killing: [bool; 3],
    pub is_canonical: bool,
}

/// A_ij(X, Y) = g((L_{ξ_j}φ_i)X, Y) + dη_j(X, φ_iY) + dη_j(φ_iX, Y) with
/// (L_ξφ)X = [ξ, φX] − φ[ξ, X], on horizontal pairs. The verdict (pattern,
/// each ξ_i Killing, and the i-independence of dΦ_i(φ_i·,φ_i·,φ_i·) on 𝔥)
/// must agree with [`canonical_check`].
pub fn reeb_killing_tensors(
    l: &LieAlgebra,
    t: &Almost3Contact,
    g: &Metric,
) -> Result<ReebKillingReport, ThreeContactError> {
    require_same_dim(l, t)?;
    for i in 0..3 {
        if !g.is_contact_compatible(t.phi(i), t.eta(i)) {
            return Err(ThreeContactError::IncompatibleMetric { index: i + 1 });
        }
    }
    require_abelian(l, t)?;
    // abelian ⟹ hypernormal; re-derive rather than assume
    for i in 0..3 {
        if !normality_tensor(l, t.structure(i))?.is_normal {
            return Err(ThreeContactError::InternalCrossCheck(
                "abelian structure with nonzero normality tensor".into(),
            ));
        }
    }
    let split = VerticalSplit::new(t)?;
    let m = split.m;
    let h = &split.h_vectors;
    let deta: Vec<VectorValuedForm> = (0..3)
        .map(|i| ce_differential(l.tensor(), &t.structure(i).eta_form()).expect("degree 1 < dim"))
        .collect();

    let mut a = vec![vec![Matrix::zeros(m, m); 3]; 3];
    for i in 0..3 {
        for jdx in 0..3 {
            a[i][jdx] = Matrix::from_fn(m, m, |p, q| {
                let lie = vec_sub(
                    &l.bracket(t.xi(jdx), &t.phi(i).mul_vec(&h[p])),
                    &t.phi(i).mul_vec(&l.bracket(t.xi(jdx), &h[p])),
                );
                g.inner(&lie, &h[q])
                    + deta[jdx].eval_scalar(&[&h[p], &t.phi(i).mul_vec(&h[q])])
                    + deta[jdx].eval_scalar(&[&t.phi(i).mul_vec(&h[p]), &h[q]])
            });
        }
    }

    // pattern: A_ii = 0, A_ij = −A_ji = βΦ_k
    let phi_h: Vec<Matrix> =
        (0..3).map(|k| Matrix::from_fn(m, m, |p, q| g.inner(&h[p], &t.phi(k).mul_vec(&h[q])))).collect();
    let mut pattern = (0..3).all(|i| a[i][i].is_zero());
    let mut beta: Option<Rational> = if m == 0 { Some(Rational::zero()) } else { None };
    if pattern {
        'perms: for &(i, j, k) in &EVEN_PERMS {
            if a[i][j] != a[j][i].neg() {
                pattern = false;
                break;
            }
            for p in 0..m {
                for q in 0..m {
                    let phi_pq = phi_h[k].get(p, q);
                    let a_pq = a[i][j].get(p, q);
                    match (&beta, phi_pq.is_zero()) {
                        (_, true) => {
                            if !a_pq.is_zero() {
                                pattern = false;
                                break 'perms;
                            }
                        }
                        (None, false) => beta = Some(a_pq / phi_pq),
                        (Some(b), false) => {
                            if a_pq != &(b * phi_pq) {
                                pattern = false;
                                break 'perms;
                            }
                        }
                    }
                }
            }
        }
    }
    if !pattern {
        beta = None;
    }

    let xi_killing = [
        g.is_skew_adjoint(&l.ad(t.xi(0))),
        g.is_skew_adjoint(&l.ad(t.xi(1))),
        g.is_skew_adjoint(&l.ad(t.xi(2))),
    ];

    // dΦ_i(φ_iX, φ_iY, φ_iZ) is independent of i on horizontal triples
    let d_phi: Vec<VectorValuedForm> = (0..3)
        .map(|i| {
            let form = g
                .fundamental_form(t.phi(i))
                .expect("compatible metric yields an antisymmetric fundamental form");
            ce_differential(l.tensor(), &form).expect("degree 2 < dim")
        })
        .collect();
    let mut condition_iii = true;
    'triples: for p in 0..m {
        for q in p + 1..m {
            for r in q + 1..m {
                let vals: Vec<Rational> = (0..3)
                    .map(|i| {
                        d_phi[i].eval_scalar(&[
                            &t.phi(i).mul_vec(&h[p]),
                            &t.phi(i).mul_vec(&h[q]),
                            &t.phi(i).mul_vec(&h[r]),
                        ])
                    })
                    .collect();
                if vals[1] != vals[0] || vals[2] != vals[0] {
                    condition_iii = false;
                    break 'triples;
                }
            }
        }
    }

    let is_canonical = pattern && xi_killing.iter().all(|&b| b) && condition_iii;
    let expected = canonical_check(l, t)?;
    if is_canonical != expected.is_some() || (is_canonical && beta != expected) {
        return Err(ThreeContactError::InternalCrossCheck(format!(
            "Reeb-Killing verdict (canonical = {is_canonical}, β = {beta:?}) disagrees with the \
             metric-free criterion ({expected:?})"
        )));
    }
    Ok(ReebKillingReport { a, beta, xi_killing, is_canonical })
}

/// Torsion of the canonical connection:
/// T = c + Σ η_i∧dη_i + 2(β + 2δ) η₁∧η₂∧η₃, where c(X,Y,Z) =
/// −g([X,Y],Z) − g([Y,Z],X) − g([Z,X],Y) on horizontal projections.
pub fn canonical_torsion(
    l: &LieAlgebra,
    t: &Almost3Contact,
    g: &Metric,
) -> Result<VectorValuedForm, ThreeContactError> {
    for i in 0..3 {
        if !g.is_contact_compatible(t.phi(i), t.eta(i)) {
            return Err(ThreeContactError::IncompatibleMetric { index: i + 1 });
        }
    }
    let beta = canonical_check(l, t)?.ok_or(ThreeContactError::NotCanonical)?;
    let delta = structure_invariants(l, t)?.delta;
    let n = l.dim();
    let proj: Vec<Vec<Rational>> = (0..n).map(|i| t.project_horizontal(&basis_vec(n, i))).collect();
    let c = VectorValuedForm::from_fn(n, 3, 1, |tuple| {
        let (x, y, z) = (&proj[tuple[0]], &proj[tuple[1]], &proj[tuple[2]]);
        let v = -g.inner(&l.bracket(x, y), z) - g.inner(&l.bracket(y, z), x)
            - g.inner(&l.bracket(z, x), y);
        vec![v]
    });
    let mut torsion = c;
    for i in 0..3 {
        let eta = t.structure(i).eta_form();
        let deta = ce_differential(l.tensor(), &eta).expect("degree 1 < dim");
        torsion = torsion.add(&eta.wedge(&deta));
    }
    let eta123 = t
        .structure(0)
        .eta_form()
        .wedge(&t.structure(1).eta_form())
        .wedge(&t.structure(2).eta_form());
    let coeff = rint(2) * (&beta + rint(2) * &delta);
    torsion = torsion.add(&eta123.scale(&coeff));
    // T(ξ₁, ξ₂, ξ₃) = 2(β − δ)
    let val = torsion.eval_scalar(&[t.xi(0), t.xi(1), t.xi(2)]);
    if val != rint(2) * (&beta - &delta) {
        return Err(ThreeContactError::InternalCrossCheck(
            "T(ξ₁,ξ₂,ξ₃) ≠ 2(β − δ)".into(),
        ));
    }
    Ok(torsion)
}
