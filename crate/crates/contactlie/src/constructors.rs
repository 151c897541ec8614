//! Constructors for the example catalog: central extensions of algebras
//! carrying abelian (hyper)complex structures by invariant closed 2-forms,
//! semidirect products ℝξ ⋉ 𝔥 by a derivation commuting with the complex
//! structure, the so(3)-semidirect family, recognition of the 4-dimensional
//! algebras that admit abelian hypercomplex triples, and a catalog of named
//! bundles (algebra, structure tensors, metric) together with the invariants
//! they are expected to have, used as cross-check data by the test suites.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::algebra::{
    ce_differential, is_abelian_complex, is_cocycle, is_complex_structure, is_integrable_complex,
    AlgebraError, LieAlgebra,
};
use crate::contact::{
    is_abelian_contact, metric_class, AlmostContact, ContactClass, ContactError, Dim3Label,
};
use crate::forms::VectorValuedForm;
use crate::linalg::{basis_vec, vec_is_zero, vec_scale, vec_zero, Endomorphism, Matrix};
use crate::metric::Metric;
use crate::rational::{format_rational, parse_rational, rint, Rational};
use crate::three_contact::{
    is_abelian_3contact, looks_like_aff_c, standard_3contact, standard_phi_triple, Almost3Contact,
    ThreeContactError,
};

const EVEN_PERMS: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructorError {
    #[error("extensions take a cocycle valued in ℝ or ℝ³, got target dimension {0}")]
    UnsupportedExtensionRank(usize),
    #[error("the extension form must be a 2-form, got degree {0}")]
    NotA2Form(usize),
    #[error("dimension mismatch: got {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("a rank-{expected} extension needs {expected} complex structures, got {got}")]
    WrongStructureCount { got: usize, expected: usize },
    #[error("endomorphism {index} is not an abelian complex structure on the base algebra")]
    NotAbelianComplex { index: usize },
    #[error("the triple does not satisfy the quaternion relations")]
    QuaternionRelationsFail,
    #[error("the given 2-form is not closed")]
    NotACocycle,
    #[error("the cocycle is not invariant under complex structure {index}")]
    CocycleNotInvariant { index: usize },
    #[error("the given endomorphism is not a derivation of the base algebra")]
    NotADerivation,
    #[error("the derivation does not commute with the complex structure")]
    DerivationDoesNotCommute,
    #[error("parameter `{0}` must be nonzero")]
    ZeroParameter(&'static str),
    #[error("operation requires dimension 4, got {0}")]
    Dim4Only(usize),
    #[error("hypercomplex structures need dimension divisible by 4, got {0}")]
    DimNotMultipleOf4(usize),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("bad parameter `{name}`: {reason}")]
    BadParameter { name: String, reason: String },
    #[error("internal cross-check failed: {0}")]
    InternalCrossCheck(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Contact(#[from] ContactError),
    #[error(transparent)]
    ThreeContact(#[from] ThreeContactError),
}

fn internal(msg: &str) -> ConstructorError {
    ConstructorError::InternalCrossCheck(msg.to_string())
}

fn bad_param(name: &str, reason: impl Into<String>) -> ConstructorError {
    ConstructorError::BadParameter {
        name: name.to_string(),
        reason: reason.into(),
    }
}

/// The geometric data a catalog entry carries on top of its Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureData {
    None,
    Contact(AlmostContact),
    ThreeContact(Almost3Contact),
    Complex(Endomorphism),
    Hypercomplex([Endomorphism; 3]),
}

impl StructureData {
    pub fn kind(&self) -> &'static str {
        match self {
            StructureData::None => "none",
            StructureData::Contact(_) => "contact",
            StructureData::ThreeContact(_) => "3-contact",
            StructureData::Complex(_) => "complex",
            StructureData::Hypercomplex(_) => "hypercomplex",
        }
    }
}

/// A named example: Lie algebra, structure tensors, compatible metric, the
/// parameters it was built from, and the invariants it is expected to have.
/// The `expected` map is pure data (label strings, ranks, dimensions,
/// proportionality constants); tests recompute each entry independently.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub algebra: LieAlgebra,
    pub structure: StructureData,
    pub metric: Metric,
    pub expected: BTreeMap<String, String>,
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn contact(&self) -> Option<&AlmostContact> {
        match &self.structure {
            StructureData::Contact(s) => Some(s),
            _ => None,
        }
    }

    pub fn three_contact(&self) -> Option<&Almost3Contact> {
        match &self.structure {
            StructureData::ThreeContact(t) => Some(t),
            _ => None,
        }
    }
}

fn put(map: &mut BTreeMap<String, String>, key: &str, value: impl Into<String>) {
    map.insert(key.to_string(), value.into());
}

// --- shared building blocks -------------------------------------------------------

fn require_square(m: &Endomorphism, n: usize) -> Result<(), ConstructorError> {
    if m.rows() != n || m.cols() != n {
        return Err(ConstructorError::DimensionMismatch {
            got: m.rows(),
            expected: n,
        });
    }
    Ok(())
}

/// θ(Jx, Jy) = θ(x, y) on all basis pairs.
fn form_invariant_under(theta: &VectorValuedForm, j: &Endomorphism) -> bool {
    let n = theta.ambient_dim();
    for a in 0..n {
        let ja = j.column(a);
        for b in (a + 1)..n {
            let jb = j.column(b);
            if theta.eval(&[&ja, &jb]) != theta.value_on_basis(&[a, b]) {
                return false;
            }
        }
    }
    true
}

/// J_aJ_b = J_c = −J_bJ_a for every even permutation (a, b, c).
fn quaternion_relations(j: &[Endomorphism; 3]) -> bool {
    EVEN_PERMS
        .iter()
        .all(|&(a, b, c)| j[a].mul(&j[b]) == j[c] && j[b].mul(&j[a]) == j[c].neg())
}

/// dω = 0; forms of top degree are closed because there is no room for d.
fn is_closed(l: &LieAlgebra, omega: &VectorValuedForm) -> bool {
    match ce_differential(l.tensor(), omega) {
        Ok(d) => d.is_zero(),
        Err(_) => true,
    }
}

/// Embeds J as the lower-right block of an (m + dim 𝔥)-dimensional
/// endomorphism vanishing on the first m coordinates.
fn extended_complex_block(m: usize, j: &Endomorphism) -> Endomorphism {
    let hd = j.rows();
    let n = m + hd;
    let mut out = Matrix::zeros(n, n);
    for r in 0..hd {
        for c in 0..hd {
            let v = j.get(r, c);
            if !v.is_zero() {
                out.set(m + r, m + c, v.clone());
            }
        }
    }
    out
}

/// Bracket table of V ⊕_θ 𝔥 with V = ℝᵐ central, in the basis (ξ's, 𝔥):
/// [X, Y] = θ(X, Y) + [X, Y]_𝔥 on 𝔥, and [V, ·] = 0.
fn extension_algebra(
    h: &LieAlgebra,
    theta: &VectorValuedForm,
) -> Result<LieAlgebra, AlgebraError> {
    let m = theta.target_dim();
    let hd = h.dim();
    let n = m + hd;
    let mut pairs = Vec::new();
    for a in 0..hd {
        for b in (a + 1)..hd {
            let th = theta.value_on_basis(&[a, b]);
            let hb = h.basis_bracket(a, b);
            let mut v = vec_zero(n);
            v[..m].clone_from_slice(&th);
            v[m..].clone_from_slice(hb);
            if !vec_is_zero(&v) {
                pairs.push((m + a, m + b, v));
            }
        }
    }
    LieAlgebra::from_pairs(n, &pairs)
}

/// The triple on ℝ³ ⊕ 𝔥: vertical rotations on the ξ's, J_i on 𝔥.
fn extension_contact_triple(
    j: &[Endomorphism; 3],
) -> Result<Almost3Contact, ConstructorError> {
    let n = 3 + j[0].rows();
    let make = |i: usize| -> Result<AlmostContact, ContactError> {
        let (a, b, c) = EVEN_PERMS[i];
        let mut phi = extended_complex_block(3, &j[a]);
        phi.set(c, b, rint(1)); // φ_a ξ_b = ξ_c
        phi.set(b, c, rint(-1)); // φ_a ξ_c = −ξ_b
        AlmostContact::new(phi, basis_vec(n, i), basis_vec(n, i))
    };
    Ok(Almost3Contact::new([make(0)?, make(1)?, make(2)?])?)
}

// --- extension and semidirect constructors ----------------------------------------

/// Central extension ℝᵐ ⊕_θ 𝔥 for m ∈ {1, 3}, together with the almost
/// contact (m = 1) or almost 3-contact (m = 3) structure extending the given
/// complex structures by φ_i ξ_i = 0 (plus the vertical rotations for m = 3),
/// and the metric making the new basis orthonormal. Preconditions: each J_i
/// is an abelian complex structure on 𝔥, the triple satisfies the quaternion
/// relations when m = 3, θ is closed and J_i-invariant. The result is always
/// abelian with central ξ's; both facts are re-verified before returning.
pub fn central_extension(
    h: &LieAlgebra,
    theta: &VectorValuedForm,
    j: &[Endomorphism],
) -> Result<CatalogEntry, ConstructorError> {
    let m = theta.target_dim();
    if m != 1 && m != 3 {
        return Err(ConstructorError::UnsupportedExtensionRank(m));
    }
    if theta.degree() != 2 {
        return Err(ConstructorError::NotA2Form(theta.degree()));
    }
    if theta.ambient_dim() != h.dim() {
        return Err(ConstructorError::DimensionMismatch {
            got: theta.ambient_dim(),
            expected: h.dim(),
        });
    }
    if j.len() != m {
        return Err(ConstructorError::WrongStructureCount {
            got: j.len(),
            expected: m,
        });
    }
    for (idx, ji) in j.iter().enumerate() {
        require_square(ji, h.dim())?;
        if !is_abelian_complex(h, ji) {
            return Err(ConstructorError::NotAbelianComplex { index: idx + 1 });
        }
    }
    if m == 3 {
        let triple = [j[0].clone(), j[1].clone(), j[2].clone()];
        if !quaternion_relations(&triple) {
            return Err(ConstructorError::QuaternionRelationsFail);
        }
    }
    if !is_cocycle(h.tensor(), theta) {
        return Err(ConstructorError::NotACocycle);
    }
    for (idx, ji) in j.iter().enumerate() {
        if !form_invariant_under(theta, ji) {
            return Err(ConstructorError::CocycleNotInvariant { index: idx + 1 });
        }
    }

    let algebra = extension_algebra(h, theta)?;
    let n = algebra.dim();
    for i in 0..m {
        if !algebra.ad(&basis_vec(n, i)).is_zero() {
            return Err(internal("the vertical generators of a central extension must be central"));
        }
    }

    let mut expected = BTreeMap::new();
    put(&mut expected, "abelian", "true");
    put(&mut expected, "xi_central", "true");
    let structure = if m == 1 {
        let s = AlmostContact::new(
            extended_complex_block(1, &j[0]),
            basis_vec(n, 0),
            basis_vec(n, 0),
        )?;
        if !is_abelian_contact(&algebra, &s)?.is_abelian {
            return Err(internal(
                "a central extension along an invariant cocycle of an abelian complex structure must be abelian",
            ));
        }
        StructureData::Contact(s)
    } else {
        let t = extension_contact_triple(&[j[0].clone(), j[1].clone(), j[2].clone()])?;
        if !is_abelian_3contact(&algebra, &t)? {
            return Err(internal(
                "a central extension along an invariant cocycle of an abelian hypercomplex triple must be abelian",
            ));
        }
        put(&mut expected, "Z", "0");
        put(&mut expected, "delta", "0");
        put(&mut expected, "psi_rank", "0");
        put(&mut expected, "beta", "0");
        put(&mut expected, "case", "PsiZero_ZZero_DeltaZero");
        StructureData::ThreeContact(t)
    };

    let mut params = BTreeMap::new();
    put(&mut params, "h_dim", h.dim().to_string());
    put(&mut params, "target_dim", m.to_string());
    Ok(CatalogEntry {
        name: "central_extension".to_string(),
        params,
        algebra,
        structure,
        metric: Metric::standard(n),
        expected,
    })
}

/// Semidirect product ℝξ ⋉_D 𝔥 with [ξ, X] = DX, for a derivation D of 𝔥
/// commuting with an abelian complex structure J. The extended structure is
/// abelian with dη = 0 (𝔥 stays a subalgebra); both are re-verified.
pub fn semidirect_by_derivation(
    h: &LieAlgebra,
    j: &Endomorphism,
    d: &Endomorphism,
) -> Result<CatalogEntry, ConstructorError> {
    require_square(j, h.dim())?;
    require_square(d, h.dim())?;
    if !is_abelian_complex(h, j) {
        return Err(ConstructorError::NotAbelianComplex { index: 1 });
    }
    if !h.is_derivation(d) {
        return Err(ConstructorError::NotADerivation);
    }
    if !d.commutator(j).is_zero() {
        return Err(ConstructorError::DerivationDoesNotCommute);
    }

    let hd = h.dim();
    let n = 1 + hd;
    let mut pairs = Vec::new();
    for a in 0..hd {
        let col = d.column(a);
        if vec_is_zero(&col) {
            continue;
        }
        let mut v = vec_zero(n);
        v[1..].clone_from_slice(&col);
        pairs.push((0, 1 + a, v));
    }
    for a in 0..hd {
        for b in (a + 1)..hd {
            let hb = h.basis_bracket(a, b);
            if vec_is_zero(hb) {
                continue;
            }
            let mut v = vec_zero(n);
            v[1..].clone_from_slice(hb);
            pairs.push((1 + a, 1 + b, v));
        }
    }
    let algebra = LieAlgebra::from_pairs(n, &pairs)?;

    let s = AlmostContact::new(extended_complex_block(1, j), basis_vec(n, 0), basis_vec(n, 0))?;
    if !is_abelian_contact(&algebra, &s)?.is_abelian {
        return Err(internal(
            "a semidirect product by a derivation commuting with an abelian complex structure must be abelian",
        ));
    }
    let deta = ce_differential(algebra.tensor(), &s.eta_form())?;
    if !deta.is_zero() {
        return Err(internal("η must be closed when 𝔥 is a subalgebra"));
    }

    let mut params = BTreeMap::new();
    put(&mut params, "h_dim", hd.to_string());
    let mut expected = BTreeMap::new();
    put(&mut expected, "abelian", "true");
    put(&mut expected, "deta_zero", "true");
    Ok(CatalogEntry {
        name: "semidirect_by_derivation".to_string(),
        params,
        algebra,
        structure: StructureData::Contact(s),
        metric: Metric::standard(n),
        expected,
    })
}

/// so(3) ⋉ ℝ⁴ⁿ scaled by δ ≠ 0: [ξ_i, ξ_j] = 2δ ξ_k on the vertical factor
/// and [ξ_i, X] = δ φ_i X on the horizontal one, carrying the standard
/// triple. Expected invariants: 𝒵 = 0, ψ = −δ·id on 𝔥 (so ψ is invertible
/// of rank 4n), β = 2δ, and parallel canonical torsion.
pub fn so3_semidirect(n: usize, delta: &Rational) -> Result<CatalogEntry, ConstructorError> {
    if n == 0 {
        return Err(bad_param("n", "must be at least 1"));
    }
    if delta.is_zero() {
        return Err(ConstructorError::ZeroParameter("delta"));
    }
    let dim = 4 * n + 3;
    let phis = standard_phi_triple(n);
    let two_delta = rint(2) * delta;
    let mut pairs = Vec::new();
    for &(i, j, k) in &EVEN_PERMS {
        pairs.push((i, j, vec_scale(&two_delta, &basis_vec(dim, k))));
    }
    for i in 0..3 {
        for col in 3..dim {
            let v = vec_scale(delta, &phis[i].column(col));
            if !vec_is_zero(&v) {
                pairs.push((i, col, v));
            }
        }
    }
    let algebra = LieAlgebra::from_pairs(dim, &pairs)?;
    let t = standard_3contact(n);
    if !is_abelian_3contact(&algebra, &t)? {
        return Err(internal("the so(3)-semidirect family must carry an abelian triple"));
    }

    let neg_delta = -delta;
    let mut params = BTreeMap::new();
    put(&mut params, "n", n.to_string());
    put(&mut params, "delta", format_rational(delta));
    let mut expected = BTreeMap::new();
    put(&mut expected, "abelian", "true");
    put(&mut expected, "Z", "0");
    put(&mut expected, "delta", format_rational(delta));
    put(&mut expected, "beta", format_rational(&two_delta));
    put(&mut expected, "psi_scalar", format_rational(&neg_delta));
    put(&mut expected, "psi_rank", (4 * n).to_string());
    put(&mut expected, "case", "PsiInvertible");
    put(&mut expected, "parallel_torsion", "true");
    if n == 1 {
        put(&mut expected, "dim7_label", "so(3)⋉ℝ⁴");
    }
    Ok(CatalogEntry {
        name: "so3_semidirect".to_string(),
        params,
        algebra,
        structure: StructureData::ThreeContact(t),
        metric: Metric::standard(dim),
        expected,
    })
}

// --- hypercomplex checks and 4-dimensional recognition -----------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypercomplexReport {
    /// J_i² = −I, quaternion relations, and each J_i integrable.
    pub is_hypercomplex: bool,
    /// Additionally [J_i x, J_i y] = [x, y] for each i.
    pub is_abelian_hypercomplex: bool,
}

/// Verifies a candidate hypercomplex triple: the complex-structure property,
/// the quaternion relations, integrability of each J_i, and the stronger
/// abelian condition. Abelian complex structures are automatically
/// integrable; a triple that is abelian but fails the integrability check is
/// reported as an internal inconsistency rather than a result.
pub fn hypercomplex_check(
    h: &LieAlgebra,
    j: &[Endomorphism; 3],
) -> Result<HypercomplexReport, ConstructorError> {
    if h.dim() % 4 != 0 {
        return Err(ConstructorError::DimNotMultipleOf4(h.dim()));
    }
    for ji in j {
        require_square(ji, h.dim())?;
    }
    let complex = j.iter().all(is_complex_structure);
    let integrable = complex && j.iter().all(|ji| is_integrable_complex(h, ji));
    let abelian = j.iter().all(|ji| is_abelian_complex(h, ji));
    if abelian && !integrable {
        return Err(internal("abelian complex structures must be integrable"));
    }
    let is_hypercomplex = integrable && quaternion_relations(j);
    Ok(HypercomplexReport {
        is_hypercomplex,
        is_abelian_hypercomplex: is_hypercomplex && abelian,
    })
}

/// Verdict of [`recognize_4d`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourDimLabel {
    R4,
    AffC,
    Neither,
}

impl std::fmt::Display for FourDimLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FourDimLabel::R4 => "ℝ⁴",
            FourDimLabel::AffC => "aff(ℂ)",
            FourDimLabel::Neither => "neither",
        })
    }
}

/// Identifies a 4-dimensional algebra with a candidate triple: ℝ⁴ when the
/// bracket vanishes, aff(ℂ) via its structural fingerprint (2-dimensional
/// commutator ideal, trivial center, 2-step solvable), `Neither` when the
/// triple is not abelian hypercomplex. A valid abelian hypercomplex triple on
/// an algebra matching neither fingerprint contradicts the classification of
/// such structures in dimension 4 and is reported as an internal error.
pub fn recognize_4d(
    h: &LieAlgebra,
    j: &[Endomorphism; 3],
) -> Result<FourDimLabel, ConstructorError> {
    if h.dim() != 4 {
        return Err(ConstructorError::Dim4Only(h.dim()));
    }
    let report = hypercomplex_check(h, j)?;
    if !report.is_abelian_hypercomplex {
        return Ok(FourDimLabel::Neither);
    }
    if h.derived_ideal().is_zero() {
        Ok(FourDimLabel::R4)
    } else if looks_like_aff_c(h) {
        Ok(FourDimLabel::AffC)
    } else {
        Err(internal(
            "a 4-dimensional algebra with an abelian hypercomplex triple must be ℝ⁴ or aff(ℂ)",
        ))
    }
}

// --- reference algebras and triples -------------------------------------------------

/// aff(ℂ) as a real algebra: [e₁,e₃] = e₃, [e₁,e₄] = e₄, [e₂,e₃] = e₄,
/// [e₂,e₄] = −e₃.
fn aff_c_algebra() -> LieAlgebra {
    LieAlgebra::from_pairs(
        4,
        &[
            (0, 2, basis_vec(4, 2)),
            (0, 3, basis_vec(4, 3)),
            (1, 2, basis_vec(4, 3)),
            (1, 3, vec_scale(&rint(-1), &basis_vec(4, 2))),
        ],
    )
    .expect("the aff(ℂ) bracket table satisfies the Jacobi identity")
}

/// The abelian hypercomplex triple on aff(ℂ): J₁e₁ = −e₂, J₁e₃ = e₄,
/// J₂e₁ = e₃, J₂e₂ = e₄, J₃e₁ = e₄, J₃e₂ = −e₃ (and the relations forced by
/// J_i² = −I).
fn aff_c_triple() -> [Endomorphism; 3] {
    [
        Matrix::from_int_rows(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]),
        Matrix::from_int_rows(&[&[0, 0, -1, 0], &[0, 0, 0, -1], &[1, 0, 0, 0], &[0, 1, 0, 0]]),
        Matrix::from_int_rows(&[&[0, 0, 0, -1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[1, 0, 0, 0]]),
    ]
}

/// The quaternionic triple on ℝ⁴ⁿ in the block basis (τ₁..τₙ | … | τ₃ₙ₊₁..τ₄ₙ):
/// J_i maps block 0 to block i and block j to block k for the even
/// permutation (i, j, k) of (1, 2, 3). For n = 1 this is the standard
/// hypercomplex structure of the quaternions.
fn standard_hypercomplex(n: usize) -> [Endomorphism; 3] {
    let dim = 4 * n;
    let mut js = Vec::with_capacity(3);
    for &(i, j, k) in &EVEN_PERMS {
        let mut m = Matrix::zeros(dim, dim);
        for r in 0..n {
            m.set((i + 1) * n + r, r, rint(1));
            m.set(r, (i + 1) * n + r, rint(-1));
            m.set((k + 1) * n + r, (j + 1) * n + r, rint(1));
            m.set((j + 1) * n + r, (k + 1) * n + r, rint(-1));
        }
        js.push(m);
    }
    [js[0].clone(), js[1].clone(), js[2].clone()]
}

/// The cocycle λ·(ω₁, …) on ℝ⁴ⁿ whose first `components` target slots carry
/// the three quaternionic Kähler forms; the remaining slots are zero.
fn heisenberg_cocycle(n: usize, lambda: &Rational, components: usize) -> VectorValuedForm {
    let dim = 4 * n;
    let mut theta = VectorValuedForm::zero(dim, 2, 3);
    for r in 0..n {
        let slots: [[(usize, usize, i64); 2]; 3] = [
            [(r, 2 * n + r, 1), (n + r, 3 * n + r, 1)],
            [(r, n + r, 1), (2 * n + r, 3 * n + r, -1)],
            [(r, 3 * n + r, 1), (n + r, 2 * n + r, -1)],
        ];
        for (comp, pairs) in slots.iter().enumerate().take(components) {
            for &(a, b, sign) in pairs {
                let mut v = vec_zero(3);
                v[comp] = lambda * rint(sign);
                theta.set_coeff(&[a, b], v);
            }
        }
    }
    theta
}

fn heisenberg_family(
    n: usize,
    lambda: &Rational,
    components: usize,
    name: &str,
) -> Result<CatalogEntry, ConstructorError> {
    if n == 0 {
        return Err(bad_param("n", "must be at least 1"));
    }
    if lambda.is_zero() {
        return Err(ConstructorError::ZeroParameter("lambda"));
    }
    let h = LieAlgebra::abelian(4 * n);
    let theta = heisenberg_cocycle(n, lambda, components);
    let js = standard_hypercomplex(n);
    let mut entry = central_extension(&h, &theta, &js)?;
    entry.name = name.to_string();
    entry.params.clear();
    put(&mut entry.params, "n", n.to_string());
    put(&mut entry.params, "lambda", format_rational(lambda));
    let (label7, parallel) = match components {
        3 => ("𝔥₁^ℍ", "false"),
        2 => ("𝔥₁^ℂ×ℝ", "false"),
        1 => ("𝔥₂^ℝ×ℝ²", "true"),
        _ => unreachable!("components is 1, 2, or 3"),
    };
    put(&mut entry.expected, "parallel_torsion", parallel);
    if n == 1 {
        put(&mut entry.expected, "dim7_label", label7);
    }
    Ok(entry)
}

/// Quaternionic Heisenberg algebra on 4n + 3 generators with scale λ ≠ 0:
/// the ℝ³-extension of ℝ⁴ⁿ by all three quaternionic Kähler forms.
pub fn quaternionic_heisenberg(n: usize, lambda: &Rational) -> Result<CatalogEntry, ConstructorError> {
    heisenberg_family(n, lambda, 3, "quaternionic_heisenberg")
}

/// ℝ³-extension of ℝ⁴ⁿ by the first two quaternionic Kähler forms,
/// isomorphic to 𝔥ₙ^ℂ × ℝ.
pub fn complex_heisenberg_times_r(n: usize, lambda: &Rational) -> Result<CatalogEntry, ConstructorError> {
    heisenberg_family(n, lambda, 2, "complex_heisenberg_times_R")
}

/// ℝ³-extension of ℝ⁴ⁿ by the first quaternionic Kähler form only,
/// isomorphic to 𝔥₂ₙ^ℝ × ℝ².
pub fn real_heisenberg_times_r2(n: usize, lambda: &Rational) -> Result<CatalogEntry, ConstructorError> {
    heisenberg_family(n, lambda, 1, "real_heisenberg_times_R2")
}

/// ℝ-extension of ℝ²ⁿ (with J Xᵢ = Yᵢ) by σ = 2·Σ_{i≤k} Xⁱ∧Yⁱ, the
/// quasi-Sasakian family interpolating between the abelian algebra (k = 0)
/// and the real Heisenberg algebra (k = n).
pub fn quasi_sasaki_gk(n: usize, k: usize) -> Result<CatalogEntry, ConstructorError> {
    if n == 0 {
        return Err(bad_param("n", "must be at least 1"));
    }
    if k > n {
        return Err(bad_param("k", "must satisfy k ≤ n"));
    }
    let h = LieAlgebra::abelian(2 * n);
    let j = Matrix::from_fn(2 * n, 2 * n, |r, c| {
        if c < n && r == n + c {
            rint(1)
        } else if c >= n && r == c - n {
            rint(-1)
        } else {
            rint(0)
        }
    });
    let mut sigma = VectorValuedForm::zero(2 * n, 2, 1);
    for i in 0..k {
        sigma.set_coeff(&[i, n + i], vec![rint(2)]);
    }
    let mut entry = central_extension(&h, &sigma, std::slice::from_ref(&j))?;
    entry.name = "quasi_sasaki_gk".to_string();
    entry.params.clear();
    put(&mut entry.params, "n", n.to_string());
    put(&mut entry.params, "k", k.to_string());
    put(&mut entry.expected, "quasi_sasakian", "true");
    put(&mut entry.expected, "center_dim", (1 + 2 * (n - k)).to_string());
    put(&mut entry.expected, "derived_dim", usize::from(k > 0).to_string());
    if k == n {
        put(&mut entry.expected, "alpha_sasaki", "1");
    }
    if k == 0 {
        put(&mut entry.expected, "cokahler", "true");
    }
    Ok(entry)
}

/// The real Heisenberg algebra 𝔥ₙ^ℝ with its Sasakian structure: basis
/// (ξ, X₁..Xₙ, Y₁..Yₙ), [Xᵢ, Yᵢ] = 2ξ, φXᵢ = Yᵢ.
pub fn heisenberg_real(n: usize) -> Result<CatalogEntry, ConstructorError> {
    let mut entry = quasi_sasaki_gk(n, n)?;
    entry.name = "heisenberg_real".to_string();
    entry.params.clear();
    put(&mut entry.params, "n", n.to_string());
    Ok(entry)
}

/// aff(ℝ) with the rotation complex structure Je₁ = e₂; the smallest Kähler
/// algebra with abelian complex structure, with normal-form shape k = 1,
/// s = 0.
fn aff_r_entry() -> Result<CatalogEntry, ConstructorError> {
    let algebra = LieAlgebra::from_pairs(2, &[(0, 1, basis_vec(2, 1))])?;
    let j = Matrix::from_int_rows(&[&[0, -1], &[1, 0]]);
    if !is_abelian_complex(&algebra, &j) {
        return Err(internal("the rotation on aff(ℝ) must be an abelian complex structure"));
    }
    let metric = Metric::standard(2);
    let omega = metric
        .fundamental_form(&j)
        .ok_or_else(|| internal("g(·, J·) on aff(ℝ) must be antisymmetric"))?;
    if !is_closed(&algebra, &omega) {
        return Err(internal("the Kähler form of aff(ℝ) must be closed"));
    }
    let mut expected = BTreeMap::new();
    put(&mut expected, "kahler", "true");
    put(&mut expected, "kahler_k", "1");
    put(&mut expected, "kahler_s", "0");
    put(&mut expected, "two_step_solvable", "true");
    put(&mut expected, "center_dim", "0");
    put(&mut expected, "derived_dim", "1");
    Ok(CatalogEntry {
        name: "aff_R".to_string(),
        params: BTreeMap::new(),
        algebra,
        structure: StructureData::Complex(j),
        metric,
        expected,
    })
}

fn aff_c_hypercomplex_entry() -> Result<CatalogEntry, ConstructorError> {
    let algebra = aff_c_algebra();
    let triple = aff_c_triple();
    let report = hypercomplex_check(&algebra, &triple)?;
    if !report.is_abelian_hypercomplex {
        return Err(internal("the reference triple on aff(ℂ) must be abelian hypercomplex"));
    }
    let mut expected = BTreeMap::new();
    put(&mut expected, "abelian_hypercomplex", "true");
    put(&mut expected, "recognized", "aff(ℂ)");
    put(&mut expected, "center_dim", "0");
    put(&mut expected, "derived_dim", "2");
    put(&mut expected, "two_step_solvable", "true");
    Ok(CatalogEntry {
        name: "aff_C_hypercomplex".to_string(),
        params: BTreeMap::new(),
        algebra,
        structure: StructureData::Hypercomplex(triple),
        metric: Metric::standard(4),
        expected,
    })
}

fn hypercomplex_r4_entry() -> Result<CatalogEntry, ConstructorError> {
    let algebra = LieAlgebra::abelian(4);
    let triple = standard_hypercomplex(1);
    let report = hypercomplex_check(&algebra, &triple)?;
    if !report.is_abelian_hypercomplex {
        return Err(internal("the quaternionic triple on ℝ⁴ must be abelian hypercomplex"));
    }
    let mut expected = BTreeMap::new();
    put(&mut expected, "abelian_hypercomplex", "true");
    put(&mut expected, "recognized", "ℝ⁴");
    put(&mut expected, "center_dim", "4");
    put(&mut expected, "derived_dim", "0");
    Ok(CatalogEntry {
        name: "hypercomplex_R4".to_string(),
        params: BTreeMap::new(),
        algebra,
        structure: StructureData::Hypercomplex(triple),
        metric: Metric::standard(4),
        expected,
    })
}

/// The 5-dimensional Sasakian algebras with nontrivial center: central
/// ℝ-extensions of 𝔥 ∈ {ℝ⁴, aff(ℝ)×ℝ², aff(ℝ)×aff(ℝ)} by σ = −2ω. Brackets
/// in the basis (ξ, e₁..e₄): [e₁,e₂] = r·e₂ + 2ξ, [e₃,e₄] = s·e₄ + 2ξ.
pub fn sasaki5_center(
    variant: &str,
    r: &Rational,
    s: &Rational,
) -> Result<CatalogEntry, ConstructorError> {
    let (want_r, want_s, derived_dim, kahler_k, kahler_s) = match variant {
        "R4" => (false, false, 1usize, 0usize, 2usize),
        "affRxR2" => (true, false, 2, 1, 1),
        "affRxaffR" => (true, true, 2, 2, 0),
        other => {
            return Err(bad_param(
                "variant",
                format!("unknown variant `{other}` (expected R4, affRxR2, or affRxaffR)"),
            ))
        }
    };
    for (name, value, want) in [("r", r, want_r), ("s", s, want_s)] {
        if want && value.is_zero() {
            return Err(bad_param(name, "must be nonzero for this variant"));
        }
        if !want && !value.is_zero() {
            return Err(bad_param(name, "must be zero for this variant"));
        }
    }
    let h = LieAlgebra::from_pairs(
        4,
        &[
            (0, 1, vec_scale(r, &basis_vec(4, 1))),
            (2, 3, vec_scale(s, &basis_vec(4, 3))),
        ],
    )?;
    let mut j = Matrix::zeros(4, 4);
    j.set(1, 0, rint(1)); // Je₁ = e₂
    j.set(0, 1, rint(-1));
    j.set(3, 2, rint(1)); // Je₃ = e₄
    j.set(2, 3, rint(-1));
    let mut sigma = VectorValuedForm::zero(4, 2, 1);
    sigma.set_coeff(&[0, 1], vec![rint(2)]);
    sigma.set_coeff(&[2, 3], vec![rint(2)]);

    let mut entry = central_extension(&h, &sigma, std::slice::from_ref(&j))?;
    let class = metric_class(&entry.algebra, entry.contact().expect("contact entry"), &entry.metric)?;
    if !class.labels.contains(&ContactClass::Sasakian) {
        return Err(internal("the central 5-dimensional family must be Sasakian"));
    }
    entry.name = "sasaki5_center".to_string();
    entry.params.clear();
    put(&mut entry.params, "variant", variant);
    put(&mut entry.params, "r", format_rational(r));
    put(&mut entry.params, "s", format_rational(s));
    put(&mut entry.expected, "alpha_sasaki", "1");
    put(&mut entry.expected, "center_dim", "1");
    put(&mut entry.expected, "derived_dim", derived_dim.to_string());
    put(&mut entry.expected, "horizontal_kahler_k", kahler_k.to_string());
    put(&mut entry.expected, "horizontal_kahler_s", kahler_s.to_string());
    Ok(entry)
}

/// The 5-dimensional Sasakian algebra with trivial center, parameterized by
/// an exact point (c, s) on the unit circle. Basis (e₁..e₄, ξ = e₅) with
/// φe₁ = −e₂, φe₃ = −e₄ and brackets
/// [e₁,e₂] = [e₃,e₄] = −2c·e₁ − 2s·e₂ − 2ξ, [e₁,e₃] = [e₂,e₄] = −s·e₃ + c·e₄,
/// [e₁,e₄] = −c·e₃ − s·e₄, [e₂,e₃] = c·e₃ + s·e₄, [e₃,ξ] = e₄, [e₄,ξ] = −e₃.
pub fn sasaki5_g0(c: &Rational, s: &Rational) -> Result<CatalogEntry, ConstructorError> {
    if &(c * c) + &(s * s) != rint(1) {
        return Err(bad_param("cos,sin", "the pair must satisfy cos² + sin² = 1"));
    }
    let two = rint(2);
    let e = |i: usize| basis_vec(5, i);
    let center_col = {
        let mut v = vec_zero(5);
        v[0] = -(&two * c);
        v[1] = -(&two * s);
        v[4] = -two.clone();
        v
    };
    let rot_a = {
        // −s·e₃ + c·e₄
        let mut v = vec_zero(5);
        v[2] = -s.clone();
        v[3] = c.clone();
        v
    };
    let rot_b = {
        // −c·e₃ − s·e₄
        let mut v = vec_zero(5);
        v[2] = -c.clone();
        v[3] = -s.clone();
        v
    };
    let algebra = LieAlgebra::from_pairs(
        5,
        &[
            (0, 1, center_col.clone()),
            (2, 3, center_col),
            (0, 2, rot_a.clone()),
            (1, 3, rot_a),
            (0, 3, rot_b.clone()),
            (1, 2, vec_scale(&rint(-1), &rot_b)),
            (2, 4, e(3)),
            (3, 4, vec_scale(&rint(-1), &e(2))),
        ],
    )?;
    let mut phi = Matrix::zeros(5, 5);
    phi.set(1, 0, rint(-1)); // φe₁ = −e₂
    phi.set(0, 1, rint(1));
    phi.set(3, 2, rint(-1)); // φe₃ = −e₄
    phi.set(2, 3, rint(1));
    let structure = AlmostContact::new(phi, e(4), e(4))?;
    if !is_abelian_contact(&algebra, &structure)?.is_abelian {
        return Err(internal("the trivial-center 5-dimensional family must be abelian"));
    }
    let metric = Metric::standard(5);
    let class = metric_class(&algebra, &structure, &metric)?;
    if !class.labels.contains(&ContactClass::Sasakian) {
        return Err(internal("the trivial-center 5-dimensional family must be Sasakian"));
    }
    let mut params = BTreeMap::new();
    put(&mut params, "cos", format_rational(c));
    put(&mut params, "sin", format_rational(s));
    let mut expected = BTreeMap::new();
    put(&mut expected, "abelian", "true");
    put(&mut expected, "alpha_sasaki", "1");
    put(&mut expected, "center_dim", "0");
    Ok(CatalogEntry {
        name: "sasaki5_g0".to_string(),
        params,
        algebra,
        structure: StructureData::Contact(structure),
        metric,
        expected,
    })
}

/// Isomorphism label of the 3-dimensional family directly from its structure
/// parameters ([ξ,e₁] = a·e₁ + b·e₂, [ξ,e₂] = −b·e₁ + a·e₂,
/// [e₁,e₂] = α·ξ + β·e₁ + γ·e₂), without rebuilding an adapted basis.
/// Returns `None` when the parameters violate the Jacobi constraints
/// aα = 0, aβ + bγ = 0, aγ − bβ = 0.
pub fn expected_dim3_label(
    a: &Rational,
    b: &Rational,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
) -> Option<Dim3Label> {
    let system_holds = (a * alpha).is_zero()
        && (&(a * beta) + &(b * gamma)).is_zero()
        && (&(a * gamma) - &(b * beta)).is_zero();
    if !system_holds {
        return None;
    }
    Some(if a.is_zero() && b.is_zero() {
        if beta.is_zero() && gamma.is_zero() {
            if alpha.is_zero() {
                Dim3Label::R3
            } else {
                Dim3Label::HeisenbergR
            }
        } else {
            Dim3Label::AffRxR
        }
    } else if !alpha.is_zero() {
        // the constraints force a = 0 and β = γ = 0 here, so b ≠ 0
        if (b * alpha).is_positive() {
            Dim3Label::So3
        } else {
            Dim3Label::Sl2R
        }
    } else if b.is_zero() {
        Dim3Label::R31
    } else {
        Dim3Label::RPrime3 { lambda: (a / b).abs() }
    })
}

/// The general 3-dimensional family in the adapted basis (ξ, e₁, e₂ = φe₁).
/// Rejects parameter tuples violating the Jacobi constraints. The expected
/// map records the isomorphism label and the metric class dictated by the
/// parameters: (α/2)-Sasakian when α ≠ 0, coKähler when α = a = 0, and
/// (−a)-Kenmotsu when α = 0 ≠ a.
pub fn dim3_family(
    a: &Rational,
    b: &Rational,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
) -> Result<CatalogEntry, ConstructorError> {
    let Some(label) = expected_dim3_label(a, b, alpha, beta, gamma) else {
        return Err(bad_param(
            "a,b,alpha,beta,gamma",
            "parameters violate the Jacobi constraints aα = 0, aβ + bγ = 0, aγ − bβ = 0",
        ));
    };
    let algebra = LieAlgebra::from_pairs(
        3,
        &[
            (0, 1, vec![rint(0), a.clone(), b.clone()]),
            (0, 2, vec![rint(0), -b, a.clone()]),
            (1, 2, vec![alpha.clone(), beta.clone(), gamma.clone()]),
        ],
    )?;
    let mut phi = Matrix::zeros(3, 3);
    phi.set(2, 1, rint(1)); // φe₁ = e₂
    phi.set(1, 2, rint(-1));
    let structure = AlmostContact::new(phi, basis_vec(3, 0), basis_vec(3, 0))?;
    if !is_abelian_contact(&algebra, &structure)?.is_abelian {
        return Err(internal("every member of the 3-dimensional family must be abelian"));
    }
    let mut params = BTreeMap::new();
    for (key, value) in [("a", a), ("b", b), ("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
        put(&mut params, key, format_rational(value));
    }
    let mut expected = BTreeMap::new();
    put(&mut expected, "abelian", "true");
    put(&mut expected, "dim3_label", label.to_string());
    if !alpha.is_zero() {
        put(&mut expected, "alpha_sasaki", format_rational(&(alpha / &rint(2))));
    } else if a.is_zero() {
        put(&mut expected, "cokahler", "true");
    } else {
        put(&mut expected, "alpha_kenmotsu", format_rational(&-a));
    }
    Ok(CatalogEntry {
        name: "dim3_family".to_string(),
        params,
        algebra,
        structure: StructureData::Contact(structure),
        metric: Metric::standard(3),
        expected,
    })
}

/// ℝ-extension of aff(ℂ) by the invariant cocycle e¹∧e², the smallest
/// example whose horizontal algebra is not abelian and not Kähler; the
/// extension is consequently never quasi-Sasakian.
fn aff_c_extension_entry() -> Result<CatalogEntry, ConstructorError> {
    let h = aff_c_algebra();
    let mut sigma = VectorValuedForm::zero(4, 2, 1);
    sigma.set_coeff(&[0, 1], vec![rint(1)]);
    let j1 = aff_c_triple()[0].clone();
    let mut entry = central_extension(&h, &sigma, std::slice::from_ref(&j1))?;
    let class = metric_class(&entry.algebra, entry.contact().expect("contact entry"), &entry.metric)?;
    if class.d_phi_closed {
        return Err(internal("dΦ must not vanish on the aff(ℂ) extension"));
    }
    entry.name = "aff_C_extension".to_string();
    entry.params.clear();
    put(&mut entry.expected, "quasi_sasakian", "false");
    put(&mut entry.expected, "center_dim", "1");
    put(&mut entry.expected, "derived_dim", "3");
    Ok(entry)
}

// --- the named catalog --------------------------------------------------------------

/// Names accepted by [`catalog`], alphabetically.
pub fn catalog_names() -> &'static [&'static str] {
    &[
        "aff_C_hypercomplex",
        "aff_R",
        "complex_heisenberg_times_R",
        "dim3_family",
        "heisenberg_real",
        "hypercomplex_R4",
        "quasi_sasaki_gk",
        "quaternionic_heisenberg",
        "real_heisenberg_times_R2",
        "sasaki5_center",
        "sasaki5_g0",
    ]
}

fn check_keys(
    params: &BTreeMap<String, String>,
    allowed: &[&str],
) -> Result<(), ConstructorError> {
    for key in params.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(bad_param(key, "not a parameter of this catalog entry"));
        }
    }
    Ok(())
}

fn param_raw<'a>(
    params: &'a BTreeMap<String, String>,
    key: &str,
) -> Result<&'a str, ConstructorError> {
    params
        .get(key)
        .map(String::as_str)
        .ok_or_else(|| bad_param(key, "missing"))
}

fn param_rational(
    params: &BTreeMap<String, String>,
    key: &str,
) -> Result<Rational, ConstructorError> {
    parse_rational(param_raw(params, key)?).map_err(|e| bad_param(key, e.to_string()))
}

fn param_rational_or(
    params: &BTreeMap<String, String>,
    key: &str,
    default: Rational,
) -> Result<Rational, ConstructorError> {
    match params.get(key) {
        Some(raw) => parse_rational(raw).map_err(|e| bad_param(key, e.to_string())),
        None => Ok(default),
    }
}

fn param_usize(params: &BTreeMap<String, String>, key: &str) -> Result<usize, ConstructorError> {
    param_raw(params, key)?
        .parse::<usize>()
        .map_err(|e| bad_param(key, e.to_string()))
}

/// Builds a named catalog entry from string parameters (as the command line
/// passes them). Unknown names and unknown or malformed parameters are
/// rejected with the offending key.
pub fn catalog(
    name: &str,
    params: &BTreeMap<String, String>,
) -> Result<CatalogEntry, ConstructorError> {
    match name {
        "heisenberg_real" => {
            check_keys(params, &["n"])?;
            heisenberg_real(param_usize(params, "n")?)
        }
        "aff_R" => {
            check_keys(params, &[])?;
            aff_r_entry()
        }
        "aff_C_hypercomplex" => {
            check_keys(params, &[])?;
            aff_c_hypercomplex_entry()
        }
        "quaternionic_heisenberg" => {
            check_keys(params, &["n", "lambda"])?;
            let lambda = param_rational_or(params, "lambda", rint(1))?;
            quaternionic_heisenberg(param_usize(params, "n")?, &lambda)
        }
        "complex_heisenberg_times_R" => {
            check_keys(params, &["n", "lambda"])?;
            let lambda = param_rational_or(params, "lambda", rint(1))?;
            complex_heisenberg_times_r(param_usize(params, "n")?, &lambda)
        }
        "real_heisenberg_times_R2" => {
            check_keys(params, &["n", "lambda"])?;
            let lambda = param_rational_or(params, "lambda", rint(1))?;
            real_heisenberg_times_r2(param_usize(params, "n")?, &lambda)
        }
        "hypercomplex_R4" => {
            check_keys(params, &[])?;
            hypercomplex_r4_entry()
        }
        "sasaki5_center" => {
            check_keys(params, &["variant", "r", "s"])?;
            let r = param_rational_or(params, "r", rint(0))?;
            let s = param_rational_or(params, "s", rint(0))?;
            sasaki5_center(param_raw(params, "variant")?, &r, &s)
        }
        "sasaki5_g0" => {
            check_keys(params, &["cos", "sin"])?;
            sasaki5_g0(&param_rational(params, "cos")?, &param_rational(params, "sin")?)
        }
        "dim3_family" => {
            check_keys(params, &["a", "b", "alpha", "beta", "gamma"])?;
            // omitted structure parameters are zero
            dim3_family(
                &param_rational_or(params, "a", rint(0))?,
                &param_rational_or(params, "b", rint(0))?,
                &param_rational_or(params, "alpha", rint(0))?,
                &param_rational_or(params, "beta", rint(0))?,
                &param_rational_or(params, "gamma", rint(0))?,
            )
        }
        "quasi_sasaki_gk" => {
            check_keys(params, &["n", "k"])?;
            quasi_sasaki_gk(param_usize(params, "n")?, param_usize(params, "k")?)
        }
        other => Err(ConstructorError::UnknownName(other.to_string())),
    }
}

/// The curated instances exercised by the integration suites: every named
/// family at small parameters, plus the so(3)-semidirect family and the
/// aff(ℂ) extension, which are reachable through their own constructors
/// rather than [`catalog`].
pub fn standard_fixtures() -> Vec<CatalogEntry> {
    let one = rint(1);
    let build = || -> Result<Vec<CatalogEntry>, ConstructorError> {
        let mut v = Vec::new();
        for n in 1..=3 {
            v.push(heisenberg_real(n)?);
        }
        v.push(aff_c_extension_entry()?);
        for n in 1..=2 {
            v.push(quaternionic_heisenberg(n, &one)?);
            v.push(complex_heisenberg_times_r(n, &one)?);
            v.push(real_heisenberg_times_r2(n, &one)?);
            v.push(so3_semidirect(n, &one)?);
        }
        v.push(quaternionic_heisenberg(1, &rint(2))?);
        v.push(sasaki5_center("R4", &rint(0), &rint(0))?);
        v.push(sasaki5_center("affRxR2", &rint(1), &rint(0))?);
        v.push(sasaki5_center("affRxaffR", &rint(1), &rint(-2))?);
        v.push(sasaki5_g0(&rint(1), &rint(0))?);
        v.push(sasaki5_g0(&crate::rational::rat(3, 5), &crate::rational::rat(4, 5))?);
        v.push(dim3_family(&rint(0), &rint(1), &rint(2), &rint(0), &rint(0))?);
        v.push(dim3_family(&rint(-1), &rint(1), &rint(0), &rint(0), &rint(0))?);
        v.push(quasi_sasaki_gk(2, 1)?);
        v.push(quasi_sasaki_gk(3, 2)?);
        Ok(v)
    };
    build().expect("every curated fixture satisfies its constructor preconditions")
}
