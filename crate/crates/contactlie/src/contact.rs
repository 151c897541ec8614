//! Almost contact (metric) structures on a Lie algebra: axiom validation,
//! the normality tensor, abelianness, metric classes (α-Sasakian, coKähler,
//! α-Kenmotsu, quasi-Sasakian), the characteristic-connection criterion, the
//! three-dimensional classification, and decomposition into central-extension
//! or semidirect-product data.

use crate::algebra::{ce_differential, is_abelian_complex, is_cocycle, LieAlgebra};
use crate::forms::VectorValuedForm;
use crate::linalg::{
    basis_vec, dot, vec_add, vec_is_zero, vec_scale, vec_sub, Endomorphism, Matrix,
};
use crate::metric::Metric;
use crate::rational::{format_rational, rint, Rational};
use crate::subspace::Subspace;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ContactError {
    #[error("structure tensors have dimension {got}, algebra has dimension {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("almost contact identities violated: {0:?}")]
    InvalidStructure(Vec<ContactViolation>),
    #[error("structure is not abelian ({0})")]
    NotAbelian(AbelianWitness),
    #[error("ξ is not central")]
    XiNotCentral,
    #[error("dη ≠ 0: the horizontal space is not a subalgebra")]
    DEtaNonzero,
    #[error("metric is not compatible with the structure")]
    IncompatibleMetric,
    #[error("operation requires dimension 3, got {0}")]
    Dim3Only(usize),
    #[error("internal cross-check failed: {0}")]
    InternalCrossCheck(String),
}

/// The four defining identities, checked entrywise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContactViolation {
    /// φ² ≠ −I + ξ⊗η at entry (i, j) (1-based in reports).
    PhiSquare { i: usize, j: usize },
    /// η(ξ) ≠ 1.
    EtaXi { value: Rational },
    /// φξ ≠ 0 at coordinate i.
    PhiXi { i: usize },
    /// η∘φ ≠ 0 at coordinate j.
    EtaPhi { j: usize },
    /// Ker η ≠ Im φ (cannot happen when the four identities hold).
    KernelImageMismatch,
}

/// An almost contact structure (φ, ξ, η) whose defining identities were
/// verified at construction. The horizontal space 𝔥 = Ker η is derived.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlmostContact {
    phi: Endomorphism,
    xi: Vec<Rational>,
    eta: Vec<Rational>,
}

impl AlmostContact {
    pub fn new(
        phi: Endomorphism,
        xi: Vec<Rational>,
        eta: Vec<Rational>,
    ) -> Result<Self, ContactError> {
        let violations = check_identities(&phi, &xi, &eta)?;
        if !violations.is_empty() {
            return Err(ContactError::InvalidStructure(violations));
        }
        Ok(AlmostContact { phi, xi, eta })
    }

    pub fn dim(&self) -> usize {
        self.phi.rows()
    }

    pub fn phi(&self) -> &Endomorphism {
        &self.phi
    }

    pub fn xi(&self) -> &[Rational] {
        &self.xi
    }

    pub fn eta(&self) -> &[Rational] {
        &self.eta
    }

    /// η as a scalar 1-form.
    pub fn eta_form(&self) -> VectorValuedForm {
        VectorValuedForm::from_covector(&self.eta)
    }

    /// 𝔥 = Ker η.
    pub fn horizontal(&self) -> Subspace {
        let m = Matrix::from_rows(vec![self.eta.clone()]);
        Subspace::span(self.dim(), &m.kernel_basis())
    }

    /// Projection onto 𝔥 along ξ: x ↦ x − η(x)ξ.
    pub fn project_horizontal(&self, x: &[Rational]) -> Vec<Rational> {
        vec_sub(x, &vec_scale(&dot(&self.eta, x), &self.xi))
    }
}

fn check_identities(
    phi: &Endomorphism,
    xi: &[Rational],
    eta: &[Rational],
) -> Result<Vec<ContactViolation>, ContactError> {
    let n = phi.rows();
    if phi.cols() != n || xi.len() != n || eta.len() != n {
        return Err(ContactError::DimensionMismatch {
            got: phi.cols().max(xi.len()).max(eta.len()),
            expected: n,
        });
    }
    let mut violations = Vec::new();
    // φ² = −I + ξ⊗η
    let phi2 = phi.mul(phi);
    let expected = Matrix::from_fn(n, n, |i, j| {
        let delta = if i == j { Rational::one() } else { Rational::zero() };
        &xi[i] * &eta[j] - delta
    });
    'outer: for i in 0..n {
        for j in 0..n {
            if phi2.get(i, j) != expected.get(i, j) {
                violations.push(ContactViolation::PhiSquare { i: i + 1, j: j + 1 });
                break 'outer; // one witness entry is enough
            }
        }
    }
    let eta_xi = dot(eta, xi);
    if !eta_xi.is_one() {
        violations.push(ContactViolation::EtaXi { value: eta_xi });
    }
    let phi_xi = phi.mul_vec(xi);
    if let Some(i) = phi_xi.iter().position(|v| !v.is_zero()) {
        violations.push(ContactViolation::PhiXi { i: i + 1 });
    }
    let eta_phi: Vec<Rational> = (0..n).map(|j| dot(eta, &phi.column(j))).collect();
    if let Some(j) = eta_phi.iter().position(|v| !v.is_zero()) {
        violations.push(ContactViolation::EtaPhi { j: j + 1 });
    }
    Ok(violations)
}

/// Validation report: violations (empty = ok), warnings, and the derived
/// horizontal data.
#[derive(Debug, Clone)]
pub struct ContactValidation {
    pub violations: Vec<ContactViolation>,
    pub warnings: Vec<String>,
    pub horizontal: Subspace,
    pub image_of_phi: Subspace,
    pub horizontal_dim: usize,
}

impl ContactValidation {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the four identities of (φ, ξ, η) against `l` entrywise and reports
/// Ker η = Im φ. Even-dimensional algebras produce a warning, not an error:
/// the identities are dimension-agnostic.
pub fn validate_almost_contact(
    l: &LieAlgebra,
    phi: &Endomorphism,
    xi: &[Rational],
    eta: &[Rational],
) -> Result<ContactValidation, ContactError> {
    if phi.rows() != l.dim() {
        return Err(ContactError::DimensionMismatch {
            got: phi.rows(),
            expected: l.dim(),
        });
    }
    let mut violations = check_identities(phi, xi, eta)?;
    let mut warnings = Vec::new();
    if l.dim() % 2 == 0 {
        warnings.push(format!(
            "algebra dimension {} is even; almost contact structures usually live in odd dimension",
            l.dim()
        ));
    }
    let eta_matrix = Matrix::from_rows(vec![eta.to_vec()]);
    let horizontal = Subspace::span(l.dim(), &eta_matrix.kernel_basis());
    let image_of_phi = Subspace::span(l.dim(), &(0..l.dim()).map(|j| phi.column(j)).collect::<Vec<_>>());
    if violations.is_empty() && horizontal != image_of_phi {
        violations.push(ContactViolation::KernelImageMismatch);
    }
    let horizontal_dim = horizontal.dim();
    Ok(ContactValidation {
        violations,
        warnings,
        horizontal,
        image_of_phi,
        horizontal_dim,
    })
}

// --- normality ---------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct NormalityReport {
    /// n_phi[i][j] = N_φ(e_i, e_j) for i < j (antisymmetric elsewhere).
    pub values: Vec<((usize, usize), Vec<Rational>)>,
    pub is_normal: bool,
}

impl NormalityReport {
    /// First nonzero N_φ(e_i, e_j), if any.
    pub fn witness(&self) -> Option<&((usize, usize), Vec<Rational>)> {
        self.values.iter().find(|(_, v)| !vec_is_zero(v))
    }
}

/// N_φ(x, y) = [φ,φ](x, y) + dη(x, y)ξ on all basis pairs, where
/// [φ,φ](x,y) = [φx, φy] + φ²[x, y] − φ[φx, y] − φ[x, φy].
/// The result is cross-checked against the two-condition normality criterion
/// (horizontal bracket condition plus [ad_ξ, φ] = 0); any disagreement is an
/// internal error, since the equivalence is a theorem.
pub fn normality_tensor(l: &LieAlgebra, s: &AlmostContact) -> Result<NormalityReport, ContactError> {
    require_same_dim(l, s)?;
    let n = l.dim();
    let deta = ce_differential(l.tensor(), &s.eta_form()).expect("degree 1 < dim");
    let mut values = Vec::new();
    let mut is_normal = true;
    for i in 0..n {
        for j in i + 1..n {
            let ei = basis_vec(n, i);
            let ej = basis_vec(n, j);
            let mut v = l.bracket(&s.phi.column(i), &s.phi.column(j));
            v = vec_add(&v, &s.phi.mul(&s.phi).mul_vec(l.basis_bracket(i, j)));
            v = vec_sub(&v, &s.phi.mul_vec(&l.bracket(&s.phi.column(i), &ej)));
            v = vec_sub(&v, &s.phi.mul_vec(&l.bracket(&ei, &s.phi.column(j))));
            let deta_ij = deta.eval_scalar(&[&ei, &ej]);
            v = vec_add(&v, &vec_scale(&deta_ij, &s.xi));
            if !vec_is_zero(&v) {
                is_normal = false;
            }
            values.push(((i, j), v));
        }
    }
    // Independent criterion: [ad_ξ, φ] = 0 and, for X, Y horizontal,
    // [φX, φY] − [X, Y] = φ([φX, Y] + [X, φY]).
    let cond1 = l.ad(&s.xi).commutator(&s.phi).is_zero();
    let h_basis = s.horizontal().basis_vectors();
    let mut cond2 = true;
    'pairs: for (a, x) in h_basis.iter().enumerate() {
        for y in h_basis.iter().skip(a + 1) {
            let phix = s.phi.mul_vec(x);
            let phiy = s.phi.mul_vec(y);
            let lhs = vec_sub(&l.bracket(&phix, &phiy), &l.bracket(x, y));
            let rhs = s
                .phi
                .mul_vec(&vec_add(&l.bracket(&phix, y), &l.bracket(x, &phiy)));
            if lhs != rhs {
                cond2 = false;
                break 'pairs;
            }
        }
    }
    if is_normal != (cond1 && cond2) {
        return Err(ContactError::InternalCrossCheck(format!(
            "normality tensor zero = {is_normal}, two-condition criterion = {}",
            cond1 && cond2
        )));
    }
    Ok(NormalityReport { values, is_normal })
}

// --- abelianness --------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbelianWitness {
    /// ad_ξ ∘ φ ≠ φ ∘ ad_ξ.
    AdXiPhiDoNotCommute,
    /// [φX, φY] ≠ [X, Y] for the given pair of horizontal basis vectors
    /// (indices into the canonical basis of 𝔥).
    HorizontalBracket { a: usize, b: usize },
}

impl std::fmt::Display for AbelianWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AbelianWitness::AdXiPhiDoNotCommute => write!(f, "ad_xi and phi do not commute"),
            AbelianWitness::HorizontalBracket { a, b } => {
                write!(f, "[phi X, phi Y] != [X, Y] on horizontal basis pair ({a}, {b})")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct AbelianContactReport {
    pub is_abelian: bool,
    pub witness: Option<AbelianWitness>,
}

/// Abelian ⟺ ad_ξ∘φ = φ∘ad_ξ and [φX, φY] = [X, Y] for X, Y ∈ 𝔥.
pub fn is_abelian_contact(l: &LieAlgebra, s: &AlmostContact) -> Result<AbelianContactReport, ContactError> {
    require_same_dim(l, s)?;
    if !l.ad(&s.xi).commutator(&s.phi).is_zero() {
        return Ok(AbelianContactReport {
            is_abelian: false,
            witness: Some(AbelianWitness::AdXiPhiDoNotCommute),
        });
    }
    let h_basis = s.horizontal().basis_vectors();
    for a in 0..h_basis.len() {
        for b in a + 1..h_basis.len() {
            let lhs = l.bracket(&s.phi.mul_vec(&h_basis[a]), &s.phi.mul_vec(&h_basis[b]));
            let rhs = l.bracket(&h_basis[a], &h_basis[b]);
            if lhs != rhs {
                return Ok(AbelianContactReport {
                    is_abelian: false,
                    witness: Some(AbelianWitness::HorizontalBracket { a, b }),
                });
            }
        }
    }
    Ok(AbelianContactReport {
        is_abelian: true,
        witness: None,
    })
}

fn require_same_dim(l: &LieAlgebra, s: &AlmostContact) -> Result<(), ContactError> {
    if l.dim() != s.dim() {
        return Err(ContactError::DimensionMismatch {
            got: s.dim(),
            expected: l.dim(),
        });
    }
    Ok(())
}

fn require_abelian(l: &LieAlgebra, s: &AlmostContact) -> Result<(), ContactError> {
    let report = is_abelian_contact(l, s)?;
    if !report.is_abelian {
        return Err(ContactError::NotAbelian(report.witness.unwrap()));
    }
    Ok(())
}

// --- metric classes ------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContactClass {
    QuasiSasakian,
    CoKahler,
    AlphaSasakian(Rational),
    Sasakian,
    AlphaKenmotsu(Rational),
    Kenmotsu,
    None,
}

impl std::fmt::Display for ContactClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ContactClass::QuasiSasakian => write!(f, "quasi-Sasakian"),
            ContactClass::CoKahler => write!(f, "coKähler"),
            ContactClass::AlphaSasakian(a) => write!(f, "α-Sasakian({})", format_rational(a)),
            ContactClass::Sasakian => write!(f, "Sasakian"),
            ContactClass::AlphaKenmotsu(a) => write!(f, "α-Kenmotsu({})", format_rational(a)),
            ContactClass::Kenmotsu => write!(f, "Kenmotsu"),
            ContactClass::None => write!(f, "none"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ContactClassReport {
    pub normal: bool,
    pub deta_closed: bool,
    pub d_phi_closed: bool,
    pub alpha_sasaki: Option<Rational>,
    pub alpha_kenmotsu: Option<Rational>,
    pub labels: Vec<ContactClass>,
}

/// Unique r with `a = r·b`, when b ≠ 0 and the ratio is consistent.
fn proportionality(a: &VectorValuedForm, b: &VectorValuedForm) -> Option<Rational> {
    if b.is_zero() {
        return None;
    }
    let tuples = crate::forms::increasing_tuples(a.ambient_dim(), a.degree());
    let mut r: Option<Rational> = None;
    for t in &tuples {
        let bv = &b.coeff(t)[0];
        if !bv.is_zero() {
            r = Some(&a.coeff(t)[0] / bv);
            break;
        }
    }
    let r = r?;
    if a == &b.scale(&r) {
        Some(r)
    } else {
        None
    }
}

/// Classifies a normal metric structure: α-Sasakian (dη = 2αΦ), coKähler
/// (dη = 0, dΦ = 0), α-Kenmotsu (dη = 0, dΦ = 2α η∧Φ), quasi-Sasakian
/// (dΦ = 0). Non-normal input is reported via the `normal` flag and carries
/// no class labels.
pub fn metric_class(
    l: &LieAlgebra,
    s: &AlmostContact,
    g: &Metric,
) -> Result<ContactClassReport, ContactError> {
    require_same_dim(l, s)?;
    if !g.is_contact_compatible(&s.phi, &s.eta) {
        return Err(ContactError::IncompatibleMetric);
    }
    let normal = normality_tensor(l, s)?.is_normal;
    let phi_form = g
        .fundamental_form(&s.phi)
        .expect("compatible metric yields an antisymmetric fundamental form");
    let deta = ce_differential(l.tensor(), &s.eta_form()).expect("degree 1 < dim");
    let d_phi = ce_differential(l.tensor(), &phi_form).expect("degree 2 < dim for odd dim ≥ 3");
    let deta_closed = deta.is_zero();
    let d_phi_closed = d_phi.is_zero();

    let two = rint(2);
    let alpha_sasaki = proportionality(&deta, &phi_form)
        .map(|r| r / &two)
        .filter(|a| !a.is_zero());
    let eta_wedge_phi = s.eta_form().wedge(&phi_form);
    let alpha_kenmotsu = if deta_closed {
        proportionality(&d_phi, &eta_wedge_phi)
            .map(|r| r / &two)
            .filter(|a| !a.is_zero())
    } else {
        None
    };

    let mut labels = Vec::new();
    if normal {
        if let Some(a) = &alpha_sasaki {
            labels.push(ContactClass::AlphaSasakian(a.clone()));
            if a.is_one() {
                labels.push(ContactClass::Sasakian);
            }
        }
        if deta_closed && d_phi_closed {
            labels.push(ContactClass::CoKahler);
        }
        if let Some(a) = &alpha_kenmotsu {
            labels.push(ContactClass::AlphaKenmotsu(a.clone()));
            if a.is_one() {
                labels.push(ContactClass::Kenmotsu);
            }
        }
        if d_phi_closed {
            labels.push(ContactClass::QuasiSasakian);
        }
        if labels.is_empty() {
            labels.push(ContactClass::None);
        }
    }
    Ok(ContactClassReport {
        normal,
        deta_closed,
        d_phi_closed,
        alpha_sasaki,
        alpha_kenmotsu,
        labels,
    })
}

// --- characteristic connection ---------------------------------------------------

#[derive(Debug, Clone)]
pub struct CharacteristicReport {
    pub exists: bool,
    /// T = η∧dη + c when the connection exists.
    pub torsion: Option<VectorValuedForm>,
}

/// The 3-form c(X,Y,Z) = −g([X,Y],Z) − g([Y,Z],X) − g([Z,X],Y) evaluated on
/// horizontal projections.
pub fn c_form(l: &LieAlgebra, s: &AlmostContact, g: &Metric) -> VectorValuedForm {
    let n = l.dim();
    let proj: Vec<Vec<Rational>> = (0..n)
        .map(|i| s.project_horizontal(&basis_vec(n, i)))
        .collect();
    VectorValuedForm::from_fn(n, 3, 1, |t| {
        let (x, y, z) = (&proj[t[0]], &proj[t[1]], &proj[t[2]]);
        let v = -g.inner(&l.bracket(x, y), z) - g.inner(&l.bracket(y, z), x)
            - g.inner(&l.bracket(z, x), y);
        vec![v]
    })
}

/// Existence criterion for the characteristic connection of an abelian
/// structure: ad_ξ|𝔥 skew-symmetric w.r.t. g ⟺ ξ⌟dΦ = 0. Both sides are
/// computed and must agree; the torsion is T = η∧dη + c.
pub fn characteristic_connection(
    l: &LieAlgebra,
    s: &AlmostContact,
    g: &Metric,
) -> Result<CharacteristicReport, ContactError> {
    require_same_dim(l, s)?;
    if !g.is_contact_compatible(&s.phi, &s.eta) {
        return Err(ContactError::IncompatibleMetric);
    }
    require_abelian(l, s)?;
    // ad_ξ|𝔥 skew w.r.t. g on horizontal pairs
    let ad_xi = l.ad(&s.xi);
    let h_basis = s.horizontal().basis_vectors();
    let mut skew = true;
    'outer: for (a, x) in h_basis.iter().enumerate() {
        for y in h_basis.iter().skip(a) {
            let v = g.inner(&ad_xi.mul_vec(x), y) + g.inner(x, &ad_xi.mul_vec(y));
            if !v.is_zero() {
                skew = false;
                break 'outer;
            }
        }
    }
    // ξ⌟dΦ = 0
    let phi_form = g
        .fundamental_form(&s.phi)
        .expect("compatible metric yields an antisymmetric fundamental form");
    let d_phi = ce_differential(l.tensor(), &phi_form).expect("degree 2 < dim");
    let xi_hook_zero = d_phi.contract(&s.xi).is_zero();
    if skew != xi_hook_zero {
        return Err(ContactError::InternalCrossCheck(format!(
            "ad_xi skew = {skew} but (xi ⌟ dPhi = 0) = {xi_hook_zero}"
        )));
    }
    if !skew {
        return Ok(CharacteristicReport {
            exists: false,
            torsion: None,
        });
    }
    let deta = ce_differential(l.tensor(), &s.eta_form()).expect("degree 1 < dim");
    let torsion = s.eta_form().wedge(&deta).add(&c_form(l, s, g));
    Ok(CharacteristicReport {
        exists: true,
        torsion: Some(torsion),
    })
}

// --- dimension-3 classification ----------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dim3Label {
    R3,
    HeisenbergR,
    AffRxR,
    So3,
    Sl2R,
    R31,
    /// r′_{3,λ} with λ = |a/b| ≥ 0.
    RPrime3 { lambda: Rational },
}

impl std::fmt::Display for Dim3Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dim3Label::R3 => write!(f, "ℝ³"),
            Dim3Label::HeisenbergR => write!(f, "𝔥₁^ℝ"),
            Dim3Label::AffRxR => write!(f, "aff(ℝ)×ℝ"),
            Dim3Label::So3 => write!(f, "so(3)"),
            Dim3Label::Sl2R => write!(f, "sl(2,ℝ)"),
            Dim3Label::R31 => write!(f, "r_{{3,1}}"),
            Dim3Label::RPrime3 { lambda } => write!(f, "r'_{{3,{}}}", format_rational(lambda)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Dim3Report {
    pub label: Dim3Label,
    /// Structure parameters in the adapted basis (ξ, e₁, e₂ = φe₁):
    /// [ξ,e₁] = a e₁ + b e₂, [ξ,e₂] = −b e₁ + a e₂, [e₁,e₂] = αξ + βe₁ + γe₂.
    pub a: Rational,
    pub b: Rational,
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

/// Classifies a 3-dimensional algebra with abelian structure by reading the
/// structure parameters off an adapted basis (ξ, e₁, e₂ = φe₁); e₁ is the
/// horizontal projection of the first standard basis vector that has one.
pub fn classify_dim3(l: &LieAlgebra, s: &AlmostContact) -> Result<Dim3Report, ContactError> {
    require_same_dim(l, s)?;
    if l.dim() != 3 {
        return Err(ContactError::Dim3Only(l.dim()));
    }
    require_abelian(l, s)?;
    let e1 = (0..3)
        .map(|i| s.project_horizontal(&basis_vec(3, i)))
        .find(|v| !vec_is_zero(v))
        .expect("projection to a 2-dimensional space cannot kill every basis vector");
    classify_dim3_with_seed(l, s, &e1)
}

/// Same as [`classify_dim3`] but with an explicit choice of e₁ ∈ 𝔥 (used to
/// verify that the label does not depend on the choice).
pub fn classify_dim3_with_seed(
    l: &LieAlgebra,
    s: &AlmostContact,
    e1: &[Rational],
) -> Result<Dim3Report, ContactError> {
    let e2 = s.phi.mul_vec(e1);
    let basis = Matrix::from_columns(&[s.xi.to_vec(), e1.to_vec(), e2.clone()]);
    let inv = basis
        .inverse()
        .expect("(ξ, e₁, φe₁) is a basis whenever e₁ ∈ 𝔥 is nonzero");
    let coords = |v: &[Rational]| inv.mul_vec(v);

    let ad_xi_e1 = coords(&l.bracket(&s.xi, e1));
    let ad_xi_e2 = coords(&l.bracket(&s.xi, &e2));
    let br12 = coords(&l.bracket(e1, &e2));
    if !ad_xi_e1[0].is_zero() || !ad_xi_e2[0].is_zero() {
        return Err(ContactError::InternalCrossCheck(
            "ad_ξ does not preserve the horizontal space of an abelian structure".into(),
        ));
    }
    let (a, b) = (ad_xi_e1[1].clone(), ad_xi_e1[2].clone());
    if ad_xi_e2 != vec![Rational::zero(), -b.clone(), a.clone()] {
        return Err(ContactError::InternalCrossCheck(
            "[ξ, φe₁] is not the rotation image required by [ad_ξ, φ] = 0".into(),
        ));
    }
    let (alpha, beta, gamma) = (br12[0].clone(), br12[1].clone(), br12[2].clone());
    // Jacobi forces aα = 0, aβ + bγ = 0, aγ − bβ = 0.
    let sys_ok = (&a * &alpha).is_zero()
        && (&a * &beta + &b * &gamma).is_zero()
        && (&a * &gamma - &b * &beta).is_zero();
    if !sys_ok {
        return Err(ContactError::InternalCrossCheck(
            "structure parameters violate the Jacobi constraint system".into(),
        ));
    }

    let label = if a.is_zero() && b.is_zero() {
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
        // Jacobi gives a = 0, b ≠ 0, β = γ = 0 here.
        if &b * &alpha > Rational::zero() {
            Dim3Label::So3
        } else {
            Dim3Label::Sl2R
        }
    } else if b.is_zero() {
        Dim3Label::R31
    } else {
        let lambda = (&a / &b).abs();
        Dim3Label::RPrime3 { lambda }
    };
    Ok(Dim3Report {
        label,
        a,
        b,
        alpha,
        beta,
        gamma,
    })
}

// --- decompositions -----------------------------------------------------------------

/// Result of peeling off a central ξ: 𝔤 = ℝξ ⊕_σ 𝔥 with J = φ|𝔥 and
/// σ = −dη|𝔥, expressed in the canonical basis of 𝔥 = Ker η.
#[derive(Debug, Clone)]
pub struct CentralExtensionData {
    pub h: LieAlgebra,
    pub j: Endomorphism,
    pub sigma: VectorValuedForm,
    /// Columns: ξ followed by the canonical basis of 𝔥 (old coordinates);
    /// feeding `h`, `j`, `sigma` to the central-extension constructor and
    /// pulling `l` back along this matrix must agree.
    pub basis: Matrix,
}

pub fn decompose_central_extension(
    l: &LieAlgebra,
    s: &AlmostContact,
) -> Result<CentralExtensionData, ContactError> {
    require_same_dim(l, s)?;
    require_abelian(l, s)?;
    if !l.ad(&s.xi).is_zero() {
        return Err(ContactError::XiNotCentral);
    }
    let (h, j, basis, _, sigma_values) = split_along_xi(l, s)?;
    let m = h.dim();
    let mut sigma = VectorValuedForm::zero(m, 2, 1);
    for ((a, b), v) in sigma_values {
        sigma.set_coeff(&[a, b], vec![v]);
    }
    if !is_abelian_complex(&h, &j) {
        return Err(ContactError::InternalCrossCheck(
            "φ|𝔥 is not an abelian complex structure on the quotient bracket".into(),
        ));
    }
    if !sigma_is_j_invariant(&sigma, &j) {
        return Err(ContactError::InternalCrossCheck(
            "σ = −dη|𝔥 is not J-invariant".into(),
        ));
    }
    if !is_cocycle(h.tensor(), &sigma) {
        return Err(ContactError::InternalCrossCheck("σ = −dη|𝔥 is not a cocycle".into()));
    }
    Ok(CentralExtensionData { h, j, sigma, basis })
}

/// 𝔤 = ℝξ ⋉_D 𝔥 data: induced bracket on 𝔥 = Ker η, J = φ|𝔥, D = ad_ξ|𝔥.
#[derive(Debug, Clone)]
pub struct SemidirectData {
    pub h: LieAlgebra,
    pub j: Endomorphism,
    pub d: Endomorphism,
    pub basis: Matrix,
}

pub fn decompose_semidirect(l: &LieAlgebra, s: &AlmostContact) -> Result<SemidirectData, ContactError> {
    require_same_dim(l, s)?;
    require_abelian(l, s)?;
    let deta = ce_differential(l.tensor(), &s.eta_form()).expect("degree 1 < dim");
    if !deta.is_zero() {
        return Err(ContactError::DEtaNonzero);
    }
    let (h, j, basis, _, sigma_values) = split_along_xi(l, s)?;
    debug_assert!(sigma_values.iter().all(|(_, v)| v.is_zero()), "dη = 0 kills σ");
    // D = ad_ξ|𝔥 in the canonical basis of 𝔥
    let m = h.dim();
    let inv = basis.inverse().expect("basis matrix is invertible");
    let h_basis: Vec<Vec<Rational>> = (0..m).map(|a| basis.column(a + 1)).collect();
    let mut d = Matrix::zeros(m, m);
    for (a, ha) in h_basis.iter().enumerate() {
        let coords = inv.mul_vec(&l.bracket(&s.xi, ha));
        if !coords[0].is_zero() {
            return Err(ContactError::InternalCrossCheck(
                "ad_ξ does not preserve 𝔥 although dη = 0".into(),
            ));
        }
        for r in 0..m {
            d.set(r, a, coords[r + 1].clone());
        }
    }
    if d.commutator(&j) != Matrix::zeros(m, m) {
        return Err(ContactError::InternalCrossCheck("D does not commute with J".into()));
    }
    if !h.is_derivation(&d) {
        return Err(ContactError::InternalCrossCheck("ad_ξ|𝔥 is not a derivation of 𝔥".into()));
    }
    if !is_abelian_complex(&h, &j) {
        return Err(ContactError::InternalCrossCheck(
            "φ|𝔥 is not an abelian complex structure on 𝔥".into(),
        ));
    }
    Ok(SemidirectData { h, j, d, basis })
}

/// Shared splitting machinery: returns (𝔥 with projected bracket, J = φ|𝔥,
/// basis matrix [ξ | 𝔥-basis], 𝔥-part of each bracket, σ values).
#[allow(clippy::type_complexity)]
fn split_along_xi(
    l: &LieAlgebra,
    s: &AlmostContact,
) -> Result<
    (
        LieAlgebra,
        Endomorphism,
        Matrix,
        Vec<(usize, usize, Vec<Rational>)>,
        Vec<((usize, usize), Rational)>,
    ),
    ContactError,
> {
    let h_vectors = s.horizontal().basis_vectors();
    let m = h_vectors.len();
    let mut columns = vec![s.xi.to_vec()];
    columns.extend(h_vectors.iter().cloned());
    let basis = Matrix::from_columns(&columns);
    let inv = basis
        .inverse()
        .expect("ξ together with a basis of Ker η spans the algebra");
    let mut h_pairs = Vec::new();
    let mut sigma_values = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let coords = inv.mul_vec(&l.bracket(&h_vectors[a], &h_vectors[b]));
            sigma_values.push(((a, b), coords[0].clone()));
            h_pairs.push((a, b, coords[1..].to_vec()));
        }
    }
    let h = LieAlgebra::from_pairs(m, &h_pairs).map_err(|e| {
        ContactError::InternalCrossCheck(format!("projected bracket is not a Lie bracket: {e}"))
    })?;
    // J = φ|𝔥 in the canonical 𝔥-basis
    let mut j = Matrix::zeros(m, m);
    for (a, ha) in h_vectors.iter().enumerate() {
        let coords = inv.mul_vec(&s.phi.mul_vec(ha));
        if !coords[0].is_zero() {
            return Err(ContactError::InternalCrossCheck("φ does not preserve Ker η".into()));
        }
        for r in 0..m {
            j.set(r, a, coords[r + 1].clone());
        }
    }
    Ok((h, j, basis, h_pairs, sigma_values))
}

fn sigma_is_j_invariant(sigma: &VectorValuedForm, j: &Endomorphism) -> bool {
    let m = j.rows();
    for a in 0..m {
        for b in a + 1..m {
            let lhs = sigma.eval(&[&j.column(a), &j.column(b)]);
            let rhs = sigma.value_on_basis(&[a, b]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
