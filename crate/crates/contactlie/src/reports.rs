//! Document-level reports shared by the command-line tool and the C
//! bindings: realize a parsed document into validated objects, run the
//! requested analysis, and return the result in both a canonical JSON form
//! and a grep-friendly text form.
//!
//! Failed mathematical identities are reported structurally as a
//! [`MathViolation`] — identity name, 1-based basis indices, and a message
//! carrying the exact defect — distinct from schema and usage errors.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{Map, Value};
use thiserror::Error;

use crate::algebra::{AlgebraError, BracketTensor, LieAlgebra};
use crate::connection::{
    is_parallel_torsion, levi_civita, with_skew_torsion, Connection, ConnectionError,
};
use crate::constructors::{catalog, catalog_names, hypercomplex_check, ConstructorError};
use crate::contact::{
    classify_dim3, is_abelian_contact, metric_class, normality_tensor, validate_almost_contact,
    AlmostContact, ContactError, ContactViolation,
};
use crate::forms::{increasing_tuples, VectorValuedForm};
use crate::homology::{
    gamma_abelianization, quaternion_semidirect_presentation, semidirect_abelianization,
    HomologyError,
};
use crate::json::{
    abelianization_to_value, connection_to_value, entry_to_value, form_to_value, matrix_to_value,
    parse_document, rational_to_value, to_canonical_string, vector_to_value, Document,
    RawStructure, SchemaError,
};
use crate::linalg::{Endomorphism, Matrix};
use crate::metric::{Metric, MetricError};
use crate::rational::{format_rational, rint, Rational};
use crate::three_contact::{
    canonical_check, canonical_torsion, case_analysis, classify_dim7, structure_invariants,
    validate_almost_3contact, Almost3Contact, ThreeContactError, TripleIdentity,
};

// --- errors -----------------------------------------------------------------------

/// A mathematical violation: which identity failed, at which 1-based basis
/// indices, with the exact defect spelled out in the message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MathViolation {
    pub identity: String,
    pub indices: Vec<usize>,
    pub message: String,
}

impl MathViolation {
    pub fn to_value(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("identity".to_string(), Value::String(self.identity.clone()));
        obj.insert(
            "indices".to_string(),
            Value::Array(self.indices.iter().map(|&i| Value::from(i)).collect()),
        );
        obj.insert("message".to_string(), Value::String(self.message.clone()));
        let mut outer = Map::new();
        outer.insert("violation".to_string(), Value::Object(obj));
        Value::Object(outer)
    }

    pub fn to_text(&self) -> String {
        let indices = self
            .indices
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",");
        format!("violation({indices}): {}: {}\n", self.identity, self.message)
    }
}

impl std::fmt::Display for MathViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.to_text().trim_end())
    }
}

/// Report-level failure, split by how callers must treat it: schema and
/// usage problems are input errors, a [`MathViolation`] is the subject
/// matter failing its defining identities.
#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Math(MathViolation),
}

fn violation(identity: &str, indices: Vec<usize>, message: impl Into<String>) -> ReportError {
    ReportError::Math(MathViolation {
        identity: identity.to_string(),
        indices,
        message: message.into(),
    })
}

impl From<AlgebraError> for ReportError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::JacobiViolation { i, j, k } => violation(
                "jacobi",
                vec![i + 1, j + 1, k + 1],
                format!("Jacobi identity fails on basis triple ({}, {}, {})", i + 1, j + 1, k + 1),
            ),
            other => ReportError::Usage(other.to_string()),
        }
    }
}

fn contact_violation(v: &ContactViolation) -> MathViolation {
    let (identity, indices, message) = match v {
        ContactViolation::PhiSquare { i, j } => (
            "phi_square",
            vec![*i, *j],
            format!("phi^2 != -I + xi tensor eta at entry ({i}, {j})"),
        ),
        ContactViolation::EtaXi { value } => (
            "eta_xi",
            vec![],
            format!("eta(xi) = {}, expected 1", format_rational(value)),
        ),
        ContactViolation::PhiXi { i } => {
            ("phi_xi", vec![*i], format!("phi(xi) != 0 at coordinate {i}"))
        }
        ContactViolation::EtaPhi { j } => ("eta_phi", vec![*j], format!("eta(phi e_{j}) != 0")),
        ContactViolation::KernelImageMismatch => {
            ("kernel_image", vec![], "Ker eta != Im phi".to_string())
        }
    };
    MathViolation {
        identity: identity.to_string(),
        indices,
        message,
    }
}

impl From<ContactError> for ReportError {
    fn from(e: ContactError) -> Self {
        let msg = e.to_string();
        match e {
            ContactError::InvalidStructure(vs) => ReportError::Math(contact_violation(&vs[0])),
            ContactError::NotAbelian(w) => violation("abelian", vec![], w.to_string()),
            ContactError::XiNotCentral => violation("xi_central", vec![], msg),
            ContactError::DEtaNonzero => violation("deta_zero", vec![], msg),
            ContactError::IncompatibleMetric => violation("metric_compatibility", vec![], msg),
            ContactError::DimensionMismatch { .. } | ContactError::Dim3Only(_) => {
                ReportError::Usage(msg)
            }
            ContactError::InternalCrossCheck(_) => violation("internal", vec![], msg),
        }
    }
}

fn triple_identity_name(id: TripleIdentity) -> &'static str {
    match id {
        TripleIdentity::PhiComposition => "phi_composition",
        TripleIdentity::PhiAnticomposition => "phi_anticomposition",
        TripleIdentity::XiImage => "xi_image",
        TripleIdentity::XiAntiImage => "xi_anti_image",
        TripleIdentity::EtaComposition => "eta_composition",
        TripleIdentity::EtaAnticomposition => "eta_anticomposition",
    }
}

impl From<ThreeContactError> for ReportError {
    fn from(e: ThreeContactError) -> Self {
        let msg = e.to_string();
        match e {
            ThreeContactError::InvalidTriple(vs) => {
                let v = &vs[0];
                let (i, j, k) = v.permutation;
                ReportError::Math(MathViolation {
                    identity: triple_identity_name(v.identity).to_string(),
                    indices: vec![i, j, k],
                    message: msg,
                })
            }
            ThreeContactError::NotAbelian { index, witness } => {
                violation("abelian", vec![index], witness.to_string())
            }
            ThreeContactError::NotUnitVector => violation("unit_vector", vec![], msg),
            ThreeContactError::DeltaPattern => violation("delta_pattern", vec![], msg),
            ThreeContactError::IncompatibleMetric { index } => {
                violation("metric_compatibility", vec![index], msg)
            }
            ThreeContactError::NotCanonical => violation("canonical", vec![], msg),
            ThreeContactError::TheoremViolation(_) => violation("structure", vec![], msg),
            ThreeContactError::DimensionMismatch { .. }
            | ThreeContactError::DimensionNot3Mod4(_)
            | ThreeContactError::Dim7Only(_) => ReportError::Usage(msg),
            ThreeContactError::InternalCrossCheck(_) => violation("internal", vec![], msg),
            ThreeContactError::Contact(c) => ReportError::from(c),
        }
    }
}

impl From<MetricError> for ReportError {
    fn from(e: MetricError) -> Self {
        match e {
            MetricError::NotSymmetric { i, j } => {
                violation("metric_symmetric", vec![i + 1, j + 1], e.to_string())
            }
            MetricError::NotPositiveDefinite { k } => {
                violation("metric_positive_definite", vec![k], e.to_string())
            }
            MetricError::NotSquare { .. } => ReportError::Usage(e.to_string()),
        }
    }
}

impl From<ConnectionError> for ReportError {
    fn from(e: ConnectionError) -> Self {
        let msg = e.to_string();
        match e {
            ConnectionError::DimensionMismatch { .. } | ConnectionError::BadShape { .. } => {
                ReportError::Usage(msg)
            }
            ConnectionError::NotSkew(_) => violation("torsion_skew", vec![], msg),
            ConnectionError::NotATorsionForm => violation("torsion_form", vec![], msg),
            ConnectionError::NotMetric => violation("metric_connection", vec![], msg),
            ConnectionError::InternalCrossCheck(_) => violation("internal", vec![], msg),
            ConnectionError::ThreeContact(t) => ReportError::from(t),
        }
    }
}

impl From<HomologyError> for ReportError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::NoLatticeRotation(m) => violation(
                "crystallographic_restriction",
                vec![m],
                format!("no planar lattice rotation of order {m}; only 1, 2, 3, 4, 6 occur"),
            ),
            other => ReportError::Usage(other.to_string()),
        }
    }
}

impl From<ConstructorError> for ReportError {
    fn from(e: ConstructorError) -> Self {
        let msg = e.to_string();
        match e {
            ConstructorError::NotA2Form(_)
            | ConstructorError::NotAbelianComplex { .. }
            | ConstructorError::QuaternionRelationsFail
            | ConstructorError::NotACocycle
            | ConstructorError::CocycleNotInvariant { .. }
            | ConstructorError::NotADerivation
            | ConstructorError::DerivationDoesNotCommute => violation("construction", vec![], msg),
            ConstructorError::InternalCrossCheck(_) => violation("internal", vec![], msg),
            ConstructorError::Algebra(a) => ReportError::from(a),
            ConstructorError::Contact(c) => ReportError::from(c),
            ConstructorError::ThreeContact(t) => ReportError::from(t),
            _ => ReportError::Usage(msg),
        }
    }
}

// --- realization -----------------------------------------------------------------

/// The validated structure a document carries, if any.
#[derive(Debug)]
pub enum RealStructure {
    Contact(AlmostContact),
    ThreeContact(Almost3Contact),
    Complex,
    Hypercomplex,
}

impl RealStructure {
    pub fn kind(&self) -> &'static str {
        match self {
            RealStructure::Contact(_) => "contact",
            RealStructure::ThreeContact(_) => "3-contact",
            RealStructure::Complex => "complex",
            RealStructure::Hypercomplex => "hypercomplex",
        }
    }
}

/// A document whose mathematical content has been fully validated.
#[derive(Debug)]
pub struct Realization {
    pub algebra: LieAlgebra,
    pub structure: Option<RealStructure>,
    pub metric: Option<Metric>,
}

fn jacobi_defect(t: &BracketTensor, i: usize, j: usize, k: usize) -> Vec<Rational> {
    let n = t.dim();
    let unit = |a: usize| -> Vec<Rational> {
        (0..n).map(|m| rint(i64::from(m == a))).collect()
    };
    let (ei, ej, ek) = (unit(i), unit(j), unit(k));
    let t1 = t.bracket(&t.bracket(&ei, &ej), &ek);
    let t2 = t.bracket(&t.bracket(&ej, &ek), &ei);
    let t3 = t.bracket(&t.bracket(&ek, &ei), &ej);
    (0..n).map(|m| &t1[m] + &(&t2[m] + &t3[m])).collect()
}

/// Turns a parsed document into validated objects; every failed identity
/// becomes a structured [`MathViolation`].
pub fn realize(doc: &Document) -> Result<Realization, ReportError> {
    let tensor = &doc.tensor;
    let algebra = LieAlgebra::new(tensor.clone()).map_err(|e| match e {
        AlgebraError::JacobiViolation { i, j, k } => {
            let defect: Vec<String> =
                jacobi_defect(tensor, i, j, k).iter().map(format_rational).collect();
            violation(
                "jacobi",
                vec![i + 1, j + 1, k + 1],
                format!(
                    "Jacobi identity fails on basis triple ({}, {}, {}): defect ({})",
                    i + 1,
                    j + 1,
                    k + 1,
                    defect.join(", ")
                ),
            )
        }
        other => ReportError::from(other),
    })?;
    let structure = match &doc.structure {
        None => None,
        Some(RawStructure::Contact { phi, xi, eta }) => Some(RealStructure::Contact(
            AlmostContact::new(phi.clone(), xi.clone(), eta.clone())
                .map_err(ReportError::from)?,
        )),
        Some(RawStructure::ThreeContact { parts }) => {
            let mut built = Vec::with_capacity(3);
            for (phi, xi, eta) in parts {
                built.push(
                    AlmostContact::new(phi.clone(), xi.clone(), eta.clone())
                        .map_err(ReportError::from)?,
                );
            }
            let arr: [AlmostContact; 3] = built
                .try_into()
                .expect("parser guarantees exactly three structures");
            Some(RealStructure::ThreeContact(Almost3Contact::new(arr)?))
        }
        Some(RawStructure::Complex { j }) => {
            check_complex_square(j)?;
            Some(RealStructure::Complex)
        }
        Some(RawStructure::Hypercomplex { j }) => {
            let arr: [Endomorphism; 3] = j
                .clone()
                .try_into()
                .expect("parser guarantees exactly three matrices");
            let report = hypercomplex_check(&algebra, &arr)?;
            if !report.is_hypercomplex {
                return Err(violation(
                    "hypercomplex",
                    vec![],
                    "the three endomorphisms do not satisfy J_i^2 = -I and the quaternion relations",
                ));
            }
            Some(RealStructure::Hypercomplex)
        }
    };
    let metric = match &doc.metric {
        None => None,
        Some(g) => Some(Metric::new(g.clone()).map_err(ReportError::from)?),
    };
    Ok(Realization {
        algebra,
        structure,
        metric,
    })
}

fn check_complex_square(j: &Matrix) -> Result<(), ReportError> {
    let square = j.mul(j);
    if square == Matrix::identity(j.rows()).neg() {
        return Ok(());
    }
    let (bi, bk) = (0..j.rows())
        .flat_map(|i| (0..j.rows()).map(move |k| (i, k)))
        .find(|&(i, k)| {
            let expected = if i == k { -rint(1) } else { rint(0) };
            square.get(i, k) != &expected
        })
        .expect("unequal matrices differ somewhere");
    Err(violation(
        "complex_square",
        vec![bi + 1, bk + 1],
        format!(
            "J^2 != -I at entry ({}, {}): got {}",
            bi + 1,
            bk + 1,
            format_rational(square.get(bi, bk))
        ),
    ))
}

fn require_contact(r: &Realization) -> Result<&AlmostContact, ReportError> {
    match &r.structure {
        Some(RealStructure::Contact(s)) => Ok(s),
        _ => Err(ReportError::Usage(
            "this operation needs a document with a contact structure".to_string(),
        )),
    }
}

fn require_three_contact(r: &Realization) -> Result<&Almost3Contact, ReportError> {
    match &r.structure {
        Some(RealStructure::ThreeContact(t)) => Ok(t),
        _ => Err(ReportError::Usage(
            "this operation needs a document with a 3-contact structure".to_string(),
        )),
    }
}

fn require_metric(r: &Realization) -> Result<&Metric, ReportError> {
    r.metric.as_ref().ok_or_else(|| {
        ReportError::Usage("this operation needs a document with a metric".to_string())
    })
}

// --- reports -----------------------------------------------------------------------

/// One analysis result, rendered both ways. The JSON form is canonical
/// (sorted keys, reduced rationals) so identical inputs give identical
/// bytes; the text form spells the tensors eta_i, phi_i, psi, Z.
#[derive(Debug)]
pub struct Report {
    pub json: Value,
    pub text: String,
}

impl Report {
    /// Canonical JSON bytes (pretty, sorted keys, trailing newline).
    pub fn to_json_string(&self) -> String {
        to_canonical_string(&self.json)
    }
}

pub fn validate_report(doc: &Document) -> Result<Report, ReportError> {
    let realized = realize(doc)?;
    let l = &realized.algebra;
    let mut warnings: Vec<String> = Vec::new();

    // construction has already enforced every identity; re-run the reporting
    // validators for warnings and the kernel-image cross-check
    match &realized.structure {
        Some(RealStructure::Contact(s)) => {
            let v = validate_almost_contact(l, s.phi(), s.xi(), s.eta())?;
            if let Some(first) = v.violations.first() {
                return Err(ReportError::Math(contact_violation(first)));
            }
            warnings.extend(v.warnings);
        }
        Some(RealStructure::ThreeContact(t)) => {
            let v = validate_almost_3contact(l, t.structures())?;
            if let Some(first) = v.violations.first() {
                let (i, j, k) = first.permutation;
                return Err(ReportError::Math(MathViolation {
                    identity: triple_identity_name(first.identity).to_string(),
                    indices: vec![i, j, k],
                    message: "quaternion-like triple identity fails".to_string(),
                }));
            }
        }
        _ => {}
    }

    let metric_status = match (&realized.metric, &realized.structure) {
        (None, _) => "absent",
        (Some(g), Some(RealStructure::Contact(s))) => {
            if !g.is_contact_compatible(s.phi(), s.eta()) {
                return Err(violation(
                    "metric_compatibility",
                    vec![],
                    "g(phi X, phi Y) = g(X, Y) - eta(X)eta(Y) or g(xi, .) = eta fails",
                ));
            }
            "compatible"
        }
        (Some(g), Some(RealStructure::ThreeContact(t))) => {
            for i in 0..3 {
                if !g.is_contact_compatible(t.phi(i), t.eta(i)) {
                    return Err(violation(
                        "metric_compatibility",
                        vec![i + 1],
                        format!("the metric is not compatible with structure {}", i + 1),
                    ));
                }
            }
            "compatible"
        }
        (Some(_), _) => "ok",
    };

    let structure_kind = realized
        .structure
        .as_ref()
        .map_or("absent", RealStructure::kind);
    let mut obj = Map::new();
    obj.insert("dim".to_string(), Value::from(l.dim()));
    obj.insert("metric".to_string(), Value::String(metric_status.to_string()));
    obj.insert("status".to_string(), Value::String("ok".to_string()));
    obj.insert(
        "structure".to_string(),
        Value::String(structure_kind.to_string()),
    );
    obj.insert(
        "warnings".to_string(),
        Value::Array(warnings.iter().map(|w| Value::String(w.clone())).collect()),
    );
    let mut text = format!(
        "status: ok\ndim: {}\nstructure: {structure_kind}\nmetric: {metric_status}\n",
        l.dim()
    );
    for w in &warnings {
        text.push_str(&format!("warning: {w}\n"));
    }
    Ok(Report {
        json: Value::Object(obj),
        text,
    })
}

pub fn classify_report(doc: &Document, dim3: bool, dim7: bool) -> Result<Report, ReportError> {
    let realized = realize(doc)?;
    let l = &realized.algebra;
    if dim3 {
        let s = require_contact(&realized)?;
        let report = classify_dim3(l, s)?;
        let label = report.label.to_string();
        let mut obj = Map::new();
        obj.insert("a".to_string(), rational_to_value(&report.a));
        obj.insert("alpha".to_string(), rational_to_value(&report.alpha));
        obj.insert("b".to_string(), rational_to_value(&report.b));
        obj.insert("beta".to_string(), rational_to_value(&report.beta));
        obj.insert("gamma".to_string(), rational_to_value(&report.gamma));
        obj.insert("label".to_string(), Value::String(label.clone()));
        let text = format!(
            "label: {label}\na: {}\nb: {}\nalpha: {}\nbeta: {}\ngamma: {}\n",
            format_rational(&report.a),
            format_rational(&report.b),
            format_rational(&report.alpha),
            format_rational(&report.beta),
            format_rational(&report.gamma),
        );
        return Ok(Report {
            json: Value::Object(obj),
            text,
        });
    }
    if dim7 {
        let t = require_three_contact(&realized)?;
        let label = classify_dim7(l, t)?.to_string();
        let mut obj = Map::new();
        obj.insert("label".to_string(), Value::String(label.clone()));
        return Ok(Report {
            json: Value::Object(obj),
            text: format!("label: {label}\n"),
        });
    }
    match &realized.structure {
        Some(RealStructure::Contact(s)) => {
            let abelian = is_abelian_contact(l, s)?.is_abelian;
            let normal = normality_tensor(l, s)?.is_normal;
            let mut obj = Map::new();
            obj.insert("abelian".to_string(), Value::Bool(abelian));
            obj.insert("normal".to_string(), Value::Bool(normal));
            let mut text = format!("abelian: {abelian}\nnormal: {normal}\n");
            if let Some(g) = &realized.metric {
                let report = metric_class(l, s, g)?;
                let labels: Vec<String> = report.labels.iter().map(ToString::to_string).collect();
                obj.insert(
                    "alpha_kenmotsu".to_string(),
                    report
                        .alpha_kenmotsu
                        .as_ref()
                        .map_or(Value::Null, rational_to_value),
                );
                obj.insert(
                    "alpha_sasaki".to_string(),
                    report
                        .alpha_sasaki
                        .as_ref()
                        .map_or(Value::Null, rational_to_value),
                );
                obj.insert("deta_closed".to_string(), Value::Bool(report.deta_closed));
                obj.insert("dphi_closed".to_string(), Value::Bool(report.d_phi_closed));
                obj.insert(
                    "labels".to_string(),
                    Value::Array(labels.iter().map(|s| Value::String(s.clone())).collect()),
                );
                text.push_str(&format!("labels: {}\n", labels.join(", ")));
                text.push_str(&format!(
                    "alpha_sasaki: {}\nalpha_kenmotsu: {}\n",
                    report
                        .alpha_sasaki
                        .as_ref()
                        .map_or("none".to_string(), format_rational),
                    report
                        .alpha_kenmotsu
                        .as_ref()
                        .map_or("none".to_string(), format_rational),
                ));
            }
            Ok(Report {
                json: Value::Object(obj),
                text,
            })
        }
        Some(RealStructure::ThreeContact(t)) => {
            let case = case_analysis(l, t)?;
            let inv = structure_invariants(l, t)?;
            let mut obj = Map::new();
            obj.insert("case".to_string(), Value::String(case.tag().to_string()));
            obj.insert("delta".to_string(), rational_to_value(&inv.delta));
            let text = format!(
                "case: {}\ndelta: {}\n",
                case.tag(),
                format_rational(&inv.delta)
            );
            Ok(Report {
                json: Value::Object(obj),
                text,
            })
        }
        _ => Err(ReportError::Usage(
            "classification needs a contact or 3-contact structure".to_string(),
        )),
    }
}

pub fn invariants_report(doc: &Document) -> Result<Report, ReportError> {
    let realized = realize(doc)?;
    let l = &realized.algebra;
    let t = require_three_contact(&realized)?;
    let inv = structure_invariants(l, t)?;
    let case = case_analysis(l, t)?;
    let mut obj = Map::new();
    obj.insert("Z".to_string(), vector_to_value(&inv.z));
    obj.insert("case".to_string(), Value::String(case.tag().to_string()));
    obj.insert("delta".to_string(), rational_to_value(&inv.delta));
    obj.insert("psi".to_string(), matrix_to_value(&inv.psi));
    obj.insert("psi_rank".to_string(), Value::from(inv.psi_rank));
    let mut text = format!(
        "case: {}\ndelta: {}\npsi_rank: {}\nZ: {}\npsi:\n",
        case.tag(),
        format_rational(&inv.delta),
        inv.psi_rank,
        inv.z.iter().map(format_rational).collect::<Vec<_>>().join(" "),
    );
    for i in 0..inv.psi.rows() {
        let row: Vec<String> = (0..inv.psi.cols())
            .map(|j| format_rational(inv.psi.get(i, j)))
            .collect();
        text.push_str(&format!("  {}\n", row.join(" ")));
    }
    Ok(Report {
        json: Value::Object(obj),
        text,
    })
}

pub fn canonical_report(doc: &Document) -> Result<Report, ReportError> {
    let realized = realize(doc)?;
    let l = &realized.algebra;
    let t = require_three_contact(&realized)?;
    let beta = canonical_check(l, t)?;
    let mut obj = Map::new();
    obj.insert(
        "beta".to_string(),
        beta.as_ref().map_or(Value::Null, rational_to_value),
    );
    obj.insert("canonical".to_string(), Value::Bool(beta.is_some()));
    let text = match &beta {
        Some(b) => format!("canonical: true\nbeta: {}\n", format_rational(b)),
        None => "canonical: false\n".to_string(),
    };
    Ok(Report {
        json: Value::Object(obj),
        text,
    })
}

fn nonzero_tuples_text(name: &str, f: &VectorValuedForm) -> String {
    let mut out = String::new();
    for t in increasing_tuples(f.ambient_dim(), f.degree()) {
        let v = &f.coeff(&t)[0];
        if !v.is_zero() {
            let idx: Vec<String> = t.iter().map(|i| (i + 1).to_string()).collect();
            out.push_str(&format!("{name}[{}] = {}\n", idx.join(","), format_rational(v)));
        }
    }
    if out.is_empty() {
        out.push_str(&format!("{name} = 0\n"));
    }
    out
}

fn connection_text(nabla: &Connection) -> String {
    let n = nabla.dim();
    let mut out = String::new();
    for i in 0..n {
        for j in 0..n {
            let c = nabla.basis_derivative(i, j);
            if c.iter().all(Zero::is_zero) {
                continue;
            }
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| format!("{} e_{}", format_rational(v), k + 1))
                .collect();
            out.push_str(&format!("nabla[{},{}] = {}\n", i + 1, j + 1, terms.join(" + ")));
        }
    }
    out
}

pub fn torsion_report(doc: &Document, check_parallel: bool) -> Result<Report, ReportError> {
    let realized = realize(doc)?;
    let l = &realized.algebra;
    let t = require_three_contact(&realized)?;
    let g = require_metric(&realized)?;
    let torsion = canonical_torsion(l, t, g)?;
    let lc = levi_civita(l, g)?;
    let nabla = with_skew_torsion(&lc, &torsion, g)?;
    let mut obj = Map::new();
    obj.insert("connection".to_string(), connection_to_value(&nabla));
    obj.insert("torsion".to_string(), form_to_value(&torsion));
    let mut text = nonzero_tuples_text("T", &torsion);
    text.push_str(&connection_text(&nabla));
    if check_parallel {
        let parallel = is_parallel_torsion(&nabla, g)?;
        obj.insert("parallel".to_string(), Value::Bool(parallel));
        text.push_str(&format!("parallel: {parallel}\n"));
    }
    Ok(Report {
        json: Value::Object(obj),
        text,
    })
}

fn homology_report_of(ab: &crate::homology::Abelianization) -> Report {
    let factors: Vec<String> = ab.invariant_factors.iter().map(ToString::to_string).collect();
    let text = format!(
        "invariant_factors: {}\nb1: {}\n",
        if factors.is_empty() {
            "none".to_string()
        } else {
            factors.join(" ")
        },
        ab.b1()
    );
    Report {
        json: abelianization_to_value(ab),
        text,
    }
}

/// First homology of the order-m lattice quotient on a rank-4n translation
/// lattice.
pub fn homology_gamma_report(m: usize, n: usize) -> Result<Report, ReportError> {
    Ok(homology_report_of(&gamma_abelianization(m, n)?))
}

/// First homology of the quaternion-group quotient on a rank-4n translation
/// lattice.
pub fn homology_quaternion_report(n: usize) -> Result<Report, ReportError> {
    let ab = semidirect_abelianization(&quaternion_semidirect_presentation(n)?)?;
    Ok(homology_report_of(&ab))
}

pub fn catalog_names_report() -> Report {
    let names = catalog_names();
    let mut obj = Map::new();
    obj.insert(
        "names".to_string(),
        Value::Array(names.iter().map(|n| Value::String((*n).to_string())).collect()),
    );
    let mut text = String::new();
    for n in names {
        text.push_str(n);
        text.push('\n');
    }
    Report {
        json: Value::Object(obj),
        text,
    }
}

/// Builds a catalog entry and re-parses its canonical serialization, so the
/// result went through exactly the same path as file input.
pub fn catalog_document(
    name: &str,
    params: &BTreeMap<String, String>,
) -> Result<Document, ReportError> {
    let entry = catalog(name, params)?;
    let text = to_canonical_string(&entry_to_value(&entry));
    Ok(parse_document(&text)?)
}

pub fn catalog_entry_report(
    name: &str,
    params: &BTreeMap<String, String>,
) -> Result<Report, ReportError> {
    let entry = catalog(name, params)?;
    let mut text = format!(
        "name: {}\ndim: {}\nstructure: {}\n",
        entry.name,
        entry.dim(),
        entry.structure.kind()
    );
    if !entry.params.is_empty() {
        text.push_str("params:\n");
        for (k, v) in &entry.params {
            text.push_str(&format!("  {k} = {v}\n"));
        }
    }
    if !entry.expected.is_empty() {
        text.push_str("expected:\n");
        for (k, v) in &entry.expected {
            text.push_str(&format!("  {k} = {v}\n"));
        }
    }
    Ok(Report {
        json: entry_to_value(&entry),
        text,
    })
}
