//! Canonical JSON encoding of the core values. Output is deterministic —
//! object keys are sorted, rationals are rendered in lowest terms with
//! positive denominator ("p" or "p/q") — so equal values serialize to
//! identical bytes. Parsing is strict and reports the JSON path of the first
//! offending element. Bracket tables parse into raw tensors so that the
//! Jacobi test stays a semantic check of the caller, not a parse error.

use std::collections::BTreeMap;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::algebra::BracketTensor;
use crate::connection::Connection;
use crate::constructors::{CatalogEntry, StructureData};
use crate::contact::AlmostContact;
use crate::forms::VectorValuedForm;
use crate::homology::Abelianization;
use crate::linalg::Matrix;
use crate::metric::Metric;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::three_contact::Almost3Contact;
use num_traits::ToPrimitive;

/// A malformed document, located by the JSON path of the offending element.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("{path}: {message}")]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

fn bad(path: &str, message: impl Into<String>) -> SchemaError {
    SchemaError {
        path: path.to_string(),
        message: message.into(),
    }
}

// --- serialization -----------------------------------------------------------------

pub fn rational_to_value(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn vector_to_value(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_value).collect())
}

pub fn matrix_to_value(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| rational_to_value(m.get(i, j))).collect()))
            .collect(),
    )
}

/// `{"dim": n, "brackets": [{"coeffs": [...], "i": ..., "j": ...}]}` with
/// 1-based indices i < j; vanishing brackets are omitted.
pub fn algebra_to_value(tensor: &BracketTensor) -> Value {
    let n = tensor.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let c = tensor.basis_bracket(i, j);
            if c.iter().all(num_traits::Zero::is_zero) {
                continue;
            }
            let mut entry = Map::new();
            entry.insert("coeffs".to_string(), vector_to_value(c));
            entry.insert("i".to_string(), Value::from(i + 1));
            entry.insert("j".to_string(), Value::from(j + 1));
            brackets.push(Value::Object(entry));
        }
    }
    let mut obj = Map::new();
    obj.insert("brackets".to_string(), Value::Array(brackets));
    obj.insert("dim".to_string(), Value::from(n));
    Value::Object(obj)
}

pub fn contact_to_value(s: &AlmostContact) -> Value {
    let mut obj = Map::new();
    obj.insert("eta".to_string(), vector_to_value(s.eta()));
    obj.insert("phi".to_string(), matrix_to_value(s.phi()));
    obj.insert("xi".to_string(), vector_to_value(s.xi()));
    Value::Object(obj)
}

pub fn three_contact_to_value(t: &Almost3Contact) -> Value {
    let mut obj = Map::new();
    obj.insert(
        "structures".to_string(),
        Value::Array(t.structures().iter().map(contact_to_value).collect()),
    );
    Value::Object(obj)
}

pub fn metric_to_value(g: &Metric) -> Value {
    let mut obj = Map::new();
    obj.insert("g".to_string(), matrix_to_value(g.matrix()));
    Value::Object(obj)
}

/// Dense encoding: nested arrays of depth `degree` over all index tuples,
/// with a rational string at the bottom (or an array of them when the form
/// is vector-valued).
pub fn form_to_value(f: &VectorValuedForm) -> Value {
    fn level(f: &VectorValuedForm, prefix: &mut Vec<usize>) -> Value {
        if prefix.len() == f.degree() {
            let v = f.value_on_basis(prefix);
            if f.target_dim() == 1 {
                return rational_to_value(&v[0]);
            }
            return vector_to_value(&v);
        }
        Value::Array(
            (0..f.ambient_dim())
                .map(|i| {
                    prefix.push(i);
                    let v = level(f, prefix);
                    prefix.pop();
                    v
                })
                .collect(),
        )
    }
    level(f, &mut Vec::new())
}

/// `{"coeff": c}` with c[i][j][k] the k-th coordinate of ∇_{e_i} e_j.
pub fn connection_to_value(nabla: &Connection) -> Value {
    let n = nabla.dim();
    let coeff = Value::Array(
        (0..n)
            .map(|i| {
                Value::Array((0..n).map(|j| vector_to_value(nabla.basis_derivative(i, j))).collect())
            })
            .collect(),
    );
    let mut obj = Map::new();
    obj.insert("coeff".to_string(), coeff);
    Value::Object(obj)
}

/// `{"b1": k, "invariant_factors": [d₁, …]}`; factors that exceed the JSON
/// integer range fall back to decimal strings.
pub fn abelianization_to_value(ab: &Abelianization) -> Value {
    let factors = ab
        .invariant_factors
        .iter()
        .map(|d| d.to_u64().map(Value::from).unwrap_or_else(|| Value::from(d.to_string())))
        .collect();
    let mut obj = Map::new();
    obj.insert("b1".to_string(), Value::from(ab.b1()));
    obj.insert("invariant_factors".to_string(), Value::Array(factors));
    Value::Object(obj)
}

fn string_map_to_value(map: &BTreeMap<String, String>) -> Value {
    Value::Object(
        map.iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect(),
    )
}

pub fn structure_to_value(s: &StructureData) -> Value {
    let mut obj = Map::new();
    match s {
        StructureData::None => return Value::Null,
        StructureData::Contact(c) => {
            obj.insert("contact".to_string(), contact_to_value(c));
        }
        StructureData::ThreeContact(t) => {
            obj.insert("three_contact".to_string(), three_contact_to_value(t));
        }
        StructureData::Complex(j) => {
            let mut inner = Map::new();
            inner.insert("j".to_string(), matrix_to_value(j));
            obj.insert("complex".to_string(), Value::Object(inner));
        }
        StructureData::Hypercomplex(js) => {
            let mut inner = Map::new();
            inner.insert(
                "j".to_string(),
                Value::Array(js.iter().map(matrix_to_value).collect()),
            );
            obj.insert("hypercomplex".to_string(), Value::Object(inner));
        }
    }
    Value::Object(obj)
}

/// The full document for a catalog entry: algebra, structure tensors, metric,
/// and the name/params/expected records.
pub fn entry_to_value(entry: &CatalogEntry) -> Value {
    let mut obj = Map::new();
    obj.insert("algebra".to_string(), algebra_to_value(entry.algebra.tensor()));
    obj.insert("expected".to_string(), string_map_to_value(&entry.expected));
    obj.insert("metric".to_string(), metric_to_value(&entry.metric));
    obj.insert("name".to_string(), Value::String(entry.name.clone()));
    obj.insert("params".to_string(), string_map_to_value(&entry.params));
    obj.insert("structure".to_string(), structure_to_value(&entry.structure));
    Value::Object(obj)
}

/// Canonical text rendering: pretty-printed with sorted keys and a trailing
/// newline. Equal values produce identical bytes.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

// --- parsing -----------------------------------------------------------------------

/// The structure tensors of a parsed document, before any mathematical
/// validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawStructure {
    Contact {
        phi: Matrix,
        xi: Vec<Rational>,
        eta: Vec<Rational>,
    },
    ThreeContact {
        parts: Vec<(Matrix, Vec<Rational>, Vec<Rational>)>,
    },
    Complex {
        j: Matrix,
    },
    Hypercomplex {
        j: Vec<Matrix>,
    },
}

/// A parsed input document: structurally sound (shapes and cross-field sizes
/// verified), mathematically unvalidated (Jacobi, structure identities, and
/// positive definiteness are the caller's checks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub name: Option<String>,
    pub params: BTreeMap<String, String>,
    pub expected: BTreeMap<String, String>,
    pub tensor: BracketTensor,
    pub structure: Option<RawStructure>,
    pub metric: Option<Matrix>,
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, SchemaError> {
    v.as_object().ok_or_else(|| bad(path, "expected an object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, SchemaError> {
    v.as_array().ok_or_else(|| bad(path, "expected an array"))
}

fn as_string(v: &Value, path: &str) -> Result<String, SchemaError> {
    v.as_str()
        .map(str::to_string)
        .ok_or_else(|| bad(path, "expected a string"))
}

fn as_usize(v: &Value, path: &str) -> Result<usize, SchemaError> {
    v.as_u64()
        .and_then(|u| usize::try_from(u).ok())
        .ok_or_else(|| bad(path, "expected a non-negative integer"))
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, SchemaError> {
    obj.get(key)
        .ok_or_else(|| bad(&format!("{path}.{key}"), "missing required key"))
}

fn reject_unknown_keys(
    obj: &Map<String, Value>,
    allowed: &[&str],
    path: &str,
) -> Result<(), SchemaError> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(bad(&format!("{path}.{key}"), "unknown key"));
        }
    }
    Ok(())
}

fn parse_rational_value(v: &Value, path: &str) -> Result<Rational, SchemaError> {
    let s = v
        .as_str()
        .ok_or_else(|| bad(path, "expected a rational string \"p\" or \"p/q\""))?;
    parse_rational(s).map_err(|e| bad(path, e.to_string()))
}

pub fn parse_vector(v: &Value, path: &str) -> Result<Vec<Rational>, SchemaError> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| parse_rational_value(x, &format!("{path}[{i}]")))
        .collect()
}

pub fn parse_matrix(v: &Value, path: &str) -> Result<Matrix, SchemaError> {
    let rows = as_array(v, path)?;
    let mut data = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        data.push(parse_vector(row, &format!("{path}[{i}]"))?);
    }
    let cols = data.first().map_or(0, Vec::len);
    if data.is_empty() || cols == 0 {
        return Err(bad(path, "matrix must be non-empty"));
    }
    if let Some(i) = data.iter().position(|r| r.len() != cols) {
        return Err(bad(
            &format!("{path}[{i}]"),
            format!("row has length {}, expected {cols}", data[i].len()),
        ));
    }
    Ok(Matrix::from_rows(data))
}

fn parse_square_matrix(v: &Value, path: &str, dim: usize) -> Result<Matrix, SchemaError> {
    let m = parse_matrix(v, path)?;
    if m.rows() != dim || m.cols() != dim {
        return Err(bad(
            path,
            format!("expected a {dim}×{dim} matrix, got {}×{}", m.rows(), m.cols()),
        ));
    }
    Ok(m)
}

fn parse_sized_vector(v: &Value, path: &str, dim: usize) -> Result<Vec<Rational>, SchemaError> {
    let vec = parse_vector(v, path)?;
    if vec.len() != dim {
        return Err(bad(path, format!("expected length {dim}, got {}", vec.len())));
    }
    Ok(vec)
}

/// Parses `{"dim": n, "brackets": [...]}` into a raw bracket tensor. Indices
/// are 1-based and bounds-checked here; antisymmetry bookkeeping and the
/// Jacobi identity are the tensor's and the caller's business.
pub fn parse_algebra(v: &Value, path: &str) -> Result<BracketTensor, SchemaError> {
    let obj = as_object(v, path)?;
    reject_unknown_keys(obj, &["brackets", "dim"], path)?;
    let dim = as_usize(get(obj, "dim", path)?, &format!("{path}.dim"))?;
    if dim == 0 {
        return Err(bad(&format!("{path}.dim"), "dimension must be positive"));
    }
    let brackets = as_array(get(obj, "brackets", path)?, &format!("{path}.brackets"))?;
    let mut pairs = Vec::with_capacity(brackets.len());
    for (k, entry) in brackets.iter().enumerate() {
        let epath = format!("{path}.brackets[{k}]");
        let eobj = as_object(entry, &epath)?;
        reject_unknown_keys(eobj, &["coeffs", "i", "j"], &epath)?;
        let index = |key: &str| -> Result<usize, SchemaError> {
            let kpath = format!("{epath}.{key}");
            let one_based = as_usize(get(eobj, key, &epath)?, &kpath)?;
            if one_based == 0 || one_based > dim {
                return Err(bad(&kpath, format!("index must lie in 1..={dim}")));
            }
            Ok(one_based - 1)
        };
        let i = index("i")?;
        let j = index("j")?;
        let coeffs = parse_sized_vector(
            get(eobj, "coeffs", &epath)?,
            &format!("{epath}.coeffs"),
            dim,
        )?;
        pairs.push((i, j, coeffs));
    }
    BracketTensor::from_pairs(dim, &pairs).map_err(|e| bad(&format!("{path}.brackets"), e.to_string()))
}

fn parse_contact_parts(
    v: &Value,
    path: &str,
    dim: usize,
) -> Result<(Matrix, Vec<Rational>, Vec<Rational>), SchemaError> {
    let obj = as_object(v, path)?;
    reject_unknown_keys(obj, &["eta", "phi", "xi"], path)?;
    let phi = parse_square_matrix(get(obj, "phi", path)?, &format!("{path}.phi"), dim)?;
    let xi = parse_sized_vector(get(obj, "xi", path)?, &format!("{path}.xi"), dim)?;
    let eta = parse_sized_vector(get(obj, "eta", path)?, &format!("{path}.eta"), dim)?;
    Ok((phi, xi, eta))
}

fn parse_structure(v: &Value, path: &str, dim: usize) -> Result<RawStructure, SchemaError> {
    let obj = as_object(v, path)?;
    reject_unknown_keys(obj, &["complex", "contact", "hypercomplex", "three_contact"], path)?;
    if obj.len() != 1 {
        return Err(bad(
            path,
            "expected exactly one of: contact, three_contact, complex, hypercomplex",
        ));
    }
    if let Some(c) = obj.get("contact") {
        let (phi, xi, eta) = parse_contact_parts(c, &format!("{path}.contact"), dim)?;
        return Ok(RawStructure::Contact { phi, xi, eta });
    }
    if let Some(t) = obj.get("three_contact") {
        let tpath = format!("{path}.three_contact");
        let tobj = as_object(t, &tpath)?;
        reject_unknown_keys(tobj, &["structures"], &tpath)?;
        let spath = format!("{tpath}.structures");
        let arr = as_array(get(tobj, "structures", &tpath)?, &spath)?;
        if arr.len() != 3 {
            return Err(bad(&spath, format!("expected 3 structures, got {}", arr.len())));
        }
        let mut parts = Vec::with_capacity(3);
        for (i, s) in arr.iter().enumerate() {
            parts.push(parse_contact_parts(s, &format!("{spath}[{i}]"), dim)?);
        }
        return Ok(RawStructure::ThreeContact { parts });
    }
    if let Some(c) = obj.get("complex") {
        let cpath = format!("{path}.complex");
        let cobj = as_object(c, &cpath)?;
        reject_unknown_keys(cobj, &["j"], &cpath)?;
        let j = parse_square_matrix(get(cobj, "j", &cpath)?, &format!("{cpath}.j"), dim)?;
        return Ok(RawStructure::Complex { j });
    }
    let h = obj.get("hypercomplex").expect("covered by the arms above");
    let hpath = format!("{path}.hypercomplex");
    let hobj = as_object(h, &hpath)?;
    reject_unknown_keys(hobj, &["j"], &hpath)?;
    let jpath = format!("{hpath}.j");
    let arr = as_array(get(hobj, "j", &hpath)?, &jpath)?;
    if arr.len() != 3 {
        return Err(bad(&jpath, format!("expected 3 matrices, got {}", arr.len())));
    }
    let mut js = Vec::with_capacity(3);
    for (i, m) in arr.iter().enumerate() {
        js.push(parse_square_matrix(m, &format!("{jpath}[{i}]"), dim)?);
    }
    Ok(RawStructure::Hypercomplex { j: js })
}

fn parse_string_map(v: &Value, path: &str) -> Result<BTreeMap<String, String>, SchemaError> {
    let obj = as_object(v, path)?;
    let mut out = BTreeMap::new();
    for (k, val) in obj {
        out.insert(k.clone(), as_string(val, &format!("{path}.{k}"))?);
    }
    Ok(out)
}

/// Parses a full input document. The root path is `$`.
pub fn parse_document(text: &str) -> Result<Document, SchemaError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| bad("$", format!("invalid JSON: {e}")))?;
    let obj = as_object(&value, "$")?;
    reject_unknown_keys(
        obj,
        &["algebra", "expected", "metric", "name", "params", "structure"],
        "$",
    )?;
    let tensor = parse_algebra(get(obj, "algebra", "$")?, "$.algebra")?;
    let dim = tensor.dim();
    let structure = match obj.get("structure") {
        None | Some(Value::Null) => None,
        Some(s) => Some(parse_structure(s, "$.structure", dim)?),
    };
    let metric = match obj.get("metric") {
        None | Some(Value::Null) => None,
        Some(m) => {
            let mpath = "$.metric";
            let mobj = as_object(m, mpath)?;
            reject_unknown_keys(mobj, &["g"], mpath)?;
            Some(parse_square_matrix(get(mobj, "g", mpath)?, "$.metric.g", dim)?)
        }
    };
    let name = match obj.get("name") {
        None | Some(Value::Null) => None,
        Some(n) => Some(as_string(n, "$.name")?),
    };
    let params = match obj.get("params") {
        None => BTreeMap::new(),
        Some(p) => parse_string_map(p, "$.params")?,
    };
    let expected = match obj.get("expected") {
        None => BTreeMap::new(),
        Some(e) => parse_string_map(e, "$.expected")?,
    };
    Ok(Document {
        name,
        params,
        expected,
        tensor,
        structure,
        metric,
    })
}

/// Re-serializes a parsed document; with [`parse_document`] this is the
/// round-trip pair the catalog export is tested against.
pub fn document_to_value(doc: &Document) -> Value {
    let mut obj = Map::new();
    obj.insert("algebra".to_string(), algebra_to_value(&doc.tensor));
    obj.insert("expected".to_string(), string_map_to_value(&doc.expected));
    if let Some(g) = &doc.metric {
        let mut mobj = Map::new();
        mobj.insert("g".to_string(), matrix_to_value(g));
        obj.insert("metric".to_string(), Value::Object(mobj));
    }
    if let Some(name) = &doc.name {
        obj.insert("name".to_string(), Value::String(name.clone()));
    }
    obj.insert("params".to_string(), string_map_to_value(&doc.params));
    let structure = match &doc.structure {
        None => Value::Null,
        Some(RawStructure::Contact { phi, xi, eta }) => {
            let mut inner = Map::new();
            inner.insert("eta".to_string(), vector_to_value(eta));
            inner.insert("phi".to_string(), matrix_to_value(phi));
            inner.insert("xi".to_string(), vector_to_value(xi));
            let mut outer = Map::new();
            outer.insert("contact".to_string(), Value::Object(inner));
            Value::Object(outer)
        }
        Some(RawStructure::ThreeContact { parts }) => {
            let structures = parts
                .iter()
                .map(|(phi, xi, eta)| {
                    let mut inner = Map::new();
                    inner.insert("eta".to_string(), vector_to_value(eta));
                    inner.insert("phi".to_string(), matrix_to_value(phi));
                    inner.insert("xi".to_string(), vector_to_value(xi));
                    Value::Object(inner)
                })
                .collect();
            let mut tobj = Map::new();
            tobj.insert("structures".to_string(), Value::Array(structures));
            let mut outer = Map::new();
            outer.insert("three_contact".to_string(), Value::Object(tobj));
            Value::Object(outer)
        }
        Some(RawStructure::Complex { j }) => {
            let mut inner = Map::new();
            inner.insert("j".to_string(), matrix_to_value(j));
            let mut outer = Map::new();
            outer.insert("complex".to_string(), Value::Object(inner));
            Value::Object(outer)
        }
        Some(RawStructure::Hypercomplex { j }) => {
            let mut inner = Map::new();
            inner.insert("j".to_string(), Value::Array(j.iter().map(matrix_to_value).collect()));
            let mut outer = Map::new();
            outer.insert("hypercomplex".to_string(), Value::Object(inner));
            Value::Object(outer)
        }
    };
    obj.insert("structure".to_string(), structure);
    Value::Object(obj)
}
