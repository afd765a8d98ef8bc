//! JSON interchange for cubic matrices, cubic supermatrices,
//! structure-constant algebras, and cochains.
//!
//! All files are JSON objects with a `kind` discriminator:
//!
//! * `"cubic"`: `{"kind": "cubic", "shape": [m, n, p], "entries": E}` with
//!   `E[i-1][j-1][k-1] = [re, im]`. A supermatrix adds
//!   `"super": {"r": r, "s": s}` with `r + s` equal to the (cubic) order.
//! * `"lie_superalgebra"`: `{"kind": "lie_superalgebra", "dim": d,
//!   "parity": [p_1, ..., p_d], "brackets": [{"x": a, "y": b, "result":
//!   [{"idx": e, "c": [re, im]}, ...]}, ...]}`. Indices are 1-based.
//!   Unlisted pairs are zero; if `(a, b)` is listed and `(b, a)` is not,
//!   the loader fills the latter by graded skew-symmetry. Whether the
//!   completed table really satisfies the algebra axioms is a matter for
//!   validation checks, never for the loader.
//! * `"cochain"`: `{"kind": "cochain", "degree": m, "values": [{"args":
//!   [t_1 < ... < t_m], "c": [re, im]}, ...]}`. The dimension comes from
//!   the accompanying algebra.
//!
//! In the exact regime both components of every `[re, im]` pair must be
//! JSON integers; the floating regime accepts any finite number. Ragged
//! nesting, unknown kinds, duplicate keys, and out-of-range indices are
//! input errors.

use crate::cochain::Cochain;
use crate::cubic::Matrix3;
use crate::error::{Error, Result};
use crate::grading::neg_one_pow;
use crate::liealg::StructureAlgebra;
use crate::report::write_canonical;
use crate::scalar::{ExactScalar, FloatScalar, Scalar};
use crate::supercubic::{SuperCubic, SuperStructure};
use serde_json::{json, Map, Value};

pub const KIND_CUBIC: &str = "cubic";
pub const KIND_ALGEBRA: &str = "lie_superalgebra";
pub const KIND_COCHAIN: &str = "cochain";

/// Scalars that can cross the JSON boundary as an `[re, im]` pair.
pub trait JsonScalar: Scalar {
    fn from_json(v: &Value) -> Result<Self>;
    fn to_json(&self) -> Result<Value>;
}

fn component_pair(v: &Value) -> Result<(&Value, &Value)> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Input(format!("expected an [re, im] pair, got {v}")))?;
    if arr.len() != 2 {
        return Err(Error::Input(format!(
            "expected an [re, im] pair with 2 components, got {}",
            arr.len()
        )));
    }
    Ok((&arr[0], &arr[1]))
}

impl JsonScalar for ExactScalar {
    fn from_json(v: &Value) -> Result<Self> {
        let (re, im) = component_pair(v)?;
        let parse = |x: &Value| {
            x.as_i64().ok_or_else(|| {
                Error::Input(format!(
                    "exact components must be JSON integers, got {x}"
                ))
            })
        };
        Ok(ExactScalar::new(parse(re)?, parse(im)?))
    }

    fn to_json(&self) -> Result<Value> {
        Ok(json!([self.re, self.im]))
    }
}

impl JsonScalar for FloatScalar {
    fn from_json(v: &Value) -> Result<Self> {
        let (re, im) = component_pair(v)?;
        let parse = |x: &Value| {
            x.as_f64()
                .filter(|f| f.is_finite())
                .ok_or_else(|| Error::Input(format!("components must be finite numbers, got {x}")))
        };
        Ok(FloatScalar::new(parse(re)?, parse(im)?))
    }

    fn to_json(&self) -> Result<Value> {
        let num = |f: f64| {
            serde_json::Number::from_f64(f)
                .ok_or_else(|| Error::Input(format!("non-finite component {f}")))
        };
        Ok(Value::Array(vec![
            Value::Number(num(self.re)?),
            Value::Number(num(self.im)?),
        ]))
    }
}

fn expect_object<'v>(v: &'v Value, what: &str) -> Result<&'v Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::Input(format!("{what} must be a JSON object")))
}

fn expect_kind(obj: &Map<String, Value>, kind: &str) -> Result<()> {
    match obj.get("kind").and_then(Value::as_str) {
        Some(k) if k == kind => Ok(()),
        Some(k) => Err(Error::Input(format!("expected kind \"{kind}\", got \"{k}\""))),
        None => Err(Error::Input(format!("missing kind field (expected \"{kind}\")"))),
    }
}

fn field<'v>(obj: &'v Map<String, Value>, name: &str) -> Result<&'v Value> {
    obj.get(name)
        .ok_or_else(|| Error::Input(format!("missing field \"{name}\"")))
}

fn expect_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|u| u as usize)
        .ok_or_else(|| Error::Input(format!("{what} must be a non-negative integer, got {v}")))
}

fn expect_array<'v>(v: &'v Value, what: &str) -> Result<&'v Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::Input(format!("{what} must be a JSON array")))
}

/// Parse a plain cubic matrix file (no `super` field allowed).
pub fn matrix3_from_json<S: JsonScalar>(v: &Value) -> Result<Matrix3<S>> {
    let obj = expect_object(v, "a cubic matrix file")?;
    expect_kind(obj, KIND_CUBIC)?;
    if obj.contains_key("super") {
        return Err(Error::Input(
            "file declares a super structure; load it as a supermatrix".into(),
        ));
    }
    matrix3_from_fields(obj)
}

fn matrix3_from_fields<S: JsonScalar>(obj: &Map<String, Value>) -> Result<Matrix3<S>> {
    let shape = expect_array(field(obj, "shape")?, "shape")?;
    if shape.len() != 3 {
        return Err(Error::Input(format!(
            "shape must have 3 components, got {}",
            shape.len()
        )));
    }
    let m = expect_usize(&shape[0], "shape[0]")?;
    let n = expect_usize(&shape[1], "shape[1]")?;
    let p = expect_usize(&shape[2], "shape[2]")?;
    let rows = expect_array(field(obj, "entries")?, "entries")?;
    if rows.len() != m {
        return Err(Error::Input(format!(
            "entries has {} first-index layers, shape says {m}",
            rows.len()
        )));
    }
    let mut data = Vec::with_capacity(m * n * p);
    for (i, row) in rows.iter().enumerate() {
        let cols = expect_array(row, "an entries layer")?;
        if cols.len() != n {
            return Err(Error::Input(format!(
                "entries[{i}] has {} second-index rows, shape says {n}",
                cols.len()
            )));
        }
        for (j, col) in cols.iter().enumerate() {
            let cells = expect_array(col, "an entries row")?;
            if cells.len() != p {
                return Err(Error::Input(format!(
                    "entries[{i}][{j}] has {} cells, shape says {p}",
                    cells.len()
                )));
            }
            for cell in cells {
                data.push(S::from_json(cell)?);
            }
        }
    }
    Matrix3::from_vec(m, n, p, data)
}

pub fn matrix3_to_json<S: JsonScalar>(a: &Matrix3<S>) -> Result<Value> {
    let (m, n, p) = a.shape();
    let mut rows = Vec::with_capacity(m);
    for i in 1..=m {
        let mut cols = Vec::with_capacity(n);
        for j in 1..=n {
            let mut cells = Vec::with_capacity(p);
            for k in 1..=p {
                cells.push(a.get(i, j, k).to_json()?);
            }
            cols.push(Value::Array(cells));
        }
        rows.push(Value::Array(cols));
    }
    Ok(json!({
        "kind": KIND_CUBIC,
        "shape": [m, n, p],
        "entries": Value::Array(rows),
    }))
}

/// Parse a cubic supermatrix file (requires the `super` field).
pub fn supercubic_from_json<S: JsonScalar>(v: &Value) -> Result<SuperCubic<S>> {
    let obj = expect_object(v, "a cubic supermatrix file")?;
    expect_kind(obj, KIND_CUBIC)?;
    let sup = expect_object(field(obj, "super")?, "the super field")?;
    let r = expect_usize(field(sup, "r")?, "super.r")?;
    let s = expect_usize(field(sup, "s")?, "super.s")?;
    let mat = matrix3_from_fields(obj)?;
    SuperCubic::attach_super(mat, SuperStructure::new(r, s)?)
}

pub fn supercubic_to_json<S: JsonScalar>(x: &SuperCubic<S>) -> Result<Value> {
    let mut v = matrix3_to_json(x.matrix())?;
    let obj = v.as_object_mut().expect("matrix json is an object");
    obj.insert(
        "super".into(),
        json!({"r": x.structure().r(), "s": x.structure().s()}),
    );
    Ok(v)
}

/// Parse a structure-constant algebra file. Unlisted bracket pairs are
/// zero; listed pairs whose mirror is absent are completed by graded
/// skew-symmetry. No identity is checked here.
pub fn algebra_from_json<S: JsonScalar>(v: &Value) -> Result<StructureAlgebra<S>> {
    let obj = expect_object(v, "an algebra file")?;
    expect_kind(obj, KIND_ALGEBRA)?;
    let dim = expect_usize(field(obj, "dim")?, "dim")?;
    let parity_arr = expect_array(field(obj, "parity")?, "parity")?;
    if parity_arr.len() != dim {
        return Err(Error::Input(format!(
            "parity has {} entries, dim says {dim}",
            parity_arr.len()
        )));
    }
    let mut parity = Vec::with_capacity(dim);
    for p in parity_arr {
        let p = expect_usize(p, "a parity entry")?;
        if p > 1 {
            return Err(Error::Input(format!("parities must be 0 or 1, got {p}")));
        }
        parity.push(p as u8);
    }
    let mut g = StructureAlgebra::new(dim, parity)?;
    let mut listed: Vec<(usize, usize)> = Vec::new();
    for item in expect_array(field(obj, "brackets")?, "brackets")? {
        let item = expect_object(item, "a brackets item")?;
        let a = expect_usize(field(item, "x")?, "brackets.x")?;
        let b = expect_usize(field(item, "y")?, "brackets.y")?;
        if listed.contains(&(a, b)) {
            return Err(Error::Input(format!("duplicate bracket pair ({a}, {b})")));
        }
        let mut seen = Vec::new();
        for term in expect_array(field(item, "result")?, "a bracket result")? {
            let term = expect_object(term, "a result term")?;
            let e = expect_usize(field(term, "idx")?, "result.idx")?;
            if seen.contains(&e) {
                return Err(Error::Input(format!(
                    "duplicate result index {e} in bracket ({a}, {b})"
                )));
            }
            let c = S::from_json(field(term, "c")?)?;
            g.set_structure_constant(a, b, e, c)?;
            seen.push(e);
        }
        listed.push((a, b));
    }
    for &(a, b) in &listed {
        if a == b || listed.contains(&(b, a)) {
            continue;
        }
        let sgn = neg_one_pow(g.parity_of_basis(a) * g.parity_of_basis(b));
        for e in 1..=dim {
            let c = g.structure_constant(a, b, e).clone();
            if c.is_zero() {
                continue;
            }
            let c = if sgn < 0 { c } else { -c };
            g.set_structure_constant(b, a, e, c)?;
        }
    }
    Ok(g)
}

pub fn algebra_to_json<S: JsonScalar>(g: &StructureAlgebra<S>) -> Result<Value> {
    let d = g.dim();
    let mut brackets = Vec::new();
    for a in 1..=d {
        for b in 1..=d {
            let mut result = Vec::new();
            for e in 1..=d {
                let c = g.structure_constant(a, b, e);
                if !c.is_zero() {
                    result.push(json!({"idx": e, "c": c.to_json()?}));
                }
            }
            if !result.is_empty() {
                brackets.push(json!({"x": a, "y": b, "result": Value::Array(result)}));
            }
        }
    }
    Ok(json!({
        "kind": KIND_ALGEBRA,
        "dim": d,
        "parity": g.parities(),
        "brackets": Value::Array(brackets),
    }))
}

/// Parse a cochain file; the dimension comes from the algebra it pairs
/// with.
pub fn cochain_from_json<S: JsonScalar>(v: &Value, dim: usize) -> Result<Cochain<S>> {
    let obj = expect_object(v, "a cochain file")?;
    expect_kind(obj, KIND_COCHAIN)?;
    let degree = expect_usize(field(obj, "degree")?, "degree")?;
    let mut entries = Vec::new();
    for item in expect_array(field(obj, "values")?, "values")? {
        let item = expect_object(item, "a values item")?;
        let args = expect_array(field(item, "args")?, "values.args")?
            .iter()
            .map(|t| expect_usize(t, "a values.args index"))
            .collect::<Result<Vec<_>>>()?;
        let c = S::from_json(field(item, "c")?)?;
        entries.push((args, c));
    }
    Cochain::new(dim, degree, entries)
}

pub fn cochain_to_json<S: JsonScalar>(w: &Cochain<S>) -> Result<Value> {
    let mut values = Vec::new();
    for (key, c) in w.entries() {
        values.push(json!({"args": key, "c": c.to_json()?}));
    }
    Ok(json!({
        "kind": KIND_COCHAIN,
        "degree": w.degree(),
        "values": Value::Array(values),
    }))
}

/// Canonical text for any JSON value: sorted keys, exponent-form floats,
/// no trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut out = String::new();
    write_canonical(v, &mut out);
    out
}

/// Read and parse a JSON file; parse failures are input errors that name
/// the file.
pub fn read_json_file(path: &std::path::Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Input(format!("{} is not valid JSON: {e}", path.display())))
}
