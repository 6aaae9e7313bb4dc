//! JSON file format shared by every CLI subcommand.
//!
//! ```json
//! {
//!   "vertices": ["1", "2"],
//!   "arrows": [["1", "2"], ["1", "2"]],
//!   "dim": {"1": 1, "2": 2},
//!   "framing": {"1": 0, "2": 1},
//!   "lambda": {"1": "1/2", "2": "-1/4"},
//!   "theta": {"2": "1"}
//! }
//! ```
//!
//! `framing`, `lambda`, and `theta` are optional and default to zero;
//! rationals are `p/q` strings. Integers are accepted either as JSON
//! numbers or as decimal strings; all output serializes integers and
//! rationals as strings so consumers never truncate at 64 bits.

use std::collections::BTreeMap;
use std::path::Path;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::quiver::{DimVector, FramingVector, ParamPair, Quiver};
use crate::rat::{format_rational, parse_rational};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    vertices: Vec<String>,
    arrows: Vec<(String, String)>,
    #[serde(default)]
    dim: BTreeMap<String, Value>,
    #[serde(default)]
    framing: Option<BTreeMap<String, Value>>,
    #[serde(default)]
    lambda: Option<BTreeMap<String, Value>>,
    #[serde(default)]
    theta: Option<BTreeMap<String, Value>>,
}

/// Parsed and validated input data.
#[derive(Debug, Clone)]
pub struct QuiverInput {
    pub quiver: Quiver,
    pub dims: DimVector,
    /// Present only when the file carries a `framing` field.
    pub framing: Option<FramingVector>,
    pub params: ParamPair,
}

impl QuiverInput {
    /// Enforce the unframed-context constraints `λ·v = 0` and `θ·v = 0`.
    pub fn require_annihilated(&self) -> Result<()> {
        self.params.require_annihilated(&self.dims)
    }

    /// The framing vector, which must be present and nonzero.
    pub fn require_framing(&self) -> Result<&FramingVector> {
        match &self.framing {
            Some(d) if !d.is_zero() => Ok(d),
            Some(_) => Err(Error::ZeroFraming),
            None => Err(Error::Invalid("input has no framing vector".into())),
        }
    }
}

fn integer_value(v: &Value, context: &str) -> Result<i64> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .ok_or_else(|| Error::Invalid(format!("{context}: `{n}` is not a 64-bit integer"))),
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("{context}: `{s}` is not an integer"))),
        other => Err(Error::Invalid(format!("{context}: expected an integer, got {other}"))),
    }
}

fn rational_value(v: &Value, context: &str) -> Result<BigRational> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::Invalid(format!("{context}: `{n}` is not an integer")))?;
            Ok(BigRational::from_integer(i.into()))
        }
        Value::String(s) => parse_rational(s),
        other => Err(Error::Invalid(format!("{context}: expected a rational, got {other}"))),
    }
}

fn per_vertex_i64(
    quiver: &Quiver,
    map: &BTreeMap<String, Value>,
    field: &str,
) -> Result<Vec<i64>> {
    let mut out = vec![0i64; quiver.len()];
    for (label, value) in map {
        let i = quiver
            .vertex(label)
            .map_err(|_| Error::Invalid(format!("{field}: unknown vertex `{label}`")))?;
        out[i] = integer_value(value, &format!("{field}[{label}]"))?;
    }
    Ok(out)
}

fn per_vertex_rational(
    quiver: &Quiver,
    map: &BTreeMap<String, Value>,
    field: &str,
) -> Result<Vec<BigRational>> {
    let mut out = vec![BigRational::zero(); quiver.len()];
    for (label, value) in map {
        let i = quiver
            .vertex(label)
            .map_err(|_| Error::Invalid(format!("{field}: unknown vertex `{label}`")))?;
        out[i] = rational_value(value, &format!("{field}[{label}]"))?;
    }
    Ok(out)
}

/// Parse and validate an input document.
pub fn parse_str(text: &str) -> Result<QuiverInput> {
    let raw: RawInput =
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("bad JSON: {e}")))?;
    let quiver = Quiver::build(&raw.vertices, &raw.arrows)?;
    let dims = DimVector::new(per_vertex_i64(&quiver, &raw.dim, "dim")?)?;
    let framing = match &raw.framing {
        Some(map) => Some(FramingVector::new(per_vertex_i64(&quiver, map, "framing")?)?),
        None => None,
    };
    let lambda = match &raw.lambda {
        Some(map) => per_vertex_rational(&quiver, map, "lambda")?,
        None => vec![BigRational::zero(); quiver.len()],
    };
    let theta = match &raw.theta {
        Some(map) => per_vertex_rational(&quiver, map, "theta")?,
        None => vec![BigRational::zero(); quiver.len()],
    };
    // parameters live on the support of the dimension vector
    for (name, coeffs) in [("lambda", &lambda), ("theta", &theta)] {
        for i in 0..quiver.len() {
            if dims.get(i) == 0 && !coeffs[i].is_zero() {
                return Err(Error::Invalid(format!(
                    "{name}[{}] must be 0 because dim is 0 there",
                    quiver.label(i)
                )));
            }
        }
    }
    let params = ParamPair::new(lambda, theta)?;
    Ok(QuiverInput { quiver, dims, framing, params })
}

pub fn parse_file(path: &Path) -> Result<QuiverInput> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    parse_str(&text)
}

/// Serialize `(Q, v, λ, θ)` back into the input format (dims as decimal
/// strings, rationals as `p/q`). Used by the `frame` subcommand so its
/// output is itself a valid input file.
pub fn to_input_document(q: &Quiver, v: &DimVector, params: &ParamPair) -> Value {
    let arrows: Vec<Value> = q
        .arrow_pairs()
        .into_iter()
        .map(|(t, h)| json!([q.label(t), q.label(h)]))
        .collect();
    let mut dim = serde_json::Map::new();
    let mut lambda = serde_json::Map::new();
    let mut theta = serde_json::Map::new();
    for i in 0..q.len() {
        dim.insert(q.label(i).to_owned(), json!(v.get(i).to_string()));
        lambda.insert(q.label(i).to_owned(), json!(format_rational(&params.lambda[i])));
        theta.insert(q.label(i).to_owned(), json!(format_rational(&params.theta[i])));
    }
    json!({
        "vertices": q.labels(),
        "arrows": arrows,
        "dim": dim,
        "lambda": lambda,
        "theta": theta,
    })
}
