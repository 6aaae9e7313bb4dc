//! Étale-local slice quivers.
//!
//! A representation type `τ = (k_1, v_1; …; k_r, v_r)` with `Σ k_t v_t = v`
//! determines a slice quiver `Q̂` on `r` vertices: `p(v_t)` loops at vertex
//! `t` and `−v_t·C_Q·v_u` arrows between distinct `t, u`. A negative count
//! means the type is inadmissible (no such collection of stable
//! representations exists) and is reported as a typed error, not a panic.
//!
//! The construction satisfies `p̂(Σ k_t ê_t) = p(Σ k_t v_t)` identically;
//! [`p_identity_sides`] evaluates both sides so callers can assert it.

use std::fmt;

use crate::error::{Error, Result};
use crate::flatness::is_orthogonal_pair;
use crate::quiver::{DimVector, ParamPair, Quiver};
use crate::rat::format_rational;

/// Ordered list of `(multiplicity, part)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepType {
    pub parts: Vec<(i64, DimVector)>,
}

impl RepType {
    pub fn new(parts: Vec<(i64, DimVector)>) -> RepType {
        RepType { parts }
    }

    /// Parse the CLI syntax `"1:(1,1);2:(0,1)"`.
    pub fn parse(s: &str) -> Result<RepType> {
        let bad = |msg: &str| Error::Invalid(format!("malformed type `{s}`: {msg}"));
        let mut parts = Vec::new();
        for chunk in s.split(';') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let (k, vec) = chunk.split_once(':').ok_or_else(|| bad("expected k:(…)"))?;
            let k: i64 = k.trim().parse().map_err(|_| bad("bad multiplicity"))?;
            let vec = vec.trim();
            let inner = vec
                .strip_prefix('(')
                .and_then(|v| v.strip_suffix(')'))
                .ok_or_else(|| bad("expected parenthesized vector"))?;
            let mut entries = Vec::new();
            for e in inner.split(',') {
                entries.push(e.trim().parse::<i64>().map_err(|_| bad("bad entry"))?);
            }
            parts.push((k, DimVector::new(entries)?));
        }
        if parts.is_empty() {
            return Err(bad("no parts"));
        }
        Ok(RepType { parts })
    }

    /// `Σ k_t v_t`.
    pub fn weighted_sum(&self, n: usize) -> DimVector {
        let mut total = vec![0i64; n];
        for (k, part) in &self.parts {
            for (t, e) in total.iter_mut().zip(part.entries()) {
                *t += k * e;
            }
        }
        DimVector::new(total).expect("multiplicities and parts are nonnegative")
    }
}

/// One violated representation-type constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SumMismatch { expected: DimVector, got: DimVector },
    NonpositiveMultiplicity { index: usize, value: i64 },
    ZeroPart { index: usize },
    PartLengthMismatch { index: usize, expected: usize, got: usize },
    LambdaNotOrthogonal { index: usize, pairing: String },
    ThetaNotOrthogonal { index: usize, pairing: String },
    DuplicatePart { first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SumMismatch { expected, got } => {
                write!(f, "parts sum to {got}, expected {expected}")
            }
            Violation::NonpositiveMultiplicity { index, value } => {
                write!(f, "part {index} has nonpositive multiplicity {value}")
            }
            Violation::ZeroPart { index } => write!(f, "part {index} is the zero vector"),
            Violation::PartLengthMismatch { index, expected, got } => {
                write!(f, "part {index} has {got} entries, expected {expected}")
            }
            Violation::LambdaNotOrthogonal { index, pairing } => {
                write!(f, "lambda·v_{index} = {pairing} ≠ 0")
            }
            Violation::ThetaNotOrthogonal { index, pairing } => {
                write!(f, "theta·v_{index} = {pairing} ≠ 0")
            }
            Violation::DuplicatePart { first, second } => {
                write!(f, "parts {first} and {second} coincide (strict type requires distinct parts)")
            }
        }
    }
}

/// Check a representation type against `(Q, v, λ, θ)`: the weighted sum,
/// positivity, and orthogonality of each part to both parameters. With
/// `strict`, parts must also be pairwise distinct (mirroring mutually
/// non-isomorphic stable summands). Diagnostics are returned, not thrown.
pub fn validate_rep_type(
    q: &Quiver,
    v: &DimVector,
    params: &ParamPair,
    tau: &RepType,
    strict: bool,
) -> Result<Vec<Violation>> {
    q.check_len(v.len())?;
    q.check_len(params.len())?;
    let mut violations = Vec::new();
    for (index, (k, part)) in tau.parts.iter().enumerate() {
        if part.len() != q.len() {
            violations.push(Violation::PartLengthMismatch {
                index,
                expected: q.len(),
                got: part.len(),
            });
            continue;
        }
        if *k <= 0 {
            violations.push(Violation::NonpositiveMultiplicity { index, value: *k });
        }
        if part.is_zero() {
            violations.push(Violation::ZeroPart { index });
        }
        let (_, l, t) = is_orthogonal_pair(params, part.entries());
        if !num_traits::Zero::is_zero(&l) {
            violations.push(Violation::LambdaNotOrthogonal { index, pairing: format_rational(&l) });
        }
        if !num_traits::Zero::is_zero(&t) {
            violations.push(Violation::ThetaNotOrthogonal { index, pairing: format_rational(&t) });
        }
    }
    if tau.parts.iter().all(|(_, p)| p.len() == q.len()) {
        let got = tau.weighted_sum(q.len());
        if got != *v {
            violations.push(Violation::SumMismatch { expected: v.clone(), got });
        }
    }
    if strict {
        for i in 0..tau.parts.len() {
            for j in (i + 1)..tau.parts.len() {
                if tau.parts[i].1 == tau.parts[j].1 {
                    violations.push(Violation::DuplicatePart { first: i, second: j });
                }
            }
        }
    }
    Ok(violations)
}

/// Slice quiver, its dimension vector `(k_1, …, k_r)`, and the part each
/// slice vertex came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceResult {
    pub slice_quiver: Quiver,
    pub slice_dim: DimVector,
    pub provenance: Vec<DimVector>,
}

/// Build the slice quiver of a representation type: `p(v_t)` loops at `t`
/// and `−v_t·C_Q·v_u` arrows between `t ≠ u` (oriented `t < u`; only the
/// symmetrization is ever used downstream).
pub fn slice_quiver(q: &Quiver, tau: &RepType) -> Result<SliceResult> {
    let r = tau.parts.len();
    if r == 0 {
        return Err(Error::Invalid("representation type has no parts".into()));
    }
    for (k, part) in &tau.parts {
        q.check_len(part.len())?;
        if *k <= 0 {
            return Err(Error::InadmissibleType(format!("nonpositive multiplicity {k}")));
        }
        if part.is_zero() {
            return Err(Error::InadmissibleType("zero part".into()));
        }
    }
    let cartan = q.cartan_matrix();
    let mut adjacency = vec![vec![0i64; r]; r];
    for t in 0..r {
        let loops = q.p(&tau.parts[t].1)?;
        if loops < 0 {
            return Err(Error::InadmissibleType(format!(
                "p(v_{t}) = {loops} < 0: no stable representation of that dimension"
            )));
        }
        adjacency[t][t] = loops;
        for u in (t + 1)..r {
            let count = -cartan.pairing(tau.parts[t].1.entries(), tau.parts[u].1.entries());
            if count < 0 {
                return Err(Error::InadmissibleType(format!(
                    "−v_{t}·C·v_{u} = {count} < 0"
                )));
            }
            adjacency[t][u] = count;
        }
    }
    let labels = (1..=r).map(|t| t.to_string()).collect();
    let slice_quiver = Quiver::from_adjacency(labels, adjacency)?;
    let slice_dim = DimVector::new(tau.parts.iter().map(|(k, _)| *k).collect())?;
    let provenance = tau.parts.iter().map(|(_, p)| p.clone()).collect();
    Ok(SliceResult { slice_quiver, slice_dim, provenance })
}

/// Both sides of the slice identity: `p̂(Σ k_t ê_t)` on the slice quiver
/// and `p(Σ k_t v_t)` on the ambient quiver. Callers assert equality.
pub fn p_identity_sides(q: &Quiver, tau: &RepType) -> Result<(i64, i64)> {
    let slice = slice_quiver(q, tau)?;
    let left = slice.slice_quiver.p(&slice.slice_dim)?;
    let right = q.p(&tau.weighted_sum(q.len()))?;
    Ok((left, right))
}
