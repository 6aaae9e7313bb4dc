//! `quiverlab`: one binary over a shared JSON input format.
//!
//! Machine-readable JSON on stdout for both success and failure; exit
//! codes: 0 success, 2 validation error, 3 capacity/budget exceeded,
//! 4 internal assertion failure.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use quiverlab::error::{Error, Result};
use quiverlab::flatness;
use quiverlab::hilbert;
use quiverlab::io::{self, QuiverInput};
use quiverlab::quiver::{frame, DimVector, Quiver};
use quiverlab::rat::format_rational;
use quiverlab::reflections;
use quiverlab::slices::{self, RepType};
use quiverlab::typea::{self, Shape, TypeAQuiver, WalgParams};

#[derive(Parser)]
#[command(name = "quiverlab", version, about = "Exact-arithmetic quiver scheme toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide flatness of the moment map by the decomposition criterion
    Flat {
        file: PathBuf,
        /// Cap on the number of DP states
        #[arg(long, default_value_t = flatness::DEFAULT_BUDGET)]
        budget: u128,
        /// Also list every equality-achieving decomposition into atomic parts
        #[arg(long = "all-witnesses")]
        all_witnesses: bool,
    },
    /// Strict superadditivity of p over parameter-orthogonal decompositions
    Sigma {
        file: PathBuf,
        #[arg(long, default_value_t = flatness::DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Genericity of (theta, lambda) for the dimension vector
    Generic {
        file: PathBuf,
        #[arg(long, default_value_t = flatness::DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Build the slice quiver of a representation type
    Slice {
        file: PathBuf,
        /// Representation type, e.g. "1:(1,1);1:(0,1)"
        #[arg(long = "type")]
        rep_type: String,
    },
    /// Apply the simple reflection at a vertex to (v, lambda, theta)
    Reflect {
        file: PathBuf,
        /// Vertex label
        #[arg(long)]
        vertex: String,
    },
    /// Breadth-first reflection orbit of (v, lambda, theta)
    Orbit {
        file: PathBuf,
        /// Cap on the number of orbit states
        #[arg(long, default_value_t = 1000)]
        max: usize,
    },
    /// Framed type-A flatness by the connected-subset criterion
    Typea {
        file: PathBuf,
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: usize,
    },
    /// W-algebra parameter correspondence on the type-A path
    Walg {
        /// Flag multiplicities, e.g. 1,2
        #[arg(long, value_delimiter = ',')]
        r: Vec<i64>,
        /// Jordan-type multiplicities, e.g. 3
        #[arg(long, value_delimiter = ',')]
        d: Vec<i64>,
    },
    /// Graded series of the quiver scheme by constant-term extraction
    Hilbert {
        file: PathBuf,
        /// Truncation order K
        #[arg(long, default_value_t = 6)]
        order: i64,
        /// molien | matter | oracle | sympow(n)
        #[arg(long, default_value = "molien")]
        method: String,
    },
    /// Adjoin the framing vertex; output is a valid input file
    Frame { file: PathBuf },
}

fn main() {
    let cli = Cli::parse();
    let path = input_path(&cli.command);
    match run(cli.command) {
        Ok(doc) => println!("{}", serde_json::to_string_pretty(&doc).expect("valid JSON")),
        Err(err) => {
            let doc = json!({
                "error": err.to_string(),
                "path": path.map(|p| p.display().to_string()),
            });
            println!("{doc}");
            std::process::exit(err.exit_code());
        }
    }
}

fn input_path(command: &Command) -> Option<PathBuf> {
    match command {
        Command::Flat { file, .. }
        | Command::Sigma { file, .. }
        | Command::Generic { file, .. }
        | Command::Slice { file, .. }
        | Command::Reflect { file, .. }
        | Command::Orbit { file, .. }
        | Command::Typea { file, .. }
        | Command::Hilbert { file, .. }
        | Command::Frame { file } => Some(file.clone()),
        Command::Walg { .. } => None,
    }
}

fn run(command: Command) -> Result<Value> {
    match command {
        Command::Flat { file, budget, all_witnesses } => {
            let input = unframed_input(&file)?;
            cmd_flat(&input, budget, all_witnesses)
        }
        Command::Sigma { file, budget } => {
            let input = unframed_input(&file)?;
            let sigma =
                flatness::sigma_condition(&input.quiver, &input.dims, &input.params, budget)?;
            Ok(json!({ "sigma": sigma }))
        }
        Command::Generic { file, budget } => {
            let input = unframed_input(&file)?;
            let (generic, offender) = flatness::is_generic(&input.dims, &input.params, budget)?;
            Ok(json!({
                "generic": generic,
                "offender": offender.map(|v| dim_strings(&v)),
            }))
        }
        Command::Slice { file, rep_type } => {
            let input = unframed_input(&file)?;
            cmd_slice(&input, &rep_type)
        }
        Command::Reflect { file, vertex } => {
            let input = unframed_input(&file)?;
            cmd_reflect(&input, &vertex)
        }
        Command::Orbit { file, max } => {
            let input = unframed_input(&file)?;
            cmd_orbit(&input, max)
        }
        Command::Typea { file, shape, n } => {
            let input = io::parse_file(&file)?;
            cmd_typea(&input, &shape, n)
        }
        Command::Walg { r, d } => cmd_walg(r, d),
        Command::Hilbert { file, order, method } => {
            let input = unframed_input(&file)?;
            cmd_hilbert(&input, order, &method)
        }
        Command::Frame { file } => {
            let input = io::parse_file(&file)?;
            let d = input.require_framing()?;
            let (fq, fv, fp) = frame(&input.quiver, &input.dims, d, &input.params)?;
            Ok(io::to_input_document(&fq, &fv, &fp))
        }
    }
}

/// Parse a file for a subcommand with unframed semantics: the annihilation
/// constraints must already hold.
fn unframed_input(file: &Path) -> Result<QuiverInput> {
    let input = io::parse_file(file)?;
    input.require_annihilated()?;
    Ok(input)
}

fn cmd_flat(input: &QuiverInput, budget: u128, all_witnesses: bool) -> Result<Value> {
    let report = flatness::flatness_certificate(&input.quiver, &input.dims, budget)?;
    let components = input.quiver.support_components(&input.dims)?;
    let mut doc = Map::new();
    doc.insert("flat".into(), json!(report.flat));
    doc.insert("p".into(), json!(report.p_value.to_string()));
    doc.insert("best_sum".into(), json!(report.best_sum.to_string()));
    doc.insert(
        "witness".into(),
        match &report.witness {
            Some(parts) => json!(parts.iter().map(dim_strings).collect::<Vec<_>>()),
            None => Value::Null,
        },
    );
    doc.insert(
        "support_components".into(),
        json!(components.iter().map(|c| subset_labels(&input.quiver, c)).collect::<Vec<_>>()),
    );
    if components.len() > 1 {
        doc.insert(
            "advisory".into(),
            json!(
                "support is disconnected: a flat moment map forces connected support, \
                 so analyze each component separately"
            ),
        );
    }
    if all_witnesses {
        let ws = flatness::equality_witnesses(&input.quiver, &input.dims, budget)?;
        doc.insert(
            "equality_witnesses".into(),
            json!(ws
                .iter()
                .map(|parts| parts.iter().map(dim_strings).collect::<Vec<_>>())
                .collect::<Vec<_>>()),
        );
    }
    Ok(Value::Object(doc))
}

fn cmd_slice(input: &QuiverInput, rep_type: &str) -> Result<Value> {
    let tau = RepType::parse(rep_type)?;
    let violations =
        slices::validate_rep_type(&input.quiver, &input.dims, &input.params, &tau, false)?;
    if !violations.is_empty() {
        let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::Invalid(format!("representation type rejected: {}", msgs.join("; "))));
    }
    let slice = slices::slice_quiver(&input.quiver, &tau)?;
    let (lhs, rhs) = slices::p_identity_sides(&input.quiver, &tau)?;
    let q = &slice.slice_quiver;
    let arrows: Vec<Value> =
        q.arrow_pairs().into_iter().map(|(t, h)| json!([q.label(t), q.label(h)])).collect();
    let provenance: Map<String, Value> = slice
        .provenance
        .iter()
        .enumerate()
        .map(|(t, part)| (q.label(t).to_owned(), json!(dim_strings(part))))
        .collect();
    Ok(json!({
        "slice": { "vertices": q.labels(), "arrows": arrows },
        "dims": dim_strings(&slice.slice_dim),
        "provenance": provenance,
        "identity_check": { "lhs": lhs.to_string(), "rhs": rhs.to_string() },
    }))
}

fn cmd_reflect(input: &QuiverInput, vertex: &str) -> Result<Value> {
    let i = input.quiver.vertex(vertex)?;
    let adm = reflections::reflection_admissibility(&input.quiver, &input.dims, &input.params, i)?;
    let (v, params) = reflections::reflect_at(&input.quiver, &input.dims, &input.params, i)?;
    Ok(json!({
        "v": dim_strings(&v),
        "lambda": rational_strings(&params.lambda),
        "theta": rational_strings(&params.theta),
        "admissibility": {
            "loop_free": adm.loop_free,
            "lmn": adm.lmn,
            "pm1": adm.pm1,
        },
    }))
}

fn cmd_orbit(input: &QuiverInput, max: usize) -> Result<Value> {
    let orbit = reflections::reflection_orbit(&input.quiver, &input.dims, &input.params, max)?;
    let states: Vec<Value> = orbit
        .states
        .iter()
        .map(|(v, p)| {
            json!({
                "v": dim_strings(v),
                "lambda": rational_strings(&p.lambda),
                "theta": rational_strings(&p.theta),
            })
        })
        .collect();
    Ok(json!({ "states": states, "truncated": orbit.truncated }))
}

fn cmd_typea(input: &QuiverInput, shape: &str, n: usize) -> Result<Value> {
    let shape: Shape = shape.parse()?;
    let ta = TypeAQuiver::new(n, shape)?;
    let expected = ta.quiver();
    if input.quiver != expected {
        return Err(Error::Invalid(format!(
            "input quiver does not match the declared {shape:?} shape with n = {n} \
             (vertices 1..{n} with the standard orientation)"
        )));
    }
    let d = input.require_framing()?;
    let (flat, violating) = typea::flat_type_a(&ta, &input.dims, d)?;
    Ok(json!({
        "flat": flat,
        "violating_subset": violating.map(|s| subset_labels(&expected, &s)),
    }))
}

fn cmd_walg(r: Vec<i64>, d: Vec<i64>) -> Result<Value> {
    let params = WalgParams::new(r, d)?;
    let v = typea::walg_dims(&params)?;
    let flat = typea::walg_flat(&params)?;
    let checks: Vec<Value> = typea::walg_identity_checks(&params)?
        .into_iter()
        .map(|c| {
            json!({
                "pair": [c.pair.0.to_string(), c.pair.1.to_string()],
                "lhs": c.lhs.to_string(),
                "rhs": c.rhs.to_string(),
            })
        })
        .collect();
    Ok(json!({
        "v": dim_strings(&v),
        "flat": flat,
        "identity_checks": checks,
    }))
}

fn cmd_hilbert(input: &QuiverInput, order: i64, method: &str) -> Result<Value> {
    if order < 0 {
        return Err(Error::Invalid(format!("truncation order must be nonnegative, got {order}")));
    }
    let order = order as usize;
    let coefficients = match parse_method(method)? {
        Method::Molien => hilbert::koszul_euler_series(&input.quiver, &input.dims, order)?,
        Method::Matter => hilbert::matter_series(&input.quiver, &input.dims, order)?,
        Method::Oracle => hilbert::abelian_invariant_oracle(&input.quiver, &input.dims, order)?,
        Method::Sympow(n) => hilbert::symmetric_power_series(n, order)?,
    };
    Ok(json!({
        "coefficients": coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "method": method,
        "order": order.to_string(),
    }))
}

enum Method {
    Molien,
    Matter,
    Oracle,
    Sympow(usize),
}

fn parse_method(method: &str) -> Result<Method> {
    match method {
        "molien" => Ok(Method::Molien),
        "matter" => Ok(Method::Matter),
        "oracle" => Ok(Method::Oracle),
        other => {
            if let Some(inner) = other.strip_prefix("sympow(").and_then(|s| s.strip_suffix(')')) {
                let n: usize = inner
                    .trim()
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad symmetric power `{other}`")))?;
                return Ok(Method::Sympow(n));
            }
            Err(Error::Invalid(format!(
                "unknown method `{other}` (expected molien|matter|oracle|sympow(n))"
            )))
        }
    }
}

fn dim_strings(v: &DimVector) -> Vec<String> {
    v.entries().iter().map(|x| x.to_string()).collect()
}

fn rational_strings(coeffs: &[num_rational::BigRational]) -> Vec<String> {
    coeffs.iter().map(format_rational).collect()
}

fn subset_labels(q: &Quiver, subset: &[usize]) -> Vec<String> {
    subset.iter().map(|&i| q.label(i).to_owned()).collect()
}
