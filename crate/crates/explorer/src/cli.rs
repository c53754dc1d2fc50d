//! The `borcherds-rc` command line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use borcherds_rc::checks::{check_axioms, check_recognition, CheckError, CheckReport};
use borcherds_rc::crystal::rc_infinity_layers;
use borcherds_rc::graph::{apply_word, generate, GraphError, GraphModel};
use borcherds_rc::highest_weight::{compare_with_cutout, compare_with_star, star_membership};
use borcherds_rc::imaginary::{
    balanced_equals_generated, cayley_isomorphism_check, is_balanced, operators_commute, ImaginaryError,
};
use borcherds_rc::{BorcherdsCartanDatum, DominantWeight, RiggedConfiguration};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::dot::export_dot;
use crate::format::{
    datum_to_json, export_json, rc_to_json, read_datum, read_rc, read_weight, report_to_json, to_text, FormatError,
};
use crate::render::render_rc;
use crate::word::{parse_word, WordError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    File { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Imaginary(#[from] ImaginaryError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "borcherds-rc", version, about = "Rigged-configuration crystals for Borcherds algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Infinity,
    Star,
    Lambda,
    Cutout,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Dot,
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct DatumArg {
    /// Datum file: {"indices": [...], "cartan": [[...]]}.
    #[arg(long)]
    pub datum: PathBuf,
}

#[derive(Debug, Args)]
pub struct OutArg {
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a Borcherds–Cartan datum.
    Validate {
        #[command(flatten)]
        datum: DatumArg,
    },
    /// Generate a depth-truncated crystal graph.
    Generate {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = ModelArg::Infinity)]
        model: ModelArg,
        /// Dominant weight file: {"pairings": {...}}.
        #[arg(long)]
        lambda: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Apply an operator word such as "f1^3 f2" (rightmost acts first).
    Apply {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long)]
        word: String,
        /// Start from this rigged configuration instead of the empty one.
        #[arg(long)]
        start: Option<PathBuf>,
        #[arg(long)]
        lambda: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Apply the star involution.
    Star {
        #[command(flatten)]
        datum: DatumArg,
        /// Rigged configuration file.
        #[arg(long, conflicts_with = "word")]
        rc: Option<PathBuf>,
        /// Build the input from a word applied to the empty configuration.
        #[arg(long)]
        word: Option<String>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Check the crystal axioms for both operator families.
    CheckAxioms {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Check the recognition conditions for B(infinity).
    CheckRecognition {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Compare balanced configurations with RC(infinity) (purely imaginary data).
    CheckBalanced {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Compare the Artin-monoid Cayley graph with the crystal graph.
    CheckCayley {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Compare RC(lambda) with the tensor cutout and the star criterion.
    CheckLambda {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long)]
        lambda: PathBuf,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Also report whether this configuration lies in RC(lambda).
        #[arg(long)]
        rc: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn in_file<T>(path: &Path, r: Result<T, FormatError>) -> Result<T, CliError> {
    r.map_err(|source| CliError::File { path: path.into(), source })
}

fn load_datum(arg: &DatumArg) -> Result<BorcherdsCartanDatum, CliError> {
    in_file(&arg.datum, read_datum(&read(&arg.datum)?))
}

fn load_weight(d: &BorcherdsCartanDatum, path: &Path) -> Result<DominantWeight, CliError> {
    in_file(path, read_weight(d, &read(path)?))
}

fn load_rc(d: &BorcherdsCartanDatum, path: &Path) -> Result<RiggedConfiguration, CliError> {
    in_file(path, read_rc(d, &read(path)?))
}

fn emit(out: &OutArg, stdout: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match &out.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn rc_text(d: &BorcherdsCartanDatum, rc: &RiggedConfiguration, format: FormatArg) -> Result<String, CliError> {
    match format {
        FormatArg::Text => Ok(render_rc(d, rc)),
        FormatArg::Json => Ok(to_text(&rc_to_json(d, rc))),
        FormatArg::Dot => Err(CliError::Usage("rigged configurations have no dot format".into())),
    }
}

fn reports_json(d: &BorcherdsCartanDatum, depth: usize, reports: &[CheckReport]) -> (Value, bool) {
    let passed = reports.iter().all(CheckReport::passed);
    let v = json!({
        "datum": datum_to_json(d),
        "depth": depth,
        "passed": passed,
        "reports": reports.iter().map(report_to_json).collect::<Vec<_>>(),
    });
    (v, passed)
}

/// Runs one command. `Ok(true)` means every check passed, `Ok(false)` that
/// some check failed.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<bool, CliError> {
    match cli.command {
        Command::Validate { datum } => {
            let d = load_datum(&datum)?;
            let kinds: Vec<String> =
                d.indices().map(|a| format!("{} ({:?})", d.label(a), d.kind(a)).to_lowercase()).collect();
            let text = format!("valid Borcherds-Cartan datum of rank {}: {}\n", d.rank(), kinds.join(", "));
            stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })?;
            Ok(true)
        }
        Command::Generate { datum, depth, model, lambda, format, out } => {
            let d = load_datum(&datum)?;
            let weight = || -> Result<DominantWeight, CliError> {
                let path = lambda.as_ref().ok_or_else(|| CliError::Usage("this model needs --lambda".into()))?;
                load_weight(&d, path)
            };
            let model = match model {
                ModelArg::Infinity => GraphModel::Infinity,
                ModelArg::Star => GraphModel::Star,
                ModelArg::Lambda => GraphModel::Lambda(weight()?),
                ModelArg::Cutout => GraphModel::Cutout(weight()?),
            };
            let g = generate(&d, &model, depth);
            let text = match format {
                FormatArg::Json => export_json(&g),
                FormatArg::Dot => export_dot(&g),
                FormatArg::Text => return Err(CliError::Usage("graphs are exported as dot or json".into())),
            };
            emit(&out, stdout, &text)?;
            Ok(true)
        }
        Command::Apply { datum, word, start, lambda, format, out } => {
            let d = load_datum(&datum)?;
            let w = parse_word(&d, &word)?;
            let start = match &start {
                Some(p) => load_rc(&d, p)?,
                None => RiggedConfiguration::empty(&d),
            };
            let lambda = lambda.as_ref().map(|p| load_weight(&d, p)).transpose()?;
            let text = match apply_word(&d, &w, &start, lambda.as_ref())? {
                Some(rc) => rc_text(&d, &rc, format)?,
                None => "null\n".to_string(),
            };
            emit(&out, stdout, &text)?;
            Ok(true)
        }
        Command::Star { datum, rc, word, format, out } => {
            let d = load_datum(&datum)?;
            let input = match (&rc, &word) {
                (Some(p), _) => load_rc(&d, p)?,
                (None, Some(w)) => apply_word(&d, &parse_word(&d, w)?, &RiggedConfiguration::empty(&d), None)?
                    .ok_or_else(|| CliError::Usage("the word gives the null element".into()))?,
                (None, None) => return Err(CliError::Usage("give --rc or --word".into())),
            };
            emit(&out, stdout, &rc_text(&d, &input.star(&d), format)?)?;
            Ok(true)
        }
        Command::CheckAxioms { datum, depth, out } => {
            let d = load_datum(&datum)?;
            let (v, passed) = reports_json(&d, depth, &check_axioms(&d, depth));
            emit(&out, stdout, &to_text(&v))?;
            Ok(passed)
        }
        Command::CheckRecognition { datum, depth, out } => {
            let d = load_datum(&datum)?;
            let (v, passed) = reports_json(&d, depth, &check_recognition(&d, depth)?);
            emit(&out, stdout, &to_text(&v))?;
            Ok(passed)
        }
        Command::CheckBalanced { datum, depth, out } => {
            let d = load_datum(&datum)?;
            let r = balanced_equals_generated(&d, depth)?;
            let mut commute = Vec::new();
            let mut commute_ok = true;
            for a in d.indices() {
                for b in d.indices().filter(|&b| b > a) {
                    let got = operators_commute(&d, a, b, depth)?;
                    let expected = d.entry(a, b) == 0;
                    commute_ok &= got == expected;
                    commute.push(json!({ "a": d.label(a), "b": d.label(b), "commute": got, "expected": expected }));
                }
            }
            let mut witnesses = Vec::new();
            for rc in rc_infinity_layers(&d, depth).into_iter().flatten() {
                let order = is_balanced(&d, &rc)?.unwrap_or_default();
                let order: Vec<Value> =
                    order.iter().map(|s| json!({ "index": d.label(s.index), "riggings": s.riggings })).collect();
                witnesses.push(json!({ "rc": rc_to_json(&d, &rc), "order": order }));
            }
            let passed = r.passed() && commute_ok;
            let v = json!({
                "datum": datum_to_json(&d),
                "depth": depth,
                "passed": passed,
                "balanced": r.balanced,
                "generated": r.generated,
                "only_balanced": r.only_balanced.iter().map(|x| rc_to_json(&d, x)).collect::<Vec<_>>(),
                "only_generated": r.only_generated.iter().map(|x| rc_to_json(&d, x)).collect::<Vec<_>>(),
                "commutation": commute,
                "witnesses": witnesses,
            });
            emit(&out, stdout, &to_text(&v))?;
            Ok(passed)
        }
        Command::CheckCayley { datum, depth, out } => {
            let d = load_datum(&datum)?;
            let (v, passed) = reports_json(&d, depth, &[cayley_isomorphism_check(&d, depth)?]);
            emit(&out, stdout, &to_text(&v))?;
            Ok(passed)
        }
        Command::CheckLambda { datum, lambda, depth, rc, out } => {
            let d = load_datum(&datum)?;
            let l = load_weight(&d, &lambda)?;
            let reports = [compare_with_cutout(&d, &l, depth), compare_with_star(&d, &l, depth)];
            let (mut v, passed) = reports_json(&d, depth, &reports);
            v["lambda"] = crate::format::weight_to_json(&d, &l);
            if let Some(p) = rc {
                v["member"] = json!(star_membership(&d, &load_rc(&d, &p)?, &l));
            }
            emit(&out, stdout, &to_text(&v))?;
            Ok(passed)
        }
    }
}
