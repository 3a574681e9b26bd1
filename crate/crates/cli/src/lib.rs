//! Command-line front end: stratum notation, JSON documents, reports and
//! the batch atlas.

pub mod atlas;
pub mod document;
pub mod error;
pub mod notation;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use strata_core::bounds::bounds_report;
use strata_core::residue::{build_system, classify_variables, realize_residues};
use strata_core::{enumerate_reps, kappa, validate, EnumerateOptions, KappaMethod, Nonemptiness, Stratum};

use crate::atlas::AtlasLimits;
use crate::document::{CertificateDocument, RepDocument};
use crate::error::CliError;
use crate::notation::{parse_stratum, render};
use crate::report::BoundsDocument;

#[derive(Debug, Parser)]
#[command(name = "strata", version, about = "Graph representations, reducibility and bounds for strata of k-differentials")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Reduce,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus, nonemptiness, reducibility index, irreducibility and bounds.
    Analyze { stratum: String },
    /// Graph representations up to isomorphism.
    Reps {
        stratum: String,
        #[arg(long)]
        max_level: Option<usize>,
        /// Only representations with all weights zero.
        #[arg(long)]
        pure: bool,
    },
    /// The reducibility index.
    Kappa {
        stratum: String,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// A residue certificate for a representation document.
    Realize {
        rep: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The violated conditions of a representation document.
    Check { rep: PathBuf },
    /// Arc-system, saddle-connection and component bounds.
    Bounds {
        stratum: String,
        /// Triangle counts t_1,..,t_s of the chambers' cores.
        #[arg(long, value_delimiter = ',')]
        triangles: Option<Vec<u64>>,
    },
    /// A table over all valid strata within the limits; the format follows
    /// the extension of --out (.csv or .json).
    Atlas {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        max_pole_sum: i64,
        /// Restrict to one genus.
        #[arg(long)]
        genus: Option<u32>,
        /// Largest genus when --genus is absent.
        #[arg(long, default_value_t = 1)]
        max_genus: u32,
        /// Largest n + p.
        #[arg(long, default_value_t = 8)]
        max_singularities: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Reports go to `out`; errors go to `err` as a JSON object.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(value) => {
            let _ = out.write_all(format_value(&value, cli.format).as_bytes());
            0
        }
        Err(e) => {
            let mut text = serde_json::to_string_pretty(&e.to_json()).expect("error serializes");
            text.push('\n');
            let _ = err.write_all(text.as_bytes());
            e.exit_code()
        }
    }
}

fn to_value<S: Serialize>(s: &S) -> Value {
    serde_json::to_value(s).expect("reports serialize")
}

fn live_stratum(text: &str) -> Result<Stratum, CliError> {
    let s = parse_stratum(text)?;
    if s.is_nonempty() == Nonemptiness::Empty {
        return Err(CliError::EmptyStratum(render(&s)));
    }
    Ok(s)
}

fn read_document(path: &PathBuf) -> Result<RepDocument, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    RepDocument::from_json(&text)
}

pub fn execute(command: &Command) -> Result<Value, CliError> {
    match command {
        Command::Analyze { stratum } => Ok(to_value(&report::analyze(&parse_stratum(stratum)?))),
        Command::Reps {
            stratum,
            max_level,
            pure,
        } => {
            let s = live_stratum(stratum)?;
            let reps = enumerate_reps(
                &s,
                &EnumerateOptions {
                    max_level: *max_level,
                    pure_only: *pure,
                },
            )?;
            let docs: Vec<RepDocument> = reps.iter().map(RepDocument::from_rep).collect();
            Ok(serde_json::json!({
                "stratum": render(&s),
                "count": docs.len(),
                "representations": docs,
            }))
        }
        Command::Kappa { stratum, method } => {
            let s = live_stratum(stratum)?;
            let (m, name) = match method {
                Method::Direct => (KappaMethod::Direct, "direct"),
                Method::Reduce => (KappaMethod::GenusReduction, "reduce"),
            };
            Ok(serde_json::json!({
                "stratum": render(&s),
                "method": name,
                "kappa": kappa(&s, m)?,
            }))
        }
        Command::Realize { rep, seed } => {
            let rep = read_document(rep)?.to_rep()?;
            let cert = realize_residues(&rep, *seed)?;
            let system = build_system(&rep);
            let classes = classify_variables(&rep);
            Ok(to_value(&CertificateDocument::new(&system, &classes, &cert)))
        }
        Command::Check { rep } => {
            let rep = read_document(rep)?.to_rep()?;
            Ok(to_value(&report::check(rep.stratum(), &validate(&rep))))
        }
        Command::Bounds { stratum, triangles } => {
            let s = live_stratum(stratum)?;
            if triangles.is_some() && s.k() != 1 {
                return Err(strata_core::Error::NotApplicable(
                    "the chamber bound is proved for k = 1 only".into(),
                )
                .into());
            }
            let doc = BoundsDocument::from(&bounds_report(&s, triangles.as_deref()));
            let mut value = to_value(&doc);
            value["stratum"] = Value::String(render(&s));
            Ok(value)
        }
        Command::Atlas {
            k,
            max_pole_sum,
            genus,
            max_genus,
            max_singularities,
            out,
        } => {
            if *k == 0 {
                return Err(CliError::Input("--k must be positive".into()));
            }
            let rows = atlas::rows(&AtlasLimits {
                k: *k,
                max_pole_sum: *max_pole_sum,
                genus: *genus,
                max_genus: *max_genus,
                max_singularities: *max_singularities,
            });
            atlas::write(&rows, out)?;
            Ok(serde_json::json!({
                "out": out.display().to_string(),
                "rows": rows.len(),
            }))
        }
    }
}

/// JSON is pretty-printed; text is one `path: value` line per scalar.
pub fn format_value(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("value serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            flatten("", value, &mut s);
            s
        }
    }
}

fn flatten(path: &str, value: &Value, out: &mut String) {
    let join = |key: &str| {
        if path.is_empty() {
            key.to_string()
        } else {
            format!("{path}.{key}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&join(k), v, out);
            }
        }
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{path}: [{}]\n", parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), v, out);
            }
        }
        v => out.push_str(&format!("{path}: {}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
