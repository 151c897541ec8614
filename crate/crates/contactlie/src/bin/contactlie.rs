//! Command-line front end: parse JSON documents (or build them from the
//! catalog), dispatch to the library's report builders, and print the result.
//!
//! Exit codes: 0 on success, 1 on a mathematical violation (reported
//! structurally: identity name, 1-based indices, defect), 2 on I/O, schema,
//! or usage errors.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use contactlie::json::parse_document;
use contactlie::reports::{
    canonical_report, catalog_document, catalog_entry_report, catalog_names_report,
    classify_report, homology_gamma_report, homology_quaternion_report, invariants_report,
    torsion_report, validate_report, MathViolation, Report, ReportError,
};

#[derive(Parser)]
#[command(name = "contactlie", version, about = "Exact-arithmetic reports on Lie algebras with (3-)contact structures")]
struct Cli {
    /// Output format; falls back to $CONTACTLIE_OUTPUT, then json
    #[arg(long, global = true, value_enum)]
    output: Option<OutputFormat>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a document end to end: bracket table, structure identities, metric
    Validate(InputArgs),
    /// Label the algebra-with-structure; plain runs report structure classes
    Classify {
        #[command(flatten)]
        input: InputArgs,
        /// Recognize the 3-dimensional algebra underlying a contact document
        #[arg(long, conflicts_with = "dim7")]
        dim3: bool,
        /// Recognize the 7-dimensional algebra underlying a 3-contact document
        #[arg(long)]
        dim7: bool,
    },
    /// Report Z, delta, psi and the structure case of a 3-contact document
    Invariants(InputArgs),
    /// Decide whether a 3-contact structure is canonical and report beta
    Canonical(InputArgs),
    /// Canonical connection and its torsion (3-contact document with metric)
    Torsion {
        #[command(flatten)]
        input: InputArgs,
        /// Also check whether the torsion is parallel
        #[arg(long)]
        check_parallel: bool,
    },
    /// First homology of the crystallographic lattice quotients
    Homology {
        /// Rotation order m of the lattice with one finite generator
        #[arg(long, conflicts_with = "group")]
        m: Option<usize>,
        /// Named finite part acting on the translation lattice (only "q8")
        #[arg(long)]
        group: Option<String>,
        /// Quaternionic dimension n (translation rank 4n)
        #[arg(long)]
        n: Option<usize>,
    },
    /// List the built-in families or export one instance as a document
    Catalog {
        /// List available family names
        #[arg(long, conflicts_with = "name")]
        list: bool,
        /// Export one family instance
        #[arg(long)]
        name: Option<String>,
        /// Comma-separated key=value construction parameters
        #[arg(long, requires = "name", value_delimiter = ',')]
        params: Vec<String>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Path to a JSON document; "-" or absent reads standard input
    #[arg(conflicts_with = "catalog")]
    path: Option<PathBuf>,
    /// Build the input from a catalog family instead of reading a file
    #[arg(long)]
    catalog: Option<String>,
    /// Comma-separated key=value parameters for --catalog
    #[arg(long, requires = "catalog", value_delimiter = ',')]
    params: Vec<String>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Json,
    Text,
}

enum Failure {
    /// exit 1
    Math(MathViolation),
    /// exit 2
    Input(String),
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::Math(v) => Failure::Math(v),
            ReportError::Schema(s) => Failure::Input(s.to_string()),
            ReportError::Usage(msg) => Failure::Input(msg),
        }
    }
}

fn parse_params(pairs: &[String]) -> Result<BTreeMap<String, String>, Failure> {
    let mut map = BTreeMap::new();
    for pair in pairs {
        let (k, v) = pair.split_once('=').ok_or_else(|| {
            Failure::Input(format!("parameter `{pair}` is not of the form key=value"))
        })?;
        if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(Failure::Input(format!("parameter `{k}` given twice")));
        }
    }
    Ok(map)
}

fn load_document(input: &InputArgs) -> Result<contactlie::json::Document, Failure> {
    if let Some(name) = &input.catalog {
        let params = parse_params(&input.params)?;
        return Ok(catalog_document(name, &params)?);
    }
    let text = match &input.path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            buf
        }
    };
    parse_document(&text).map_err(|e| Failure::Input(e.to_string()))
}

fn run(cmd: Cmd) -> Result<Report, Failure> {
    match cmd {
        Cmd::Validate(input) => Ok(validate_report(&load_document(&input)?)?),
        Cmd::Classify { input, dim3, dim7 } => {
            Ok(classify_report(&load_document(&input)?, dim3, dim7)?)
        }
        Cmd::Invariants(input) => Ok(invariants_report(&load_document(&input)?)?),
        Cmd::Canonical(input) => Ok(canonical_report(&load_document(&input)?)?),
        Cmd::Torsion {
            input,
            check_parallel,
        } => Ok(torsion_report(&load_document(&input)?, check_parallel)?),
        Cmd::Homology { m, group, n } => {
            let n = n.ok_or_else(|| Failure::Input("homology needs --n".to_string()))?;
            match (m, group) {
                (Some(m), None) => Ok(homology_gamma_report(m, n)?),
                (None, Some(name)) if name == "q8" => Ok(homology_quaternion_report(n)?),
                (None, Some(name)) => Err(Failure::Input(format!(
                    "unknown group `{name}`; only `q8` is built in"
                ))),
                _ => Err(Failure::Input(
                    "homology needs exactly one of --m or --group".to_string(),
                )),
            }
        }
        Cmd::Catalog { list, name, params } => {
            if list {
                return Ok(catalog_names_report());
            }
            let name = name
                .ok_or_else(|| Failure::Input("catalog needs --list or --name".to_string()))?;
            Ok(catalog_entry_report(&name, &parse_params(&params)?)?)
        }
    }
}

fn resolve_format(flag: Option<OutputFormat>) -> Result<OutputFormat, String> {
    if let Some(f) = flag {
        return Ok(f);
    }
    match std::env::var("CONTACTLIE_OUTPUT") {
        Ok(v) => match v.as_str() {
            "json" => Ok(OutputFormat::Json),
            "text" => Ok(OutputFormat::Text),
            other => Err(format!(
                "CONTACTLIE_OUTPUT must be `json` or `text`, got `{other}`"
            )),
        },
        Err(_) => Ok(OutputFormat::Json),
    }
}

fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => report.to_json_string(),
        OutputFormat::Text => report.text.clone(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match resolve_format(cli.output) {
        Ok(f) => f,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match run(cli.cmd) {
        Ok(report) => {
            print!("{}", render(&report, format));
            ExitCode::SUCCESS
        }
        Err(Failure::Math(v)) => {
            let out = match format {
                OutputFormat::Json => contactlie::json::to_canonical_string(&v.to_value()),
                OutputFormat::Text => v.to_text(),
            };
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
