//! `multinets` — construct, verify, classify and render multinets, decide
//! completeness, and build induced arrangements, all in exact arithmetic.
//!
//! Exit codes: 0 success or affirmative verdict, 1 negative verdict,
//! 2 input error, 3 I/O error.

mod document;
mod render;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use multinets::catalog::{
    fermat, hesse, light34, monomial_g_n13, stipins33, trivial_pencil, z2z2_net, FamilyParams,
};
use multinets::induce::{classify_induced, induce, InduceError};
use multinets::multinet::{isotopic_to_group, GroupSpec, MultinetCandidate};
use multinets::{Cyclo, VerifiedMultinet};

use document::{ArrangementDocument, Metadata};
use report::Format;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

#[derive(Parser)]
#[command(name = "multinets", version, about = "Exact multinet computations in the complex projective plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Fermat,
    Monomial,
    Hesse,
    Stipins33,
    Light34,
    Z2z2,
    Trivial,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog arrangement and write it as a JSON document.
    Construct {
        family: Family,
        /// Degree parameter for fermat/monomial (a positive integer).
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
        /// Block count for the trivial pencil.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        /// λ as a coordinate expression, e.g. "4", "-1/2" or "z3".
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// μ as a coordinate expression.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check the multinet axioms of a document.
    Verify {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Report weight class and block structures.
    Classify {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide completeness through the Riemann–Hurwitz balance.
    Complete {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Restrict Q_n to a plane and classify the induced multinet.
    Induce {
        /// The order n of Q_n.
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        /// Four dual plane coordinates, comma separated expressions.
        #[arg(long, allow_hyphen_values = true)]
        plane: String,
        /// Output path for the induced arrangement; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the Latin square of a 3-net; optionally test group isotopy.
    Latin {
        input: PathBuf,
        /// Group to test: "klein", "cyclic:N" or "dihedral:N".
        #[arg(long)]
        group: Option<String>,
    },
    /// Draw a real arrangement as SVG.
    Render {
        input: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        /// Affine chart to draw in.
        #[arg(long, value_enum, default_value = "z")]
        chart: render::Chart,
        /// Width of the drawing window in chart units.
        #[arg(long, default_value_t = 4.0)]
        span: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Construct {
            family,
            n,
            k,
            lambda,
            mu,
            out,
        } => cmd_construct(family, n, k, lambda, mu, out),
        Command::Verify { input, format } => {
            let c = load(&input)?;
            let doc = report::build(&c, false);
            println!("{}", report::emit(&doc, format));
            Ok(if doc.verdict == "multinet" { 0 } else { 1 })
        }
        Command::Classify { input, format } => {
            let c = load(&input)?;
            let doc = report::build(&c, false);
            println!("{}", report::emit(&doc, format));
            Ok(if doc.verdict == "multinet" { 0 } else { 1 })
        }
        Command::Complete { input, format } => {
            let c = load(&input)?;
            let doc = report::build(&c, true);
            println!("{}", report::emit(&doc, format));
            Ok(if doc.complete.as_deref() == Some(report::COMPLETE) {
                0
            } else {
                1
            })
        }
        Command::Induce {
            n,
            plane,
            out,
            format,
        } => cmd_induce(&n, &plane, out, format),
        Command::Latin { input, group } => cmd_latin(&input, group),
        Command::Render {
            input,
            out,
            chart,
            span,
        } => {
            let c = load(&input)?;
            let svg = render::render(&c, chart, span)?;
            write_output(Some(&out), &svg)?;
            Ok(0)
        }
    }
}

fn load(path: &Path) -> Result<MultinetCandidate, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    ArrangementDocument::from_json(&text)?.to_candidate()
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

/// Parses a flag that must be a positive integer, given as a coordinate
/// expression (so "4", "8/2" and "2+2" are all accepted).
fn positive_integer(flag: &str, value: Option<&str>) -> Result<u32, CliError> {
    let text =
        value.ok_or_else(|| CliError::input(format!("missing required flag --{flag}")))?;
    let parsed = Cyclo::parse_infer(text)
        .map_err(|e| CliError::input(format!("--{flag}: {e}")))?;
    let rational = parsed
        .as_rational()
        .ok_or_else(|| CliError::input(format!("--{flag} must be rational")))?;
    if !rational.is_integer() {
        return Err(CliError::input(format!("--{flag} must be an integer")));
    }
    let value: i64 = rational
        .to_integer()
        .try_into()
        .map_err(|_| CliError::input(format!("--{flag} out of range")))?;
    u32::try_from(value)
        .ok()
        .filter(|&v| v >= 1)
        .ok_or_else(|| CliError::input(format!("--{flag} must be a positive integer")))
}

fn expression(flag: &str, value: Option<&str>) -> Result<Cyclo, CliError> {
    let text =
        value.ok_or_else(|| CliError::input(format!("missing required flag --{flag}")))?;
    Cyclo::parse_infer(text).map_err(|e| CliError::input(format!("--{flag}: {e}")))
}

fn cmd_construct(
    family: Family,
    n: Option<String>,
    k: Option<String>,
    lambda: Option<String>,
    mu: Option<String>,
    out: Option<PathBuf>,
) -> Result<u8, CliError> {
    let mut params: std::collections::BTreeMap<String, String> = Default::default();
    let candidate = match family {
        Family::Fermat => {
            let n = positive_integer("n", n.as_deref())?;
            params.insert("n".into(), n.to_string());
            fermat(n)
        }
        Family::Monomial => {
            let n = positive_integer("n", n.as_deref())?;
            params.insert("n".into(), n.to_string());
            monomial_g_n13(n)
        }
        Family::Hesse => hesse(),
        Family::Z2z2 => z2z2_net(),
        Family::Trivial => {
            let k = positive_integer("k", k.as_deref())?;
            if k < 3 {
                return Err(CliError::input("--k must be at least 3"));
            }
            params.insert("k".into(), k.to_string());
            trivial_pencil(k as usize)
        }
        Family::Stipins33 | Family::Light34 => {
            let l = expression("lambda", lambda.as_deref())?;
            let m = expression("mu", mu.as_deref())?;
            params.insert("lambda".into(), l.to_string());
            params.insert("mu".into(), m.to_string());
            let fp = FamilyParams::new(l, m);
            let built = if family == Family::Stipins33 {
                stipins33(&fp)
            } else {
                light34(&fp)
            };
            built.map_err(|e| CliError::input(e.to_string()))?
        }
    };
    let name = match family {
        Family::Fermat => "fermat",
        Family::Monomial => "monomial",
        Family::Hesse => "hesse",
        Family::Stipins33 => "stipins33",
        Family::Light34 => "light34",
        Family::Z2z2 => "z2z2",
        Family::Trivial => "trivial",
    };
    let doc = ArrangementDocument::from_candidate(
        &candidate,
        Some(Metadata {
            name: Some(name.into()),
            params: (!params.is_empty()).then_some(params),
        }),
    );
    write_output(out.as_deref(), &doc.to_json())?;
    Ok(0)
}

fn cmd_induce(
    n: &str,
    plane: &str,
    out: Option<PathBuf>,
    format: Format,
) -> Result<u8, CliError> {
    let n = positive_integer("n", Some(n))?;
    let parts: Vec<&str> = plane.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError::input(
            "--plane needs exactly four comma-separated coordinates",
        ));
    }
    let mut coords = Vec::with_capacity(4);
    for part in &parts {
        coords.push(
            Cyclo::parse_infer(part.trim())
                .map_err(|e| CliError::input(format!("--plane: {e}")))?,
        );
    }
    let coords: [Cyclo; 4] = coords.try_into().expect("four coordinates");
    let result = induce(n, coords).map_err(|e| match e {
        InduceError::CrossBlockCoincidence(_) => CliError::input(format!(
            "{e}; the induced combinatorics is reported as unknown"
        )),
        other => CliError::input(other.to_string()),
    })?;
    let induced_type = classify_induced(&result);
    let arrangement_doc = ArrangementDocument::from_candidate(
        &result.arrangement,
        Some(Metadata {
            name: Some(format!("induced from Q_{n}")),
            params: Some(
                [("plane".to_string(), plane.to_string())]
                    .into_iter()
                    .collect(),
            ),
        }),
    );
    write_output(out.as_deref(), &arrangement_doc.to_json())?;
    let mut verdict = report::build(&result.arrangement, true);
    verdict.induced_type = Some(induced_type.tag.to_string());
    verdict.induced_evidence = Some(induced_type.evidence.clone());
    verdict.canceled = Some(
        result
            .canceled
            .iter()
            .map(|(l, m)| format!("{l} x{m}"))
            .collect(),
    );
    println!("{}", report::emit(&verdict, format));
    Ok(0)
}

fn parse_group(spec: &str) -> Result<GroupSpec, CliError> {
    if spec == "klein" {
        return Ok(GroupSpec::Klein);
    }
    let parse_order = |rest: &str| -> Result<u32, CliError> {
        rest.parse()
            .map_err(|_| CliError::input(format!("invalid group order in {spec:?}")))
    };
    if let Some(rest) = spec.strip_prefix("cyclic:") {
        return Ok(GroupSpec::Cyclic(parse_order(rest)?));
    }
    if let Some(rest) = spec.strip_prefix("dihedral:") {
        return Ok(GroupSpec::Dihedral(parse_order(rest)?));
    }
    Err(CliError::input(format!(
        "unknown group {spec:?}; use klein, cyclic:N or dihedral:N"
    )))
}

fn cmd_latin(input: &Path, group: Option<String>) -> Result<u8, CliError> {
    let c = load(input)?;
    let m = VerifiedMultinet::new(c)
        .map_err(|e| CliError::input(format!("not a verified multinet: {e}")))?;
    let latin = m
        .extract_latin()
        .map_err(|e| CliError::input(e.to_string()))?;
    print!("{latin}");
    match group {
        None => Ok(0),
        Some(spec) => {
            let g = parse_group(&spec)?;
            let isotopic =
                isotopic_to_group(&latin, &g).map_err(|e| CliError::input(e.to_string()))?;
            println!(
                "isotopic to {g}: {}",
                if isotopic { "yes" } else { "no" }
            );
            Ok(if isotopic { 0 } else { 1 })
        }
    }
}
