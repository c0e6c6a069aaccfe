//! Command-line front end for `ktweb-core`.
//!
//! Every subcommand reads one or more JSON documents (see [`input`]) and
//! writes one JSON line per document. `render` writes SVG or CSV files.

pub mod error;
pub mod format;
pub mod input;
pub mod render;
pub mod report;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ktweb_core::{
    canonical_form_with, equivalent, leaf_label, moving_frame_with, separate_with, web_curves, Region,
    Tolerances,
};
use rayon::prelude::*;
use serde_json::Value;

use crate::error::CliError;
use crate::format::to_json;
use crate::input::{parse_document, read_documents, Document};

#[derive(Debug, Parser)]
#[command(name = "ktweb", version, about = "Classify planar Killing tensors, compute moving frames, separate potentials and draw webs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Input file; standard input when absent or "-".
    #[arg(long = "in", global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,

    /// Output file; standard output when absent.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Relative zero tolerance of the floating-point backend.
    #[arg(long, global = true, value_name = "EPS")]
    pub tol: Option<f64>,

    /// Worker threads for batch input.
    #[arg(long, global = true, default_value_t = 1, value_name = "N")]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stratum, web type, deltas and leaf label.
    Classify,
    /// Whether the two parameter sets in "pair" lie on one orbit.
    Equivalent,
    /// Chart, moving frame (θ, a, b) and canonical parameters.
    Frame,
    /// Canonical parameters only.
    Canonical,
    /// Compatibility, first integral and potential in separable coordinates.
    Separate,
    /// Coordinate-web curves as SVG, CSV or JSON.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Plot rectangle x0,y0,x1,y1.
    #[arg(long, default_value = "-3,-3,3,3", value_parser = parse_region, allow_hyphen_values = true)]
    pub region: Region,

    /// Curves per family.
    #[arg(long, default_value_t = 10)]
    pub curves: usize,

    /// Samples per curve.
    #[arg(long, default_value_t = 400)]
    pub samples: usize,

    #[arg(long, value_enum, default_value_t = PlotFormat::Svg)]
    pub format: PlotFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotFormat {
    Svg,
    Csv,
    Json,
}

pub fn parse_region(s: &str) -> Result<Region, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match v.as_slice() {
        &[x0, y0, x1, y1] => Region::new(x0, y0, x1, y1).map_err(|e| e.to_string()),
        _ => Err("expected four comma-separated numbers x0,y0,x1,y1".to_string()),
    }
}

fn tolerances(doc: &Document, cli: &Cli) -> Tolerances {
    let zero = doc.tol.or(cli.tol).unwrap_or(Tolerances::DEFAULT.zero);
    Tolerances {
        zero,
        degenerate: Tolerances::DEFAULT.degenerate.max(zero),
    }
}

fn require_alpha(doc: &Document) -> Result<&ktweb_core::KTParams, CliError> {
    doc.alpha
        .as_ref()
        .ok_or_else(|| CliError::Malformed("missing \"alpha\"".into()))
}

fn numbered(path: &Path, index: usize, total: usize) -> PathBuf {
    if total == 1 {
        return path.to_path_buf();
    }
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("plot");
    let name = match path.extension().and_then(|e| e.to_str()) {
        Some(ext) => format!("{stem}-{}.{ext}", index + 1),
        None => format!("{stem}-{}", index + 1),
    };
    path.with_file_name(name)
}

/// Output of one document: a JSON line, or a file body for `render`.
fn process(cli: &Cli, value: &Value, index: usize, total: usize) -> Result<String, CliError> {
    let doc = parse_document(value)?;
    let tol = tolerances(&doc, cli);
    match &cli.command {
        Command::Classify => {
            let label = leaf_label(require_alpha(&doc)?);
            Ok(to_json(&report::Classification::new(&label)))
        }
        Command::Equivalent => {
            let (p, q) = doc
                .pair
                .as_ref()
                .ok_or_else(|| CliError::Malformed("missing \"pair\"".into()))?;
            Ok(to_json(&report::Equivalence {
                equivalent: equivalent(p, q, tol.zero),
                labels: [
                    report::Classification::new(&leaf_label(p)),
                    report::Classification::new(&leaf_label(q)),
                ],
            }))
        }
        Command::Frame => {
            let f = moving_frame_with(require_alpha(&doc)?, &tol)?;
            Ok(to_json(&report::Frame::new(&f)))
        }
        Command::Canonical => {
            let p = require_alpha(&doc)?;
            let c = canonical_form_with(p, &tol)?;
            Ok(to_json(&report::Canonical {
                stratum: ktweb_core::stratum_with(p, &tol).stratum.as_str(),
                canonical: *c.values(),
                canonical_exact: c
                    .exact()
                    .map(|e| e.iter().map(ktweb_core::scalar::format_rational).collect()),
            }))
        }
        Command::Separate => {
            let v = doc
                .potential
                .as_ref()
                .ok_or_else(|| CliError::Malformed("missing \"potential\"".into()))?;
            let r = separate_with(require_alpha(&doc)?, v, &tol)?;
            Ok(to_json(&report::Separation::new(&r)))
        }
        Command::Render(args) => {
            let plot = web_curves(require_alpha(&doc)?, &args.region, args.curves, args.samples)?;
            let body = match args.format {
                PlotFormat::Json => return Ok(to_json(&report::Plot::new(&plot))),
                PlotFormat::Svg => render::emit_svg(&plot, &args.region),
                PlotFormat::Csv => render::emit_csv(&plot),
            };
            match &cli.out {
                Some(path) => {
                    let path = numbered(path, index, total);
                    std::fs::write(&path, body)?;
                    Ok(to_json(&serde_json::json!({
                        "web": plot.web.as_str(),
                        "polylines": plot.polyline_count(),
                        "singular_points": plot.singular_points.len(),
                        "path": path.display().to_string(),
                    })))
                }
                None => Ok(body),
            }
        }
    }
}

fn error_line(e: &CliError) -> String {
    to_json(&report::ErrorReport {
        error: report::ErrorBody {
            kind: e.kind(),
            message: e.to_string(),
        },
    })
}

/// Runs the command over the input text, returning the output text and the
/// exit code (0 success, 2 domain error, 1 malformed input).
pub fn run_on(cli: &Cli, text: &str) -> Result<(String, u8), CliError> {
    if cli.jobs == 0 {
        return Err(CliError::Malformed("--jobs must be at least 1".into()));
    }
    let docs = read_documents(text);
    if docs.is_empty() {
        return Err(CliError::Malformed("no input documents".into()));
    }
    let total = docs.len();
    let work = |(i, d): (usize, &Result<Value, String>)| match d {
        Ok(v) => process(cli, v, i, total),
        Err(e) => Err(CliError::Malformed(e.clone())),
    };
    let results: Vec<Result<String, CliError>> = if cli.jobs > 1 && total > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build()
            .map_err(|e| CliError::Io(std::io::Error::other(e)))?;
        pool.install(|| docs.par_iter().enumerate().map(work).collect())
    } else {
        docs.iter().enumerate().map(work).collect()
    };
    let mut out = String::new();
    let mut code = 0u8;
    for r in results {
        match r {
            Ok(s) => out.push_str(&s),
            Err(e) => {
                code = match (code, e.exit_code()) {
                    (1, _) | (_, 1) => 1,
                    _ => 2,
                };
                out.push_str(&error_line(&e));
            }
        }
        if !out.ends_with('\n') {
            out.push('\n');
        }
    }
    Ok((out, code))
}

pub fn run(cli: &Cli) -> u8 {
    let text = match &cli.input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map(|_| s)
        }
    };
    let result = text.map_err(CliError::from).and_then(|t| run_on(cli, &t));
    let (body, code) = match result {
        Ok(r) => r,
        Err(e) => (error_line(&e) + "\n", e.exit_code()),
    };
    let render_to_file = matches!(cli.command, Command::Render(_));
    let written = match (&cli.out, render_to_file) {
        (Some(path), false) => std::fs::write(path, body),
        _ => std::io::stdout().lock().write_all(body.as_bytes()),
    };
    match written {
        Ok(()) => code,
        Err(e) => {
            eprintln!("ktweb: {e}");
            1
        }
    }
}
