//! Command-line plumbing: loading inputs, rendering reports and the
//! catalog matrix.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rdfco::inference::materialize;
use rdfco::model::catalog::{
    catalog, classification_matrix, Bucket, CatalogEntry, Complexity, ContextDim, Support,
    LANGUAGES,
};
use rdfco::model::{
    parse_rcf, render_dl, resolve, serialize_rcf, ConstraintSet, ResolvedSet, Severity,
};
use rdfco::rdf::{parse_data, serialize_ntriples, Graph};
use rdfco::shex::{compile_shapes, parse_shexc};
use rdfco::validator::{validate, ValidationConfig, ValidationReport};

pub const EXIT_CONFORMS: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "rdfco",
    version,
    about = "Validate RDF data against generic constraints and shapes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check data against constraint files and shapes.
    Validate(ValidateArgs),
    /// Print the inference closure of the data as N-Triples.
    Infer(InferArgs),
    /// Shapes to constraint rows, or constraint rows to description logic.
    Translate(TranslateArgs),
    /// Print the constraint type catalog and its classification matrix.
    Catalog(CatalogArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Sources {
    /// Data file (Turtle, or N-Triples when it ends in .nt).
    #[arg(short = 'd', long = "data")]
    pub data: Vec<PathBuf>,
    /// Constraint file in RCF syntax.
    #[arg(short = 'c', long = "constraints")]
    pub constraints: Vec<PathBuf>,
    /// Shape file in compact ShEx syntax.
    #[arg(short = 's', long = "shex")]
    pub shex: Vec<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Assumptions {
    /// Closed world: missing facts count as violations (default).
    #[arg(long, overrides_with = "no_cwa")]
    pub cwa: bool,
    /// Open world: absence-based findings drop to warnings.
    #[arg(long)]
    pub no_cwa: bool,
    /// Distinct names denote distinct things (default).
    #[arg(long, overrides_with = "no_una")]
    pub una: bool,
    /// Allow owl:sameAs merging; implies --infer.
    #[arg(long)]
    pub no_una: bool,
    /// Materialise inferences before checking.
    #[arg(long)]
    pub infer: bool,
    /// Comma-separated inference rule names to run.
    #[arg(long, value_delimiter = ',')]
    pub rules: Option<Vec<String>>,
}

impl Assumptions {
    pub fn config(&self) -> ValidationConfig {
        let una = !self.no_una;
        ValidationConfig {
            cwa: !self.no_cwa,
            una,
            infer: self.infer || !una,
            rules: self.rules.clone(),
            ..ValidationConfig::default()
        }
    }
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub sources: Sources,
    #[command(flatten)]
    pub assumptions: Assumptions,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Violations below this level do not break conformance.
    #[arg(long, default_value = "info", value_parser = parse_severity)]
    pub severity_floor: Severity,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Stamp the report with the current time.
    #[arg(long)]
    pub timestamp: bool,
}

#[derive(Args, Debug)]
pub struct InferArgs {
    #[command(flatten)]
    pub sources: Sources,
    #[command(flatten)]
    pub assumptions: Assumptions,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TranslateArgs {
    /// A .shex or .rcf file.
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CatalogArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Only list description-logic expressible types.
    #[arg(long)]
    pub dl_only: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_severity(s: &str) -> Result<Severity, String> {
    Severity::parse(s)
        .ok_or_else(|| format!("unknown severity '{s}', expected info, warning or error"))
}

/// Exit status plus the document to emit.
#[derive(Debug)]
pub struct Outcome {
    pub status: i32,
    pub output: String,
}

/// Runs a parsed invocation; input problems are errors, which callers map
/// to `EXIT_INPUT`.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let (outcome, out) = match &cli.command {
        Command::Validate(a) => (cmd_validate(a)?, &a.out),
        Command::Infer(a) => (cmd_infer(a)?, &a.out),
        Command::Translate(a) => (cmd_translate(&a.input)?, &a.out),
        Command::Catalog(a) => (cmd_catalog(a.format, a.dl_only), &a.out),
    };
    match out {
        Some(path) => {
            fs::write(path, &outcome.output)
                .with_context(|| format!("cannot write {}", path.display()))?;
            Ok(Outcome {
                status: outcome.status,
                output: String::new(),
            })
        }
        None => Ok(outcome),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn load_graph(paths: &[PathBuf]) -> Result<Graph> {
    let mut g = Graph::new();
    for p in paths {
        let src = read(p)?;
        let part =
            parse_data(&p.to_string_lossy(), &src).with_context(|| format!("{}", p.display()))?;
        for t in part.iter() {
            g.insert(t.clone());
        }
    }
    Ok(g)
}

/// RCF files and compiled shapes, merged and resolved.
pub fn load_constraints(rcf: &[PathBuf], shex: &[PathBuf]) -> Result<ResolvedSet> {
    let mut set = ConstraintSet::default();
    for p in rcf {
        let part = parse_rcf(&read(p)?).with_context(|| format!("{}", p.display()))?;
        set.merge(part)
            .with_context(|| format!("{}", p.display()))?;
    }
    for p in shex {
        let shapes = parse_shexc(&read(p)?).with_context(|| format!("{}", p.display()))?;
        let part = compile_shapes(&shapes).with_context(|| format!("{}", p.display()))?;
        set.merge(part)
            .with_context(|| format!("{}", p.display()))?;
    }
    Ok(resolve(set)?)
}

pub fn cmd_validate(a: &ValidateArgs) -> Result<Outcome> {
    if a.sources.data.is_empty() {
        bail!("validate needs at least one data file (-d)");
    }
    if a.sources.constraints.is_empty() && a.sources.shex.is_empty() {
        bail!("validate needs at least one constraint file (-c) or shape file (-s)");
    }
    let graph = load_graph(&a.sources.data)?;
    let set = load_constraints(&a.sources.constraints, &a.sources.shex)?;
    let config = ValidationConfig {
        severity_floor: a.severity_floor,
        ..a.assumptions.config()
    };
    let report = validate(&graph, &set, &config)?;
    let stamp = a
        .timestamp
        .then(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
    let output = match a.format {
        Format::Json => report_json(&report, stamp.as_deref()),
        Format::Text => report_text(&report, stamp.as_deref()),
    };
    let status = if report.conforms() {
        EXIT_CONFORMS
    } else {
        EXIT_VIOLATIONS
    };
    Ok(Outcome { status, output })
}

pub fn cmd_infer(a: &InferArgs) -> Result<Outcome> {
    if a.sources.data.is_empty() {
        bail!("infer needs at least one data file (-d)");
    }
    let graph = load_graph(&a.sources.data)?;
    let set = load_constraints(&a.sources.constraints, &a.sources.shex)?;
    let config = ValidationConfig {
        infer: true,
        ..a.assumptions.config()
    };
    let closed = materialize(&graph, &set, &config)?;
    Ok(Outcome {
        status: EXIT_CONFORMS,
        output: serialize_ntriples(&closed),
    })
}

pub fn cmd_translate(input: &Path) -> Result<Outcome> {
    let src = read(input)?;
    let output = match input.extension().and_then(|e| e.to_str()) {
        Some("shex") => {
            let shapes = parse_shexc(&src)?;
            serialize_rcf(&compile_shapes(&shapes)?)
        }
        Some("rcf") => {
            let set = parse_rcf(&src)?;
            let mut out = String::new();
            for row in &set.rows {
                match render_dl(row) {
                    Ok(dl) => writeln!(out, "{}: {dl}", row.id)?,
                    Err(e) => writeln!(out, "{}: {e}", row.id)?,
                }
            }
            out
        }
        _ => bail!(
            "translate expects a .shex or .rcf file, got {}",
            input.display()
        ),
    };
    Ok(Outcome {
        status: EXIT_CONFORMS,
        output,
    })
}

#[derive(Serialize)]
struct JsonConfig {
    cwa: bool,
    una: bool,
    infer: bool,
}

#[derive(Serialize)]
struct JsonViolation<'a> {
    constraint: &'a str,
    #[serde(rename = "type")]
    kind: &'a str,
    focus: String,
    severity: &'a str,
    detail: &'a str,
}

#[derive(Serialize)]
struct JsonCounts {
    info: usize,
    warning: usize,
    error: usize,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    conforms: bool,
    config: JsonConfig,
    violations: Vec<JsonViolation<'a>>,
    counts: JsonCounts,
    #[serde(skip_serializing_if = "Option::is_none")]
    timestamp: Option<&'a str>,
}

pub fn report_json(report: &ValidationReport, timestamp: Option<&str>) -> String {
    let c = report.counts();
    let doc = JsonReport {
        conforms: report.conforms(),
        config: JsonConfig {
            cwa: report.config.cwa,
            una: report.config.una,
            infer: report.config.infer,
        },
        violations: report
            .violations
            .iter()
            .map(|v| JsonViolation {
                constraint: &v.constraint_id,
                kind: v.type_name(),
                focus: v.focus.to_string(),
                severity: v.severity.name(),
                detail: &v.detail,
            })
            .collect(),
        counts: JsonCounts {
            info: c.info,
            warning: c.warning,
            error: c.error,
        },
        timestamp,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

pub fn report_text(report: &ValidationReport, timestamp: Option<&str>) -> String {
    let mut out = String::new();
    let cfg = &report.config;
    let flag = |b: bool| if b { "on" } else { "off" };
    if let Some(t) = timestamp {
        let _ = writeln!(out, "generated {t}");
    }
    let _ = writeln!(
        out,
        "cwa {}, una {}, infer {}",
        flag(cfg.cwa),
        flag(cfg.una),
        flag(cfg.infer)
    );
    for v in &report.violations {
        let _ = writeln!(out, "{v}");
    }
    let c = report.counts();
    let verdict = if report.conforms() {
        "conforms"
    } else {
        "does not conform"
    };
    let _ = writeln!(
        out,
        "{verdict}: {} error(s), {} warning(s), {} info",
        c.error, c.warning, c.info
    );
    out
}

#[derive(Serialize)]
struct JsonBucket {
    label: &'static str,
    count: usize,
    percent: f64,
}

impl From<&Bucket> for JsonBucket {
    fn from(b: &Bucket) -> Self {
        JsonBucket {
            label: b.label,
            count: b.count,
            percent: b.percent(),
        }
    }
}

#[derive(Serialize)]
struct JsonMatrix {
    total: usize,
    context: Vec<JsonBucket>,
    complexity: Vec<JsonBucket>,
    dl: Vec<JsonBucket>,
}

#[derive(Serialize)]
struct JsonEntry {
    name: &'static str,
    requirements: &'static [&'static str],
    context: &'static str,
    complexity: &'static str,
    dl: bool,
    cwa: bool,
    una: bool,
    inference: bool,
    support: std::collections::BTreeMap<&'static str, &'static str>,
    elements: Vec<&'static str>,
    implemented: bool,
}

#[derive(Serialize)]
struct JsonCatalog {
    matrix: JsonMatrix,
    types: Vec<JsonEntry>,
}

fn context_name(c: ContextDim) -> &'static str {
    match c {
        ContextDim::Property => "property",
        ContextDim::Class => "class",
        ContextDim::Both => "both",
    }
}

fn complexity_name(c: Complexity) -> &'static str {
    match c {
        Complexity::Simple => "simple",
        Complexity::Sugar => "sugar",
        Complexity::Complex => "complex",
    }
}

fn support_name(s: Support) -> &'static str {
    match s {
        Support::Yes => "yes",
        Support::No => "no",
        Support::Partial => "partial",
    }
}

/// The matrix always covers the full catalog; `dl_only` filters the rows.
pub fn cmd_catalog(format: Format, dl_only: bool) -> Outcome {
    let all = catalog();
    let m = classification_matrix(&all);
    let rows: Vec<&CatalogEntry> = all
        .iter()
        .filter(|e| !dl_only || e.dl_expressible)
        .collect();
    let output = match format {
        Format::Json => {
            let doc = JsonCatalog {
                matrix: JsonMatrix {
                    total: m.total,
                    context: m.context.iter().map(Into::into).collect(),
                    complexity: m.complexity.iter().map(Into::into).collect(),
                    dl: m.dl.iter().map(Into::into).collect(),
                },
                types: rows
                    .iter()
                    .map(|e| JsonEntry {
                        name: e.type_name,
                        requirements: e.requirement_ids,
                        context: context_name(e.context_dim),
                        complexity: complexity_name(e.complexity_dim),
                        dl: e.dl_expressible,
                        cwa: e.cwa_dependent,
                        una: e.una_dependent,
                        inference: e.inference_pre_pass,
                        support: LANGUAGES
                            .iter()
                            .copied()
                            .zip(e.language_support.iter().map(|s| support_name(*s)))
                            .collect(),
                        elements: e.constraining_elements.iter().map(|el| el.name()).collect(),
                        implemented: e.implemented,
                    })
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("catalog serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            let mut section = |title: &str, suffix: &str, buckets: &[Bucket]| {
                let _ = writeln!(out, "{title}");
                for b in buckets {
                    let _ = writeln!(out, "  {}{suffix} {} {b}%", b.label, b.count);
                }
            };
            section("Context", " Constraints", &m.context);
            section("Complexity", "", &m.complexity);
            section("Expressivity", "", &m.dl);
            let _ = writeln!(out, "  Total {} 100.00%", m.total);
            let _ = writeln!(out);
            let _ = writeln!(
                out,
                "{:<58} {:<8} {:<8} {:<3} {:<3} {:<3} {:<4} elements",
                "type", "context", "kind", "dl", "cwa", "una", "impl"
            );
            let yn = |b: bool| if b { "y" } else { "n" };
            for e in &rows {
                let elements: Vec<&str> =
                    e.constraining_elements.iter().map(|el| el.name()).collect();
                let _ = writeln!(
                    out,
                    "{:<58} {:<8} {:<8} {:<3} {:<3} {:<3} {:<4} {}",
                    e.type_name,
                    context_name(e.context_dim),
                    complexity_name(e.complexity_dim),
                    yn(e.dl_expressible),
                    yn(e.cwa_dependent),
                    yn(e.una_dependent),
                    yn(e.implemented),
                    if elements.is_empty() {
                        "-".to_string()
                    } else {
                        elements.join(" ")
                    }
                );
            }
            let _ = writeln!(out, "{} types listed", rows.len());
            out
        }
    };
    Outcome {
        status: EXIT_CONFORMS,
        output,
    }
}
