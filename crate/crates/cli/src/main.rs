mod cache;
mod eval;
mod expr;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mzvlab::catalog::{self, conjecture_summary, parse_value, render, Params, VerificationReport};
use mzvlab::{Backend, PrecisionConfig};

use cache::{Cache, CacheEntry};
use eval::Record;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] mzvlab::Error),
    #[error("cannot access {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed cache line {line} in {path}: {source}")]
    CacheLine { path: String, line: usize, source: serde_json::Error },
    #[error("JSON output failed: {0}")]
    Json(serde_json::Error),
    #[error("CSV output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("--param expects key=value, got '{0}'")]
    ParamSyntax(String),
    #[error("no cache path: pass --cache, set {}, or set HOME", cache::ENV_VAR)]
    NoCachePath,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Auto,
    Direct,
    Holder,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Auto => Backend::Auto,
            BackendArg::Direct => Backend::Direct,
            BackendArg::Holder => Backend::Holder,
        }
    }
}

/// Multiple zeta values and relatives: evaluation and identity checks.
#[derive(Debug, Parser)]
#[command(name = "mzvlab", version)]
struct Cli {
    /// Working precision in decimal digits.
    #[arg(long, global = true, default_value_t = 40)]
    digits: u32,
    /// Term cutoff for direct series.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_terms: u64,
    #[arg(long, global = true, value_enum, default_value_t = BackendArg::Auto)]
    backend: BackendArg,
    /// Overrides each identity's default tolerance.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Constants cache (line-delimited JSON); defaults to $MZVLAB_CACHE.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Worker threads for checks; each check runs on one thread.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate expressions such as `zeta(2,1)` or `li(2,1; 1/2)`.
    Eval {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Check one identity, on its default grid unless parameters are given.
    Verify {
        id: String,
        /// Parameter as key=value, e.g. m=1,2 or x=1/2; repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Check every identity whose id matches the filter.
    Suite {
        /// Case-insensitive id prefix, or a pattern with `*`.
        #[arg(long)]
        filter: Option<String>,
    },
    /// List identities.
    List {
        #[arg(long)]
        filter: Option<String>,
    },
    /// Print the basic constants.
    Constants,
    /// Inspect or reset the constants cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Subcommand)]
enum CacheAction {
    Show,
    Clear,
}

impl Cli {
    fn config(&self) -> Result<PrecisionConfig, CliError> {
        let cfg = PrecisionConfig {
            digits: self.digits,
            max_terms: self.max_terms,
            backend: self.backend.into(),
            tolerance: self.tolerance,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn open_cache(&self) -> Result<Option<Cache>, CliError> {
        cache::default_path(self.cache.as_deref()).map(Cache::open).transpose()
    }
}

/// Serializes rows of strings as CSV with one header row.
fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Csv(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields"))
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v).map_err(CliError::Json)?;
    s.push('\n');
    Ok(s)
}

const REPORT_FIELDS: [&str; 10] =
    ["id", "params", "lhs", "rhs", "abs_diff", "tolerance", "bound", "passed", "terms_used", "seconds"];

fn report_row(r: &VerificationReport) -> Vec<String> {
    vec![
        r.id.clone(),
        render(&r.params),
        r.lhs.clone(),
        r.rhs.clone(),
        r.abs_diff.clone(),
        r.tolerance.clone(),
        r.bound.clone(),
        r.passed.to_string(),
        r.terms_used.to_string(),
        format!("{:.3}", r.seconds),
    ]
}

fn reports_text(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let verdict = match (r.counts(), r.passed) {
            (false, _) => "NOTE",
            (true, true) => "PASS",
            (true, false) => "FAIL",
        };
        let detail = match &r.error {
            Some(e) => format!("error: {e}"),
            None => format!("|diff| {} (tol {}, bound {})", r.abs_diff, r.tolerance, r.bound),
        };
        s += &format!("{verdict} {} [{}] {detail} {:.2}s\n", r.id, render(&r.params), r.seconds);
    }
    let counted: Vec<_> = reports.iter().filter(|r| r.counts()).collect();
    let failed = counted.iter().filter(|r| !r.passed).count();
    s += &format!("{} checks, {} passed, {} failed\n", counted.len(), counted.len() - failed, failed);
    for (id, worst) in conjecture_summary(reports) {
        s += &format!("conjecture {id}: max |diff| {worst:.3e} (not counted)\n");
    }
    s
}

fn format_reports(reports: &[VerificationReport], format: Format) -> Result<String, CliError> {
    match format {
        Format::Text => Ok(reports_text(reports)),
        Format::Json => json(&reports),
        Format::Csv => csv_table(&REPORT_FIELDS, reports.iter().map(report_row)),
    }
}

fn format_records(records: &[Record], format: Format) -> Result<String, CliError> {
    match format {
        Format::Text => Ok(records
            .iter()
            .map(|r| match (&r.value, &r.result) {
                (Some(v), _) => format!(
                    "{} = {v} ± {} ({}, {} terms)\n",
                    r.expr,
                    r.bound.as_deref().unwrap_or(""),
                    r.bound_kind.as_deref().unwrap_or(""),
                    r.terms.unwrap_or(0)
                ),
                (None, Some(res)) => format!("{} = {res}\n", r.expr),
                (None, None) => format!("{}\n", r.expr),
            })
            .collect()),
        Format::Json => json(&records),
        Format::Csv => csv_table(&Record::FIELDS, records.iter().map(Record::row)),
    }
}

fn format_cache(entries: &[&CacheEntry], format: Format) -> Result<String, CliError> {
    const FIELDS: [&str; 8] =
        ["expr", "config", "digits", "value", "bound", "bound_kind", "terms", "timestamp"];
    match format {
        Format::Text => Ok(entries
            .iter()
            .map(|e| format!("{} [{}; digits={}] = {} ± {}\n", e.expr, e.config, e.digits, e.value, e.bound))
            .collect()),
        Format::Json => json(&entries),
        Format::Csv => csv_table(
            &FIELDS,
            entries.iter().map(|e| {
                vec![
                    e.expr.clone(),
                    e.config.clone(),
                    e.digits.to_string(),
                    e.value.clone(),
                    e.bound.clone(),
                    e.bound_kind.clone(),
                    e.terms.to_string(),
                    e.timestamp.to_string(),
                ]
            }),
        ),
    }
}

fn parse_params(items: &[String]) -> Result<Params, CliError> {
    let mut p = Params::new();
    for item in items {
        let (k, v) = item.split_once('=').ok_or_else(|| CliError::ParamSyntax(item.clone()))?;
        p.insert(k.trim().to_string(), parse_value(v)?);
    }
    Ok(p)
}

/// Output text and whether every counted check passed.
fn run(cli: &Cli) -> Result<(String, bool), CliError> {
    let cfg = cli.config()?;
    if let Some(n) = cli.jobs {
        // only fails if the pool already exists, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let all_pass = |reports: &[VerificationReport]| reports.iter().filter(|r| r.counts()).all(|r| r.passed);
    match &cli.command {
        Command::Eval { exprs } => {
            let parsed = exprs
                .iter()
                .map(|t| expr::parse_expression(t).map_err(|e| annotate(t, e)))
                .collect::<Result<Vec<_>, _>>()?;
            let mut cache = cli.open_cache()?;
            let records = parsed
                .iter()
                .map(|e| eval::evaluate(e, &cfg, cache.as_mut()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((format_records(&records, cli.format)?, true))
        }
        Command::Verify { id, params } => {
            let entry = catalog::find(id)?;
            let reports = if params.is_empty() && entry.params.iter().any(|s| !s.optional) {
                catalog::run_suite(Some(entry.id), &cfg).into_iter().filter(|r| r.id == entry.id).collect()
            } else {
                vec![catalog::verify(entry.id, &parse_params(params)?, &cfg)?]
            };
            Ok((format_reports(&reports, cli.format)?, all_pass(&reports)))
        }
        Command::Suite { filter } => {
            let reports = catalog::run_suite(filter.as_deref(), &cfg);
            Ok((format_reports(&reports, cli.format)?, all_pass(&reports)))
        }
        Command::List { filter } => {
            let entries = catalog::list_identities(filter.as_deref());
            let text = match cli.format {
                Format::Text => entries
                    .iter()
                    .map(|e| {
                        let ps: Vec<_> = e.params.iter().map(|s| s.describe()).collect();
                        format!(
                            "{} ({}, {} checks) [{}]\n    {}\n",
                            e.id,
                            e.status,
                            e.grid().len(),
                            ps.join(", "),
                            e.anchor
                        )
                    })
                    .collect(),
                Format::Json => json(
                    &entries
                        .iter()
                        .map(|e| {
                            serde_json::json!({
                                "id": e.id,
                                "status": e.status.to_string(),
                                "anchor": e.anchor,
                                "params": e.params.iter().map(|s| s.describe()).collect::<Vec<_>>(),
                                "default_tolerance": e.default_tolerance,
                                "grid_size": e.grid().len(),
                            })
                        })
                        .collect::<Vec<_>>(),
                )?,
                Format::Csv => csv_table(
                    &["id", "status", "default_tolerance", "grid_size", "anchor"],
                    entries.iter().map(|e| {
                        vec![
                            e.id.to_string(),
                            e.status.to_string(),
                            format!("{:e}", e.default_tolerance),
                            e.grid().len().to_string(),
                            e.anchor.to_string(),
                        ]
                    }),
                )?,
            };
            Ok((text, true))
        }
        Command::Constants => {
            let mut cache = cli.open_cache()?;
            let records = eval::constants(&cfg, cache.as_mut())?;
            Ok((format_records(&records, cli.format)?, true))
        }
        Command::Cache { action } => {
            let path = cache::default_path(cli.cache.as_deref()).ok_or(CliError::NoCachePath)?;
            let mut cache = Cache::open(path)?;
            match action {
                CacheAction::Show => Ok((format_cache(&cache.entries(), cli.format)?, true)),
                CacheAction::Clear => {
                    let n = cache.entries().len();
                    cache.clear()?;
                    Ok((format!("removed {n} entries from {}\n", cache.path().display()), true))
                }
            }
        }
    }
}

/// Adds the source line and a caret under the offending offset.
fn annotate(text: &str, e: mzvlab::Error) -> CliError {
    if let mzvlab::Error::Syntax { offset, message } = &e {
        let col = text[..(*offset).min(text.len())].chars().count();
        let message = format!("{message}\n  {text}\n  {}^", " ".repeat(col));
        return CliError::Core(mzvlab::Error::Syntax { offset: *offset, message });
    }
    CliError::Core(e)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text)
                    .map_err(|source| CliError::Io { path: path.display().to_string(), source }),
                None => std::io::stdout()
                    .write_all(text.as_bytes())
                    .map_err(|source| CliError::Io { path: "stdout".into(), source }),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
