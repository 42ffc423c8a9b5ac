use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use metacyclic_core::fixtures::{self, Outcome};
use metacyclic_core::report::{self, ReportOptions};
use metacyclic_core::{cas, classify, scan, Error};

#[derive(Parser)]
#[command(
    name = "metacyclic",
    version,
    about = "Capitulation analysis for Q(⁵√n, ζ₅)"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide which radicand shape n has.
    Classify {
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Full analysis of k = Q(⁵√n, ζ₅).
    Report {
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Append the reasoning behind each conclusion.
        #[arg(long)]
        explain: bool,
        /// Take this h₁ (1..=4) instead of relying on the search.
        #[arg(long)]
        h1: Option<u8>,
    },
    /// Classify every 5th-power-free n in lo..=hi.
    Scan {
        lo: u64,
        hi: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check a fixtures file against the classifier and, optionally, a CAS.
    Verify {
        #[arg(long)]
        fixtures: PathBuf,
        /// Known anomalies; defaults to known_anomalies.json beside the fixtures.
        #[arg(long)]
        anomalies: Option<PathBuf>,
        /// Shell command speaking the line-delimited JSON adapter protocol.
        #[arg(long)]
        cas_cmd: Option<String>,
        #[arg(long, default_value_t = cas::DEFAULT_TIMEOUT.as_secs_f64())]
        cas_timeout: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Write to stdout, treating a closed pipe as success.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn run(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Classify { n, format } => {
            let c = classify::classify_radicand(n)?;
            match format {
                Format::Json => emit(&(json(&c) + "\n")),
                Format::Text => {
                    let mut text = format!("{}\t{}\n", n, c.case.name());
                    if let Some(r) = &c.reason {
                        text.push_str(&format!("# {r}\n"));
                    }
                    emit(&text);
                }
            }
        }
        Cmd::Report {
            n,
            format,
            explain,
            h1,
        } => {
            let r = report::run_report(n, &ReportOptions { h1, explain })?;
            match format {
                Format::Json => emit(&(json(&r) + "\n")),
                Format::Text => emit(&report::render_text(&r)),
            }
        }
        Cmd::Scan {
            lo,
            hi,
            jobs,
            format,
        } => {
            let entries = scan::scan_range(lo, hi, jobs)?;
            match format {
                Format::Json => emit(&(json(&entries) + "\n")),
                Format::Text => emit(&scan::render_scan(&entries)),
            }
        }
        Cmd::Verify {
            fixtures: path,
            anomalies,
            cas_cmd,
            cas_timeout,
            format,
        } => return verify(&path, anomalies, cas_cmd, cas_timeout, format),
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(serde::Serialize)]
struct CasRow {
    n: u64,
    ok: bool,
    detail: String,
}

fn verify(
    path: &Path,
    anomalies: Option<PathBuf>,
    cas_cmd: Option<String>,
    cas_timeout: f64,
    format: Format,
) -> Result<ExitCode, Error> {
    let start = Instant::now();
    let entries = fixtures::load_fixtures(path)?;
    let anomaly_path = anomalies.or_else(|| {
        let p = path.with_file_name("known_anomalies.json");
        p.exists().then_some(p)
    });
    let known = match anomaly_path {
        Some(p) => fixtures::load_anomalies(&p)?,
        None => Vec::new(),
    };
    let summary = fixtures::verify_fixtures(&entries, &known);
    let elapsed = start.elapsed();

    let mut cas_rows = Vec::new();
    if let Some(cmd) = &cas_cmd {
        let timeout = Duration::from_secs_f64(cas_timeout);
        for e in &entries {
            let row = match cas::cas_adapter_check(e.n, cmd, timeout) {
                Ok(got) => {
                    let ok = got.h_k5 == e.h_k5
                        && got.group_type == e.group_type
                        && got.rank_ambiguous == e.rank_ambiguous;
                    CasRow {
                        n: e.n,
                        ok,
                        detail: format!(
                            "h_k5 {} type ({}, {}) rank {}",
                            got.h_k5, got.group_type[0], got.group_type[1], got.rank_ambiguous
                        ),
                    }
                }
                Err(err) => CasRow {
                    n: e.n,
                    ok: false,
                    detail: err.to_string(),
                },
            };
            cas_rows.push(row);
        }
    }
    let cas_failures = cas_rows.iter().filter(|r| !r.ok).count();

    match format {
        Format::Json => emit(
            &(json(&serde_json::json!({
                "summary": summary,
                "cas": cas_rows,
                "elapsed_ms": elapsed.as_millis() as u64,
            })) + "\n"),
        ),
        Format::Text => {
            use std::fmt::Write;
            let mut text = String::new();
            for row in &summary.rows {
                let tag = match row.outcome {
                    Outcome::Pass => "pass",
                    Outcome::KnownAnomaly => "anomaly",
                    Outcome::Fail => "FAIL",
                };
                let case = row.case.map(|c| c.name()).unwrap_or("error");
                let _ = write!(text, "{tag}\t{}\t{case}", row.n);
                if let Some(d) = &row.detail {
                    let _ = write!(text, "\t{d}");
                }
                text.push('\n');
            }
            for r in &cas_rows {
                let status = if r.ok { "ok" } else { "MISMATCH" };
                let _ = writeln!(text, "cas {status}\t{}\t{}", r.n, r.detail);
            }
            let _ = writeln!(
                text,
                "summary: {} pass, {} known anomalies, {} fail ({} ms)",
                summary.pass,
                summary.anomaly,
                summary.fail,
                elapsed.as_millis()
            );
            emit(&text);
        }
    }
    Ok(if summary.fail == 0 && cas_failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
