use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use unclab_core::campaign::{
    cell_campaign, evaluate_witness, map_to_csv, recheck, run_campaign, run_campaign_timed,
    validity_map, MapRow,
};
use unclab_core::specsup::search_extremal_set;
use unclab_core::{Campaign, ClaimId, ClaimReport, MapConfig, Witness, DEFAULT_TOL};

/// Exit status when a check or campaign finds a violation, or a certificate
/// does not recheck.
const EXIT_VIOLATION: u8 = 2;

#[derive(Parser)]
#[command(
    name = "unclab",
    version,
    about = "Check concentration inequalities on concrete instances"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one instance given as {"claim_id", "witness", "tol"?} JSON.
    Check {
        /// JSON file; `-` or nothing reads stdin.
        input: Option<PathBuf>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        override_hypothesis: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a campaign config.
    Campaign {
        config: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run a campaign template over a grid of cells.
    Map {
        config: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Recompute a certificate from its witness.
    Recheck {
        /// Certificate file; `-` or nothing reads stdin.
        input: Option<PathBuf>,
    },
    /// Search arc unions for a larger top concentration than the interval.
    Search {
        #[arg(long)]
        degree: usize,
        /// Half-measure of the arc union.
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = 2)]
        r_max: usize,
        /// Eigenvalue evaluations.
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    tol: Option<f64>,
    /// Quadrature nodes for continuous claims.
    #[arg(long)]
    nodes: Option<usize>,
    #[arg(long)]
    override_hypothesis: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Record wall time in runtime_ms; output is then not reproducible.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CheckRequest {
    claim_id: ClaimId,
    witness: Witness,
    #[serde(default)]
    tol: Option<f64>,
}

impl RunArgs {
    fn apply(&self, c: &mut Campaign) {
        if let Some(s) = self.seed {
            c.seed = s;
        }
        if let Some(t) = self.trials {
            c.trials = t;
        }
        if let Some(t) = self.tol {
            c.tol = t;
        }
        if let Some(n) = self.nodes {
            c.params.nodes = Some(n);
        }
        if self.override_hypothesis {
            c.hypothesis_override = true;
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        None => read_stdin(),
        Some(p) if p.as_os_str() == "-" => read_stdin(),
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
    }
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .context("reading stdin")?;
    Ok(s)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn set_override(w: &mut Witness) {
    match w {
        Witness::Discrete {
            override_hypothesis,
            ..
        }
        | Witness::Continuous {
            override_hypothesis,
            ..
        } => *override_hypothesis = true,
        _ => {}
    }
}

fn status(violation: bool) -> ExitCode {
    if violation {
        ExitCode::from(EXIT_VIOLATION)
    } else {
        ExitCode::SUCCESS
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check {
            input,
            tol,
            override_hypothesis,
            out,
        } => {
            let text = read_input(input.as_deref())?;
            let mut req: CheckRequest =
                serde_json::from_str(&text).context("parsing check request")?;
            if override_hypothesis {
                set_override(&mut req.witness);
            }
            let tol = tol.or(req.tol).unwrap_or(DEFAULT_TOL);
            if !(tol > 0.0 && tol.is_finite()) {
                bail!("tol must be positive, got {tol}");
            }
            let report = evaluate_witness(req.claim_id, &req.witness, tol)?;
            emit(out.as_deref(), &to_json(&report)?)?;
            Ok(status(report.is_violation()))
        }
        Command::Campaign { config, run } => {
            let text = read_input(Some(&config))?;
            let mut c: Campaign = serde_json::from_str(&text).context("parsing campaign config")?;
            run.apply(&mut c);
            let report = if run.timing {
                run_campaign_timed(&c)?
            } else {
                run_campaign(&c)?
            };
            let text = match run.format.unwrap_or(Format::Json) {
                Format::Json => to_json(&report)?,
                Format::Csv => {
                    let row = MapRow {
                        claim: c.claim_id,
                        param1: f64::NAN,
                        param2: f64::NAN,
                        trials: c.trials,
                        violations: report.violations.len(),
                        worst_margin: report.worst_margin,
                        runtime_ms: report.runtime_ms,
                    };
                    map_to_csv(&[row])
                }
            };
            emit(run.out.as_deref(), &text)?;
            Ok(status(!report.violations.is_empty()))
        }
        Command::Map { config, run } => {
            let text = read_input(Some(&config))?;
            let mut m: MapConfig = serde_json::from_str(&text).context("parsing map config")?;
            run.apply(&mut m.template);
            for &cell in &m.cells {
                cell_campaign(&m.template, cell)?;
            }
            let rows = validity_map(&m.template, &m.cells, run.timing)?;
            let text = match run.format.unwrap_or(Format::Csv) {
                Format::Csv => map_to_csv(&rows),
                Format::Json => to_json(&rows)?,
            };
            emit(run.out.as_deref(), &text)?;
            Ok(status(rows.iter().any(|r| r.violations > 0)))
        }
        Command::Recheck { input } => {
            let text = read_input(input.as_deref())?;
            let cert: ClaimReport = serde_json::from_str(&text).context("parsing certificate")?;
            let valid = recheck(&cert)?;
            let verdict = serde_json::json!({ "claim_id": cert.claim_id, "valid": valid });
            emit(None, &to_json(&verdict)?)?;
            Ok(status(!valid))
        }
        Command::Search {
            degree,
            delta,
            r_max,
            budget,
            seed,
            out,
        } => {
            let result = search_extremal_set(degree, delta, r_max, budget, seed)?;
            emit(out.as_deref(), &to_json(&result)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("UNCLAB_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n >= 1)
            .with_context(|| format!("UNCLAB_THREADS must be a positive integer, got {v:?}"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors share the generic error status; 2 is reserved for violations
            return if e.use_stderr() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match configure_threads().and_then(|_| run(cli)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
