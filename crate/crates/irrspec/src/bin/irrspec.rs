//! Batch CLI for the experiment harness.
//!
//! Exit codes: 0 when the run's verdict passes, 2 when it fails, 1 on error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use irrspec::explab::{
    emit, parse_config_file, run_experiment, ExperimentConfig, Kind, Mode, OutFormat,
};

#[derive(Parser, Debug)]
#[command(
    name = "irrspec",
    about = "Finite-field scans for simultaneously irreducible specializations",
    after_help = "KINDS:\n  \
        schinzel    count tuples a with every f_i(T^n + a_1 T^(n-1) + ... + a_n) irreducible\n  \
        dirichlet   count irreducible members of the progression a + tau*b*c\n  \
        linespec    count lines X = a*T + b keeping every curve f_i(T, X) irreducible\n  \
        traceform   count irreducible characteristic polynomials of S*B over symmetric S\n  \
        chebotarev  fit observed factorization shapes of F(T, X) against the group model\n\n\
        Any flag may instead come from a key=value config file (--config); \
        command-line flags win."
)]
struct Cli {
    /// Experiment kind (may come from the config file instead).
    kind: Option<String>,

    /// Field spec, `p` or `p^k` (e.g. 5 or 3^2).
    #[arg(long)]
    field: Option<String>,

    /// Input polynomial in the text format (repeatable).
    #[arg(long = "poly")]
    polys: Vec<String>,

    /// Substitution degree (schinzel).
    #[arg(long)]
    n: Option<usize>,

    /// Scan mode: `exhaustive` or `sample:COUNT`.
    #[arg(long)]
    mode: Option<String>,

    /// Seed for all randomized stages.
    #[arg(long)]
    seed: Option<u64>,

    /// Worker-pool size (does not change results).
    #[arg(long)]
    workers: Option<usize>,

    /// Report file path.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Report format: `csv` or `json`.
    #[arg(long)]
    format: Option<String>,

    /// Symmetric matrix B, rows separated by `;` (traceform).
    #[arg(long)]
    matrix: Option<String>,

    /// Minimum hit count the verdict must reach (linespec).
    #[arg(long = "A")]
    a_min: Option<u64>,

    /// Degree of the progression multiplier c (dirichlet).
    #[arg(long)]
    m: Option<usize>,

    /// key=value config file; command-line flags override its keys.
    #[arg(long)]
    config: Option<PathBuf>,
}

fn build_config(cli: &Cli) -> Result<ExperimentConfig, String> {
    let mut cli_set: Vec<&str> = Vec::new();
    let kind: Option<Kind> = match &cli.kind {
        Some(k) => {
            cli_set.push("kind");
            Some(k.parse().map_err(|e| format!("{e}"))?)
        }
        None => None,
    };

    let file = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            Some(parse_config_file(&text).map_err(|e| format!("{e}"))?)
        }
        None => None,
    };

    let file_kind = file
        .as_ref()
        .and_then(|f| f.get("kind"))
        .and_then(|v| v.last())
        .map(|k| k.parse::<Kind>())
        .transpose()
        .map_err(|e| format!("{e}"))?;
    let kind = kind
        .or(file_kind)
        .ok_or("no experiment kind given (positional argument or config `kind=`)")?;

    let mut cfg = ExperimentConfig::new(kind, "");
    if let Some(field) = &cli.field {
        cfg.field = field.clone();
        cli_set.push("field");
    }
    if !cli.polys.is_empty() {
        cfg.polys = cli.polys.clone();
        cli_set.push("poly");
    }
    if let Some(n) = cli.n {
        cfg.n = Some(n);
        cli_set.push("n");
    }
    if let Some(mode) = &cli.mode {
        cfg.mode = mode.parse::<Mode>().map_err(|e| format!("{e}"))?;
        cli_set.push("mode");
    }
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
        cli_set.push("seed");
    }
    if let Some(workers) = cli.workers {
        cfg.workers = workers;
        cli_set.push("workers");
    }
    if let Some(out) = &cli.out {
        cfg.out = Some(out.clone());
        cli_set.push("out");
    }
    if let Some(format) = &cli.format {
        cfg.format = format.parse::<OutFormat>().map_err(|e| format!("{e}"))?;
        cli_set.push("format");
    }
    if let Some(matrix) = &cli.matrix {
        cfg.matrix = Some(matrix.clone());
        cli_set.push("matrix");
    }
    if let Some(a) = cli.a_min {
        cfg.a_min = Some(a);
        cli_set.push("A");
    }
    if let Some(m) = cli.m {
        cfg.m_deg = Some(m);
        cli_set.push("m");
    }

    if let Some(file) = &file {
        cfg.apply_file(file, &cli_set).map_err(|e| format!("{e}"))?;
    }
    if cfg.field.is_empty() {
        return Err("no field given (--field or config `field=`)".into());
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match build_config(&cli) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("irrspec: {msg}");
            return ExitCode::from(1);
        }
    };
    match run_experiment(&cfg) {
        Ok(report) => {
            println!("{} over F via {}", cfg.kind.as_str(), cfg.field);
            println!("{}", report.summary());
            if let Some(path) = &cfg.out {
                if let Err(e) = emit(&report, cfg.format, path) {
                    eprintln!("irrspec: {e}");
                    return ExitCode::from(1);
                }
                println!("report written to {}", path.display());
            } else {
                // No file requested: print the report itself.
                print!("{}", String::from_utf8_lossy(&report.bytes(cfg.format)));
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("irrspec: {e}");
            ExitCode::from(1)
        }
    }
}
