//! gml: Gaussian integral means of entire functions.
//!
//! Subcommands: `means` (three-route evaluation over a radius list),
//! `convexity` (log-log classification and transition radii), `trace`
//! (Carleson-type statistics and trace ratios for a measure), and
//! `verify-paper` (the full verification suite).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/input error,
//! 3 numerical nonconvergence. GML_THREADS caps worker threads.

use clap::{Parser, Subcommand};
use gml_cli::commands::{self, ConvexityArgs, MeansArgs, TraceArgs};
use gml_cli::report::OutputFormat;
use gml_cli::{coeffs, measures, verify, RunConfig};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gml", version, about = "Gaussian integral means laboratory")]
struct Cli {
    /// Output format: table, csv, or json
    #[arg(long, global = true, default_value = "table")]
    format: String,
    /// Write the report to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized sweeps
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Gaussian integral means of a polynomial over a radius list
    Means {
        /// Comma-separated coefficients a0,a1,... (reals or re+imi literals)
        #[arg(long)]
        coeffs: String,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        alpha: f64,
        /// Comma-separated evaluation radii
        #[arg(long)]
        radii: String,
    },
    /// Log-log convexity classification and transition radii
    Convexity {
        /// Monomial degree k (classification mode)
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        /// Scan window in the x = r^2 variable
        #[arg(long, default_value_t = 100.0)]
        x_max: f64,
        /// Locate the limit-indicator root
        #[arg(long, default_value_t = false)]
        remark_g0: bool,
        /// Analyze the linear map a + z with c = |a|^2
        #[arg(long)]
        remark_c: Option<f64>,
    },
    /// Carleson-type statistics and trace ratios for a measure
    Trace {
        /// Built-in name (lebesgue, atom0, gaussian, growing) or JSON path
        #[arg(long)]
        measure: String,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long, default_value_t = 2.0)]
        q: f64,
        #[arg(long, default_value_t = 0)]
        m: u32,
        /// Ball radius
        #[arg(long, default_value_t = 1.0)]
        r: f64,
        /// Lattice spacing (default r/2)
        #[arg(long)]
        s: Option<f64>,
        /// Lattice truncation radius (default 10 max(1, r))
        #[arg(long)]
        r_trunc: Option<f64>,
        /// Monomial family size for the trace-ratio sweep
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    /// Run the verification suite
    VerifyPaper {
        /// Restrict to one criterion (id or slug)
        #[arg(long)]
        only: Option<String>,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("GML_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        }
    }
    let cli = Cli::parse();
    let format = match cli.format.parse::<OutputFormat>() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("gml: {e}");
            return ExitCode::from(2);
        }
    };
    let config = RunConfig { format, out: cli.out.clone(), seed: cli.seed };
    match run(&cli.command, &config) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("gml: {err}");
            ExitCode::from(match err.downcast_ref::<gml::Error>() {
                Some(gml::Error::NonConvergence { .. }) | Some(gml::Error::NodeCap { .. }) => 3,
                _ => 2,
            })
        }
    }
}

fn run(command: &Command, config: &RunConfig) -> anyhow::Result<ExitCode> {
    match command {
        Command::Means { coeffs: coeff_text, p, alpha, radii } => {
            let coeffs = coeffs::parse_coeffs(coeff_text).map_err(anyhow::Error::msg)?;
            let radii: Vec<f64> = radii
                .split(',')
                .map(|s| s.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|e| anyhow::anyhow!("bad radius list: {e}"))?;
            let mut report = commands::run_means(&MeansArgs {
                coeffs,
                p: *p,
                alpha: *alpha,
                radii,
            })?;
            report.seed = Some(config.seed);
            config.emit(&report.render(config.format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Convexity { k, p, alpha, x_max, remark_g0, remark_c } => {
            let args = if *remark_g0 {
                ConvexityArgs::RemarkG0
            } else if let Some(c) = remark_c {
                ConvexityArgs::RemarkLinear { c: *c, x_max: x_max.min(20.0) }
            } else {
                match (k, alpha) {
                    (Some(k), Some(alpha)) => ConvexityArgs::Classify {
                        k: *k,
                        p: *p,
                        alpha: *alpha,
                        x_max: *x_max,
                    },
                    _ => anyhow::bail!(
                        "convexity needs either --remark-g0, --remark-c C, or both --k and --alpha"
                    ),
                }
            };
            let mut report = commands::run_convexity(&args)?;
            report.seed = Some(config.seed);
            config.emit(&report.render(config.format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Trace { measure, p, q, m, r, s, r_trunc, max_degree } => {
            let (mu, name) = measures::load_measure(measure, *m, *q)?;
            let mut report = commands::run_trace(&TraceArgs {
                measure: mu,
                measure_name: name,
                p: *p,
                q: *q,
                m: *m,
                r: *r,
                s: *s,
                r_trunc: *r_trunc,
                max_degree: *max_degree,
            })?;
            report.seed = Some(config.seed);
            config.emit(&report.render(config.format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { only } => {
            let outcomes =
                verify::run_all(config.seed, only.as_deref()).map_err(anyhow::Error::msg)?;
            let text = match config.format {
                OutputFormat::Json => verify::report_json(&outcomes, config.seed),
                _ => verify::report_table(&outcomes, config.seed),
            };
            config.emit(&text)?;
            if outcomes.iter().all(|c| c.passed) {
                Ok(ExitCode::SUCCESS)
            } else {
                let failing: Vec<&str> =
                    outcomes.iter().filter(|c| !c.passed).map(|c| c.slug).collect();
                eprintln!("gml: failing criteria: {}", failing.join(", "));
                Ok(ExitCode::from(1))
            }
        }
    }
}
