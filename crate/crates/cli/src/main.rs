//! Command-line driver for the census, comparison and figure reports.
//!
//! Exit status: 0 on success, 1 when a run finds an invariant violation,
//! 2 on configuration errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use adlv::report::{self, CompareSummary, Format, RunConfig};
use adlv::rootsys::Coweight;
use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "adlv", version, about = "Dimensions of affine Deligne-Lusztig varieties by folding alcove walks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension census of X_x(t^nu) over all x up to a length bound.
    Census(Common),
    /// Census at b = 1 checked against the shrunken-chamber prediction.
    #[command(name = "reuman")]
    Prediction(Common),
    /// A2 census checked against the power-length criterion.
    Lau(Common),
    /// Partial folding shades toward one chamber.
    PartialFolding(Common),
    /// dim X_x(t^nu) compared with dim X_x(1) - l(t^nu)/2.
    CompareB(Common),
    /// Affine Grassmannian dimensions for dominant mu with <2rho, mu> <= --max-len.
    Grass(Common),
    /// Levi reduction, branching and image checks for <2rho, mu> <= --max-len.
    LeviCheck(Common),
    /// SVG picture of a rank 2 census.
    Render(Common),
}

#[derive(Args, Clone)]
struct Common {
    /// Root system label such as A2, C3 or G2.
    #[arg(long, default_value = "A2")]
    sys: String,
    /// Length bound L.
    #[arg(long, default_value_t = 8)]
    max_len: usize,
    /// Coordinates of nu in the simple coroot basis, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    nu: Vec<i32>,
    /// Chamber index for partial-folding.
    #[arg(long)]
    w: Option<usize>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// json-lines, csv or svg.
    #[arg(long, default_value = "json-lines")]
    format: String,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Directory of the persistent result cache.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

enum Status {
    Ok,
    Violation,
}

#[derive(Debug)]
struct ConfigError(String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn config_error(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(ConfigError(msg.into()))
}

impl Common {
    fn config(&self) -> anyhow::Result<RunConfig> {
        let mut cfg = RunConfig::new(&self.sys, self.max_len, &self.nu, self.jobs)?;
        if let Some(dir) = &self.cache_dir {
            cfg = cfg.with_cache(dir);
        }
        Ok(cfg)
    }

    fn format(&self) -> anyhow::Result<Format> {
        Ok(self.format.parse()?)
    }

    fn sink(&self) -> anyhow::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(path) => Box::new(BufWriter::new(
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
            )),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }

    fn require_zero_nu(&self) -> anyhow::Result<()> {
        if self.nu.iter().any(|&c| c != 0) {
            bail!(config_error("this report is defined for b = 1 only; drop --nu"));
        }
        Ok(())
    }
}

fn summary_line<T: serde::Serialize>(label: &str, value: &T) -> anyhow::Result<()> {
    eprintln!("{label}: {}", serde_json::to_string(value)?);
    Ok(())
}

fn run_census_like(args: &Common, check: impl Fn(&report::Summary) -> bool) -> anyhow::Result<Status> {
    let cfg = args.config()?;
    let format = args.format()?;
    let (census, stats) = report::run_census(&cfg)?;
    let mut out = args.sink()?;
    match format {
        Format::JsonLines => report::write_json_lines(&census, &mut out)?,
        Format::Csv => report::write_csv(&census, &mut out)?,
        Format::Svg => out.write_all(report::render_census(&census)?.as_bytes())?,
    }
    out.flush()?;
    let summary = census.summary();
    summary_line("summary", &summary)?;
    eprintln!("fold calls: {}, cache hits: {}", stats.fold_calls, stats.cache_hits);
    if let Some(reason) = &census.truncated {
        eprintln!("truncated: {reason}");
        return Ok(Status::Violation);
    }
    Ok(if check(&summary) { Status::Ok } else { Status::Violation })
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    match cli.command {
        Command::Census(args) => run_census_like(&args, |_| true),
        Command::Prediction(args) => {
            args.require_zero_nu()?;
            let proven = report::prediction_proven(&args.config()?.sys);
            run_census_like(&args, |s| {
                if s.prediction_disagree > 0 || s.support_violations > 0 {
                    eprintln!(
                        "{} shrunken disagreements, {} support violations",
                        s.prediction_disagree, s.support_violations
                    );
                }
                s.finite_empty == 0 && !(proven && s.prediction_disagree > 0)
            })
        }
        Command::Lau(args) => {
            args.require_zero_nu()?;
            if !report::lau_supported(&args.sys) {
                bail!(config_error("the power-length criterion is defined for A2 only"));
            }
            run_census_like(&args, |s| s.lau_disagree == 0)
        }
        Command::PartialFolding(args) => {
            let w = args.w.ok_or_else(|| config_error("partial-folding needs --w"))?;
            let cfg = args.config()?;
            let (rep, _) = report::run_partial_folding(&cfg, w)?;
            let mut out = args.sink()?;
            match args.format()? {
                Format::Svg => out.write_all(report::render_partial_folding(&rep)?.as_bytes())?,
                f => report::write_rows(&rep.rows, &rep.truncated, f, &mut out)?,
            }
            out.flush()?;
            Ok(if rep.truncated.is_some() { Status::Violation } else { Status::Ok })
        }
        Command::CompareB(args) => {
            let cfg = args.config()?;
            let (rows, truncated, _) = report::run_compare_b(&cfg)?;
            let mut out = args.sink()?;
            report::write_rows(&rows, &truncated, args.format()?, &mut out)?;
            out.flush()?;
            summary_line("comparison", &CompareSummary::of(&rows, cfg.max_len))?;
            Ok(if truncated.is_some() { Status::Violation } else { Status::Ok })
        }
        Command::Grass(args) => {
            let rs = adlv::rootsys::RootSystem::from_label(&args.sys)?;
            let nu = match args.nu.len() {
                0 => None,
                n if n == rs.rank() => Some(Coweight::new(&args.nu)),
                n => bail!(config_error(format!("nu has {n} coordinates, expected {}", rs.rank()))),
            };
            let rows = report::run_grass(&args.sys, args.max_len as i64, nu)?;
            let mut out = args.sink()?;
            report::write_rows(&rows, &None, args.format()?, &mut out)?;
            out.flush()?;
            Ok(Status::Ok)
        }
        Command::LeviCheck(args) => {
            let rows = report::run_levi_check(&args.sys, args.max_len as i64, args.jobs)?;
            let mut out = args.sink()?;
            report::write_rows(&rows, &None, args.format()?, &mut out)?;
            out.flush()?;
            let bad = rows.iter().filter(|r| !r.ok()).count();
            eprintln!("levi-check: {} rows, {bad} failing", rows.len());
            Ok(if bad == 0 { Status::Ok } else { Status::Violation })
        }
        Command::Render(mut args) => {
            args.format = "svg".into();
            run_census_like(&args, |_| true)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<ConfigError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<adlv::Error>() {
        Some(adlv::Error::Invariant(_)) | Some(adlv::Error::NonReduced { .. }) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
