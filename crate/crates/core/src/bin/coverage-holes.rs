use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use coverage_holes::hole::{DetectOptions, MethodChoice};
use coverage_holes::io::{write_text, ReportFile, ScenarioFile};
use coverage_holes::pipeline::{
    generate_scenario, run_detect, run_plan, verify_report, GenerateParams,
};
use coverage_holes::svg::render_svg;
use coverage_holes::Error;

#[derive(Parser)]
#[command(version, about = "Detect and heal coverage holes in a sensor field")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded random deployment.
    Generate {
        #[arg(long)]
        width: f64,
        #[arg(long)]
        height: f64,
        #[arg(long)]
        n_stationary: usize,
        #[arg(long)]
        n_mobile: usize,
        #[arg(long)]
        radius: f64,
        #[arg(long)]
        mobile_radius: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Triangulate a scenario and compute every triangle's hole area.
    Detect {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long, default_value = "auto")]
        method: MethodChoice,
        /// Minimum area for a triangle to count as a hole.
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Choose targets for the report's holes and assign mobile sensors.
    Plan {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        report: PathBuf,
        #[arg(long)]
        mobile_radius: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Monte-Carlo coverage before and after the report's plan.
    Verify {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Draw the scenario (and report) as SVG.
    Render {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

/// An error plus the input file it concerns, when the error itself does not
/// already name one.
struct Failure {
    context: Option<PathBuf>,
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure {
            context: None,
            error,
        }
    }
}

fn within(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |error| Failure {
        context: Some(path.to_path_buf()),
        error,
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Generate {
            width,
            height,
            n_stationary,
            n_mobile,
            radius,
            mobile_radius,
            seed,
            out,
        } => Ok(generate_scenario(&GenerateParams {
            width,
            height,
            n_stationary,
            n_mobile,
            radius,
            mobile_radius,
            seed,
        })?
        .write(&out)?),
        Command::Detect {
            scenario,
            method,
            epsilon,
            out,
        } => {
            if let Some(e) = epsilon {
                if !(e >= 0.0 && e.is_finite()) {
                    return Err(Error::InvalidInput(format!(
                        "--epsilon must be non-negative, got {e}"
                    ))
                    .into());
                }
            }
            let s = ScenarioFile::read(&scenario)?;
            let options = DetectOptions {
                method,
                min_hole_area: epsilon,
            };
            Ok(run_detect(&s, &options)
                .map_err(within(&scenario))?
                .write(&out)?)
        }
        Command::Plan {
            scenario,
            report,
            mobile_radius,
            out,
        } => {
            let s = ScenarioFile::read(&scenario)?;
            let r = ReportFile::read(&report)?;
            Ok(run_plan(&r, &s, mobile_radius)
                .map_err(within(&report))?
                .write(&out)?)
        }
        Command::Verify {
            scenario,
            report,
            samples,
            seed,
            out,
        } => {
            let s = ScenarioFile::read(&scenario)?;
            let r = report.as_deref().map(ReportFile::read).transpose()?;
            Ok(verify_report(&s, r.as_ref(), samples, seed)
                .map_err(within(report.as_deref().unwrap_or(&scenario)))?
                .write(&out)?)
        }
        Command::Render {
            scenario,
            report,
            out,
        } => {
            let s = ScenarioFile::read(&scenario)?;
            let r = report.as_deref().map(ReportFile::read).transpose()?;
            let svg = render_svg(&s, r.as_ref())
                .map_err(within(report.as_deref().unwrap_or(&scenario)))?;
            Ok(write_text(&out, &svg)?)
        }
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.render().to_string();
            // Drop clap's usage and help trailer; keep the message and any argument list.
            let message = text.split("\n\n").next().unwrap_or_default();
            let message = message.strip_prefix("error: ").unwrap_or(message);
            eprintln!("error: usage: {}", one_line(message));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { context, error }) => {
            let located = matches!(
                error,
                Error::Io { .. } | Error::Parse { .. } | Error::UnsupportedSchema { .. }
            );
            let prefix = match context {
                Some(path) if !located => format!("{}: ", path.display()),
                _ => String::new(),
            };
            let text = error.to_string();
            let kind = error.kind();
            // The display text repeats the kind in words; keep only the detail.
            let detail = text
                .strip_prefix(&format!("{}: ", kind.replace('-', " ")))
                .unwrap_or(&text);
            eprintln!("error: {kind}: {prefix}{}", one_line(detail));
            ExitCode::FAILURE
        }
    }
}
