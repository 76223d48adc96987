//! The `permbij` command line.
//!
//! Exit status: 0 success, 1 a verification check failed, 2 usage or domain error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bijection;
use crate::error::{Error, Result};
use crate::harness::{
    parse_checks, run_suite, stats_table_capped, CheckReport, MapRecord, SuiteConfig,
    DEFAULT_FAILURE_CAP,
};
use crate::perm::{enumerate_avoiders_capped, Pattern, Permutation, DEFAULT_N_CAP};
use crate::rsk::{dyck_from_tableaux, rsk_tableaux};
use crate::template::{
    build_t_hat, build_t_rc_bar, build_t_sigma, rc_realize, realize, render_ascii,
};

/// Beyond the default cap, sizes up to this are accepted with a warning.
pub const HARD_N_LIMIT: usize = 12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "permbij",
    version,
    about = "Bijections from 321-avoiding to 132-avoiding permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply a bijection or symmetry to one permutation
    Map {
        #[arg(long, value_enum)]
        bijection: MapName,
        #[arg(long)]
        input: String,
        /// Print digit strings when n <= 9
        #[arg(long)]
        compact: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw one of the intermediate objects for a 321-avoider
    Render {
        #[arg(long, value_enum)]
        what: RenderWhat,
        #[arg(long)]
        input: String,
    },
    /// Run exhaustive checks over S_n(321)
    Verify {
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        /// Comma-separated check names, or `all`
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_FAILURE_CAP)]
        failure_cap: usize,
        /// Include wall-clock timings (makes output non-deterministic)
        #[arg(long)]
        timings: bool,
    },
    /// Joint (fixed points, excedances) distribution over an avoidance class
    Stats {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: Pattern,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List an avoidance class in lexicographic order
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        avoid: Pattern,
        #[arg(long)]
        compact: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    Gamma,
    GammaIterative,
    Theta,
    ThetaRsk,
    ThetaSlideFlip,
    ThetaViaGamma,
    Inverse,
    Reverse,
    Complement,
    Rc,
    Irc,
}

impl MapName {
    pub fn name(self) -> &'static str {
        match self {
            MapName::Gamma => "gamma",
            MapName::GammaIterative => "gamma-iterative",
            MapName::Theta => "theta",
            MapName::ThetaRsk => "theta-rsk",
            MapName::ThetaSlideFlip => "theta-slide-flip",
            MapName::ThetaViaGamma => "theta-via-gamma",
            MapName::Inverse => "inverse",
            MapName::Reverse => "reverse",
            MapName::Complement => "complement",
            MapName::Rc => "rc",
            MapName::Irc => "irc",
        }
    }

    pub fn apply(self, p: &Permutation) -> Result<Permutation> {
        match self {
            MapName::Gamma => bijection::gamma(p),
            MapName::GammaIterative => bijection::gamma_iterative(p),
            MapName::Theta => bijection::theta(p),
            MapName::ThetaRsk => bijection::theta_rsk(p),
            MapName::ThetaSlideFlip => bijection::theta_slide_flip(p),
            MapName::ThetaViaGamma => bijection::theta_via_gamma(p),
            MapName::Inverse => Ok(p.inverse()),
            MapName::Reverse => Ok(p.reverse()),
            MapName::Complement => Ok(p.complement()),
            MapName::Rc => Ok(p.rc()),
            MapName::Irc => Ok(p.irc()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderWhat {
    TSigma,
    THat,
    RcBar,
    ThetaTemplate,
    Dyck,
    Tableaux,
}

/// One line of `enumerate --format json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumRecord {
    pub n: usize,
    pub sigma: Permutation,
    pub fixed_points: usize,
    pub excedances: usize,
}

/// Runs the CLI on the process arguments and standard streams.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug)]
enum CliError {
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn fmt_perm(p: &Permutation, compact: bool) -> String {
    if compact {
        if let Some(s) = p.compact() {
            return s;
        }
    }
    p.to_string()
}

/// Accepts `n` up to the hard limit, warning when it is above the default cap.
fn effective_cap(n: usize, err: &mut dyn Write) -> std::result::Result<usize, CliError> {
    if n > HARD_N_LIMIT {
        return Err(Error::NOutOfRange {
            n,
            cap: HARD_N_LIMIT,
        }
        .into());
    }
    if n > DEFAULT_N_CAP {
        writeln!(
            err,
            "warning: n={n} exceeds the default cap of {DEFAULT_N_CAP}; this may take a long time"
        )?;
        return Ok(n);
    }
    Ok(DEFAULT_N_CAP)
}

fn dispatch(
    cmd: Command,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::result::Result<i32, CliError> {
    match cmd {
        Command::Map {
            bijection,
            input,
            compact,
            format,
        } => {
            let sigma = Permutation::parse(&input)?;
            let image = bijection.apply(&sigma)?;
            match format {
                Format::Text => writeln!(out, "{}", fmt_perm(&image, compact))?,
                Format::Json => {
                    let rec = MapRecord::new(bijection.name(), sigma, image);
                    writeln!(out, "{}", serde_json::to_string(&rec)?)?;
                }
            }
        }
        Command::Render { what, input } => {
            let sigma = Permutation::parse(&input)?;
            writeln!(out, "{}", render(what, &sigma)?)?;
        }
        Command::Verify {
            n_min,
            n_max,
            checks,
            format,
            failure_cap,
            timings,
        } => {
            let config = SuiteConfig {
                n_cap: effective_cap(n_max, err)?,
                failure_cap,
            };
            let checks = parse_checks(&checks)?;
            let mut reports = run_suite(n_min, n_max, &checks, &config)?;
            if !timings {
                reports.iter_mut().for_each(|r| r.elapsed_ms = None);
            }
            return Ok(write_reports(&reports, format, out)?);
        }
        Command::Stats { n, class, format } => {
            let table = stats_table_capped(n, class, effective_cap(n, err)?)?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&table)?)?,
                Format::Text => {
                    writeln!(
                        out,
                        "n={} class={} total={}",
                        table.n,
                        table.class,
                        table.total()
                    )?;
                    writeln!(out, "fixed_points excedances count")?;
                    for r in &table.rows {
                        writeln!(out, "{} {} {}", r.fixed_points, r.excedances, r.count)?;
                    }
                }
            }
        }
        Command::Enumerate {
            n,
            avoid,
            compact,
            format,
        } => {
            for sigma in enumerate_avoiders_capped(n, avoid, effective_cap(n, err)?)? {
                match format {
                    Format::Text => writeln!(out, "{}", fmt_perm(&sigma, compact))?,
                    Format::Json => {
                        let rec = EnumRecord {
                            n,
                            fixed_points: sigma.fixed_points(),
                            excedances: sigma.excedances(),
                            sigma,
                        };
                        writeln!(out, "{}", serde_json::to_string(&rec)?)?;
                    }
                }
            }
        }
    }
    Ok(EXIT_OK)
}

/// Prints reports and returns the exit status they imply.
fn write_reports(
    reports: &[CheckReport],
    format: Format,
    out: &mut dyn Write,
) -> std::io::Result<i32> {
    let passed = reports.iter().filter(|r| r.passed()).count();
    for r in reports {
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(r)?)?,
            Format::Text => {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                write!(out, "{status} {} n={} cases={}", r.check, r.n, r.cases)?;
                if !r.passed() {
                    write!(out, " failures={}", r.failure_count)?;
                }
                if let Some(ms) = r.elapsed_ms {
                    write!(out, " ({ms} ms)")?;
                }
                writeln!(out)?;
                for f in &r.failures {
                    writeln!(
                        out,
                        "  input={} expected={} actual={}",
                        f.input, f.expected, f.actual
                    )?;
                }
            }
        }
    }
    if format == Format::Text {
        writeln!(out, "{passed}/{} reports passed", reports.len())?;
    }
    Ok(if passed == reports.len() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn render(what: RenderWhat, sigma: &Permutation) -> Result<String> {
    match what {
        RenderWhat::TSigma => {
            let t = build_t_sigma(sigma)?;
            render_ascii(&t, Some(&realize(&t)?))
        }
        RenderWhat::THat => {
            let t = build_t_hat(sigma)?;
            render_ascii(&t, Some(&realize(&t)?))
        }
        RenderWhat::RcBar => {
            let t = build_t_rc_bar(sigma)?;
            render_ascii(&t, Some(&rc_realize(&t)?))
        }
        RenderWhat::ThetaTemplate => {
            let t = bijection::theta_corners_template(sigma)?;
            render_ascii(&t, Some(&realize(&t)?))
        }
        RenderWhat::Dyck => {
            let pair = rsk_tableaux(sigma)?;
            Ok(dyck_from_tableaux(&pair.insertion, &pair.recording)?.to_string())
        }
        RenderWhat::Tableaux => {
            let pair = rsk_tableaux(sigma)?;
            Ok(format!(
                "insertion\n{}\nrecording\n{}",
                pair.insertion, pair.recording
            ))
        }
    }
}
