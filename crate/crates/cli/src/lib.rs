//! `circulant` command-line front end.
//!
//! Every subcommand writes a table of records to stdout (or atomically to
//! `--output`) as `plain`, `csv` or `json`. Exit codes: 0 ok, 1 I/O,
//! 2 argument or domain error, 3 oracle failure, 4 internal invariant failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use circulant_energy::asymptotics::asymptotic_report;
use circulant_energy::energy::{energy, energy_closed, energy_direct};
use circulant_energy::figures::{figure_data, FigureId};
use circulant_energy::oracle::{energy_oracle_capped, DEFAULT_ORACLE_CAP};
use circulant_energy::scan::{scan_range, ScanSummary, DEFAULT_TOL};
use circulant_energy::spectrum::full_spectrum;
use circulant_energy::{Error, GraphSpec};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod output;
pub mod records;

use output::{render, sig15, write_atomic, OutputFormat, Record};
use records::{AsymptoticRow, ConvergenceRow, EnergyRow, ScanRow, SpectrumRow};

/// Scans stop here unless `--no-cap` is given.
pub const DEFAULT_SCAN_CAP: u64 = 10_000;

#[derive(Debug, Parser)]
#[command(
    name = "circulant",
    version,
    about = "Spectra and energies of circulant graphs G(r, N)"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    /// Write to this file (atomically) instead of stdout.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GraphArgs {
    /// Neighbourhood radius.
    #[arg(long = "radius", short = 'r')]
    r: u64,

    /// Number of vertices; must be at least 2r + 1.
    #[arg(long = "vertices", short = 'N')]
    n: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnergyMethodArg {
    Auto,
    Direct,
    Closed,
    Oracle,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues λ_k = u(r, 2kπ/N), k = 0..N−1.
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Graph energy and E/(N − 1).
    Energy {
        #[command(flatten)]
        graph: GraphArgs,
        /// auto picks a closed formula when one applies.
        #[arg(long, value_enum, default_value_t = EnergyMethodArg::Auto)]
        method: EnergyMethodArg,
        /// Largest N accepted by the dense-matrix oracle.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// I_r = lim E(r, N)/(N − 1) by three routes, with Lebesgue bounds.
    Asymptotic {
        #[arg(long = "radius", short = 'r', value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Hyperenergetic classification of G(r, N) for N in [min, max].
    Scan {
        #[arg(long = "radius", short = 'r')]
        r: u64,
        /// Smallest N; raised to 2r + 1 if lower.
        #[arg(long = "min", default_value_t = 1)]
        n_min: u64,
        #[arg(long = "max")]
        n_max: u64,
        /// Margins within this absolute tolerance classify as boundary.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Emit only hyperenergetic records.
        #[arg(long)]
        only_hyper: bool,
        /// Allow --max above the default cap.
        #[arg(long)]
        no_cap: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// (N, E/(N − 1), deviation from I_r) series for a standard figure.
    Figure {
        #[arg(long, value_parser = parse_figure_id)]
        id: FigureId,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn parse_figure_id(s: &str) -> Result<FigureId, String> {
    s.parse()
}

#[derive(Debug)]
pub enum CliError {
    Io(std::io::Error),
    Usage(String),
    Oracle(Error),
    Invariant(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Oracle(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(e) => write!(f, "I/O error: {e}"),
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Oracle(e) | CliError::Invariant(e) => write!(f, "{e}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn graph_spec(args: &GraphArgs) -> Result<GraphSpec, CliError> {
    GraphSpec::new(args.r, args.n).map_err(|e| CliError::Usage(e.to_string()))
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return 2;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

struct Emitter<'a> {
    out: &'a OutputArgs,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Emitter<'_> {
    /// Writes the records, then `notes`: appended to plain output, or sent to
    /// stderr so csv/json stay machine-readable.
    fn emit<R: Record>(&mut self, records: &[R], notes: &[String]) -> Result<(), CliError> {
        let mut bytes = render(records, self.out.format)?;
        if self.out.format == OutputFormat::Plain {
            for note in notes {
                bytes.extend_from_slice(format!("# {note}\n").as_bytes());
            }
        } else {
            for note in notes {
                writeln!(self.stderr, "# {note}")?;
            }
        }
        match &self.out.output {
            Some(path) => write_atomic(path, &bytes)?,
            None => self.stdout.write_all(&bytes)?,
        }
        Ok(())
    }
}

fn execute(
    command: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    match command {
        Command::Spectrum { graph, out } => {
            let spec = graph_spec(&graph)?;
            let rows: Vec<SpectrumRow> = full_spectrum(spec)
                .values()
                .iter()
                .enumerate()
                .map(|(k, &v)| SpectrumRow {
                    k: k as u64,
                    eigenvalue: sig15(v),
                })
                .collect();
            Emitter {
                out: &out,
                stdout,
                stderr,
            }
            .emit(&rows, &[])
        }
        Command::Energy {
            graph,
            method,
            oracle_cap,
            out,
        } => {
            let spec = graph_spec(&graph)?;
            let (value, method_name) = match method {
                EnergyMethodArg::Auto => {
                    let report = energy(spec);
                    (report.energy, report.method.to_string())
                }
                EnergyMethodArg::Direct => (energy_direct(spec).energy, "direct".to_string()),
                EnergyMethodArg::Closed => {
                    let report = energy_closed(spec).ok_or_else(|| {
                        CliError::Usage(format!("no closed formula applies to {spec}"))
                    })?;
                    (report.energy, report.method.to_string())
                }
                EnergyMethodArg::Oracle => {
                    let value = energy_oracle_capped(spec, oracle_cap).map_err(CliError::Oracle)?;
                    (value, "oracle".to_string())
                }
            };
            let row = EnergyRow {
                r: spec.r(),
                n: spec.n(),
                energy: sig15(value),
                method: method_name,
                ratio: sig15(value / (spec.n() - 1) as f64),
            };
            Emitter {
                out: &out,
                stdout,
                stderr,
            }
            .emit(&[row], &[])
        }
        Command::Asymptotic { r, out } => {
            let report = asymptotic_report(r).map_err(CliError::Invariant)?;
            let row = AsymptoticRow {
                r,
                ir_quadrature: sig15(report.ir_quadrature),
                ir_double_sum: sig15(report.ir_double_sum),
                ir_closed: sig15(report.ir_closed),
                lebesgue: sig15(report.lebesgue),
                lower_bound_log: sig15(report.lower_bound_log),
                bound_low: sig15(report.bound_interval.0),
                bound_high: sig15(report.bound_interval.1),
            };
            Emitter {
                out: &out,
                stdout,
                stderr,
            }
            .emit(&[row], &[])
        }
        Command::Scan {
            r,
            n_min,
            n_max,
            tol,
            only_hyper,
            no_cap,
            out,
        } => {
            let first = n_min.max(2 * r + 1);
            if r == 0 || first > n_max || tol.is_nan() || tol <= 0.0 {
                return Err(CliError::Usage(format!(
                    "invalid scan: need r >= 1, tol > 0 and max(min, 2r + 1) <= max (r = {r}, min = {n_min}, max = {n_max}, tol = {tol})"
                )));
            }
            if n_max > DEFAULT_SCAN_CAP && !no_cap {
                return Err(CliError::Usage(format!(
                    "--max {n_max} exceeds the scan cap {DEFAULT_SCAN_CAP}; pass --no-cap to scan further"
                )));
            }
            let records =
                scan_range(r, n_min, n_max, tol).map_err(|e| CliError::Usage(e.to_string()))?;
            let summary = ScanSummary::of(&records);
            let rows: Vec<ScanRow> = records
                .iter()
                .filter(|rec| !only_hyper || rec.classification.is_hyperenergetic())
                .map(|rec| ScanRow {
                    r,
                    n: rec.spec.n(),
                    energy: sig15(rec.energy),
                    threshold: sig15(rec.threshold),
                    margin: sig15(rec.margin),
                    classification: rec.classification.to_string(),
                })
                .collect();
            let notes = [
                format!("scanned r = {r}, N in [{first}, {n_max}], tol = {tol:e}"),
                format!(
                    "hyperenergetic = {}, non_hyperenergetic = {} (of which boundary = {})",
                    summary.hyperenergetic, summary.non_hyperenergetic, summary.boundary
                ),
                format!("no claim is made for N > {n_max}"),
            ];
            Emitter {
                out: &out,
                stdout,
                stderr,
            }
            .emit(&rows, &notes)
        }
        Command::Figure { id, out } => {
            let data = figure_data(id).map_err(|e| CliError::Usage(e.to_string()))?;
            let rows: Vec<ConvergenceRow> = data
                .points
                .iter()
                .map(|p| ConvergenceRow {
                    n: p.n,
                    ratio: sig15(p.ratio),
                    deviation: sig15(p.deviation),
                })
                .collect();
            let mut notes = vec![
                format!("figure {id}: r = {}", data.r),
                format!("x: N from {} to {}", data.n_range.0, data.n_range.1),
                format!(
                    "y: E(r, N)/(N - 1) from {} to {}",
                    data.y_range.0, data.y_range.1
                ),
            ];
            if let Some(line) = id.reference_line() {
                notes.push(format!("reference line y = {line}"));
            }
            Emitter {
                out: &out,
                stdout,
                stderr,
            }
            .emit(&rows, &notes)
        }
    }
}
