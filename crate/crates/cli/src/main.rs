//! `opendoor` — exact Toeplitz certificates and boundary geometry of the
//! open-door ODE solution q_c, as CSV/JSON/SVG reports.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use opendoor::{ComplexVal, EvalConfig};

mod render;
mod svg;

/// Failures split by exit code: usage problems exit 1, computation and I/O
/// failures exit 2.
#[derive(Debug)]
pub enum AppError {
    Usage(String),
    Compute(String),
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Usage(m) | AppError::Compute(m) => write!(f, "{m}"),
        }
    }
}

impl From<opendoor::Error> for AppError {
    fn from(e: opendoor::Error) -> Self {
        match e {
            opendoor::Error::InvalidInput(m) => AppError::Usage(m),
            other => AppError::Compute(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "opendoor",
    version,
    about = "Toolkit for the open-door ODE solution q_c: exact series \
             coefficients, certified Toeplitz root brackets, boundary traces \
             and the starlikeness constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PlotKind {
    /// Closed image of the unit circle under q_c
    Boundary,
    /// Graph of Re F(c)
    FGraph,
    /// gamma(SS_alpha) with its lower and upper bounds
    GammaCurves,
}

#[derive(Subcommand)]
enum Command {
    /// Exact series coefficients b_0..b_n of q_c as polynomials in c
    Coeffs {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate q_c(z) through the integral representation
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        #[arg(long, allow_negative_numbers = true)]
        z_re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        z_im: f64,
        /// Gauss-Legendre nodes at the first quadrature level
        #[arg(long, default_value_t = 64)]
        nodes: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Certified brackets for the smallest positive roots rho_n, as CSV
    Table1 {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Maximum bracket width
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Append the long-running n = 30 row
        #[arg(long)]
        deep: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Locate c0, the first zero of Re F(c), and report gamma(S*) = pi c0/4
    FindC0 {
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Trace the boundary curve q_c(e^{i theta}) as CSV
    Trace {
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        /// Grid size over (0, pi)
        #[arg(long, default_value_t = 256)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// gamma(SS_alpha) with lower/upper bounds over an alpha grid, as CSV
    Bounds {
        /// Number of interior alpha grid points
        #[arg(long, default_value_t = 19)]
        grid: usize,
        /// Bisection tolerance for each c_alpha
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Emit one of the three figures as a standalone SVG
    Plot {
        #[arg(long, value_enum)]
        kind: PlotKind,
        /// Strip parameter for --kind boundary (default: near c0)
        #[arg(long, default_value_t = 3.0276)]
        c: f64,
        /// Boundary grid size for --kind boundary
        #[arg(long, default_value_t = 256)]
        m: usize,
        #[arg(long, default_value_t = 0.5)]
        c_min: f64,
        #[arg(long, default_value_t = 4.0)]
        c_max: f64,
        /// Sample count for --kind f-graph
        #[arg(long, default_value_t = 120)]
        samples: usize,
        /// Alpha grid size for --kind gamma-curves
        #[arg(long, default_value_t = 19)]
        grid: usize,
        /// Bisection tolerance for --kind gamma-curves
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
    },
}

fn require_format(got: Format, want: Format) -> Result<(), AppError> {
    if got == want {
        Ok(())
    } else {
        Err(AppError::Usage(format!(
            "unsupported format {got:?} for this command (expected {want:?})"
        )))
    }
}

fn deliver(text: String, out: Option<&PathBuf>) -> Result<(), AppError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| AppError::Compute(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    let cfg = EvalConfig::default();
    match cli.command {
        Command::Coeffs { n_max, out, format } => {
            require_format(format, Format::Json)?;
            deliver(render::coeffs_json(n_max), out.as_ref())
        }
        Command::Eval { c, z_re, z_im, nodes, out, format } => {
            require_format(format, Format::Json)?;
            let cfg = EvalConfig { quad_nodes: nodes, ..cfg };
            let text = render::eval_json(c, ComplexVal::new(z_re, z_im), &cfg)?;
            deliver(text, out.as_ref())
        }
        Command::Table1 { n_max, tol, deep, out, format } => {
            require_format(format, Format::Csv)?;
            deliver(render::table1_csv(n_max, tol, deep)?, out.as_ref())
        }
        Command::FindC0 { tol, out, format } => {
            require_format(format, Format::Json)?;
            deliver(render::find_c0_json(tol, &cfg)?, out.as_ref())
        }
        Command::Trace { c, m, out, format } => {
            require_format(format, Format::Csv)?;
            deliver(render::trace_csv(c, m, &cfg)?, out.as_ref())
        }
        Command::Bounds { grid, tol, out, format } => {
            require_format(format, Format::Csv)?;
            deliver(render::bounds_csv(grid, tol, &cfg)?, out.as_ref())
        }
        Command::Plot {
            kind,
            c,
            m,
            c_min,
            c_max,
            samples,
            grid,
            tol,
            out,
            format,
        } => {
            require_format(format, Format::Svg)?;
            let text = match kind {
                PlotKind::Boundary => render::plot_boundary_svg(c, m, &cfg)?,
                PlotKind::FGraph => render::plot_fgraph_svg(c_min, c_max, samples, &cfg)?,
                PlotKind::GammaCurves => render::plot_gamma_svg(grid, tol, &cfg)?,
            };
            deliver(text, out.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
