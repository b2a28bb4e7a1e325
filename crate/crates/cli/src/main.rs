mod commands;
mod input;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

/// Exact Schubert calculus for Kac-Moody flag varieties and rank-two
/// Kac-Moody groups.
#[derive(Debug, Parser)]
#[command(name = "schubert-kit", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Write the output to a file instead of standard output.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,
    /// Run this module's invariant suite at reduced bounds instead.
    #[arg(long, global = true)]
    selftest: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generalized Cartan matrices.
    Gcm {
        #[command(subcommand)]
        command: Option<GcmCommand>,
    },
    /// Weyl group elements.
    Weyl {
        #[command(subcommand)]
        command: Option<WeylCommand>,
    },
    /// Nil Hecke operators and the coproduct on Schubert classes.
    Schubert {
        #[command(subcommand)]
        command: Option<SchubertCommand>,
    },
    /// Polynomials on the torus: characteristic map and invariants.
    Poly {
        #[command(subcommand)]
        command: Option<PolyCommand>,
    },
    /// Rank-two groups A(a,b) with ab >= 4.
    Rank2 {
        #[command(subcommand)]
        command: Option<Rank2Command>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GcmCommand {
    /// Validate a matrix and report Coxeter exponents, realization and
    /// spherical subsets.
    Check {
        /// Inline rows such as "2,-1;-1,2", or a path to a JSON file.
        #[arg(required_unless_present = "selftest")]
        gcm: Option<String>,
    },
    /// The poset of spherical subsets with its cover relations.
    Poset {
        #[arg(required_unless_present = "selftest")]
        gcm: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum WeylCommand {
    /// Enumerate elements by length.
    Enum {
        #[arg(long, required_unless_present = "selftest")]
        gcm: Option<String>,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Compare two elements in the Bruhat order.
    Bruhat {
        #[arg(long, required_unless_present = "selftest")]
        gcm: Option<String>,
        /// 1-based word such as "1,2,1", or "e".
        #[arg(long, required_unless_present = "selftest", allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long, required_unless_present = "selftest", allow_hyphen_values = true)]
        v: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SchubertCommand {
    /// Apply A_w (w given by a reduced word) to a Schubert class.
    Act {
        #[arg(long, required_unless_present = "selftest")]
        gcm: Option<String>,
        #[arg(long, required_unless_present = "selftest")]
        word: Option<String>,
        /// Word of the class delta^v being acted on.
        #[arg(long, required_unless_present = "selftest")]
        class: Option<String>,
        /// Coefficients: Z, Q or F_p.
        #[arg(long, default_value = "Z")]
        ring: String,
    },
    /// The coproduct of delta^w.
    Coproduct {
        #[arg(long, required_unless_present = "selftest")]
        gcm: Option<String>,
        #[arg(long, required_unless_present = "selftest")]
        word: Option<String>,
        #[arg(long, default_value = "Z")]
        ring: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum PolyCommand {
    /// The characteristic map of a homogeneous polynomial in x1.., a1...
    Psi {
        #[arg(long, required_unless_present = "selftest")]
        gcm: Option<String>,
        #[arg(long, required_unless_present = "selftest", allow_hyphen_values = true)]
        poly: Option<String>,
        /// Coefficients: Z, Q or F_p.
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Dimensions of the generalized invariants J and of S = H*(BT)/J.
    Invariants {
        #[arg(long, required_unless_present = "selftest")]
        gcm: Option<String>,
        /// Q or F_p.
        #[arg(long, default_value = "Q")]
        field: String,
        /// Largest topological degree.
        #[arg(long, default_value_t = 16)]
        max_deg: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Pair {
    #[arg(short, required_unless_present = "selftest")]
    pub a: Option<u64>,
    #[arg(short, required_unless_present = "selftest")]
    pub b: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct Grid {
    /// Comma-separated values of a.
    #[arg(short, value_delimiter = ',', required_unless_present = "selftest")]
    pub a: Vec<u64>,
    /// Comma-separated values of b.
    #[arg(short, value_delimiter = ',', required_unless_present = "selftest")]
    pub b: Vec<u64>,
    /// Comma-separated primes.
    #[arg(short, value_delimiter = ',', required_unless_present = "selftest")]
    pub p: Vec<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Rank2Command {
    /// The sequences c_n, d_n and g_n = gcd(c_n, d_n).
    Table {
        #[command(flatten)]
        pair: Pair,
        #[arg(short = 'N', default_value_t = 20)]
        n: usize,
    },
    /// Integral cup products of Schubert classes from the Leibniz solver.
    Products {
        #[command(flatten)]
        pair: Pair,
        #[arg(short = 'N', default_value_t = 20)]
        n: usize,
    },
    /// Integral cohomology groups of K(a,b).
    Hk {
        #[command(flatten)]
        pair: Pair,
        #[arg(short = 'N', default_value_t = 20)]
        n: usize,
    },
    /// The least k with p | g_k: closed form, scan and matrix method.
    PrimeOrder {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value_t = 200)]
        scan_bound: usize,
    },
    /// The valuation identity v_p(g_sk) = v_p(s) + v_p(g_k).
    Bockstein {
        #[command(flatten)]
        grid: Grid,
        #[arg(short = 'S', default_value_t = 30)]
        s_max: u64,
    },
    /// Series of A_{F_p} and H*(K; F_p), and the dual polynomial generator.
    Hopf {
        #[command(flatten)]
        grid: Grid,
        #[arg(short = 'N', default_value_t = 20)]
        n: usize,
        /// Largest n in the dual check (degrees 2nk).
        #[arg(long, default_value_t = 10)]
        dual_n: usize,
    },
}

pub enum Failure {
    Usage(String),
    Theorem(String),
    Io(String),
}

impl From<schubert_kit::Error> for Failure {
    fn from(e: schubert_kit::Error) -> Self {
        if e.is_theorem_violation() {
            Failure::Theorem(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("SCHUBERT_KIT_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("SCHUBERT_KIT_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Io(e.to_string()))
}

fn run(cli: Cli) -> Result<output::Report, Failure> {
    configure_threads()?;
    if cli.common.selftest {
        return Ok(commands::selftest(&cli.command));
    }
    let missing = || Failure::Usage("a subcommand is required unless --selftest is given; see --help".into());
    match cli.command {
        Command::Gcm { command } => commands::gcm(command.ok_or_else(missing)?),
        Command::Weyl { command } => commands::weyl(command.ok_or_else(missing)?),
        Command::Schubert { command } => commands::schubert(command.ok_or_else(missing)?),
        Command::Poly { command } => commands::poly(command.ok_or_else(missing)?),
        Command::Rank2 { command } => commands::rank2(command.ok_or_else(missing)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.common.format;
    let destination = cli.common.output.clone();
    let report = match run(cli) {
        Ok(r) => r,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Failure::Theorem(m)) => {
            eprintln!("theorem violation: {m}");
            return ExitCode::from(3);
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(1);
        }
    };
    let text = report.render(format);
    let written = match &destination {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    if !report.violations.is_empty() {
        for v in &report.violations {
            eprintln!("theorem violation: {v}");
        }
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}
