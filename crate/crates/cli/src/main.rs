//! `braidq`: tables, verification suites and cache management.

mod render;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use braidq::cache::{Cache, CACHE_ENV};
use braidq::complexes::GradedComplex;
use braidq::qarith::CoeffRing;
use braidq::{parallel, Error};

use render::Style;
use verify::{Bounds, Suite};

#[derive(Parser)]
#[command(
    name = "braidq",
    version,
    about = "Homology of braid groups with coefficients in K[q^±1]"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Result cache directory.
    #[arg(long, global = true, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    /// Worker threads (0 picks the number of cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Render the homology table over q, fp:<p> or z.
    Table {
        #[arg(long, default_value = "q", value_parser = parse_coeff)]
        coeff: CoeffRing,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(2..))]
        nmax: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Use "+" for direct sums and "phi" for cyclotomic polynomials.
        #[arg(long)]
        ascii: bool,
    },
    /// Run an invariant suite and report each check.
    Verify {
        #[arg(value_enum)]
        suite: Option<Suite>,
        #[arg(long = "suite", value_enum, conflicts_with = "suite")]
        suite_flag: Option<Suite>,
        /// Coefficient rings for ring-dependent checks (repeatable).
        #[arg(long, value_parser = parse_coeff)]
        coeff: Vec<CoeffRing>,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(2..))]
        nmax: u64,
        /// Primes for Bockstein and stable checks (repeatable).
        #[arg(long, value_parser = parse_prime)]
        p: Vec<u32>,
        #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(3..))]
        mmax: u64,
    },
    /// Inspect or empty the result cache.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
    /// Print the chain complex in degree n as JSON.
    Dump {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "z", value_parser = parse_coeff)]
        coeff: CoeffRing,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheAction {
    List,
    Clear,
    Stat,
}

fn parse_coeff(s: &str) -> Result<CoeffRing, String> {
    CoeffRing::from_str(s).map_err(|e| e.to_string())
}

fn parse_prime(s: &str) -> Result<u32, String> {
    let p: u32 = s.parse().map_err(|e| format!("{e}"))?;
    CoeffRing::prime_field(p)
        .map(|_| p)
        .map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Verification,
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e)
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn open_cache(dir: Option<PathBuf>) -> Result<Cache, Failure> {
    let dir = dir.unwrap_or_else(Cache::default_dir);
    Cache::open(&dir).map_err(|e| {
        Failure::Usage(format!(
            "cache directory {} is not writable: {e}",
            dir.display()
        ))
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    parallel::configure_threads(cli.common.jobs)?;
    let cache = open_cache(cli.common.cache_dir)?;
    match cli.command {
        Command::Table {
            coeff,
            nmax,
            format,
            ascii,
        } => {
            let nmax = nmax as usize;
            let style = Style { ascii };
            let out = if coeff == CoeffRing::Integers {
                let t = cache.integral_table(nmax)?;
                match format {
                    Format::Text => render::integral_text(&t, style),
                    Format::Json => render::integral_json(&t),
                    Format::Csv => render::integral_csv(&t),
                }
            } else {
                let t = cache.table(coeff, nmax)?;
                match format {
                    Format::Text => render::table_text(&t, style),
                    Format::Json => render::table_json(&t),
                    Format::Csv => render::table_csv(&t),
                }
            };
            print!("{out}");
        }
        Command::Verify {
            suite,
            suite_flag,
            coeff,
            nmax,
            p,
            mmax,
        } => {
            let suite = suite.or(suite_flag).ok_or_else(|| {
                Failure::Usage(
                    "missing suite (lemmas, complex, bockstein, closedform, stable, all)".into(),
                )
            })?;
            let nmax = nmax as usize;
            let coeffs = if coeff.is_empty() {
                vec![
                    CoeffRing::Rationals,
                    CoeffRing::PrimeField(2),
                    CoeffRing::PrimeField(3),
                    CoeffRing::PrimeField(5),
                ]
            } else {
                coeff
            };
            if coeffs.contains(&CoeffRing::Integers) {
                return Err(Failure::Usage(
                    "verify works over fields; use q or fp:<p>".into(),
                ));
            }
            let primes = if p.is_empty() {
                verify::small_primes(5)
            } else {
                p
            };
            let report = verify::run(
                suite,
                &Bounds {
                    nmax,
                    mmax,
                    primes,
                    coeffs,
                },
                &cache,
            );
            if let Some(e) = report.internal {
                return Err(Failure::Internal(e));
            }
            if report.failed > 0 {
                return Err(Failure::Verification);
            }
        }
        Command::Cache { action } => match action {
            CacheAction::List => {
                for e in cache.entries()? {
                    let stale = if e.is_current() { "" } else { "  (stale)" };
                    println!(
                        "{}  n={}  {}  {} bytes{stale}",
                        e.coeff,
                        e.n,
                        e.path.display(),
                        e.bytes
                    );
                }
            }
            CacheAction::Clear => {
                let k = cache.clear()?;
                println!("removed {k} entries from {}", cache.dir().display());
            }
            CacheAction::Stat => {
                let entries = cache.entries()?;
                let current = entries.iter().filter(|e| e.is_current()).count();
                let bytes: u64 = entries.iter().map(|e| e.bytes).sum();
                println!(
                    "{}: {} entries ({current} current), {bytes} bytes",
                    cache.dir().display(),
                    entries.len()
                );
            }
        },
        Command::Dump { n, coeff } => {
            let c = GradedComplex::build(n, coeff);
            println!("{}", serde_json::to_string(&c).map_err(Error::from)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal inconsistency: {e}");
            ExitCode::from(3)
        }
    }
}
