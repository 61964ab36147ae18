//! The `gadic` command line. [`run`] does all the work so it can be driven
//! from tests with in-memory streams.
//!
//! Exit status is 0 on success, 1 for usage errors (bad flags, malformed
//! integers, inputs outside an operation's domain) and 2 when a computation
//! gives up, such as an exhausted rho budget or a failed verification.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::cayley::{bfs_lengths, oracle_lambda, GeneratingSet};
use crate::config::Config;
use crate::dataset::{
    emit_bfile, emit_lambda_table, emit_length_histogram, emit_length_vs_g, format_bfile,
    length_vs_g_csv, TableFormat, TableSpec,
};
use crate::error::Error;
use crate::gadic::{expand, g_length, lambda};
use crate::plength::{
    goldbach_pair, plength_upper, sieve_length3_candidates, sun_class_member,
    three_prime_decomposition, verify_sun_example_with, SunExample,
};
use crate::prime::factor_with_budget;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gadic",
    version,
    about = "Signed-digit expansions, Cayley graph word lengths and prime-power length searches"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Strong probable-prime rounds above 2^64
    #[arg(long, global = true, default_value_t = Config::default().strong_rounds)]
    rounds: u32,
    /// Pollard rho iterations allowed per split
    #[arg(long, global = true, default_value_t = Config::default().rho_budget)]
    rho_budget: u64,
    /// Largest first prime tried by the even-value searches
    #[arg(long, global = true, default_value_t = Config::default().prime_search_bound)]
    search_bound: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal g-adic digits of n, least significant first
    Expand {
        #[arg(value_parser = parse_int, allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long)]
        base: u32,
    },
    /// Sum of absolute digits of the minimal expansion
    Length {
        #[arg(value_parser = parse_int, allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long)]
        base: u32,
    },
    /// Smallest positive integer of g-length k
    Lambda {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        k: u64,
    },
    /// Table of lambda values, one row per length
    LambdaTable {
        #[arg(long, value_delimiter = ',')]
        bases: Option<Vec<u32>>,
        #[arg(long, default_value_t = 20)]
        kmax: u64,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: TableFormat,
    },
    /// Breadth-first word lengths over a window
    Oracle {
        #[arg(long, value_parser = parse_set)]
        set: GeneratingSet,
        /// lo:hi, containing 0
        #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
        window: (i64, i64),
        #[arg(long, default_value_t = Config::default().margin)]
        margin: u32,
    },
    /// Smallest n in 1..=bound at word length k
    OracleLambda {
        #[arg(long, value_parser = parse_set)]
        set: GeneratingSet,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        bound: u64,
        #[arg(long, default_value_t = Config::default().margin)]
        margin: u32,
    },
    /// Upper bound on the prime-power length of n, with a witness
    Plength {
        #[arg(value_parser = parse_int, allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long, default_value_t = Config::default().two_power_cap)]
        cap: u32,
    },
    /// Two primes summing to an even n >= 4
    Goldbach {
        #[arg(value_parser = parse_int)]
        n: BigInt,
    },
    /// Three primes summing to an odd n > 5
    ThreePrimes {
        #[arg(value_parser = parse_int)]
        n: BigInt,
    },
    /// Prime factorization of n >= 2
    Factor {
        #[arg(value_parser = parse_int)]
        n: BigInt,
    },
    /// Odd n in [lo, hi] with no shorter prime-power form found
    Sieve3 {
        #[arg(long)]
        lo: u64,
        #[arg(long)]
        hi: u64,
        #[arg(long, default_value_t = Config::default().sieve_cap)]
        cap: u32,
        #[arg(long, default_value_t = Config::default().threads)]
        threads: usize,
    },
    /// Check the published constants of Sun's residue class
    SunVerify,
    /// Whether x lies in Sun's residue class
    SunMember {
        #[arg(value_parser = parse_int, allow_negative_numbers = true)]
        x: BigInt,
    },
    /// g-length of n for every base 2..=gmax, as CSV
    Fig2 {
        #[arg(long, default_value = "20233509", value_parser = parse_int, allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long, default_value_t = 100)]
        gmax: u32,
    },
    /// Lengths of 1..=nmax with the lambda overlay, as CSV
    Fig3 {
        #[arg(long, default_value_t = 19)]
        base: u32,
        #[arg(long, default_value_t = 10_000)]
        nmax: u64,
    },
    /// lambda(base, 1..=count) as an OEIS b-file
    Bfile {
        #[arg(long)]
        base: u32,
        #[arg(long)]
        count: u64,
    },
}

/// Decimal only, with an optional leading minus sign.
fn parse_int(s: &str) -> Result<BigInt, String> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("malformed integer `{s}`"));
    }
    s.parse().map_err(|_| format!("malformed integer `{s}`"))
}

fn parse_format(s: &str) -> Result<TableFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_set(s: &str) -> Result<GeneratingSet, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let bad = || format!("window must be `lo:hi`, got `{s}`");
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    Ok((
        lo.trim().parse().map_err(|_| bad())?,
        hi.trim().parse().map_err(|_| bad())?,
    ))
}

enum Failure {
    Lib(Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Parses `args` (including the program name) and executes the command,
/// writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let config = Config {
        strong_rounds: cli.global.rounds,
        rho_budget: cli.global.rho_budget,
        prime_search_bound: cli.global.search_bound,
        ..Config::default()
    };
    if let Err(e) = config.validate() {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    match execute(cli.command, config, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_precondition() {
                EXIT_USAGE
            } else {
                EXIT_FAILURE
            }
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn execute(
    command: Command,
    mut config: Config,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let text = match command {
        Command::Expand { n, base } => {
            let e = expand(&n, base)?;
            format!("{e}\nlength {}\n", e.length())
        }
        Command::Length { n, base } => format!("{}\n", g_length(&n, base)?),
        Command::Lambda { base, k } => format!("{}\n", lambda(base, k)?),
        Command::LambdaTable {
            bases,
            kmax,
            format,
        } => {
            config.format = format;
            let spec = TableSpec {
                bases: bases.unwrap_or_else(|| TableSpec::default().bases),
                k_max: kmax,
                format: config.format,
            };
            emit_lambda_table(&spec)?
        }
        Command::Oracle {
            set,
            window: (lo, hi),
            margin,
        } => {
            let table = bfs_lengths(&set, lo, hi, margin)?;
            let mut s = String::from("n,length\n");
            for (n, len) in table.iter() {
                s.push_str(&format!("{n},{len}\n"));
            }
            s
        }
        Command::OracleLambda {
            set,
            k,
            bound,
            margin,
        } => match oracle_lambda(&set, k, bound, margin)? {
            Some(n) => format!("{n}\n"),
            None => "none\n".to_string(),
        },
        Command::Plength { n, cap } => {
            config.two_power_cap = cap;
            format!("{}\n", plength_upper(&n, &config.caps())?)
        }
        Command::Goldbach { n } => {
            let (p, q) = goldbach_pair(&n)?;
            format!("{p} + {q}\n")
        }
        Command::ThreePrimes { n } => {
            let (p, q, r) = three_prime_decomposition(&n)?;
            format!("{p} + {q} + {r}\n")
        }
        Command::Factor { n } => {
            if n < BigInt::from(2) {
                return Err(Error::OutOfRange {
                    value: n,
                    min: BigInt::from(2),
                }
                .into());
            }
            format!("{}\n", factor_with_budget(&n, config.rho_budget)?)
        }
        Command::Sieve3 {
            lo,
            hi,
            cap,
            threads,
        } => {
            config.sieve_cap = cap;
            config.threads = threads;
            config.validate()?;
            let found = sieve_length3_candidates(lo, hi, config.sieve_cap, config.threads)?;
            let _ = writeln!(
                err,
                "{} candidates in [{lo}, {hi}] with 2^j up to 2^{cap}",
                found.len()
            );
            found.iter().map(|n| format!("{n}\n")).collect()
        }
        Command::SunVerify => {
            let report = verify_sun_example_with(
                &SunExample::default(),
                config.strong_rounds,
                config.rho_budget,
            );
            let _ = write!(out, "{report}");
            if !report.all_passed() {
                return Err(Failure::Check("verification failed".into()));
            }
            return Ok(());
        }
        Command::SunMember { x } => format!("{}\n", sun_class_member(&x)),
        Command::Fig2 { n, gmax } => length_vs_g_csv(&emit_length_vs_g(&n, 2, gmax)?),
        Command::Fig3 { base, nmax } => emit_length_histogram(base, nmax)?.to_csv(),
        Command::Bfile { base, count } => format_bfile(&emit_bfile(base, count)?),
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Check(e.to_string()))
}
