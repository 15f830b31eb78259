use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use powinv::bench::{self, BenchConfig, Format};
use powinv::{
    koc_inverse, prefix_inverses, radix_inverse, radix_inverse_general,
    radix_inverse_pow2_bitwise, reciprocal_power_mod_a, Algorithm, Error, InverseRequest, Nat,
    Radix,
};

const EXIT_PARSE: u8 = 1;
const EXIT_NOT_INVERTIBLE: u8 = 2;
const EXIT_VERIFY_FAIL: u8 = 3;

const EXPLAIN_MAX_K: usize = 64;

/// Digit-serial modular inversion modulo n^k.
#[derive(Parser, Debug)]
#[command(name = "powinv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a^{-1} mod n^k in hex.
    Invert {
        a: String,
        #[command(flatten)]
        modulus: ModulusArgs,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Auto)]
        algorithm: AlgorithmArg,
    },
    /// Check that a·x ≡ 1 (mod n^k).
    Verify {
        a: String,
        x: String,
        #[command(flatten)]
        modulus: ModulusArgs,
    },
    /// Print the digit-by-digit trace of an inversion.
    Explain {
        a: String,
        #[command(flatten)]
        modulus: ModulusArgs,
        /// Trace Koç's algorithm (b_i sequence) instead of the carry recurrence.
        #[arg(long)]
        koc: bool,
    },
    /// Time the inversion algorithms modulo 2^bits.
    Bench {
        /// Comma-separated modulus sizes in bits, multiples of the limb width.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = 1000)]
        reps: usize,
        #[arg(long, default_value_t = 100)]
        warmup: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<String>,
    },
}

#[derive(clap::Args, Debug)]
struct ModulusArgs {
    /// Radix n (decimal or 0x-hex), or "limb" for n = 2^64.
    #[arg(long)]
    radix: String,
    /// Number of radix-n digits.
    #[arg(long)]
    k: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    Auto,
    Koc,
    Radix,
    Bitwise,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Markdown,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    NotInvertible(Nat),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInvertible { gcd } => Failure::NotInvertible(gcd),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn parse_radix(s: &str) -> Result<Radix, Failure> {
    if s.eq_ignore_ascii_case("limb") {
        return Ok(Radix::LimbBase);
    }
    Ok(Radix::from_nat(&Nat::parse(s)?)?)
}

fn parse_request(a: &str, m: &ModulusArgs) -> Result<InverseRequest, Failure> {
    let a = Nat::parse(a)?;
    Ok(InverseRequest::new(a, parse_radix(&m.radix)?, m.k)?)
}

fn invert(req: &InverseRequest, algorithm: AlgorithmArg) -> Result<Nat, Failure> {
    let x = match algorithm {
        AlgorithmArg::Auto => radix_inverse(req, false)?.0,
        AlgorithmArg::Radix => radix_inverse_general(req, false)?.0,
        AlgorithmArg::Koc => koc_inverse(req, false)?.0,
        AlgorithmArg::Bitwise => {
            if req.radix != Radix::Small(2) {
                return Err(Failure::Usage("--algorithm bitwise requires --radix 2".into()));
            }
            radix_inverse_pow2_bitwise(&req.a, req.k)?
        }
    };
    Ok(x)
}

fn verify(a: &Nat, x: &Nat, radix: Radix, k: usize) -> bool {
    a.mul(x).mod_pow_of_radix(radix, k).is_one()
}

fn explain(req: &InverseRequest, koc: bool) -> Result<String, Failure> {
    use std::fmt::Write as _;

    if req.k > EXPLAIN_MAX_K {
        return Err(Failure::Usage(format!("explain supports k ≤ {EXPLAIN_MAX_K}")));
    }
    let (x, trace) = if koc {
        koc_inverse(req, true)?
    } else {
        radix_inverse(req, true)?
    };
    let trace = trace.expect("trace requested");
    let prefixes = prefix_inverses(&trace);
    let a = req.reduced_a();
    let is_koc = matches!(trace.algorithm, Algorithm::Koc | Algorithm::KocPow2);
    let sym = if is_koc { "b_i" } else { "T_i" };

    let mut out = String::new();
    let _ = writeln!(
        out,
        "a = {a:#x}, n = {}, k = {}, algorithm = {:?}",
        req.radix, req.k, trace.algorithm
    );
    let _ = writeln!(out, "{:>4}  {:>20}  {:>24}  {}", "i", "X_i", sym, "prefix inverse mod n^(i+1)");
    for (i, v) in trace.intermediates.iter().enumerate() {
        let digit = trace.digits.get(i).map(|d| format!("{d:#x}")).unwrap_or_default();
        let prefix = prefixes.get(i).map(|p| format!("{p:#x}")).unwrap_or_default();
        let _ = writeln!(out, "{i:>4}  {digit:>20}  {:>24}  {prefix}", format!("{v:#x}"));
    }
    let msd_first: Vec<String> = trace.digits.iter().rev().map(|d| d.to_string()).collect();
    let _ = writeln!(out, "digits (most significant first): ({})_{}", msd_first.join(" "), req.radix);
    if is_koc && a > Nat::one() {
        let recips: Vec<String> = (1..=req.k)
            .map(|s| reciprocal_power_mod_a(&trace, s, &a).map(|r| format!("{r:#x}")))
            .collect::<Result<_, _>>()?;
        let _ = writeln!(out, "(n^s)^-1 mod a = a + b_s, s = 1..k: {}", recips.join(" "));
    }
    let _ = writeln!(out, "x = {x:#x}");
    Ok(out)
}

fn run_bench(
    sizes: Option<Vec<usize>>,
    reps: usize,
    warmup: usize,
    seed: Option<u64>,
    format: FormatArg,
    output: Option<String>,
) -> Result<(), Failure> {
    let mut cfg = BenchConfig { reps, warmup, ..BenchConfig::default() };
    if let Some(sizes) = sizes {
        cfg.sizes = sizes;
    }
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    cfg.validate()?;
    let records = bench::run_suite(&cfg)?;
    let format = match format {
        FormatArg::Csv => Format::Csv,
        FormatArg::Markdown => Format::Markdown,
    };
    let text = format!("{}{}", bench::metadata_header(&cfg), bench::emit(&records, format));
    match output {
        Some(path) => fs::write(&path, text).map_err(|e| Failure::Usage(format!("{path}: {e}")))?,
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Invert { a, modulus, algorithm } => {
            let req = parse_request(&a, &modulus)?;
            println!("{:#x}", invert(&req, algorithm)?);
        }
        Command::Verify { a, x, modulus } => {
            let radix = parse_radix(&modulus.radix)?;
            let (a, x) = (Nat::parse(&a)?, Nat::parse(&x)?);
            if modulus.k < 1 {
                return Err(Failure::Usage("k must be at least 1".into()));
            }
            if verify(&a, &x, radix, modulus.k) {
                println!("OK");
            } else {
                println!("FAIL");
                return Err(Failure::Verify);
            }
        }
        Command::Explain { a, modulus, koc } => {
            let req = parse_request(&a, &modulus)?;
            print!("{}", explain(&req, koc)?);
        }
        Command::Bench { sizes, reps, warmup, seed, format, output } => {
            run_bench(sizes, reps, warmup, seed, format, output)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_PARSE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::NotInvertible(gcd)) => {
            eprintln!("not invertible: gcd={gcd}");
            ExitCode::from(EXIT_NOT_INVERTIBLE)
        }
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY_FAIL),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radix_keyword() {
        assert_eq!(parse_radix("limb").unwrap(), Radix::LimbBase);
        assert_eq!(parse_radix("0x10").unwrap(), Radix::Small(16));
        assert_eq!(parse_radix("18446744073709551616").unwrap(), Radix::LimbBase);
        assert!(parse_radix("1").is_err());
        assert!(parse_radix("two").is_err());
    }
}
