//! Timing harness comparing inversion modulo `2^bits` across algorithms.
//!
//! Each (size, algorithm) cell first checks every output against a full
//! product, then times `reps` samples after `warmup` discarded ones. A sample
//! is a batch of back-to-back calls sized to last at least
//! [`MIN_SAMPLE_NS`], reported per call.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digit_inverse::word_inverse_pow2_hensel;
use crate::error::{Error, Result};
use crate::mp::{add_assign_limbs, mul_low, neg_limbs, Limb, Nat, Radix, LIMB_BITS};
use crate::power_inverse::{koc_inverse_pow2_bitwise, radix_inverse_limb_base, radix_inverse_pow2_bitwise};

/// Lower bound on the wall time of one timed sample.
pub const MIN_SAMPLE_NS: u128 = 2_000;
/// Distinct random inputs per size; samples cycle through them.
const INPUT_POOL: usize = 64;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BenchAlgorithm {
    /// Carry-recurrence inversion with `n = 2^W`, Hensel-seeded.
    RadixLimbBase,
    /// Binary Koç.
    BitwiseKoc,
    /// Carry-recurrence inversion with `n = 2`.
    BitwiseRadix,
    /// Newton lifting `x ← x·(2 − a·x)` carried to the full modulus width.
    HenselFullwidthNewton,
}

impl BenchAlgorithm {
    pub const ALL: [BenchAlgorithm; 4] = [
        BenchAlgorithm::RadixLimbBase,
        BenchAlgorithm::BitwiseKoc,
        BenchAlgorithm::BitwiseRadix,
        BenchAlgorithm::HenselFullwidthNewton,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchAlgorithm::RadixLimbBase => "radix_limb_base",
            BenchAlgorithm::BitwiseKoc => "bitwise_koc",
            BenchAlgorithm::BitwiseRadix => "bitwise_radix",
            BenchAlgorithm::HenselFullwidthNewton => "hensel_fullwidth_newton",
        }
    }

    /// Inverse of odd `a` modulo `2^bits`.
    pub fn invert(self, a: &Nat, bits: usize) -> Result<Nat> {
        let limbs = bits / LIMB_BITS as usize;
        match self {
            BenchAlgorithm::RadixLimbBase => radix_inverse_limb_base(a, limbs),
            BenchAlgorithm::BitwiseKoc => koc_inverse_pow2_bitwise(a, bits),
            BenchAlgorithm::BitwiseRadix => radix_inverse_pow2_bitwise(a, bits),
            BenchAlgorithm::HenselFullwidthNewton => hensel_fullwidth_inverse(a, limbs),
        }
    }
}

/// Inverse of odd `a` modulo `2^(W·limbs)` by Newton iteration
/// `x ← x·(2 − a·x)` in multiprecision arithmetic, doubling the working
/// precision each step from the one-limb Hensel seed.
pub fn hensel_fullwidth_inverse(a: &Nat, limbs: usize) -> Result<Nat> {
    if limbs < 1 {
        return Err(Error::InvalidModulus("limb count must be at least 1".into()));
    }
    let mut al = vec![0 as Limb; limbs];
    let src = &a.limbs()[..a.limbs().len().min(limbs)];
    al[..src.len()].copy_from_slice(src);
    let mut x = vec![0 as Limb; limbs];
    x[0] = word_inverse_pow2_hensel(al[0])?;
    let mut e = vec![0 as Limb; limbs];
    let mut next = vec![0 as Limb; limbs];
    let mut m = 1;
    while m < limbs {
        let m2 = (2 * m).min(limbs);
        mul_low(&al[..m2], &x[..m], &mut e[..m2]);
        debug_assert!(e[0] == 1 && e[1..m].iter().all(|&l| l == 0));
        neg_limbs(&mut e[..m2]);
        add_assign_limbs(&mut e[..m2], &[2]);
        mul_low(&x[..m], &e[..m2], &mut next[..m2]);
        x[..m2].copy_from_slice(&next[..m2]);
        m = m2;
    }
    Ok(Nat::from_limbs(x))
}

/// One measured cell of the comparison table.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub algorithm: BenchAlgorithm,
    pub modulus_bits: usize,
    pub reps: usize,
    pub median_ns: f64,
    pub mean_ns: f64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub reps: usize,
    pub warmup: usize,
    pub seed: u64,
    pub algorithms: Vec<BenchAlgorithm>,
}

pub const DEFAULT_SIZES: [usize; 7] = [128, 256, 512, 1024, 2048, 3072, 4096];

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: DEFAULT_SIZES.to_vec(),
            reps: 1000,
            warmup: 100,
            seed: 0x5eed_1e55_c0ff_ee00,
            algorithms: BenchAlgorithm::ALL.to_vec(),
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.reps == 0 {
            return Err(Error::Domain("reps must be at least 1"));
        }
        for &s in &self.sizes {
            if s == 0 || s % LIMB_BITS as usize != 0 {
                return Err(Error::InvalidModulus(format!(
                    "size {s} is not a positive multiple of {LIMB_BITS}"
                )));
            }
        }
        Ok(())
    }
}

/// Odd pseudorandom `bits`-bit inputs, reproducible from `seed`.
pub fn generate_inputs(seed: u64, bits: usize, count: usize) -> Vec<Nat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (bits as u64).rotate_left(32));
    (0..count)
        .map(|_| {
            let mut limbs: Vec<Limb> = (0..bits / LIMB_BITS as usize).map(|_| rng.gen()).collect();
            limbs[0] |= 1;
            Nat::from_limbs(limbs)
        })
        .collect()
}

fn check(alg: BenchAlgorithm, a: &Nat, x: &Nat, bits: usize) -> Result<()> {
    let limbs = bits / LIMB_BITS as usize;
    if a.mul(x).mod_pow_of_radix(Radix::LimbBase, limbs).is_one() {
        Ok(())
    } else {
        Err(Error::Verification(format!(
            "{} returned a wrong inverse at {bits} bits for a={a:#x}",
            alg.name()
        )))
    }
}

fn time_batch(alg: BenchAlgorithm, inputs: &[Nat], start: usize, batch: usize, bits: usize) -> u128 {
    let t = Instant::now();
    for j in 0..batch {
        let a = &inputs[(start + j) % inputs.len()];
        let _ = black_box(alg.invert(black_box(a), bits));
    }
    t.elapsed().as_nanos()
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

/// Runs every configured algorithm at every size. Aborts on the first wrong
/// answer.
pub fn run_suite(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    cfg.validate()?;
    let mut records = Vec::new();
    for &bits in &cfg.sizes {
        let inputs = generate_inputs(cfg.seed, bits, cfg.reps.min(INPUT_POOL));
        for &alg in &cfg.algorithms {
            for a in &inputs {
                check(alg, a, &alg.invert(a, bits)?, bits)?;
            }
            records.push(measure(alg, &inputs, bits, cfg));
        }
    }
    records.sort_by_key(|r| (r.modulus_bits, r.algorithm));
    Ok(records)
}

fn measure(alg: BenchAlgorithm, inputs: &[Nat], bits: usize, cfg: &BenchConfig) -> BenchRecord {
    let mut cursor = 0;
    for _ in 0..cfg.warmup {
        time_batch(alg, inputs, cursor, 1, bits);
        cursor += 1;
    }
    let single = time_batch(alg, inputs, cursor, 8, bits).max(1) / 8;
    let batch = (MIN_SAMPLE_NS / single.max(1)).clamp(1, 10_000) as usize;

    let mut samples = Vec::with_capacity(cfg.reps);
    for _ in 0..cfg.reps {
        let ns = time_batch(alg, inputs, cursor, batch, bits);
        cursor += batch;
        samples.push(ns as f64 / batch as f64);
    }
    samples.sort_by(f64::total_cmp);
    let mean = samples.iter().sum::<f64>() / samples.len() as f64;
    BenchRecord {
        algorithm: alg,
        modulus_bits: bits,
        reps: cfg.reps,
        median_ns: median(&samples),
        mean_ns: mean,
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Markdown,
}

pub const CSV_HEADER: &str = "algorithm,modulus_bits,reps,median_ns,mean_ns";

pub fn emit(records: &[BenchRecord], format: Format) -> String {
    match format {
        Format::Csv => emit_csv(records),
        Format::Markdown => emit_markdown(records),
    }
}

fn emit_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{:.2},{:.2}",
            r.algorithm.name(),
            r.modulus_bits,
            r.reps,
            r.median_ns,
            r.mean_ns
        );
    }
    out
}

/// One row per modulus size, one column per algorithm, median ns per cell.
fn emit_markdown(records: &[BenchRecord]) -> String {
    let mut algs: Vec<BenchAlgorithm> = records.iter().map(|r| r.algorithm).collect();
    algs.sort();
    algs.dedup();
    let mut sizes: Vec<usize> = records.iter().map(|r| r.modulus_bits).collect();
    sizes.sort();
    sizes.dedup();

    let mut out = String::from("| modulus bits |");
    for a in &algs {
        let _ = write!(out, " {} |", a.name());
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(algs.len()));
    out.push('\n');
    for s in sizes {
        let _ = write!(out, "| {s} |");
        for &a in &algs {
            match records.iter().find(|r| r.modulus_bits == s && r.algorithm == a) {
                Some(r) => {
                    let _ = write!(out, " {:.2} |", r.median_ns);
                }
                None => out.push_str(" - |"),
            }
        }
        out.push('\n');
    }
    out
}

/// `#`-prefixed header lines describing the build and run.
pub fn metadata_header(cfg: &BenchConfig) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# powinv bench, median and mean ns per inversion");
    let _ = writeln!(
        out,
        "# target: {} {}, limb bits {}, debug assertions {}",
        std::env::consts::ARCH,
        std::env::consts::OS,
        LIMB_BITS,
        cfg!(debug_assertions)
    );
    let _ = writeln!(
        out,
        "# reps {}, warmup {}, seed {:#x}, min sample {} ns",
        cfg.reps, cfg.warmup, cfg.seed, MIN_SAMPLE_NS
    );
    for &bits in &cfg.sizes {
        if let Some(first) = generate_inputs(cfg.seed, bits, 1).first() {
            let _ = writeln!(out, "# input[{bits}][0] = {first:#x}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_inverse;

    fn record(alg: BenchAlgorithm, bits: usize) -> BenchRecord {
        BenchRecord { algorithm: alg, modulus_bits: bits, reps: 10, median_ns: 12.5, mean_ns: 13.0 }
    }

    #[test]
    fn newton_matches_oracle() {
        for (bits, seed) in [(64, 1), (128, 2), (192, 3), (320, 4), (1024, 5)] {
            let m = Nat::one().shl_bits(bits as u64);
            for a in generate_inputs(seed, bits, 20) {
                let x = hensel_fullwidth_inverse(&a, bits / 64).unwrap();
                assert_eq!(x, oracle_inverse(&a, &m).unwrap());
            }
        }
        assert!(hensel_fullwidth_inverse(&Nat::from_u64(4), 2).is_err());
    }

    #[test]
    fn all_algorithms_agree() {
        for bits in [64, 128, 256, 576] {
            for a in generate_inputs(9, bits, 10) {
                let outs: Vec<Nat> =
                    BenchAlgorithm::ALL.iter().map(|alg| alg.invert(&a, bits).unwrap()).collect();
                assert!(outs.windows(2).all(|w| w[0] == w[1]), "bits={bits}");
            }
        }
    }

    #[test]
    fn inputs_are_deterministic_and_odd() {
        let x = generate_inputs(42, 256, 5);
        assert_eq!(x, generate_inputs(42, 256, 5));
        assert_ne!(x, generate_inputs(43, 256, 5));
        assert!(x.iter().all(|a| a.is_odd() && a.bits() <= 256));
    }

    #[test]
    fn validate_sizes() {
        let mut cfg = BenchConfig { sizes: vec![100], ..Default::default() };
        assert!(cfg.validate().is_err());
        cfg.sizes = vec![0];
        assert!(cfg.validate().is_err());
        cfg.sizes = vec![128];
        cfg.reps = 0;
        assert!(cfg.validate().is_err());
        assert!(BenchConfig::default().validate().is_ok());
    }

    #[test]
    fn csv_shapes() {
        assert_eq!(emit(&[], Format::Csv), format!("{CSV_HEADER}\n"));
        let one = emit(&[record(BenchAlgorithm::BitwiseKoc, 128)], Format::Csv);
        assert_eq!(one.lines().count(), 2);
        assert_eq!(one.lines().nth(1).unwrap(), "bitwise_koc,128,10,12.50,13.00");
    }

    #[test]
    fn markdown_layout() {
        let recs = vec![
            record(BenchAlgorithm::RadixLimbBase, 128),
            record(BenchAlgorithm::BitwiseKoc, 128),
            record(BenchAlgorithm::RadixLimbBase, 256),
        ];
        let md = emit(&recs, Format::Markdown);
        let lines: Vec<&str> = md.lines().collect();
        assert_eq!(lines[0], "| modulus bits | radix_limb_base | bitwise_koc |");
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[3], "| 256 | 12.50 | - |");
    }

    #[test]
    fn small_suite_structure() {
        let cfg = BenchConfig { sizes: vec![128], reps: 10, warmup: 2, ..Default::default() };
        let recs = run_suite(&cfg).unwrap();
        assert_eq!(recs.len(), 4);
        assert!(recs.iter().all(|r| r.median_ns > 0.0 && r.reps == 10 && r.modulus_bits == 128));
        let algs: Vec<_> = recs.iter().map(|r| r.algorithm).collect();
        assert_eq!(algs, BenchAlgorithm::ALL.to_vec());
    }
}
