//! Closed-form commutation probabilities, random instance generators and the
//! gate-set ratio experiment.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::{CliffordCircuit, CliffordGate};
use crate::coloring::{greedy_color, OrderingStrategy};
use crate::field::PrimeDimension;
use crate::graph::{build_graph, GateSetMode};
use crate::pauli::{PauliOperator, PauliSet};
use crate::{Error, Result};

/// Exact rational probability.
pub type ExactRatio = Ratio<BigUint>;

pub fn ratio_to_f64(r: &ExactRatio) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
    let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
    n / d
}

fn big_pow(q: PrimeDimension, exp: u32) -> BigUint {
    BigUint::from(q.get()).pow(exp)
}

fn check_length(m: usize) -> Result<u32> {
    match u32::try_from(m) {
        Ok(m) if m >= 1 => Ok(m),
        _ => Err(Error::InvalidArgument(format!("length must be at least 1, got {m}"))),
    }
}

/// `(q^{2m−1} − 2) / (q^{2m} − 1)`: the chance that a second non-identity
/// operator commutes with a fixed non-identity operator and is neither the
/// identity nor the operator itself, out of all non-identity operators.
pub fn pair_commute_probability(q: PrimeDimension, m: usize) -> Result<ExactRatio> {
    let m = check_length(m)?;
    let numer = big_pow(q, 2 * m - 1) - BigUint::from(2u32);
    let denom = big_pow(q, 2 * m) - BigUint::from(1u32);
    Ok(Ratio::new(numer, denom))
}

/// Probability that two uniform operators of `P_q[m]`, identity included,
/// commute: `(q^{2m} + (q^{2m} − 1) q^{2m−1}) / q^{4m}`. Same sampling
/// convention as [`quditwise_commute_probability`].
pub fn commute_probability_all_pairs(q: PrimeDimension, m: usize) -> Result<ExactRatio> {
    let m = check_length(m)?;
    let total = big_pow(q, 2 * m);
    let numer = &total + (&total - BigUint::from(1u32)) * big_pow(q, 2 * m - 1);
    Ok(Ratio::new(numer, big_pow(q, 4 * m)))
}

/// Per-qudit probability that two uniform single-qudit operators commute,
/// `(q³ + q² − q) / q⁴`.
pub fn qudit_commute_probability(q: PrimeDimension) -> ExactRatio {
    let qb = BigUint::from(q.get());
    let numer = qb.pow(3) + qb.pow(2) - &qb;
    Ratio::new(numer, qb.pow(4))
}

/// `((q³ + q² − q) / q⁴)^m`: two uniform length-`m` operators commute on
/// every qudit.
pub fn quditwise_commute_probability(q: PrimeDimension, m: usize) -> Result<ExactRatio> {
    let m = check_length(m)?;
    let per = qudit_commute_probability(q);
    Ok(Ratio::new(per.numer().pow(m), per.denom().pow(m)))
}

/// The variant `((q³ + q² − q)^m − q^{2m}) / (q⁴)^m`.
pub fn quditwise_commute_probability_subtracted(q: PrimeDimension, m: usize) -> Result<ExactRatio> {
    let m = check_length(m)?;
    let qb = BigUint::from(q.get());
    let base = qb.pow(3) + qb.pow(2) - &qb;
    Ok(Ratio::new(base.pow(m) - qb.pow(2 * m), qb.pow(4 * m)))
}

/// `∏_{i=0}^{s−1} (1 − q^{i−2m})`, the probability that `s` uniform vectors of
/// `Z_q^{2m}` are linearly independent. Zero once `s > 2m`.
pub fn linear_independence_probability(q: PrimeDimension, m: usize, s: usize) -> f64 {
    let qf = q.get() as f64;
    let mut p = 1.0;
    for i in 0..s {
        let factor = 1.0 - libm::pow(qf, i as f64 - 2.0 * m as f64);
        if factor <= 0.0 {
            return 0.0;
        }
        p *= factor;
    }
    p
}

/// Leading-order chromatic number of `G(n, p)`:
/// `½ · log₂(1/(1−p)) · n / log₂ n`.
pub fn expected_chromatic(n: usize, p: f64) -> Result<f64> {
    if n < 2 || !(0.0..1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("need n >= 2 and 0 <= p < 1, got n={n}, p={p}")));
    }
    let n = n as f64;
    Ok(0.5 * libm::log2(1.0 / (1.0 - p)) * n / libm::log2(n))
}

fn random_operator(q: PrimeDimension, n: usize, rng: &mut ChaCha8Rng) -> PauliOperator {
    let mut draw = || (0..n).map(|_| rng.gen_range(0..q.get())).collect::<Vec<_>>();
    let x = draw();
    let z = draw();
    PauliOperator::new(q, x, z).expect("exponents drawn in range")
}

fn random_non_identity(q: PrimeDimension, n: usize, rng: &mut ChaCha8Rng) -> PauliOperator {
    loop {
        let p = random_operator(q, n, rng);
        if !p.is_identity() {
            return p;
        }
    }
}

/// Uniform operator of `P_q[n]`, identity included.
pub fn random_operator_seeded(q: PrimeDimension, n: usize, rng: &mut impl Rng) -> PauliOperator {
    let x = (0..n).map(|_| rng.gen_range(0..q.get())).collect();
    let z = (0..n).map(|_| rng.gen_range(0..q.get())).collect();
    PauliOperator::new(q, x, z).expect("exponents drawn in range")
}

/// Below this many candidates the draw enumerates indices directly.
const ENUMERATION_LIMIT: u64 = 1 << 20;

/// `size` distinct non-identity operators drawn uniformly without replacement
/// from `P_q[m]`.
pub fn random_pauli_set(q: PrimeDimension, m: usize, size: usize, seed: u64) -> Result<PauliSet> {
    check_length(m)?;
    if size == 0 {
        return Err(Error::InvalidArgument("set size must be at least 1".into()));
    }
    let available = u32::try_from(2 * m).ok().and_then(|e| q.checked_power(e)).map(|t| t - 1);
    if let Some(available) = available {
        if size as u64 > available {
            return Err(Error::SetTooLarge { requested: size as u64, available });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let operators = match available {
        Some(available) if available < ENUMERATION_LIMIT => index::sample(&mut rng, available as usize, size)
            .into_iter()
            .map(|i| PauliOperator::from_index(q, m, i as u64 + 1))
            .collect::<Result<Vec<_>>>()?,
        _ => {
            let mut seen = BTreeSet::new();
            let mut ops = Vec::with_capacity(size);
            while ops.len() < size {
                let p = random_non_identity(q, m, &mut rng);
                if seen.insert(p.clone()) {
                    ops.push(p);
                }
            }
            ops
        }
    };
    PauliSet::new(q, m, operators)
}

/// Output of [`random_commuting_set`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingSample {
    pub set: PauliSet,
    /// False when the attempt budget ran out before reaching the requested
    /// size; `set` then holds what was collected.
    pub complete: bool,
}

/// Pairwise-commuting distinct non-identity operators: uniform draws are kept
/// when they commute with everything kept so far.
pub fn random_commuting_set(q: PrimeDimension, n: usize, size: usize, seed: u64) -> Result<CommutingSample> {
    random_commuting_set_with_budget(q, n, size, seed, 1000 * size.max(1))
}

pub fn random_commuting_set_with_budget(
    q: PrimeDimension,
    n: usize,
    size: usize,
    seed: u64,
    attempts: usize,
) -> Result<CommutingSample> {
    check_length(n)?;
    if size == 0 {
        return Err(Error::InvalidArgument("set size must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kept: Vec<PauliOperator> = Vec::with_capacity(size);
    for _ in 0..attempts {
        if kept.len() == size {
            break;
        }
        let p = random_non_identity(q, n, &mut rng);
        if !kept.contains(&p) && kept.iter().all(|k| k.commutes(&p).expect("same shape")) {
            kept.push(p);
        }
    }
    let complete = kept.len() == size;
    Ok(CommutingSample { set: PauliSet::new(q, n, kept)?, complete })
}

/// A random circuit of `depth` gates on `n` qudits.
pub fn random_circuit(q: PrimeDimension, n: usize, depth: usize, rng: &mut impl Rng) -> CliffordCircuit {
    let mut c = CliffordCircuit::new(q, n);
    for _ in 0..depth {
        let kind = if n >= 2 { rng.gen_range(0..3) } else { rng.gen_range(0..2) };
        let gate = match kind {
            0 => CliffordGate::F { target: rng.gen_range(0..n) },
            1 => CliffordGate::R { target: rng.gen_range(0..n), power: rng.gen_range(1..q.get()) },
            _ => {
                let control = rng.gen_range(0..n);
                let target = (control + rng.gen_range(1..n)) % n;
                CliffordGate::Sum { control, target }
            }
        };
        c.push(gate).expect("gate drawn in range");
    }
    c
}

/// Commuting set built by symplectic closure: random combinations of `rank`
/// independent `Z`-type generators, scrambled by a random Clifford circuit.
/// May contain repeats and the identity.
pub fn random_closure_set(q: PrimeDimension, n: usize, size: usize, seed: u64) -> Result<PauliSet> {
    check_length(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank = rng.gen_range(1..=n);
    let generators: Vec<PauliOperator> =
        (0..rank).map(|i| PauliOperator::single(q, n, i, 0, 1)).collect::<Result<_>>()?;
    let scramble = random_circuit(q, n, 4 * n * n, &mut rng);
    let mut ops = Vec::with_capacity(size);
    for _ in 0..size {
        let mut p = PauliOperator::identity(q, n)?;
        for g in &generators {
            p = p.product(&g.power(rng.gen_range(0..q.get())))?;
        }
        ops.push(scramble.conjugate(&p)?);
    }
    PauliSet::new(q, n, ops)
}

/// How many operators to draw per sample at a given length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetSizeRule {
    /// `min(8m, 200)`.
    Default,
    Fixed(usize),
}

impl SetSizeRule {
    /// Requested size, capped at the number of non-identity operators.
    pub fn size(self, q: PrimeDimension, m: usize) -> usize {
        let wanted = match self {
            SetSizeRule::Default => (8 * m).min(200),
            SetSizeRule::Fixed(k) => k,
        };
        let available = u32::try_from(2 * m).ok().and_then(|e| q.checked_power(e)).map_or(u64::MAX, |t| t - 1);
        wanted.min(usize::try_from(available).unwrap_or(usize::MAX))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub q: PrimeDimension,
    pub lengths: Vec<usize>,
    pub set_size: SetSizeRule,
    pub samples_per_length: usize,
    pub seed: u64,
    pub ordering: OrderingStrategy,
}

impl ExperimentConfig {
    pub fn new(q: PrimeDimension, lengths: Vec<usize>, samples_per_length: usize, seed: u64) -> Self {
        ExperimentConfig {
            q,
            lengths,
            set_size: SetSizeRule::Default,
            samples_per_length,
            seed,
            ordering: OrderingStrategy::Natural,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.lengths.is_empty() || self.lengths.contains(&0) {
            return Err(Error::InvalidArgument("lengths must be non-empty and at least 1".into()));
        }
        if self.samples_per_length == 0 {
            return Err(Error::InvalidArgument("samples per length must be at least 1".into()));
        }
        if self.set_size == SetSizeRule::Fixed(0) {
            return Err(Error::InvalidArgument("set size must be at least 1".into()));
        }
        Ok(())
    }

    /// Seed for sample `index` of every length.
    pub fn sample_seed(&self, index: usize) -> u64 {
        self.seed.wrapping_add(index as u64)
    }
}

/// Part counts of one random set under both gate sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleOutcome {
    pub parts_single_qudit: usize,
    pub parts_clifford: usize,
}

/// Draws sample `index` at length `m` and greedily colors both graphs.
pub fn ratio_sample(cfg: &ExperimentConfig, m: usize, index: usize) -> Result<SampleOutcome> {
    let size = cfg.set_size.size(cfg.q, m);
    let set = random_pauli_set(cfg.q, m, size, cfg.sample_seed(index))?;
    let parts = |mode| greedy_color(&build_graph(&set, mode), cfg.ordering).num_colors();
    Ok(SampleOutcome {
        parts_single_qudit: parts(GateSetMode::SingleQuditClifford),
        parts_clifford: parts(GateSetMode::FullClifford),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioRecord {
    pub length: usize,
    pub mean_parts_single_qudit: f64,
    pub mean_parts_clifford: f64,
    pub ratio: f64,
}

impl RatioRecord {
    pub fn from_samples(length: usize, samples: &[SampleOutcome]) -> Self {
        let count = samples.len().max(1) as f64;
        let sq = samples.iter().map(|s| s.parts_single_qudit as f64).sum::<f64>() / count;
        let c = samples.iter().map(|s| s.parts_clifford as f64).sum::<f64>() / count;
        let ratio = if c > 0.0 { sq / c } else { 0.0 };
        RatioRecord { length, mean_parts_single_qudit: sq, mean_parts_clifford: c, ratio }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioReport {
    pub records: Vec<RatioRecord>,
}

impl RatioReport {
    /// Least-squares slope of ratio against length; zero with fewer than two
    /// distinct lengths.
    pub fn slope(&self) -> f64 {
        let n = self.records.len() as f64;
        if self.records.len() < 2 {
            return 0.0;
        }
        let mx = self.records.iter().map(|r| r.length as f64).sum::<f64>() / n;
        let my = self.records.iter().map(|r| r.ratio).sum::<f64>() / n;
        let (mut sxy, mut sxx) = (0.0, 0.0);
        for r in &self.records {
            let dx = r.length as f64 - mx;
            sxy += dx * (r.ratio - my);
            sxx += dx * dx;
        }
        if sxx == 0.0 {
            0.0
        } else {
            sxy / sxx
        }
    }

    pub fn record(&self, length: usize) -> Option<&RatioRecord> {
        self.records.iter().find(|r| r.length == length)
    }
}

/// Runs every sample of every length sequentially.
pub fn ratio_experiment(cfg: &ExperimentConfig) -> Result<RatioReport> {
    cfg.validate()?;
    let records = cfg
        .lengths
        .iter()
        .map(|&m| {
            let samples = (0..cfg.samples_per_length).map(|i| ratio_sample(cfg, m, i)).collect::<Result<Vec<_>>>()?;
            Ok(RatioRecord::from_samples(m, &samples))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RatioReport { records })
}
