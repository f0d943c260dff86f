//! Closed-form probabilities checked against exhaustive enumeration and Monte
//! Carlo sampling. Commutation in the enumerations is decided by dense
//! matrices, not by the symplectic form.

use num_bigint::BigUint;
use num_rational::Ratio;
use qupart_core::simulate::matrices_commute;
use qupart_core::stats::{
    linear_independence_probability, pair_commute_probability, quditwise_commute_probability, random_pauli_set,
    ratio_to_f64, ExactRatio,
};
use qupart_core::{PauliOperator, PauliSet, PrimeDimension};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn frac(n: usize, d: usize) -> ExactRatio {
    Ratio::new(BigUint::from(n), BigUint::from(d))
}

fn group(q: PrimeDimension, m: usize) -> Vec<PauliOperator> {
    let total = q.checked_power(2 * m as u32).unwrap();
    (0..total).map(|i| PauliOperator::from_index(q, m, i).unwrap()).collect()
}

struct PairCounts {
    /// Commuting `Q ∉ {I, P}`.
    commuting_excluding_identity_and_self: usize,
    /// Non-identity `Q`, `P` included.
    non_identity: usize,
    /// Non-identity `Q ≠ P`.
    non_identity_excluding_self: usize,
}

/// Counts for a fixed non-identity `P`; the same for every choice of `P`.
fn pair_counts(q: PrimeDimension, m: usize) -> PairCounts {
    let ops = group(q, m);
    let mut per_p = ops.iter().filter(|p| !p.is_identity()).map(|p| {
        let commuting = ops.iter().filter(|b| !b.is_identity() && *b != p && matrices_commute(p, b).unwrap()).count();
        (commuting, ops.len() - 1, ops.len() - 2)
    });
    let first = per_p.next().unwrap();
    assert!(per_p.all(|c| c == first));
    PairCounts {
        commuting_excluding_identity_and_self: first.0,
        non_identity: first.1,
        non_identity_excluding_self: first.2,
    }
}

#[test]
fn pair_formula_matches_enumeration() {
    for (qv, m) in [(2u32, 1usize), (2, 2), (3, 1)] {
        let q = PrimeDimension::new(qv).unwrap();
        let counts = pair_counts(q, m);
        let formula = pair_commute_probability(q, m).unwrap();
        // The formula divides by all non-identity operators, P included.
        assert_eq!(formula, frac(counts.commuting_excluding_identity_and_self, counts.non_identity), "q={qv} m={m}");
        if counts.commuting_excluding_identity_and_self > 0 {
            assert_ne!(formula, frac(counts.commuting_excluding_identity_and_self, counts.non_identity_excluding_self));
        }
    }
    let q2 = PrimeDimension::new(2).unwrap();
    let c = pair_counts(q2, 2);
    assert_eq!((c.commuting_excluding_identity_and_self, c.non_identity), (6, 15));
}

#[test]
fn quditwise_formula_matches_enumeration() {
    for (qv, m) in [(2u32, 1usize), (2, 2), (3, 1)] {
        let q = PrimeDimension::new(qv).unwrap();
        let ops = group(q, m);
        let mut hits = 0;
        for a in &ops {
            for b in &ops {
                // Quditwise: each single-qudit factor commutes as a matrix.
                let all = (0..m).all(|i| {
                    let fa = PauliOperator::single(q, 1, 0, a.x()[i], a.z()[i]).unwrap();
                    let fb = PauliOperator::single(q, 1, 0, b.x()[i], b.z()[i]).unwrap();
                    matrices_commute(&fa, &fb).unwrap()
                });
                hits += usize::from(all);
            }
        }
        assert_eq!(quditwise_commute_probability(q, m).unwrap(), frac(hits, ops.len() * ops.len()), "q={qv} m={m}");
    }
    let q2 = PrimeDimension::new(2).unwrap();
    assert_eq!(quditwise_commute_probability(q2, 1).unwrap(), frac(10, 16));
}

#[test]
fn independence_probability_matches_monte_carlo() {
    let q = PrimeDimension::new(2).unwrap();
    let (m, s, trials) = (2, 3, 100_000);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut hits = 0;
    for _ in 0..trials {
        let ops = (0..s)
            .map(|_| {
                let x = (0..m).map(|_| rng.gen_range(0..2)).collect();
                let z = (0..m).map(|_| rng.gen_range(0..2)).collect();
                PauliOperator::new(q, x, z).unwrap()
            })
            .collect();
        hits += usize::from(PauliSet::new(q, m, ops).unwrap().is_linearly_independent());
    }
    let p = linear_independence_probability(q, m, s);
    let rate = hits as f64 / trials as f64;
    let se = (p * (1.0 - p) / trials as f64).sqrt();
    assert!((rate - p).abs() < 3.0 * se, "rate {rate} vs {p}");
}

#[test]
fn sampled_pair_commutation_rate_matches_formula() {
    let q = PrimeDimension::new(2).unwrap();
    let (m, size, draws) = (4, 50, 10_000u64);
    let mut rates = Vec::with_capacity(draws as usize);
    for seed in 0..draws {
        let set = random_pauli_set(q, m, size, seed).unwrap();
        let ops = set.operators();
        let mut commuting = 0;
        for i in 0..size {
            for j in i + 1..size {
                commuting += usize::from(ops[i].commutes(&ops[j]).unwrap());
            }
        }
        rates.push(commuting as f64 / (size * (size - 1) / 2) as f64);
    }
    let mean = rates.iter().sum::<f64>() / draws as f64;
    let var = rates.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / (draws - 1) as f64;
    let se = (var / draws as f64).sqrt();
    // Distinct non-identity pairs commute with probability
    // (q^{2m-1} - 2) / (q^{2m} - 2); the closed form divides by q^{2m} - 1,
    // which this many draws can tell apart.
    let exact = 126.0 / 254.0;
    assert!((mean - exact).abs() < 3.0 * se, "mean {mean} vs {exact} (se {se})");
    let formula = ratio_to_f64(&pair_commute_probability(q, m).unwrap());
    assert!((mean - formula).abs() / formula < 0.01, "mean {mean} vs {formula}");
}
