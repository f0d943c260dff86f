//! Synthetic Hamiltonian files for fuzzing and demos.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random Hamiltonian file over `q` with `n` qudits and `terms` terms.
///
/// Mixes real and complex coefficients, bare operators, comments, repeated
/// operators and identity terms; for `q = 2` both letter and token spellings
/// are used.
pub fn random_hamiltonian_text(q: u32, n: usize, terms: usize, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = format!("# synthetic fixture, seed {seed}\nq {q}\n");
    if rng.gen_bool(0.5) {
        out.push_str(&format!("n {n}\n"));
    }
    let mut previous: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    for _ in 0..terms {
        let (x, z) = match rng.gen_range(0..10) {
            0 if !previous.is_empty() => previous[rng.gen_range(0..previous.len())].clone(),
            1 => (vec![0; n], vec![0; n]),
            _ => ((0..n).map(|_| rng.gen_range(0..q)).collect(), (0..n).map(|_| rng.gen_range(0..q)).collect()),
        };
        let pauli = if q == 2 && rng.gen_bool(0.8) {
            x.iter()
                .zip(&z)
                .map(|p| match p {
                    (0, 0) => 'I',
                    (1, 0) => 'X',
                    (1, 1) => 'Y',
                    _ => 'Z',
                })
                .collect::<String>()
        } else {
            x.iter().zip(&z).map(|(a, b)| format!("X{a}Z{b}")).collect::<Vec<_>>().join(".")
        };
        let re: f64 = rng.gen_range(-2.0..2.0);
        let line = match rng.gen_range(0..6) {
            0 => pauli.clone(),
            1 => format!("{re:.6}{:+.6}i {pauli}", rng.gen_range(-1.0..1.0)),
            2 => format!("{re:e} {pauli}  # term"),
            _ => format!("{re:.6} {pauli}"),
        };
        out.push_str(&line);
        out.push('\n');
        previous.push((x, z));
    }
    out
}
