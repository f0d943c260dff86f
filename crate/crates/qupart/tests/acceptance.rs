//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::Ratio;
use qupart::experiment::run_ratio_experiment;
use qupart::io::fixture::random_hamiltonian_text;
use qupart::io::parse_hamiltonian;
use qupart_core::coloring::exact_coloring;
use qupart_core::simulate::{matrices_commute, verify_conjugation, verify_diagonal};
use qupart_core::stats::{
    linear_independence_probability, pair_commute_probability, qudit_commute_probability, random_closure_set,
    random_commuting_set, random_pauli_set, ExperimentConfig,
};
use qupart_core::{
    build_graph, diagonalize, exact_chromatic, graph_roundtrip_check, greedy_color, is_diagonalized, make_plan,
    pauli_set_from_graph, CliffordGate, CommutationGraph, GateSetMode, OrderingStrategy, PauliOperator, PauliSet,
    PrimeDimension,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn q(v: u32) -> PrimeDimension {
    PrimeDimension::new(v).unwrap()
}

fn op(qd: PrimeDimension, x: &[u32], z: &[u32]) -> PauliOperator {
    PauliOperator::new(qd, x.to_vec(), z.to_vec()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn conjugation_rules() -> Check {
    let mut checked = 0;
    for qv in [2, 3, 5] {
        let qd = q(qv);
        let m1 = qv - 1;
        let f = CliffordGate::F { target: 0 };
        let r = CliffordGate::R { target: 0, power: 1 };
        let sum = CliffordGate::Sum { control: 0, target: 1 };
        let rules = [
            (f, op(qd, &[1], &[0]), op(qd, &[0], &[1])),
            (f, op(qd, &[0], &[1]), op(qd, &[m1], &[0])),
            (r, op(qd, &[1], &[0]), op(qd, &[1], &[1])),
            (r, op(qd, &[0], &[1]), op(qd, &[0], &[1])),
            (sum, op(qd, &[0, 1], &[0, 0]), op(qd, &[0, 1], &[0, 0])),
            (sum, op(qd, &[1, 0], &[0, 0]), op(qd, &[1, 1], &[0, 0])),
            (sum, op(qd, &[0, 0], &[0, 1]), op(qd, &[0, 0], &[m1, 1])),
            (sum, op(qd, &[0, 0], &[1, 0]), op(qd, &[0, 0], &[1, 0])),
        ];
        for (gate, input, expected) in rules {
            let image = gate.conjugate(&input).map_err(|e| e.to_string())?;
            ensure(image == expected, || format!("q={qv} {gate}: {input} -> {image}, expected {expected}"))?;
            ensure(verify_conjugation(&gate, &input).map_err(|e| e.to_string())?, || {
                format!("q={qv} {gate} on {input}: dense conjugation disagrees")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} rule instances"))
}

fn diagonalization() -> Check {
    let mut dense = 0;
    for i in 0..200u64 {
        let qd = q([2, 3, 5][i as usize % 3]);
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + i);
        let n = rng.gen_range(1..=4);
        let size = rng.gen_range(1..=8);
        let set = if i % 2 == 0 {
            random_commuting_set(qd, n, size, i).map_err(|e| e.to_string())?.set
        } else {
            random_closure_set(qd, n, size, i).map_err(|e| e.to_string())?
        };
        let circuit = diagonalize(&set).map_err(|e| format!("instance {i}: {e}"))?;
        let image = circuit.conjugate_set(&set).map_err(|e| e.to_string())?;
        ensure(is_diagonalized(&image), || format!("instance {i}: tableau image has X components"))?;
        if u64::from(qd.get()).pow(n as u32) <= 256 {
            ensure(verify_diagonal(&circuit, &set).map_err(|e| e.to_string())?, || {
                format!("instance {i}: dense image not diagonal")
            })?;
            dense += 1;
        }
    }
    Ok(format!("200 sets, {dense} also checked densely"))
}

fn group(qd: PrimeDimension, m: usize) -> Vec<PauliOperator> {
    let total = qd.checked_power(2 * m as u32).unwrap();
    (0..total).map(|i| PauliOperator::from_index(qd, m, i).unwrap()).collect()
}

fn frac(n: usize, d: usize) -> Ratio<BigUint> {
    Ratio::new(BigUint::from(n), BigUint::from(d))
}

fn commutation_counts() -> Check {
    let mut notes = Vec::new();
    for (qv, m) in [(2, 1), (2, 2), (3, 1)] {
        let qd = q(qv);
        let ops = group(qd, m);
        let p = ops.iter().find(|p| !p.is_identity()).unwrap();
        let commuting = ops.iter().filter(|b| !b.is_identity() && *b != p && matrices_commute(p, b).unwrap()).count();
        let counted = frac(commuting, ops.len() - 1);
        let formula = pair_commute_probability(qd, m).map_err(|e| e.to_string())?;
        ensure(counted == formula, || format!("pair q={qv} m={m}: counted {counted}, formula {formula}"))?;
        notes.push(format!("pair({qv},{m})={commuting}/{}", ops.len() - 1));
    }
    for qv in [2, 3] {
        let qd = q(qv);
        let ops = group(qd, 1);
        let hits = ops
            .iter()
            .flat_map(|a| ops.iter().map(move |b| (a, b)))
            .filter(|(a, b)| matrices_commute(a, b).unwrap())
            .count();
        let counted = frac(hits, ops.len() * ops.len());
        let formula = qudit_commute_probability(qd);
        ensure(counted == formula, || format!("quditwise q={qv}: counted {counted}, formula {formula}"))?;
        notes.push(format!("qudit({qv})={hits}/{}", ops.len() * ops.len()));
    }
    ensure(notes.contains(&"pair(2,2)=6/15".to_string()) && notes.contains(&"qudit(2)=10/16".to_string()), || {
        format!("unexpected counts {notes:?}")
    })?;
    Ok(notes.join(" "))
}

/// Independence over Z_q by trying every nontrivial combination.
fn independent_by_combinations(qv: u32, vectors: &[Vec<u32>]) -> bool {
    let s = vectors.len() as u32;
    let len = vectors[0].len();
    (1..qv.pow(s)).all(|mut code| {
        let mut sum = vec![0; len];
        for v in vectors {
            let c = code % qv;
            code /= qv;
            for (acc, x) in sum.iter_mut().zip(v) {
                *acc = (*acc + c * x) % qv;
            }
        }
        sum.iter().any(|&x| x != 0)
    })
}

fn linear_independence() -> Check {
    let qd = q(2);
    let (m, s, trials) = (2usize, 3usize, 100_000usize);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut hits = 0;
    for _ in 0..trials {
        let vectors: Vec<Vec<u32>> = (0..s).map(|_| (0..2 * m).map(|_| rng.gen_range(0..2)).collect()).collect();
        if independent_by_combinations(2, &vectors) {
            hits += 1;
        }
    }
    let expected = linear_independence_probability(qd, m, s);
    let observed = hits as f64 / trials as f64;
    let se = (expected * (1.0 - expected) / trials as f64).sqrt();
    ensure((observed - expected).abs() <= 3.0 * se, || {
        format!("observed {observed:.5}, expected {expected:.5}, 3SE {:.5}", 3.0 * se)
    })?;
    let limit = linear_independence_probability(qd, 10, 20);
    ensure((limit - 0.288788).abs() <= 1e-4, || format!("m=10 s=20 gives {limit:.6}"))?;
    Ok(format!("observed {observed:.5} vs {expected:.5} (3SE {:.5}); m=10 s=20 -> {limit:.6}", 3.0 * se))
}

fn reduction_round_trip() -> Check {
    for i in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(i);
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.0..=1.0);
        let g = CommutationGraph::random(n, p, i);
        let qd = q(if i % 2 == 0 { 2 } else { 3 });
        ensure(graph_roundtrip_check(&g, qd).map_err(|e| e.to_string())?, || format!("graph {i} failed"))?;
        let set = pauli_set_from_graph(&g, qd).map_err(|e| e.to_string())?;
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    let anticommute = !set.operators()[u].commutes(&set.operators()[v]).unwrap();
                    ensure(anticommute == g.has_edge(u, v), || format!("graph {i}: pair ({u},{v}) mismatch"))?;
                }
            }
        }
    }
    Ok("100 graphs".into())
}

fn ratio_table() -> Check {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut increases = 0;
    let mut first = String::new();
    for run in 0..10u64 {
        let cfg = ExperimentConfig::new(q(2), (1..=8).collect(), 5, 1000 * run);
        let report = run_ratio_experiment(&cfg, threads).map_err(|e| e.to_string())?;
        let r1 = report.record(1).unwrap().ratio;
        ensure(r1 == 1.0, || format!("run {run}: length-1 ratio {r1}"))?;
        ensure(report.slope() > 0.0, || format!("run {run}: slope {}", report.slope()))?;
        let (r2, r8) = (report.record(2).unwrap().ratio, report.record(8).unwrap().ratio);
        if r8 > r2 {
            increases += 1;
        }
        if run == 0 {
            first = format!("run 0: ratio(2)={r2:.3} ratio(8)={r8:.3} slope={:.4}", report.slope());
        }
    }
    ensure(increases >= 9, || format!("ratio(8) > ratio(2) in only {increases}/10 runs"))?;
    Ok(format!("{first}; ratio(8) > ratio(2) in {increases}/10 runs"))
}

fn mub_counts() -> Check {
    let qd = q(2);
    let mut notes = Vec::new();
    for (m, want, clique) in [
        (1, 3, vec![op(qd, &[1], &[0]), op(qd, &[1], &[1]), op(qd, &[0], &[1])]),
        (
            2,
            5,
            vec![
                op(qd, &[1, 0], &[0, 0]),
                op(qd, &[0, 0], &[1, 0]),
                op(qd, &[1, 1], &[1, 0]),
                op(qd, &[1, 0], &[1, 1]),
                op(qd, &[1, 1], &[1, 1]),
            ],
        ),
    ] {
        let set = PauliSet::all_non_identity(qd, m).map_err(|e| e.to_string())?;
        let g = build_graph(&set, GateSetMode::FullClifford);
        let chi = exact_chromatic(&g, 20).map_err(|e| e.to_string())?;
        ensure(chi == want, || format!("m={m}: exact chromatic {chi}, expected {want}"))?;
        // Certificate: a pairwise anticommuting clique of size `want` and a
        // proper coloring with `want` colors.
        for a in &clique {
            for b in &clique {
                ensure(a == b || !matrices_commute(a, b).unwrap(), || format!("{a} and {b} commute"))?;
            }
        }
        let coloring = exact_coloring(&g, 20).map_err(|e| e.to_string())?;
        ensure(coloring.is_proper(&g) && coloring.num_colors() == want, || format!("m={m}: bad coloring"))?;
        notes.push(format!("m={m}: {chi}"));
    }
    Ok(notes.join(", "))
}

fn exact_vs_greedy() -> Check {
    for i in 0..50u64 {
        let qd = q(if i % 2 == 0 { 2 } else { 3 });
        let mut rng = ChaCha8Rng::seed_from_u64(500 + i);
        let m = rng.gen_range(1..=3);
        let available = qd.checked_power(2 * m as u32).unwrap() as usize - 1;
        let size = rng.gen_range(1..=15.min(available));
        let set = random_pauli_set(qd, m, size, i).map_err(|e| e.to_string())?;
        let mut exact = [0; 2];
        for (k, mode) in [GateSetMode::FullClifford, GateSetMode::SingleQuditClifford].into_iter().enumerate() {
            let g = build_graph(&set, mode);
            exact[k] = exact_chromatic(&g, 20).map_err(|e| e.to_string())?;
            let greedy = greedy_color(&g, OrderingStrategy::Natural).num_colors();
            ensure(greedy >= exact[k], || format!("set {i} {mode:?}: greedy {greedy} < exact {}", exact[k]))?;
        }
        ensure(exact[0] <= exact[1], || format!("set {i}: full {} > single-qudit {}", exact[0], exact[1]))?;
    }
    Ok("50 sets".into())
}

fn plan_fuzzing() -> Check {
    let mut parts = [0usize; 2];
    for seed in 0..500u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let qv = [2, 3, 5][rng.gen_range(0..3)];
        let n = rng.gen_range(1..=4);
        let terms = rng.gen_range(1..=30);
        let text = random_hamiltonian_text(qv, n, terms, seed);
        let h = parse_hamiltonian(&text).map_err(|e| format!("fixture {seed}: {e}"))?;
        ensure(h.terms.len() == terms, || format!("fixture {seed}: {} terms parsed", h.terms.len()))?;
        for (k, mode) in [GateSetMode::FullClifford, GateSetMode::SingleQuditClifford].into_iter().enumerate() {
            let plan = make_plan(&h.terms, mode, OrderingStrategy::Natural).map_err(|e| e.to_string())?;
            plan.validate().map_err(|v| format!("fixture {seed} {mode:?}: {v}"))?;
            parts[k] += plan.num_parts();
        }
    }
    Ok(format!("500 fixtures, {} clifford parts, {} single-qudit parts", parts[0], parts[1]))
}

fn random_graph_coloring() -> Check {
    let g = CommutationGraph::random(4096, 0.5, 2024);
    let colors = greedy_color(&g, OrderingStrategy::Natural).num_colors();
    ensure((307..=614).contains(&colors), || format!("{colors} colors"))?;
    Ok(format!("{colors} colors"))
}

type Criterion = (&'static str, fn() -> Check, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("conjugation rules", conjugation_rules, Duration::from_secs(5)),
        ("diagonalization end-to-end", diagonalization, Duration::from_secs(60)),
        ("commutation probability counts", commutation_counts, Duration::from_secs(5)),
        ("linear independence probability", linear_independence, Duration::from_secs(30)),
        ("reduction round-trip", reduction_round_trip, Duration::from_secs(5)),
        ("ratio table trend", ratio_table, Duration::from_secs(300)),
        ("full Pauli group chromatic numbers", mub_counts, Duration::from_secs(60)),
        ("exact vs greedy", exact_vs_greedy, Duration::from_secs(60)),
        ("plan validity fuzzing", plan_fuzzing, Duration::from_secs(120)),
        ("random graph coloring scale", random_graph_coloring, Duration::from_secs(30)),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (k, (name, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let elapsed = start.elapsed();
        let result =
            result.and_then(
                |detail| {
                    if elapsed <= budget {
                        Ok(detail)
                    } else {
                        Err(format!("{detail}; exceeded {budget:?}"))
                    }
                },
            );
        match result {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({detail}) [{elapsed:.2?}]", k + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL {name} ({detail}) [{elapsed:.2?}]", k + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
