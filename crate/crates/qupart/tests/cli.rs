use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use qupart::io::{parse_circuit, parse_hamiltonian, write_dimacs, PlanDocument};
use qupart_core::CommutationGraph;

fn qupart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qupart")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn single_qubit_paulis_need_three_parts() {
    let dir = tempfile::tempdir().unwrap();
    let h = write(dir.path(), "h.txt", "1 X\n1 Y\n1 Z\n");
    for gate_set in ["clifford", "single-qudit"] {
        let o = qupart(&["partition", "--input", &h, "--gate-set", gate_set, "--verify"]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let doc = PlanDocument::from_json(&stdout(&o)).unwrap();
        assert_eq!(doc.stats.num_parts, 3);
        assert_eq!(doc.gate_set, gate_set);
        assert!(String::from_utf8_lossy(&o.stderr).contains("dense"));
    }
}

#[test]
fn clifford_merges_bell_terms() {
    let dir = tempfile::tempdir().unwrap();
    let h = write(dir.path(), "h.txt", "0.5 XX\n-0.5 YY\n0.5 ZZ\n");
    let parts = |gate_set: &str| {
        let o = qupart(&["partition", "--input", &h, "--gate-set", gate_set]);
        assert!(o.status.success());
        PlanDocument::from_json(&stdout(&o)).unwrap().stats.num_parts
    };
    assert_eq!(parts("clifford"), 1);
    assert_eq!(parts("single-qudit"), 3);
}

#[test]
fn partition_files_and_saved_plan_verify() {
    let dir = tempfile::tempdir().unwrap();
    let h = write(dir.path(), "h.txt", "q 3\n1 X1Z0.X0Z1\n2 X0Z1.X1Z0\n1 X1Z1.X1Z1\n");
    let plan = dir.path().join("plan.json");
    let csv = dir.path().join("parts.csv");
    let o = qupart(&[
        "partition",
        "--input",
        &h,
        "--order",
        "random",
        "--seed",
        "9",
        "--out",
        plan.to_str().unwrap(),
        "--csv-out",
        csv.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(fs::read_to_string(&csv).unwrap().starts_with("part,num_terms,num_gates,num_sum_gates\n"));
    let v = qupart(&["verify", "--plan", plan.to_str().unwrap()]);
    assert!(v.status.success(), "{}", String::from_utf8_lossy(&v.stderr));

    let mut doc = PlanDocument::from_json(&fs::read_to_string(&plan).unwrap()).unwrap();
    doc.parts[0].z_operators[0] = "X1Z0.X0Z0".into();
    let bad = write(dir.path(), "bad.json", &doc.to_json());
    assert_eq!(qupart(&["verify", "--plan", &bad]).status.code(), Some(3));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let text = qupart::io::fixture::random_hamiltonian_text(2, 5, 40, 3);
    let h = write(dir.path(), "h.txt", &text);
    for args in [
        vec!["partition", "--input", &h, "--order", "random", "--seed", "4"],
        vec!["graph", "--input", &h, "--gate-set", "single-qudit"],
        vec!["ratio-bench", "--lengths", "1..4", "--samples", "3", "--threads", "3"],
    ] {
        let a = qupart(&args);
        let b = qupart(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn ratio_bench_length_one_is_one() {
    let o = qupart(&["ratio-bench", "--q", "3", "--lengths", "1..1", "--samples", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("length,mean_sqc,mean_c,ratio"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[0], "1");
    assert_eq!(row[3].parse::<f64>().unwrap(), 1.0);
}

#[test]
fn ratio_bench_threads_agree() {
    let args = |t: &'static str| ["ratio-bench", "--lengths", "2..5", "--samples", "4", "--seed", "11", "--threads", t];
    assert_eq!(qupart(&args("1")).stdout, qupart(&args("4")).stdout);
}

#[test]
fn reduce_round_trips_petersen() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p.col", &write_dimacs(&CommutationGraph::petersen()));
    for q in ["2", "3"] {
        let o = qupart(&["reduce", "--dimacs", &g, "--q", q, "--roundtrip"]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let h = parse_hamiltonian(&stdout(&o)).unwrap();
        assert_eq!(h.terms.len(), 10);
        assert_eq!(h.q.get().to_string(), q);
    }
}

#[test]
fn diagonalize_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let h = write(dir.path(), "h.txt", "XXI\nZZI\nYYZ\n");
    let c = dir.path().join("c.txt");
    let o = qupart(&["diagonalize", "--input", &h, "--out", c.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    parse_circuit(&fs::read_to_string(&c).unwrap()).unwrap();
    let v = qupart(&["verify", "--circuit", c.to_str().unwrap(), "--input", &h]);
    assert!(v.status.success());
    assert!(stdout(&v).contains("dense"));

    let empty = write(dir.path(), "empty.txt", "q 2\nn 3\n");
    let v = qupart(&["verify", "--circuit", &empty, "--input", &h]);
    assert_eq!(v.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&v.stderr).contains("line 1"));
}

#[test]
fn diagonalize_names_offending_lines() {
    let dir = tempfile::tempdir().unwrap();
    let h = write(dir.path(), "h.txt", "# header\nXX\nZZ\n\nXI\n");
    let o = qupart(&["diagonalize", "--input", &h]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("lines 3 and 5"), "{err}");

    let o = qupart(&["diagonalize", "--input", &h, "--gate-set", "single-qudit"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("lines 2 and 3"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "1 XQ\n");
    let o = qupart(&["partition", "--input", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    assert_eq!(qupart(&["partition", "--input", "/nonexistent/h.txt"]).status.code(), Some(2));
    assert_eq!(qupart(&["partition"]).status.code(), Some(1));
    assert_eq!(qupart(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(qupart(&["--version"]).status.code(), Some(0));
}
