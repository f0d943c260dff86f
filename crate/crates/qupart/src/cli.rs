//! Command-line interface.
//!
//! Exit codes: 0 success, 1 usage or internal error, 2 unreadable or invalid
//! input, 3 a verification failed.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use qupart_core::simulate::{verify_diagonal, DIMENSION_CAP};
use qupart_core::stats::{ExperimentConfig, SetSizeRule};
use qupart_core::{
    build_graph, diagonalize, diagonalize_single_qudit, graph_roundtrip_check, greedy_color, is_diagonalized,
    make_plan, pauli_set_from_graph, GateSetMode, HamiltonianTerm, OrderingStrategy, PauliSet, PrimeDimension,
};

use crate::experiment::run_ratio_experiment;
use crate::io::report_csv::{write_plan_csv, write_ratio_csv};
use crate::io::{
    parse_circuit, parse_dimacs, parse_hamiltonian, write_circuit, write_dimacs, write_hamiltonian, Hamiltonian,
    PlanDocument,
};

#[derive(Debug, Parser)]
#[command(name = "qupart", version, about = "Partition qudit Pauli Hamiltonians into jointly measurable parts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GateSet {
    Clifford,
    SingleQudit,
}

impl From<GateSet> for GateSetMode {
    fn from(g: GateSet) -> Self {
        match g {
            GateSet::Clifford => GateSetMode::FullClifford,
            GateSet::SingleQudit => GateSetMode::SingleQuditClifford,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Order {
    Natural,
    Degree,
    Random,
}

impl Order {
    fn strategy(self, seed: u64) -> OrderingStrategy {
        match self {
            Order::Natural => OrderingStrategy::Natural,
            Order::Degree => OrderingStrategy::DegreeDescending,
            Order::Random => OrderingStrategy::RandomSeeded(seed),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Group terms into parts and attach a diagonalizing circuit to each.
    Partition {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "clifford")]
        gate_set: GateSet,
        #[arg(long, value_enum, default_value = "natural")]
        order: Order,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check the plan before writing it.
        #[arg(long)]
        verify: bool,
        /// Plan JSON destination; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-part summary CSV.
        #[arg(long)]
        csv_out: Option<PathBuf>,
    },
    /// Build the compatibility graph of a Hamiltonian.
    Graph {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "clifford")]
        gate_set: GateSet,
        /// DIMACS destination; stdout if absent.
        #[arg(long)]
        dimacs_out: Option<PathBuf>,
    },
    /// Diagonalize a set of commuting operators with one circuit.
    Diagonalize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "clifford")]
        gate_set: GateSet,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mean part counts under both gate sets for random operator sets.
    RatioBench {
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Inclusive range `a..b`, or a single length.
        #[arg(long, default_value = "1..8")]
        lengths: String,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Operators per sample; `min(8m, 200)` if absent.
        #[arg(long)]
        set_size: Option<usize>,
        #[arg(long, value_enum, default_value = "natural")]
        order: Order,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        csv_out: Option<PathBuf>,
    },
    /// Turn a graph into an operator set whose commutation graph is that graph.
    Reduce {
        #[arg(long)]
        dimacs: PathBuf,
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Fail unless the operator set reproduces the graph exactly.
        #[arg(long)]
        roundtrip: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a circuit against a Hamiltonian, or check a saved plan.
    Verify {
        #[arg(long, requires = "input", conflicts_with = "plan")]
        circuit: Option<PathBuf>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, required_unless_present = "circuit")]
        plan: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Verification(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Internal(_) => 1,
            Failure::Input(_) => 2,
            Failure::Verification(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Verification(m) | Failure::Internal(m) => m,
        }
    }
}

type Outcome = Result<(), Failure>;

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{text}") } else { write!(stderr, "{text}") };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.code()
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    match command {
        Command::Partition { input, gate_set, order, seed, verify, out, csv_out } => {
            let h = read_hamiltonian(&input)?;
            let plan = make_plan(&h.terms, gate_set.into(), order.strategy(seed)).map_err(input_error)?;
            if verify {
                plan.validate().map_err(|v| Failure::Verification(v.to_string()))?;
                if dense_dimension(plan.q, plan.n).is_some_and(|d| d <= DIMENSION_CAP) {
                    for (k, part) in plan.parts.iter().enumerate() {
                        let set = PauliSet::new(plan.q, plan.n, part.operators.clone()).map_err(input_error)?;
                        let ok = verify_diagonal(&part.circuit, &set).map_err(|e| Failure::Internal(e.to_string()))?;
                        if !ok {
                            return Err(Failure::Verification(format!("part {k}: dense check failed")));
                        }
                    }
                    log(stderr, "tableau and dense checks passed".into());
                } else {
                    log(stderr, "tableau checks passed".into());
                }
            }
            log(stderr, format!("{} terms, {} parts", plan.num_terms, plan.num_parts()));
            emit(out.as_deref(), &PlanDocument::from_plan(&plan).to_json(), stdout)?;
            if let Some(path) = csv_out {
                write_file(&path, &write_plan_csv(&plan))?;
            }
            Ok(())
        }
        Command::Graph { input, gate_set, dimacs_out } => {
            let h = read_hamiltonian(&input)?;
            let set = term_set(&h)?;
            let g = build_graph(&set, gate_set.into());
            let colors = greedy_color(&g, OrderingStrategy::Natural).num_colors();
            log(stderr, format!("{} vertices, {} edges, greedy colors {colors}", g.vertex_count(), g.edge_count()));
            emit(dimacs_out.as_deref(), &write_dimacs(&g), stdout)
        }
        Command::Diagonalize { input, gate_set, out } => {
            let h = read_hamiltonian(&input)?;
            let set = term_set(&h)?;
            let mode: GateSetMode = gate_set.into();
            let pair = match mode {
                GateSetMode::FullClifford => set.find_non_commuting_pair(),
                GateSetMode::SingleQuditClifford => set.find_non_quditwise_pair(),
            };
            if let Some((a, b)) = pair {
                let relation = match mode {
                    GateSetMode::FullClifford => "do not commute",
                    GateSetMode::SingleQuditClifford => "do not commute qudit by qudit",
                };
                return Err(Failure::Input(format!(
                    "terms on lines {} and {} ({} and {}) {relation}",
                    h.lines[a],
                    h.lines[b],
                    set.operators()[a],
                    set.operators()[b]
                )));
            }
            let circuit = match mode {
                GateSetMode::FullClifford => diagonalize(&set),
                GateSetMode::SingleQuditClifford => diagonalize_single_qudit(&set),
            }
            .map_err(|e| Failure::Internal(e.to_string()))?;
            log(stderr, format!("{} gates, {} SUM", circuit.len(), circuit.sum_count()));
            emit(out.as_deref(), &write_circuit(&circuit), stdout)
        }
        Command::RatioBench { q, lengths, samples, seed, set_size, order, threads, csv_out } => {
            let q = PrimeDimension::new(q).map_err(|e| Failure::Usage(e.to_string()))?;
            let lengths = parse_lengths(&lengths).map_err(Failure::Usage)?;
            let mut cfg = ExperimentConfig::new(q, lengths, samples, seed);
            cfg.ordering = order.strategy(seed);
            if let Some(k) = set_size {
                cfg.set_size = SetSizeRule::Fixed(k);
            }
            let report = run_ratio_experiment(&cfg, threads).map_err(|e| Failure::Usage(e.to_string()))?;
            log(stderr, format!("slope {:.6}", report.slope()));
            emit(csv_out.as_deref(), &write_ratio_csv(&report), stdout)
        }
        Command::Reduce { dimacs, q, roundtrip, out } => {
            let q = PrimeDimension::new(q).map_err(|e| Failure::Usage(e.to_string()))?;
            let g =
                parse_dimacs(&read_file(&dimacs)?).map_err(|e| Failure::Input(format!("{}: {e}", dimacs.display())))?;
            let set = pauli_set_from_graph(&g, q).map_err(input_error)?;
            if roundtrip {
                if !graph_roundtrip_check(&g, q).map_err(input_error)? {
                    return Err(Failure::Verification("operator set does not reproduce the graph".into()));
                }
                log(stderr, "roundtrip ok".into());
            }
            let terms: Vec<HamiltonianTerm> =
                set.iter().map(|p| HamiltonianTerm::new(Complex64::new(1.0, 0.0), p.clone())).collect();
            emit(out.as_deref(), &write_hamiltonian(q, &terms), stdout)
        }
        Command::Verify { circuit, input, plan } => {
            if let Some(path) = plan {
                let doc = PlanDocument::from_json(&read_file(&path)?)
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                let plan = doc.to_plan().map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                plan.validate().map_err(|v| Failure::Verification(v.to_string()))?;
                writeln!(stdout, "ok: {} terms in {} parts", plan.num_terms, plan.num_parts()).map_err(io_error)?;
                return Ok(());
            }
            let (Some(circuit_path), Some(input)) = (circuit, input) else {
                return Err(Failure::Usage("`--circuit` and `--input` go together".into()));
            };
            let c = parse_circuit(&read_file(&circuit_path)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", circuit_path.display())))?;
            let h = read_hamiltonian(&input)?;
            let set = term_set(&h)?;
            if set.q() != c.q() || set.qudits() != c.qudits() {
                return Err(Failure::Input(format!(
                    "circuit acts on {} qudits of dimension {}, Hamiltonian has {} of dimension {}",
                    c.qudits(),
                    c.q(),
                    set.qudits(),
                    set.q()
                )));
            }
            let image = c.conjugate_set(&set).map_err(input_error)?;
            if let Some(k) = image.iter().position(|p| !p.is_z_type()) {
                return Err(Failure::Verification(format!(
                    "term on line {} maps to {}, which is not diagonal",
                    h.lines[k],
                    image.operators()[k]
                )));
            }
            debug_assert!(is_diagonalized(&image));
            let dense = dense_dimension(c.q(), c.qudits()).is_some_and(|d| d <= DIMENSION_CAP);
            if dense {
                let ok = verify_diagonal(&c, &set).map_err(|e| Failure::Internal(e.to_string()))?;
                if !ok {
                    return Err(Failure::Verification("dense check failed".into()));
                }
            }
            let how = if dense { "tableau and dense" } else { "tableau" };
            writeln!(stdout, "ok: {} terms diagonal ({how} check)", set.len()).map_err(io_error)?;
            Ok(())
        }
    }
}

fn dense_dimension(q: PrimeDimension, n: usize) -> Option<u64> {
    u32::try_from(n).ok().and_then(|n| q.checked_power(n))
}

/// `a..b` (inclusive) or a single length.
fn parse_lengths(s: &str) -> Result<Vec<usize>, String> {
    let bad = || format!("invalid lengths {s:?}; expected `a..b` or a single number");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v: usize = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

fn term_set(h: &Hamiltonian) -> Result<PauliSet, Failure> {
    if h.terms.is_empty() {
        return Err(Failure::Input("no terms".into()));
    }
    PauliSet::from_operators(h.q, h.operators()).map_err(input_error)
}

fn read_hamiltonian(path: &Path) -> Result<Hamiltonian, Failure> {
    parse_hamiltonian(&read_file(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Outcome {
    fs::write(path, contents).map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, contents: &str, stdout: &mut dyn Write) -> Outcome {
    match path {
        Some(p) => write_file(p, contents),
        None => stdout.write_all(contents.as_bytes()).map_err(io_error),
    }
}

fn log(stderr: &mut dyn Write, message: String) {
    let _ = writeln!(stderr, "{message}");
}

fn input_error(e: qupart_core::Error) -> Failure {
    Failure::Input(e.to_string())
}

fn io_error(e: std::io::Error) -> Failure {
    Failure::Internal(e.to_string())
}
