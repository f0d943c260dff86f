//! Partitioning generalized Pauli operators over prime-dimensional qudits into
//! simultaneously diagonalizable groups.
//!
//! Operators are held in symplectic form (an `x` and a `z` exponent vector over
//! `Z_q`, phases ignored). From a set of operators the crate builds the
//! non-diagonalizable graph for one of two gate sets, colors it, and
//! synthesizes Clifford circuits that map every operator of a color class to
//! a pure `Z`-type operator.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and the
//! parallel experiment driver live in the `qupart` crate.
#![no_std]

extern crate alloc;

mod bitset;
pub mod clifford;
pub mod coloring;
mod error;
pub mod field;
pub mod graph;
pub mod pauli;
pub mod plan;
pub mod simulate;
pub mod stats;

pub use clifford::{diagonalize, diagonalize_single_qudit, is_diagonalized, CliffordCircuit, CliffordGate};
pub use coloring::{best_of_orderings, exact_chromatic, greedy_color, Coloring, OrderingStrategy};
pub use error::{Error, Result};
pub use field::PrimeDimension;
pub use graph::{build_graph, graph_roundtrip_check, pauli_set_from_graph, CommutationGraph, GateSetMode};
pub use pauli::{PauliOperator, PauliSet};
pub use plan::{make_plan, HamiltonianTerm, MeasurementPlan, PlanPart};
