//! Text and JSON formats.
//!
//! * Pauli strings: `XYZI` letters for `q = 2`, `X<a>Z<b>` tokens joined by
//!   `.` for any `q`.
//! * Hamiltonians: `q <prime>` / `n <len>` headers, `#` comments,
//!   `<coefficient> <pauli>` body lines.
//! * DIMACS graphs, circuit text, plan JSON and CSV summaries.

pub mod circuit_text;
pub mod dimacs;
pub mod fixture;
pub mod hamiltonian;
pub mod pauli_text;
pub mod plan_json;
pub mod report_csv;

pub use circuit_text::{parse_circuit, write_circuit};
pub use dimacs::{parse_dimacs, write_dimacs};
pub use hamiltonian::{parse_hamiltonian, write_hamiltonian, Hamiltonian};
pub use pauli_text::parse_pauli;
pub use plan_json::PlanDocument;

/// A parse failure at a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// Non-blank lines with `#` comments stripped, paired with 1-based line
/// numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}
