//! Measurement plans: Hamiltonian terms partitioned into parts, each with a
//! circuit that maps all of the part's operators to diagonal ones.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::clifford::{diagonalize, diagonalize_single_qudit, CliffordCircuit};
use crate::coloring::{greedy_color, OrderingStrategy};
use crate::field::PrimeDimension;
use crate::graph::{build_graph, GateSetMode};
use crate::pauli::{PauliOperator, PauliSet};
use crate::{Error, Result};

/// One term `c_k P_k` of `H = Σ_k c_k P_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianTerm {
    pub coefficient: Complex64,
    pub operator: PauliOperator,
}

impl HamiltonianTerm {
    pub fn new(coefficient: Complex64, operator: PauliOperator) -> Self {
        HamiltonianTerm { coefficient, operator }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanPart {
    /// Term indices in this part, increasing.
    pub indices: Vec<usize>,
    /// Operator of each term in `indices`, padded to the plan length.
    pub operators: Vec<PauliOperator>,
    pub circuit: CliffordCircuit,
    /// Image of each operator under `circuit`.
    pub z_operators: Vec<PauliOperator>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasurementPlan {
    pub q: PrimeDimension,
    pub n: usize,
    pub gate_set: GateSetMode,
    pub ordering: OrderingStrategy,
    pub num_terms: usize,
    pub parts: Vec<PlanPart>,
}

/// A reason a plan is not a valid measurement plan.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlanViolation {
    #[error("part {part} lists term {index}, but the plan has {num_terms} terms")]
    IndexOutOfRange { part: usize, index: usize, num_terms: usize },
    #[error("term {0} appears in more than one part")]
    DuplicateIndex(usize),
    #[error("term {0} is in no part")]
    MissingIndex(usize),
    #[error("part {0} has mismatched index, operator and image lists")]
    Misaligned(usize),
    #[error("part {part} has operators of the wrong dimension or length")]
    Shape { part: usize },
    #[error("terms {first} and {second} of part {part} cannot be measured together")]
    Incompatible { part: usize, first: usize, second: usize },
    #[error("recorded image of term {index} in part {part} does not match its circuit")]
    WrongImage { part: usize, index: usize },
    #[error("image of term {index} in part {part} is not diagonal")]
    NotDiagonal { part: usize, index: usize },
    #[error("part {0} uses SUM gates under the single-qudit gate set")]
    EntanglingGate(usize),
}

impl MeasurementPlan {
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Checks the plan using only its own contents: the parts partition
    /// `0..num_terms`, operators in a part are compatible under the gate set,
    /// recorded images match the circuits and are diagonal, and single-qudit
    /// plans contain no `SUM` gates.
    pub fn validate(&self) -> core::result::Result<(), PlanViolation> {
        let mut seen = vec![false; self.num_terms];
        for (k, part) in self.parts.iter().enumerate() {
            if part.operators.len() != part.indices.len() || part.z_operators.len() != part.indices.len() {
                return Err(PlanViolation::Misaligned(k));
            }
            for &index in &part.indices {
                let slot = seen.get_mut(index).ok_or(PlanViolation::IndexOutOfRange {
                    part: k,
                    index,
                    num_terms: self.num_terms,
                })?;
                if core::mem::replace(slot, true) {
                    return Err(PlanViolation::DuplicateIndex(index));
                }
            }
            let shape_ok = |p: &PauliOperator| p.q() == self.q && p.len() == self.n;
            if part.circuit.q() != self.q
                || part.circuit.qudits() != self.n
                || !part.operators.iter().chain(&part.z_operators).all(shape_ok)
            {
                return Err(PlanViolation::Shape { part: k });
            }
            for i in 0..part.operators.len() {
                for j in i + 1..part.operators.len() {
                    if !self.gate_set.compatible(&part.operators[i], &part.operators[j]).unwrap_or(false) {
                        return Err(PlanViolation::Incompatible {
                            part: k,
                            first: part.indices[i],
                            second: part.indices[j],
                        });
                    }
                }
            }
            for ((&index, op), image) in part.indices.iter().zip(&part.operators).zip(&part.z_operators) {
                if part.circuit.conjugate(op).as_ref() != Ok(image) {
                    return Err(PlanViolation::WrongImage { part: k, index });
                }
                if !image.is_z_type() {
                    return Err(PlanViolation::NotDiagonal { part: k, index });
                }
            }
            if self.gate_set == GateSetMode::SingleQuditClifford && part.circuit.sum_count() > 0 {
                return Err(PlanViolation::EntanglingGate(k));
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(missing) => Err(PlanViolation::MissingIndex(missing)),
            None => Ok(()),
        }
    }
}

/// Partitions `terms` by greedy coloring of the non-diagonalizable graph and
/// attaches a diagonalizing circuit to every part.
///
/// Identical operators share one vertex; every term index still appears in
/// exactly one part. Operators are padded to the longest term.
pub fn make_plan(terms: &[HamiltonianTerm], mode: GateSetMode, order: OrderingStrategy) -> Result<MeasurementPlan> {
    let first = terms.first().ok_or_else(|| Error::InvalidArgument("a plan needs at least one term".into()))?;
    let q = first.operator.q();
    let set = PauliSet::from_operators(q, terms.iter().map(|t| t.operator.clone()).collect())?;
    let n = set.qudits();

    let mut vertex_of: BTreeMap<&PauliOperator, usize> = BTreeMap::new();
    let mut vertices: Vec<PauliOperator> = Vec::new();
    let term_vertex: Vec<usize> = set
        .iter()
        .map(|p| {
            *vertex_of.entry(p).or_insert_with(|| {
                vertices.push(p.clone());
                vertices.len() - 1
            })
        })
        .collect();
    let distinct = PauliSet::new(q, n, vertices)?;
    let coloring = greedy_color(&build_graph(&distinct, mode), order);

    let mut parts = Vec::with_capacity(coloring.num_colors());
    for class in coloring.classes() {
        let ops: Vec<PauliOperator> = class.iter().map(|&v| distinct.operators()[v].clone()).collect();
        let class_set = PauliSet::new(q, n, ops)?;
        let circuit = match mode {
            GateSetMode::FullClifford => diagonalize(&class_set)?,
            GateSetMode::SingleQuditClifford => diagonalize_single_qudit(&class_set)?,
        };
        let indices: Vec<usize> =
            (0..terms.len()).filter(|&t| coloring.color(term_vertex[t]) == coloring.color(class[0])).collect();
        let operators: Vec<PauliOperator> = indices.iter().map(|&t| set.operators()[t].clone()).collect();
        let z_operators = operators.iter().map(|p| circuit.conjugate(p)).collect::<Result<Vec<_>>>()?;
        parts.push(PlanPart { indices, operators, circuit, z_operators });
    }

    Ok(MeasurementPlan { q, n, gate_set: mode, ordering: order, num_terms: terms.len(), parts })
}
