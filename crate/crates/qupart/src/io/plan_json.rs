//! JSON form of a measurement plan.
//!
//! ```json
//! {
//!   "q": 2, "n": 2, "gate_set": "clifford", "ordering": "natural",
//!   "parts": [{"indices": [0, 1], "operators": ["XX", "ZZ"],
//!              "circuit": ["SUM 1 0", "F 0"], "z_operators": ["ZI", "IZ"]}],
//!   "stats": {"num_terms": 2, "num_parts": 1, "num_gates": 2, "num_sum_gates": 1}
//! }
//! ```
//!
//! `seed` is present only for the random ordering. The document carries the
//! original operators, so [`PlanDocument::to_plan`] followed by
//! `MeasurementPlan::validate` checks a plan without its source file.

use qupart_core::{CliffordCircuit, GateSetMode, MeasurementPlan, OrderingStrategy, PlanPart, PrimeDimension};
use serde::{Deserialize, Serialize};

use super::circuit_text::parse_gate;
use super::pauli_text::parse_pauli;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanDocument {
    pub q: u32,
    pub n: usize,
    pub gate_set: String,
    pub ordering: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub parts: Vec<PartDocument>,
    pub stats: PlanStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartDocument {
    pub indices: Vec<usize>,
    pub operators: Vec<String>,
    pub circuit: Vec<String>,
    pub z_operators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanStats {
    pub num_terms: usize,
    pub num_parts: usize,
    pub num_gates: usize,
    pub num_sum_gates: usize,
}

pub fn gate_set_name(mode: GateSetMode) -> &'static str {
    match mode {
        GateSetMode::FullClifford => "clifford",
        GateSetMode::SingleQuditClifford => "single-qudit",
    }
}

pub fn parse_gate_set(name: &str) -> Option<GateSetMode> {
    match name {
        "clifford" => Some(GateSetMode::FullClifford),
        "single-qudit" => Some(GateSetMode::SingleQuditClifford),
        _ => None,
    }
}

/// Name and optional seed of an ordering.
pub fn ordering_name(order: OrderingStrategy) -> (&'static str, Option<u64>) {
    match order {
        OrderingStrategy::Natural => ("natural", None),
        OrderingStrategy::DegreeDescending => ("degree", None),
        OrderingStrategy::RandomSeeded(seed) => ("random", Some(seed)),
    }
}

pub fn parse_ordering(name: &str, seed: u64) -> Option<OrderingStrategy> {
    match name {
        "natural" => Some(OrderingStrategy::Natural),
        "degree" => Some(OrderingStrategy::DegreeDescending),
        "random" => Some(OrderingStrategy::RandomSeeded(seed)),
        _ => None,
    }
}

impl PlanDocument {
    pub fn from_plan(plan: &MeasurementPlan) -> Self {
        let (ordering, seed) = ordering_name(plan.ordering);
        let strings = |ops: &[qupart_core::PauliOperator]| ops.iter().map(ToString::to_string).collect();
        let parts = plan
            .parts
            .iter()
            .map(|p| PartDocument {
                indices: p.indices.clone(),
                operators: strings(&p.operators),
                circuit: p.circuit.gates().iter().map(ToString::to_string).collect(),
                z_operators: strings(&p.z_operators),
            })
            .collect();
        PlanDocument {
            q: plan.q.get(),
            n: plan.n,
            gate_set: gate_set_name(plan.gate_set).into(),
            ordering: ordering.into(),
            seed,
            parts,
            stats: PlanStats {
                num_terms: plan.num_terms,
                num_parts: plan.num_parts(),
                num_gates: plan.parts.iter().map(|p| p.circuit.len()).sum(),
                num_sum_gates: plan.parts.iter().map(|p| p.circuit.sum_count()).sum(),
            },
        }
    }

    pub fn to_plan(&self) -> Result<MeasurementPlan, String> {
        let q = PrimeDimension::new(self.q).map_err(|e| e.to_string())?;
        let gate_set = parse_gate_set(&self.gate_set).ok_or_else(|| format!("unknown gate set {:?}", self.gate_set))?;
        let ordering = parse_ordering(&self.ordering, self.seed.unwrap_or(0))
            .ok_or_else(|| format!("unknown ordering {:?}", self.ordering))?;
        let paulis = |list: &[String]| list.iter().map(|s| parse_pauli(q, s)).collect::<Result<Vec<_>, _>>();
        let parts = self
            .parts
            .iter()
            .enumerate()
            .map(|(k, p)| {
                let gates = p.circuit.iter().map(|g| parse_gate(g)).collect::<Result<Vec<_>, _>>()?;
                let circuit = CliffordCircuit::from_gates(q, self.n, gates).map_err(|e| format!("part {k}: {e}"))?;
                Ok(PlanPart {
                    indices: p.indices.clone(),
                    operators: paulis(&p.operators)?,
                    circuit,
                    z_operators: paulis(&p.z_operators)?,
                })
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(MeasurementPlan { q, n: self.n, gate_set, ordering, num_terms: self.stats.num_terms, parts })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plan documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
