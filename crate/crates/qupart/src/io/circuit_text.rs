use qupart_core::{CliffordCircuit, CliffordGate, PrimeDimension};

use super::{content_lines, ParseError};

/// Circuit text: `q <q>` and `n <n>` headers, then one gate per line
/// (`F <t>`, `R <t> <k>`, `SUM <c> <t>`).
pub fn write_circuit(c: &CliffordCircuit) -> String {
    let mut out = format!("q {}\nn {}\n", c.q(), c.qudits());
    for g in c.gates() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// One gate in its text form, without range checks.
pub fn parse_gate(text: &str) -> Result<CliffordGate, String> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let index = |s: &str| s.parse::<usize>().map_err(|_| format!("invalid number {s:?}"));
    match fields.as_slice() {
        ["F", t] => Ok(CliffordGate::F { target: index(t)? }),
        ["R", t, k] => {
            Ok(CliffordGate::R { target: index(t)?, power: k.parse().map_err(|_| format!("invalid exponent {k:?}"))? })
        }
        ["SUM", c, t] => Ok(CliffordGate::Sum { control: index(c)?, target: index(t)? }),
        _ => Err(format!("unrecognized gate line {text:?}")),
    }
}

pub fn parse_circuit(text: &str) -> Result<CliffordCircuit, ParseError> {
    let mut q: Option<PrimeDimension> = None;
    let mut circuit: Option<CliffordCircuit> = None;
    for (line, content) in content_lines(text) {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let number = |s: &str| s.parse::<usize>().map_err(|_| ParseError::new(line, format!("invalid number {s:?}")));
        let gate = match fields.as_slice() {
            ["q", v] => {
                if q.is_some() {
                    return Err(ParseError::new(line, "duplicate `q` header"));
                }
                let v = u32::try_from(number(v)?).map_err(|_| ParseError::new(line, "q too large"))?;
                q = Some(PrimeDimension::new(v).map_err(|e| ParseError::new(line, e.to_string()))?);
                continue;
            }
            ["n", v] => {
                let q = q.ok_or_else(|| ParseError::new(line, "`q` header must precede `n`"))?;
                if circuit.is_some() {
                    return Err(ParseError::new(line, "duplicate `n` header"));
                }
                circuit = Some(CliffordCircuit::new(q, number(v)?));
                continue;
            }
            _ => parse_gate(content).map_err(|m| ParseError::new(line, m))?,
        };
        let c = circuit.as_mut().ok_or_else(|| ParseError::new(line, "gate before `q`/`n` headers"))?;
        c.push(gate).map_err(|e| ParseError::new(line, e.to_string()))?;
    }
    circuit.ok_or_else(|| ParseError::new(1, "missing `q` and `n` headers"))
}
