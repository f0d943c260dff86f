use num_complex::Complex64;
use qupart_core::{HamiltonianTerm, PauliOperator, PrimeDimension};

use super::pauli_text::parse_pauli;
use super::{content_lines, ParseError};

/// A parsed Hamiltonian file.
#[derive(Debug, Clone, PartialEq)]
pub struct Hamiltonian {
    pub q: PrimeDimension,
    pub terms: Vec<HamiltonianTerm>,
    /// Source line of each term.
    pub lines: Vec<usize>,
}

impl Hamiltonian {
    pub fn operators(&self) -> Vec<PauliOperator> {
        self.terms.iter().map(|t| t.operator.clone()).collect()
    }
}

/// Parses the Hamiltonian text format.
///
/// Header lines `q <prime>` (default 2) and `n <length>` must precede the
/// terms. Each body line is `<coefficient> <pauli>` or a bare `<pauli>`
/// (coefficient 1). All terms of a file must have the same length.
pub fn parse_hamiltonian(text: &str) -> Result<Hamiltonian, ParseError> {
    let mut q = PrimeDimension::QUBIT;
    let mut declared_len: Option<usize> = None;
    let mut terms = Vec::new();
    let mut lines = Vec::new();
    for (line, content) in content_lines(text) {
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields.as_slice() {
            ["q", value] => {
                if !terms.is_empty() {
                    return Err(ParseError::new(line, "header `q` must come before the terms"));
                }
                let v: u32 = value.parse().map_err(|_| ParseError::new(line, format!("invalid q {value:?}")))?;
                q = PrimeDimension::new(v).map_err(|e| ParseError::new(line, e.to_string()))?;
            }
            ["n", value] => {
                if !terms.is_empty() {
                    return Err(ParseError::new(line, "header `n` must come before the terms"));
                }
                let n: usize = value
                    .parse()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| ParseError::new(line, format!("invalid length {value:?}")))?;
                declared_len = Some(n);
            }
            [pauli] => {
                let t = term(q, Complex64::new(1.0, 0.0), pauli).map_err(|m| ParseError::new(line, m))?;
                check_length(&mut declared_len, &t, line)?;
                terms.push(t);
                lines.push(line);
            }
            [coefficient, pauli] => {
                let c = parse_coefficient(coefficient)
                    .ok_or_else(|| ParseError::new(line, format!("malformed coefficient {coefficient:?}")))?;
                let t = term(q, c, pauli).map_err(|m| ParseError::new(line, m))?;
                check_length(&mut declared_len, &t, line)?;
                terms.push(t);
                lines.push(line);
            }
            _ => return Err(ParseError::new(line, format!("expected `<coefficient> <pauli>`, got {content:?}"))),
        }
    }
    Ok(Hamiltonian { q, terms, lines })
}

/// The first term fixes the length unless an `n` header did.
fn check_length(expected: &mut Option<usize>, t: &HamiltonianTerm, line: usize) -> Result<(), ParseError> {
    let len = t.operator.len();
    match *expected {
        Some(n) if n != len => Err(ParseError::new(line, format!("operator has length {len}, expected {n}"))),
        Some(_) => Ok(()),
        None => {
            *expected = Some(len);
            Ok(())
        }
    }
}

fn term(q: PrimeDimension, coefficient: Complex64, pauli: &str) -> Result<HamiltonianTerm, String> {
    Ok(HamiltonianTerm::new(coefficient, parse_pauli(q, pauli)?))
}

/// Decimal real (`-0.5`, `1e-3`) or complex `a+bi`, `a-bi`, `bi`.
pub fn parse_coefficient(s: &str) -> Option<Complex64> {
    let value = match s.strip_suffix('i') {
        None => Complex64::new(s.parse().ok()?, 0.0),
        Some(body) => {
            let bytes = body.as_bytes();
            let split = (1..bytes.len())
                .rev()
                .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
            let imag = |t: &str| match t {
                "" | "+" => Some(1.0),
                "-" => Some(-1.0),
                t => t.parse().ok(),
            };
            match split {
                Some(k) => Complex64::new(body[..k].parse().ok()?, imag(&body[k..])?),
                None => Complex64::new(0.0, imag(body)?),
            }
        }
    };
    (value.re.is_finite() && value.im.is_finite()).then_some(value)
}

fn format_coefficient(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.im < 0.0 {
        format!("{}-{}i", c.re, -c.im)
    } else {
        format!("{}+{}i", c.re, c.im)
    }
}

/// Writes terms in the format read by [`parse_hamiltonian`].
pub fn write_hamiltonian(q: PrimeDimension, terms: &[HamiltonianTerm]) -> String {
    let mut out = format!("q {q}\n");
    for t in terms {
        out.push_str(&format!("{} {}\n", format_coefficient(t.coefficient), t.operator));
    }
    out
}
