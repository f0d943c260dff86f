use qupart_core::CommutationGraph;

use super::{content_lines, ParseError};

/// Reads `p edge <n> <m>` followed by `e <u> <v>` lines with 1-based vertices.
/// `c` lines are comments. Repeated edges are accepted once; the number of
/// `e` lines must equal `m`.
pub fn parse_dimacs(text: &str) -> Result<CommutationGraph, ParseError> {
    let mut graph: Option<(CommutationGraph, usize)> = None;
    let mut edge_lines = 0;
    let mut last_line = 0;
    for (line, content) in content_lines(text) {
        last_line = line;
        let fields: Vec<&str> = content.split_whitespace().collect();
        let number = |s: &str| s.parse::<usize>().map_err(|_| ParseError::new(line, format!("invalid number {s:?}")));
        match fields.as_slice() {
            ["c", ..] => {}
            ["p", "edge" | "col", n, m] => {
                if graph.is_some() {
                    return Err(ParseError::new(line, "duplicate problem line"));
                }
                graph = Some((CommutationGraph::new(number(n)?), number(m)?));
            }
            ["e", u, v] => {
                let (g, _) = graph.as_mut().ok_or_else(|| ParseError::new(line, "edge before `p edge` line"))?;
                let (u, v) = (number(u)?, number(v)?);
                if u == 0 || v == 0 {
                    return Err(ParseError::new(line, "vertices are 1-based"));
                }
                g.add_edge(u - 1, v - 1).map_err(|e| ParseError::new(line, e.to_string()))?;
                edge_lines += 1;
            }
            _ => return Err(ParseError::new(line, format!("unrecognized line {content:?}"))),
        }
    }
    let (g, m) = graph.ok_or_else(|| ParseError::new(last_line.max(1), "missing `p edge` line"))?;
    if edge_lines != m {
        return Err(ParseError::new(last_line, format!("header declares {m} edges, found {edge_lines}")));
    }
    Ok(g)
}

pub fn write_dimacs(g: &CommutationGraph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
