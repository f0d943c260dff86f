use qupart_core::{PauliOperator, PrimeDimension};

/// Parses `XYZI`-style letters (`q = 2` only) or `X<a>Z<b>` tokens separated
/// by `.` (any `q`).
pub fn parse_pauli(q: PrimeDimension, s: &str) -> Result<PauliOperator, String> {
    if s.is_empty() {
        return Err("empty Pauli string".into());
    }
    let (x, z) = if s.bytes().any(|b| b.is_ascii_digit()) { parse_tokens(q, s)? } else { parse_letters(q, s)? };
    PauliOperator::new(q, x, z).map_err(|e| e.to_string())
}

fn parse_letters(q: PrimeDimension, s: &str) -> Result<(Vec<u32>, Vec<u32>), String> {
    if q.get() != 2 {
        return Err(format!("letter Pauli strings need q = 2, use X<a>Z<b> tokens for q = {q}"));
    }
    s.chars()
        .map(|c| match c {
            'I' => Ok((0, 0)),
            'X' => Ok((1, 0)),
            'Y' => Ok((1, 1)),
            'Z' => Ok((0, 1)),
            other => Err(format!("invalid character {other:?} in Pauli string {s:?}")),
        })
        .collect::<Result<Vec<_>, _>>()
        .map(|pairs| pairs.into_iter().unzip())
}

fn parse_tokens(q: PrimeDimension, s: &str) -> Result<(Vec<u32>, Vec<u32>), String> {
    let mut x = Vec::new();
    let mut z = Vec::new();
    for token in s.split('.') {
        let (a, b) = parse_token(token).ok_or_else(|| format!("malformed qudit token {token:?}, expected X<a>Z<b>"))?;
        for e in [a, b] {
            if e >= q.get() {
                return Err(format!("exponent {e} in token {token:?} is not below q = {q}"));
            }
        }
        x.push(a);
        z.push(b);
    }
    Ok((x, z))
}

fn parse_token(token: &str) -> Option<(u32, u32)> {
    let rest = token.strip_prefix('X')?;
    let (a, b) = rest.split_once('Z')?;
    let digits = |d: &str| (!d.is_empty() && d.bytes().all(|c| c.is_ascii_digit())).then(|| d.parse().ok()).flatten();
    Some((digits(a)?, digits(b)?))
}
