//! graph6 and plain edge-list text formats.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
}

/// Encodes `g` as a single graph6 line without the trailing newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

/// Decodes one graph6 line; an optional `>>graph6<<` header and surrounding
/// whitespace are accepted. Errors carry the byte offset into `text`.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 line"));
    }
    let sextet = |i: usize| -> Result<usize> {
        match bytes.get(i) {
            Some(&b) if (BIAS..=126).contains(&b) => Ok((b - BIAS) as usize),
            Some(_) => Err(Error::parse(base + i, "byte outside the graph6 range 63..=126")),
            None => Err(Error::parse(base + i, "truncated size field")),
        }
    };

    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0;
        for i in 1..4 {
            n = (n << 6) | sextet(i)?;
        }
        (n, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | sextet(i)?;
        }
        (n, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        let at = base + bytes.len().min(expected);
        return Err(Error::parse(
            at,
            format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }

    let mut g = Graph::empty(n);
    let mut word = 0;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                word = sextet(pos)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if (word >> left) & 1 == 1 {
                g.add_edge(i, j)?;
            }
        }
    }
    if left > 0 && word & ((1 << left) - 1) != 0 {
        return Err(Error::parse(base + pos - 1, "nonzero padding bits"));
    }
    Ok(g)
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`
/// with 0-based ids. Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .split_inclusive('\n')
        .scan(0, |offset, line| {
            let at = *offset;
            *offset += line.len();
            Some((at, line.trim()))
        })
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (at, header) = lines.next().ok_or_else(|| Error::parse(0, "missing `n m` header"))?;
    let [n, m] = two_numbers(at, header)?;
    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (at, line) in lines {
        let [u, v] = two_numbers(at, line)?;
        if u >= n || v >= n {
            return Err(Error::parse(at, format!("vertex id out of range for n = {n}")));
        }
        if u == v {
            return Err(Error::parse(at, "self-loop"));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(at, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v)?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(text.len(), format!("header announces {m} edges, found {seen}")));
    }
    Ok(g)
}

fn two_numbers(at: usize, line: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::parse(at, format!("expected two integers, found `{line}`")));
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f
            .parse()
            .map_err(|_| Error::parse(at, format!("`{f}` is not a non-negative integer")))?;
    }
    Ok(out)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edge_pairs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads either one edge-list graph or any number of graph6 lines.
///
/// The input is treated as an edge list when its first meaningful line holds
/// two whitespace-separated integers.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let Some(first) = first else {
        return Ok(Vec::new());
    };
    let numeric = first.split_whitespace().count() == 2
        && first.split_whitespace().all(|f| f.bytes().all(|b| b.is_ascii_digit()));
    if numeric {
        return parse_edge_list(text).map(|g| vec![g]);
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !line.trim().is_empty() {
            out.push(decode_graph6(line).map_err(|e| match e {
                Error::Parse { offset: o, message } => Error::Parse {
                    offset: offset + o,
                    message,
                },
                other => other,
            })?);
        }
        offset += line.len();
    }
    Ok(out)
}
