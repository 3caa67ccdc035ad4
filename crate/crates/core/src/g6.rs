//! graph6 text format, one graph per line, bit-exact per the published
//! layout: big-endian 6-bit groups over the upper triangle in column order,
//! each group offset by 63. sparse6 is accepted on input only.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 { offset, reason: reason.into() }
}

/// Encodes a graph as graph6. Orders up to 62 use the one-byte size field;
/// 63 and 64 use the three-byte long form.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        out.push((((n >> 12) & 0x3f) as u8 + 63) as char);
        out.push((((n >> 6) & 0x3f) as u8 + 63) as char);
        out.push(((n & 0x3f) as u8 + 63) as char);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            group = group << 1 | g.has_edge(row, col) as u8;
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    out
}

/// Reads the size field, returning `(n, bytes_consumed)`.
fn parse_order(bytes: &[u8]) -> Result<(usize, usize)> {
    match bytes.first() {
        None => Err(malformed(0, "empty input")),
        Some(&b) if (63..126).contains(&b) => Ok(((b - 63) as usize, 1)),
        Some(126) => {
            if bytes.len() >= 2 && bytes[1] == 126 {
                return Err(malformed(1, "orders above 258047 are not supported"));
            }
            if bytes.len() < 4 {
                return Err(malformed(bytes.len(), "truncated long-form size field"));
            }
            let mut n = 0usize;
            for (i, &b) in bytes[1..4].iter().enumerate() {
                if !(63..=126).contains(&b) {
                    return Err(malformed(1 + i, "size byte out of range"));
                }
                n = n << 6 | (b - 63) as usize;
            }
            Ok((n, 4))
        }
        Some(_) => Err(malformed(0, "size byte out of range")),
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.trim_end().as_bytes();
    let (n, mut pos) = parse_order(bytes)?;
    if n > MAX_VERTICES {
        return Err(malformed(0, format!("order {n} exceeds the supported maximum {MAX_VERTICES}")));
    }
    let nbits = n * (n.saturating_sub(1)) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(malformed(bytes.len(), format!("expected {} data bytes, found {}", nbytes, bytes.len() - pos)));
    }
    if bytes.len() > pos + nbytes {
        return Err(malformed(pos + nbytes, "trailing bytes after graph data"));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut col = 1usize;
    let mut row = 0usize;
    while bit < nbits {
        let b = bytes[pos];
        if !(63..=126).contains(&b) {
            return Err(malformed(pos, "data byte out of range"));
        }
        let group = b - 63;
        pos += 1;
        for k in 0..6 {
            if bit + k >= nbits {
                if group & (0x3f >> k) != 0 {
                    return Err(malformed(pos - 1, "nonzero padding bits"));
                }
                break;
            }
            if group >> (5 - k) & 1 == 1 {
                edges.push((row, col));
            }
            row += 1;
            if row == col {
                row = 0;
                col += 1;
            }
        }
        bit += 6;
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Decodes one sparse6 line (leading `:`; optional `>>sparse6<<` header).
pub fn parse_sparse6(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(">>sparse6<<").unwrap_or(text);
    let bytes = text.trim_end().as_bytes();
    if bytes.first() != Some(&b':') {
        return Err(malformed(0, "sparse6 must start with ':'"));
    }
    let (n, consumed) = parse_order(&bytes[1..])?;
    if n > MAX_VERTICES {
        return Err(malformed(1, format!("order {n} exceeds the supported maximum {MAX_VERTICES}")));
    }
    let data = &bytes[1 + consumed..];
    let mut bits: Vec<u8> = Vec::with_capacity(data.len() * 6);
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(1 + consumed + i, "data byte out of range"));
        }
        let group = b - 63;
        for k in (0..6).rev() {
            bits.push(group >> k & 1);
        }
    }
    let k = if n <= 1 { 1 } else { (usize::BITS - (n - 1).leading_zeros()) as usize };
    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut pos = 0usize;
    while pos + 1 + k <= bits.len() {
        let b = bits[pos];
        let mut x = 0usize;
        for &bit in &bits[pos + 1..pos + 1 + k] {
            x = x << 1 | bit as usize;
        }
        pos += 1 + k;
        if b == 1 {
            v += 1;
        }
        if v >= n || x >= n {
            break; // padding
        }
        if x > v {
            v = x;
        } else if x != v {
            edges.push((x, v));
        }
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Decodes a line in either format, keyed on the leading `:`.
pub fn parse_line(text: &str) -> Result<Graph> {
    let stripped = text
        .strip_prefix(">>graph6<<")
        .or_else(|| text.strip_prefix(">>sparse6<<"))
        .unwrap_or(text);
    if stripped.starts_with(':') {
        parse_sparse6(stripped)
    } else {
        parse_graph6(stripped)
    }
}
