//! graph6 and sparse6 text formats.
//!
//! Both formats pack bits into 6-bit big-endian groups offset by 63. The
//! optional `>>graph6<<` / `>>sparse6<<` headers are accepted on input and
//! never written.

use super::Graph;
use crate::error::{Error, Result};

const G6_HEADER: &str = ">>graph6<<";
const S6_HEADER: &str = ">>sparse6<<";

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Reads N(n) starting at `pos`; returns (n, next position).
fn decode_n(data: &[u8], pos: usize) -> Result<(usize, usize)> {
    let byte = |i: usize| -> Result<usize> {
        match data.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(Error::parse(i, format!("invalid byte 0x{b:02x}"))),
            None => Err(Error::parse(i, "truncated vertex count")),
        }
    };
    let first = byte(pos)?;
    if first < 63 {
        return Ok((first, pos + 1));
    }
    if data.get(pos + 1) == Some(&126) {
        let mut n = 0;
        for i in 0..6 {
            n = (n << 6) | byte(pos + 2 + i)?;
        }
        Ok((n, pos + 8))
    } else {
        let mut n = 0;
        for i in 0..3 {
            n = (n << 6) | byte(pos + 1 + i)?;
        }
        Ok((n, pos + 4))
    }
}

fn pack_bits(bits: &[bool], out: &mut Vec<u8>) {
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for i in 0..6 {
            v <<= 1;
            if chunk.get(i).copied().unwrap_or(false) {
                v |= 1;
            }
        }
        out.push(v + 63);
    }
}

/// graph6 encoding, without header or trailing newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_n(n, &mut out);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    pack_bits(&bits, &mut out);
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Decodes one graph6 string (header allowed, surrounding whitespace
/// ignored). Byte offsets in errors refer to the trimmed input including
/// any header.
pub fn decode_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let data = s.as_bytes();
    let start = if s.starts_with(G6_HEADER) { G6_HEADER.len() } else { 0 };
    let (n, pos) = decode_n(data, start)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let body = &data[pos..];
    if body.len() < need {
        return Err(Error::parse(data.len(), format!("expected {need} edge bytes, found {}", body.len())));
    }
    if body.len() > need {
        return Err(Error::parse(pos + need, "trailing bytes after graph6 body"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6];
            if !(63..=126).contains(&b) {
                return Err(Error::parse(pos + k / 6, format!("invalid byte 0x{b:02x}")));
            }
            if ((b - 63) >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(pos + i, format!("invalid byte 0x{b:02x}")));
        }
    }
    Graph::from_edges(n, &edges)
}

fn bits_for(n: usize) -> usize {
    let mut k = 0;
    let mut i = n.saturating_sub(1);
    while i > 0 {
        i >>= 1;
        k += 1;
    }
    k
}

/// sparse6 encoding (leading `:`), without header or trailing newline.
pub fn encode_sparse6(g: &Graph) -> String {
    let n = g.n();
    let k = bits_for(n);
    let mut out = vec![b':'];
    encode_n(n, &mut out);
    let mut bits: Vec<bool> = Vec::new();
    let push = |bits: &mut Vec<bool>, b: bool, x: usize| {
        bits.push(b);
        for i in (0..k).rev() {
            bits.push((x >> i) & 1 == 1);
        }
    };
    let mut edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (v, u)).collect();
    edges.sort_unstable();
    let mut cur = 0;
    for (v, u) in edges {
        if v == cur {
            push(&mut bits, false, u);
        } else if v == cur + 1 {
            cur = v;
            push(&mut bits, true, u);
        } else {
            cur = v;
            push(&mut bits, true, v);
            push(&mut bits, false, u);
        }
    }
    let pad = (6 - bits.len() % 6) % 6;
    if k < 6 && n == (1 << k) && pad >= k && cur + 1 < n {
        bits.push(false);
    }
    while !bits.len().is_multiple_of(6) {
        bits.push(true);
    }
    pack_bits(&bits, &mut out);
    String::from_utf8(out).expect("sparse6 is printable ASCII")
}

/// Decodes one sparse6 string. Loops and repeated edges are rejected since
/// graphs here are simple.
pub fn decode_sparse6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let data = s.as_bytes();
    let mut pos = if s.starts_with(S6_HEADER) { S6_HEADER.len() } else { 0 };
    match data.get(pos) {
        Some(b':') => pos += 1,
        Some(b';') => return Err(Error::parse(pos, "incremental sparse6 is not supported")),
        _ => return Err(Error::parse(pos, "sparse6 must start with ':'")),
    }
    let (n, body_start) = decode_n(data, pos)?;
    let k = bits_for(n);
    let mut bits = Vec::new();
    for (i, &b) in data[body_start..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(body_start + i, format!("invalid byte 0x{b:02x}")));
        }
        let v = b - 63;
        for j in (0..6).rev() {
            bits.push((v >> j) & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut i = 0;
    while i + k < bits.len() {
        let b = bits[i];
        let mut x = 0usize;
        for j in 0..k {
            x = (x << 1) | bits[i + 1 + j] as usize;
        }
        let offset = body_start + i / 6;
        i += k + 1;
        if b {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            if x == v {
                return Err(Error::parse(offset, format!("loop at vertex {x}")));
            }
            edges.push((x, v, offset));
        }
    }
    let mut seen = std::collections::HashSet::new();
    for &(x, v, offset) in &edges {
        if !seen.insert((x, v)) {
            return Err(Error::parse(offset, format!("repeated edge ({x}, {v})")));
        }
    }
    let pairs: Vec<_> = edges.into_iter().map(|(x, v, _)| (x, v)).collect();
    Graph::from_edges(n, &pairs)
}

/// Parses a graph6 or sparse6 line, dispatching on the leading character.
pub fn parse_graph_line(line: &str) -> Result<Graph> {
    let t = line.trim();
    let body = t.strip_prefix(S6_HEADER).unwrap_or(t);
    if body.starts_with(':') || body.starts_with(';') {
        decode_sparse6(t)
    } else {
        decode_graph6(t)
    }
}
