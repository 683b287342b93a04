//! graph6 codec and the plain edge-list text format.
//!
//! graph6 layout: an order header (one byte `n + 63` for `n <= 62`, otherwise
//! `~` followed by three 6-bit groups), then the upper triangle in column-major
//! order `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed six bits per byte, most
//! significant first, each byte offset by 63 and the tail padded with zeros.

use super::{check_order, Graph, VertexSet};
use crate::error::{Error, Result};

const BIAS: u8 = 63;

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | row.contains(i) as u8;
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode_graph6(input: &[u8]) -> Result<Graph> {
    let mut data = trim_ascii(input);
    if let Some(rest) = data.strip_prefix(b">>graph6<<") {
        data = rest;
    }
    let sextet = |b: u8| -> Result<u8> {
        if (BIAS..=BIAS + 63).contains(&b) {
            Ok(b - BIAS)
        } else {
            Err(Error::InvalidByte(b))
        }
    };
    let (&first, rest) = data.split_first().ok_or(Error::MalformedHeader)?;
    let (n, body) = if first == 126 {
        if rest.first() == Some(&126) {
            // 8-byte form is for n >= 258048, far beyond the supported order
            return Err(Error::OrderTooLarge(258_048));
        }
        if rest.len() < 3 {
            return Err(Error::MalformedHeader);
        }
        let mut n = 0usize;
        for &b in &rest[..3] {
            n = (n << 6) | sextet(b).map_err(|_| Error::MalformedHeader)? as usize;
        }
        if n < 63 {
            return Err(Error::MalformedHeader);
        }
        (n, &rest[3..])
    } else {
        (sextet(first).map_err(|_| Error::MalformedHeader)? as usize, rest)
    };
    check_order(n)?;

    let cells = n * (n - 1) / 2;
    let need = cells.div_ceil(6);
    if body.len() < need {
        return Err(Error::TruncatedBody);
    }
    if body.len() > need {
        return Err(Error::TrailingBytes);
    }
    let mut bits = Vec::with_capacity(need * 6);
    for &b in body {
        let s = sextet(b)?;
        for k in (0..6).rev() {
            bits.push((s >> k) & 1 == 1);
        }
    }
    if bits[cells..].iter().any(|&b| b) {
        return Err(Error::NonzeroPadding);
    }
    let mut adj = vec![VertexSet::empty(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

fn trim_ascii(mut s: &[u8]) -> &[u8] {
    while let [first, rest @ ..] = s {
        if first.is_ascii_whitespace() {
            s = rest;
        } else {
            break;
        }
    }
    while let [rest @ .., last] = s {
        if last.is_ascii_whitespace() {
            s = rest;
        } else {
            break;
        }
    }
    s
}

/// Edge-list text: first line `n m`, then `m` lines `u v`, 0-indexed.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::EdgeList("missing header".into()))?;
    let nums = parse_pair(header)?;
    let (n, m) = (nums.0, nums.1);
    let mut edges = Vec::with_capacity(m);
    for line in lines.by_ref().take(m) {
        edges.push(parse_pair(line)?);
    }
    if edges.len() != m {
        return Err(Error::EdgeList(format!("expected {m} edges, found {}", edges.len())));
    }
    if lines.next().is_some() {
        return Err(Error::EdgeList("trailing lines after edge list".into()));
    }
    Graph::from_edges(n, &edges)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| Error::EdgeList(format!("not a number: {t:?}"))));
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::EdgeList(format!("expected two numbers: {line:?}"))),
    }
}
