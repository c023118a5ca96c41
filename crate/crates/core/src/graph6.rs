//! graph6 short form (n <= 62).
//!
//! Byte 0 is `63 + n`. The body packs the upper triangle in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` into big-endian 6-bit groups, each
//! stored as `63 + value`, zero-padded to a whole group.

use std::io::BufRead;

use crate::error::{Error, Graph6Error};
use crate::graph::Graph;
use crate::set::VertexSet;

pub const MAX_SHORT_FORM: usize = 62;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let (&header, body) = text.split_first().ok_or(Graph6Error::Empty)?;
    if header == 126 {
        return Err(Graph6Error::LongForm);
    }
    if !(63..=125).contains(&header) {
        return Err(Graph6Error::BadHeader(header));
    }
    let n = (header - 63) as usize;
    let expected = body_len(n);
    if let Some((offset, &byte)) = body.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::OutOfRange { byte, offset: offset + 1 });
    }
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData { expected, found: body.len() });
    }

    let mut rows = vec![VertexSet::EMPTY; n];
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let group = body[bit / 6] - 63;
            if group >> (5 - bit % 6) & 1 == 1 {
                rows[u].insert(v);
                rows[v].insert(u);
            }
            bit += 1;
        }
    }
    Ok(Graph::from_adjacency(rows).expect("graph6 body always yields a simple graph"))
}

pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_SHORT_FORM {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(63 + n as u8);
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Reads a graph6 file: one record per line, blank lines and `#` comments ignored.
/// Each item carries the 1-based line number.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> impl Iterator<Item = (usize, Result<Graph, Error>)> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some((i + 1, Err(Error::Io(e.to_string())))),
        };
        let record = line.trim();
        if record.is_empty() || record.starts_with('#') {
            return None;
        }
        Some((i + 1, parse_graph6(record.as_bytes()).map_err(Error::from)))
    })
}
