//! Edge-list text format and graph6.
//!
//! Edge list: first line `n m`, then `m` lines `u v`. Blank lines and lines
//! starting with `#` are ignored.

use crate::error::{GraphError, Result};
use crate::graph::Graph;

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a non-negative integer, found `{tok}`")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(parse_err(hline, "header must be `n m`"));
    }
    let n = parse_usize(toks[0], hline)?;
    let m = parse_usize(toks[1], hline)?;

    let mut edges = Vec::with_capacity(m);
    for (lno, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(lno, "edge line must be `u v`"));
        }
        let u = parse_usize(toks[0], lno)?;
        let v = parse_usize(toks[1], lno)?;
        if u >= n || v >= n {
            return Err(parse_err(lno, format!("vertex {} out of range 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(parse_err(lno, format!("loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

/// Canonical edge-list text: edges `u < v` in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Splits a stream of edge-list blocks separated by blank lines.
pub fn parse_edge_list_blocks(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut block = String::new();
    let mut start = 0;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if !block.trim().is_empty() {
                graphs.push(shift_line(parse_edge_list(&block), start)?);
            }
            block.clear();
            continue;
        }
        if block.is_empty() {
            start = i;
        }
        block.push_str(line);
        block.push('\n');
    }
    if !block.trim().is_empty() {
        graphs.push(shift_line(parse_edge_list(&block), start)?);
    }
    Ok(graphs)
}

fn shift_line(r: Result<Graph>, start: usize) -> Result<Graph> {
    r.map_err(|e| match e {
        GraphError::Parse { line, message } => GraphError::Parse {
            line: line + start,
            message,
        },
        other => other,
    })
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. The optional `>>graph6<<` header is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let s = line.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(1, "empty graph6 string"));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(parse_err(1, format!("byte {b} outside graph6 range 63..=126")));
        }
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else if bytes.len() >= 8 {
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[8..])
    } else {
        return Err(parse_err(1, "truncated graph6 order field"));
    };

    let bits_needed = n * n.saturating_sub(1) / 2;
    if body.len() * 6 < bits_needed || body.len() != bits_needed.div_ceil(6) {
        return Err(parse_err(
            1,
            format!("graph6 body has {} bytes, order {n} needs {}", body.len(), bits_needed.div_ceil(6)),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Reads every non-empty line of a graph6 file.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| shift_line(parse_graph6(l), i))
        .collect()
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
