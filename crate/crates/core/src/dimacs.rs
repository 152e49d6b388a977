//! DIMACS edge format with an optional capacity extension.
//!
//! ```text
//! c comment
//! p edge <n> <m>
//! e <u> <v>        (m lines, 1-based, u != v)
//! x <v> <cap>      (optional, after the edges)
//! ```
//!
//! Vertices without an `x` line get capacity equal to their degree.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn field(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| perr(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| perr(line, format!("invalid {what} `{tok}`")))
}

/// Parses a graph; capacity lines are validated and then discarded.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    parse_dimacs_with_capacities(text).map(|(g, _)| g)
}

/// Parses a graph plus per-vertex capacities (default: the vertex degree).
pub fn parse_dimacs_with_capacities(text: &str) -> Result<(Graph, Vec<usize>)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut caps: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let mut toks = line.split_ascii_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(perr(ln, "second problem line"));
                }
                if toks.next() != Some("edge") {
                    return Err(perr(ln, "expected `p edge <n> <m>`"));
                }
                let n = field(ln, toks.next(), "vertex count")?;
                let m = field(ln, toks.next(), "edge count")?;
                header = Some((n, m, ln));
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(perr(ln, "edge before problem line"));
                };
                if !caps.is_empty() {
                    return Err(perr(ln, "edge after capacity lines"));
                }
                let u = field(ln, toks.next(), "endpoint")?;
                let v = field(ln, toks.next(), "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(perr(ln, format!("vertex id {x} out of range 1..={n}")));
                    }
                }
                if u == v {
                    return Err(perr(ln, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1, ln));
            }
            Some("x") => {
                let Some((n, _, _)) = header else {
                    return Err(perr(ln, "capacity before problem line"));
                };
                let v = field(ln, toks.next(), "vertex")?;
                let cap = field(ln, toks.next(), "capacity")?;
                if v == 0 || v > n {
                    return Err(perr(ln, format!("vertex id {v} out of range 1..={n}")));
                }
                caps.push((v - 1, cap, ln));
            }
            Some(tok) => return Err(perr(ln, format!("unknown line type `{tok}`"))),
            None => unreachable!(),
        }
        if toks.next().is_some() {
            return Err(perr(ln, "trailing tokens"));
        }
    }

    let (n, m, pline) =
        header.ok_or_else(|| perr(text.lines().count().max(1), "missing problem line"))?;
    if edges.len() != m {
        return Err(perr(
            pline,
            format!("problem line declares {m} edges, found {}", edges.len()),
        ));
    }
    let mut seen = std::collections::HashMap::new();
    for &(u, v, ln) in &edges {
        let key = crate::graph::norm(u, v);
        if let Some(first) = seen.insert(key, ln) {
            return Err(perr(
                ln,
                format!(
                    "duplicate edge {{{}, {}}} (first at line {first})",
                    u + 1,
                    v + 1
                ),
            ));
        }
    }
    let g = Graph::new(n, edges.iter().map(|&(u, v, _)| (u, v)))?;

    let mut capacity: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut set = vec![false; n];
    for (v, cap, ln) in caps {
        if std::mem::replace(&mut set[v], true) {
            return Err(perr(
                ln,
                format!("second capacity line for vertex {}", v + 1),
            ));
        }
        if cap > g.degree(v) {
            return Err(perr(
                ln,
                format!(
                    "capacity {cap} exceeds degree {} of vertex {}",
                    g.degree(v),
                    v + 1
                ),
            ));
        }
        capacity[v] = cap;
    }
    Ok((g, capacity))
}

/// Serializes `g` (1-based ids, edge-id order). Capacities are written only
/// for vertices whose capacity differs from their degree.
pub fn write_dimacs(g: &Graph, capacity: Option<&[usize]>, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("c ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("p edge {} {}\n", g.n(), g.m()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    if let Some(cap) = capacity {
        for (v, &c) in cap.iter().enumerate() {
            if c != g.degree(v) {
                out.push_str(&format!("x {} {}\n", v + 1, c));
            }
        }
    }
    out
}
