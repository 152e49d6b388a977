use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use paramvc::dimacs::parse_dimacs_with_capacities;
use paramvc::{Error, Graph};
use serde::Serialize;
use serde_json::Value;

/// Core errors carry 0-based ids; users see 1-based ones.
pub fn user_error(e: Error) -> anyhow::Error {
    match e {
        Error::VertexOutOfRange { vertex, n } => {
            anyhow!("vertex {} out of range (n = {n})", vertex + 1)
        }
        Error::SelfLoop(v) => anyhow!("self-loop at vertex {}", v + 1),
        Error::DuplicateEdge(u, v) => anyhow!("duplicate edge {{{}, {}}}", u + 1, v + 1),
        Error::NotAnEdge(u, v) => anyhow!("{{{}, {}}} is not an edge of the graph", u + 1, v + 1),
        Error::DegreeBound {
            vertex,
            degree,
            bound,
        } => {
            anyhow!(
                "vertex {} has degree {degree}, exceeding the bound B = {bound}",
                vertex + 1
            )
        }
        Error::InvalidColoring(u, v) => anyhow!("edge {{{}, {}}} is monochromatic", u + 1, v + 1),
        Error::NotAMatching(v) => anyhow!("not a matching: vertex {} is matched twice", v + 1),
        Error::NotACover(u, v) => anyhow!(
            "not a vertex cover: edge {{{}, {}}} is uncovered",
            u + 1,
            v + 1
        ),
        Error::NotDominating(v) => anyhow!("not a dominating set: vertex {} is undominated", v + 1),
        other => anyhow!(other),
    }
}

pub fn read_graph(path: &Path) -> Result<(Graph, Vec<usize>)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_dimacs_with_capacities(&text)
        .map_err(user_error)
        .with_context(|| format!("parsing {}", path.display()))
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn to_zero_based(x: &Value) -> Result<usize> {
    match x.as_u64() {
        Some(0) | None => bail!("expected a 1-based vertex id, found {x}"),
        Some(v) => Ok(v as usize - 1),
    }
}

fn unwrap_keyed<'a>(v: &'a Value, keys: &[&str]) -> Result<&'a Vec<Value>> {
    if let Some(list) = v.as_array() {
        return Ok(list);
    }
    keys.iter()
        .find_map(|k| v.get(*k).and_then(Value::as_array))
        .ok_or_else(|| anyhow!("expected a JSON array or an object with one of {keys:?}"))
}

/// A vertex list, as a bare array or under `cover`, `set`, `vertices` or
/// `witness`. Converted to 0-based ids.
pub fn vertex_list(v: &Value) -> Result<Vec<usize>> {
    unwrap_keyed(v, &["cover", "set", "vertices", "witness"])?
        .iter()
        .map(to_zero_based)
        .collect()
}

/// A list of `[u, v]` pairs, bare or under `matching`, `edges` or `witness`.
pub fn edge_list(v: &Value) -> Result<Vec<(usize, usize)>> {
    unwrap_keyed(v, &["matching", "edges", "witness"])?
        .iter()
        .map(|pair| match pair.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok((to_zero_based(a)?, to_zero_based(b)?)),
            _ => bail!("expected a pair [u, v], found {pair}"),
        })
        .collect()
}

pub fn one_based(set: &[usize]) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

pub fn one_based_edges(edges: &[(usize, usize)]) -> Vec<[usize; 2]> {
    edges.iter().map(|&(u, v)| [u + 1, v + 1]).collect()
}

pub fn json_line<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

/// Writes to `path`, or to stdout when there is none.
pub fn emit(path: Option<&Path>, contents: &str) -> Result<()> {
    match path {
        Some(p) => write_file(p, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}
