//! Hardness constructions with their solution mappings.
//!
//! Each constructor returns a [`ReductionOutput`] holding the source graph,
//! the constructed instance, a role name for every constructed vertex and the
//! derived parameters. Structural formulas are checked before returning.

mod cvcl1;
mod unbounded;
mod vcu2;

pub use cvcl1::{
    map_cvcl1_back, map_ds_forward, reduce_ds_to_cvcl1, verify_assignment, CapacitatedCover,
};
pub use unbounded::{map_unbounded_back, map_unbounded_forward, reduce_vc_to_unbounded_vcu1};
pub use vcu2::{map_is_forward, map_vcu2_back, reduce_is_to_vcu2};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::Matching;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReductionKind {
    /// Dominating set to capacitated vertex cover above `m/B`.
    #[serde(rename = "cvcl1")]
    Cvcl1,
    /// Independent set to vertex cover below twice a maximal matching.
    #[serde(rename = "vcu2")]
    Vcu2,
    /// Vertex cover to vertex cover below `nB/(B+1)` with unbounded degree.
    #[serde(rename = "vcu1-unbounded")]
    Vcu1Unbounded,
}

/// Graph with per-vertex capacities, asking for a capacitated cover of size
/// at most `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacitatedInstance {
    pub graph: Graph,
    pub capacity: Vec<usize>,
    pub b: usize,
    pub target: usize,
}

impl CapacitatedInstance {
    pub fn new(graph: Graph, capacity: Vec<usize>, b: usize, target: usize) -> Result<Self> {
        if capacity.len() != graph.n() {
            return Err(Error::Precondition(format!(
                "{} capacities for {} vertices",
                capacity.len(),
                graph.n()
            )));
        }
        if let Some(v) = (0..graph.n()).find(|&v| capacity[v] > graph.degree(v)) {
            return Err(Error::Precondition(format!(
                "capacity {} of vertex {v} exceeds its degree {}",
                capacity[v],
                graph.degree(v)
            )));
        }
        graph.check_degree_bound(b)?;
        Ok(CapacitatedInstance {
            graph,
            capacity,
            b,
            target,
        })
    }
}

/// Source and target parameters of a construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionParams {
    pub source_n: usize,
    pub source_m: usize,
    pub source_b: usize,
    pub k: usize,
    pub n: usize,
    pub m: usize,
    /// Maximum degree of the constructed graph.
    pub b: usize,
    /// Cover-size bound of the constructed instance. Negative when no cover
    /// can meet it.
    pub target: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub matching_size: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub kind: ReductionKind,
    pub source: Graph,
    pub graph: Graph,
    /// Present for [`ReductionKind::Cvcl1`].
    pub capacity: Option<Vec<usize>>,
    /// Present for [`ReductionKind::Vcu2`].
    pub matching: Option<Matching>,
    /// Role of each constructed vertex, indexed by id. Names use 1-based ids.
    pub vertex_map: Vec<String>,
    pub params: ReductionParams,
}

impl ReductionOutput {
    pub fn capacitated_instance(&self) -> Option<CapacitatedInstance> {
        let capacity = self.capacity.clone()?;
        let target = usize::try_from(self.params.target).ok()?;
        CapacitatedInstance::new(self.graph.clone(), capacity, self.params.b, target).ok()
    }

    /// Maps a source solution forward: a dominating set for `cvcl1`, a
    /// vertex cover otherwise. Returns the target cover.
    pub fn map_forward(&self, solution: &[usize]) -> Result<Vec<usize>> {
        Ok(match self.kind {
            ReductionKind::Cvcl1 => map_ds_forward(self, solution)?.cover.cover,
            ReductionKind::Vcu2 => map_is_forward(self, solution)?.cover,
            ReductionKind::Vcu1Unbounded => map_unbounded_forward(self, solution)?.cover,
        })
    }

    /// Maps a target cover back to a source solution.
    pub fn map_back(&self, cover: &[usize]) -> Result<Vec<usize>> {
        match self.kind {
            ReductionKind::Cvcl1 => map_cvcl1_back(self, cover),
            ReductionKind::Vcu2 => map_vcu2_back(self, cover),
            ReductionKind::Vcu1Unbounded => map_unbounded_back(self, cover),
        }
    }

    pub fn to_sidecar(&self) -> Sidecar {
        Sidecar {
            kind: self.kind,
            k: self.params.k,
            source: SourceGraph {
                n: self.source.n(),
                edges: self
                    .source
                    .edges()
                    .iter()
                    .map(|&(u, v)| [u + 1, v + 1])
                    .collect(),
            },
            params: self.params.clone(),
            matching: self.matching.as_ref().map(Matching::to_one_based),
            vertex_map: self
                .vertex_map
                .iter()
                .enumerate()
                .map(|(i, r)| (i + 1, r.clone()))
                .collect(),
        }
    }

    /// Rebuilds the construction recorded in a sidecar and checks that it
    /// agrees with the recorded map and parameters.
    pub fn from_sidecar(s: &Sidecar) -> Result<Self> {
        let edges = s
            .source
            .edges
            .iter()
            .map(|&[u, v]| {
                if u == 0 || v == 0 {
                    Err(Error::Precondition("vertex ids are 1-based".into()))
                } else {
                    Ok((u - 1, v - 1))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let source = Graph::new(s.source.n, edges)?;
        let out = reduce(s.kind, &source, s.k)?;
        if out.params != s.params || out.to_sidecar().vertex_map != s.vertex_map {
            return Err(Error::Structure(
                "sidecar does not match its source graph".into(),
            ));
        }
        Ok(out)
    }
}

/// Runs the construction of `kind` on `source`.
pub fn reduce(kind: ReductionKind, source: &Graph, k: usize) -> Result<ReductionOutput> {
    match kind {
        ReductionKind::Cvcl1 => reduce_ds_to_cvcl1(source, k),
        ReductionKind::Vcu2 => reduce_is_to_vcu2(source, k),
        ReductionKind::Vcu1Unbounded => reduce_vc_to_unbounded_vcu1(source, k),
    }
}

/// JSON written next to a constructed instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub kind: ReductionKind,
    pub k: usize,
    pub source: SourceGraph,
    pub params: ReductionParams,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub matching: Option<Vec<[usize; 2]>>,
    pub vertex_map: Vec<(usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceGraph {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

fn structure(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Structure(what()))
    }
}

fn check_range(n: usize, set: &[usize]) -> Result<Vec<bool>> {
    let mut inside = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        inside[v] = true;
    }
    Ok(inside)
}

fn members(inside: &[bool]) -> Vec<usize> {
    (0..inside.len()).filter(|&v| inside[v]).collect()
}
