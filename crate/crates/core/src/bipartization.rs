//! Exact minimum edge bipartization under a budget, by iterative compression.
//!
//! Edges are inserted one at a time while a minimum bipartization `X` of the
//! current subgraph is maintained. When a new edge closes an odd cycle,
//! `X + e` is a bipartization one larger than optimal-so-far and we try to
//! compress it. Compression fixes the two-coloring `c0` of `G - X` and looks
//! for a flip vector `f` (final coloring `c0 xor f`) minimizing monochromatic
//! edges. An edge of `G - X` becomes monochromatic iff `f` differs across it,
//! which is a cut. For an `X` edge `ab` we keep `a` as a terminal and replace
//! the edge by `t_e - b` with a fresh terminal `t_e` whose flip is tied to
//! `f(a)`, so the `X` edge also costs exactly one cut edge when it ends up
//! monochromatic. Enumerating the flips of the (at most `|X|`) tail terminals
//! and taking a minimum cut for each gives the optimum.

use crate::error::Result;
use crate::flow::{FlowNetwork, INF};
use crate::graph::{norm, Bipartition, Edge, Graph, TwoColoring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartization {
    /// Deleted edges, sorted.
    pub edges: Vec<Edge>,
    /// Two-coloring of `G - edges`.
    pub residual_coloring: TwoColoring,
}

impl Bipartization {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Checks that the edges belong to `g` and the coloring is proper on
    /// every other edge.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let residual = g.delete_edges(&self.edges)?;
        self.residual_coloring.validate(&residual)
    }
}

/// True iff `g - d` is bipartite. Fails when `d` contains a non-edge.
pub fn is_edge_bipartization(g: &Graph, d: &[Edge]) -> Result<bool> {
    Ok(g.delete_edges(d)?.is_bipartite())
}

/// A minimum edge bipartization of size at most `budget`, or `None` when
/// every bipartization is larger.
pub fn min_edge_bipartization(g: &Graph, budget: usize) -> Option<Bipartization> {
    if budget == 0 {
        return match g.bipartition() {
            Bipartition::Bipartite(c) => Some(Bipartization {
                edges: Vec::new(),
                residual_coloring: c,
            }),
            Bipartition::OddCycle(_) => None,
        };
    }
    let n = g.n();
    let mut prefix: Vec<Edge> = Vec::with_capacity(g.m());
    let mut x: Vec<Edge> = Vec::new();
    for &e in g.edges() {
        prefix.push(e);
        let rest = without(&prefix, &x);
        if Graph::new(n, rest)
            .expect("subgraph of a simple graph")
            .is_bipartite()
        {
            continue;
        }
        let mut grown = x.clone();
        grown.push(e);
        x = match compress(n, &prefix, &grown) {
            Some(smaller) => smaller,
            None => grown,
        };
        if x.len() > budget {
            return None;
        }
    }
    x.sort_unstable();
    let residual = g.delete_edges(&x).expect("x is a subset of E");
    match residual.bipartition() {
        Bipartition::Bipartite(c) => Some(Bipartization {
            edges: x,
            residual_coloring: c,
        }),
        Bipartition::OddCycle(_) => unreachable!("compression kept an odd cycle"),
    }
}

fn without(edges: &[Edge], drop: &[Edge]) -> Vec<Edge> {
    edges
        .iter()
        .copied()
        .filter(|e| !drop.contains(e))
        .collect()
}

/// Given a bipartization `x` of the graph `(n, edges)`, returns one of size
/// `|x| - 1` if it exists.
fn compress(n: usize, edges: &[Edge], x: &[Edge]) -> Option<Vec<Edge>> {
    let rest = without(edges, x);
    let base_graph = Graph::new(n, rest.iter().copied()).expect("simple");
    let Bipartition::Bipartite(c0) = base_graph.bipartition() else {
        unreachable!("x must bipartize")
    };

    // Tail terminals: reuse an endpoint already chosen, else the endpoint
    // that occurs in more X edges (ties to the smaller id).
    let mut freq = vec![0usize; n];
    for &(a, b) in x {
        freq[a] += 1;
        freq[b] += 1;
    }
    let mut tails: Vec<usize> = Vec::new();
    let mut oriented: Vec<(usize, usize)> = Vec::with_capacity(x.len());
    for &(a, b) in x {
        let tail = if tails.contains(&a) {
            a
        } else if tails.contains(&b) || freq[b] > freq[a] {
            b
        } else {
            a
        };
        if !tails.contains(&tail) {
            tails.push(tail);
        }
        let head = if tail == a { b } else { a };
        oriented.push((tail, head));
    }
    tails.sort_unstable();
    let tail_index = |v: usize| tails.binary_search(&v).unwrap();

    // nodes: 0..n original, n..n+|x| the t_e, then source and sink
    let source = n + x.len();
    let sink = source + 1;
    let mut base = FlowNetwork::new(n + x.len() + 2);
    // (network endpoints, graph edge it stands for)
    let mut unit: Vec<((usize, usize), Edge)> = Vec::new();
    for &(u, v) in &rest {
        base.add_undirected(u, v, 1);
        unit.push(((u, v), (u, v)));
    }
    for (i, &(_, head)) in oriented.iter().enumerate() {
        base.add_undirected(n + i, head, 1);
        unit.push(((n + i, head), x[i]));
    }

    let target = x.len() as u64;
    let r = tails.len();
    for mask in 0u64..(1u64 << (r - 1)) {
        // bit i of the flip vector belongs to tails[i]; tails[0] is fixed at 0
        let flip_of = |t: usize| (mask >> (r - 1 - tail_index(t))) & 1 == 1;
        let mut net = base.clone();
        for &t in &tails {
            attach(&mut net, t, flip_of(t), source, sink);
        }
        for (i, &(tail, head)) in oriented.iter().enumerate() {
            let same = c0.side[tail] == c0.side[head];
            attach(&mut net, n + i, flip_of(tail) ^ same, source, sink);
        }
        let value = net.max_flow(source, sink, target);
        if value < target {
            let reach = net.residual_reachable(source);
            let mut cut: Vec<Edge> = unit
                .iter()
                .filter(|&&((p, q), _)| reach[p] != reach[q])
                .map(|&(_, e)| norm(e.0, e.1))
                .collect();
            cut.sort_unstable();
            debug_assert_eq!(cut.len() as u64, value);
            return Some(cut);
        }
    }
    None
}

fn attach(net: &mut FlowNetwork, node: usize, flipped: bool, source: usize, sink: usize) {
    if flipped {
        net.add_arc(node, sink, INF);
    } else {
        net.add_arc(source, node, INF);
    }
}
