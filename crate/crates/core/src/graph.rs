//! Simple undirected graphs over dense `0..n` vertex ids, plus the structural
//! primitives the solvers share: bipartiteness with odd-cycle witnesses,
//! connected components, component classification and greedy coloring.
//!
//! Graphs are immutable once built. Every operation that removes vertices or
//! edges returns a fresh graph, and vertex deletions also return the map from
//! new ids back to the ids of the original graph.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

/// Undirected edge stored with `u < v`.
pub type Edge = (usize, usize);

/// Normalizes an unordered pair so the smaller endpoint comes first.
#[inline]
pub fn norm(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range
    /// endpoints. Edge ids follow the input order.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = norm(u, v);
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            adj[u].push(v);
            adj[v].push(u);
            list.push(e);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Maximum vertex degree; 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Fails with the first vertex whose degree exceeds `bound`.
    pub fn check_degree_bound(&self, bound: usize) -> Result<()> {
        match (0..self.n).find(|&v| self.degree(v) > bound) {
            Some(v) => Err(Error::DegreeBound {
                vertex: v,
                degree: self.degree(v),
                bound,
            }),
            None => Ok(()),
        }
    }

    /// Returns the first edge (in edge-id order) with no endpoint in `set`.
    pub fn uncovered_edge(&self, set: &[usize]) -> Option<Edge> {
        let mut mark = vec![false; self.n];
        for &v in set {
            if v < self.n {
                mark[v] = true;
            }
        }
        self.edges
            .iter()
            .copied()
            .find(|&(u, v)| !mark[u] && !mark[v])
    }

    pub fn is_vertex_cover(&self, set: &[usize]) -> bool {
        set.iter().all(|&v| v < self.n) && self.uncovered_edge(set).is_none()
    }

    fn check_edges(&self, d: &[Edge]) -> Result<()> {
        for &(u, v) in d {
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        Ok(())
    }

    /// Subgraph induced by `keep` (need not be sorted). Returns the new graph
    /// and the map from new ids to original ids; new ids follow ascending
    /// original id.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut map: Vec<usize> = keep.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut inv = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            inv[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| inv[u] != usize::MAX && inv[v] != usize::MAX)
            .map(|&(u, v)| (inv[u], inv[v]));
        Ok((Graph::new(map.len(), edges)?, map))
    }

    /// `G - S`: the subgraph induced by the vertices outside `s`.
    pub fn delete_vertices(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut gone = vec![false; self.n];
        for &v in s {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// `G - D`: same vertex set, edge set `E \ D`.
    pub fn delete_edges(&self, d: &[Edge]) -> Result<Graph> {
        self.check_edges(d)?;
        let drop: HashSet<Edge> = d.iter().map(|&(u, v)| norm(u, v)).collect();
        Graph::new(
            self.n,
            self.edges.iter().copied().filter(|e| !drop.contains(e)),
        )
    }

    /// `G[D]`: vertices are the endpoints of `d` (ascending), edges exactly `d`.
    pub fn edge_induced_subgraph(&self, d: &[Edge]) -> Result<(Graph, Vec<usize>)> {
        self.check_edges(d)?;
        let mut map: Vec<usize> = d.iter().flat_map(|&(u, v)| [u, v]).collect();
        map.sort_unstable();
        map.dedup();
        let mut inv = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let g = Graph::new(map.len(), d.iter().map(|&(u, v)| (inv[u], inv[v])))?;
        Ok((g, map))
    }

    /// Partition of the vertex set into connected components, each sorted
    /// ascending, ordered by their minimum vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Breadth-first two-coloring. Each component's lowest vertex goes left.
    /// When the graph is not bipartite, returns an odd cycle found at the first
    /// monochromatic edge met by the search.
    pub fn bipartition(&self) -> Bipartition {
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(Side::Left);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(su.flip());
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => {
                            return Bipartition::OddCycle(OddCycleWitness {
                                cycle: close_cycle(u, w, &parent, &depth),
                            });
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartition::Bipartite(TwoColoring {
            side: side.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::Bipartite(_))
    }

    /// Greedy coloring along `order`: each vertex takes the smallest color not
    /// used by an already-colored neighbor. Colors are `0..`.
    pub fn greedy_coloring(&self, order: &[usize]) -> Result<Vec<usize>> {
        let mut seen = vec![false; self.n];
        if order.len() != self.n {
            return Err(Error::Precondition(format!(
                "order has {} entries, expected a permutation of 0..{}",
                order.len(),
                self.n
            )));
        }
        for &v in order {
            if v >= self.n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Precondition(format!(
                    "order is not a permutation (vertex {v})"
                )));
            }
        }
        Ok(greedy_extend(self, order, vec![None; self.n]))
    }

    /// Classifies a connected component against the degree bound `b`.
    pub fn classify_component(&self, component: &[usize], b: usize) -> Result<ComponentClass> {
        for &v in component {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            if self.degree(v) > b {
                return Err(Error::DegreeBound {
                    vertex: v,
                    degree: self.degree(v),
                    bound: b,
                });
            }
        }
        let size = component.len();
        let twice_edges: usize = component.iter().map(|&v| self.degree(v)).sum();
        if size == b + 1 && twice_edges == size * (size - 1) {
            return Ok(ComponentClass::CompleteBPlusOne);
        }
        if b == 2 && size >= 3 && size % 2 == 1 && component.iter().all(|&v| self.degree(v) == 2) {
            return Ok(ComponentClass::OddCycle);
        }
        Ok(ComponentClass::Other)
    }
}

/// Colors the vertices of `order` greedily, respecting any colors already
/// fixed in `color`. Vertices absent from `order` and uncolored get
/// `usize::MAX`.
pub(crate) fn greedy_extend(
    g: &Graph,
    order: &[usize],
    mut color: Vec<Option<usize>>,
) -> Vec<usize> {
    let mut used = Vec::new();
    for &v in order {
        if color[v].is_some() {
            continue;
        }
        used.clear();
        used.resize(g.degree(v) + 1, false);
        for &w in g.neighbors(v) {
            if let Some(c) = color[w] {
                if c < used.len() {
                    used[c] = true;
                }
            }
        }
        color[v] = Some(used.iter().position(|&u| !u).unwrap());
    }
    color.into_iter().map(|c| c.unwrap_or(usize::MAX)).collect()
}

fn close_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Assignment of every vertex to a side such that edges join the two sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColoring {
    pub side: Vec<Side>,
}

impl TwoColoring {
    /// Checks the coloring against `g`; the error names a monochromatic edge.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.side.len() != g.n() {
            return Err(Error::Precondition(format!(
                "coloring has {} entries for a graph on {} vertices",
                self.side.len(),
                g.n()
            )));
        }
        match g
            .edges()
            .iter()
            .find(|&&(u, v)| self.side[u] == self.side[v])
        {
            Some(&(u, v)) => Err(Error::InvalidColoring(u, v)),
            None => Ok(()),
        }
    }

    pub fn left(&self) -> Vec<usize> {
        self.members(Side::Left)
    }

    pub fn right(&self) -> Vec<usize> {
        self.members(Side::Right)
    }

    fn members(&self, s: Side) -> Vec<usize> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == s)
            .collect()
    }

    /// Restriction to the vertices listed in `map` (new id i ↦ old id map[i]).
    pub fn restrict(&self, map: &[usize]) -> TwoColoring {
        TwoColoring {
            side: map.iter().map(|&v| self.side[v]).collect(),
        }
    }
}

/// Closed walk `cycle[0], cycle[1], ..., cycle[len-1], cycle[0]` of odd length
/// over distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleWitness {
    pub cycle: Vec<usize>,
}

impl OddCycleWitness {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        let l = self.cycle.len();
        let distinct: HashSet<_> = self.cycle.iter().collect();
        l >= 3
            && l % 2 == 1
            && distinct.len() == l
            && (0..l).all(|i| g.has_edge(self.cycle[i], self.cycle[(i + 1) % l]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    Bipartite(TwoColoring),
    OddCycle(OddCycleWitness),
}

/// Brooks-exceptional component shapes relative to a degree bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentClass {
    CompleteBPlusOne,
    OddCycle,
    Other,
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(star(3).max_degree(), 3);
        assert_eq!(cycle(5).max_degree(), 2);
        assert_eq!(Graph::empty(4).max_degree(), 0);
    }

    #[test]
    fn bipartition_examples() {
        match cycle(4).bipartition() {
            Bipartition::Bipartite(c) => {
                assert_eq!(c.left(), vec![0, 2]);
                assert_eq!(c.right(), vec![1, 3]);
            }
            other => panic!("{other:?}"),
        }
        match complete(3).bipartition() {
            Bipartition::OddCycle(w) => {
                assert_eq!(w.len(), 3);
                assert!(w.is_valid(&complete(3)));
            }
            other => panic!("{other:?}"),
        }
        let p = petersen();
        match p.bipartition() {
            Bipartition::OddCycle(w) => {
                assert_eq!(w.len(), 5);
                assert!(w.is_valid(&p));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn lowest_vertex_of_each_component_goes_left() {
        let g = Graph::new(4, [(1, 0), (3, 2)]).unwrap();
        let Bipartition::Bipartite(c) = g.bipartition() else {
            panic!()
        };
        assert_eq!(c.left(), vec![0, 2]);
    }

    #[test]
    fn components() {
        let g = disjoint(&[complete(3), complete(3)]);
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(petersen().connected_components().len(), 1);
        assert_eq!(
            Graph::empty(3).connected_components(),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn classification() {
        let k4 = complete(4);
        assert_eq!(
            k4.classify_component(&[0, 1, 2, 3], 3),
            Ok(ComponentClass::CompleteBPlusOne)
        );
        assert_eq!(
            cycle(5).classify_component(&[0, 1, 2, 3, 4], 2),
            Ok(ComponentClass::OddCycle)
        );
        assert_eq!(
            path(4).classify_component(&[0, 1, 2, 3], 2),
            Ok(ComponentClass::Other)
        );
        assert_eq!(
            cycle(5).classify_component(&[0, 1, 2, 3, 4], 3),
            Ok(ComponentClass::Other)
        );
        assert!(matches!(
            k4.classify_component(&[0, 1, 2, 3], 2),
            Err(Error::DegreeBound { .. })
        ));
    }

    #[test]
    fn greedy_examples() {
        let c = complete(3).greedy_coloring(&[2, 0, 1]).unwrap();
        assert_eq!(c.iter().max(), Some(&2));
        let c = cycle(4).greedy_coloring(&[0, 1, 2, 3]).unwrap();
        assert_eq!(c, vec![0, 1, 0, 1]);
        let c = star(3).greedy_coloring(&[1, 2, 3, 0]).unwrap();
        assert_eq!(c, vec![1, 0, 0, 0]);
        assert!(cycle(4).greedy_coloring(&[0, 1, 1, 3]).is_err());
    }

    #[test]
    fn edge_induced_examples() {
        let k3 = complete(3);
        let (h, map) = k3.edge_induced_subgraph(&[]).unwrap();
        assert_eq!((h.n(), h.m()), (0, 0));
        assert!(map.is_empty());
        let (h, map) = k3.edge_induced_subgraph(&[(1, 2)]).unwrap();
        assert_eq!((h.n(), h.m()), (2, 1));
        assert_eq!(map, vec![1, 2]);
        let g = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        let (h, map) = g.edge_induced_subgraph(g.edges()).unwrap();
        assert_eq!((h.n(), h.m(), map), (3, 2, vec![0, 1, 2]));
        assert_eq!(
            k3.edge_induced_subgraph(&[(0, 0)]),
            Err(Error::NotAnEdge(0, 0))
        );
    }

    #[test]
    fn deletions() {
        let (h, map) = complete(3).delete_vertices(&[0]).unwrap();
        assert_eq!((h.n(), h.m(), map), (2, 1, vec![1, 2]));
        let p = cycle(5).delete_edges(&[(0, 4)]).unwrap();
        assert_eq!(p, path(5));
        let g = petersen();
        assert_eq!(g.delete_edges(&[]).unwrap(), g);
        assert_eq!(g.delete_vertices(&[]).unwrap().0, g);
        assert!(g.delete_vertices(&[10]).is_err());
        assert_eq!(g.delete_edges(&[(0, 2)]), Err(Error::NotAnEdge(0, 2)));
    }
}
