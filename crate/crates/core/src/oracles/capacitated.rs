//! Capacitated vertex cover: flow feasibility and an exact branch and bound
//! for instances too large for subset enumeration.

use crate::flow::FlowNetwork;
use crate::graph::{Bipartition, Graph};
use crate::matching::{greedy_maximal_matching, min_vc_bipartite};

/// Decides whether `cover` is a capacitated vertex cover: every edge must be
/// assigned to an endpoint in `cover` with no vertex taking more than its
/// capacity. On success returns, per edge id, the endpoint it is assigned to.
pub fn capacitated_cover_feasible(
    g: &Graph,
    capacity: &[usize],
    cover: &[usize],
) -> Option<Vec<usize>> {
    let n = g.n();
    let m = g.m();
    let mut inside = vec![false; n];
    for &v in cover {
        if v >= n {
            return None;
        }
        inside[v] = true;
    }
    if g.edges().iter().any(|&(u, v)| !inside[u] && !inside[v]) {
        return None;
    }
    // nodes: edges 0..m, vertices m..m+n, source, sink
    let source = m + n;
    let sink = source + 1;
    let mut net = FlowNetwork::new(m + n + 2);
    let mut arcs = Vec::with_capacity(m);
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        net.add_arc(source, i, 1);
        let au = inside[u].then(|| net.add_arc(i, m + u, 1));
        let av = inside[v].then(|| net.add_arc(i, m + v, 1));
        arcs.push((au, av));
    }
    for v in 0..n {
        if inside[v] && capacity[v] > 0 {
            net.add_arc(m + v, sink, capacity[v] as u64);
        }
    }
    if net.max_flow(source, sink, m as u64) < m as u64 {
        return None;
    }
    let assign = g
        .edges()
        .iter()
        .zip(&arcs)
        .map(|(&(u, v), &(au, _))| match au {
            Some(a) if net.flow(a) > 0 => u,
            _ => v,
        })
        .collect();
    Some(assign)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Status {
    Open,
    In,
    Out,
}

struct Search<'a> {
    g: &'a Graph,
    capacity: &'a [usize],
    best: Option<Vec<usize>>,
    bound: usize,
}

/// Exact minimum capacitated vertex cover by branch and bound.
///
/// At each node the undecided part of the graph is relaxed to a plain vertex
/// cover problem: when the uncovered edges form a bipartite graph, König
/// gives the exact plain optimum, which is both a lower bound and a
/// candidate. A candidate that breaks a capacity is repaired by branching on
/// a vertex `v` that lacks covered neighbors: `v` leaves the cover, or `v`
/// stays and the first of its open neighbors to join is fixed. Nodes where
/// even "every open vertex joins" is infeasible are cut. Returns `None` when
/// no capacitated cover exists at all.
pub fn exact_min_capacitated_vc(g: &Graph, capacity: &[usize]) -> Option<Vec<usize>> {
    let all: Vec<usize> = (0..g.n()).collect();
    capacitated_cover_feasible(g, capacity, &all)?;
    let mut s = Search {
        g,
        capacity,
        best: Some(all),
        bound: g.n(),
    };
    s.run(vec![Status::Open; g.n()]);
    s.best
}

impl Search<'_> {
    fn demand(&self, v: usize) -> usize {
        self.g.degree(v).saturating_sub(self.capacity[v])
    }

    fn select(st: &[Status], pred: impl Fn(Status) -> bool) -> Vec<usize> {
        (0..st.len()).filter(|&v| pred(st[v])).collect()
    }

    fn run(&mut self, mut st: Vec<Status>) {
        let g = self.g;
        // an excluded vertex forces its whole neighborhood in
        for v in 0..g.n() {
            if st[v] == Status::Out {
                for &w in g.neighbors(v) {
                    match st[w] {
                        Status::Out => return,
                        _ => st[w] = Status::In,
                    }
                }
            }
        }
        let optimistic = Self::select(&st, |s| s != Status::Out);
        if capacitated_cover_feasible(g, self.capacity, &optimistic).is_none() {
            return;
        }
        let fixed = Self::select(&st, |s| s == Status::In);

        // plain relaxation on the edges no fixed vertex covers
        let open_edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| st[u] == Status::Open && st[v] == Status::Open)
            .collect();
        let residual = Graph::new(g.n(), open_edges).expect("subgraph");
        let (lower, candidate) = match residual.bipartition() {
            Bipartition::Bipartite(c) => {
                let z = min_vc_bipartite(&residual, &c).expect("valid coloring");
                let mut cand = fixed.clone();
                cand.extend(z.iter().copied());
                cand.sort_unstable();
                (z.len(), Some(cand))
            }
            Bipartition::OddCycle(_) => (
                greedy_maximal_matching(&residual, None).unwrap().len(),
                None,
            ),
        };
        if fixed.len() + lower >= self.bound {
            return;
        }
        if let Some(cand) = &candidate {
            if capacitated_cover_feasible(g, self.capacity, cand).is_some() {
                self.bound = cand.len();
                self.best = Some(cand.clone());
                return;
            }
        }

        if let Some(v) = self.short_vertex(&st, candidate.as_deref()) {
            let open_nb: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| st[w] == Status::Open)
                .collect();
            if st[v] == Status::Open {
                let mut child = st.clone();
                child[v] = Status::Out;
                self.run(child);
            }
            for (i, &w) in open_nb.iter().enumerate() {
                let mut child = st.clone();
                child[v] = Status::In;
                for &x in &open_nb[..i] {
                    child[x] = Status::Out;
                }
                child[w] = Status::In;
                self.run(child);
            }
            return;
        }

        // no local repair applies: branch on an open vertex of maximum degree
        let Some(v) = (0..g.n())
            .filter(|&v| st[v] == Status::Open)
            .max_by_key(|&v| (residual.degree(v), std::cmp::Reverse(v)))
        else {
            return;
        };
        for choice in [Status::In, Status::Out] {
            let mut child = st.clone();
            child[v] = choice;
            self.run(child);
        }
    }

    /// A vertex that may be in the cover but has fewer fixed-in neighbors than
    /// its capacity requires. Prefers one that is short in the candidate too.
    fn short_vertex(&self, st: &[Status], candidate: Option<&[usize]>) -> Option<usize> {
        let g = self.g;
        let mut in_cand = vec![false; g.n()];
        if let Some(c) = candidate {
            for &v in c {
                in_cand[v] = true;
            }
        }
        let fixed_nb = |v: usize| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| st[w] == Status::In)
                .count()
        };
        let short = |v: usize| st[v] != Status::Out && fixed_nb(v) < self.demand(v);
        let cand_nb = |v: usize| g.neighbors(v).iter().filter(|&&w| in_cand[w]).count();
        (0..g.n())
            .find(|&v| short(v) && in_cand[v] && cand_nb(v) < self.demand(v))
            .or_else(|| (0..g.n()).find(|&v| short(v) && st[v] == Status::In))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::oracles::{bf_min_capacitated_vc, OracleLimits};

    #[test]
    fn assignment_respects_capacities() {
        let g = complete(4);
        let cap = [2, 2, 2, 1];
        let a = capacitated_cover_feasible(&g, &cap, &[0, 1, 2]).unwrap();
        let mut load = [0; 4];
        for (i, &v) in a.iter().enumerate() {
            let (x, y) = g.edges()[i];
            assert!(v == x || v == y);
            load[v] += 1;
        }
        assert!(load.iter().zip(cap).all(|(&l, c)| l <= c));
        assert!(capacitated_cover_feasible(&g, &cap, &[0, 1]).is_none());
        assert!(capacitated_cover_feasible(&g, &[2, 2, 1, 1], &[0, 1, 2]).is_none());
    }

    #[test]
    fn branch_and_bound_matches_enumeration() {
        let s = star(3);
        assert_eq!(
            exact_min_capacitated_vc(&s, &[2, 1, 1, 1]).unwrap().len(),
            2
        );
        let cases = [
            (complete(4), vec![1, 1, 1, 1]),
            (complete(5), vec![2, 2, 2, 2, 2]),
            (petersen(), vec![2, 3, 2, 3, 2, 3, 2, 3, 2, 3]),
            (cycle(7), vec![1, 1, 1, 1, 1, 1, 1]),
            (complete_bipartite(3, 4), vec![4, 4, 4, 2, 2, 2, 2]),
        ];
        for (g, cap) in cases {
            let bf = bf_min_capacitated_vc(&g, &cap, &OracleLimits::default()).unwrap();
            let bb = exact_min_capacitated_vc(&g, &cap);
            assert_eq!(
                bf.map(|r| r.optimum),
                bb.as_ref().map(Vec::len),
                "{g:?} {cap:?}"
            );
            if let Some(c) = bb {
                assert!(capacitated_cover_feasible(&g, &cap, &c).is_some());
            }
        }
    }

    #[test]
    fn infeasible_instance() {
        // a single edge whose endpoints both have capacity 0
        let g = path(2);
        assert!(exact_min_capacitated_vc(&g, &[0, 0]).is_none());
        assert_eq!(
            bf_min_capacitated_vc(&g, &[0, 0], &OracleLimits::default()).unwrap(),
            None
        );
    }
}
