//! Brute-force and exhaustive reference solvers.
//!
//! These exist to certify the real algorithms on small instances, not to be
//! fast. Every entry point checks a configurable size limit and fails cleanly
//! instead of running away. Vertex sets are handled as `u128` bitmasks, so no
//! limit can exceed 128 vertices.

mod capacitated;

pub use capacitated::{capacitated_cover_feasible, exact_min_capacitated_vc};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Hard ceiling imposed by the bitmask representation.
pub const MAX_BITS: usize = 128;

/// Name of the environment variable that overrides every oracle limit.
pub const LIMIT_ENV: &str = "PARAMVC_ORACLE_LIMIT";

/// Size limits for the exponential oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Vertex limit for vertex cover, independent set and dominating set.
    pub vertices: usize,
    /// Vertex limit for the subset-enumeration capacitated cover oracle.
    pub capacitated_vertices: usize,
    /// Edge limit for edge bipartization and matching.
    pub edges: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            vertices: 22,
            capacitated_vertices: 18,
            edges: 24,
        }
    }
}

impl OracleLimits {
    /// All limits set to `limit`.
    pub fn uniform(limit: usize) -> Self {
        OracleLimits {
            vertices: limit,
            capacitated_vertices: limit,
            edges: limit,
        }
    }

    /// Defaults, overridden by `PARAMVC_ORACLE_LIMIT` when it parses.
    pub fn from_env() -> Self {
        std::env::var(LIMIT_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Self::uniform)
            .unwrap_or_default()
    }
}

/// Optimum value plus a witness achieving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult<W> {
    pub optimum: usize,
    pub witness: W,
}

fn check_limit(what: &'static str, value: usize, limit: usize) -> Result<()> {
    let limit = limit.min(MAX_BITS);
    if value > limit {
        Err(Error::LimitExceeded { what, value, limit })
    } else {
        Ok(())
    }
}

fn bit(v: usize) -> u128 {
    1u128 << v
}

fn members(mask: u128) -> Vec<usize> {
    (0..MAX_BITS).filter(|&v| mask & bit(v) != 0).collect()
}

fn open_masks(g: &Graph) -> Vec<u128> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0, |acc, &w| acc | bit(w)))
        .collect()
}

/// Exact minimum vertex cover by branching on a maximum-degree vertex `v`:
/// either `v` joins the cover or all of `N(v)` does. Degree-one vertices
/// force their neighbor in, and a greedy matching bound prunes.
pub fn bf_min_vertex_cover(g: &Graph, limits: &OracleLimits) -> Result<OracleResult<Vec<usize>>> {
    check_limit("vertices", g.n(), limits.vertices)?;
    let adj = open_masks(g);
    let all = if g.n() == MAX_BITS {
        u128::MAX
    } else {
        bit(g.n()) - 1
    };
    let mut best = (usize::MAX, 0u128);
    vc_branch(&adj, all, 0, &mut best);
    Ok(OracleResult {
        optimum: best.0,
        witness: members(best.1),
    })
}

fn vc_branch(adj: &[u128], mut alive: u128, mut chosen: u128, best: &mut (usize, u128)) {
    // degree-zero and degree-one rules until stable
    loop {
        let mut changed = false;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if alive & bit(v) == 0 {
                continue;
            }
            let nb = adj[v] & alive;
            match nb.count_ones() {
                0 => {
                    alive &= !bit(v);
                    changed = true;
                }
                1 => {
                    let w = nb.trailing_zeros() as usize;
                    chosen |= bit(w);
                    alive &= !(bit(v) | bit(w));
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let taken = chosen.count_ones() as usize;
    if alive == 0 {
        if taken < best.0 {
            *best = (taken, chosen);
        }
        return;
    }
    // greedy matching lower bound
    let mut free = alive;
    let mut lb = 0;
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if free & bit(v) == 0 {
            continue;
        }
        let nb = adj[v] & free;
        if nb != 0 {
            let w = nb.trailing_zeros() as usize;
            free &= !(bit(v) | bit(w));
            lb += 1;
        }
    }
    if taken + lb >= best.0 {
        return;
    }
    let mut v = alive.trailing_zeros() as usize;
    let mut rest = alive;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (adj[u] & alive).count_ones() > (adj[v] & alive).count_ones() {
            v = u;
        }
    }
    let nb = adj[v] & alive;
    vc_branch(adj, alive & !bit(v), chosen | bit(v), best);
    vc_branch(adj, alive & !bit(v) & !nb, chosen | nb, best);
}

/// Exact minimum capacitated vertex cover by enumerating vertex subsets in
/// increasing size (lexicographic within a size). Subsets whose capacities
/// sum to less than `m` are skipped without a flow check. `None` when no
/// vertex set is feasible.
pub fn bf_min_capacitated_vc(
    g: &Graph,
    capacity: &[usize],
    limits: &OracleLimits,
) -> Result<Option<OracleResult<Vec<usize>>>> {
    check_limit("vertices", g.n(), limits.capacitated_vertices)?;
    let n = g.n();
    let m = g.m();
    let mut found = None;
    for size in 0..=n {
        for_each_subset(n, size, &mut |set: &[usize]| {
            let total: usize = set.iter().map(|&v| capacity[v]).sum();
            if total < m {
                return false;
            }
            if capacitated_cover_feasible(g, capacity, set).is_some() {
                found = Some(set.to_vec());
                return true;
            }
            false
        });
        if let Some(w) = found.take() {
            return Ok(Some(OracleResult {
                optimum: size,
                witness: w,
            }));
        }
    }
    Ok(None)
}

/// Calls `visit` on every `size`-subset of `0..n` in lexicographic order
/// until it returns true. Returns whether it stopped early.
fn for_each_subset(n: usize, size: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        start: usize,
        n: usize,
        left: usize,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if left == 0 {
            return visit(cur);
        }
        for v in start..=n - left {
            cur.push(v);
            if rec(v + 1, n, left - 1, cur, visit) {
                return true;
            }
            cur.pop();
        }
        false
    }
    if size > n {
        return false;
    }
    rec(0, n, size, &mut Vec::with_capacity(size), visit)
}

/// Exact minimum dominating set by subset enumeration in increasing size.
pub fn bf_min_dominating_set(g: &Graph, limits: &OracleLimits) -> Result<OracleResult<Vec<usize>>> {
    check_limit("vertices", g.n(), limits.vertices)?;
    let n = g.n();
    let closed: Vec<u128> = open_masks(g)
        .into_iter()
        .enumerate()
        .map(|(v, m)| m | bit(v))
        .collect();
    let all = if n == MAX_BITS { u128::MAX } else { bit(n) - 1 };
    for size in 0..=n {
        let mut found = None;
        for_each_subset(n, size, &mut |set: &[usize]| {
            let dom = set.iter().fold(0u128, |acc, &v| acc | closed[v]);
            if dom == all {
                found = Some(set.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(w) = found {
            return Ok(OracleResult {
                optimum: size,
                witness: w,
            });
        }
    }
    unreachable!("the whole vertex set dominates")
}

/// True iff every vertex is in `set` or adjacent to it; otherwise the first
/// undominated vertex.
pub fn undominated_vertex(g: &Graph, set: &[usize]) -> Option<usize> {
    let mut dom = vec![false; g.n()];
    for &v in set {
        dom[v] = true;
        for &w in g.neighbors(v) {
            dom[w] = true;
        }
    }
    dom.iter().position(|&d| !d)
}

/// Exact maximum independent set by branching on a maximum-degree vertex
/// (take it and drop its neighbors, or drop it).
pub fn bf_max_independent_set(
    g: &Graph,
    limits: &OracleLimits,
) -> Result<OracleResult<Vec<usize>>> {
    check_limit("vertices", g.n(), limits.vertices)?;
    let adj = open_masks(g);
    let all = if g.n() == MAX_BITS {
        u128::MAX
    } else {
        bit(g.n()) - 1
    };
    let mut best = None;
    is_branch(&adj, all, 0, &mut best);
    let (optimum, mask) = best.expect("the empty set is independent");
    Ok(OracleResult {
        optimum,
        witness: members(mask),
    })
}

fn is_branch(adj: &[u128], mut alive: u128, mut chosen: u128, best: &mut Option<(usize, u128)>) {
    // isolated vertices always join
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & alive == 0 {
            chosen |= bit(v);
            alive &= !bit(v);
        }
    }
    let taken = chosen.count_ones() as usize;
    if alive == 0 {
        if best.is_none_or(|(b, _)| taken > b) {
            *best = Some((taken, chosen));
        }
        return;
    }
    if best.is_some_and(|(b, _)| taken + alive.count_ones() as usize <= b) {
        return;
    }
    let mut v = alive.trailing_zeros() as usize;
    let mut rest = alive;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (adj[u] & alive).count_ones() > (adj[v] & alive).count_ones() {
            v = u;
        }
    }
    is_branch(adj, alive & !bit(v) & !adj[v], chosen | bit(v), best);
    is_branch(adj, alive & !bit(v), chosen, best);
}

/// Minimum edge bipartization by enumerating edge subsets in increasing size.
pub fn bf_min_edge_bipartization(
    g: &Graph,
    limits: &OracleLimits,
) -> Result<OracleResult<Vec<Edge>>> {
    check_limit("edges", g.m(), limits.edges)?;
    Ok(bf_edge_bipartization_upto(g, g.m()).expect("deleting all edges bipartizes"))
}

/// Smallest edge bipartization of size at most `max_size` (lexicographically
/// first by edge id among the smallest), or `None`. Not subject to the edge
/// limit: the cutoff bounds the work instead.
pub fn bf_edge_bipartization_upto(g: &Graph, max_size: usize) -> Option<OracleResult<Vec<Edge>>> {
    let m = g.m();
    let edges = g.edges();
    for size in 0..=max_size.min(m) {
        let mut found = None;
        let mut removed = vec![false; m];
        for_each_subset(m, size, &mut |set: &[usize]| {
            for &i in set {
                removed[i] = true;
            }
            let ok = parity_consistent(g.n(), edges, &removed);
            for &i in set {
                removed[i] = false;
            }
            if ok {
                found = Some(set.iter().map(|&i| edges[i]).collect::<Vec<_>>());
            }
            ok
        });
        if let Some(w) = found {
            return Some(OracleResult {
                optimum: size,
                witness: w,
            });
        }
    }
    None
}

/// Union-find with parity: are the kept edges two-colorable?
fn parity_consistent(n: usize, edges: &[Edge], removed: &[bool]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    let mut parity = vec![0u8; n];
    fn find(parent: &mut [usize], parity: &mut [u8], v: usize) -> (usize, u8) {
        let mut root = v;
        let mut p = 0;
        while parent[root] != root {
            p ^= parity[root];
            root = parent[root];
        }
        // path compression
        let mut cur = v;
        let mut cur_p = p;
        while parent[cur] != root {
            let next = parent[cur];
            let next_p = cur_p ^ parity[cur];
            parent[cur] = root;
            parity[cur] = cur_p;
            cur = next;
            cur_p = next_p;
        }
        (root, p)
    }
    for (i, &(u, v)) in edges.iter().enumerate() {
        if removed[i] {
            continue;
        }
        let (ru, pu) = find(&mut parent, &mut parity, u);
        let (rv, pv) = find(&mut parent, &mut parity, v);
        if ru == rv {
            if pu == pv {
                return false;
            }
        } else {
            parent[ru] = rv;
            parity[ru] = pu ^ pv ^ 1;
        }
    }
    true
}

/// Maximum matching in a general graph by exhaustive branching on the lowest
/// vertex that still has a free neighbor.
pub fn bf_max_matching(g: &Graph, limits: &OracleLimits) -> Result<OracleResult<Vec<Edge>>> {
    check_limit("edges", g.m(), limits.edges)?;
    check_limit("vertices", g.n(), MAX_BITS)?;
    let adj = open_masks(g);
    let all = if g.n() == MAX_BITS {
        u128::MAX
    } else {
        bit(g.n()) - 1
    };
    let mut best: (usize, Vec<Edge>) = (0, Vec::new());
    let mut cur = Vec::new();
    mm_branch(&adj, all, &mut cur, &mut best);
    Ok(OracleResult {
        optimum: best.0,
        witness: best.1,
    })
}

fn mm_branch(adj: &[u128], mut alive: u128, cur: &mut Vec<Edge>, best: &mut (usize, Vec<Edge>)) {
    // drop vertices without free neighbors
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & alive == 0 {
            alive &= !bit(v);
        }
    }
    if cur.len() > best.0 {
        *best = (cur.len(), cur.clone());
    }
    if alive == 0 || cur.len() + alive.count_ones() as usize / 2 <= best.0 {
        return;
    }
    let v = alive.trailing_zeros() as usize;
    let mut nb = adj[v] & alive;
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        cur.push((v, w));
        mm_branch(adj, alive & !bit(v) & !bit(w), cur, best);
        cur.pop();
    }
    mm_branch(adj, alive & !bit(v), cur, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn lim() -> OracleLimits {
        OracleLimits::default()
    }

    /// Plain 2^n enumeration, independent of the branching oracle.
    fn enumerate_min_vc(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|mask| {
                g.edges()
                    .iter()
                    .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn min_vc_examples() {
        assert_eq!(bf_min_vertex_cover(&cycle(5), &lim()).unwrap().optimum, 3);
        assert_eq!(enumerate_min_vc(&cycle(5)), 3);
        assert_eq!(
            bf_min_vertex_cover(&complete(4), &lim()).unwrap().optimum,
            3
        );
        let r = bf_min_vertex_cover(&star(3), &lim()).unwrap();
        assert_eq!((r.optimum, r.witness), (1, vec![0]));
        let p = petersen();
        let r = bf_min_vertex_cover(&p, &lim()).unwrap();
        assert_eq!(r.optimum, enumerate_min_vc(&p));
        assert!(p.is_vertex_cover(&r.witness));
        assert!(matches!(
            bf_min_vertex_cover(&Graph::empty(23), &lim()),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn dominating_set_examples() {
        assert_eq!(
            bf_min_dominating_set(&complete(4), &lim()).unwrap().optimum,
            1
        );
        let r = bf_min_dominating_set(&cycle(6), &lim()).unwrap();
        assert_eq!(r.optimum, 2);
        assert_eq!(undominated_vertex(&cycle(6), &r.witness), None);
        assert_eq!(
            bf_min_dominating_set(&Graph::empty(3), &lim())
                .unwrap()
                .optimum,
            3
        );
    }

    #[test]
    fn independent_set_examples() {
        assert_eq!(
            bf_max_independent_set(&cycle(5), &lim()).unwrap().optimum,
            2
        );
        assert_eq!(
            bf_max_independent_set(&complete_bipartite(3, 3), &lim())
                .unwrap()
                .optimum,
            3
        );
        let r = bf_max_independent_set(&Graph::empty(4), &lim()).unwrap();
        assert_eq!((r.optimum, r.witness), (4, vec![0, 1, 2, 3]));
    }

    #[test]
    fn edge_bipartization_examples() {
        assert_eq!(
            bf_min_edge_bipartization(&cycle(6), &lim())
                .unwrap()
                .optimum,
            0
        );
        assert_eq!(
            bf_min_edge_bipartization(&cycle(5), &lim())
                .unwrap()
                .optimum,
            1
        );
        let k5 = complete(5);
        let r = bf_min_edge_bipartization(&k5, &lim()).unwrap();
        assert_eq!(r.optimum, 4);
        assert!(k5.delete_edges(&r.witness).unwrap().is_bipartite());
        assert!(bf_edge_bipartization_upto(&k5, 3).is_none());
    }

    #[test]
    fn matching_examples() {
        assert_eq!(bf_max_matching(&cycle(5), &lim()).unwrap().optimum, 2);
        assert_eq!(bf_max_matching(&complete(4), &lim()).unwrap().optimum, 2);
        assert_eq!(bf_max_matching(&star(3), &lim()).unwrap().optimum, 1);
        assert_eq!(bf_max_matching(&petersen(), &lim()).unwrap().optimum, 5);
    }

    #[test]
    fn capacitated_examples() {
        let k3 = complete(3);
        assert!(capacitated_cover_feasible(&k3, &[2, 2, 2], &[0, 1]).is_some());
        let s = star(3);
        assert!(capacitated_cover_feasible(&s, &[2, 1, 1, 1], &[0]).is_none());
        assert!(capacitated_cover_feasible(&k3, &[2, 2, 2], &[0]).is_none());
        let r = bf_min_capacitated_vc(&s, &[2, 1, 1, 1], &lim())
            .unwrap()
            .unwrap();
        assert_eq!((r.optimum, r.witness), (2, vec![0, 1]));
        let degs: Vec<usize> = (0..10).map(|v| petersen().degree(v)).collect();
        let r = bf_min_capacitated_vc(&petersen(), &degs, &lim())
            .unwrap()
            .unwrap();
        assert_eq!(r.optimum, enumerate_min_vc(&petersen()));
    }

    #[test]
    fn env_override() {
        assert_eq!(OracleLimits::uniform(9).edges, 9);
        assert_eq!(OracleLimits::default().capacitated_vertices, 18);
    }
}
