//! Bipartite maximum matching with König covers, and greedy maximal matching.

use crate::error::{Error, Result};
use crate::graph::{norm, Edge, Graph, Side, TwoColoring};

/// A set of vertex-disjoint edges, kept sorted lexicographically.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<Edge>,
}

impl Matching {
    /// Validates that `pairs` are edges of `g` sharing no endpoint.
    pub fn new(g: &Graph, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut used = vec![false; g.n()];
        let mut out = Vec::new();
        for (u, v) in pairs {
            if !g.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
            for x in [u, v] {
                if std::mem::replace(&mut used[x], true) {
                    return Err(Error::NotAMatching(x));
                }
            }
            out.push(norm(u, v));
        }
        out.sort_unstable();
        Ok(Matching { pairs: out })
    }

    pub fn pairs(&self) -> &[Edge] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `[u, v]` pairs with 1-based ids, sorted.
    pub fn to_one_based(&self) -> Vec<[usize; 2]> {
        self.pairs.iter().map(|&(u, v)| [u + 1, v + 1]).collect()
    }
}

struct Kuhn {
    mate: Vec<Option<usize>>,
}

impl Kuhn {
    fn run(g: &Graph, coloring: &TwoColoring) -> Result<Self> {
        coloring.validate(g)?;
        let mut k = Kuhn {
            mate: vec![None; g.n()],
        };
        let mut visited = vec![false; g.n()];
        for u in coloring.left() {
            visited.iter_mut().for_each(|x| *x = false);
            k.augment(g, u, &mut visited);
        }
        Ok(k)
    }

    fn augment(&mut self, g: &Graph, u: usize, visited: &mut [bool]) -> bool {
        for &w in g.neighbors(u) {
            if visited[w] {
                continue;
            }
            visited[w] = true;
            let free = match self.mate[w] {
                None => true,
                Some(x) => self.augment(g, x, visited),
            };
            if free {
                self.mate[w] = Some(u);
                self.mate[u] = Some(w);
                return true;
            }
        }
        false
    }

    fn matching(&self) -> Matching {
        let mut pairs: Vec<Edge> = self
            .mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&w| u < w).map(|w| (u, w)))
            .collect();
        pairs.sort_unstable();
        Matching { pairs }
    }
}

/// Maximum matching of a bipartite graph by augmenting paths, trying the
/// lowest unmatched left vertex first and neighbors in ascending order.
pub fn max_bipartite_matching(g: &Graph, coloring: &TwoColoring) -> Result<Matching> {
    Ok(Kuhn::run(g, coloring)?.matching())
}

/// Minimum vertex cover of a bipartite graph via König's construction: with
/// `Z` the vertices reachable from unmatched left vertices by alternating
/// paths, the cover is `(L \ Z) ∪ (R ∩ Z)`. Sorted ascending.
pub fn min_vc_bipartite(g: &Graph, coloring: &TwoColoring) -> Result<Vec<usize>> {
    let k = Kuhn::run(g, coloring)?;
    let mut reach = vec![false; g.n()];
    let mut stack: Vec<usize> = coloring
        .left()
        .into_iter()
        .filter(|&u| k.mate[u].is_none())
        .collect();
    for &u in &stack {
        reach[u] = true;
    }
    while let Some(u) = stack.pop() {
        // u is on the left; step right along non-matching edges, back left along the matching
        for &w in g.neighbors(u) {
            if reach[w] || k.mate[u] == Some(w) {
                continue;
            }
            reach[w] = true;
            if let Some(x) = k.mate[w] {
                if !reach[x] {
                    reach[x] = true;
                    stack.push(x);
                }
            }
        }
    }
    let cover: Vec<usize> = (0..g.n())
        .filter(|&v| match coloring.side[v] {
            Side::Left => !reach[v],
            Side::Right => reach[v],
        })
        .filter(|&v| g.degree(v) > 0)
        .collect();
    debug_assert!(g.is_vertex_cover(&cover));
    debug_assert_eq!(cover.len(), k.matching().len());
    Ok(cover)
}

/// Scans edges (lexicographic order, or the given `order`) and keeps each
/// edge whose endpoints are both still free. Edges missing from a custom
/// order are scanned afterwards in lexicographic order, so the result is
/// always maximal.
pub fn greedy_maximal_matching(g: &Graph, order: Option<&[Edge]>) -> Result<Matching> {
    let mut lex: Vec<Edge> = g.edges().to_vec();
    lex.sort_unstable();
    let mut scan: Vec<Edge> = Vec::with_capacity(g.m());
    if let Some(order) = order {
        for &(u, v) in order {
            if !g.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
            scan.push(norm(u, v));
        }
    }
    scan.extend(lex);
    let mut used = vec![false; g.n()];
    let mut pairs = Vec::new();
    for (u, v) in scan {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            pairs.push((u, v));
        }
    }
    pairs.sort_unstable();
    Ok(Matching { pairs })
}

/// True iff no edge of `g` has both endpoints unmatched. Fails if `m` is not
/// a matching of `g`.
pub fn is_maximal_matching(g: &Graph, m: &Matching) -> Result<bool> {
    Ok(first_addable_edge(g, m)?.is_none())
}

/// An edge that could still be added to `m`, if any.
pub fn first_addable_edge(g: &Graph, m: &Matching) -> Result<Option<Edge>> {
    let checked = Matching::new(g, m.pairs().iter().copied())?;
    let mut used = vec![false; g.n()];
    for &(u, v) in checked.pairs() {
        used[u] = true;
        used[v] = true;
    }
    Ok(g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| !used[u] && !used[v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::Bipartition;

    fn coloring(g: &Graph) -> TwoColoring {
        match g.bipartition() {
            Bipartition::Bipartite(c) => c,
            Bipartition::OddCycle(_) => panic!("not bipartite"),
        }
    }

    #[test]
    fn max_matching_examples() {
        for (g, size) in [(complete_bipartite(3, 3), 3), (path(4), 2), (star(3), 1)] {
            assert_eq!(
                max_bipartite_matching(&g, &coloring(&g)).unwrap().len(),
                size
            );
        }
    }

    #[test]
    fn konig_examples() {
        let g = complete_bipartite(3, 3);
        assert_eq!(min_vc_bipartite(&g, &coloring(&g)).unwrap().len(), 3);
        let g = cycle(4);
        assert_eq!(min_vc_bipartite(&g, &coloring(&g)).unwrap().len(), 2);
        let g = disjoint(&[star(3), star(3)]);
        assert_eq!(min_vc_bipartite(&g, &coloring(&g)).unwrap(), vec![0, 4]);
    }

    #[test]
    fn invalid_coloring_is_rejected() {
        let g = path(3);
        let bad = TwoColoring {
            side: vec![Side::Left, Side::Left, Side::Right],
        };
        assert_eq!(
            max_bipartite_matching(&g, &bad),
            Err(Error::InvalidColoring(0, 1))
        );
        assert!(min_vc_bipartite(&g, &bad).is_err());
    }

    #[test]
    fn greedy_examples() {
        let p4 = path(4);
        let m = greedy_maximal_matching(&p4, None).unwrap();
        assert_eq!(m.pairs(), &[(0, 1), (2, 3)]);
        let m = greedy_maximal_matching(&p4, Some(&[(1, 2)])).unwrap();
        assert_eq!(m.pairs(), &[(1, 2)]);
        assert!(is_maximal_matching(&p4, &m).unwrap());
        assert!(greedy_maximal_matching(&Graph::empty(3), None)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn maximality() {
        let p4 = path(4);
        let ab = Matching::new(&p4, [(0, 1)]).unwrap();
        assert!(!is_maximal_matching(&p4, &ab).unwrap());
        assert_eq!(first_addable_edge(&p4, &ab).unwrap(), Some((2, 3)));
        assert_eq!(
            Matching::new(&p4, [(0, 1), (1, 2)]),
            Err(Error::NotAMatching(1))
        );
        assert_eq!(
            Matching::new(&p4, [(0, 1), (2, 3)]).unwrap().to_one_based(),
            vec![[1, 2], [3, 4]]
        );
    }
}
