//! Deterministic instance families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn disjoint_copies(t: usize, part: &Graph) -> Graph {
    let k = part.n();
    let edges = (0..t).flat_map(|c| {
        part.edges()
            .iter()
            .map(move |&(u, v)| (c * k + u, c * k + v))
    });
    Graph::new(t * k, edges).expect("copies of a simple graph")
}

/// `t` disjoint stars with `b` leaves each; the center is the first vertex.
pub fn stars(t: usize, b: usize) -> Result<Graph> {
    if b == 0 {
        return Err(Error::Precondition("stars need at least one leaf".into()));
    }
    let star = Graph::new(b + 1, (1..=b).map(|l| (0, l)))?;
    Ok(disjoint_copies(t, &star))
}

/// `t` disjoint copies of `K_{b+1}`.
pub fn cliques(t: usize, b: usize) -> Result<Graph> {
    Ok(disjoint_copies(t, &complete(b + 1)))
}

/// `t` disjoint paths on three vertices.
pub fn p3s(t: usize) -> Graph {
    disjoint_copies(t, &path(3).expect("three vertices"))
}

pub fn cycle(l: usize) -> Result<Graph> {
    if l < 3 {
        return Err(Error::Precondition(format!(
            "a cycle needs at least 3 vertices, got {l}"
        )));
    }
    Graph::new(l, (0..l).map(|i| (i, (i + 1) % l)))
}

/// Path on `l` vertices.
pub fn path(l: usize) -> Result<Graph> {
    if l == 0 {
        return Err(Error::Precondition(
            "a path needs at least one vertex".into(),
        ));
    }
    Graph::new(l, (1..l).map(|i| (i - 1, i)))
}

pub fn complete(r: usize) -> Graph {
    Graph::new(r, (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j)))).expect("simple")
}

/// Random graph of maximum degree `b`: all vertex pairs in a seeded random
/// order, each kept with probability 1/2 unless it would break the bound.
pub fn random(n: usize, b: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_with(n, b, &mut rng)
}

/// As [`random`], drawing from a caller-owned generator.
pub fn random_with<R: Rng>(n: usize, b: usize, rng: &mut R) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    pairs.shuffle(rng);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if rng.gen_bool(0.5) && degree[u] < b && degree[v] < b {
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
    }
    edges.sort_unstable();
    Graph::new(n, edges).expect("simple")
}

/// Random bipartite graph with sides `0..a` and `a..a+b`, each cross pair
/// present with probability `p`.
pub fn random_bipartite<R: Rng>(a: usize, b: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(a + b, edges).expect("simple")
}

/// The graph on `n` vertices whose edge set is given by the bits of `mask`
/// over the pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn from_pair_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let edges = pairs
        .enumerate()
        .filter(|&(bit, _)| mask >> bit & 1 == 1)
        .map(|(_, e)| e);
    Graph::new(n, edges).expect("simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let s = stars(2, 3).unwrap();
        assert_eq!((s.n(), s.m()), (8, 6));
        let c = cliques(3, 3).unwrap();
        assert_eq!((c.n(), c.m()), (12, 18));
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.n(), c5.m(), c5.max_degree()), (5, 5, 2));
        assert_eq!(p3s(4).m(), 8);
        assert!(cycle(2).is_err());
    }

    #[test]
    fn random_is_seeded_and_bounded() {
        let a = random(30, 3, 7);
        assert_eq!(a, random(30, 3, 7));
        assert!(a.max_degree() <= 3);
        assert_ne!(a, random(30, 3, 8));
    }

    #[test]
    fn pair_masks_enumerate_all_graphs() {
        assert_eq!(from_pair_mask(3, 0b111), complete(3));
        assert_eq!(from_pair_mask(4, 0).m(), 0);
    }
}
