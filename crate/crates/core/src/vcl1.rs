//! Vertex cover above the `m/B` lower bound.
//!
//! A cover of size at most `m/B + k` forces an edge bipartization `D` with
//! `|D| <= kB` (every cover vertex covers at most `B` edges, so at most `kB`
//! edges have both ends in the cover). With such a `D` in hand, a minimum
//! cover is the best union of a cover `C'` of `G[D]` obtained by picking one
//! endpoint per edge of `D`, and a König cover of the bipartite `G - C'`.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bipartization::{min_edge_bipartization, Bipartization};
use serde::Serialize;

use crate::certificate::{CoverCertificate, Decision, Threshold};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::matching::min_vc_bipartite;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vcl1Instance {
    pub graph: Graph,
    pub b: usize,
    pub k: usize,
}

impl Vcl1Instance {
    pub fn new(graph: Graph, b: usize, k: usize) -> Result<Self> {
        if b == 0 {
            return Err(Error::Precondition("B must be positive".into()));
        }
        graph.check_degree_bound(b)?;
        Ok(Vcl1Instance { graph, b, k })
    }

    /// `m/B + k` as the fraction `(m + Bk) / B`.
    pub fn threshold(&self) -> Threshold {
        Threshold {
            num: (self.graph.m() + self.b * self.k) as i64,
            den: self.b as i64,
        }
    }
}

/// Knobs shared by the solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Worker threads for the cover enumeration; 1 runs inline.
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { threads: 1 }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Vcl1Stats {
    /// The graph met the `m/B` bound exactly and was answered directly.
    pub exact_bound_hit: bool,
    /// Size of the bipartization used, if one within budget existed.
    pub bipartization_size: Option<usize>,
    /// Distinct endpoint-choice covers of `G[D]` that were examined.
    pub pi_covers_examined: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vcl1Outcome {
    pub decision: Decision,
    pub stats: Vcl1Stats,
}

/// Returns a cover of size exactly `m/B` when one exists.
///
/// Such a cover must take exactly `B` edges per vertex with no edge counted
/// twice, so it is an independent side of a bipartition whose vertices all
/// have degree `B`. Sides are chosen per component; isolated vertices never
/// enter the cover.
pub fn check_exact_lower_bound(g: &Graph, b: usize) -> Result<Option<CoverCertificate>> {
    if b == 0 {
        return Err(Error::Precondition("B must be positive".into()));
    }
    g.check_degree_bound(b)?;
    if !g.m().is_multiple_of(b) {
        return Ok(None);
    }
    let Bipartition::Bipartite(coloring) = g.bipartition() else {
        return Ok(None);
    };
    let mut cover = Vec::new();
    for comp in g.connected_components() {
        if comp.len() == 1 {
            continue;
        }
        let (left, right): (Vec<usize>, Vec<usize>) = comp
            .iter()
            .partition(|&&v| coloring.side[v] == coloring.side[comp[0]]);
        let full = |side: &[usize]| side.iter().all(|&v| g.degree(v) == b);
        if full(&left) {
            cover.extend(left);
        } else if full(&right) {
            cover.extend(right);
        } else {
            return Ok(None);
        }
    }
    let cert = CoverCertificate::new(cover);
    debug_assert_eq!(cert.len() * b, g.m());
    Ok(Some(cert))
}

/// Lazily yields the distinct vertex sets obtained by choosing one endpoint
/// of every edge of `h`, each sorted ascending.
#[derive(Debug, Clone)]
pub struct PiCovers<'a> {
    h: &'a Graph,
    choice: Vec<bool>,
    done: bool,
    seen: HashSet<Vec<usize>>,
}

/// Cover enumeration over `h = G[D]`. `h` must have no isolated vertices.
pub fn enumerate_pi_covers(h: &Graph) -> Result<PiCovers<'_>> {
    if let Some(v) = (0..h.n()).find(|&v| h.degree(v) == 0) {
        return Err(Error::Precondition(format!(
            "vertex {v} is isolated; expected an edge-induced subgraph"
        )));
    }
    Ok(PiCovers {
        h,
        choice: vec![false; h.m()],
        done: false,
        seen: HashSet::new(),
    })
}

impl Iterator for PiCovers<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        while !self.done {
            let mut set: Vec<usize> = self
                .h
                .edges()
                .iter()
                .zip(&self.choice)
                .map(|(&(u, v), &second)| if second { v } else { u })
                .collect();
            set.sort_unstable();
            set.dedup();
            // advance the odometer; the last edge varies fastest
            match self.choice.iter().rposition(|&c| !c) {
                Some(i) => {
                    self.choice[i] = true;
                    self.choice[i + 1..].iter_mut().for_each(|c| *c = false);
                }
                None => self.done = true,
            }
            if self.seen.insert(set.clone()) {
                return Some(set);
            }
        }
        None
    }
}

/// Minimum vertex cover of `g` given a valid edge bipartization.
pub fn min_vc_with_bipartization(g: &Graph, bip: &Bipartization) -> Result<CoverCertificate> {
    min_vc_with_bipartization_opts(g, bip, SolveOptions::default()).map(|(c, _)| c)
}

/// As [`min_vc_with_bipartization`], also returning how many distinct
/// endpoint-choice covers were examined. Ties between optimal candidates go
/// to the lexicographically smallest vertex set, whatever the thread count.
pub fn min_vc_with_bipartization_opts(
    g: &Graph,
    bip: &Bipartization,
    opts: SolveOptions,
) -> Result<(CoverCertificate, usize)> {
    bip.validate(g).map_err(|_| Error::InvalidBipartization)?;
    let (h, map) = g.edge_induced_subgraph(&bip.edges)?;

    let candidate = |choice: Vec<usize>| -> Vec<usize> {
        let picked: Vec<usize> = choice.iter().map(|&i| map[i]).collect();
        let (rest, back) = g.delete_vertices(&picked).expect("ids in range");
        let coloring = bip.residual_coloring.restrict(&back);
        let z = min_vc_bipartite(&rest, &coloring).expect("G - C' is a subgraph of G - D");
        let mut cover = picked;
        cover.extend(z.into_iter().map(|i| back[i]));
        cover.sort_unstable();
        cover
    };
    let better = |a: Vec<usize>, b: Vec<usize>| -> Vec<usize> {
        if (a.len(), &a) <= (b.len(), &b) {
            a
        } else {
            b
        }
    };

    let (best, examined) = if opts.threads <= 1 {
        let mut examined = 0;
        let mut best: Option<Vec<usize>> = None;
        for choice in enumerate_pi_covers(&h)? {
            examined += 1;
            let c = candidate(choice);
            best = Some(match best {
                None => c,
                Some(b) => better(b, c),
            });
        }
        (best, examined)
    } else {
        let choices: Vec<Vec<usize>> = enumerate_pi_covers(&h)?.collect();
        let examined = choices.len();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
        let best = pool.install(|| choices.into_par_iter().map(candidate).reduce_with(better));
        (best, examined)
    };
    let cert = CoverCertificate::new(best.expect("at least the empty choice"));
    debug_assert!(cert.verify(g).is_ok());
    Ok((cert, examined))
}

/// Decides whether `G` has a vertex cover of size at most `m/B + k`.
pub fn solve_vcl1(inst: &Vcl1Instance) -> Result<Vcl1Outcome> {
    solve_vcl1_opts(inst, SolveOptions::default())
}

pub fn solve_vcl1_opts(inst: &Vcl1Instance, opts: SolveOptions) -> Result<Vcl1Outcome> {
    let g = &inst.graph;
    g.check_degree_bound(inst.b)?;
    let threshold = inst.threshold();
    let mut stats = Vcl1Stats::default();

    if let Some(cert) = check_exact_lower_bound(g, inst.b)? {
        stats.exact_bound_hit = true;
        return Ok(Vcl1Outcome {
            decision: Decision::Yes(cert),
            stats,
        });
    }
    let Some(bip) = min_edge_bipartization(g, inst.k * inst.b) else {
        return Ok(Vcl1Outcome {
            decision: Decision::No,
            stats,
        });
    };
    stats.bipartization_size = Some(bip.size());
    let (cert, examined) = min_vc_with_bipartization_opts(g, &bip, opts)?;
    stats.pi_covers_examined = examined;
    let decision = if threshold.admits(cert.len()) {
        Decision::Yes(cert)
    } else {
        Decision::No
    };
    Ok(Vcl1Outcome { decision, stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn two_stars() -> Graph {
        disjoint(&[star(3), star(3)])
    }

    #[test]
    fn exact_bound_examples() {
        let c = check_exact_lower_bound(&two_stars(), 3).unwrap().unwrap();
        assert_eq!(c.cover, vec![0, 4]);
        assert_eq!(check_exact_lower_bound(&complete(3), 2).unwrap(), None);
        let c = check_exact_lower_bound(&complete_bipartite(2, 3), 3)
            .unwrap()
            .unwrap();
        assert_eq!(c.cover, vec![0, 1]);
        // the 3-side of K_{2,3} has degree 2, so B = 2 gives nothing
        assert!(check_exact_lower_bound(&complete_bipartite(2, 3), 2).is_err());
        assert_eq!(check_exact_lower_bound(&path(4), 2).unwrap(), None);
    }

    #[test]
    fn isolated_vertices_stay_out() {
        let g = disjoint(&[star(2), Graph::empty(1)]);
        let c = check_exact_lower_bound(&g, 2).unwrap().unwrap();
        assert_eq!(c.cover, vec![0]);
    }

    #[test]
    fn pi_cover_examples() {
        let e = path(2);
        assert_eq!(
            enumerate_pi_covers(&e).unwrap().collect::<Vec<_>>(),
            vec![vec![0], vec![1]]
        );
        let mut p3: Vec<_> = enumerate_pi_covers(&path(3)).unwrap().collect();
        p3.sort();
        assert_eq!(p3, vec![vec![0, 1], vec![0, 2], vec![1], vec![1, 2]]);
        let none = Graph::empty(0);
        assert_eq!(
            enumerate_pi_covers(&none).unwrap().collect::<Vec<_>>(),
            vec![Vec::<usize>::new()]
        );
        assert!(enumerate_pi_covers(&Graph::empty(1)).is_err());
    }

    #[test]
    fn min_vc_with_bipartization_examples() {
        let c5 = cycle(5);
        let bip = min_edge_bipartization(&c5, 1).unwrap();
        assert_eq!(min_vc_with_bipartization(&c5, &bip).unwrap().len(), 3);

        let c4 = cycle(4);
        let bip = min_edge_bipartization(&c4, 0).unwrap();
        assert_eq!(
            min_vc_with_bipartization(&c4, &bip).unwrap().cover,
            vec![0, 2]
        );

        let k4 = complete(4);
        let pm = vec![(0, 1), (2, 3)];
        let coloring = match k4.delete_edges(&pm).unwrap().bipartition() {
            Bipartition::Bipartite(c) => c,
            _ => unreachable!(),
        };
        let bip = Bipartization {
            edges: pm,
            residual_coloring: coloring,
        };
        assert_eq!(min_vc_with_bipartization(&k4, &bip).unwrap().len(), 3);

        let bogus = Bipartization {
            edges: vec![],
            residual_coloring: bip.residual_coloring.clone(),
        };
        assert_eq!(
            min_vc_with_bipartization(&k4, &bogus),
            Err(Error::InvalidBipartization)
        );
    }

    #[test]
    fn solve_examples() {
        let out = solve_vcl1(&Vcl1Instance::new(two_stars(), 3, 1).unwrap()).unwrap();
        assert_eq!(out.decision.certificate().unwrap().len(), 2);

        let out = solve_vcl1(&Vcl1Instance::new(cycle(5), 2, 0).unwrap()).unwrap();
        assert_eq!(out.decision, Decision::No);

        let out = solve_vcl1(&Vcl1Instance::new(cycle(5), 2, 1).unwrap()).unwrap();
        let cert = out.decision.certificate().unwrap();
        assert_eq!(cert.len(), 3);
        cert.verify(&cycle(5)).unwrap();
        assert!(out.stats.pi_covers_examined <= 1 << 2);
    }

    #[test]
    fn degree_bound_is_enforced() {
        assert!(matches!(
            Vcl1Instance::new(star(3), 2, 1),
            Err(Error::DegreeBound {
                vertex: 0,
                degree: 3,
                bound: 2
            })
        ));
    }

    #[test]
    fn threads_do_not_change_the_answer() {
        let g = petersen();
        let bip = min_edge_bipartization(&g, 5).unwrap();
        let one = min_vc_with_bipartization_opts(&g, &bip, SolveOptions { threads: 1 }).unwrap();
        let four = min_vc_with_bipartization_opts(&g, &bip, SolveOptions { threads: 4 }).unwrap();
        assert_eq!(one, four);
        assert_eq!(one.0.len(), 6);
    }
}
