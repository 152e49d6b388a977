//! Independent set to vertex cover below twice a maximal matching.
//!
//! Vertex `u` becomes the path `u1 u2 u3`. Edge `e = uv` (with `u < v`)
//! becomes a triangle `e_u e_v e_w` with a pendant `e_z` on `e_w`, joined to
//! the paths by `u3 e_u` and `v3 e_v`. The matching is every `u2 u3` and
//! every `e_u e_w`.
//!
//! Ids: `u1, u2, u3` are `3u, 3u+1, 3u+2`; the gadget of the `i`-th source
//! edge occupies `3n + 4i ..` in the order `e_u, e_v, e_w, e_z`.

use super::{check_range, members, structure, ReductionKind, ReductionOutput, ReductionParams};
use crate::certificate::CoverCertificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{is_maximal_matching, Matching};

fn vertex_path(u: usize) -> [usize; 3] {
    [3 * u, 3 * u + 1, 3 * u + 2]
}

fn gadget(n: usize, i: usize) -> [usize; 4] {
    let base = 3 * n + 4 * i;
    [base, base + 1, base + 2, base + 3]
}

fn check_kind(out: &ReductionOutput) -> Result<()> {
    if out.kind == ReductionKind::Vcu2 {
        Ok(())
    } else {
        Err(Error::Precondition("not a matching-bound reduction".into()))
    }
}

pub fn reduce_is_to_vcu2(source: &Graph, k: usize) -> Result<ReductionOutput> {
    let n = source.n();
    let m = source.m();
    let total = 3 * n + 4 * m;
    let mut roles = vec![String::new(); total];
    let mut edges = Vec::new();
    let mut matched = Vec::new();
    for u in 0..n {
        let [u1, u2, u3] = vertex_path(u);
        for (x, name) in [(u1, "u1"), (u2, "u2"), (u3, "u3")] {
            roles[x] = format!("{name}[{}]", u + 1);
        }
        edges.extend([(u1, u2), (u2, u3)]);
        matched.push((u2, u3));
    }
    for (i, &(u, v)) in source.edges().iter().enumerate() {
        let [eu, ev, ew, ez] = gadget(n, i);
        for (x, name) in [(eu, "e_u"), (ev, "e_v"), (ew, "e_w"), (ez, "e_z")] {
            roles[x] = format!("{name}[{}-{}]", u + 1, v + 1);
        }
        edges.extend([
            (eu, ev),
            (ev, ew),
            (ew, eu),
            (ew, ez),
            (vertex_path(u)[2], eu),
            (vertex_path(v)[2], ev),
        ]);
        matched.push((eu, ew));
    }
    let graph = Graph::new(total, edges)?;
    let matching = Matching::new(&graph, matched)?;

    structure(matching.len() == n + m, || {
        format!("|M| = {}, expected n + m", matching.len())
    })?;
    structure(is_maximal_matching(&graph, &matching)?, || {
        "M is not maximal".into()
    })?;
    structure(graph.n() == 3 * n + 4 * m, || {
        "|V'| differs from 3n + 4m".into()
    })?;

    let params = ReductionParams {
        source_n: n,
        source_m: m,
        source_b: source.max_degree(),
        k,
        n: total,
        m: graph.m(),
        b: graph.max_degree(),
        target: 2 * (n + m) as i64 - k as i64,
        matching_size: Some(matching.len()),
    };
    Ok(ReductionOutput {
        kind: ReductionKind::Vcu2,
        source: source.clone(),
        graph,
        capacity: None,
        matching: Some(matching),
        vertex_map: roles,
        params,
    })
}

/// Maps a vertex cover `c` of the source to a cover of size `n + 2m + |c|`.
pub fn map_is_forward(out: &ReductionOutput, c: &[usize]) -> Result<CoverCertificate> {
    check_kind(out)?;
    let src = &out.source;
    let n = src.n();
    let in_c = check_range(n, c)?;
    if let Some((u, v)) = src.uncovered_edge(c) {
        return Err(Error::NotACover(u, v));
    }
    let mut inside = vec![false; out.graph.n()];
    for u in 0..n {
        inside[vertex_path(u)[1]] = true;
        if in_c[u] {
            inside[vertex_path(u)[2]] = true;
        }
    }
    for (i, &(u, v)) in src.edges().iter().enumerate() {
        let [eu, ev, ew, _] = gadget(n, i);
        inside[ew] = true;
        // the gadget end facing an endpoint outside the cover
        if in_c[u] && !in_c[v] {
            inside[ev] = true;
        } else {
            inside[eu] = true;
        }
    }
    let cert = CoverCertificate::new(members(&inside));
    debug_assert_eq!(
        cert.len(),
        n + 2 * src.m() + c.iter().collect::<std::collections::BTreeSet<_>>().len()
    );
    cert.verify(&out.graph)?;
    Ok(cert)
}

/// Normalizes a cover of the constructed graph and returns `{u : u3 in C'}`,
/// a source cover of size at most `|C'| - n - 2m`.
pub fn map_vcu2_back(out: &ReductionOutput, cover: &[usize]) -> Result<Vec<usize>> {
    check_kind(out)?;
    let src = &out.source;
    let n = src.n();
    let mut inside = check_range(out.graph.n(), cover)?;
    if let Some((a, b)) = out.graph.uncovered_edge(cover) {
        return Err(Error::NotACover(a, b));
    }
    // pendant vertices give way to their neighbors
    for u in 0..n {
        let [u1, u2, _] = vertex_path(u);
        if std::mem::take(&mut inside[u1]) {
            inside[u2] = true;
        }
    }
    for i in 0..src.m() {
        let [eu, ev, ew, ez] = gadget(n, i);
        if std::mem::take(&mut inside[ez]) {
            inside[ew] = true;
        }
        if inside[eu] && inside[ev] {
            let u3 = vertex_path(src.edges()[i].0)[2];
            inside[eu] = false;
            inside[u3] = true;
        }
    }
    let normalized = members(&inside);
    debug_assert!(out.graph.is_vertex_cover(&normalized));
    debug_assert!(
        normalized.len()
            <= check_range(out.graph.n(), cover)
                .map(|c| members(&c).len())
                .unwrap()
    );
    let result: Vec<usize> = (0..n).filter(|&u| inside[vertex_path(u)[2]]).collect();
    if let Some((u, v)) = src.uncovered_edge(&result) {
        return Err(Error::NotACover(u, v));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::oracles::{bf_min_vertex_cover, OracleLimits};

    #[test]
    fn triangle_counts() {
        let out = reduce_is_to_vcu2(&complete(3), 1).unwrap();
        assert_eq!(out.matching.as_ref().unwrap().len(), 6);
        assert_eq!(out.params.target, 11);
        assert_eq!(out.graph.n(), 21);
        assert_eq!(out.vertex_map[9], "e_u[1-2]");
    }

    #[test]
    fn forward_sizes() {
        let out = reduce_is_to_vcu2(&complete(3), 1).unwrap();
        assert_eq!(map_is_forward(&out, &[0, 1]).unwrap().len(), 11);
        let out = reduce_is_to_vcu2(&path(2), 1).unwrap();
        // n + 2m + |C| = 2 + 2 + 1, and nothing smaller covers the gadget
        assert_eq!(map_is_forward(&out, &[0]).unwrap().len(), 5);
        let best = bf_min_vertex_cover(&out.graph, &OracleLimits::default()).unwrap();
        assert_eq!(best.optimum, 5);
        assert_eq!(map_is_forward(&out, &[0, 1]).unwrap().len(), 6);
        assert_eq!(map_is_forward(&out, &[]), Err(Error::NotACover(0, 1)));
    }

    #[test]
    fn back_normalizes_both_ends() {
        let out = reduce_is_to_vcu2(&path(2), 1).unwrap();
        // u1, u3 of both paths, e_u, e_v and e_z
        let [eu, ev, _, ez] = gadget(2, 0);
        let c = vec![0, 2, 3, 5, eu, ev, ez];
        assert!(out.graph.is_vertex_cover(&c));
        let back = map_vcu2_back(&out, &c).unwrap();
        assert_eq!(back, vec![0, 1]);
        let fwd = map_is_forward(&out, &[1]).unwrap();
        assert_eq!(map_vcu2_back(&out, &fwd.cover).unwrap(), vec![1]);
    }
}
