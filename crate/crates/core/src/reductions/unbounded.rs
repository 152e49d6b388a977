//! Vertex cover to vertex cover below `NB/(B+1)` when the degree is free.
//!
//! `H` is `G` plus a vertex `x` adjacent to everything and a pendant `y` on
//! `x`. Then `N = n + 2`, `B = N - 1` and the bound is `n + 1 - k`.

use super::{check_range, members, structure, ReductionKind, ReductionOutput, ReductionParams};
use crate::certificate::CoverCertificate;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn reduce_vc_to_unbounded_vcu1(source: &Graph, k: usize) -> Result<ReductionOutput> {
    if source.m() == 0 {
        return Err(Error::Precondition("source graph must have an edge".into()));
    }
    let n = source.n();
    let (x, y) = (n, n + 1);
    let mut edges: Vec<(usize, usize)> = source.edges().to_vec();
    edges.extend((0..n).map(|v| (v, x)));
    edges.push((x, y));
    let graph = Graph::new(n + 2, edges)?;
    let mut roles: Vec<String> = (0..n).map(|v| format!("orig[{}]", v + 1)).collect();
    roles.push("x".into());
    roles.push("y".into());

    let big_n = graph.n();
    let b = graph.max_degree();
    structure(big_n == n + 2, || "N differs from n + 2".into())?;
    structure(b == big_n - 1, || format!("max degree {b}, expected N - 1"))?;
    // N*B/(B+1) = N - 1 exactly here
    let target = (big_n * b / (b + 1)) as i64 - k as i64;
    structure(target == n as i64 + 1 - k as i64, || {
        "target differs from n + 1 - k".into()
    })?;

    Ok(ReductionOutput {
        kind: ReductionKind::Vcu1Unbounded,
        source: source.clone(),
        graph,
        capacity: None,
        matching: None,
        vertex_map: roles,
        params: ReductionParams {
            source_n: n,
            source_m: source.m(),
            source_b: source.max_degree(),
            k,
            n: big_n,
            m: n + source.m() + 1,
            b,
            target,
            matching_size: None,
        },
    })
}

fn check_kind(out: &ReductionOutput) -> Result<()> {
    if out.kind == ReductionKind::Vcu1Unbounded {
        Ok(())
    } else {
        Err(Error::Precondition(
            "not an unbounded-degree reduction".into(),
        ))
    }
}

/// `C + x`.
pub fn map_unbounded_forward(out: &ReductionOutput, c: &[usize]) -> Result<CoverCertificate> {
    check_kind(out)?;
    let n = out.source.n();
    let mut inside = check_range(n + 2, c)?;
    if let Some(&v) = c.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if let Some((u, v)) = out.source.uncovered_edge(c) {
        return Err(Error::NotACover(u, v));
    }
    inside[n] = true;
    let cert = CoverCertificate::new(members(&inside));
    cert.verify(&out.graph)?;
    Ok(cert)
}

/// Swaps `y` for `x` if needed and drops `x`.
pub fn map_unbounded_back(out: &ReductionOutput, cover: &[usize]) -> Result<Vec<usize>> {
    check_kind(out)?;
    let n = out.source.n();
    check_range(n + 2, cover)?;
    if let Some((a, b)) = out.graph.uncovered_edge(cover) {
        return Err(Error::NotACover(a, b));
    }
    let mut result: Vec<usize> = cover.iter().copied().filter(|&v| v < n).collect();
    result.sort_unstable();
    result.dedup();
    debug_assert!(out.source.is_vertex_cover(&result));
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn triangle() {
        let out = reduce_vc_to_unbounded_vcu1(&complete(3), 1).unwrap();
        assert_eq!(out.graph.n(), 5);
        assert_eq!(out.graph.max_degree(), 4);
        assert_eq!(out.params.target, 3);
        let f = map_unbounded_forward(&out, &[0, 1]).unwrap();
        assert_eq!(f.cover, vec![0, 1, 3]);
        assert_eq!(
            map_unbounded_back(&out, &[0, 1, 4]),
            Err(Error::NotACover(2, 3))
        );
        assert_eq!(map_unbounded_back(&out, &f.cover).unwrap(), vec![0, 1]);
    }

    #[test]
    fn edgeless_source_is_rejected() {
        assert!(reduce_vc_to_unbounded_vcu1(&Graph::empty(3), 0).is_err());
    }
}
