//! Dominating set to capacitated vertex cover above the `m/B` bound.
//!
//! Each source vertex `v` gets a choice gadget `K_{B+1,B+2}` and a domination
//! vertex `v_d` with `B - d(v) + 1` pendant leaves. For every `u` in `N[v]`
//! a distinct large-side vertex of `v`'s gadget is joined to `u_d`. Every
//! capacity equals the degree except at `v_d`, which is one short, so `v_d`
//! needs a neighbor from a large side, i.e. a dominator.

use std::ops::Range;

use super::{check_range, members, structure, ReductionKind, ReductionOutput, ReductionParams};
use crate::certificate::CoverCertificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::{capacitated_cover_feasible, undominated_vertex};

#[derive(Debug, Clone)]
struct Gadget {
    small: Range<usize>,
    large: Range<usize>,
    vd: usize,
    leaves: Range<usize>,
}

fn layout(source: &Graph) -> (Vec<Gadget>, usize) {
    let b = source.max_degree();
    let mut next = 0;
    let mut take = |len: usize| {
        let r = next..next + len;
        next += len;
        r
    };
    let gadgets = (0..source.n())
        .map(|v| Gadget {
            small: take(b + 1),
            large: take(b + 2),
            vd: take(1).start,
            leaves: take(b - source.degree(v) + 1),
        })
        .collect();
    (gadgets, next)
}

fn gadgets_of(out: &ReductionOutput) -> Result<Vec<Gadget>> {
    if out.kind != ReductionKind::Cvcl1 {
        return Err(Error::Precondition(
            "not a capacitated-cover reduction".into(),
        ));
    }
    Ok(layout(&out.source).0)
}

pub fn reduce_ds_to_cvcl1(source: &Graph, k: usize) -> Result<ReductionOutput> {
    let n = source.n();
    let b = source.max_degree();
    let (gadgets, total) = layout(source);
    let mut roles = vec![String::new(); total];
    let mut edges = Vec::new();
    for (v, gd) in gadgets.iter().enumerate() {
        for (i, s) in gd.small.clone().enumerate() {
            roles[s] = format!("choice[{}][small][{}]", v + 1, i + 1);
            for l in gd.large.clone() {
                edges.push((s, l));
            }
        }
        for (i, l) in gd.large.clone().enumerate() {
            roles[l] = format!("choice[{}][large][{}]", v + 1, i + 1);
        }
        roles[gd.vd] = format!("v_d[{}]", v + 1);
        for (j, leaf) in gd.leaves.clone().enumerate() {
            roles[leaf] = format!("leaf[{}][{}]", v + 1, j + 1);
            edges.push((gd.vd, leaf));
        }
        // N[v] in ascending order onto ascending large-side vertices
        let mut closed: Vec<usize> = source.neighbors(v).to_vec();
        closed.push(v);
        closed.sort_unstable();
        for (i, &u) in closed.iter().enumerate() {
            edges.push((gd.large.start + i, gadgets[u].vd));
        }
    }
    let graph = Graph::new(total, edges)?;
    let mut capacity: Vec<usize> = (0..total).map(|x| graph.degree(x)).collect();
    for gd in &gadgets {
        capacity[gd.vd] = b + 1;
    }

    let params = ReductionParams {
        source_n: n,
        source_m: source.m(),
        source_b: b,
        k,
        n: total,
        m: graph.m(),
        b: graph.max_degree(),
        target: (n * (b + 2) + k) as i64,
        matching_size: None,
    };
    structure(graph.m() == n * (b + 2) * (b + 2), || {
        format!(
            "|E'| = {}, expected n(B+2)^2 = {}",
            graph.m(),
            n * (b + 2) * (b + 2)
        )
    })?;
    structure(n == 0 || graph.max_degree() == b + 2, || {
        format!("max degree {} but B+2 = {}", graph.max_degree(), b + 2)
    })?;
    structure(
        gadgets.iter().all(|gd| graph.degree(gd.vd) == b + 2),
        || "some v_d does not have degree B+2".into(),
    )?;
    structure(params.target == (graph.m() / (b + 2) + k) as i64, || {
        "target differs from |E'|/(B+2) + k".into()
    })?;

    Ok(ReductionOutput {
        kind: ReductionKind::Cvcl1,
        source: source.clone(),
        graph,
        capacity: Some(capacity),
        matching: None,
        vertex_map: roles,
        params,
    })
}

/// A capacitated cover together with the endpoint each edge is charged to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacitatedCover {
    pub cover: CoverCertificate,
    /// Per edge id of the constructed graph, the endpoint covering it.
    pub assignment: Vec<usize>,
}

/// Checks that `assignment` charges every edge to an endpoint in `cover`
/// without exceeding any capacity.
pub fn verify_assignment(
    g: &Graph,
    capacity: &[usize],
    cover: &[usize],
    assignment: &[usize],
) -> Result<()> {
    let inside = check_range(g.n(), cover)?;
    if assignment.len() != g.m() {
        return Err(Error::Precondition(format!(
            "{} assignments for {} edges",
            assignment.len(),
            g.m()
        )));
    }
    let mut load = vec![0usize; g.n()];
    for (&(u, v), &x) in g.edges().iter().zip(assignment) {
        if (x != u && x != v) || !inside[x] {
            return Err(Error::NotACover(u, v));
        }
        load[x] += 1;
    }
    match (0..g.n()).find(|&v| load[v] > capacity[v]) {
        Some(_) => Err(Error::CapacityInfeasible),
        None => Ok(()),
    }
}

/// Large side for members of `d`, small side elsewhere, and every `v_d`.
pub fn map_ds_forward(out: &ReductionOutput, d: &[usize]) -> Result<CapacitatedCover> {
    let gadgets = gadgets_of(out)?;
    let in_d = check_range(out.source.n(), d)?;
    if let Some(v) = undominated_vertex(&out.source, d) {
        return Err(Error::NotDominating(v));
    }
    let g = &out.graph;
    let mut inside = vec![false; g.n()];
    for (v, gd) in gadgets.iter().enumerate() {
        let side = if in_d[v] {
            gd.large.clone()
        } else {
            gd.small.clone()
        };
        side.for_each(|x| inside[x] = true);
        inside[gd.vd] = true;
    }
    // large vertices take every edge they touch, small ones the gadget edges,
    // and v_d whatever is left
    let assignment: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let is_vd = |x: usize| out.vertex_map[x].starts_with("v_d");
            match (inside[a], inside[b]) {
                (true, false) => a,
                (false, true) => b,
                _ if is_vd(a) => b,
                _ if is_vd(b) => a,
                _ => a,
            }
        })
        .collect();
    let cover = members(&inside);
    let capacity = out.capacity.as_ref().expect("capacitated");
    verify_assignment(g, capacity, &cover, &assignment)?;
    Ok(CapacitatedCover {
        cover: CoverCertificate::new(cover),
        assignment,
    })
}

/// Normalizes a capacitated cover and reads off the vertices whose large
/// side is selected. Never increases the cover size, so a cover of size
/// `n(B+2) + k` yields a dominating set of size at most `k`.
pub fn map_cvcl1_back(out: &ReductionOutput, cover: &[usize]) -> Result<Vec<usize>> {
    let gadgets = gadgets_of(out)?;
    let g = &out.graph;
    let capacity = out.capacity.as_ref().expect("capacitated");
    let mut inside = check_range(g.n(), cover)?;
    if capacitated_cover_feasible(g, capacity, cover).is_none() {
        return Err(Error::CapacityInfeasible);
    }
    let before = members(&inside).len();

    // leaves out, v_d in, and v_d keeps a large neighbor to stay within capacity
    for gd in &gadgets {
        if !gd.leaves.clone().any(|x| inside[x]) {
            continue;
        }
        gd.leaves.clone().for_each(|x| inside[x] = false);
        inside[gd.vd] = true;
        let nb = g.neighbors(gd.vd);
        if !nb.iter().any(|&x| inside[x] && !gd.leaves.contains(&x)) {
            let first = *nb
                .iter()
                .find(|&&x| !gd.leaves.contains(&x))
                .expect("v_d has a gadget neighbor");
            inside[first] = true;
        }
    }
    debug_assert!(gadgets.iter().all(|gd| inside[gd.vd]));

    // each choice gadget becomes exactly one full side
    let mut result = Vec::new();
    for (v, gd) in gadgets.iter().enumerate() {
        let large = gd.large.clone().any(|x| inside[x]);
        gd.small.clone().for_each(|x| inside[x] = !large);
        gd.large.clone().for_each(|x| inside[x] = large);
        if large {
            result.push(v);
        }
    }
    let after = members(&inside);
    debug_assert!(after.len() <= before);
    debug_assert!(capacitated_cover_feasible(g, capacity, &after).is_some());
    if let Some(v) = undominated_vertex(&out.source, &result) {
        return Err(Error::NotDominating(v));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::oracles::exact_min_capacitated_vc;

    #[test]
    fn structure_examples() {
        let out = reduce_ds_to_cvcl1(&cycle(4), 1).unwrap();
        assert_eq!(out.graph.m(), 64);
        assert_eq!(out.graph.max_degree(), 4);
        assert_eq!(out.params.target, 17);

        let out = reduce_ds_to_cvcl1(&path(2), 1).unwrap();
        for v in 0..2 {
            let vd = out
                .vertex_map
                .iter()
                .position(|r| *r == format!("v_d[{}]", v + 1))
                .unwrap();
            assert_eq!(out.graph.degree(vd), 3);
            assert_eq!(out.capacity.as_ref().unwrap()[vd], 2);
        }
    }

    #[test]
    fn forward_sizes() {
        let out = reduce_ds_to_cvcl1(&path(2), 1).unwrap();
        assert_eq!(map_ds_forward(&out, &[0]).unwrap().cover.len(), 7);

        let out = reduce_ds_to_cvcl1(&complete(3), 1).unwrap();
        let c = map_ds_forward(&out, &[1]).unwrap();
        assert_eq!(c.cover.len(), 13);
        let cap = out.capacity.as_ref().unwrap();
        assert!(capacitated_cover_feasible(&out.graph, cap, &c.cover.cover).is_some());
        assert_eq!(map_cvcl1_back(&out, &c.cover.cover).unwrap(), vec![1]);

        let all = map_ds_forward(&out, &[0, 1, 2]).unwrap();
        assert_eq!(all.cover.len(), 3 * 4 + 3);
        assert_eq!(
            map_ds_forward(&reduce_ds_to_cvcl1(&path(3), 1).unwrap(), &[0]),
            Err(Error::NotDominating(2))
        );
    }

    #[test]
    fn leaf_is_swapped_for_v_d() {
        let out = reduce_ds_to_cvcl1(&path(2), 2).unwrap();
        let mut c = map_ds_forward(&out, &[0, 1]).unwrap().cover.cover;
        let role = |r: &str| out.vertex_map.iter().position(|x| x == r).unwrap();
        // swap v_d[2] for its leaf; both large sides cover its other edges
        let vd = role("v_d[2]");
        c.retain(|&x| x != vd);
        c.push(role("leaf[2][1]"));
        let cap = out.capacity.as_ref().unwrap();
        assert!(capacitated_cover_feasible(&out.graph, cap, &c).is_some());
        assert_eq!(map_cvcl1_back(&out, &c).unwrap(), vec![0, 1]);
    }

    #[test]
    fn optimum_is_shifted_domination_number() {
        // gamma(P_3) = 1, gamma(2K_1) = 2
        for (g, gamma) in [(path(3), 1), (Graph::empty(2), 2), (complete(3), 1)] {
            let out = reduce_ds_to_cvcl1(&g, 0).unwrap();
            let best =
                exact_min_capacitated_vc(&out.graph, out.capacity.as_ref().unwrap()).unwrap();
            let b = g.max_degree();
            assert_eq!(best.len(), g.n() * (b + 2) + gamma);
            assert_eq!(map_cvcl1_back(&out, &best).unwrap().len(), gamma);
        }
    }
}
