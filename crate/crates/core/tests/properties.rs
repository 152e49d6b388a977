use paramvc::bipartization::{is_edge_bipartization, min_edge_bipartization};
use paramvc::generators::from_pair_mask;
use paramvc::graph::Bipartition;
use paramvc::matching::{
    greedy_maximal_matching, is_maximal_matching, max_bipartite_matching, min_vc_bipartite,
};
use paramvc::oracles::{
    bf_edge_bipartization_upto, bf_max_independent_set, bf_max_matching, bf_min_capacitated_vc,
    bf_min_vertex_cover, capacitated_cover_feasible, OracleLimits,
};
use paramvc::reductions::{reduce, ReductionKind, ReductionOutput};
use paramvc::vcl1::{solve_vcl1, Vcl1Instance};
use paramvc::vcu1::{solve_vcu1, Vcu1Instance};
use paramvc::Graph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| any::<u64>().prop_map(move |mask| from_pair_mask(n, mask)))
}

fn limits() -> OracleLimits {
    OracleLimits::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn independent_set_complements_cover(g in graph(10)) {
        let vc = bf_min_vertex_cover(&g, &limits()).unwrap();
        let is = bf_max_independent_set(&g, &limits()).unwrap();
        prop_assert_eq!(vc.optimum + is.optimum, g.n());
        prop_assert!(g.is_vertex_cover(&vc.witness));
    }

    #[test]
    fn konig_on_bipartite_graphs(g in graph(10)) {
        if let Bipartition::Bipartite(c) = g.bipartition() {
            let cover = min_vc_bipartite(&g, &c).unwrap();
            let m = max_bipartite_matching(&g, &c).unwrap();
            prop_assert!(g.is_vertex_cover(&cover));
            prop_assert_eq!(cover.len(), m.len());
            prop_assert_eq!(m.len(), bf_max_matching(&g, &limits()).unwrap().optimum);
        }
    }

    #[test]
    fn degree_capacities_reduce_to_plain_cover(g in graph(8)) {
        let cap: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let capped = bf_min_capacitated_vc(&g, &cap, &limits()).unwrap().unwrap();
        prop_assert_eq!(capped.optimum, bf_min_vertex_cover(&g, &limits()).unwrap().optimum);
        prop_assert!(capacitated_cover_feasible(&g, &cap, &capped.witness).is_some());
    }

    #[test]
    fn bipartizations_are_valid_and_minimal(g in graph(8), p in 0usize..4) {
        if let Some(bip) = min_edge_bipartization(&g, p) {
            prop_assert!(bip.size() <= p);
            prop_assert!(is_edge_bipartization(&g, &bip.edges).unwrap());
            if bip.size() > 0 {
                prop_assert!(min_edge_bipartization(&g, bip.size() - 1).is_none());
            }
        } else {
            prop_assert!(!g.is_bipartite());
            prop_assert!(bf_edge_bipartization_upto(&g, p).is_none());
        }
    }

    #[test]
    fn greedy_matchings_are_maximal(g in graph(11)) {
        let m = greedy_maximal_matching(&g, None).unwrap();
        prop_assert!(is_maximal_matching(&g, &m).unwrap());
    }

    #[test]
    fn vcl1_certificates_meet_the_bound(g in graph(9), k in 0usize..3) {
        let b = g.max_degree().max(1);
        let out = solve_vcl1(&Vcl1Instance::new(g.clone(), b, k).unwrap()).unwrap();
        let vc = bf_min_vertex_cover(&g, &limits()).unwrap().optimum;
        prop_assert_eq!(out.decision.is_yes(), b * vc <= g.m() + b * k);
        if let Some(c) = out.decision.certificate() {
            prop_assert!(c.verify(&g).is_ok());
        }
    }

    #[test]
    fn vcu1_certificates_meet_the_bound(g in graph(9), k in 1usize..3) {
        let b = g.max_degree().max(2);
        let inst = Vcu1Instance::new(g.clone(), b, k).unwrap();
        let out = solve_vcu1(&inst).unwrap();
        let vc = bf_min_vertex_cover(&g, &limits()).unwrap().optimum;
        prop_assert_eq!(out.decision.is_yes(), inst.threshold().admits(vc));
        if let Some(c) = out.decision.certificate() {
            prop_assert!(c.verify(&g).is_ok());
            prop_assert!(inst.threshold().admits(c.len()));
        }
    }

    #[test]
    fn sidecars_rebuild_the_same_reduction(g in graph(5), k in 0usize..3) {
        let mut kinds = vec![ReductionKind::Cvcl1, ReductionKind::Vcu2];
        if g.m() > 0 {
            kinds.push(ReductionKind::Vcu1Unbounded);
        }
        for kind in kinds {
            let out = reduce(kind, &g, k).unwrap();
            let back = ReductionOutput::from_sidecar(&out.to_sidecar()).unwrap();
            prop_assert_eq!(back.graph, out.graph);
            prop_assert_eq!(back.params, out.params);
        }
    }

    #[test]
    fn vcu2_structure(g in graph(7)) {
        let out = reduce(ReductionKind::Vcu2, &g, 0).unwrap();
        let m = out.matching.as_ref().unwrap();
        prop_assert_eq!(out.graph.n(), 3 * g.n() + 4 * g.m());
        prop_assert_eq!(m.len(), g.n() + g.m());
        prop_assert!(is_maximal_matching(&out.graph, m).unwrap());
        prop_assert!(out.graph.max_degree() <= out.params.b);
    }
}
