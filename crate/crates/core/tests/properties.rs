//! Randomized invariants.

mod common;

use common::*;
use minorham_core::certificate::minor_certificate;
use minorham_core::hamilton::{hamilton_cycle, HamiltonResult};
use minorham_core::minors::{find_k2t_model, is_k2t_minor_free};
use minorham_core::reductions::{lift_cycle, normalize_claim3, ReductionTrace};
use minorham_core::topology::{is_k_connected, outerplanar_embedding, planar_embedding, Planarity};
use minorham_core::verify::reducible_cycles;
use minorham_core::{Certificate, Graph, VertexSet};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut e = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        e.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &e).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn three_connected_planar() -> impl Strategy<Value = (Graph, u64)> {
    (6usize..=8, any::<u64>()).prop_map(|(n, pick)| {
        let pool = minorham_core::enumerate::generate_3c_planar(n).unwrap();
        let g = pool[(pick % pool.len() as u64) as usize].clone();
        (g, pick)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_code_is_relabeling_invariant((g, perm) in graph_and_perm(10)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(g.canonical_code(), h.canonical_code());
        let back = g.canonical_code().to_graph();
        prop_assert_eq!(back.canonical_code(), g.canonical_code());
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn contraction_matches_brute_merge(g in graph_strategy(9), pick in any::<usize>()) {
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick % edges.len()];
        let (h, map) = g.contract_edge(u, v).unwrap();
        prop_assert_eq!(h.n(), g.n() - 1);
        prop_assert_eq!(map[u], map[v]);
        for (a, b) in g.edges() {
            if map[a] != map[b] {
                prop_assert!(h.has_edge(map[a], map[b]));
            }
        }
        let expected: usize = {
            let mut set = std::collections::BTreeSet::new();
            for (a, b) in g.edges() {
                let (x, y) = (map[a].min(map[b]), map[a].max(map[b]));
                if x != y { set.insert((x, y)); }
            }
            set.len()
        };
        prop_assert_eq!(h.m(), expected);
    }

    #[test]
    fn components_partition_the_rest(g in graph_strategy(10), removed_bits in any::<u16>()) {
        let n = g.n();
        let removed: VertexSet = (0..n).filter(|&v| removed_bits >> v & 1 == 1).collect();
        let comps = g.connected_components(&removed);
        let mut covered: Vec<usize> = comps.iter().flat_map(|c| c.iter()).collect();
        covered.sort();
        let expected: Vec<usize> = (0..n).filter(|&v| !removed.contains(v)).collect();
        prop_assert_eq!(&covered, &expected);
        let keep = expected.iter().fold(0u64, |m, &v| m | 1 << v);
        prop_assert_eq!(comps.len(), component_count(&masks(&g), keep));
    }

    #[test]
    fn k2t_freeness_is_minor_closed(g in graph_strategy(8), t in 2usize..=4, pick in any::<usize>()) {
        prop_assume!(is_k2t_minor_free(&g, t).unwrap());
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick % edges.len()];
        prop_assert!(is_k2t_minor_free(&g.remove_edge(u, v).unwrap(), t).unwrap());
        prop_assert!(is_k2t_minor_free(&g.contract_edge(u, v).unwrap().0, t).unwrap());
        let (d, _) = g.delete_vertices(&[u].into_iter().collect());
        prop_assert!(is_k2t_minor_free(&d, t).unwrap());
    }

    #[test]
    fn certificates_verify(g in graph_strategy(9), t in 2usize..=4) {
        let cert = minor_certificate(&g, t).unwrap();
        prop_assert!(cert.verify(&g).unwrap());
        if let Some(m) = find_k2t_model(&g, t).unwrap() {
            prop_assert!(m.verify(&g));
        }
        if g.n() >= 3 {
            let c: Certificate = match hamilton_cycle(&g).unwrap() {
                HamiltonResult::Cycle(c) => c.into(),
                HamiltonResult::Exhausted(p) => p.into(),
            };
            prop_assert!(c.verify(&g).unwrap());
            let json = serde_json::to_string(&c).unwrap();
            let back: Certificate = serde_json::from_str(&json).unwrap();
            prop_assert!(back.verify(&g).unwrap());
        }
    }

    #[test]
    fn embeddings_verify(g in graph_strategy(9)) {
        prop_assume!(g.is_connected());
        match planar_embedding(&g).unwrap() {
            Planarity::Planar(e) => {
                prop_assert!(e.verify(&g));
                prop_assert_eq!(g.n() + e.faces().len(), g.m() + 2);
            }
            Planarity::Nonplanar(w) => prop_assert!(w.verify(&g)),
        }
        if let Some(o) = outerplanar_embedding(&g).unwrap() {
            prop_assert!(o.verify(&g));
        }
    }

    #[test]
    fn reduction_traces_compose((g, pick) in three_connected_planar()) {
        let cycles = reducible_cycles(&g).unwrap();
        prop_assume!(!cycles.is_empty());
        let c = &cycles[(pick % cycles.len() as u64) as usize];
        let comps = g.connected_components(&c.vertex_set());
        let d = &comps[(pick / 7 % comps.len() as u64) as usize];
        let trace = normalize_claim3(&g, c, d).unwrap();
        trace.validate().unwrap();
        prop_assert!(is_k_connected(&trace.result, 3));
        let steps = trace.intermediates().unwrap();
        // Split after the first step and recombine.
        prop_assume!(!trace.steps.is_empty());
        let first = ReductionTrace {
            original: g.clone(),
            cycle: c.clone(),
            steps: trace.steps[..1].to_vec(),
            result: steps[1].clone(),
        };
        let rest = ReductionTrace {
            original: first.result.clone(),
            cycle: first.cycle_in_result(),
            steps: trace.steps[1..].to_vec(),
            result: trace.result.clone(),
        };
        first.validate().unwrap();
        rest.validate().unwrap();
        let joined = first.then(rest).unwrap();
        prop_assert_eq!(&joined, &trace);
        for z in minorham_core::hamilton::all_cycles(&trace.result).unwrap() {
            let l = lift_cycle(&trace, &z).unwrap();
            prop_assert!(l.verify(&g) && l.len() >= z.len());
        }
    }
}
