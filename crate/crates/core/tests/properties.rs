use proptest::prelude::*;

use splitcolor::batch::{sample, Family};
use splitcolor::coloring::{
    edge_color_delta_plus_one, edge_color_exact, verify_edge_coloring, verify_total_coloring,
    Feasibility, SearchLimits,
};
use splitcolor::generator::{random_split_graph, DeltaParity, GeneratorParams};
use splitcolor::io::{emit_edge_list, emit_json, parse_graph, LabeledGraph};
use splitcolor::matching::max_matching;
use splitcolor::oracle::{chromatic_index_exact, max_matching_brute, stretch_index_exact, OracleCaps};
use splitcolor::sigma2::{class1_fast_path, classify_edge, classify_total, EdgeVerdict, FastPath};
use splitcolor::split::{pendant_decomposition, recognize_split, stretch_class};
use splitcolor::Graph;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
    })
}

fn arb_split(max_n: usize, family: Family, parity: DeltaParity) -> impl Strategy<Value = Graph> {
    any::<u64>().prop_map(move |seed| sample(seed, max_n, family, parity, |_| true).unwrap().graph)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn edge_list_and_json_round_trip(g in arb_graph(12)) {
        let lg = LabeledGraph::numbered(g);
        prop_assert_eq!(parse_graph(&emit_edge_list(&lg).unwrap()).unwrap(), lg.clone());
        prop_assert_eq!(parse_graph(&emit_json(&lg)).unwrap(), lg);
    }

    #[test]
    fn matching_agrees_with_brute_force(g in arb_graph(9)) {
        let caps = OracleCaps { matching_m: 36, ..OracleCaps::default() };
        let m = max_matching(&g);
        prop_assert!(m.is_matching_of(&g));
        prop_assert_eq!(m.size, max_matching_brute(&g, &caps).unwrap());
    }

    #[test]
    fn misra_gries_within_delta_plus_one(g in arb_graph(14)) {
        let c = edge_color_delta_plus_one(&g);
        prop_assert_eq!(verify_edge_coloring(&g, &c, g.delta() + 1), Ok(()));
    }

    #[test]
    fn exact_search_is_calibrated(g in arb_graph(8)) {
        prop_assume!(g.m() > 0);
        let chi = chromatic_index_exact(&g, &OracleCaps::default()).unwrap();
        let limits = SearchLimits::default();
        match edge_color_exact(&g, chi, limits).unwrap() {
            Feasibility::Colored(c) => prop_assert_eq!(verify_edge_coloring(&g, &c, chi), Ok(())),
            Feasibility::Infeasible => prop_assert!(false, "chi' = {} refuted", chi),
        }
        prop_assert!(edge_color_exact(&g, chi - 1, limits).unwrap().is_infeasible());
    }

    #[test]
    fn recognized_partitions_are_maximal(g in arb_split(12, Family::AnySplit, DeltaParity::Any)) {
        let sp = recognize_split(&g).unwrap();
        prop_assert!(sp.is_valid_for(&g) && sp.is_maximal(&g));
    }

    #[test]
    fn pendants_do_not_change_stretch(seed in any::<u64>(), at in 0usize..64) {
        let s = sample(seed, 7, Family::AnySplit, DeltaParity::Any, |_| true).unwrap();
        let g = s.graph;
        let sp = recognize_split(&g).unwrap();
        let x = sp.clique[at % sp.clique.len()];
        let n = g.n();
        let grown = g.with_extra(1, &[(x, n)]).unwrap();
        let before = stretch_class(&g, &sp).unwrap().sigma;
        let after = stretch_class(&grown, &recognize_split(&grown).unwrap()).unwrap().sigma;
        prop_assert_eq!(before, after);
        prop_assert_eq!(after as usize, stretch_index_exact(&grown, &OracleCaps::default()).unwrap());
    }

    #[test]
    fn pendant_decomposition_is_exact(g in arb_split(12, Family::Sigma2, DeltaParity::Any)) {
        let pd = pendant_decomposition(&g).unwrap();
        for v in 0..g.n() {
            prop_assert_eq!(pd.is_pendant(v), g.degree(v) == 1);
        }
        prop_assert_eq!(pd.core.n() + pd.pendants.len(), g.n());
        prop_assert!(pd.core.is_connected());
    }

    #[test]
    fn fast_path_never_contradicts(g in arb_split(12, Family::Sigma2, DeltaParity::Even)) {
        let pd = pendant_decomposition(&g).unwrap();
        if class1_fast_path(&g, &pd) == FastPath::Class1 {
            prop_assert_eq!(classify_edge(&g).unwrap().verdict, EdgeVerdict::Class1);
        }
    }

    #[test]
    fn classifier_witnesses_verify(g in arb_split(12, Family::Sigma2, DeltaParity::Any)) {
        let e = classify_edge(&g).unwrap();
        if let Some(c) = &e.coloring {
            prop_assert_eq!(verify_edge_coloring(&g, c, g.delta()), Ok(()));
        }
        let t = classify_total(&g).unwrap();
        if let Some(c) = &t.coloring {
            prop_assert_eq!(verify_total_coloring(&g, c, g.delta() + 1), Ok(()));
        }
    }

    #[test]
    fn generator_is_deterministic(seed in any::<u64>(), k in 2usize..7, q in 0usize..4, p in 0usize..3) {
        let params = GeneratorParams {
            clique_size: k,
            independent_count: q,
            pendant_count: p,
            force_universal: seed % 2 == 0,
            delta_parity: DeltaParity::Any,
            seed,
        };
        let (a, sp) = random_split_graph(&params).unwrap();
        prop_assert_eq!(&a, &random_split_graph(&params).unwrap().0);
        prop_assert!(a.is_connected() && sp.is_valid_for(&a) && sp.is_maximal(&a));
    }
}
