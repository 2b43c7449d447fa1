use defekt::caps::Caps;
use defekt::colouring::{self, ListAssignment};
use defekt::rational::floor;
use defekt::structure;
use defekt::{density, io, Graph};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn peel_and_replay_colourings_respect_lists(g in graph(14), k in 1usize..4, slack in 0usize..6, seed in any::<u64>()) {
        let ell = k + slack;
        prop_assume!(colouring::peel(&g, k, ell).is_ok());
        let n = g.vertex_count();
        let lists = ListAssignment {
            lists: (0..n).map(|v| (0..=k).map(|i| (v * 7 + i + seed as usize % 5) % (k + 4)).collect()).collect(),
        };
        let (colours, trace) = colouring::defective_list_colour_traced(&g, &lists, k, ell).unwrap();
        colouring::validate_trace(&g, &trace).unwrap();
        for (list, c) in lists.lists.iter().zip(&colours) {
            prop_assert!(list.contains(c));
        }
        prop_assert!(colouring::verify_defective(&g, &colours, ell - k).unwrap().ok);
    }

    #[test]
    fn stuck_witness_has_no_reducible_part(g in graph(12), k in 1usize..3, slack in 0usize..3) {
        let ell = k + slack;
        if let Err(defekt::Error::Stuck { witness, .. }) = colouring::peel(&g, k, ell) {
            prop_assert!(witness.min_degree() > k);
            prop_assert!(structure::find_light_edge(&witness, ell).is_none());
        }
    }

    #[test]
    fn dichotomy_certificates_validate(g in graph(11), s in 1usize..4, t in 1usize..4) {
        let (mad, _) = density::mad_exact(&g).unwrap();
        let delta1 = defekt::rational::int(2) * density::top_grad_half(&g, 20).unwrap().value;
        let d = structure::structural_dichotomy(&g, s, t, &mad, &delta1).unwrap();
        structure::validate_dichotomy(&g, &d).unwrap();
    }

    #[test]
    fn kst_star_is_monotone_in_t(g in graph(10), s in 1usize..4, t in 1usize..4) {
        if let Some(e) = structure::find_kst_star(&g, s, t + 1) {
            structure::validate_kst_star(&g, s, t + 1, &e).unwrap();
            prop_assert!(structure::find_kst_star(&g, s, t).is_some());
        }
    }

    #[test]
    fn tree_depth_does_not_grow_under_deletion_or_contraction(g in graph(9), pick in any::<usize>()) {
        let td = structure::tree_depth(&g, 16).unwrap();
        let v = pick % g.vertex_count();
        if g.vertex_count() > 1 {
            prop_assert!(structure::tree_depth(&g.without_vertex(v), 16).unwrap() <= td);
        }
        if let Some(&w) = g.neighbours(v).first() {
            prop_assert!(structure::tree_depth(&g.contract_edge(v, w).unwrap(), 16).unwrap() <= td);
            prop_assert!(structure::tree_depth(&g.without_edge(v, w), 16).unwrap() <= td);
        }
        prop_assert!(structure::vertex_cover_number(&g, 16).unwrap() + 1 >= td);
    }

    #[test]
    fn found_minor_models_validate(g in graph(9), h in graph(4)) {
        if let Some(m) = structure::minor_test_bruteforce(&g, &h, &Caps::default()).unwrap() {
            structure::validate_minor_model(&g, &h, &m).unwrap();
        }
    }

    #[test]
    fn mad_agrees_with_brute_force(g in graph(11)) {
        let (exact, witness) = density::mad_exact(&g).unwrap();
        let (brute, _) = density::mad_bruteforce(&g, 16).unwrap();
        prop_assert_eq!(&exact, &brute);
        let (sub, _) = g.induced_subgraph(&witness).unwrap();
        if sub.vertex_count() > 0 {
            prop_assert_eq!(defekt::rational::rat(2 * sub.edge_count() as i64, sub.vertex_count() as i64), exact.clone());
        }
        let (d, _) = density::degeneracy(&g);
        prop_assert!(num::BigInt::from(d) <= floor(&exact));
    }

    #[test]
    fn oracle_confirms_algorithm(g in graph(9), k in 1usize..3) {
        let ell = defekt::experiment::least_peel_threshold(&g, k);
        let lists = ListAssignment::uniform(g.vertex_count(), k + 1);
        prop_assert!(colouring::defective_list_colour(&g, &lists, k, ell).is_ok());
        let found = colouring::is_kd_colourable_bruteforce(&g, k + 1, ell - k, &Caps::default()).unwrap();
        prop_assert!(found.is_some());
    }

    #[test]
    fn written_graphs_parse_back(g in graph(12)) {
        for format in [io::Format::EdgeList, io::Format::Dimacs, io::Format::Json] {
            prop_assert_eq!(io::parse_auto(&io::write(&g, format)).unwrap(), g.clone());
        }
    }

    #[test]
    fn edge_partitions_validate(g in graph(12), bound in 1usize..6) {
        match colouring::edge_partition_forest_bounded(&g, bound) {
            Ok(p) => colouring::validate_edge_partition(&g, &p, bound).unwrap(),
            Err(e) => prop_assert!(e.is_structural()),
        }
    }
}
