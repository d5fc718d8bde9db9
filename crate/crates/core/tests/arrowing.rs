use arrowkit_core::arrowing::*;
use arrowkit_core::graph::Graph;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn swap(c: &EdgeColouring) -> EdgeColouring {
    EdgeColouring::new(
        c.graph().clone(),
        c.colours().iter().map(|c| c.other()).collect(),
    )
    .unwrap()
}

fn patterns() -> Vec<TargetPattern> {
    vec![
        TargetPattern::Clique(3),
        TargetPattern::CliquePendant(3),
        TargetPattern::parse("K2+K2").unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witnesses_are_clean(g in graph_strategy(7)) {
        for p in patterns() {
            let v = arrows(&g, &p, &p, &ArrowOptions::default());
            if let Some(w) = v.witness() {
                prop_assert!(find_mono(w, &p, Colour::Red).is_none());
                prop_assert!(find_mono(w, &p, Colour::Blue).is_none());
                let s = swap(w);
                prop_assert!(find_mono(&s, &p, Colour::Red).is_none());
                prop_assert!(find_mono(&s, &p, Colour::Blue).is_none());
            }
        }
    }

    #[test]
    fn swap_exchanges_colour_classes(g in graph_strategy(7), bits in prop::collection::vec(any::<bool>(), 21)) {
        let mut it = bits.into_iter().cycle();
        let c = EdgeColouring::from_fn(g, |_, _| if it.next().unwrap() { Colour::Red } else { Colour::Blue });
        let s = swap(&c);
        for p in patterns() {
            prop_assert_eq!(find_mono(&s, &p, Colour::Red), find_mono(&c, &p, Colour::Blue));
        }
    }

    #[test]
    fn supergraphs_keep_arrowing(g in graph_strategy(7), u in 0usize..7, v in 0usize..7) {
        let p = TargetPattern::Clique(3);
        let opts = ArrowOptions::default();
        prop_assume!(u < v && v < g.n() && !g.has_edge(u, v));
        if arrows(&g, &p, &p, &opts).is_arrow() {
            prop_assert!(arrows(&g.with_edge(u, v).unwrap(), &p, &p, &opts).is_arrow());
        }
    }

    #[test]
    fn asymmetric_targets_agree_with_cnf(g in graph_strategy(7)) {
        let red = TargetPattern::Clique(3);
        let blue = TargetPattern::Clique(2);
        let verdict = arrows(&g, &red, &blue, &ArrowOptions::default());
        let cnf = to_cnf(&g, &red, &blue).unwrap();
        match cnf.solve() {
            SatResult::Unsat => prop_assert!(verdict.is_arrow()),
            SatResult::Sat(model) => {
                prop_assert!(!verdict.is_arrow());
                let a: Vec<Option<bool>> = model.into_iter().map(Some).collect();
                let w = decode_model(&cnf, &a).unwrap();
                prop_assert!(find_mono(&w, &red, Colour::Red).is_none());
                prop_assert!(find_mono(&w, &blue, Colour::Blue).is_none());
            }
        }
    }

    #[test]
    fn worker_count_and_pruning_do_not_change_results(g in graph_strategy(7)) {
        let p = TargetPattern::Clique(3);
        let base = arrows(&g, &p, &p, &ArrowOptions::default()).outcome;
        for opts in [
            ArrowOptions { workers: 3, ..Default::default() },
            ArrowOptions { orbit_pruning: true, ..Default::default() },
            ArrowOptions { propagation: false, ..Default::default() },
        ] {
            let o = arrows(&g, &p, &p, &opts).outcome;
            prop_assert_eq!(matches!(o, Outcome::Arrow), matches!(base, Outcome::Arrow));
            if !opts.orbit_pruning {
                prop_assert_eq!(&o, &base);
            }
        }
    }
}

#[test]
fn dimacs_header_and_first_clause() {
    let cnf = to_cnf(
        &Graph::complete(6),
        &TargetPattern::Clique(3),
        &TargetPattern::Clique(3),
    )
    .unwrap();
    let text = cnf.to_dimacs();
    assert!(text.starts_with("p cnf 15 40\n-1 -2 -6 0\n"));
    let (vars, clauses) = parse_dimacs(&text).unwrap();
    assert_eq!((vars, clauses.as_slice()), (15, cnf.clauses()));
}

#[test]
fn budgets_give_undecided() {
    let p = TargetPattern::Clique(4);
    let opts = ArrowOptions {
        node_budget: Some(10),
        ..Default::default()
    };
    assert!(arrows(&Graph::complete(17), &TargetPattern::Clique(3), &p, &opts).is_undecided());
}
