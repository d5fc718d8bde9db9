use arrowkit_core::arrowing::{find_mono, ArrowOptions, Colour, TargetPattern};
use arrowkit_core::gadgets::*;
use arrowkit_core::graph::{clique_number, find_clique, Graph, Hypergraph};
use num_rational::Ratio;
use proptest::prelude::*;

fn reduced_product() -> BlockGraph {
    let params = schedule_params(4, 3, 4, &[5; 5]).unwrap();
    let fs = vec![Graph::cycle(5); 5];
    build_product(
        &params,
        &Graph::cycle(5),
        &fs,
        ProductMode::Relaxed,
        &ArrowOptions::default(),
    )
    .unwrap()
}

#[test]
fn schedule_examples() {
    let p = schedule_params(4, 3, 4, &[5; 5]).unwrap();
    assert_eq!((p.h, p.f), (7, 2));
    assert_eq!(p.eps0, Dyadic::new(8));
    assert_eq!(p.eps_schedule[0], Dyadic::new(11));
    // 2^-(7 + 5 - j + 5(j-1)) for j = 1..5
    let want: Vec<Dyadic> = (1..=5u32)
        .map(|j| Dyadic::new(7 + 5 - j + 5 * (j - 1)))
        .collect();
    assert_eq!(p.eps_schedule, want);
    let q = schedule_params(5, 3, 14, &[]).unwrap();
    assert_eq!((q.h, q.f, q.eps0), (18, 5, Dyadic::new(19)));
    assert!(schedule_params(3, 3, 4, &[1]).is_err());
    assert!(schedule_params(4, 2, 4, &[1]).is_err());
}

#[test]
fn computed_schedule_matches_supplied() {
    let p = schedule_params_computed(4, 3, &[5; 5], &ArrowOptions::default()).unwrap();
    assert_eq!(p.r_value, 4);
    assert_eq!(p.r_source, RSource::Computed);
    assert_eq!(p.h, 7);
}

#[test]
fn product_edges_follow_block_rules() {
    let bg = reduced_product();
    let g = &bg.graph;
    assert_eq!(g.n(), 7 + 25);
    let owner = bg.block_of();
    let Provenance::Product { g0 } = &bg.provenance else {
        panic!()
    };
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let (a, b) = (owner[u], owner[v]);
            let expected = if a == 0 || b == 0 {
                true
            } else if a == b {
                let base = bg.blocks[a].vertices[0];
                Graph::cycle(5).has_edge(u - base, v - base)
            } else {
                g0.has_edge(a - 1, b - 1)
            };
            assert_eq!(g.has_edge(u, v), expected, "{u} {v}");
        }
    }
}

#[test]
fn g2_colouring_on_reduced_product() {
    let bg = reduced_product();
    let c = canonical_colouring(ColouringKind::G2, &bg).unwrap();
    assert_eq!(clique_number(&c.class(Colour::Blue)), 3);
    let checks = check_canonical_colouring(ColouringKind::G2, &bg, &c).unwrap();
    assert_eq!(checks.len(), 3);
    assert!(checks.iter().all(|r| r.passed), "{checks:?}");
}

#[test]
fn g0_blue_class_has_small_cliques() {
    for k in 3..=5 {
        let bg = build_g0(k, &Graph::cycle(5)).unwrap();
        let c = canonical_colouring(ColouringKind::G0Prop1, &bg).unwrap();
        assert!(clique_number(&c.class(Colour::Blue)) < k);
        // Red K_k only inside H.
        let red = c.class(Colour::Red);
        let h = find_clique(&red, k).unwrap();
        assert_eq!(h, bg.block("H").unwrap());
    }
}

#[test]
fn g0_prop1_at_k4_with_k4_free_block() {
    let f = Graph::complete(3).disjoint_union(&Graph::cycle(5));
    let bg = build_g0(4, &f).unwrap();
    let c = canonical_colouring(ColouringKind::G0Prop1, &bg).unwrap();
    assert!(find_mono(&c, &TargetPattern::CliquePendant(4), Colour::Red).is_none());
    assert!(find_mono(&c, &TargetPattern::Clique(4), Colour::Blue).is_none());
}

#[test]
fn sidecar_round_trip() {
    let bg = reduced_product();
    let text = bg.to_json();
    assert!(text.contains("\"graph6\""));
    assert!(text.contains("\"eps0\": \"2^-8\""));
    assert_eq!(BlockGraph::from_json(&text).unwrap(), bg);
    let g0 = build_g0(3, &Graph::cycle(5)).unwrap();
    let p = build_pendant_gadget(3, &[g0.clone(), g0]).unwrap();
    assert_eq!(BlockGraph::from_json(&p.to_json()).unwrap(), p);
    assert!(BlockGraph::from_json("{}").is_err());
}

#[test]
fn colouring_kind_must_match_provenance() {
    let bg = reduced_product();
    assert!(canonical_colouring(ColouringKind::G0Prop1, &bg).is_err());
    assert!(canonical_colouring(ColouringKind::PendantMinusV, &bg).is_err());
}

#[test]
fn hypergraph_girth_four_example() {
    let hg = gen_hypergraph(3, 4, Ratio::new(4, 5), 15, 0, 100).unwrap();
    assert!(hg.girth().at_least(4));
    assert!(hg.independence_number() < 12);
    for (i, e) in hg.edges().iter().enumerate() {
        for f in &hg.edges()[i + 1..] {
            assert!(e.iter().filter(|v| f.contains(v)).count() <= 1);
        }
    }
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for w in v + 1..g.n() {
            if g.has_edge(u, w) && g.has_edge(v, w) {
                out.push([u, v, w]);
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hypergraph_outputs_are_verified(seed in any::<u64>(), n in 8usize..14) {
        match gen_hypergraph(3, 4, Ratio::new(9, 10), n, seed, 30) {
            Ok(hg) => {
                prop_assert!(hg.girth().at_least(4));
                prop_assert!(10 * hg.independence_number() < 9 * n);
                let f0 = Graph::complete(3);
                let g = plant_copies(&f0, &hg).unwrap();
                prop_assert_eq!(g.edge_count(), 3 * hg.edge_count());
                for t in triangles(&g) {
                    prop_assert!(hg.edges().iter().any(|e| t.iter().all(|v| e.contains(v))));
                }
            }
            Err(e) => prop_assert!(matches!(e, arrowkit_core::Error::Infeasible(_))),
        }
    }

    #[test]
    fn constructors_are_deterministic(seed in any::<u64>()) {
        let a = gen_hypergraph(3, 3, Ratio::new(1, 1), 9, seed, 10).unwrap();
        let b = gen_hypergraph(3, 3, Ratio::new(1, 1), 9, seed, 10).unwrap();
        prop_assert_eq!(a.to_text(), b.to_text());
    }
}

#[test]
fn planting_on_the_fano_plane() {
    let g = plant_copies(&Graph::complete(3), &Hypergraph::fano()).unwrap();
    assert_eq!(g, Graph::complete(7));
}
