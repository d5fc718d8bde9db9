use arrowkit_core::arrowing::{ArrowOptions, Colour, EdgeColouring};
use arrowkit_core::focusing::*;
use arrowkit_core::gadgets::*;
use arrowkit_core::graph::Graph;
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

fn report(outcome: FocusOutcome) -> FocusReport {
    match outcome {
        FocusOutcome::Report(r) => r,
        FocusOutcome::Failed(f) => panic!("focusing failed: {f:?}"),
    }
}

fn check_bounds(bc: &BipartiteColouring) -> Result<(), TestCaseError> {
    let (a, b) = (bc.a_side().len(), bc.b_side().len());
    let b_bound = b.div_ceil(1 << a);
    let rf = focus_rows(bc)?;
    prop_assert!(rf.b_prime.len() >= b_bound);
    for &(x, c) in &rf.rows {
        let i = bc.a_side().binary_search(&x).unwrap();
        for y in &rf.b_prime {
            let j = bc.b_side().binary_search(y).unwrap();
            prop_assert_eq!(bc.colour_at(i, j), c);
        }
    }
    let bf = focus_block(bc)?;
    prop_assert!(bf.a_prime.len() >= a.div_ceil(2));
    prop_assert!(bf.b_prime.len() >= b_bound);
    for x in &bf.a_prime {
        let i = bc.a_side().binary_search(x).unwrap();
        for y in &bf.b_prime {
            let j = bc.b_side().binary_search(y).unwrap();
            prop_assert_eq!(bc.colour_at(i, j), bf.colour);
        }
    }
    Ok(())
}

fn instance(a: usize, bits: &[bool]) -> BipartiteColouring {
    let b = bits.len() / a;
    let av: Vec<usize> = (0..a).collect();
    let bv: Vec<usize> = (a..a + b).collect();
    BipartiteColouring::from_fn(&av, &bv, |x, y| {
        if bits[x * b + y - a] {
            Colour::Blue
        } else {
            Colour::Red
        }
    })
    .unwrap()
}

#[test]
fn exhaustive_small_bipartite_colourings() {
    for a in 1..=2 {
        for b in 1..=4 {
            for mask in 0u32..1 << (a * b) {
                let bits: Vec<bool> = (0..a * b).map(|i| mask >> i & 1 == 1).collect();
                check_bounds(&instance(a, &bits)).unwrap();
            }
        }
    }
}

proptest! {
    #[test]
    fn focusing_bounds_hold(a in 1usize..=6, b in 1usize..=64, seed in any::<u64>()) {
        let bits: Vec<bool> = (0..a * b)
            .map(|i| (seed.rotate_left(i as u32 % 64) ^ (i as u64).wrapping_mul(0x9e37_79b9)) & 1 == 1)
            .collect();
        check_bounds(&instance(a, &bits))?;
    }

    #[test]
    fn focusing_bounds_hold_for_arbitrary_bits(bits in prop::collection::vec(any::<bool>(), 1..=64), a in 1usize..=4) {
        let usable = bits.len() / a * a;
        prop_assume!(usable > 0);
        check_bounds(&instance(a, &bits[..usable]))?;
    }
}

#[test]
fn g2_colouring_focuses_to_red_blocks() {
    let bg = reduced_product();
    let chi = canonical_colouring(ColouringKind::G2, &bg).unwrap();
    let r = report(iterated_focus(&bg, &chi).unwrap());
    assert_eq!(r.j_set, vec![1, 2, 3, 4, 5]);
    assert!(r.c_row.values().all(|&c| c == Colour::Blue));
    assert!(r.w_colour.values().all(|&c| c == Colour::Red));
    assert!(r.c_pair.values().all(|&c| c == Colour::Blue));
    assert_eq!(r.c_pair.len(), 5);
    assert!(r.sizes.values().all(|&s| s == 5));
    assert_eq!(r.w_sets[&1], vec![7, 8]);
    assert!(verify_focus_report(&bg, &chi, &r).unwrap().is_empty());
    let again = report(iterated_focus(&bg, &chi).unwrap());
    assert_eq!(again, r);
}

#[test]
fn blue_block_gives_blue_w() {
    let bg = reduced_product();
    let owner = bg.block_of();
    let base = canonical_colouring(ColouringKind::G2, &bg).unwrap();
    let chi = EdgeColouring::from_fn(bg.graph.clone(), |u, v| {
        if owner[u] == 3 && owner[v] == 3 {
            Colour::Blue
        } else {
            base.colour(u, v).unwrap()
        }
    });
    let r = report(iterated_focus(&bg, &chi).unwrap());
    assert_eq!(r.w_colour[&3], Colour::Blue);
    assert_eq!(r.w_colour[&2], Colour::Red);
    assert!(verify_focus_report(&bg, &chi, &r).unwrap().is_empty());
}

#[test]
fn injected_faults_are_located() {
    let bg = reduced_product();
    let chi = canonical_colouring(ColouringKind::G2, &bg).unwrap();
    let good = report(iterated_focus(&bg, &chi).unwrap());

    // Recolour the edge inside W_2.
    let w2 = good.w_sets[&2].clone();
    let flipped = EdgeColouring::from_fn(bg.graph.clone(), |u, v| {
        let c = chi.colour(u, v).unwrap();
        if (u, v) == (w2[0], w2[1]) {
            c.other()
        } else {
            c
        }
    });
    let v = verify_focus_report(&bg, &flipped, &good).unwrap();
    assert_eq!(v.len(), 1);
    assert_eq!(
        (v[0].item, v[0].block, v[0].edge),
        ('b', Some(2), Some((w2[0], w2[1])))
    );

    let mut small = good.clone();
    small.j_set.clear();
    let v = verify_focus_report(&bg, &chi, &small).unwrap();
    assert!(v.iter().any(|x| x.item == 'a'));

    let mut pair = good.clone();
    pair.c_pair.insert(pair_key(1, 2), Colour::Red);
    let v = verify_focus_report(&bg, &chi, &pair).unwrap();
    assert!(!v.is_empty() && v.iter().all(|x| x.item == 'c' && x.block == Some(1)));
    assert_eq!(v.len(), 4);

    let mut row = good;
    row.c_row.insert(0, Colour::Red);
    let v = verify_focus_report(&bg, &chi, &row).unwrap();
    assert_eq!(v.len(), 10);
    assert!(v.iter().all(|x| x.item == 'd' && x.edge.unwrap().0 == 0));
}

#[test]
fn report_json_shape() {
    let bg = reduced_product();
    let chi = canonical_colouring(ColouringKind::G2, &bg).unwrap();
    let r = report(iterated_focus(&bg, &chi).unwrap());
    let json: serde_json::Value = serde_json::to_value(&r).unwrap();
    for key in ["J", "W", "w_colour", "c_row", "c_pair", "sizes"] {
        assert!(json.get(key).is_some(), "{key}");
    }
    assert_eq!(json["c_pair"]["1-2"], "blue");
    let back: FocusReport = serde_json::from_value(json).unwrap();
    assert_eq!(back, r);
}

fn singleton_instance() -> BlockGraph {
    let params = GadgetParams {
        k: 3,
        t: 2,
        r_value: 2,
        r_source: RSource::Supplied,
        h: 4,
        f: 1,
        eps0: Dyadic::new(5),
        eps_schedule: (0..5).map(|j| Dyadic::new(4 + 5 - j)).collect(),
        block_sizes: vec![1; 5],
    };
    let mut bg = build_product_raw(4, &Graph::cycle(5), &vec![Graph::empty(1); 5]).unwrap();
    bg.params = Some(params);
    bg
}

proptest! {
    #[test]
    fn singleton_blocks_always_focus(bits in prop::collection::vec(any::<bool>(), 31)) {
        let bg = singleton_instance();
        prop_assert_eq!(bg.graph.edge_count(), 31);
        let mut it = bits.into_iter();
        let chi = EdgeColouring::from_fn(bg.graph.clone(), |_, _| {
            if it.next().unwrap() { Colour::Blue } else { Colour::Red }
        });
        let r = report(iterated_focus(&bg, &chi).unwrap());
        prop_assert!(r.w_sets.values().all(|w| w.len() == 1));
        prop_assert!(verify_focus_report(&bg, &chi, &r).unwrap().is_empty());
    }
}

#[test]
fn non_product_input_rejected() {
    let bg = build_g0(3, &Graph::cycle(5)).unwrap();
    let chi = canonical_colouring(ColouringKind::G0Prop1, &bg).unwrap();
    assert!(iterated_focus(&bg, &chi).is_err());
}
