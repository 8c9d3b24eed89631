mod common;

use common::cube;
use cubecross::geometry::{
    arrangement, crossings, cycle_parity_check, nu_partition, validate_good, Point, PolylineDrawing,
};
use cubecross::graph::{automorphisms, is_isomorphic, is_planar, Planarity};
use cubecross::io::{self, DrawingFile};
use cubecross::solver::{cr_upper_bound_seeded, euler_girth_bound, verify_certificate};
use cubecross::Graph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (3usize..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::sample::subsequence(pairs, 0..=len).prop_map(move |e| Graph::new(n, e).unwrap())
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn straight_drawing(g: Graph) -> impl Strategy<Value = PolylineDrawing> {
    let n = g.n();
    proptest::collection::vec((-40i64..=40, -40i64..=40), n).prop_filter_map(
        "degenerate",
        move |xy| {
            let pos = xy.into_iter().map(|(x, y)| Point::int(x, y)).collect();
            let d = PolylineDrawing::straight(g.clone(), pos).ok()?;
            validate_good(&d).is_good().then_some(d)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planarity_answer_is_certified(g in graph(9)) {
        match is_planar(&g) {
            Planarity::Planar(emb) => prop_assert!(emb.verify(&g)),
            Planarity::NonPlanar(w) => prop_assert!(w.verify(&g)),
        }
    }

    #[test]
    fn isomorphism_finds_relabelings(g in graph(8), perm in permutation(8)) {
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < g.n()).collect();
        let h = g.relabel(&perm).unwrap();
        let m = is_isomorphic(&g, &h);
        prop_assert!(m.is_some_and(|m| m.verify(&g, &h)));
    }

    #[test]
    fn graph_text_round_trips(g in graph(10)) {
        let text = io::graph_to_string(&g);
        let back = io::parse_graph(&text).unwrap();
        prop_assert_eq!(io::graph_to_string(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn rational_strings_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let r = cubecross::geometry::Rational::new(n.into(), d.into());
        prop_assert_eq!(io::parse_rational(&io::rational_to_string(&r)).unwrap(), r);
    }

    #[test]
    fn upper_bound_respects_girth_bound(g in graph(8), seed in any::<u64>()) {
        let u = cr_upper_bound_seeded(&g, 2, seed).unwrap();
        prop_assert!(verify_certificate(&g, &u.planarization));
        prop_assert_eq!(crossings(&u.drawing).unwrap().1, u.crossings);
        prop_assert!(validate_good(&u.drawing).is_good());
        if g.is_connected() {
            prop_assert!(euler_girth_bound(&g).unwrap() <= u.crossings);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn good_drawings_satisfy_euler_parity_additivity(
        d in straight_drawing(Graph::complete_bipartite(3, 3)),
        parts in proptest::collection::vec(0usize..3, 9),
    ) {
        let a = arrangement(&d).unwrap();
        prop_assert!(a.euler_holds());
        prop_assert!(cycle_parity_check(&d).unwrap().pass());
        let mut p = vec![Vec::new(); 3];
        for (e, &k) in parts.iter().enumerate() {
            p[k].push(e);
        }
        let nu = nu_partition(&d, &p).unwrap();
        prop_assert_eq!(nu.sum(), nu.total);
    }

    #[test]
    fn drawing_files_round_trip(d in straight_drawing(cube("Q3"))) {
        let c = crossings(&d).unwrap().1;
        let f = DrawingFile::from_drawing(&d, Some(c));
        let back = DrawingFile::from_json(&f.to_json()).unwrap();
        prop_assert_eq!(back.verify(None).unwrap(), c);
        prop_assert_eq!(back.to_drawing().unwrap(), d);
    }
}

#[test]
fn cube_automorphism_counts() {
    // |Aut(Q_n)| = 2^n n!
    assert_eq!(automorphisms(&cube("Q3")).order, 48);
    assert_eq!(automorphisms(&cube("Q4")).order, 384);
}

#[test]
fn cube_families_are_distinct_at_order_four() {
    let q4 = cube("Q4");
    for s in ["CQ4", "LTQ4", "1-MQ4"] {
        assert!(is_isomorphic(&q4, &cube(s)).is_none(), "{s}");
    }
}
