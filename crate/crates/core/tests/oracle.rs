mod common;

use common::{harder_fixtures, oracle_cr};
use cubecross::solver::{cr_decide, verify_certificate, Budget, Decision};
use cubecross::Graph;
use proptest::prelude::*;

fn solver_says(g: &Graph, k: usize) -> bool {
    match cr_decide(g, k, &Budget::unlimited()) {
        Decision::Yes(p) => {
            assert!(verify_certificate(g, &p));
            assert!(p.crossing_count() <= k);
            true
        }
        Decision::No(_) => false,
        Decision::Timeout(_) => panic!("unlimited budget timed out"),
    }
}

#[test]
fn harder_graphs_agree() {
    for (name, g) in harder_fixtures() {
        let truth = oracle_cr(&g, 3);
        for k in 0..=3 {
            assert_eq!(
                solver_says(&g, k),
                truth.is_some_and(|c| c <= k),
                "{name} k={k}"
            );
        }
    }
}

#[test]
fn known_values_from_oracle() {
    assert_eq!(oracle_cr(&Graph::complete(6), 3), Some(3));
    assert_eq!(oracle_cr(&Graph::complete_bipartite(3, 4), 3), Some(2));
    assert_eq!(oracle_cr(&Graph::petersen(), 3), Some(2));
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (5usize..=7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 6..=pairs.len().min(14))
            .prop_map(move |edges| Graph::new(n, edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_graphs_agree(g in small_graph()) {
        let truth = oracle_cr(&g, 2);
        for k in 0..=2 {
            prop_assert_eq!(solver_says(&g, k), truth.is_some_and(|c| c <= k), "k={}", k);
        }
    }
}
