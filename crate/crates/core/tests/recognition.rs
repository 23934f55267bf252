use hypershrink::gen::{random_hypergraph, random_hypertree};
use hypershrink::recognition::DEFAULT_VERTEX_LIMIT;
use hypershrink::{is_hypertree, is_hypertree_bruteforce, shrink_hypertree, Hypergraph};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn recognisers_agree(n in 2usize..11, extra in 0usize..2, k in 2usize..5, seed in any::<u64>()) {
        let h = random_hypergraph(n, n - 1 + extra, k, seed).unwrap();
        let oracle = is_hypertree_bruteforce(&h, DEFAULT_VERTEX_LIMIT).unwrap();
        prop_assert_eq!(is_hypertree(&h), oracle.is_hypertree());
        if is_hypertree(&h) {
            prop_assert!(shrink_hypertree(&h).is_ok());
        }
    }

    #[test]
    fn generated_hypertrees_are_recognised(
        n in 2usize..12, k in 2usize..6, p in 0.0f64..=1.0, seed in any::<u64>(),
    ) {
        let (h, _) = random_hypertree(n, k, seed, p).unwrap();
        prop_assert!(is_hypertree(&h));
        prop_assert!(is_hypertree_bruteforce(&h, DEFAULT_VERTEX_LIMIT).unwrap().is_hypertree());
    }
}

/// Every simple hypergraph on 4 vertices with 3 hyperedges.
#[test]
fn exhaustive_four_vertices() {
    let subsets: Vec<Vec<usize>> = (0u32..16)
        .filter(|m| m.count_ones() >= 2)
        .map(|m| (0..4).filter(|v| m >> v & 1 == 1).collect())
        .collect();
    let mut hypertrees = 0;
    for a in 0..subsets.len() {
        for b in a + 1..subsets.len() {
            for c in b + 1..subsets.len() {
                let h = Hypergraph::new(
                    4,
                    vec![subsets[a].clone(), subsets[b].clone(), subsets[c].clone()],
                )
                .unwrap();
                let ours = is_hypertree(&h);
                assert_eq!(
                    ours,
                    is_hypertree_bruteforce(&h, 20).unwrap().is_hypertree(),
                    "{h:?}"
                );
                hypertrees += usize::from(ours);
            }
        }
    }
    assert!(hypertrees > 0);
}
