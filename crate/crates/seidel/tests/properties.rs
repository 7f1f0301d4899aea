//! Property tests for the switching algebra, the codec, and the kernel
//! structure theorems on randomized inputs.

use num::bigint::BigInt;
use proptest::prelude::*;

use seidel::analysis;
use seidel::graph::{Graph, VertexSet};
use seidel::graph6::{encode_graph6, parse_graph6};
use seidel::linalg::{
    rank_exact, rank_lower_bound_mod_p, seidel_matrix, DEFAULT_FILTER_PRIME,
};
use seidel::search::random_regular;

fn graph_strategy(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<u64>(), n).prop_map(move |rows| {
            let edges = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| rows[i] >> (j % 64) & 1 == 1);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn set_strategy(g: &Graph) -> impl Strategy<Value = VertexSet> {
    let n = g.order();
    let mask = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    any::<u64>().prop_map(move |bits| VertexSet::from_bits(n, bits & mask))
}

proptest! {
    #[test]
    fn switching_is_an_involution(
        (g, a) in graph_strategy(64).prop_flat_map(|g| {
            let a = set_strategy(&g);
            (Just(g), a)
        })
    ) {
        prop_assert_eq!(g.switch(&a).switch(&a), g.clone());
        prop_assert_eq!(g.switch(&a), g.switch(&a.complement()));
    }

    #[test]
    fn graph6_round_trips(g in graph_strategy(64)) {
        let encoded = encode_graph6(&g);
        prop_assert_eq!(parse_graph6(encoded.as_bytes()).unwrap(), g);
    }

    #[test]
    fn seidel_rank_is_at_least_order_minus_one(g in graph_strategy(9)) {
        let rank = rank_exact(&seidel_matrix(&g));
        prop_assert!(rank + 1 >= g.order());
    }

    #[test]
    fn even_order_graphs_are_nonsingular(g in graph_strategy(8).prop_filter(
        "even order", |g| g.order() % 2 == 0
    )) {
        prop_assert_eq!(rank_exact(&seidel_matrix(&g)), g.order());
    }

    #[test]
    fn modular_rank_never_exceeds_exact_rank(g in graph_strategy(12)) {
        let s = seidel_matrix(&g);
        let modular = rank_lower_bound_mod_p(&s, DEFAULT_FILTER_PRIME).unwrap();
        prop_assert!(modular <= rank_exact(&s));
    }

    /// Switching a regular graph keeps the Seidel matrix singular with a
    /// +-1 kernel, and phi transforms by entry negation.
    #[test]
    fn switched_regular_graphs_keep_pm_one_kernels(
        k in 1usize..=3,
        seed in 0u64..1024,
        bits in any::<u64>(),
        bits2 in any::<u64>(),
    ) {
        let (degree, order) = (2 * k, 4 * k + 1);
        let h = random_regular(degree, order, seed).unwrap();
        let mask = (1u64 << order) - 1;
        let a = VertexSet::from_bits(order, bits & mask);
        let (g, p) = analysis::pm_one_from_regular(&h, &a).unwrap();
        prop_assert!(p.all_pm_one());
        prop_assert!(analysis::check_kernel_balance(&p));
        prop_assert!(analysis::check_odd_entries(&p));
        prop_assert!(analysis::check_pair_congruences(&p).pass);

        // Complement invariance.
        let cp = analysis::phi(&g.complement()).unwrap().unwrap();
        prop_assert_eq!(cp.vector(), p.vector());

        // Switching covariance by a second set.
        let b = VertexSet::from_bits(order, bits2 & mask);
        let sp = analysis::phi(&g.switch(&b)).unwrap().unwrap();
        prop_assert_eq!(sp.vector(), &p.switched_vector(&b));
    }
}

/// The even representative of an odd-order graph is invariant under
/// pre-switching, and a switching set between any two members of the class
/// can always be exhibited by brute force.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn even_representative_reachable_by_switching(
        (g, a) in graph_strategy(9).prop_filter("odd order", |g| g.order() % 2 == 1)
            .prop_flat_map(|g| {
                let a = set_strategy(&g);
                (Just(g), a)
            })
    ) {
        let n = g.order();
        let rep = g.even_representative().unwrap();
        prop_assert!(rep.is_even_graph());
        let other = g.switch(&a).even_representative().unwrap();
        prop_assert_eq!(&other, &rep);
        // Exhibit a switching set from g to its representative.
        let found = (0u64..1 << n).any(|bits| g.switch(&VertexSet::from_bits(n, bits)) == rep);
        prop_assert!(found);
    }
}

/// Fixed-seed statistical check: the modular rank equals the exact rank on
/// nearly every random order-17 Seidel matrix.
#[test]
fn modular_rank_is_usually_exact_at_order_17() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    let trials = 300;
    let mut equal = 0usize;
    for _ in 0..trials {
        let n = 17;
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(0.5))
            .collect::<Vec<_>>();
        let g = Graph::from_edges(n, edges).unwrap();
        let s = seidel_matrix(&g);
        let modular = rank_lower_bound_mod_p(&s, DEFAULT_FILTER_PRIME).unwrap();
        let exact = rank_exact(&s);
        assert!(modular <= exact);
        if modular == exact {
            equal += 1;
        }
    }
    assert!(
        equal * 100 >= trials * 99,
        "modular rank matched exact rank on only {equal}/{trials} matrices"
    );
}

/// Exhaustive at order 6: every one of the 2^15 labeled graphs has full
/// Seidel rank (even order is never singular), which also covers the
/// rank >= n - 1 bound.
#[test]
fn exhaustive_order_6_rank() {
    let n = 6;
    for mask in 0u32..1 << (n * (n - 1) / 2) {
        let mut bit = 0;
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| {
            let set = mask >> bit & 1 == 1;
            bit += 1;
            set
        });
        let g = Graph::from_edges(n, edges).unwrap();
        assert_eq!(rank_exact(&seidel_matrix(&g)), n);
    }
}

/// phi entries of the unbounded families stay odd and the leading entry
/// stays positive, at every depth the order cap allows.
#[test]
fn family_phi_normalization_is_stable() {
    use seidel::families::{Family, FamilySpec};
    for (family, range) in [(Family::G, 1..=15), (Family::H, 0..=7)] {
        for k in range {
            let expected = FamilySpec::new(family, k).expected_phi().unwrap();
            assert!(expected[0] > BigInt::from(0));
            assert!(expected.iter().all(|e| e % 2 != BigInt::from(0)));
        }
    }
}
