//! Randomized invariants of the solvers, strategies and certificates.

use proptest::prelude::*;

use majority::bounds::{b, best_lower_bound, dectree_bound};
use majority::generate::{random_connected, random_tree, tree_canonical_form};
use majority::graph::{Color, Coloring};
use majority::nondet::{cert, certify, nondet_query_set, path_cert};
use majority::solver::{forced_queries, solve_graph, OptimalQuerier};
use majority::strategy::{play, Adversary, ColoringAdversary, RandomAdversary, RandomQuerier, Transcript};
use majority::weighted::{relevant_count, weighted_terminal};
use majority::{solve_weighted, Graph, WeightVector};

fn weights() -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(0u64..=9, 1..=7).prop_map(WeightVector::new)
}

fn coloring(max: usize) -> impl Strategy<Value = Coloring> {
    prop::collection::vec(any::<bool>(), 1..=max)
        .prop_map(|v| Coloring(v.into_iter().map(|r| if r { Color::Red } else { Color::Blue }).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn value_sits_between_bounds(w in weights()) {
        let m = solve_weighted(&w);
        prop_assert!(best_lower_bound(&w) <= m);
        prop_assert!(dectree_bound(&w).bound <= m);
        prop_assert!(m <= w.trivial_upper_bound());
    }

    #[test]
    fn some_answer_keeps_the_value_up(w in weights()) {
        let m = solve_weighted(&w);
        prop_assume!(weighted_terminal(&w).is_none());
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                let worst = [true, false].iter().map(|&s| solve_weighted(&w.merged(i, j, s))).max().unwrap();
                prop_assert!(worst + 1 >= m);
            }
        }
    }

    #[test]
    fn terminal_means_at_most_one_relevant(w in weights()) {
        prop_assert_eq!(weighted_terminal(&w).is_some(), relevant_count(&w) <= 1);
    }

    #[test]
    fn random_graphs_respect_the_window(n in 2usize..=8, p in 0.0f64..0.6, seed in any::<u64>()) {
        let g = random_connected(n, p, seed);
        let m = solve_graph(&g).unwrap();
        prop_assert!(n as u32 - b(n as u64) <= m && m < n as u32);
    }

    #[test]
    fn optimal_play_is_correct_against_any_coloring(n in 2usize..=8, seed in any::<u64>(), mask in any::<u64>()) {
        let g = random_tree(n, seed);
        let c = Coloring::from_mask(n, mask);
        let m = solve_graph(&g).unwrap();
        let t = play(&g, &mut OptimalQuerier::new(&g).unwrap(), &mut ColoringAdversary::new(c.clone())).unwrap();
        prop_assert!(t.len() as u32 <= m);
        prop_assert!(t.outcome.is_correct_for(&c));
    }

    #[test]
    fn transcripts_round_trip(n in 2usize..=12, seed in any::<u64>()) {
        let g = random_tree(n, seed);
        let t = play(&g, &mut RandomQuerier::new(&g, seed), &mut RandomAdversary::new(seed ^ 1)).unwrap();
        let back: Transcript = t.to_string().parse().unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert!(back.replay(&g).is_ok());
    }

    #[test]
    fn fixed_adversaries_are_weaker(n in 2usize..=7, seed in any::<u64>(), mask in any::<u64>()) {
        let g = random_tree(n, seed);
        let c = Coloring::from_mask(n, mask);
        let a = ColoringAdversary::new(c);
        prop_assert!(forced_queries(&g, &a as &dyn Adversary).unwrap() <= solve_graph(&g).unwrap());
    }

    #[test]
    fn path_certificates_match_subset_search(c in coloring(10)) {
        let g = Graph::path(c.len());
        prop_assert_eq!(cert(&g, &c).unwrap().size, path_cert(&c).unwrap().size);
    }

    #[test]
    fn query_sets_certify(c in coloring(150)) {
        prop_assume!(c.len() % 2 == 1);
        let q = nondet_query_set(&c).unwrap();
        let r = certify(&Graph::path(c.len()), &c, q).unwrap();
        prop_assert!(r.size >= path_cert(&c).unwrap().size);
    }

    #[test]
    fn relabelled_trees_keep_their_value(n in 2usize..=9, seed in any::<u64>(), shift in 0usize..9) {
        let g = random_tree(n, seed);
        let perm = |v: usize| (v + shift) % n;
        let h = Graph::new(n, g.edges().iter().map(|&(u, v)| (perm(u), perm(v)))).unwrap();
        prop_assert_eq!(tree_canonical_form(&g), tree_canonical_form(&h));
        prop_assert_eq!(solve_graph(&g).unwrap(), solve_graph(&h).unwrap());
    }
}
