//! The odd-tree adversary against a random querier on a random 31-vertex tree.

use majority::adversary::Lefogo2Adversary;
use majority::generate::random_tree;
use majority::strategy::{play, Adversary, RandomQuerier};

fn main() {
    for p in [32, 8, 4] {
        let t = random_tree(31, 11);
        let mut adv = Lefogo2Adversary::with_p(&t, p).expect("odd tree");
        let tr = play(&t, &mut RandomQuerier::new(&t, 5), &mut adv).expect("play");
        println!(
            "p={p:>2}: {} queries, outcome {}, {} violations",
            tr.len(),
            tr.outcome,
            adv.violations().len()
        );
    }
}
