//! Even trees are hard: the tree adversary forces n-1 queries on every tree,
//! and a fixed coloring with no balanced cut edge forces the same.

use majority::adversary::{cut_balanced_edges, eventrees_coloring, TreeLemmaAdversary};
use majority::generate::free_trees;
use majority::solver::forced_queries;
use majority::strategy::{play, RandomQuerier};

fn main() {
    for n in [4, 6, 8] {
        let trees = free_trees(n);
        let forced: Vec<u32> = trees
            .iter()
            .map(|t| forced_queries(t, &TreeLemmaAdversary::new(t)).expect("even tree"))
            .collect();
        println!("n={n}: {} trees, forced counts {:?}", trees.len(), forced);
    }
    let t = majority::generate::random_tree(12, 7);
    let c = eventrees_coloring(&t).expect("even tree");
    println!(
        "coloring {c} has {} balanced cut edges",
        cut_balanced_edges(&t, &c).len()
    );
    let transcript = play(
        &t,
        &mut RandomQuerier::new(&t, 1),
        &mut TreeLemmaAdversary::new(&t),
    )
    .expect("play");
    print!("{transcript}");
}
