//! The optimal querier against the optimal adversary on a small graph.

use majority::solver::{OptimalAdversary, OptimalQuerier};
use majority::strategy::play;
use majority::Graph;

fn main() {
    let g = Graph::cycle(9);
    let mut q = OptimalQuerier::new(&g).expect("solvable");
    let mut a = OptimalAdversary::sharing(&q);
    let t = play(&g, &mut q, &mut a).expect("play");
    print!("{t}");
    println!("{} queries", t.len());
}
