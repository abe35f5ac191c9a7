//! Forced query counts of the banded cover adversary on odd paths.

use majority::adversary::CoveringAdversary;
use majority::solver::{forced_search, solve_graph};
use majority::Graph;

fn main() {
    println!("{:>3} {:>8} {:>8} {:>4}", "n", "stride 8", "stride 9", "m");
    for n in (5..=11).step_by(2) {
        let g = Graph::path(n);
        let forced = |s| {
            forced_search(&g, &CoveringAdversary::oddpath(n, s).expect("odd"))
                .expect("search")
                .value
        };
        println!(
            "{n:>3} {:>8} {:>8} {:>4}",
            forced(8),
            forced(9),
            solve_graph(&g).expect("path")
        );
    }
}
