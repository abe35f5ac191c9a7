//! Exact game values for paths, cycles, stars and complete graphs.

use majority::bounds::b;
use majority::solver::GraphSolver;
use majority::Graph;

fn main() {
    println!(
        "{:>3} {:>6} {:>6} {:>6} {:>9} {:>8}",
        "n", "path", "cycle", "star", "complete", "n-b(n)"
    );
    for n in 3..=13 {
        let value = |g: Graph| GraphSolver::new(&g).expect("solvable").solve();
        println!(
            "{n:>3} {:>6} {:>6} {:>6} {:>9} {:>8}",
            value(Graph::path(n)),
            value(Graph::cycle(n)),
            value(Graph::star(n)),
            if n <= 10 {
                value(Graph::complete(n)).to_string()
            } else {
                "-".into()
            },
            n as u32 - b(n as u64),
        );
    }
}
