//! Sparse graphs on which n - b(n) queries suffice, with an exhaustive check
//! of the explicit querier.

use majority::bounds::b;
use majority::constructions::{build_minedge_graph, verify_querier, MinedgeQuerier};

fn main() {
    println!(
        "{:>3} {:>6} {:>10} {:>8} {:>7}",
        "n", "edges", "n(1+b(n))", "worst", "budget"
    );
    for n in 4..=14 {
        let c = build_minedge_graph(n).expect("n >= 2");
        let budget = n - b(n as u64) as usize;
        let r = verify_querier(&c.graph, &MinedgeQuerier::new(&c), budget).expect("verify");
        assert!(r.pass, "{:?}", r.failure);
        println!(
            "{n:>3} {:>6} {:>10} {:>8} {:>7}",
            c.graph.edge_count(),
            n * (1 + b(n as u64) as usize),
            r.max_queries,
            budget
        );
    }
}
