//! Lower-bound certificates for a weight vector given on the command line.

use majority::bounds::{certify_lower_bound, count_balanced, mu};
use majority::{solve_weighted, WeightVector};

fn main() {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "3,3,7,8,9".into());
    let w: WeightVector = arg.parse().expect("comma-separated weights");
    let p = count_balanced(&w);
    println!(
        "{w}: {p} balanced colorings, mu = {}, exact value {}",
        mu(&p),
        solve_weighted(&w)
    );
    for c in certify_lower_bound(&w) {
        let witness = serde_json::to_string(&c.witness).expect("witness");
        println!(
            "  {:>2} from {:<14} {witness}",
            c.bound,
            c.source.to_string()
        );
    }
}
