//! Runs every check suite and prints the summary lines.

use majority::suite::{run_suite, Suite};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    for s in Suite::ALL {
        let r = run_suite(s, seed);
        println!("{s:<14} {} passed, {} failed", r.passed, r.failed);
        for c in r.cases.iter().filter(|c| !c.pass) {
            println!(
                "  {}: expected {}, got {} ({})",
                c.case, c.expected, c.actual, c.repro
            );
        }
    }
}
