//! Exact values of the weighted-ball game next to the counting bound.

use majority::bounds::dectree_bound;
use majority::{solve_weighted, WeightVector};

fn main() {
    let vectors = [
        "1,1,1,1,1,1,1,1",
        "1,2,3,4,5,6,7",
        "3,3,7,8,9",
        "3,3,5,5,5",
        "2,1,1",
        "5,5,5,5,2",
    ];
    println!("{:<18} {:>5} {:>14}", "weights", "m", "counting bound");
    for text in vectors {
        let w: WeightVector = text.parse().expect("weights");
        println!(
            "{:<18} {:>5} {:>14}",
            text,
            solve_weighted(&w),
            dectree_bound(&w).bound
        );
    }
}
