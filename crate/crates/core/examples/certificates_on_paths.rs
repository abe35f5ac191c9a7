//! Shortest certificates on paths: exhaustive worst cases for small n and the
//! explicit query sets on a long random coloring.

use majority::graph::{Color, Coloring};
use majority::nondet::{m_nd_witness, nondet_certificate, path_cert};
use majority::Graph;
use rand::{Rng, SeedableRng};

fn main() {
    for n in [4, 7, 9, 11] {
        let (v, c) = m_nd_witness(&Graph::path(n)).expect("path");
        println!("P{n}: m_nd = {v}, hardest coloring {c}");
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let c = Coloring(
        (0..201)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Color::Red
                } else {
                    Color::Blue
                }
            })
            .collect(),
    );
    let best = path_cert(&c).expect("path");
    let explicit = nondet_certificate(&c).expect("odd path");
    println!(
        "random P201: shortest certificate {}, explicit query set {}",
        best.size, explicit.size
    );
}
