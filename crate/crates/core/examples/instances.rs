//! Instance generators: counts of free trees and a random graph in text form.

use majority::generate::InstanceSpec;

fn main() {
    for n in 1..=12 {
        let spec: InstanceSpec = format!("free-trees:{n}").parse().expect("spec");
        println!("{spec}: {} trees", spec.generate().expect("trees").len());
    }
    let g = &"random-graph:6:0.4:2"
        .parse::<InstanceSpec>()
        .expect("spec")
        .generate()
        .expect("graph")[0];
    print!("{}", g.to_text());
}
