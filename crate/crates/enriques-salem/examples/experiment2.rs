//! Dynamical degrees of the compositions c_k when the first m double planes
//! carry a nodal (-2)-class: the full k/m grid and the m = 1 factor list.
//!
//! Run with: cargo run --example experiment2

use enriques_salem::dynamics::{analyze, GeneratorSet, Word};
use enriques_salem::involutions::Experiment;

fn main() {
    println!("dynamical degree grid, rows m = 0..4, columns k = 3..10");
    print!("{:>3}", "m");
    for k in 3..=10 {
        print!("  {k:>8}");
    }
    println!();
    for m in 0..=4u8 {
        let generators = GeneratorSet::experiment(Experiment::Two(m)).expect("family builds");
        print!("{m:>3}");
        for k in 3..=10 {
            let report = analyze(&generators, &Word::new((1..=k).collect())).unwrap();
            let lambda = report
                .lambda
                .as_ref()
                .map(|sr| sr.display(2))
                .unwrap_or_else(|| "1".into());
            print!("  {lambda:>8}");
        }
        println!();
    }

    println!();
    println!("salem factors for m = 1:");
    let generators = GeneratorSet::experiment(Experiment::Two(1)).unwrap();
    for k in 3..=10 {
        let report = analyze(&generators, &Word::new((1..=k).collect())).unwrap();
        println!("  c_{k}: {}", report.salem_factor().unwrap().pretty("x"));
    }
}
