//! Salem factors of the prefix compositions c_k = g_12 g_23 ... g_k,k+1 of
//! general double-plane involutions on the rank-10 lattice.
//!
//! Run with: cargo run --example experiment1

use enriques_salem::dynamics::{analyze, GeneratorSet, Word};
use enriques_salem::involutions::Experiment;

fn main() {
    let generators = GeneratorSet::experiment(Experiment::One).expect("family builds");
    println!("prefix compositions of general double-plane involutions");
    println!("{:>4}  {:>10}  salem factor", "k", "lambda");
    for k in 2..=10 {
        let word = Word::new((1..=k).collect());
        let report = analyze(&generators, &word).expect("analysis succeeds");
        match (&report.lambda, report.salem_factor()) {
            (Some(sr), Some(salem)) => {
                println!("{k:>4}  {:>10}  {}", sr.display(4), salem.pretty("x"));
            }
            _ => println!("{k:>4}  {:>10}  (not hyperbolic)", "1.0000"),
        }
    }
}
