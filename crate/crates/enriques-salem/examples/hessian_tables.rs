//! Small Salem numbers from words of projection involutions, for the general
//! configuration and for the specialization with six degenerate projections.
//!
//! Words are 1-based indices into the pair order
//! 12, 13, 14, 15, 23, 24, 25, 34, 35, 45.
//!
//! Run with: cargo run --example hessian_tables

use enriques_salem::dynamics::{analyze, GeneratorSet, Word};
use enriques_salem::involutions::EckardtConfig;

fn show(generators: &GeneratorSet, words: &[&[usize]]) {
    println!("{:>3}  {:>12}  word / salem factor", "d", "lambda");
    for &word in words {
        let report = analyze(generators, &Word::new(word.to_vec())).unwrap();
        let lambda = report.lambda.as_ref().expect("hyperbolic word");
        println!(
            "{:>3}  {:>12}  {:?}",
            report.salem_degree,
            lambda.display(4),
            word
        );
        println!("{:>19}  {}", "", report.salem_factor().unwrap().pretty("x"));
    }
}

fn main() {
    println!("general configuration (no degenerate projections):");
    let general = GeneratorSet::hessian(&EckardtConfig::None);
    show(
        &general,
        &[
            &[1, 2, 3, 4, 5, 6, 7],
            &[2, 6, 1, 3],
            &[1, 2, 3, 4, 5, 6, 8],
            &[2, 3, 1, 8, 9, 10],
        ],
    );

    println!();
    println!("specialized configuration (projections within {{1,2,3,4}} degenerate):");
    let special = GeneratorSet::hessian(&EckardtConfig::Standard6);
    show(
        &special,
        &[
            &[7, 8, 10, 1, 4],
            &[2, 5, 8, 7, 10],
            &[6, 8, 7, 1, 9, 4],
            &[7, 8, 9, 2],
            &[1, 5, 8, 4, 7, 5, 4, 10],
        ],
    );
}
