//! Exhaustive search for small Salem numbers over the projection-involution
//! family, with certified enclosures for the minima.
//!
//! Run with: cargo run --release --example salem_search

use enriques_salem::dynamics::{exhaustive_search, GeneratorSet};
use enriques_salem::involutions::EckardtConfig;

fn main() {
    let generators = GeneratorSet::hessian(&EckardtConfig::Standard6);
    let max_length = 5;
    let summary = exhaustive_search(&generators, max_length, true).expect("search runs");
    println!(
        "exhaustive search, distinct letters, length <= {max_length}: {} words, {} classes",
        summary.words_examined, summary.dedup_classes
    );
    for (degree, report) in &summary.minima {
        let lambda = report.lambda.as_ref().unwrap();
        println!(
            "degree {degree}: lambda in [{}, {}] ~ {}",
            lambda.lower, lambda.upper, lambda.decimal_hint
        );
        println!(
            "  witness {} with factor {}",
            report.word,
            report.salem_factor().unwrap().pretty("x")
        );
    }
}
