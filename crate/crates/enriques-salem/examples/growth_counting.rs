//! Orbit growth: count group elements g with (g(delta), delta) <= r in
//! balls of increasing word length.
//!
//! Run with: cargo run --example growth_counting

use num::bigint::BigInt;
use num::rational::BigRational;

use enriques_salem::dynamics::{growth_count, GeneratorSet, SearchLimits};
use enriques_salem::involutions::EckardtConfig;

fn main() {
    let generators = GeneratorSet::hessian(&EckardtConfig::None);
    let delta = generators.delta.clone();
    let limits = SearchLimits::default();
    println!("growth of (g(delta), delta) over the projection-involution group");
    println!("{:>8} {:>8} {:>8} {:>10}", "r", "len", "N(r)", "elements");
    for max_length in 1..=3 {
        for r in [10i64, 50, 200, 1000] {
            let r = BigRational::from(BigInt::from(r));
            let summary = growth_count(&generators, &delta, &r, max_length, &limits).unwrap();
            println!(
                "{:>8} {:>8} {:>8} {:>10}",
                r.to_string(),
                max_length,
                summary.count,
                summary.elements
            );
        }
    }
}
