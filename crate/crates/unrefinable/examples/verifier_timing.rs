//! Rough timing comparison of the fast and naive verifiers on generated
//! unrefinable sequences (the same generator the `bench` subcommand
//! uses). Expect the gap to widen with length: the fast scan is close to
//! linear while the pair scan is quadratic.
//!
//! Run with `cargo run --release --example verifier_timing`.

use std::time::Instant;

use unrefinable::{random_unrefinable, verify_fast, verify_naive, StarSequence};

fn mean_ns(inputs: &[StarSequence], mut check: impl FnMut(&StarSequence)) -> u128 {
    let rounds = 50;
    let start = Instant::now();
    for _ in 0..rounds {
        for s in inputs {
            check(s);
        }
    }
    start.elapsed().as_nanos() / (rounds * inputs.len() as u128)
}

fn main() {
    println!("length\tfast(ns)\tnaive(ns)");
    for length in [250usize, 500, 1000, 2000, 4000] {
        let inputs: Vec<StarSequence> = (0..8)
            .map(|seed| random_unrefinable(length, seed))
            .collect();
        let fast = mean_ns(&inputs, |s| {
            std::hint::black_box(verify_fast(s));
        });
        let naive = mean_ns(&inputs, |s| {
            std::hint::black_box(verify_naive(s));
        });
        println!("{length}\t{fast}\t{naive}");
    }
}
