//! Stream every unrefinable partition of an integer through a sink.
//!
//! Run with `cargo run --example enumerate_partitions [N]` (default 50).

use unrefinable::{enumerate_with_mex, triangular_root, unrefinable_partitions, StarSequence};

fn main() {
    let n: u64 = std::env::args()
        .nth(1)
        .map(|arg| arg.parse().expect("N must be a positive integer"))
        .unwrap_or(50);

    // Any FnMut(&StarSequence) works as a sink; partitions arrive in a
    // deterministic order and are never buffered by the enumerator.
    println!("unrefinable partitions of {n}:");
    let mut total = 0u64;
    unrefinable_partitions(n, &mut |seq: &StarSequence| {
        total += 1;
        let parts: Vec<String> = seq.parts().map(|p| p.to_string()).collect();
        println!("  {seq}  (parts: {})", parts.join(" "));
    });
    println!("total: {total}");

    // Restricting to one minimal excludant runs a single search branch.
    let (root, _) = triangular_root(n);
    for mex in (1..=root).rev() {
        let mut count = 0u64;
        enumerate_with_mex(n, mex, &mut |_: &StarSequence| count += 1);
        if count > 0 {
            println!("mex {mex}: {count}");
        }
    }
}
