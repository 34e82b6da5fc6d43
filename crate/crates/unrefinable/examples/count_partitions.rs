//! Count unrefinable partitions over a range and check a few published
//! values (OEIS A179009).
//!
//! Run with `cargo run --release --example count_partitions`.

use unrefinable::{count_range, count_unrefinable, PUBLISHED_COUNTS};

fn main() {
    println!("N\tcount");
    for (n, count) in count_range(1, 60).rows {
        println!("{n}\t{count}");
    }

    for &(n, expected) in PUBLISHED_COUNTS.iter().filter(|&&(n, _)| n <= 200) {
        let computed = count_unrefinable(n);
        assert_eq!(computed, expected);
        println!("reference N={n}: {computed} matches the published value");
    }
}
