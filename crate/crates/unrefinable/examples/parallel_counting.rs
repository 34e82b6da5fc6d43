//! Compare sequential and parallel counting.
//!
//! Ranges are distributed row by row; a single large N is split across
//! its minimal-excludant branches. Both give exactly the sequential
//! results.
//!
//! Run with `cargo run --release --example parallel_counting`.

use std::time::Instant;

use unrefinable::{count_range, count_range_parallel, count_unrefinable_parallel};

fn main() {
    let jobs = std::thread::available_parallelism().map_or(2, |p| p.get());

    let start = Instant::now();
    let sequential = count_range(1, 250);
    let sequential_time = start.elapsed();

    let start = Instant::now();
    let parallel = count_range_parallel(1, 250, jobs);
    let parallel_time = start.elapsed();

    assert_eq!(sequential, parallel);
    println!("range 1..250: sequential {sequential_time:?}, parallel {parallel_time:?} ({jobs} jobs)");

    let start = Instant::now();
    let count = count_unrefinable_parallel(400, jobs);
    println!(
        "N = 400: {count} partitions, branch-parallel in {:?}",
        start.elapsed()
    );
}
