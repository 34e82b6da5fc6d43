//! Decide refinability of a few partitions with all three verifiers.
//!
//! Run with `cargo run --example check_refinability`.

use unrefinable::{verify_exhaustive, verify_fast, verify_naive, StarSequence};

fn main() {
    let inputs = [
        // 50 = 1+2+3+4+6+7+11+16: no part splits into unused integers.
        "1 2 3 4 * 6 7 * * * 11 * * * * 16",
        // 15 = 6 + 9 with both 6 and 9 missing, so this one refines.
        "1 2 3 4 5 * 7 8 * * 11 12 13 * 15",
        "* 2 * 4",
        "1 2 * 4",
        "1 2 3",
    ];

    for text in inputs {
        let seq: StarSequence = text.parse().expect("valid star sequence");
        let fast = verify_fast(&seq);
        let naive = verify_naive(&seq);
        let exhaustive = verify_exhaustive(&seq).expect("within oracle bound");

        assert_eq!(fast.is_refinable(), naive.is_refinable());
        assert_eq!(fast.is_refinable(), exhaustive.is_refinable());

        let verdict = if fast.is_refinable() {
            "REFINABLE"
        } else {
            "UNREFINABLE"
        };
        print!("{text:40} -> {verdict}");
        // The pair oracle also explains *why* something is refinable.
        if let Some(witness) = naive.witness() {
            let pieces: Vec<String> = witness.pieces.iter().map(|p| p.to_string()).collect();
            print!("  ({} = {})", witness.part, pieces.join(" + "));
        }
        println!();
    }
}
