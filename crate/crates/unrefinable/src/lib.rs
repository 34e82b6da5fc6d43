//! Unrefinable partitions: verification, enumeration, and counting.
//!
//! A partition of `N` into distinct parts is *unrefinable* when no part
//! can be split into a sum of smaller integers without repeating a part
//! already present. For example `50 = 1 + 2 + 3 + 4 + 6 + 7 + 11 + 16` is
//! unrefinable, while `{2, 4}` is not, since `4 = 1 + 3` and neither 1
//! nor 3 is taken.
//!
//! Partitions are handled as [`StarSequence`]s, which mark the missing
//! integers explicitly: `{1, 2, 4}` is written `1 2 * 4`. On top of that
//! representation the crate offers:
//!
//! * [`verify_fast`] — decides refinability in `O(len + mex²)` by sieving
//!   forbidden values per residue class modulo the minimal excludant,
//!   along with the quadratic [`verify_naive`] and the subset-exhaustive
//!   [`verify_exhaustive`] used as cross-checking oracles;
//! * [`unrefinable_partitions`] / [`count_unrefinable`] — stream or count
//!   every unrefinable partition of `N` via a pruned depth-first search,
//!   with rayon-parallel variants for counting;
//! * [`PUBLISHED_COUNTS`] — reference counts matching OEIS A179009, used
//!   by the `table` subcommand and the acceptance tests.
//!
//! The `unrefinable` binary wraps all of this behind `verify`,
//! `enumerate`, `count`, `table`, and `bench` subcommands; the crate's
//! `examples/` directory shows each capability as a small program.

pub mod cli;
pub mod enumerate;
pub mod seq;
pub mod verify;

pub use enumerate::{
    count_range, count_range_parallel, count_unrefinable, count_unrefinable_parallel,
    enumerate_with_mex, random_unrefinable, triangular_root, unrefinable_partitions, CountTable,
    EnumerationSink, PUBLISHED_COUNTS,
};
pub use seq::{ParseError, Slot, StarSequence};
pub use verify::{
    verify_exhaustive, verify_exhaustive_bounded, verify_fast, verify_naive, OracleBoundExceeded,
    Refinement, ResidueTable, Verdict, DEFAULT_ORACLE_BOUND,
};
