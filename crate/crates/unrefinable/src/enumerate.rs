//! Enumeration and counting of all unrefinable partitions of an integer.
//!
//! The search space splits by minimal excludant. Writing `n` for the
//! largest integer with `n(n+1)/2 <= N`: the all-parts sequence
//! `(1, 2, ..., n)` is the unique unrefinable partition of `N` without a
//! star when `N` is triangular, and every other unrefinable partition of
//! `N` is represented by exactly one star sequence that starts with the
//! prefix `(1, ..., mex-1, *)` and does not end with a star. Each prefix
//! roots a binary tree: a node of length `l` extends with the part `l+1`
//! or with a star. The walk keeps the same residue table the fast
//! verifier would compute on the node's sequence, so a part extension is
//! attempted only when it cannot create a refinement, and a star branch
//! is cut as soon as the table saturates (no later part could ever be
//! appended again).
//!
//! Emission order is deterministic: the triangular sequence first, then
//! branches by decreasing minimal excludant, depth first with the part
//! extension explored before the star extension.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::seq::{Slot, StarSequence};
use crate::verify::ResidueTable;

/// Reference counts of unrefinable partitions for selected N
/// (cf. OEIS A179009). Used by the `table` subcommand and the acceptance
/// tests.
pub const PUBLISHED_COUNTS: [(u64, u64); 16] = [
    (10, 1),
    (20, 7),
    (30, 5),
    (40, 9),
    (50, 15),
    (100, 104),
    (200, 1616),
    (300, 11801),
    (400, 57725),
    (500, 275151),
    (1000, 84527031),
    (1100, 220124218),
    (1200, 559471992),
    (1300, 1383113838),
    (1400, 3357904448),
    (1500, 7734760269),
];

/// Consumer of enumerated partitions.
///
/// Receives each unrefinable partition of the target exactly once, in the
/// deterministic order described in the module docs. Return
/// `ControlFlow::Break(())` to stop the enumeration early. Any
/// `FnMut(&StarSequence)` closure is a sink that never stops early.
pub trait EnumerationSink {
    fn emit(&mut self, partition: &StarSequence) -> ControlFlow<()>;
}

impl<F: FnMut(&StarSequence)> EnumerationSink for F {
    fn emit(&mut self, partition: &StarSequence) -> ControlFlow<()> {
        self(partition);
        ControlFlow::Continue(())
    }
}

/// Counting table: rows `(N, number of unrefinable partitions of N)` in
/// ascending `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub rows: Vec<(u64, u64)>,
}

/// Largest `n` with `n(n+1)/2 <= value`, and whether equality holds
/// (i.e. whether `value` is triangular).
pub fn triangular_root(value: u64) -> (usize, bool) {
    let wide = value as u128;
    let mut root = (8 * wide + 1).isqrt().saturating_sub(1) / 2;
    while (root + 1) * (root + 2) / 2 <= wide {
        root += 1;
    }
    while root * (root + 1) / 2 > wide {
        root -= 1;
    }
    (root as usize, root * (root + 1) / 2 == wide)
}

/// Hook into the branch walk, used by tests to inspect every node the
/// search visits. The public entry points install the no-op observer.
pub(crate) trait NodeObserver {
    fn observe(&mut self, seq: &StarSequence, table: &ResidueTable, running_sum: u64);
}

pub(crate) struct NoObserver;

impl NodeObserver for NoObserver {
    fn observe(&mut self, _: &StarSequence, _: &ResidueTable, _: u64) {}
}

/// Depth bound for the plain recursive walk; deeper searches (only
/// reachable for astronomically large targets) switch to the explicit
/// stack so the thread stack cannot overflow.
const RECURSION_DEPTH_LIMIT: usize = 10_000;

/// Depth-first walk of one minimal-excludant branch.
///
/// Every visited node is an unrefinable, unsaturated sequence with the
/// branch prefix and a sum below the target; a node of length `l` extends
/// with the part `l+1` when the residue table allows it and with a star
/// when the updated table is not saturated. Node lengths stay within
/// roughly twice the triangular root of the target, so the recursive
/// walker applies except for extreme targets.
pub(crate) fn walk_branch<S, O>(
    target: u64,
    mex: usize,
    sink: &mut S,
    observer: &mut O,
) -> ControlFlow<()>
where
    S: EnumerationSink + ?Sized,
    O: NodeObserver,
{
    let (bound, _) = triangular_root(target);
    assert!(
        mex >= 1 && mex <= bound,
        "mex {mex} out of range: must lie in 1..={bound} for target {target}"
    );
    let depth_estimate = 2 * bound + mex + 16;
    if depth_estimate <= RECURSION_DEPTH_LIMIT {
        walk_recursive(target, mex, sink, observer)
    } else {
        walk_stack(target, mex, sink, observer)
    }
}

/// Recursive walker: one shared table with an undo journal, so a node
/// costs a handful of table writes instead of a table copy.
fn walk_recursive<S, O>(
    target: u64,
    mex: usize,
    sink: &mut S,
    observer: &mut O,
) -> ControlFlow<()>
where
    S: EnumerationSink + ?Sized,
    O: NodeObserver,
{
    let mut seq = StarSequence::new();
    for _ in 1..mex {
        seq.push(Slot::Part);
    }
    seq.push(Slot::Missing);
    let mut walk = RecursiveWalk {
        target,
        mex,
        sink,
        observer,
        seq,
        table: ResidueTable::new(mex),
        journal: Vec::new(),
    };
    let prefix_sum = (mex as u64 - 1) * (mex as u64) / 2;
    walk.visit((mex + 1) % mex, 0, prefix_sum)
}

struct RecursiveWalk<'a, S: ?Sized, O> {
    target: u64,
    mex: usize,
    sink: &'a mut S,
    observer: &'a mut O,
    seq: StarSequence,
    table: ResidueTable,
    journal: Vec<(u32, Option<u64>)>,
}

impl<S, O> RecursiveWalk<'_, S, O>
where
    S: EnumerationSink + ?Sized,
    O: NodeObserver,
{
    /// `next_class` is `(len + 1) % mex` and `below` counts the table
    /// entries at most `len`, both maintained incrementally.
    fn visit(&mut self, next_class: usize, below: usize, running_sum: u64) -> ControlFlow<()> {
        self.observer.observe(&self.seq, &self.table, running_sum);

        let len = self.seq.len();
        let next64 = (len + 1) as u64;
        let entry = self.table.entry(next_class);
        let part_allowed = !entry.is_some_and(|p| next64 >= p);
        let sum_with_next = running_sum + next64;
        let child_class = if next_class + 1 == self.mex {
            0
        } else {
            next_class + 1
        };
        // Entries only ever equal `next` in its own residue class, so the
        // children's below-count grows by at most this one entry.
        let growth = usize::from(entry == Some(next64));
        debug_assert!(growth == 0 || !part_allowed);

        if part_allowed && sum_with_next == self.target {
            self.seq.push(Slot::Part);
            let flow = self.sink.emit(&self.seq);
            self.seq.truncate(len);
            flow?;
        } else if part_allowed && sum_with_next < self.target {
            self.seq.push(Slot::Part);
            self.visit(child_class, below + growth, sum_with_next)?;
            self.seq.truncate(len);
        }

        let mark = self.journal.len();
        let mut star_below = below + growth;
        self.table
            .update_journaled(next64, next_class, next64, &mut star_below, &mut self.journal);
        if star_below < self.mex {
            self.seq.push(Slot::Missing);
            self.visit(child_class, star_below, running_sum)?;
            self.seq.truncate(len);
        }
        self.table.rollback(&mut self.journal, mark);
        ControlFlow::Continue(())
    }
}

struct Frame {
    parent_len: usize,
    slot: Slot,
    running_sum: u64,
    /// Residue class of the next index to place, `(parent_len + 2) % mex`.
    next_class: usize,
    /// `|{classes with entry <= node length}|`; saturation is
    /// `below == mex`.
    below: usize,
    table: ResidueTable,
}

/// Explicit-stack walker for depths beyond [`RECURSION_DEPTH_LIMIT`].
/// Same visit order as [`walk_recursive`]; each frame owns its node's
/// table, with a small buffer pool absorbing the copies.
fn walk_stack<S, O>(target: u64, mex: usize, sink: &mut S, observer: &mut O) -> ControlFlow<()>
where
    S: EnumerationSink + ?Sized,
    O: NodeObserver,
{
    let mut seq = StarSequence::new();
    for _ in 1..mex {
        seq.push(Slot::Part);
    }
    let prefix_sum = (mex as u64 - 1) * (mex as u64) / 2;

    let mut stack = vec![Frame {
        parent_len: mex - 1,
        slot: Slot::Missing,
        running_sum: prefix_sum,
        next_class: (mex + 1) % mex,
        below: 0,
        table: ResidueTable::new(mex),
    }];
    let mut spare_tables: Vec<ResidueTable> = Vec::new();

    while let Some(frame) = stack.pop() {
        seq.truncate(frame.parent_len);
        seq.push(frame.slot);
        observer.observe(&seq, &frame.table, frame.running_sum);

        let len = seq.len();
        let next64 = (len + 1) as u64;
        let class = frame.next_class;
        let entry = frame.table.entry(class);
        let part_allowed = !entry.is_some_and(|p| next64 >= p);
        let sum_with_next = frame.running_sum + next64;
        let child_class = if class + 1 == mex { 0 } else { class + 1 };
        let growth = usize::from(entry == Some(next64));

        if part_allowed && sum_with_next == target {
            seq.push(Slot::Part);
            let flow = sink.emit(&seq);
            seq.truncate(len);
            flow?;
        }
        let push_part = part_allowed && sum_with_next < target;

        // The star child needs an updated table; copy only when the parent
        // table is still wanted for a part child.
        let (mut star_table, part_table) = if push_part {
            let copy = match spare_tables.pop() {
                Some(mut spare) => {
                    spare.copy_from(&frame.table);
                    spare
                }
                None => frame.table.clone(),
            };
            (copy, Some(frame.table))
        } else {
            (frame.table, None)
        };

        let mut star_below = frame.below + growth;
        star_table.update_in_class(next64, class, next64, &mut star_below);
        if star_below == mex {
            // Saturated: no extension of the star child ever takes a part.
            spare_tables.push(star_table);
        } else {
            stack.push(Frame {
                parent_len: len,
                slot: Slot::Missing,
                running_sum: frame.running_sum,
                next_class: child_class,
                below: star_below,
                table: star_table,
            });
        }
        // Pushed after the star child so it is explored first.
        if let Some(table) = part_table {
            stack.push(Frame {
                parent_len: len,
                slot: Slot::Part,
                running_sum: sum_with_next,
                next_class: child_class,
                below: frame.below + growth,
                table,
            });
        }
    }
    ControlFlow::Continue(())
}

/// Emits every unrefinable partition of `target` whose minimal excludant
/// is `mex`, not ending with a star, each exactly once.
///
/// Panics unless `1 <= mex <= n` where `n` is the triangular root of
/// `target`.
pub fn enumerate_with_mex<S>(target: u64, mex: usize, sink: &mut S)
where
    S: EnumerationSink + ?Sized,
{
    let _ = walk_branch(target, mex, sink, &mut NoObserver);
}

/// Emits every unrefinable partition of `target` exactly once: the
/// all-parts sequence first when `target` is triangular, then each
/// minimal-excludant branch from the triangular root down to 1.
pub fn unrefinable_partitions<S>(target: u64, sink: &mut S)
where
    S: EnumerationSink + ?Sized,
{
    assert!(target >= 1, "target must be positive");
    let (root, is_triangular) = triangular_root(target);
    if is_triangular {
        let mut full = StarSequence::new();
        for _ in 0..root {
            full.push(Slot::Part);
        }
        if sink.emit(&full).is_break() {
            return;
        }
    }
    for mex in (1..=root).rev() {
        if walk_branch(target, mex, sink, &mut NoObserver).is_break() {
            return;
        }
    }
}

/// Number of unrefinable partitions of `target`.
pub fn count_unrefinable(target: u64) -> u64 {
    let mut count: u64 = 0;
    unrefinable_partitions(target, &mut |_: &StarSequence| {
        count = count.checked_add(1).expect("partition count overflowed u64");
    });
    count
}

/// Like [`count_unrefinable`], distributing the minimal-excludant
/// branches over a pool of `jobs` worker threads.
pub fn count_unrefinable_parallel(target: u64, jobs: usize) -> u64 {
    assert!(target >= 1, "target must be positive");
    assert!(jobs >= 1, "need at least one worker");
    let (root, is_triangular) = triangular_root(target);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("failed to build worker pool");
    let branches: Vec<usize> = (1..=root).collect();
    let branch_total: u128 = pool.install(|| {
        branches
            .into_par_iter()
            .map(|mex| {
                let mut count: u64 = 0;
                enumerate_with_mex(target, mex, &mut |_: &StarSequence| {
                    count = count.checked_add(1).expect("partition count overflowed u64");
                });
                count as u128
            })
            .sum()
    });
    u64::try_from(branch_total + u128::from(is_triangular))
        .expect("partition count overflowed u64")
}

/// Counts for every `N` in `from..=to`, ascending.
pub fn count_range(from: u64, to: u64) -> CountTable {
    assert!(1 <= from && from <= to, "invalid range {from}..{to}");
    CountTable {
        rows: (from..=to).map(|n| (n, count_unrefinable(n))).collect(),
    }
}

/// Like [`count_range`], distributing rows over `jobs` worker threads.
/// Row order in the result is still ascending.
pub fn count_range_parallel(from: u64, to: u64, jobs: usize) -> CountTable {
    assert!(1 <= from && from <= to, "invalid range {from}..{to}");
    assert!(jobs >= 1, "need at least one worker");
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("failed to build worker pool");
    let values: Vec<u64> = (from..=to).collect();
    let rows = pool.install(|| {
        values
            .into_par_iter()
            .map(|n| (n, count_unrefinable(n)))
            .collect()
    });
    CountTable { rows }
}

/// A pseudo-random unrefinable sequence of exactly `length` slots,
/// deterministic in `seed`.
///
/// The sequence is produced by a random walk over the same tree the
/// enumeration visits: a part is appended only when the residue table
/// allows it, a star sometimes. Star choices are confined to indexes in
/// the minimal excludant's own residue class; sums of such values stay in
/// that class, so the table never saturates and the walk keeps producing
/// parts at every scale. Uniformly random slot patterns would be
/// refinable within a few indexes, and greedier star policies saturate
/// the table, leaving degenerate all-star tails; both trivialize verifier
/// timings.
pub fn random_unrefinable(length: usize, seed: u64) -> StarSequence {
    if length == 0 {
        return StarSequence::new();
    }
    let mut state = seed;
    let root = ((length as u64).isqrt() as usize).max(1);
    let low = (root / 2).max(1);
    let mex = (low + next_u64(&mut state) as usize % (root - low + 1)).clamp(1, length);
    let mut seq = StarSequence::new();
    for _ in 1..mex {
        seq.push(Slot::Part);
    }
    seq.push(Slot::Missing);
    let mut table = ResidueTable::new(mex);
    for index in (mex + 1)..=length {
        let starrable = index % mex == 0;
        if table.forbids(index) || (starrable && next_u64(&mut state) & 1 == 0) {
            table.update(index as u64);
            seq.push(Slot::Missing);
        } else {
            seq.push(Slot::Part);
        }
    }
    seq
}

// SplitMix64; good enough to drive the generator without extra deps.
fn next_u64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_exhaustive_bounded, verify_fast};
    use std::collections::{BTreeSet, HashMap};

    fn collect_all(target: u64) -> Vec<String> {
        let mut out = Vec::new();
        unrefinable_partitions(target, &mut |s: &StarSequence| out.push(s.to_string()));
        out
    }

    fn collect_branch(target: u64, mex: usize) -> Vec<String> {
        let mut out = Vec::new();
        enumerate_with_mex(target, mex, &mut |s: &StarSequence| out.push(s.to_string()));
        out
    }

    #[test]
    fn triangular_root_examples() {
        assert_eq!(triangular_root(10), (4, true));
        assert_eq!(triangular_root(50), (9, false));
        assert_eq!(triangular_root(7), (3, false));
        assert_eq!(triangular_root(1), (1, true));
        assert_eq!(triangular_root(2), (1, false));
        assert_eq!(triangular_root(0), (0, true));
        assert_eq!(triangular_root(1500), (54, false));
    }

    #[test]
    fn branch_examples() {
        assert_eq!(collect_branch(7, 3), vec!["1 2 * 4"]);
        assert!(collect_branch(10, 1).is_empty());
        assert!(collect_branch(6, 2).is_empty());
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn branch_rejects_mex_beyond_root() {
        enumerate_with_mex(10, 5, &mut |_: &StarSequence| {});
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn branch_rejects_mex_zero() {
        enumerate_with_mex(10, 0, &mut |_: &StarSequence| {});
    }

    #[test]
    fn full_enumeration_examples() {
        assert_eq!(collect_all(10), vec!["1 2 3 4"]);
        assert_eq!(collect_all(6), vec!["1 2 3"]);
        assert_eq!(collect_all(20).len(), 7);
        // Hand-traced order: the mex-2 branch comes before the mex-1 branch.
        assert_eq!(collect_all(5), vec!["1 * * 4", "* 2 3"]);
    }

    #[test]
    fn sinks_can_stop_early() {
        struct FirstOnly(Vec<String>);
        impl EnumerationSink for FirstOnly {
            fn emit(&mut self, partition: &StarSequence) -> ControlFlow<()> {
                self.0.push(partition.to_string());
                ControlFlow::Break(())
            }
        }
        let mut sink = FirstOnly(Vec::new());
        unrefinable_partitions(20, &mut sink);
        assert_eq!(sink.0.len(), 1);

        let mut sink = FirstOnly(Vec::new());
        let flow = walk_stack(20, 2, &mut sink, &mut NoObserver);
        assert!(flow.is_break());
        assert_eq!(sink.0.len(), 1);
    }

    #[test]
    fn stack_walker_matches_recursive_walker() {
        for n in [2u64, 7, 20, 36, 45] {
            let (root, _) = triangular_root(n);
            for mex in 1..=root {
                let mut recursive = Vec::new();
                let _ = walk_recursive(
                    n,
                    mex,
                    &mut |s: &StarSequence| recursive.push(s.to_string()),
                    &mut NoObserver,
                );
                let mut stack = Vec::new();
                let _ = walk_stack(
                    n,
                    mex,
                    &mut |s: &StarSequence| stack.push(s.to_string()),
                    &mut NoObserver,
                );
                assert_eq!(recursive, stack, "walkers disagree for N={n} mex={mex}");
            }
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_unrefinable(1), 1);
        assert_eq!(count_unrefinable(50), 15);
        assert_eq!(count_unrefinable(100), 104);
    }

    #[test]
    fn count_range_examples() {
        assert_eq!(count_range(10, 10).rows, vec![(10, 1)]);
        let table = count_range(40, 50);
        assert_eq!(table.rows.first(), Some(&(40, 9)));
        assert_eq!(table.rows.last(), Some(&(50, 15)));
        // {3} refines as 1 + 2, so N = 3 has the single partition {1, 2}.
        assert_eq!(count_range(1, 3).rows, vec![(1, 1), (2, 1), (3, 1)]);
    }

    #[test]
    fn parallel_matches_sequential() {
        assert_eq!(count_range_parallel(1, 60, 3), count_range(1, 60));
        assert_eq!(count_unrefinable_parallel(120, 4), count_unrefinable(120));
    }

    fn distinct_partitions(n: u64) -> Vec<Vec<usize>> {
        fn extend(remaining: u64, min_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if remaining == 0 {
                out.push(current.clone());
                return;
            }
            let mut part = min_part;
            while (part as u64) <= remaining {
                current.push(part);
                extend(remaining - part as u64, part + 1, current, out);
                current.pop();
                part += 1;
            }
        }
        let mut out = Vec::new();
        extend(n, 1, &mut Vec::new(), &mut out);
        out
    }

    fn canonical(parts: &[usize]) -> StarSequence {
        let len = *parts.last().unwrap();
        let mut slots = vec![Slot::Missing; len];
        for &p in parts {
            slots[p - 1] = Slot::Part;
        }
        StarSequence::from_slots(slots)
    }

    #[test]
    fn matches_brute_force_up_to_30() {
        for n in 1..=30u64 {
            let expected: BTreeSet<String> = distinct_partitions(n)
                .iter()
                .map(|parts| canonical(parts))
                .filter(|s| verify_exhaustive_bounded(s, 32).unwrap().is_unrefinable())
                .map(|s| s.to_string())
                .collect();
            let emitted = collect_all(n);
            let emitted_set: BTreeSet<String> = emitted.iter().cloned().collect();
            assert_eq!(emitted_set.len(), emitted.len(), "duplicate output for {n}");
            assert_eq!(emitted_set, expected, "wrong partition set for {n}");
        }
    }

    #[test]
    fn branch_output_is_part_before_star_ordered() {
        fn order_key(text: &str) -> Vec<u8> {
            let seq: StarSequence = text.parse().unwrap();
            seq.slots()
                .iter()
                .map(|&s| if s == Slot::Part { 0 } else { 1 })
                .collect()
        }
        for n in [20u64, 27, 35] {
            let (root, _) = triangular_root(n);
            for mex in 1..=root {
                let branch = collect_branch(n, mex);
                let keys: Vec<Vec<u8>> = branch.iter().map(|s| order_key(s)).collect();
                assert!(
                    keys.windows(2).all(|w| w[0] < w[1]),
                    "branch mex={mex} of {n} out of order: {branch:?}"
                );
            }
        }
    }

    /// Checks the walk's node states against an independent rescan: the
    /// node's table must be exactly what a fresh scan of its sequence
    /// computes, the node must be unrefinable, unsaturated, below target,
    /// and no parts multiset may be visited more than mex times.
    struct StateChecker {
        target: u64,
        mex: usize,
        visits: HashMap<Vec<usize>, usize>,
    }

    impl NodeObserver for StateChecker {
        fn observe(&mut self, seq: &StarSequence, table: &ResidueTable, running_sum: u64) {
            assert_eq!(running_sum, seq.sum());
            assert!(running_sum < self.target);
            assert_eq!(seq.mex(), self.mex);
            let mut rescan = ResidueTable::new(self.mex);
            for r in (self.mex + 1)..=seq.len() {
                if seq.is_missing(r) {
                    rescan.update(r as u64);
                }
            }
            assert_eq!(&rescan, table, "table drift at {seq}");
            assert!(verify_fast(seq).is_unrefinable(), "refinable node {seq}");
            assert!(!table.is_saturated(seq.len()), "saturated node {seq}");
            *self.visits.entry(seq.parts().collect()).or_insert(0) += 1;
        }
    }

    #[test]
    fn walk_nodes_match_fresh_scans() {
        type Walker = fn(u64, usize, &mut dyn EnumerationSink, &mut StateChecker) -> ControlFlow<()>;
        let walkers: [Walker; 2] = [
            |n, mex, sink, obs| walk_recursive(n, mex, sink, obs),
            |n, mex, sink, obs| walk_stack(n, mex, sink, obs),
        ];
        for walker in walkers {
            for n in 1..=25u64 {
                let (root, _) = triangular_root(n);
                for mex in 1..=root {
                    let mut checker = StateChecker {
                        target: n,
                        mex,
                        visits: HashMap::new(),
                    };
                    let _ = walker(n, mex, &mut |_: &StarSequence| {}, &mut checker);
                    for (parts, visits) in &checker.visits {
                        assert!(
                            *visits <= mex,
                            "parts {parts:?} visited {visits} times in branch mex={mex} of {n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn random_walks_are_unrefinable_and_sized() {
        for length in [0usize, 1, 2, 5, 17, 50, 333] {
            for seed in 0..8u64 {
                let s = random_unrefinable(length, seed);
                assert_eq!(s.len(), length);
                assert!(verify_fast(&s).is_unrefinable(), "{s}");
            }
        }
    }

    #[test]
    fn published_counts_spot_check() {
        for &(n, expected) in PUBLISHED_COUNTS.iter().take(5) {
            assert_eq!(count_unrefinable(n), expected, "count for {n}");
        }
    }
}

