//! Refinability checks for star sequences.
//!
//! A part `r` is refinable when it can be written as a sum of two or more
//! pairwise-distinct missing parts; a partition is unrefinable when no
//! part is. Three deciders are provided:
//!
//! * [`verify_fast`] — scans the sequence once while tracking, per residue
//!   class modulo the minimal excludant, the smallest value known to be
//!   forbidden. Runs in `O(len + mex^2)` time and `O(mex)` space.
//! * [`verify_naive`] — quadratic scan for a part that is the sum of two
//!   missing parts. If any part is refinable, the smallest refinable part
//!   has such a two-piece refinement, so this is a complete decider and it
//!   produces a witness.
//! * [`verify_exhaustive`] — searches subsets of missing parts of every
//!   size. Exponential; intended as a test oracle on short sequences.
//!
//! The key fact behind the fast scan: once `a` and `b` are known missing,
//! any `a + b` met later as a part proves refinability, and by induction
//! so does anything of the form `p + t * mex` for a forbidden `p`. So one
//! counter per residue class modulo the minimal excludant captures
//! everything the scan has learned.

use crate::seq::StarSequence;

use thiserror::Error;

/// Per-residue-class forbidden-value counters used by the fast verifier
/// and by the enumeration walker.
///
/// Entry `j` is the smallest known value `p` with `p ≡ j (mod modulus)`
/// such that meeting `p + t*modulus` (`t >= 0`) as a part would prove
/// refinability; `None` means nothing is known for the class yet. Every
/// finite entry satisfies `p ≡ j (mod modulus)` and `p > modulus`, and
/// entries only decrease over successive updates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueTable {
    entries: Vec<Option<u64>>,
}

impl ResidueTable {
    /// Fresh table for the given minimal excludant, all entries unset.
    ///
    /// Panics when `modulus` is 0; a sequence without a star needs no
    /// table.
    pub fn new(modulus: usize) -> Self {
        assert!(modulus >= 1, "residue table needs a positive modulus");
        ResidueTable {
            entries: vec![None; modulus],
        }
    }

    pub fn modulus(&self) -> usize {
        self.entries.len()
    }

    /// Entry for one residue class; `None` when nothing is known yet.
    pub fn entry(&self, class: usize) -> Option<u64> {
        self.entries[class]
    }

    pub fn entries(&self) -> &[Option<u64>] {
        &self.entries
    }

    /// Folds a newly discovered missing part `missing` into the table.
    ///
    /// With `j = missing mod modulus`: when the class already has a
    /// smaller entry `p`, only the combined value `missing + p` is new;
    /// otherwise `missing` becomes the class entry and is combined with
    /// every other known class. Combinations with unset classes are
    /// skipped, and class 0 is never combined since its entries only
    /// restate `p + t*modulus`.
    ///
    /// Panics when `missing <= modulus`: the scan that feeds this table
    /// starts right after the minimal excludant.
    pub fn update(&mut self, missing: u64) {
        let class = (missing % self.modulus() as u64) as usize;
        let mut ignored = 0;
        self.update_core(missing, class, u64::MAX, &mut ignored, |_, _| {});
    }

    /// Hot-path form of [`update`](Self::update) for the enumeration
    /// walk: the caller supplies `class = missing % modulus` (tracked
    /// incrementally, no division) and a counter `below` holding
    /// `|{j : p_j <= length}|`, which is kept current so saturation is a
    /// single comparison instead of a table scan.
    #[inline]
    pub(crate) fn update_in_class(
        &mut self,
        missing: u64,
        class: usize,
        length: u64,
        below: &mut usize,
    ) {
        self.update_core(missing, class, length, below, |_, _| {});
    }

    /// Like [`update_in_class`](Self::update_in_class), recording every
    /// overwritten entry in `journal` so [`rollback`](Self::rollback) can
    /// restore the table, which lets the enumeration walk share one table
    /// across a whole branch instead of copying it per node.
    #[inline]
    pub(crate) fn update_journaled(
        &mut self,
        missing: u64,
        class: usize,
        length: u64,
        below: &mut usize,
        journal: &mut Vec<(u32, Option<u64>)>,
    ) {
        self.update_core(missing, class, length, below, |written, old| {
            journal.push((written as u32, old));
        });
    }

    /// Undoes journaled writes back down to `mark`.
    pub(crate) fn rollback(&mut self, journal: &mut Vec<(u32, Option<u64>)>, mark: usize) {
        while journal.len() > mark {
            let (class, old) = journal.pop().unwrap();
            self.entries[class as usize] = old;
        }
    }

    #[inline]
    fn update_core(
        &mut self,
        missing: u64,
        class: usize,
        length: u64,
        below: &mut usize,
        mut on_write: impl FnMut(usize, Option<u64>),
    ) {
        let modulus = self.modulus();
        assert!(
            missing > modulus as u64,
            "update requires a missing part greater than the minimal excludant"
        );
        debug_assert_eq!(missing % modulus as u64, class as u64);
        match self.entries[class] {
            Some(p) if missing > p => {
                let target = wrap(class + class, modulus);
                self.lower(target, missing + p, length, below, &mut on_write);
            }
            _ => {
                // The guard guarantees the old entry is unset or >= missing,
                // so lowering is the plain assignment p_class = missing.
                self.lower(class, missing, length, below, &mut on_write);
                for other in 1..modulus {
                    if other == class {
                        continue;
                    }
                    if let Some(q) = self.entries[other] {
                        let target = wrap(class + other, modulus);
                        self.lower(target, missing + q, length, below, &mut on_write);
                    }
                }
            }
        }
    }

    #[inline]
    fn lower(
        &mut self,
        class: usize,
        value: u64,
        length: u64,
        below: &mut usize,
        on_write: &mut impl FnMut(usize, Option<u64>),
    ) {
        let old = self.entries[class];
        let new = old.map_or(value, |cur| cur.min(value));
        if old == Some(new) {
            return;
        }
        on_write(class, old);
        if new <= length && !old.is_some_and(|cur| cur <= length) {
            *below += 1;
        }
        self.entries[class] = Some(new);
    }

    /// True when meeting `index` as a part would prove refinability.
    pub fn forbids(&self, index: usize) -> bool {
        let class = index % self.modulus();
        self.entries[class].is_some_and(|p| index as u64 >= p)
    }

    /// True when every class has a finite entry at most `length`: no part
    /// can ever be appended again without creating a refinement.
    pub fn is_saturated(&self, length: usize) -> bool {
        self.entries
            .iter()
            .all(|e| e.is_some_and(|p| p <= length as u64))
    }

    /// Overwrites this table with the contents of `other` (same modulus).
    pub(crate) fn copy_from(&mut self, other: &ResidueTable) {
        self.entries.copy_from_slice(&other.entries);
    }
}

#[inline]
fn wrap(value: usize, modulus: usize) -> usize {
    // Both summands are < modulus, so one conditional subtraction reduces.
    if value >= modulus {
        value - modulus
    } else {
        value
    }
}

/// Outcome of a refinability check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Unrefinable,
    /// The oracles attach a witness; the fast verifier does not, since it
    /// detects refinability through forbidden values without ever
    /// materializing a decomposition.
    Refinable { witness: Option<Refinement> },
}

impl Verdict {
    pub fn is_refinable(&self) -> bool {
        matches!(self, Verdict::Refinable { .. })
    }

    pub fn is_unrefinable(&self) -> bool {
        !self.is_refinable()
    }

    pub fn witness(&self) -> Option<&Refinement> {
        match self {
            Verdict::Refinable { witness } => witness.as_ref(),
            Verdict::Unrefinable => None,
        }
    }
}

/// A concrete refinement: `part` equals the sum of `pieces`, which are two
/// or more distinct missing parts, listed in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    pub part: usize,
    pub pieces: Vec<usize>,
}

impl Refinement {
    /// Structural check against a sequence: at least two pieces, strictly
    /// increasing, all missing in `seq`, summing to a part of `seq`.
    pub fn is_valid_for(&self, seq: &StarSequence) -> bool {
        self.pieces.len() >= 2
            && self.pieces.windows(2).all(|w| w[0] < w[1])
            && self.pieces.iter().all(|&p| seq.is_missing(p))
            && seq.is_part(self.part)
            && self.pieces.iter().map(|&p| p as u64).sum::<u64>() == self.part as u64
    }
}

/// Error from [`verify_exhaustive`] on sequences longer than its bound.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("sequence of length {length} exceeds the exhaustive-oracle bound {bound}")]
pub struct OracleBoundExceeded {
    pub length: usize,
    pub bound: usize,
}

/// Default length bound for [`verify_exhaustive`]; keeps the worst-case
/// subset search around 2^24 visits.
pub const DEFAULT_ORACLE_BOUND: usize = 24;

/// Residue-class refinability check in `O(len + mex^2)`.
///
/// Scans indexes from one past the minimal excludant: a part that lands on
/// a forbidden value proves refinability, a missing part updates the
/// table. A sequence without a star is unrefinable outright.
pub fn verify_fast(seq: &StarSequence) -> Verdict {
    let mex = seq.mex();
    if mex == 0 {
        return Verdict::Unrefinable;
    }
    let mut table = ResidueTable::new(mex);
    for r in (mex + 1)..=seq.len() {
        if seq.is_part(r) {
            if table.forbids(r) {
                return Verdict::Refinable { witness: None };
            }
        } else {
            table.update(r as u64);
        }
    }
    Verdict::Unrefinable
}

/// Pair-scan refinability check: looks for a part `r = a + b` with `a < b`
/// both missing. Complete because the smallest refinable part always
/// admits a two-piece refinement. Returns the witness with the smallest
/// part, then the smallest first piece.
pub fn verify_naive(seq: &StarSequence) -> Verdict {
    for r in seq.parts() {
        for a in 1..r.div_ceil(2) {
            let b = r - a;
            if seq.is_missing(a) && seq.is_missing(b) {
                return Verdict::Refinable {
                    witness: Some(Refinement {
                        part: r,
                        pieces: vec![a, b],
                    }),
                };
            }
        }
    }
    Verdict::Unrefinable
}

/// Subset-search refinability oracle with the default length bound.
///
/// Unlike [`verify_naive`] this considers piece sets of every size, so it
/// validates both the fast verifier and the pair reduction. The witness is
/// the smallest refinable part, with the fewest pieces, lexicographically
/// smallest.
pub fn verify_exhaustive(seq: &StarSequence) -> Result<Verdict, OracleBoundExceeded> {
    verify_exhaustive_bounded(seq, DEFAULT_ORACLE_BOUND)
}

/// Same as [`verify_exhaustive`] with an explicit length bound.
pub fn verify_exhaustive_bounded(
    seq: &StarSequence,
    bound: usize,
) -> Result<Verdict, OracleBoundExceeded> {
    if seq.len() > bound {
        return Err(OracleBoundExceeded {
            length: seq.len(),
            bound,
        });
    }
    let missing: Vec<usize> = seq.missing_parts().collect();
    for r in seq.parts() {
        // Smallest piece count first, lexicographically smallest set within
        // each count; the depth-first search below visits sets in lex order.
        for count in 2..=missing.len() {
            if missing.iter().take(count).sum::<usize>() > r {
                break;
            }
            let mut picked = Vec::with_capacity(count);
            if subset_summing_to(&missing, 0, count, r, &mut picked) {
                return Ok(Verdict::Refinable {
                    witness: Some(Refinement {
                        part: r,
                        pieces: picked,
                    }),
                });
            }
        }
    }
    Ok(Verdict::Unrefinable)
}

/// Finds the lexicographically first strictly increasing choice of `need`
/// values from `pool[from..]` summing to `target`; fills `picked`.
fn subset_summing_to(
    pool: &[usize],
    from: usize,
    need: usize,
    target: usize,
    picked: &mut Vec<usize>,
) -> bool {
    if need == 0 {
        return target == 0;
    }
    for i in from..pool.len() {
        let value = pool[i];
        if value > target {
            break;
        }
        picked.push(value);
        if subset_summing_to(pool, i + 1, need - 1, target - value, picked) {
            return true;
        }
        picked.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::{Slot, StarSequence};
    use proptest::prelude::*;

    fn seq(text: &str) -> StarSequence {
        text.parse().unwrap()
    }

    fn entries(values: &[Option<u64>]) -> Vec<Option<u64>> {
        values.to_vec()
    }

    #[test]
    fn update_first_missing_sets_its_class() {
        let mut t = ResidueTable::new(6);
        t.update(9);
        assert_eq!(
            t.entries(),
            entries(&[None, None, None, Some(9), None, None])
        );
    }

    #[test]
    fn update_combines_new_class_with_known_classes() {
        // Missing 9, 10, 14 with modulus 6: 14 lands in an empty class and
        // combines with 19, 9, and 10, pinning 23 and 24.
        let mut t = ResidueTable::new(6);
        t.update(9);
        t.update(10);
        assert_eq!(
            t.entries(),
            entries(&[None, Some(19), None, Some(9), Some(10), None])
        );
        t.update(14);
        assert_eq!(
            t.entries(),
            entries(&[Some(24), Some(19), Some(14), Some(9), Some(10), Some(23)])
        );
    }

    #[test]
    fn update_with_smaller_class_entry_adds_only_the_sum() {
        // Missing 7, 10, 11, 14 with modulus 4: by the time 14 arrives its
        // class already holds 10, so only 24 is new.
        let mut t = ResidueTable::new(4);
        t.update(7);
        t.update(10);
        t.update(11);
        t.update(14);
        assert_eq!(t.entry(0), Some(24));
    }

    #[test]
    #[should_panic(expected = "greater than the minimal excludant")]
    fn update_rejects_small_values() {
        ResidueTable::new(6).update(6);
    }

    #[test]
    fn saturation_examples() {
        // Scan of "1 * 3 * *": missing 4 and 5 give entries (4, 5).
        let mut t = ResidueTable::new(2);
        t.update(4);
        t.update(5);
        assert_eq!(t.entries(), entries(&[Some(4), Some(5)]));
        assert!(t.is_saturated(5));

        let mut u = ResidueTable::new(2);
        u.update(4);
        assert!(!u.is_saturated(4));

        let mut w = ResidueTable::new(6);
        for m in [9, 10, 14] {
            w.update(m);
        }
        assert!(!w.is_saturated(14));
    }

    #[test]
    fn fast_examples() {
        assert!(verify_fast(&seq("1 2 3 4 * 6 7 * * * 11 * * * * 16")).is_unrefinable());
        assert!(verify_fast(&seq("1 2 3")).is_unrefinable());
        assert!(verify_fast(&seq("1 2 3 4 5 * 7 8 * * 11 12 13 * 15")).is_refinable());
        assert!(verify_fast(&seq("* 2 * 4")).is_refinable());
        assert!(verify_fast(&StarSequence::new()).is_unrefinable());
    }

    #[test]
    fn fast_returns_no_witness() {
        assert_eq!(
            verify_fast(&seq("* 2 * 4")),
            Verdict::Refinable { witness: None }
        );
    }

    #[test]
    fn naive_examples() {
        let v = verify_naive(&seq("* 2 * 4"));
        assert_eq!(
            v.witness(),
            Some(&Refinement { part: 4, pieces: vec![1, 3] })
        );

        assert!(verify_naive(&seq("1 2 * 4")).is_unrefinable());
        // Missing {4, 6, 8}: no pair of distinct missing parts sums to a part.
        assert!(verify_naive(&seq("1 2 3 * 5 * 7 * 9")).is_unrefinable());
        // Missing {3, 4}: 3 + 4 = 7 exceeds every part.
        assert!(verify_naive(&seq("1 2 * * 5")).is_unrefinable());
    }

    #[test]
    fn exhaustive_examples() {
        let v = verify_exhaustive(&seq("* * 3")).unwrap();
        assert_eq!(
            v.witness(),
            Some(&Refinement { part: 3, pieces: vec![1, 2] })
        );
        assert!(verify_exhaustive(&seq("1 2 * 4")).unwrap().is_unrefinable());
        assert!(verify_exhaustive(&seq("1 2 3 4 * 6 7 * * * 11 * * * * 16"))
            .unwrap()
            .is_unrefinable());
    }

    #[test]
    fn exhaustive_prefers_fewer_pieces_then_lex_order() {
        // 7 = 1 + 6 beats 7 = 1 + 2 + 4 on piece count even though the
        // triple is lexicographically smaller.
        let v = verify_exhaustive(&seq("* * * * * * 7")).unwrap();
        assert_eq!(
            v.witness(),
            Some(&Refinement { part: 7, pieces: vec![1, 6] })
        );
        assert_eq!(verify_naive(&seq("* * * * * * 7")).witness(), v.witness());
    }

    #[test]
    fn exhaustive_enforces_its_bound() {
        let long: StarSequence = "* 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25"
            .parse()
            .unwrap();
        assert_eq!(
            verify_exhaustive(&long),
            Err(OracleBoundExceeded { length: 25, bound: 24 })
        );
        assert!(verify_exhaustive_bounded(&long, 32).is_ok());
    }

    #[test]
    fn all_three_agree_on_short_sequences() {
        // Every slot pattern up to length 12.
        for len in 0..=12usize {
            for mask in 0u32..(1 << len) {
                let s = sequence_from_mask(len, mask);
                let fast = verify_fast(&s);
                let naive = verify_naive(&s);
                let exhaustive = verify_exhaustive(&s).unwrap();
                assert_eq!(fast.is_refinable(), naive.is_refinable(), "{s}");
                assert_eq!(naive, exhaustive, "{s}");
                if let Some(w) = naive.witness() {
                    assert!(w.is_valid_for(&s), "{s}");
                }
            }
        }
    }

    fn sequence_from_mask(len: usize, mask: u32) -> StarSequence {
        StarSequence::from_slots(
            (0..len)
                .map(|i| {
                    if mask & (1 << i) != 0 {
                        Slot::Part
                    } else {
                        Slot::Missing
                    }
                })
                .collect(),
        )
    }

    #[test]
    fn saturated_tables_forbid_every_further_part() {
        // "1 * 3 * *" saturates at length 5; any later part refines.
        let base = seq("1 * 3 * *");
        for extra_stars in 0..4 {
            let mut s = base.clone();
            for _ in 0..extra_stars {
                s = s.append_star();
            }
            let extended = s.append_part();
            assert!(verify_fast(&extended).is_refinable(), "{extended}");
        }
    }

    fn any_sequence(max_len: usize) -> impl Strategy<Value = StarSequence> {
        proptest::collection::vec(any::<bool>(), 0..=max_len).prop_map(|bits| {
            StarSequence::from_slots(
                bits.into_iter()
                    .map(|b| if b { Slot::Part } else { Slot::Missing })
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn fast_matches_naive(s in any_sequence(120)) {
            prop_assert_eq!(
                verify_fast(&s).is_refinable(),
                verify_naive(&s).is_refinable()
            );
        }

        #[test]
        fn naive_witnesses_are_valid(s in any_sequence(120)) {
            if let Some(w) = verify_naive(&s).witness() {
                prop_assert!(w.is_valid_for(&s));
            }
        }

        #[test]
        fn table_replay_keeps_invariants(s in any_sequence(160)) {
            let mex = s.mex();
            prop_assume!(mex > 0);
            let mut table = ResidueTable::new(mex);
            let mut previous = table.clone();
            for r in (mex + 1)..=s.len() {
                if s.is_missing(r) {
                    table.update(r as u64);
                    for class in 0..mex {
                        if let Some(p) = table.entry(class) {
                            prop_assert_eq!(p % mex as u64, class as u64);
                            prop_assert!(p > mex as u64);
                        }
                        // Entries never increase, and never go back to unset.
                        if let Some(old) = previous.entry(class) {
                            prop_assert!(table.entry(class).is_some_and(|new| new <= old));
                        }
                    }
                    previous = table.clone();
                }
            }
        }
    }
}
