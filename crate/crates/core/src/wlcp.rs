//! The LCP array of a Wheeler DFA.
//!
//! Every state `u_i` has a set of infinite strings readable backward from it
//! (the initial state conceptually loops on `#`). The Wheeler order sorts
//! these sets, so each has a lexicographic minimum `min_i` and maximum
//! `max_i`, produced by always following the smallest / largest predecessor.
//! The array interleaves the `2n - 1` adjacent longest-common-prefix lengths
//!
//! ```text
//! lcp(min_1, max_1), lcp(max_1, min_2), lcp(min_2, max_2), ..., lcp(min_n, max_n)
//! ```
//!
//! at positions `2..=2n`: within-state values at even positions `2i`,
//! between-state values at odd positions `2i + 1`. Two adjacent streams
//! either diverge before `3n` characters (a periodicity argument) or are
//! equal forever, stored as [`LcpValue::Infinite`].

use std::fmt;

use crate::automaton::{WheelerDfa, HASH};
use crate::rmq::RmqStructure;

/// A longest-common-prefix length, or infinity for identical streams.
/// `Infinite` compares greater than every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LcpValue {
    Finite(usize),
    Infinite,
}

impl LcpValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, LcpValue::Finite(_))
    }

    /// Minimum of this value and a finite length, as a plain length.
    pub fn min_with(&self, len: usize) -> usize {
        match *self {
            LcpValue::Finite(v) => v.min(len),
            LcpValue::Infinite => len,
        }
    }
}

impl fmt::Display for LcpValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LcpValue::Finite(v) => write!(f, "{v}"),
            LcpValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Which pair of streams an array entry compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcpEntryKind {
    /// `lcp(min_i, max_i)`, even position `2i`.
    MinMax,
    /// `lcp(max_i, min_{i+1})`, odd position `2i + 1`.
    MaxMin,
}

impl fmt::Display for LcpEntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LcpEntryKind::MinMax => write!(f, "min-max"),
            LcpEntryKind::MaxMin => write!(f, "max-min"),
        }
    }
}

/// One array entry with the states it refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LcpEntry {
    pub index: usize,
    pub kind: LcpEntryKind,
    pub left_state: usize,
    pub right_state: usize,
    pub value: LcpValue,
}

/// The `2n - 1` values at positions `2..=2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelerLcpArray {
    n: usize,
    values: Vec<LcpValue>,
}

impl WheelerLcpArray {
    /// Wraps raw values; `values[k]` is position `k + 2`.
    pub fn from_values(n: usize, values: Vec<LcpValue>) -> Self {
        assert!(n >= 1 && values.len() == 2 * n - 1, "expected 2n - 1 values");
        WheelerLcpArray { n, values }
    }

    pub fn state_count(&self) -> usize {
        self.n
    }

    /// Finite entries are strictly below this bound.
    pub fn cap(&self) -> usize {
        3 * self.n
    }

    /// Value at position `p`, `2 <= p <= 2n`.
    pub fn get(&self, p: usize) -> LcpValue {
        assert!(2 <= p && p <= 2 * self.n, "position {p} out of range");
        self.values[p - 2]
    }

    /// `lcp(min_i, max_i)`.
    pub fn within(&self, i: usize) -> LcpValue {
        self.get(2 * i)
    }

    /// `lcp(max_i, min_{i+1})`.
    pub fn between(&self, i: usize) -> LcpValue {
        self.get(2 * i + 1)
    }

    pub fn values(&self) -> &[LcpValue] {
        &self.values
    }

    pub fn entries(&self) -> impl Iterator<Item = LcpEntry> + '_ {
        (2..=2 * self.n).map(move |p| {
            let (kind, left, right) = if p % 2 == 0 {
                (LcpEntryKind::MinMax, p / 2, p / 2)
            } else {
                (LcpEntryKind::MaxMin, p / 2, p / 2 + 1)
            };
            LcpEntry {
                index: p,
                kind,
                left_state: left,
                right_state: right,
                value: self.get(p),
            }
        })
    }
}

/// Label stream of the walk that always takes the smallest (or largest)
/// predecessor; yields ranks and continues with `#` forever once state 1
/// is reached.
struct ExtremeStream<'a> {
    dfa: &'a WheelerDfa,
    state: usize,
    take_max: bool,
}

impl<'a> ExtremeStream<'a> {
    fn new(dfa: &'a WheelerDfa, state: usize, take_max: bool) -> Self {
        ExtremeStream { dfa, state, take_max }
    }
}

impl Iterator for ExtremeStream<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let rank = self.dfa.label_rank(self.state);
        self.state = if self.take_max {
            self.dfa.max_predecessor(self.state)
        } else {
            self.dfa.min_predecessor(self.state)
        };
        Some(rank)
    }
}

fn stream_prefix(dfa: &WheelerDfa, state: usize, take_max: bool, len: usize) -> String {
    ExtremeStream::new(dfa, state, take_max)
        .take(len)
        .map(|rank| if rank == 0 { HASH } else { dfa.sigma()[rank - 1] })
        .collect()
}

/// First `len` characters of `min_i`.
pub fn min_string_prefix(dfa: &WheelerDfa, i: usize, len: usize) -> String {
    stream_prefix(dfa, i, false, len)
}

/// First `len` characters of `max_i`.
pub fn max_string_prefix(dfa: &WheelerDfa, i: usize, len: usize) -> String {
    stream_prefix(dfa, i, true, len)
}

/// Longest common prefix of two label streams, evaluated on `cap`-character
/// truncations; agreement through all `cap` characters is `Infinite`.
fn capped_lcp(a: ExtremeStream<'_>, b: ExtremeStream<'_>, cap: usize) -> LcpValue {
    for (matched, (x, y)) in a.zip(b).take(cap).enumerate() {
        if x != y {
            return LcpValue::Finite(matched);
        }
    }
    LcpValue::Infinite
}

/// Builds the full array by comparing the `2n` extreme streams pairwise in
/// chain order. Streams are generated lazily, so each entry stops at the
/// first mismatch; the total work is O(n^2) at the 3n cap.
pub fn build_lcp_array(dfa: &WheelerDfa) -> WheelerLcpArray {
    let n = dfa.state_count();
    let cap = 3 * n;
    let mut values = Vec::with_capacity(2 * n - 1);
    for i in 1..=n {
        values.push(capped_lcp(
            ExtremeStream::new(dfa, i, false),
            ExtremeStream::new(dfa, i, true),
            cap,
        ));
        if i < n {
            values.push(capped_lcp(
                ExtremeStream::new(dfa, i, true),
                ExtremeStream::new(dfa, i + 1, false),
                cap,
            ));
        }
    }
    WheelerLcpArray::from_values(n, values)
}

/// [`WheelerLcpArray`] augmented with its range-minimum structure; the form
/// the matching-statistics algorithm consumes.
#[derive(Debug, Clone)]
pub struct AugmentedLcp {
    array: WheelerLcpArray,
    rmq: RmqStructure<LcpValue>,
}

impl AugmentedLcp {
    pub fn new(array: WheelerLcpArray) -> Self {
        let rmq = RmqStructure::new(2, array.values().to_vec());
        AugmentedLcp { array, rmq }
    }

    pub fn array(&self) -> &WheelerLcpArray {
        &self.array
    }

    pub fn rmq(&self) -> &RmqStructure<LcpValue> {
        &self.rmq
    }

    pub fn state_count(&self) -> usize {
        self.array.state_count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::WheelerDfa;
    use LcpValue::{Finite, Infinite};

    const FIG2: &str = include_str!("../tests/data/fig2.wdfa");

    #[test]
    fn extreme_string_prefixes_match_figure() {
        let dfa = WheelerDfa::parse(FIG2).unwrap();
        assert_eq!(min_string_prefix(&dfa, 2, 5), "aaaaa");
        assert_eq!(max_string_prefix(&dfa, 2, 7), "abdf###");
        assert_eq!(min_string_prefix(&dfa, 3, 7), "abdg###");
        assert_eq!(max_string_prefix(&dfa, 3, 7), "acei###");
        assert_eq!(min_string_prefix(&dfa, 1, 4), "####");
        assert_eq!(max_string_prefix(&dfa, 1, 3), "###");
    }

    #[test]
    fn figure_lcp_entries() {
        let dfa = WheelerDfa::parse(FIG2).unwrap();
        let lcp = build_lcp_array(&dfa);
        assert_eq!(lcp.between(2), Finite(3)); // lcp(max_2, min_3)
        assert_eq!(lcp.between(3), Finite(3)); // lcp(max_3, min_4)
        assert_eq!(lcp.within(2), Finite(1)); // aaaa... vs abdf...
        assert_eq!(lcp.within(1), Infinite); // ###... on both sides
        assert_eq!(lcp.values().len(), 37);
    }

    #[test]
    fn single_state_is_infinite() {
        let dfa = WheelerDfa::parse("wdfa 1\nstate 1 #\n").unwrap();
        let lcp = build_lcp_array(&dfa);
        assert_eq!(lcp.values(), &[Infinite]);
        assert_eq!(lcp.get(2), Infinite);
    }

    #[test]
    fn finite_entries_below_cap() {
        let dfa = WheelerDfa::parse(FIG2).unwrap();
        let lcp = build_lcp_array(&dfa);
        for entry in lcp.entries() {
            if let Finite(v) = entry.value {
                assert!(v < lcp.cap());
            }
        }
    }

    #[test]
    fn entry_listing_shape() {
        let dfa = WheelerDfa::parse(FIG2).unwrap();
        let lcp = build_lcp_array(&dfa);
        let entries: Vec<LcpEntry> = lcp.entries().collect();
        assert_eq!(entries.len(), 37);
        assert_eq!(entries[0].kind, LcpEntryKind::MinMax);
        assert_eq!((entries[0].left_state, entries[0].right_state), (1, 1));
        assert_eq!(entries[3].index, 5);
        assert_eq!(entries[3].kind, LcpEntryKind::MaxMin);
        assert_eq!((entries[3].left_state, entries[3].right_state), (2, 3));
        assert_eq!(entries[3].value, Finite(3));
    }
}
