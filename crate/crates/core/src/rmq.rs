//! Range-minimum queries plus bounded-value predecessor/successor searches.
//!
//! A sparse table answers `range_min` in O(1) after O(N log N) setup; the
//! `prev_smaller` / `next_smaller` searches locate the nearest entry below a
//! threshold by halving the candidate range with minimum queries, O(log N)
//! per call. The structure is generic over any totally ordered value type,
//! so arrays with an `Infinite` marker work unchanged (the marker simply
//! compares greater than every finite value).
//!
//! Indices are given at construction via `origin`: an array representing
//! `LCP[2..=n]` keeps its natural positions instead of being renumbered.

/// Sparse-table RMQ over `values`, addressed as `origin..origin + len`.
#[derive(Debug, Clone)]
pub struct RmqStructure<T> {
    origin: usize,
    /// `table[k][i]` = min over `values[i .. i + 2^k]` (0-based rows).
    table: Vec<Vec<T>>,
}

impl<T: Copy + Ord> RmqStructure<T> {
    /// Builds the table; panics on an empty array.
    pub fn new(origin: usize, values: Vec<T>) -> Self {
        assert!(!values.is_empty(), "cannot build an RMQ over an empty array");
        let n = values.len();
        let levels = n.ilog2() as usize + 1;
        let mut table = Vec::with_capacity(levels);
        table.push(values);
        for k in 1..levels {
            let half = 1 << (k - 1);
            let prev = &table[k - 1];
            let row: Vec<T> = (0..=n - 2 * half)
                .map(|i| prev[i].min(prev[i + half]))
                .collect();
            table.push(row);
        }
        RmqStructure { origin, table }
    }

    /// First valid index.
    pub fn origin(&self) -> usize {
        self.origin
    }

    /// Last valid index (inclusive).
    pub fn end(&self) -> usize {
        self.origin + self.table[0].len() - 1
    }

    pub fn get(&self, i: usize) -> T {
        assert!(self.origin <= i && i <= self.end(), "index {i} out of range");
        self.table[0][i - self.origin]
    }

    /// Minimum over the inclusive range `[i, j]`, in constant time.
    pub fn range_min(&self, i: usize, j: usize) -> T {
        assert!(
            self.origin <= i && i <= j && j <= self.end(),
            "range [{i}, {j}] out of bounds [{}, {}]",
            self.origin,
            self.end()
        );
        let (i, j) = (i - self.origin, j - self.origin);
        let k = (j - i + 1).ilog2() as usize;
        let row = &self.table[k];
        row[i].min(row[j + 1 - (1 << k)])
    }

    /// Largest `k` in `[lo, t - 1]` with `values[k] < c`, or `None`.
    ///
    /// Repeatedly queries the minimum of the upper half of the candidate
    /// range to decide which half retains a sub-threshold entry.
    pub fn prev_smaller(&self, t: usize, c: T, lo: usize) -> Option<usize> {
        assert!(lo >= self.origin && t >= lo, "bad search range [{lo}, {t})");
        assert!(t <= self.end() + 1, "index {t} out of range");
        if t == lo {
            return None;
        }
        let (mut lo, mut hi) = (lo, t - 1);
        if self.range_min(lo, hi) >= c {
            return None;
        }
        while lo < hi {
            let mid = (lo + hi + 1) / 2;
            if self.range_min(mid, hi) < c {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        Some(lo)
    }

    /// Smallest `k` in `[t + 1, hi]` with `values[k] < c`, or `None`.
    pub fn next_smaller(&self, t: usize, c: T, hi: usize) -> Option<usize> {
        assert!(hi <= self.end() && t <= hi, "bad search range ({t}, {hi}]");
        assert!(t + 1 >= self.origin, "index {t} out of range");
        if t == hi {
            return None;
        }
        let (mut lo, mut hi) = (t + 1, hi);
        if self.range_min(lo, hi) >= c {
            return None;
        }
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.range_min(lo, mid) < c {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        Some(lo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wlcp::LcpValue::{self, Finite, Infinite};

    /// LCP column of the mississippi$ example, indexed 2..=12.
    fn fig1_lcp() -> RmqStructure<usize> {
        RmqStructure::new(2, vec![0, 1, 1, 4, 0, 0, 1, 0, 2, 1, 3])
    }

    #[test]
    fn range_min_examples() {
        let rmq = fig1_lcp();
        assert_eq!(rmq.range_min(4, 5), 1);
        assert_eq!(rmq.range_min(5, 5), 4);
        assert_eq!(rmq.range_min(2, 12), 0);
        let flat = RmqStructure::new(1, vec![7, 7, 7]);
        assert_eq!(flat.range_min(1, 3), 7);
        let single = RmqStructure::new(1, vec![7]);
        assert_eq!(single.range_min(1, 1), 7);
    }

    #[test]
    fn infinity_is_maximal() {
        let rmq = RmqStructure::new(1, vec![Infinite, Finite(3), Infinite]);
        assert_eq!(rmq.range_min(1, 3), Finite(3));
        assert_eq!(rmq.range_min(1, 1), Infinite);
    }

    #[test]
    #[should_panic(expected = "empty array")]
    fn empty_array_panics() {
        let _ = RmqStructure::new(1, Vec::<usize>::new());
    }

    #[test]
    fn smaller_value_examples() {
        let rmq = fig1_lcp();
        // Left boundary of the [2, 5] expansion in the worked example.
        assert_eq!(rmq.prev_smaller(4, 1, 2), Some(2));
        assert_eq!(rmq.next_smaller(5, 1, 12), Some(6));
        // Empty search ranges.
        assert_eq!(rmq.prev_smaller(2, 9, 2), None);
        assert_eq!(rmq.next_smaller(12, 9, 12), None);
        // Nothing is smaller than zero.
        assert_eq!(rmq.prev_smaller(12, 0, 2), None);
        // Strictly increasing tail: nothing to the right drops below.
        let inc = RmqStructure::new(1, vec![0, 1, 2, 3, 4]);
        assert_eq!(inc.next_smaller(2, 2, 5), None);
        assert_eq!(inc.next_smaller(2, 3, 5), Some(3));
    }

    #[test]
    fn agrees_with_linear_scan() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..=40);
            let origin = rng.gen_range(0..5usize);
            let values: Vec<LcpValue> = (0..n)
                .map(|_| {
                    if rng.gen_bool(0.2) {
                        Infinite
                    } else {
                        Finite(rng.gen_range(0..8))
                    }
                })
                .collect();
            let rmq = RmqStructure::new(origin, values.clone());
            let end = origin + n - 1;
            for _ in 0..40 {
                let i = rng.gen_range(origin..=end);
                let j = rng.gen_range(i..=end);
                let scan = values[i - origin..=j - origin].iter().copied().min().unwrap();
                assert_eq!(rmq.range_min(i, j), scan);

                let t = rng.gen_range(origin..=end + 1);
                let c = Finite(rng.gen_range(0..9));
                let scan_prev = (origin..t.min(end + 1))
                    .rev()
                    .find(|&k| values[k - origin] < c);
                assert_eq!(rmq.prev_smaller(t, c, origin), scan_prev);
                if t <= end {
                    let scan_next = (t + 1..=end).find(|&k| values[k - origin] < c);
                    assert_eq!(rmq.next_smaller(t, c, end), scan_next);
                }
            }
        }
    }
}
