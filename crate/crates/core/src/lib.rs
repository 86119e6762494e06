//! Matching statistics over Wheeler DFAs.
//!
//! A Wheeler DFA carries a total order on its states that plays the role the
//! suffix array plays for a string: it sorts states by the strings that can be
//! read backward from them towards the initial state. On top of that order
//! this crate builds
//!
//! * [`automaton`] — the Wheeler DFA model, a line-oriented text format,
//!   axiom validation, and the forward-search step;
//! * [`wlcp`] — the LCP array over automaton states: the `2n - 1` longest
//!   common prefix lengths of adjacent min/max incoming strings;
//! * [`rmq`] — constant-time range minima plus logarithmic bounded-value
//!   predecessor/successor searches, shared by the string and graph paths;
//! * [`matching_stats`] — matching statistics of a pattern against a Wheeler
//!   DFA in `O(m log n)` forward steps;
//! * [`string_index`] — the classical suffix-array/BWT formulation for plain
//!   texts, used as baseline and cross-check;
//! * [`oracle`] — brute-force reference implementations and test-instance
//!   generators; ground truth for everything above.
//!
//! ```
//! use wheeler_ms::{build_lcp_array, wdfa_matching_statistics, AugmentedLcp, WheelerDfa};
//!
//! let source = "\
//! wdfa 4 ab
//! state 1 #
//! state 2 a
//! state 3 a final
//! state 4 b
//! edge 1 2
//! edge 4 3
//! edge 1 4
//! ";
//! let dfa = WheelerDfa::parse(source).unwrap();
//! dfa.validate_wheeler().unwrap();
//! let lcp = AugmentedLcp::new(build_lcp_array(&dfa));
//! let stats = wdfa_matching_statistics(&dfa, &lcp, "ba");
//! assert_eq!((stats[1].len, stats[1].l, stats[1].r), (2, 3, 3));
//! ```

pub mod automaton;
pub mod matching_stats;
pub mod oracle;
pub mod rmq;
pub mod string_index;
pub mod wlcp;

pub use automaton::{ParseError, StateInterval, WheelerDfa, WheelerViolation};
pub use matching_stats::{
    case1_update, case2_shrink, wdfa_matching_statistics, wdfa_matching_statistics_counted,
    MsState,
};
pub use rmq::RmqStructure;
pub use string_index::{MatchingStatistic, StringIndex};
pub use wlcp::{
    build_lcp_array, max_string_prefix, min_string_prefix, AugmentedLcp, LcpValue,
    WheelerLcpArray,
};
