//! Wheeler DFA data model, text-format parsing, axiom validation, and the
//! forward-search primitive.
//!
//! States are numbered `1..=n` in Wheeler order; state 1 is the initial
//! state. Every edge entering a state carries that state's label, so edges
//! are stored as bare `(source, target)` pairs and the label lives on the
//! target (input-consistency). State 1 carries the sentinel label `#`,
//! which sorts strictly before every alphabet character; its conceptual
//! `#` self-loop is a convention inside [`WheelerDfa::min_predecessor`] /
//! [`WheelerDfa::max_predecessor`] and is never stored.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// The sentinel label of the initial state.
pub const HASH: char = '#';

/// A contiguous range `[l, r]` of Wheeler-order positions (1-based,
/// inclusive), or the distinguished empty interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateInterval {
    Empty,
    Range { l: usize, r: usize },
}

impl StateInterval {
    /// Non-empty interval `[l, r]`; panics unless `1 <= l <= r`.
    pub fn range(l: usize, r: usize) -> Self {
        assert!(1 <= l && l <= r, "invalid interval [{l}, {r}]");
        StateInterval::Range { l, r }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, StateInterval::Empty)
    }

    /// `(l, r)` for a non-empty interval.
    pub fn bounds(&self) -> Option<(usize, usize)> {
        match *self {
            StateInterval::Empty => None,
            StateInterval::Range { l, r } => Some((l, r)),
        }
    }

    pub fn len(&self) -> usize {
        match *self {
            StateInterval::Empty => 0,
            StateInterval::Range { l, r } => r - l + 1,
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        match *self {
            StateInterval::Empty => false,
            StateInterval::Range { l, r } => l <= i && i <= r,
        }
    }
}

impl fmt::Display for StateInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            StateInterval::Empty => write!(f, "empty"),
            StateInterval::Range { l, r } => write!(f, "[{l}, {r}]"),
        }
    }
}

/// Structural errors raised when assembling a [`WheelerDfa`] from parts.
///
/// `index` fields refer to positions in the edge list handed to
/// [`WheelerDfa::from_parts`], so callers that know where each edge came
/// from (the parser) can map them back to source locations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("automaton needs at least one state")]
    NoStates,
    #[error("alphabet must not contain '#'")]
    HashInSigma,
    #[error("duplicate alphabet character '{0}'")]
    DuplicateSigma(char),
    #[error("expected {expected} state labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("state 1 must carry label '#'")]
    InitialLabel,
    #[error("state {state}: label '#' is reserved for state 1")]
    HashLabel { state: usize },
    #[error("state {state}: label '{label}' is not in the alphabet")]
    UnknownLabel { state: usize, label: char },
    #[error("edge {src} -> {dst} has an endpoint outside 1..={n}")]
    EdgeOutOfRange {
        index: usize,
        src: usize,
        dst: usize,
        n: usize,
    },
    #[error("duplicate edge {src} -> {dst}")]
    DuplicateEdge { index: usize, src: usize, dst: usize },
    #[error("edge {src} -> 1 enters the initial state")]
    EdgeIntoInitial { index: usize, src: usize },
    #[error("nondeterministic: state {src} has two out-edges labeled '{label}'")]
    Nondeterministic { index: usize, src: usize, label: char },
    #[error("state {state} is unreachable from the initial state")]
    Unreachable { state: usize },
}

/// Parse failure with the 1-based line it was detected on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error(transparent)]
    Structure(BuildError),
}

/// First violated Wheeler axiom, with a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WheelerViolation {
    /// `label(left) > label(right)` although `left < right`.
    Axiom1 { left: usize, right: usize },
    /// Two equally-labeled edges whose targets and sources are ordered
    /// inconsistently.
    Axiom2 {
        first: (usize, usize),
        second: (usize, usize),
    },
}

impl fmt::Display for WheelerViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WheelerViolation::Axiom1 { left, right } => write!(
                f,
                "axiom 1 violated: state {left} precedes state {right} but its label is larger"
            ),
            WheelerViolation::Axiom2 { first, second } => write!(
                f,
                "axiom 2 violated: edges {} -> {} and {} -> {} share a label but are ordered inconsistently",
                first.0, first.1, second.0, second.1
            ),
        }
    }
}

/// Edges carrying one label, sorted by source. Determinism makes the
/// source list strictly increasing; on a valid Wheeler DFA the aligned
/// target list is weakly increasing (Axiom 2).
#[derive(Debug, Clone, Default)]
struct LabelEdges {
    sources: Vec<usize>,
    targets: Vec<usize>,
}

/// A deterministic finite automaton whose states arrive already sorted in
/// Wheeler order. Construction checks structure only (determinism,
/// reachability, the `#` conventions); the order axioms are checked
/// separately by [`WheelerDfa::validate_wheeler`].
#[derive(Debug, Clone)]
pub struct WheelerDfa {
    n: usize,
    sigma: Vec<char>,
    rank_of: HashMap<char, usize>,
    /// `labels[i]` = rank of the incoming label of state `i`; 0 is `#`.
    /// Index 0 is unused padding.
    labels: Vec<usize>,
    finals: Vec<usize>,
    is_final: Vec<bool>,
    /// All edges, sorted by `(source, target)`.
    edges: Vec<(usize, usize)>,
    /// Per label rank (1-based, entry `rank - 1`): edges sorted by source.
    by_label: Vec<LabelEdges>,
    min_pred: Vec<usize>,
    max_pred: Vec<usize>,
}

impl WheelerDfa {
    /// Assembles an automaton from raw parts. `labels[k]` is the label of
    /// state `k + 1` and must be `#` exactly for state 1; `sigma` lists the
    /// alphabet in its intended order (`#` excluded, implicitly smallest).
    pub fn from_parts(
        sigma: Vec<char>,
        labels: Vec<char>,
        mut finals: Vec<usize>,
        mut edge_list: Vec<(usize, usize)>,
    ) -> Result<Self, BuildError> {
        let n = labels.len();
        if n == 0 {
            return Err(BuildError::NoStates);
        }
        let mut rank_of = HashMap::with_capacity(sigma.len());
        for (k, &c) in sigma.iter().enumerate() {
            if c == HASH {
                return Err(BuildError::HashInSigma);
            }
            if rank_of.insert(c, k + 1).is_some() {
                return Err(BuildError::DuplicateSigma(c));
            }
        }

        let mut label_ranks = vec![usize::MAX; n + 1];
        for (k, &c) in labels.iter().enumerate() {
            let state = k + 1;
            if state == 1 {
                if c != HASH {
                    return Err(BuildError::InitialLabel);
                }
                label_ranks[1] = 0;
            } else if c == HASH {
                return Err(BuildError::HashLabel { state });
            } else {
                label_ranks[state] = *rank_of
                    .get(&c)
                    .ok_or(BuildError::UnknownLabel { state, label: c })?;
            }
        }

        let mut seen = HashMap::new(); // (src, dst) -> first index
        let mut out_labels: HashMap<(usize, usize), usize> = HashMap::new(); // (src, rank) -> index
        for (index, &(src, dst)) in edge_list.iter().enumerate() {
            if src == 0 || src > n || dst == 0 || dst > n {
                return Err(BuildError::EdgeOutOfRange { index, src, dst, n });
            }
            if dst == 1 {
                return Err(BuildError::EdgeIntoInitial { index, src });
            }
            if seen.insert((src, dst), index).is_some() {
                return Err(BuildError::DuplicateEdge { index, src, dst });
            }
            let rank = label_ranks[dst];
            if out_labels.insert((src, rank), index).is_some() {
                return Err(BuildError::Nondeterministic {
                    index,
                    src,
                    label: labels[dst - 1],
                });
            }
        }

        // Reachability from state 1.
        let mut adj = vec![Vec::new(); n + 1];
        for &(src, dst) in &edge_list {
            adj[src].push(dst);
        }
        let mut reached = vec![false; n + 1];
        let mut stack = vec![1];
        reached[1] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !reached[v] {
                    reached[v] = true;
                    stack.push(v);
                }
            }
        }
        if let Some(state) = (1..=n).find(|&s| !reached[s]) {
            return Err(BuildError::Unreachable { state });
        }

        edge_list.sort_unstable();

        let mut by_label = vec![LabelEdges::default(); sigma.len()];
        for &(src, dst) in &edge_list {
            let bucket = &mut by_label[label_ranks[dst] - 1];
            bucket.sources.push(src);
            bucket.targets.push(dst);
        }
        // `edge_list` is sorted by source, so each bucket already is.

        let mut min_pred = vec![0; n + 1];
        let mut max_pred = vec![0; n + 1];
        min_pred[1] = 1; // conceptual # self-loop
        max_pred[1] = 1;
        for &(src, dst) in &edge_list {
            if min_pred[dst] == 0 || src < min_pred[dst] {
                min_pred[dst] = src;
            }
            if src > max_pred[dst] {
                max_pred[dst] = src;
            }
        }

        let mut is_final = vec![false; n + 1];
        finals.sort_unstable();
        finals.dedup();
        for &s in &finals {
            assert!(1 <= s && s <= n, "final state {s} out of range");
            is_final[s] = true;
        }

        Ok(WheelerDfa {
            n,
            sigma,
            rank_of,
            labels: label_ranks,
            finals,
            is_final,
            edges: edge_list,
            by_label,
            min_pred,
            max_pred,
        })
    }

    /// Parses the line-oriented text format:
    ///
    /// ```text
    /// wdfa <n> <sigma>
    /// state <index> <label> [final]     # indices 1..n ascending, label '#' only for state 1
    /// edge <source> <target>            # the edge label is the target's label
    /// ```
    ///
    /// Tokens are whitespace-separated; `sigma` is one token listing the
    /// alphabet characters in order (may be absent for a single-state
    /// automaton). Lines whose first token starts with `#` are comments.
    /// Checks structure only; Wheeler axioms are [`Self::validate_wheeler`]'s
    /// job.
    pub fn parse(input: &str) -> Result<Self, ParseError> {
        let syntax = |line: usize, msg: String| ParseError {
            line,
            kind: ParseErrorKind::Syntax(msg),
        };
        let number = |line: usize, tok: &str, what: &str| -> Result<usize, ParseError> {
            tok.parse::<usize>()
                .map_err(|_| syntax(line, format!("invalid {what} '{tok}'")))
        };

        let mut header: Option<(usize, Vec<char>)> = None;
        let mut labels: Vec<char> = Vec::new();
        let mut state_lines: Vec<usize> = Vec::new();
        let mut finals: Vec<usize> = Vec::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut edge_lines: Vec<usize> = Vec::new();
        let mut last_line = 0;

        for (lineno, raw) in input.lines().enumerate() {
            let line = lineno + 1;
            last_line = line;
            let tokens: Vec<&str> = raw.split_whitespace().collect();
            if tokens.is_empty() || tokens[0].starts_with(HASH) {
                continue;
            }
            match tokens[0] {
                "wdfa" => {
                    if header.is_some() {
                        return Err(syntax(line, "duplicate header".into()));
                    }
                    if tokens.len() < 2 || tokens.len() > 3 {
                        return Err(syntax(line, "expected 'wdfa <n> <sigma>'".into()));
                    }
                    let n = number(line, tokens[1], "state count")?;
                    let sigma: Vec<char> = tokens.get(2).map_or_else(Vec::new, |s| s.chars().collect());
                    header = Some((n, sigma));
                }
                "state" => {
                    let (n, _) = header
                        .as_ref()
                        .ok_or_else(|| syntax(line, "header must come first".into()))?;
                    if tokens.len() < 3 || tokens.len() > 4 {
                        return Err(syntax(line, "expected 'state <index> <label> [final]'".into()));
                    }
                    let idx = number(line, tokens[1], "state index")?;
                    if idx != labels.len() + 1 {
                        return Err(syntax(
                            line,
                            format!("expected state {} here, got {idx}", labels.len() + 1),
                        ));
                    }
                    if idx > *n {
                        return Err(syntax(line, format!("state {idx} exceeds declared count {n}")));
                    }
                    let mut chars = tokens[2].chars();
                    let label = chars.next().unwrap();
                    if chars.next().is_some() {
                        return Err(syntax(line, format!("label '{}' is not a single character", tokens[2])));
                    }
                    match tokens.get(3) {
                        None => {}
                        Some(&"final") => finals.push(idx),
                        Some(other) => {
                            return Err(syntax(line, format!("unexpected token '{other}'")));
                        }
                    }
                    labels.push(label);
                    state_lines.push(line);
                }
                "edge" => {
                    if header.is_none() {
                        return Err(syntax(line, "header must come first".into()));
                    }
                    if tokens.len() != 3 {
                        return Err(syntax(line, "expected 'edge <source> <target>'".into()));
                    }
                    let src = number(line, tokens[1], "source state")?;
                    let dst = number(line, tokens[2], "target state")?;
                    edges.push((src, dst));
                    edge_lines.push(line);
                }
                other => {
                    return Err(syntax(line, format!("unknown directive '{other}'")));
                }
            }
        }

        let (n, sigma) = header.ok_or_else(|| syntax(last_line + 1, "missing 'wdfa' header".into()))?;
        if labels.len() != n {
            return Err(syntax(
                last_line + 1,
                format!("header declares {n} states but {} were defined", labels.len()),
            ));
        }

        WheelerDfa::from_parts(sigma, labels, finals, edges).map_err(|err| {
            let line = match &err {
                BuildError::EdgeOutOfRange { index, .. }
                | BuildError::DuplicateEdge { index, .. }
                | BuildError::EdgeIntoInitial { index, .. }
                | BuildError::Nondeterministic { index, .. } => edge_lines[*index],
                BuildError::Unreachable { state } => state_lines[*state - 1],
                BuildError::InitialLabel => state_lines[0],
                BuildError::HashLabel { state } | BuildError::UnknownLabel { state, .. } => {
                    state_lines[*state - 1]
                }
                _ => state_lines.last().copied().unwrap_or(last_line),
            };
            ParseError {
                line,
                kind: ParseErrorKind::Structure(err),
            }
        })
    }

    pub fn state_count(&self) -> usize {
        self.n
    }

    /// The interval `[1, n]` of all states; `T(ε)`.
    pub fn full_interval(&self) -> StateInterval {
        StateInterval::range(1, self.n)
    }

    pub fn sigma(&self) -> &[char] {
        &self.sigma
    }

    /// Incoming label of state `i` (`#` for state 1).
    pub fn label(&self, i: usize) -> char {
        let rank = self.label_rank(i);
        if rank == 0 {
            HASH
        } else {
            self.sigma[rank - 1]
        }
    }

    /// Position of `label(i)` in the alphabet order; `#` is 0, `sigma[k]`
    /// is `k + 1`. Label comparisons go through ranks so that the file's
    /// declared order governs, not the characters' code points.
    pub fn label_rank(&self, i: usize) -> usize {
        assert!(1 <= i && i <= self.n, "state {i} out of range");
        self.labels[i]
    }

    /// Rank of an alphabet character, or `None` if it is not in sigma.
    pub fn char_rank(&self, c: char) -> Option<usize> {
        self.rank_of.get(&c).copied()
    }

    pub fn finals(&self) -> &[usize] {
        &self.finals
    }

    pub fn is_final(&self, i: usize) -> bool {
        self.is_final[i]
    }

    /// All edges as `(source, target)` pairs, sorted by `(source, target)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Smallest `k` with an edge `(k, i)`; state 1 answers itself through
    /// the conceptual `#` self-loop.
    pub fn min_predecessor(&self, i: usize) -> usize {
        assert!(1 <= i && i <= self.n, "state {i} out of range");
        self.min_pred[i]
    }

    /// Largest `k` with an edge `(k, i)`; 1 for state 1.
    pub fn max_predecessor(&self, i: usize) -> usize {
        assert!(1 <= i && i <= self.n, "state {i} out of range");
        self.max_pred[i]
    }

    /// One forward-search step: the interval of states reachable via a
    /// `c`-labeled edge from some state in `iv`.
    ///
    /// The `c`-edges sorted by source have weakly increasing targets
    /// (Axiom 2), so the edges with source in `[l, r]` form a contiguous
    /// run found with two binary searches, and their first and last
    /// targets bound the answer. Characters outside the alphabet yield
    /// `Empty` (zero occurrences).
    pub fn forward_step(&self, iv: StateInterval, c: char) -> StateInterval {
        let Some((l, r)) = iv.bounds() else {
            return StateInterval::Empty;
        };
        let Some(rank) = self.char_rank(c) else {
            return StateInterval::Empty;
        };
        let bucket = &self.by_label[rank - 1];
        let lo = bucket.sources.partition_point(|&s| s < l);
        let hi = bucket.sources.partition_point(|&s| s <= r);
        if lo == hi {
            StateInterval::Empty
        } else {
            StateInterval::range(bucket.targets[lo], bucket.targets[hi - 1])
        }
    }

    /// Checks the two Wheeler axioms, returning the first violation found.
    /// Axiom 1 reduces to adjacent label monotonicity; Axiom 2 is a
    /// quadratic edge-pair scan with early exit.
    pub fn validate_wheeler(&self) -> Result<(), WheelerViolation> {
        for i in 1..self.n {
            if self.labels[i] > self.labels[i + 1] {
                return Err(WheelerViolation::Axiom1 {
                    left: i,
                    right: i + 1,
                });
            }
        }
        for (a, &(src_a, dst_a)) in self.edges.iter().enumerate() {
            for &(src_b, dst_b) in &self.edges[a + 1..] {
                if self.labels[dst_a] != self.labels[dst_b] {
                    continue;
                }
                let violated = (dst_a < dst_b && src_a >= src_b)
                    || (dst_b < dst_a && src_b >= src_a);
                if violated {
                    return Err(WheelerViolation::Axiom2 {
                        first: (src_a, dst_a),
                        second: (src_b, dst_b),
                    });
                }
            }
        }
        Ok(())
    }
}
