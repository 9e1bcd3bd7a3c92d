//! Brute-force reference implementations. Each one is deliberately naive,
//! shares no algorithmic code with the rest of the crate, and refuses
//! inputs above its size cap instead of running indefinitely.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::counting::{EpsilonDfa, OccurrenceSpec};
use crate::error::{Error, Result};
use crate::subsequences::{Agg, AggPair};
use crate::text::{Symbol, Text};

/// Largest number of candidate strings any enumerating oracle will visit.
pub const ENUMERATION_CAP: u64 = 10_000_000;

fn cap(what: &'static str, limit: u64) -> Error {
    Error::CapExceeded { what, limit }
}

fn occurrences(host: &[Symbol], pat: &[Symbol]) -> usize {
    if pat.len() > host.len() {
        return 0;
    }
    (0..=host.len() - pat.len())
        .filter(|&i| &host[i..i + pat.len()] == pat)
        .count()
}

fn contains(host: &[Symbol], pat: &[Symbol]) -> bool {
    pat.is_empty() || host.windows(pat.len()).any(|w| w == pat)
}

fn power(m: u64, e: usize) -> u64 {
    (0..e).fold(1u64, |acc, _| acc.saturating_mul(m))
}

/// Calls `f` on every string of length `len` over `1..=m`, in lexicographic
/// order, stopping early when `f` returns `true`.
fn each_string(m: u32, len: usize, mut f: impl FnMut(&[Symbol]) -> bool) -> bool {
    let mut s = vec![1; len];
    loop {
        if f(&s) {
            return true;
        }
        let mut i = len;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if s[i] < m {
                s[i] += 1;
                break;
            }
            s[i] = 1;
        }
    }
}

/// Whether the prefix of length `i` is also a suffix of the prefix of length `j`.
pub fn oracle_pq(s: &[Symbol], i: usize, j: usize) -> Result<bool> {
    if i > j || j > s.len() {
        return Err(Error::Bounds(format!("need i <= j <= {}", s.len())));
    }
    Ok(s[..i] == s[j - i..j])
}

/// Longest `i <= k` whose prefix is a suffix of the prefix of length `j`.
pub fn oracle_lpq(s: &[Symbol], j: usize, k: usize) -> Result<usize> {
    if k > j || j > s.len() {
        return Err(Error::Bounds(format!("need k <= j <= {}", s.len())));
    }
    Ok((0..=k)
        .rev()
        .find(|&i| s[..i] == s[j - i..j])
        .expect("i = 0 always matches"))
}

/// Whether `s` splits into pieces drawn from `set` (at least one piece).
pub fn parses_as(s: &[Symbol], set: &[Text]) -> bool {
    let mut ok = vec![false; s.len() + 1];
    ok[0] = true;
    for end in 1..=s.len() {
        ok[end] = set.iter().any(|p| {
            !p.is_empty() && p.len() <= end && ok[end - p.len()] && s[end - p.len()..end] == p[..]
        });
    }
    !s.is_empty() && ok[s.len()]
}

fn alphabet_of(sets: &[&[Text]]) -> Vec<Symbol> {
    let syms: BTreeSet<Symbol> = sets
        .iter()
        .flat_map(|s| s.iter())
        .flat_map(|t| t.iter().copied())
        .collect();
    syms.into_iter().collect()
}

/// First string (by length, then lexicographically) up to `max_len` over the
/// symbols used in `sets` that satisfies `keep`.
fn first_string(
    sets: &[&[Text]],
    max_len: usize,
    mut keep: impl FnMut(&[Symbol]) -> bool,
) -> Result<Option<(usize, Text)>> {
    let sigma = alphabet_of(sets);
    if sigma.is_empty() {
        return Ok(None);
    }
    let visits: u64 = (1..=max_len)
        .map(|l| power(sigma.len() as u64, l))
        .fold(0, u64::saturating_add);
    if visits > ENUMERATION_CAP {
        return Err(cap("oracle enumeration", ENUMERATION_CAP));
    }
    for len in 1..=max_len {
        let mut found = None;
        each_string(sigma.len() as u32, len, |idx| {
            let s: Vec<Symbol> = idx.iter().map(|&i| sigma[i as usize - 1]).collect();
            if keep(&s) {
                found = Some(s);
                true
            } else {
                false
            }
        });
        if let Some(s) = found {
            return Ok(Some((len, Text::new(s)?)));
        }
    }
    Ok(None)
}

/// Shortest string of length at most `max_len` that is a concatenation of
/// strings of `a` and also of strings of `b`; lexicographically smallest
/// among the shortest. `None` means nothing within the cap.
pub fn oracle_shortest_common_concat(
    a: &[Text],
    b: &[Text],
    max_len: usize,
) -> Result<Option<(usize, Text)>> {
    first_string(&[a, b], max_len, |s| parses_as(s, a) && parses_as(s, b))
}

/// Shortest palindrome of length at most `max_len` that is a concatenation
/// of strings of `a`.
pub fn oracle_palindrome_concat(a: &[Text], max_len: usize) -> Result<Option<(usize, Text)>> {
    first_string(&[a], max_len, |s| {
        s.iter().eq(s.iter().rev()) && parses_as(s, a)
    })
}

/// Smallest concatenation over all orderings of `strings`.
pub fn oracle_min_lex(strings: &[Text]) -> Result<Text> {
    const MAX: usize = 8;
    if strings.len() > MAX {
        return Err(cap("permutation oracle input", MAX as u64));
    }
    fn go(rest: &mut Vec<&Text>, acc: &mut Vec<Symbol>, best: &mut Option<Vec<Symbol>>) {
        if rest.is_empty() {
            if best.as_ref().is_none_or(|b| *acc < *b) {
                *best = Some(acc.clone());
            }
            return;
        }
        for i in 0..rest.len() {
            let t = rest.remove(i);
            let mark = acc.len();
            acc.extend_from_slice(t);
            go(rest, acc, best);
            acc.truncate(mark);
            rest.insert(i, t);
        }
    }
    let mut best = None;
    go(&mut strings.iter().collect(), &mut Vec::new(), &mut best);
    Text::new(best.unwrap_or_default())
}

/// Longest substring occurring at least `a[i]` times in at least `f` texts,
/// with the lexicographically smallest witness among the longest.
pub fn oracle_lccs(texts: &[Text], a: &[usize], f: usize) -> Result<(usize, Text)> {
    const MAX: usize = 100;
    let total: usize = texts.iter().map(|t| t.len()).sum();
    if total > MAX {
        return Err(cap("lccs oracle total length", MAX as u64));
    }
    if a.len() != texts.len() {
        return Err(Error::InvalidArgument("one threshold per text".into()));
    }
    let mut candidates = BTreeSet::new();
    for t in texts {
        for i in 0..t.len() {
            for j in i + 1..=t.len() {
                candidates.insert(t[i..j].to_vec());
            }
        }
    }
    let mut best: Vec<Symbol> = Vec::new();
    for c in candidates {
        let hits = texts
            .iter()
            .zip(a)
            .filter(|(t, &need)| occurrences(t, &c) >= need)
            .count();
        if hits >= f && c.len() > best.len() {
            best = c;
        }
    }
    Ok((best.len(), Text::new(best)?))
}

/// Whether `w` occurs at least `a[i]` times in at least `f` texts.
pub fn lccs_witness_valid(texts: &[Text], a: &[usize], f: usize, w: &[Symbol]) -> bool {
    texts
        .iter()
        .zip(a)
        .filter(|(t, &need)| occurrences(t, w) >= need)
        .count()
        >= f
}

fn combine(agg: Agg, x: f64, y: f64) -> f64 {
    match agg {
        Agg::Sum => x + y,
        Agg::Product => x * y,
        Agg::Max => {
            if x >= y {
                x
            } else {
                y
            }
        }
        Agg::Min => {
            if x <= y {
                x
            } else {
                y
            }
        }
    }
}

fn identity(agg: Agg) -> f64 {
    match agg {
        Agg::Sum => 0.0,
        Agg::Product => 1.0,
        Agg::Max => f64::NEG_INFINITY,
        Agg::Min => f64::INFINITY,
    }
}

/// Grid cells of a K-dimensional table, linearized with the first string's
/// coordinate varying slowest.
struct Grid {
    strides: Vec<usize>,
    size: usize,
}

impl Grid {
    fn new(lens: impl Iterator<Item = usize>, limit: u64) -> Result<Grid> {
        let dims: Vec<usize> = lens.map(|l| l + 1).collect();
        let size = dims
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d as u64))
            .filter(|&s| s <= limit);
        let size = size.ok_or(cap("grid oracle cells", limit))? as usize;
        let mut strides = vec![1; dims.len()];
        for i in (0..dims.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        Ok(Grid { strides, size })
    }

    fn coords(&self, mut cell: usize) -> Vec<usize> {
        self.strides
            .iter()
            .map(|&s| {
                let c = cell / s;
                cell %= s;
                c
            })
            .collect()
    }
}

/// Max-weight common subsequence by dynamic programming over the full
/// position grid. Returns the neutral value of `agg1` if nothing matches.
pub fn oracle_mwcs(texts: &[Text], weights: &[Vec<f64>], aggs: AggPair) -> Result<f64> {
    let grid = Grid::new(texts.iter().map(|t| t.len()), 100_000)?;
    let mut best = vec![identity(aggs.agg1); grid.size];
    for cell in 0..grid.size {
        let p = grid.coords(cell);
        if p.contains(&0) {
            continue;
        }
        let mut v = identity(aggs.agg1);
        for &s in &grid.strides {
            let w = best[cell - s];
            if w > v {
                v = w;
            }
        }
        let sym = texts[0][p[0] - 1];
        if texts.iter().zip(&p).all(|(t, &x)| t[x - 1] == sym) {
            let diag: usize = grid.strides.iter().sum();
            let w = weights
                .iter()
                .zip(&p)
                .map(|(wp, &x)| wp[x - 1])
                .reduce(|x, y| combine(aggs.agg2, x, y))
                .expect("K >= 1");
            let take = combine(aggs.agg1, best[cell - diag], w);
            if take > v {
                v = take;
            }
        }
        best[cell] = v;
    }
    Ok(best[grid.size - 1])
}

/// Length of the longest common subsequence of all `texts`.
pub fn oracle_lcs_length(texts: &[Text]) -> Result<usize> {
    let grid = Grid::new(texts.iter().map(|t| t.len()), 1_000_000)?;
    let diag: usize = grid.strides.iter().sum();
    let mut len = vec![0usize; grid.size];
    for cell in 0..grid.size {
        let p = grid.coords(cell);
        if p.contains(&0) {
            continue;
        }
        let sym = texts[0][p[0] - 1];
        len[cell] = if texts.iter().zip(&p).all(|(t, &x)| t[x - 1] == sym) {
            len[cell - diag] + 1
        } else {
            grid.strides
                .iter()
                .map(|&s| len[cell - s])
                .max()
                .unwrap_or(0)
        };
    }
    Ok(len[grid.size - 1])
}

/// First string over `1..=m`, by length then lexicographically, that is a
/// substring of none of `texts`.
pub fn oracle_absent(texts: &[Text], m: u32, max_len: usize) -> Result<Text> {
    for len in 1..=max_len {
        if power(m as u64, len) > ENUMERATION_CAP {
            break;
        }
        let mut found = None;
        each_string(m, len, |s| {
            if texts.iter().all(|t| !contains(t, s)) {
                found = Some(s.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(s) = found {
            return Text::new(s);
        }
    }
    Err(cap("absent-string oracle length", max_len as u64))
}

fn satisfies(spec: &OccurrenceSpec, s: &[Symbol]) -> bool {
    spec.forbidden.iter().all(|p| !contains(s, p))
        && spec
            .counted
            .iter()
            .all(|p| p.dont_care || p.occ.contains(&(occurrences(s, &p.pattern) as u32)))
}

fn check_enumeration(m: u32, lengths: &BTreeSet<usize>) -> Result<()> {
    const MAX: u64 = 1_000_000;
    let visits = lengths
        .iter()
        .map(|&l| power(m as u64, l))
        .fold(0, u64::saturating_add);
    if m == 0 || visits > MAX {
        return Err(cap("counting oracle enumeration", MAX));
    }
    Ok(())
}

/// Counts strings meeting `spec` by enumerating every candidate.
pub fn oracle_count(spec: &OccurrenceSpec) -> Result<BigUint> {
    check_enumeration(spec.alphabet, &spec.lengths)?;
    let mut n = 0u64;
    for &len in &spec.lengths {
        each_string(spec.alphabet, len, |s| {
            n += satisfies(spec, s) as u64;
            false
        });
    }
    Ok(BigUint::from(n))
}

/// Weight of `s` under `spec` and `agg`, or `None` if `s` violates `spec`.
///
/// Each position contributes the aggregate of the weights of all patterns
/// ending there (one for product, zero otherwise, when none does).
pub fn oracle_string_weight(spec: &OccurrenceSpec, agg: Agg, s: &[Symbol]) -> Option<f64> {
    if !satisfies(spec, s) || !spec.lengths.contains(&s.len()) {
        return None;
    }
    let empty = if agg == Agg::Product { 1.0 } else { 0.0 };
    let mut total = empty;
    for end in 1..=s.len() {
        let here: Vec<f64> = spec
            .counted
            .iter()
            .filter(|p| p.pattern.len() <= end && s[end - p.pattern.len()..end] == p.pattern[..])
            .map(|p| p.weight)
            .collect();
        let local = here
            .into_iter()
            .reduce(|x, y| combine(agg, x, y))
            .unwrap_or(empty);
        total = combine(agg, total, local);
    }
    Some(total)
}

/// Heaviest string meeting `spec`, by enumeration. Ties keep the first
/// string found (shorter, then lexicographically smaller).
pub fn oracle_max_weight_string(spec: &OccurrenceSpec, agg: Agg) -> Result<Option<(f64, Text)>> {
    if agg == Agg::Min {
        return Err(Error::InvalidArgument(
            "min is not supported for string weights".into(),
        ));
    }
    check_enumeration(spec.alphabet, &spec.lengths)?;
    let mut best: Option<(f64, Vec<Symbol>)> = None;
    for &len in &spec.lengths {
        each_string(spec.alphabet, len, |s| {
            if let Some(w) = oracle_string_weight(spec, agg, s) {
                if best.as_ref().is_none_or(|(bw, _)| w > *bw) {
                    best = Some((w, s.to_vec()));
                }
            }
            false
        });
    }
    best.map(|(w, s)| Ok((w, Text::new(s)?))).transpose()
}

/// Non-absorbing edges on a cycle: an edge `q -> r` on symbol `c` is on one
/// when following non-absorbing `c`-edges from `r` leads back to `q`.
pub fn oracle_cycle_edges(dfa: &EpsilonDfa) -> BTreeSet<usize> {
    let edges = dfa.edges();
    let hop = |from: usize, c: Symbol| {
        edges
            .iter()
            .find(|e| !e.absorbing && e.symbol == c && e.from == from)
            .map(|e| e.to)
    };
    let mut out = BTreeSet::new();
    for (i, e) in edges.iter().enumerate() {
        if e.absorbing {
            continue;
        }
        let mut v = e.to;
        for _ in 0..dfa.states() {
            if v == e.from {
                out.insert(i);
                break;
            }
            match hop(v, e.symbol) {
                Some(w) => v = w,
                None => break,
            }
        }
    }
    out
}

/// Accepting runs over all strings with a length in `lengths`, counted by
/// direct recursive simulation after removing non-absorbing cycle edges.
pub fn oracle_edfa_count(dfa: &EpsilonDfa, lengths: &BTreeSet<usize>) -> Result<BigUint> {
    check_enumeration(dfa.alphabet(), lengths)?;
    let cut = oracle_cycle_edges(dfa);
    let edges: Vec<_> = dfa
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| !cut.contains(i))
        .map(|(_, e)| *e)
        .collect();

    fn runs(
        edges: &[crate::counting::DfaEdge],
        finals: &dyn Fn(usize) -> bool,
        q: usize,
        s: &[Symbol],
    ) -> u64 {
        let Some((&c, rest)) = s.split_first() else {
            return finals(q) as u64;
        };
        edges
            .iter()
            .filter(|e| e.from == q && e.symbol == c)
            .map(|e| {
                if e.absorbing {
                    runs(edges, finals, e.to, rest)
                } else {
                    runs(edges, finals, e.to, s)
                }
            })
            .sum()
    }

    let finals = |q: usize| dfa.is_final(q);
    let mut n = 0u64;
    for &len in lengths {
        each_string(dfa.alphabet(), len, |s| {
            n += runs(&edges, &finals, dfa.initial(), s);
            false
        });
    }
    Ok(BigUint::from(n))
}
