//! Optimal concatenations of strings drawn from given sets.
//!
//! The two-set problem grows an A-concatenation and a B-concatenation side
//! by side, always extending the shorter one. The longer one then equals
//! the shorter plus an overhang, a suffix `host[j..]` of the last string
//! appended to it. States are `(side, host, j)`; Dijkstra over them, with
//! the shorter length as distance, yields the shortest common string.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeSet, BinaryHeap};

use crate::error::{Error, Result};
use crate::primitives::failure::{border_table, kmp_scan};
use crate::text::{Symbol, Text};

/// Which set the overhang comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// `(side, host, offset)` with offsets 0-indexed, `0 <= offset <= len(host)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConcatState {
    pub side: Side,
    pub host: usize,
    pub offset: usize,
}

/// For each host string of either set and each guest from the other set,
/// the offsets `j` at which the guest agrees with `host[j..]` on every
/// overlapping position.
#[derive(Debug, Clone)]
pub struct MatchTable {
    // table[side][host][guest][j]
    table: [Vec<Vec<Vec<bool>>>; 2],
}

impl MatchTable {
    pub fn matches(&self, side: Side, host: usize, guest: usize, offset: usize) -> bool {
        self.table[side.index()][host][guest][offset]
    }

    /// All matching offsets, ascending.
    pub fn offsets(&self, side: Side, host: usize, guest: usize) -> Vec<usize> {
        let row = &self.table[side.index()][host][guest];
        (0..row.len()).filter(|&j| row[j]).collect()
    }
}

fn validate_set(set: &[Text]) -> Result<()> {
    if set.is_empty() {
        return Err(Error::EmptyInput);
    }
    if set.iter().any(|s| s.is_empty()) {
        return Err(Error::EmptyPattern);
    }
    Ok(())
}

/// Deduplicates while keeping first-occurrence order.
fn dedup(set: &[Text]) -> Vec<Text> {
    let mut seen = BTreeSet::new();
    set.iter()
        .filter(|s| seen.insert((*s).clone()))
        .cloned()
        .collect()
}

/// Match offsets of every guest against every host, via KMP: full
/// occurrences give `j = start`, and each border `j'` of the longest guest
/// prefix that ends the host gives the overhanging offset `j = len - j'`.
pub fn build_match_table(a: &[Text], b: &[Text]) -> Result<MatchTable> {
    validate_set(a)?;
    validate_set(b)?;
    let sets = [a, b];
    let borders: [Vec<Vec<usize>>; 2] = [
        a.iter().map(|s| border_table(s)).collect(),
        b.iter().map(|s| border_table(s)).collect(),
    ];
    let table = [Side::A, Side::B].map(|side| {
        let hosts = sets[side.index()];
        let guests = sets[side.other().index()];
        let guest_borders = &borders[side.other().index()];
        hosts
            .iter()
            .map(|host| {
                guests
                    .iter()
                    .zip(guest_borders)
                    .map(|(guest, gb)| {
                        let mut row = vec![false; host.len() + 1];
                        let (starts, mut tail) = kmp_scan(guest, gb, host);
                        for j in starts {
                            row[j] = true;
                        }
                        loop {
                            row[host.len() - tail] = true;
                            if tail == 0 {
                                break;
                            }
                            tail = gb[tail];
                        }
                        row
                    })
                    .collect()
            })
            .collect()
    });
    Ok(MatchTable { table })
}

/// Shortest-path tree over overhang states.
struct Solver<'a> {
    sets: [&'a [Text]; 2],
    dist: Vec<usize>,
    pred: Vec<Option<usize>>,
    states: Vec<ConcatState>,
    #[cfg_attr(not(test), allow(dead_code))]
    edges: usize,
}

impl<'a> Solver<'a> {
    fn run(a: &'a [Text], b: &'a [Text]) -> Result<Self> {
        let matches = build_match_table(a, b)?;
        let sets = [a, b];
        let mut states = Vec::new();
        let mut ids = [Vec::new(), Vec::new()];
        for side in [Side::A, Side::B] {
            for (host, s) in sets[side.index()].iter().enumerate() {
                ids[side.index()].push(states.len());
                states.extend((0..=s.len()).map(|offset| ConcatState { side, host, offset }));
            }
        }
        let id = |st: &ConcatState| ids[st.side.index()][st.host] + st.offset;
        let mut dist = vec![usize::MAX; states.len()];
        let mut pred = vec![None; states.len()];
        let mut heap = BinaryHeap::new();
        let mut edges = 0;
        for (v, st) in states.iter().enumerate() {
            if st.offset == 0 {
                dist[v] = 0;
                heap.push(Reverse((0usize, v)));
            }
        }
        while let Some(Reverse((d, v))) = heap.pop() {
            if d > dist[v] {
                continue;
            }
            let st = states[v];
            let host_len = sets[st.side.index()][st.host].len();
            if st.offset == host_len {
                // both sides equal: nothing left to extend
                continue;
            }
            let remaining = host_len - st.offset;
            for (g, guest) in sets[st.side.other().index()].iter().enumerate() {
                if !matches.matches(st.side, st.host, g, st.offset) {
                    continue;
                }
                edges += 1;
                let (next, cost) = if guest.len() <= remaining {
                    (
                        ConcatState {
                            offset: st.offset + guest.len(),
                            ..st
                        },
                        guest.len(),
                    )
                } else {
                    (
                        ConcatState {
                            side: st.side.other(),
                            host: g,
                            offset: remaining,
                        },
                        remaining,
                    )
                };
                let u = id(&next);
                if d + cost < dist[u] {
                    dist[u] = d + cost;
                    pred[u] = Some(v);
                    heap.push(Reverse((d + cost, u)));
                }
            }
        }
        Ok(Solver {
            sets,
            dist,
            pred,
            states,
            edges,
        })
    }

    fn host(&self, st: &ConcatState) -> &Text {
        &self.sets[st.side.index()][st.host]
    }

    /// The shorter string along the shortest path to `v`.
    fn shorter_string(&self, mut v: usize) -> Vec<Symbol> {
        let mut pieces = Vec::new();
        while let Some(u) = self.pred[v] {
            let st = self.states[u];
            let cost = self.dist[v] - self.dist[u];
            pieces.push(&self.host(&st)[st.offset..st.offset + cost]);
            v = u;
        }
        pieces.reverse();
        pieces.concat()
    }

    fn reached(&self) -> impl Iterator<Item = (usize, &ConcatState)> + '_ {
        self.states
            .iter()
            .enumerate()
            .filter(move |(v, _)| self.dist[*v] != usize::MAX)
    }
}

/// Length and one witness of the shortest string that is both a
/// concatenation of strings from `a` and of strings from `b`.
pub fn shortest_common_concat(a: &[Text], b: &[Text]) -> Result<Option<(usize, Text)>> {
    let (a, b) = (dedup(a), dedup(b));
    let solver = Solver::run(&a, &b)?;
    let best = solver
        .reached()
        .filter(|(_, st)| st.offset == solver.host(st).len())
        .min_by_key(|(v, _)| (solver.dist[*v], *v));
    Ok(best.map(|(v, _)| {
        (
            solver.dist[v],
            Text::new(solver.shorter_string(v)).expect("symbols come from inputs"),
        )
    }))
}

/// Shortest palindrome that is a concatenation of strings from `a`.
///
/// Pairs `a` with its reversed strings; a reached state whose overhang is a
/// palindrome closes into `X + overhang + reverse(X)`.
pub fn shortest_palindrome_concat(a: &[Text]) -> Result<Option<(usize, Text)>> {
    validate_set(a)?;
    let a = dedup(a);
    let b: Vec<Text> = a
        .iter()
        .map(|s| Text::new(s.iter().rev().copied().collect()).unwrap())
        .collect();
    let solver = Solver::run(&a, &b)?;
    let pal_suffix: [Vec<Vec<bool>>; 2] = [
        a.iter().map(|s| palindromic_suffixes(s)).collect(),
        b.iter().map(|s| palindromic_suffixes(s)).collect(),
    ];
    let best = solver
        .reached()
        .filter(|(_, st)| pal_suffix[st.side.index()][st.host][st.offset])
        .map(|(v, st)| (2 * solver.dist[v] + solver.host(st).len() - st.offset, v))
        .min();
    Ok(best.map(|(len, v)| {
        let st = solver.states[v];
        let mut w = solver.shorter_string(v);
        let tail: Vec<Symbol> = w.iter().rev().copied().collect();
        w.extend_from_slice(&solver.host(&st)[st.offset..]);
        w.extend(tail);
        debug_assert_eq!(w.len(), len);
        (len, Text::new(w).unwrap())
    }))
}

/// `out[j]` is true iff `s[j..]` is a palindrome (including the empty and
/// single-symbol suffixes), by center expansion.
fn palindromic_suffixes(s: &[Symbol]) -> Vec<bool> {
    let n = s.len();
    let mut out = vec![false; n + 1];
    out[n] = true;
    for center in 0..2 * n {
        // odd-length palindromes centre on a symbol, even-length between two
        let mut lo = (center / 2) as isize;
        let mut hi = center / 2 + center % 2;
        while lo >= 0 && hi < n && s[lo as usize] == s[hi] {
            if hi == n - 1 {
                out[lo as usize] = true;
            }
            lo -= 1;
            hi += 1;
        }
    }
    out
}

/// Orders `x` before `y` when `x + y` is lexicographically smaller than
/// `y + x`; equal concatenations put the shorter string first.
pub fn concat_order(x: &[Symbol], y: &[Symbol]) -> Ordering {
    let xy = x.iter().chain(y);
    let yx = y.iter().chain(x);
    xy.cmp(yx).then_with(|| x.len().cmp(&y.len()))
}

/// Lexicographically smallest concatenation of all strings in some order.
pub fn min_lex_concat(strings: &[Text]) -> Result<Text> {
    if strings.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut order: Vec<&Text> = strings.iter().collect();
    order.sort_by(|x, y| concat_order(x, y));
    Ok(Text::new(order.into_iter().flat_map(|t| t.iter().copied()).collect()).unwrap())
}
