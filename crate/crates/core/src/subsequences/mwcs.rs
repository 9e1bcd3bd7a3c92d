//! Maximum-weight common (non-contiguous) subsequence of K strings.

use crate::error::{Error, Result};
use crate::subsequences::range_max::{RangeMaxIndex, MAX_DIMENSIONS};
use crate::text::{Symbol, Text};

/// Default bound on the number of matching position tuples.
pub const DEFAULT_TUPLE_CAP: usize = 1_000_000;

/// Registered aggregate functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Agg {
    Sum,
    Product,
    Max,
    Min,
}

impl Agg {
    pub fn combine(self, a: f64, b: f64) -> f64 {
        match self {
            Agg::Sum => a + b,
            Agg::Product => a * b,
            Agg::Max => a.max(b),
            Agg::Min => a.min(b),
        }
    }

    /// Identity element: `combine(x, neutral) == x`.
    pub fn neutral(self) -> f64 {
        match self {
            Agg::Sum => 0.0,
            Agg::Product => 1.0,
            Agg::Max => f64::NEG_INFINITY,
            Agg::Min => f64::INFINITY,
        }
    }

    /// Folds a non-empty sequence.
    pub fn fold(self, values: impl IntoIterator<Item = f64>) -> f64 {
        let mut it = values.into_iter();
        let first = it.next().expect("fold over an empty sequence");
        it.fold(first, |acc, v| self.combine(acc, v))
    }

    pub fn name(self) -> &'static str {
        match self {
            Agg::Sum => "sum",
            Agg::Product => "product",
            Agg::Max => "max",
            Agg::Min => "min",
        }
    }
}

impl std::str::FromStr for Agg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sum" => Ok(Agg::Sum),
            "product" | "mul" => Ok(Agg::Product),
            "max" => Ok(Agg::Max),
            "min" => Ok(Agg::Min),
            other => Err(Error::InvalidArgument(format!(
                "unknown aggregate '{other}'"
            ))),
        }
    }
}

/// `agg1` combines character weights along the subsequence and must be
/// non-decreasing; `agg2` combines the K position weights of one character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AggPair {
    pub agg1: Agg,
    pub agg2: Agg,
}

impl Default for AggPair {
    fn default() -> Self {
        AggPair {
            agg1: Agg::Sum,
            agg2: Agg::Min,
        }
    }
}

/// One position per string, all holding the same symbol.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchTuple {
    /// 1-indexed positions, one per input string.
    pub positions: Vec<usize>,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MwcsResult {
    pub weight: f64,
    /// Matched tuples of the optimal subsequence, strictly increasing in
    /// every coordinate.
    pub chain: Vec<MatchTuple>,
    pub subsequence: Text,
}

/// Best `agg1`-aggregate over common subsequences, where a character
/// matched at positions `p(1..K)` weighs `agg2(wp(1, p(1)), ..., wp(K, p(K)))`.
///
/// Matching tuples are generated in lexicographic order and scored with a
/// `(K-1)`-dimensional dominance index over `(p(2), ..., p(K))`; tuples
/// sharing `p(1)` enter the index only after the whole group is scored.
pub fn max_weight_common_subsequence(
    texts: &[Text],
    weights: &[Vec<f64>],
    aggs: AggPair,
    tuple_cap: usize,
) -> Result<MwcsResult> {
    let k = texts.len();
    if k < 2 {
        return Err(Error::InvalidArgument(
            "at least two strings are required".into(),
        ));
    }
    if k - 1 > MAX_DIMENSIONS {
        return Err(Error::InvalidArgument(format!(
            "at most {} strings are supported",
            MAX_DIMENSIONS + 1
        )));
    }
    if weights.len() != k || weights.iter().zip(texts).any(|(w, t)| w.len() != t.len()) {
        return Err(Error::InvalidArgument(
            "one weight per position is required".into(),
        ));
    }
    if weights.iter().flatten().any(|&w| !w.is_finite() || w < 0.0) {
        return Err(Error::InvalidArgument(
            "position weights must be finite and non-negative".into(),
        ));
    }
    let neutral = aggs.agg1.neutral();

    // positions of each symbol in each string, ascending
    let max_sym = texts.iter().map(|t| t.max_symbol()).max().unwrap_or(0) as usize;
    let lists: Vec<Vec<Vec<u32>>> = texts
        .iter()
        .map(|t| {
            let mut l = vec![Vec::new(); max_sym + 1];
            for (q, &c) in t.iter().enumerate() {
                l[c as usize].push(q as u32 + 1);
            }
            l
        })
        .collect();

    let mut total = 0usize;
    for &c in texts[0].iter() {
        let group = lists[1..]
            .iter()
            .try_fold(1usize, |acc, l| acc.checked_mul(l[c as usize].len()));
        total = group
            .and_then(|g| total.checked_add(g))
            .unwrap_or(usize::MAX);
        if total > tuple_cap {
            return Err(Error::CapExceeded {
                what: "PMAX",
                limit: tuple_cap as u64,
            });
        }
    }

    // tuples in lexicographic order, grouped by p(1)
    let mut tuples: Vec<Vec<u32>> = Vec::with_capacity(total);
    let mut groups: Vec<std::ops::Range<usize>> = Vec::new();
    for (q1, &c) in texts[0].iter().enumerate() {
        let start = tuples.len();
        let mut cursor = vec![q1 as u32 + 1];
        extend_tuples(&lists, c, &mut cursor, &mut tuples);
        if tuples.len() > start {
            groups.push(start..tuples.len());
        }
    }
    if tuples.is_empty() {
        return Ok(MwcsResult {
            weight: neutral,
            chain: Vec::new(),
            subsequence: Text::default(),
        });
    }

    let tuple_weight = |t: &[u32]| {
        aggs.agg2.fold(
            t.iter()
                .enumerate()
                .map(|(i, &p)| weights[i][p as usize - 1]),
        )
    };
    let mut index = RangeMaxIndex::new(tuples.iter().map(|t| t[1..].to_vec()).collect(), neutral);
    let mut wmax = vec![neutral; tuples.len()];
    let mut pred: Vec<Option<usize>> = vec![None; tuples.len()];
    for g in &groups {
        for t in g.clone() {
            let best = index.query(&tuples[t][1..]);
            wmax[t] = aggs.agg1.combine(tuple_weight(&tuples[t]), best.weight);
            pred[t] = best.id;
        }
        for t in g.clone() {
            index.raise(t, wmax[t]);
        }
    }

    let end = (0..tuples.len())
        .reduce(|a, b| if wmax[b] > wmax[a] { b } else { a })
        .unwrap();
    let mut chain = Vec::new();
    let mut cur = Some(end);
    while let Some(t) = cur {
        chain.push(MatchTuple {
            positions: tuples[t].iter().map(|&p| p as usize).collect(),
            weight: tuple_weight(&tuples[t]),
        });
        cur = pred[t];
    }
    chain.reverse();
    let subsequence: Vec<Symbol> = chain.iter().map(|m| texts[0][m.positions[0] - 1]).collect();
    Ok(MwcsResult {
        weight: wmax[end],
        chain,
        subsequence: Text::new(subsequence)?,
    })
}

fn extend_tuples(
    lists: &[Vec<Vec<u32>>],
    c: Symbol,
    cursor: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    let r = cursor.len();
    if r == lists.len() {
        out.push(cursor.clone());
        return;
    }
    for &q in &lists[r][c as usize] {
        cursor.push(q);
        extend_tuples(lists, c, cursor, out);
        cursor.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(texts: &[&str]) -> (Vec<Text>, Vec<Vec<f64>>) {
        let t: Vec<Text> = texts.iter().map(|s| Text::letters(s)).collect();
        let w = t.iter().map(|s| vec![1.0; s.len()]).collect();
        (t, w)
    }

    fn lcs(texts: &[&str]) -> f64 {
        let (t, w) = unit(texts);
        max_weight_common_subsequence(&t, &w, AggPair::default(), DEFAULT_TUPLE_CAP)
            .unwrap()
            .weight
    }

    #[test]
    fn unit_weight_examples() {
        assert_eq!(lcs(&["ab", "ba"]), 1.0);
        assert_eq!(lcs(&["ab", "ab"]), 2.0);
        assert_eq!(lcs(&["abc", "acb", "bca"]), 1.0);
        assert_eq!(lcs(&["a", "b"]), 0.0);
    }

    #[test]
    fn chain_is_increasing_and_consistent() {
        let (t, w) = unit(&["abcbdab", "bdcaba"]);
        let r =
            max_weight_common_subsequence(&t, &w, AggPair::default(), DEFAULT_TUPLE_CAP).unwrap();
        assert_eq!(r.weight, 4.0);
        assert_eq!(r.chain.len(), 4);
        for pair in r.chain.windows(2) {
            assert!(pair[0]
                .positions
                .iter()
                .zip(&pair[1].positions)
                .all(|(a, b)| a < b));
        }
        let folded = r.chain.iter().fold(0.0, |acc, m| acc + m.weight);
        assert_eq!(folded, r.weight);
    }

    #[test]
    fn weighted_max_sum() {
        let t: Vec<Text> = ["ab", "ab"].iter().map(|s| Text::letters(s)).collect();
        let w = vec![vec![2.0, 5.0], vec![3.0, 1.0]];
        let r = max_weight_common_subsequence(
            &t,
            &w,
            AggPair {
                agg1: Agg::Max,
                agg2: Agg::Sum,
            },
            100,
        )
        .unwrap();
        assert_eq!(r.weight, 6.0);
    }

    #[test]
    fn errors() {
        let (t, w) = unit(&["aaaa", "aaaa"]);
        assert_eq!(
            max_weight_common_subsequence(&t, &w, AggPair::default(), 15)
                .unwrap_err()
                .to_string(),
            "PMAX exceeded (limit 15)"
        );
        let (t, w) = unit(&["a"]);
        assert!(max_weight_common_subsequence(&t, &w, AggPair::default(), 10).is_err());
        let (t, _) = unit(&["a", "a"]);
        assert!(max_weight_common_subsequence(
            &t,
            &[vec![-1.0], vec![1.0]],
            AggPair::default(),
            10
        )
        .is_err());
        let (t, w) = unit(&["a", "a", "a", "a", "a"]);
        assert!(max_weight_common_subsequence(&t, &w, AggPair::default(), 10).is_err());
    }

    #[test]
    fn agg_names_parse() {
        for a in [Agg::Sum, Agg::Product, Agg::Max, Agg::Min] {
            assert_eq!(a.name().parse::<Agg>().unwrap(), a);
            assert_eq!(a.combine(3.0, a.neutral()), 3.0);
        }
        assert!("avg".parse::<Agg>().is_err());
    }
}
