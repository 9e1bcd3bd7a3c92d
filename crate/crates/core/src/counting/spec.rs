use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::primitives::automaton::PatternAutomaton;
use crate::text::Text;

/// Bound on `states * occurrence vectors` for one DP layer.
pub const DEFAULT_TABLE_CAP: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct CountedPattern {
    pub pattern: Text,
    /// Allowed occurrence counts, each at most the enclosing `OccurrenceSpec::k`.
    pub occ: BTreeSet<u32>,
    pub weight: f64,
    /// Occurrences contribute weight but are not constrained.
    pub dont_care: bool,
}

impl CountedPattern {
    pub fn new(pattern: Text, occ: impl IntoIterator<Item = u32>) -> Self {
        CountedPattern {
            pattern,
            occ: occ.into_iter().collect(),
            weight: 0.0,
            dont_care: false,
        }
    }

    pub fn weighted(mut self, weight: f64) -> Self {
        self.weight = weight;
        self
    }

    pub fn ignoring_count(mut self) -> Self {
        self.dont_care = true;
        self
    }
}

/// Strings over `1..=alphabet` of a length in `lengths` that avoid every
/// `forbidden` pattern and contain each counted pattern a number of times
/// drawn from its `occ` set (overlapping occurrences count).
#[derive(Debug, Clone, PartialEq)]
pub struct OccurrenceSpec {
    pub alphabet: u32,
    pub forbidden: Vec<Text>,
    pub counted: Vec<CountedPattern>,
    pub k: u32,
    pub lengths: BTreeSet<usize>,
}

impl OccurrenceSpec {
    pub fn new(alphabet: u32, lengths: impl IntoIterator<Item = usize>) -> Self {
        OccurrenceSpec {
            alphabet,
            forbidden: Vec::new(),
            counted: Vec::new(),
            k: 0,
            lengths: lengths.into_iter().collect(),
        }
    }

    pub fn forbid(mut self, pattern: Text) -> Self {
        self.forbidden.push(pattern);
        self
    }

    pub fn count(mut self, pattern: CountedPattern) -> Self {
        self.counted.push(pattern);
        self
    }

    pub fn with_cap(mut self, k: u32) -> Self {
        self.k = k;
        self
    }

    pub fn max_length(&self) -> usize {
        self.lengths.iter().next_back().copied().unwrap_or(0)
    }
}

/// Automaton plus the mixed-radix occurrence-vector layout shared by the
/// counting and max-weight programs.
///
/// Only constrained patterns get a vector component. Component values run
/// `0..=k`, plus `k + 1` as an absorbing overflow marker.
#[derive(Debug)]
pub(crate) struct Layout {
    pub automaton: PatternAutomaton,
    pub radix: usize,
    pub vectors: usize,
    // per state, the place values of tracked patterns ending there
    bumps: Vec<Vec<usize>>,
    pub accept: Vec<bool>,
}

impl Layout {
    pub fn new(spec: &OccurrenceSpec, cap: usize) -> Result<Self> {
        if spec.alphabet == 0 {
            return Err(Error::InvalidArgument("alphabet must be non-empty".into()));
        }
        for p in &spec.counted {
            if let Some(&big) = p.occ.iter().next_back() {
                if big > spec.k && !p.dont_care {
                    return Err(Error::InvalidArgument(format!(
                        "occurrence count {big} exceeds k = {}",
                        spec.k
                    )));
                }
            }
            if !p.weight.is_finite() || p.weight < 0.0 {
                return Err(Error::InvalidArgument(
                    "pattern weights must be finite and non-negative".into(),
                ));
            }
        }
        let patterns: Vec<Text> = spec.counted.iter().map(|p| p.pattern.clone()).collect();
        let automaton = PatternAutomaton::new(&spec.forbidden, &patterns, spec.alphabet)?;
        let tracked: Vec<usize> = (0..spec.counted.len())
            .filter(|&i| !spec.counted[i].dont_care)
            .collect();
        let radix = spec.k as usize + 2;
        let too_big = Error::CapExceeded {
            what: "occurrence table",
            limit: cap as u64,
        };
        let vectors = radix
            .checked_pow(tracked.len() as u32)
            .ok_or(too_big.clone())?;
        if vectors
            .checked_mul(automaton.state_count())
            .is_none_or(|n| n > cap)
        {
            return Err(too_big);
        }
        let mut place = vec![0usize; spec.counted.len()];
        let mut pv = 1;
        for &i in &tracked {
            place[i] = pv;
            pv *= radix;
        }
        let bumps = (0..automaton.state_count())
            .map(|q| {
                automaton
                    .ending(q)
                    .iter()
                    .filter(|&&i| !spec.counted[i].dont_care)
                    .map(|&i| place[i])
                    .collect()
            })
            .collect();
        let accept = (0..vectors)
            .map(|mut v| {
                tracked.iter().all(|&i| {
                    let d = (v % radix) as u32;
                    v /= radix;
                    spec.counted[i].occ.contains(&d)
                })
            })
            .collect();
        Ok(Layout {
            automaton,
            radix,
            vectors,
            bumps,
            accept,
        })
    }

    /// Vector after entering state `q` from vector `v`.
    pub fn step(&self, q: usize, v: usize) -> usize {
        let mut out = v;
        for &p in &self.bumps[q] {
            if (v / p) % self.radix < self.radix - 1 {
                out += p;
            }
        }
        out
    }
}
