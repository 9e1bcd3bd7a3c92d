//! Suffix array over a separator-joined multi-string, with LCP and RMQ.

use crate::error::{Error, Result};
use crate::primitives::rmq::SparseTable;
use crate::text::{Symbol, Text};

/// Suffix array, inverse permutation, LCP array and an RMQ table over the
/// string `Z = T1 $1 T2 $2 ... $(R-1) TR`.
///
/// Separators take the ids `base + 1, base + 2, ...` where `base` is the
/// largest text symbol (or an explicit alphabet size), so they are distinct
/// and greater than every text symbol. Ranks and positions in the public
/// API are 1-indexed.
#[derive(Debug, Clone)]
pub struct SuffixIndex {
    joined: Vec<Symbol>,
    base: Symbol,
    // owner[pos] = index of the text owning 0-indexed position pos
    owner: Vec<Option<u32>>,
    text_starts: Vec<usize>,
    sa: Vec<u32>,
    rank: Vec<u32>,
    lcp: Vec<u32>,
    rmq: SparseTable,
}

/// Builds the index with separator ids above the largest symbol present.
pub fn build_suffix_index(texts: &[Text]) -> Result<SuffixIndex> {
    let base = texts.iter().map(|t| t.max_symbol()).max().unwrap_or(0);
    SuffixIndex::with_alphabet(texts, base)
}

impl SuffixIndex {
    /// Builds the index treating `alphabet` as the largest text symbol id.
    pub fn with_alphabet(texts: &[Text], alphabet: Symbol) -> Result<Self> {
        if texts.is_empty() {
            return Err(Error::EmptyInput);
        }
        let base = alphabet.max(texts.iter().map(|t| t.max_symbol()).max().unwrap_or(0));
        let total: usize = texts.iter().map(|t| t.len()).sum::<usize>() + texts.len() - 1;
        if total == 0 {
            return Err(Error::EmptyInput);
        }
        if total >= u32::MAX as usize || base as u64 + texts.len() as u64 >= u32::MAX as u64 {
            return Err(Error::CapExceeded {
                what: "joined length",
                limit: u32::MAX as u64,
            });
        }
        let mut joined = Vec::with_capacity(total);
        let mut owner = Vec::with_capacity(total);
        let mut text_starts = Vec::with_capacity(texts.len());
        for (i, t) in texts.iter().enumerate() {
            if i > 0 {
                joined.push(base + i as Symbol);
                owner.push(None);
            }
            text_starts.push(joined.len());
            joined.extend_from_slice(t);
            owner.extend(std::iter::repeat_n(Some(i as u32), t.len()));
        }
        let sa = prefix_doubling(&joined);
        let mut rank = vec![0u32; sa.len()];
        for (r, &p) in sa.iter().enumerate() {
            rank[p as usize] = r as u32;
        }
        let lcp = kasai(&joined, &sa, &rank);
        let rmq = SparseTable::new(&lcp);
        Ok(SuffixIndex {
            joined,
            base,
            owner,
            text_starts,
            sa,
            rank,
            lcp,
            rmq,
        })
    }

    /// `|Z|`.
    pub fn len(&self) -> usize {
        self.joined.len()
    }

    pub fn is_empty(&self) -> bool {
        self.joined.is_empty()
    }

    pub fn joined(&self) -> &[Symbol] {
        &self.joined
    }

    pub fn text_count(&self) -> usize {
        self.text_starts.len()
    }

    /// Largest non-separator symbol id.
    pub fn base(&self) -> Symbol {
        self.base
    }

    pub fn is_separator(&self, symbol: Symbol) -> bool {
        symbol > self.base
    }

    /// 0-indexed position in `Z` where text `i` (0-indexed) starts.
    pub fn text_start(&self, i: usize) -> usize {
        self.text_starts[i]
    }

    /// Text owning 1-indexed position `pos`, or `None` for a separator.
    pub fn owner(&self, pos: usize) -> Option<usize> {
        self.owner[pos - 1].map(|o| o as usize)
    }

    /// Start position of the suffix with 1-indexed rank `r`.
    pub fn suffix_at(&self, r: usize) -> usize {
        self.sa[r - 1] as usize + 1
    }

    /// Rank of the suffix starting at 1-indexed position `pos`.
    pub fn rank_of(&self, pos: usize) -> usize {
        self.rank[pos - 1] as usize + 1
    }

    /// All suffix starts in sorted order (1-indexed).
    pub fn sorted_positions(&self) -> Vec<usize> {
        self.sa.iter().map(|&p| p as usize + 1).collect()
    }

    /// `lcp(r)`: common prefix length of the suffixes ranked `r` and `r + 1`.
    pub fn lcp(&self, r: usize) -> usize {
        self.lcp[r - 1] as usize
    }

    pub fn lcp_array(&self) -> Vec<usize> {
        self.lcp.iter().map(|&v| v as usize).collect()
    }

    /// LCP of the suffixes ranked `i < j`, as `min(lcp(i..j-1))`.
    pub fn lcp_range(&self, i: usize, j: usize) -> Result<usize> {
        if i >= j || i == 0 || j > self.len() {
            return Err(Error::Bounds(format!(
                "lcp_range needs 1 <= i < j <= {}, got i={i}, j={j}",
                self.len()
            )));
        }
        Ok(self.rmq.min(i - 1, j - 1) as usize)
    }

    /// LCP of the suffixes starting at 1-indexed positions `a` and `b`.
    pub fn lcp_of_positions(&self, a: usize, b: usize) -> usize {
        if a == b {
            return self.len() - a + 1;
        }
        let (ra, rb) = (self.rank_of(a), self.rank_of(b));
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.rmq.min(lo - 1, hi - 1) as usize
    }

    /// Overwrites one LCP entry. For fault-injection checks only.
    #[doc(hidden)]
    pub fn corrupt_lcp(&mut self, r: usize, value: usize) {
        self.lcp[r - 1] = value as u32;
        self.rmq.set(r - 1, value as u32);
    }
}

/// Prefix-doubling suffix sort with counting-sort passes, O(n log n).
fn prefix_doubling(s: &[Symbol]) -> Vec<u32> {
    let n = s.len();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    if n == 1 {
        return sa;
    }
    // initial ranks: dense ids of symbols in sorted order
    sa.sort_unstable_by_key(|&i| s[i as usize]);
    let mut rank = vec![0u32; n];
    let mut classes = 1u32;
    for w in 1..n {
        if s[sa[w] as usize] != s[sa[w - 1] as usize] {
            classes += 1;
        }
        rank[sa[w] as usize] = classes - 1;
    }
    let mut tmp = vec![0u32; n];
    let mut second = vec![0u32; n];
    let mut count = vec![0usize; n.max(classes as usize) + 1];
    let mut k = 1usize;
    while (classes as usize) < n {
        // order by second key: suffixes with i + k >= n come first
        let mut idx = 0;
        for i in n - k..n {
            second[idx] = i as u32;
            idx += 1;
        }
        for &p in &sa {
            if p as usize >= k {
                second[idx] = p - k as u32;
                idx += 1;
            }
        }
        // stable counting sort by first key
        count[..classes as usize + 1]
            .iter_mut()
            .for_each(|c| *c = 0);
        for &r in &rank {
            count[r as usize + 1] += 1;
        }
        for c in 1..=classes as usize {
            count[c] += count[c - 1];
        }
        for &p in &second {
            let r = rank[p as usize] as usize;
            sa[count[r]] = p;
            count[r] += 1;
        }
        // recompute classes
        tmp[sa[0] as usize] = 0;
        classes = 1;
        for w in 1..n {
            let (a, b) = (sa[w - 1] as usize, sa[w] as usize);
            let ka = if a + k < n { rank[a + k] as i64 } else { -1 };
            let kb = if b + k < n { rank[b + k] as i64 } else { -1 };
            if rank[a] != rank[b] || ka != kb {
                classes += 1;
            }
            tmp[b] = classes - 1;
        }
        std::mem::swap(&mut rank, &mut tmp);
        k *= 2;
    }
    sa
}

/// Kasai's linear LCP construction.
fn kasai(s: &[Symbol], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n.saturating_sub(1)];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r + 1 == n {
            h = 0;
            continue;
        }
        let j = sa[r + 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}
