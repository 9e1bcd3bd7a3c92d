use crate::error::{Error, Result};
use crate::text::Symbol;

/// KMP border array of a string.
///
/// `get(i)` is the length of the longest proper border of the prefix of
/// length `i`, for `1 <= i <= n`. Entry 0 is stored as 0 so the backing
/// vector doubles as the failure-tree parent array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureArray {
    p: Vec<usize>,
}

impl FailureArray {
    pub fn len(&self) -> usize {
        self.p.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Border length of prefix `i` (1-indexed). `get(0)` is 0.
    pub fn get(&self, i: usize) -> usize {
        self.p[i]
    }

    /// `p(1), ..., p(n)`.
    pub fn borders(&self) -> &[usize] {
        &self.p[1..]
    }

    /// `p(0), p(1), ..., p(n)` with `p(0) = 0`.
    pub fn with_root(&self) -> &[usize] {
        &self.p
    }
}

/// Computes the border array in linear time.
pub fn failure_function(s: &[Symbol]) -> Result<FailureArray> {
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(FailureArray { p: border_table(s) })
}

/// Border table including the leading 0; accepts the empty slice.
pub(crate) fn border_table(s: &[Symbol]) -> Vec<usize> {
    let n = s.len();
    let mut p = vec![0usize; n + 1];
    let mut k = 0usize;
    for i in 2..=n {
        while k > 0 && s[k] != s[i - 1] {
            k = p[k];
        }
        if s[k] == s[i - 1] {
            k += 1;
        }
        p[i] = k;
    }
    p
}

/// Runs the KMP matcher of `pattern` (with its border table) over `host`.
/// Returns the 0-indexed start of every full occurrence and the length of
/// the longest prefix of `pattern` that is a suffix of `host` (never the
/// full pattern, which is folded into the occurrence list).
pub(crate) fn kmp_scan(
    pattern: &[Symbol],
    borders: &[usize],
    host: &[Symbol],
) -> (Vec<usize>, usize) {
    let m = pattern.len();
    let mut starts = Vec::new();
    let mut k = 0usize;
    for (pos, &c) in host.iter().enumerate() {
        while k > 0 && (k == m || pattern[k] != c) {
            k = borders[k];
        }
        if pattern[k] == c {
            k += 1;
        }
        if k == m {
            starts.push(pos + 1 - m);
        }
    }
    if k == m {
        k = borders[k];
    }
    (starts, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::Text;
    use proptest::prelude::*;

    fn naive_borders(s: &[Symbol]) -> Vec<usize> {
        (1..=s.len())
            .map(|i| (0..i).rev().find(|&b| s[..b] == s[i - b..i]).unwrap())
            .collect()
    }

    #[test]
    fn examples() {
        let f = |s: &str| {
            failure_function(&Text::letters(s))
                .unwrap()
                .borders()
                .to_vec()
        };
        assert_eq!(f("abab"), naive_borders(&Text::letters("abab")));
        assert_eq!(f("abab"), vec![0, 0, 1, 2]);
        assert_eq!(f("aaa"), vec![0, 1, 2]);
        assert_eq!(f("ababc"), vec![0, 0, 1, 2, 0]);
    }

    #[test]
    fn empty_is_error() {
        assert_eq!(failure_function(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn scan_reports_occurrences_and_tail() {
        let pat = Text::letters("ab");
        let table = border_table(&pat);
        let (occ, tail) = kmp_scan(&pat, &table, &Text::letters("abab"));
        assert_eq!(occ, vec![0, 2]);
        assert_eq!(tail, 0);
        let (occ, tail) = kmp_scan(&pat, &table, &Text::letters("bba"));
        assert!(occ.is_empty());
        assert_eq!(tail, 1);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn matches_naive(s in prop::collection::vec(1u32..=4, 1..500)) {
            let f = failure_function(&s).unwrap();
            prop_assert_eq!(f.borders().to_vec(), naive_borders(&s));
            for i in 1..=s.len() {
                prop_assert!(f.get(i) < i);
            }
        }
    }
}
