use crate::error::{Error, Result};
use crate::primitives::suffix::SuffixIndex;
use crate::text::Text;

/// Which route produced an [`LccsResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LccsBranch {
    /// At least `F` thresholds are zero, so any substring qualifies.
    ZeroThresholdsSuffice,
    /// Exactly `F - 1` thresholds are zero.
    OneThresholdShort,
    /// General two-pointer sweep over the suffix array.
    Sweep,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LccsResult {
    pub length: usize,
    pub witness: Text,
    pub branch: LccsBranch,
}

/// Longest substring occurring at least `thresholds[i]` times in at least
/// `f` of the texts (overlapping occurrences count).
///
/// A window of consecutive suffix-array ranks is kept minimal while it
/// holds enough suffixes of enough texts; the LCP over the window is then
/// a candidate length.
pub fn lccs_constrained(texts: &[Text], thresholds: &[usize], f: usize) -> Result<LccsResult> {
    let n = texts.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if thresholds.len() != n {
        return Err(Error::InvalidArgument(format!(
            "{} thresholds given for {n} texts",
            thresholds.len()
        )));
    }
    if f > n {
        return Err(Error::InvalidArgument(format!(
            "F = {f} exceeds the number of texts ({n})"
        )));
    }
    if texts.iter().any(|t| t.is_empty()) {
        return Err(Error::EmptyInput);
    }
    let zeros = thresholds.iter().filter(|&&a| a == 0).count();
    let longest_among = |pick: &dyn Fn(usize) -> bool| {
        (0..n)
            .filter(|&i| pick(i))
            .fold(None::<usize>, |best, i| match best {
                Some(b) if texts[b].len() >= texts[i].len() => Some(b),
                _ => Some(i),
            })
    };
    if zeros >= f {
        let q = longest_among(&|_| true).unwrap();
        return Ok(LccsResult {
            length: texts[q].len(),
            witness: texts[q].clone(),
            branch: LccsBranch::ZeroThresholdsSuffice,
        });
    }
    let mut branch = LccsBranch::Sweep;
    if zeros + 1 == f {
        branch = LccsBranch::OneThresholdShort;
        // a whole text occurs once in itself, which settles it when every
        // non-zero threshold is 1; larger thresholds need the sweep
        if thresholds.iter().all(|&a| a <= 1) {
            let k = longest_among(&|i| thresholds[i] == 1).unwrap();
            return Ok(LccsResult {
                length: texts[k].len(),
                witness: texts[k].clone(),
                branch,
            });
        }
    }

    let idx = SuffixIndex::with_alphabet(texts, 0)?;
    let text_end: Vec<usize> = (0..n).map(|i| idx.text_start(i) + texts[i].len()).collect();
    let z = idx.len();
    let mut x = vec![0usize; n];
    let mut nok = zeros;
    let mut left = 1usize;
    let mut best: Option<(usize, usize)> = None;
    for right in 1..=z {
        if let Some(j) = idx.owner(idx.suffix_at(right)) {
            x[j] += 1;
            if x[j] == thresholds[j] {
                nok += 1;
            }
        }
        while left <= right {
            match idx.owner(idx.suffix_at(left)) {
                None => left += 1,
                // removable unless it keeps text j at its threshold and
                // exactly f texts are satisfied
                Some(j) if nok >= f && (x[j] != thresholds[j] || nok > f) => {
                    if x[j] == thresholds[j] {
                        nok -= 1;
                    }
                    x[j] -= 1;
                    left += 1;
                }
                Some(_) => break,
            }
        }
        if nok < f || left > right {
            continue;
        }
        let start = idx.suffix_at(left);
        let w = if left == right {
            // a lone suffix contributes only the part inside its own text
            let owner = idx
                .owner(start)
                .expect("left pointer never rests on a separator");
            text_end[owner] - (start - 1)
        } else {
            idx.lcp_range(left, right)?
        };
        if best.is_none_or(|(l, _)| w > l) {
            best = Some((w, start));
        }
    }
    let (length, start) = best.unwrap_or((0, 1));
    let witness = Text::new(idx.joined()[start - 1..start - 1 + length].to_vec())?;
    Ok(LccsResult {
        length,
        witness,
        branch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(texts: &[&str], a: &[usize], f: usize) -> (usize, String) {
        let texts: Vec<Text> = texts.iter().map(|s| Text::letters(s)).collect();
        let r = lccs_constrained(&texts, a, f).unwrap();
        (r.length, r.witness.to_letters())
    }

    #[test]
    fn examples() {
        assert_eq!(run(&["abab", "bab"], &[1, 1], 2), (3, "bab".into()));
        assert_eq!(run(&["abab", "bab"], &[2, 1], 2), (2, "ab".into()));
        assert_eq!(run(&["ab", "cd"], &[1, 1], 2), (0, "".into()));
        assert_eq!(run(&["aaa"], &[2], 1), (2, "aa".into()));
    }

    #[test]
    fn special_cases() {
        let texts: Vec<Text> = ["ab", "abcd", "c"]
            .iter()
            .map(|s| Text::letters(s))
            .collect();
        let r = lccs_constrained(&texts, &[0, 3, 0], 2).unwrap();
        assert_eq!(r.branch, LccsBranch::ZeroThresholdsSuffice);
        assert_eq!(r.length, 4);
        let r = lccs_constrained(&texts, &[0, 1, 1], 2).unwrap();
        assert_eq!(r.branch, LccsBranch::OneThresholdShort);
        assert_eq!((r.length, r.witness.to_letters()), (4, "abcd".into()));
        // a threshold of 2 cannot be met by a whole text
        let texts: Vec<Text> = ["ab", "aab"].iter().map(|s| Text::letters(s)).collect();
        let r = lccs_constrained(&texts, &[0, 2], 2).unwrap();
        assert_eq!(r.branch, LccsBranch::OneThresholdShort);
        assert_eq!((r.length, r.witness.to_letters()), (1, "a".into()));
        let r = lccs_constrained(&texts[..1], &[2], 1).unwrap();
        assert_eq!(r.length, 0);
        // suffixes of an unsatisfied text must not pin the window
        let texts: Vec<Text> = ["abbab", "bbbb"].iter().map(|s| Text::letters(s)).collect();
        let r = lccs_constrained(&texts, &[1, 3], 1).unwrap();
        assert_eq!(r.length, 5);
    }

    #[test]
    fn errors() {
        let texts = vec![Text::letters("ab")];
        assert!(lccs_constrained(&texts, &[1], 2).is_err());
        assert!(lccs_constrained(&texts, &[1, 1], 1).is_err());
        assert!(lccs_constrained(&[], &[], 0).is_err());
    }
}
