//! Shortest string over `1..=M` that is a substring of none of the texts.

use crate::error::{Error, Result};
use crate::primitives::suffix::SuffixIndex;
use crate::primitives::trie::build_substring_trie;
use crate::text::{Symbol, Text};

fn validate(texts: &[Text], alphabet: u32) -> Result<()> {
    if alphabet == 0 {
        return Err(Error::InvalidArgument("alphabet must be non-empty".into()));
    }
    texts.iter().try_for_each(|t| t.check_alphabet(alphabet))
}

fn unary_answer(texts: &[Text]) -> Text {
    let longest = texts.iter().map(|t| t.len()).max().unwrap_or(0);
    Text::new(vec![1; longest + 1]).unwrap()
}

/// Texts joined with separators `alphabet + 1, alphabet + 2, ...`.
fn join(texts: &[Text], alphabet: u32) -> Vec<Symbol> {
    let mut z = Vec::new();
    for (i, t) in texts.iter().enumerate() {
        if i > 0 {
            z.push(alphabet + i as Symbol);
        }
        z.extend_from_slice(t);
    }
    z
}

/// Smallest `L` with `alphabet^L > n`, i.e. `floor(log_M n) + 1`.
fn depth_limit(n: usize, alphabet: u32) -> usize {
    let mut l = 1;
    let mut power = alphabet as u128;
    while power <= n as u128 {
        power *= alphabet as u128;
        l += 1;
    }
    l
}

/// Trie method: every window of the joined text of length `L` is inserted
/// (separator edges cut), and the shallowest node missing a child yields
/// the answer. Nodes are scanned level by level with children in symbol
/// order, so the result is the lexicographically smallest shortest one.
pub fn shortest_non_substring_trie(texts: &[Text], alphabet: u32) -> Result<Text> {
    validate(texts, alphabet)?;
    if alphabet == 1 {
        return Ok(unary_answer(texts));
    }
    let z = join(texts, alphabet);
    let trie = build_substring_trie(&z, depth_limit(z.len(), alphabet), alphabet);
    for id in trie.bfs_order() {
        let node = trie.node(id);
        if node.children.len() < alphabet as usize {
            let missing = (1..=alphabet)
                .zip(
                    node.children
                        .iter()
                        .map(|&(c, _)| c)
                        .chain(std::iter::repeat(0)),
                )
                .find(|&(want, have)| want != have)
                .map(|(want, _)| want)
                .unwrap();
            let mut out = trie.spell(id);
            out.push(missing);
            return Text::new(out);
        }
    }
    unreachable!("a trie of depth L cannot hold all M^L strings of length L")
}

/// A suffix truncated at its text's end; `start = 0` with `virtual_high`
/// selects one of the two boundary strings.
#[derive(Debug, Clone, Copy)]
struct Truncated {
    // 1-indexed position in the joined text, 0 for a virtual boundary
    start: usize,
    len: usize,
    virtual_high: bool,
}

/// Sorted-order method: between every pair of adjacent truncated suffixes
/// (bracketed by a virtual lowest and highest string) the shortest string
/// strictly between them is absent; the shortest over all pairs wins.
pub fn shortest_non_substring_lexicographic(texts: &[Text], alphabet: u32) -> Result<Text> {
    validate(texts, alphabet)?;
    if alphabet == 1 {
        return Ok(unary_answer(texts));
    }
    if texts.iter().all(|t| t.is_empty()) {
        return Text::new(vec![1]);
    }
    let idx = SuffixIndex::with_alphabet(texts, alphabet)?;
    let z = idx.joined();
    let m = alphabet;

    let mut suffixes: Vec<Truncated> = Vec::with_capacity(z.len());
    for (i, t) in texts.iter().enumerate() {
        let base = idx.text_start(i);
        for off in 0..t.len() {
            suffixes.push(Truncated {
                start: base + off + 1,
                len: t.len() - off,
                virtual_high: false,
            });
        }
    }
    let common =
        |a: &Truncated, b: &Truncated| idx.lcp_of_positions(a.start, b.start).min(a.len).min(b.len);
    suffixes.sort_by(|a, b| {
        let l = common(a, b);
        if l == a.len || l == b.len {
            a.len.cmp(&b.len)
        } else {
            z[a.start - 1 + l].cmp(&z[b.start - 1 + l])
        }
    });

    // runs[0][p] / runs[1][p]: consecutive 1s / Ms starting at 0-indexed p
    let mut runs = [vec![0usize; z.len() + 1], vec![0usize; z.len() + 1]];
    for p in (0..z.len()).rev() {
        if z[p] == 1 {
            runs[0][p] = runs[0][p + 1] + 1;
        }
        if z[p] == m {
            runs[1][p] = runs[1][p + 1] + 1;
        }
    }
    // symbol at 1-indexed offset y; 0 past the end of a real string
    let at = |u: &Truncated, y: usize| -> Symbol {
        if u.start == 0 {
            if u.virtual_high {
                m + 1
            } else {
                0
            }
        } else if y <= u.len {
            z[u.start + y - 2]
        } else {
            0
        }
    };
    let cnt = |u: &Truncated, which: usize, y: usize| -> usize {
        if u.start == 0 || y > u.len {
            0
        } else {
            runs[which][u.start + y - 2]
        }
    };
    let prefix =
        |u: &Truncated, len: usize| -> Vec<Symbol> { z[u.start - 1..u.start - 1 + len].to_vec() };

    let low = Truncated {
        start: 0,
        len: 0,
        virtual_high: false,
    };
    let high = Truncated {
        start: 0,
        len: 0,
        virtual_high: true,
    };
    let order: Vec<Truncated> = std::iter::once(low)
        .chain(suffixes)
        .chain(std::iter::once(high))
        .collect();

    let mut best: Option<Vec<Symbol>> = None;
    let mut offer = |cand: Vec<Symbol>| {
        if best.as_ref().is_none_or(|b| cand.len() < b.len()) {
            best = Some(cand);
        }
    };
    for pair in order.windows(2) {
        let (f, g) = (&pair[0], &pair[1]);
        let lcp = if f.start == 0 || g.start == 0 {
            0
        } else {
            common(f, g)
        };
        let (c1, c2) = (at(f, lcp + 1), at(g, lcp + 1));
        let head = |u: &Truncated, len: usize| {
            if u.start == 0 {
                Vec::new()
            } else {
                prefix(u, len)
            }
        };
        if c1 + 1 < c2 {
            let mut cand = head(f, lcp);
            cand.push(c1 + 1);
            offer(cand);
        } else if c1 + 1 == c2 {
            if c1 > 0 {
                // c1, then F's run of Ms, then something above F's next symbol
                let x = cnt(f, 1, lcp + 2);
                let next = at(f, lcp + 2 + x);
                let mut cand = head(f, lcp + 1);
                cand.extend(std::iter::repeat_n(m, x));
                cand.push(next + 1);
                offer(cand);
            }
            if c2 <= m {
                // c2, then G's run of 1s, then something below G's next symbol
                let x = cnt(g, 0, lcp + 2);
                let next = at(g, lcp + 2 + x);
                if next > 1 {
                    let mut cand = head(g, lcp + 1);
                    cand.extend(std::iter::repeat_n(1, x));
                    cand.push(1);
                    offer(cand);
                }
            }
        }
    }
    Text::new(best.expect("the boundary strings always leave a gap"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(items: &[&str]) -> Vec<Text> {
        items.iter().map(|s| Text::letters(s)).collect()
    }

    fn contains(t: &[Symbol], w: &[Symbol]) -> bool {
        w.is_empty() || t.windows(w.len()).any(|x| x == w)
    }

    #[test]
    fn trie_examples() {
        let f = |items: &[&str], m| {
            shortest_non_substring_trie(&texts(items), m)
                .unwrap()
                .to_letters()
        };
        assert_eq!(f(&["aab"], 2), "ba");
        assert_eq!(f(&["ab", "ba"], 2), "aa");
        assert_eq!(f(&["aa"], 1), "aaa");
        assert_eq!(f(&["a"], 2), "b");
        assert_eq!(f(&[""], 2), "a");
    }

    #[test]
    fn lexicographic_examples() {
        let f = |items: &[&str], m| {
            shortest_non_substring_lexicographic(&texts(items), m)
                .unwrap()
                .to_letters()
        };
        assert!(["ba", "bb"].contains(&f(&["aab"], 2).as_str()));
        assert!(["aa", "bb"].contains(&f(&["ab", "ba"], 2).as_str()));
        assert_eq!(f(&["a"], 2), "b");
        assert_eq!(f(&["aa"], 1), "aaa");
        assert_eq!(f(&["", ""], 3), "a");
    }

    #[test]
    fn errors() {
        assert!(shortest_non_substring_trie(&texts(&["ab"]), 0).is_err());
        assert!(shortest_non_substring_trie(&texts(&["abc"]), 2).is_err());
        assert!(shortest_non_substring_lexicographic(&texts(&["abc"]), 2).is_err());
    }

    #[test]
    fn results_are_absent() {
        let corpus = texts(&["abcab", "cc", "bca"]);
        for r in [
            shortest_non_substring_trie(&corpus, 3).unwrap(),
            shortest_non_substring_lexicographic(&corpus, 3).unwrap(),
        ] {
            assert!(corpus.iter().all(|t| !contains(t, &r)), "{r}");
        }
    }
}
