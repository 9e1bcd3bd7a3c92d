//! Aho-Corasick automaton with forbidden states and per-state ending sets.

use crate::error::{Error, Result};
use crate::primitives::trie::Trie;
use crate::text::{Symbol, Text};

/// Deterministic multi-pattern automaton over `1..=alphabet`.
///
/// States are the nodes of the trie of `forbidden ∪ counted`; state 0 is
/// the initial state (empty string). `goto` is total. A state is forbidden
/// iff some forbidden pattern is a suffix of the string it spells.
/// `ending(q)` lists the indices of counted patterns that are suffixes of
/// that string, collected through output links.
#[derive(Debug, Clone)]
pub struct PatternAutomaton {
    alphabet: u32,
    trie: Trie,
    goto: Vec<u32>,
    fail: Vec<u32>,
    output_link: Vec<Option<u32>>,
    forbidden: Vec<bool>,
    ending: Vec<Vec<usize>>,
}

pub fn build_pattern_automaton(
    forbidden: &[Text],
    counted: &[Text],
    alphabet: u32,
) -> Result<PatternAutomaton> {
    PatternAutomaton::new(forbidden, counted, alphabet)
}

impl PatternAutomaton {
    pub fn new(forbidden: &[Text], counted: &[Text], alphabet: u32) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::InvalidArgument("alphabet must be non-empty".into()));
        }
        let mut trie = Trie::new();
        let mut own_forbidden = Vec::new();
        let mut own_counted: Vec<Vec<usize>> = Vec::new();
        let mark = |trie: &mut Trie, p: &Text| -> Result<usize> {
            if p.is_empty() {
                return Err(Error::EmptyPattern);
            }
            p.check_alphabet(alphabet)?;
            Ok(trie.insert(p))
        };
        let mut forbidden_nodes = Vec::with_capacity(forbidden.len());
        for p in forbidden {
            forbidden_nodes.push(mark(&mut trie, p)?);
        }
        let mut counted_nodes = Vec::with_capacity(counted.len());
        for p in counted {
            counted_nodes.push(mark(&mut trie, p)?);
        }
        let n = trie.len();
        own_forbidden.resize(n, false);
        own_counted.resize(n, Vec::new());
        for v in forbidden_nodes {
            own_forbidden[v] = true;
        }
        for (i, v) in counted_nodes.into_iter().enumerate() {
            own_counted[v].push(i);
        }

        let m = alphabet as usize;
        let mut goto = vec![0u32; n * m];
        let mut fail = vec![0u32; n];
        let mut output_link = vec![None; n];
        let mut is_forbidden = vec![false; n];
        let mut ending: Vec<Vec<usize>> = vec![Vec::new(); n];
        for u in trie.bfs_order() {
            let f = fail[u] as usize;
            if u != 0 {
                is_forbidden[u] = own_forbidden[u] || is_forbidden[f];
                output_link[u] = if !own_counted[f].is_empty() {
                    Some(f as u32)
                } else {
                    output_link[f]
                };
                let mut se = own_counted[u].clone();
                if let Some(o) = output_link[u] {
                    se.extend_from_slice(&ending[o as usize]);
                }
                se.sort_unstable();
                ending[u] = se;
            }
            for c in 1..=alphabet {
                let slot = u * m + (c as usize - 1);
                match trie.child(u, c) {
                    Some(v) => {
                        fail[v] = if u == 0 {
                            0
                        } else {
                            goto[f * m + (c as usize - 1)]
                        };
                        goto[slot] = v as u32;
                    }
                    None => {
                        goto[slot] = if u == 0 {
                            0
                        } else {
                            goto[f * m + (c as usize - 1)]
                        };
                    }
                }
            }
        }
        Ok(PatternAutomaton {
            alphabet,
            trie,
            goto,
            fail,
            output_link,
            forbidden: is_forbidden,
            ending,
        })
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.fail.len()
    }

    pub fn initial(&self) -> usize {
        0
    }

    /// Successor of `q` on symbol `c` (`1 <= c <= alphabet`).
    pub fn next(&self, q: usize, c: Symbol) -> usize {
        self.goto[q * self.alphabet as usize + (c as usize - 1)] as usize
    }

    pub fn failure(&self, q: usize) -> usize {
        self.fail[q] as usize
    }

    pub fn output_link(&self, q: usize) -> Option<usize> {
        self.output_link[q].map(|o| o as usize)
    }

    pub fn is_forbidden(&self, q: usize) -> bool {
        self.forbidden[q]
    }

    /// Sorted counted-pattern indices ending at `q`.
    pub fn ending(&self, q: usize) -> &[usize] {
        &self.ending[q]
    }

    pub fn depth(&self, q: usize) -> usize {
        self.trie.node(q).depth
    }

    pub fn spell(&self, q: usize) -> Vec<Symbol> {
        self.trie.spell(q)
    }

    /// State whose spelled string is exactly `s`, if any.
    pub fn find(&self, s: &[Symbol]) -> Option<usize> {
        s.iter().try_fold(0, |q, &c| self.trie.child(q, c))
    }
}
