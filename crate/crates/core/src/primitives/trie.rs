use crate::text::Symbol;

#[derive(Debug, Clone)]
pub struct TrieNode {
    /// Children sorted by edge label.
    pub children: Vec<(Symbol, usize)>,
    pub depth: usize,
    /// Label of the edge from the parent; 0 for the root.
    pub label: Symbol,
    pub parent: usize,
}

/// Prefix tree stored as an arena; node 0 is the root.
#[derive(Debug, Clone)]
pub struct Trie {
    nodes: Vec<TrieNode>,
}

impl Default for Trie {
    fn default() -> Self {
        Self::new()
    }
}

impl Trie {
    pub fn new() -> Self {
        Trie {
            nodes: vec![TrieNode {
                children: Vec::new(),
                depth: 0,
                label: 0,
                parent: 0,
            }],
        }
    }

    pub fn node(&self, id: usize) -> &TrieNode {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn child(&self, id: usize, c: Symbol) -> Option<usize> {
        let ch = &self.nodes[id].children;
        ch.binary_search_by_key(&c, |&(s, _)| s)
            .ok()
            .map(|k| ch[k].1)
    }

    /// Inserts `word`, returning the node that spells it.
    pub fn insert(&mut self, word: &[Symbol]) -> usize {
        let mut cur = 0;
        for &c in word {
            cur = match self.nodes[cur]
                .children
                .binary_search_by_key(&c, |&(s, _)| s)
            {
                Ok(k) => self.nodes[cur].children[k].1,
                Err(k) => {
                    let id = self.nodes.len();
                    let depth = self.nodes[cur].depth + 1;
                    self.nodes.push(TrieNode {
                        children: Vec::new(),
                        depth,
                        label: c,
                        parent: cur,
                    });
                    self.nodes[cur].children.insert(k, (c, id));
                    id
                }
            };
        }
        cur
    }

    /// Symbols on the root-to-`id` path.
    pub fn spell(&self, mut id: usize) -> Vec<Symbol> {
        let mut out = Vec::with_capacity(self.nodes[id].depth);
        while id != 0 {
            out.push(self.nodes[id].label);
            id = self.nodes[id].parent;
        }
        out.reverse();
        out
    }

    /// Every root-to-node path, excluding the empty one.
    pub fn paths(&self) -> Vec<Vec<Symbol>> {
        (1..self.nodes.len()).map(|id| self.spell(id)).collect()
    }

    /// Node ids in breadth-first order, children visited by label.
    pub fn bfs_order(&self) -> Vec<usize> {
        let mut order = vec![0];
        let mut head = 0;
        while head < order.len() {
            let id = order[head];
            head += 1;
            order.extend(self.nodes[id].children.iter().map(|&(_, c)| c));
        }
        order
    }
}

/// Trie of every window of `z` of length `min(depth_limit, remaining)`,
/// with edges labelled by symbols above `alphabet` (separators) cut off
/// together with everything below them.
pub fn build_substring_trie(z: &[Symbol], depth_limit: usize, alphabet: Symbol) -> Trie {
    let mut trie = Trie::new();
    for start in 0..z.len() {
        let end = (start + depth_limit).min(z.len());
        let window = &z[start..end];
        // a separator edge and its subtree would be pruned, so stop there
        let cut = window
            .iter()
            .position(|&c| c > alphabet)
            .unwrap_or(window.len());
        trie.insert(&window[..cut]);
    }
    trie
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::Text;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn path_set(t: &Trie) -> BTreeSet<String> {
        t.paths()
            .into_iter()
            .map(|p| Text::new(p).unwrap().to_letters())
            .collect()
    }

    fn set(items: &[&str]) -> BTreeSet<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn windows_of_aab() {
        let t = build_substring_trie(&Text::letters("aab"), 2, 2);
        assert_eq!(path_set(&t), set(&["a", "aa", "ab", "b"]));
    }

    #[test]
    fn single_window() {
        let t = build_substring_trie(&Text::letters("a"), 3, 1);
        assert_eq!(path_set(&t), set(&["a"]));
    }

    #[test]
    fn separator_edges_pruned() {
        let t = build_substring_trie(&[1, 2, 3, 2, 1], 2, 2);
        assert_eq!(path_set(&t), set(&["a", "ab", "b", "ba"]));
    }

    #[test]
    fn depths_consistent() {
        let t = build_substring_trie(&Text::letters("abcab"), 3, 3);
        for id in 1..t.len() {
            let n = t.node(id);
            assert_eq!(n.depth, t.node(n.parent).depth + 1);
        }
        assert_eq!(t.node(0).depth, 0);
    }

    proptest! {
        #[test]
        fn node_count_bound(z in prop::collection::vec(1u32..=3, 0..80), l in 1usize..6) {
            let t = build_substring_trie(&z, l, 3);
            prop_assert!(t.len() <= z.len() * l + 1);
            for id in 0..t.len() {
                prop_assert!(t.node(id).children.len() <= 3);
                let labels: Vec<_> = t.node(id).children.iter().map(|c| c.0).collect();
                prop_assert!(labels.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}
