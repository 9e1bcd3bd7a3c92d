//! Shared string data structures.

pub mod automaton;
pub mod failure;
pub mod hash;
pub mod rmq;
pub mod suffix;
pub mod trie;

pub use automaton::{build_pattern_automaton, PatternAutomaton};
pub use failure::{failure_function, FailureArray};
pub use hash::{hash_lcp, RollingHash};
pub use rmq::SparseTable;
pub use suffix::{build_suffix_index, SuffixIndex};
pub use trie::{build_substring_trie, Trie};
