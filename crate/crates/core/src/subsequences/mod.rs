//! Common substrings and subsequences under constraints, and shortest
//! strings absent from a corpus.

pub mod absent;
pub mod debruijn;
pub mod lccs;
pub mod mwcs;
pub mod range_max;

pub use absent::{shortest_non_substring_lexicographic, shortest_non_substring_trie};
pub use debruijn::de_bruijn_superstring;
pub use lccs::{lccs_constrained, LccsBranch, LccsResult};
pub use mwcs::{
    max_weight_common_subsequence, Agg, AggPair, MatchTuple, MwcsResult, DEFAULT_TUPLE_CAP,
};
pub use range_max::RangeMaxIndex;
