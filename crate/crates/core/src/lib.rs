//! String algorithms built on KMP failure trees, suffix arrays, tries and
//! pattern automata: prefix/ancestor queries, optimal concatenations,
//! constrained common substrings and subsequences, shortest absent
//! substrings, and counting or constructing strings under substring
//! occurrence constraints.
//!
//! Every algorithm has a brute-force counterpart in [`oracles`].

pub mod concatenation;
pub mod counting;
pub mod error;
pub mod oracles;
pub mod prefix_queries;
pub mod primitives;
pub mod subsequences;
pub mod text;

pub use error::{Error, Result};
pub use text::{Symbol, Text};

/// Arbitrary-precision non-negative count.
pub type BigCount = num_bigint::BigUint;
