//! Counting and constructing strings under substring occurrence
//! constraints, by dynamic programming over pattern automata.

pub mod constrained;
pub mod edfa;
pub mod maxweight;
pub mod spec;

pub use constrained::{count_constrained, count_table, CountTable};
pub use edfa::{count_epsilon_dfa, DfaEdge, EpsilonDfa};
pub use maxweight::{max_weight_string, MaxWeightResult};
pub use spec::{CountedPattern, OccurrenceSpec, DEFAULT_TABLE_CAP};
