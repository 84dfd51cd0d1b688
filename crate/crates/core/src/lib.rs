//! Fuzzy finite automata over the max-min unit interval and their directing
//! words.
//!
//! An [`Ffa`] assigns every transition `(a, x, b)` a degree in `[0, 1]`;
//! degrees are exact rationals so transition matrices can be compared for
//! equality. The [`directability`] module decides the six directing notions
//! D1-D3 (on reach sets) and DD1-DD3 (on degree rows) and builds
//! deterministic recognizers for their word sets. [`languages`] supplies the
//! regular-language operations used to check closure laws, [`algebra`] the
//! subautomaton, quotient and product constructions, and [`classify`] ties it
//! together into one report per automaton.
//!
//! ```
//! use fuzzdir_core::{fixtures, directability::{shortest_directing_word, DirectingKind}};
//!
//! let f = fixtures::ex31();
//! let w = shortest_directing_word(&f, DirectingKind::D3).unwrap().unwrap();
//! assert_eq!(f.render_word(&w), "xx");
//! ```

pub mod algebra;
pub mod automata;
pub mod classify;
pub mod degree;
pub mod directability;
pub mod dot;
pub mod error;
mod explore;
pub mod fixtures;
pub mod format;
pub mod fuzzy_set;
pub mod generate;
pub mod languages;
pub mod reductions;
pub mod symbols;
pub mod words;

pub use automata::{matrix_product, Dfa, Dfr, Ffa, Nfa, TransitionMatrix};
pub use degree::{join, meet, Degree};
pub use directability::DirectingKind;
pub use error::{Error, Result};
pub use fuzzy_set::{is_normal_fuzzy_set, support, FuzzyStateSet};
pub use symbols::Symbols;
