//! DFAs, NFAs, fuzzy automata and their transition matrices.

mod dfa;
mod ffa;
mod matrix;
mod nfa;

pub use dfa::{Dfa, Dfr};
pub use ffa::Ffa;
pub use matrix::{matrix_product, TransitionMatrix};
pub use nfa::Nfa;
