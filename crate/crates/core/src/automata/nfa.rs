use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::symbols::Symbols;

/// A nondeterministic automaton `(A, X, α)` with `α : A × X → ℘(A)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Nfa {
    states: Symbols,
    alphabet: Symbols,
    images: Vec<BTreeSet<usize>>,
}

impl Nfa {
    /// Builds an NFA from `(a, x, b)` edges. Repeated edges are an error.
    pub fn new<I>(states: Symbols, alphabet: Symbols, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        if states.is_empty() {
            return Err(Error::Empty("state"));
        }
        if alphabet.is_empty() {
            return Err(Error::Empty("letter"));
        }
        let (n, m) = (states.len(), alphabet.len());
        let mut images = vec![BTreeSet::new(); n * m];
        for (a, x, b) in edges {
            if a >= n || b >= n {
                return Err(Error::UnknownState(a.max(b).to_string()));
            }
            if x >= m {
                return Err(Error::UnknownLetter(x.to_string()));
            }
            if !images[a * m + x].insert(b) {
                return Err(Error::DuplicateTransition {
                    src: states.name(a).to_string(),
                    letter: alphabet.name(x).to_string(),
                    dst: states.name(b).to_string(),
                });
            }
        }
        Ok(Nfa {
            states,
            alphabet,
            images,
        })
    }

    pub fn from_names(states: &[&str], alphabet: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self> {
        let states = Symbols::new(states.iter().copied())?;
        let alphabet = Symbols::new(alphabet.iter().copied())?;
        let mut triples = Vec::with_capacity(edges.len());
        for &(a, x, b) in edges {
            triples.push((
                states.get(a).ok_or_else(|| Error::UnknownState(a.into()))?,
                alphabet.get(x).ok_or_else(|| Error::UnknownLetter(x.into()))?,
                states.get(b).ok_or_else(|| Error::UnknownState(b.into()))?,
            ));
        }
        Nfa::new(states, alphabet, triples)
    }

    pub fn states(&self) -> &Symbols {
        &self.states
    }

    pub fn alphabet(&self) -> &Symbols {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn letter_count(&self) -> usize {
        self.alphabet.len()
    }

    /// `α(a, x)`
    pub fn image(&self, a: usize, x: usize) -> &BTreeSet<usize> {
        &self.images[a * self.alphabet.len() + x]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let m = self.alphabet.len();
        self.images
            .iter()
            .enumerate()
            .flat_map(move |(i, set)| set.iter().map(move |&b| (i / m, i % m, b)))
    }

    /// `α*(H, w)`
    pub fn step_star(&self, from: &BTreeSet<usize>, word: &[usize]) -> Result<BTreeSet<usize>> {
        if let Some(&a) = from.iter().find(|&&a| a >= self.state_count()) {
            return Err(Error::UnknownState(a.to_string()));
        }
        if let Some(&x) = word.iter().find(|&&x| x >= self.letter_count()) {
            return Err(Error::UnknownLetter(x.to_string()));
        }
        let mut current = from.clone();
        for &x in word {
            current = current.iter().flat_map(|&b| self.image(b, x).iter().copied()).collect();
        }
        Ok(current)
    }

    pub fn is_complete(&self) -> bool {
        self.images.iter().all(|s| !s.is_empty())
    }
}
