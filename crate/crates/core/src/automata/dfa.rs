use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::symbols::Symbols;

/// A complete deterministic automaton `(A, X, δ)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dfa {
    states: Symbols,
    alphabet: Symbols,
    /// `delta[a * |X| + x] = δ(a, x)`
    delta: Vec<usize>,
}

impl Dfa {
    /// `delta` is the row-major table `δ(a, x)`; it must be total.
    pub fn new(states: Symbols, alphabet: Symbols, delta: Vec<usize>) -> Result<Self> {
        if states.is_empty() {
            return Err(Error::Empty("state"));
        }
        if alphabet.is_empty() {
            return Err(Error::Empty("letter"));
        }
        if delta.len() != states.len() * alphabet.len() {
            return Err(Error::DimensionMismatch {
                left: states.len() * alphabet.len(),
                right: delta.len(),
            });
        }
        if let Some(&b) = delta.iter().find(|&&b| b >= states.len()) {
            return Err(Error::UnknownState(b.to_string()));
        }
        Ok(Dfa {
            states,
            alphabet,
            delta,
        })
    }

    /// Builds a DFA from `(a, x, b)` edges, enforcing that every `(a, x)` appears exactly once.
    pub fn from_edges<I>(states: Symbols, alphabet: Symbols, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        let (n, m) = (states.len(), alphabet.len());
        let mut delta: Vec<Option<usize>> = vec![None; n * m];
        for (a, x, b) in edges {
            if a >= n || b >= n {
                return Err(Error::UnknownState(a.max(b).to_string()));
            }
            if x >= m {
                return Err(Error::UnknownLetter(x.to_string()));
            }
            let slot = &mut delta[a * m + x];
            if slot.is_some() {
                return Err(Error::NotDeterministic {
                    state: states.name(a).to_string(),
                    letter: alphabet.name(x).to_string(),
                    problem: "defined more than once",
                });
            }
            *slot = Some(b);
        }
        let mut table = Vec::with_capacity(n * m);
        for (i, t) in delta.into_iter().enumerate() {
            match t {
                Some(b) => table.push(b),
                None => {
                    return Err(Error::NotDeterministic {
                        state: states.name(i / m).to_string(),
                        letter: alphabet.name(i % m).to_string(),
                        problem: "undefined",
                    })
                }
            }
        }
        Dfa::new(states, alphabet, table)
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
        Dfa::from_edges(states, alphabet, triples)
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

    pub fn next(&self, a: usize, x: usize) -> usize {
        self.delta[a * self.alphabet.len() + x]
    }

    /// `δ*(a, w)`
    pub fn step_star(&self, a: usize, word: &[usize]) -> Result<usize> {
        if a >= self.state_count() {
            return Err(Error::UnknownState(a.to_string()));
        }
        if let Some(&x) = word.iter().find(|&&x| x >= self.letter_count()) {
            return Err(Error::UnknownLetter(x.to_string()));
        }
        Ok(word.iter().fold(a, |s, &x| self.next(s, x)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let m = self.alphabet.len();
        self.delta.iter().enumerate().map(move |(i, &b)| (i / m, i % m, b))
    }

    /// `w` is directing when `δ*(·, w)` is constant.
    pub fn is_directing(&self, word: &[usize]) -> Result<bool> {
        let target = self.step_star(0, word)?;
        Ok((1..self.state_count()).all(|a| self.word_target(a, word) == target))
    }

    fn word_target(&self, a: usize, word: &[usize]) -> usize {
        word.iter().fold(a, |s, &x| self.next(s, x))
    }
}

/// A deterministic finite recognizer `(A, X, δ, a₀, F)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dfr {
    dfa: Dfa,
    initial: usize,
    finals: BTreeSet<usize>,
}

impl Dfr {
    pub fn new(dfa: Dfa, initial: usize, finals: BTreeSet<usize>) -> Result<Self> {
        if initial >= dfa.state_count() {
            return Err(Error::UnknownState(initial.to_string()));
        }
        if let Some(&f) = finals.iter().find(|&&f| f >= dfa.state_count()) {
            return Err(Error::UnknownState(f.to_string()));
        }
        Ok(Dfr { dfa, initial, finals })
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn alphabet(&self) -> &Symbols {
        self.dfa.alphabet()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn state_count(&self) -> usize {
        self.dfa.state_count()
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals.contains(&state)
    }

    pub fn run(&self, word: &[usize]) -> Result<usize> {
        self.dfa.step_star(self.initial, word)
    }

    /// Membership of `w` in `L(R)`.
    pub fn accepts(&self, word: &[usize]) -> Result<bool> {
        Ok(self.is_final(self.run(word)?))
    }

    /// Reachable states in breadth-first order, each paired with the
    /// shortest, then lexicographically least, word leading to it.
    pub fn reachable(&self) -> Vec<(usize, Vec<usize>)> {
        let n = self.state_count();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(s) = queue.pop_front() {
            order.push(s);
            for x in 0..self.dfa.letter_count() {
                let t = self.dfa.next(s, x);
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((s, x));
                    queue.push_back(t);
                }
            }
        }
        order
            .into_iter()
            .map(|s| {
                let mut word = Vec::new();
                let mut cur = s;
                while let Some((p, x)) = parent[cur] {
                    word.push(x);
                    cur = p;
                }
                word.reverse();
                (s, word)
            })
            .collect()
    }

    /// A shortest accepted word, least in declared letter order among those of that length.
    pub fn shortest_accepted(&self) -> Option<Vec<usize>> {
        self.reachable()
            .into_iter()
            .find(|(s, _)| self.is_final(*s))
            .map(|(_, w)| w)
    }

    pub fn is_empty(&self) -> bool {
        self.shortest_accepted().is_none()
    }

    /// Accepted words of length at most `max_len` in length-then-lexicographic order.
    pub fn accepted_words(&self, max_len: usize) -> Vec<Vec<usize>> {
        crate::words::all_words(self.dfa.letter_count(), max_len)
            .filter(|w| self.is_final(self.dfa.word_target(self.initial, w)))
            .collect()
    }

    /// Label of a state, as given by the construction that produced it.
    pub fn state_name(&self, s: usize) -> &str {
        self.dfa.states().name(s)
    }
}
