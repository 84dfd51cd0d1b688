use std::collections::BTreeSet;

use crate::automata::matrix::TransitionMatrix;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::fuzzy_set::FuzzyStateSet;
use crate::symbols::Symbols;

/// A fuzzy finite automaton `(A, X, f)` with `f : A × X × A → [0, 1]`.
///
/// Only positive transition degrees are stored; every other triple has degree 0.
#[derive(Clone, PartialEq, Eq)]
pub struct Ffa {
    states: Symbols,
    alphabet: Symbols,
    /// `rows[a * |X| + x]` holds the positive entries of `F_{a,x}`, sorted by target.
    rows: Vec<Vec<(usize, Degree)>>,
}

impl Ffa {
    /// Builds an automaton from index triples. Zero degrees are accepted and
    /// dropped; a triple listed twice is an error.
    pub fn new<I>(states: Symbols, alphabet: Symbols, transitions: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Degree)>,
    {
        if states.is_empty() {
            return Err(Error::Empty("state"));
        }
        if alphabet.is_empty() {
            return Err(Error::Empty("letter"));
        }
        let n = states.len();
        let m = alphabet.len();
        let mut seen = BTreeSet::new();
        let mut rows = vec![Vec::new(); n * m];
        for (a, x, b, r) in transitions {
            if a >= n {
                return Err(Error::UnknownState(a.to_string()));
            }
            if b >= n {
                return Err(Error::UnknownState(b.to_string()));
            }
            if x >= m {
                return Err(Error::UnknownLetter(x.to_string()));
            }
            if !seen.insert((a, x, b)) {
                return Err(Error::DuplicateTransition {
                    src: states.name(a).to_string(),
                    letter: alphabet.name(x).to_string(),
                    dst: states.name(b).to_string(),
                });
            }
            if r.is_positive() {
                rows[a * m + x].push((b, r));
            }
        }
        for row in &mut rows {
            row.sort_unstable_by_key(|&(b, _)| b);
        }
        Ok(Ffa { states, alphabet, rows })
    }

    /// Convenience constructor from names and degree literals.
    pub fn from_names(states: &[&str], alphabet: &[&str], transitions: &[(&str, &str, &str, &str)]) -> Result<Self> {
        let states = Symbols::new(states.iter().copied())?;
        let alphabet = Symbols::new(alphabet.iter().copied())?;
        let mut triples = Vec::with_capacity(transitions.len());
        for &(a, x, b, r) in transitions {
            triples.push((
                states.get(a).ok_or_else(|| Error::UnknownState(a.into()))?,
                alphabet.get(x).ok_or_else(|| Error::UnknownLetter(x.into()))?,
                states.get(b).ok_or_else(|| Error::UnknownState(b.into()))?,
                r.parse()?,
            ));
        }
        Ffa::new(states, alphabet, triples)
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

    pub fn state(&self, name: &str) -> Result<usize> {
        self.states
            .get(name)
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    pub fn letter(&self, name: &str) -> Result<usize> {
        self.alphabet
            .get(name)
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    pub fn word(&self, text: &str) -> Result<Vec<usize>> {
        self.alphabet.parse_word(text)
    }

    pub fn render_word(&self, word: &[usize]) -> String {
        self.alphabet.render_word(word)
    }

    /// Positive entries of the row `F_{a,x}`.
    pub fn row(&self, a: usize, x: usize) -> &[(usize, Degree)] {
        &self.rows[a * self.alphabet.len() + x]
    }

    pub fn degree(&self, a: usize, x: usize, b: usize) -> Degree {
        self.row(a, x)
            .iter()
            .find(|&&(t, _)| t == b)
            .map_or(Degree::ZERO, |&(_, r)| r)
    }

    /// All positive transitions `(a, x, b, f(a,x,b))` in state, letter, target order.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize, Degree)> + '_ {
        let m = self.alphabet.len();
        self.rows
            .iter()
            .enumerate()
            .flat_map(move |(i, row)| row.iter().map(move |&(b, r)| (i / m, i % m, b, r)))
    }

    /// The distinct positive degrees occurring in `f`.
    pub fn degree_values(&self) -> BTreeSet<Degree> {
        self.transitions().map(|(_, _, _, r)| r).collect()
    }

    pub(crate) fn check_state(&self, a: usize) -> Result<()> {
        if a < self.state_count() {
            Ok(())
        } else {
            Err(Error::UnknownState(a.to_string()))
        }
    }

    pub(crate) fn check_word(&self, word: &[usize]) -> Result<()> {
        match word.iter().find(|&&x| x >= self.letter_count()) {
            Some(x) => Err(Error::UnknownLetter(x.to_string())),
            None => Ok(()),
        }
    }

    /// One application of `f`: the fuzzy set reached from `set` on `x`.
    pub(crate) fn step_fuzzy(&self, set: &FuzzyStateSet, x: usize) -> FuzzyStateSet {
        let mut next = FuzzyStateSet::empty(self.state_count());
        for (c, r) in set.iter() {
            for &(b, s) in self.row(c, x) {
                next.join_at(b, r.meet(s));
            }
        }
        next
    }

    /// `F_{a,w}`: the fuzzy set `b ↦ f*(a, w, b)`, computed by unrolling the
    /// recursion `f*(a, vx, b) = max_c f*(a, v, c) ∧ f(c, x, b)` letter by letter.
    pub fn step_star(&self, a: usize, word: &[usize]) -> Result<FuzzyStateSet> {
        self.check_state(a)?;
        self.check_word(word)?;
        let start = FuzzyStateSet::singleton(self.state_count(), a, Degree::ONE);
        Ok(word.iter().fold(start, |set, &x| self.step_fuzzy(&set, x)))
    }

    /// `F(a, w)`: states reachable from `a` by `w` to a nonzero degree.
    pub fn reach(&self, a: usize, word: &[usize]) -> Result<BTreeSet<usize>> {
        Ok(self.step_star(a, word)?.support())
    }

    /// `F(H, w)`: the union of `F(a, w)` over `a ∈ H`.
    pub fn reach_set(&self, from: &BTreeSet<usize>, word: &[usize]) -> Result<BTreeSet<usize>> {
        self.check_word(word)?;
        let mut out = BTreeSet::new();
        for &a in from {
            out.extend(self.reach(a, word)?);
        }
        Ok(out)
    }

    /// Crisp one-letter step on a set of states.
    pub(crate) fn step_set(&self, from: &BTreeSet<usize>, x: usize) -> BTreeSet<usize> {
        from.iter()
            .flat_map(|&c| self.row(c, x).iter().map(|&(b, _)| b))
            .collect()
    }

    /// The matrix `M_x` of a single letter.
    pub fn letter_matrix(&self, x: usize) -> TransitionMatrix {
        let n = self.state_count();
        let mut m = TransitionMatrix::zero(n);
        for a in 0..n {
            for &(b, r) in self.row(a, x) {
                m.set(a, b, r);
            }
        }
        m
    }

    /// `M_w`, obtained as the max-min product of the letter matrices.
    pub fn transition_matrix(&self, word: &[usize]) -> Result<TransitionMatrix> {
        self.check_word(word)?;
        let start = TransitionMatrix::identity(self.state_count());
        Ok(word
            .iter()
            .fold(start, |m, &x| m.product_unchecked(&self.letter_matrix(x))))
    }

    /// Every `(a, x)` has at least one positive successor.
    pub fn is_complete(&self) -> bool {
        self.rows.iter().all(|row| !row.is_empty())
    }

    /// Every row `F_{a,x}` attains degree 1.
    pub fn is_normal(&self) -> bool {
        self.rows.iter().all(|row| row.iter().any(|(_, r)| r.is_one()))
    }

    /// All degrees are 0 or 1.
    pub fn is_crisp(&self) -> bool {
        self.transitions().all(|(_, _, _, r)| r.is_one())
    }

    /// Crisp with exactly one successor per `(a, x)`: the image of a DFA.
    pub fn is_deterministic(&self) -> bool {
        self.rows.iter().all(|row| row.len() == 1 && row[0].1.is_one())
    }

    /// First `(a, x)` without a positive successor.
    pub fn first_incomplete_row(&self) -> Option<(usize, usize)> {
        let m = self.letter_count();
        self.rows.iter().position(Vec::is_empty).map(|i| (i / m, i % m))
    }

    pub(crate) fn incomplete_error(&self) -> Option<Error> {
        self.first_incomplete_row().map(|(a, x)| Error::IncompleteAutomaton {
            state: self.states.name(a).to_string(),
            letter: self.alphabet.name(x).to_string(),
        })
    }
}

impl std::fmt::Debug for Ffa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::format::serialize_ffa(self))
    }
}
