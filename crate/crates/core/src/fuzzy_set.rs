use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::degree::Degree;
use crate::symbols::Symbols;

/// A fuzzy subset of a finite ground set `{0, .., size - 1}`.
///
/// Only positive memberships are stored, so two sets over the same ground set
/// compare extensionally with `==`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FuzzyStateSet {
    size: usize,
    members: BTreeMap<usize, Degree>,
}

impl FuzzyStateSet {
    pub fn empty(size: usize) -> Self {
        FuzzyStateSet {
            size,
            members: BTreeMap::new(),
        }
    }

    pub fn singleton(size: usize, state: usize, degree: Degree) -> Self {
        let mut set = Self::empty(size);
        set.set(state, degree);
        set
    }

    /// Builds a set from `(state, degree)` pairs; later pairs overwrite earlier ones.
    pub fn from_pairs(size: usize, pairs: impl IntoIterator<Item = (usize, Degree)>) -> Self {
        let mut set = Self::empty(size);
        for (s, r) in pairs {
            set.set(s, r);
        }
        set
    }

    pub fn ground_size(&self) -> usize {
        self.size
    }

    pub fn get(&self, state: usize) -> Degree {
        self.members.get(&state).copied().unwrap_or(Degree::ZERO)
    }

    pub fn set(&mut self, state: usize, degree: Degree) {
        assert!(
            state < self.size,
            "state {state} outside ground set of size {}",
            self.size
        );
        if degree.is_zero() {
            self.members.remove(&state);
        } else {
            self.members.insert(state, degree);
        }
    }

    /// Raises the membership of `state` to at least `degree`.
    pub fn join_at(&mut self, state: usize, degree: Degree) {
        if degree > self.get(state) {
            self.set(state, degree);
        }
    }

    /// Positive memberships in ascending state order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, Degree)> + '_ {
        self.members.iter().map(|(&s, &r)| (s, r))
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.members.keys().copied().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Largest membership degree (`0` for the empty set).
    pub fn height(&self) -> Degree {
        self.members.values().copied().max().unwrap_or(Degree::ZERO)
    }

    pub fn is_normal(&self) -> bool {
        self.members.values().any(Degree::is_one)
    }

    /// Pointwise join.
    pub fn union(&self, other: &FuzzyStateSet) -> FuzzyStateSet {
        let mut out = self.clone();
        for (s, r) in other.iter() {
            out.join_at(s, r);
        }
        out
    }

    /// Membership vector over the whole ground set.
    pub fn to_dense(&self) -> Vec<Degree> {
        (0..self.size).map(|s| self.get(s)).collect()
    }

    /// `{b/1/2, c/1/10}` style rendering with state names.
    pub fn display<'a>(&'a self, states: &'a Symbols) -> impl fmt::Display + 'a {
        DisplaySet { set: self, states }
    }
}

pub fn support(set: &FuzzyStateSet) -> BTreeSet<usize> {
    set.support()
}

pub fn is_normal_fuzzy_set(set: &FuzzyStateSet) -> bool {
    set.is_normal()
}

struct DisplaySet<'a> {
    set: &'a FuzzyStateSet,
    states: &'a Symbols,
}

impl fmt::Display for DisplaySet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (s, r)) in self.set.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}/{}", self.states.name(s), r)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FuzzyStateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.members.iter()).finish()
    }
}
