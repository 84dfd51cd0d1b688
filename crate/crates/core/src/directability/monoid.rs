use std::collections::BTreeSet;

use crate::automata::{Dfa, Dfr, Ffa, TransitionMatrix};
use crate::degree::Degree;
use crate::directability::{DirectingKind, DEFAULT_STATE_CAP};
use crate::error::{Error, Result};
use crate::explore::explore;
use crate::symbols::Symbols;

/// The reachable transition matrices `M_w`, numbered breadth-first from
/// `M_ε`, with the right action `M_w ↦ M_wx` of every letter.
#[derive(Clone, Debug)]
pub struct TransitionMonoid {
    matrices: Vec<TransitionMatrix>,
    next: Vec<usize>,
    letters: usize,
}

impl TransitionMonoid {
    pub fn new(ffa: &Ffa) -> Result<Self> {
        Self::with_cap(ffa, DEFAULT_STATE_CAP)
    }

    pub fn with_cap(ffa: &Ffa, cap: usize) -> Result<Self> {
        let letters: Vec<TransitionMatrix> = (0..ffa.letter_count()).map(|x| ffa.letter_matrix(x)).collect();
        let explored = explore(
            TransitionMatrix::identity(ffa.state_count()),
            letters.len(),
            cap,
            |m, x| m.product_unchecked(&letters[x]),
        )?;
        Ok(TransitionMonoid {
            matrices: explored.states,
            next: explored.next,
            letters: letters.len(),
        })
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// All elements; index 0 is the identity.
    pub fn matrices(&self) -> &[TransitionMatrix] {
        &self.matrices
    }

    pub fn next(&self, i: usize, x: usize) -> usize {
        self.next[i * self.letters + x]
    }

    /// Every entry value occurring in some element.
    pub fn degree_values(&self) -> BTreeSet<Degree> {
        self.matrices.iter().flat_map(TransitionMatrix::values).collect()
    }
}

fn is_final(m: &TransitionMatrix, kind: DirectingKind) -> bool {
    match kind {
        DirectingKind::DD1 => m.is_single_column_constant(),
        DirectingKind::DD2 => m.rows_identical(),
        DirectingKind::DD3 => m.has_common_max_column(),
        _ => false,
    }
}

fn label(m: &TransitionMatrix) -> String {
    (0..m.dimension())
        .map(|i| m.row(i).iter().map(Degree::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("|")
}

/// Recognizer of `DD_kind(F)` for `kind` in DD1, DD2, DD3 over the transition monoid.
pub fn build_dd_recognizer(ffa: &Ffa, kind: DirectingKind) -> Result<Dfr> {
    build_dd_recognizer_with_cap(ffa, kind, DEFAULT_STATE_CAP)
}

pub fn build_dd_recognizer_with_cap(ffa: &Ffa, kind: DirectingKind, cap: usize) -> Result<Dfr> {
    if !kind.uses_degrees() {
        return Err(Error::UnsupportedKind(format!(
            "{kind} on the transition-matrix recognizer"
        )));
    }
    let monoid = TransitionMonoid::with_cap(ffa, cap)?;
    let finals = monoid
        .matrices
        .iter()
        .enumerate()
        .filter(|(_, m)| is_final(m, kind))
        .map(|(i, _)| i)
        .collect();
    let names = Symbols::new(monoid.matrices.iter().map(label))?;
    let dfa = Dfa::new(names, ffa.alphabet().clone(), monoid.next)?;
    Dfr::new(dfa, 0, finals)
}
