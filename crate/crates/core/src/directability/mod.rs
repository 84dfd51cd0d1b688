//! Directing words of fuzzy automata.
//!
//! Six notions are supported. The crisp ones look only at reach sets
//! `F(a, w)`:
//!
//! * **D1**: every state reaches exactly the same single state;
//! * **D2**: all states reach the same set;
//! * **D3**: some state is reachable from every state.
//!
//! The degree-sensitive ones look at the rows `F_{a,w}`:
//!
//! * **DD1**: every row is the same singleton `{c/r}` with `r > 0`;
//! * **DD2**: all rows are equal;
//! * **DD3**: some state is, in every row, a positive maximum.
//!
//! Each set of directing words is regular. [`build_recognizer`] constructs a
//! deterministic recognizer for it: over families of reach sets for D1-D3 and
//! over the transition monoid for DD1-DD3. D3-directability of complete
//! automata can also be decided by pair merging, see [`d3_decide_by_merging`].

mod family;
mod merge;
mod monoid;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::automata::{Dfr, Ffa};
use crate::error::{Error, Result};
use crate::fuzzy_set::FuzzyStateSet;

pub use family::{build_d_recognizer, build_d_recognizer_with_cap, FamilyRecognizerState};
pub use merge::{d3_decide_by_merging, d3_merges, mu_chain, MergeabilityState, PairRelation};
pub use monoid::{build_dd_recognizer, build_dd_recognizer_with_cap, TransitionMonoid};

/// Upper bound on recognizer states before construction gives up.
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DirectingKind {
    D1,
    D2,
    D3,
    DD1,
    DD2,
    DD3,
}

impl DirectingKind {
    pub const ALL: [DirectingKind; 6] = [
        DirectingKind::D1,
        DirectingKind::D2,
        DirectingKind::D3,
        DirectingKind::DD1,
        DirectingKind::DD2,
        DirectingKind::DD3,
    ];
    pub const CRISP: [DirectingKind; 3] = [DirectingKind::D1, DirectingKind::D2, DirectingKind::D3];
    pub const FUZZY: [DirectingKind; 3] = [DirectingKind::DD1, DirectingKind::DD2, DirectingKind::DD3];

    /// True for DD1, DD2 and DD3.
    pub fn uses_degrees(self) -> bool {
        matches!(self, DirectingKind::DD1 | DirectingKind::DD2 | DirectingKind::DD3)
    }

    /// The other member of the pair (D1 <-> DD1, ...).
    pub fn counterpart(self) -> DirectingKind {
        match self {
            DirectingKind::D1 => DirectingKind::DD1,
            DirectingKind::D2 => DirectingKind::DD2,
            DirectingKind::D3 => DirectingKind::DD3,
            DirectingKind::DD1 => DirectingKind::D1,
            DirectingKind::DD2 => DirectingKind::D2,
            DirectingKind::DD3 => DirectingKind::D3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DirectingKind::D1 => "D1",
            DirectingKind::D2 => "D2",
            DirectingKind::D3 => "D3",
            DirectingKind::DD1 => "DD1",
            DirectingKind::DD2 => "DD2",
            DirectingKind::DD3 => "DD3",
        }
    }
}

impl fmt::Display for DirectingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DirectingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DirectingKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnsupportedKind(format!("directing kind `{s}`")))
    }
}

/// Evaluates the defining condition of `kind` on the rows `F_{a,w}`.
pub(crate) fn rows_satisfy(kind: DirectingKind, rows: &[FuzzyStateSet]) -> bool {
    let Some(first) = rows.first() else {
        return true;
    };
    match kind {
        DirectingKind::D1 => {
            let target = first.support();
            target.len() == 1 && rows.iter().all(|r| r.support() == target)
        }
        DirectingKind::D2 => {
            let target = first.support();
            rows.iter().all(|r| r.support() == target)
        }
        DirectingKind::D3 => {
            let mut common = first.support();
            for r in &rows[1..] {
                common.retain(|s| r.get(*s).is_positive());
            }
            !common.is_empty()
        }
        DirectingKind::DD1 => first.iter().count() == 1 && rows.iter().all(|r| r == first),
        DirectingKind::DD2 => rows.iter().all(|r| r == first),
        DirectingKind::DD3 => {
            let heights: Vec<_> = rows.iter().map(FuzzyStateSet::height).collect();
            first.support().into_iter().any(|c| {
                rows.iter()
                    .zip(&heights)
                    .all(|(r, h)| r.get(c).is_positive() && r.get(c) == *h)
            })
        }
    }
}

/// Whether `word` is a `kind`-directing word of `ffa`, decided from the rows
/// `F_{a,w}` computed state by state.
pub fn is_directing(ffa: &Ffa, kind: DirectingKind, word: &[usize]) -> Result<bool> {
    ffa.check_word(word)?;
    let rows = (0..ffa.state_count())
        .map(|a| ffa.step_star(a, word))
        .collect::<Result<Vec<_>>>()?;
    Ok(rows_satisfy(kind, &rows))
}

/// Recognizer of the `kind`-directing words, with the default state cap.
pub fn build_recognizer(ffa: &Ffa, kind: DirectingKind) -> Result<Dfr> {
    build_recognizer_with_cap(ffa, kind, DEFAULT_STATE_CAP)
}

pub fn build_recognizer_with_cap(ffa: &Ffa, kind: DirectingKind, cap: usize) -> Result<Dfr> {
    if kind.uses_degrees() {
        build_dd_recognizer_with_cap(ffa, kind, cap)
    } else {
        build_d_recognizer_with_cap(ffa, kind, cap)
    }
}

/// Nonemptiness of the `kind`-directing words.
pub fn is_directable(ffa: &Ffa, kind: DirectingKind) -> Result<bool> {
    is_directable_with_cap(ffa, kind, DEFAULT_STATE_CAP)
}

pub fn is_directable_with_cap(ffa: &Ffa, kind: DirectingKind, cap: usize) -> Result<bool> {
    Ok(!build_recognizer_with_cap(ffa, kind, cap)?.is_empty())
}

/// A shortest `kind`-directing word, least in declared letter order among
/// words of that length; `None` when there is none.
pub fn shortest_directing_word(ffa: &Ffa, kind: DirectingKind) -> Result<Option<Vec<usize>>> {
    shortest_directing_word_with_cap(ffa, kind, DEFAULT_STATE_CAP)
}

pub fn shortest_directing_word_with_cap(ffa: &Ffa, kind: DirectingKind, cap: usize) -> Result<Option<Vec<usize>>> {
    Ok(build_recognizer_with_cap(ffa, kind, cap)?.shortest_accepted())
}
