use std::collections::BTreeSet;

use crate::automata::{Dfa, Dfr, Ffa};
use crate::directability::{DirectingKind, DEFAULT_STATE_CAP};
use crate::error::{Error, Result};
use crate::explore::explore;
use crate::symbols::Symbols;

/// A state of the reach-set recognizer: the set `{F(a₁,u), …, F(aₙ,u)}` of
/// reach sets after some input `u`, kept sorted and free of duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyRecognizerState {
    members: Vec<BTreeSet<usize>>,
}

impl FamilyRecognizerState {
    fn new(mut members: Vec<BTreeSet<usize>>) -> Self {
        members.sort();
        members.dedup();
        FamilyRecognizerState { members }
    }

    /// `{{a₁}, …, {aₙ}}`
    pub fn initial(state_count: usize) -> Self {
        Self::new((0..state_count).map(|a| BTreeSet::from([a])).collect())
    }

    pub fn members(&self) -> &[BTreeSet<usize>] {
        &self.members
    }

    /// `{F(C₁,x), …, F(C_k,x)}`
    pub fn step(&self, ffa: &Ffa, x: usize) -> Self {
        Self::new(self.members.iter().map(|c| ffa.step_set(c, x)).collect())
    }

    pub fn is_final(&self, kind: DirectingKind) -> bool {
        match kind {
            DirectingKind::D1 => self.members.len() == 1 && self.members[0].len() == 1,
            DirectingKind::D2 => self.members.len() == 1,
            DirectingKind::D3 => {
                let mut common = self.members[0].clone();
                for c in &self.members[1..] {
                    common.retain(|s| c.contains(s));
                }
                !common.is_empty()
            }
            _ => false,
        }
    }

    /// `{{a},{b,c}}`
    pub fn label(&self, states: &Symbols) -> String {
        let parts: Vec<String> = self
            .members
            .iter()
            .map(|c| {
                let names: Vec<&str> = c.iter().map(|&s| states.name(s)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Recognizer of `D_kind(F)` for `kind` in D1, D2, D3, built over the
/// reachable families of reach sets.
pub fn build_d_recognizer(ffa: &Ffa, kind: DirectingKind) -> Result<Dfr> {
    build_d_recognizer_with_cap(ffa, kind, DEFAULT_STATE_CAP)
}

pub fn build_d_recognizer_with_cap(ffa: &Ffa, kind: DirectingKind, cap: usize) -> Result<Dfr> {
    if kind.uses_degrees() {
        return Err(Error::UnsupportedKind(format!("{kind} on the reach-set recognizer")));
    }
    let explored = explore(
        FamilyRecognizerState::initial(ffa.state_count()),
        ffa.letter_count(),
        cap,
        |family, x| family.step(ffa, x),
    )?;
    let finals = explored
        .states
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_final(kind))
        .map(|(i, _)| i)
        .collect();
    let names = Symbols::new(explored.states.iter().map(|s| s.label(ffa.states())))?;
    let dfa = Dfa::new(names, ffa.alphabet().clone(), explored.next)?;
    Dfr::new(dfa, 0, finals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::reductions::{ffa_to_nfa, nfa_to_ffa};
    use DirectingKind::*;

    #[test]
    fn example_words() {
        let f = fixtures::ex31();
        let r = build_d_recognizer(&f, D3).unwrap();
        assert!(r.accepts(&f.word("xx").unwrap()).unwrap());
        assert!(!r.accepts(&f.word("yxx").unwrap()).unwrap());
        assert!(!r.accepts(&f.word("xxy").unwrap()).unwrap());
        assert_eq!(r.state_name(0), "{{a},{b},{c}}");
    }

    #[test]
    fn empty_language() {
        assert!(build_d_recognizer(&fixtures::ex38(), D3).unwrap().is_empty());
    }

    #[test]
    fn one_state_loop_accepts_everything() {
        let one = Ffa::from_names(&["a"], &["x", "y"], &[("a", "x", "a", "1"), ("a", "y", "a", "1")]).unwrap();
        for kind in DirectingKind::CRISP {
            let r = build_d_recognizer(&one, kind).unwrap();
            assert_eq!(r.state_count(), 1);
            assert!(r.is_final(0));
        }
    }

    #[test]
    fn degrees_do_not_matter() {
        let f = fixtures::ex31();
        let crisp = nfa_to_ffa(&ffa_to_nfa(&f));
        for kind in DirectingKind::CRISP {
            let a = build_d_recognizer(&f, kind).unwrap();
            let b = build_d_recognizer(&crisp, kind).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rejects_degree_kinds_and_honours_cap() {
        assert!(matches!(
            build_d_recognizer(&fixtures::ex31(), DD1),
            Err(Error::UnsupportedKind(_))
        ));
        assert!(matches!(
            build_d_recognizer_with_cap(&fixtures::ex31(), D1, 2),
            Err(Error::StateCapExceeded { cap: 2 })
        ));
    }
}
