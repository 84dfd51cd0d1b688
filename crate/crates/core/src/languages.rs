//! Regular-language operations on recognizers, and the language-level
//! checks built on them.

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::automata::{Dfa, Dfr, Ffa};
use crate::directability::{
    build_dd_recognizer_with_cap, is_directable_with_cap, is_directing, DirectingKind, DEFAULT_STATE_CAP,
};
use crate::error::{Error, Result};
use crate::explore::explore;
use crate::symbols::Symbols;
use crate::words::all_words;

fn assemble(names: Vec<String>, alphabet: &Symbols, next: Vec<usize>, finals: BTreeSet<usize>) -> Dfr {
    let names = Symbols::new(names).expect("generated state names are distinct");
    let dfa = Dfa::new(names, alphabet.clone(), next).expect("generated transition table is total");
    Dfr::new(dfa, 0, finals).expect("state 0 exists")
}

/// The minimal complete recognizer of `L(R)`. States are numbered
/// breadth-first from the initial state and keep the name of their first
/// reachable representative.
pub fn minimize(r: &Dfr) -> Dfr {
    let dfa = r.dfa();
    let m = dfa.letter_count();
    let order: Vec<usize> = r.reachable().into_iter().map(|(s, _)| s).collect();
    let mut class: HashMap<usize, usize> = order.iter().map(|&s| (s, usize::from(r.is_final(s)))).collect();
    let mut count = 0;
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut refined = HashMap::with_capacity(order.len());
        for &s in &order {
            let mut signature = vec![class[&s]];
            signature.extend((0..m).map(|x| class[&dfa.next(s, x)]));
            let fresh = ids.len();
            refined.insert(s, *ids.entry(signature).or_insert(fresh));
        }
        class = refined;
        if ids.len() == count {
            break;
        }
        count = ids.len();
    }

    let mut representative: HashMap<usize, usize> = HashMap::new();
    for &s in &order {
        representative.entry(class[&s]).or_insert(s);
    }
    let explored = explore(class[&r.initial()], m, usize::MAX, |&c, x| {
        class[&dfa.next(representative[&c], x)]
    })
    .expect("no cap");
    let names = explored
        .states
        .iter()
        .map(|c| r.state_name(representative[c]).to_string())
        .collect();
    let finals = explored
        .states
        .iter()
        .enumerate()
        .filter(|(_, c)| r.is_final(representative[c]))
        .map(|(i, _)| i)
        .collect();
    assemble(names, r.alphabet(), explored.next, finals)
}

/// A shortest word in exactly one of the two languages, least in letter order
/// among those; `None` when the languages coincide.
pub fn distinguishing_word(left: &Dfr, right: &Dfr) -> Result<Option<Vec<usize>>> {
    if left.alphabet() != right.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let m = left.alphabet().len();
    let start = (left.initial(), right.initial());
    // Each visited pair with the pair and letter it was first reached from.
    type Back = Option<((usize, usize), usize)>;
    let mut parent: HashMap<(usize, usize), Back> = HashMap::from([(start, None)]);
    let mut queue = VecDeque::from([start]);
    while let Some(pair @ (p, q)) = queue.pop_front() {
        if left.is_final(p) != right.is_final(q) {
            let mut word = Vec::new();
            let mut cur = pair;
            while let Some((prev, x)) = parent[&cur] {
                word.push(x);
                cur = prev;
            }
            word.reverse();
            return Ok(Some(word));
        }
        for x in 0..m {
            let target = (left.dfa().next(p, x), right.dfa().next(q, x));
            if let Entry::Vacant(slot) = parent.entry(target) {
                slot.insert(Some((pair, x)));
                queue.push_back(target);
            }
        }
    }
    Ok(None)
}

pub fn language_equal(left: &Dfr, right: &Dfr) -> Result<bool> {
    Ok(distinguishing_word(left, right)?.is_none())
}

fn subset_label(set: &BTreeSet<usize>) -> String {
    let items: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// Recognizer of `X*·L(R)`.
pub fn left_ideal_closure(r: &Dfr) -> Dfr {
    let dfa = r.dfa();
    let q0 = r.initial();
    let explored = explore(BTreeSet::from([q0]), dfa.letter_count(), usize::MAX, |set, x| {
        let mut next: BTreeSet<usize> = set.iter().map(|&q| dfa.next(q, x)).collect();
        next.insert(q0);
        next
    })
    .expect("no cap");
    let finals = explored
        .states
        .iter()
        .enumerate()
        .filter(|(_, set)| set.iter().any(|&q| r.is_final(q)))
        .map(|(i, _)| i)
        .collect();
    let names = explored.states.iter().map(subset_label).collect();
    assemble(names, r.alphabet(), explored.next, finals)
}

/// Recognizer of `L(R)·X*`: once a final state is reached the run stays
/// accepting.
pub fn right_ideal_closure(r: &Dfr) -> Dfr {
    let dfa = r.dfa();
    let n = dfa.state_count();
    let m = dfa.letter_count();
    let mut trap = String::from("accept");
    while dfa.states().get(&trap).is_some() {
        trap.push('\'');
    }
    // Renumber so the initial state comes first.
    let mut order: Vec<usize> = vec![r.initial()];
    order.extend((0..n).filter(|&s| s != r.initial()));
    let mut position = vec![0; n];
    for (i, &s) in order.iter().enumerate() {
        position[s] = i;
    }
    let mut next = Vec::with_capacity((n + 1) * m);
    for &s in &order {
        for x in 0..m {
            next.push(if r.is_final(s) { n } else { position[dfa.next(s, x)] });
        }
    }
    next.extend(std::iter::repeat_n(n, m));
    let mut finals: BTreeSet<usize> = r.finals().iter().map(|&s| position[s]).collect();
    finals.insert(n);
    let mut names: Vec<String> = order.iter().map(|&s| r.state_name(s).to_string()).collect();
    names.push(trap);
    assemble(names, r.alphabet(), next, finals)
}

/// Recognizer of `X*·L(R)·X*`.
pub fn two_sided_ideal_closure(r: &Dfr) -> Dfr {
    left_ideal_closure(&minimize(&right_ideal_closure(r)))
}

/// Recognizer of the single word `word`.
pub fn single_word(alphabet: &Symbols, word: &[usize]) -> Result<Dfr> {
    if let Some(x) = word.iter().find(|&&x| x >= alphabet.len()) {
        return Err(Error::UnknownLetter(x.to_string()));
    }
    let k = word.len();
    let dead = k + 1;
    let mut next = Vec::with_capacity((k + 2) * alphabet.len());
    for i in 0..=dead {
        let expected = word.get(i);
        for x in 0..alphabet.len() {
            next.push(if expected == Some(&x) { i + 1 } else { dead });
        }
    }
    let names = (0..=k).map(|i| format!("p{i}")).chain(["dead".to_string()]).collect();
    Ok(assemble(names, alphabet, next, BTreeSet::from([k])))
}

/// Recognizer of the empty language.
pub fn empty_language(alphabet: &Symbols) -> Dfr {
    let next = vec![0; alphabet.len()];
    assemble(vec!["dead".into()], alphabet, next, BTreeSet::new())
}

/// One law of the form `lhs = DD_i`, evaluated on a particular automaton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: &'static str,
    /// Guaranteed only for normal automata.
    pub requires_normal: bool,
    pub holds: bool,
    /// A shortest word on which the two sides differ.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub normal: bool,
    pub laws: Vec<LawCheck>,
}

impl ClosureReport {
    pub fn get(&self, law: &str) -> Option<&LawCheck> {
        self.laws.iter().find(|l| l.law == law)
    }

    /// Laws that fail although they are guaranteed for this automaton.
    pub fn violations(&self) -> Vec<&LawCheck> {
        self.laws
            .iter()
            .filter(|l| !l.holds && (self.normal || !l.requires_normal))
            .collect()
    }
}

pub const LAW_RIGHT_DD2: &str = "DD2 X* = DD2";
pub const LAW_LEFT_DD1: &str = "X* DD1 = DD1";
pub const LAW_TWO_SIDED_DD2: &str = "X* DD2 X* = DD2";
pub const LAW_TWO_SIDED_DD3: &str = "X* DD3 X* = DD3";
/// Follows from the two-sided DD2 law; listed separately because it is the
/// one that visibly fails on complete but non-normal automata.
pub const LAW_LEFT_DD2: &str = "X* DD2 = DD2";

pub fn check_closure_equations(ffa: &Ffa) -> Result<ClosureReport> {
    check_closure_equations_with_cap(ffa, DEFAULT_STATE_CAP)
}

pub fn check_closure_equations_with_cap(ffa: &Ffa, cap: usize) -> Result<ClosureReport> {
    let dd1 = minimize(&build_dd_recognizer_with_cap(ffa, DirectingKind::DD1, cap)?);
    let dd2 = minimize(&build_dd_recognizer_with_cap(ffa, DirectingKind::DD2, cap)?);
    let dd3 = minimize(&build_dd_recognizer_with_cap(ffa, DirectingKind::DD3, cap)?);
    let check = |law, requires_normal, lhs: Dfr, rhs: &Dfr| -> LawCheck {
        let witness = distinguishing_word(&lhs, rhs).expect("same alphabet");
        LawCheck {
            law,
            requires_normal,
            holds: witness.is_none(),
            witness: witness.map(|w| ffa.render_word(&w)),
        }
    };
    Ok(ClosureReport {
        normal: ffa.is_normal(),
        laws: vec![
            check(LAW_RIGHT_DD2, false, right_ideal_closure(&dd2), &dd2),
            check(LAW_LEFT_DD1, true, left_ideal_closure(&dd1), &dd1),
            check(LAW_TWO_SIDED_DD2, true, two_sided_ideal_closure(&dd2), &dd2),
            check(LAW_TWO_SIDED_DD3, true, two_sided_ideal_closure(&dd3), &dd3),
            check(LAW_LEFT_DD2, true, left_ideal_closure(&dd2), &dd2),
        ],
    })
}

/// Whether the minimal recognizer of `DD_kind(F)` has exactly one final
/// state and that state is a trap. Requires a DD2-directable automaton for
/// DD2 and a normal DD3-directable one for DD3.
pub fn trap_state_check(ffa: &Ffa, kind: DirectingKind) -> Result<bool> {
    match kind {
        DirectingKind::DD2 => {}
        DirectingKind::DD3 if ffa.is_normal() => {}
        DirectingKind::DD3 => {
            return Err(Error::Precondition("automaton is not normal".into()));
        }
        other => {
            return Err(Error::UnsupportedKind(format!("{other} in the trap-state check")));
        }
    }
    if !is_directable_with_cap(ffa, kind, DEFAULT_STATE_CAP)? {
        return Err(Error::Precondition(format!("automaton is not {kind}-directable")));
    }
    let minimal = minimize(&build_dd_recognizer_with_cap(ffa, kind, DEFAULT_STATE_CAP)?);
    let finals: Vec<usize> = minimal.finals().iter().copied().collect();
    Ok(match finals[..] {
        [f] => (0..minimal.alphabet().len()).all(|x| minimal.dfa().next(f, x) == f),
        _ => false,
    })
}

/// Every `kind`-directing word of length at most `max_len`, by direct row
/// evaluation, in length-then-letter order.
pub fn enumerate_directing_words(ffa: &Ffa, kind: DirectingKind, max_len: usize) -> Vec<Vec<usize>> {
    all_words(ffa.letter_count(), max_len)
        .filter(|w| is_directing(ffa, kind, w).expect("enumerated words use the alphabet"))
        .collect()
}

/// Whether `L(R)` is nonempty and a two-sided ideal, `X*·L·X* = L`: the
/// shape of the directing-word set of a directable DFA.
pub fn dw_characterization_check(r: &Dfr) -> bool {
    !r.is_empty() && language_equal(&two_sided_ideal_closure(r), r).expect("same alphabet")
}
