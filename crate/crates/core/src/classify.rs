//! Structural flags, directability and class membership of one automaton.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::automata::Ffa;
use crate::directability::{shortest_directing_word_with_cap, DirectingKind, DEFAULT_STATE_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub complete: bool,
    pub normal: bool,
    pub crisp: bool,
    /// Crisp with exactly one successor for every state and letter.
    pub deterministic: bool,
}

/// Membership in the classes `DD(i)`, `nDD(i)` and `Dir`. `None` means the
/// underlying directability question could not be answered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classes {
    pub dd1: Option<bool>,
    pub dd2: Option<bool>,
    pub dd3: Option<bool>,
    pub ndd1: Option<bool>,
    pub ndd2: Option<bool>,
    pub ndd3: Option<bool>,
    pub dir: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub states: usize,
    pub letters: usize,
    pub flags: Flags,
    pub directable: BTreeMap<DirectingKind, Option<bool>>,
    pub shortest: BTreeMap<DirectingKind, Option<String>>,
    /// Kinds whose analysis failed, with the reason.
    pub errors: BTreeMap<DirectingKind, String>,
    pub classes: Classes,
}

pub fn classify(ffa: &Ffa) -> ClassificationReport {
    classify_with_cap(ffa, DEFAULT_STATE_CAP)
}

/// Runs every analysis; a failure in one kind is recorded and the rest of the
/// report is still filled in.
pub fn classify_with_cap(ffa: &Ffa, cap: usize) -> ClassificationReport {
    let flags = Flags {
        complete: ffa.is_complete(),
        normal: ffa.is_normal(),
        crisp: ffa.is_crisp(),
        deterministic: ffa.is_deterministic(),
    };
    let mut directable = BTreeMap::new();
    let mut shortest = BTreeMap::new();
    let mut errors = BTreeMap::new();
    for kind in DirectingKind::ALL {
        match shortest_directing_word_with_cap(ffa, kind, cap) {
            Ok(word) => {
                directable.insert(kind, Some(word.is_some()));
                shortest.insert(kind, word.map(|w| ffa.render_word(&w)));
            }
            Err(err) => {
                directable.insert(kind, None);
                shortest.insert(kind, None);
                errors.insert(kind, err.to_string());
            }
        }
    }
    let dd = |kind| directable[&kind];
    let normal = |v: Option<bool>| v.map(|d| d && flags.normal);
    let classes = Classes {
        dd1: dd(DirectingKind::DD1),
        dd2: dd(DirectingKind::DD2),
        dd3: dd(DirectingKind::DD3),
        ndd1: normal(dd(DirectingKind::DD1)),
        ndd2: normal(dd(DirectingKind::DD2)),
        ndd3: normal(dd(DirectingKind::DD3)),
        dir: dd(DirectingKind::DD1).map(|d| d && flags.deterministic),
    };
    ClassificationReport {
        states: ffa.state_count(),
        letters: ffa.letter_count(),
        flags,
        directable,
        shortest,
        errors,
        classes,
    }
}

impl ClassificationReport {
    /// Implications between the classes that the report breaks. Unknown
    /// memberships never count as violations.
    pub fn violations(&self) -> Vec<String> {
        let c = &self.classes;
        let normal = self.flags.normal;
        let mut out = Vec::new();
        let mut implies = |name: &str, lhs: Option<bool>, rhs: Option<bool>| {
            if let (Some(true), Some(false)) = (lhs, rhs) {
                out.push(name.to_string());
            }
        };
        implies("Dir => nDD(1)", c.dir, c.ndd1);
        implies("DD(1) => DD(2)", c.dd1, c.dd2);
        implies("DD(1) => DD(3)", c.dd1, c.dd3);
        implies("nDD(1) => nDD(2)", c.ndd1, c.ndd2);
        implies("nDD(2) => nDD(3)", c.ndd2, c.ndd3);
        for (name, dd, ndd) in [
            ("nDD(1) = DD(1) and normal", c.dd1, c.ndd1),
            ("nDD(2) = DD(2) and normal", c.dd2, c.ndd2),
            ("nDD(3) = DD(3) and normal", c.dd3, c.ndd3),
        ] {
            if let (Some(dd), Some(ndd)) = (dd, ndd) {
                if ndd != (dd && normal) {
                    out.push(name.to_string());
                }
            }
        }
        out
    }

    /// A two-column plain-text rendering.
    pub fn to_text(&self) -> String {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let tri = |b: Option<bool>| b.map_or("unknown", yes_no);
        let mut out = String::new();
        let _ = writeln!(out, "{:<14}{}", "states", self.states);
        let _ = writeln!(out, "{:<14}{}", "letters", self.letters);
        let f = &self.flags;
        for (name, value) in [
            ("complete", f.complete),
            ("normal", f.normal),
            ("crisp", f.crisp),
            ("deterministic", f.deterministic),
        ] {
            let _ = writeln!(out, "{name:<14}{}", yes_no(value));
        }
        for kind in DirectingKind::ALL {
            let verdict = tri(self.directable[&kind]);
            let _ = match (&self.shortest[&kind], self.errors.get(&kind)) {
                (Some(w), _) => writeln!(out, "{:<14}{verdict} (shortest {w})", kind.as_str()),
                (None, Some(err)) => writeln!(out, "{:<14}{verdict} ({err})", kind.as_str()),
                (None, None) => writeln!(out, "{:<14}{verdict}", kind.as_str()),
            };
        }
        let c = &self.classes;
        for (name, value) in [
            ("DD(1)", c.dd1),
            ("DD(2)", c.dd2),
            ("DD(3)", c.dd3),
            ("nDD(1)", c.ndd1),
            ("nDD(2)", c.ndd2),
            ("nDD(3)", c.ndd3),
            ("Dir", c.dir),
        ] {
            let _ = writeln!(out, "{name:<14}{}", tri(value));
        }
        out
    }
}
