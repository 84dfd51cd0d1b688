//! The line-oriented automaton file format.
//!
//! ```text
//! # Example: a two-state fuzzy automaton
//! kind: ffa
//! states: a b
//! alphabet: x y
//! trans: a x b 1
//! trans: a y a 0.5
//! ```
//!
//! `kind` is one of `ffa`, `nfa`, `dfa`. FFA transitions carry a degree
//! (decimal or fraction; omitted triples have degree 0). NFA and DFA
//! transitions are `trans: <src> <letter> <dst>`; a DFA must define every
//! `(state, letter)` pair exactly once. `#` starts a comment.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::automata::{Dfa, Ffa, Nfa};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::reductions::{dfa_to_ffa, nfa_to_ffa};
use crate::symbols::Symbols;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AutomatonKind {
    Ffa,
    Nfa,
    Dfa,
}

impl AutomatonKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AutomatonKind::Ffa => "ffa",
            AutomatonKind::Nfa => "nfa",
            AutomatonKind::Dfa => "dfa",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automaton {
    Ffa(Ffa),
    Nfa(Nfa),
    Dfa(Dfa),
}

impl Automaton {
    pub fn kind(&self) -> AutomatonKind {
        match self {
            Automaton::Ffa(_) => AutomatonKind::Ffa,
            Automaton::Nfa(_) => AutomatonKind::Nfa,
            Automaton::Dfa(_) => AutomatonKind::Dfa,
        }
    }

    /// Views any automaton as an FFA (`N^fz` for NFAs, `A^fz` for DFAs).
    pub fn into_ffa(self) -> Ffa {
        match self {
            Automaton::Ffa(f) => f,
            Automaton::Nfa(n) => nfa_to_ffa(&n),
            Automaton::Dfa(d) => dfa_to_ffa(&d),
        }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str, offset: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((byte, col)),
            (true, Some((b, c))) => {
                out.push(Token {
                    text: &line[b..byte],
                    column: offset + c + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((b, c)) = start {
        out.push(Token {
            text: &line[b..],
            column: offset + c + 1,
        });
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

struct Header {
    kind: Option<AutomatonKind>,
    states: Option<Symbols>,
    alphabet: Option<Symbols>,
}

/// Parses an automaton file. The header decides which variant is returned.
pub fn parse_automaton(text: &str) -> Result<Automaton> {
    let mut header = Header {
        kind: None,
        states: None,
        alphabet: None,
    };
    // (line, src, letter, dst, degree)
    let mut edges: Vec<(usize, usize, usize, usize, Degree)> = Vec::new();
    let mut seen = BTreeSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            let col = content.chars().take_while(|c| c.is_whitespace()).count() + 1;
            return Err(syntax(lineno, col, "expected `key: value`"));
        };
        let key = content[..colon].trim();
        let value_offset = content[..=colon].chars().count();
        let values = tokens(&content[colon + 1..], value_offset);
        let key_col = content.chars().take_while(|c| c.is_whitespace()).count() + 1;
        let end_col = content.chars().count() + 1;

        match key {
            "kind" => {
                if header.kind.is_some() {
                    return Err(syntax(lineno, key_col, "`kind` given twice"));
                }
                let [tok] = values.as_slice() else {
                    return Err(syntax(lineno, value_offset + 1, "expected one of ffa, nfa, dfa"));
                };
                header.kind = Some(match tok.text {
                    "ffa" => AutomatonKind::Ffa,
                    "nfa" => AutomatonKind::Nfa,
                    "dfa" => AutomatonKind::Dfa,
                    other => {
                        return Err(syntax(
                            lineno,
                            tok.column,
                            format!("unknown kind `{other}`, expected ffa, nfa or dfa"),
                        ))
                    }
                });
            }
            "states" | "alphabet" => {
                let slot = if key == "states" {
                    &mut header.states
                } else {
                    &mut header.alphabet
                };
                if slot.is_some() {
                    return Err(syntax(lineno, key_col, format!("`{key}` given twice")));
                }
                if values.is_empty() {
                    return Err(syntax(lineno, end_col, format!("`{key}` needs at least one name")));
                }
                *slot = Some(Symbols::new(values.iter().map(|t| t.text)).map_err(|e| e.at_line(lineno))?);
            }
            "trans" => {
                let (Some(kind), Some(states), Some(alphabet)) =
                    (header.kind, header.states.as_ref(), header.alphabet.as_ref())
                else {
                    return Err(syntax(
                        lineno,
                        key_col,
                        "`kind`, `states` and `alphabet` must precede transitions",
                    ));
                };
                let arity = if kind == AutomatonKind::Ffa { 4 } else { 3 };
                if values.len() != arity {
                    let col = values.get(arity).map_or(end_col, |t| t.column);
                    let shape = if arity == 4 {
                        "<src> <letter> <dst> <degree>"
                    } else {
                        "<src> <letter> <dst>"
                    };
                    return Err(syntax(lineno, col, format!("expected `trans: {shape}`")));
                }
                let a = states
                    .get(values[0].text)
                    .ok_or_else(|| Error::UnknownState(values[0].text.into()).at_line(lineno))?;
                let x = alphabet
                    .get(values[1].text)
                    .ok_or_else(|| Error::UnknownLetter(values[1].text.into()).at_line(lineno))?;
                let b = states
                    .get(values[2].text)
                    .ok_or_else(|| Error::UnknownState(values[2].text.into()).at_line(lineno))?;
                let r = if arity == 4 {
                    values[3].text.parse::<Degree>().map_err(|e| e.at_line(lineno))?
                } else {
                    Degree::ONE
                };
                let dup_key = if kind == AutomatonKind::Dfa {
                    (a, x, 0)
                } else {
                    (a, x, b)
                };
                if !seen.insert(dup_key) {
                    let err = if kind == AutomatonKind::Dfa {
                        Error::NotDeterministic {
                            state: values[0].text.into(),
                            letter: values[1].text.into(),
                            problem: "defined more than once",
                        }
                    } else {
                        Error::DuplicateTransition {
                            src: values[0].text.into(),
                            letter: values[1].text.into(),
                            dst: values[2].text.into(),
                        }
                    };
                    return Err(err.at_line(lineno));
                }
                edges.push((lineno, a, x, b, r));
            }
            other => {
                return Err(syntax(lineno, key_col, format!("unknown key `{other}`")));
            }
        }
    }

    let last = text.lines().count() + 1;
    let kind = header.kind.ok_or_else(|| syntax(last, 1, "missing `kind`"))?;
    let states = header.states.ok_or_else(|| syntax(last, 1, "missing `states`"))?;
    let alphabet = header.alphabet.ok_or_else(|| syntax(last, 1, "missing `alphabet`"))?;
    Ok(match kind {
        AutomatonKind::Ffa => Automaton::Ffa(Ffa::new(
            states,
            alphabet,
            edges.into_iter().map(|(_, a, x, b, r)| (a, x, b, r)),
        )?),
        AutomatonKind::Nfa => Automaton::Nfa(Nfa::new(
            states,
            alphabet,
            edges.into_iter().map(|(_, a, x, b, _)| (a, x, b)),
        )?),
        AutomatonKind::Dfa => Automaton::Dfa(Dfa::from_edges(
            states,
            alphabet,
            edges.into_iter().map(|(_, a, x, b, _)| (a, x, b)),
        )?),
    })
}

/// Parses a file and views the result as an FFA.
pub fn parse_ffa(text: &str) -> Result<Ffa> {
    parse_automaton(text).map(Automaton::into_ffa)
}

fn header(out: &mut String, kind: AutomatonKind, states: &Symbols, alphabet: &Symbols) {
    let _ = writeln!(out, "kind: {}", kind.as_str());
    let _ = writeln!(out, "states: {}", states.names().join(" "));
    let _ = writeln!(out, "alphabet: {}", alphabet.names().join(" "));
}

/// Canonical text: positive transitions in state, letter, target order with
/// reduced-fraction degrees.
pub fn serialize_ffa(ffa: &Ffa) -> String {
    let mut out = String::new();
    header(&mut out, AutomatonKind::Ffa, ffa.states(), ffa.alphabet());
    for (a, x, b, r) in ffa.transitions() {
        let _ = writeln!(
            out,
            "trans: {} {} {} {}",
            ffa.states().name(a),
            ffa.alphabet().name(x),
            ffa.states().name(b),
            r
        );
    }
    out
}

pub fn serialize_nfa(nfa: &Nfa) -> String {
    let mut out = String::new();
    header(&mut out, AutomatonKind::Nfa, nfa.states(), nfa.alphabet());
    for (a, x, b) in nfa.edges() {
        let _ = writeln!(
            out,
            "trans: {} {} {}",
            nfa.states().name(a),
            nfa.alphabet().name(x),
            nfa.states().name(b)
        );
    }
    out
}

pub fn serialize_dfa(dfa: &Dfa) -> String {
    let mut out = String::new();
    header(&mut out, AutomatonKind::Dfa, dfa.states(), dfa.alphabet());
    for (a, x, b) in dfa.edges() {
        let _ = writeln!(
            out,
            "trans: {} {} {}",
            dfa.states().name(a),
            dfa.alphabet().name(x),
            dfa.states().name(b)
        );
    }
    out
}

pub fn serialize(automaton: &Automaton) -> String {
    match automaton {
        Automaton::Ffa(f) => serialize_ffa(f),
        Automaton::Nfa(n) => serialize_nfa(n),
        Automaton::Dfa(d) => serialize_dfa(d),
    }
}
