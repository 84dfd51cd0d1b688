//! Built-in automata: the worked examples and counterexamples that pin down
//! the behaviour of every directability notion, under stable names.

use crate::automata::{Dfa, Ffa};
use crate::format::parse_ffa;
use crate::generate::generate_dfa;

pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub ffa: Ffa,
}

const SOURCES: &[(&str, &str, &str)] = &[
    (
        "EX31",
        "fuzzy automaton and its associated NFA; xx is D3-directing, yxx and xxy are not",
        "kind: ffa\nstates: a b c\nalphabet: x y\n\
         trans: a x b 0.3\ntrans: b x c 0.4\ntrans: c x b 0.2\ntrans: c x c 0.6\n\
         trans: b y b 0.5\ntrans: b y c 0.1\n",
    ),
    (
        "EX38",
        "incomplete; every pair D3-merges but no D3-directing word exists",
        "kind: ffa\nstates: a b c\nalphabet: x y z\n\
         trans: a x a 1\ntrans: b x a 1\ntrans: b y b 1\ntrans: c y b 1\n\
         trans: a z c 1\ntrans: c z c 1\n",
    ),
    (
        "P41a",
        "all x-degrees 1; x is DD2- and DD3-directing but not DD1-directing",
        "kind: ffa\nstates: a b\nalphabet: x\n\
         trans: a x a 1\ntrans: a x b 1\ntrans: b x a 1\ntrans: b x b 1\n",
    ),
    (
        "P41b",
        "x is D2-directing but not DD2-directing",
        "kind: ffa\nstates: a b\nalphabet: x\ntrans: a x b 0.1\ntrans: b x b 0.2\n",
    ),
    (
        "N44",
        "complete, not normal; DD1 = xX*, so X*DD1 and X*DD2 differ from DD1 and DD2",
        "kind: ffa\nstates: a b\nalphabet: x y\n\
         trans: a x b 1\ntrans: b x b 1\ntrans: b y b 1\ntrans: a y a 0.5\n",
    ),
    (
        "P53",
        "DD1 = DD2 = DD3 = xX*, not a directing-word set of any DFA",
        "kind: ffa\nstates: a b\nalphabet: x y\ntrans: a x b 1\ntrans: b x b 1\ntrans: b y b 1\n",
    ),
    (
        "P55n",
        "normal; DD1 = X*x",
        "kind: ffa\nstates: a b\nalphabet: x y\n\
         trans: a x b 1\ntrans: a y a 1\ntrans: b x b 1\ntrans: b y a 1\ntrans: b y b 1\n",
    ),
    (
        "P56",
        "x and xxy are DD3-directing, xy is not",
        "kind: ffa\nstates: p q\nalphabet: x y\n\
         trans: p x q 1\ntrans: q x p 1\ntrans: q x q 1\ntrans: p y p 1\n",
    ),
    (
        "P57",
        "x is DD3-directing but xy is not",
        "kind: ffa\nstates: a b\nalphabet: x y\n\
         trans: a x a 1\ntrans: a x b 1\ntrans: a y a 1\ntrans: b x b 1\n",
    ),
    (
        "P61b",
        "DD2 = DD3 = {x^n | n >= 1} while DD1 is empty",
        "kind: ffa\nstates: a b\nalphabet: x\n\
         trans: a x a 1\ntrans: a x b 1\ntrans: b x a 1\ntrans: b x b 1\n",
    ),
    (
        "P61cF",
        "normal; DD3-directable but not DD2-directable",
        "kind: ffa\nstates: a b\nalphabet: x y\n\
         trans: a x a 0.2\ntrans: a x b 1\ntrans: a y a 1\ntrans: b x b 1\ntrans: b y b 1\n",
    ),
    (
        "P61cG",
        "DD2-directable (xx empties every row) but not DD3-directable",
        "kind: ffa\nstates: a b\nalphabet: x\ntrans: a x b 1\n",
    ),
    (
        "P61gF",
        "DD1-directable but not normal",
        "kind: ffa\nstates: a b\nalphabet: x y\ntrans: a x b 1\ntrans: b x b 1\ntrans: b y b 1\n",
    ),
    (
        "P61hF",
        "DD2- and DD3-directable but not normal",
        "kind: ffa\nstates: a b\nalphabet: x\ntrans: a x b 0.5\ntrans: b x b 0.5\n",
    ),
    (
        "P61hG",
        "normal, no DD2-directing words; also not DD3-directable, as the row of a \
         keeps its maximum at a while b and c peak at c",
        "kind: ffa\nstates: a b c\nalphabet: x\n\
         trans: a x b 0.5\ntrans: a x a 1\ntrans: b x c 1\ntrans: c x c 1\n",
    ),
    (
        "P61hGr",
        "P61hG with the degrees out of a swapped; normal and DD3-directable without \
         DD2-directing words",
        "kind: ffa\nstates: a b c\nalphabet: x\n\
         trans: a x b 1\ntrans: a x a 0.5\ntrans: b x c 1\ntrans: c x c 1\n",
    ),
    (
        "P61l",
        "normal and DD1-directable but not deterministic",
        "kind: ffa\nstates: a b c\nalphabet: x\n\
         trans: a x b 1\ntrans: a x c 1\ntrans: b x c 1\ntrans: c x c 1\n",
    ),
    (
        "EX65F",
        "DD-directable factor of a product that is not DD-directable",
        "kind: ffa\nstates: a b\nalphabet: x y\ntrans: a x b 1\ntrans: b x b 1\ntrans: b y b 1\n",
    ),
    (
        "EX65G",
        "second DD-directable factor",
        "kind: ffa\nstates: 1 2\nalphabet: x y\ntrans: 1 y 2 1\ntrans: 2 y 2 1\ntrans: 2 x 2 1\n",
    ),
];

fn load(name: &str) -> Ffa {
    let (_, _, text) = SOURCES
        .iter()
        .find(|(n, _, _)| *n == name)
        .unwrap_or_else(|| panic!("no fixture {name}"));
    parse_ffa(text).expect("built-in fixture parses")
}

/// Every built-in automaton, in registry order.
pub fn all() -> Vec<Fixture> {
    SOURCES
        .iter()
        .map(|&(name, description, text)| Fixture {
            name,
            description,
            ffa: parse_ffa(text).expect("built-in fixture parses"),
        })
        .collect()
}

pub fn names() -> Vec<&'static str> {
    SOURCES.iter().map(|(n, _, _)| *n).collect()
}

/// Case-insensitive lookup.
pub fn get(name: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.name.eq_ignore_ascii_case(name))
}

pub fn ex31() -> Ffa {
    load("EX31")
}
pub fn ex38() -> Ffa {
    load("EX38")
}
pub fn p41a() -> Ffa {
    load("P41a")
}
pub fn p41b() -> Ffa {
    load("P41b")
}
pub fn n44() -> Ffa {
    load("N44")
}
pub fn p53() -> Ffa {
    load("P53")
}
pub fn p55n() -> Ffa {
    load("P55n")
}
pub fn p56() -> Ffa {
    load("P56")
}
pub fn p57() -> Ffa {
    load("P57")
}
pub fn p61b() -> Ffa {
    load("P61b")
}
pub fn p61c_f() -> Ffa {
    load("P61cF")
}
pub fn p61c_g() -> Ffa {
    load("P61cG")
}
pub fn p61g_f() -> Ffa {
    load("P61gF")
}
pub fn p61h_f() -> Ffa {
    load("P61hF")
}
pub fn p61h_g() -> Ffa {
    load("P61hG")
}
pub fn p61h_g_repaired() -> Ffa {
    load("P61hGr")
}
pub fn p61l() -> Ffa {
    load("P61l")
}
pub fn ex65_f() -> Ffa {
    load("EX65F")
}
pub fn ex65_g() -> Ffa {
    load("EX65G")
}

/// `δ(a,x) = δ(b,x) = b`, `δ(a,y) = a`, `δ(b,y) = b`: directed by any word containing `x`.
pub fn two_state_dfa() -> Dfa {
    Dfa::from_names(
        &["a", "b"],
        &["x", "y"],
        &[("a", "x", "b"), ("b", "x", "b"), ("a", "y", "a"), ("b", "y", "b")],
    )
    .expect("valid DFA")
}

/// The Černý automaton with `n` states: `x` rotates, `y` sends state 0 to 1
/// and fixes everything else. Its shortest directing word has length `(n-1)²`.
pub fn cerny_dfa(n: usize) -> Dfa {
    assert!(n >= 1);
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let states = crate::symbols::Symbols::new(names).expect("distinct names");
    let alphabet = crate::symbols::Symbols::new(["x", "y"]).expect("distinct names");
    let mut delta = Vec::with_capacity(2 * n);
    for a in 0..n {
        delta.push((a + 1) % n);
        delta.push(if a == 0 { 1 % n } else { a });
    }
    Dfa::new(states, alphabet, delta).expect("valid DFA")
}

/// A uniformly random complete DFA.
pub fn random_dfa(state_count: usize, letter_count: usize, seed: u64) -> Dfa {
    generate_dfa(state_count, letter_count, seed).expect("positive sizes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry() {
        let names = names();
        for required in [
            "EX31", "EX38", "P41a", "P41b", "N44", "P55n", "P56", "P61b", "P61cF", "P61cG", "P61gF", "P61hF", "P61hG",
            "EX65F", "EX65G",
        ] {
            assert!(names.contains(&required), "{required}");
        }
        assert_eq!(all().len(), names.len());
        assert_eq!(get("p61cf").unwrap().name, "P61cF");
        assert!(get("nope").is_none());
    }

    #[test]
    fn cerny_shape() {
        let c = cerny_dfa(4);
        assert_eq!(c.state_count(), 4);
        // (n-1)^2 = 9 letters: y (xxxy)^2
        let w = c.alphabet().parse_word("yxxxyxxxy").unwrap();
        assert!(c.is_directing(&w).unwrap());
    }
}
