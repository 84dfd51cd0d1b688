//! Translations between deterministic, nondeterministic and fuzzy automata.

use crate::automata::{Dfa, Ffa, Nfa};
use crate::degree::Degree;

/// `F^nd`: keeps exactly the positive transitions, `α(a, x) = {b | f(a, x, b) > 0}`.
pub fn ffa_to_nfa(ffa: &Ffa) -> Nfa {
    Nfa::new(
        ffa.states().clone(),
        ffa.alphabet().clone(),
        ffa.transitions().map(|(a, x, b, _)| (a, x, b)),
    )
    .expect("positive transitions of a valid FFA form a valid NFA")
}

/// `N^fz`: the crisp FFA with degree 1 on every `α`-edge.
pub fn nfa_to_ffa(nfa: &Nfa) -> Ffa {
    Ffa::new(
        nfa.states().clone(),
        nfa.alphabet().clone(),
        nfa.edges().map(|(a, x, b)| (a, x, b, Degree::ONE)),
    )
    .expect("edges of a valid NFA form a valid FFA")
}

/// `A^fz`: `f(a, x, b) = 1` iff `δ(a, x) = b`.
pub fn dfa_to_ffa(dfa: &Dfa) -> Ffa {
    Ffa::new(
        dfa.states().clone(),
        dfa.alphabet().clone(),
        dfa.edges().map(|(a, x, b)| (a, x, b, Degree::ONE)),
    )
    .expect("edges of a valid DFA form a valid FFA")
}

/// `A^nd`: `α(a, x) = {δ(a, x)}`.
pub fn dfa_to_nfa(dfa: &Dfa) -> Nfa {
    Nfa::new(dfa.states().clone(), dfa.alphabet().clone(), dfa.edges()).expect("edges of a valid DFA form a valid NFA")
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::directability::{is_directing, DirectingKind};
    use crate::fixtures;
    use crate::generate::{generate, Constraints, GeneratorConfig};
    use crate::words::all_words;

    fn set(names: &[usize]) -> BTreeSet<usize> {
        names.iter().copied().collect()
    }

    #[test]
    fn example_nfa_images() {
        let n = ffa_to_nfa(&fixtures::ex31());
        let (a, b, c, x, y) = (0, 1, 2, 0, 1);
        assert_eq!(n.image(a, x), &set(&[b]));
        assert_eq!(n.image(b, x), &set(&[c]));
        assert_eq!(n.image(c, x), &set(&[b, c]));
        assert_eq!(n.image(a, y), &set(&[]));
        assert_eq!(n.image(b, y), &set(&[b, c]));
        assert_eq!(n.image(c, y), &set(&[]));
    }

    #[test]
    fn crisp_round_trips() {
        let n = ffa_to_nfa(&fixtures::ex31());
        let crisp = nfa_to_ffa(&n);
        assert!(crisp.is_crisp());
        let expected = Ffa::from_names(
            &["a", "b", "c"],
            &["x", "y"],
            &[
                ("a", "x", "b", "1"),
                ("b", "x", "c", "1"),
                ("c", "x", "b", "1"),
                ("c", "x", "c", "1"),
                ("b", "y", "b", "1"),
                ("b", "y", "c", "1"),
            ],
        )
        .unwrap();
        assert_eq!(crisp, expected);
        assert_eq!(ffa_to_nfa(&crisp), n);
        // only crisp automata survive the other composition
        assert_ne!(nfa_to_ffa(&ffa_to_nfa(&fixtures::ex31())), fixtures::ex31());
        assert_eq!(nfa_to_ffa(&ffa_to_nfa(&fixtures::p55n())), fixtures::p55n());

        let empty = Ffa::from_names(&["a", "b"], &["x"], &[]).unwrap();
        let en = ffa_to_nfa(&empty);
        assert!(en.edges().next().is_none());
        assert_eq!(nfa_to_ffa(&en), empty);
    }

    #[test]
    fn dfa_images() {
        let dfa = fixtures::two_state_dfa();
        let f = dfa_to_ffa(&dfa);
        assert!(f.is_normal() && f.is_crisp() && f.is_deterministic());
        let n = dfa_to_nfa(&dfa);
        for a in 0..2 {
            for x in 0..2 {
                assert_eq!(n.image(a, x).len(), 1);
            }
        }
        // DW(A) = D_i(A^nd) = DD_i(A^fz) word by word
        let nf = nfa_to_ffa(&n);
        for w in all_words(2, 5) {
            let dw = dfa.is_directing(&w).unwrap();
            for kind in DirectingKind::ALL {
                assert_eq!(is_directing(&nf, kind, &w).unwrap(), dw, "{kind} {w:?}");
                assert_eq!(is_directing(&f, kind, &w).unwrap(), dw, "{kind} {w:?}");
            }
        }

        let one = Dfa::from_names(&["a"], &["x", "y"], &[("a", "x", "a"), ("a", "y", "a")]).unwrap();
        let f1 = dfa_to_ffa(&one);
        assert_eq!(f1.degree(0, 0, 0), Degree::ONE);
        assert_eq!(f1.degree(0, 1, 0), Degree::ONE);
    }

    #[test]
    fn random_dfas_map_to_normal_crisp() {
        for seed in 0..50 {
            let dfa = fixtures::random_dfa(4, 2, seed);
            let f = dfa_to_ffa(&dfa);
            assert!(f.is_normal() && f.is_crisp());
            let n = dfa_to_nfa(&dfa);
            for w in all_words(2, 5) {
                for a in 0..4 {
                    let t = dfa.step_star(a, &w).unwrap();
                    assert_eq!(n.step_star(&set(&[a]), &w).unwrap(), set(&[t]));
                }
            }
        }
    }

    #[test]
    fn nfa_reduction_preserves_reachability() {
        let palette = ["0", "1/5", "1/2", "1"].map(|s| s.parse().unwrap()).to_vec();
        for seed in 0..60 {
            let cfg = GeneratorConfig {
                state_count: 1 + (seed as usize % 4),
                letter_count: 1 + (seed as usize % 2),
                degree_palette: palette.clone(),
                seed,
                constraints: Constraints::default(),
            };
            let f = generate(&cfg).unwrap();
            let n = ffa_to_nfa(&f);
            assert_eq!(f.is_complete(), n.is_complete());
            assert_eq!(nfa_to_ffa(&n).is_complete(), n.is_complete());
            assert_eq!(ffa_to_nfa(&nfa_to_ffa(&n)), n);
            assert_eq!(nfa_to_ffa(&n) == f, f.is_crisp());
            for w in all_words(f.letter_count(), 4) {
                for a in 0..f.state_count() {
                    assert_eq!(n.step_star(&set(&[a]), &w).unwrap(), f.reach(a, &w).unwrap());
                }
            }
        }
    }
}
