//! Seeded corpora and a brute-force oracle shared by the integration tests.
//!
//! The oracle works on a dense copy of the transition degrees and evaluates
//! every directing condition from scratch, so it shares no code with the
//! library's own row checks or recognizers.

#![allow(dead_code)]

use std::collections::BTreeSet;

use fuzzdir_core::generate::{generate, Constraints, GeneratorConfig};
use fuzzdir_core::{Degree, DirectingKind, Ffa, Nfa};

pub const CORPUS_SIZE: u64 = 200;
pub const MAX_WORD_LEN: usize = 6;

pub fn palette() -> Vec<Degree> {
    ["0", "1/5", "1/2", "1"].iter().map(|s| s.parse().unwrap()).collect()
}

fn corpus_with(constraints: Constraints, salt: u64) -> Vec<Ffa> {
    (0..CORPUS_SIZE)
        .map(|seed| {
            let n = 1 + (seed % 4) as usize;
            let m = 1 + ((seed / 4) % 2) as usize;
            let cfg = GeneratorConfig::new(n, m, palette(), seed ^ salt).with_constraints(constraints);
            generate(&cfg).expect("satisfiable configuration")
        })
        .collect()
}

/// 200 automata, up to 4 states and 2 letters, degrees from {0, 1/5, 1/2, 1}.
pub fn corpus() -> Vec<Ffa> {
    corpus_with(Constraints::default(), 0)
}

pub fn normal_corpus() -> Vec<Ffa> {
    corpus_with(
        Constraints {
            normal: true,
            ..Constraints::default()
        },
        0x6e6f726d,
    )
}

pub fn crisp_corpus() -> Vec<Ffa> {
    corpus_with(
        Constraints {
            crisp: true,
            ..Constraints::default()
        },
        0x63726973,
    )
}

/// Complete automata with `1 + seed % max_states` states.
pub fn complete_corpus(count: u64, max_states: usize, palette: &[Degree]) -> Vec<Ffa> {
    (0..count)
        .map(|seed| {
            let n = 1 + (seed as usize % max_states);
            let m = 1 + ((seed as usize / max_states) % 2);
            let cfg = GeneratorConfig::new(n, m, palette.to_vec(), seed).with_constraints(Constraints {
                complete: true,
                ..Constraints::default()
            });
            generate(&cfg).expect("satisfiable configuration")
        })
        .collect()
}

pub fn words(letters: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for x in 0..letters {
                let mut v: Vec<usize> = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub struct Oracle {
    n: usize,
    m: usize,
    f: Vec<Degree>,
}

impl Oracle {
    pub fn new(ffa: &Ffa) -> Self {
        let (n, m) = (ffa.state_count(), ffa.letter_count());
        let mut f = vec![Degree::ZERO; n * m * n];
        for a in 0..n {
            for x in 0..m {
                for b in 0..n {
                    f[(a * m + x) * n + b] = ffa.degree(a, x, b);
                }
            }
        }
        Oracle { n, m, f }
    }

    /// Row `a` of the result is `b ↦ f*(a, w, b)`.
    pub fn rows(&self, word: &[usize]) -> Vec<Vec<Degree>> {
        let n = self.n;
        let mut rows: Vec<Vec<Degree>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| if a == b { Degree::ONE } else { Degree::ZERO })
                    .collect()
            })
            .collect();
        for &x in word {
            rows = rows
                .iter()
                .map(|row| {
                    (0..n)
                        .map(|b| {
                            (0..n)
                                .map(|c| row[c].meet(self.f[(c * self.m + x) * n + b]))
                                .max()
                                .unwrap_or(Degree::ZERO)
                        })
                        .collect()
                })
                .collect();
        }
        rows
    }

    pub fn directing(&self, kind: DirectingKind, word: &[usize]) -> bool {
        let rows = self.rows(word);
        let supports: Vec<BTreeSet<usize>> = rows
            .iter()
            .map(|r| (0..self.n).filter(|&b| r[b].is_positive()).collect())
            .collect();
        match kind {
            DirectingKind::D1 | DirectingKind::D2 | DirectingKind::D3 => sets_directing(kind, &supports),
            DirectingKind::DD1 => (0..self.n).any(|c| {
                let r = rows[0][c];
                r.is_positive()
                    && rows
                        .iter()
                        .all(|row| (0..self.n).all(|b| row[b] == if b == c { r } else { Degree::ZERO }))
            }),
            DirectingKind::DD2 => rows.iter().all(|row| *row == rows[0]),
            DirectingKind::DD3 => (0..self.n).any(|c| {
                rows.iter()
                    .all(|row| row[c].is_positive() && row.iter().all(|&v| v <= row[c]))
            }),
        }
    }
}

/// The crisp conditions evaluated on the reach sets of every state.
pub fn sets_directing(kind: DirectingKind, sets: &[BTreeSet<usize>]) -> bool {
    match kind {
        DirectingKind::D1 => sets[0].len() == 1 && sets.iter().all(|s| *s == sets[0]),
        DirectingKind::D2 => sets.iter().all(|s| *s == sets[0]),
        DirectingKind::D3 => sets[0].iter().any(|c| sets.iter().all(|s| s.contains(c))),
        _ => panic!("crisp kinds only"),
    }
}

pub fn nfa_directing(nfa: &Nfa, kind: DirectingKind, word: &[usize]) -> bool {
    let sets: Vec<BTreeSet<usize>> = (0..nfa.state_count())
        .map(|a| nfa.step_star(&BTreeSet::from([a]), word).unwrap())
        .collect();
    sets_directing(kind, &sets)
}
