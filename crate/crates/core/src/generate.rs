//! Seeded random automata.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::automata::{Dfa, Ffa};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::symbols::Symbols;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraints {
    pub complete: bool,
    pub normal: bool,
    pub crisp: bool,
}

/// Parameters for [`generate`]. Each transition degree is drawn uniformly from
/// `degree_palette`, so repeating a value in the palette weights it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub state_count: usize,
    pub letter_count: usize,
    pub degree_palette: Vec<Degree>,
    pub seed: u64,
    pub constraints: Constraints,
}

impl GeneratorConfig {
    pub fn new(state_count: usize, letter_count: usize, degree_palette: Vec<Degree>, seed: u64) -> Self {
        GeneratorConfig {
            state_count,
            letter_count,
            degree_palette,
            seed,
            constraints: Constraints::default(),
        }
    }

    pub fn with_constraints(mut self, constraints: Constraints) -> Self {
        self.constraints = constraints;
        self
    }
}

/// Default state names `q0, q1, ...`.
pub fn state_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("q{i}")).collect()
}

/// Default letter names: `x, y, z`, then `a, b, ...`, then `l26, l27, ...`.
pub fn letter_names(m: usize) -> Vec<String> {
    const FIRST: &str = "xyzabcdefghijklmnoprstuvw";
    (0..m)
        .map(|i| match FIRST.chars().nth(i) {
            Some(c) => c.to_string(),
            None => format!("l{i}"),
        })
        .collect()
}

/// Draws an FFA. The result depends only on the configuration.
pub fn generate(config: &GeneratorConfig) -> Result<Ffa> {
    let (n, m) = (config.state_count, config.letter_count);
    if n == 0 || m == 0 {
        return Err(Error::Unsatisfiable(
            "state and letter counts must be at least 1".into(),
        ));
    }
    let Constraints {
        complete,
        normal,
        crisp,
    } = config.constraints;
    let palette: Vec<Degree> = if crisp {
        config
            .degree_palette
            .iter()
            .copied()
            .filter(|r| r.is_zero() || r.is_one())
            .collect()
    } else {
        config.degree_palette.clone()
    };
    if palette.is_empty() {
        return Err(Error::Unsatisfiable("empty degree palette".into()));
    }
    if crisp && !palette.iter().any(Degree::is_one) {
        return Err(Error::Unsatisfiable("crisp palette without 1".into()));
    }
    if normal && !palette.iter().any(Degree::is_one) {
        return Err(Error::Unsatisfiable("normal automaton needs 1 in the palette".into()));
    }
    let positive: Vec<Degree> = palette.iter().copied().filter(Degree::is_positive).collect();
    if complete && positive.is_empty() {
        return Err(Error::Unsatisfiable(
            "complete automaton needs a positive degree".into(),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut triples = Vec::new();
    for a in 0..n {
        for x in 0..m {
            let mut row: Vec<Degree> = (0..n).map(|_| palette[rng.random_range(0..palette.len())]).collect();
            if normal && !row.iter().any(Degree::is_one) {
                row[rng.random_range(0..n)] = Degree::ONE;
            }
            if complete && row.iter().all(Degree::is_zero) {
                row[rng.random_range(0..n)] = positive[rng.random_range(0..positive.len())];
            }
            triples.extend(
                row.into_iter()
                    .enumerate()
                    .filter(|(_, r)| r.is_positive())
                    .map(|(b, r)| (a, x, b, r)),
            );
        }
    }
    Ffa::new(Symbols::new(state_names(n))?, Symbols::new(letter_names(m))?, triples)
}

/// A uniformly random complete DFA.
pub fn generate_dfa(state_count: usize, letter_count: usize, seed: u64) -> Result<Dfa> {
    if state_count == 0 || letter_count == 0 {
        return Err(Error::Unsatisfiable(
            "state and letter counts must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let delta = (0..state_count * letter_count)
        .map(|_| rng.random_range(0..state_count))
        .collect();
    Dfa::new(
        Symbols::new(state_names(state_count))?,
        Symbols::new(letter_names(letter_count))?,
        delta,
    )
}
