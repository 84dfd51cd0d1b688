//! Subautomata, homomorphisms and direct products.

use std::collections::BTreeSet;

use crate::automata::Ffa;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::symbols::Symbols;

/// Whether `sub` is a subautomaton of `whole`: its states are states of
/// `whole`, closed under transitions, with the same degrees. States and
/// letters are matched by name.
pub fn is_subautomaton(sub: &Ffa, whole: &Ffa) -> bool {
    if sub.alphabet() != whole.alphabet() {
        return false;
    }
    let Some(embed) = sub
        .states()
        .iter()
        .map(|name| whole.states().get(name))
        .collect::<Option<Vec<usize>>>()
    else {
        return false;
    };
    let inside: BTreeSet<usize> = embed.iter().copied().collect();
    for (b, &wb) in embed.iter().enumerate() {
        for x in 0..whole.letter_count() {
            if whole.row(wb, x).iter().any(|(t, _)| !inside.contains(t)) {
                return false;
            }
            for (c, &wc) in embed.iter().enumerate() {
                if sub.degree(b, x, c) != whole.degree(wb, x, wc) {
                    return false;
                }
            }
        }
    }
    true
}

/// The restriction of `ffa` to `states`, which must be nonempty and closed
/// under transitions. State order follows `ffa`.
pub fn subautomaton_induced(ffa: &Ffa, states: &BTreeSet<usize>) -> Result<Ffa> {
    if states.is_empty() {
        return Err(Error::Empty("state"));
    }
    for &b in states {
        ffa.check_state(b)?;
        for x in 0..ffa.letter_count() {
            if let Some(&(t, _)) = ffa.row(b, x).iter().find(|(t, _)| !states.contains(t)) {
                return Err(Error::NotClosed {
                    state: ffa.states().name(b).to_string(),
                    letter: ffa.alphabet().name(x).to_string(),
                    escaping: ffa.states().name(t).to_string(),
                });
            }
        }
    }
    let kept: Vec<usize> = states.iter().copied().collect();
    let position = |s: usize| kept.binary_search(&s).expect("closed set");
    let names = Symbols::new(kept.iter().map(|&s| ffa.states().name(s).to_string()))?;
    let triples: Vec<_> = ffa
        .transitions()
        .filter(|(a, _, _, _)| states.contains(a))
        .map(|(a, x, b, r)| (position(a), x, position(b), r))
        .collect();
    Ffa::new(names, ffa.alphabet().clone(), triples)
}

/// A total map from the states of one automaton to the states of another,
/// by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateMap {
    images: Vec<usize>,
    target_count: usize,
}

impl StateMap {
    pub fn new(images: Vec<usize>, target_count: usize) -> Result<Self> {
        if let Some(&bad) = images.iter().find(|&&b| b >= target_count) {
            return Err(Error::InvalidStateMap(format!(
                "image {bad} outside the {target_count} target states"
            )));
        }
        Ok(StateMap { images, target_count })
    }

    pub fn identity(n: usize) -> Self {
        StateMap {
            images: (0..n).collect(),
            target_count: n,
        }
    }

    /// Builds a map from `source → target` name pairs; every source state must appear once.
    pub fn from_names(source: &Symbols, target: &Symbols, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut images = vec![None; source.len()];
        for &(a, b) in pairs {
            let i = source.get(a).ok_or_else(|| Error::UnknownState(a.into()))?;
            let j = target.get(b).ok_or_else(|| Error::UnknownState(b.into()))?;
            if images[i].replace(j).is_some() {
                return Err(Error::InvalidStateMap(format!("`{a}` mapped twice")));
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, b)| b.ok_or_else(|| Error::InvalidStateMap(format!("`{}` has no image", source.name(i)))))
            .collect::<Result<Vec<_>>>()?;
        StateMap::new(images, target.len())
    }

    pub fn source_count(&self) -> usize {
        self.images.len()
    }

    pub fn target_count(&self) -> usize {
        self.target_count
    }

    pub fn image(&self, a: usize) -> usize {
        self.images[a]
    }

    /// `bφ⁻¹`
    pub fn preimage(&self, b: usize) -> Vec<usize> {
        (0..self.images.len()).filter(|&a| self.images[a] == b).collect()
    }

    pub fn is_surjective(&self) -> bool {
        let hit: BTreeSet<usize> = self.images.iter().copied().collect();
        hit.len() == self.target_count
    }
}

fn check_shapes(map: &StateMap, source: &Ffa, target: &Ffa) -> Result<()> {
    if source.alphabet() != target.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if map.source_count() != source.state_count() || map.target_count() != target.state_count() {
        return Err(Error::InvalidStateMap(format!(
            "map is {} -> {}, automata have {} and {} states",
            map.source_count(),
            map.target_count(),
            source.state_count(),
            target.state_count()
        )));
    }
    Ok(())
}

/// `max{f(a,x,a') | a' ∈ bφ⁻¹}`
fn class_degree(ffa: &Ffa, map: &StateMap, a: usize, x: usize, b: usize) -> Degree {
    ffa.row(a, x)
        .iter()
        .filter(|&&(t, _)| map.image(t) == b)
        .map(|&(_, r)| r)
        .max()
        .unwrap_or(Degree::ZERO)
}

/// The first triple `(a, x, b)` at which `g(aφ,x,b) ≠ max{f(a,x,a') | a' ∈ bφ⁻¹}`.
pub fn homomorphism_violation(map: &StateMap, source: &Ffa, target: &Ffa) -> Result<Option<(usize, usize, usize)>> {
    check_shapes(map, source, target)?;
    for a in 0..source.state_count() {
        for x in 0..source.letter_count() {
            for b in 0..target.state_count() {
                if target.degree(map.image(a), x, b) != class_degree(source, map, a, x, b) {
                    return Ok(Some((a, x, b)));
                }
            }
        }
    }
    Ok(None)
}

pub fn check_homomorphism(map: &StateMap, source: &Ffa, target: &Ffa) -> Result<bool> {
    Ok(homomorphism_violation(map, source, target)?.is_none())
}

/// The automaton on `target_states` that makes the surjection `map` an
/// epimorphism. Fails when two states of one class would force different
/// degrees.
pub fn epimorphic_image(ffa: &Ffa, map: &StateMap, target_states: Symbols) -> Result<Ffa> {
    if map.source_count() != ffa.state_count() || map.target_count() != target_states.len() {
        return Err(Error::InvalidStateMap("map does not fit the automaton".into()));
    }
    if !map.is_surjective() {
        return Err(Error::InvalidStateMap("map is not onto".into()));
    }
    let mut triples = Vec::new();
    for class in 0..map.target_count() {
        let members = map.preimage(class);
        let first = members[0];
        for x in 0..ffa.letter_count() {
            for b in 0..map.target_count() {
                let r = class_degree(ffa, map, first, x, b);
                if let Some(&other) = members[1..].iter().find(|&&a| class_degree(ffa, map, a, x, b) != r) {
                    return Err(Error::InconsistentQuotient {
                        first: ffa.states().name(first).to_string(),
                        second: ffa.states().name(other).to_string(),
                        letter: ffa.alphabet().name(x).to_string(),
                        class: target_states.name(b).to_string(),
                    });
                }
                triples.push((class, x, b, r));
            }
        }
    }
    Ffa::new(target_states, ffa.alphabet().clone(), triples)
}

/// `F × G` on pairs `(a,b)` in row-major order, with
/// `h((a,b),x,(a',b')) = f(a,x,a') ∧ g(b,x,b')`.
pub fn direct_product(left: &Ffa, right: &Ffa) -> Result<Ffa> {
    if left.alphabet() != right.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let k = right.state_count();
    let names = Symbols::new(
        left.states()
            .iter()
            .flat_map(|a| right.states().iter().map(move |b| format!("({a},{b})"))),
    )?;
    let mut triples = Vec::new();
    for a in 0..left.state_count() {
        for b in 0..k {
            for x in 0..left.letter_count() {
                for &(a2, r) in left.row(a, x) {
                    for &(b2, s) in right.row(b, x) {
                        triples.push((a * k + b, x, a2 * k + b2, r.meet(s)));
                    }
                }
            }
        }
    }
    Ffa::new(names, left.alphabet().clone(), triples)
}
