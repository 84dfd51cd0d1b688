use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};

/// The reachable part of a deterministic transition system, numbered in
/// breadth-first order from the initial state.
pub(crate) struct Explored<S> {
    pub states: Vec<S>,
    /// `next[i * letters + x]`
    pub next: Vec<usize>,
}

/// Breadth-first exploration from `initial`, failing once more than `cap`
/// distinct states have been found.
pub(crate) fn explore<S, F>(initial: S, letters: usize, cap: usize, mut step: F) -> Result<Explored<S>>
where
    S: Clone + Eq + Hash,
    F: FnMut(&S, usize) -> S,
{
    let mut index: HashMap<S, usize> = HashMap::new();
    let mut states = vec![initial.clone()];
    index.insert(initial, 0);
    let mut next = Vec::new();
    let mut i = 0;
    while i < states.len() {
        for x in 0..letters {
            let target = step(&states[i], x);
            let id = match index.get(&target) {
                Some(&id) => id,
                None => {
                    if states.len() >= cap {
                        return Err(Error::StateCapExceeded { cap });
                    }
                    let id = states.len();
                    index.insert(target.clone(), id);
                    states.push(target);
                    id
                }
            };
            next.push(id);
        }
        i += 1;
    }
    Ok(Explored { states, next })
}
