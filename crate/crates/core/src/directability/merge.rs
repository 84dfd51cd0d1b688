use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::automata::Ffa;
use crate::error::Result;

/// Whether `F(a,w) ∩ F(b,w)` is nonempty.
pub fn d3_merges(ffa: &Ffa, a: usize, b: usize, word: &[usize]) -> Result<bool> {
    ffa.check_state(a)?;
    ffa.check_state(b)?;
    let left = ffa.reach(a, word)?;
    let right = ffa.reach(b, word)?;
    Ok(!left.is_disjoint(&right))
}

/// Working state of the pair-merging decision procedure.
///
/// `inverted[a * m + x]` lists the states `i` with `a ∈ F(i,x)`. A pair
/// `(i,j)`, `i < j`, is marked once some word is known to D3-merge it; marked
/// pairs wait in `new_pairs` until their predecessors have been examined.
#[derive(Clone, Debug)]
pub struct MergeabilityState {
    n: usize,
    m: usize,
    marked: Vec<bool>,
    marked_count: usize,
    new_pairs: VecDeque<(usize, usize)>,
    inverted: Vec<Vec<usize>>,
}

impl MergeabilityState {
    /// Builds the inverted table with every pair unmarked.
    pub fn new(ffa: &Ffa) -> Result<Self> {
        if let Some(err) = ffa.incomplete_error() {
            return Err(err);
        }
        let (n, m) = (ffa.state_count(), ffa.letter_count());
        let mut inverted = vec![Vec::new(); n * m];
        for (i, x, a, _) in ffa.transitions() {
            inverted[a * m + x].push(i);
        }
        Ok(MergeabilityState {
            n,
            m,
            marked: vec![false; n * n],
            marked_count: 0,
            new_pairs: VecDeque::new(),
            inverted,
        })
    }

    pub fn state_count(&self) -> usize {
        self.n
    }

    /// `{i | a ∈ F(i,x)}`
    pub fn inverted(&self, a: usize, x: usize) -> &[usize] {
        &self.inverted[a * self.m + x]
    }

    pub fn is_marked(&self, i: usize, j: usize) -> bool {
        i == j || self.marked[i.min(j) * self.n + i.max(j)]
    }

    pub fn pending(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.new_pairs.iter().copied()
    }

    pub fn all_marked(&self) -> bool {
        self.marked_count == self.n * self.n.saturating_sub(1) / 2
    }

    fn mark(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let slot = i.min(j) * self.n + i.max(j);
        if !self.marked[slot] {
            self.marked[slot] = true;
            self.marked_count += 1;
            self.new_pairs.push_back((i.min(j), i.max(j)));
        }
    }

    /// Marks every pair sharing a successor under a single letter.
    pub fn seed(&mut self) {
        for cell in 0..self.inverted.len() {
            let sources = std::mem::take(&mut self.inverted[cell]);
            for (k, &i) in sources.iter().enumerate() {
                for &j in &sources[k + 1..] {
                    self.mark(i, j);
                }
            }
            self.inverted[cell] = sources;
        }
    }

    /// Takes the oldest pending pair `(a,b)` and marks every `(i,j)` with
    /// `a ∈ F(i,x)` and `b ∈ F(j,x)` for some letter `x`.
    pub fn process_next(&mut self) -> Option<(usize, usize)> {
        let (a, b) = self.new_pairs.pop_front()?;
        for x in 0..self.m {
            let left = std::mem::take(&mut self.inverted[a * self.m + x]);
            let right = std::mem::take(&mut self.inverted[b * self.m + x]);
            for &i in &left {
                for &j in &right {
                    self.mark(i, j);
                }
            }
            self.inverted[a * self.m + x] = left;
            self.inverted[b * self.m + x] = right;
        }
        Some((a, b))
    }

    /// Seeds and drains the worklist, stopping early once every pair is marked.
    pub fn run(&mut self) -> bool {
        self.seed();
        while !self.all_marked() && self.process_next().is_some() {}
        self.all_marked()
    }
}

/// D3-directability of a complete FFA: every pair of states D3-merges.
/// Incomplete automata are refused, since there all pairs may merge with no
/// directing word existing.
pub fn d3_decide_by_merging(ffa: &Ffa) -> Result<bool> {
    Ok(MergeabilityState::new(ffa)?.run())
}

/// A reflexive, symmetric relation on the states.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairRelation {
    n: usize,
    bits: Vec<bool>,
}

impl PairRelation {
    /// The diagonal.
    pub fn identity(n: usize) -> Self {
        let mut bits = vec![false; n * n];
        for a in 0..n {
            bits[a * n + a] = true;
        }
        PairRelation { n, bits }
    }

    pub fn state_count(&self) -> usize {
        self.n
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.n + b]
    }

    fn insert(&mut self, a: usize, b: usize) {
        self.bits[a * self.n + b] = true;
        self.bits[b * self.n + a] = true;
    }

    /// Number of ordered pairs in the relation.
    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |a| (0..self.n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.contains(a, b))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|a| self.contains(a, a))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(a, b)| self.contains(b, a))
    }

    pub fn is_total(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    pub fn is_subset(&self, other: &PairRelation) -> bool {
        self.n == other.n && self.pairs().all(|(a, b)| other.contains(a, b))
    }
}

impl fmt::Debug for PairRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// The relations `μ(0) ⊂ μ(1) ⊂ …`, where `μ(k)` holds the pairs merged by
/// some word of length at most `k`. The list ends at the first `μ(k)` with
/// `μ(k+1) = μ(k)`, so consecutive entries always differ.
pub fn mu_chain(ffa: &Ffa) -> Result<Vec<PairRelation>> {
    if let Some(err) = ffa.incomplete_error() {
        return Err(err);
    }
    let n = ffa.state_count();
    let images: Vec<Vec<BTreeSet<usize>>> = (0..n)
        .map(|a| {
            (0..ffa.letter_count())
                .map(|x| ffa.step_set(&BTreeSet::from([a]), x))
                .collect()
        })
        .collect();
    let mut chain = vec![PairRelation::identity(n)];
    loop {
        let prev = chain.last().expect("chain starts nonempty");
        let mut next = prev.clone();
        for a in 0..n {
            for b in a + 1..n {
                if prev.contains(a, b) {
                    continue;
                }
                let merges = (0..ffa.letter_count()).any(|x| {
                    images[a][x]
                        .iter()
                        .any(|&c| images[b][x].iter().any(|&d| prev.contains(c, d)))
                });
                if merges {
                    next.insert(a, b);
                }
            }
        }
        if &next == prev {
            return Ok(chain);
        }
        chain.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::directability::{build_d_recognizer, DirectingKind};
    use crate::error::Error;
    use crate::fixtures;
    use crate::generate::{generate, Constraints, GeneratorConfig};
    use crate::reductions::dfa_to_ffa;

    #[test]
    fn single_letter_merges() {
        let f = fixtures::ex38();
        let s = |n: &str| f.state(n).unwrap();
        assert!(d3_merges(&f, s("a"), s("b"), &f.word("x").unwrap()).unwrap());
        assert!(d3_merges(&f, s("b"), s("c"), &f.word("y").unwrap()).unwrap());
        assert!(d3_merges(&f, s("a"), s("c"), &f.word("z").unwrap()).unwrap());
        assert!(d3_merges(&f, s("a"), s("a"), &[]).unwrap());
        let e = fixtures::ex31();
        assert!(d3_merges(&e, 0, 2, &e.word("x").unwrap()).unwrap());
        assert!(matches!(d3_merges(&e, 0, 7, &[]), Err(Error::UnknownState(_))));
    }

    #[test]
    fn incomplete_input_refused() {
        assert!(matches!(
            d3_decide_by_merging(&fixtures::ex38()),
            Err(Error::IncompleteAutomaton { .. })
        ));
        assert!(matches!(
            mu_chain(&fixtures::ex38()),
            Err(Error::IncompleteAutomaton { .. })
        ));
    }

    #[test]
    fn one_state() {
        let one = Ffa::from_names(&["a"], &["x"], &[("a", "x", "a", "1")]).unwrap();
        assert!(d3_decide_by_merging(&one).unwrap());
        let chain = mu_chain(&one).unwrap();
        assert_eq!(chain.len(), 1);
        assert!(chain[0].is_total());
    }

    #[test]
    fn cerny_agrees_with_recognizer() {
        for n in 2..=5 {
            let f = dfa_to_ffa(&fixtures::cerny_dfa(n));
            assert!(d3_decide_by_merging(&f).unwrap());
            assert!(!build_d_recognizer(&f, DirectingKind::D3).unwrap().is_empty());
            assert!(mu_chain(&f).unwrap().last().unwrap().is_total());
        }
    }

    #[test]
    fn random_complete_automata() {
        let palette = ["0", "1/5", "1/2", "1"].map(|s| s.parse().unwrap()).to_vec();
        for seed in 0..300u64 {
            let n = 1 + (seed as usize % 6);
            let cfg =
                GeneratorConfig::new(n, 1 + (seed as usize % 2), palette.clone(), seed).with_constraints(Constraints {
                    complete: true,
                    ..Constraints::default()
                });
            let f = generate(&cfg).unwrap();
            let chain = mu_chain(&f).unwrap();
            assert!(chain.len() - 1 <= n * (n - 1) / 2, "seed {seed}");
            for pair in chain.windows(2) {
                assert!(pair[0].is_subset(&pair[1]) && pair[0] != pair[1]);
            }
            let last = chain.last().unwrap();
            assert!(last.is_reflexive() && last.is_symmetric());
            let decided = d3_decide_by_merging(&f).unwrap();
            assert_eq!(decided, last.is_total(), "seed {seed}");
            let by_recognizer = !build_d_recognizer(&f, DirectingKind::D3).unwrap().is_empty();
            assert_eq!(decided, by_recognizer, "seed {seed}");
        }
    }

    #[test]
    fn stepwise_worklist() {
        let f = dfa_to_ffa(&fixtures::cerny_dfa(3));
        let mut state = MergeabilityState::new(&f).unwrap();
        state.seed();
        for (i, j) in state.pending().collect::<Vec<_>>() {
            assert!(state.is_marked(i, j));
        }
        while state.process_next().is_some() {}
        assert!(state.all_marked());
    }
}
