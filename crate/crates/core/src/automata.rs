//! Exact finite-automaton engine.
//!
//! All DFAs are complete: every state has a transition on every symbol, and
//! a dead state is materialized whenever one is needed. State complexity is
//! the state count of the minimal complete DFA, dead state included.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::words::{Alphabet, Word};

/// Arbitrary-precision word count.
pub type BigCount = BigUint;

/// Default limit on the number of subset states built by [`determinize`].
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("determinization exceeded the cap of {cap} states")]
    CapExceeded { cap: usize },
    #[error("language is infinite")]
    NotFinite,
    #[error("automata are over different alphabets")]
    AlphabetMismatch,
    #[error("invalid automaton: {0}")]
    Invalid(String),
}

pub type StateId = usize;

/// Nondeterministic automaton without ε-moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    // transitions[state][symbol] is sorted and duplicate-free
    transitions: Vec<Vec<Vec<StateId>>>,
    initial: Vec<StateId>,
    finals: Vec<bool>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet, state_count: usize) -> Self {
        let k = alphabet.len();
        Nfa {
            alphabet,
            transitions: vec![vec![Vec::new(); k]; state_count],
            initial: Vec::new(),
            finals: vec![false; state_count],
        }
    }

    pub fn add_state(&mut self) -> StateId {
        self.transitions.push(vec![Vec::new(); self.alphabet.len()]);
        self.finals.push(false);
        self.transitions.len() - 1
    }

    pub fn add_transition(&mut self, from: StateId, symbol: u8, to: StateId) {
        assert!(to < self.state_count(), "target state out of range");
        let targets = &mut self.transitions[from][symbol as usize];
        if let Err(pos) = targets.binary_search(&to) {
            targets.insert(pos, to);
        }
    }

    pub fn set_initial(&mut self, state: StateId) {
        assert!(state < self.state_count());
        if !self.initial.contains(&state) {
            self.initial.push(state);
            self.initial.sort_unstable();
        }
    }

    pub fn set_final(&mut self, state: StateId, accepting: bool) {
        self.finals[state] = accepting;
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn is_final(&self, state: StateId) -> bool {
        self.finals[state]
    }

    pub fn successors(&self, state: StateId, symbol: u8) -> &[StateId] {
        &self.transitions[state][symbol as usize]
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.iter().flatten().map(Vec::len).sum()
    }

    pub fn accepts(&self, word: &Word) -> bool {
        let mut current: Vec<StateId> = self.initial.clone();
        for &a in word.symbols() {
            let mut next: Vec<StateId> = current
                .iter()
                .flat_map(|&q| self.successors(q, a).iter().copied())
                .collect();
            next.sort_unstable();
            next.dedup();
            if next.is_empty() {
                return false;
            }
            current = next;
        }
        current.iter().any(|&q| self.finals[q])
    }
}

/// Complete deterministic automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    // row-major: transitions[state * |Σ| + symbol]
    transitions: Vec<StateId>,
    initial: StateId,
    finals: Vec<bool>,
    minimal: bool,
}

impl Dfa {
    /// Builds a DFA from a full transition table (`table[state][symbol]`).
    pub fn from_table(
        alphabet: Alphabet,
        table: Vec<Vec<StateId>>,
        initial: StateId,
        finals: Vec<bool>,
    ) -> Result<Self, AutomatonError> {
        let n = table.len();
        let k = alphabet.len();
        if n == 0 {
            return Err(AutomatonError::Invalid("no states".into()));
        }
        if finals.len() != n {
            return Err(AutomatonError::Invalid("finals length differs from state count".into()));
        }
        if initial >= n {
            return Err(AutomatonError::Invalid("initial state out of range".into()));
        }
        let mut transitions = Vec::with_capacity(n * k);
        for (q, row) in table.into_iter().enumerate() {
            if row.len() != k {
                return Err(AutomatonError::Invalid(format!(
                    "state {q} has {} transitions, expected {k}",
                    row.len()
                )));
            }
            if let Some(&t) = row.iter().find(|&&t| t >= n) {
                return Err(AutomatonError::Invalid(format!("transition to missing state {t}")));
            }
            transitions.extend(row);
        }
        Ok(Dfa {
            alphabet,
            transitions,
            initial,
            finals,
            minimal: false,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, state: StateId) -> bool {
        self.finals[state]
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    #[inline]
    pub fn next(&self, state: StateId, symbol: u8) -> StateId {
        self.transitions[state * self.alphabet.len() + symbol as usize]
    }

    pub fn run(&self, word: &Word) -> StateId {
        word.symbols()
            .iter()
            .fold(self.initial, |q, &a| self.next(q, a))
    }

    pub fn accepts(&self, word: &Word) -> bool {
        self.finals[self.run(word)]
    }

    fn symbols(&self) -> impl Iterator<Item = u8> {
        0..self.alphabet.len() as u8
    }

    /// Renames states by `perm` (old id → new id). `perm` must be a permutation.
    pub fn relabeled(&self, perm: &[StateId]) -> Dfa {
        let n = self.state_count();
        assert_eq!(perm.len(), n);
        let k = self.alphabet.len();
        let mut transitions = vec![0; n * k];
        let mut finals = vec![false; n];
        for q in 0..n {
            finals[perm[q]] = self.finals[q];
            for a in 0..k {
                transitions[perm[q] * k + a] = perm[self.transitions[q * k + a]];
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            transitions,
            initial: perm[self.initial],
            finals,
            minimal: self.minimal,
        }
    }

    /// The automaton in Graphviz syntax, for debugging.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  init [shape=point];\n");
        for q in 0..self.state_count() {
            let shape = if self.finals[q] { "doublecircle" } else { "circle" };
            let _ = writeln!(out, "  q{q} [shape={shape}];");
        }
        let _ = writeln!(out, "  init -> q{};", self.initial);
        for q in 0..self.state_count() {
            for a in self.symbols() {
                let sym = self.alphabet.symbols()[a as usize];
                let _ = writeln!(out, "  q{q} -> q{} [label=\"{sym}\"];", self.next(q, a));
            }
        }
        out.push_str("}\n");
        out
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        seen[self.initial] = true;
        let mut stack = vec![self.initial];
        while let Some(q) = stack.pop() {
            for a in self.symbols() {
                let t = self.next(q, a);
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    fn coreachable(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for q in 0..n {
            for a in self.symbols() {
                preds[self.next(q, a)].push(q);
            }
        }
        let mut seen = self.finals.clone();
        let mut stack: Vec<StateId> = (0..n).filter(|&q| seen[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// States that are both reachable and co-reachable.
    fn useful(&self) -> Vec<bool> {
        let r = self.reachable();
        let c = self.coreachable();
        r.into_iter().zip(c).map(|(a, b)| a && b).collect()
    }

    /// Topological order of the useful states, or `None` if they contain a cycle.
    fn useful_topological_order(&self) -> Option<Vec<StateId>> {
        let useful = self.useful();
        let n = self.state_count();
        let mut indegree = vec![0usize; n];
        for q in (0..n).filter(|&q| useful[q]) {
            for a in self.symbols() {
                let t = self.next(q, a);
                if useful[t] {
                    indegree[t] += 1;
                }
            }
        }
        let mut queue: VecDeque<StateId> =
            (0..n).filter(|&q| useful[q] && indegree[q] == 0).collect();
        let mut order = Vec::new();
        while let Some(q) = queue.pop_front() {
            order.push(q);
            for a in self.symbols() {
                let t = self.next(q, a);
                if useful[t] {
                    indegree[t] -= 1;
                    if indegree[t] == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
        let useful_count = useful.iter().filter(|&&u| u).count();
        (order.len() == useful_count).then_some(order)
    }

    /// Whether the accepted language is finite.
    pub fn is_finite(&self) -> bool {
        self.useful_topological_order().is_some()
    }
}

/// Subset construction over reachable subsets. The empty subset, if
/// reached, becomes the dead state.
pub fn determinize(nfa: &Nfa, state_cap: usize) -> Result<Dfa, AutomatonError> {
    let k = nfa.alphabet().len();
    let mut index: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut subsets: Vec<Vec<StateId>> = Vec::new();
    let mut table: Vec<Vec<StateId>> = Vec::new();

    let start = nfa.initial().to_vec();
    index.insert(start.clone(), 0);
    subsets.push(start);
    let mut i = 0;
    let mut scratch: Vec<StateId> = Vec::new();
    while i < subsets.len() {
        let mut row = Vec::with_capacity(k);
        for a in 0..k as u8 {
            scratch.clear();
            for &q in &subsets[i] {
                scratch.extend_from_slice(nfa.successors(q, a));
            }
            scratch.sort_unstable();
            scratch.dedup();
            let id = match index.get(&scratch) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    if id >= state_cap {
                        return Err(AutomatonError::CapExceeded { cap: state_cap });
                    }
                    index.insert(scratch.clone(), id);
                    subsets.push(scratch.clone());
                    id
                }
            };
            row.push(id);
        }
        table.push(row);
        i += 1;
    }
    let finals = subsets
        .iter()
        .map(|s| s.iter().any(|&q| nfa.is_final(q)))
        .collect();
    Dfa::from_table(nfa.alphabet().clone(), table, 0, finals)
}

/// Minimal complete DFA by Hopcroft partition refinement over the reachable
/// part. States of the result are numbered in breadth-first order from the
/// initial state, so equal languages give identical automata.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let k = dfa.alphabet().len();
    let reachable = dfa.reachable();
    let states: Vec<StateId> = (0..dfa.state_count()).filter(|&q| reachable[q]).collect();
    let mut local = vec![usize::MAX; dfa.state_count()];
    for (i, &q) in states.iter().enumerate() {
        local[q] = i;
    }
    let n = states.len();
    let delta = |q: usize, a: usize| local[dfa.next(states[q], a as u8)];

    // inverse[a][t] = sources reaching t on a
    let mut inverse: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; k];
    for q in 0..n {
        for (a, inv) in inverse.iter_mut().enumerate() {
            inv[delta(q, a)].push(q);
        }
    }

    let mut block_of = vec![0usize; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let (fin, non): (Vec<usize>, Vec<usize>) = (0..n).partition(|&q| dfa.is_final(states[q]));
    for part in [fin, non] {
        if !part.is_empty() {
            let id = blocks.len();
            for &q in &part {
                block_of[q] = id;
            }
            blocks.push(part);
        }
    }

    let mut pending: Vec<Vec<bool>> = vec![vec![false; k]; blocks.len()];
    let mut work: Vec<(usize, usize)> = Vec::new();
    if blocks.len() == 2 {
        let smaller = if blocks[0].len() <= blocks[1].len() { 0 } else { 1 };
        for a in 0..k {
            work.push((smaller, a));
            pending[smaller][a] = true;
        }
    }

    let mut marked = vec![false; n];
    let mut touched: Vec<usize> = Vec::new();
    let mut marked_in: Vec<Vec<usize>> = Vec::new();
    while let Some((splitter, a)) = work.pop() {
        pending[splitter][a] = false;
        let preimage: Vec<usize> = blocks[splitter]
            .iter()
            .flat_map(|&t| inverse[a][t].iter().copied())
            .collect();
        for &q in &preimage {
            if marked[q] {
                continue;
            }
            marked[q] = true;
            let b = block_of[q];
            if b >= marked_in.len() {
                marked_in.resize(b + 1, Vec::new());
            }
            if marked_in[b].is_empty() {
                touched.push(b);
            }
            marked_in[b].push(q);
        }
        for b in touched.drain(..) {
            let inside = std::mem::take(&mut marked_in[b]);
            if inside.len() == blocks[b].len() {
                for &q in &inside {
                    marked[q] = false;
                }
                continue;
            }
            let outside: Vec<usize> = blocks[b].iter().copied().filter(|&q| !marked[q]).collect();
            for &q in &inside {
                marked[q] = false;
            }
            let (keep, split) = if inside.len() <= outside.len() {
                (outside, inside)
            } else {
                (inside, outside)
            };
            let new_id = blocks.len();
            for &q in &split {
                block_of[q] = new_id;
            }
            blocks[b] = keep;
            blocks.push(split);
            // `new_id` is the smaller half, so it is always a valid splitter
            // whether or not `b` is still pending.
            pending.push(vec![true; k]);
            for c in 0..k {
                work.push((new_id, c));
            }
        }
    }

    // Renumber blocks breadth-first from the initial state.
    let mut order = vec![usize::MAX; blocks.len()];
    let mut queue = VecDeque::new();
    let start_block = block_of[local[dfa.initial()]];
    order[start_block] = 0;
    queue.push_back(start_block);
    let mut next_id = 1;
    let mut table = vec![Vec::new(); blocks.len()];
    let mut finals = vec![false; blocks.len()];
    while let Some(b) = queue.pop_front() {
        let rep = blocks[b][0];
        let mut row = Vec::with_capacity(k);
        for a in 0..k {
            let tb = block_of[delta(rep, a)];
            if order[tb] == usize::MAX {
                order[tb] = next_id;
                next_id += 1;
                queue.push_back(tb);
            }
            row.push(order[tb]);
        }
        table[order[b]] = row;
        finals[order[b]] = dfa.is_final(states[rep]);
    }
    let mut out = Dfa::from_table(dfa.alphabet().clone(), table, 0, finals)
        .expect("quotient automaton is well formed");
    out.minimal = true;
    out
}

/// Same automaton with acceptance inverted.
pub fn complement(dfa: &Dfa) -> Dfa {
    let mut out = dfa.clone();
    for f in out.finals.iter_mut() {
        *f = !*f;
    }
    out
}

/// Whether the complement of the language is finite.
pub fn is_cofinite(dfa: &Dfa) -> bool {
    complement(dfa).is_finite()
}

/// A longest accepted word, lexicographically least among the longest.
/// `Ok(None)` when nothing is accepted.
pub fn longest_word(dfa: &Dfa) -> Result<Option<Word>, AutomatonError> {
    let order = dfa
        .useful_topological_order()
        .ok_or(AutomatonError::NotFinite)?;
    let useful = dfa.useful();
    if !useful[dfa.initial()] {
        return Ok(None);
    }
    let mut longest: Vec<Option<usize>> = vec![None; dfa.state_count()];
    for &q in order.iter().rev() {
        let mut best = dfa.is_final(q).then_some(0);
        for a in dfa.symbols() {
            let t = dfa.next(q, a);
            if useful[t] {
                if let Some(l) = longest[t] {
                    best = best.max(Some(l + 1));
                }
            }
        }
        longest[q] = best;
    }
    let mut word = Vec::new();
    let mut q = dfa.initial();
    let mut remaining = longest[q].expect("initial state is useful");
    while remaining > 0 {
        let a = dfa
            .symbols()
            .find(|&a| {
                let t = dfa.next(q, a);
                useful[t] && longest[t] == Some(remaining - 1)
            })
            .expect("a successor realizes the longest path");
        word.push(a);
        q = dfa.next(q, a);
        remaining -= 1;
    }
    Ok(Some(Word(word)))
}

/// Exact number of accepted words.
pub fn count_words(dfa: &Dfa) -> Result<BigCount, AutomatonError> {
    let order = dfa
        .useful_topological_order()
        .ok_or(AutomatonError::NotFinite)?;
    let useful = dfa.useful();
    let mut count: Vec<BigCount> = vec![BigCount::zero(); dfa.state_count()];
    for &q in order.iter().rev() {
        let mut c = if dfa.is_final(q) {
            BigCount::from(1u32)
        } else {
            BigCount::zero()
        };
        for a in dfa.symbols() {
            let t = dfa.next(q, a);
            if useful[t] {
                c += &count[t];
            }
        }
        count[q] = c;
    }
    Ok(count[dfa.initial()].clone())
}

/// Shortest (then lexicographically least) word accepted by exactly one of
/// the two automata.
pub fn distinguishing_word(a: &Dfa, b: &Dfa) -> Result<Option<Word>, AutomatonError> {
    if a.alphabet() != b.alphabet() {
        return Err(AutomatonError::AlphabetMismatch);
    }
    let start = (a.initial(), b.initial());
    // pair -> (predecessor pair, symbol); None at the start pair
    type Pair = (StateId, StateId);
    let mut parent: HashMap<Pair, Option<(Pair, u8)>> = HashMap::new();
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    while let Some(pair @ (p, q)) = queue.pop_front() {
        if a.is_final(p) != b.is_final(q) {
            let mut word = Vec::new();
            let mut cur = pair;
            while let Some((prev, sym)) = parent[&cur] {
                word.push(sym);
                cur = prev;
            }
            word.reverse();
            return Ok(Some(Word(word)));
        }
        for s in a.symbols() {
            let next = (a.next(p, s), b.next(q, s));
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                e.insert(Some((pair, s)));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<bool, AutomatonError> {
    distinguishing_word(a, b).map(|w| w.is_none())
}

/// Number of states of the minimal complete DFA.
pub fn state_complexity(dfa: &Dfa) -> usize {
    if dfa.is_minimal() {
        dfa.state_count()
    } else {
        minimize(dfa).state_count()
    }
}

/// `dfa` with `extra` unreachable states appended; used to check that
/// measures do not depend on presentation.
pub fn padded(dfa: &Dfa, extra: usize) -> Dfa {
    let n = dfa.state_count();
    let k = dfa.alphabet().len();
    let mut out = dfa.clone();
    for i in 0..extra {
        let src = i % n;
        let row = dfa.transitions[src * k..(src + 1) * k].to_vec();
        out.transitions.extend(row);
        out.finals.push(!dfa.finals[src]);
    }
    out.minimal = false;
    out
}
