//! Automata for `S*` and `x1*…xk*`, brute-force membership oracles, and the
//! size measures of the closures: longest omitted word (ℒ for the star,
//! 𝒦 for the chain), state complexities (𝒮, 𝒮′) and the omitted-word
//! count ℳ.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::automata::{
    complement, count_words, determinize, is_cofinite, longest_word, minimize, AutomatonError,
    BigCount, Dfa, Nfa,
};
use crate::numeric::{gcd, gcd_all, PosIntList};
use crate::words::{Alphabet, Word};

/// Default limit on `|Σ|^l` for [`two_length_cofinite`].
pub const DEFAULT_EXHAUSTIVE_BUDGET: u128 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StarError {
    #[error("the empty word cannot be a generator")]
    EmptyWord,
    #[error("word set is empty")]
    NoWords,
    #[error("word uses symbol index {0}, outside the alphabet")]
    SymbolOutOfRange(u8),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("exhaustive check needs {needed} words, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("longest word has length {0}; the window construction supports at most 63")]
    WordTooLong(usize),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

/// A finite set of distinct nonempty words over a declared alphabet. Words
/// are kept in shortlex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSet {
    alphabet: Alphabet,
    words: Vec<Word>,
}

impl WordSet {
    pub fn new(alphabet: Alphabet, words: impl IntoIterator<Item = Word>) -> Result<Self, StarError> {
        let mut words: Vec<Word> = words.into_iter().collect();
        for w in &words {
            if w.is_empty() {
                return Err(StarError::EmptyWord);
            }
            if let Some(&s) = w.symbols().iter().find(|&&s| s as usize >= alphabet.len()) {
                return Err(StarError::SymbolOutOfRange(s));
            }
        }
        if words.is_empty() {
            return Err(StarError::NoWords);
        }
        words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        words.dedup();
        Ok(WordSet { alphabet, words })
    }

    /// Parses each string with `alphabet`.
    pub fn parse(alphabet: &Alphabet, words: &[&str]) -> Result<Self, crate::Error> {
        let ws = words
            .iter()
            .map(|w| alphabet.word(w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(WordSet::new(alphabet.clone(), ws)?)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Number of words (k).
    pub fn k(&self) -> usize {
        self.words.len()
    }

    /// Length of the longest word (n).
    pub fn n(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    /// Total number of symbols (m).
    pub fn m_total(&self) -> usize {
        self.words.iter().map(Word::len).sum()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search_by(|x| x.len().cmp(&w.len()).then_with(|| x.cmp(w))).is_ok()
    }

    pub fn is_prefix_free(&self) -> bool {
        !self
            .words
            .iter()
            .any(|x| self.words.iter().any(|y| x.is_proper_prefix_of(y)))
    }

    pub fn render(&self) -> Vec<String> {
        self.words.iter().map(|w| self.alphabet.render(w)).collect()
    }
}

/// Membership in `S*` by dynamic programming over prefixes.
pub fn member_star(set: &WordSet, w: &Word) -> bool {
    let s = w.symbols();
    let mut reach = vec![false; s.len() + 1];
    reach[0] = true;
    for i in 1..=s.len() {
        reach[i] = set
            .words()
            .iter()
            .any(|x| x.len() <= i && reach[i - x.len()] && &s[i - x.len()..i] == x.symbols());
    }
    reach[s.len()]
}

/// Membership in `x1* x2* … xk*` by dynamic programming over
/// (prefix length, chain index).
pub fn member_chain(xs: &[Word], w: &Word) -> bool {
    let s = w.symbols();
    let n = s.len();
    // reach[i] = set of chain indices j such that s[..i] ∈ x1*…xj* and the
    // next block may still use xj
    let k = xs.len();
    if k == 0 {
        return s.is_empty();
    }
    let mut reach = vec![vec![false; k]; n + 1];
    reach[0] = vec![true; k];
    for i in 0..=n {
        for j in 0..k {
            if !reach[i][j] {
                continue;
            }
            // skip forward to later factors
            for later in j + 1..k {
                reach[i][later] = true;
            }
            let x = xs[j].symbols();
            if !x.is_empty() && i + x.len() <= n && &s[i..i + x.len()] == x {
                reach[i + x.len()][j] = true;
            }
        }
    }
    reach[n].iter().any(|&r| r)
}

/// NFA for `S*` built on the trie of `S`: the root is the only initial and
/// final state, and the last letter of each word leads back to the root.
/// States are the root plus the distinct proper nonempty prefixes, so there
/// are at most `m − k + 1`.
pub fn trie_star_nfa(set: &WordSet) -> Nfa {
    let mut ids: HashMap<&[u8], usize> = HashMap::new();
    ids.insert(&[], 0);
    let mut nfa = Nfa::new(set.alphabet().clone(), 1);
    nfa.set_initial(0);
    nfa.set_final(0, true);
    for w in set.words() {
        let s = w.symbols();
        for i in 1..s.len() {
            if !ids.contains_key(&s[..i]) {
                let id = nfa.add_state();
                ids.insert(&s[..i], id);
            }
        }
    }
    for w in set.words() {
        let s = w.symbols();
        for i in 0..s.len() {
            let from = ids[&s[..i]];
            let to = if i + 1 == s.len() { 0 } else { ids[&s[..i + 1]] };
            nfa.add_transition(from, s[i], to);
        }
    }
    nfa
}

/// Upper bound `Σ_{0≤i<n} |Σ|^i 2^{i+1} = (2/(2|Σ|−1))(2^n |Σ|^n − 1)` on
/// the number of states of [`window_star_dfa`].
pub fn window_state_bound(alphabet_size: usize, n: usize) -> BigUint {
    let two_sigma = BigUint::from(2 * alphabet_size);
    let numerator = (two_sigma.pow(n as u32) - BigUint::one()) * BigUint::from(2u32);
    numerator / BigUint::from(2 * alphabet_size - 1)
}

/// Bound `(|Σ|^q − 1)/(|Σ| − 1)` on the number of omitted words, with `q`
/// the window bound. For a unary alphabet this is `q`.
pub fn omitted_count_bound(alphabet_size: usize, n: usize) -> BigUint {
    let q = window_state_bound(alphabet_size, n);
    if alphabet_size == 1 {
        return q;
    }
    let q: u32 = q
        .try_into()
        .expect("window bound exceeds u32; bound is astronomically large");
    (BigUint::from(alphabet_size).pow(q) - BigUint::one()) / BigUint::from(alphabet_size - 1)
}

/// DFA for `S*` whose states remember the last `n−1` symbols read together
/// with the set `T` of offsets `a` (counted back from the end of the
/// remembered window) at which a factorization into words of `S` can end.
/// Only reachable states are built; the automaton is complete by
/// construction.
pub fn window_star_dfa(set: &WordSet, state_cap: usize) -> Result<Dfa, StarError> {
    let n = set.n();
    if n > 63 {
        return Err(StarError::WordTooLong(n));
    }
    let k = set.alphabet().len();
    let words: HashSet<&[u8]> = set.words().iter().map(|w| w.symbols()).collect();
    let window = n - 1;

    type State = (Vec<u8>, u64);
    let start: State = (Vec::new(), 1);
    let mut index: HashMap<State, usize> = HashMap::new();
    let mut states: Vec<State> = vec![start.clone()];
    index.insert(start, 0);
    let mut table: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let (recent, ends) = states[i].clone();
        let mut row = Vec::with_capacity(k);
        for a in 0..k as u8 {
            let mut extended = recent.clone();
            extended.push(a);
            // a factorization ending `off` symbols before the old end can be
            // extended by the word spanning the last `off+1` symbols
            let closes = (0..=recent.len()).any(|off| {
                ends >> off & 1 == 1 && words.contains(&extended[extended.len() - off - 1..])
            });
            let next_recent = if extended.len() > window {
                extended[extended.len() - window..].to_vec()
            } else {
                extended
            };
            let keep_mask = (1u64 << (next_recent.len() + 1)) - 1;
            let next_ends = ((ends << 1) & keep_mask) | u64::from(closes);
            let next: State = (next_recent, next_ends);
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = states.len();
                    if id >= state_cap {
                        return Err(AutomatonError::CapExceeded { cap: state_cap }.into());
                    }
                    index.insert(next.clone(), id);
                    states.push(next);
                    id
                }
            };
            row.push(id);
        }
        table.push(row);
        i += 1;
    }
    let finals = states.iter().map(|(_, ends)| ends & 1 == 1).collect();
    Ok(Dfa::from_table(set.alphabet().clone(), table, 0, finals)?)
}

/// NFA for `x1* x2* … xk*`: one cycle per word through its anchor state,
/// with the ε-skips between consecutive anchors folded into the outgoing
/// transitions. Every anchor is final; there are `m` states.
pub fn chain_nfa(alphabet: &Alphabet, xs: &[Word]) -> Result<Nfa, StarError> {
    if xs.is_empty() {
        return Err(StarError::NoWords);
    }
    if xs.iter().any(Word::is_empty) {
        return Err(StarError::EmptyWord);
    }
    let mut nfa = Nfa::new(alphabet.clone(), 0);
    let anchors: Vec<usize> = xs.iter().map(|_| nfa.add_state()).collect();
    // inner[j][p] = state after reading p symbols of xs[j], 1 ≤ p < |xs[j]|
    let mut inner: Vec<Vec<usize>> = Vec::with_capacity(xs.len());
    for x in xs {
        let mut row = vec![usize::MAX];
        for _ in 1..x.len() {
            row.push(nfa.add_state());
        }
        inner.push(row);
    }
    let after = |j: usize, p: usize| if p == xs[j].len() { anchors[j] } else { inner[j][p] };
    for (j, x) in xs.iter().enumerate() {
        for p in 1..x.len() {
            nfa.add_transition(inner[j][p], x.symbols()[p], after(j, p + 1));
        }
        for &anchor in &anchors[..=j] {
            nfa.add_transition(anchor, x.symbols()[0], after(j, 1));
        }
    }
    for &a in &anchors {
        nfa.set_final(a, true);
    }
    nfa.set_initial(anchors[0]);
    Ok(nfa)
}

/// Co-finiteness of `x1*…xk*`: holds iff the alphabet is unary and the word
/// lengths are coprime.
pub fn chain_cofinite(xs: &[Word], alphabet: &Alphabet) -> bool {
    if alphabet.len() != 1 || xs.is_empty() {
        return false;
    }
    xs.iter().map(|x| x.len() as u64).fold(0, gcd) == 1
}

/// The automaton-based verdict for [`chain_cofinite`].
pub fn chain_cofinite_by_automaton(
    xs: &[Word],
    alphabet: &Alphabet,
    state_cap: usize,
) -> Result<bool, StarError> {
    let dfa = determinize(&chain_nfa(alphabet, xs)?, state_cap)?;
    Ok(is_cofinite(&dfa))
}

/// Minimal DFA for `S*` via the window construction.
pub fn star_min_dfa(set: &WordSet, state_cap: usize) -> Result<Dfa, StarError> {
    Ok(minimize(&window_star_dfa(set, state_cap)?))
}

/// Minimal DFA for `x1*…xk*`.
pub fn chain_min_dfa(alphabet: &Alphabet, xs: &[Word], state_cap: usize) -> Result<Dfa, StarError> {
    Ok(minimize(&determinize(&chain_nfa(alphabet, xs)?, state_cap)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeasureOptions {
    pub star: bool,
    pub chain: bool,
    pub state_cap: usize,
}

impl Default for MeasureOptions {
    fn default() -> Self {
        MeasureOptions {
            star: true,
            chain: true,
            state_cap: crate::automata::DEFAULT_STATE_CAP,
        }
    }
}

/// Measures of `S*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarMeasures {
    pub cofinite: bool,
    /// `S* = Σ*`
    pub full_language: bool,
    /// ℒ, present iff co-finite and not the full language.
    pub longest_omitted: Option<usize>,
    pub longest_omitted_witness: Option<Word>,
    /// 𝒮
    pub state_complexity: usize,
    /// ℳ, present iff co-finite.
    pub omitted_count: Option<BigCount>,
    pub window_dfa_states: usize,
    pub trie_nfa_states: usize,
}

/// Measures of `x1*…xk*` for a given word order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMeasures {
    pub cofinite: bool,
    pub full_language: bool,
    /// 𝒦
    pub longest_omitted: Option<usize>,
    pub longest_omitted_witness: Option<Word>,
    /// 𝒮′
    pub state_complexity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureReport {
    pub k: usize,
    pub n: usize,
    pub m_total: usize,
    /// m − k + 1, the trie NFA size bound; the only nondeterministic
    /// measure reported.
    pub nfa_size_bound: usize,
    pub star: Option<StarMeasures>,
    pub chain: Option<ChainMeasures>,
}

pub fn measure_star(set: &WordSet, state_cap: usize) -> Result<StarMeasures, StarError> {
    let window = window_star_dfa(set, state_cap)?;
    let minimal = minimize(&window);
    let cofinite = is_cofinite(&minimal);
    let (longest, count) = if cofinite {
        let omitted = complement(&minimal);
        (longest_word(&omitted)?, Some(count_words(&omitted)?))
    } else {
        (None, None)
    };
    let full_language = cofinite && longest.is_none();
    Ok(StarMeasures {
        cofinite,
        full_language,
        longest_omitted: longest.as_ref().map(Word::len),
        longest_omitted_witness: longest,
        state_complexity: minimal.state_count(),
        omitted_count: count,
        window_dfa_states: window.state_count(),
        trie_nfa_states: trie_star_nfa(set).state_count(),
    })
}

pub fn measure_chain(
    alphabet: &Alphabet,
    xs: &[Word],
    state_cap: usize,
) -> Result<ChainMeasures, StarError> {
    let minimal = chain_min_dfa(alphabet, xs, state_cap)?;
    let cofinite = is_cofinite(&minimal);
    let longest = if cofinite {
        longest_word(&complement(&minimal))?
    } else {
        None
    };
    Ok(ChainMeasures {
        cofinite,
        full_language: cofinite && longest.is_none(),
        longest_omitted: longest.as_ref().map(Word::len),
        longest_omitted_witness: longest,
        state_complexity: minimal.state_count(),
    })
}

/// All measures of `S*` and of the chain `x1*…xk*` in the order `xs_order`
/// (defaults to the set's own order).
pub fn measure_all(
    set: &WordSet,
    xs_order: Option<&[Word]>,
    options: MeasureOptions,
) -> Result<MeasureReport, StarError> {
    let star = options
        .star
        .then(|| measure_star(set, options.state_cap))
        .transpose()?;
    let order = xs_order.unwrap_or(set.words());
    let chain = options
        .chain
        .then(|| measure_chain(set.alphabet(), order, options.state_cap))
        .transpose()?;
    Ok(MeasureReport {
        k: set.k(),
        n: set.n(),
        m_total: set.m_total(),
        nfa_size_bound: set.m_total() - set.k() + 1,
        star,
        chain,
    })
}

/// The threshold `l = m|Σ|^{n−m} + n − m` for two-length sets.
pub fn two_length_threshold(alphabet_size: usize, m: usize, n: usize) -> usize {
    m * alphabet_size.pow((n - m) as u32) + n - m
}

pub fn check_two_length_shape(m: usize, n: usize) -> Result<(), StarError> {
    if !(0 < m && m < n && n < 2 * m) {
        return Err(StarError::PreconditionViolated(format!(
            "need 0 < m < n < 2m, got m = {m}, n = {n}"
        )));
    }
    if gcd(m as u64, n as u64) != 1 {
        return Err(StarError::PreconditionViolated(format!(
            "need gcd(m, n) = 1, got gcd({m}, {n}) = {}",
            gcd(m as u64, n as u64)
        )));
    }
    Ok(())
}

/// Co-finiteness of `S*` for `S ⊆ Σ^m ∪ Σ^n` with `0 < m < n < 2m`,
/// `gcd(m,n) = 1`, using the criterion `Σ^m ⊆ S` and `Σ^l ⊆ S*`. The second
/// condition is checked exhaustively with [`member_star`], so `|Σ|^l` must
/// fit in `budget`.
pub fn two_length_cofinite(
    set: &WordSet,
    m: usize,
    n: usize,
    budget: u128,
) -> Result<bool, StarError> {
    check_two_length_shape(m, n)?;
    if let Some(w) = set.words().iter().find(|w| w.len() != m && w.len() != n) {
        return Err(StarError::PreconditionViolated(format!(
            "word of length {} is neither {m} nor {n}",
            w.len()
        )));
    }
    let sigma = set.alphabet().len();
    let l = two_length_threshold(sigma, m, n);
    let needed = (sigma as u128)
        .checked_pow(l as u32)
        .unwrap_or(u128::MAX);
    if needed > budget {
        return Err(StarError::BudgetExceeded { needed, budget });
    }
    if !set.alphabet().words_of_length(m).all(|w| set.contains(&w)) {
        return Ok(false);
    }
    Ok(set.alphabet().words_of_length(l).all(|w| member_star(set, &w)))
}

/// Unary word set `{0^a : a ∈ lengths}`.
pub fn unary_set(lengths: &PosIntList) -> WordSet {
    WordSet::new(
        Alphabet::unary(),
        lengths.values().iter().map(|&a| Word::repeat_symbol(0, a as usize)),
    )
    .expect("positive lengths give nonempty words")
}

/// gcd of the word lengths.
pub fn length_gcd(set: &WordSet) -> u64 {
    let lens = PosIntList::new(set.words().iter().map(|w| w.len() as u64)).expect("nonempty set");
    gcd_all(&lens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{equivalent, state_complexity, DEFAULT_STATE_CAP};

    fn bin() -> Alphabet {
        Alphabet::binary()
    }

    fn set(alphabet: &Alphabet, words: &[&str]) -> WordSet {
        WordSet::parse(alphabet, words).unwrap()
    }

    fn w(s: &str) -> Word {
        bin().word(s).unwrap()
    }

    #[test]
    fn word_set_invariants() {
        let s = set(&bin(), &["000", "00", "00"]);
        assert_eq!(s.k(), 2);
        assert_eq!(s.n(), 3);
        assert_eq!(s.m_total(), 5);
        assert_eq!(WordSet::new(bin(), [Word::empty()]), Err(StarError::EmptyWord));
        assert_eq!(WordSet::new(bin(), []), Err(StarError::NoWords));
        assert_eq!(WordSet::new(bin(), [Word(vec![2])]), Err(StarError::SymbolOutOfRange(2)));
    }

    #[test]
    fn star_membership_examples() {
        let s = set(&bin(), &["00", "000"]);
        assert!(member_star(&s, &Word::empty()));
        assert!(member_star(&s, &w("00000")));
        assert!(!member_star(&s, &w("0")));
    }

    #[test]
    fn chain_membership_examples() {
        assert!(member_chain(&[w("0"), w("1")], &w("0011")));
        assert!(!member_chain(&[w("0"), w("1")], &w("10")));
        assert!(!member_chain(&[w("00"), w("000")], &w("0")));
        assert!(member_chain(&[w("01"), w("0")], &w("01010")));
        assert!(!member_chain(&[w("0"), w("01")], &w("0100")));
    }

    #[test]
    fn trie_nfa_sizes() {
        assert_eq!(trie_star_nfa(&set(&bin(), &["0"])).state_count(), 1);
        let s = set(&bin(), &["00", "000"]);
        let nfa = trie_star_nfa(&s);
        assert!(nfa.state_count() <= s.m_total() - s.k() + 1);
        assert_eq!(nfa.state_count(), 3);
        for len in 0..10 {
            let word = Word::repeat_symbol(0, len);
            assert_eq!(nfa.accepts(&word), member_star(&s, &word));
        }
    }

    #[test]
    fn window_dfa_unary_single_letter() {
        let u = Alphabet::unary();
        let s = set(&u, &["0"]);
        let d = window_star_dfa(&s, DEFAULT_STATE_CAP).unwrap();
        assert_eq!(d.state_count(), 1);
        assert!(BigUint::from(d.state_count()) <= window_state_bound(1, 1));
        assert_eq!(window_state_bound(1, 1), BigUint::from(2u32));
    }

    #[test]
    fn window_bound_arithmetic() {
        assert_eq!(window_state_bound(2, 2), BigUint::from(10u32));
        assert_eq!(window_state_bound(2, 5), BigUint::from(682u32));
        // direct sum
        for sigma in 1..4usize {
            for n in 1..8usize {
                let direct: u64 = (0..n).map(|i| (sigma as u64).pow(i as u32) << (i + 1)).sum();
                assert_eq!(window_state_bound(sigma, n), BigUint::from(direct));
            }
        }
    }

    #[test]
    fn window_matches_trie_determinization() {
        for words in [
            vec!["0", "1"],
            vec!["00", "000"],
            vec!["01", "10", "0"],
            vec!["011", "0", "110"],
            vec!["0101", "1", "00"],
        ] {
            let s = set(&bin(), &words);
            let a = window_star_dfa(&s, DEFAULT_STATE_CAP).unwrap();
            let b = determinize(&trie_star_nfa(&s), DEFAULT_STATE_CAP).unwrap();
            assert!(equivalent(&a, &b).unwrap(), "{words:?}");
        }
    }

    #[test]
    fn chain_nfa_examples() {
        let a = bin();
        let zero = chain_nfa(&a, &[w("0")]).unwrap();
        assert!(zero.accepts(&w("000")));
        assert!(!zero.accepts(&w("01")));
        let zo = chain_nfa(&a, &[w("0"), w("1")]).unwrap();
        assert!(zo.accepts(&w("0011")));
        assert!(!zo.accepts(&w("10")));
        let xs = [w("01"), w("011")];
        let nfa = chain_nfa(&a, &xs).unwrap();
        assert!(nfa.state_count() <= 5 + 1);
        for len in 0..=10 {
            for word in a.words_of_length(len) {
                assert_eq!(nfa.accepts(&word), member_chain(&xs, &word));
            }
        }
        assert_eq!(chain_nfa(&a, &[w("0"), Word::empty()]).unwrap_err(), StarError::EmptyWord);
    }

    #[test]
    fn chain_cofiniteness() {
        let u = Alphabet::unary();
        let uw = |n: usize| Word::repeat_symbol(0, n);
        assert!(chain_cofinite(&[uw(1), uw(2), uw(3)], &u));
        assert!(!chain_cofinite(&[uw(2), uw(4)], &u));
        assert!(!chain_cofinite(&[w("0"), w("1")], &bin()));
        assert!(chain_cofinite_by_automaton(&[uw(1), uw(2), uw(3)], &u, 1000).unwrap());
        assert!(!chain_cofinite_by_automaton(&[uw(2), uw(4)], &u, 1000).unwrap());
        assert!(!chain_cofinite_by_automaton(&[w("0"), w("1")], &bin(), 1000).unwrap());
    }

    #[test]
    fn measures_of_full_language() {
        let s = set(&bin(), &["0", "1"]);
        let r = measure_all(&s, None, MeasureOptions::default()).unwrap();
        let star = r.star.unwrap();
        assert!(star.cofinite && star.full_language);
        assert_eq!(star.longest_omitted, None);
        assert_eq!(star.state_complexity, 1);
        assert_eq!(star.omitted_count, Some(BigCount::from(0u32)));
        assert!(!r.chain.unwrap().cofinite);
    }

    #[test]
    fn measures_of_unary_2_3() {
        let u = Alphabet::unary();
        let s = set(&u, &["00", "000"]);
        let r = measure_all(&s, None, MeasureOptions::default()).unwrap();
        let star = r.star.unwrap();
        assert_eq!(star.longest_omitted, Some(1));
        assert_eq!(star.state_complexity, 3);
        assert_eq!(star.omitted_count, Some(BigCount::from(1u32)));
        let chain = r.chain.unwrap();
        assert!(chain.cofinite);
        assert_eq!(chain.longest_omitted, Some(1));
        // 00*000* and {00,000}* agree as languages over {0}
        assert_eq!(chain.state_complexity, 3);
        assert_eq!(r.nfa_size_bound, 4);
    }

    #[test]
    fn chain_state_complexity_binary() {
        let xs = [w("00"), w("000")];
        let d = chain_min_dfa(&bin(), &xs, DEFAULT_STATE_CAP).unwrap();
        assert_eq!(state_complexity(&d), 4);
    }

    #[test]
    fn two_length_examples() {
        let a = bin();
        let mut words: Vec<Word> = a.words_of_length(2).chain(a.words_of_length(3)).collect();
        words.retain(|x| *x != w("001"));
        let s = WordSet::new(a.clone(), words.clone()).unwrap();
        assert!(two_length_cofinite(&s, 2, 3, DEFAULT_EXHAUSTIVE_BUDGET).unwrap());
        words.retain(|x| *x != w("11"));
        let missing = WordSet::new(a.clone(), words).unwrap();
        assert!(!two_length_cofinite(&missing, 2, 3, DEFAULT_EXHAUSTIVE_BUDGET).unwrap());
        assert!(matches!(
            two_length_cofinite(&s, 2, 4, DEFAULT_EXHAUSTIVE_BUDGET),
            Err(StarError::PreconditionViolated(_))
        ));
        assert!(matches!(
            two_length_cofinite(&s, 2, 3, 8),
            Err(StarError::BudgetExceeded { needed: 32, budget: 8 })
        ));
    }
}
