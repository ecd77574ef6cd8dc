//! Words over a declared alphabet, and the two-word combinatorics used by
//! the closure measures: commutation, common roots, agreement of infinite
//! {w,x}-products, and the predicted state complexities of `{w,x}*` and
//! `w*x*`.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::numeric::{frobenius_g, gcd, PosIntList};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("alphabet declares {0:?} more than once")]
    DuplicateSymbol(char),
    #[error("alphabet has more than 256 symbols")]
    AlphabetTooLarge,
    #[error("symbol {symbol:?} is not in the alphabet {alphabet:?}")]
    UnknownSymbol { symbol: char, alphabet: String },
}

/// An ordered, duplicate-free list of symbols. Symbol order defines the
/// lexicographic order on words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self, WordError> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        if symbols.len() > 256 {
            return Err(WordError::AlphabetTooLarge);
        }
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(WordError::DuplicateSymbol(*c));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The alphabet `{0, 1, …, size-1}` written with decimal digits.
    pub fn digits(size: usize) -> Self {
        assert!((1..=10).contains(&size), "digit alphabets have 1..=10 symbols");
        Alphabet::new((0..size).map(|d| char::from(b'0' + d as u8))).unwrap()
    }

    pub fn binary() -> Self {
        Alphabet::digits(2)
    }

    pub fn unary() -> Self {
        Alphabet::digits(1)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn index_of(&self, c: char) -> Option<u8> {
        self.symbols.iter().position(|&s| s == c).map(|i| i as u8)
    }

    pub fn word(&self, text: &str) -> Result<Word, WordError> {
        text.chars()
            .map(|c| {
                self.index_of(c).ok_or_else(|| WordError::UnknownSymbol {
                    symbol: c,
                    alphabet: self.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn render(&self, word: &Word) -> String {
        word.0.iter().map(|&i| self.symbols[i as usize]).collect()
    }

    /// All words of exactly `len` symbols in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> impl Iterator<Item = Word> {
        all_words(self.len(), len)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.symbols {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A finite word, stored as symbol indices into its alphabet.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, e: usize) -> Word {
        Word(self.0.repeat(e))
    }

    pub fn repeat_symbol(symbol: u8, count: usize) -> Word {
        Word(vec![symbol; count])
    }

    pub fn is_proper_prefix_of(&self, other: &Word) -> bool {
        self.len() < other.len() && other.0.starts_with(&self.0)
    }

    pub fn is_proper_suffix_of(&self, other: &Word) -> bool {
        self.len() < other.len() && other.0.ends_with(&self.0)
    }

    /// Primitive root: the shortest `z` with `self = z^i`.
    pub fn primitive_root(&self) -> Word {
        let n = self.len();
        for p in 1..n {
            if n % p == 0 && (p..n).all(|i| self.0[i] == self.0[i - p]) {
                return Word(self.0[..p].to_vec());
            }
        }
        self.clone()
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word(v)
    }
}

/// All words over `{0..alphabet_size}` of length `len`, lexicographically.
pub fn all_words(alphabet_size: usize, len: usize) -> impl Iterator<Item = Word> {
    let total = (alphabet_size as u128).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut v = vec![0u8; len];
        for slot in v.iter_mut().rev() {
            *slot = (code % alphabet_size as u128) as u8;
            code /= alphabet_size as u128;
        }
        Word(v)
    })
}

pub fn commutes(w: &Word, x: &Word) -> bool {
    w.concat(x) == x.concat(w)
}

/// The common primitive root of `w` and `x` when they commute.
pub fn common_root(w: &Word, x: &Word) -> Option<Word> {
    if w.is_empty() || x.is_empty() || !commutes(w, x) {
        return None;
    }
    let root = w.primitive_root();
    debug_assert_eq!(root, x.primitive_root());
    Some(root)
}

/// Longest possible common prefix of `y ∈ w{w,x}^ω` and `z ∈ x{w,x}^ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Agreement {
    Finite(usize),
    Infinite,
}

/// Cursor inside one infinite product: which word is being read and how far.
type Cursor = (usize, usize);

/// Maximum agreement between words of `w{w,x}^ω` and `x{w,x}^ω`.
///
/// Explores the graph whose nodes are pairs of cursors, one per infinite
/// word, restricted to positions where the two words still agree. An
/// infinite agreement exists iff that graph has a reachable cycle; otherwise
/// the answer is the longest path. The graph has at most `(|w|+|x|)²` nodes.
pub fn fine_wilf_agreement(w: &Word, x: &Word) -> Agreement {
    assert!(!w.is_empty() && !x.is_empty(), "words must be nonempty");
    let words = [w, x];
    let letter = |(id, pos): Cursor| words[id].0[pos];
    let advance = |(id, pos): Cursor| -> Vec<Cursor> {
        if pos + 1 < words[id].len() {
            vec![(id, pos + 1)]
        } else {
            vec![(0, 0), (1, 0)]
        }
    };
    let successors = |(a, b): (Cursor, Cursor)| -> Vec<(Cursor, Cursor)> {
        let mut out = Vec::with_capacity(4);
        for na in advance(a) {
            for nb in advance(b) {
                out.push((na, nb));
            }
        }
        out
    };

    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Open,
        Done(usize),
    }
    let start = ((0, 0), (1, 0));
    let mut marks: HashMap<(Cursor, Cursor), Mark> = HashMap::new();
    // Iterative post-order DFS; `Open` nodes are on the current path.
    let mut stack: Vec<((Cursor, Cursor), usize)> = Vec::new();
    if letter(start.0) != letter(start.1) {
        return Agreement::Finite(0);
    }
    marks.insert(start, Mark::Open);
    stack.push((start, 0));
    while let Some(&mut (node, ref mut next)) = stack.last_mut() {
        let succ = successors(node);
        if *next < succ.len() {
            let child = succ[*next];
            *next += 1;
            if letter(child.0) != letter(child.1) {
                continue;
            }
            match marks.get(&child) {
                Some(Mark::Open) => return Agreement::Infinite,
                Some(Mark::Done(_)) => {}
                None => {
                    marks.insert(child, Mark::Open);
                    stack.push((child, 0));
                }
            }
        } else {
            let best = succ
                .iter()
                .filter_map(|c| match marks.get(c) {
                    Some(Mark::Done(v)) => Some(*v),
                    _ => None,
                })
                .max()
                .unwrap_or(0);
            marks.insert(node, Mark::Done(best + 1));
            stack.pop();
        }
    }
    match marks[&start] {
        Mark::Done(v) => Agreement::Finite(v),
        Mark::Open => unreachable!("start node finished"),
    }
}

/// Necessary condition for `S*` co-finite with `S* ≠ Σ*`: every word is in a
/// proper-prefix relation with some other word of the set, and likewise for
/// proper suffixes.
pub fn prefix_suffix_condition(words: &[Word]) -> bool {
    words.iter().all(|x| {
        words
            .iter()
            .any(|y| x.is_proper_prefix_of(y) || y.is_proper_prefix_of(x))
            && words
                .iter()
                .any(|y| x.is_proper_suffix_of(y) || y.is_proper_suffix_of(x))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredictionKind {
    Exact,
    UpperBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairPrediction {
    pub value: usize,
    pub kind: PredictionKind,
    /// Set when one word is a power of the other, where the closed form
    /// `d(g+1)+2` does not apply and `d+1` is returned instead.
    pub degenerate: bool,
}

fn commuting_prediction(w: &Word, x: &Word) -> PairPrediction {
    let d = gcd(w.len() as u64, x.len() as u64);
    let reduced = PosIntList::new([w.len() as u64 / d, x.len() as u64 / d]).unwrap();
    let g = frobenius_g(&reduced).expect("reduced lengths are coprime");
    let value = if g.degenerate {
        d + 1
    } else {
        d * (g.value + 1) + 2
    };
    PairPrediction {
        value: value as usize,
        kind: PredictionKind::Exact,
        degenerate: g.degenerate,
    }
}

/// Predicted state complexity of `{w,x}*` (complete DFA, dead state counted).
pub fn predicted_sc_pair_star(w: &Word, x: &Word) -> PairPrediction {
    if commutes(w, x) {
        commuting_prediction(w, x)
    } else {
        PairPrediction {
            value: w.len() + x.len(),
            kind: PredictionKind::UpperBound,
            degenerate: false,
        }
    }
}

/// Predicted state complexity of `w*x*` (complete DFA, dead state counted).
pub fn predicted_sc_pair_concat(w: &Word, x: &Word) -> PairPrediction {
    if commutes(w, x) {
        commuting_prediction(w, x)
    } else {
        PairPrediction {
            value: w.len() + 2 * x.len(),
            kind: PredictionKind::UpperBound,
            degenerate: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> Word {
        Alphabet::binary().word(s).unwrap()
    }

    /// Agreement by direct enumeration of all length-`depth` prefixes.
    fn agreement_by_enumeration(w: &Word, x: &Word, depth: usize) -> usize {
        fn prefixes(start: &Word, w: &Word, x: &Word, depth: usize) -> Vec<Vec<u8>> {
            let mut out = Vec::new();
            let mut stack = vec![start.0.clone()];
            while let Some(p) = stack.pop() {
                if p.len() >= depth {
                    out.push(p[..depth].to_vec());
                } else {
                    for next in [w, x] {
                        let mut q = p.clone();
                        q.extend_from_slice(&next.0);
                        stack.push(q);
                    }
                }
            }
            out
        }
        let ys = prefixes(w, w, x, depth);
        let zs = prefixes(x, w, x, depth);
        let mut best = 0;
        for y in &ys {
            for z in &zs {
                let lcp = y.iter().zip(z).take_while(|(a, b)| a == b).count();
                best = best.max(lcp);
            }
        }
        best
    }

    #[test]
    fn alphabet_rejects_duplicates() {
        assert_eq!(Alphabet::new("010".chars()), Err(WordError::DuplicateSymbol('0')));
        assert_eq!(Alphabet::new("".chars()), Err(WordError::EmptyAlphabet));
        assert!(matches!(
            Alphabet::binary().word("012"),
            Err(WordError::UnknownSymbol { symbol: '2', .. })
        ));
    }

    #[test]
    fn commutation() {
        assert!(commutes(&b("01"), &b("0101")));
        assert!(!commutes(&b("0"), &b("1")));
        assert!(!commutes(&b("001"), &b("010")));
    }

    #[test]
    fn roots() {
        assert_eq!(common_root(&b("0101"), &b("010101")), Some(b("01")));
        assert_eq!(common_root(&b("0"), &b("1")), None);
        assert_eq!(common_root(&b("000"), &b("00")), Some(b("0")));
    }

    #[test]
    fn agreement_examples() {
        assert_eq!(fine_wilf_agreement(&b("0"), &b("1")), Agreement::Finite(0));
        assert_eq!(fine_wilf_agreement(&b("01"), &b("0101")), Agreement::Infinite);
        let got = fine_wilf_agreement(&b("0"), &b("01"));
        assert_eq!(got, Agreement::Finite(agreement_by_enumeration(&b("0"), &b("01"), 3)));
        assert!(got <= Agreement::Finite(1));
    }

    #[test]
    fn agreement_matches_enumeration() {
        let a = Alphabet::binary();
        for lw in 1..=4 {
            for lx in 1..=4 {
                for w in a.words_of_length(lw) {
                    for x in a.words_of_length(lx) {
                        if commutes(&w, &x) {
                            continue;
                        }
                        let depth = lw + lx + 2;
                        let brute = agreement_by_enumeration(&w, &x, depth);
                        assert_eq!(fine_wilf_agreement(&w, &x), Agreement::Finite(brute));
                    }
                }
            }
        }
    }

    #[test]
    fn prefix_suffix_examples() {
        assert!(!prefix_suffix_condition(&[b("01")]));
        assert!(prefix_suffix_condition(&[b("0"), b("00")]));
        assert!(!prefix_suffix_condition(&[b("0"), b("1")]));
    }

    #[test]
    fn pair_predictions() {
        let p = predicted_sc_pair_star(&b("00"), &b("000"));
        assert_eq!((p.value, p.kind), (4, PredictionKind::Exact));
        let p = predicted_sc_pair_star(&b("0"), &b("1"));
        assert_eq!((p.value, p.kind), (2, PredictionKind::UpperBound));
        assert_eq!(predicted_sc_pair_star(&b("01"), &b("011")).value, 5);
        assert_eq!(predicted_sc_pair_concat(&b("00"), &b("000")).value, 4);
        assert_eq!(predicted_sc_pair_concat(&b("0"), &b("1")).value, 3);
        assert_eq!(predicted_sc_pair_concat(&b("01"), &b("011")).value, 8);
        let p = predicted_sc_pair_star(&b("01"), &b("0101"));
        assert_eq!((p.value, p.degenerate), (3, true));
    }

    #[test]
    fn word_enumeration_is_lexicographic() {
        let ws: Vec<String> = all_words(2, 2).map(|w| Alphabet::binary().render(&w)).collect();
        assert_eq!(ws, ["00", "01", "10", "11"]);
        assert_eq!(all_words(3, 0).count(), 1);
    }
}
