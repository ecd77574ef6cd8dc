//! Brute-force oracles shared by the integration tests. None of these use
//! the automaton engine, except `count_by_length`, which only walks a
//! finished DFA.

#![allow(dead_code)]

use std::collections::HashMap;

use frobword::automata::Dfa;
use frobword::numeric::PosIntList;
use frobword::starlang::WordSet;
use frobword::verify::random_corpus;
use frobword::words::{all_words, Word};

/// Non-representable integers, by sieving up to `limit`.
pub fn gaps(xs: &[u64], limit: u64) -> Vec<u64> {
    let mut rep = vec![false; limit as usize + 1];
    rep[0] = true;
    for n in 1..=limit as usize {
        rep[n] = xs.iter().any(|&x| x as usize <= n && rep[n - x as usize]);
    }
    (1..=limit).filter(|&n| !rep[n as usize]).collect()
}

/// `w ∈ S*` by memoized recursion on the remaining suffix.
pub fn in_star(words: &[Word], w: &[u8]) -> bool {
    fn go(words: &[Word], w: &[u8], memo: &mut HashMap<usize, bool>) -> bool {
        if w.is_empty() {
            return true;
        }
        if let Some(&v) = memo.get(&w.len()) {
            return v;
        }
        let v = words
            .iter()
            .any(|x| w.starts_with(x.symbols()) && go(words, &w[x.len()..], memo));
        memo.insert(w.len(), v);
        v
    }
    go(words, w, &mut HashMap::new())
}

/// `w ∈ x1*…xk*`: try every block length for the first word, then recurse.
pub fn in_chain(xs: &[Word], w: &[u8]) -> bool {
    fn go(xs: &[Word], w: &[u8], memo: &mut HashMap<(usize, usize), bool>) -> bool {
        if w.is_empty() {
            return true;
        }
        let Some((x, rest)) = xs.split_first() else {
            return false;
        };
        let key = (xs.len(), w.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut v = go(rest, w, memo);
        let mut tail = w;
        while !v && tail.starts_with(x.symbols()) {
            tail = &tail[x.len()..];
            v = go(rest, tail, memo);
        }
        memo.insert(key, v);
        v
    }
    go(xs, w, &mut HashMap::new())
}

/// State complexity of a unary language from its membership sequence: the
/// minimal DFA is a tail of `t` states and a cycle of `p` states, where
/// `(t, p)` is the least eventually-periodic description.
pub fn unary_sc(member: impl Fn(usize) -> bool, horizon: usize) -> usize {
    let bits: Vec<bool> = (0..horizon).map(&member).collect();
    let check = horizon / 2;
    for period in 1..=check / 2 {
        let periodic_from = |t: usize| (t..horizon - period).all(|i| bits[i] == bits[i + period]);
        if !periodic_from(check) {
            continue;
        }
        let mut t = check;
        while t > 0 && bits[t - 1] == bits[t - 1 + period] {
            t -= 1;
        }
        return t + period;
    }
    panic!("horizon {horizon} too short");
}

/// Unary lengths representable as sums of `xs`.
pub fn unary_star_member(xs: &PosIntList) -> impl Fn(usize) -> bool {
    let limit = 2048;
    let mut rep = vec![false; limit];
    rep[0] = true;
    for n in 1..limit {
        rep[n] = xs.values().iter().any(|&x| x as usize <= n && rep[n - x as usize]);
    }
    move |n| rep[n]
}

/// Every length-`len` prefix of the infinite words in `first {w,x}^ω`.
pub fn prefixes_of_products(first: &Word, w: &Word, x: &Word, len: usize) -> Vec<Vec<u8>> {
    let mut done = Vec::new();
    let mut stack = vec![first.symbols().to_vec()];
    while let Some(p) = stack.pop() {
        if p.len() >= len {
            done.push(p[..len].to_vec());
            continue;
        }
        for next in [w, x] {
            let mut q = p.clone();
            q.extend_from_slice(next.symbols());
            stack.push(q);
        }
    }
    done.sort();
    done.dedup();
    done
}

/// Longest common prefix over `y ∈ w{w,x}^ω`, `z ∈ x{w,x}^ω`, capped at `cap`.
pub fn brute_agreement(w: &Word, x: &Word, cap: usize) -> usize {
    let ys = prefixes_of_products(w, w, x, cap);
    let zs = prefixes_of_products(x, w, x, cap);
    let mut best = 0;
    for y in &ys {
        for z in &zs {
            let l = y.iter().zip(z).take_while(|(a, b)| a == b).count();
            best = best.max(l);
        }
    }
    best
}

/// Number of length-`len` words accepted by `dfa`, for `len = 0..=max`.
pub fn count_by_length(dfa: &Dfa, max: usize) -> Vec<u128> {
    let q = dfa.state_count();
    let sigma = dfa.alphabet().len() as u8;
    let mut ways = vec![0u128; q];
    ways[dfa.initial()] = 1;
    let mut out = Vec::with_capacity(max + 1);
    for _ in 0..=max {
        out.push((0..q).filter(|&s| dfa.is_final(s)).map(|s| ways[s]).sum());
        let mut next = vec![0u128; q];
        for s in 0..q {
            if ways[s] > 0 {
                for a in 0..sigma {
                    next[dfa.next(s, a)] += ways[s];
                }
            }
        }
        ways = next;
    }
    out
}

/// Non-members of `S*` of each length `0..=max`, by enumeration.
pub fn omitted_by_length(set: &WordSet, max: usize) -> Vec<u128> {
    (0..=max)
        .map(|len| {
            all_words(set.alphabet().len(), len)
                .filter(|w| !in_star(set.words(), w.symbols()))
                .count() as u128
        })
        .collect()
}

/// The shared corpus: random binary and ternary sets with words of
/// length ≤ 4, mixed so that co-finite closures occur.
pub fn corpus() -> Vec<WordSet> {
    random_corpus(0xc0ffee, 200, 4)
}
