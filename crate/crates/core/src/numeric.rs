//! Classical (commutative) Frobenius machinery.
//!
//! The Frobenius number is computed with the residue-class shortest path
//! method: for `a = min(xs)`, the smallest representable integer in each
//! residue class modulo `a` (the Apéry set) determines both `g` and the
//! Sylvester count `f`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("integer list is empty")]
    Empty,
    #[error("integer list contains 0; all entries must be positive")]
    ZeroEntry,
    #[error("gcd of the integers is {gcd}, expected 1")]
    GcdNotOne { gcd: u64 },
}

/// A nonempty set of positive integers. Duplicates are dropped and the
/// values are kept in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PosIntList(Vec<u64>);

impl PosIntList {
    pub fn new(values: impl IntoIterator<Item = u64>) -> Result<Self, NumericError> {
        let mut values: Vec<u64> = values.into_iter().collect();
        if values.is_empty() {
            return Err(NumericError::Empty);
        }
        if values.contains(&0) {
            return Err(NumericError::ZeroEntry);
        }
        values.sort_unstable();
        values.dedup();
        Ok(PosIntList(values))
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn min(&self) -> u64 {
        self.0[0]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Divides every entry by `d`. `d` must divide all entries.
    pub fn reduced_by(&self, d: u64) -> PosIntList {
        debug_assert!(self.0.iter().all(|v| v % d == 0));
        PosIntList::new(self.0.iter().map(|v| v / d)).expect("reduced list stays positive")
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn gcd_all(xs: &PosIntList) -> u64 {
    xs.values().iter().fold(0, |acc, &v| gcd(acc, v))
}

/// Result of [`frobenius_g`].
///
/// When `1` belongs to the list every positive integer is representable and
/// `value` is reported as 0 with `degenerate` set. [`FrobeniusNumber::classical`]
/// gives the classical convention `-1` for that case instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrobeniusNumber {
    pub value: u64,
    pub degenerate: bool,
}

impl FrobeniusNumber {
    pub fn classical(&self) -> i64 {
        if self.degenerate {
            -1
        } else {
            self.value as i64
        }
    }
}

/// Smallest representable integer in each residue class modulo `min(xs)`.
fn apery_set(xs: &PosIntList) -> Vec<u64> {
    let a = xs.min() as usize;
    let mut dist = vec![u64::MAX; a];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &x in &xs.values()[1..] {
            let nd = d + x;
            let nr = (r + x as usize) % a;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

fn require_coprime(xs: &PosIntList) -> Result<(), NumericError> {
    match gcd_all(xs) {
        1 => Ok(()),
        gcd => Err(NumericError::GcdNotOne { gcd }),
    }
}

/// Largest integer that is not a nonnegative integer combination of `xs`.
pub fn frobenius_g(xs: &PosIntList) -> Result<FrobeniusNumber, NumericError> {
    require_coprime(xs)?;
    if xs.min() == 1 {
        return Ok(FrobeniusNumber {
            value: 0,
            degenerate: true,
        });
    }
    let max = apery_set(xs).into_iter().max().expect("nonempty residues");
    Ok(FrobeniusNumber {
        value: max - xs.min(),
        degenerate: false,
    })
}

/// Number of positive integers that are not representable (Sylvester's count).
pub fn frobenius_f(xs: &PosIntList) -> Result<u64, NumericError> {
    require_coprime(xs)?;
    let a = xs.min();
    Ok(apery_set(xs)
        .into_iter()
        .enumerate()
        .map(|(r, w)| (w - r as u64) / a)
        .sum())
}

/// Whether `n` is a nonnegative integer combination of `xs`.
pub fn representable(n: u64, xs: &PosIntList) -> bool {
    let n = n as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for i in 1..=n {
        reach[i] = xs
            .values()
            .iter()
            .any(|&x| x as usize <= i && reach[i - x as usize]);
    }
    reach[n]
}

/// State complexity of the unary closure `{0^a_1, …, 0^a_k}*` over a
/// one-letter alphabet, as predicted from the Frobenius number of the
/// reduced tuple: `d·(g(a/d)+1)+1` with `d = gcd`.
///
/// When the reduced tuple contains 1 the language is `(0^d)*` and the
/// minimal DFA is a single cycle of `d` states; the closed form only agrees
/// with that when `d = 1` (using `g = -1`), so that case is answered
/// directly.
pub fn predicted_unary_sc(xs: &PosIntList) -> u64 {
    let d = gcd_all(xs);
    let reduced = xs.reduced_by(d);
    let g = frobenius_g(&reduced).expect("reduced tuple is coprime");
    if g.degenerate {
        d
    } else {
        d * (g.value + 1) + 1
    }
}

/// The literal closed form `d·(g(a/d)+1)+1`, with `g = -1` for reduced
/// tuples containing 1. Differs from [`predicted_unary_sc`] only when the
/// gcd itself is one of the entries and exceeds 1.
pub fn unary_sc_closed_form(xs: &PosIntList) -> i64 {
    let d = gcd_all(xs) as i64;
    let g = frobenius_g(&xs.reduced_by(d as u64)).expect("reduced tuple is coprime");
    d * (g.classical() + 1) + 1
}
