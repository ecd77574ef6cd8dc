//! Generators for the extremal word-set families and their predicted
//! behaviour.
//!
//! * `S_t = {0, x_0, …, x_{t−2}, y}` with `y = 0 1^{t−1} 0` and
//!   `x_i = 1^{t−i−1} 0 1^{i+1}`, whose star has exponential state
//!   complexity.
//! * The chain family `(0* x_1* … x_{t−2}* y*)^e`.
//! * `S = Σ^m ∪ Σ^n − T(m,n)`, built from consecutive base-|Σ| counters,
//!   whose star omits words of length `g(m, l)`.

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::numeric::gcd;
use crate::starlang::{two_length_threshold, WordSet};
use crate::words::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{value} does not fit in {width} base-{base} digits")]
    Overflow { value: u64, base: u32, width: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// Fixed-width base-`base` digits of `value`, most significant first.
pub fn base_repr(value: u64, base: u32, width: usize) -> Result<Word, FamilyError> {
    assert!(base >= 2, "base must be at least 2");
    let overflow = FamilyError::Overflow { value, base, width };
    let limit = (base as u128).checked_pow(width as u32);
    if limit.is_some_and(|l| value as u128 >= l) {
        return Err(overflow);
    }
    let mut digits = vec![0u8; width];
    let mut v = value;
    for d in digits.iter_mut().rev() {
        *d = (v % base as u64) as u8;
        v /= base as u64;
    }
    Ok(Word(digits))
}

const ZERO: u8 = 0;
const ONE: u8 = 1;

fn ones(n: usize) -> Word {
    Word::repeat_symbol(ONE, n)
}

fn zero() -> Word {
    Word(vec![ZERO])
}

/// `y = 0 1^{t−1} 0`
pub fn st_y(t: usize) -> Word {
    zero().concat(&ones(t - 1)).concat(&zero())
}

/// `x_i = 1^{t−i−1} 0 1^{i+1}`
pub fn st_x(t: usize, i: usize) -> Word {
    ones(t - i - 1).concat(&zero()).concat(&ones(i + 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StFamily {
    pub t: usize,
    pub words: WordSet,
}

pub fn gen_st(t: usize) -> Result<StFamily, FamilyError> {
    if t < 2 {
        return Err(FamilyError::PreconditionViolated(format!("need t >= 2, got {t}")));
    }
    let mut words = vec![zero(), st_y(t)];
    words.extend((0..=t - 2).map(|i| st_x(t, i)));
    let words = WordSet::new(Alphabet::binary(), words).expect("family words are valid");
    Ok(StFamily { t, words })
}

/// `3t·2^{t−2} + 2^{t−1}`
pub fn predicted_sc_st(t: usize) -> u64 {
    assert!(t >= 2);
    3 * t as u64 * (1u64 << (t - 2)) + (1u64 << (t - 1))
}

/// `2^{t−2}`
pub fn st_sc_lower_bound(t: usize) -> u64 {
    assert!(t >= 2);
    1u64 << (t - 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainFamily {
    pub t: usize,
    pub exponent: usize,
    /// The block `0, x_1, …, x_{t−2}, y` repeated `exponent` times.
    pub words: Vec<Word>,
}

pub fn chain_family_exponent(t: usize) -> usize {
    (t + 1) * (t - 2) / 2 + 2 * t
}

pub fn gen_chain_family(t: usize) -> Result<ChainFamily, FamilyError> {
    if t < 3 {
        return Err(FamilyError::PreconditionViolated(format!("need t >= 3, got {t}")));
    }
    let mut block = vec![zero()];
    block.extend((1..=t - 2).map(|i| st_x(t, i)));
    block.push(st_y(t));
    let exponent = chain_family_exponent(t);
    let words = block.iter().cycle().take(block.len() * exponent).cloned().collect();
    Ok(ChainFamily { t, exponent, words })
}

/// The two-length family `S = Σ^m ∪ Σ^n − T(m,n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TmnFamily {
    pub m: usize,
    pub n: usize,
    pub alphabet: Alphabet,
    /// `T(m,n) = { r(i) 0^{2m−n} r(i+1) : 0 ≤ i ≤ |Σ|^{n−m} − 2 }`
    pub excluded: Vec<Word>,
    pub set: WordSet,
    /// `l = m|Σ|^{n−m} + n − m`
    pub threshold: usize,
    /// `τ = r(0) 0^{2m−n} r(1) 0^{2m−n} ⋯ r(|Σ|^{n−m} − 1)`, of length `l − m`.
    pub tau: Word,
}

pub fn gen_tmn(m: usize, n: usize, alphabet: &Alphabet) -> Result<TmnFamily, FamilyError> {
    if !(0 < m && m < n && n < 2 * m) {
        return Err(FamilyError::PreconditionViolated(format!(
            "need 0 < m < n < 2m, got m = {m}, n = {n}"
        )));
    }
    if gcd(m as u64, n as u64) != 1 {
        return Err(FamilyError::PreconditionViolated(format!(
            "need gcd(m, n) = 1, got gcd({m}, {n}) = {}",
            gcd(m as u64, n as u64)
        )));
    }
    let sigma = alphabet.len();
    if sigma < 2 {
        return Err(FamilyError::PreconditionViolated(
            "alphabet needs at least two symbols".into(),
        ));
    }
    let width = n - m;
    let counters = (sigma as u64)
        .checked_pow(width as u32)
        .ok_or_else(|| FamilyError::PreconditionViolated("counter range overflows".into()))?;
    let gap = Word::repeat_symbol(ZERO, 2 * m - n);
    let r = |i: u64| base_repr(i, sigma as u32, width);

    let mut excluded = Vec::with_capacity(counters as usize - 1);
    for i in 0..counters - 1 {
        excluded.push(r(i)?.concat(&gap).concat(&r(i + 1)?));
    }
    let mut tau = r(0)?;
    for i in 1..counters {
        tau = tau.concat(&gap).concat(&r(i)?);
    }

    let mut words: Vec<Word> = alphabet.words_of_length(m).collect();
    words.extend(alphabet.words_of_length(n).filter(|w| !excluded.contains(w)));
    let set = WordSet::new(alphabet.clone(), words).expect("family words are valid");
    Ok(TmnFamily {
        m,
        n,
        alphabet: alphabet.clone(),
        excluded,
        set,
        threshold: two_length_threshold(sigma, m, n),
        tau,
    })
}

impl TmnFamily {
    /// `g(m, l) = m·l − m − l`
    pub fn predicted_longest_omitted(&self) -> usize {
        self.m * self.threshold - self.m - self.threshold
    }

    /// `(τ 0^m)^{i−1} τ`; for `i = m − 1` this has length `g(m, l)`.
    pub fn omitted_witness(&self, i: usize) -> Word {
        assert!(i >= 1);
        let block = self.tau.concat(&Word::repeat_symbol(ZERO, self.m));
        block.pow(i - 1).concat(&self.tau)
    }

    /// `(τ f_1)(τ f_2)⋯(τ f_{i−1}) τ` for fillers `f_j ∈ Σ^m`.
    pub fn filled_witness(&self, fillers: &[Word]) -> Word {
        let mut w = Word::empty();
        for f in fillers {
            debug_assert_eq!(f.len(), self.m);
            w = w.concat(&self.tau).concat(f);
        }
        w.concat(&self.tau)
    }

    /// `2^{|Σ|^{n−m}} − |Σ|^{n−m} − 1`
    pub fn predicted_omitted_count_lb(&self) -> BigUint {
        let c = (self.alphabet.len() as u64).pow((self.n - self.m) as u32);
        let two_pow = BigUint::one() << (c as usize);
        two_pow - BigUint::from(c) - BigUint::one()
    }
}
