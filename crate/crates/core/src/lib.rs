//! Frobenius-style measures for Kleene closures of finite word sets.
//!
//! Given a finite set `S` of words over a declared alphabet, this crate
//! decides whether `S*` (or the ordered product `x1* x2* ⋯ xk*`) omits only
//! finitely many words, and computes the size of what is omitted: the
//! longest omitted word, the number of omitted words, and the state
//! complexity of the closure. The classical numerical Frobenius number is
//! the unary special case.
//!
//! Modules, bottom-up:
//! - [`numeric`]: gcd, Frobenius number and Sylvester count.
//! - [`words`]: alphabets, words, and two-word combinatorics.
//! - [`automata`]: determinization, minimization, finiteness and counting.
//! - [`starlang`]: automata for `S*` and `x1*…xk*`, membership oracles, measures.
//! - [`families`]: the extremal word-set families.
//! - [`verify`]: property suites comparing predictions with computed values.
//! - [`cli`]: the `frobword` command-line frontend.

pub mod automata;
pub mod cli;
pub mod families;
pub mod numeric;
pub mod starlang;
pub mod verify;
pub mod words;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Numeric(#[from] numeric::NumericError),
    #[error(transparent)]
    Word(#[from] words::WordError),
    #[error(transparent)]
    Automaton(#[from] automata::AutomatonError),
    #[error(transparent)]
    Star(#[from] starlang::StarError),
    #[error(transparent)]
    Family(#[from] families::FamilyError),
}
