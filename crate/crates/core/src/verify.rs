//! Property suites that compare predicted values with values computed by
//! the automaton engine, at desk scale. Each suite produces one row per
//! instance; a suite passes when every row does.

use std::fmt;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::automata::{
    determinize, equivalent, is_cofinite, minimize, state_complexity,
    DEFAULT_STATE_CAP,
};
use crate::families::{gen_st, gen_tmn, predicted_sc_st, st_sc_lower_bound};
use crate::numeric::{gcd, gcd_all, predicted_unary_sc, PosIntList};
use crate::starlang::{
    chain_cofinite, chain_cofinite_by_automaton, chain_min_dfa, measure_star, member_star,
    omitted_count_bound, star_min_dfa, trie_star_nfa, two_length_cofinite, unary_set,
    window_star_dfa, window_state_bound, WordSet, DEFAULT_EXHAUSTIVE_BUDGET,
};
use crate::words::{
    all_words, commutes, fine_wilf_agreement, predicted_sc_pair_concat, predicted_sc_pair_star,
    prefix_suffix_condition, Agreement, Alphabet, Word,
};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Unary,
    Pairs,
    St,
    Tmn,
    ChainCofinite,
    Bounds,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Unary => "unary",
            Suite::Pairs => "pairs",
            Suite::St => "st",
            Suite::Tmn => "tmn",
            Suite::ChainCofinite => "chain-cofinite",
            Suite::Bounds => "bounds",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub instance: String,
    pub predicted: String,
    pub actual: String,
    pub ok: bool,
}

impl Row {
    fn new(instance: impl Into<String>, predicted: impl fmt::Display, actual: impl fmt::Display, ok: bool) -> Row {
        Row {
            instance: instance.into(),
            predicted: predicted.to_string(),
            actual: actual.to_string(),
            ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub rows: Vec<Row>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.ok)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("instance\tpredicted\tactual\tstatus\n");
        for r in &self.rows {
            let status = if r.ok { "ok" } else { "FAIL" };
            out.push_str(&format!("{}\t{}\t{}\t{status}\n", r.instance, r.predicted, r.actual));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyParams {
    pub seed: u64,
    pub count: usize,
    pub max_len: usize,
    pub fine_wilf_max_total: usize,
    pub t_max: usize,
    pub m: usize,
    pub n: usize,
    pub alphabet: Alphabet,
    pub state_cap: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            seed: 0x5eed,
            count: 0,
            max_len: 6,
            fine_wilf_max_total: 14,
            t_max: 5,
            m: 3,
            n: 5,
            alphabet: Alphabet::binary(),
            state_cap: DEFAULT_STATE_CAP,
        }
    }
}

impl VerifyParams {
    fn count_or(&self, default: usize) -> usize {
        if self.count == 0 {
            default
        } else {
            self.count
        }
    }
}

pub fn run_suite(suite: Suite, params: &VerifyParams) -> Result<SuiteReport, Error> {
    let rows = match suite {
        Suite::Unary => unary_rows(params)?,
        Suite::Pairs => pair_rows(params)?,
        Suite::St => st_rows(params)?,
        Suite::Tmn => tmn_rows(params)?,
        Suite::ChainCofinite => chain_cofinite_rows(params)?,
        Suite::Bounds => bounds_rows(params)?,
    };
    Ok(SuiteReport { suite, rows })
}

/// Random tuples of `k ≤ 4` lengths, each in `1..=20`.
pub fn random_unary_tuples(seed: u64, count: usize) -> Vec<PosIntList> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=4);
            PosIntList::new((0..k).map(|_| rng.gen_range(1..=20u64))).unwrap()
        })
        .collect()
}

fn unary_rows(p: &VerifyParams) -> Result<Vec<Row>, Error> {
    random_unary_tuples(p.seed, p.count_or(50))
        .par_iter()
        .map(|xs| {
            let actual = state_complexity(&star_min_dfa(&unary_set(xs), p.state_cap)?);
            let predicted = predicted_unary_sc(xs) as usize;
            Ok(Row::new(
                format!("a={:?} d={}", xs.values(), gcd_all(xs)),
                predicted,
                actual,
                predicted == actual,
            ))
        })
        .collect()
}

/// All nonempty binary words of length at most `max_len`, shortlex.
pub fn binary_words_up_to(max_len: usize) -> Vec<Word> {
    (1..=max_len).flat_map(|l| all_words(2, l)).collect()
}

fn pair_rows(p: &VerifyParams) -> Result<Vec<Row>, Error> {
    let a = Alphabet::binary();
    let words = binary_words_up_to(p.max_len);
    let mut rows = Vec::new();

    struct PairOutcome {
        lens: (usize, usize),
        commuting: bool,
        star: (usize, usize),
        concat: (usize, usize),
    }
    let outcomes: Vec<PairOutcome> = words
        .par_iter()
        .flat_map_iter(|w| words.iter().map(move |x| (w, x)))
        .map(|(w, x)| {
            let star_set = WordSet::new(a.clone(), [w.clone(), x.clone()])?;
            let star = state_complexity(&star_min_dfa(&star_set, p.state_cap)?);
            let concat = state_complexity(&chain_min_dfa(&a, &[w.clone(), x.clone()], p.state_cap)?);
            Ok(PairOutcome {
                lens: (w.len(), x.len()),
                commuting: commutes(w, x),
                star: (predicted_sc_pair_star(w, x).value, star),
                concat: (predicted_sc_pair_concat(w, x).value, concat),
            })
        })
        .collect::<Result<_, Error>>()?;

    for lw in 1..=p.max_len {
        for lx in 1..=p.max_len {
            let group: Vec<&PairOutcome> = outcomes.iter().filter(|o| o.lens == (lw, lx)).collect();
            let free: Vec<_> = group.iter().filter(|o| !o.commuting).collect();
            let max_star = free.iter().map(|o| o.star.1).max().unwrap_or(0);
            let max_concat = free.iter().map(|o| o.concat.1).max().unwrap_or(0);
            rows.push(Row::new(
                format!("star non-commuting |w|={lw} |x|={lx}"),
                format!("<= {}", lw + lx),
                format!("max {max_star}"),
                max_star <= lw + lx,
            ));
            rows.push(Row::new(
                format!("concat non-commuting |w|={lw} |x|={lx}"),
                format!("<= {}", lw + 2 * lx),
                format!("max {max_concat}"),
                max_concat <= lw + 2 * lx,
            ));
            let comm: Vec<_> = group.iter().filter(|o| o.commuting).collect();
            if !comm.is_empty() {
                let mismatches = comm
                    .iter()
                    .filter(|o| o.star.0 != o.star.1 || o.concat.0 != o.concat.1)
                    .count();
                rows.push(Row::new(
                    format!("commuting |w|={lw} |x|={lx} ({} pairs)", comm.len()),
                    "exact",
                    format!("{mismatches} mismatches"),
                    mismatches == 0,
                ));
            }
        }
    }
    let tight_star = outcomes
        .iter()
        .filter(|o| !o.commuting && o.star.1 == o.star.0)
        .count();
    let tight_concat = outcomes
        .iter()
        .filter(|o| !o.commuting && o.concat.1 == o.concat.0)
        .count();
    rows.push(Row::new("star bound tightness witnesses", ">= 1", tight_star, tight_star >= 1));
    rows.push(Row::new("concat bound tightness witnesses", ">= 1", tight_concat, tight_concat >= 1));

    // agreement of infinite products
    let total = p.fine_wilf_max_total;
    let by_lengths: Vec<(usize, usize)> = (1..total)
        .flat_map(|lw| (1..=total - lw).map(move |lx| (lw, lx)))
        .collect();
    let fw: Vec<Row> = by_lengths
        .par_iter()
        .map(|&(lw, lx)| {
            let bound = lw + lx - gcd(lw as u64, lx as u64) as usize - 1;
            let mut worst = 0usize;
            let mut equivalence_ok = true;
            let xs: Vec<Word> = all_words(2, lx).collect();
            for w in all_words(2, lw) {
                for x in &xs {
                    let agreement = fine_wilf_agreement(&w, x);
                    match agreement {
                        Agreement::Infinite => equivalence_ok &= commutes(&w, x),
                        Agreement::Finite(v) => {
                            equivalence_ok &= !commutes(&w, x);
                            worst = worst.max(v);
                        }
                    }
                }
            }
            Row::new(
                format!("agreement |w|={lw} |x|={lx}"),
                format!("<= {bound}"),
                format!("max {worst}"),
                worst <= bound && equivalence_ok,
            )
        })
        .collect();
    rows.extend(fw);
    Ok(rows)
}

fn st_rows(p: &VerifyParams) -> Result<Vec<Row>, Error> {
    let mut rows = Vec::new();
    for t in 2..=p.t_max.max(2) {
        let fam = gen_st(t)?;
        let dfa = determinize(&trie_star_nfa(&fam.words), p.state_cap)?;
        let sc = state_complexity(&dfa) as u64;
        let predicted = predicted_sc_st(t);
        rows.push(Row::new(format!("sc(S_{t}*)"), predicted, sc, sc == predicted));
        let lb = st_sc_lower_bound(t);
        rows.push(Row::new(format!("sc(S_{t}*) lower bound"), format!(">= {lb}"), sc, sc >= lb));
    }
    Ok(rows)
}

/// Every word of `Σ^len` as a list, or `samples` random ones when there are
/// more than `limit`.
fn fillers(alphabet: &Alphabet, len: usize, limit: usize, samples: usize, rng: &mut ChaCha8Rng) -> Vec<Word> {
    let total = (alphabet.len() as u128).pow(len as u32);
    if total <= limit as u128 {
        alphabet.words_of_length(len).collect()
    } else {
        (0..samples)
            .map(|_| Word((0..len).map(|_| rng.gen_range(0..alphabet.len() as u8)).collect()))
            .collect()
    }
}

fn tmn_rows(p: &VerifyParams) -> Result<Vec<Row>, Error> {
    let fam = gen_tmn(p.m, p.n, &p.alphabet)?;
    let label = format!("T({},{}) |Σ|={}", p.m, p.n, p.alphabet.len());
    let mut rows = Vec::new();
    let exhaustive = two_length_cofinite(&fam.set, fam.m, fam.n, DEFAULT_EXHAUSTIVE_BUDGET)?;
    rows.push(Row::new(format!("{label} criterion co-finite"), true, exhaustive, exhaustive));

    let star = measure_star(&fam.set, p.state_cap)?;
    rows.push(Row::new(format!("{label} automaton co-finite"), true, star.cofinite, star.cofinite));
    let predicted = fam.predicted_longest_omitted();
    let longest = star.longest_omitted.map_or("none".to_string(), |l| l.to_string());
    rows.push(Row::new(
        format!("{label} longest omitted"),
        predicted,
        &longest,
        star.longest_omitted == Some(predicted),
    ));
    let tau_out = !member_star(&fam.set, &fam.tau);
    rows.push(Row::new(format!("{label} tau omitted"), true, tau_out, tau_out));
    let witness = fam.omitted_witness(fam.m - 1);
    let witness_out = !member_star(&fam.set, &witness) && witness.len() == predicted;
    rows.push(Row::new(
        format!("{label} witness {}", p.alphabet.render(&witness)),
        "omitted",
        if witness_out { "omitted" } else { "member" },
        witness_out,
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let pool = fillers(&p.alphabet, fam.m, 64, 16, &mut rng);
    for i in 1..fam.m {
        // all (i−1)-tuples of fillers from the pool, capped
        let mut tuples: Vec<Vec<Word>> = vec![Vec::new()];
        for _ in 1..i {
            tuples = tuples
                .iter()
                .flat_map(|t| {
                    pool.iter().map(move |f| {
                        let mut t = t.clone();
                        t.push(f.clone());
                        t
                    })
                })
                .collect();
            if tuples.len() > 4096 {
                tuples.shuffle(&mut rng);
                tuples.truncate(4096);
            }
        }
        let members = tuples
            .iter()
            .filter(|t| member_star(&fam.set, &fam.filled_witness(t)))
            .count();
        rows.push(Row::new(
            format!("{label} (tau Σ^m)^{} tau, {} samples", i - 1, tuples.len()),
            "0 members",
            format!("{members} members"),
            members == 0,
        ));
    }

    let lb = fam.predicted_omitted_count_lb();
    match &star.omitted_count {
        Some(count) => rows.push(Row::new(format!("{label} omitted count"), format!(">= {lb}"), count, *count >= lb)),
        None => rows.push(Row::new(format!("{label} omitted count"), format!(">= {lb}"), "infinite", false)),
    }

    // removing any length-m word destroys co-finiteness
    if p.alphabet.len().pow(fam.m as u32) <= 64 {
        let mut broken = 0;
        let mut total = 0;
        for drop in p.alphabet.words_of_length(fam.m) {
            let words = fam.set.words().iter().filter(|w| **w != drop).cloned();
            let smaller = WordSet::new(p.alphabet.clone(), words)?;
            total += 1;
            if !is_cofinite(&window_star_dfa(&smaller, p.state_cap)?) {
                broken += 1;
            }
        }
        rows.push(Row::new(
            format!("{label} drop one length-m word"),
            format!("{total} not co-finite"),
            format!("{broken} not co-finite"),
            broken == total,
        ));
    }
    Ok(rows)
}

/// Random chain inputs over unary and binary alphabets.
pub fn random_chain_inputs(seed: u64, count: usize) -> Vec<(Alphabet, Vec<Word>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let sigma = if i % 2 == 0 { 1 } else { 2 };
            let k = rng.gen_range(1..=4);
            // alternate between coprime-prone and shared-factor lengths
            let factor = if rng.gen_bool(0.3) { rng.gen_range(2..=3) } else { 1 };
            let words = (0..k)
                .map(|_| {
                    let len = factor * rng.gen_range(1..=4usize);
                    Word((0..len).map(|_| rng.gen_range(0..sigma as u8)).collect())
                })
                .collect();
            (Alphabet::digits(sigma), words)
        })
        .collect()
}

fn chain_cofinite_rows(p: &VerifyParams) -> Result<Vec<Row>, Error> {
    random_chain_inputs(p.seed, p.count_or(100))
        .par_iter()
        .map(|(alphabet, xs)| {
            let formula = chain_cofinite(xs, alphabet);
            let automaton = chain_cofinite_by_automaton(xs, alphabet, p.state_cap)?;
            let words: Vec<String> = xs.iter().map(|x| alphabet.render(x)).collect();
            Ok(Row::new(
                format!("Σ={alphabet} xs={}", words.join(",")),
                formula,
                automaton,
                formula == automaton,
            ))
        })
        .collect()
}

/// A random word set over `alphabet` with words of length at most
/// `max_len`, drawn from a mix of strategies so that co-finite closures are
/// well represented.
pub fn random_word_set(rng: &mut impl Rng, alphabet: &Alphabet, max_len: usize) -> WordSet {
    let sigma = alphabet.len();
    let random_word = |rng: &mut dyn rand::RngCore, len: usize| {
        Word((0..len).map(|_| rng.gen_range(0..sigma as u8)).collect())
    };
    let words: Vec<Word> = match rng.gen_range(0..4) {
        // sparse uniform
        0 => {
            let k = rng.gen_range(1..=5);
            (0..k)
                .map(|_| {
                    let len = rng.gen_range(1..=max_len);
                    random_word(rng, len)
                })
                .collect()
        }
        // every word of one length m ≥ 2 plus a thinned longer length
        1 | 2 if max_len >= 3 => {
            let m = rng.gen_range(2..max_len);
            let n = rng.gen_range(m + 1..=max_len);
            let keep = rng.gen_range(0.6..1.0);
            let mut ws: Vec<Word> = alphabet.words_of_length(m).collect();
            ws.extend(alphabet.words_of_length(n).filter(|_| rng.gen_bool(keep)));
            ws
        }
        // all single letters but one, plus words using the missing letter
        _ => {
            let missing = rng.gen_range(0..sigma as u8);
            let mut ws: Vec<Word> = (0..sigma as u8).filter(|&s| s != missing).map(|s| Word(vec![s])).collect();
            let k = rng.gen_range(1..=4);
            for _ in 0..k {
                let len = rng.gen_range(2..=max_len.max(2)).min(max_len);
                let mut w = random_word(rng, len);
                let pos = rng.gen_range(0..w.len());
                w.0[pos] = missing;
                ws.push(w);
            }
            ws
        }
    };
    let words = if words.is_empty() {
        vec![Word(vec![0])]
    } else {
        words
    };
    WordSet::new(alphabet.clone(), words).expect("generated words are valid")
}

/// `count` random binary and ternary word sets with words of length ≤ `max_len`.
pub fn random_corpus(seed: u64, count: usize, max_len: usize) -> Vec<WordSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let alphabet = Alphabet::digits(if i % 3 == 2 { 3 } else { 2 });
            random_word_set(&mut rng, &alphabet, max_len)
        })
        .collect()
}

fn bounds_rows(p: &VerifyParams) -> Result<Vec<Row>, Error> {
    let corpus = random_corpus(p.seed, p.count_or(200), p.max_len.min(4));
    let per_set: Vec<Vec<Row>> = corpus
        .par_iter()
        .map(|set| bounds_for_set(set, p.state_cap))
        .collect::<Result<_, Error>>()?;
    Ok(per_set.into_iter().flatten().collect())
}

fn bounds_for_set(set: &WordSet, cap: usize) -> Result<Vec<Row>, Error> {
    let name = format!("Σ={} S={{{}}}", set.alphabet(), set.render().join(","));
    let sigma = set.alphabet().len();
    let (m, k, n) = (set.m_total(), set.k(), set.n());
    let mut rows = Vec::new();

    let window = window_star_dfa(set, cap)?;
    let trie = trie_star_nfa(set);
    let subset = determinize(&trie, cap)?;
    let same = equivalent(&window, &subset)?;
    rows.push(Row::new(format!("{name} window≡subset"), true, same, same));

    let q = window_state_bound(sigma, n);
    let states = BigUint::from(window.state_count());
    rows.push(Row::new(format!("{name} window states"), format!("<= {q}"), &states, states <= q));
    rows.push(Row::new(
        format!("{name} trie states"),
        format!("<= {}", m - k + 1),
        trie.state_count(),
        trie.state_count() <= m - k + 1,
    ));

    let minimal = minimize(&window);
    let sc = minimal.state_count();
    let subset_bound = BigUint::from(2u32).pow((m - k + 1) as u32);
    rows.push(Row::new(
        format!("{name} sc"),
        format!("<= {subset_bound}"),
        sc,
        BigUint::from(sc) <= subset_bound,
    ));
    if set.is_prefix_free() {
        rows.push(Row::new(
            format!("{name} prefix-free sc"),
            format!("<= {}", m - k + 2),
            sc,
            sc <= m - k + 2,
        ));
    }

    if is_cofinite(&minimal) {
        let star = measure_star(set, cap)?;
        if let Some(l) = star.longest_omitted {
            rows.push(Row::new(
                format!("{name} longest omitted"),
                format!("< {q}"),
                l,
                BigUint::from(l) < q,
            ));
            let necessary = prefix_suffix_condition(set.words());
            rows.push(Row::new(format!("{name} prefix/suffix condition"), true, necessary, necessary));
        }
        let count = star.omitted_count.expect("co-finite star has a count");
        let bound = omitted_count_bound(sigma, n);
        let ok = count <= bound;
        rows.push(Row::new(format!("{name} omitted count"), "<= count bound", count, ok));
    }
    Ok(rows)
}
