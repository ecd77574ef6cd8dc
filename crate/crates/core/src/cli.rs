//! Command-line frontend: the word-set file format, the JSON report, and
//! the `measure`, `gen`, `verify` and `oracle` subcommands.
//!
//! Exit codes: 0 success, 1 invariant violation, 2 resource cap exceeded,
//! 3 bad input.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::automata::{AutomatonError, DEFAULT_STATE_CAP};
use crate::families::{gen_chain_family, gen_st, gen_tmn};
use crate::starlang::{
    member_chain, member_star, measure_all, star_min_dfa, MeasureOptions, StarError, WordSet,
};
use crate::verify::{run_suite, Suite, VerifyParams};
use crate::words::{Alphabet, Word};

/// Environment variable that overrides the determinization cap.
pub const STATE_CAP_ENV: &str = "FROBWORD_STATE_CAP";

const EPSILON: &str = "ε";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

/// A parsed word-set file. `words` keeps file order and duplicates, which
/// matter for the chain `x1*…xk*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSetFile {
    pub alphabet: Alphabet,
    pub words: Vec<Word>,
    pub warnings: Vec<String>,
}

impl WordSetFile {
    pub fn parse(text: &str) -> Result<WordSetFile, ParseError> {
        let mut alphabet: Option<Alphabet> = None;
        let mut words = Vec::new();
        let mut warnings = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: String| ParseError { line, message };
            let Some(alpha) = &alphabet else {
                let Some(decl) = content.strip_prefix("alphabet:") else {
                    return Err(err("expected header `alphabet: <symbols>`".into()));
                };
                let symbols: Vec<char> = decl.chars().filter(|c| !c.is_whitespace()).collect();
                alphabet = Some(Alphabet::new(symbols).map_err(|e| err(e.to_string()))?);
                continue;
            };
            if content == EPSILON {
                warnings.push(format!("line {line}: empty word ignored"));
                continue;
            }
            if content.chars().any(char::is_whitespace) {
                return Err(err(format!("one word per line, got {content:?}")));
            }
            words.push(alpha.word(content).map_err(|e| err(e.to_string()))?);
        }
        let Some(alphabet) = alphabet else {
            return Err(ParseError {
                line: text.lines().count().max(1),
                message: "missing header `alphabet: <symbols>`".into(),
            });
        };
        if words.is_empty() {
            return Err(ParseError {
                line: text.lines().count().max(1),
                message: "no words".into(),
            });
        }
        Ok(WordSetFile { alphabet, words, warnings })
    }

    pub fn word_set(&self) -> Result<WordSet, StarError> {
        WordSet::new(self.alphabet.clone(), self.words.iter().cloned())
    }

    /// Renders a file that parses back to the same alphabet and word list.
    pub fn render(alphabet: &Alphabet, words: &[Word], comment: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(c) = comment {
            for l in c.lines() {
                out.push_str(&format!("# {l}\n"));
            }
        }
        out.push_str(&format!("alphabet: {alphabet}\n"));
        for w in words {
            out.push_str(&alphabet.render(w));
            out.push('\n');
        }
        out
    }
}

/// The measure report, serialized with keys in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub input: String,
    pub alphabet: String,
    pub k: usize,
    pub n: usize,
    pub m_total: usize,
    pub cofinite_star: Option<bool>,
    pub full_language: Option<bool>,
    #[serde(rename = "L")]
    pub l: Option<usize>,
    #[serde(rename = "L_witness")]
    pub l_witness: Option<String>,
    #[serde(rename = "S")]
    pub s: Option<usize>,
    #[serde(rename = "S_prime")]
    pub s_prime: Option<usize>,
    pub cofinite_chain: Option<bool>,
    #[serde(rename = "K")]
    pub k_chain: Option<usize>,
    #[serde(rename = "K_witness")]
    pub k_witness: Option<String>,
    /// Decimal string; counts are unbounded.
    #[serde(rename = "M")]
    pub m: Option<String>,
    pub nfa_bound: usize,
    pub window_dfa_states: Option<usize>,
    pub wall_time_ms: u64,
    /// Why each null field is null.
    pub reasons: BTreeMap<&'static str, &'static str>,
}

const NOT_REQUESTED: &str = "not requested";
const NOT_COFINITE: &str = "not co-finite";
const FULL_LANGUAGE: &str = "full language";

/// Measures `file` and builds the report. `wall_time_ms` covers the
/// measures only.
pub fn measure_report(
    input: &str,
    file: &WordSetFile,
    order: Option<&[Word]>,
    options: MeasureOptions,
) -> Result<ReportJson, crate::Error> {
    let set = file.word_set()?;
    let chain_order = order.unwrap_or(&file.words);
    let started = Instant::now();
    let report = measure_all(&set, Some(chain_order), options)?;
    let wall_time_ms = started.elapsed().as_millis() as u64;
    let alphabet = file.alphabet.clone();
    let render = |w: &Word| alphabet.render(w);

    let mut reasons = BTreeMap::new();
    let mut json = ReportJson {
        input: input.to_string(),
        alphabet: alphabet.to_string(),
        k: report.k,
        n: report.n,
        m_total: report.m_total,
        cofinite_star: None,
        full_language: None,
        l: None,
        l_witness: None,
        s: None,
        s_prime: None,
        cofinite_chain: None,
        k_chain: None,
        k_witness: None,
        m: None,
        nfa_bound: report.nfa_size_bound,
        window_dfa_states: None,
        wall_time_ms,
        reasons: BTreeMap::new(),
    };

    match &report.star {
        Some(star) => {
            json.cofinite_star = Some(star.cofinite);
            json.full_language = Some(star.full_language);
            json.s = Some(star.state_complexity);
            json.window_dfa_states = Some(star.window_dfa_states);
            json.l = star.longest_omitted;
            json.l_witness = star.longest_omitted_witness.as_ref().map(render);
            json.m = star.omitted_count.as_ref().map(|c| c.to_string());
            if !star.cofinite {
                for key in ["L", "L_witness", "M"] {
                    reasons.insert(key, NOT_COFINITE);
                }
            } else if star.full_language {
                reasons.insert("L", FULL_LANGUAGE);
                reasons.insert("L_witness", FULL_LANGUAGE);
            }
        }
        None => {
            for key in ["cofinite_star", "full_language", "L", "L_witness", "S", "M", "window_dfa_states"] {
                reasons.insert(key, NOT_REQUESTED);
            }
        }
    }
    match &report.chain {
        Some(chain) => {
            json.cofinite_chain = Some(chain.cofinite);
            json.s_prime = Some(chain.state_complexity);
            json.k_chain = chain.longest_omitted;
            json.k_witness = chain.longest_omitted_witness.as_ref().map(render);
            if !chain.cofinite {
                reasons.insert("K", NOT_COFINITE);
                reasons.insert("K_witness", NOT_COFINITE);
            } else if chain.full_language {
                reasons.insert("K", FULL_LANGUAGE);
                reasons.insert("K_witness", FULL_LANGUAGE);
            }
        }
        None => {
            for key in ["S_prime", "cofinite_chain", "K", "K_witness"] {
                reasons.insert(key, NOT_REQUESTED);
            }
        }
    }
    json.reasons = reasons;
    Ok(json)
}

#[derive(Debug, Parser)]
#[command(name = "frobword", version, about = "Measures of Kleene closures of finite word sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Measure S* and x1*…xk* for a word-set file.
    Measure(MeasureArgs),
    /// Print a word-set file for one of the extremal families.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Run a verification suite and print a TSV table.
    Verify(VerifyArgs),
    /// Brute-force membership of words in S* and in the chain.
    Oracle {
        file: PathBuf,
        words: Vec<String>,
    },
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    pub file: PathBuf,
    /// Measure S* (default: both).
    #[arg(long)]
    pub star: bool,
    /// Measure the chain x1*…xk* (default: both).
    #[arg(long)]
    pub chain: bool,
    /// Chain order as comma-separated words; defaults to file order.
    #[arg(long, value_delimiter = ',')]
    pub order: Option<Vec<String>>,
    #[arg(long)]
    pub pretty: bool,
    /// Dump the minimal DFA of S* in DOT format to stderr.
    #[arg(long)]
    pub dot: bool,
}

#[derive(Debug, Subcommand)]
pub enum GenFamily {
    /// S_t = {0, x_0, …, x_{t−2}, y}
    St {
        #[arg(long)]
        t: usize,
    },
    /// Σ^m ∪ Σ^n − T(m,n)
    Tmn {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "01")]
        alphabet: String,
    },
    /// The chain (0, x_1, …, x_{t−2}, y) repeated e times
    Chain {
        #[arg(long)]
        t: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Unary,
    Pairs,
    St,
    Tmn,
    ChainCofinite,
    Bounds,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Unary => Suite::Unary,
            SuiteArg::Pairs => Suite::Pairs,
            SuiteArg::St => Suite::St,
            SuiteArg::Tmn => Suite::Tmn,
            SuiteArg::ChainCofinite => Suite::ChainCofinite,
            SuiteArg::Bounds => Suite::Bounds,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: SuiteArg,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Number of random instances (0 keeps the suite default).
    #[arg(long, default_value_t = 0)]
    pub count: usize,
    #[arg(long, default_value_t = 6)]
    pub max_len: usize,
    /// Largest |w|+|x| for the agreement check.
    #[arg(long, default_value_t = 14)]
    pub fw_max: usize,
    #[arg(long, default_value_t = 5)]
    pub t_max: usize,
    #[arg(long, default_value_t = 3)]
    pub m: usize,
    #[arg(long, default_value_t = 5)]
    pub n: usize,
    #[arg(long, default_value = "01")]
    pub alphabet: String,
}

/// A failed command and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Invariant(String),
    ResourceCap(String),
    BadInput(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Invariant(_) => 1,
            Failure::ResourceCap(_) => 2,
            Failure::BadInput(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Invariant(m) | Failure::ResourceCap(m) | Failure::BadInput(m) => f.write_str(m),
        }
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Failure {
        use crate::Error as E;
        let msg = e.to_string();
        match e {
            E::Automaton(AutomatonError::CapExceeded { .. })
            | E::Star(StarError::Automaton(AutomatonError::CapExceeded { .. }))
            | E::Star(StarError::BudgetExceeded { .. })
            | E::Star(StarError::WordTooLong(_)) => Failure::ResourceCap(msg),
            E::Automaton(AutomatonError::NotFinite | AutomatonError::Invalid(_))
            | E::Star(StarError::Automaton(AutomatonError::NotFinite | AutomatonError::Invalid(_))) => {
                Failure::Invariant(msg)
            }
            _ => Failure::BadInput(msg),
        }
    }
}

impl From<StarError> for Failure {
    fn from(e: StarError) -> Failure {
        crate::Error::from(e).into()
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Failure {
        Failure::BadInput(e.to_string())
    }
}

/// The state cap from [`STATE_CAP_ENV`], or the default.
pub fn state_cap_from_env() -> Result<usize, Failure> {
    match std::env::var(STATE_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::BadInput(format!("{STATE_CAP_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_STATE_CAP),
    }
}

fn read_file(path: &PathBuf) -> Result<(String, WordSetFile), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::BadInput(format!("{}: {e}", path.display())))?;
    let file = WordSetFile::parse(&text)
        .map_err(|e| Failure::BadInput(format!("{}: {e}", path.display())))?;
    Ok((path.display().to_string(), file))
}

fn io(e: std::io::Error) -> Failure {
    Failure::Invariant(format!("write failed: {e}"))
}

fn parse_alphabet(text: &str) -> Result<Alphabet, Failure> {
    Alphabet::new(text.chars()).map_err(|e| Failure::BadInput(e.to_string()))
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let state_cap = state_cap_from_env()?;
    match cli.command {
        Command::Measure(args) => cmd_measure(args, state_cap, out, err),
        Command::Gen { family } => cmd_gen(family, out),
        Command::Verify(args) => cmd_verify(args, state_cap, out, err),
        Command::Oracle { file, words } => cmd_oracle(&file, &words, out, err),
    }
}

fn cmd_measure(args: MeasureArgs, state_cap: usize, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let (input, file) = read_file(&args.file)?;
    for w in &file.warnings {
        writeln!(err, "warning: {w}").map_err(io)?;
    }
    let order = match &args.order {
        Some(list) => {
            let words = list
                .iter()
                .map(|s| file.alphabet.word(s.trim()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::BadInput(format!("--order: {e}")))?;
            if let Some(w) = words.iter().find(|w| !file.words.contains(w)) {
                return Err(Failure::BadInput(format!(
                    "--order: {} is not in the file",
                    file.alphabet.render(w)
                )));
            }
            Some(words)
        }
        None => None,
    };
    let both = !args.star && !args.chain;
    let options = MeasureOptions {
        star: both || args.star,
        chain: both || args.chain,
        state_cap,
    };
    let report = measure_report(&input, &file, order.as_deref(), options)?;
    let text = if args.pretty {
        serde_json::to_string_pretty(&report)
    } else {
        serde_json::to_string(&report)
    }
    .map_err(|e| Failure::Invariant(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)?;
    if args.dot {
        let dfa = star_min_dfa(&file.word_set()?, state_cap)?;
        write!(err, "{}", dfa.to_dot()).map_err(io)?;
    }
    Ok(())
}

fn cmd_gen(family: GenFamily, out: &mut dyn Write) -> Result<(), Failure> {
    let bad = |e: crate::families::FamilyError| Failure::BadInput(e.to_string());
    let text = match family {
        GenFamily::St { t } => {
            let fam = gen_st(t).map_err(bad)?;
            WordSetFile::render(&Alphabet::binary(), fam.words.words(), Some(&format!("S_{t}")))
        }
        GenFamily::Tmn { m, n, alphabet } => {
            let alphabet = parse_alphabet(&alphabet)?;
            let fam = gen_tmn(m, n, &alphabet).map_err(bad)?;
            WordSetFile::render(&alphabet, fam.set.words(), Some(&format!("Σ^{m} ∪ Σ^{n} − T({m},{n})")))
        }
        GenFamily::Chain { t } => {
            let fam = gen_chain_family(t).map_err(bad)?;
            WordSetFile::render(
                &Alphabet::binary(),
                &fam.words,
                Some(&format!("chain family t = {t}, e = {}", fam.exponent)),
            )
        }
    };
    out.write_all(text.as_bytes()).map_err(io)
}

fn cmd_verify(args: VerifyArgs, state_cap: usize, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let params = VerifyParams {
        seed: args.seed,
        count: args.count,
        max_len: args.max_len,
        fine_wilf_max_total: args.fw_max,
        t_max: args.t_max,
        m: args.m,
        n: args.n,
        alphabet: parse_alphabet(&args.alphabet)?,
        state_cap,
    };
    let suite: Suite = args.suite.into();
    let report = run_suite(suite, &params)?;
    out.write_all(report.to_tsv().as_bytes()).map_err(io)?;
    let failed = report.failures().count();
    writeln!(err, "{suite}: {} rows, {failed} failed", report.rows.len()).map_err(io)?;
    if failed > 0 {
        Err(Failure::Invariant(format!("{suite}: {failed} rows failed")))
    } else {
        Ok(())
    }
}

fn cmd_oracle(path: &PathBuf, words: &[String], out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let (_, file) = read_file(path)?;
    for w in &file.warnings {
        writeln!(err, "warning: {w}").map_err(io)?;
    }
    let set = file.word_set()?;
    writeln!(out, "word\tstar\tchain").map_err(io)?;
    for text in words {
        let w = if text == EPSILON {
            Word::empty()
        } else {
            file.alphabet
                .word(text)
                .map_err(|e| Failure::BadInput(e.to_string()))?
        };
        writeln!(out, "{text}\t{}\t{}", member_star(&set, &w), member_chain(&file.words, &w)).map_err(io)?;
    }
    Ok(())
}
