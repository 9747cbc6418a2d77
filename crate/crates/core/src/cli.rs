//! Command-line front end. Exit codes: 0 success, 1 a falsified verdict or a
//! failed computation, 2 a usage error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::band::{ConjugacyCache, SearchBudget};
use crate::braid::{parse_word, parse_word_in, Alphabet, BraidError, BraidWord, Generator};
use crate::invariants::TwistFamily;
use crate::surgery::{certify_with_cache, PropertyPReport};
use crate::verifier::{
    enumerate_cases, run_theorem4_check, standard_families, st_exhaustive, st_random, verify_theorem3, CaseRow,
    EnumerationMode, EnumerationOptions, STReport, Theorem3Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Parser)]
#[command(name = "knotcert", version, about = "Property P certificates for closed braids")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Certify the closure of one braid word.
    Analyze(AnalyzeArgs),
    /// Tabulate the delta^k P N cases of minimal 3-braid words.
    Enumerate(EnumerateArgs),
    /// Check that every minimal 3-braid knot has two Gabai disks unless it is the trefoil or 5_2.
    #[command(name = "verify-theorem4")]
    VerifyTheorem4(VerifyArgs),
    /// Fit v2 along twist families and check the quadratic.
    Family(FamilyArgs),
    /// Check the two-of-three property of -chi under crossing changes.
    #[command(name = "st-check")]
    StCheck(StArgs),
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    /// Maximum number of states explored by one conjugacy search.
    #[arg(long = "search-budget", default_value_t = SearchBudget::default().max_states)]
    pub search_budget: usize,
}

impl BudgetArgs {
    fn cache(&self) -> ConjugacyCache {
        ConjugacyCache::new(SearchBudget { max_states: self.search_budget, ..SearchBudget::default() })
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Also write the JSON output to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct AnalyzeArgs {
    /// Braid word, e.g. "a12^2 a23 a13" or "s1 s2^-1 s1 s2^-1".
    pub word: String,
    #[arg(long, default_value_t = 3)]
    pub strands: usize,
    /// Read the word in the band alphabet a12, a23, a13.
    #[arg(long, conflicts_with = "standard")]
    pub band: bool,
    /// Read the word in the standard alphabet s1, s2, ...
    #[arg(long)]
    pub standard: bool,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Clone, Args)]
pub struct EnumerateArgs {
    #[arg(long, default_value_t = 4)]
    pub maxp: usize,
    #[arg(long, default_value_t = 4)]
    pub maxn: usize,
    /// Every delta-free P and N instead of the seven-word reduction.
    #[arg(long)]
    pub brute: bool,
    /// Keep equal-length cases whose negative part contains a square.
    #[arg(long)]
    pub no_square_filter: bool,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 4)]
    pub maxp: usize,
    #[arg(long, default_value_t = 4)]
    pub maxn: usize,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// Template word; without it the built-in families are checked.
    #[arg(long, requires = "strands")]
    pub template: Option<String>,
    #[arg(long)]
    pub strands: Option<usize>,
    /// Insertion position in the template.
    #[arg(long, default_value_t = 0)]
    pub position: usize,
    /// Index i of the twisted generator s_i.
    #[arg(long, default_value_t = 1)]
    pub generator: u16,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct StArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Random minimal words of length 4 to 10.
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    /// Check every minimal word up to this length.
    #[arg(long, default_value_t = 6)]
    pub exhaustive_length: usize,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match CliConfig::try_parse_from(args) {
        Ok(config) => run(config, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            code
        }
    }
}

pub fn run(config: CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &config.command {
        Command::Analyze(a) => analyze(a, out),
        Command::Enumerate(a) => enumerate(a, out),
        Command::VerifyTheorem4(a) => verify4(a, out),
        Command::Family(a) => family(a, out),
        Command::StCheck(a) => st_check(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FALSIFIED
        }
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn runtime<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Runtime(e.to_string())
}

fn usage(e: BraidError) -> Failure {
    Failure::Usage(e.to_string())
}

fn emit<T: Serialize>(
    value: &T,
    output: &OutputArgs,
    out: &mut dyn Write,
    text: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> Result<(), Failure> {
    let json = serde_json::to_string_pretty(value).map_err(runtime)?;
    if output.json {
        writeln!(out, "{json}")?;
    } else {
        text(out)?;
    }
    if let Some(path) = &output.out {
        fs::write(path, format!("{json}\n"))?;
    }
    Ok(())
}

fn parse_input(a: &AnalyzeArgs) -> Result<BraidWord, Failure> {
    if a.band {
        parse_word_in(&a.word, a.strands, Alphabet::Band).map_err(usage)
    } else if a.standard {
        parse_word_in(&a.word, a.strands, Alphabet::Standard).map_err(usage)
    } else {
        parse_word(&a.word, a.strands).map_err(usage)
    }
}

fn write_report(r: &PropertyPReport, out: &mut dyn Write) -> std::io::Result<()> {
    let plural = if r.components == 1 { "" } else { "s" };
    writeln!(out, "input: {} ({} strands, {} component{plural})", r.input, r.strands, r.components)?;
    writeln!(out, "conclusion: {}", r.conclusion)?;
    if let (Some(l), Some(w)) = (r.minimal_length, &r.minimal_word) {
        writeln!(out, "minimal length: {l} ({w})")?;
    }
    if let Some(g) = r.genus {
        writeln!(out, "genus: {}", crate::rational_string(&g))?;
    }
    if let (Some(a), Some(v)) = (&r.alexander, r.v2) {
        writeln!(out, "alexander: {a}")?;
        writeln!(out, "v2: {v}")?;
    }
    if let Some(c) = &r.census {
        let ev: Vec<String> = c.evidence.iter().map(|e| e.to_string()).collect();
        writeln!(out, "census: {}", if ev.is_empty() { "none".to_string() } else { ev.join(", ") })?;
    }
    for i in &r.intervals {
        writeln!(out, "interval ({}, {}) {} [{}]", i.lo, i.hi, i.rule.tag(), i.witness.as_deref().unwrap_or("-"))?;
    }
    for route in &r.routes {
        let kind = serde_json::to_value(route.kind).unwrap_or_default();
        writeln!(out, "route {}: {}", kind.as_str().unwrap_or_default(), route.cite)?;
    }
    for n in &r.notes {
        writeln!(out, "note: {n}")?;
    }
    Ok(())
}

fn analyze(a: &AnalyzeArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let w = parse_input(a)?;
    let report = certify_with_cache(&w, &a.budget.cache());
    emit(&report, &a.output, out, |o| write_report(&report, o))?;
    Ok(EXIT_OK)
}

fn write_rows(rows: &[CaseRow], out: &mut dyn Write) -> std::io::Result<()> {
    for r in rows {
        writeln!(
            out,
            "{:<40} k={:<2} components={} min_length={:<2} minimal={:<5} gabai={} {}{}",
            r.word.to_string(),
            r.k,
            r.components,
            r.min_length,
            r.minimal,
            r.gabai_count,
            r.identification,
            r.note.as_ref().map(|n| format!(" ({n})")).unwrap_or_default()
        )?;
    }
    Ok(())
}

fn enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let opts = EnumerationOptions {
        max_p: a.maxp,
        max_n: a.maxn,
        mode: if a.brute { EnumerationMode::Brute } else { EnumerationMode::Reduced },
        square_filter: !a.no_square_filter,
    };
    let rows = enumerate_cases(&opts, &a.budget.cache()).map_err(runtime)?;
    emit(&rows, &a.output, out, |o| write_rows(&rows, o))?;
    Ok(EXIT_OK)
}

fn verify4(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (report, _) = run_theorem4_check(a.maxp, a.maxn, &a.budget.cache()).map_err(runtime)?;
    emit(&report, &a.output, out, |o| {
        let names = |v: &crate::verifier::Theorem4Verdict| v.exceptions.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ");
        writeln!(o, "bounds: |P| <= {}, |N| <= {}", report.max_p, report.max_n)?;
        writeln!(o, "reduced: {} knot rows, exceptions {{{}}}", report.reduced.knot_rows, names(&report.reduced))?;
        writeln!(o, "brute force: {} knot rows, exceptions {{{}}}", report.brute.knot_rows, names(&report.brute))?;
        for v in report.reduced.violations.iter().chain(&report.brute.violations) {
            writeln!(o, "violation: {} ({} Gabai disks)", v.word, v.gabai_count)?;
        }
        for g in &report.reduction_gaps {
            writeln!(o, "missed by the reduction: {g}")?;
        }
        if report.square_filter_discrepancy {
            writeln!(o, "square filter changes the outcome")?;
        }
        for i in &report.identities {
            writeln!(o, "identity {} = {}: rewriting {}, Burau {}", i.lhs, i.rhs, i.rewrites_agree, i.burau_agree)?;
        }
        for l in &report.links {
            writeln!(o, "link {}: {} components", l.word, l.components)?;
        }
        writeln!(o, "verdict: {}", if report.holds { "holds" } else { "FALSIFIED" })
    })?;
    Ok(if report.holds { EXIT_OK } else { EXIT_FALSIFIED })
}

#[derive(Serialize)]
struct FamilyResult {
    family: String,
    verdict: Theorem3Verdict,
}

fn family(a: &FamilyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let families = match (&a.template, a.strands) {
        (Some(t), Some(n)) => {
            let template = parse_word_in(t, n, Alphabet::Standard).map_err(usage)?;
            if a.position > template.len() {
                return Err(Failure::Usage(format!("position {} beyond template of length {}", a.position, template.len())));
            }
            let f = TwistFamily::new(template, a.position, Generator::Std(a.generator)).map_err(|e| Failure::Usage(e.to_string()))?;
            vec![(format!("{t} with s{}^n at {}", a.generator, a.position), f)]
        }
        _ => standard_families(),
    };
    let results: Vec<FamilyResult> = families
        .into_iter()
        .map(|(family, f)| Ok(FamilyResult { family, verdict: verify_theorem3(&f).map_err(runtime)? }))
        .collect::<Result<_, Failure>>()?;
    let holds = results.iter().all(|r| r.verdict.holds);
    emit(&results, &a.output, out, |o| {
        for r in &results {
            let q = &r.verdict.quadratic;
            let roots: Vec<String> = r.verdict.rational_roots.iter().map(crate::rational_string).collect();
            writeln!(
                o,
                "{}: v2(n) = {} n^2 + {} n + {}; roots [{}]; zero samples {:?}; {}",
                r.family,
                crate::rational_string(&q.a2),
                crate::rational_string(&q.a1),
                crate::rational_string(&q.a0),
                roots.join(", "),
                r.verdict.zero_samples,
                if r.verdict.holds { "holds" } else { "FALSIFIED" }
            )?;
        }
        Ok(())
    })?;
    Ok(if holds { EXIT_OK } else { EXIT_FALSIFIED })
}

#[derive(Serialize)]
struct StResult {
    exhaustive_length: usize,
    exhaustive: STReport,
    seed: u64,
    random: STReport,
}

fn st_check(a: &StArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let cache = a.budget.cache();
    let exhaustive = st_exhaustive(a.exhaustive_length, &cache).map_err(runtime)?;
    let random = st_random(a.samples, a.seed, &cache).map_err(runtime)?;
    let res = StResult { exhaustive_length: a.exhaustive_length, exhaustive, seed: a.seed, random };
    let holds = res.exhaustive.holds() && res.random.holds();
    emit(&res, &a.output, out, |o| {
        writeln!(o, "exhaustive (length <= {}): {} words, {} triples, {} violations", res.exhaustive_length, res.exhaustive.words, res.exhaustive.triples, res.exhaustive.violations.len())?;
        writeln!(o, "random (seed {}): {} words, {} triples, {} violations", res.seed, res.random.words, res.random.triples, res.random.violations.len())?;
        for v in res.exhaustive.violations.iter().chain(&res.random.violations) {
            writeln!(o, "violation: {} at {}: ({}, {}, {})", v.word, v.position, v.chi_plus, v.chi_minus, v.chi_zero + 1)?;
        }
        Ok(())
    })?;
    Ok(if holds { EXIT_OK } else { EXIT_FALSIFIED })
}
