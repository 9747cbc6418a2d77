//! Re-checks of the finite claims about 3-braids: the case list of minimal
//! `delta^k P N` knot words and their Gabai disks, the two-of-three property
//! of `-chi` under crossing changes, and the quadratic growth of `v2` in twist
//! families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::band::{cyclic_reduce, decode, encode, rewrite_equal, BandError, Code, ConjugacyCache, ConjugacyClosure};
use crate::braid::{band_to_standard, format_word, parse_word, BraidWord, Sign};
use crate::census::census_band_word;
use crate::invariants::{alexander, burau_reduced, family_v2, twist_family_quadratic, InvariantError, Quadratic, TwistFamily};
use crate::poly::LaurentPolynomial;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifierError {
    #[error(transparent)]
    Band(#[from] BandError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("position {position} is out of range for a word of length {length}")]
    PositionOutOfRange { position: usize, length: usize },
    #[error("letter at position {0} is not positive")]
    NotPositive(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identification {
    Unknot,
    Trefoil,
    FiveTwo,
    OtherKnot,
    Link,
}

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identification::Unknot => "unknot",
            Identification::Trefoil => "trefoil",
            Identification::FiveTwo => "five-two",
            Identification::OtherKnot => "other-knot",
            Identification::Link => "link",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    DeltaP,
    Pn,
    DeltaInvN,
    DeltaPower,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRow {
    #[serde(serialize_with = "crate::serialize_display")]
    pub word: BraidWord,
    pub shape: Shape,
    pub k: i64,
    #[serde(serialize_with = "crate::serialize_display")]
    pub p: BraidWord,
    #[serde(serialize_with = "crate::serialize_display")]
    pub n: BraidWord,
    pub components: usize,
    pub min_length: usize,
    /// The word itself is a minimal conjugacy representative.
    pub minimal: bool,
    /// Gabai disks on the best word of the minimal class.
    pub gabai_count: usize,
    pub identification: Identification,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CaseRow {
    /// Knot rows that the finite check is about: minimal, even, length >= 4.
    pub fn is_checked_knot(&self) -> bool {
        self.components == 1 && self.minimal && self.min_length >= 4
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    /// `P` (or `N`) from the seven-word list up to `delta`-relabelling.
    Reduced,
    /// Every `delta`-free `P` and `N` within the bounds.
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub max_p: usize,
    pub max_n: usize,
    pub mode: EnumerationMode,
    /// When `|P| = |N|` in reduced mode, skip `N` containing a square (and
    /// mirrored).
    pub square_filter: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions { max_p: 4, max_n: 4, mode: EnumerationMode::Reduced, square_filter: true }
    }
}

/// The seven positive words every non-empty `P` reduces to.
pub const SEVEN_P_WORDS: [&str; 7] =
    ["a12", "a12^2", "a12 a23", "a12^2 a23", "a12 a23 a13", "a12^2 a23 a13", "a12 a23 a13 a12"];

/// Word equalities in `B_3` that the case analysis relies on.
pub const CASE_IDENTITIES: [(&str, &str); 8] = [
    ("a12^2 a23 a13^-1", "a12^2 a13^-1 a12"),
    ("a12^2 a13^-1 a23^-1", "a12 a23^-1 a12 a23^-1"),
    ("a12^2 a23 a13 a23^-1 a12^-1", "a12^2 a23 a12^-1 a13 a12^-1"),
    ("a12^2 a23 a13 a12^-1 a13^-1", "a12^2 a23 a12^-1 a23 a13^-1"),
    ("a12 a23 a13 a12 a13^-1 a23^-1", "a12 a23 a13 a23^-1 a12 a23^-1"),
    ("a12^2 a23 a12^-1 a13^-1 a23^-1", "a12^2 a13^-1 a23 a13^-1 a23^-1"),
    ("a12 a23 a13 a12^-1 a13^-1 a23^-1", "a12 a13^-1 a23^2 a13^-1 a23^-1"),
    ("a12 a23 a13 a23^-1 a12^-1 a13^-1", "a12 a23 a12^-2 a23 a13^-1"),
];

/// Words of the case analysis that close to 3-component links.
pub const THREE_COMPONENT_LINKS: [&str; 3] =
    ["a12 a23 a13 a23^-1", "a12 a23 a12^-1 a13^-1", "a12 a23 a13^-1 a23^-1"];

fn band(text: &str) -> BraidWord {
    parse_word(text, 3).expect("valid band word")
}

fn trefoil_polynomial() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(1, 1), (0, -1), (-1, 1)])
}

fn five_two_polynomial() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(1, 2), (0, -3), (-1, 2)])
}

/// All positive words up to `max_len` letters without a spelling of `delta`.
fn delta_free_positive(max_len: usize) -> Vec<Vec<Code>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for c in 0..3u8 {
                // a23 a12, a13 a23, a12 a13
                if let Some(&last) = w.last() {
                    if c == (last + 2) % 3 {
                        continue;
                    }
                }
                let mut v: Vec<Code> = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn inverse_codes(w: &[Code]) -> Vec<Code> {
    w.iter().rev().map(|&c| (c + 3) % 6).collect()
}

fn has_square(w: &[Code]) -> bool {
    w.windows(2).any(|p| p[0] == p[1])
}

fn delta_codes(k: i64) -> Vec<Code> {
    let unit: [Code; 2] = if k > 0 { [1, 0] } else { [3, 4] };
    (0..k.unsigned_abs()).flat_map(|_| unit).collect()
}

struct Candidate {
    shape: Shape,
    k: i64,
    p: Vec<Code>,
    n: Vec<Code>,
}

fn candidates(opts: &EnumerationOptions) -> Vec<Candidate> {
    let mut out = Vec::new();
    let (ps, ns): (Vec<Vec<Code>>, Vec<Vec<Code>>) = match opts.mode {
        EnumerationMode::Reduced => {
            let seven: Vec<Vec<Code>> = SEVEN_P_WORDS
                .iter()
                .map(|t| encode(&band(t)).unwrap())
                .filter(|w| w.len() <= opts.max_p)
                .collect();
            let mirrored: Vec<Vec<Code>> = SEVEN_P_WORDS
                .iter()
                .map(|t| inverse_codes(&encode(&band(t)).unwrap()))
                .filter(|w| w.len() <= opts.max_n)
                .collect();
            let all_p = delta_free_positive(opts.max_p);
            let all_n: Vec<Vec<Code>> = delta_free_positive(opts.max_n).iter().map(|w| inverse_codes(w)).collect();
            for p in &seven {
                for n in &all_n {
                    if opts.square_filter && p.len() == n.len() && has_square(n) {
                        continue;
                    }
                    out.push(Candidate { shape: Shape::Pn, k: 0, p: p.clone(), n: n.clone() });
                }
            }
            for n in &mirrored {
                for p in &all_p {
                    if opts.square_filter && p.len() == n.len() && has_square(p) {
                        continue;
                    }
                    out.push(Candidate { shape: Shape::Pn, k: 0, p: p.clone(), n: n.clone() });
                }
            }
            let mut ps = vec![Vec::new()];
            ps.extend(seven);
            let mut ns = vec![Vec::new()];
            ns.extend(mirrored);
            (ps, ns)
        }
        EnumerationMode::Brute => {
            let ps = delta_free_positive(opts.max_p);
            let ns: Vec<Vec<Code>> = delta_free_positive(opts.max_n).iter().map(|w| inverse_codes(w)).collect();
            for p in &ps {
                for n in &ns {
                    out.push(Candidate { shape: Shape::Pn, k: 0, p: p.clone(), n: n.clone() });
                }
            }
            (ps, ns)
        }
    };
    for p in &ps {
        out.push(Candidate { shape: Shape::DeltaP, k: 1, p: p.clone(), n: Vec::new() });
    }
    for n in &ns {
        out.push(Candidate { shape: Shape::DeltaInvN, k: -1, p: Vec::new(), n: n.clone() });
    }
    for k in [2i64, 3] {
        for p in &ps {
            out.push(Candidate { shape: Shape::DeltaPower, k, p: p.clone(), n: Vec::new() });
        }
        for n in &ns {
            out.push(Candidate { shape: Shape::DeltaPower, k: -k, p: Vec::new(), n: n.clone() });
        }
    }
    let mut seen = BTreeSet::new();
    out.retain(|c| !(c.k == 0 && c.p.is_empty() && c.n.is_empty()) && seen.insert((c.k, c.p.clone(), c.n.clone())));
    out
}

/// Most Gabai disks on any word of the minimal class.
pub fn class_gabai_count(closure: &ConjugacyClosure) -> usize {
    closure
        .minimal_representatives()
        .iter()
        .map(|w| census_band_word(w).expect("band word").gabai_disks())
        .max()
        .unwrap_or(0)
}

fn identify(components: usize, min_length: usize, word: &BraidWord) -> Result<Identification, VerifierError> {
    if components > 1 {
        return Ok(Identification::Link);
    }
    if min_length <= 2 {
        return Ok(Identification::Unknot);
    }
    if min_length == 4 {
        let d = alexander(word)?;
        if d == trefoil_polynomial() {
            return Ok(Identification::Trefoil);
        }
        if d == five_two_polynomial() {
            return Ok(Identification::FiveTwo);
        }
    }
    Ok(Identification::OtherKnot)
}

fn case_note(word: &BraidWord) -> Option<String> {
    let text = format_word(word);
    if let Some((_, rhs)) = CASE_IDENTITIES.iter().find(|(lhs, _)| format_word(&band(lhs)) == text) {
        return Some(format!("equals {rhs}"));
    }
    if THREE_COMPONENT_LINKS.iter().any(|l| format_word(&band(l)) == text) {
        return Some("3-component link".into());
    }
    None
}

fn build_row(c: &Candidate, cache: &ConjugacyCache) -> Result<CaseRow, VerifierError> {
    let mut codes = delta_codes(c.k);
    codes.extend_from_slice(&c.p);
    codes.extend_from_slice(&c.n);
    let word = decode(&codes);
    let closure = cache.closure(&word)?;
    let components = word.component_count();
    let min_length = closure.minimal_length;
    Ok(CaseRow {
        identification: identify(components, min_length, &word)?,
        gabai_count: class_gabai_count(&closure),
        note: case_note(&word),
        minimal: min_length == word.len(),
        shape: c.shape,
        k: c.k,
        p: decode(&c.p),
        n: decode(&c.n),
        components,
        min_length,
        word,
    })
}

/// Rows for every `delta^k P N` candidate, in a fixed order.
pub fn enumerate_cases(opts: &EnumerationOptions, cache: &ConjugacyCache) -> Result<Vec<CaseRow>, VerifierError> {
    candidates(opts).par_iter().map(|c| build_row(c, cache)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem4Verdict {
    pub holds: bool,
    pub knot_rows: usize,
    /// Identifications of checked knots that are the trefoil or have fewer
    /// than two Gabai disks.
    pub exceptions: BTreeSet<Identification>,
    /// Checked knots with fewer than two Gabai disks that are neither the
    /// trefoil nor 5_2.
    pub violations: Vec<CaseRow>,
}

pub fn verify_theorem4(rows: &[CaseRow]) -> Theorem4Verdict {
    let mut exceptions = BTreeSet::new();
    let mut violations = Vec::new();
    let mut knot_rows = 0;
    for r in rows.iter().filter(|r| r.is_checked_knot()) {
        knot_rows += 1;
        if r.gabai_count >= 2 && r.identification != Identification::Trefoil {
            continue;
        }
        exceptions.insert(r.identification);
        if !matches!(r.identification, Identification::Trefoil | Identification::FiveTwo) {
            violations.push(r.clone());
        }
    }
    Theorem4Verdict { holds: violations.is_empty(), knot_rows, exceptions, violations }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub lhs: String,
    pub rhs: String,
    pub rewrites_agree: bool,
    pub burau_agree: bool,
}

pub fn check_identities() -> Result<Vec<IdentityCheck>, VerifierError> {
    CASE_IDENTITIES
        .iter()
        .map(|(l, r)| {
            let (lw, rw) = (band(l), band(r));
            let bl = burau_reduced(&band_to_standard(&lw).expect("band word"))?;
            let br = burau_reduced(&band_to_standard(&rw).expect("band word"))?;
            Ok(IdentityCheck {
                lhs: l.to_string(),
                rhs: r.to_string(),
                rewrites_agree: rewrite_equal(&lw, &rw)?,
                burau_agree: bl == br,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkCheck {
    pub word: String,
    pub components: usize,
}

pub fn check_links() -> Vec<LinkCheck> {
    THREE_COMPONENT_LINKS.iter().map(|t| LinkCheck { word: t.to_string(), components: band(t).component_count() }).collect()
}

/// Everything the finite 3-braid check consists of.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem4Report {
    pub max_p: usize,
    pub max_n: usize,
    pub reduced: Theorem4Verdict,
    pub reduced_without_square_filter: Theorem4Verdict,
    pub brute: Theorem4Verdict,
    /// Minimal knot classes with fewer than two Gabai disks found by the
    /// brute-force mode but absent from the reduced mode.
    pub reduction_gaps: Vec<String>,
    pub square_filter_discrepancy: bool,
    pub identities: Vec<IdentityCheck>,
    pub links: Vec<LinkCheck>,
    pub holds: bool,
}

fn class_key(w: &BraidWord, cache: &ConjugacyCache) -> Result<Vec<Code>, VerifierError> {
    Ok(cache.closure(w)?.minimal_words[0].clone())
}

fn weak_classes(rows: &[CaseRow], cache: &ConjugacyCache) -> Result<BTreeMap<Vec<Code>, String>, VerifierError> {
    let mut out = BTreeMap::new();
    for r in rows.iter().filter(|r| r.is_checked_knot() && r.gabai_count < 2) {
        out.entry(class_key(&r.word, cache)?).or_insert_with(|| format_word(&r.word));
    }
    Ok(out)
}

pub fn run_theorem4_check(max_p: usize, max_n: usize, cache: &ConjugacyCache) -> Result<(Theorem4Report, Vec<CaseRow>), VerifierError> {
    let base = EnumerationOptions { max_p, max_n, ..Default::default() };
    let reduced_rows = enumerate_cases(&base, cache)?;
    let unfiltered_rows = enumerate_cases(&EnumerationOptions { square_filter: false, ..base }, cache)?;
    let brute_rows = enumerate_cases(&EnumerationOptions { mode: EnumerationMode::Brute, ..base }, cache)?;

    let reduced = verify_theorem4(&reduced_rows);
    let reduced_without_square_filter = verify_theorem4(&unfiltered_rows);
    let brute = verify_theorem4(&brute_rows);

    let reduced_weak = weak_classes(&unfiltered_rows, cache)?;
    let reduction_gaps: Vec<String> = weak_classes(&brute_rows, cache)?
        .into_iter()
        .filter(|(k, _)| !reduced_weak.contains_key(k))
        .map(|(_, w)| w)
        .collect();
    let square_filter_discrepancy = reduced.exceptions != reduced_without_square_filter.exceptions
        || reduced.holds != reduced_without_square_filter.holds;
    let identities = check_identities()?;
    let links = check_links();
    let holds = reduced.holds
        && brute.holds
        && reduced_without_square_filter.holds
        && reduction_gaps.is_empty()
        && identities.iter().all(|i| i.rewrites_agree && i.burau_agree)
        && links.iter().all(|l| l.components == 3);
    let report = Theorem4Report {
        max_p,
        max_n,
        reduced,
        reduced_without_square_filter,
        brute,
        reduction_gaps,
        square_filter_discrepancy,
        identities,
        links,
        holds,
    };
    Ok((report, reduced_rows))
}

/// `-chi` of the three links of a crossing change at one positive letter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct STTriple {
    #[serde(serialize_with = "crate::serialize_display")]
    pub word: BraidWord,
    pub position: usize,
    pub chi_plus: i64,
    pub chi_minus: i64,
    pub chi_zero: i64,
}

impl STTriple {
    /// Two of `x, y, z + 1` are equal and the third is not larger.
    pub fn two_of_three(&self) -> bool {
        let mut v = [self.chi_plus, self.chi_minus, self.chi_zero + 1];
        v.sort_unstable();
        v[1] == v[2]
    }
}

fn neg_euler(w: &BraidWord, cache: &ConjugacyCache) -> Result<i64, VerifierError> {
    Ok(cache.minimal_length(w)? as i64 - 3)
}

pub fn st_triple_check(w: &BraidWord, position: usize, cache: &ConjugacyCache) -> Result<(STTriple, bool), VerifierError> {
    let Some(letter) = w.letters().get(position) else {
        return Err(VerifierError::PositionOutOfRange { position, length: w.len() });
    };
    if letter.sign != Sign::Pos {
        return Err(VerifierError::NotPositive(position));
    }
    let triple = STTriple {
        word: w.clone(),
        position,
        chi_plus: neg_euler(w, cache)?,
        chi_minus: neg_euler(&w.with_sign_flipped_at(position), cache)?,
        chi_zero: neg_euler(&w.without_letter(position), cache)?,
    };
    let ok = triple.two_of_three();
    Ok((triple, ok))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct STReport {
    pub words: usize,
    pub triples: usize,
    pub violations: Vec<STTriple>,
}

impl STReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn st_check_words(words: &[BraidWord], cache: &ConjugacyCache) -> Result<STReport, VerifierError> {
    let results: Vec<Vec<(STTriple, bool)>> = words
        .par_iter()
        .map(|w| {
            (0..w.len())
                .filter(|&i| w.letters()[i].sign == Sign::Pos)
                .map(|i| st_triple_check(w, i, cache))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let triples = results.iter().map(Vec::len).sum();
    let violations = results.into_iter().flatten().filter(|(_, ok)| !ok).map(|(t, _)| t).collect();
    Ok(STReport { words: words.len(), triples, violations })
}

/// Every cyclically reduced minimal band word of length at most `max_len`.
pub fn minimal_words_up_to(max_len: usize, cache: &ConjugacyCache) -> Result<Vec<BraidWord>, VerifierError> {
    let mut layer: Vec<Vec<Code>> = vec![Vec::new()];
    let mut all = Vec::new();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for c in 0..6u8 {
                if w.last() == Some(&((c + 3) % 6)) {
                    continue;
                }
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        all.extend(next.iter().filter(|w| cyclic_reduce(w).len() == w.len()).cloned());
        layer = next;
    }
    let keep: Vec<Option<BraidWord>> = all
        .par_iter()
        .map(|codes| {
            let w = decode(codes);
            Ok(cache.closure(&w)?.minimal_length == w.len()).map(|m| m.then_some(w))
        })
        .collect::<Result<_, VerifierError>>()?;
    Ok(keep.into_iter().flatten().collect())
}

/// The two-of-three check at every positive position of every minimal word
/// of length at most `max_len`.
pub fn st_exhaustive(max_len: usize, cache: &ConjugacyCache) -> Result<STReport, VerifierError> {
    st_check_words(&minimal_words_up_to(max_len, cache)?, cache)
}

/// Uniformly random minimal words with lengths in `min_len..=max_len`.
pub fn random_minimal_words(
    count: usize,
    min_len: usize,
    max_len: usize,
    seed: u64,
    cache: &ConjugacyCache,
) -> Result<Vec<BraidWord>, VerifierError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut seen = BTreeSet::new();
    let mut attempts = 0usize;
    while out.len() < count && attempts < 200 * count {
        attempts += 1;
        let len = rng.gen_range(min_len..=max_len);
        let codes: Vec<Code> = (0..len).map(|_| rng.gen_range(0..6u8)).collect();
        let w = decode(&codes);
        if !w.letters().iter().any(|l| l.sign == Sign::Pos) || !seen.insert(codes) {
            continue;
        }
        if cache.closure(&w)?.minimal_length == w.len() {
            out.push(w);
        }
    }
    Ok(out)
}

pub fn st_random(count: usize, seed: u64, cache: &ConjugacyCache) -> Result<STReport, VerifierError> {
    st_check_words(&random_minimal_words(count, 4, 10, seed, cache)?, cache)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem3Verdict {
    pub quadratic: Quadratic,
    pub leading_is_one_eighth: bool,
    /// Sampled `n` with `v2 = 0`.
    pub zero_samples: Vec<i64>,
    #[serde(serialize_with = "serialize_rationals")]
    pub rational_roots: Vec<Rational>,
    pub held_out: Vec<HeldOut>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeldOut {
    pub n: i64,
    pub v2: i64,
    #[serde(serialize_with = "crate::serialize_rational")]
    pub predicted: Rational,
}

fn serialize_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(crate::rational_string))
}

pub const FIT_SAMPLES: [i64; 3] = [1, 3, 5];
pub const HELD_OUT_SAMPLES: [i64; 3] = [7, 9, -3];

pub fn verify_theorem3(f: &TwistFamily) -> Result<Theorem3Verdict, VerifierError> {
    let quadratic = twist_family_quadratic(f, &FIT_SAMPLES)?;
    let held_out: Vec<HeldOut> = HELD_OUT_SAMPLES
        .iter()
        .map(|&n| Ok(HeldOut { n, v2: family_v2(f, n)?, predicted: quadratic.eval(n) }))
        .collect::<Result<_, VerifierError>>()?;
    let mut zero_samples: Vec<i64> = FIT_SAMPLES
        .iter()
        .chain(HELD_OUT_SAMPLES.iter())
        .copied()
        .filter(|&n| family_v2(f, n).map(|v| v == 0).unwrap_or(false))
        .collect();
    zero_samples.sort_unstable();
    let rational_roots = quadratic.rational_roots();
    let leading_is_one_eighth = quadratic.a2 == Rational::new(1, 8);
    let holds = leading_is_one_eighth
        && zero_samples.len() <= 2
        && rational_roots.len() <= 2
        && held_out.iter().all(|h| Rational::from_integer(h.v2) == h.predicted);
    Ok(Theorem3Verdict { quadratic, leading_is_one_eighth, zero_samples, rational_roots, held_out, holds })
}

/// Twist families whose members close to knots for odd `n`.
pub fn standard_families() -> Vec<(String, TwistFamily)> {
    use crate::braid::Generator;
    let fam = |name: &str, template: &str, strands: usize, position: usize, generator: u16| {
        let t = crate::braid::parse_word_in(template, strands, crate::braid::Alphabet::Standard).expect("template");
        (name.to_string(), TwistFamily::new(t, position, Generator::Std(generator)).expect("family"))
    };
    vec![
        fam("s1^n", "", 2, 0, 1),
        fam("s1^n s2^3", "s2^3", 3, 0, 1),
        fam("s1^n s2^-1 s1 s2^-1", "s2^-1 s1 s2^-1", 3, 0, 1),
        fam("s1^n s2^-1 s3 s2^-1 s3", "s2^-1 s3 s2^-1 s3", 4, 0, 1),
    ]
}

/// Random band word with letters drawn uniformly; used by property tests.
pub fn random_band_word(rng: &mut impl Rng, len: usize) -> BraidWord {
    decode(&(0..len).map(|_| rng.gen_range(0..6u8)).collect::<Vec<_>>())
}

/// Canonical key of the conjugacy class of a band word.
pub fn class_signature(w: &BraidWord, cache: &ConjugacyCache) -> Result<Vec<Code>, VerifierError> {
    class_key(w, cache)
}
