//! Rewriting in the band presentation of `B_3`:
//!
//! ```text
//! < a12, a23, a13 | a23 a12 = a13 a23 = a12 a13 >
//! ```
//!
//! The common value of the three spellings is `delta`. Conjugation by `delta`
//! cycles the generators (`delta^-1 a12 delta = a23`, `delta^-1 a23 delta = a13`,
//! `delta^-1 a13 delta = a12`), which is what lets the search below treat
//! relabelled words as the same conjugacy class.
//!
//! Internally letters are packed into a `u8`: generator index (`a12 = 0`,
//! `a23 = 1`, `a13 = 2`) plus 3 for inverse letters. Lexicographic order on
//! codes therefore puts positive letters first and `a12` before `a23` before
//! `a13`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex};

use serde::Serialize;
use thiserror::Error;

use crate::braid::{Alphabet, BandGen, BraidError, BraidWord, Generator, Letter, Sign};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BandError {
    #[error("expected a band-alphabet word on 3 strands")]
    WrongAlphabet,
    #[error("word of length {length} exceeds the search budget of {max_length}")]
    TooLong { length: usize, max_length: usize },
    #[error("conjugacy search exceeded {states} states; best length found {best_bound}")]
    BudgetExceeded { best_bound: usize, states: usize },
    #[error(transparent)]
    Braid(#[from] BraidError),
}

pub type Code = u8;

pub fn code_of(l: &Letter) -> Code {
    let Generator::Band(b) = l.generator else { panic!("band letter expected") };
    b.index() as u8 + if l.sign == Sign::Neg { 3 } else { 0 }
}

pub fn letter_of(c: Code) -> Letter {
    let sign = if c >= 3 { Sign::Neg } else { Sign::Pos };
    Letter::band(BandGen::from_index((c % 3) as usize), sign)
}

fn gen_of(c: Code) -> u8 {
    c % 3
}

fn is_neg(c: Code) -> bool {
    c >= 3
}

fn inv(c: Code) -> Code {
    (c + 3) % 6
}

/// Relabelling induced by `x -> delta^-1 x delta`, applied `times` times.
fn shift(c: Code, times: u8) -> Code {
    (gen_of(c) + times) % 3 + if is_neg(c) { 3 } else { 0 }
}

pub fn encode(w: &BraidWord) -> Result<Vec<Code>, BandError> {
    if w.alphabet() != Alphabet::Band {
        return Err(BandError::WrongAlphabet);
    }
    Ok(w.letters().iter().map(code_of).collect())
}

pub fn decode(codes: &[Code]) -> BraidWord {
    BraidWord::band(codes.iter().map(|&c| letter_of(c)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleFamily {
    /// `x y^-1 = z^-1 w` between a positive and a negative letter.
    RelationPair,
    /// Two spellings of `delta` (or of `delta^-1`).
    DeltaSpelling,
    /// `delta x = y delta`, with `delta` spelled `a23 a12`.
    DeltaCommutation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub left: Vec<Letter>,
    pub right: Vec<Letter>,
    pub family: RuleFamily,
}

impl RewriteRule {
    fn from_codes(left: &[Code], right: &[Code], family: RuleFamily) -> Self {
        RewriteRule {
            left: left.iter().map(|&c| letter_of(c)).collect(),
            right: right.iter().map(|&c| letter_of(c)).collect(),
            family,
        }
    }

    pub fn reversed(&self) -> Self {
        RewriteRule { left: self.right.clone(), right: self.left.clone(), family: self.family }
    }
}

/// The six mixed-sign relations, written positive-letter-first.
const RELATION_PAIRS: [([Code; 2], [Code; 2]); 6] = [
    ([0, 4], [4, 2]), // a12 a23^-1 = a23^-1 a13
    ([0, 5], [4, 0]), // a12 a13^-1 = a23^-1 a12
    ([1, 3], [5, 1]), // a23 a12^-1 = a13^-1 a23
    ([1, 5], [5, 0]), // a23 a13^-1 = a13^-1 a12
    ([2, 3], [3, 1]), // a13 a12^-1 = a12^-1 a23
    ([2, 4], [3, 2]), // a13 a23^-1 = a12^-1 a13
];

/// `a23 a12`, `a13 a23`, `a12 a13`: the second letter is the first shifted by 2.
fn is_delta_spelling(a: Code, b: Code) -> bool {
    !is_neg(a) && !is_neg(b) && b == (a + 2) % 3
}

/// `a12^-1 a23^-1`, `a23^-1 a13^-1`, `a13^-1 a12^-1`.
fn is_delta_inv_spelling(a: Code, b: Code) -> bool {
    is_neg(a) && is_neg(b) && gen_of(b) == (gen_of(a) + 1) % 3
}

fn delta_spellings() -> [[Code; 2]; 3] {
    [[1, 0], [2, 1], [0, 2]]
}

fn delta_inv_spellings() -> [[Code; 2]; 3] {
    [[3, 4], [4, 5], [5, 3]]
}

/// Every relation of the presentation as a directed rule, in both directions:
/// the six mixed-sign relations (closed under inversion), the pairwise equalities
/// of the three spellings of `delta` and of `delta^-1`, and the three
/// `delta`-commutations `delta a23 = a12 delta`, `delta a13 = a23 delta`,
/// `delta a12 = a13 delta`.
pub fn relation_rules() -> Vec<RewriteRule> {
    let mut rules = Vec::new();
    for (l, r) in RELATION_PAIRS {
        let rule = RewriteRule::from_codes(&l, &r, RuleFamily::RelationPair);
        rules.push(rule.reversed());
        rules.push(rule);
    }
    for spellings in [delta_spellings(), delta_inv_spellings()] {
        for a in spellings {
            for b in spellings {
                if a != b {
                    rules.push(RewriteRule::from_codes(&a, &b, RuleFamily::DeltaSpelling));
                }
            }
        }
    }
    // delta x = shift^-1(x) delta
    for (x, y) in [(1u8, 0u8), (2, 1), (0, 2)] {
        let rule = RewriteRule::from_codes(&[1, 0, x], &[y, 1, 0], RuleFamily::DeltaCommutation);
        rules.push(rule.reversed());
        rules.push(rule);
    }
    rules
}

/// All two-letter rewrites `(a, b) -> (c, d)` as a lookup table.
struct PairTable {
    alternatives: [[Vec<[Code; 2]>; 6]; 6],
}

impl PairTable {
    fn build() -> Self {
        let mut alternatives: [[Vec<[Code; 2]>; 6]; 6] = Default::default();
        for rule in relation_rules() {
            if rule.left.len() != 2 {
                continue;
            }
            let l: Vec<Code> = rule.left.iter().map(code_of).collect();
            let r: Vec<Code> = rule.right.iter().map(code_of).collect();
            alternatives[l[0] as usize][l[1] as usize].push([r[0], r[1]]);
        }
        PairTable { alternatives }
    }

    fn get(&self, a: Code, b: Code) -> &[[Code; 2]] {
        &self.alternatives[a as usize][b as usize]
    }

    /// The unique rewrite of `x^-1 y` (x != y) into positive-then-negative order.
    fn neg_pos_swap(&self, a: Code, b: Code) -> [Code; 2] {
        *self.get(a, b).iter().find(|r| !is_neg(r[0]) && is_neg(r[1])).expect("mixed relation")
    }
}

fn table() -> &'static PairTable {
    static TABLE: std::sync::OnceLock<PairTable> = std::sync::OnceLock::new();
    TABLE.get_or_init(PairTable::build)
}

fn free_reduce_codes(w: &[Code]) -> Vec<Code> {
    let mut out: Vec<Code> = Vec::with_capacity(w.len());
    for &c in w {
        if out.last() == Some(&inv(c)) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

/// Free reduction followed by cancellation across the ends of the cyclic word.
pub fn cyclic_reduce(w: &[Code]) -> Vec<Code> {
    let mut v = free_reduce_codes(w);
    let mut start = 0;
    let mut end = v.len();
    while end - start >= 2 && v[end - 1] == inv(v[start]) {
        start += 1;
        end -= 1;
    }
    v.truncate(end);
    v.drain(..start);
    v
}

/// Lexicographically least word among all rotations and `delta`-relabellings.
pub fn canonical_cyclic(w: &[Code]) -> Vec<Code> {
    let n = w.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<Code>> = None;
    let mut cand = vec![0u8; n];
    for s in 0..3u8 {
        for r in 0..n {
            for i in 0..n {
                cand[i] = shift(w[(r + i) % n], s);
            }
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand.clone());
            }
        }
    }
    best.unwrap()
}

/// `(P, N)` with `P` positive, `N` negative and `P N` equal to `w` in `B_3`,
/// obtained by moving negative letters right with the mixed relations and
/// cancelling `x^-1 x`. Length never increases.
pub fn pn_form(w: &BraidWord) -> Result<(BraidWord, BraidWord), BandError> {
    let codes = pn_codes(&encode(w)?);
    let split = codes.iter().position(|&c| is_neg(c)).unwrap_or(codes.len());
    Ok((decode(&codes[..split]), decode(&codes[split..])))
}

fn pn_codes(w: &[Code]) -> Vec<Code> {
    let t = table();
    let mut v = free_reduce_codes(w);
    // each pass removes one (negative, positive) adjacency or two letters
    while let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| is_neg(v[i]) && !is_neg(v[i + 1])) {
        if v[i + 1] == inv(v[i]) {
            v.drain(i..i + 2);
        } else {
            let [a, b] = t.neg_pos_swap(v[i], v[i + 1]);
            v[i] = a;
            v[i + 1] = b;
        }
        v = free_reduce_codes(&v);
    }
    v
}

/// `delta^k P N` with `P` positive, `N` negative and neither containing a
/// spelling of `delta^{+-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaForm {
    pub k: i64,
    pub p: BraidWord,
    pub n: BraidWord,
}

impl DeltaForm {
    /// The word `delta^k P N`, spelling `delta = a23 a12`.
    pub fn word(&self) -> BraidWord {
        let mut codes = Vec::new();
        for _ in 0..self.k.max(0) {
            codes.extend_from_slice(&[1, 0]);
        }
        for _ in 0..(-self.k).max(0) {
            codes.extend_from_slice(&[3, 4]);
        }
        codes.extend(self.p.letters().iter().map(code_of));
        codes.extend(self.n.letters().iter().map(code_of));
        decode(&codes)
    }

    pub fn len(&self) -> usize {
        2 * self.k.unsigned_abs() as usize + self.p.len() + self.n.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_valid(&self) -> bool {
        let p = encode(&self.p).unwrap_or_default();
        let n = encode(&self.n).unwrap_or_default();
        self.p.is_positive()
            && self.n.is_negative()
            && !p.windows(2).any(|x| is_delta_spelling(x[0], x[1]))
            && !n.windows(2).any(|x| is_delta_inv_spelling(x[0], x[1]))
    }
}

/// Order in which `delta` spellings are extracted from a PN word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extraction {
    Leftmost,
    Rightmost,
}

pub fn delta_form(w: &BraidWord) -> Result<DeltaForm, BandError> {
    delta_form_with(w, Extraction::Leftmost)
}

pub fn delta_form_with(w: &BraidWord, order: Extraction) -> Result<DeltaForm, BandError> {
    let codes = pn_codes(&encode(w)?);
    let split = codes.iter().position(|&c| is_neg(c)).unwrap_or(codes.len());
    let mut p = codes[..split].to_vec();
    let mut n = codes[split..].to_vec();
    let mut k = 0i64;
    let find = |v: &[Code], pred: fn(Code, Code) -> bool| {
        let mut hits = (0..v.len().saturating_sub(1)).filter(|&i| pred(v[i], v[i + 1]));
        match order {
            Extraction::Leftmost => hits.next(),
            Extraction::Rightmost => hits.next_back(),
        }
    };
    loop {
        if let Some(i) = find(&p, is_delta_spelling) {
            // A delta B = delta shift(A) B
            let mut next: Vec<Code> = p[..i].iter().map(|&c| shift(c, 1)).collect();
            next.extend_from_slice(&p[i + 2..]);
            p = next;
            k += 1;
        } else if let Some(i) = find(&n, is_delta_inv_spelling) {
            // X delta^-1 = delta^-1 shift^-1(X) for X = P N[..i]
            p = p.iter().map(|&c| shift(c, 2)).collect();
            let mut next: Vec<Code> = n[..i].iter().map(|&c| shift(c, 2)).collect();
            next.extend_from_slice(&n[i + 2..]);
            n = next;
            k -= 1;
        } else {
            break;
        }
    }
    Ok(DeltaForm { k, p: decode(&p), n: decode(&n) })
}

/// Limits for the conjugacy search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_length: usize,
    pub max_states: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_length: 16, max_states: 2_000_000 }
    }
}

/// Outcome of the breadth-first conjugacy search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClosure {
    pub minimal_length: usize,
    /// Canonical (rotation- and relabelling-least) words of minimal length,
    /// in lexicographic order.
    pub minimal_words: Vec<Vec<Code>>,
    pub states: usize,
}

impl ConjugacyClosure {
    pub fn witness(&self) -> BraidWord {
        decode(&self.minimal_words[0])
    }

    /// Every rotation of every canonical minimal word, deduplicated and sorted.
    pub fn minimal_representatives(&self) -> Vec<BraidWord> {
        let mut all = BTreeSet::new();
        for w in &self.minimal_words {
            for r in 0..w.len().max(1) {
                let mut v = w.clone();
                if !v.is_empty() {
                    v.rotate_left(r);
                }
                all.insert(v);
            }
        }
        all.into_iter().map(|v| decode(&v)).collect()
    }
}

/// Explores the closure of `w` under cyclic reduction, every two-letter
/// relation applied at every cyclic position, rotation and `delta`-relabelling.
/// None of these moves lengthens the word, so the search is finite.
pub fn conjugacy_closure(w: &BraidWord, budget: &SearchBudget) -> Result<ConjugacyClosure, BandError> {
    let codes = encode(w)?;
    if codes.len() > budget.max_length {
        return Err(BandError::TooLong { length: codes.len(), max_length: budget.max_length });
    }
    closure_codes(&codes, budget.max_states)
}

fn closure_codes(codes: &[Code], max_states: usize) -> Result<ConjugacyClosure, BandError> {
    let t = table();
    let start = canonical_cyclic(&cyclic_reduce(codes));
    let mut best = start.len();
    let mut visited: HashSet<Vec<Code>> = HashSet::new();
    let mut queue = VecDeque::new();
    visited.insert(start.clone());
    queue.push_back(start);
    let mut buf = Vec::new();
    while let Some(s) = queue.pop_front() {
        let n = s.len();
        if n < 2 {
            continue;
        }
        for r in 0..n {
            let (a, b) = (s[r], s[(r + 1) % n]);
            for alt in t.get(a, b) {
                buf.clear();
                buf.extend_from_slice(alt);
                buf.extend((2..n).map(|i| s[(r + i) % n]));
                let next = canonical_cyclic(&cyclic_reduce(&buf));
                if visited.contains(&next) {
                    continue;
                }
                best = best.min(next.len());
                visited.insert(next.clone());
                if visited.len() > max_states {
                    return Err(BandError::BudgetExceeded { best_bound: best, states: visited.len() });
                }
                queue.push_back(next);
            }
        }
    }
    let mut minimal_words: Vec<Vec<Code>> = visited.iter().filter(|v| v.len() == best).cloned().collect();
    minimal_words.sort();
    Ok(ConjugacyClosure { minimal_length: best, minimal_words, states: visited.len() })
}

/// Minimal length in the conjugacy class and the Euler characteristic of the
/// band surface of a minimal representative, `-chi = l - 3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub minimal_length: usize,
    pub neg_euler: i64,
    /// `(l - 2) / 2` when the closure is a knot.
    #[serde(serialize_with = "crate::serialize_opt_rational")]
    pub genus: Option<Rational>,
    #[serde(serialize_with = "crate::serialize_display")]
    pub witness: BraidWord,
}

impl GenusReport {
    pub fn from_closure(closure: &ConjugacyClosure, components: usize) -> Self {
        let l = closure.minimal_length;
        GenusReport {
            minimal_length: l,
            neg_euler: l as i64 - 3,
            genus: (components == 1).then(|| Rational::new(l as i64 - 2, 2)),
            witness: closure.witness(),
        }
    }
}

pub fn conjugacy_min(w: &BraidWord, budget: &SearchBudget) -> Result<GenusReport, BandError> {
    let closure = conjugacy_closure(w, budget)?;
    Ok(GenusReport::from_closure(&closure, w.component_count()))
}

pub fn is_min_conjugacy_rep(w: &BraidWord, budget: &SearchBudget) -> Result<bool, BandError> {
    Ok(conjugacy_min(w, budget)?.minimal_length == w.len())
}

/// Memoizes conjugacy closures by the canonical form of the starting word.
/// Shared across worker threads.
#[derive(Debug, Default)]
pub struct ConjugacyCache {
    budget: SearchBudget,
    entries: Mutex<HashMap<Vec<Code>, Arc<ConjugacyClosure>>>,
}

impl ConjugacyCache {
    pub fn new(budget: SearchBudget) -> Self {
        ConjugacyCache { budget, entries: Mutex::new(HashMap::new()) }
    }

    pub fn budget(&self) -> &SearchBudget {
        &self.budget
    }

    pub fn closure(&self, w: &BraidWord) -> Result<Arc<ConjugacyClosure>, BandError> {
        let codes = encode(w)?;
        if codes.len() > self.budget.max_length {
            return Err(BandError::TooLong { length: codes.len(), max_length: self.budget.max_length });
        }
        let key = canonical_cyclic(&cyclic_reduce(&codes));
        if let Some(hit) = self.entries.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let c = Arc::new(closure_codes(&key, self.budget.max_states)?);
        self.entries.lock().unwrap().insert(key, c.clone());
        Ok(c)
    }

    pub fn minimal_length(&self, w: &BraidWord) -> Result<usize, BandError> {
        Ok(self.closure(w)?.minimal_length)
    }

    pub fn len(&self) -> usize {
        self.entries.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Canonical form of a word under equality in `B_3` as far as the two-letter
/// relations and free reduction reach: the least word of minimal length in the
/// closure of `w` under those moves (no rotation).
pub fn rewrite_normal_form(w: &BraidWord, max_states: usize) -> Result<BraidWord, BandError> {
    let t = table();
    let start = free_reduce_codes(&encode(w)?);
    let mut visited: HashSet<Vec<Code>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for i in 0..s.len().saturating_sub(1) {
            for alt in t.get(s[i], s[i + 1]) {
                let mut next = s.clone();
                next[i] = alt[0];
                next[i + 1] = alt[1];
                let next = free_reduce_codes(&next);
                if visited.insert(next.clone()) {
                    if visited.len() > max_states {
                        let best = visited.iter().map(Vec::len).min().unwrap_or(0);
                        return Err(BandError::BudgetExceeded { best_bound: best, states: visited.len() });
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    let best = visited.iter().map(Vec::len).min().unwrap_or(0);
    let nf = visited.into_iter().filter(|v| v.len() == best).min().unwrap_or_default();
    Ok(decode(&nf))
}

/// Whether the rewriting engine connects `u` and `v`.
pub fn rewrite_equal(u: &BraidWord, v: &BraidWord) -> Result<bool, BandError> {
    let limit = SearchBudget::default().max_states;
    Ok(rewrite_normal_form(u, limit)? == rewrite_normal_form(v, limit)?)
}

/// The generator `delta x delta^-1` for a band generator `x`.
pub fn delta_conjugate(g: BandGen) -> BandGen {
    BandGen::from_index((g.index() + 2) % 3)
}

/// `delta^-1 w delta` written letter by letter.
pub fn relabel_by_delta(w: &BraidWord) -> Result<BraidWord, BandError> {
    Ok(decode(&encode(w)?.iter().map(|&c| shift(c, 1)).collect::<Vec<_>>()))
}

/// `delta^{k}` spelled `a23 a12` (or `a12^-1 a23^-1` for negative powers).
pub fn delta_power(k: i64) -> BraidWord {
    DeltaForm { k, p: decode(&[]), n: decode(&[]) }.word()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{band_to_standard, parse_word, permutation};
    use crate::invariants::burau_reduced;

    fn w(t: &str) -> BraidWord {
        parse_word(t, 3).unwrap()
    }

    fn same_element(u: &BraidWord, v: &BraidWord) -> bool {
        // reduced Burau is faithful on B_3
        burau_reduced(&band_to_standard(u).unwrap()).unwrap() == burau_reduced(&band_to_standard(v).unwrap()).unwrap()
    }

    #[test]
    fn every_rule_holds_in_b3() {
        let rules = relation_rules();
        assert_eq!(rules.iter().filter(|r| r.family == RuleFamily::RelationPair).count(), 12);
        assert_eq!(rules.iter().filter(|r| r.family == RuleFamily::DeltaSpelling).count(), 12);
        assert_eq!(rules.iter().filter(|r| r.family == RuleFamily::DeltaCommutation).count(), 6);
        for r in &rules {
            let l = BraidWord::band(r.left.clone());
            let rr = BraidWord::band(r.right.clone());
            assert!(same_element(&l, &rr), "{l} != {rr}");
            assert_eq!(permutation(&l), permutation(&rr));
        }
    }

    #[test]
    fn listed_relations_present() {
        let rules = relation_rules();
        let has = |l: &str, r: &str| rules.iter().any(|x| x.left == w(l).letters() && x.right == w(r).letters());
        assert!(has("a23 a13^-1", "a13^-1 a12"));
        assert!(has("a13 a12^-1", "a12^-1 a23"));
        assert!(has("a12^-1 a23", "a13 a12^-1"));
        assert!(has("a23 a12", "a12 a13"));
        assert!(has("a23 a12 a23", "a12 a23 a12"));
    }

    #[test]
    fn delta_commutation_is_derivable_from_two_letter_rules() {
        for r in relation_rules().iter().filter(|r| r.family == RuleFamily::DeltaCommutation) {
            assert!(rewrite_equal(&BraidWord::band(r.left.clone()), &BraidWord::band(r.right.clone())).unwrap());
        }
    }

    #[test]
    fn delta_conjugation_permutes_generators() {
        let d = delta_power(1);
        for g in BandGen::ALL {
            let x = BraidWord::band(vec![Letter::band(g, Sign::Pos)]);
            let conj = d.concat(&x).unwrap().concat(&d.inverse()).unwrap();
            let y = BraidWord::band(vec![Letter::band(delta_conjugate(g), Sign::Pos)]);
            assert!(same_element(&conj, &y));
            let relabelled = relabel_by_delta(&x).unwrap();
            let back = d.inverse().concat(&x).unwrap().concat(&d).unwrap();
            assert!(same_element(&back, &relabelled));
        }
    }

    #[test]
    fn pn_form_examples() {
        let (p, n) = pn_form(&w("a23^-1 a13")).unwrap();
        assert_eq!((p, n), (w("a12"), w("a23^-1")));
        let (p, n) = pn_form(&w("a12^2 a23^-1")).unwrap();
        assert_eq!((p, n), (w("a12^2"), w("a23^-1")));
        let (p, n) = pn_form(&w("a13^-1 a12")).unwrap();
        assert_eq!((p, n), (w("a23"), w("a13^-1")));
        let (p, n) = pn_form(&w("a12^-1 a12 a23")).unwrap();
        assert_eq!((p, n), (w("a23"), w("")));
    }

    #[test]
    fn delta_form_examples() {
        let d = delta_form(&w("a23 a12 a23 a12")).unwrap();
        assert_eq!((d.k, d.p.len(), d.n.len()), (2, 0, 0));
        let d = delta_form(&w("a12^2 a23 a13")).unwrap();
        assert_eq!(d, DeltaForm { k: 0, p: w("a12^2 a23 a13"), n: w("") });
        let d = delta_form(&w("a12 a13 a23^-1")).unwrap();
        assert_eq!(d, DeltaForm { k: 1, p: w(""), n: w("a23^-1") });
        let d = delta_form(&w("a23^-1 a13^-1 a12^-1 a23^-1")).unwrap();
        assert_eq!(d.k, -2);
        assert!(d.is_valid());
        assert!(same_element(&d.word(), &w("a23^-1 a13^-1 a12^-1 a23^-1")));
    }

    #[test]
    fn conjugacy_min_examples() {
        let b = SearchBudget::default();
        let r = conjugacy_min(&w("a23 a12 a23 a12"), &b).unwrap();
        assert_eq!((r.minimal_length, r.neg_euler, r.genus), (4, 1, Some(Rational::from_integer(1))));
        let r = conjugacy_min(&w("a23 a12 a23 a12^-1"), &b).unwrap();
        assert_eq!(r.minimal_length, 2);
        assert_eq!(r.genus, Some(Rational::from_integer(0)));
        let r = conjugacy_min(&w("a12^2 a23 a13"), &b).unwrap();
        assert_eq!((r.minimal_length, r.genus), (4, Some(Rational::from_integer(1))));
        assert_eq!(r.witness, w("a12^2 a23 a13"));
    }

    #[test]
    fn min_rep_examples() {
        let b = SearchBudget::default();
        assert!(is_min_conjugacy_rep(&w("a23 a12 a23 a12"), &b).unwrap());
        assert!(!is_min_conjugacy_rep(&w("a12 a12^-1 a23"), &b).unwrap());
        assert!(is_min_conjugacy_rep(&w("a12^2 a23 a13"), &b).unwrap());
    }

    #[test]
    fn budget_errors() {
        let tight = SearchBudget { max_length: 3, max_states: 10 };
        assert_eq!(
            conjugacy_min(&w("a12^2 a23 a13"), &tight),
            Err(BandError::TooLong { length: 4, max_length: 3 })
        );
        let few = SearchBudget { max_length: 16, max_states: 2 };
        assert!(matches!(
            conjugacy_min(&w("a23 a12 a23 a12 a23 a12"), &few),
            Err(BandError::BudgetExceeded { best_bound: 6, .. })
        ));
        assert_eq!(conjugacy_min(&w("s1"), &SearchBudget::default()), Err(BandError::WrongAlphabet));
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(cyclic_reduce(&[0, 1, 3]), vec![1]);
        assert_eq!(cyclic_reduce(&[0, 3]), Vec::<Code>::new());
        assert_eq!(cyclic_reduce(&[0, 1, 4, 2]), vec![0, 2]);
    }

    #[test]
    fn canonical_form_merges_rotations_and_relabels() {
        let a = canonical_cyclic(&[1, 0, 1, 0]);
        let b = canonical_cyclic(&[0, 2, 0, 2]);
        assert_eq!(a, b);
        assert_eq!(a, vec![0, 1, 0, 1]);
    }
}
