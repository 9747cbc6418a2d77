//! Braid words over the standard generators `s1 .. s{n-1}` of `B_n` and the
//! band generators `a12`, `a23`, `a13` of `B_3`.
//!
//! Words are immutable values. Every rewriting operation returns a new word.
//! Permutations compose left to right: the first letter acts first.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("band generators require exactly 3 strands, got {0}")]
    BandNeedsThreeStrands(usize),
    #[error("generator s{index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("a braid word needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("word mixes band and standard generators")]
    MixedAlphabets,
    #[error("expected a {expected} word, got a {found} word")]
    WrongAlphabet { expected: Alphabet, found: Alphabet },
}

/// The three band generators of `B_3`, in the order used for canonical forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BandGen {
    A12,
    A23,
    A13,
}

impl BandGen {
    pub const ALL: [BandGen; 3] = [BandGen::A12, BandGen::A23, BandGen::A13];

    pub fn index(self) -> usize {
        match self {
            BandGen::A12 => 0,
            BandGen::A23 => 1,
            BandGen::A13 => 2,
        }
    }

    pub fn from_index(i: usize) -> BandGen {
        BandGen::ALL[i % 3]
    }

    /// The pair of strands (0-based) joined by the band.
    pub fn strands(self) -> (usize, usize) {
        match self {
            BandGen::A12 => (0, 1),
            BandGen::A23 => (1, 2),
            BandGen::A13 => (0, 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BandGen::A12 => "a12",
            BandGen::A23 => "a23",
            BandGen::A13 => "a13",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    /// `s<i>`, 1-based, crossing strands `i` and `i + 1`.
    Std(u16),
    Band(BandGen),
}

impl Generator {
    pub fn alphabet(self) -> Alphabet {
        match self {
            Generator::Std(_) => Alphabet::Standard,
            Generator::Band(_) => Alphabet::Band,
        }
    }

    /// 0-based positions swapped by this generator.
    pub fn transposition(self) -> (usize, usize) {
        match self {
            Generator::Std(i) => (i as usize - 1, i as usize),
            Generator::Band(b) => b.strands(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Std(i) => write!(f, "s{i}"),
            Generator::Band(b) => f.write_str(b.name()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub generator: Generator,
    pub sign: Sign,
}

impl Letter {
    pub fn new(generator: Generator, sign: Sign) -> Letter {
        Letter { generator, sign }
    }

    pub fn pos(generator: Generator) -> Letter {
        Letter::new(generator, Sign::Pos)
    }

    pub fn neg(generator: Generator) -> Letter {
        Letter::new(generator, Sign::Neg)
    }

    pub fn band(b: BandGen, sign: Sign) -> Letter {
        Letter::new(Generator::Band(b), sign)
    }

    pub fn std(i: u16, sign: Sign) -> Letter {
        Letter::new(Generator::Std(i), sign)
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.generator, self.sign.flip())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Alphabet {
    Band,
    Standard,
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::Band => f.write_str("band"),
            Alphabet::Standard => f.write_str("standard"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, alphabet: Alphabet, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        if alphabet == Alphabet::Band && strands != 3 {
            return Err(BraidError::BandNeedsThreeStrands(strands));
        }
        for l in &letters {
            match l.generator {
                Generator::Band(_) if alphabet != Alphabet::Band => return Err(BraidError::MixedAlphabets),
                Generator::Std(_) if alphabet != Alphabet::Standard => return Err(BraidError::MixedAlphabets),
                Generator::Std(i) if i == 0 || i as usize >= strands => {
                    return Err(BraidError::GeneratorOutOfRange { index: i as usize, strands })
                }
                _ => {}
            }
        }
        Ok(BraidWord { strands, alphabet, letters })
    }

    /// A band word on three strands. Panics only on non-band letters.
    pub fn band(letters: Vec<Letter>) -> Self {
        BraidWord::new(3, Alphabet::Band, letters).expect("band letters")
    }

    pub fn empty(strands: usize, alphabet: Alphabet) -> Result<Self, BraidError> {
        BraidWord::new(strands, alphabet, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.sign == Sign::Pos)
    }

    pub fn is_negative(&self) -> bool {
        self.letters.iter().all(|l| l.sign == Sign::Neg)
    }

    /// Same strands and alphabet, new letters. Letters are assumed valid.
    pub fn with_letters(&self, letters: Vec<Letter>) -> BraidWord {
        BraidWord { strands: self.strands, alphabet: self.alphabet, letters }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.alphabet != other.alphabet {
            return Err(BraidError::MixedAlphabets);
        }
        let strands = self.strands.max(other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord::new(strands, self.alphabet, letters)
    }

    pub fn inverse(&self) -> BraidWord {
        self.with_letters(self.letters.iter().rev().map(|l| l.inverse()).collect())
    }

    /// A word whose closure is the mirror image of this one: standard words
    /// invert every letter in place, band words are inverted as group elements.
    pub fn mirror(&self) -> BraidWord {
        match self.alphabet {
            Alphabet::Standard => self.with_letters(self.letters.iter().map(|l| l.inverse()).collect()),
            Alphabet::Band => self.inverse(),
        }
    }

    /// Inverts the sign of every letter in place, without reordering.
    pub fn sign_flipped(&self) -> BraidWord {
        self.with_letters(self.letters.iter().map(|l| l.inverse()).collect())
    }

    /// Cyclic rotation moving the first `k` letters to the end (a conjugation).
    pub fn rotate(&self, k: usize) -> BraidWord {
        if self.letters.is_empty() {
            return self.clone();
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(k % self.letters.len());
        self.with_letters(letters)
    }

    pub fn with_sign_flipped_at(&self, pos: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        letters[pos] = letters[pos].inverse();
        self.with_letters(letters)
    }

    pub fn without_letter(&self, pos: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.remove(pos);
        self.with_letters(letters)
    }

    pub fn permutation(&self) -> Permutation {
        permutation(self)
    }

    pub fn component_count(&self) -> usize {
        component_count(self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self))
    }
}

/// A bijection of `{0, .., n-1}`; `images[x]` is where the strand starting at
/// position `x` ends up.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Option<Permutation> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        p.images.swap(a, b);
        p
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycles as 0-based orbits, each starting at its least element, sorted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle id of every point.
    pub fn orbit_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.images.len()];
        for (id, cycle) in self.cycles().into_iter().enumerate() {
            for x in cycle {
                labels[x] = id;
            }
        }
        labels
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return f.write_str("()");
        }
        for c in nontrivial {
            let parts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Parses a word, choosing the alphabet from its tokens. An empty word is a
/// band word on 3 strands and a standard word otherwise.
pub fn parse_word(text: &str, strands: usize) -> Result<BraidWord, BraidError> {
    parse_tokens(text, strands, None)
}

/// Parses a word that must be written in `alphabet`.
pub fn parse_word_in(text: &str, strands: usize, alphabet: Alphabet) -> Result<BraidWord, BraidError> {
    parse_tokens(text, strands, Some(alphabet))
}

fn parse_tokens(text: &str, strands: usize, want: Option<Alphabet>) -> Result<BraidWord, BraidError> {
    if strands < 2 {
        return Err(BraidError::TooFewStrands(strands));
    }
    let mut letters = Vec::new();
    let mut seen: Option<Alphabet> = None;
    for (pos, token) in tokens(text) {
        let (gen, exp) = parse_token(token, pos)?;
        let alpha = gen.alphabet();
        if let Some(prev) = seen {
            if prev != alpha {
                return Err(BraidError::MixedAlphabets);
            }
        }
        seen = Some(alpha);
        if let Some(w) = want {
            if w != alpha {
                return Err(BraidError::WrongAlphabet { expected: w, found: alpha });
            }
        }
        let sign = if exp > 0 { Sign::Pos } else { Sign::Neg };
        letters.extend(std::iter::repeat_n(Letter::new(gen, sign), exp.unsigned_abs() as usize));
    }
    let alphabet = want.or(seen).unwrap_or(if strands == 3 { Alphabet::Band } else { Alphabet::Standard });
    BraidWord::new(strands, alphabet, letters)
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
}

fn parse_token(token: &str, pos: usize) -> Result<(Generator, i64), BraidError> {
    let err = |offset: usize, msg: &str| BraidError::Syntax { pos: pos + offset, msg: msg.to_string() };
    let (head, exp_text) = match token.find('^') {
        Some(i) => (&token[..i], Some((i + 1, &token[i + 1..]))),
        None => (token, None),
    };
    let gen = match head {
        "a12" => Generator::Band(BandGen::A12),
        "a23" => Generator::Band(BandGen::A23),
        "a13" => Generator::Band(BandGen::A13),
        _ => {
            let digits = head.strip_prefix('s').ok_or_else(|| err(0, &format!("unknown generator `{head}`")))?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(0, &format!("unknown generator `{head}`")));
            }
            let i: u16 = digits.parse().map_err(|_| err(1, "generator index too large"))?;
            if i == 0 {
                return Err(err(1, "generator index must be at least 1"));
            }
            Generator::Std(i)
        }
    };
    let exp = match exp_text {
        None => 1,
        Some((off, t)) => {
            let e: i64 = t.parse().map_err(|_| err(off, &format!("bad exponent `{t}`")))?;
            if e == 0 {
                return Err(err(off, "exponent must be nonzero"));
            }
            e
        }
    };
    Ok((gen, exp))
}

/// Runs of equal letters are written with an exponent: `a12^2 a23 a13^-1`.
pub fn format_word(w: &BraidWord) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    let ls = w.letters();
    while i < ls.len() {
        let mut j = i + 1;
        while j < ls.len() && ls[j] == ls[i] {
            j += 1;
        }
        let run = (j - i) as i64 * ls[i].sign.value();
        if run == 1 {
            parts.push(ls[i].generator.to_string());
        } else {
            parts.push(format!("{}^{}", ls[i].generator, run));
        }
        i = j;
    }
    parts.join(" ")
}

/// `a12 -> s1`, `a23 -> s2`, `a13 -> s1^-1 s2 s1`; inverses reversed.
pub fn band_to_standard(w: &BraidWord) -> Result<BraidWord, BraidError> {
    if w.alphabet() != Alphabet::Band {
        return Err(BraidError::WrongAlphabet { expected: Alphabet::Band, found: w.alphabet() });
    }
    let mut out = Vec::with_capacity(w.len() * 3);
    for l in w.letters() {
        let Generator::Band(b) = l.generator else { unreachable!() };
        match b {
            BandGen::A12 => out.push(Letter::std(1, l.sign)),
            BandGen::A23 => out.push(Letter::std(2, l.sign)),
            BandGen::A13 => {
                out.push(Letter::std(1, Sign::Neg));
                out.push(Letter::std(2, l.sign));
                out.push(Letter::std(1, Sign::Pos));
            }
        }
    }
    BraidWord::new(3, Alphabet::Standard, out)
}

/// `s1 -> a12`, `s2 -> a23` on three strands.
pub fn standard_to_band(w: &BraidWord) -> Result<BraidWord, BraidError> {
    if w.alphabet() != Alphabet::Standard {
        return Err(BraidError::WrongAlphabet { expected: Alphabet::Standard, found: w.alphabet() });
    }
    if w.strands() != 3 {
        return Err(BraidError::BandNeedsThreeStrands(w.strands()));
    }
    let letters = w
        .letters()
        .iter()
        .map(|l| match l.generator {
            Generator::Std(1) => Letter::band(BandGen::A12, l.sign),
            Generator::Std(_) => Letter::band(BandGen::A23, l.sign),
            Generator::Band(_) => unreachable!(),
        })
        .collect();
    BraidWord::new(3, Alphabet::Band, letters)
}

/// Converts to the standard alphabet if needed.
pub fn to_standard(w: &BraidWord) -> BraidWord {
    match w.alphabet() {
        Alphabet::Standard => w.clone(),
        Alphabet::Band => band_to_standard(w).expect("band word"),
    }
}

pub fn permutation(w: &BraidWord) -> Permutation {
    let n = w.strands();
    let mut images: Vec<usize> = (0..n).collect();
    for l in w.letters() {
        let (a, b) = l.generator.transposition();
        for x in images.iter_mut() {
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
    }
    Permutation { images }
}

pub fn component_count(w: &BraidWord) -> usize {
    permutation(w).cycles().len()
}

/// Signed letter counts for every generator of the word's alphabet.
pub fn exponent_sums(w: &BraidWord) -> BTreeMap<Generator, i64> {
    let mut sums = BTreeMap::new();
    match w.alphabet() {
        Alphabet::Band => {
            for b in BandGen::ALL {
                sums.insert(Generator::Band(b), 0);
            }
        }
        Alphabet::Standard => {
            for i in 1..w.strands() {
                sums.insert(Generator::Std(i as u16), 0);
            }
        }
    }
    for l in w.letters() {
        *sums.entry(l.generator).or_insert(0) += l.sign.value();
    }
    sums
}

pub fn writhe(w: &BraidWord) -> i64 {
    w.letters().iter().map(|l| l.sign.value()).sum()
}

pub fn free_reduce(w: &BraidWord) -> BraidWord {
    let mut stack: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if stack.last() == Some(&l.inverse()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    w.with_letters(stack)
}
