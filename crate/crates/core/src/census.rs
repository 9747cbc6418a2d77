//! Double and triple twists on minimal spanning surfaces: band surfaces of
//! minimal 3-braid words and Seifert surfaces of homogeneous braids.
//!
//! Two same-sign occurrences of one generator cobound a Gabai disk; three give
//! a second disk. Each group of occurrences `q1 < q2 < ...` of a generator with
//! a fixed sign yields a double twist for every consecutive pair and a triple
//! twist on `q1 q2 q3`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::band::DeltaForm;
use crate::braid::{Alphabet, BandGen, BraidWord, Generator, Letter, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("census requires a certified minimal representative")]
    NotMinimal,
    #[error("braid is not homogeneous")]
    NotHomogeneous,
    #[error("closure is not a knot")]
    NotAKnot,
    #[error("closure is trivial: {letters} letters on {strands} strands")]
    TrivialClosure { letters: usize, strands: usize },
    #[error("expected a {0} word")]
    WrongAlphabet(Alphabet),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TwistKind {
    Double,
    Triple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SurfaceKind {
    #[serde(rename = "band-B3")]
    BandB3,
    #[serde(rename = "seifert-homogeneous")]
    SeifertHomogeneous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistEvidence {
    pub kind: TwistKind,
    #[serde(serialize_with = "serialize_sign")]
    pub sign: Sign,
    #[serde(serialize_with = "crate::serialize_display")]
    pub generator: Generator,
    pub positions: Vec<usize>,
}

fn serialize_sign<S: serde::Serializer>(s: &Sign, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_str(&s.symbol())
}

impl TwistEvidence {
    fn span(&self) -> (usize, usize) {
        (self.positions[0], *self.positions.last().unwrap())
    }

    fn shares_position(&self, other: &TwistEvidence) -> bool {
        self.positions.iter().any(|p| other.positions.contains(p))
    }

    fn spans_overlap(&self, other: &TwistEvidence) -> bool {
        let (a0, a1) = self.span();
        let (b0, b1) = other.span();
        a0 <= b1 && b0 <= a1
    }
}

impl fmt::Display for TwistEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            TwistKind::Double => "double",
            TwistKind::Triple => "triple",
        };
        write!(f, "{}{kind}({}) at {:?}", self.sign.symbol(), self.generator, self.positions)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistCensus {
    pub evidence: Vec<TwistEvidence>,
    pub pos_double: usize,
    pub neg_double: usize,
    pub pos_triple: usize,
    pub neg_triple: usize,
    /// Two positive double twists whose position spans do not overlap.
    pub disjoint_pos_double_pairs: bool,
    pub disjoint_neg_double_pairs: bool,
    pub surface_kind: SurfaceKind,
}

impl TwistCensus {
    pub fn from_evidence(mut evidence: Vec<TwistEvidence>, surface_kind: SurfaceKind) -> Self {
        evidence.sort_by(|a, b| (a.positions[0], a.kind, &a.positions).cmp(&(b.positions[0], b.kind, &b.positions)));
        let count = |kind, sign| evidence.iter().filter(|e| e.kind == kind && e.sign == sign).count();
        let disjoint = |sign| {
            let doubles: Vec<&TwistEvidence> =
                evidence.iter().filter(|e| e.kind == TwistKind::Double && e.sign == sign).collect();
            doubles.iter().enumerate().any(|(i, a)| doubles[i + 1..].iter().any(|b| !a.spans_overlap(b)))
        };
        TwistCensus {
            pos_double: count(TwistKind::Double, Sign::Pos),
            neg_double: count(TwistKind::Double, Sign::Neg),
            pos_triple: count(TwistKind::Triple, Sign::Pos),
            neg_triple: count(TwistKind::Triple, Sign::Neg),
            disjoint_pos_double_pairs: disjoint(Sign::Pos),
            disjoint_neg_double_pairs: disjoint(Sign::Neg),
            evidence,
            surface_kind,
        }
    }

    /// Gabai disks supplied by the evidence: one per double twist, at most two
    /// per generator and sign.
    pub fn gabai_disks(&self) -> usize {
        let mut per_group: BTreeMap<(String, bool), usize> = BTreeMap::new();
        for e in self.evidence.iter().filter(|e| e.kind == TwistKind::Double) {
            *per_group.entry((e.generator.to_string(), e.sign == Sign::Pos)).or_default() += 1;
        }
        per_group.values().map(|&c| c.min(2)).sum()
    }

    /// Two Gabai disks with no letter in common: a triple twist, or two double
    /// twists sharing no position.
    pub fn has_two_separate_disks(&self) -> bool {
        if self.pos_triple + self.neg_triple > 0 {
            return true;
        }
        let doubles: Vec<&TwistEvidence> = self.evidence.iter().filter(|e| e.kind == TwistKind::Double).collect();
        doubles.iter().enumerate().any(|(i, a)| doubles[i + 1..].iter().any(|b| !a.shares_position(b)))
    }

    pub fn is_empty(&self) -> bool {
        self.evidence.is_empty()
    }
}

/// Evidence from `letters`, with positions shifted by `offset`.
fn group_evidence(letters: &[Letter], offset: usize) -> Vec<TwistEvidence> {
    let mut groups: BTreeMap<(Generator, Sign), Vec<usize>> = BTreeMap::new();
    for (i, l) in letters.iter().enumerate() {
        groups.entry((l.generator, l.sign)).or_default().push(offset + i);
    }
    let mut out = Vec::new();
    for ((generator, sign), ps) in groups {
        for pair in ps.windows(2) {
            out.push(TwistEvidence { kind: TwistKind::Double, sign, generator, positions: pair.to_vec() });
        }
        if ps.len() >= 3 {
            out.push(TwistEvidence { kind: TwistKind::Triple, sign, generator, positions: ps[..3].to_vec() });
        }
    }
    out
}

/// Census of `delta^k P N` read from exponent sums: each generator of `P`
/// occurring twice gives a positive double twist, three times a triple twist,
/// four times a second double twist; `N` likewise with negative signs.
/// `|k| >= 2` adds two double twists of sign `k` on the first two copies of
/// `delta`. Positions index the word [`DeltaForm::word`].
pub fn census_3braid(df: &DeltaForm, minimal: bool) -> Result<TwistCensus, CensusError> {
    if !minimal {
        return Err(CensusError::NotMinimal);
    }
    let offset = 2 * df.k.unsigned_abs() as usize;
    let mut evidence = group_evidence(df.p.letters(), offset);
    evidence.extend(group_evidence(df.n.letters(), offset + df.p.len()));
    if df.k.abs() >= 2 {
        // delta = a23 a12, delta^-1 = a12^-1 a23^-1
        let (sign, first, second) =
            if df.k > 0 { (Sign::Pos, BandGen::A23, BandGen::A12) } else { (Sign::Neg, BandGen::A12, BandGen::A23) };
        for (g, ps) in [(first, vec![0, 2]), (second, vec![1, 3])] {
            evidence.push(TwistEvidence { kind: TwistKind::Double, sign, generator: Generator::Band(g), positions: ps });
        }
    }
    Ok(TwistCensus::from_evidence(evidence, SurfaceKind::BandB3))
}

/// Literal census of a minimal band word: same-sign occurrences of each
/// generator anywhere in the word.
pub fn census_band_word(w: &BraidWord) -> Result<TwistCensus, CensusError> {
    if w.alphabet() != Alphabet::Band {
        return Err(CensusError::WrongAlphabet(Alphabet::Band));
    }
    Ok(TwistCensus::from_evidence(group_evidence(w.letters(), 0), SurfaceKind::BandB3))
}

/// The sign of every generator that occurs, if each occurs with one sign only.
pub fn is_homogeneous(w: &BraidWord) -> Option<BTreeMap<Generator, Sign>> {
    let mut signs = BTreeMap::new();
    for l in w.letters() {
        if *signs.entry(l.generator).or_insert(l.sign) != l.sign {
            return None;
        }
    }
    Some(signs)
}

/// Census on the Seifert surface of a homogeneous knot braid, where
/// consecutive occurrences of `s_i` (ignoring other generators) cobound a
/// Gabai disk.
pub fn census_homogeneous(w: &BraidWord) -> Result<TwistCensus, CensusError> {
    if w.alphabet() != Alphabet::Standard {
        return Err(CensusError::WrongAlphabet(Alphabet::Standard));
    }
    if is_homogeneous(w).is_none() {
        return Err(CensusError::NotHomogeneous);
    }
    if w.component_count() != 1 {
        return Err(CensusError::NotAKnot);
    }
    if w.len() < w.strands() {
        return Err(CensusError::TrivialClosure { letters: w.len(), strands: w.strands() });
    }
    Ok(TwistCensus::from_evidence(group_evidence(w.letters(), 0), SurfaceKind::SeifertHomogeneous))
}
