//! Surgery-slope intervals from twist censuses, and the Property P report.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::band::{BandError, ConjugacyCache, ConjugacyClosure, SearchBudget};
use crate::braid::{format_word, standard_to_band, to_standard, Alphabet, BraidWord};
use crate::census::{census_band_word, census_homogeneous, is_homogeneous, TwistCensus};
use crate::invariants::{alexander, v2_from_alexander};
use crate::poly::LaurentPolynomial;
use crate::Rational;

/// An endpoint of an open slope interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    pub fn int(n: i64) -> Bound {
        Bound::Finite(Rational::from_integer(n))
    }

    pub fn negated(self) -> Bound {
        match self {
            Bound::NegInf => Bound::PosInf,
            Bound::PosInf => Bound::NegInf,
            Bound::Finite(q) => Bound::Finite(-q),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::PosInf => f.write_str("inf"),
            Bound::Finite(q) => f.write_str(&crate::rational_string(q)),
        }
    }
}

/// A surgery slope: a rational `p/q` or the meridian `1/0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slope {
    Finite(Rational),
    Infinity,
}

/// Slopes whose surgery is a homology sphere: exactly `1/n`, `n != 0`.
pub fn is_homology_sphere_slope(r: &Slope) -> bool {
    match r {
        Slope::Finite(q) => q.numer().abs() == 1,
        Slope::Infinity => false,
    }
}

pub fn homology_sphere_slopes() -> fn(&Slope) -> bool {
    is_homology_sphere_slope
}

/// Which twist configuration justifies an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntervalRule {
    PosDoubleTwist,
    NegDoubleTwist,
    MixedDoubleTwists,
    DisjointPosDoubleTwists,
    DisjointNegDoubleTwists,
    PosTripleTwist,
    NegTripleTwist,
    TwoGabaiDisks,
}

impl IntervalRule {
    pub fn mirrored(self) -> IntervalRule {
        use IntervalRule::*;
        match self {
            PosDoubleTwist => NegDoubleTwist,
            NegDoubleTwist => PosDoubleTwist,
            DisjointPosDoubleTwists => DisjointNegDoubleTwists,
            DisjointNegDoubleTwists => DisjointPosDoubleTwists,
            PosTripleTwist => NegTripleTwist,
            NegTripleTwist => PosTripleTwist,
            other => other,
        }
    }

    pub fn tag(self) -> &'static str {
        use IntervalRule::*;
        match self {
            PosDoubleTwist => "pos-double-twist",
            NegDoubleTwist => "neg-double-twist",
            MixedDoubleTwists => "mixed-double-twists",
            DisjointPosDoubleTwists => "disjoint-pos-double-twists",
            DisjointNegDoubleTwists => "disjoint-neg-double-twists",
            PosTripleTwist => "pos-triple-twist",
            NegTripleTwist => "neg-triple-twist",
            TwoGabaiDisks => "two-gabai-disks",
        }
    }

    /// What the rule asserts about surgeries with slope in its interval.
    pub fn statement(self) -> &'static str {
        use IntervalRule::*;
        match self {
            PosDoubleTwist => "a positive double twist gives a taut foliation for every slope in (-inf, 1)",
            NegDoubleTwist => "a negative double twist gives a taut foliation for every slope in (-1, inf)",
            MixedDoubleTwists => "positive and negative double twists give a taut foliation for every slope except inf",
            DisjointPosDoubleTwists => "two disjoint positive double twists give a taut foliation for every slope in (-inf, 2)",
            DisjointNegDoubleTwists => "two disjoint negative double twists give a taut foliation for every slope in (-2, inf)",
            PosTripleTwist => "a positive triple twist on a non-trefoil knot gives a taut foliation for every slope in (-inf, 2)",
            NegTripleTwist => "a negative triple twist on a non-trefoil knot gives a taut foliation for every slope in (-2, inf)",
            TwoGabaiDisks => "two Gabai disks meeting in at most one point of a non-trefoil knot give an essential lamination for every slope in (-2, 2)",
        }
    }
}

/// An open interval of slopes `(lo, hi)` together with its justification.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SlopeInterval {
    pub lo: Bound,
    pub hi: Bound,
    pub rule: IntervalRule,
    /// The minimal word whose census triggered the rule.
    pub witness: Option<String>,
}

impl SlopeInterval {
    pub fn new(lo: Bound, hi: Bound, rule: IntervalRule) -> SlopeInterval {
        assert!(lo < hi, "empty slope interval ({lo}, {hi})");
        SlopeInterval { lo, hi, rule, witness: None }
    }

    pub fn contains(&self, r: Rational) -> bool {
        self.lo < Bound::Finite(r) && Bound::Finite(r) < self.hi
    }

    /// Image under `r -> -r`.
    pub fn mirrored(&self) -> SlopeInterval {
        SlopeInterval { lo: self.hi.negated(), hi: self.lo.negated(), rule: self.rule.mirrored(), witness: self.witness.clone() }
    }

    fn key(&self) -> (Bound, Bound, IntervalRule) {
        (self.lo, self.hi, self.rule)
    }
}

impl Serialize for SlopeInterval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SlopeInterval", 4)?;
        st.serialize_field("lo", &self.lo.to_string())?;
        st.serialize_field("hi", &self.hi.to_string())?;
        st.serialize_field("rule", self.rule.tag())?;
        if let Some(w) = &self.witness {
            st.serialize_field("witness", w)?;
        }
        st.end()
    }
}

/// Every row of the rule table whose precondition the census meets.
pub fn intervals_from_census(c: &TwistCensus, is_trefoil: bool) -> Vec<SlopeInterval> {
    use Bound::*;
    use IntervalRule::*;
    let mut out = Vec::new();
    if c.pos_double >= 1 {
        out.push(SlopeInterval::new(NegInf, Bound::int(1), PosDoubleTwist));
    }
    if c.neg_double >= 1 {
        out.push(SlopeInterval::new(Bound::int(-1), PosInf, NegDoubleTwist));
    }
    if c.pos_double >= 1 && c.neg_double >= 1 {
        out.push(SlopeInterval::new(NegInf, PosInf, MixedDoubleTwists));
    }
    if c.disjoint_pos_double_pairs {
        out.push(SlopeInterval::new(NegInf, Bound::int(2), DisjointPosDoubleTwists));
    }
    if c.disjoint_neg_double_pairs {
        out.push(SlopeInterval::new(Bound::int(-2), PosInf, DisjointNegDoubleTwists));
    }
    if !is_trefoil {
        if c.pos_triple >= 1 {
            out.push(SlopeInterval::new(NegInf, Bound::int(2), PosTripleTwist));
        }
        if c.neg_triple >= 1 {
            out.push(SlopeInterval::new(Bound::int(-2), PosInf, NegTripleTwist));
        }
        if c.has_two_separate_disks() {
            out.push(SlopeInterval::new(Bound::int(-2), Bound::int(2), TwoGabaiDisks));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum RouteKind {
    #[serde(rename = "casson-nonzero")]
    CassonNonzero,
    #[serde(rename = "three-braid-census")]
    ThreeBraidCensus,
    #[serde(rename = "homogeneous-census")]
    HomogeneousCensus,
    #[serde(rename = "twist-lemma")]
    TwistLemma,
    #[serde(rename = "alternating-5_2-fallback")]
    Alternating52Fallback,
    #[serde(rename = "trefoil-special")]
    TrefoilSpecial,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateRoute {
    pub kind: RouteKind,
    pub cite: String,
    pub witness: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Conclusion {
    #[serde(rename = "PropertyP-certified")]
    PropertyPCertified,
    #[serde(rename = "trefoil")]
    Trefoil,
    #[serde(rename = "unknot")]
    Unknot,
    #[serde(rename = "not-a-knot")]
    NotAKnot,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = serde_json::to_value(self).map_err(|_| fmt::Error)?;
        f.write_str(v.as_str().unwrap_or_default())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyPReport {
    pub input: String,
    pub strands: usize,
    pub conclusion: Conclusion,
    pub components: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "crate::serialize_opt_rational")]
    pub genus: Option<Rational>,
    pub alexander: Option<String>,
    pub v2: Option<i64>,
    pub census: Option<TwistCensus>,
    pub intervals: Vec<SlopeInterval>,
    pub routes: Vec<CertificateRoute>,
    pub notes: Vec<String>,
}

impl PropertyPReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn has_route(&self, kind: RouteKind) -> bool {
        self.routes.iter().any(|r| r.kind == kind)
    }

    pub fn covers(&self, r: Rational) -> bool {
        self.intervals.iter().any(|i| i.contains(r))
    }
}

fn trefoil_polynomial() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(1, 1), (0, -1), (-1, 1)])
}

fn five_two_polynomial() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(1, 2), (0, -3), (-1, 2)])
}

/// Intervals of every census, deduplicated; the first word to trigger a row
/// becomes its witness.
fn union_intervals(censuses: &[(String, TwistCensus)], is_trefoil: bool) -> Vec<SlopeInterval> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (word, c) in censuses {
        for mut i in intervals_from_census(c, is_trefoil) {
            if seen.insert(i.key()) {
                i.witness = Some(word.clone());
                out.push(i);
            }
        }
    }
    out.sort_by_key(|a| a.key());
    out
}

/// The census of every word in the minimal class, best first (most Gabai
/// disks, then word order).
fn class_censuses(closure: &ConjugacyClosure) -> Vec<(String, TwistCensus)> {
    let mut all: Vec<(String, TwistCensus)> = closure
        .minimal_representatives()
        .into_iter()
        .map(|w| (format_word(&w), census_band_word(&w).expect("band word")))
        .collect();
    all.sort_by(|a, b| match b.1.gabai_disks().cmp(&a.1.gabai_disks()) {
        Ordering::Equal => a.0.cmp(&b.0),
        o => o,
    });
    all
}

/// Runs every applicable certificate route on `w`.
pub fn certify(w: &BraidWord, budget: &SearchBudget) -> PropertyPReport {
    certify_with_cache(w, &ConjugacyCache::new(*budget))
}

pub fn certify_with_cache(w: &BraidWord, cache: &ConjugacyCache) -> PropertyPReport {
    let components = w.component_count();
    let mut report = PropertyPReport {
        input: format_word(w),
        strands: w.strands(),
        conclusion: Conclusion::Inconclusive,
        components,
        minimal_length: None,
        minimal_word: None,
        genus: None,
        alexander: None,
        v2: None,
        census: None,
        intervals: Vec::new(),
        routes: Vec::new(),
        notes: Vec::new(),
    };
    if components != 1 {
        report.conclusion = Conclusion::NotAKnot;
        report.notes.push(format!("closure has {components} components"));
        return report;
    }
    let delta = alexander(w).expect("knot closure has an Alexander polynomial");
    let v2 = v2_from_alexander(&delta);
    report.alexander = Some(delta.to_string());
    report.v2 = Some(v2);

    let mut unknot = false;
    let mut trefoil = false;
    let mut censuses: Vec<(String, TwistCensus)> = Vec::new();
    let mut band_census: Option<(String, TwistCensus)> = None;
    let mut five_two = false;

    if w.strands() == 3 {
        let band = match w.alphabet() {
            Alphabet::Band => w.clone(),
            Alphabet::Standard => standard_to_band(w).expect("3-strand standard word"),
        };
        match cache.closure(&band) {
            Ok(closure) => {
                let l = closure.minimal_length;
                report.minimal_length = Some(l);
                report.minimal_word = Some(format_word(&closure.witness()));
                report.genus = Some(Rational::new(l as i64 - 2, 2));
                unknot = l == 2;
                trefoil = l == 4 && delta == trefoil_polynomial();
                five_two = l == 4 && delta == five_two_polynomial();
                if !unknot {
                    let class = class_censuses(&closure);
                    band_census = class.first().cloned();
                    censuses.extend(class);
                }
            }
            Err(e @ (BandError::BudgetExceeded { .. } | BandError::TooLong { .. })) => {
                report.notes.push(format!("band route skipped: {e}"));
            }
            Err(e) => report.notes.push(format!("band route failed: {e}")),
        }
    }

    let standard = to_standard(w);
    let mut homogeneous_census = None;
    if is_homogeneous(&standard).is_some() {
        // Seifert's algorithm: chi = strands - letters
        let twice_genus = standard.len() as i64 - standard.strands() as i64 + 1;
        if twice_genus == 0 {
            unknot = true;
        } else {
            let genus = Rational::new(twice_genus, 2);
            report.genus.get_or_insert(genus);
            // genus-one fibred knots are the trefoils and the figure-eight
            trefoil |= twice_genus == 2 && delta == trefoil_polynomial();
            let c = census_homogeneous(&standard).expect("homogeneous knot word");
            censuses.push((format_word(&standard), c.clone()));
            homogeneous_census = Some((format_word(&standard), c));
        }
    }

    if unknot {
        report.conclusion = Conclusion::Unknot;
        report.notes.push("closure is the unknot; Property P concerns non-trivial knots".into());
        return report;
    }

    report.intervals = union_intervals(&censuses, trefoil);
    report.census = band_census.as_ref().or(homogeneous_census.as_ref()).map(|(_, c)| c.clone());

    if v2 != 0 {
        report.routes.push(CertificateRoute {
            kind: RouteKind::CassonNonzero,
            cite: "the Casson invariant of 1/n surgery is n*v2, nonzero for every n != 0, so no such surgery is a homotopy sphere".into(),
            witness: json!({ "v2": v2, "alexander": delta.to_string() }),
        });
    }
    if let Some((word, c)) = &band_census {
        if !trefoil && c.has_two_separate_disks() {
            report.routes.push(CertificateRoute {
                kind: RouteKind::ThreeBraidCensus,
                cite: "a minimal band surface of a closed 3-braid knot other than the trefoil with two Gabai disks admits essential laminations for slopes in (-2, 2)".into(),
                witness: json!({ "word": word, "gabai_disks": c.gabai_disks() }),
            });
        }
    }
    if let Some((word, c)) = &homogeneous_census {
        if !trefoil && c.has_two_separate_disks() {
            report.routes.push(CertificateRoute {
                kind: RouteKind::HomogeneousCensus,
                cite: "the Seifert surface of a non-trivial homogeneous braid is minimal and carries two Gabai disks".into(),
                witness: json!({ "word": word, "gabai_disks": c.gabai_disks() }),
            });
        }
    }
    let one = Rational::from_integer(1);
    if let Some(i) = report.intervals.iter().find(|i| i.contains(one) && i.contains(-one)) {
        report.routes.push(CertificateRoute {
            kind: RouteKind::TwistLemma,
            cite: "both homotopy-sphere slopes 1 and -1 lie in a laminar slope interval".into(),
            witness: json!({ "lo": i.lo.to_string(), "hi": i.hi.to_string(), "rule": i.rule.tag() }),
        });
    }
    if five_two {
        report.routes.push(CertificateRoute {
            kind: RouteKind::Alternating52Fallback,
            cite: "the knot 5_2 is covered by the alternating-knot surgery result".into(),
            witness: json!({ "minimal_length": 4, "alexander": delta.to_string() }),
        });
    }
    if trefoil {
        let positive_writhe = crate::braid::writhe(w) > 0;
        report.routes.push(CertificateRoute {
            kind: RouteKind::TrefoilSpecial,
            cite: "the trefoil has Property P (v2 = 1), but surgery with slope 1 or -1, depending on chirality, yields the Poincare homology sphere with finite fundamental group".into(),
            witness: json!({ "v2": v2, "finite_pi1_slope": if positive_writhe { "1/1" } else { "-1/1" } }),
        });
        report.conclusion = Conclusion::Trefoil;
        report.notes.push(format!(
            "surgery with slope {} has finite fundamental group",
            if positive_writhe { "1" } else { "-1" }
        ));
        return report;
    }
    if report.routes.is_empty() {
        report.routes.push(CertificateRoute {
            kind: RouteKind::Inconclusive,
            cite: "no route applies".into(),
            witness: json!({}),
        });
        report.conclusion = Conclusion::Inconclusive;
    } else {
        report.conclusion = Conclusion::PropertyPCertified;
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::band::delta_form;
    use crate::braid::parse_word;
    use crate::census::census_3braid;

    fn w(t: &str, n: usize) -> BraidWord {
        parse_word(t, n).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn bounds_order_and_print() {
        assert!(Bound::NegInf < Bound::int(-5));
        assert!(Bound::int(7) < Bound::PosInf);
        assert_eq!(Bound::Finite(q(-1, 2)).to_string(), "-1/2");
        assert_eq!(Bound::int(2).to_string(), "2/1");
        assert_eq!(Bound::NegInf.to_string(), "-inf");
    }

    #[test]
    fn homology_sphere_predicate() {
        let p = homology_sphere_slopes();
        assert!(p(&Slope::Finite(q(1, 1))));
        assert!(!p(&Slope::Finite(q(2, 3))));
        assert!(p(&Slope::Finite(q(-1, 5))));
        assert!(!p(&Slope::Finite(q(0, 1))));
        assert!(!p(&Slope::Infinity));
    }

    #[test]
    fn five_two_census_gives_one_interval() {
        let df = delta_form(&w("a12^2 a23 a13", 3)).unwrap();
        let c = census_3braid(&df, true).unwrap();
        let iv = intervals_from_census(&c, false);
        assert_eq!(iv.len(), 1);
        assert_eq!((iv[0].lo, iv[0].hi, iv[0].rule), (Bound::NegInf, Bound::int(1), IntervalRule::PosDoubleTwist));
    }

    #[test]
    fn figure_eight_census_gives_all_but_infinity() {
        let c = census_band_word(&w("a12 a23^-1 a12 a23^-1", 3)).unwrap();
        let iv = intervals_from_census(&c, false);
        assert!(iv.iter().any(|i| (i.lo, i.hi, i.rule) == (Bound::NegInf, Bound::PosInf, IntervalRule::MixedDoubleTwists)));
    }

    #[test]
    fn triple_and_disjoint_doubles() {
        let word = w("s1^3 s2^3", 3);
        assert_eq!(word.component_count(), 1);
        let c = census_homogeneous(&word).unwrap();
        let iv = intervals_from_census(&c, false);
        let rules: Vec<_> = iv.iter().map(|i| i.rule).collect();
        assert!(rules.contains(&IntervalRule::PosTripleTwist));
        assert!(rules.contains(&IntervalRule::DisjointPosDoubleTwists));
        assert!(iv.iter().all(|i| i.rule != IntervalRule::PosTripleTwist || i.hi == Bound::int(2)));
    }

    #[test]
    fn trefoil_excludes_triple_and_theorem_rows() {
        let c = census_homogeneous(&w("s1^3", 2)).unwrap();
        let iv = intervals_from_census(&c, true);
        assert!(iv.iter().all(|i| !matches!(i.rule, IntervalRule::PosTripleTwist | IntervalRule::TwoGabaiDisks)));
        assert!(!iv.is_empty());
    }

    #[test]
    fn mirrored_interval() {
        let i = SlopeInterval::new(Bound::NegInf, Bound::int(2), IntervalRule::PosTripleTwist).mirrored();
        assert_eq!((i.lo, i.hi, i.rule), (Bound::int(-2), Bound::PosInf, IntervalRule::NegTripleTwist));
        assert!(i.contains(q(-3, 2)) && !i.contains(q(-2, 1)));
    }

    #[test]
    fn certify_five_two() {
        let r = certify(&w("a12^2 a23 a13", 3), &SearchBudget::default());
        assert_eq!(r.conclusion, Conclusion::PropertyPCertified);
        assert_eq!(r.v2, Some(2));
        assert!(r.has_route(RouteKind::CassonNonzero));
        assert!(r.has_route(RouteKind::Alternating52Fallback));
        assert!(!r.has_route(RouteKind::ThreeBraidCensus));
        assert_eq!(r.intervals.len(), 1);
        assert_eq!(r.intervals[0].rule, IntervalRule::PosDoubleTwist);
    }

    #[test]
    fn certify_trefoil() {
        for word in [w("a23 a12 a23 a12", 3), w("s1^3", 2), w("s1 s2 s1 s2", 3)] {
            let r = certify(&word, &SearchBudget::default());
            assert_eq!(r.conclusion, Conclusion::Trefoil, "{word}");
            assert!(r.has_route(RouteKind::TrefoilSpecial));
        }
    }

    #[test]
    fn certify_figure_eight() {
        let r = certify(&w("s1 s2^-1 s1 s2^-1", 3), &SearchBudget::default());
        assert_eq!(r.conclusion, Conclusion::PropertyPCertified);
        assert!(r.has_route(RouteKind::HomogeneousCensus));
        assert!(r.has_route(RouteKind::TwistLemma));
        assert!(r.intervals.iter().any(|i| i.lo == Bound::NegInf && i.hi == Bound::PosInf));
    }

    #[test]
    fn certify_trivial_cases() {
        let r = certify(&w("", 3), &SearchBudget::default());
        assert_eq!(r.conclusion, Conclusion::NotAKnot);
        assert_eq!(r.alexander, None);
        let r = certify(&w("a23 a12", 3), &SearchBudget::default());
        assert_eq!(r.conclusion, Conclusion::Unknot);
        let r = certify(&w("s1 s2 s3", 4), &SearchBudget::default());
        assert_eq!(r.conclusion, Conclusion::Unknot);
    }

    #[test]
    fn budget_exhaustion_degrades_to_general_routes() {
        let tight = SearchBudget { max_length: 2, max_states: 10 };
        let r = certify(&w("a12^2 a23 a13", 3), &tight);
        assert_eq!(r.minimal_length, None);
        assert!(r.has_route(RouteKind::CassonNonzero));
        assert!(!r.has_route(RouteKind::Alternating52Fallback));
        assert!(r.notes.iter().any(|n| n.contains("band route skipped")));
    }

    #[test]
    fn json_shape() {
        let r = certify(&w("a12^2 a23 a13", 3), &SearchBudget::default());
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["conclusion"], "PropertyP-certified");
        assert_eq!(v["genus"], "1/1");
        assert_eq!(v["alexander"], "2*t - 3 + 2*t^-1");
        assert_eq!(v["intervals"][0]["lo"], "-inf");
        assert_eq!(v["intervals"][0]["hi"], "1/1");
        assert_eq!(v["routes"][0]["kind"], "casson-nonzero");
    }
}
