use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use knotcert::band::{conjugacy_min, relation_rules, ConjugacyCache, SearchBudget};
use knotcert::braid::{format_word, parse_word, parse_word_in, to_standard, Alphabet, BraidWord, Letter};
use knotcert::invariants::{alexander, alexander_seifert_oracle, casson_v2, raw_alexander};
use knotcert::poly::LaurentPolynomial;
use knotcert::surgery::{certify_with_cache, PropertyPReport, RouteKind};
use knotcert::verifier::{
    random_band_word, random_minimal_words, run_theorem4_check, st_check_words, st_exhaustive, standard_families,
    verify_theorem3, EnumerationMode, EnumerationOptions, Identification,
};
use knotcert::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn band(t: &str) -> BraidWord {
    parse_word(t, 3).unwrap()
}

fn standard(t: &str, n: usize) -> BraidWord {
    parse_word_in(t, n, Alphabet::Standard).unwrap()
}

fn cache() -> ConjugacyCache {
    ConjugacyCache::new(SearchBudget::default())
}

fn finite_check() -> Outcome {
    let started = Instant::now();
    let (report, rows) = run_theorem4_check(4, 4, &cache()).map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    let expected: BTreeSet<Identification> = [Identification::Trefoil, Identification::FiveTwo].into();
    ensure(report.holds, "finite check reported a violation")?;
    for (name, v) in [("reduced", &report.reduced), ("unfiltered", &report.reduced_without_square_filter), ("brute", &report.brute)] {
        ensure(v.holds && v.violations.is_empty(), format!("{name}: {} violations", v.violations.len()))?;
        ensure(v.exceptions == expected, format!("{name}: exceptions {:?}", v.exceptions))?;
    }
    ensure(report.reduction_gaps.is_empty(), format!("reduction gaps {:?}", report.reduction_gaps))?;
    ensure(report.identities.iter().all(|i| i.rewrites_agree && i.burau_agree), "an identity failed")?;
    ensure(report.links.iter().all(|l| l.components == 3), "a link is not 3-component")?;
    ensure(elapsed < Duration::from_secs(60), format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} rows, {} checked knots, exceptions {{trefoil, five-two}}, {} identities, {:.1}s < 60s",
        rows.len(),
        report.reduced.knot_rows,
        report.identities.len(),
        elapsed.as_secs_f64()
    ))
}

fn genus_one_minimal_words() -> Outcome {
    let budget = SearchBudget::default();
    for t in ["a23 a12 a23 a12", "a12^2 a23 a13"] {
        let g = conjugacy_min(&band(t), &budget).map_err(|e| e.to_string())?;
        ensure(g.minimal_length == 4, format!("{t}: length {}", g.minimal_length))?;
        ensure(g.neg_euler == 1, format!("{t}: -chi {}", g.neg_euler))?;
        ensure(g.genus == Some(Rational::from_integer(1)), format!("{t}: genus {:?}", g.genus))?;
    }
    Ok("delta^2 and a12^2 a23 a13: l = 4, -chi = 1, g = 1".into())
}

fn alexander_agrees_with_seifert() -> Outcome {
    let mut words: BTreeSet<String> = BTreeSet::new();
    let mut knots: Vec<BraidWord> = Vec::new();
    let mut push = |w: BraidWord| {
        if w.component_count() == 1 && words.insert(format!("{}/{}", w.strands(), format_word(&w))) {
            knots.push(w);
        }
    };
    let opts = EnumerationOptions { max_p: 3, max_n: 3, mode: EnumerationMode::Brute, square_filter: false };
    for r in knotcert::verifier::enumerate_cases(&opts, &cache()).map_err(|e| e.to_string())? {
        push(r.word);
    }
    for n in (1..=11).step_by(2) {
        push(standard(&format!("s1^{n}"), 2));
        push(standard(&format!("s1^-{n}"), 2));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let len = rng.gen_range(3..=9);
        let text: Vec<String> =
            (0..len).map(|_| format!("s{}^{}", rng.gen_range(1..=3), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
        push(standard(&text.join(" "), 4));
    }
    for w in &knots {
        let a = alexander(w).map_err(|e| e.to_string())?;
        let b = alexander_seifert_oracle(w).map_err(|e| e.to_string())?;
        ensure(a == b, format!("{w}: burau {a} vs seifert {b}"))?;
    }
    ensure(knots.len() >= 50, format!("only {} knots", knots.len()))?;
    Ok(format!("{} knots, exact equality", knots.len()))
}

fn casson_values() -> Outcome {
    let cases: Vec<(BraidWord, i64)> = vec![
        (standard("s1", 2), 0),
        (band("a12 a23"), 0),
        (standard("s1^3", 2), 1),
        (band("a23 a12 a23 a12"), 1),
        (band("a12^2 a23 a13"), 2),
        (standard("s1 s2^-1 s1 s2^-1", 3), -1),
    ];
    for (w, v) in &cases {
        let got = casson_v2(w).map_err(|e| e.to_string())?;
        ensure(got == *v, format!("{w}: v2 {got}, expected {v}"))?;
        ensure(casson_v2(&w.mirror()).map_err(|e| e.to_string())? == *v, format!("{w}: mirror changes v2"))?;
    }
    for n in (1..=11i64).step_by(2) {
        let got = casson_v2(&standard(&format!("s1^{n}"), 2)).map_err(|e| e.to_string())?;
        ensure(got == (n * n - 1) / 8, format!("T(2,{n}): v2 {got}"))?;
    }
    Ok("unknot 0, trefoil 1, 5_2 2, 4_1 -1, T(2,n) = (n^2-1)/8 for odd n <= 11".into())
}

fn twist_families() -> Outcome {
    let mut passed = Vec::new();
    for (name, f) in standard_families() {
        let v = verify_theorem3(&f).map_err(|e| e.to_string())?;
        if v.holds {
            passed.push(name);
        }
    }
    ensure(passed.len() >= 3, format!("only {} families hold", passed.len()))?;
    Ok(format!("{} families with a2 = 1/8 exactly and at most 2 zeros: {}", passed.len(), passed.join(", ")))
}

fn two_of_three() -> Outcome {
    let c = cache();
    let exhaustive = st_exhaustive(6, &c).map_err(|e| e.to_string())?;
    ensure(exhaustive.holds(), format!("{} violations up to length 6", exhaustive.violations.len()))?;
    let words = random_minimal_words(500, 7, 10, 2024, &c).map_err(|e| e.to_string())?;
    ensure(words.len() == 500, format!("only {} random minimal words", words.len()))?;
    let random = st_check_words(&words, &c).map_err(|e| e.to_string())?;
    ensure(random.holds(), format!("{} random violations", random.violations.len()))?;
    Ok(format!(
        "exhaustive: {} words, {} triples; random: {} words, {} triples; 0 violations",
        exhaustive.words, exhaustive.triples, random.words, random.triples
    ))
}

fn golden(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"));
    serde_json::from_str(&std::fs::read_to_string(&path).expect("golden file")).expect("golden json")
}

fn interval_triples(v: &Value) -> Vec<(String, String, String)> {
    v["intervals"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| (i["lo"].as_str().unwrap().into(), i["hi"].as_str().unwrap().into(), i["rule"].as_str().unwrap().into()))
        .collect()
}

fn route_kinds(v: &Value) -> Vec<String> {
    v["routes"].as_array().unwrap().iter().map(|r| r["kind"].as_str().unwrap().to_string()).collect()
}

fn golden_reports() -> Outcome {
    let c = cache();
    let cases = [
        ("figure_eight", standard("s1 s2^-1 s1 s2^-1", 3)),
        ("five_two", band("a12^2 a23 a13")),
        ("trefoil", band("a23 a12 a23 a12")),
    ];
    for (name, w) in cases {
        let expected = golden(name);
        let got: Value = serde_json::from_str(&certify_with_cache(&w, &c).to_json()).unwrap();
        for field in ["conclusion", "alexander", "v2", "minimal_length", "genus"] {
            ensure(got[field] == expected[field], format!("{name}: {field} {} vs {}", got[field], expected[field]))?;
        }
        ensure(interval_triples(&got) == interval_triples(&expected), format!("{name}: intervals differ"))?;
        ensure(route_kinds(&got) == route_kinds(&expected), format!("{name}: routes differ"))?;
    }
    let trefoil = certify_with_cache(&band("a23 a12 a23 a12"), &c);
    ensure(trefoil.has_route(RouteKind::TrefoilSpecial), "trefoil-special route missing")?;
    Ok("figure_eight, five_two, trefoil match field by field".into())
}

/// `a` equals `b` times a unit `+-t^k`.
fn equal_up_to_units(a: &LaurentPolynomial, b: &LaurentPolynomial) -> bool {
    match (a.min_degree(), b.min_degree()) {
        (None, None) => true,
        (Some(x), Some(y)) => {
            let s = b.shift(x - y);
            *a == s || *a == s.scale(-1)
        }
        _ => false,
    }
}

/// Applies one randomly chosen relation at a random matching position.
fn rewrite_once(w: &BraidWord, rng: &mut impl Rng) -> BraidWord {
    let rules = relation_rules();
    let letters = w.letters();
    let mut sites = Vec::new();
    for (ri, r) in rules.iter().enumerate() {
        for p in 0..=letters.len().saturating_sub(r.left.len()) {
            if letters.len() >= r.left.len() && letters[p..p + r.left.len()] == r.left[..] {
                sites.push((ri, p));
            }
        }
    }
    if sites.is_empty() {
        return w.clone();
    }
    let (ri, p) = sites[rng.gen_range(0..sites.len())];
    let r = &rules[ri];
    let mut out: Vec<Letter> = letters[..p].to_vec();
    out.extend_from_slice(&r.right);
    out.extend_from_slice(&letters[p + r.left.len()..]);
    w.with_letters(out)
}

fn key_intervals(r: &PropertyPReport) -> BTreeSet<String> {
    r.intervals.iter().map(|i| format!("{} {} {}", i.lo, i.hi, i.rule.tag())).collect()
}

fn metamorphic() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut rewritten = 0;
    while rewritten < 1000 {
        let w = { let len = rng.gen_range(2..=9); random_band_word(&mut rng, len) };
        let mut v = w.clone();
        for _ in 0..3 {
            v = rewrite_once(&v, &mut rng);
        }
        if v == w {
            continue;
        }
        rewritten += 1;
        ensure(v.permutation() == w.permutation(), format!("{w} -> {v}: permutation"))?;
        ensure(v.component_count() == w.component_count(), format!("{w} -> {v}: components"))?;
        if w.component_count() == 1 {
            ensure(alexander(&v).unwrap() == alexander(&w).unwrap(), format!("{w} -> {v}: alexander"))?;
        } else {
            let (a, b) = (raw_alexander(&w).unwrap(), raw_alexander(&v).unwrap());
            ensure(equal_up_to_units(&a, &b), format!("{w} -> {v}: raw alexander {a} vs {b}"))?;
        }
        let text = format_word(&w);
        ensure(parse_word(&text, 3).unwrap() == w, format!("round trip of {text}"))?;
        let s = to_standard(&w);
        ensure(parse_word_in(&format_word(&s), 3, Alphabet::Standard).unwrap() == s, format!("round trip of {s}"))?;
    }

    let c = cache();
    let mut certified = 0;
    let mut checked = 0;
    while checked < 40 {
        let w = { let len = rng.gen_range(4..=8); random_band_word(&mut rng, len) };
        if w.component_count() != 1 {
            continue;
        }
        checked += 1;
        let base = certify_with_cache(&w, &c);
        let x = { let len = rng.gen_range(1..=3); random_band_word(&mut rng, len) };
        let conj = x.concat(&w).unwrap().concat(&x.inverse()).unwrap();
        let other = certify_with_cache(&conj, &c);
        ensure(other.conclusion == base.conclusion, format!("{w}: conjugate by {x} changes conclusion"))?;
        ensure(key_intervals(&other) == key_intervals(&base), format!("{w}: conjugate by {x} changes intervals"))?;
        let mirror = certify_with_cache(&w.mirror(), &c);
        ensure(mirror.conclusion == base.conclusion, format!("{w}: mirror changes conclusion"))?;
        let expected: BTreeSet<String> = base
            .intervals
            .iter()
            .map(|i| i.mirrored())
            .map(|i| format!("{} {} {}", i.lo, i.hi, i.rule.tag()))
            .collect();
        ensure(key_intervals(&mirror) == expected, format!("{w}: mirror intervals are not negated"))?;
        certified += usize::from(base.conclusion == knotcert::surgery::Conclusion::PropertyPCertified);
    }
    Ok(format!(
        "{rewritten} rewritten words keep permutation, components and Alexander; {checked} knots ({certified} certified) conjugation- and mirror-equivariant; round trips exact"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("finite 3-braid case check", finite_check),
        ("genus-one minimal words", genus_one_minimal_words),
        ("Alexander polynomial vs Seifert oracle", alexander_agrees_with_seifert),
        ("Casson invariant values", casson_values),
        ("twist families", twist_families),
        ("two-of-three Euler characteristic check", two_of_three),
        ("golden reports", golden_reports),
        ("metamorphic invariance", metamorphic),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
