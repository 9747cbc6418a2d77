//! Exact polynomial invariants of braid closures: reduced Burau matrices, the
//! Alexander polynomial by two independent routes, the Casson knot invariant
//! `v2`, linking numbers and twist families.

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::braid::{self, Alphabet, BraidError, BraidWord, Generator, Letter, Sign};
use crate::matrix::PolyMatrix;
use crate::poly::{LaurentPolynomial, NormalizeError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("closure has {0} components, expected a knot")]
    NotAKnot(usize),
    #[error("closure has {0} components, expected a 2-component link")]
    NotTwoComponents(usize),
    #[error("expected a standard-alphabet word")]
    WrongAlphabet,
    #[error("normalization failed: {0}")]
    Normalize(#[from] NormalizeError),
    #[error("need at least 3 distinct odd samples, got {0}")]
    TooFewSamples(usize),
    #[error("sample n = {0} must be odd")]
    EvenSample(i64),
    #[error("family member n = {n} closes to {components} components")]
    NonKnotMember { n: i64, components: usize },
    #[error("v2 at n = {n} is {actual} but the quadratic predicts {predicted}")]
    InconsistentFit { n: i64, predicted: Rational, actual: i64 },
    #[error(transparent)]
    Braid(#[from] BraidError),
}

/// Alexander polynomial, Casson invariant and the genus lower bound
/// `span(Delta) / 2` for a knot closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotInvariants {
    pub alexander: LaurentPolynomial,
    pub v2: i64,
    pub genus_bound: i64,
}

fn require_knot(w: &BraidWord) -> Result<(), InvariantError> {
    match w.component_count() {
        1 => Ok(()),
        c => Err(InvariantError::NotAKnot(c)),
    }
}

/// Reduced Burau image of one letter on `n` strands.
fn burau_letter(n: usize, letter: &Letter) -> PolyMatrix {
    let Generator::Std(i) = letter.generator else { panic!("standard letter expected") };
    let m = n - 1;
    let r = i as usize - 1;
    let t = LaurentPolynomial::t();
    let t_inv = LaurentPolynomial::monomial(1, -1);
    let mut out = PolyMatrix::identity(m);
    // Only row r differs from the identity: (t, -t, 1) at columns r-1, r, r+1;
    // the inverse has (1, -t^-1, t^-1) there.
    let (left, diag, right) = match letter.sign {
        Sign::Pos => (t.clone(), -&t, LaurentPolynomial::one()),
        Sign::Neg => (LaurentPolynomial::one(), -&t_inv, t_inv),
    };
    if r >= 1 {
        out.set(r, r - 1, left);
    }
    out.set(r, r, diag);
    if r + 1 < m {
        out.set(r, r + 1, right);
    }
    out
}

pub fn burau_reduced(w: &BraidWord) -> Result<PolyMatrix, InvariantError> {
    if w.alphabet() != Alphabet::Standard {
        return Err(InvariantError::WrongAlphabet);
    }
    let n = w.strands();
    Ok(w.letters().iter().fold(PolyMatrix::identity(n - 1), |acc, l| acc.mul(&burau_letter(n, l))))
}

/// `det(I - burau(w)) * (1 - t) / (1 - t^n)` before normalization.
pub fn raw_alexander(w: &BraidWord) -> Result<LaurentPolynomial, InvariantError> {
    let sw = braid::to_standard(w);
    let n = sw.strands();
    let b = burau_reduced(&sw)?;
    let det = PolyMatrix::identity(n - 1).sub(&b).determinant();
    let one_minus_t = &LaurentPolynomial::one() - &LaurentPolynomial::t();
    let one_minus_tn = &LaurentPolynomial::one() - &LaurentPolynomial::monomial(1, n as i32);
    Ok((&det * &one_minus_t).div_exact(&one_minus_tn).unwrap_or_default())
}

/// Alexander polynomial of a knot closure, symmetric with value 1 at `t = 1`.
pub fn alexander(w: &BraidWord) -> Result<LaurentPolynomial, InvariantError> {
    require_knot(w)?;
    Ok(raw_alexander(w)?.normalize_symmetric()?)
}

/// Seifert matrix of the surface built from the closed braid diagram: one disk
/// per strand, one half-twisted band per letter. The basis consists of the
/// loops through consecutive bands of the same generator.
pub fn seifert_matrix(w: &BraidWord) -> Result<Vec<Vec<i64>>, InvariantError> {
    if w.alphabet() != Alphabet::Standard {
        return Err(InvariantError::WrongAlphabet);
    }
    struct Loop {
        column: usize,
        index: usize,
        first: (usize, i64),
        second: (usize, i64),
    }
    let mut columns: Vec<Vec<(usize, i64)>> = vec![Vec::new(); w.strands()];
    for (pos, l) in w.letters().iter().enumerate() {
        let Generator::Std(i) = l.generator else { unreachable!() };
        columns[i as usize].push((pos, l.sign.value()));
    }
    let mut loops = Vec::new();
    for (column, bands) in columns.iter().enumerate() {
        for (index, pair) in bands.windows(2).enumerate() {
            loops.push(Loop { column, index, first: pair[0], second: pair[1] });
        }
    }
    let m = loops.len();
    let mut v = vec![vec![0i64; m]; m];
    for (x, a) in loops.iter().enumerate() {
        v[x][x] = -(a.first.1 + a.second.1) / 2;
        for (y, b) in loops.iter().enumerate() {
            if a.column == b.column && b.index == a.index + 1 {
                // shared band a.second == b.first
                let eps = a.second.1;
                v[x][y] = (1 + eps) / 2;
                v[y][x] = (eps - 1) / 2;
            } else if b.column == a.column + 1 {
                let (p, q) = (a.first.0, a.second.0);
                let (r, s) = (b.first.0, b.second.0);
                if p < r && r < q && q < s {
                    v[x][y] = 1;
                } else if r < p && p < s && s < q {
                    v[x][y] = -1;
                }
            }
        }
    }
    Ok(v)
}

/// Alexander polynomial from `det(V - t V^T)`, independent of the Burau route.
pub fn alexander_seifert_oracle(w: &BraidWord) -> Result<LaurentPolynomial, InvariantError> {
    require_knot(w)?;
    let sw = braid::to_standard(w);
    let v = seifert_matrix(&sw)?;
    let m = v.len();
    let t = LaurentPolynomial::t();
    let mut mat = PolyMatrix::zero(m);
    for i in 0..m {
        for j in 0..m {
            let e = &LaurentPolynomial::constant(v[i][j]) - &t.scale(v[j][i]);
            mat.set(i, j, e);
        }
    }
    Ok(mat.determinant().normalize_symmetric()?)
}

/// `Delta''(1) / 2` of a normalized Alexander polynomial.
pub fn v2_from_alexander(delta: &LaurentPolynomial) -> i64 {
    let second = delta.derivative().derivative().eval_at_one();
    assert!(second % 2 == 0, "Delta''(1) is even for a symmetric Alexander polynomial");
    second / 2
}

pub fn casson_v2(w: &BraidWord) -> Result<i64, InvariantError> {
    Ok(v2_from_alexander(&alexander(w)?))
}

pub fn knot_invariants(w: &BraidWord) -> Result<KnotInvariants, InvariantError> {
    let alexander = alexander(w)?;
    let v2 = v2_from_alexander(&alexander);
    let genus_bound = alexander.span().unwrap_or(0) as i64 / 2;
    Ok(KnotInvariants { alexander, v2, genus_bound })
}

/// Half the signed count of crossings between the two closure components.
pub fn linking_number(w: &BraidWord) -> Result<i64, InvariantError> {
    let sw = braid::to_standard(w);
    let perm = sw.permutation();
    let components = perm.cycles().len();
    if components != 2 {
        return Err(InvariantError::NotTwoComponents(components));
    }
    let label = perm.orbit_labels();
    // occupant[p] = starting position of the strand currently at position p
    let mut occupant: Vec<usize> = (0..sw.strands()).collect();
    let mut total = 0i64;
    for l in sw.letters() {
        let (a, b) = l.generator.transposition();
        if label[occupant[a]] != label[occupant[b]] {
            total += l.sign.value();
        }
        occupant.swap(a, b);
    }
    assert!(total % 2 == 0, "inter-component crossings come in pairs");
    Ok(total / 2)
}

/// A template word with `n` half-twists of one generator inserted at a fixed
/// position; negative `n` means negative half-twists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistFamily {
    pub template: BraidWord,
    pub position: usize,
    pub generator: Generator,
}

impl TwistFamily {
    pub fn new(template: BraidWord, position: usize, generator: Generator) -> Result<Self, InvariantError> {
        assert!(position <= template.len(), "insertion position beyond the template");
        // validate the generator against the template's alphabet and strands
        BraidWord::new(template.strands(), template.alphabet(), vec![Letter::pos(generator)])?;
        Ok(TwistFamily { template, position, generator })
    }

    pub fn member(&self, n: i64) -> BraidWord {
        twist_member(self, n)
    }
}

pub fn twist_member(f: &TwistFamily, n: i64) -> BraidWord {
    let sign = if n >= 0 { Sign::Pos } else { Sign::Neg };
    let mut letters = f.template.letters()[..f.position].to_vec();
    letters.extend(std::iter::repeat_n(Letter::new(f.generator, sign), n.unsigned_abs() as usize));
    letters.extend_from_slice(&f.template.letters()[f.position..]);
    f.template.with_letters(letters)
}

/// `a2 n^2 + a1 n + a0` over the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Quadratic {
    #[serde(serialize_with = "crate::serialize_rational")]
    pub a2: Rational,
    #[serde(serialize_with = "crate::serialize_rational")]
    pub a1: Rational,
    #[serde(serialize_with = "crate::serialize_rational")]
    pub a0: Rational,
}

impl Quadratic {
    pub fn eval(&self, n: i64) -> Rational {
        let x = Rational::from_integer(n);
        self.a2 * x * x + self.a1 * x + self.a0
    }

    /// Interpolates through three points with distinct abscissae.
    pub fn through(points: [(i64, i64); 3]) -> Quadratic {
        let mut a = [Rational::zero(); 3];
        for (i, &(xi, yi)) in points.iter().enumerate() {
            // Lagrange basis: prod (x - xj) / (xi - xj)
            let others: Vec<i64> = points.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.0).collect();
            let denom = Rational::from_integer((xi - others[0]) * (xi - others[1]));
            let scale = Rational::from_integer(yi) / denom;
            a[2] += scale;
            a[1] -= scale * Rational::from_integer(others[0] + others[1]);
            a[0] += scale * Rational::from_integer(others[0] * others[1]);
        }
        Quadratic { a2: a[2], a1: a[1], a0: a[0] }
    }

    /// Rational roots, sorted and deduplicated. Irrational roots are omitted.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.a2.is_zero() {
            if self.a1.is_zero() {
                return Vec::new();
            }
            return vec![-self.a0 / self.a1];
        }
        let disc = self.a1 * self.a1 - Rational::from_integer(4) * self.a2 * self.a0;
        if disc.is_negative() {
            return Vec::new();
        }
        let Some(root) = rational_sqrt(disc) else { return Vec::new() };
        let two_a = Rational::from_integer(2) * self.a2;
        let mut roots = vec![(-self.a1 - root) / two_a, (-self.a1 + root) / two_a];
        roots.sort();
        roots.dedup();
        roots
    }
}

fn integer_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = (n as f64).sqrt() as i64;
    (r.saturating_sub(1)..=r + 1).find(|&c| c >= 0 && c * c == n)
}

fn rational_sqrt(q: Rational) -> Option<Rational> {
    Some(Rational::new(integer_sqrt(*q.numer())?, integer_sqrt(*q.denom())?))
}

/// Exact quadratic fit of `v2(member(n))` over odd samples. The first three
/// samples determine the fit and every further sample must satisfy it.
pub fn twist_family_quadratic(f: &TwistFamily, samples: &[i64]) -> Result<Quadratic, InvariantError> {
    let mut distinct = samples.to_vec();
    distinct.sort();
    distinct.dedup();
    if distinct.len() < 3 || distinct.len() != samples.len() {
        return Err(InvariantError::TooFewSamples(distinct.len()));
    }
    if let Some(&n) = samples.iter().find(|&&n| n % 2 == 0) {
        return Err(InvariantError::EvenSample(n));
    }
    let values = samples.iter().map(|&n| family_v2(f, n).map(|v| (n, v))).collect::<Result<Vec<_>, _>>()?;
    fit_quadratic(&values)
}

/// Fits the first three points exactly and checks the rest against the fit.
pub fn fit_quadratic(values: &[(i64, i64)]) -> Result<Quadratic, InvariantError> {
    if values.len() < 3 {
        return Err(InvariantError::TooFewSamples(values.len()));
    }
    let fit = Quadratic::through([values[0], values[1], values[2]]);
    for &(n, v) in &values[3..] {
        let predicted = fit.eval(n);
        if predicted != Rational::from_integer(v) {
            return Err(InvariantError::InconsistentFit { n, predicted, actual: v });
        }
    }
    Ok(fit)
}

pub fn family_v2(f: &TwistFamily, n: i64) -> Result<i64, InvariantError> {
    let m = f.member(n);
    match m.component_count() {
        1 => casson_v2(&m),
        components => Err(InvariantError::NonKnotMember { n, components }),
    }
}

/// Whether a rational value is an integer.
pub fn is_integral(q: &Rational) -> bool {
    q.denom().is_one()
}
