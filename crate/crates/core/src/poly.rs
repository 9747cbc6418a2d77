//! Integer Laurent polynomials in one variable `t`.
//!
//! Coefficients are `i64` with checked arithmetic; an overflow panics rather
//! than wrapping, so every value that is returned is exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error("the zero polynomial has no normalization")]
    Zero,
    #[error("polynomial {0} has odd degree span and cannot be made symmetric")]
    OddSpan(String),
    #[error("polynomial {0} is not symmetric up to a unit")]
    NotSymmetric(String),
    #[error("polynomial {0} does not evaluate to +-1 at t = 1")]
    BadValueAtOne(String),
}

/// Finitely supported map exponent -> coefficient with no zero entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i32, i64>,
}

fn add_coeff(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("Laurent coefficient overflow")
}

fn mul_coeff(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("Laurent coefficient overflow")
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: i64, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(exp, c);
        }
        LaurentPolynomial { terms }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i32, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = add_coeff(*entry, c);
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// `max_degree - min_degree`, or `None` for zero.
    pub fn span(&self) -> Option<i32> {
        Some(self.max_degree()? - self.min_degree()?)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, x)| (e, mul_coeff(x, c))))
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    /// `p(t^-1)`.
    pub fn invert_variable(&self) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: i64) -> Option<i64> {
        if self.is_zero() {
            return Some(0);
        }
        if x == 0 && self.min_degree().unwrap() < 0 {
            return None;
        }
        if self.min_degree().unwrap() < 0 && x.abs() != 1 {
            return None;
        }
        let mut acc = 0i64;
        for (e, c) in self.terms() {
            let pow = if x.abs() == 1 { if e.rem_euclid(2) == 0 { 1 } else { x } } else { x.checked_pow(e as u32)? };
            acc = acc.checked_add(c.checked_mul(pow)?)?;
        }
        Some(acc)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().fold(0, |acc, &c| add_coeff(acc, c))
    }

    /// Formal derivative `d/dt`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e - 1, mul_coeff(c, e as i64))))
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|(e, c)| self.coeff(-e) == c)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dlo, dhi) = (divisor.min_degree()?, divisor.max_degree()?);
        let dlead = divisor.coeff(dhi);
        let qlo = self.min_degree()? - dlo;
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some(rhi) = rem.max_degree() {
            let qe = rhi - dhi;
            if qe < qlo {
                return None;
            }
            let rc = rem.coeff(rhi);
            if rc % dlead != 0 {
                return None;
            }
            let qc = rc / dlead;
            quotient.add_term(qe, qc);
            for (e, c) in divisor.terms() {
                rem.add_term(e + qe, -mul_coeff(c, qc));
            }
        }
        Some(quotient)
    }

    /// Multiplies by the unit `+-t^k` that makes the polynomial symmetric
    /// under `t <-> t^-1` with value 1 at `t = 1`.
    pub fn normalize_symmetric(&self) -> Result<Self, NormalizeError> {
        let span = self.span().ok_or(NormalizeError::Zero)?;
        if span % 2 != 0 {
            return Err(NormalizeError::OddSpan(self.to_string()));
        }
        let centred = self.shift(-(self.min_degree().unwrap() + span / 2));
        let at_one = centred.eval_at_one();
        let out = match at_one {
            1 => centred,
            -1 => -centred,
            _ => return Err(NormalizeError::BadValueAtOne(self.to_string())),
        };
        if !out.is_symmetric() {
            return Err(NormalizeError::NotSymmetric(self.to_string()));
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Descending exponents with explicit signs: `2*t - 3 + 2*t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let abs = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            match e {
                0 => write!(f, "{abs}")?,
                _ => {
                    if abs != 1 {
                        write!(f, "{abs}*")?;
                    }
                    if e == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, mul_coeff(c1, c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(-1)
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(pairs: &[(i32, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(pairs.iter().copied())
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[(1, 2), (0, -3), (-1, 2)]).to_string(), "2*t - 3 + 2*t^-1");
        assert_eq!(p(&[(1, 1), (0, -1), (-1, 1)]).to_string(), "t - 1 + t^-1");
        assert_eq!(p(&[(2, -1), (-2, 1)]).to_string(), "-t^2 + t^-2");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(LaurentPolynomial::one().to_string(), "1");
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let a = p(&[(1, 1), (0, 2)]);
        let b = p(&[(1, -1)]);
        let s = &a + &b;
        assert_eq!(s, LaurentPolynomial::constant(2));
        assert_eq!(s.terms().count(), 1);
    }

    #[test]
    fn derivative_and_value() {
        // t - 1 + t^-1: second derivative at 1 is 2
        let d = p(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(d.derivative().derivative().eval_at_one(), 2);
        assert_eq!(d.derivative().eval_at_one(), 0);
        assert_eq!(d.eval(2), None);
        assert_eq!(p(&[(2, 1), (0, 1)]).eval(3), Some(10));
    }

    #[test]
    fn exact_division() {
        // (1 + t^3) / (1 + t) = 1 - t + t^2
        let num = p(&[(0, 1), (3, 1)]);
        let den = p(&[(0, 1), (1, 1)]);
        assert_eq!(num.div_exact(&den), Some(p(&[(0, 1), (1, -1), (2, 1)])));
        assert_eq!(p(&[(0, 1), (2, 1)]).div_exact(&den), None);
        assert_eq!(p(&[(0, 3)]).div_exact(&LaurentPolynomial::constant(2)), None);
        assert_eq!(p(&[(-2, 4), (0, 2)]).div_exact(&p(&[(-1, 2)])), Some(p(&[(-1, 2), (1, 1)])));
    }

    #[test]
    fn normalization() {
        let raw = p(&[(5, -1), (4, 1), (3, -1)]);
        assert_eq!(raw.normalize_symmetric().unwrap(), p(&[(1, 1), (0, -1), (-1, 1)]));
        assert!(matches!(p(&[(0, 1), (1, 1)]).normalize_symmetric(), Err(NormalizeError::OddSpan(_))));
        assert!(matches!(p(&[(0, 3), (2, 3)]).normalize_symmetric(), Err(NormalizeError::BadValueAtOne(_))));
        assert!(matches!(p(&[(0, 2), (1, -2), (2, 1)]).normalize_symmetric(), Err(NormalizeError::NotSymmetric(_))));
        assert_eq!(LaurentPolynomial::zero().normalize_symmetric(), Err(NormalizeError::Zero));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
        proptest::collection::vec((-4i32..=4, -6i64..=6), 0..5).prop_map(LaurentPolynomial::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert_eq!(&a * &LaurentPolynomial::one(), a.clone());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }

        #[test]
        fn product_rule(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).derivative();
            let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
