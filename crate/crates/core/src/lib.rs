//! Band-generator calculus for 3-braids, exact knot invariants of closed
//! braids, Gabai-disk censuses and Property P certificates.
//!
//! The pipeline for a braid word is: [`braid`] parsing and combinatorics,
//! [`band`] rewriting and conjugacy minimization in `B_3`, [`invariants`]
//! (Alexander polynomial, `v2`), [`census`] of double and triple twists, and
//! [`surgery`] which turns all of that into a [`surgery::PropertyPReport`].
//! [`verifier`] re-checks the finite case analysis for 3-braid knots.

pub mod band;
pub mod braid;
pub mod census;
pub mod cli;
pub mod invariants;
pub mod matrix;
pub mod poly;
pub mod surgery;
pub mod verifier;

use serde::Serializer;

pub type Rational = num_rational::Ratio<i64>;

/// Rationals are written `"p/q"`.
pub fn rational_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub(crate) fn serialize_rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(q))
}

pub(crate) fn serialize_opt_rational<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.serialize_str(&rational_string(q)),
        None => s.serialize_none(),
    }
}

pub(crate) fn serialize_display<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}
