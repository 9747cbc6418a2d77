//! Square matrices over integer Laurent polynomials.

use std::fmt;

use crate::poly::LaurentPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<LaurentPolynomial>,
}

impl PolyMatrix {
    pub fn zero(n: usize) -> Self {
        PolyMatrix { n, entries: vec![LaurentPolynomial::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, LaurentPolynomial::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPolynomial {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPolynomial) {
        self.entries[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, other.n);
        PolyMatrix { n: self.n, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect() }
    }

    /// Fraction-free (Bareiss) elimination; every division is exact.
    pub fn determinant(&self) -> LaurentPolynomial {
        let n = self.n;
        if n == 0 {
            return LaurentPolynomial::one();
        }
        let mut m: Vec<Vec<LaurentPolynomial>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut sign = 1i64;
        let mut prev = LaurentPolynomial::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return LaurentPolynomial::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
        m[n - 1][n - 1].scale(sign)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> LaurentPolynomial {
        LaurentPolynomial::constant(v)
    }

    fn from_ints(rows: &[&[i64]]) -> PolyMatrix {
        let n = rows.len();
        let mut m = PolyMatrix::zero(n);
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, c(v));
            }
        }
        m
    }

    /// Cofactor expansion, used only to check elimination.
    fn laplace(m: &PolyMatrix) -> LaurentPolynomial {
        let n = m.size();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = LaurentPolynomial::zero();
        for j in 0..n {
            let mut minor = PolyMatrix::zero(n - 1);
            for i in 1..n {
                let mut cj = 0;
                for jj in 0..n {
                    if jj == j {
                        continue;
                    }
                    minor.set(i - 1, cj, m.get(i, jj).clone());
                    cj += 1;
                }
            }
            let term = m.get(0, j) * &laplace(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn integer_determinants() {
        assert_eq!(from_ints(&[&[2, 1], &[1, 1]]).determinant(), c(1));
        assert_eq!(from_ints(&[&[0, 1], &[1, 0]]).determinant(), c(-1));
        assert_eq!(from_ints(&[&[1, 2], &[2, 4]]).determinant(), c(0));
        assert_eq!(from_ints(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]).determinant(), c(-6));
    }

    #[test]
    fn polynomial_determinant_matches_laplace() {
        let t = LaurentPolynomial::t();
        let mut m = PolyMatrix::zero(4);
        let vals = [[1, -1, 0, 2], [0, 1, 1, -1], [2, 0, -1, 1], [1, 1, 0, -1]];
        for i in 0..4 {
            for j in 0..4 {
                let e = &c(vals[i][j]) - &(&t * &c(vals[j][i]));
                m.set(i, j, e);
            }
        }
        assert_eq!(m.determinant(), laplace(&m));
    }
}
