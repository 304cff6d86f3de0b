use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::scalar::Scalar;

/// Dense univariate polynomial, coefficients stored lowest power first.
///
/// Trailing zeros are stripped on construction, so the zero polynomial has an
/// empty coefficient vector and `degree() == None` (the "-inf" sentinel).
#[derive(Clone, Debug)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(S::one())
    }

    /// `c * x^k`
    pub fn monomial(c: S, k: usize) -> Self {
        let mut v = vec![S::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero for negative or out-of-range `k`.
    pub fn coeff(&self, k: isize) -> S {
        if k < 0 {
            return S::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_else(S::zero)
    }

    /// Borrowing variant of [`Poly::coeff`] for non-negative indices.
    pub fn coeff_ref(&self, k: usize) -> Option<&S> {
        self.coeffs.get(k)
    }

    /// Coefficients padded (or truncated) to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<S> {
        (0..len).map(|k| self.coeff(k as isize)).collect()
    }

    pub fn scale(&self, s: &S) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s).collect())
    }

    /// `s * x^k * self`
    pub fn shift_scale(&self, k: usize, s: &S) -> Self {
        if self.is_zero() || s.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![S::zero(); k];
        v.extend(self.coeffs.iter().map(|c| c.clone() * s));
        Poly::new(v)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b;
            }
        }
        Poly::new(v)
    }

    /// Product with all powers above `max_deg` discarded.
    pub fn mul_truncated(&self, other: &Self, max_deg: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(max_deg + 1);
        let mut v = vec![S::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                v[i + j] = v[i + j].clone() + a.clone() * b;
            }
        }
        Poly::new(v)
    }

    /// Drops all powers above `max_deg`.
    pub fn truncate(&self, max_deg: usize) -> Self {
        Poly::new(self.coeffs.iter().take(max_deg + 1).cloned().collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x + c)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn to_f64(&self) -> Poly<f64> {
        self.map(|c| c.to_f64())
    }
}

impl<S: PartialEq> PartialEq for Poly<S> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<S: Scalar> Default for Poly<S> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<S: Scalar> Add for &Poly<S> {
    type Output = Poly<S>;

    fn add(self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| self.coeff(k as isize) + rhs.coeff(k as isize))
                .collect(),
        )
    }
}

impl<S: Scalar> Add for Poly<S> {
    type Output = Poly<S>;

    fn add(self, rhs: Poly<S>) -> Poly<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for &Poly<S> {
    type Output = Poly<S>;

    fn sub(self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| self.coeff(k as isize) - rhs.coeff(k as isize))
                .collect(),
        )
    }
}

impl<S: Scalar> Sub for Poly<S> {
    type Output = Poly<S>;

    fn sub(self, rhs: Poly<S>) -> Poly<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;

    fn neg(self) -> Poly<S> {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    /// Coefficient list, lowest power first: `[1, -1/2, 0, 3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn poly(v: &[i64]) -> Poly<Rational> {
        Poly::new(v.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn zero_has_no_degree() {
        let z: Poly<Rational> = poly(&[0, 0, 0]);
        assert_eq!(z.degree(), None);
        assert!(z.is_zero());
        assert_eq!(poly(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn shift_scale_and_eval() {
        let p = poly(&[1, 2]);
        let s = p.shift_scale(2, &q(3));
        assert_eq!(s, poly(&[0, 0, 3, 6]));
        assert_eq!(s.eval(&q(2)), q(12 + 48));
    }

    #[test]
    fn truncated_product() {
        let a = poly(&[1, 1]);
        let b = poly(&[1, -1, 1]);
        assert_eq!(a.mul(&b), poly(&[1, 0, 0, 1]));
        assert_eq!(a.mul_truncated(&b, 1), poly(&[1]));
        assert_eq!(a.mul_truncated(&b, 10), poly(&[1, 0, 0, 1]));
    }

    #[test]
    fn display_lists_coefficients() {
        let p = Poly::new(vec![q(1), Rational::from_ratio(-1, 2)]);
        assert_eq!(p.to_string(), "[1, -1/2]");
        assert_eq!(Poly::<Rational>::zero().to_string(), "[0]");
        assert_eq!(Poly::new(vec![1.0, -1.0]).to_string(), "[1, -1]");
    }

    fn small_poly() -> impl Strategy<Value = Poly<Rational>> {
        prop::collection::vec(-9i64..=9, 0..6).prop_map(|v| poly(&v))
    }

    proptest! {
        #[test]
        fn product_evaluates_pointwise(a in small_poly(), b in small_poly(), x in -5i64..=5) {
            let x = q(x);
            prop_assert_eq!(a.mul(&b).eval(&x), a.eval(&x) * b.eval(&x));
        }

        #[test]
        fn truncation_commutes_with_product(a in small_poly(), b in small_poly(), d in 0usize..8) {
            prop_assert_eq!(a.mul_truncated(&b, d), a.mul(&b).truncate(d));
        }

        #[test]
        fn degree_of_product(a in small_poly(), b in small_poly()) {
            let expect = match (a.degree(), b.degree()) {
                (Some(x), Some(y)) => Some(x + y),
                _ => None,
            };
            prop_assert_eq!(a.mul(&b).degree(), expect);
        }

        #[test]
        fn add_sub_roundtrip(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }
    }
}
