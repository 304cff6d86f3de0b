//! One level of a Jacobi-type recursion: numerator, denominator, stored errors.

use crate::algebra::{Poly, Scalar};

/// Polynomials `A_n`, `B_n` of degree `<= n` and the error coefficients
/// `e_{2n+k}`, `k = 1..=n`, of `A_n - B_n * C_{2n}`.
///
/// For the univariate approximant `B_n(0) = 1`; inside a bivariate level `p > 0`
/// the constant term of `B` is the seed `b_{0,p}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Level<S> {
    pub order: usize,
    pub num: Poly<S>,
    pub den: Poly<S>,
    pub errors: Vec<S>,
}

/// Univariate `[n/n]` approximant with its error coefficients.
pub type UniPade<S> = Level<S>;

impl<S: Scalar> Level<S> {
    /// `A = 0`, `B = 1`: the order-0 univariate level.
    pub fn trivial() -> Self {
        Level {
            order: 0,
            num: Poly::zero(),
            den: Poly::one(),
            errors: Vec::new(),
        }
    }

    /// Error coefficient of `x^power`; zero outside `2n+1 ..= 3n`.
    pub fn error_at(&self, power: isize) -> S {
        let lo = 2 * self.order as isize + 1;
        if power < lo {
            return S::zero();
        }
        self.errors
            .get((power - lo) as usize)
            .cloned()
            .unwrap_or_else(S::zero)
    }

    pub fn den_coeff(&self, j: isize) -> S {
        self.den.coeff(j)
    }

    pub fn to_f64(&self) -> Level<f64> {
        Level {
            order: self.order,
            num: self.num.to_f64(),
            den: self.den.to_f64(),
            errors: self.errors.iter().map(|e| e.to_f64()).collect(),
        }
    }
}

/// Coefficients `e_{2n+k}`, `k = 1..=n`, of `num - den * C_{2n}` where
/// `C_{2n} = sum_{i <= 2n} coeff(i) x^i`.
pub fn error_coeffs<S: Scalar>(
    num: &Poly<S>,
    den: &Poly<S>,
    n: usize,
    coeff: impl Fn(usize) -> S,
) -> Vec<S> {
    (1..=n)
        .map(|k| {
            let power = 2 * n + k;
            let mut acc = num.coeff(power as isize);
            for j in k..=den.degree().unwrap_or(0).min(power) {
                let i = power - j;
                if i <= 2 * n {
                    acc = acc - den.coeff(j as isize) * coeff(i);
                }
            }
            acc
        })
        .collect()
}

/// Coefficient access `c(i, p)` with zero for negative `i`.
pub(crate) trait Coeffs<S> {
    fn c(&self, i: isize, p: usize) -> S;
}

impl<S: Scalar, F: Fn(isize, usize) -> S> Coeffs<S> for F {
    fn c(&self, i: isize, p: usize) -> S {
        self(i, p)
    }
}

/// `sum_{s=0}^{p} b^{row[s]}_j c(i, p - s)`.
pub(crate) fn bsum<S: Scalar>(row: Option<&[Level<S>]>, j: isize, i: isize, p: usize, c: &impl Coeffs<S>) -> S {
    let Some(row) = row else {
        return S::zero();
    };
    if j < 0 || i < 0 {
        return S::zero();
    }
    let mut acc = S::zero();
    for (s, lvl) in row.iter().enumerate().take(p + 1) {
        let b = lvl.den_coeff(j);
        if b.is_zero() {
            continue;
        }
        acc = acc + b * c.c(i, p - s);
    }
    acc
}

/// Coefficient of `x^{2n+k}` in `E_{n-1,p} - sum_s B_{n-1,s} (c_{2n-1,p-s} x^{2n-1} + c_{2n,p-s} x^{2n})`.
pub(crate) fn g_prev1<S: Scalar>(row: Option<&[Level<S>]>, p: usize, n: usize, k: isize, c: &impl Coeffs<S>) -> S {
    let Some(r) = row else {
        return S::zero();
    };
    let n2 = 2 * n as isize;
    r[p].error_at(n2 + k) - bsum(row, k + 1, n2 - 1, p, c) - bsum(row, k, n2, p, c)
}

/// Coefficient of `x^{2n+k}` in `x^2 [E_{n-2,p} - sum_s B_{n-2,s} sum_{t=-3}^{0} c_{2n+t,p-s} x^{2n+t}]`.
pub(crate) fn g_prev2<S: Scalar>(row: Option<&[Level<S>]>, p: usize, n: usize, k: isize, c: &impl Coeffs<S>) -> S {
    let Some(r) = row else {
        return S::zero();
    };
    let n2 = 2 * n as isize;
    r[p].error_at(n2 + k - 2)
        - bsum(row, k + 1, n2 - 3, p, c)
        - bsum(row, k, n2 - 2, p, c)
        - bsum(row, k - 1, n2 - 1, p, c)
        - bsum(row, k - 2, n2, p, c)
}

/// Coefficient of `x^{2n+k}` produced by the Jacobi part
/// `(1 + beta x)(...)_{n-1} + alpha x^2 (...)_{n-2}` at level `p`.
pub(crate) fn jacobi_coeff<S: Scalar>(
    prev1: Option<&[Level<S>]>,
    prev2: Option<&[Level<S>]>,
    p: usize,
    n: usize,
    k: isize,
    alpha: &S,
    beta: &S,
    c: &impl Coeffs<S>,
) -> S {
    g_prev1(prev1, p, n, k, c) + beta.clone() * g_prev1(prev1, p, n, k - 1, c) + alpha.clone() * g_prev2(prev2, p, n, k, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    #[test]
    fn error_window() {
        let q = |v| Rational::from_i64(v);
        let lvl = Level {
            order: 2,
            num: Poly::zero(),
            den: Poly::one(),
            errors: vec![q(5), q(6)],
        };
        assert_eq!(lvl.error_at(4), q(0));
        assert_eq!(lvl.error_at(5), q(5));
        assert_eq!(lvl.error_at(6), q(6));
        assert_eq!(lvl.error_at(7), q(0));
    }

    #[test]
    fn geometric_errors() {
        // x - (1 - x)(x + x^2) = x^3
        let q = |v| Rational::from_i64(v);
        let num = Poly::new(vec![q(0), q(1)]);
        let den = Poly::new(vec![q(1), q(-1)]);
        let e = error_coeffs(&num, &den, 1, |i| if i == 0 { q(0) } else { q(1) });
        assert_eq!(e, vec![q(1)]);
    }
}
