//! Truncated bivariate power series `f(x, y) = sum c[i][j] x^i y^j`.

use crate::algebra::{Poly, Scalar};
use crate::error::{PadeError, Result};

/// Rectangular coefficient block `c[i][j]`, `0 <= i <= N`, `0 <= j <= M`, with `c[0][0] = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct BivSeries<S> {
    c: Vec<Vec<S>>,
}

impl<S: Scalar> BivSeries<S> {
    /// Builds a series from rows indexed by the power of `x`.
    pub fn new(c: Vec<Vec<S>>) -> Result<Self> {
        let Some(first) = c.first() else {
            return Err(PadeError::MalformedSeries("no coefficients".into()));
        };
        let width = first.len();
        if width == 0 || c.iter().any(|row| row.len() != width) {
            return Err(PadeError::MalformedSeries("coefficient block is not rectangular".into()));
        }
        if !c[0][0].is_zero() {
            return Err(PadeError::MalformedSeries("c[0][0] must be 0".into()));
        }
        Ok(BivSeries { c })
    }

    /// Univariate series in `x` (`M = 0`).
    pub fn from_x_coeffs(coeffs: Vec<S>) -> Result<Self> {
        BivSeries::new(coeffs.into_iter().map(|c| vec![c]).collect())
    }

    pub fn order_x(&self) -> usize {
        self.c.len() - 1
    }

    pub fn order_y(&self) -> usize {
        self.c[0].len() - 1
    }

    /// `c[i][j]`, zero for negative indices. Panics beyond the stored block.
    pub fn get(&self, i: isize, j: isize) -> S {
        if i < 0 || j < 0 {
            return S::zero();
        }
        self.c[i as usize][j as usize].clone()
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.c[i][j]
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.c
    }

    /// Column `j`: `C_j(x) = sum_i c[i][j] x^i`.
    pub fn slice_x(&self, j: usize) -> Poly<S> {
        Poly::new(self.c.iter().map(|row| row[j].clone()).collect())
    }

    /// Row `i`: `sum_j c[i][j] y^j`.
    pub fn slice_y(&self, i: usize) -> Poly<S> {
        Poly::new(self.c[i].clone())
    }

    /// Coefficients `c[0..=k][j]` as a vector.
    pub fn x_coeffs(&self, j: usize, k: usize) -> Vec<S> {
        (0..=k).map(|i| self.c[i][j].clone()).collect()
    }

    /// Coefficients `c[i][0..=k]` as a vector.
    pub fn y_coeffs(&self, i: usize, k: usize) -> Vec<S> {
        self.c[i][..=k].to_vec()
    }

    /// `f^T(x, y) = f(y, x)`.
    pub fn transpose(&self) -> Self {
        let c = (0..=self.order_y())
            .map(|j| (0..=self.order_x()).map(|i| self.c[i][j].clone()).collect())
            .collect();
        BivSeries { c }
    }

    /// Sub-block `c[0..=n][0..=m]`.
    pub fn truncated(&self, n: usize, m: usize) -> Self {
        let c = self.c[..=n].iter().map(|row| row[..=m].to_vec()).collect();
        BivSeries { c }
    }

    /// Fails unless this series has at least the requested orders.
    pub fn require(&self, need_n: usize, need_m: usize) -> Result<()> {
        if self.order_x() < need_n || self.order_y() < need_m {
            return Err(PadeError::InsufficientOrder {
                need_n,
                need_m,
                have_n: self.order_x(),
                have_m: self.order_y(),
            });
        }
        Ok(())
    }

    /// Partial sum at a point.
    pub fn eval(&self, x: &S, y: &S) -> S {
        self.c.iter().rev().fold(S::zero(), |acc, row| {
            acc * x + Poly::new(row.clone()).eval(y)
        })
    }

    pub fn to_f64(&self) -> BivSeries<f64> {
        BivSeries {
            c: self
                .c
                .iter()
                .map(|row| row.iter().map(|v| v.to_f64()).collect())
                .collect(),
        }
    }
}

/// Series orders `(N, M)` consumed by the left-(n, m) recursion.
///
/// The x-direction needs `c[i][p]` for `i <= 2n`; the order-`m` seeds need
/// `c[0][j]` for `j <= 2m`.
pub fn required_orders(n: usize, m: usize) -> (usize, usize) {
    (2 * n, 2 * m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn sample() -> BivSeries<Rational> {
        BivSeries::new(vec![vec![q(0), q(1), q(2)], vec![q(3), q(4), q(5)]]).unwrap()
    }

    #[test]
    fn required_orders_examples() {
        assert_eq!(required_orders(2, 1), (4, 2));
        assert_eq!(required_orders(3, 0), (6, 0));
        assert_eq!(required_orders(0, 0), (0, 0));
    }

    #[test]
    fn rejects_nonzero_constant_and_ragged() {
        assert!(BivSeries::new(vec![vec![q(1)]]).is_err());
        assert!(BivSeries::new(vec![vec![q(0), q(1)], vec![q(1)]]).is_err());
    }

    #[test]
    fn transpose_is_involution() {
        let s = sample();
        let t = s.transpose();
        assert_eq!(t.order_x(), 2);
        assert_eq!(t.order_y(), 1);
        assert_eq!(t.at(2, 1), &q(5));
        assert_eq!(t.transpose(), s);
    }

    #[test]
    fn slices_and_eval() {
        let s = sample();
        assert_eq!(s.slice_x(1), Poly::new(vec![q(1), q(4)]));
        assert_eq!(s.eval(&q(2), &q(3)), q(3 + 2 * 9 + 3 * 2 + 4 * 6 + 5 * 18));
    }

    #[test]
    fn order_check() {
        let s = sample();
        assert!(s.require(1, 2).is_ok());
        assert_eq!(
            s.require(2, 2),
            Err(PadeError::InsufficientOrder { need_n: 2, need_m: 2, have_n: 1, have_m: 2 })
        );
    }
}
