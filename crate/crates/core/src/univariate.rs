//! Diagonal `[n/n]` Padé approximants of `C(x) = sum_{k>=1} c_k x^k` via the
//! three-term Jacobi recursion, plus a linear-solve oracle.

use crate::algebra::{solve, Poly, Scalar, SolveError};
use crate::error::{PadeError, Result};
use crate::level::{error_coeffs, jacobi_coeff, Level, UniPade};

/// Recursion state: every level computed so far and the parameters used.
#[derive(Clone, Debug)]
pub struct JacobiTrace<S> {
    coeffs: Vec<S>,
    levels: Vec<Level<S>>,
    alpha: Vec<S>,
    beta: Vec<S>,
}

impl<S: Scalar> JacobiTrace<S> {
    /// Starts at level 0 (`A = 0`, `B = 1`). `coeffs[k] = c_k`, `coeffs[0]` must be 0.
    pub fn init(coeffs: &[S]) -> Result<Self> {
        if coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(PadeError::MalformedSeries("c_0 must be 0".into()));
        }
        if coeffs.get(1).is_none_or(|c| c.is_zero()) {
            return Err(PadeError::NonNormalSeries);
        }
        Ok(JacobiTrace {
            coeffs: coeffs.to_vec(),
            levels: vec![Level::trivial()],
            alpha: vec![S::zero()],
            beta: vec![S::zero()],
        })
    }

    /// Highest level computed so far.
    pub fn order(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn current(&self) -> &UniPade<S> {
        self.levels.last().expect("level 0 always present")
    }

    pub fn level(&self, n: usize) -> &UniPade<S> {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[Level<S>] {
        &self.levels
    }

    /// `alpha_n`, `n >= 1`.
    pub fn alpha(&self, n: usize) -> &S {
        &self.alpha[n]
    }

    /// `beta_n`, `n >= 1`.
    pub fn beta(&self, n: usize) -> &S {
        &self.beta[n]
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    fn c(&self, i: isize) -> S {
        if i < 0 {
            S::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Parameters `(alpha_n, beta_n)` for the next level from stored errors.
    pub fn next_params(&self) -> Result<(S, S)> {
        let n = self.order() + 1;
        self.require(n)?;
        if n == 1 {
            let c1 = self.c(1);
            return Ok((-c1.clone(), -self.c(2) / c1));
        }
        let n2 = 2 * n as isize;
        let p1 = &self.levels[n - 1];
        let p2 = &self.levels[n - 2];
        let d_alpha = p2.error_at(n2 - 3) - self.c(n2 - 3);
        if d_alpha.is_zero() {
            return Err(PadeError::DegenerateLevel { n, what: "e[2n-3] - c[2n-3]" });
        }
        let d_beta = p1.error_at(n2 - 1) - self.c(n2 - 1);
        if d_beta.is_zero() {
            return Err(PadeError::DegenerateLevel { n, what: "e[2n-1] - c[2n-1]" });
        }
        let alpha = -(d_beta.clone()) / d_alpha;
        let prev = self.c(n2 - 2) + p2.den_coeff(1) * self.c(n2 - 3) - p2.error_at(n2 - 2);
        let beta = (p1.den_coeff(1) * self.c(n2 - 1) + self.c(n2) - p1.error_at(n2) + alpha.clone() * prev) / d_beta;
        Ok((alpha, beta))
    }

    /// Advances one level with parameters computed from the stored errors.
    pub fn step(&mut self) -> Result<&UniPade<S>> {
        let (alpha, beta) = self.next_params()?;
        self.step_with(alpha, beta)
    }

    /// Advances one level with externally supplied `(alpha_n, beta_n)`.
    pub fn step_with(&mut self, alpha: S, beta: S) -> Result<&UniPade<S>> {
        let n = self.order() + 1;
        self.require(n)?;
        let prev1 = &self.levels[n - 1];
        let (num, den) = if n == 1 {
            (Poly::monomial(self.c(1), 1), Poly::new(vec![S::one(), beta.clone()]))
        } else {
            let prev2 = &self.levels[n - 2];
            (
                advance(&prev1.num, &prev2.num, &alpha, &beta),
                advance(&prev1.den, &prev2.den, &alpha, &beta),
            )
        };
        let cf = |i: isize, _p: usize| self.c(i);
        let row1 = std::slice::from_ref(prev1);
        // level -1 carries only the x^{-1} error term, which never reaches x^{2n+k}, k >= 1
        let row2 = (n >= 2).then(|| std::slice::from_ref(&self.levels[n - 2]));
        let errors = (1..=n as isize)
            .map(|k| jacobi_coeff(Some(row1), row2, 0, n, k, &alpha, &beta, &cf))
            .collect();
        self.levels.push(Level { order: n, num, den, errors });
        self.alpha.push(alpha);
        self.beta.push(beta);
        Ok(self.current())
    }

    fn require(&self, n: usize) -> Result<()> {
        if self.coeffs.len() < 2 * n + 1 {
            return Err(PadeError::InsufficientOrder {
                need_n: 2 * n,
                need_m: 0,
                have_n: self.coeffs.len().saturating_sub(1),
                have_m: 0,
            });
        }
        Ok(())
    }
}

/// `(1 + beta x) p1 + alpha x^2 p2`
pub(crate) fn advance<S: Scalar>(p1: &Poly<S>, p2: &Poly<S>, alpha: &S, beta: &S) -> Poly<S> {
    let mut out = p1 + &p1.shift_scale(1, beta);
    out = &out + &p2.shift_scale(2, alpha);
    out
}

/// `[n/n]` by the Jacobi recursion. Needs `coeffs[0..=2n]`.
pub fn jacobi_pade<S: Scalar>(coeffs: &[S], n: usize) -> Result<UniPade<S>> {
    if n == 0 {
        return Ok(Level::trivial());
    }
    let mut trace = JacobiTrace::init(coeffs)?;
    for _ in 0..n {
        trace.step()?;
    }
    Ok(trace.current().clone())
}

/// `[n/n]` by solving the Hankel system for the denominator directly, `b_0 = 1`.
pub fn oracle_pade<S: Scalar>(coeffs: &[S], n: usize) -> Result<UniPade<S>> {
    if coeffs.len() < 2 * n + 1 {
        return Err(PadeError::InsufficientOrder {
            need_n: 2 * n,
            need_m: 0,
            have_n: coeffs.len().saturating_sub(1),
            have_m: 0,
        });
    }
    let c = |i: isize| if i < 0 { S::zero() } else { coeffs[i as usize].clone() };
    let matrix = (n + 1..=2 * n)
        .map(|i| (1..=n).map(|j| c(i as isize - j as isize)).collect())
        .collect();
    let rhs = (n + 1..=2 * n).map(|i| -c(i as isize)).collect();
    let b = match solve(matrix, rhs) {
        Ok(b) => b,
        Err(SolveError::Singular | SolveError::Inconsistent) => {
            return Err(PadeError::SingularUnivariate { n })
        }
    };
    let mut den = vec![S::one()];
    den.extend(b);
    let num = (0..=n)
        .map(|i| (0..=i).fold(S::zero(), |acc, j| acc + den[j].clone() * c((i - j) as isize)))
        .collect();
    let num = Poly::new(num);
    let den = Poly::new(den);
    let errors = error_coeffs(&num, &den, n, |i| coeffs[i].clone());
    Ok(Level { order: n, num, den, errors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn geometric(len: usize) -> Vec<Rational> {
        (0..len).map(|k| q(if k == 0 { 0 } else { 1 }, 1)).collect()
    }

    #[test]
    fn geometric_first_level() {
        let trace = {
            let mut t = JacobiTrace::init(&geometric(3)).unwrap();
            t.step().unwrap();
            t
        };
        let p = trace.current();
        assert_eq!(p.num, Poly::new(vec![q(0, 1), q(1, 1)]));
        assert_eq!(p.den, Poly::new(vec![q(1, 1), q(-1, 1)]));
        assert_eq!(p.errors, vec![q(1, 1)]);
        assert_eq!(trace.alpha(1), &q(-1, 1));
        assert_eq!(trace.beta(1), &q(-1, 1));
    }

    #[test]
    fn exponential_minus_one_second_level() {
        // e^x - 1; [2/2] denominator is 1 - x/2 + x^2/12 up to the x/(...) shift
        let mut fact = 1i64;
        let coeffs: Vec<Rational> = (0..5)
            .map(|k| {
                if k > 0 {
                    fact *= k;
                }
                if k == 0 { q(0, 1) } else { q(1, fact) }
            })
            .collect();
        let j = jacobi_pade(&coeffs, 2).unwrap();
        let o = oracle_pade(&coeffs, 2).unwrap();
        assert_eq!(j, o);
    }

    #[test]
    fn non_normal_rejected() {
        let coeffs = vec![q(0, 1), q(0, 1), q(1, 1)];
        assert_eq!(JacobiTrace::init(&coeffs).unwrap_err(), PadeError::NonNormalSeries);
    }

    #[test]
    fn short_series_rejected() {
        let mut t = JacobiTrace::init(&geometric(4)).unwrap();
        t.step().unwrap();
        assert!(matches!(t.step(), Err(PadeError::InsufficientOrder { need_n: 4, .. })));
    }

    #[test]
    fn rational_input_is_reproduced() {
        // Fibonacci generating function x / (1 - x - x^2)
        let mut c = vec![q(0, 1), q(1, 1)];
        for k in 2..5 {
            let next = c[k - 1].clone() + c[k - 2].clone();
            c.push(next);
        }
        let p = jacobi_pade(&c, 2).unwrap();
        assert_eq!(p.num, Poly::new(vec![q(0, 1), q(1, 1)]));
        assert_eq!(p.den, Poly::new(vec![q(1, 1), q(-1, 1), q(-1, 1)]));
        // errors are taken against the truncation C_4, not the full series
        assert_eq!(p.errors, vec![q(5, 1), q(3, 1)]);
    }

    fn series() -> impl Strategy<Value = Vec<Rational>> {
        (
            prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]),
            prop::collection::vec((-5i64..=5, 1i64..=3), 11),
        )
            .prop_map(|(c1, rest)| {
                let mut v = vec![q(0, 1), q(c1, 1)];
                v.extend(rest.into_iter().map(|(a, b)| q(a, b)));
                v
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn matches_oracle_when_normal(c in series(), n in 1usize..=6) {
            if let Ok(o) = oracle_pade(&c, n) {
                match jacobi_pade(&c, n) {
                    Ok(j) => prop_assert_eq!(j, o),
                    // an intermediate level may be singular even though [n/n] is not
                    Err(e) => {
                        let degenerate = matches!(e, PadeError::DegenerateLevel { .. });
                        prop_assert!(degenerate);
                    }
                }
            }
        }

        #[test]
        fn order_of_contact(c in series(), n in 1usize..=6) {
            if let Ok(p) = jacobi_pade(&c, n) {
                let prod = p.den.mul(&Poly::new(c[..=2 * n].to_vec()));
                let diff = &p.num - &prod;
                for k in 0..=2 * n {
                    prop_assert_eq!(diff.coeff(k as isize), q(0, 1));
                }
                prop_assert!(p.num.degree().unwrap_or(0) <= n);
                prop_assert!(p.den.degree().unwrap_or(0) <= n);
                prop_assert_eq!(p.den.coeff(0), q(1, 1));
            }
        }

        #[test]
        fn float_tracks_exact(c in series(), n in 1usize..=4) {
            if let Ok(p) = jacobi_pade(&c, n) {
                let cf: Vec<f64> = c.iter().map(|v| v.to_f64()).collect();
                let pf = jacobi_pade(&cf, n).unwrap();
                let scale = p.den.coeffs().iter().map(|v| v.to_f64().abs()).fold(1.0, f64::max);
                for k in 0..=n as isize {
                    prop_assert!((pf.den.coeff(k) - p.den.coeff(k).to_f64()).abs() <= 1e-6 * scale);
                }
            }
        }
    }
}
