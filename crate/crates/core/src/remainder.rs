//! Remainder operator: for any `(sigma_odd, sigma_even)` build polynomials
//! `A, B` of degree `<= n` with
//! `A - B C_{2n} = sigma_odd x^{2n-1} + sigma_even x^{2n} - sum_k tau_k x^{2n+k}`.
//!
//! Built from the univariate levels `n-1`, `n-2`; used to absorb the residual
//! terms of each bivariate level.

use crate::algebra::{Poly, Scalar};
use crate::error::{PadeError, Result};
use crate::level::{g_prev1, g_prev2};
use crate::univariate::JacobiTrace;

/// Linear coefficients of the remainder operator at level `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct RemainderComponents<S> {
    pub n: usize,
    /// `F_{2n-1}`: weight of `sigma_odd` on `x A_{n-1,0}`.
    pub f_odd: S,
    /// `F_{2n}`: weight of `sigma_even` on `x A_{n-1,0}`.
    pub f_even: S,
    /// `F_{2n-2}` of level `n-1`: weight of `sigma_odd` on `x^2 A_{n-2,0}`.
    pub f_prev: S,
    /// `tau_{2n+k, 2n-1}`, `k = 1..=n`.
    pub tau_odd: Vec<S>,
    /// `tau_{2n+k, 2n}`, `k = 1..=n`.
    pub tau_even: Vec<S>,
}

/// Result of applying the operator to a concrete `(sigma_odd, sigma_even)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RemainderCorrection<S> {
    pub num: Poly<S>,
    pub den: Poly<S>,
    /// `tau_{2n+k}`, `k = 1..=n`.
    pub tau: Vec<S>,
    /// Coefficient on `x A_{n-1,0}`.
    pub weight_prev1: S,
    /// Coefficient on `x^2 A_{n-2,0}`.
    pub weight_prev2: S,
}

/// Components at level `n >= 1`. Needs `trace` at order `>= n-1`, its series up
/// to `c_{2n}`, and the components of level `n-1` when `n >= 2`.
pub fn remainder_components<S: Scalar>(
    trace: &JacobiTrace<S>,
    n: usize,
    prev: Option<&RemainderComponents<S>>,
) -> Result<RemainderComponents<S>> {
    assert!(n >= 1 && trace.order() + 1 >= n, "trace must reach level n-1");
    let coeffs = trace.coeffs();
    if coeffs.len() < 2 * n + 1 {
        return Err(PadeError::InsufficientOrder {
            need_n: 2 * n,
            need_m: 0,
            have_n: coeffs.len() - 1,
            have_m: 0,
        });
    }
    let cf = |i: isize, _p: usize| if i < 0 { S::zero() } else { coeffs[i as usize].clone() };
    let levels = trace.levels();
    let row1 = std::slice::from_ref(&levels[n - 1]);
    let row2 = (n >= 2).then(|| std::slice::from_ref(&levels[n - 2]));

    let d = coeffs[2 * n - 1].clone() - levels[n - 1].error_at(2 * n as isize - 1);
    if d.is_zero() {
        return Err(PadeError::DegenerateRemainder { n });
    }
    let f_even = -(S::one() / &d);
    let (f_odd, f_prev) = if n == 1 {
        (S::zero(), S::one())
    } else {
        let prev = prev.expect("components of level n-1");
        let tau_prev = prev.tau_even[0].clone();
        (-(tau_prev / &d), prev.f_even.clone())
    };

    let mut tau_odd = Vec::with_capacity(n);
    let mut tau_even = Vec::with_capacity(n);
    for k in 1..=n as isize {
        let x1 = -g_prev1(Some(row1), 0, n, k - 1, &cf);
        let x2 = -g_prev2(row2, 0, n, k, &cf);
        tau_odd.push(f_odd.clone() * &x1 + f_prev.clone() * x2);
        tau_even.push(f_even.clone() * x1);
    }
    Ok(RemainderComponents { n, f_odd, f_even, f_prev, tau_odd, tau_even })
}

/// Applies the operator at level `comp.n` to `(sigma_odd, sigma_even)`.
pub fn apply_remainder<S: Scalar>(
    comp: &RemainderComponents<S>,
    sigma_odd: &S,
    sigma_even: &S,
    trace: &JacobiTrace<S>,
) -> RemainderCorrection<S> {
    let n = comp.n;
    let levels = trace.levels();
    let w1 = comp.f_odd.clone() * sigma_odd + comp.f_even.clone() * sigma_even;
    let w2 = comp.f_prev.clone() * sigma_odd;
    let l1 = &levels[n - 1];
    let mut num = l1.num.shift_scale(1, &w1);
    let mut den = l1.den.shift_scale(1, &w1);
    if n >= 2 {
        let l2 = &levels[n - 2];
        num = &num + &l2.num.shift_scale(2, &w2);
        den = &den + &l2.den.shift_scale(2, &w2);
    } else {
        // x^2 A_{-1,0} enters as +x; B_{-1,0} = 0
        num = &num + &Poly::monomial(w2.clone(), 1);
    }
    let tau = comp
        .tau_odd
        .iter()
        .zip(&comp.tau_even)
        .map(|(o, e)| o.clone() * sigma_odd + e.clone() * sigma_even)
        .collect();
    RemainderCorrection {
        num,
        den,
        tau,
        weight_prev1: w1,
        weight_prev2: w2,
    }
}

/// Components for all levels `1..=n` of a trace that has reached order `n - 1`.
pub fn remainder_chain<S: Scalar>(trace: &JacobiTrace<S>, n: usize) -> Result<Vec<RemainderComponents<S>>> {
    let mut out: Vec<RemainderComponents<S>> = Vec::with_capacity(n);
    for k in 1..=n {
        let next = remainder_components(trace, k, out.last())?;
        out.push(next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn check_identity(coeffs: &[Rational], n: usize, so: Rational, se: Rational) {
        let mut trace = JacobiTrace::init(coeffs).unwrap();
        for _ in 0..n - 1 {
            trace.step().unwrap();
        }
        let comps = remainder_chain(&trace, n).unwrap();
        let corr = apply_remainder(&comps[n - 1], &so, &se, &trace);
        let c2n = Poly::new(coeffs[..=2 * n].to_vec());
        let lhs = &corr.num - &corr.den.mul(&c2n);
        let mut rhs = vec![Rational::from_i64(0); 3 * n + 1];
        rhs[2 * n - 1] = so;
        rhs[2 * n] = se;
        for (k, t) in corr.tau.iter().enumerate() {
            rhs[2 * n + k + 1] = -t.clone();
        }
        assert_eq!(lhs, Poly::new(rhs), "n = {n}");
        assert!(corr.num.degree().unwrap_or(0) <= n && corr.den.degree().unwrap_or(0) <= n);
    }

    #[test]
    fn first_level_components() {
        let c = vec![q(0, 1), q(2, 1), q(3, 1)];
        let trace = JacobiTrace::init(&c).unwrap();
        let comp = remainder_components(&trace, 1, None).unwrap();
        assert_eq!(comp.f_odd, q(0, 1));
        assert_eq!(comp.f_even, q(-1, 2));
        assert_eq!(comp.f_prev, q(1, 1));
        assert_eq!(comp.tau_odd, vec![q(0, 1)]);
        assert_eq!(comp.tau_even, vec![q(-3, 2)]);
    }

    #[test]
    fn identity_on_exponential() {
        let mut f = 1i64;
        let c: Vec<Rational> = (0..13)
            .map(|k| {
                if k > 0 {
                    f *= k;
                }
                if k == 0 { q(0, 1) } else { q(1, f) }
            })
            .collect();
        for n in 1..=6 {
            check_identity(&c, n, q(3, 7), q(-2, 5));
        }
    }

    fn series() -> impl Strategy<Value = Vec<Rational>> {
        (
            prop::sample::select(vec![-3i64, -1, 1, 2]),
            prop::collection::vec((-5i64..=5, 1i64..=3), 9),
        )
            .prop_map(|(c1, rest)| {
                let mut v = vec![q(0, 1), q(c1, 1)];
                v.extend(rest.into_iter().map(|(a, b)| q(a, b)));
                v
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn identity_holds(c in series(), n in 1usize..=5, so in -4i64..=4, se in -4i64..=4) {
            let mut trace = match JacobiTrace::init(&c) { Ok(t) => t, Err(_) => return Ok(()) };
            for _ in 0..n - 1 {
                if trace.step().is_err() { return Ok(()); }
            }
            if remainder_chain(&trace, n).is_err() { return Ok(()); }
            check_identity(&c, n, q(so, 1), q(se, 1));
        }
    }
}
