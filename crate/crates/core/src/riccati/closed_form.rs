//! Closed-form Jacobi parameters and coefficient ratios for the Riccati series.

use std::time::Instant;

use super::RiccatiProblem;
use crate::algebra::{factorial, pochhammer, Poly, Scalar};
use crate::bivariate::{right_pade, untranspose, BivPade, LeftRecursion, LevelParams, Seeds, Side};
use crate::error::{PadeError, Result};
use crate::level::{error_coeffs, UniPade};
use crate::series::BivSeries;
use crate::univariate::{advance, jacobi_pade};

/// How the univariate `[n/n]` of `f(x, 0)` is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UniAlgorithm {
    /// Generic Jacobi recursion on the generated coefficients.
    General,
    /// Jacobi recursion with the explicit `alpha_n`, `beta_n`.
    ExplicitParams,
    /// Direct products of the coefficient ratios.
    CoefficientRatios,
}

fn nonzero<S: Scalar>(d: S, what: &'static str, n: usize, k: usize) -> Result<S> {
    if d.is_zero() {
        Err(PadeError::ZeroDenominator { what, n, k })
    } else {
        Ok(d)
    }
}

impl<S: Scalar> RiccatiProblem<S> {
    fn int(v: i64) -> S {
        S::from_i64(v)
    }

    fn half(v: i64) -> S {
        S::from_ratio(v, 2)
    }

    fn alpha_beta(&self) -> S {
        self.alpha.clone() * &self.beta
    }

    /// `(alpha_1, beta_1) = (-c10, -c20 / c10)`.
    pub fn first_jacobi_params(&self) -> (S, S) {
        let c10 = self.c10();
        let beta1 = self.beta.clone() * &c10 / (Self::int(2) - &self.beta);
        (-c10, beta1)
    }

    /// `(alpha_n, beta_n)` in closed form.
    pub fn explicit_jacobi_params(&self, n: usize) -> Result<(S, S)> {
        assert!(n >= 1);
        if n == 1 {
            return Ok(self.first_jacobi_params());
        }
        let b = &self.beta;
        let t = |k: i64| b.clone() - Self::int(2 * n as i64 - k);
        let ab = self.alpha_beta();
        let den_a = nonzero(t(1) * t(2) * t(2) * t(3), "alpha_n", n, 0)?;
        let den_b = nonzero(t(0) * t(2), "beta_n", n, 0)?;
        let alpha_n = -(ab.clone() * &ab) / den_a;
        let beta_n = -(Self::int(2) * ab) / den_b;
        Ok((alpha_n, beta_n))
    }

    /// Numerators and denominators of `[k/k]`, `k = 0..=n`, from the explicit parameters.
    pub(crate) fn explicit_levels(&self, n: usize) -> Result<Vec<(Poly<S>, Poly<S>)>> {
        let mut out = vec![(Poly::zero(), Poly::one())];
        if n == 0 {
            return Ok(out);
        }
        let (_, beta1) = self.first_jacobi_params();
        out.push((Poly::monomial(self.c10(), 1), Poly::new(vec![S::one(), beta1])));
        for k in 2..=n {
            let (a, b) = self.explicit_jacobi_params(k)?;
            let num = advance(&out[k - 1].0, &out[k - 2].0, &a, &b);
            let den = advance(&out[k - 1].1, &out[k - 2].1, &a, &b);
            out.push((num, den));
        }
        Ok(out)
    }

    /// `[n/n]` from `b_0 = 1`, `b_k = P0(n, k) b_{k-1}` and `a_1 = c10`, `a_k = Q0(n, k) a_{k-1}`.
    pub fn direct_coeff_ratios(&self, n: usize) -> Result<(Poly<S>, Poly<S>)> {
        if n == 0 {
            return Ok((Poly::zero(), Poly::one()));
        }
        let b = &self.beta;
        let ab = self.alpha_beta();
        let nn = n as i64;
        let mut den = vec![S::one()];
        for k in 1..=nn {
            let num = -(ab.clone() * Self::int((2 * nn - 2 * k + 1) * (nn - k + 1)));
            let d = Self::int(k)
                * Self::half(2 * nn - k + 1)
                * (b.clone() - Self::int(2 * nn - k + 1))
                * (b.clone() - Self::int(k));
            let d = nonzero(d, "P0", n, k as usize)?;
            let prev = den[k as usize - 1].clone();
            den.push(prev * num / d);
        }
        let mut num = vec![S::zero(), self.c10()];
        for k in 2..=nn {
            let top = -(ab.clone() * Self::int((2 * nn - 2 * k + 3) * (nn - k + 1)));
            let d = Self::int(k - 1)
                * Self::half(2 * nn - k + 1)
                * (b.clone() - Self::int(2 * nn - k + 2))
                * (b.clone() - Self::int(k));
            let d = nonzero(d, "Q0", n, k as usize)?;
            let prev = num[k as usize - 1].clone();
            num.push(prev * top / d);
        }
        Ok((Poly::new(num), Poly::new(den)))
    }

    /// Numerator and denominator of the `[n/n]` of `f(x, 0)`.
    pub fn univariate_polys(&self, n: usize, algo: UniAlgorithm) -> Result<(Poly<S>, Poly<S>)> {
        match algo {
            UniAlgorithm::General => {
                let l = jacobi_pade(&self.x_axis_coeffs(2 * n)?, n)?;
                Ok((l.num, l.den))
            }
            UniAlgorithm::ExplicitParams => Ok(self.explicit_levels(n)?.pop().unwrap()),
            UniAlgorithm::CoefficientRatios => self.direct_coeff_ratios(n),
        }
    }

    /// `[n/n]` of `f(x, 0)` with its errors `e_{2n+k}`, `k = 1..=n`.
    pub fn univariate(&self, n: usize, algo: UniAlgorithm) -> Result<UniPade<S>> {
        let coeffs = self.x_axis_coeffs(3 * n)?;
        if algo == UniAlgorithm::General {
            return jacobi_pade(&coeffs[..=2 * n], n);
        }
        let (num, den) = self.univariate_polys(n, algo)?;
        let errors = error_coeffs(&num, &den, n, |i| coeffs[i].clone());
        Ok(UniPade { order: n, num, den, errors })
    }

    /// `(check_beta^{1,1}_0, check_alpha^{1,1}_0)` from the first few series coefficients.
    pub fn first_check_params(&self, c01: &S) -> Result<(S, S)> {
        let s = self.generate_series(c01, 2, 1)?;
        let (_, beta1) = self.first_jacobi_params();
        let hat = s.at(1, 1).clone() + c01.clone() * s.at(1, 0);
        let sum = s.at(2, 1).clone() + c01.clone() * s.at(2, 0);
        let check_beta = -((sum + beta1 * &hat) / s.at(1, 0));
        Ok((check_beta, hat))
    }

    /// `(check_beta^{n,1}_0, check_alpha^{n,1}_0)` in closed form for `n >= 2`.
    pub fn explicit_check_params(&self, c01: &S, n: usize) -> Result<(S, S)> {
        if n == 1 {
            return self.first_check_params(c01);
        }
        let (alpha_n, beta_n) = self.explicit_jacobi_params(n)?;
        let b = &self.beta;
        let nn = n as i64;
        let one_minus_2b = S::one() - Self::int(2) * b;
        let cb_poly = Self::int(2 * (2 * nn - 1) * (2 * nn - 1))
            + b.clone() * (Self::int(2) * b - Self::int(8 * (nn - 1) + 3));
        let check_beta = -(b.clone() * pochhammer(&one_minus_2b, 2 * nn - 3) * cb_poly * beta_n * c01)
            / (Self::int(nn) * factorial::<S>(2 * n - 1));
        let ca_poly = Self::int(8 * (nn - 1) * (nn - 1) - 1)
            + b.clone() * (Self::int(2) * b - Self::int(8 * (nn - 1) + 1));
        let check_alpha = Self::int(8)
            * b
            * (b.clone() - Self::int(nn - 2))
            * pochhammer(&one_minus_2b, 2 * nn - 5)
            * ca_poly
            * alpha_n
            * c01
            / factorial::<S>(2 * n - 1);
        Ok((check_beta, check_alpha))
    }

    /// Left-`(n, 1)` by the generic bivariate recursion.
    pub fn left_general(&self, c01: &S, n: usize) -> Result<BivPade<S>> {
        self.left_general_until(c01, n, None)
    }

    pub(crate) fn left_general_until(&self, c01: &S, n: usize, deadline: Option<Instant>) -> Result<BivPade<S>> {
        let s = self.generate_series_until(c01, 2 * n, 2, deadline)?;
        let mut rec = LeftRecursion::new(&s, n, 1)?;
        rec.set_deadline(deadline);
        rec.run()
    }

    /// Left-`(n, 1)` from the explicit Jacobi and check parameters.
    pub fn left_refined(&self, c01: &S, n: usize) -> Result<BivPade<S>> {
        let lv = self.explicit_levels(n)?;
        let mut params = LevelParams::new(n, 1);
        // level-1 polynomials; the y-axis seeds are [0, c01] / [1, c01]
        let mut rows: Vec<(Poly<S>, Poly<S>)> = vec![(Poly::constant(c01.clone()), Poly::constant(c01.clone()))];
        for k in 1..=n {
            let (cb, ca) = self.explicit_check_params(c01, k)?;
            let (num, den) = if k == 1 {
                let (_, beta1) = self.first_jacobi_params();
                // x^2 A_{-1,1} enters as +x, A_{0,0} = 0, B_{0,0} = 1
                let num = Poly::new(vec![c01.clone(), beta1.clone() * c01 + &ca]);
                let den = Poly::new(vec![c01.clone(), beta1 * c01 + &cb]);
                (num, den)
            } else {
                let (a, b) = self.explicit_jacobi_params(k)?;
                let (p1, p2) = (&rows[k - 1], &rows[k - 2]);
                let num = &(&advance(&p1.0, &p2.0, &a, &b) + &lv[k - 1].0.shift_scale(1, &cb))
                    + &lv[k - 2].0.shift_scale(2, &ca);
                let den = &(&advance(&p1.1, &p2.1, &a, &b) + &lv[k - 1].1.shift_scale(1, &cb))
                    + &lv[k - 2].1.shift_scale(2, &ca);
                (num, den)
            };
            params.set(k, 1, cb, ca);
            rows.push((num, den));
        }
        let (a1, b1) = rows.pop().unwrap();
        let (a0, b0) = lv.into_iter().nth(n).unwrap();
        Ok(BivPade {
            side: Side::Left,
            n,
            m: 1,
            num: vec![a0, a1],
            den: vec![b0, b1],
            errors: Vec::new(),
            seeds: Seeds { num: vec![S::zero(), c01.clone()], den: vec![S::one(), c01.clone()] },
            params,
        })
    }

    /// Right-`(n, 1)` by the generic bivariate recursion on the transposed series.
    pub fn right_general(&self, c01: &S, n: usize) -> Result<BivPade<S>> {
        self.right_general_until(c01, n, None)
    }

    pub(crate) fn right_general_until(&self, c01: &S, n: usize, deadline: Option<Instant>) -> Result<BivPade<S>> {
        let s = self.generate_series_until(c01, 2 * n, 2, deadline)?;
        if deadline.is_none() {
            return right_pade(&s, n, 1);
        }
        let t = s.transpose();
        let mut rec = LeftRecursion::new(&t, 1, n).map_err(untranspose)?;
        rec.set_deadline(deadline);
        let left = rec.run().map_err(untranspose)?;
        Ok(BivPade { side: Side::Right, n: left.m, m: left.n, ..left })
    }

    /// Right-`(n, 1)`: the `y^0` part is the univariate `[n/n]` from the
    /// coefficient ratios, the `y^1` part follows the ratio chains
    /// `b_k = P1(n, k) b_{k-1}`, `a_k = Q1(n, k) a_{k-1}` from `b_0 = a_0 = c01`.
    pub fn right_ratio_chain(&self, c01: &S, n: usize) -> Result<BivPade<S>> {
        let (a0, b0) = self.direct_coeff_ratios(n)?;
        let mut b_r = vec![c01.clone()];
        let mut a_r = vec![c01.clone()];
        for k in 1..=n {
            b_r.push(self.ratio_p1(n, k)? * &b_r[k - 1]);
            a_r.push(self.ratio_q1(n, k)? * &a_r[k - 1]);
        }
        Ok(pack_right(n, a0, b0, a_r, b_r))
    }

    /// Right-`(n, 1)` as in [`Self::right_ratio_chain`], falling back to the
    /// direct linear recurrence when a ratio is undefined.
    pub fn right_refined(&self, c01: &S, n: usize) -> Result<BivPade<S>> {
        self.right_refined_with(c01, n, UniAlgorithm::CoefficientRatios)
    }

    /// [`Self::right_refined`] with a chosen backend for the `y^0` part.
    pub fn right_refined_with(&self, c01: &S, n: usize, uni: UniAlgorithm) -> Result<BivPade<S>> {
        let mut pade = self.right_refined_chain(c01, n)?;
        if uni != UniAlgorithm::CoefficientRatios {
            let (a0, b0) = self.univariate_polys(n, uni)?;
            for k in 0..=n {
                pade.num[k] = Poly::new(vec![a0.coeff(k as isize), pade.num[k].coeff(1)]);
                pade.den[k] = Poly::new(vec![b0.coeff(k as isize), pade.den[k].coeff(1)]);
            }
            pade.seeds = Seeds { num: a0.padded(n + 1), den: b0.padded(n + 1) };
        }
        Ok(pade)
    }

    fn right_refined_chain(&self, c01: &S, n: usize) -> Result<BivPade<S>> {
        match self.right_ratio_chain(c01, n) {
            Err(PadeError::ZeroDenominator { .. }) => {
                let (a0, b0) = self.direct_coeff_ratios(n)?;
                let s = self.generate_series(c01, n, 2)?;
                let (a_r, b_r) = level_one_direct(&b0, &s, n)?;
                Ok(pack_right(n, a0, b0, a_r, b_r))
            }
            other => other,
        }
    }

    /// Right-`(n, 1)` by induction on `n`:
    /// `a^{(n)}_k = a^{(n-1)}_k + beta_n a^{(n-1)}_{k-1} + alpha_n a^{(n-2)}_{k-2}`,
    /// likewise for `b`, with the explicit `alpha_n`, `beta_n`.
    ///
    /// Row `n - 1` is extended to index `n` by the ratio `P1(n-1, n)` (`Q1`),
    /// or by the direct recurrence where that ratio is undefined.
    pub fn right_induction_coeffs(&self, c01: &S, n: usize) -> Result<BivPade<S>> {
        let lv = self.explicit_levels(n)?;
        let s = self.generate_series(c01, n.max(1), 2)?;
        // rows[r] = (a^{(r)}, b^{(r)}) with entries for k = 0..=r
        let mut rows: Vec<(Vec<S>, Vec<S>)> = Vec::with_capacity(n + 1);
        for r in 0..=n.min(1) {
            rows.push(level_one_direct(&lv[r].1, &s, r)?);
        }
        for r in 2..=n {
            let (alpha_r, beta_r) = self.explicit_jacobi_params(r)?;
            let (mut a1, mut b1) = rows[r - 1].clone();
            let (a_ext, b_ext) = self.extend_row(&rows[r - 1], r - 1, &lv[r - 1].1, &s)?;
            a1.push(a_ext);
            b1.push(b_ext);
            let (a2, b2) = &rows[r - 2];
            let pick = |v: &[S], k: usize| v.get(k).cloned().unwrap_or_else(S::zero);
            let mut a = Vec::with_capacity(r + 1);
            let mut b = Vec::with_capacity(r + 1);
            for k in 0..=r {
                let lower = |v: &[S], shift: usize| if k >= shift { pick(v, k - shift) } else { S::zero() };
                a.push(a1[k].clone() + beta_r.clone() * lower(&a1, 1) + alpha_r.clone() * lower(a2, 2));
                b.push(b1[k].clone() + beta_r.clone() * lower(&b1, 1) + alpha_r.clone() * lower(b2, 2));
            }
            rows.push((a, b));
        }
        let (a_r, b_r) = rows.pop().unwrap();
        let (a0, b0) = lv.into_iter().nth(n).unwrap();
        Ok(pack_right(n, a0, b0, a_r, b_r))
    }

    /// Entries `a^{(r)}_{r+1}`, `b^{(r)}_{r+1}` of row `r`.
    fn extend_row(&self, row: &(Vec<S>, Vec<S>), r: usize, den0: &Poly<S>, s: &BivSeries<S>) -> Result<(S, S)> {
        if r >= 1 {
            if let (Ok(p), Ok(q)) = (self.ratio_p1(r, r + 1), self.ratio_q1(r, r + 1)) {
                return Ok((q * &row.0[r], p * &row.1[r]));
            }
        }
        let (a, b) = level_one_direct(den0, s, r + 1)?;
        Ok((a[r + 1].clone(), b[r + 1].clone()))
    }

    /// `P1(n, k) = -alpha beta (beta - (n-k+1)) (2 beta - (2n-2k+1))
    ///   / (k (beta - (n - (k-1)/2)) (beta - (2n-k+1)) (k + beta))`.
    pub fn ratio_p1(&self, n: usize, k: usize) -> Result<S> {
        let b = &self.beta;
        let (nn, kk) = (n as i64, k as i64);
        let top = -(self.alpha_beta()
            * (b.clone() - Self::int(nn - kk + 1))
            * (Self::int(2) * b - Self::int(2 * nn - 2 * kk + 1)));
        let d = Self::int(kk)
            * (b.clone() - Self::half(2 * nn - kk + 1))
            * (b.clone() - Self::int(2 * nn - kk + 1))
            * (b.clone() + Self::int(kk));
        Ok(top / nonzero(d, "P1", n, k)?)
    }

    /// `Q1(n, k) = -alpha beta (beta - (n-k+1)) (2 beta - (2n-2k+3))
    ///   / (k (beta - (n - (k-2)/2)) (beta - (2n-k+1)) (k - 1 + beta))`.
    pub fn ratio_q1(&self, n: usize, k: usize) -> Result<S> {
        let b = &self.beta;
        let (nn, kk) = (n as i64, k as i64);
        let top = -(self.alpha_beta()
            * (b.clone() - Self::int(nn - kk + 1))
            * (Self::int(2) * b - Self::int(2 * nn - 2 * kk + 3)));
        let d = Self::int(kk)
            * (b.clone() - Self::half(2 * nn - kk + 2))
            * (b.clone() - Self::int(2 * nn - kk + 1))
            * (b.clone() + Self::int(kk - 1));
        Ok(top / nonzero(d, "Q1", n, k)?)
    }
}

/// `y^1` coefficients of the right-`(r, 1)` approximant up to index `kmax`,
/// given its `y^0` denominator `den0` (zero beyond degree `r`).
///
/// From the `y^2` and `y^1` terms of the defect:
/// `b_k c01 = -sum_s b0_s c[k-s][2] - sum_{s<k} b_s c[k-s][1]`,
/// `a_k = sum_s b0_s c[k-s][1] + sum_s b_s c[k-s][0]`.
pub(crate) fn level_one_direct<S: Scalar>(den0: &Poly<S>, s: &BivSeries<S>, kmax: usize) -> Result<(Vec<S>, Vec<S>)> {
    s.require(kmax, 2)?;
    let c01 = s.at(0, 1);
    if c01.is_zero() {
        return Err(PadeError::NonNormalSeeds { m: 1 });
    }
    let mut b: Vec<S> = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let mut acc = S::zero();
        for j in 0..=k {
            acc = acc - den0.coeff(j as isize) * s.at(k - j, 2);
        }
        for (j, bj) in b.iter().enumerate() {
            acc = acc - bj.clone() * s.at(k - j, 1);
        }
        b.push(acc / c01);
    }
    let a = (0..=kmax)
        .map(|k| {
            (0..=k).fold(S::zero(), |acc, j| {
                acc + den0.coeff(j as isize) * s.at(k - j, 1) + b[j].clone() * s.at(k - j, 0)
            })
        })
        .collect();
    Ok((a, b))
}

fn pack_right<S: Scalar>(n: usize, a0: Poly<S>, b0: Poly<S>, a_r: Vec<S>, b_r: Vec<S>) -> BivPade<S> {
    let col = |p0: &Poly<S>, v: &[S]| -> Vec<Poly<S>> {
        (0..=n).map(|k| Poly::new(vec![p0.coeff(k as isize), v[k].clone()])).collect()
    };
    BivPade {
        side: Side::Right,
        n,
        m: 1,
        num: col(&a0, &a_r),
        den: col(&b0, &b_r),
        errors: Vec::new(),
        seeds: Seeds { num: a0.padded(n + 1), den: b0.padded(n + 1) },
        params: LevelParams::new(1, n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::bivariate::left_pade;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn problems() -> Vec<RiccatiProblem<Rational>> {
        [(q(1, 1), q(1, 2)), (q(2, 1), q(1, 3)), (q(3, 2), q(7, 5)), (q(1, 1), q(5, 2))]
            .into_iter()
            .map(|(a, b)| RiccatiProblem::new(a, b).unwrap())
            .collect()
    }

    #[test]
    fn explicit_params_at_demo_point() {
        let p = &problems()[0];
        assert_eq!(p.first_jacobi_params(), (q(2, 1), q(-2, 3)));
        assert_eq!(p.explicit_jacobi_params(2).unwrap(), (q(-4, 45), q(-4, 21)));
    }

    #[test]
    fn univariate_algorithms_agree() {
        for p in problems() {
            for n in 0..=8 {
                let g = p.univariate(n, UniAlgorithm::General).unwrap();
                let e = p.univariate(n, UniAlgorithm::ExplicitParams).unwrap();
                let r = p.univariate(n, UniAlgorithm::CoefficientRatios).unwrap();
                assert_eq!(g, e, "beta = {}, n = {n}", p.beta());
                assert_eq!(g, r, "beta = {}, n = {n}", p.beta());
            }
        }
    }

    #[test]
    fn check_params_match_recursion() {
        for p in problems() {
            let c01 = q(3, 1);
            let s = p.generate_series(&c01, 16, 2).unwrap();
            let l = left_pade(&s, 8, 1).unwrap();
            for n in 1..=8 {
                let (cb, ca) = p.explicit_check_params(&c01, n).unwrap();
                assert_eq!(&cb, l.params.check_beta(n, 1), "beta = {}, n = {n}", p.beta());
                assert_eq!(&ca, l.params.check_alpha(n, 1), "beta = {}, n = {n}", p.beta());
            }
        }
    }

    #[test]
    fn check_beta_vanishes_at_half() {
        let p = &problems()[0];
        for n in 2..=6 {
            assert_eq!(p.explicit_check_params(&q(1, 1), n).unwrap().0, q(0, 1));
        }
    }

    #[test]
    fn left_paths_agree() {
        for p in problems() {
            for n in 1..=7 {
                let c01 = q(-2, 3);
                let g = p.left_general(&c01, n).unwrap();
                let r = p.left_refined(&c01, n).unwrap();
                assert_eq!(g.num, r.num, "beta = {}, n = {n}", p.beta());
                assert_eq!(g.den, r.den, "beta = {}, n = {n}", p.beta());
                assert_eq!(g.params, r.params);
            }
        }
    }

    #[test]
    fn right_paths_agree() {
        for p in problems() {
            for n in 1..=7 {
                let c01 = q(5, 4);
                let g = p.right_general(&c01, n).unwrap();
                let r = p.right_refined(&c01, n).unwrap();
                let i = p.right_induction_coeffs(&c01, n).unwrap();
                let e = p.right_refined_with(&c01, n, UniAlgorithm::ExplicitParams).unwrap();
                assert_eq!(r, e);
                assert_eq!(g.num, r.num, "refined beta = {}, n = {n}", p.beta());
                assert_eq!(g.den, r.den, "refined beta = {}, n = {n}", p.beta());
                assert_eq!(g.num, i.num, "induction beta = {}, n = {n}", p.beta());
                assert_eq!(g.den, i.den, "induction beta = {}, n = {n}", p.beta());
            }
        }
    }

    #[test]
    fn right_general_with_deadline_matches() {
        let p = &problems()[1];
        let far = Instant::now() + std::time::Duration::from_secs(3600);
        let a = p.right_general(&q(1, 1), 4).unwrap();
        let b = p.right_general_until(&q(1, 1), 4, Some(far)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn direct_level_one_matches_recursion() {
        let p = &problems()[2];
        let s = p.generate_series(&q(2, 1), 10, 2).unwrap();
        for n in 1..=5 {
            let g = right_pade(&s, n, 1).unwrap();
            let (a, b) = level_one_direct(&g.den[0].clone(), &s, 0).unwrap();
            assert_eq!((a[0].clone(), b[0].clone()), (q(2, 1), q(2, 1)));
            let den0 = Poly::new(g.den.iter().map(|p| p.coeff(0)).collect());
            let (a, b) = level_one_direct(&den0, &s, n).unwrap();
            let expect_b: Vec<_> = g.den.iter().map(|p| p.coeff(1)).collect();
            let expect_a: Vec<_> = g.num.iter().map(|p| p.coeff(1)).collect();
            assert_eq!(b, expect_b);
            assert_eq!(a, expect_a);
        }
    }
}
