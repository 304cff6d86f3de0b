//! Left/right bivariate Padé approximants of order `(n, m)`.
//!
//! The left-`(n, m)` approximant is `sum_p A_{n,p}(x) y^p / sum_p B_{n,p}(x) y^p`
//! with
//! `A_{n,p} - sum_{s<=p} B_{n,s} C_{2n,p-s} = O(x^{2n+1})`, `p = 0..=m`,
//! and `B_{n,p}(0) = b_{0,p}` fixed by the univariate `[m/m]` of `f(0, y)`.
//! The right variant is the left one of `f(y, x)` with the variables swapped back.

use std::time::Instant;

use crate::algebra::{solve, solve_pinned, Poly, Scalar, SolveError};
use crate::error::{PadeError, Result};
use crate::level::{bsum, g_prev1, g_prev2, jacobi_coeff, Level};
use crate::remainder::{apply_remainder, remainder_components, RemainderComponents};
use crate::series::{required_orders, BivSeries};
use crate::univariate::{advance, jacobi_pade, JacobiTrace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Constant terms `a_{0,p}`, `b_{0,p}`, `p = 0..=m`: the univariate `[m/m]` of `f(0, y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Seeds<S> {
    pub num: Vec<S>,
    pub den: Vec<S>,
}

impl<S: Scalar> Seeds<S> {
    pub fn m(&self) -> usize {
        self.den.len() - 1
    }
}

/// Order-`m` seeds from `c[0][0..=2m]`.
pub fn compute_seeds<S: Scalar>(series: &BivSeries<S>, m: usize) -> Result<Seeds<S>> {
    if m == 0 {
        return Ok(Seeds { num: vec![S::zero()], den: vec![S::one()] });
    }
    series.require(0, 2 * m)?;
    let axis = series.y_coeffs(0, 2 * m);
    let lvl = jacobi_pade(&axis, m).map_err(|e| match e {
        PadeError::NonNormalSeries | PadeError::DegenerateLevel { .. } => PadeError::NonNormalSeeds { m },
        other => other,
    })?;
    Ok(Seeds { num: lvl.num.padded(m + 1), den: lvl.den.padded(m + 1) })
}

/// Check parameters `check_beta^{k,p}_0`, `check_alpha^{k,p}_0` for `k = 1..=n`, `p = 1..=m`.
///
/// The parameter for shift `p` at level `m'` is the level-`(m' - p)` value;
/// [`LevelParams::check_beta_shifted`] reads it that way.
#[derive(Clone, Debug, PartialEq)]
pub struct LevelParams<S> {
    check_beta: Vec<Vec<S>>,
    check_alpha: Vec<Vec<S>>,
}

impl<S: Scalar> LevelParams<S> {
    pub(crate) fn new(n: usize, m: usize) -> Self {
        LevelParams {
            check_beta: vec![vec![S::zero(); m + 1]; n + 1],
            check_alpha: vec![vec![S::zero(); m + 1]; n + 1],
        }
    }

    pub(crate) fn set(&mut self, k: usize, p: usize, check_beta: S, check_alpha: S) {
        self.check_beta[k][p] = check_beta;
        self.check_alpha[k][p] = check_alpha;
    }

    /// `check_beta^{k,p}_0`; zero when `k = 0` or `p = 0`.
    pub fn check_beta(&self, k: usize, p: usize) -> &S {
        &self.check_beta[k][p]
    }

    /// `check_alpha^{k,p}_0`; zero when `k = 0` or `p = 0`.
    pub fn check_alpha(&self, k: usize, p: usize) -> &S {
        &self.check_alpha[k][p]
    }

    /// `check_beta^{k,m}_p`, `0 <= p < m`.
    pub fn check_beta_shifted(&self, k: usize, m: usize, p: usize) -> &S {
        &self.check_beta[k][m - p]
    }

    /// `check_alpha^{k,m}_p`, `0 <= p < m`.
    pub fn check_alpha_shifted(&self, k: usize, m: usize, p: usize) -> &S {
        &self.check_alpha[k][m - p]
    }

    pub fn n(&self) -> usize {
        self.check_beta.len() - 1
    }

    pub fn m(&self) -> usize {
        self.check_beta[0].len() - 1
    }
}

/// Residual coefficients at one level before the remainder correction.
///
/// `hat_*` come from the Jacobi part, `check_*` from the shifted lower levels.
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaParts<S> {
    pub hat_odd: S,
    pub hat_even: S,
    pub check_odd: S,
    pub check_even: S,
    /// `k = 1..=n`
    pub hat_tau: Vec<S>,
    /// `k = 1..=n`
    pub check_tau: Vec<S>,
}

impl<S: Scalar> SigmaParts<S> {
    pub fn odd(&self) -> S {
        self.hat_odd.clone() + &self.check_odd
    }

    pub fn even(&self) -> S {
        self.hat_even.clone() + &self.check_even
    }
}

/// `(check_beta_0, check_alpha_0)` annihilating the residual through the remainder operator.
pub fn check_params<S: Scalar>(parts: &SigmaParts<S>, comp: &RemainderComponents<S>) -> (S, S) {
    let so = parts.odd();
    let se = parts.even();
    let beta = comp.f_odd.clone() * &so + comp.f_even.clone() * se;
    let alpha = comp.f_prev.clone() * so;
    (beta, alpha)
}

/// Step-wise driver for the left-`(n, m)` recursion.
///
/// Keeps the level rows of the two previous steps only.
pub struct LeftRecursion<'a, S> {
    series: &'a BivSeries<S>,
    m: usize,
    seeds: Seeds<S>,
    trace: Option<JacobiTrace<S>>,
    comp: Option<RemainderComponents<S>>,
    prev2: Option<Vec<Level<S>>>,
    prev1: Vec<Level<S>>,
    params: LevelParams<S>,
    target: usize,
    deadline: Option<Instant>,
}

impl<'a, S: Scalar> LeftRecursion<'a, S> {
    /// Level-0 state for a run up to `n`. Validates series orders.
    pub fn new(series: &'a BivSeries<S>, n: usize, m: usize) -> Result<Self> {
        let (need_n, need_m) = required_orders(n, m);
        series.require(need_n, need_m.max(m))?;
        let seeds = compute_seeds(series, m)?;
        Self::with_seeds(series, n, seeds)
    }

    /// Level-0 state with externally supplied order-`m` seeds.
    pub fn with_seeds(series: &'a BivSeries<S>, n: usize, seeds: Seeds<S>) -> Result<Self> {
        let m = seeds.m();
        series.require(2 * n, m)?;
        let row0 = (0..=m)
            .map(|p| Level {
                order: 0,
                num: Poly::constant(seeds.num[p].clone()),
                den: Poly::constant(seeds.den[p].clone()),
                errors: Vec::new(),
            })
            .collect();
        Ok(LeftRecursion {
            series,
            m,
            seeds,
            trace: None,
            comp: None,
            prev2: None,
            prev1: row0,
            params: LevelParams::new(n, m),
            target: n,
            deadline: None,
        })
    }

    pub fn set_deadline(&mut self, deadline: Option<Instant>) {
        self.deadline = deadline;
    }

    /// Levels completed so far.
    pub fn order(&self) -> usize {
        self.prev1[0].order
    }

    pub fn is_done(&self) -> bool {
        self.order() == self.target
    }

    /// Current rows `A_{k,p}`, `B_{k,p}`, `p = 0..=m`.
    pub fn rows(&self) -> &[Level<S>] {
        &self.prev1
    }

    fn coeff(&self) -> impl Fn(isize, usize) -> S + '_ {
        move |i: isize, p: usize| self.series.get(i, p as isize)
    }

    /// Residual split at level `mm` of step `n = order() + 1`, given the check
    /// parameters of lower levels already in `cur`.
    pub fn sigma_for_level(&self, mm: usize, alpha: &S, beta: &S, cur: &LevelParams<S>) -> SigmaParts<S> {
        let n = self.order() + 1;
        let c = self.coeff();
        let p1 = Some(self.prev1.as_slice());
        let p2 = self.prev2.as_deref();
        let hat = |k: isize| jacobi_coeff(p1, p2, mm, n, k, alpha, beta, &c);
        let check = |k: isize| {
            let mut acc = S::zero();
            for p in 1..mm {
                let cb = cur.check_beta_shifted(n, mm, p);
                let ca = cur.check_alpha_shifted(n, mm, p);
                if !cb.is_zero() {
                    acc = acc + cb.clone() * g_prev1(p1, p, n, k - 1, &c);
                }
                if !ca.is_zero() {
                    acc = acc + ca.clone() * g_prev2(p2, p, n, k, &c);
                }
            }
            acc
        };
        SigmaParts {
            hat_odd: -hat(-1),
            hat_even: -hat(0),
            check_odd: -check(-1),
            check_even: -check(0),
            hat_tau: (1..=n as isize).map(hat).collect(),
            check_tau: (1..=n as isize).map(check).collect(),
        }
    }

    /// Computes step `order() + 1` for all levels `0..=m`.
    pub fn step(&mut self) -> Result<()> {
        let n = self.order() + 1;
        assert!(n <= self.target, "recursion already complete");
        self.check_deadline()?;

        let trace = match self.trace.as_mut() {
            Some(t) => t,
            None => {
                let axis = self.series.x_coeffs(0, 2 * self.target);
                self.trace.insert(JacobiTrace::init(&axis)?)
            }
        };
        // remainder components read levels n-1, n-2 only
        let comp = remainder_components(trace, n, self.comp.as_ref())?;
        trace.step()?;
        let trace = self.trace.as_ref().expect("initialized above");
        let alpha = trace.alpha(n).clone();
        let beta = trace.beta(n).clone();

        let mut row = Vec::with_capacity(self.m + 1);
        row.push(trace.current().clone());
        for mm in 1..=self.m {
            self.check_deadline()?;
            let parts = self.sigma_for_level(mm, &alpha, &beta, &self.params);
            let (cb, ca) = check_params(&parts, &comp);
            self.params.check_beta[n][mm] = cb;
            self.params.check_alpha[n][mm] = ca;
            row.push(self.bivariate_step(mm, &alpha, &beta, &parts, &comp));
        }

        self.prev2 = Some(std::mem::replace(&mut self.prev1, row));
        self.comp = Some(comp);
        Ok(())
    }

    /// Assembles `A_{n,mm}`, `B_{n,mm}`, `e^{n,mm}` once `check_*^{n,p}` for `p <= mm` are known.
    pub fn bivariate_step(
        &self,
        mm: usize,
        alpha: &S,
        beta: &S,
        parts: &SigmaParts<S>,
        comp: &RemainderComponents<S>,
    ) -> Level<S> {
        let n = self.order() + 1;
        let trace = self.trace.as_ref().expect("trace initialized");
        let l1 = &self.prev1;
        let l2 = self.prev2.as_deref();
        let zero = Poly::zero();
        let a2 = |p: usize| l2.map_or(&zero, |r| &r[p].num);
        let b2 = |p: usize| l2.map_or(&zero, |r| &r[p].den);

        let mut num = advance(&l1[mm].num, a2(mm), alpha, beta);
        let mut den = advance(&l1[mm].den, b2(mm), alpha, beta);
        for p in 1..mm {
            let cb = self.params.check_beta_shifted(n, mm, p);
            let ca = self.params.check_alpha_shifted(n, mm, p);
            num = &num + &l1[p].num.shift_scale(1, cb);
            num = &num + &a2(p).shift_scale(2, ca);
            den = &den + &l1[p].den.shift_scale(1, cb);
            den = &den + &b2(p).shift_scale(2, ca);
        }
        let corr = apply_remainder(comp, &parts.odd(), &parts.even(), trace);
        num = &num + &corr.num;
        den = &den + &corr.den;
        let errors = (0..n)
            .map(|k| parts.hat_tau[k].clone() + &parts.check_tau[k] - &corr.tau[k])
            .collect();
        Level { order: n, num, den, errors }
    }

    /// Runs the remaining steps.
    pub fn run(mut self) -> Result<BivPade<S>> {
        while !self.is_done() {
            self.step()?;
        }
        Ok(self.finish())
    }

    /// Packages the current rows as a left approximant.
    pub fn finish(self) -> BivPade<S> {
        let n = self.order();
        let mut params = self.params;
        params.check_beta.truncate(n + 1);
        params.check_alpha.truncate(n + 1);
        BivPade {
            side: Side::Left,
            n,
            m: self.m,
            num: self.prev1.iter().map(|l| l.num.clone()).collect(),
            den: self.prev1.iter().map(|l| l.den.clone()).collect(),
            errors: self.prev1.into_iter().map(|l| l.errors).collect(),
            seeds: self.seeds,
            params,
        }
    }

    fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(PadeError::Timeout),
            _ => Ok(()),
        }
    }
}

/// A left or right bivariate approximant.
///
/// Storage follows the recursion: for `Left`, `num[p]`/`den[p]` are polynomials
/// in `x` multiplying `y^p` (`p = 0..=m`); for `Right`, they are polynomials in
/// `y` multiplying `x^p` (`p = 0..=n`). `errors` and `params` are those of the
/// underlying left recursion.
#[derive(Clone, Debug, PartialEq)]
pub struct BivPade<S> {
    pub side: Side,
    pub n: usize,
    pub m: usize,
    pub num: Vec<Poly<S>>,
    pub den: Vec<Poly<S>>,
    pub errors: Vec<Vec<S>>,
    pub seeds: Seeds<S>,
    pub params: LevelParams<S>,
}

impl<S: Scalar> BivPade<S> {
    /// Coefficient matrices `[i][j]` of `x^i y^j`, `i <= n`, `j <= m`.
    pub fn coeff_matrices(&self) -> (Vec<Vec<S>>, Vec<Vec<S>>) {
        (self.matrix(&self.num), self.matrix(&self.den))
    }

    fn matrix(&self, polys: &[Poly<S>]) -> Vec<Vec<S>> {
        (0..=self.n)
            .map(|i| {
                (0..=self.m)
                    .map(|j| match self.side {
                        Side::Left => polys[j].coeff(i as isize),
                        Side::Right => polys[i].coeff(j as isize),
                    })
                    .collect()
            })
            .collect()
    }

    /// Numerator and denominator regrouped as polynomials in `x` per power of `y`.
    pub fn y_slices(&self) -> (Vec<Poly<S>>, Vec<Poly<S>>) {
        match self.side {
            Side::Left => (self.num.clone(), self.den.clone()),
            Side::Right => {
                let (a, b) = self.coeff_matrices();
                let col = |mat: &Vec<Vec<S>>, j: usize| Poly::new(mat.iter().map(|r| r[j].clone()).collect());
                ((0..=self.m).map(|j| col(&a, j)).collect(), (0..=self.m).map(|j| col(&b, j)).collect())
            }
        }
    }

    pub fn eval_num(&self, x: &S, y: &S) -> S {
        eval_matrix(&self.coeff_matrices().0, x, y)
    }

    pub fn eval_den(&self, x: &S, y: &S) -> S {
        eval_matrix(&self.coeff_matrices().1, x, y)
    }

    /// `num(x, y) / den(x, y)`; fails on an exact zero of the denominator.
    pub fn evaluate(&self, x: &S, y: &S) -> Result<S> {
        let (a, b) = self.coeff_matrices();
        let d = eval_matrix(&b, x, y);
        if d.is_zero() {
            return Err(PadeError::Pole { x: x.to_string(), y: y.to_string() });
        }
        Ok(eval_matrix(&a, x, y) / d)
    }

    /// Whether `self` and `other` are the same rational function (cross-multiplication).
    pub fn same_function(&self, other: &BivPade<S>) -> bool {
        let (a1, b1) = self.coeff_matrices();
        let (a2, b2) = other.coeff_matrices();
        bimul(&a1, &b2) == bimul(&a2, &b1)
    }

    pub fn to_f64(&self) -> BivPade<f64> {
        let conv = |v: &[Poly<S>]| v.iter().map(|p| p.to_f64()).collect();
        let convs = |v: &[S]| v.iter().map(|s| s.to_f64()).collect::<Vec<_>>();
        BivPade {
            side: self.side,
            n: self.n,
            m: self.m,
            num: conv(&self.num),
            den: conv(&self.den),
            errors: self.errors.iter().map(|e| convs(e)).collect(),
            seeds: Seeds { num: convs(&self.seeds.num), den: convs(&self.seeds.den) },
            params: LevelParams {
                check_beta: self.params.check_beta.iter().map(|r| convs(r)).collect(),
                check_alpha: self.params.check_alpha.iter().map(|r| convs(r)).collect(),
            },
        }
    }
}

fn eval_matrix<S: Scalar>(mat: &[Vec<S>], x: &S, y: &S) -> S {
    mat.iter()
        .rev()
        .fold(S::zero(), |acc, row| acc * x + Poly::new(row.clone()).eval(y))
}

/// Product of two bivariate coefficient matrices, trailing zeros trimmed.
fn bimul<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    let rows = a.len() + b.len() - 1;
    let cols = a[0].len() + b[0].len() - 1;
    let mut out = vec![vec![S::zero(); cols]; rows];
    for (i, ra) in a.iter().enumerate() {
        for (j, va) in ra.iter().enumerate() {
            if va.is_zero() {
                continue;
            }
            for (k, rb) in b.iter().enumerate() {
                for (l, vb) in rb.iter().enumerate() {
                    out[i + k][j + l] = out[i + k][j + l].clone() + va.clone() * vb;
                }
            }
        }
    }
    out
}

/// Left-`(n, m)` approximant by the recursion.
pub fn left_pade<S: Scalar>(series: &BivSeries<S>, n: usize, m: usize) -> Result<BivPade<S>> {
    LeftRecursion::new(series, n, m)?.run()
}

/// Left-`(n, m)` approximant with caller-supplied seeds of order `m = seeds.m()`.
pub fn left_pade_with_seeds<S: Scalar>(series: &BivSeries<S>, n: usize, seeds: Seeds<S>) -> Result<BivPade<S>> {
    LeftRecursion::with_seeds(series, n, seeds)?.run()
}

/// Right-`(n, m)` approximant: left-`(m, n)` of the transposed series.
pub fn right_pade<S: Scalar>(series: &BivSeries<S>, n: usize, m: usize) -> Result<BivPade<S>> {
    let t = series.transpose();
    left_pade(&t, m, n).map(into_right).map_err(untranspose)
}

/// Restates an order error of the transposed problem in the caller's variables.
pub(crate) fn untranspose(e: PadeError) -> PadeError {
    match e {
        PadeError::InsufficientOrder { need_n, need_m, have_n, have_m } => PadeError::InsufficientOrder {
            need_n: need_m,
            need_m: need_n,
            have_n: have_m,
            have_m: have_n,
        },
        PadeError::SingularBivariate { n, m, p } => PadeError::SingularBivariate { n: m, m: n, p },
        other => other,
    }
}

fn into_right<S: Scalar>(left: BivPade<S>) -> BivPade<S> {
    BivPade { side: Side::Right, n: left.m, m: left.n, ..left }
}

/// How the oracle treats a singular Hankel block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    /// Report [`PadeError::SingularBivariate`].
    Reject,
    /// Accept any consistent solution, free unknowns set to zero.
    PinFree,
}

/// Left-`(n, m)` approximant by direct linear solves, one per level `p`, with the
/// same seeds as the recursion.
pub fn oracle_left_pade<S: Scalar>(
    series: &BivSeries<S>,
    n: usize,
    m: usize,
    policy: Degeneracy,
) -> Result<BivPade<S>> {
    let (need_n, need_m) = required_orders(n, m);
    series.require(need_n, need_m.max(m))?;
    let seeds = match policy {
        Degeneracy::Reject => compute_seeds(series, m)?,
        Degeneracy::PinFree => oracle_seeds(series, m)?,
    };
    let c = |i: usize, p: usize| series.at(i, p).clone();
    let top = 3 * n;
    let mut num = Vec::with_capacity(m + 1);
    let mut den: Vec<Poly<S>> = Vec::with_capacity(m + 1);
    let mut errors = Vec::with_capacity(m + 1);
    for p in 0..=m {
        // K_i = sum_{s<p} [B_s C_{2n,p-s}]_i
        let mut k = vec![S::zero(); top + 1];
        for (s, bs) in den.iter().enumerate() {
            for (j, b) in bs.coeffs().iter().enumerate() {
                for i in 0..=2 * n {
                    if j + i <= top {
                        k[j + i] = k[j + i].clone() + b.clone() * c(i, p - s);
                    }
                }
            }
        }
        let b0 = seeds.den[p].clone();
        let matrix = (n + 1..=2 * n)
            .map(|i| (1..=n).map(|j| c(i - j, 0)).collect())
            .collect();
        let rhs = (n + 1..=2 * n)
            .map(|i| -(k[i].clone() + b0.clone() * c(i, 0)))
            .collect();
        let sol = match policy {
            Degeneracy::Reject => solve(matrix, rhs),
            Degeneracy::PinFree => solve_pinned(matrix, rhs),
        };
        let tail = sol.map_err(|_: SolveError| PadeError::SingularBivariate { n, m, p })?;
        let mut b = vec![b0];
        b.extend(tail);
        let conv = |i: usize| {
            (i.saturating_sub(2 * n)..=n.min(i)).fold(k[i].clone(), |acc, j| acc + b[j].clone() * c(i - j, 0))
        };
        num.push(Poly::new((0..=n).map(conv).collect()));
        errors.push((2 * n + 1..=top).map(|i| -conv(i)).collect());
        den.push(Poly::new(b));
    }
    Ok(BivPade {
        side: Side::Left,
        n,
        m,
        num,
        den,
        errors,
        seeds,
        params: LevelParams::new(n, m),
    })
}

/// Right-`(n, m)` oracle: left oracle of the transposed series.
pub fn oracle_right_pade<S: Scalar>(
    series: &BivSeries<S>,
    n: usize,
    m: usize,
    policy: Degeneracy,
) -> Result<BivPade<S>> {
    oracle_left_pade(&series.transpose(), m, n, policy).map(into_right).map_err(untranspose)
}

// seeds by direct solve, tolerant of a non-normal y-axis
fn oracle_seeds<S: Scalar>(series: &BivSeries<S>, m: usize) -> Result<Seeds<S>> {
    if m == 0 {
        return Ok(Seeds { num: vec![S::zero()], den: vec![S::one()] });
    }
    let c = |i: isize| if i < 0 { S::zero() } else { series.at(0, i as usize).clone() };
    let matrix = (m + 1..=2 * m)
        .map(|i| (1..=m).map(|j| c(i as isize - j as isize)).collect())
        .collect();
    let rhs = (m + 1..=2 * m).map(|i| -c(i as isize)).collect();
    let tail = solve_pinned(matrix, rhs).map_err(|_| PadeError::NonNormalSeeds { m })?;
    let mut den = vec![S::one()];
    den.extend(tail);
    let num = (0..=m)
        .map(|i| (0..=i).fold(S::zero(), |acc, j| acc + den[j].clone() * c((i - j) as isize)))
        .collect();
    Ok(Seeds { num, den })
}

/// Defect `A_{n,p} - sum_{s<=p} B_{n,s} C_{2n,p-s}` of a left approximant, coefficients `0..=3n`.
pub fn left_defect<S: Scalar>(series: &BivSeries<S>, pade: &BivPade<S>, p: usize) -> Poly<S> {
    let n = pade.n;
    let mut acc = pade.num[p].clone();
    for s in 0..=p {
        let col = Poly::new(series.x_coeffs(p - s, 2 * n));
        acc = &acc - &pade.den[s].mul(&col);
    }
    acc
}

/// `sum_{s=0}^{p} b^{row[s]}_j c(i, p - s)`, exposed for closed-form checks.
pub fn level_bsum<S: Scalar>(row: &[Level<S>], j: isize, i: isize, p: usize, series: &BivSeries<S>) -> S {
    bsum(Some(row), j, i, p, &|i: isize, p: usize| series.get(i, p as isize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn series_from(vals: &[(i64, i64)], n: usize, m: usize, c10: i64, c01: i64) -> BivSeries<Rational> {
        let mut it = vals.iter().cycle();
        let c = (0..=n)
            .map(|i| {
                (0..=m)
                    .map(|j| match (i, j) {
                        (0, 0) => q(0, 1),
                        (1, 0) => q(c10, 1),
                        (0, 1) => q(c01, 1),
                        _ => {
                            let &(a, b) = it.next().unwrap();
                            q(a, b)
                        }
                    })
                    .collect()
            })
            .collect();
        BivSeries::new(c).unwrap()
    }

    fn arb_series(n: usize, m: usize) -> impl Strategy<Value = BivSeries<Rational>> {
        (
            prop::sample::select(vec![-2i64, -1, 1, 3]),
            prop::sample::select(vec![-1i64, 1, 2]),
            prop::collection::vec((-5i64..=5, 1i64..=3), (n + 1) * (m + 1)),
        )
            .prop_map(move |(c10, c01, v)| series_from(&v, n, m, c10, c01))
    }

    #[test]
    fn zero_level_reduces_to_univariate() {
        let s = series_from(&[(1, 2), (-3, 1), (2, 3), (4, 1)], 8, 0, 1, 0);
        let b = left_pade(&s, 4, 0).unwrap();
        let u = jacobi_pade(&s.x_coeffs(0, 8), 4).unwrap();
        assert_eq!(b.num[0], u.num);
        assert_eq!(b.den[0], u.den);
        assert_eq!(b.errors[0], u.errors);
    }

    #[test]
    fn insufficient_order_reported() {
        let s = series_from(&[(1, 1)], 3, 2, 1, 1);
        assert!(matches!(
            left_pade(&s, 2, 1),
            Err(PadeError::InsufficientOrder { need_n: 4, need_m: 2, .. })
        ));
    }

    #[test]
    fn zeroth_order_is_seed_pade() {
        let s = series_from(&[(1, 2), (-3, 1), (2, 3)], 0, 4, 1, 2);
        let b = left_pade(&s, 0, 2).unwrap();
        let seeds = compute_seeds(&s, 2).unwrap();
        assert_eq!(b.num, seeds.num.iter().map(|v| Poly::constant(v.clone())).collect::<Vec<_>>());
    }

    #[test]
    fn copy_rule_reads_lower_level() {
        let s = series_from(&[(1, 2), (-3, 1), (2, 3), (4, 1), (-1, 3)], 6, 6, 1, 1);
        let b = left_pade(&s, 3, 3).unwrap();
        for k in 1..=3 {
            for mm in 1..=3 {
                for p in 0..mm {
                    assert_eq!(b.params.check_beta_shifted(k, mm, p), b.params.check_beta(k, mm - p));
                    assert_eq!(b.params.check_alpha_shifted(k, mm, p), b.params.check_alpha(k, mm - p));
                }
            }
        }
    }

    #[test]
    fn right_of_symmetric_series_mirrors_left() {
        let mut c = vec![vec![q(0, 1); 5]; 5];
        for i in 0..5 {
            for j in 0..5 {
                if i + j > 0 {
                    let v = q(((i * 7 + j * 7 + i * j) % 9) as i64 - 4, 1 + ((i + j) % 3) as i64);
                    c[i][j] = v.clone();
                    c[j][i] = v;
                }
            }
        }
        c[1][0] = q(1, 1);
        c[0][1] = q(1, 1);
        let s = BivSeries::new(c).unwrap();
        let l = left_pade(&s, 2, 2).unwrap();
        let r = right_pade(&s, 2, 2).unwrap();
        let (la, lb) = l.coeff_matrices();
        let (ra, rb) = r.coeff_matrices();
        for i in 0..=2 {
            for j in 0..=2 {
                assert_eq!(ra[i][j], la[j][i]);
                assert_eq!(rb[i][j], lb[j][i]);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn recursion_matches_oracle(s in arb_series(10, 6), n in 1usize..=4, m in 0usize..=3) {
            let s = s.truncated(2 * n, 2 * m);
            if let Ok(o) = oracle_left_pade(&s, n, m, Degeneracy::Reject) {
                match left_pade(&s, n, m) {
                    Ok(r) => {
                        prop_assert_eq!(&r.num, &o.num);
                        prop_assert_eq!(&r.den, &o.den);
                        prop_assert_eq!(&r.errors, &o.errors);
                    }
                    Err(e) => {
                        let degenerate = matches!(e, PadeError::DegenerateLevel { .. } | PadeError::DegenerateRemainder { .. });
                        prop_assert!(degenerate);
                    }
                }
            }
        }

        #[test]
        fn defect_vanishes(s in arb_series(8, 4), n in 1usize..=4, m in 1usize..=2) {
            if let Ok(r) = left_pade(&s, n, m) {
                for p in 0..=m {
                    let d = left_defect(&s, &r, p);
                    for k in 0..=2 * n {
                        prop_assert_eq!(d.coeff(k as isize), q(0, 1));
                    }
                    for k in 1..=n {
                        prop_assert_eq!(d.coeff((2 * n + k) as isize), r.errors[p][k - 1].clone());
                    }
                }
            }
        }
    }
}
