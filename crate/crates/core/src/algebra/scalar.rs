use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact arbitrary-precision rational.
pub type Rational = BigRational;

/// Field element every algorithm is generic over.
///
/// Two realizations: [`Rational`] (exact, used for the oracle comparisons) and
/// `f64` (fast, used for timings and special-function work).
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    /// True when arithmetic is exact (no rounding).
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    /// `num / den`; panics on `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Exact conversion where the representation allows it.
    fn from_f64(v: f64) -> Self;

    /// Exact for [`Rational`], rounded for `f64`.
    fn from_rational(r: &Rational) -> Self;

    fn to_f64(&self) -> f64;

    fn is_integer(&self) -> bool;

    /// Magnitude used for pivot selection.
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }

    fn from_usize(v: usize) -> Self {
        Self::from_i64(v as i64)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_f64(v: f64) -> Self {
        BigRational::from_float(v).expect("finite float")
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        if let Some(v) = ToPrimitive::to_f64(self) {
            if v.is_finite() && (v != 0.0 || self.is_zero()) {
                return v;
            }
        }
        ratio_to_f64_scaled(self)
    }

    fn is_integer(&self) -> bool {
        BigRational::is_integer(self)
    }
}

// Fallback for ratios whose parts overflow f64 individually.
fn ratio_to_f64_scaled(r: &Rational) -> f64 {
    let num = r.numer().abs();
    let den = r.denom().clone();
    let shift = num.bits() as i64 - den.bits() as i64;
    // bring the quotient into [2^52, 2^54) before the integer division
    let k = 53 - shift;
    let q = if k >= 0 {
        (num << k as usize) / den
    } else {
        num / (den << (-k) as usize)
    };
    let half = (-k / 2) as i32;
    let rest = (-k) as i32 - half;
    let mag = q.to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(half) * 2f64.powi(rest);
    if r.is_negative() {
        -mag
    } else {
        mag
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    fn from_f64(v: f64) -> Self {
        v
    }

    fn from_rational(r: &Rational) -> Self {
        Scalar::to_f64(r)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_integer(&self) -> bool {
        self.fract() == 0.0
    }
}

/// Parses `"p/q"`, `"p"`, or a plain decimal such as `"-0.125"` into an exact rational.
///
/// Decimals are read digit-by-digit, so `"0.1"` is exactly `1/10`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    if let Ok(p) = s.parse::<BigInt>() {
        return Some(BigRational::from_integer(p));
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("0{int}{frac}").parse().ok()?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut r = BigRational::from_integer(digits);
    if scale >= 0 {
        r *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        r /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if neg { -r } else { r })
}

/// `base^k` for a non-negative integer power.
pub fn powi<S: Scalar>(base: &S, k: usize) -> S {
    let mut acc = S::one();
    for _ in 0..k {
        acc = acc * base;
    }
    acc
}

/// `k!` as a scalar.
pub fn factorial<S: Scalar>(k: usize) -> S {
    (1..=k).fold(S::one(), |acc, i| acc * S::from_usize(i))
}

/// Pochhammer symbol `(c)_k = c(c+1)...(c+k-1)`, extended to `k < 0` by
/// `(c)_k = 1 / ((c-1)(c-2)...(c+k))`.
pub fn pochhammer<S: Scalar>(c: &S, k: i64) -> S {
    if k >= 0 {
        (0..k).fold(S::one(), |acc, i| acc * (c.clone() + S::from_i64(i)))
    } else {
        let den = (1..=-k).fold(S::one(), |acc, i| acc * (c.clone() - S::from_i64(i)));
        S::one() / den
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rational("3/4"), Some(q(3, 4)));
        assert_eq!(parse_rational(" -6/8 "), Some(q(-3, 4)));
        assert_eq!(parse_rational("7"), Some(q(7, 1)));
        assert_eq!(parse_rational("0.1"), Some(q(1, 10)));
        assert_eq!(parse_rational("-2.5e-1"), Some(q(-1, 4)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
    }

    #[test]
    fn huge_ratio_converts_to_float() {
        let big = num_traits::pow(BigInt::from(10), 400);
        let r = BigRational::new(big.clone() * 3, big * 7);
        assert!((Scalar::to_f64(&r) - 3.0 / 7.0).abs() < 1e-15);

        let tiny = BigRational::new(BigInt::from(1), num_traits::pow(BigInt::from(10), 320));
        let v = Scalar::to_f64(&tiny);
        assert!(v > 0.0 && v < 1e-300);
    }

    #[test]
    fn pochhammer_negative_index() {
        let c = q(1, 3);
        assert_eq!(pochhammer(&c, 0), q(1, 1));
        assert_eq!(pochhammer(&c, 3), q(1, 3) * q(4, 3) * q(7, 3));
        assert_eq!(pochhammer(&c, -1), q(1, 1) / (c.clone() - q(1, 1)));
        assert_eq!(pochhammer(&c, -2), q(1, 1) / ((c.clone() - q(1, 1)) * (c - q(2, 1))));
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial::<Rational>(5), q(120, 1));
        assert_eq!(factorial::<f64>(0), 1.0);
    }
}
