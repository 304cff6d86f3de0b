//! Gamma, Pochhammer and Bessel functions of real order (f64).

use std::f64::consts::PI;

use crate::error::{PadeError, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `Gamma(x)` by the Lanczos approximation, reflection for `x < 1/2`.
///
/// Fails at the poles `x = 0, -1, -2, ...`.
pub fn gamma(x: f64) -> Result<f64> {
    if x <= 0.0 && x.fract() == 0.0 {
        return Err(PadeError::Domain(format!("gamma pole at {x}")));
    }
    Ok(gamma_unchecked(x))
}

fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma_unchecked(1.0 - x));
    }
    // exact factorials keep integer arguments free of rounding
    if x.fract() == 0.0 && x <= 23.0 {
        return (1..x as u64).fold(1.0, |acc, k| acc * k as f64);
    }
    let x = x - 1.0;
    let t = x + LANCZOS_G + 0.5;
    let series = LANCZOS
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS[0], |acc, (i, c)| acc + c / (x + i as f64));
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * series
}

/// `1 / Gamma(x)`, zero at the poles.
pub fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x.fract() == 0.0 {
        0.0
    } else {
        1.0 / gamma_unchecked(x)
    }
}

/// `(c)_k = c (c+1) ... (c+k-1)`.
pub fn pochhammer(c: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (c + i as f64))
}

/// `J_nu(z)` for real `nu` and `z >= 0` by the ascending series.
///
/// Intended for `z` up to about 10; cancellation grows beyond that.
pub fn bessel_j(nu: f64, z: f64) -> Result<f64> {
    if z < 0.0 {
        return Err(PadeError::Domain(format!("bessel_j needs z >= 0, got {z}")));
    }
    if z == 0.0 {
        return Ok(match nu {
            0.0 => 1.0,
            v if v > 0.0 || v.fract() == 0.0 => 0.0,
            _ => f64::INFINITY,
        });
    }
    let half = z / 2.0;
    let q = -half * half;
    // integer negative order: J_{-n} = (-1)^n J_n
    if nu < 0.0 && nu.fract() == 0.0 {
        let sign = if (nu as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * bessel_j(-nu, z)?);
    }
    let mut term = half.powf(nu) * rgamma(nu + 1.0);
    let mut sum = term;
    let mut k = 1.0;
    loop {
        term *= q / (k * (k + nu));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs().max(f64::MIN_POSITIVE) && k > half {
            break;
        }
        if k > 500.0 {
            break;
        }
        k += 1.0;
    }
    Ok(sum)
}

/// `Y_nu(z) = (J_nu(z) cos(nu pi) - J_{-nu}(z)) / sin(nu pi)` for non-integer `nu`.
pub fn bessel_y(nu: f64, z: f64) -> Result<f64> {
    if (nu - nu.round()).abs() <= 1e-9 {
        return Err(PadeError::Domain(format!("bessel_y needs non-integer order, got {nu}")));
    }
    if z <= 0.0 {
        return Err(PadeError::Domain(format!("bessel_y needs z > 0, got {z}")));
    }
    let (s, c) = (nu * PI).sin_cos();
    Ok((bessel_j(nu, z)? * c - bessel_j(-nu, z)?) / s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn gamma_known_values() {
        assert_eq!(gamma(1.0).unwrap(), 1.0);
        assert_eq!(gamma(5.0).unwrap(), 24.0);
        assert!(close(gamma(0.5).unwrap(), PI.sqrt(), 1e-14));
        assert!(close(gamma(-0.5).unwrap(), -2.0 * PI.sqrt(), 1e-14));
        assert!(close(gamma(1.0 / 3.0).unwrap(), 2.678_938_534_707_747_6, 1e-14));
        assert!(gamma(0.0).is_err());
        assert!(gamma(-3.0).is_err());
    }

    #[test]
    fn bessel_known_values() {
        // J_{1/2}(z) = sqrt(2/(pi z)) sin z
        for z in [0.3, 1.0, 2.5, 7.0] {
            let expect = (2.0 / (PI * z)).sqrt() * z.sin();
            assert!(close(bessel_j(0.5, z).unwrap(), expect, 1e-13));
            let y = -(2.0 / (PI * z)).sqrt() * z.cos();
            assert!(close(bessel_y(0.5, z).unwrap(), y, 1e-12));
        }
        assert!(close(bessel_j(0.0, 1.0).unwrap(), 0.765_197_686_557_966_6, 1e-14));
        assert!(close(bessel_j(1.0, 2.0).unwrap(), 0.576_724_807_756_873_4, 1e-14));
        assert!(close(bessel_j(-2.0, 2.0).unwrap(), bessel_j(2.0, 2.0).unwrap(), 1e-15));
    }

    #[test]
    fn first_zero_of_j0() {
        let (mut lo, mut hi) = (2.0, 3.0);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if bessel_j(0.0, mid).unwrap() > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!((lo - 2.404_825_557_695_773).abs() < 1e-9);
        assert!(bessel_j(0.0, 2.404_825_557_695_773).unwrap().abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn gamma_recurrence(x in -29.5f64..29.5) {
            prop_assume!((x - x.round()).abs() > 1e-3);
            let g = gamma(x).unwrap();
            let g1 = gamma(x + 1.0).unwrap();
            prop_assert!(close(g1, x * g, 1e-13), "x = {}", x);
        }

        #[test]
        fn wronskian(nu in 0.1f64..3.0, z in 0.5f64..8.0) {
            prop_assume!((nu - nu.round()).abs() > 0.02);
            let w = bessel_j(nu + 1.0, z).unwrap() * bessel_y(nu, z).unwrap()
                - bessel_j(nu, z).unwrap() * bessel_y(nu + 1.0, z).unwrap();
            let expect = 2.0 / (PI * z);
            prop_assert!((w - expect).abs() <= 1e-10 * expect.max(1.0), "nu = {}, z = {}, w = {}", nu, z, w);
        }
    }
}
