// Copyright 2026 The lattice-energy authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! Epstein zeta function `zeta_L(s) = sum_{x in L, x != 0} |x|^-s`, for `s > 2`.
//!
//! Two independent routes:
//!
//! * [`epstein_zeta_direct`] sums every vector with `|x| <= R` and adds the
//!   continuum tail `2 pi R^(2-s) / ((s-2) |L|)`. The remaining error is
//!   controlled by the lattice point discrepancy
//!   `|N(r) - pi r^2 / |L|| <= (2 pi r d + pi d^2) / |L| + 1`, `d` the long
//!   diagonal of the cell, which gives a rigorous `O(R^(1-s))` bound.
//! * [`epstein_zeta_accelerated`] uses the theta-function integral
//!   `zeta(2s) Gamma(s) (2 pi)^-s = 1/(s-1) - 1/s + int_1^inf (theta(a) - 1)(a^s + a^(1-s)) da/a`
//!   on the discriminant-1 rescaling of the lattice. The integrand decays like
//!   `exp(-2 pi a_min alpha)`, so the integral is truncated at a finite `T`
//!   with an explicit tail bound.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::BravaisLattice;
use crate::sums::control::{Accumulator, Estimate, SumControl};
use crate::sums::quad;
use crate::sums::theta::theta_minus_one_form;
use crate::sums::visit_half_plane;

/// Which algorithm evaluates `zeta_L(s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaMethod {
    Direct,
    #[default]
    Accelerated,
}

fn check_exponent(s: f64) -> Result<()> {
    if s > 2.0 && s.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("Epstein zeta diverges for s = {s}; need s > 2")))
    }
}

/// `q^(-s/2)`, with integer powers when `s` is even.
#[inline]
fn inverse_power(q: f64, half_s: f64, half_s_int: Option<i32>) -> f64 {
    match half_s_int {
        Some(k) => q.powi(-k),
        None => q.powf(-half_s),
    }
}

fn integer_half(s: f64) -> Option<i32> {
    let h = 0.5 * s;
    (h.fract() == 0.0 && h <= 64.0).then_some(h as i32)
}

/// Bound on `|sum_{|x|>R} |x|^-s - 2 pi R^(2-s) / ((s-2) A)|`.
fn discrepancy_bound(radius: f64, s: f64, area: f64, diag: f64) -> f64 {
    let k = (2.0 * PI * diag + PI * diag * diag / radius) / area;
    k * radius.powf(1.0 - s) * (2.0 * s - 1.0) / (s - 1.0) + 2.0 * radius.powf(-s)
}

/// Direct summation with its rigorous error bound.
pub fn epstein_zeta_direct_estimate(lat: &BravaisLattice, s: f64, ctl: &SumControl) -> Result<Estimate> {
    ctl.validate()?;
    check_exponent(s)?;
    let q = lat.quadratic_form();
    let (a, b, c) = (q.a, q.b, q.c);
    let area = lat.area();
    let diag = (a + b + c).sqrt();
    // zeta >= 2 a^(-s/2) from the two shortest vectors
    let target = ctl.rel_tol * 2.0 * a.powf(-0.5 * s);

    let mut radius = diag.max(c.sqrt());
    while discrepancy_bound(radius, s, area, diag) > target {
        radius *= 2.0;
        if radius > 1e12 {
            break;
        }
    }
    let (mut lo, mut hi) = (0.5 * radius, radius);
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if mid >= diag && discrepancy_bound(mid, s, area, diag) <= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let radius = hi;

    let k = q.disc / (4.0 * a);
    let rows = (radius / k.sqrt()).floor();
    let widest = (radius / a.sqrt()).ceil();
    if rows > ctl.max_shell as f64 || widest > ctl.max_shell as f64 {
        let reach = ctl.max_shell as f64 * k.sqrt().min(a.sqrt());
        return Err(Error::Convergence {
            achieved: discrepancy_bound(reach.max(diag), s, area, diag) / (2.0 * a.powf(-0.5 * s)),
            limit: ctl.max_shell,
        });
    }

    let half_s = 0.5 * s;
    let half_int = integer_half(s);
    let mut acc = Accumulator::default();
    visit_half_plane(&q, radius * radius, |qv| acc.add(inverse_power(qv, half_s, half_int)));
    let tail = 2.0 * PI * radius.powf(2.0 - s) / ((s - 2.0) * area);
    let value = 2.0 * acc.value() + tail;
    Ok(Estimate {
        value,
        error: discrepancy_bound(radius, s, area, diag) + 1e-15 * value,
    })
}

/// `zeta_L(s)` by direct summation over lattice vectors.
pub fn epstein_zeta_direct(lat: &BravaisLattice, s: f64, ctl: &SumControl) -> Result<f64> {
    epstein_zeta_direct_estimate(lat, s, ctl).map(|e| e.value)
}

/// `Gamma(x)` for `x > 0`; exact factorials for small integers.
pub(crate) fn gamma(x: f64) -> f64 {
    if x.fract() == 0.0 && (1.0..=20.0).contains(&x) {
        (1..x as u64).map(|k| k as f64).product()
    } else {
        libm::tgamma(x)
    }
}

/// Theta-integral evaluation with an error estimate.
pub fn epstein_zeta_accelerated_estimate(lat: &BravaisLattice, s: f64, ctl: &SumControl) -> Result<Estimate> {
    ctl.validate()?;
    check_exponent(s)?;
    let area = lat.area();
    // discriminant 1 rescaling: Q' = Q / 2A
    let form = lat.quadratic_form().scaled(1.0 / (2.0 * area));
    let sigma = 0.5 * s;
    let constant = 1.0 / (sigma * (sigma - 1.0));
    let theta_tol = (1e-2 * ctl.rel_tol).max(1e-15);

    // (theta(alpha) - 1) <= (theta(1) - 1) exp(-lambda (alpha - 1)) for alpha >= 1
    let lambda = 2.0 * PI * form.a;
    let at_one = theta_minus_one_form(&form, 1.0, theta_tol, ctl.max_shell)?.value;
    let p = sigma - 1.0;
    let tail_bound = |t: f64| {
        let decay = (-lambda * (t - 1.0)).exp();
        at_one * decay * (t.powf(p) / (lambda - p / t) + 1.0 / lambda)
    };
    let tail_target = 0.1 * ctl.quad_rel_tol * constant;
    let mut upper = (2.0 * p / lambda).max(2.0);
    while tail_bound(upper) > tail_target {
        upper *= 1.5;
        if upper > 1e7 {
            return Err(Error::Convergence {
                achieved: tail_bound(upper) / constant,
                limit: ctl.max_shell,
            });
        }
    }

    let integral = quad::integrate(
        |alpha| {
            let t = theta_minus_one_form(&form, alpha, theta_tol, ctl.max_shell)?.value;
            Ok(t * (alpha.powf(sigma) + alpha.powf(1.0 - sigma)) / alpha)
        },
        1.0,
        upper,
        0.25 * ctl.quad_rel_tol,
        0.25 * ctl.quad_rel_tol * constant,
        ctl.max_shell,
    )?;

    let prefactor = (2.0 * PI).powf(sigma) / (gamma(sigma) * (2.0 * area).powf(sigma));
    let bracket = constant + integral.value;
    let value = prefactor * bracket;
    Ok(Estimate {
        value,
        error: prefactor * (integral.error + tail_bound(upper)) + theta_tol * value,
    })
}

/// `zeta_L(s)` through the exponentially convergent theta integral.
pub fn epstein_zeta_accelerated(lat: &BravaisLattice, s: f64, ctl: &SumControl) -> Result<f64> {
    epstein_zeta_accelerated_estimate(lat, s, ctl).map(|e| e.value)
}

/// `zeta_L(s)` by the chosen method.
pub fn epstein_zeta(lat: &BravaisLattice, s: f64, method: ZetaMethod, ctl: &SumControl) -> Result<f64> {
    match method {
        ZetaMethod::Direct => epstein_zeta_direct(lat, s, ctl),
        ZetaMethod::Accelerated => epstein_zeta_accelerated(lat, s, ctl),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Plain square-window sum plus a continuum tail outside the inscribed disc.
    fn brute_zeta(lat: &BravaisLattice, s: f64, k: i64) -> f64 {
        let q = lat.quadratic_form();
        let mut total = 0.0;
        let r_in = (k as f64) * (q.disc / (4.0 * q.c)).sqrt().min((q.disc / (4.0 * q.a)).sqrt());
        for m in -k..=k {
            for n in -k..=k {
                if m == 0 && n == 0 {
                    continue;
                }
                let v = q.eval(m as f64, n as f64);
                if v <= r_in * r_in {
                    total += v.powf(-0.5 * s);
                }
            }
        }
        total + 2.0 * PI * r_in.powf(2.0 - s) / ((s - 2.0) * lat.area())
    }

    /// 4 zeta(2) beta(2), the closed form of the square lattice sum at s = 4.
    fn square_zeta4() -> f64 {
        let zeta2 = PI * PI / 6.0;
        let catalan = 0.915_965_594_177_219_015_054_603_514_932_384_110_774;
        4.0 * zeta2 * catalan
    }

    #[test]
    fn square_lattice_closed_form() {
        let sq = BravaisLattice::square(1.0).unwrap();
        let acc = epstein_zeta_accelerated(&sq, 4.0, &SumControl::default()).unwrap();
        assert_relative_eq!(acc, square_zeta4(), max_relative = 1e-12);
        let direct = epstein_zeta_direct(&sq, 4.0, &SumControl::with_rel_tol(1e-10)).unwrap();
        assert_relative_eq!(direct, square_zeta4(), max_relative = 1e-10);
        assert!((acc - 6.02681).abs() < 1e-5);
    }

    #[test]
    fn triangular_constants() {
        let tri = BravaisLattice::triangular(1.0).unwrap();
        let ctl = SumControl::default();
        let z6 = epstein_zeta_direct(&tri, 6.0, &ctl).unwrap();
        let z12 = epstein_zeta_direct(&tri, 12.0, &ctl).unwrap();
        assert_relative_eq!(z6, brute_zeta(&tri, 6.0, 400), max_relative = 1e-9);
        assert_relative_eq!(z12, brute_zeta(&tri, 12.0, 60), max_relative = 1e-12);
        assert!((z6 - 4.1414).abs() < 5e-4);
        assert!((z12 - 2.5355).abs() < 5e-4);
        let a0 = (z12 / z6).powf(1.0 / 3.0);
        assert!((a0 - 0.84912).abs() < 5e-6);
        let acc6 = epstein_zeta_accelerated(&tri, 6.0, &ctl).unwrap();
        let acc12 = epstein_zeta_accelerated(&tri, 12.0, &ctl).unwrap();
        assert_relative_eq!(acc6, z6, max_relative = 1e-11);
        assert_relative_eq!(acc12, z12, max_relative = 1e-11);
    }

    #[test]
    fn scaling_law() {
        let tri = BravaisLattice::triangular(1.0).unwrap();
        let ctl = SumControl::default();
        let big = tri.scale(2f64.sqrt()).unwrap();
        let z = epstein_zeta_direct(&tri, 6.0, &ctl).unwrap();
        assert_relative_eq!(
            epstein_zeta_direct(&big, 6.0, &ctl).unwrap(),
            z / 8.0,
            max_relative = 1e-10
        );
        let tri_a = tri.scale(1.14f64.sqrt()).unwrap();
        assert_relative_eq!(
            epstein_zeta_accelerated(&tri_a, 6.0, &ctl).unwrap(),
            z / 1.14f64.powi(3),
            max_relative = 1e-10
        );
    }

    #[test]
    fn non_even_exponent_agrees() {
        let lat = BravaisLattice::new(0.9, 1.3, 1.3).unwrap();
        let ctl = SumControl::default();
        let d = epstein_zeta_direct(&lat, 7.3, &ctl).unwrap();
        let a = epstein_zeta_accelerated(&lat, 7.3, &ctl).unwrap();
        assert_relative_eq!(d, a, max_relative = 1e-10);
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma(6.0), 120.0);
        assert_eq!(gamma(3.0), 2.0);
        assert_eq!(gamma(1.0), 1.0);
        assert_relative_eq!(gamma(0.5), PI.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(gamma(3.65), 2.65 * gamma(2.65), max_relative = 1e-13);
    }

    #[test]
    fn domain_errors() {
        let sq = BravaisLattice::square(1.0).unwrap();
        let ctl = SumControl::default();
        assert!(matches!(epstein_zeta_direct(&sq, 2.0, &ctl), Err(Error::Domain(_))));
        assert!(matches!(
            epstein_zeta_accelerated(&sq, 1.5, &ctl),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn direct_cutoff_beyond_max_shell_fails() {
        let sq = BravaisLattice::square(1.0).unwrap();
        // s = 4 at 1e-12 needs a cutoff radius far beyond 10_000 shells
        match epstein_zeta_direct(&sq, 4.0, &SumControl::default()) {
            Err(Error::Convergence { achieved, .. }) => assert!(achieved > 1e-12),
            other => panic!("expected convergence failure, got {other:?}"),
        }
    }

    #[test]
    fn halving_tolerance_stays_within_reported_bound() {
        let lat = BravaisLattice::new(1.0, 1.2, 1.4).unwrap();
        for s in [6.0, 12.0] {
            let coarse = epstein_zeta_direct_estimate(&lat, s, &SumControl::with_rel_tol(1e-8)).unwrap();
            let fine = epstein_zeta_direct_estimate(&lat, s, &SumControl::with_rel_tol(5e-9)).unwrap();
            assert!((coarse.value - fine.value).abs() <= coarse.error);
        }
    }
}
