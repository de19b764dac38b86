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

//! Lattice theta functions `theta_L(alpha) = sum exp(-2 pi alpha Q_L(m, n))`.
//!
//! The sum runs over rows `n >= 0` (the other half-plane by symmetry). Each row
//! is a one-dimensional Gaussian in `m` centred at `-b n / 2a`; it is summed
//! outwards from the centre and cut once a geometric bound on the remaining
//! terms drops below the row's share of the budget. The number of rows comes
//! from a Gaussian comparison bound on the row masses. All terms are scaled by
//! `exp(2 pi alpha a)` so that the shortest vectors contribute exactly 1.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{BravaisLattice, QuadraticForm};
use crate::sums::control::{Accumulator, Estimate, SumControl};

/// Quadratic form of discriminant 1 (a lattice of area 1/2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalizedForm {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl NormalizedForm {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let disc = 4.0 * a * c - b * b;
        if !(a > 0.0 && c > 0.0) || (disc - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "form ({a}, {b}, {c}) has discriminant {disc}, expected 1"
            )));
        }
        Ok(NormalizedForm { a, b, c })
    }

    /// Form of `L / sqrt(2 |L|)`, so that the discriminant becomes 1.
    pub fn from_lattice(lat: &BravaisLattice) -> Self {
        let q = lat.quadratic_form().scaled(1.0 / (2.0 * lat.area()));
        NormalizedForm { a: q.a, b: q.b, c: q.c }
    }

    pub(crate) fn reduced_form(&self) -> Result<QuadraticForm> {
        QuadraticForm::new(self.a, self.b, self.c)?.reduced()
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("theta parameter {alpha} must be positive")))
    }
}

/// `sum_{(m,n) != 0} exp(-beta (Q(m,n) - a))` for a reduced form.
///
/// The value is at least 2 (the two shortest vectors); the returned error is a
/// rigorous bound, at most `rel_tol` times the value.
pub(crate) fn scaled_gaussian_sum(form: &QuadraticForm, beta: f64, rel_tol: f64, max_shell: usize) -> Result<Estimate> {
    debug_assert!(form.is_reduced());
    let (a, b) = (form.a, form.b);
    let k = form.disc / (4.0 * a);
    let ba = beta * a;
    let inner_bound = 1.0 + (PI / ba).sqrt();
    let log_half = (0.5 * rel_tol).ln();

    // rows n > rows all carry less than rel_tol / 2 in total
    let row_tail = |rows: usize| {
        let n1 = (rows + 1) as f64;
        inner_bound.ln() - beta * (k * n1 * n1 - a) - (-(-beta * k * (2.0 * n1 + 1.0)).exp()).ln_1p()
    };
    let mut rows = 0usize;
    while row_tail(rows) > log_half {
        rows += 1;
        if rows > max_shell {
            return Err(Error::Convergence {
                achieved: row_tail(max_shell).exp(),
                limit: max_shell,
            });
        }
    }
    let row_budget = 0.5 * rel_tol / (rows + 1) as f64;

    let mut acc = Accumulator::default();
    let mut err = row_tail(rows).exp();
    for n in 0..=rows {
        let nf = n as f64;
        let centre = -b * nf / (2.0 * a);
        let row_log = -beta * (k * nf * nf - a);
        let tail = |d: f64| (row_log - ba * d * d).exp() / -(-ba * (2.0 * d + 1.0)).exp_m1();

        // upwards from the centre (row 0: from m = 1, the rest by symmetry)
        let start = if n == 0 { 1.0 } else { centre.ceil() };
        let mut m = start;
        loop {
            let d = m - centre;
            acc.add((row_log - ba * d * d).exp());
            let bound = tail(d + 1.0);
            if bound <= 0.5 * row_budget {
                err += bound;
                break;
            }
            m += 1.0;
            if m - start > max_shell as f64 {
                return Err(Error::Convergence {
                    achieved: bound,
                    limit: max_shell,
                });
            }
        }
        if n == 0 {
            continue;
        }
        let mut m = start - 1.0;
        loop {
            let d = centre - m;
            acc.add((row_log - ba * d * d).exp());
            let bound = tail(d + 1.0);
            if bound <= 0.5 * row_budget {
                err += bound;
                break;
            }
            m -= 1.0;
            if start - m > max_shell as f64 {
                return Err(Error::Convergence {
                    achieved: bound,
                    limit: max_shell,
                });
            }
        }
    }
    Ok(Estimate {
        value: 2.0 * acc.value(),
        error: 2.0 * err,
    })
}

/// `theta(alpha) - 1` for a reduced form, with error relative to itself.
pub(crate) fn theta_minus_one_form(
    form: &QuadraticForm,
    alpha: f64,
    rel_tol: f64,
    max_shell: usize,
) -> Result<Estimate> {
    let beta = 2.0 * PI * alpha;
    let s = scaled_gaussian_sum(form, beta, rel_tol, max_shell)?;
    let scale = (-beta * form.a).exp();
    Ok(Estimate {
        value: s.value * scale,
        error: s.error * scale,
    })
}

/// `theta_L(alpha)` with an error bound.
pub fn theta_estimate(lat: &BravaisLattice, alpha: f64, ctl: &SumControl) -> Result<Estimate> {
    ctl.validate()?;
    check_alpha(alpha)?;
    let t = theta_minus_one_form(&lat.quadratic_form(), alpha, ctl.rel_tol, ctl.max_shell)?;
    Ok(Estimate {
        value: 1.0 + t.value,
        error: t.error,
    })
}

/// Lattice theta function `theta_L(alpha)`, always at least 1.
pub fn theta(lat: &BravaisLattice, alpha: f64, ctl: &SumControl) -> Result<f64> {
    theta_estimate(lat, alpha, ctl).map(|e| e.value)
}

/// Theta function of a discriminant-1 form, where `theta(1/alpha) = alpha theta(alpha)`.
pub fn theta_normalized(form: &NormalizedForm, alpha: f64, ctl: &SumControl) -> Result<f64> {
    ctl.validate()?;
    check_alpha(alpha)?;
    let t = theta_minus_one_form(&form.reduced_form()?, alpha, ctl.rel_tol, ctl.max_shell)?;
    Ok(1.0 + t.value)
}

/// Gaussian lattice sum `E_y(L) = sum_{x != 0} exp(-|x|^2 / 4y) = theta_L(1 / 8 pi y) - 1`.
pub fn gaussian_sum(lat: &BravaisLattice, y: f64, ctl: &SumControl) -> Result<f64> {
    ctl.validate()?;
    if !(y > 0.0 && y.is_finite()) {
        return Err(Error::Domain(format!("gaussian width {y} must be positive")));
    }
    let alpha = 1.0 / (8.0 * PI * y);
    theta_minus_one_form(&lat.quadratic_form(), alpha, ctl.rel_tol, ctl.max_shell).map(|e| e.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::FRAC_PI_2;

    /// Square-window brute force, independent of the row scheme.
    fn brute_theta(q: &QuadraticForm, alpha: f64, k: i64) -> f64 {
        let mut s = 0.0;
        for m in -k..=k {
            for n in -k..=k {
                s += (-2.0 * PI * alpha * q.eval(m as f64, n as f64)).exp();
            }
        }
        s
    }

    #[test]
    fn large_alpha_is_one() {
        let sq = BravaisLattice::square(1.0).unwrap();
        let v = theta(&sq, 50.0, &SumControl::default()).unwrap();
        assert!((v - 1.0).abs() < 1e-100);
        assert!(v >= 1.0);
    }

    #[test]
    fn square_factorizes() {
        let sq = BravaisLattice::square(1.0).unwrap();
        let alpha = 0.3;
        let one_d: f64 = (-60..=60)
            .map(|m: i32| (-2.0 * PI * alpha * (m * m) as f64).exp())
            .sum();
        let v = theta(&sq, alpha, &SumControl::default()).unwrap();
        assert_relative_eq!(v, one_d * one_d, max_relative = 1e-13);
    }

    #[test]
    fn matches_brute_force_on_skewed_lattice() {
        let lat = BravaisLattice::new(0.6, 1.9, 1.2).unwrap();
        let q = lat.quadratic_form();
        for alpha in [0.05, 0.3, 1.0, 4.0] {
            let v = theta(&lat, alpha, &SumControl::default()).unwrap();
            assert_relative_eq!(v, brute_theta(&q, alpha, 80), max_relative = 1e-13);
        }
    }

    #[test]
    fn modular_identity_on_normalized_triangular() {
        let tri = BravaisLattice::triangular(1.0).unwrap();
        let form = NormalizedForm::from_lattice(&tri);
        let ctl = SumControl::default();
        let alpha = 0.37;
        let lhs = theta_normalized(&form, 1.0 / alpha, &ctl).unwrap();
        let rhs = alpha * theta_normalized(&form, alpha, &ctl).unwrap();
        assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
        // and against an independent brute force evaluation
        let q = tri.quadratic_form().scaled(0.5);
        assert_relative_eq!(lhs, brute_theta(&q, 1.0 / alpha, 40), max_relative = 1e-13);
        assert_relative_eq!(rhs, alpha * brute_theta(&q, alpha, 40), max_relative = 1e-13);
    }

    #[test]
    fn normalized_square_self_dual_point() {
        let form = NormalizedForm::new(0.5, 0.0, 0.5).unwrap();
        let ctl = SumControl::default();
        let t1 = theta_normalized(&form, 1.0, &ctl).unwrap();
        assert!(t1.is_finite() && t1 > 1.0);
        let half = theta_normalized(&form, 0.5, &ctl).unwrap();
        let two = theta_normalized(&form, 2.0, &ctl).unwrap();
        assert_relative_eq!(half, 2.0 * two, max_relative = 1e-12);
        let big = theta_normalized(&form, 1e3, &ctl).unwrap();
        assert_eq!(big, 1.0);
    }

    #[test]
    fn rejects_bad_arguments() {
        let sq = BravaisLattice::square(1.0).unwrap();
        let ctl = SumControl::default();
        assert!(matches!(theta(&sq, 0.0, &ctl), Err(Error::Domain(_))));
        assert!(matches!(theta(&sq, -1.0, &ctl), Err(Error::Domain(_))));
        assert!(matches!(gaussian_sum(&sq, 0.0, &ctl), Err(Error::Domain(_))));
        assert!(NormalizedForm::new(1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn convergence_failure_carries_bound() {
        let sq = BravaisLattice::square(1.0).unwrap();
        let ctl = SumControl {
            max_shell: 3,
            ..SumControl::default()
        };
        match theta(&sq, 1e-3, &ctl) {
            Err(Error::Convergence { achieved, limit }) => {
                assert_eq!(limit, 3);
                assert!(achieved > 0.0);
            }
            other => panic!("expected convergence failure, got {other:?}"),
        }
    }

    #[test]
    fn gaussian_sum_limits() {
        let sq = BravaisLattice::square(1.0).unwrap();
        let ctl = SumControl::default();
        assert!(gaussian_sum(&sq, 1e-3, &ctl).unwrap() < 1e-100);
        let e1 = gaussian_sum(&sq, 1.0, &ctl).unwrap();
        let t = theta(&sq, 1.0 / (8.0 * PI), &ctl).unwrap();
        assert_relative_eq!(e1, t - 1.0, max_relative = 1e-12);
        let tri = BravaisLattice::triangular(1.0).unwrap();
        assert!(gaussian_sum(&tri, 0.5, &ctl).unwrap() < gaussian_sum(&sq, 0.5, &ctl).unwrap());
    }

    #[test]
    fn error_bound_is_reported() {
        let lat = BravaisLattice::new(1.0, 1.3, FRAC_PI_2 - 0.2).unwrap();
        let e = theta_estimate(&lat, 0.2, &SumControl::default()).unwrap();
        assert!(e.error >= 0.0 && e.error <= 1e-12 * (e.value - 1.0));
    }
}
