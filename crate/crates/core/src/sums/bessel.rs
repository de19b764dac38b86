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

//! Modified Bessel function `K0` on the positive axis, from two integral
//! representations:
//!
//! * `K0(x) = int_0^inf exp(-x cosh t) dt`, by the trapezoid rule, which
//!   converges geometrically in the step for this analytic, even integrand;
//! * `K0(x) = 1/2 int_0^inf exp(-x^2 / 4y - y) dy / y`, by Gauss-Kronrod in
//!   `tau = ln y`, split at the peak `y = x/2`.

use crate::error::{Error, Result};
use crate::sums::control::{Accumulator, SumControl};
use crate::sums::quad;

fn check_argument(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("K0 is only defined here for x > 0, got {x}")))
    }
}

/// `exp(-x (cosh t - 1))`, the cosh integrand without its `exp(-x)` factor.
#[inline]
pub(crate) fn cosh_integrand_scaled(x: f64, t: f64) -> f64 {
    let s = (0.5 * t).sinh();
    (-2.0 * x * s * s).exp()
}

/// `exp(x - x^2 / 4y - y)`, the Laplace integrand times `y exp(x)`.
#[inline]
pub(crate) fn laplace_integrand_scaled(x: f64, y: f64) -> f64 {
    (x - x * x / (4.0 * y) - y).exp()
}

/// `sum_{k in start, start + stride, ..} f(k h)` until the terms are negligible against `scale`.
fn cosh_nodes(x: f64, h: f64, start: u32, stride: u32, scale: f64) -> f64 {
    let mut acc = Accumulator::default();
    let mut k = start;
    loop {
        let term = cosh_integrand_scaled(x, k as f64 * h);
        acc.add(term);
        if term < 1e-19 * scale {
            return acc.value();
        }
        k += stride;
    }
}

/// `K0(x)` from the cosh representation, to relative accuracy `ctl.quad_rel_tol`.
///
/// Trapezoid sums with halving steps, reusing the previous nodes.
pub fn bessel_k0(x: f64, ctl: &SumControl) -> Result<f64> {
    ctl.validate()?;
    check_argument(x)?;
    let mut h = 0.5;
    // nodes = 1/2 + sum_{k >= 1} f(k h), trapezoid value h * nodes
    let mut nodes = 0.5 + cosh_nodes(x, h, 1, 1, 1.0);
    let mut prev = h * nodes;
    for _ in 0..12 {
        h *= 0.5;
        nodes += cosh_nodes(x, h, 1, 2, nodes);
        let next = h * nodes;
        if (next - prev).abs() <= ctl.quad_rel_tol * next {
            return Ok(next * (-x).exp());
        }
        prev = next;
    }
    Err(Error::Convergence {
        achieved: ctl.quad_rel_tol,
        limit: 12,
    })
}

/// `K0(x)` from the Laplace-type representation.
pub fn bessel_k0_laplace(x: f64, ctl: &SumControl) -> Result<f64> {
    ctl.validate()?;
    check_argument(x)?;
    // outside [y_lo, y_hi] the integrand is below exp(-x - 40)
    let y_lo = x * x / (4.0 * (x + 40.0));
    let y_hi = x + 40.0;
    let peak = (0.5 * x).ln();
    let f = |tau: f64| Ok(laplace_integrand_scaled(x, tau.exp()));
    let tol = 0.5 * ctl.quad_rel_tol;
    let left = quad::integrate(f, y_lo.ln(), peak, tol, 0.0, 2000)?;
    let right = quad::integrate(f, peak, y_hi.ln(), tol, 0.0, 2000)?;
    Ok(0.5 * (left.value + right.value) * (-x).exp())
}
