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

//! Lattice sums and special functions with controlled truncation error.

pub mod bessel;
pub mod control;
pub mod quad;
pub mod theta;
pub mod zeta;

pub use bessel::{bessel_k0, bessel_k0_laplace};
pub use control::{Estimate, SumControl};
pub use theta::{gaussian_sum, theta, theta_estimate, theta_normalized, NormalizedForm};
pub use zeta::{
    epstein_zeta, epstein_zeta_accelerated, epstein_zeta_accelerated_estimate, epstein_zeta_direct,
    epstein_zeta_direct_estimate, ZetaMethod,
};

use crate::lattice::QuadraticForm;

/// Calls `f(Q(m, n))` for every `(m, n)` with `0 < Q(m, n) <= r2` in the upper
/// half plane (`n > 0`, or `n = 0` and `m > 0`). Each orbit `{x, -x}` is
/// visited once. `form` must be reduced.
pub(crate) fn visit_half_plane(form: &QuadraticForm, r2: f64, mut f: impl FnMut(f64)) {
    let (a, b, c) = (form.a, form.b, form.c);
    let k = form.disc / (4.0 * a);
    let m_max = (r2 / a).sqrt().floor() as i64;
    for m in 1..=m_max {
        let mf = m as f64;
        f(a * mf * mf);
    }
    let rows = (r2 / k).sqrt().floor() as i64;
    for n in 1..=rows {
        let nf = n as f64;
        let rest = r2 - k * nf * nf;
        if rest < 0.0 {
            break;
        }
        let centre = -b * nf / (2.0 * a);
        let w = (rest / a).sqrt();
        for m in ((centre - w).ceil() as i64)..=((centre + w).floor() as i64) {
            let mf = m as f64;
            let qv = a * mf * mf + b * mf * nf + c * nf * nf;
            if qv <= r2 {
                f(qv);
            }
        }
    }
}
