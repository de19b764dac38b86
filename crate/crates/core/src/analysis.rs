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

//! Certificates and derived constants around the triangular lattice.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::energy::{lj_energy, ScalingProfile};
use crate::error::{Error, Result};
use crate::lattice::{chart_is_reduced, chart_v_min, unit_triangular_length, BravaisLattice, FixedAreaPoint};
use crate::optimize::simplex::{nelder_mead, SimplexOptions};
use crate::sums::control::{Accumulator, SumControl};
use crate::sums::theta::theta_minus_one_form;
use crate::sums::{quad, ZetaMethod};

/// Sample count of the certificate report.
pub const CERTIFICATE_SAMPLES: usize = 512;
/// Upper end of the sampled certificate range `[1, 1000]`.
pub const CERTIFICATE_ALPHA_MAX: f64 = 1e3;
/// Default exclusion radius of the ratio function around the triangular corner.
pub const RATIO_EXCLUSION: f64 = 1e-4;
/// Points closer than this multiple of the exclusion radius are flagged.
const NEAR_SINGULAR_FACTOR: f64 = 100.0;
/// Lower end of the `u` range scanned by [`ratio_infimum_scan`].
pub const RATIO_SCAN_U_MIN: f64 = 0.85;

/// `(pi^3 / 120)^(1/3)`, the largest area covered by the certificate.
pub fn certificate_threshold() -> f64 {
    (PI.powi(3) / 120.0).cbrt()
}

fn certificate_weight(area: f64) -> f64 {
    PI.powi(3) / (120.0 * area.powi(3))
}

fn check_certificate_args(area: f64, alpha: f64) -> Result<()> {
    if !(area > 0.0 && area.is_finite()) {
        return Err(Error::Domain(format!("area {area} must be positive")));
    }
    if !(alpha >= 1.0 && alpha.is_finite()) {
        return Err(Error::Domain(format!(
            "certificate only defined for alpha >= 1, got {alpha}"
        )));
    }
    Ok(())
}

/// `g_A(alpha) = pi^3 / (120 A^3) (alpha^6 + alpha^-5) - (alpha^3 + alpha^-2)`.
pub fn g_cert(area: f64, alpha: f64) -> Result<f64> {
    check_certificate_args(area, alpha)?;
    let w = certificate_weight(area);
    Ok(w * (alpha.powi(6) + alpha.powi(-5)) - (alpha.powi(3) + alpha.powi(-2)))
}

/// `g_A'(alpha)`.
pub fn g_cert_derivative(area: f64, alpha: f64) -> Result<f64> {
    check_certificate_args(area, alpha)?;
    let w = certificate_weight(area);
    Ok(w * (6.0 * alpha.powi(5) - 5.0 * alpha.powi(-6)) - (3.0 * alpha.powi(2) - 2.0 * alpha.powi(-3)))
}

/// `g_A''(alpha)`.
pub fn g_cert_second_derivative(area: f64, alpha: f64) -> Result<f64> {
    check_certificate_args(area, alpha)?;
    let w = certificate_weight(area);
    Ok(w * (30.0 * alpha.powi(4) + 30.0 * alpha.powi(-7)) - (6.0 * alpha + 6.0 * alpha.powi(-4)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub area: f64,
    pub threshold: f64,
    /// `area^3 <= pi^3 / 120`, by direct comparison.
    pub sufficient_ok: bool,
    pub g_min_sampled: f64,
    pub g_at_one: f64,
    pub g_prime_at_one: f64,
    pub g_second_min_sampled: f64,
    pub details: String,
}

fn certificate_grid() -> impl Iterator<Item = f64> {
    let n = CERTIFICATE_SAMPLES;
    let top = CERTIFICATE_ALPHA_MAX.ln();
    (0..n).map(move |i| (top * i as f64 / (n - 1) as f64).exp())
}

/// Closed-form area test plus sampled checks of `g_A`, `g_A'(1)` and `g_A''`.
pub fn sufficient_condition(area: f64) -> Result<CertificateReport> {
    check_certificate_args(area, 1.0)?;
    let mut g_min = f64::INFINITY;
    let mut g2_min = f64::INFINITY;
    for alpha in certificate_grid() {
        g_min = g_min.min(g_cert(area, alpha)?);
        g2_min = g2_min.min(g_cert_second_derivative(area, alpha)?);
    }
    Ok(CertificateReport {
        area,
        threshold: certificate_threshold(),
        sufficient_ok: area.powi(3) <= PI.powi(3) / 120.0,
        g_min_sampled: g_min,
        g_at_one: g_cert(area, 1.0)?,
        g_prime_at_one: g_cert_derivative(area, 1.0)?,
        g_second_min_sampled: g2_min,
        details: format!("{CERTIFICATE_SAMPLES} log-spaced points on [1, {CERTIFICATE_ALPHA_MAX}]"),
    })
}

/// `C_A = pi^6 / (3600 A^6) - pi^3 / (6 A^3)`.
pub fn riemann_constant(area: f64) -> Result<f64> {
    if !(area > 0.0 && area.is_finite()) {
        return Err(Error::Domain(format!("area {area} must be positive")));
    }
    Ok(PI.powi(6) / (3600.0 * area.powi(6)) - PI.powi(3) / (6.0 * area.powi(3)))
}

/// `E_LJ(L) = C_A + pi^3 / A^3 int_1^inf (theta_L(alpha / 2A) - 1) g_A(alpha) dalpha / alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RiemannDecomposition {
    pub constant: f64,
    pub integral: f64,
    pub energy: f64,
    pub residual: f64,
}

/// Evaluates both sides of the decomposition of `E_LJ`.
pub fn riemann_decomposition(lat: &BravaisLattice, ctl: &SumControl) -> Result<RiemannDecomposition> {
    ctl.validate()?;
    let area = lat.area();
    let constant = riemann_constant(area)?;
    let form = lat.quadratic_form().scaled(1.0 / (2.0 * area));
    let theta_tol = (1e-2 * ctl.rel_tol).max(1e-15);
    // |g_A(alpha)| <= k alpha^6 on [1, inf); theta - 1 decays like exp(-lambda (alpha - 1))
    let k = PI.powi(3) / (60.0 * area.powi(3)) + 2.0;
    let lambda = 2.0 * PI * form.a;
    let at_one = theta_minus_one_form(&form, 1.0, theta_tol, ctl.max_shell)?.value;
    let tail = |t: f64| k * at_one * t.powi(5) * (-lambda * (t - 1.0)).exp() / (lambda - 5.0 / t);
    let mut upper = (10.0 / lambda).max(2.0);
    while tail(upper) > 1e-3 * ctl.quad_rel_tol {
        upper *= 1.25;
    }
    let prefactor = PI.powi(3) / area.powi(3);
    let integral = quad::integrate(
        |alpha| {
            let t = theta_minus_one_form(&form, alpha, theta_tol, ctl.max_shell)?.value;
            Ok(t * g_cert(area, alpha)? / alpha)
        },
        1.0,
        upper,
        0.1 * ctl.quad_rel_tol,
        1e-3 * ctl.quad_rel_tol,
        ctl.max_shell,
    )?;
    let integral = prefactor * integral.value;
    let energy = lj_energy(lat, ctl)?;
    Ok(RiemannDecomposition {
        constant,
        integral,
        energy,
        residual: energy - constant - integral,
    })
}

/// Numerator, denominator and value of the ratio function at a chart point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioEvaluation {
    pub value: f64,
    pub numerator: f64,
    pub denominator: f64,
    pub corner_distance: f64,
    pub near_singular: bool,
}

/// Cached zeta values of the unit triangular lattice for ratio evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioContext {
    reference: ScalingProfile,
    exclusion: f64,
    ctl: SumControl,
}

impl RatioContext {
    pub fn new(exclusion: f64, ctl: &SumControl) -> Result<Self> {
        if !(exclusion > 0.0 && exclusion.is_finite()) {
            return Err(Error::Configuration(format!(
                "exclusion radius {exclusion} must be positive"
            )));
        }
        let tri = BravaisLattice::triangular(1.0)?;
        Ok(RatioContext {
            reference: ScalingProfile::new(&tri, ZetaMethod::Accelerated, ctl)?,
            exclusion,
            ctl: *ctl,
        })
    }

    /// Ratio at the unit-area chart point `(u, v)`; `u > v` and non-reduced
    /// bases are allowed and evaluated through reduction.
    pub fn eval(&self, u: f64, v: f64) -> Result<RatioEvaluation> {
        let t = unit_triangular_length();
        let (lo, hi) = (u.min(v), u.max(v));
        let corner_distance = (lo - t).hypot(hi - t);
        if corner_distance <= self.exclusion {
            return Err(Error::Singularity {
                distance: corner_distance,
            });
        }
        let lat = BravaisLattice::from_chart_unchecked(lo, hi, 1.0)?;
        let p = ScalingProfile::new(&lat, ZetaMethod::Accelerated, &self.ctl)?;
        let numerator = p.zeta12 - self.reference.zeta12;
        let denominator = p.zeta6 - self.reference.zeta6;
        if !(denominator > 0.0) {
            return Err(Error::InvariantViolation(format!(
                "zeta_L(6) - zeta_triangular(6) = {denominator} at chart point ({lo}, {hi})"
            )));
        }
        Ok(RatioEvaluation {
            value: (numerator / (2.0 * denominator)).cbrt(),
            numerator,
            denominator,
            corner_distance,
            near_singular: corner_distance < NEAR_SINGULAR_FACTOR * self.exclusion,
        })
    }
}

fn check_unit_area(p: &FixedAreaPoint) -> Result<()> {
    if (p.target_area - 1.0).abs() > 1e-12 {
        return Err(Error::ChartDomain(format!(
            "ratio function is defined on the unit-area chart, got area {}",
            p.target_area
        )));
    }
    Ok(())
}

/// `((zeta_L(12) - zeta_T(12)) / (2 (zeta_L(6) - zeta_T(6))))^(1/3)` on the unit-area chart.
pub fn ratio_function(p: &FixedAreaPoint, ctl: &SumControl) -> Result<f64> {
    Ok(ratio_function_detailed(p, RATIO_EXCLUSION, ctl)?.value)
}

pub fn ratio_function_detailed(p: &FixedAreaPoint, exclusion: f64, ctl: &SumControl) -> Result<RatioEvaluation> {
    check_unit_area(p)?;
    FixedAreaPoint::new(p.len_u, p.len_v, p.target_area)?;
    RatioContext::new(exclusion, ctl)?.eval(p.len_u, p.len_v)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioScan {
    pub point: FixedAreaPoint,
    pub value: f64,
    pub grid_point: FixedAreaPoint,
    pub grid_value: f64,
    pub grid_cells: usize,
    pub refine_iterations: usize,
}

/// Grid minimum of the ratio function over the reduced chart with
/// `u in [0.85, sqrt(2/sqrt 3)]`, refined by simplex descent.
pub fn ratio_infimum_scan(grid_step: f64, exclusion: f64, ctl: &SumControl) -> Result<RatioScan> {
    if !(grid_step > 0.0 && grid_step.is_finite()) {
        return Err(Error::Configuration(format!("grid step {grid_step} must be positive")));
    }
    let ctx = RatioContext::new(exclusion, ctl)?;
    let t = unit_triangular_length();
    let mut best: Option<(f64, f64, f64)> = None;
    let mut cells = 0usize;
    let mut i = 0usize;
    loop {
        let u = RATIO_SCAN_U_MIN + i as f64 * grid_step;
        if u > t {
            break;
        }
        i += 1;
        let mut j = 0usize;
        loop {
            let v = chart_v_min(u) + j as f64 * grid_step;
            j += 1;
            if !chart_is_reduced(u, v) {
                break;
            }
            let value = match ctx.eval(u, v) {
                Ok(r) => r.value,
                Err(Error::Singularity { .. }) => continue,
                Err(e) => return Err(e),
            };
            cells += 1;
            // strict comparison keeps the lexicographically first of equal values
            if best.is_none_or(|(_, _, b)| value < b) {
                best = Some((u, v, value));
            }
        }
    }
    let (gu, gv, gval) = best.ok_or_else(|| Error::Configuration("ratio scan grid has no admissible cell".into()))?;

    let objective = |x: &[f64]| -> Result<f64> {
        if x[0] * x[1] < 1.0 || x[0] <= 0.0 || x[1] <= 0.0 {
            return Ok(f64::INFINITY);
        }
        match ctx.eval(x[0], x[1]) {
            Ok(r) => Ok(r.value),
            Err(Error::Singularity { .. }) => Ok(f64::INFINITY),
            Err(e) => Err(e),
        }
    };
    let step = 0.5 * grid_step;
    let refined = nelder_mead(objective, &[gu, gv], &[step, step], &SimplexOptions::default())?;
    let (point, value) = if refined.value < gval {
        let lat = BravaisLattice::from_chart_unchecked(refined.x[0], refined.x[1], 1.0)?;
        (lat.chart_point(), refined.value)
    } else {
        (FixedAreaPoint::new(gu, gv, 1.0)?, gval)
    };
    Ok(RatioScan {
        point: FixedAreaPoint {
            target_area: 1.0,
            ..point
        },
        value,
        grid_point: FixedAreaPoint::new(gu, gv, 1.0)?,
        grid_value: gval,
        grid_cells: cells,
        refine_iterations: refined.iterations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangularOptimum {
    pub area: f64,
    pub length: f64,
    pub energy: f64,
    pub zeta6: f64,
    pub zeta12: f64,
}

/// Area `A0 = (zeta_T(12) / zeta_T(6))^(1/3)` of the best triangular lattice,
/// its length and energy.
pub fn optimal_triangular_area(ctl: &SumControl) -> Result<TriangularOptimum> {
    let tri = BravaisLattice::triangular(1.0)?;
    let unit = ScalingProfile::new(&tri, ZetaMethod::default(), ctl)?;
    let area = (unit.zeta12 / unit.zeta6).cbrt();
    let best = BravaisLattice::triangular(area)?;
    let at_best = ScalingProfile::new(&best, ZetaMethod::default(), ctl)?;
    Ok(TriangularOptimum {
        area,
        length: best.len_u(),
        energy: at_best.energy(1.0),
        zeta6: at_best.zeta6,
        zeta12: at_best.zeta12,
    })
}

/// Lower bound on the shortest vector of a global Lennard-Jones minimizer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlancBound {
    pub p_const: f64,
    pub q_const: f64,
    pub zeta_ref: f64,
    pub c_bound: f64,
    /// Whether `c_bound > 0.74035`.
    pub exceeds_reference: bool,
}

/// Published lower estimate of `c`.
pub const BLANC_REFERENCE: f64 = 0.74035;

impl BlancBound {
    /// `c` from the stored `P`, `Q` and reference zeta value.
    pub fn recompute_c(&self) -> f64 {
        blanc_c(self.p_const, self.q_const, self.zeta_ref)
    }
}

fn blanc_c(p: f64, q: f64, zeta_ref: f64) -> f64 {
    let q2 = q + 2.0;
    let root = (q2 * q2 + 4.0 * (23.0 - zeta_ref) * (p + 1.0)).sqrt();
    (2.0 * (p + 1.0) / (q2 + root)).powf(1.0 / 6.0)
}

/// `sum_{k >= 2} (lin k + off) / k^pow`, stopped when the integral tail bound drops below `1e-14`.
fn blanc_series(lin: f64, off: f64, pow: i32) -> f64 {
    let tail = |k: f64| lin / ((pow - 2) as f64 * k.powi(pow - 2)) + off / ((pow - 1) as f64 * k.powi(pow - 1));
    let mut acc = Accumulator::default();
    let mut k = 2.0;
    loop {
        acc.add((lin * k + off) / k.powi(pow));
        if tail(k) < 1e-14 {
            return acc.value();
        }
        k += 1.0;
    }
}

pub fn blanc_bound(ctl: &SumControl) -> Result<BlancBound> {
    let p = blanc_series(16.0, 8.0, 12);
    let q = blanc_series(32.0, 16.0, 6);
    let zeta_ref = optimal_triangular_area(ctl)?.zeta6;
    let c = blanc_c(p, q, zeta_ref);
    Ok(BlancBound {
        p_const: p,
        q_const: q,
        zeta_ref,
        c_bound: c,
        exceeds_reference: c > BLANC_REFERENCE,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GlobalIdentityReport {
    pub zeta6: f64,
    pub zeta12: f64,
    pub energy: f64,
    /// `|zeta(12) - zeta(6)| / zeta(6)`.
    pub relative_gap: f64,
    pub len_u_below_one: bool,
    pub len_v_at_most_one: bool,
    /// `E_LJ(L) + zeta_L(6)`.
    pub energy_residual: f64,
    /// `|E_LJ(L) + zeta_L(6)| / zeta_L(6)`.
    pub relative_energy_residual: f64,
}

impl GlobalIdentityReport {
    pub fn lengths_ok(&self) -> bool {
        self.len_u_below_one && self.len_v_at_most_one
    }
}

/// Necessary conditions satisfied by a global Lennard-Jones minimizer.
pub fn global_identity_check(lat: &BravaisLattice, ctl: &SumControl) -> Result<GlobalIdentityReport> {
    let p = ScalingProfile::new(lat, ZetaMethod::default(), ctl)?;
    let energy = p.energy(1.0);
    let residual = energy + p.zeta6;
    Ok(GlobalIdentityReport {
        zeta6: p.zeta6,
        zeta12: p.zeta12,
        energy,
        relative_gap: (p.zeta12 - p.zeta6).abs() / p.zeta6,
        len_u_below_one: lat.len_u() < 1.0,
        len_v_at_most_one: lat.len_v() <= 1.0,
        energy_residual: residual,
        relative_energy_residual: residual.abs() / p.zeta6,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn ctl() -> SumControl {
        SumControl::default()
    }

    #[test]
    fn certificate_values() {
        // g_A(1) = 2 (w - 1) and g_A'(1) = w - 1 with w = pi^3 / (120 A^3)
        assert_relative_eq!(
            g_cert(0.5, 1.0).unwrap(),
            2.0 * (PI.powi(3) / 15.0 - 1.0),
            max_relative = 1e-15
        );
        assert!((g_cert_derivative(0.5, 1.0).unwrap() - 1.0671).abs() < 1e-4);
        assert!((g_cert_derivative(1.0, 1.0).unwrap() + 0.7416).abs() < 1e-4);
        assert!(g_cert(1.0, 1.0).unwrap() < 0.0);
        assert!(g_cert(certificate_threshold(), 1.0).unwrap().abs() < 1e-14);
        assert!(g_cert(1.0, 0.5).is_err());
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let (a, h) = (0.7, 1e-5);
        for alpha in [1.2, 2.0, 3.7] {
            let d = (g_cert(a, alpha + h).unwrap() - g_cert(a, alpha - h).unwrap()) / (2.0 * h);
            assert_relative_eq!(g_cert_derivative(a, alpha).unwrap(), d, max_relative = 1e-7);
            let d2 = (g_cert_derivative(a, alpha + h).unwrap() - g_cert_derivative(a, alpha - h).unwrap()) / (2.0 * h);
            assert_relative_eq!(g_cert_second_derivative(a, alpha).unwrap(), d2, max_relative = 1e-7);
        }
    }

    #[test]
    fn threshold_and_flip() {
        let t = certificate_threshold();
        assert!((t - 0.63693).abs() < 1e-5);
        assert!(sufficient_condition(0.63692).unwrap().sufficient_ok);
        assert!(!sufficient_condition(0.63694).unwrap().sufficient_ok);
        assert!(sufficient_condition(t - 1e-9).unwrap().sufficient_ok);
        assert!(!sufficient_condition(t + 1e-9).unwrap().sufficient_ok);
        let tiny = sufficient_condition(1e-3).unwrap();
        assert!(tiny.sufficient_ok && tiny.g_min_sampled > 0.0);
    }

    #[test]
    fn certified_reports_are_consistent() {
        for area in [0.1, 0.4, 0.6, 0.63692] {
            let r = sufficient_condition(area).unwrap();
            assert!(r.g_min_sampled >= -1e-12);
            assert!(r.g_at_one >= 0.0 && r.g_prime_at_one >= 0.0 && r.g_second_min_sampled >= 0.0);
        }
        assert!(sufficient_condition(1.0).unwrap().g_min_sampled < 0.0);
    }

    #[test]
    fn riemann_constant_sign_flip() {
        // positive exactly when pi^3 / A^3 > 600
        assert!(riemann_constant(0.3).unwrap() > 0.0);
        assert!(riemann_constant(0.5).unwrap() < 0.0);
        assert!(riemann_constant(1.0).unwrap() < 0.0);
    }

    #[test]
    fn riemann_decomposition_residual() {
        for lat in [
            BravaisLattice::square(1.0).unwrap(),
            BravaisLattice::triangular(1.0).unwrap(),
        ] {
            let d = riemann_decomposition(&lat, &ctl()).unwrap();
            assert!(d.residual.abs() <= 1e-8, "residual {}", d.residual);
        }
    }

    #[test]
    fn ratio_values() {
        let r = ratio_function(&FixedAreaPoint::new(1.014, 1.014, 1.0).unwrap(), &ctl()).unwrap();
        assert!((r - 1.1378475).abs() < 1e-6, "{r}");
        let sq = ratio_function(&FixedAreaPoint::new(1.0, 1.0, 1.0).unwrap(), &ctl()).unwrap();
        assert!(sq.is_finite() && sq > r);
        let t = unit_triangular_length();
        let near = FixedAreaPoint::new(t - 1e-3 / 2f64.sqrt(), t - 1e-3 / 2f64.sqrt(), 1.0).unwrap();
        assert!(
            ratio_function_detailed(&near, RATIO_EXCLUSION, &ctl())
                .unwrap()
                .near_singular
        );
        let inside = FixedAreaPoint::new(t - 5e-5, t, 1.0).unwrap();
        assert!(matches!(
            ratio_function(&inside, &ctl()),
            Err(Error::Singularity { .. })
        ));
        let big = ratio_function_detailed(&near, 1e-2, &ctl());
        assert!(matches!(big, Err(Error::Singularity { .. })));
        assert!(ratio_function(&FixedAreaPoint::new(1.0, 1.0, 2.0).unwrap(), &ctl()).is_err());
    }

    #[test]
    fn blanc_constants() {
        let b = blanc_bound(&ctl()).unwrap();
        assert!((b.p_const - 0.00988).abs() < 1e-5);
        assert!((b.q_const - 1.45918).abs() < 1e-5);
        // the closed form gives 0.7403478..., which rounds to the published 0.74035
        assert!((b.c_bound - 0.740_347_807).abs() < 1e-8);
        assert_eq!(b.exceeds_reference, b.c_bound > BLANC_REFERENCE);
        assert!((b.recompute_c() - b.c_bound).abs() <= 1e-12);
    }

    #[test]
    fn blanc_series_against_long_sums() {
        let p: f64 = (2..20_000)
            .rev()
            .map(|k| (16.0 * k as f64 + 8.0) / (k as f64).powi(12))
            .sum();
        assert!((blanc_series(16.0, 8.0, 12) - p).abs() < 1e-14);
        let q: f64 = (2..2_000_000)
            .rev()
            .map(|k| (32.0 * k as f64 + 16.0) / (k as f64).powi(6))
            .sum();
        assert!((blanc_series(32.0, 16.0, 6) - q).abs() < 1e-13);
    }

    #[test]
    fn triangular_optimum() {
        let t = optimal_triangular_area(&ctl()).unwrap();
        assert!((t.area - 0.84912).abs() < 5e-6);
        assert!((t.length - 0.99019).abs() < 5e-6);
        assert!((t.energy + 6.76425).abs() < 5e-6);
        assert_relative_eq!(t.energy, -t.zeta6, max_relative = 1e-9);
    }

    #[test]
    fn global_identity_reports() {
        let opt = optimal_triangular_area(&ctl()).unwrap();
        let best = global_identity_check(&BravaisLattice::triangular(opt.area).unwrap(), &ctl()).unwrap();
        assert!(best.relative_gap <= 1e-9);
        assert!(best.lengths_ok());
        let unit = global_identity_check(&BravaisLattice::triangular(1.0).unwrap(), &ctl()).unwrap();
        assert!(!unit.len_u_below_one);
        let sq = global_identity_check(&BravaisLattice::square(1.0).unwrap(), &ctl()).unwrap();
        assert!(sq.relative_gap > 0.1);
    }
}
