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

//! Per-particle lattice energies `E(L) = sum_{x in L, x != 0} V(|x|)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::BravaisLattice;
use crate::sums::control::{Accumulator, SumControl};
use crate::sums::{bessel_k0, epstein_zeta, quad, theta, visit_half_plane, ZetaMethod};

/// Screening factor in `W_TF(r) = K0(sqrt(pi) r) / 2`.
const TF_KAPPA: f64 = 1.772_453_850_905_516;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialKind {
    LennardJones,
    InversePowerPair,
    ThomasFermi,
}

/// Radial pair potential. The exponents and coefficients describe
/// `k1 / r^n - k2 / r^p` and are ignored for Thomas-Fermi.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    pub kind: PotentialKind,
    pub k1: f64,
    pub n_exp: f64,
    pub k2: f64,
    pub p_exp: f64,
}

impl PotentialSpec {
    pub fn lennard_jones() -> Self {
        PotentialSpec {
            kind: PotentialKind::LennardJones,
            k1: 1.0,
            n_exp: 12.0,
            k2: 2.0,
            p_exp: 6.0,
        }
    }

    pub fn thomas_fermi() -> Self {
        PotentialSpec {
            kind: PotentialKind::ThomasFermi,
            k1: 0.0,
            n_exp: 0.0,
            k2: 0.0,
            p_exp: 0.0,
        }
    }

    pub fn inverse_power_pair(k1: f64, n_exp: f64, k2: f64, p_exp: f64) -> Result<Self> {
        let spec = PotentialSpec {
            kind: PotentialKind::InversePowerPair,
            k1,
            n_exp,
            k2,
            p_exp,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match self.kind {
            PotentialKind::ThomasFermi => Ok(()),
            _ => {
                let finite = [self.k1, self.n_exp, self.k2, self.p_exp].iter().all(|x| x.is_finite());
                if finite && self.n_exp > self.p_exp && self.p_exp > 2.0 {
                    Ok(())
                } else {
                    Err(Error::Domain(format!(
                        "inverse-power pair needs n > p > 2, got n = {}, p = {}",
                        self.n_exp, self.p_exp
                    )))
                }
            }
        }
    }

    /// `V(r)`.
    pub fn eval(&self, r: f64, ctl: &SumControl) -> Result<f64> {
        check_radius(r)?;
        match self.kind {
            PotentialKind::ThomasFermi => tf_potential(r, ctl),
            _ => Ok(self.k1 * r.powf(-self.n_exp) - self.k2 * r.powf(-self.p_exp)),
        }
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("pair distance {r} must be positive")))
    }
}

/// `V_LJ(r) = r^-12 - 2 r^-6`, minimal at `r = 1` with value `-1`.
pub fn lj_potential(r: f64) -> Result<f64> {
    check_radius(r)?;
    let r6 = r.powi(-6);
    Ok(r6 * r6 - 2.0 * r6)
}

/// `W_TF(r) = K0(sqrt(pi) r) / 2`.
pub fn tf_potential(r: f64, ctl: &SumControl) -> Result<f64> {
    check_radius(r)?;
    Ok(0.5 * bessel_k0(TF_KAPPA * r, ctl)?)
}

/// The two zeta constants of a lattice; they fix `E_LJ(r L)` for every `r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalingProfile {
    pub zeta6: f64,
    pub zeta12: f64,
}

impl ScalingProfile {
    pub fn new(lat: &BravaisLattice, method: ZetaMethod, ctl: &SumControl) -> Result<Self> {
        Ok(ScalingProfile {
            zeta6: epstein_zeta(lat, 6.0, method, ctl)?,
            zeta12: epstein_zeta(lat, 12.0, method, ctl)?,
        })
    }

    /// `f(r) = r^-12 zeta(12) - 2 r^-6 zeta(6)`.
    pub fn energy(&self, r: f64) -> f64 {
        let r6 = r.powi(-6);
        r6 * r6 * self.zeta12 - 2.0 * r6 * self.zeta6
    }

    /// Energy of the lattice rescaled to `area / current_area` times its area.
    pub fn energy_at_area_factor(&self, factor: f64) -> f64 {
        self.energy(factor.sqrt())
    }

    /// Minimizer `(zeta(12) / zeta(6))^(1/6)` of `f`.
    pub fn optimal_dilation(&self) -> f64 {
        (self.zeta12 / self.zeta6).powf(1.0 / 6.0)
    }
}

/// `E_LJ` together with the zeta values it is built from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LjBreakdown {
    pub energy: f64,
    pub zeta6: f64,
    pub zeta12: f64,
}

pub fn lj_breakdown(lat: &BravaisLattice, method: ZetaMethod, ctl: &SumControl) -> Result<LjBreakdown> {
    let p = ScalingProfile::new(lat, method, ctl)?;
    Ok(LjBreakdown {
        energy: p.energy(1.0),
        zeta6: p.zeta6,
        zeta12: p.zeta12,
    })
}

/// `E_LJ(L) = zeta_L(12) - 2 zeta_L(6)`.
pub fn lj_energy(lat: &BravaisLattice, ctl: &SumControl) -> Result<f64> {
    lj_energy_with(lat, ZetaMethod::default(), ctl)
}

pub fn lj_energy_with(lat: &BravaisLattice, method: ZetaMethod, ctl: &SumControl) -> Result<f64> {
    Ok(lj_breakdown(lat, method, ctl)?.energy)
}

/// `E_LJ(r L)` from the zeta constants of `L`.
pub fn energy_under_scaling(lat: &BravaisLattice, r: f64, ctl: &SumControl) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidScale(r));
    }
    Ok(ScalingProfile::new(lat, ZetaMethod::default(), ctl)?.energy(r))
}

/// `k1 zeta_L(n) - k2 zeta_L(p)`, or the Thomas-Fermi energy.
pub fn pair_energy(lat: &BravaisLattice, spec: &PotentialSpec, ctl: &SumControl) -> Result<f64> {
    spec.validate()?;
    match spec.kind {
        PotentialKind::LennardJones => lj_energy(lat, ctl),
        PotentialKind::ThomasFermi => tf_energy(lat, ctl),
        PotentialKind::InversePowerPair => {
            let method = ZetaMethod::default();
            Ok(spec.k1 * epstein_zeta(lat, spec.n_exp, method, ctl)?
                - spec.k2 * epstein_zeta(lat, spec.p_exp, method, ctl)?)
        }
    }
}

/// Bound on `sum_{|x| > R} K0(kappa |x|) / 2`.
///
/// Uses `K0(z) < sqrt(pi / 2z) e^-z` and the counting bound
/// `#{x : |x| <= r} <= pi (r + d)^2 / |L|`.
fn tf_tail_bound(radius: f64, area: f64, diag: f64) -> f64 {
    let k = TF_KAPPA;
    let front = 0.5 * (PI / (2.0 * k * radius)).sqrt();
    let rd = radius + diag;
    front * PI / area * (-k * radius).exp() * (rd * rd + 2.0 * rd / k + 2.0 / (k * k))
}

/// `E_TF(L) = sum_{x != 0} K0(sqrt(pi) |x|) / 2` by direct summation.
pub fn tf_energy(lat: &BravaisLattice, ctl: &SumControl) -> Result<f64> {
    ctl.validate()?;
    let q = lat.quadratic_form();
    let area = lat.area();
    let diag = (q.a + q.b + q.c).sqrt();
    // the two shortest vectors alone contribute K0(kappa sqrt(a))
    let floor = bessel_k0(TF_KAPPA * q.a.sqrt(), ctl)?;
    let target = 0.5 * ctl.rel_tol * floor;
    let mut radius = q.c.sqrt().max(diag);
    while tf_tail_bound(radius, area, diag) > target {
        radius += 0.5;
    }
    let rows = radius / (q.disc / (4.0 * q.a)).sqrt();
    if rows > ctl.max_shell as f64 {
        return Err(Error::Convergence {
            achieved: tf_tail_bound(radius, area, diag) / floor,
            limit: ctl.max_shell,
        });
    }
    let mut acc = Accumulator::default();
    let mut failure = None;
    visit_half_plane(&q, radius * radius, |qv| match bessel_k0(TF_KAPPA * qv.sqrt(), ctl) {
        Ok(k) => acc.add(k),
        Err(e) => failure = Some(e),
    });
    if let Some(e) = failure {
        return Err(e);
    }
    // two vectors per orbit, potential K0 / 2
    Ok(acc.value())
}

/// `E_TF(L)` from the layer representation
/// `E_TF(L) = 1/4 int_0^inf (theta_L(1 / 8y) - 1) e^-y dy / y`.
///
/// Independent of [`tf_energy`]; used as a cross-check.
pub fn tf_energy_layered(lat: &BravaisLattice, ctl: &SumControl) -> Result<f64> {
    ctl.validate()?;
    let a = lat.quadratic_form().a;
    // theta - 1 <= C exp(-pi a / 4y) below, exp(-y) above
    let y_lo = PI * a / (4.0 * 60.0);
    let y_hi = 60.0 + 4.0 * TF_KAPPA * a.sqrt();
    let inner = SumControl {
        rel_tol: (1e-2 * ctl.rel_tol).max(1e-15),
        ..*ctl
    };
    let peak = (0.5 * TF_KAPPA * a.sqrt()).ln();
    let f = |tau: f64| {
        let y = tau.exp();
        Ok((theta(lat, 1.0 / (8.0 * y), &inner)? - 1.0) * (-y).exp())
    };
    let tol = 0.25 * ctl.quad_rel_tol;
    let left = quad::integrate(f, y_lo.ln(), peak, tol, 0.0, 4000)?;
    let right = quad::integrate(f, peak, y_hi.ln(), tol, 0.0, 4000)?;
    Ok(0.25 * (left.value + right.value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn ctl() -> SumControl {
        SumControl::default()
    }

    #[test]
    fn lj_potential_values() {
        assert_eq!(lj_potential(1.0).unwrap(), -1.0);
        assert_relative_eq!(
            lj_potential(0.9).unwrap(),
            0.9f64.powi(-12) - 2.0 * 0.9f64.powi(-6),
            max_relative = 1e-15
        );
        assert!((lj_potential(0.9).unwrap() + 0.222_646_684_845_692).abs() < 1e-12);
        let h = 1e-5;
        let slope = (lj_potential(1.0 + h).unwrap() - lj_potential(1.0 - h).unwrap()) / (2.0 * h);
        assert!(slope.abs() < 1e-6);
        assert!(lj_potential(0.0).is_err());
        assert!(lj_potential(-2.0).is_err());
    }

    #[test]
    fn pair_spec_reductions() {
        let tri = BravaisLattice::triangular(1.0).unwrap();
        let z12 = epstein_zeta(&tri, 12.0, ZetaMethod::Direct, &ctl()).unwrap();
        let z6 = epstein_zeta(&tri, 6.0, ZetaMethod::Direct, &ctl()).unwrap();
        let only12 = PotentialSpec::inverse_power_pair(1.0, 12.0, 0.0, 6.0).unwrap();
        assert_relative_eq!(pair_energy(&tri, &only12, &ctl()).unwrap(), z12, max_relative = 1e-11);
        let minus = PotentialSpec::inverse_power_pair(0.0, 12.0, -1.0, 6.0).unwrap();
        assert_relative_eq!(pair_energy(&tri, &minus, &ctl()).unwrap(), z6, max_relative = 1e-11);
        let lj_as_pair = PotentialSpec::inverse_power_pair(1.0, 12.0, 2.0, 6.0).unwrap();
        assert_relative_eq!(
            pair_energy(&tri, &lj_as_pair, &ctl()).unwrap(),
            lj_energy(&tri, &ctl()).unwrap(),
            max_relative = 1e-12
        );
        assert!(PotentialSpec::inverse_power_pair(1.0, 6.0, 1.0, 12.0).is_err());
        assert!(PotentialSpec::inverse_power_pair(1.0, 4.0, 1.0, 2.0).is_err());
    }

    #[test]
    fn scaling_profile_matches_resummation() {
        let lat = BravaisLattice::new(1.0, 1.1, 1.3).unwrap();
        let p = ScalingProfile::new(&lat, ZetaMethod::Direct, &ctl()).unwrap();
        for r in [0.9, 1.1] {
            let direct = lj_energy_with(&lat.scale(r).unwrap(), ZetaMethod::Direct, &ctl()).unwrap();
            assert_relative_eq!(p.energy(r), direct, max_relative = 1e-9);
        }
        assert_relative_eq!(
            energy_under_scaling(&lat, 1.0, &ctl()).unwrap(),
            lj_energy(&lat, &ctl()).unwrap(),
            max_relative = 1e-12
        );
        assert!(matches!(
            energy_under_scaling(&lat, 0.0, &ctl()),
            Err(Error::InvalidScale(_))
        ));
    }

    #[test]
    fn optimal_dilation_is_stationary() {
        let tri = BravaisLattice::triangular(1.0).unwrap();
        let p = ScalingProfile::new(&tri, ZetaMethod::default(), &ctl()).unwrap();
        let r0 = p.optimal_dilation();
        assert!((r0 * r0 - 0.84912).abs() < 5e-6);
        let h = 1e-5;
        assert!(((p.energy(r0 + h) - p.energy(r0 - h)) / (2.0 * h)).abs() < 1e-6);
    }

    #[test]
    fn tf_triangular_below_square() {
        let tri = tf_energy(&BravaisLattice::triangular(1.0).unwrap(), &ctl()).unwrap();
        let sq = tf_energy(&BravaisLattice::square(1.0).unwrap(), &ctl()).unwrap();
        assert!(tri < sq);
    }

    #[test]
    fn tf_decreases_under_dilation() {
        let sq = BravaisLattice::square(1.0).unwrap();
        let small = tf_energy(&sq, &ctl()).unwrap();
        let big = tf_energy(&sq.scale(2.0).unwrap(), &ctl()).unwrap();
        assert!(big < small);
        let far = tf_energy(&BravaisLattice::square(100.0).unwrap(), &ctl()).unwrap();
        assert!(far > 0.0 && far < 1e-6);
    }

    #[test]
    fn tf_direct_against_layers() {
        for lat in [
            BravaisLattice::square(1.0).unwrap(),
            BravaisLattice::triangular(0.5).unwrap(),
            BravaisLattice::new(0.8, 1.9, 1.2).unwrap(),
        ] {
            let direct = tf_energy(&lat, &ctl()).unwrap();
            let layered = tf_energy_layered(&lat, &ctl()).unwrap();
            assert_relative_eq!(direct, layered, max_relative = 1e-9);
        }
    }

    #[test]
    fn tf_against_naive_window() {
        // plain double loop over a generous window
        let lat = BravaisLattice::new(0.9, 1.2, 1.4).unwrap();
        let q = lat.quadratic_form();
        let mut total = 0.0;
        for m in -40i32..=40 {
            for n in -40i32..=40 {
                if (m, n) != (0, 0) {
                    let r = q.eval(m as f64, n as f64).sqrt();
                    total += tf_potential(r, &ctl()).unwrap();
                }
            }
        }
        assert_relative_eq!(tf_energy(&lat, &ctl()).unwrap(), total, max_relative = 1e-11);
    }

    #[test]
    fn spec_eval_agrees_with_named_potentials() {
        let lj = PotentialSpec::lennard_jones();
        assert_relative_eq!(
            lj.eval(1.3, &ctl()).unwrap(),
            lj_potential(1.3).unwrap(),
            max_relative = 1e-14
        );
        let tf = PotentialSpec::thomas_fermi();
        assert_relative_eq!(
            tf.eval(1.0, &ctl()).unwrap(),
            0.5 * bessel_k0(TF_KAPPA, &ctl()).unwrap()
        );
        assert_relative_eq!(TF_KAPPA, PI.sqrt(), max_relative = 1e-15);
    }
}
