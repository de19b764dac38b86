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

//! Energy minimization over the reduced fundamental domain.
//!
//! Fixed-area problems are searched on the unit-area chart `(u, v)` (basis
//! lengths of the lattice dilated to area 1) and refined by simplex descent in
//! `(len_u, angle)` coordinates, where both corners of the domain are interior
//! points. The unconstrained problem is searched directly over
//! `(len_u, len_v, angle)`.

pub mod levelset;
pub mod simplex;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use serde::{Deserialize, Serialize};

use crate::analysis::{
    blanc_bound, global_identity_check, sufficient_condition, CertificateReport, GlobalIdentityReport,
};
use crate::energy::{pair_energy, PotentialKind, PotentialSpec, ScalingProfile};
use crate::error::{Error, Result};
use crate::lattice::{chart_reduced_v_max, chart_v_min, unit_triangular_length, BravaisLattice, FixedAreaPoint};
use crate::sums::{SumControl, ZetaMethod};

use simplex::{nelder_mead, SimplexOptions};

pub use levelset::{levelset, CellStatus, LevelSetCell, LevelSetGrid, LevelSetObjective};

/// Chart distance within which a point is classified as a corner.
pub const CLASSIFICATION_TOL: f64 = 1e-5;
/// Default grid step of the fixed-area scan.
pub const DEFAULT_GRID_STEP: f64 = 0.002;
/// Number of grid cells refined by simplex descent.
pub const DEFAULT_STARTS: usize = 5;
/// Shortest allowed distance in the fixed-area search, in absolute units.
pub const MIN_DISTANCE_FLOOR: f64 = 0.7;
/// Largest lower edge of the searched `u` range.
pub const U_FLOOR_CAP: f64 = 0.85;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Triangular,
    Square,
    Other,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Classification::Triangular => "Triangular",
            Classification::Square => "Square",
            Classification::Other => "Other",
        };
        f.write_str(s)
    }
}

/// Corner of the unit-area chart a point lies on, if any.
pub fn classify(p: &FixedAreaPoint) -> Classification {
    let t = unit_triangular_length();
    if p.distance(t, t) <= CLASSIFICATION_TOL {
        Classification::Triangular
    } else if p.distance(1.0, 1.0) <= CLASSIFICATION_TOL {
        Classification::Square
    } else {
        Classification::Other
    }
}

/// Rectangle of the unit-area chart.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChartWindow {
    pub u_min: f64,
    pub u_max: f64,
    pub v_min: f64,
    pub v_max: f64,
}

impl ChartWindow {
    fn contains(&self, u: f64, v: f64) -> bool {
        let eps = 1e-12;
        u >= self.u_min - eps && u <= self.u_max + eps && v >= self.v_min - eps && v <= self.v_max + eps
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FixedAreaOptions {
    pub grid_step: f64,
    pub starts: usize,
    /// Restrict the search to this chart rectangle instead of the default box.
    pub window: Option<ChartWindow>,
}

impl Default for FixedAreaOptions {
    fn default() -> Self {
        FixedAreaOptions {
            grid_step: DEFAULT_GRID_STEP,
            starts: DEFAULT_STARTS,
            window: None,
        }
    }
}

/// Search region actually used by a minimization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SearchBox {
    /// Reduced chart points with `u >= u_floor`.
    ReducedChart {
        u_floor: f64,
    },
    Window(ChartWindow),
    /// `[len_min, 1]^2 x [pi/3, pi/2]` in absolute lengths.
    Global {
        len_min: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinimizationReport {
    pub argmin: BravaisLattice,
    /// Unit-area chart position of `argmin`.
    pub chart: FixedAreaPoint,
    pub energy: f64,
    pub classification: Classification,
    pub grid_best: FixedAreaPoint,
    pub grid_energy: f64,
    pub refine_iterations: usize,
    pub search_box: SearchBox,
    pub certificate: Option<CertificateReport>,
    pub identity: Option<GlobalIdentityReport>,
}

/// Lower edge of the default `u` range at the given area:
/// `min(0.85, 0.7 / sqrt(area))`.
pub fn default_u_floor(area: f64) -> f64 {
    U_FLOOR_CAP.min(MIN_DISTANCE_FLOOR / area.sqrt())
}

fn check_area(area: f64) -> Result<()> {
    if area > 0.0 && area.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("area {area} must be positive")))
    }
}

fn with_point(err: Error, u: f64, v: f64) -> Error {
    match err {
        Error::Convergence { .. } | Error::InvariantViolation(_) => err,
        other => Error::Domain(format!("objective failed at chart point ({u}, {v}): {other}")),
    }
}

/// Lattice of area `area` with `len_u = sqrt(area) x` and angle `phi`.
fn length_angle_lattice(x: f64, phi: f64, area: f64) -> Result<BravaisLattice> {
    let s = area.sqrt();
    BravaisLattice::new(s * x, s / (x * phi.sin()), phi)
}

/// Ordering by energy, then lexicographically by chart coordinates.
fn better(a: (f64, f64, f64), b: (f64, f64, f64)) -> bool {
    a.2.total_cmp(&b.2)
        .then(a.0.total_cmp(&b.0))
        .then(a.1.total_cmp(&b.1))
        .is_lt()
}

/// Minimize the energy of `spec` among lattices of the given area.
pub fn minimize_fixed_area(area: f64, spec: &PotentialSpec, ctl: &SumControl) -> Result<MinimizationReport> {
    minimize_fixed_area_with(area, spec, &FixedAreaOptions::default(), ctl)
}

pub fn minimize_fixed_area_with(
    area: f64,
    spec: &PotentialSpec,
    opts: &FixedAreaOptions,
    ctl: &SumControl,
) -> Result<MinimizationReport> {
    check_area(area)?;
    spec.validate()?;
    ctl.validate()?;
    if !(opts.grid_step > 0.0 && opts.grid_step.is_finite()) || opts.starts == 0 {
        return Err(Error::Configuration(
            "grid step must be positive and at least one start is needed".into(),
        ));
    }
    let t = unit_triangular_length();
    let (search_box, u_floor) = match opts.window {
        Some(w) => (SearchBox::Window(w), w.u_min),
        None => {
            let f = default_u_floor(area);
            (SearchBox::ReducedChart { u_floor: f }, f)
        }
    };
    let admissible = |u: f64, v: f64| -> bool {
        let reduced = u <= v && u * v >= 1.0 && v <= chart_reduced_v_max(u) * (1.0 + 1e-12);
        reduced
            && match opts.window {
                Some(w) => w.contains(u, v),
                None => u >= u_floor - 1e-12,
            }
    };
    let energy_at = |u: f64, v: f64| -> Result<f64> {
        let lat = BravaisLattice::from_chart_unchecked(u, v, area).map_err(|e| with_point(e, u, v))?;
        pair_energy(&lat, spec, ctl).map_err(|e| with_point(e, u, v))
    };

    // columns anchored at u = 1 so the square corner is a grid point
    let step = opts.grid_step;
    let (u_lo, u_hi) = match opts.window {
        Some(w) => (w.u_min.max(0.0), w.u_max.min(t)),
        None => (u_floor, t),
    };
    let i_lo = ((u_lo - 1.0) / step).ceil() as i64;
    let i_hi = ((u_hi - 1.0) / step).floor() as i64;
    let mut cells: Vec<(f64, f64, f64)> = Vec::new();
    for i in i_lo..=i_hi {
        let u = 1.0 + i as f64 * step;
        let mut v0 = chart_v_min(u);
        if let Some(w) = opts.window {
            v0 = v0.max(w.v_min);
        }
        let mut j = 0usize;
        loop {
            let v = v0 + j as f64 * step;
            j += 1;
            if !admissible(u, v) {
                break;
            }
            cells.push((u, v, energy_at(u, v)?));
        }
    }
    // both corners, evaluated exactly
    for (u, v) in [(t, t), (1.0, 1.0)] {
        if admissible(u, v) {
            cells.push((u, v, energy_at(u, v)?));
        }
    }
    if cells.is_empty() {
        return Err(Error::Configuration(
            "fixed-area search box contains no admissible chart point".into(),
        ));
    }
    cells.sort_by(|a, b| a.2.total_cmp(&b.2).then(a.0.total_cmp(&b.0)).then(a.1.total_cmp(&b.1)));
    let grid_best = cells[0];

    let objective = |x: &[f64]| -> Result<f64> {
        let (len, phi) = (x[0], x[1]);
        if !(len > 0.0 && phi > 0.05 && phi < PI - 0.05) {
            return Ok(f64::INFINITY);
        }
        let lat = length_angle_lattice(len, phi, area)?;
        let p = lat.chart_point();
        if !admissible(p.len_u, p.len_v) {
            return Ok(f64::INFINITY);
        }
        pair_energy(&lat, spec, ctl).map_err(|e| with_point(e, p.len_u, p.len_v))
    };
    let mut candidates = cells[..cells.len().min(opts.starts)].to_vec();
    let mut iterations = 0;
    for &(u, v, _) in &cells[..cells.len().min(opts.starts)] {
        let phi = crate::lattice::chart_angle(u, v);
        let r = nelder_mead(
            objective,
            &[u, phi],
            &[0.5 * step, 0.5 * step],
            &SimplexOptions::default(),
        )?;
        iterations += r.iterations;
        if r.value.is_finite() {
            let p = length_angle_lattice(r.x[0], r.x[1], area)?.chart_point();
            candidates.push((p.len_u, p.len_v, r.value));
        }
    }
    let best = candidates
        .iter()
        .copied()
        .fold(candidates[0], |acc, c| if better(c, acc) { c } else { acc });

    let argmin = BravaisLattice::from_chart_unchecked(best.0, best.1, area)?;
    let energy = pair_energy(&argmin, spec, ctl)?;
    let chart = FixedAreaPoint {
        target_area: area,
        ..argmin.chart_point()
    };
    let certificate = match spec.kind {
        PotentialKind::LennardJones => Some(sufficient_condition(area)?),
        _ => None,
    };
    Ok(MinimizationReport {
        argmin,
        chart,
        energy,
        classification: classify(&chart),
        grid_best: FixedAreaPoint {
            len_u: grid_best.0,
            len_v: grid_best.1,
            target_area: area,
        },
        grid_energy: grid_best.2,
        refine_iterations: iterations,
        search_box,
        certificate,
        identity: None,
    })
}

/// Coarse grid resolution of the global search per coordinate.
const GLOBAL_GRID: usize = 9;

/// Minimize the Lennard-Jones energy over all lattices, within
/// `[c, 1]^2 x [pi/3, pi/2]` where `c` is the Blanc bound.
pub fn minimize_global(ctl: &SumControl) -> Result<MinimizationReport> {
    ctl.validate()?;
    let c = blanc_bound(ctl)?.c_bound;
    let in_box = |lat: &BravaisLattice| {
        let eps = 1e-12;
        lat.len_u() >= c - eps && lat.len_v() <= 1.0 + eps
    };
    let energy_of =
        |lat: &BravaisLattice| -> Result<f64> { Ok(ScalingProfile::new(lat, ZetaMethod::default(), ctl)?.energy(1.0)) };

    let node = |i: usize, lo: f64, hi: f64| lo + (hi - lo) * i as f64 / (GLOBAL_GRID - 1) as f64;
    let mut seeds: Vec<(Vec<f64>, f64)> = Vec::new();
    for i in 0..GLOBAL_GRID {
        for j in i..GLOBAL_GRID {
            for k in 0..GLOBAL_GRID {
                let (lu, lv, phi) = (node(i, c, 1.0), node(j, c, 1.0), node(k, FRAC_PI_3, FRAC_PI_2));
                let lat = BravaisLattice::new(lu, lv, phi)?;
                if in_box(&lat) {
                    seeds.push((vec![lu, lv, phi], energy_of(&lat)?));
                }
            }
        }
    }
    // stable sort keeps generation order among ties
    seeds.sort_by(|a, b| a.1.total_cmp(&b.1));
    let grid_best = seeds[0].clone();

    let objective = |x: &[f64]| -> Result<f64> {
        if !(x[0] > 0.0 && x[1] > 0.0 && x[2] > 0.05 && x[2] < PI - 0.05) {
            return Ok(f64::INFINITY);
        }
        let lat = BravaisLattice::new(x[0], x[1], x[2])?;
        if !in_box(&lat) {
            return Ok(f64::INFINITY);
        }
        energy_of(&lat)
    };
    let mut best: Option<(BravaisLattice, f64)> = None;
    let mut iterations = 0;
    for (x0, _) in seeds.iter().take(DEFAULT_STARTS) {
        let r = nelder_mead(objective, x0, &[0.02, 0.02, 0.05], &SimplexOptions::default())?;
        iterations += r.iterations;
        let lat = BravaisLattice::new(r.x[0], r.x[1], r.x[2])?;
        // polish along the dilation direction, where the optimum is explicit
        let lat = match scaling_minimize(&lat, ctl) {
            Ok(s) if in_box(&lat.scale(s.r)?) => lat.scale(s.r)?,
            _ => lat,
        };
        let e = energy_of(&lat)?;
        let key = |l: &BravaisLattice| (l.len_u(), l.len_v());
        let replace = match &best {
            None => true,
            Some((b, be)) => e < *be || (e == *be && key(&lat) < key(b)),
        };
        if replace {
            best = Some((lat, e));
        }
    }
    let (argmin, energy) = best.expect("at least one start");
    let chart = argmin.chart_point();
    let grid_lat = BravaisLattice::new(grid_best.0[0], grid_best.0[1], grid_best.0[2])?;
    Ok(MinimizationReport {
        argmin,
        chart,
        energy,
        classification: classify(&chart),
        grid_best: grid_lat.chart_point(),
        grid_energy: grid_best.1,
        refine_iterations: iterations,
        search_box: SearchBox::Global { len_min: c },
        certificate: None,
        identity: Some(global_identity_check(&argmin, ctl)?),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalingOptimum {
    pub r: f64,
    pub energy: f64,
}

/// Best dilation `r* = (zeta(12) / zeta(6))^(1/6)` of a lattice and `E_LJ(r* L)`.
pub fn scaling_minimize(lat: &BravaisLattice, ctl: &SumControl) -> Result<ScalingOptimum> {
    let p = ScalingProfile::new(lat, ZetaMethod::default(), ctl)?;
    let r = p.optimal_dilation();
    Ok(ScalingOptimum { r, energy: p.energy(r) })
}

/// Zeta constants of the unit triangular and square lattices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornerProfiles {
    pub triangular: ScalingProfile,
    pub square: ScalingProfile,
}

impl CornerProfiles {
    pub fn new(ctl: &SumControl) -> Result<Self> {
        Ok(CornerProfiles {
            triangular: ScalingProfile::new(&BravaisLattice::triangular(1.0)?, ZetaMethod::default(), ctl)?,
            square: ScalingProfile::new(&BravaisLattice::square(1.0)?, ZetaMethod::default(), ctl)?,
        })
    }

    /// `E_LJ(sqrt(A) T) - E_LJ(sqrt(A) Z^2)`.
    pub fn gap(&self, area: f64) -> f64 {
        self.triangular.energy_at_area_factor(area) - self.square.energy_at_area_factor(area)
    }
}

/// Area where the square lattice starts to beat the triangular one, by bisection.
pub fn crossover_area(lo: f64, hi: f64, ctl: &SumControl) -> Result<f64> {
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::Configuration(format!("bad crossover interval [{lo}, {hi}]")));
    }
    let corners = CornerProfiles::new(ctl)?;
    let (mut a, mut b) = (lo, hi);
    let (ga, gb) = (corners.gap(a), corners.gap(b));
    if ga == 0.0 {
        return Ok(a);
    }
    if gb == 0.0 {
        return Ok(b);
    }
    if ga.signum() == gb.signum() {
        return Err(Error::Bracket { lo, hi });
    }
    while b - a > 1e-10 {
        let mid = 0.5 * (a + b);
        let gm = corners.gap(mid);
        if gm == 0.0 {
            return Ok(mid);
        }
        if gm.signum() == ga.signum() {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CriticalChart {
    /// `(u, v)` of the unit-area chart.
    Lengths,
    /// `(len_u, angle)` at fixed area; used for rectangular lattices.
    LengthAngle,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalPointReport {
    pub grad_norm: f64,
    pub gradient: [f64; 2],
    pub chart: CriticalChart,
    pub one_sided: bool,
    pub hessian_eigenvalues: [f64; 2],
    /// Counts of positive and negative Hessian eigenvalues.
    pub signature: (usize, usize),
}

/// Finite-difference step of the gradient.
pub const GRADIENT_STEP: f64 = 1e-5;
const HESSIAN_STEP: f64 = 1e-3;

/// Gradient (and Hessian) of the fixed-area Lennard-Jones energy at `lat`.
pub fn critical_point_check(lat: &BravaisLattice, area: f64, ctl: &SumControl) -> Result<CriticalPointReport> {
    check_area(area)?;
    if (lat.area() - area).abs() > 1e-9 * area {
        return Err(Error::Domain(format!(
            "lattice area {} differs from the requested area {area}",
            lat.area()
        )));
    }
    let energy = |lat: &BravaisLattice| ScalingProfile::new(lat, ZetaMethod::default(), ctl).map(|p| p.energy(1.0));
    let rectangular = (lat.angle() - FRAC_PI_2).abs() < 1e-12;
    let (chart, x0) = if rectangular {
        (CriticalChart::LengthAngle, [lat.len_u() / area.sqrt(), lat.angle()])
    } else {
        let p = lat.chart_point();
        (CriticalChart::Lengths, [p.len_u, p.len_v])
    };
    let eval = |x: [f64; 2]| -> Result<Option<f64>> {
        let l = match chart {
            CriticalChart::LengthAngle => {
                if !(x[0] > 0.0 && x[1] > 0.0 && x[1] < PI) {
                    return Ok(None);
                }
                length_angle_lattice(x[0], x[1], area)?
            }
            CriticalChart::Lengths => {
                if !(x[0] > 0.0 && x[1] > 0.0 && x[0] * x[1] > 1.0) {
                    return Ok(None);
                }
                BravaisLattice::from_chart_unchecked(x[0], x[1], area)?
            }
        };
        energy(&l).map(Some)
    };
    let shifted = |i: usize, h: f64| {
        let mut x = x0;
        x[i] += h;
        x
    };
    let f0 = eval(x0)?.ok_or_else(|| Error::ChartDomain("lattice is on the chart boundary".into()))?;

    let h = GRADIENT_STEP;
    let mut gradient = [0.0; 2];
    let mut one_sided = false;
    for (i, g) in gradient.iter_mut().enumerate() {
        let plus = eval(shifted(i, h))?;
        let minus = eval(shifted(i, -h))?;
        *g = match (plus, minus) {
            (Some(p), Some(m)) => (p - m) / (2.0 * h),
            (Some(p), None) => {
                one_sided = true;
                let p2 = eval(shifted(i, 2.0 * h))?.ok_or_else(|| Error::ChartDomain("chart too narrow".into()))?;
                (-3.0 * f0 + 4.0 * p - p2) / (2.0 * h)
            }
            (None, Some(m)) => {
                one_sided = true;
                let m2 = eval(shifted(i, -2.0 * h))?.ok_or_else(|| Error::ChartDomain("chart too narrow".into()))?;
                (3.0 * f0 - 4.0 * m + m2) / (2.0 * h)
            }
            (None, None) => return Err(Error::ChartDomain("no admissible stencil".into())),
        };
    }

    // the Hessian is informational; skipped when a one-sided stencil was needed
    let hh = HESSIAN_STEP;
    let at = |dx: f64, dy: f64| eval([x0[0] + dx, x0[1] + dy]);
    let hessian = if one_sided {
        None
    } else {
        match (
            at(hh, 0.0)?,
            at(-hh, 0.0)?,
            at(0.0, hh)?,
            at(0.0, -hh)?,
            at(hh, hh)?,
            at(hh, -hh)?,
            at(-hh, hh)?,
            at(-hh, -hh)?,
        ) {
            (Some(px), Some(mx), Some(py), Some(my), Some(pp), Some(pm), Some(mp), Some(mm)) => {
                let hxx = (px - 2.0 * f0 + mx) / (hh * hh);
                let hyy = (py - 2.0 * f0 + my) / (hh * hh);
                let hxy = (pp - pm - mp + mm) / (4.0 * hh * hh);
                Some((hxx, hxy, hyy))
            }
            _ => None,
        }
    };
    let (hessian_eigenvalues, signature) = match hessian {
        Some((hxx, hxy, hyy)) => {
            let mean = 0.5 * (hxx + hyy);
            let rad = (0.25 * (hxx - hyy).powi(2) + hxy * hxy).sqrt();
            let eig = [mean - rad, mean + rad];
            let noise = 1e-6 * (hxx.abs() + hyy.abs()).max(1.0);
            let pos = eig.iter().filter(|&&e| e > noise).count();
            let neg = eig.iter().filter(|&&e| e < -noise).count();
            (eig, (pos, neg))
        }
        None => ([f64::NAN; 2], (0, 0)),
    };
    Ok(CriticalPointReport {
        grad_norm: gradient[0].hypot(gradient[1]),
        gradient,
        chart,
        one_sided,
        hessian_eigenvalues,
        signature,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctl() -> SumControl {
        SumControl::default()
    }

    #[test]
    fn classification_corners() {
        let t = unit_triangular_length();
        assert_eq!(
            classify(&FixedAreaPoint::new(t, t, 1.0).unwrap()),
            Classification::Triangular
        );
        assert_eq!(
            classify(&FixedAreaPoint::new(1.0, 1.0, 3.0).unwrap()),
            Classification::Square
        );
        assert_eq!(
            classify(&FixedAreaPoint::new(1.0, 1.0 + 2e-5, 3.0).unwrap()),
            Classification::Other
        );
    }

    #[test]
    fn u_floor_keeps_both_corners() {
        for area in [0.3, 0.6, 1.0, 2.0, 10.0] {
            let f = default_u_floor(area);
            assert!(f <= 1.0 && f * area.sqrt() <= MIN_DISTANCE_FLOOR + 1e-15);
        }
    }

    #[test]
    fn scaling_optimum_of_triangle() {
        let s = scaling_minimize(&BravaisLattice::triangular(1.0).unwrap(), &ctl()).unwrap();
        assert!((s.r * s.r - 0.84912).abs() < 5e-6);
        let tri0 = BravaisLattice::triangular(s.r * s.r).unwrap();
        let again = scaling_minimize(&tri0, &ctl()).unwrap();
        assert!((again.r - 1.0).abs() < 1e-9);
        let p = ScalingProfile::new(&tri0, ZetaMethod::default(), &ctl()).unwrap();
        assert!(p.energy(1.0) <= p.energy(1.01) && p.energy(1.0) <= p.energy(0.99));
    }

    #[test]
    fn crossover_bracket() {
        let corners = CornerProfiles::new(&ctl()).unwrap();
        assert!(corners.gap(1.0) < 0.0);
        assert!(corners.gap(2.0) > 0.0);
        let a = crossover_area(1.0, 1.2, &ctl()).unwrap();
        assert!(a > 1.13 && a < 1.14);
        assert!(corners.gap(a - 1e-6) < 0.0 && corners.gap(a + 1e-6) > 0.0);
        assert!(matches!(crossover_area(1.5, 2.0, &ctl()), Err(Error::Bracket { .. })));
    }

    #[test]
    fn critical_points() {
        let tri = critical_point_check(&BravaisLattice::triangular(1.0).unwrap(), 1.0, &ctl()).unwrap();
        assert_eq!(tri.chart, CriticalChart::Lengths);
        assert!(tri.grad_norm <= 1e-4, "{tri:?}");
        let sq = critical_point_check(&BravaisLattice::square(1.0).unwrap(), 1.0, &ctl()).unwrap();
        assert_eq!(sq.chart, CriticalChart::LengthAngle);
        assert!(sq.grad_norm <= 1e-4, "{sq:?}");
        let generic = BravaisLattice::from_chart(&FixedAreaPoint::new(1.03, 1.05, 1.0).unwrap()).unwrap();
        let g = critical_point_check(&generic, 1.0, &ctl()).unwrap();
        assert!(g.grad_norm > 1e-2, "{g:?}");
        assert!(critical_point_check(&generic, 2.0, &ctl()).is_err());
    }

    #[test]
    fn hessian_signature_at_triangle() {
        // the triangle is a strict local minimum at area 1
        let tri = critical_point_check(&BravaisLattice::triangular(1.0).unwrap(), 1.0, &ctl()).unwrap();
        assert_eq!(tri.signature, (2, 0));
    }
}
