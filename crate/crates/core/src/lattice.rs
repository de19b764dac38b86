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

//! Two-dimensional Bravais lattices in reduced form.
//!
//! A lattice `Z u + Z v` is stored through rotation-invariant data only: the two
//! basis lengths and the angle between them. Every constructor returns the
//! reduced representative, `|u| <= |v|` and `angle in [pi/3, pi/2]`, with
//! `2 |u.v| <= |u|^2`. Energies only depend on the values of the quadratic form
//! `Q(m, n) = |m u + n v|^2`, so mirror images are identified.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative slack when testing `|b| <= a`; rounding in the length/angle round
/// trip must not trigger a spurious shear.
const REDUCTION_SLACK: f64 = 1e-12;

const MAX_REDUCTION_STEPS: usize = 10_000;

/// Length of the triangular lattice of unit area, `sqrt(2/sqrt(3))`.
pub fn unit_triangular_length() -> f64 {
    (2.0 / 3f64.sqrt()).sqrt()
}

/// A reduced two-dimensional Bravais lattice.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BravaisLattice {
    len_u: f64,
    len_v: f64,
    angle: f64,
    area: f64,
}

/// Positive definite binary quadratic form `a m^2 + b m n + c n^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadraticForm {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Discriminant `4ac - b^2`, equal to `4 |L|^2` for a lattice form.
    pub disc: f64,
}

/// A point of the fixed-area chart.
///
/// `len_u` and `len_v` are the basis lengths of the unit-area lattice; the
/// lattice itself is that one dilated to `target_area`. The angle is implied:
/// `cos = sqrt(len_u^2 len_v^2 - 1) / (len_u len_v)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FixedAreaPoint {
    pub len_u: f64,
    pub len_v: f64,
    pub target_area: f64,
}

impl FixedAreaPoint {
    pub fn new(len_u: f64, len_v: f64, target_area: f64) -> Result<Self> {
        let p = FixedAreaPoint {
            len_u,
            len_v,
            target_area,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        if !(self.len_u > 0.0 && self.len_v > 0.0 && self.len_u.is_finite() && self.len_v.is_finite()) {
            return Err(Error::ChartDomain(format!(
                "lengths ({}, {}) must be positive",
                self.len_u, self.len_v
            )));
        }
        if !(self.target_area > 0.0 && self.target_area.is_finite()) {
            return Err(Error::ChartDomain(format!(
                "target area {} must be positive",
                self.target_area
            )));
        }
        if self.len_u > self.len_v {
            return Err(Error::ChartDomain(format!(
                "len_u = {} exceeds len_v = {}",
                self.len_u, self.len_v
            )));
        }
        if self.len_u * self.len_v < 1.0 {
            return Err(Error::ChartDomain(format!(
                "len_u * len_v = {} is below 1",
                self.len_u * self.len_v
            )));
        }
        Ok(())
    }

    /// Euclidean distance to another chart point, ignoring the area.
    pub fn distance(&self, u: f64, v: f64) -> f64 {
        (self.len_u - u).hypot(self.len_v - v)
    }
}

/// Whether `(u, v)` lies in the chart domain `u <= v`, `u v >= 1`.
pub fn in_chart(u: f64, v: f64) -> bool {
    u > 0.0 && v > 0.0 && u <= v && u * v >= 1.0
}

/// Whether the chart point `(u, v)` is already a reduced basis, `2 |u.v| <= |u|^2`.
pub fn chart_is_reduced(u: f64, v: f64) -> bool {
    in_chart(u, v) && 4.0 * (u * u * v * v - 1.0) <= u.powi(4) * (1.0 + REDUCTION_SLACK)
}

/// Smallest `v` with `(u, v)` in the chart, `max(u, 1/u)` rounded up so that `u v >= 1` holds.
pub fn chart_v_min(u: f64) -> f64 {
    let mut v = u.max(1.0 / u);
    while u * v < 1.0 {
        v = f64::from_bits(v.to_bits() + 1);
    }
    v
}

/// Largest `v` for which `(u, v)` is a reduced chart point.
pub fn chart_reduced_v_max(u: f64) -> f64 {
    (1.0 + u.powi(4) / 4.0).sqrt() / u
}

/// Angle of the chart point `(u, v)`, from `sin = 1/(uv)`.
pub fn chart_angle(u: f64, v: f64) -> f64 {
    let uv = u * v;
    1f64.atan2((uv * uv - 1.0).max(0.0).sqrt())
}

fn cos_of(angle: f64) -> f64 {
    // exact at the two corners of the fundamental domain
    if angle == FRAC_PI_2 {
        0.0
    } else if angle == FRAC_PI_3 {
        0.5
    } else {
        angle.cos()
    }
}

/// Lagrange-Gauss reduction of a positive definite form to `0 <= b <= a <= c`.
fn gauss_reduce(mut a: f64, mut b: f64, mut c: f64) -> Result<(f64, f64, f64)> {
    for _ in 0..MAX_REDUCTION_STEPS {
        if b.abs() > a * (1.0 + REDUCTION_SLACK) {
            let k = (b / (2.0 * a)).round();
            let b_new = b - 2.0 * k * a;
            c = c - k * b + k * k * a;
            b = b_new;
        }
        if c < a {
            std::mem::swap(&mut a, &mut c);
            continue;
        }
        if b.abs() <= a * (1.0 + REDUCTION_SLACK) {
            return Ok((a, b.abs().min(a), c));
        }
    }
    Err(Error::InvalidLattice(format!(
        "reduction did not terminate for form ({a}, {b}, {c})"
    )))
}

impl QuadraticForm {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let disc = 4.0 * a * c - b * b;
        if !(a > 0.0 && c > 0.0 && disc > 0.0) || !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::InvalidLattice(format!(
                "form ({a}, {b}, {c}) is not positive definite"
            )));
        }
        Ok(QuadraticForm { a, b, c, disc })
    }

    /// Equivalent form with `0 <= b <= a <= c`.
    pub fn reduced(&self) -> Result<Self> {
        let (a, b, c) = gauss_reduce(self.a, self.b, self.c)?;
        Ok(QuadraticForm {
            a,
            b,
            c,
            disc: 4.0 * a * c - b * b,
        })
    }

    pub fn is_reduced(&self) -> bool {
        self.b >= 0.0 && self.b <= self.a && self.a <= self.c
    }

    pub fn eval(&self, m: f64, n: f64) -> f64 {
        self.a * m * m + self.b * m * n + self.c * n * n
    }

    /// The same form divided by a positive constant.
    pub fn scaled(&self, factor: f64) -> Self {
        QuadraticForm {
            a: self.a * factor,
            b: self.b * factor,
            c: self.c * factor,
            disc: self.disc * factor * factor,
        }
    }
}

impl BravaisLattice {
    /// Reduced lattice generated by two vectors of the given lengths and angle.
    pub fn new(len_u: f64, len_v: f64, angle: f64) -> Result<Self> {
        Self::reduce(len_u, len_v, angle)
    }

    /// Reduce an arbitrary basis, given by lengths and angle, to the fundamental domain.
    pub fn reduce(len_u: f64, len_v: f64, angle: f64) -> Result<Self> {
        if !(len_u > 0.0 && len_v > 0.0 && len_u.is_finite() && len_v.is_finite()) {
            return Err(Error::InvalidLattice(format!(
                "basis lengths ({len_u}, {len_v}) must be positive and finite"
            )));
        }
        if !(angle > 0.0 && angle < PI) || angle.sin() <= 0.0 {
            return Err(Error::InvalidLattice(format!(
                "angle {angle} is degenerate (must lie strictly between 0 and pi)"
            )));
        }
        let (short, long) = if len_u <= len_v { (len_u, len_v) } else { (len_v, len_u) };
        // obtuse angles fold to the mirror image
        let folded = if angle > FRAC_PI_2 { PI - angle } else { angle };
        if folded >= FRAC_PI_3 && 2.0 * long * cos_of(folded) <= short * (1.0 + REDUCTION_SLACK) {
            return Ok(Self::from_parts(short, long, folded));
        }

        let c_uv = cos_of(angle);
        let (a, b, c) = gauss_reduce(len_u * len_u, 2.0 * len_u * len_v * c_uv, len_v * len_v)?;
        Self::from_reduced_form(a, b, c)
    }

    /// Lattice whose quadratic form is `form` (any basis; it is reduced first).
    pub fn from_form(form: &QuadraticForm) -> Result<Self> {
        let r = form.reduced()?;
        Self::from_reduced_form(r.a, r.b, r.c)
    }

    fn from_reduced_form(a: f64, b: f64, c: f64) -> Result<Self> {
        let (len_u, len_v) = (a.sqrt(), c.sqrt());
        let cos = (b / (2.0 * len_u * len_v)).clamp(0.0, 0.5);
        let angle = if cos == 0.0 {
            FRAC_PI_2
        } else if cos == 0.5 {
            FRAC_PI_3
        } else {
            cos.acos().clamp(FRAC_PI_3, FRAC_PI_2)
        };
        let lat = Self::from_parts(len_u, len_v, angle);
        if !(lat.area > 0.0) {
            return Err(Error::InvalidLattice("degenerate basis".into()));
        }
        Ok(lat)
    }

    fn from_parts(len_u: f64, len_v: f64, angle: f64) -> Self {
        BravaisLattice {
            len_u,
            len_v,
            angle,
            area: len_u * len_v * angle.sin(),
        }
    }

    /// Triangular lattice of the given area.
    pub fn triangular(area: f64) -> Result<Self> {
        check_area(area)?;
        let len = (2.0 * area / 3f64.sqrt()).sqrt();
        Ok(Self::from_parts(len, len, FRAC_PI_3))
    }

    /// Square lattice of the given area.
    pub fn square(area: f64) -> Result<Self> {
        check_area(area)?;
        let len = area.sqrt();
        Ok(Self::from_parts(len, len, FRAC_PI_2))
    }

    /// Lattice at a point of the fixed-area chart.
    pub fn from_chart(p: &FixedAreaPoint) -> Result<Self> {
        p.validate()?;
        Self::from_chart_unchecked(p.len_u, p.len_v, p.target_area)
    }

    /// Chart lattice for any `u v >= 1`, including `u > v` and non-reduced bases.
    pub(crate) fn from_chart_unchecked(u: f64, v: f64, area: f64) -> Result<Self> {
        if !(u * v >= 1.0) {
            return Err(Error::ChartDomain(format!("u v = {} is below 1", u * v)));
        }
        let s = area.sqrt();
        Self::reduce(s * u, s * v, chart_angle(u, v))
    }

    /// Position of this lattice in the fixed-area chart of its own area.
    pub fn chart_point(&self) -> FixedAreaPoint {
        let s = self.area.sqrt();
        FixedAreaPoint {
            len_u: self.len_u / s,
            len_v: self.len_v / s,
            target_area: self.area,
        }
    }

    /// Dilation by `r`: lengths times `r`, area times `r^2`.
    pub fn scale(&self, r: f64) -> Result<Self> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::InvalidScale(r));
        }
        Ok(Self::from_parts(self.len_u * r, self.len_v * r, self.angle))
    }

    /// Same shape, rescaled to the given area.
    pub fn with_area(&self, area: f64) -> Result<Self> {
        check_area(area)?;
        self.scale((area / self.area).sqrt())
    }

    pub fn quadratic_form(&self) -> QuadraticForm {
        let a = self.len_u * self.len_u;
        let c = self.len_v * self.len_v;
        let b = (2.0 * self.len_u * self.len_v * cos_of(self.angle)).min(a);
        QuadraticForm {
            a,
            b,
            c,
            disc: 4.0 * a * c - b * b,
        }
    }

    pub fn len_u(&self) -> f64 {
        self.len_u
    }

    pub fn len_v(&self) -> f64 {
        self.len_v
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    /// Shortest non-zero lattice vector length.
    pub fn min_distance(&self) -> f64 {
        self.len_u
    }

    /// Basis vectors with `u` along the x axis.
    pub fn basis(&self) -> ([f64; 2], [f64; 2]) {
        (
            [self.len_u, 0.0],
            [self.len_v * cos_of(self.angle), self.len_v * self.angle.sin()],
        )
    }
}

fn check_area(area: f64) -> Result<()> {
    if area > 0.0 && area.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("area {area} must be positive")))
    }
}
