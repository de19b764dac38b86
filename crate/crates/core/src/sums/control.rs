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

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance and cutoff policy shared by every infinite sum and quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SumControl {
    /// Target relative error of lattice sums.
    pub rel_tol: f64,
    /// Hard cap on the summation index range (and on quadrature subdivisions).
    pub max_shell: usize,
    /// Target relative error of quadratures.
    pub quad_rel_tol: f64,
}

impl Default for SumControl {
    fn default() -> Self {
        SumControl {
            rel_tol: 1e-12,
            max_shell: 10_000,
            quad_rel_tol: 1e-12,
        }
    }
}

impl SumControl {
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        SumControl {
            rel_tol,
            quad_rel_tol: rel_tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = |t: f64| t > 0.0 && t < 1.0 && t.is_finite();
        if !ok(self.rel_tol) || !ok(self.quad_rel_tol) {
            return Err(Error::Configuration(format!(
                "tolerances must lie in (0, 1), got rel_tol = {}, quad_rel_tol = {}",
                self.rel_tol, self.quad_rel_tol
            )));
        }
        if self.max_shell == 0 {
            return Err(Error::Configuration("max_shell must be positive".into()));
        }
        Ok(())
    }
}

/// A computed value together with a bound on its absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// Neumaier compensated summation.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct Accumulator {
    sum: f64,
    comp: f64,
}

impl Accumulator {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_policy() {
        let ctl = SumControl::default();
        assert_eq!(ctl.rel_tol, 1e-12);
        assert_eq!(ctl.max_shell, 10_000);
        assert_eq!(ctl.quad_rel_tol, 1e-12);
        ctl.validate().unwrap();
    }

    #[test]
    fn rejects_zero_tolerance() {
        assert!(SumControl::with_rel_tol(0.0).validate().is_err());
        assert!(SumControl::with_rel_tol(f64::NAN).validate().is_err());
        let ctl = SumControl {
            max_shell: 0,
            ..SumControl::default()
        };
        assert!(ctl.validate().is_err());
    }

    #[test]
    fn compensated_sum() {
        let mut acc = Accumulator::default();
        acc.add(1.0);
        for _ in 0..10 {
            acc.add(1e-16);
        }
        acc.add(-1.0);
        assert!((acc.value() - 1e-15).abs() < 1e-30);
    }
}
