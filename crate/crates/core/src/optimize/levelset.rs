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

//! Objective values on a rectangular grid of the unit-area chart.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::analysis::{RatioContext, RATIO_EXCLUSION};
use crate::energy::{pair_energy, PotentialSpec};
use crate::error::{Error, Result};
use crate::lattice::{in_chart, BravaisLattice};
use crate::sums::SumControl;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelSetObjective {
    Energy(PotentialSpec),
    /// The ratio function; always evaluated on the unit-area chart.
    Ratio,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Valid,
    /// `u > v` or `u v < 1`.
    OutsideChart,
    /// Inside the exclusion disc of the ratio function.
    Singular,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LevelSetCell {
    pub u: f64,
    pub v: f64,
    pub value: Option<f64>,
    pub status: CellStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelSetGrid {
    pub area: f64,
    pub u_range: (f64, f64),
    pub v_range: (f64, f64),
    pub step: f64,
    pub n_u: usize,
    pub n_v: usize,
    /// Row-major, `u` outer.
    pub cells: Vec<LevelSetCell>,
}

fn grid_count(lo: f64, hi: f64, step: f64) -> usize {
    ((hi - lo) / step + 1e-9).floor() as usize + 1
}

/// Evaluate `objective` at `(u_min + i step, v_min + j step)` for all cells in range.
pub fn levelset(
    area: f64,
    objective: &LevelSetObjective,
    u_range: (f64, f64),
    v_range: (f64, f64),
    step: f64,
    ctl: &SumControl,
) -> Result<LevelSetGrid> {
    if !(area > 0.0 && area.is_finite()) {
        return Err(Error::Domain(format!("area {area} must be positive")));
    }
    let ranges_ok = [u_range, v_range]
        .iter()
        .all(|&(lo, hi)| lo.is_finite() && hi.is_finite() && lo > 0.0 && hi >= lo);
    if !ranges_ok || !(step > 0.0 && step.is_finite()) {
        return Err(Error::Configuration(format!(
            "invalid grid u {u_range:?}, v {v_range:?}, step {step}"
        )));
    }
    let ratio = match objective {
        LevelSetObjective::Ratio => Some(RatioContext::new(RATIO_EXCLUSION, ctl)?),
        LevelSetObjective::Energy(spec) => {
            spec.validate()?;
            None
        }
    };
    let n_u = grid_count(u_range.0, u_range.1, step);
    let n_v = grid_count(v_range.0, v_range.1, step);
    let mut cells = Vec::with_capacity(n_u * n_v);
    for i in 0..n_u {
        let u = u_range.0 + i as f64 * step;
        for j in 0..n_v {
            let v = v_range.0 + j as f64 * step;
            let cell = if !in_chart(u, v) {
                LevelSetCell {
                    u,
                    v,
                    value: None,
                    status: CellStatus::OutsideChart,
                }
            } else {
                match (&ratio, objective) {
                    (Some(ctx), _) => match ctx.eval(u, v) {
                        Ok(r) => LevelSetCell {
                            u,
                            v,
                            value: Some(r.value),
                            status: CellStatus::Valid,
                        },
                        Err(Error::Singularity { .. }) => LevelSetCell {
                            u,
                            v,
                            value: None,
                            status: CellStatus::Singular,
                        },
                        Err(e) => return Err(e),
                    },
                    (None, LevelSetObjective::Energy(spec)) => {
                        let lat = BravaisLattice::from_chart_unchecked(u, v, area)?;
                        LevelSetCell {
                            u,
                            v,
                            value: Some(pair_energy(&lat, spec, ctl)?),
                            status: CellStatus::Valid,
                        }
                    }
                    (None, LevelSetObjective::Ratio) => unreachable!("ratio context is built above"),
                }
            };
            cells.push(cell);
        }
    }
    Ok(LevelSetGrid {
        area,
        u_range,
        v_range,
        step,
        n_u,
        n_v,
        cells,
    })
}

impl LevelSetGrid {
    /// Valid cell with the smallest value; ties go to the first cell in row-major order.
    pub fn min_cell(&self) -> Option<&LevelSetCell> {
        self.cells
            .iter()
            .filter(|c| c.value.is_some())
            .fold(None, |best: Option<&LevelSetCell>, c| match best {
                Some(b) if b.value.unwrap() <= c.value.unwrap() => Some(b),
                _ => Some(c),
            })
    }

    /// CSV with header `u,v,value,valid`; 17 significant digits, LF line ends.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("u,v,value,valid\n");
        for c in &self.cells {
            let _ = match c.value {
                Some(x) => writeln!(out, "{:.16e},{:.16e},{:.16e},1", c.u, c.v, x),
                None => writeln!(out, "{:.16e},{:.16e},,0", c.u, c.v),
            };
        }
        out
    }

    pub fn write_csv(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_csv())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::unit_triangular_length;

    fn ctl() -> SumControl {
        SumControl::default()
    }

    #[test]
    fn figure_window_minima() {
        let lj = LevelSetObjective::Energy(PotentialSpec::lennard_jones());
        let g1 = levelset(1.0, &lj, (1.0, 1.08), (1.0, 1.08), 0.01, &ctl()).unwrap();
        assert_eq!((g1.n_u, g1.n_v), (9, 9));
        let m = g1.min_cell().unwrap();
        let t = unit_triangular_length();
        assert!((m.u - t).abs() <= 0.01 && (m.v - t).abs() <= 0.01, "{m:?}");
        let g2 = levelset(2.0, &lj, (1.0, 1.08), (1.0, 1.08), 0.01, &ctl()).unwrap();
        let m2 = g2.min_cell().unwrap();
        assert!(m2.u == 1.0 && m2.v == 1.0, "{m2:?}");
    }

    #[test]
    fn invalid_cells_flagged() {
        let lj = LevelSetObjective::Energy(PotentialSpec::lennard_jones());
        let g = levelset(1.0, &lj, (0.9, 1.1), (0.9, 1.1), 0.1, &ctl()).unwrap();
        for c in &g.cells {
            assert_eq!(c.status == CellStatus::Valid, in_chart(c.u, c.v));
            assert_eq!(c.value.is_some(), c.status == CellStatus::Valid);
        }
    }

    #[test]
    fn degenerate_step() {
        let lj = LevelSetObjective::Energy(PotentialSpec::lennard_jones());
        let g = levelset(1.0, &lj, (1.0, 1.05), (1.0, 1.05), 0.5, &ctl()).unwrap();
        assert_eq!(g.cells.len(), 1);
        let csv = g.to_csv();
        assert_eq!(csv.lines().count(), 2);
        assert!(csv.ends_with(",1\n"));
    }

    #[test]
    fn ratio_singular_cell() {
        let t = unit_triangular_length();
        let g = levelset(1.0, &LevelSetObjective::Ratio, (t, t), (t, t), 0.01, &ctl()).unwrap();
        assert_eq!(g.cells[0].status, CellStatus::Singular);
        assert!(g.to_csv().ends_with(",,0\n"));
    }

    #[test]
    fn csv_is_deterministic() {
        let tf = LevelSetObjective::Energy(PotentialSpec::thomas_fermi());
        let a = levelset(1.0, &tf, (1.0, 1.02), (1.0, 1.02), 0.01, &ctl())
            .unwrap()
            .to_csv();
        let b = levelset(1.0, &tf, (1.0, 1.02), (1.0, 1.02), 0.01, &ctl())
            .unwrap()
            .to_csv();
        assert_eq!(a, b);
        assert!(!a.contains('\r'));
    }
}
