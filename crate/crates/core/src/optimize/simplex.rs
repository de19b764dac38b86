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

//! Nelder-Mead simplex descent.

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimplexOptions {
    /// Stop once every vertex is within this distance of the best one.
    pub diameter_tol: f64,
    /// Stop once the value spread over the simplex is below this.
    pub value_tol: f64,
    pub max_iterations: usize,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        SimplexOptions {
            diameter_tol: 1e-9,
            value_tol: 1e-15,
            max_iterations: 2000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimplexResult {
    pub x: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

fn combine(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    // a + t (b - a)
    a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect()
}

fn diameter(vertices: &[(Vec<f64>, f64)]) -> f64 {
    let best = &vertices[0].0;
    vertices[1..]
        .iter()
        .map(|(v, _)| v.iter().zip(best).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
        .fold(0.0, f64::max)
}

/// Minimize `f` from `start` with initial edge lengths `steps`.
///
/// `f` may return `+inf` to reject a point. Ties are ordered by insertion, so
/// the run is deterministic.
pub fn nelder_mead<F>(mut f: F, start: &[f64], steps: &[f64], opts: &SimplexOptions) -> Result<SimplexResult>
where
    F: FnMut(&[f64]) -> Result<f64>,
{
    let dim = start.len();
    let mut vertices: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    vertices.push((start.to_vec(), f(start)?));
    for i in 0..dim {
        let mut p = start.to_vec();
        p[i] += steps[i];
        let mut val = f(&p)?;
        if !val.is_finite() {
            p[i] = start[i] - steps[i];
            val = f(&p)?;
        }
        vertices.push((p, val));
    }

    let order = |v: &mut Vec<(Vec<f64>, f64)>| v.sort_by(|a, b| a.1.total_cmp(&b.1));
    order(&mut vertices);
    let mut iterations = 0;
    while iterations < opts.max_iterations {
        let spread = vertices[dim].1 - vertices[0].1;
        if diameter(&vertices) < opts.diameter_tol || (spread.is_finite() && spread.abs() < opts.value_tol) {
            return Ok(SimplexResult {
                x: vertices[0].0.clone(),
                value: vertices[0].1,
                iterations,
                converged: true,
            });
        }
        iterations += 1;

        let mut centroid = vec![0.0; dim];
        for (v, _) in &vertices[..dim] {
            for (c, x) in centroid.iter_mut().zip(v) {
                *c += x / dim as f64;
            }
        }
        let worst = vertices[dim].clone();
        let reflected = combine(&centroid, &worst.0, -1.0);
        let fr = f(&reflected)?;

        if fr < vertices[0].1 {
            let expanded = combine(&centroid, &worst.0, -2.0);
            let fe = f(&expanded)?;
            vertices[dim] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr < vertices[dim - 1].1 {
            vertices[dim] = (reflected, fr);
        } else {
            let (contracted, fc) = if fr < worst.1 {
                let p = combine(&centroid, &worst.0, -0.5);
                let v = f(&p)?;
                (p, v)
            } else {
                let p = combine(&centroid, &worst.0, 0.5);
                let v = f(&p)?;
                (p, v)
            };
            if fc < worst.1.min(fr) {
                vertices[dim] = (contracted, fc);
            } else {
                let best = vertices[0].0.clone();
                for vertex in vertices.iter_mut().skip(1) {
                    let p = combine(&best, &vertex.0, 0.5);
                    let v = f(&p)?;
                    *vertex = (p, v);
                }
            }
        }
        order(&mut vertices);
    }
    Ok(SimplexResult {
        x: vertices[0].0.clone(),
        value: vertices[0].1,
        iterations,
        converged: false,
    })
}
