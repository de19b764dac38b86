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

//! Globally adaptive Gauss-Kronrod (7, 15) quadrature on finite intervals.

use crate::error::{Error, Result};
use crate::sums::control::Estimate;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the odd-indexed Kronrod nodes (and the centre).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

fn kronrod<F>(f: &mut F, lo: f64, hi: f64) -> Result<Segment>
where
    F: FnMut(f64) -> Result<f64>,
{
    let centre = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(centre)?;
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(centre - dx)? + f(centre + dx)?;
        kron += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Ok(Segment {
        lo,
        hi,
        value: kron * half,
        error: ((kron - gauss) * half).abs(),
    })
}

/// Integrate `f` over `[lo, hi]` until the summed error estimate is below
/// `max(abs_tol, rel_tol * |integral|)`. At most `max_segments` panels are used.
pub fn integrate<F>(mut f: F, lo: f64, hi: f64, rel_tol: f64, abs_tol: f64, max_segments: usize) -> Result<Estimate>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(lo.is_finite() && hi.is_finite()) || hi < lo {
        return Err(Error::Domain(format!("bad integration range [{lo}, {hi}]")));
    }
    if hi == lo {
        return Ok(Estimate { value: 0.0, error: 0.0 });
    }
    let mut segments = vec![kronrod(&mut f, lo, hi)?];
    loop {
        let total: f64 = segments.iter().map(|s| s.value).sum();
        let error: f64 = segments.iter().map(|s| s.error).sum();
        if error <= abs_tol.max(rel_tol * total.abs()) {
            return Ok(Estimate { value: total, error });
        }
        if segments.len() >= max_segments {
            return Err(Error::Convergence {
                achieved: error,
                limit: max_segments,
            });
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.error.total_cmp(&b.1.error))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let seg = segments.swap_remove(worst);
        let mid = 0.5 * (seg.lo + seg.hi);
        segments.push(kronrod(&mut f, seg.lo, mid)?);
        segments.push(kronrod(&mut f, mid, seg.hi)?);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn polynomial_is_exact() {
        let est = integrate(|x| Ok(x.powi(5) - 3.0 * x * x), 0.0, 2.0, 1e-14, 0.0, 10).unwrap();
        assert_relative_eq!(est.value, 64.0 / 6.0 - 8.0, epsilon = 1e-13);
    }

    #[test]
    fn peaked_integrand() {
        // arctan derivative with a sharp peak
        let est = integrate(|x| Ok(1e-3 / (x * x + 1e-6)), -1.0, 1.0, 1e-12, 0.0, 500).unwrap();
        assert_relative_eq!(est.value, 2.0 * (1e3f64).atan(), max_relative = 1e-11);
    }

    #[test]
    fn reports_non_convergence() {
        let res = integrate(|x| Ok(1.0 / x.sqrt()), 0.0, 1.0, 1e-15, 0.0, 4);
        assert!(matches!(res, Err(Error::Convergence { .. })));
    }

    #[test]
    fn propagates_integrand_errors() {
        let res = integrate(|_| Err(Error::Domain("x".into())), 0.0, 1.0, 1e-10, 0.0, 4);
        assert!(matches!(res, Err(Error::Domain(_))));
    }
}
