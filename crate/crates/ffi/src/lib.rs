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

//! C ABI over `lattice_energy`.
//!
//! Lattices live behind an opaque `LeLattice` handle. Every fallible call
//! returns an [`LeStatus`] and writes its result through an out-pointer; the
//! message of the most recent failure on the calling thread is available from
//! [`le_last_error_message`]. A null `ctl` pointer selects the default
//! tolerances.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lattice_energy::analysis::optimal_triangular_area;
use lattice_energy::energy::{lj_energy, tf_energy};
use lattice_energy::optimize::{minimize_fixed_area, Classification};
use lattice_energy::sums::{bessel_k0, epstein_zeta, theta};
use lattice_energy::{BravaisLattice, Error, FixedAreaPoint, PotentialSpec, SumControl, ZetaMethod};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidLattice = 2,
    InvalidScale = 3,
    Domain = 4,
    Convergence = 5,
    ChartDomain = 6,
    Singularity = 7,
    InvariantViolation = 8,
    Bracket = 9,
    Configuration = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeZetaMethod {
    Accelerated = 0,
    Direct = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LePotential {
    LennardJones = 0,
    ThomasFermi = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeClassification {
    Triangular = 0,
    Square = 1,
    Other = 2,
}

/// Tolerances of the lattice sums; see [`le_control_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeSumControl {
    pub rel_tol: f64,
    pub max_shell: usize,
    pub quad_rel_tol: f64,
}

/// Reduced basis: `0 < len_u <= len_v`, angle in `[pi/3, pi/2]` radians.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LeLatticeInfo {
    pub len_u: f64,
    pub len_v: f64,
    pub angle: f64,
    pub area: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeMinimization {
    pub argmin: LeLatticeInfo,
    pub chart_u: f64,
    pub chart_v: f64,
    pub energy: f64,
    pub classification: LeClassification,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LeTriangularOptimum {
    pub area: f64,
    pub length: f64,
    pub energy: f64,
}

/// Opaque lattice handle.
pub struct LeLattice(BravaisLattice);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> LeStatus {
    match err {
        Error::InvalidLattice(_) => LeStatus::InvalidLattice,
        Error::InvalidScale(_) => LeStatus::InvalidScale,
        Error::Domain(_) => LeStatus::Domain,
        Error::Convergence { .. } => LeStatus::Convergence,
        Error::ChartDomain(_) => LeStatus::ChartDomain,
        Error::Singularity { .. } => LeStatus::Singularity,
        Error::InvariantViolation(_) => LeStatus::InvariantViolation,
        Error::Bracket { .. } => LeStatus::Bracket,
        Error::Configuration(_) => LeStatus::Configuration,
    }
}

/// Run `f`, store its value in `out` and translate errors and panics.
fn guard<T>(out: *mut T, f: impl FnOnce() -> lattice_energy::Result<T>) -> LeStatus {
    if out.is_null() {
        set_last_error("output pointer is null".into());
        return LeStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(v)) => {
            // SAFETY: checked non-null; the caller provides a writable T
            unsafe { out.write(v) };
            LeStatus::Ok
        }
        Ok(Err(e)) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_last_error("internal panic".into());
            LeStatus::Panic
        }
    }
}

fn control(ctl: *const LeSumControl) -> lattice_energy::Result<SumControl> {
    // SAFETY: null or a valid pointer per the contract
    let c = match unsafe { ctl.as_ref() } {
        None => return Ok(SumControl::default()),
        Some(c) => SumControl {
            rel_tol: c.rel_tol,
            max_shell: c.max_shell,
            quad_rel_tol: c.quad_rel_tol,
        },
    };
    c.validate()?;
    Ok(c)
}

fn lattice<'a>(lat: *const LeLattice) -> lattice_energy::Result<&'a BravaisLattice> {
    // SAFETY: null or a handle from one of the constructors
    unsafe { lat.as_ref() }
        .map(|l| &l.0)
        .ok_or_else(|| Error::Configuration("lattice handle is null".into()))
}

fn info(l: &BravaisLattice) -> LeLatticeInfo {
    LeLatticeInfo {
        len_u: l.len_u(),
        len_v: l.len_v(),
        angle: l.angle(),
        area: l.area(),
    }
}

fn boxed(l: lattice_energy::Result<BravaisLattice>) -> lattice_energy::Result<*mut LeLattice> {
    l.map(|l| Box::into_raw(Box::new(LeLattice(l))))
}

/// Default tolerances.
#[no_mangle]
pub extern "C" fn le_control_default() -> LeSumControl {
    let c = SumControl::default();
    LeSumControl {
        rel_tol: c.rel_tol,
        max_shell: c.max_shell,
        quad_rel_tol: c.quad_rel_tol,
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn le_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copy the last error message of this thread into `buf`, NUL-terminated and
/// truncated to `len` bytes. Returns the full message length without the NUL,
/// or 0 when no error has been recorded.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn le_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| match e.borrow().as_ref() {
        None => 0,
        Some(msg) => {
            let bytes = msg.as_bytes();
            if !buf.is_null() && len > 0 {
                let n = bytes.len().min(len - 1);
                ptr::copy_nonoverlapping(bytes.as_ptr(), buf.cast::<u8>(), n);
                *buf.add(n) = 0;
            }
            bytes.len()
        }
    })
}

/// Reduced lattice from two basis lengths and the angle between them (radians).
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn le_lattice_new(len_u: f64, len_v: f64, angle: f64, out: *mut *mut LeLattice) -> LeStatus {
    guard(out, || boxed(BravaisLattice::new(len_u, len_v, angle)))
}

/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn le_lattice_triangular(area: f64, out: *mut *mut LeLattice) -> LeStatus {
    guard(out, || boxed(BravaisLattice::triangular(area)))
}

/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn le_lattice_square(area: f64, out: *mut *mut LeLattice) -> LeStatus {
    guard(out, || boxed(BravaisLattice::square(area)))
}

/// Lattice at chart point `(u, v)` of the given area.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn le_lattice_from_chart(u: f64, v: f64, area: f64, out: *mut *mut LeLattice) -> LeStatus {
    guard(out, || {
        boxed(FixedAreaPoint::new(u, v, area).and_then(|p| BravaisLattice::from_chart(&p)))
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `lat` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn le_lattice_free(lat: *mut LeLattice) {
    if !lat.is_null() {
        drop(Box::from_raw(lat));
    }
}

/// # Safety
/// `lat` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn le_lattice_get(lat: *const LeLattice, out: *mut LeLatticeInfo) -> LeStatus {
    guard(out, || lattice(lat).map(info))
}

/// Theta function `sum exp(-2 pi alpha |x|^2)` over the lattice.
///
/// # Safety
/// `lat` must be a live handle, `ctl` null or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn le_theta(
    lat: *const LeLattice,
    alpha: f64,
    ctl: *const LeSumControl,
    out: *mut f64,
) -> LeStatus {
    guard(out, || theta(lattice(lat)?, alpha, &control(ctl)?))
}

/// Epstein zeta function `sum_{x != 0} |x|^-s`, `s > 2`.
///
/// # Safety
/// `lat` must be a live handle, `ctl` null or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn le_epstein_zeta(
    lat: *const LeLattice,
    s: f64,
    method: LeZetaMethod,
    ctl: *const LeSumControl,
    out: *mut f64,
) -> LeStatus {
    let method = match method {
        LeZetaMethod::Accelerated => ZetaMethod::Accelerated,
        LeZetaMethod::Direct => ZetaMethod::Direct,
    };
    guard(out, || epstein_zeta(lattice(lat)?, s, method, &control(ctl)?))
}

/// # Safety
/// `lat` must be a live handle, `ctl` null or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn le_lj_energy(lat: *const LeLattice, ctl: *const LeSumControl, out: *mut f64) -> LeStatus {
    guard(out, || lj_energy(lattice(lat)?, &control(ctl)?))
}

/// # Safety
/// `lat` must be a live handle, `ctl` null or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn le_tf_energy(lat: *const LeLattice, ctl: *const LeSumControl, out: *mut f64) -> LeStatus {
    guard(out, || tf_energy(lattice(lat)?, &control(ctl)?))
}

/// Modified Bessel function `K0(x)`, `x > 0`.
///
/// # Safety
/// `ctl` null or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn le_bessel_k0(x: f64, ctl: *const LeSumControl, out: *mut f64) -> LeStatus {
    guard(out, || bessel_k0(x, &control(ctl)?))
}

/// Energy minimizer among lattices of the given area.
///
/// # Safety
/// `ctl` null or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn le_minimize_fixed_area(
    area: f64,
    potential: LePotential,
    ctl: *const LeSumControl,
    out: *mut LeMinimization,
) -> LeStatus {
    let spec = match potential {
        LePotential::LennardJones => PotentialSpec::lennard_jones(),
        LePotential::ThomasFermi => PotentialSpec::thomas_fermi(),
    };
    guard(out, || {
        let r = minimize_fixed_area(area, &spec, &control(ctl)?)?;
        Ok(LeMinimization {
            argmin: info(&r.argmin),
            chart_u: r.chart.len_u,
            chart_v: r.chart.len_v,
            energy: r.energy,
            classification: match r.classification {
                Classification::Triangular => LeClassification::Triangular,
                Classification::Square => LeClassification::Square,
                Classification::Other => LeClassification::Other,
            },
        })
    })
}

/// Area of the triangular lattice with least Lennard-Jones energy.
///
/// # Safety
/// `ctl` null or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn le_optimal_triangular_area(
    ctl: *const LeSumControl,
    out: *mut LeTriangularOptimum,
) -> LeStatus {
    guard(out, || {
        let t = optimal_triangular_area(&control(ctl)?)?;
        Ok(LeTriangularOptimum {
            area: t.area,
            length: t.length,
            energy: t.energy,
        })
    })
}
