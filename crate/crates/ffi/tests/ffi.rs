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

//! The C ABI, from Rust and from a C program compiled against the generated header.

use std::ffi::{c_char, CStr};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use lattice_energy_ffi::*;

fn last_error() -> String {
    let mut buf = [0 as c_char; 512];
    let n = unsafe { le_last_error_message(buf.as_mut_ptr(), buf.len()) };
    assert!(n > 0);
    unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned()
}

#[test]
fn lattice_handle_lifecycle() {
    let mut lat = ptr::null_mut();
    assert_eq!(unsafe { le_lattice_new(1.2, 1.0, 1.2, &mut lat) }, LeStatus::Ok);
    let mut info = LeLatticeInfo::default();
    assert_eq!(unsafe { le_lattice_get(lat, &mut info) }, LeStatus::Ok);
    // reduced: shorter vector first
    assert_eq!(info.len_u, 1.0);
    assert!((info.area - 1.2 * 1.2f64.sin()).abs() < 1e-12);
    unsafe { le_lattice_free(lat) };
    unsafe { le_lattice_free(ptr::null_mut()) };
}

#[test]
fn energies_match_the_library() {
    let mut lat = ptr::null_mut();
    assert_eq!(unsafe { le_lattice_from_chart(0.95, 1.1, 0.9, &mut lat) }, LeStatus::Ok);
    let core =
        lattice_energy::BravaisLattice::from_chart(&lattice_energy::FixedAreaPoint::new(0.95, 1.1, 0.9).unwrap())
            .unwrap();
    let ctl = lattice_energy::SumControl::default();
    let mut v = 0.0;
    assert_eq!(unsafe { le_lj_energy(lat, ptr::null(), &mut v) }, LeStatus::Ok);
    assert_eq!(v, lattice_energy::energy::lj_energy(&core, &ctl).unwrap());
    assert_eq!(unsafe { le_tf_energy(lat, ptr::null(), &mut v) }, LeStatus::Ok);
    assert_eq!(v, lattice_energy::energy::tf_energy(&core, &ctl).unwrap());
    assert_eq!(unsafe { le_theta(lat, 0.7, ptr::null(), &mut v) }, LeStatus::Ok);
    assert_eq!(v, lattice_energy::sums::theta(&core, 0.7, &ctl).unwrap());
    assert_eq!(unsafe { le_bessel_k0(1.0, ptr::null(), &mut v) }, LeStatus::Ok);
    assert_eq!(v, lattice_energy::sums::bessel_k0(1.0, &ctl).unwrap());
    unsafe { le_lattice_free(lat) };
}

#[test]
fn errors_map_to_status_codes() {
    let mut lat = ptr::null_mut();
    assert_eq!(
        unsafe { le_lattice_new(1.0, 1.0, 0.0, &mut lat) },
        LeStatus::InvalidLattice
    );
    assert!(lat.is_null());
    assert!(last_error().contains("angle"));
    assert_eq!(
        unsafe { le_lattice_from_chart(0.5, 1.0, 1.0, &mut lat) },
        LeStatus::ChartDomain
    );

    assert_eq!(unsafe { le_lattice_square(1.0, &mut lat) }, LeStatus::Ok);
    let mut v = 0.0;
    assert_eq!(
        unsafe { le_epstein_zeta(lat, 2.0, LeZetaMethod::Accelerated, ptr::null(), &mut v) },
        LeStatus::Domain
    );
    let mut ctl = le_control_default();
    ctl.max_shell = 2;
    assert_eq!(
        unsafe { le_epstein_zeta(lat, 6.0, LeZetaMethod::Direct, &ctl, &mut v) },
        LeStatus::Convergence
    );
    assert_eq!(
        unsafe { le_lj_energy(lat, ptr::null(), ptr::null_mut()) },
        LeStatus::NullPointer
    );
    assert_eq!(
        unsafe { le_lj_energy(ptr::null(), ptr::null(), &mut v) },
        LeStatus::Configuration
    );
    unsafe { le_lattice_free(lat) };
}

#[test]
fn minimization_and_triangular_optimum() {
    let mut m = std::mem::MaybeUninit::<LeMinimization>::uninit();
    assert_eq!(
        unsafe { le_minimize_fixed_area(0.6, LePotential::LennardJones, ptr::null(), m.as_mut_ptr()) },
        LeStatus::Ok
    );
    let m = unsafe { m.assume_init() };
    assert_eq!(m.classification, LeClassification::Triangular);
    assert!((m.argmin.area - 0.6).abs() < 1e-12);

    let mut t = LeTriangularOptimum::default();
    assert_eq!(unsafe { le_optimal_triangular_area(ptr::null(), &mut t) }, LeStatus::Ok);
    let core = lattice_energy::analysis::optimal_triangular_area(&Default::default()).unwrap();
    assert_eq!(t.area, core.area);
    assert_eq!(t.energy, core.energy);
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(le_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

/// `target/<profile>`, two levels above this test executable.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = profile_dir().join("liblattice_energy_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let out_dir = tempfile::tempdir().unwrap();
    let exe = out_dir.path().join("smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(cc)
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler runs");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
