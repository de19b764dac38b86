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

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! `cargo test -p lattice-energy --test acceptance`

use std::process::ExitCode;
use std::time::Instant;

use lattice_energy::verify::{criterion_count, run_criterion, VerifyOptions, REFERENCE_TABLE_VERSION};

fn main() -> ExitCode {
    // libtest-style flags such as --nocapture are accepted and ignored
    let opts = VerifyOptions::default();
    let start = Instant::now();
    println!("acceptance suite, reference table v{REFERENCE_TABLE_VERSION}");
    let mut failed = Vec::new();
    for id in 1..=criterion_count() {
        let row = run_criterion(id, &opts);
        println!("{}", row.line());
        if !row.passed {
            failed.push(id);
        }
    }
    let total = criterion_count();
    println!(
        "{} of {total} criteria passed in {:.1}s",
        total - failed.len(),
        start.elapsed().as_secs_f64()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
