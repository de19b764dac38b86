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

use thiserror::Error;

/// Errors raised by lattice construction, lattice sums and the drivers built on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("invalid scale factor {0} (must be positive and finite)")]
    InvalidScale(f64),
    #[error("argument out of domain: {0}")]
    Domain(String),
    /// A truncated sum or quadrature could not reach the requested tolerance.
    /// `achieved` is the best error bound that was attainable within the limits.
    #[error("no convergence within {limit} shells/subdivisions (achieved error bound {achieved:e})")]
    Convergence { achieved: f64, limit: usize },
    #[error("point outside the fixed-area chart: {0}")]
    ChartDomain(String),
    #[error("ratio function is singular this close to the triangular corner (chart distance {distance:e})")]
    Singularity { distance: f64 },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("root not bracketed: difference has the same sign at {lo} and {hi}")]
    Bracket { lo: f64, hi: f64 },
    #[error("invalid configuration: {0}")]
    Configuration(String),
}

pub type Result<T> = std::result::Result<T, Error>;
