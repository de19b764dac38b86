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

//! Energies of two-dimensional Bravais lattices.
//!
//! The crate evaluates Epstein zeta, lattice theta and `K0` sums, assembles
//! Lennard-Jones and Thomas-Fermi lattice energies, checks the analytic
//! certificates around the triangular lattice, and minimizes energies over
//! the reduced fundamental domain.

#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod cli;
pub mod energy;
pub mod error;
pub mod lattice;
pub mod optimize;
pub mod sums;
pub mod verify;

pub use energy::{PotentialKind, PotentialSpec};
pub use error::{Error, Result};
pub use lattice::{BravaisLattice, FixedAreaPoint, QuadraticForm};
pub use sums::{SumControl, ZetaMethod};
