// Copyright 2026 the k2forms authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exact Fourier expansions of the weight-3 eta quotients `K2(r,s)`, their
//! Hecke-eigenform combinations over Galois families, the dihedral symmetry
//! group acting on the parameter space, and arbitrary-precision verification
//! of the hypergeometric and L-value identities these families satisfy.
//!
//! The crate is organized around five subsystems:
//!
//! * [`qseries`] — exact integer q-expansions of eta quotients,
//!   enumeration of the 199-element parameter set, nebentypus characters;
//! * [`coxeter`] — the order-12 group generated by the Atkin–Lehner and
//!   Kummer involutions, conjugacy of parameter pairs, and the full
//!   classification into families and classes;
//! * [`hecke`] — Hecke operators on truncated expansions and assembly of
//!   eigenforms with exact surd coefficients;
//! * [`numerics`] — arbitrary-precision evaluation of the normalized
//!   hypergeometric value `F(r,s)` by two independent routes, plus the
//!   Kummer / Thomae / three-term identity verifiers;
//! * [`lvalues`] — special L-values at 1 via Atkin–Lehner-split period
//!   integrals and the headline eigenform L-value relations.

pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod lvalues;
pub mod numerics;
pub mod qseries;
pub mod rat;

pub use error::Error;
pub use hecke::{EigenformSpec, Surd};
pub use qseries::{FracQSeries, HDPair, IntQSeries};
pub use rat::Rat;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
