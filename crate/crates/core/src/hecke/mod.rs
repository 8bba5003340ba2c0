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

//! Hecke operators on truncated expansions, permutation constants across
//! conjugate families, and assembly of the Hecke eigenforms with exact
//! surd coefficients.

mod eigenform;
mod operators;
mod surd;

pub use eigenform::{
    build_eigenform, eigenform_representatives, twist_by_quadratic, verify_eigen, EigenformSpec,
};
pub use operators::{
    commute_check, d_constant, hecke_constant, hecke_tp, twist_pair_check, HeckeConstant,
    IndexedFamily, TwistReport,
};
pub use surd::Surd;
