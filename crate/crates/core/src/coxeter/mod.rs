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

//! The parameter-space symmetry group generated by the Atkin–Lehner and
//! Kummer involutions, conjugacy of parameter pairs, and the complete
//! classification of the admissible set into families and classes.

mod action;
mod classify;
mod group;

pub use action::{
    apply_a, apply_k, are_conjugate, conjugate_family, is_counted_galois, is_galois,
    kummer_twist, kummer_twist_checked, normalize_to_unit_numerator, s2_pairs,
    stabilizer_order,
};
pub use classify::{classify, Classification, Edge, EdgeKind, FamilyClass, Tally};
pub use group::{generate_group, m1, m2, matrix_of, Gen, GroupElement, HyperVector};
