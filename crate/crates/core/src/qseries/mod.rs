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

//! Exact Fourier-expansion engine: Dedekind eta, the `K2(r,s)` eta
//! quotients, the admissible parameter set, and nebentypus characters.
//!
//! All fractional expansions live on the exponent grid `(1/48)Z`; every
//! exponent arising from `eta(tau/2)`, `eta(tau)`, `eta(2 tau)` and the
//! leading exponent `r/2` lies on it, so a single grid serves the whole
//! crate and removes rebasing hazards.

mod eta;
mod neben;
mod pair;
mod series;

pub use eta::{eta_series, k2_raw_series, k2_scaled_series, k2_series};
pub use neben::{nebentypus, nebentypus_extracted};
pub use pair::{enumerate_s2, level, n_of, HDPair, S2Entry};
pub use series::{FracQSeries, IntQSeries};

pub(crate) mod neben_internal {
    pub(crate) use super::neben::{hecke_recursion, proportional_or_zero};
}
