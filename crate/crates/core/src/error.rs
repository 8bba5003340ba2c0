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

use crate::rat::Rat;

/// Errors produced across the crate.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// The pair violates the inequality or integrality constraints of the
    /// admissible parameter set.
    #[error("pair ({0}, {1}) is not in the admissible set S2'")]
    NotInS2(Rat, Rat),

    /// An eta exponent of the quotient is non-integral, so the form is not
    /// on a congruence subgroup.
    #[error("pair ({0}, {1}) has non-integral eta exponents")]
    NotCongruence(Rat, Rat),

    /// A nebentypus evaluation was requested at an argument sharing a factor
    /// with the level.
    #[error("argument {0} is not coprime to the level {1}")]
    BadModulus(i64, i64),

    /// A Hecke operator was requested at a prime dividing the level.
    #[error("prime {0} divides the level {1}")]
    BadPrime(i64, i64),

    /// The stored expansion is too short for the requested operation.
    #[error("series reliable only to {have}, need {need}")]
    InsufficientTruncation { have: i64, need: i64 },

    /// A Hecke image failed to be a scalar multiple of the predicted
    /// conjugate member.
    #[error("T_{p} image of index {j} is not proportional to the predicted member (first mismatch at n={at})")]
    NotProportional { p: i64, j: i64, at: i64 },

    /// The commutation constant varied with the probing index.
    #[error("D({p},{l}) is inconsistent across probing indices")]
    Inconsistent { p: i64, l: i64 },

    /// A combination failed the eigenvector property.
    #[error("not an eigenvector of T_{p}: mismatch at index {j}")]
    NotEigen { p: i64, j: i64 },

    /// The supplied sign map is not a homomorphism to {-1, +1}.
    #[error("the supplied map is not a quadratic character")]
    NotCharacter,

    /// Gamma was evaluated at a non-positive integer.
    #[error("gamma pole at {0}")]
    Pole(Rat),

    /// An argument left the convergence domain of the requested function.
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerically verified identity exceeded its tolerance.
    #[error("identity {name} failed: residual {residual}")]
    IdentityFailed { name: String, residual: String },

    /// The identity's coefficient has a pole at this parameter choice.
    #[error("coefficient pole in {0} at this parameter")]
    PoleInCoefficient(String),

    /// An integration tail bound could not meet the requested tolerance.
    #[error("tail bound unreachable at the configured truncation")]
    TailBound,

    /// Two evaluation routes disagreed beyond their combined error bounds.
    #[error("mismatch between evaluation routes: {0}")]
    Mismatch(String),

    /// A malformed constant-expression tree.
    #[error("malformed constant expression: {0}")]
    MalformedExpr(String),

    /// Rational input could not be parsed.
    #[error("cannot parse rational: {0}")]
    ParseRational(String),

    /// The requested family or label is unknown.
    #[error("unknown family or label: {0}")]
    UnknownFamily(String),
}
