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

use serde::{Deserialize, Serialize};

/// An exact algebraic number of the form `i^delta * k * sqrt(m)` with
/// `k` a positive integer and `m` squarefree positive, or zero.
///
/// Signs fold into the unit power (`i^2 = -1`), radicands are reduced to
/// squarefree form on construction, and the set is closed under
/// multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Surd {
    zero: bool,
    /// Power of `i`, in `0..4`.
    delta: u8,
    /// Positive integer multiplier.
    k: u64,
    /// Squarefree positive radicand.
    m: u64,
}

/// Splits `n > 0` as `g^2 * m` with `m` squarefree; returns `(g, m)`.
fn squarefree_split(mut n: u64) -> (u64, u64) {
    let mut g = 1u64;
    let mut m = 1u64;
    let mut d = 2u64;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        g *= d.pow(e / 2);
        if e % 2 == 1 {
            m *= d;
        }
        d += 1;
    }
    (g, m * n)
}

impl Surd {
    pub fn zero() -> Self {
        Surd { zero: true, delta: 0, k: 0, m: 1 }
    }

    pub fn one() -> Self {
        Surd::integer(1)
    }

    /// An integer as a surd.
    pub fn integer(n: i64) -> Self {
        if n == 0 {
            return Surd::zero();
        }
        Surd {
            zero: false,
            delta: if n < 0 { 2 } else { 0 },
            k: n.unsigned_abs(),
            m: 1,
        }
    }

    /// `c * i^delta * sqrt(m)` canonicalized (e.g. `sqrt(48)` becomes
    /// `4 sqrt(3)`).
    pub fn new(c: i64, delta: u8, m: u64) -> Self {
        if c == 0 {
            return Surd::zero();
        }
        assert!(m > 0, "radicand must be positive");
        let (g, mf) = squarefree_split(m);
        let mut delta = delta % 4;
        if c < 0 {
            delta = (delta + 2) % 4;
        }
        Surd {
            zero: false,
            delta,
            k: c.unsigned_abs() * g,
            m: mf,
        }
    }

    /// Principal square root of a nonzero integer: `sqrt(d)` for `d > 0`,
    /// `i * sqrt(|d|)` for `d < 0`.
    pub fn sqrt_of_int(d: i64) -> Self {
        assert!(d != 0);
        Surd::new(1, if d < 0 { 1 } else { 0 }, d.unsigned_abs())
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    /// `true` when the value is rational (radicand 1 and even unit power).
    pub fn is_rational(&self) -> bool {
        self.zero || (self.m == 1 && self.delta % 2 == 0)
    }

    /// Rational value when `is_rational`.
    pub fn as_integer(&self) -> Option<i64> {
        if self.zero {
            return Some(0);
        }
        if !self.is_rational() {
            return None;
        }
        let sign = if self.delta == 2 { -1 } else { 1 };
        Some(sign * self.k as i64)
    }

    pub fn unit_power(&self) -> u8 {
        self.delta
    }

    pub fn multiplier(&self) -> u64 {
        self.k
    }

    pub fn radicand(&self) -> u64 {
        self.m
    }

    /// Product, re-canonicalized.
    pub fn mul(&self, other: &Surd) -> Surd {
        if self.zero || other.zero {
            return Surd::zero();
        }
        let (g, m) = squarefree_split(self.m * other.m);
        Surd {
            zero: false,
            delta: (self.delta + other.delta) % 4,
            k: self.k * other.k * g,
            m,
        }
    }

    /// Product with an integer.
    pub fn scale(&self, n: i64) -> Surd {
        self.mul(&Surd::integer(n))
    }

    pub fn neg(&self) -> Surd {
        self.scale(-1)
    }

    /// The square, always a rational integer for a surd.
    pub fn square_int(&self) -> i64 {
        let sq = self.mul(self);
        sq.as_integer().expect("square of a surd is rational")
    }

    /// Evaluates as `(re, im)` against `f64` (used by property tests).
    pub fn to_f64(&self) -> (f64, f64) {
        if self.zero {
            return (0.0, 0.0);
        }
        let mag = self.k as f64 * (self.m as f64).sqrt();
        match self.delta {
            0 => (mag, 0.0),
            1 => (0.0, mag),
            2 => (-mag, 0.0),
            _ => (0.0, -mag),
        }
    }
}

impl std::fmt::Display for Surd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.zero {
            return write!(f, "0");
        }
        let sign = if self.delta >= 2 { "-" } else { "" };
        let i = if self.delta % 2 == 1 { "i" } else { "" };
        match (self.k, self.m) {
            (k, 1) => write!(f, "{sign}{k}{i}"),
            (1, m) => write!(f, "{sign}{i}\u{221a}{m}"),
            (k, m) => write!(f, "{sign}{k}{i}\u{221a}{m}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonicalization() {
        // sqrt(48) = 4 sqrt(3)
        let s = Surd::sqrt_of_int(48);
        assert_eq!((s.multiplier(), s.radicand(), s.unit_power()), (4, 3, 0));
        // -8i
        let s = Surd::new(-8, 1, 1);
        assert_eq!((s.multiplier(), s.radicand(), s.unit_power()), (8, 1, 3));
        assert_eq!(s.to_string(), "-8i");
        assert_eq!(Surd::new(-2, 0, 3).to_string(), "-2\u{221a}3");
    }

    #[test]
    fn squares() {
        assert_eq!(Surd::sqrt_of_int(12).square_int(), 12);
        assert_eq!(Surd::sqrt_of_int(-48).square_int(), -48);
        assert_eq!(Surd::new(-8, 1, 1).square_int(), -64);
    }

    proptest! {
        #[test]
        fn product_matches_float_evaluation(
            c1 in -40i64..40, d1 in 0u8..4, m1 in 1u64..60,
            c2 in -40i64..40, d2 in 0u8..4, m2 in 1u64..60,
        ) {
            prop_assume!(c1 != 0 && c2 != 0);
            let a = Surd::new(c1, d1, m1);
            let b = Surd::new(c2, d2, m2);
            let p = a.mul(&b);
            let (ar, ai) = a.to_f64();
            let (br, bi) = b.to_f64();
            let (pr, pi) = p.to_f64();
            let er = ar * br - ai * bi;
            let ei = ar * bi + ai * br;
            prop_assert!((pr - er).abs() <= 1e-9 * (1.0 + er.abs()));
            prop_assert!((pi - ei).abs() <= 1e-9 * (1.0 + ei.abs()));
        }
    }
}
