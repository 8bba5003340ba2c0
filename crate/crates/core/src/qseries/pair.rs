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

use crate::rat::{self, Rat};
use crate::Error;

/// An exact rational parameter pair `(r, s)`.
///
/// The pair indexes an eta quotient of weight 3; membership in the
/// admissible set is decidable from the inequalities `0 < r < s < 3/2`
/// together with the integrality of `24s` and `8(r+s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HDPair {
    r: Rat,
    s: Rat,
}

impl HDPair {
    /// Builds a pair from already-reduced rationals.
    pub fn new(r: Rat, s: Rat) -> Self {
        Self { r, s }
    }

    /// Convenience constructor from numerator/denominator quadruples.
    pub fn from_parts(rn: i64, rd: i64, sn: i64, sd: i64) -> Self {
        Self::new(Rat::new(rn, rd), Rat::new(sn, sd))
    }

    pub fn r(&self) -> Rat {
        self.r
    }

    pub fn s(&self) -> Rat {
        self.s
    }

    /// The lowest common denominator of `1/2`, `r`, `s` — the conjugation
    /// modulus.
    pub fn modulus(&self) -> i64 {
        rat::lcd_with_half(self.r, self.s)
    }

    /// Denominator of `r` in lowest terms.
    pub fn b(&self) -> i64 {
        *self.r.denom()
    }

    /// Numerator of `r` in lowest terms.
    pub fn a(&self) -> i64 {
        *self.r.numer()
    }

    /// The rescaling factor `N = N(r) = 2 * denom(r)`.
    pub fn n_scale(&self) -> i64 {
        n_of(self.r)
    }

    /// The three eta exponents `(16s-8r-12, 8r+8s-12, 24s-30)`.
    ///
    /// Returns `NotCongruence` when any of them is non-integral.
    pub fn eta_exponents(&self) -> Result<(i64, i64, i64), Error> {
        let e1 = Rat::from_integer(16) * self.s - Rat::from_integer(8) * self.r
            - Rat::from_integer(12);
        let e2 = Rat::from_integer(8) * self.r + Rat::from_integer(8) * self.s
            - Rat::from_integer(12);
        let e3 = Rat::from_integer(24) * self.s - Rat::from_integer(30);
        if !(rat::is_integer(e1) && rat::is_integer(e2) && rat::is_integer(e3)) {
            return Err(Error::NotCongruence(self.r, self.s));
        }
        Ok((*e1.numer(), *e2.numer(), *e3.numer()))
    }

    /// Membership in the admissible set: `0 < r < s < 3/2`, `24s` and
    /// `8(r+s)` integral.
    pub fn in_s2(&self) -> bool {
        let zero = Rat::from_integer(0);
        let three_half = Rat::new(3, 2);
        self.r > zero
            && self.r < self.s
            && self.s < three_half
            && rat::is_integer(Rat::from_integer(24) * self.s)
            && rat::is_integer(Rat::from_integer(8) * (self.r + self.s))
    }

    /// Errors unless the pair is admissible.
    pub fn require_s2(&self) -> Result<(), Error> {
        if self.in_s2() {
            Ok(())
        } else {
            Err(Error::NotInS2(self.r, self.s))
        }
    }

    /// Degeneracy of the underlying hypergeometric datum: a top parameter
    /// equals a bottom one exactly when `r` is an integer or `s = 1/2`.
    pub fn is_degenerate(&self) -> bool {
        rat::is_integer(self.r) || self.s == Rat::new(1, 2)
    }

    /// The congruence level `N(r) * N(s-r)`.
    pub fn level(&self) -> Result<i64, Error> {
        self.require_s2()?;
        Ok(level(*self))
    }
}

impl std::fmt::Display for HDPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.r, self.s)
    }
}

/// `N(r) = 48 / gcd(24r, 24)`, the gcd taken over the numerator after
/// clearing denominators. Equals twice the reduced denominator of `r`.
pub fn n_of(r: Rat) -> i64 {
    let x = Rat::from_integer(24) * r;
    let (p, q) = (*x.numer(), *x.denom());
    // gcd(p/q, 24) = gcd(p, 24q) / q
    48 * q / rat::gcd(p.abs(), 24 * q)
}

/// The congruence level `N(r) * N(s - r)` of the rescaled form.
pub fn level(pair: HDPair) -> i64 {
    n_of(pair.r()) * n_of(pair.s() - pair.r())
}

/// One entry of the enumerated parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct S2Entry {
    pub pair: HDPair,
    /// True when the hypergeometric datum degenerates (`r` integral or
    /// `s = 1/2`); six of the 199 pairs.
    pub degenerate: bool,
}

/// Enumerates the full admissible set, sorted lexicographically.
///
/// The list has exactly 199 entries, 193 of them non-degenerate.
pub fn enumerate_s2() -> Vec<S2Entry> {
    let mut out = Vec::new();
    // s = j/24 for j = 1..35; r = x/24 with 0 < x < j and 3 | (x + j).
    for j in 1..36i64 {
        let s = Rat::new(j, 24);
        for x in 1..j {
            if (x + j) % 3 != 0 {
                continue;
            }
            let pair = HDPair::new(Rat::new(x, 24), s);
            debug_assert!(pair.in_s2());
            out.push(S2Entry {
                pair,
                degenerate: pair.is_degenerate(),
            });
        }
    }
    out.sort_by_key(|e| e.pair);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn n_of_reference_values() {
        assert_eq!(n_of(rat(1, 2)), 4);
        assert_eq!(n_of(rat(1, 8)), 16);
        assert_eq!(n_of(rat(1, 1)), 2);
        // Equals twice the reduced denominator on the whole grid.
        for num in 1..48 {
            for den in [1, 2, 3, 4, 6, 8, 12, 24] {
                let r = rat(num, den);
                assert_eq!(n_of(r), 2 * *r.denom());
            }
        }
    }

    #[test]
    fn level_reference_values() {
        assert_eq!(level(HDPair::from_parts(1, 8, 5, 8)), 64);
        assert_eq!(level(HDPair::from_parts(1, 4, 3, 4)), 32);
        assert_eq!(level(HDPair::from_parts(1, 12, 11, 12)), 288);
    }

    #[test]
    fn enumeration_counts() {
        let all = enumerate_s2();
        assert_eq!(all.len(), 199);
        assert_eq!(all.iter().filter(|e| !e.degenerate).count(), 193);
        assert!(all
            .iter()
            .any(|e| e.pair == HDPair::from_parts(1, 2, 1, 1)));
        // The six degenerate pairs are exactly {r integral} U {s = 1/2}.
        let degs: Vec<_> = all.iter().filter(|e| e.degenerate).map(|e| e.pair).collect();
        assert_eq!(degs.len(), 6);
        for d in degs {
            assert!(*d.r().denom() == 1 || d.s() == rat(1, 2));
        }
    }

    #[test]
    fn eta_exponents_are_integral_on_s2() {
        for e in enumerate_s2() {
            let (e1, e2, e3) = e.pair.eta_exponents().unwrap();
            // Weight 3: e1 + e2 - e3 = 6.
            assert_eq!(e1 + e2 - e3, 6);
        }
    }

    #[test]
    fn non_members_are_rejected() {
        assert!(HDPair::from_parts(1, 2, 3, 1).require_s2().is_err());
        assert!(HDPair::from_parts(1, 5, 4, 5).require_s2().is_err());
        assert!(HDPair::from_parts(3, 4, 1, 4).require_s2().is_err());
    }
}
