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

use once_cell::sync::Lazy;

use crate::qseries::enumerate_s2;
use crate::rat::{gcd, is_integer, Rat};
use crate::{Error, HDPair};

/// Atkin–Lehner action on parameters: `(r, s) -> (s - r, s)`.
pub fn apply_a(p: HDPair) -> HDPair {
    HDPair::new(p.s() - p.r(), p.s())
}

/// Kummer transformation on parameters: `(r, s) -> (1 - r, 1/2 - r + s)`.
pub fn apply_k(p: HDPair) -> HDPair {
    HDPair::new(
        Rat::from_integer(1) - p.r(),
        Rat::new(1, 2) - p.r() + p.s(),
    )
}

/// Kummer twist `(r, s) -> (r, r - s + 3/2)`; equals the action of the
/// word `AKAKA`. The second component `h` always lies in `(r, 3/2)` for
/// admissible input, so the twist stays inside the admissible set.
pub fn kummer_twist(p: HDPair) -> HDPair {
    HDPair::new(p.r(), p.r() - p.s() + Rat::new(3, 2))
}

/// Kummer twist together with the range flag `0 < h < 3/2` for the
/// modular interpretation. The map itself is total.
pub fn kummer_twist_checked(p: HDPair) -> (HDPair, bool) {
    let t = kummer_twist(p);
    let in_range = t.s() > Rat::from_integer(0) && t.s() < Rat::new(3, 2);
    (t, in_range)
}

/// Searches for a conjugation witness: an integer `c` coprime to the
/// common modulus `M` with `r1 - c*r2` and `s1 - c*s2` both integral.
/// Pairs with different moduli are never conjugate.
pub fn are_conjugate(p1: HDPair, p2: HDPair) -> Option<i64> {
    let m = p1.modulus();
    if m != p2.modulus() {
        return None;
    }
    for c in 1..=m {
        if gcd(c, m) != 1 {
            continue;
        }
        let cr = Rat::from_integer(c);
        if is_integer(p1.r() - cr * p2.r()) && is_integer(p1.s() - cr * p2.s()) {
            return Some(c);
        }
    }
    None
}

static S2_PAIRS: Lazy<Vec<HDPair>> =
    Lazy::new(|| enumerate_s2().into_iter().map(|e| e.pair).collect());

/// All admissible pairs (cached enumeration).
pub fn s2_pairs() -> &'static [HDPair] {
    &S2_PAIRS
}

/// All admissible pairs conjugate to `pair`, including the pair itself,
/// sorted lexicographically.
pub fn conjugate_family(pair: HDPair) -> Result<Vec<HDPair>, Error> {
    pair.require_s2()?;
    let mut fam: Vec<HDPair> = s2_pairs()
        .iter()
        .copied()
        .filter(|q| are_conjugate(pair, *q).is_some())
        .collect();
    fam.sort();
    Ok(fam)
}

/// A conjugate family is Galois when its first coordinates are pairwise
/// distinct.
pub fn is_galois(family: &[HDPair]) -> bool {
    let mut rs: Vec<Rat> = family.iter().map(|p| p.r()).collect();
    rs.sort();
    rs.windows(2).all(|w| w[0] != w[1])
}

/// Galois in the sense used for the classification count: pairwise
/// distinct `r` coordinates and no degenerate member.
pub fn is_counted_galois(family: &[HDPair]) -> bool {
    is_galois(family) && family.iter().all(|p| !p.is_degenerate())
}

/// The conjugate member with numerator of `r` equal to one (smallest `s`
/// among candidates, matching the congruence construction that solves
/// `(b-i)c' + c_i = 0 (mod m)`).
pub fn normalize_to_unit_numerator(pair: HDPair) -> Result<HDPair, Error> {
    let fam = conjugate_family(pair)?;
    fam.into_iter()
        .find(|p| *p.r().numer() == 1)
        .ok_or(Error::NotInS2(pair.r(), pair.s()))
}

/// Order of the within-family stabilizer of `pair` in the dihedral group:
/// elements `g` with `g(pair)` conjugate to `pair` (images may leave the
/// admissible set; conjugacy is tested on raw rational pairs).
pub fn stabilizer_order(pair: HDPair) -> usize {
    super::group::generate_group()
        .iter()
        .filter(|g| {
            let img = g.apply_pair(pair);
            img == pair || are_conjugate(pair, img).is_some()
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn p(rn: i64, rd: i64, sn: i64, sd: i64) -> HDPair {
        HDPair::from_parts(rn, rd, sn, sd)
    }

    #[test]
    fn apply_a_reference() {
        assert_eq!(apply_a(p(1, 8, 5, 8)), p(1, 2, 5, 8));
        assert_eq!(apply_a(p(1, 8, 1, 1)), p(7, 8, 1, 1));
        for q in s2_pairs().iter().take(50) {
            assert_eq!(apply_a(apply_a(*q)), *q);
        }
    }

    #[test]
    fn apply_k_reference() {
        assert_eq!(apply_k(p(1, 4, 1, 1)), p(3, 4, 5, 4));
        // K(A(r, 1-r)) = K(1-2r, 1-r) = (2r, r+1/2)
        let r = rat(1, 8);
        let q = apply_a(HDPair::new(r, Rat::from_integer(1) - r));
        assert_eq!(q, HDPair::new(Rat::from_integer(1) - rat(2, 1) * r, Rat::from_integer(1) - r));
        assert_eq!(apply_k(q), HDPair::new(rat(2, 1) * r, r + rat(1, 2)));
        for q in s2_pairs().iter().take(50) {
            assert_eq!(apply_k(apply_k(*q)), *q);
        }
    }

    #[test]
    fn twist_reference() {
        assert_eq!(kummer_twist(p(1, 4, 1, 1)), p(1, 4, 3, 4));
        assert_eq!(kummer_twist(p(1, 8, 5, 8)), p(1, 8, 1, 1));
        for q in s2_pairs() {
            assert_eq!(kummer_twist(kummer_twist(*q)), *q);
        }
    }

    #[test]
    fn twist_equals_akaka_word() {
        use super::super::group::{matrix_of, Gen};
        let w = matrix_of(&[Gen::A, Gen::K, Gen::A, Gen::K, Gen::A]);
        for q in s2_pairs() {
            assert_eq!(w.apply_pair(*q), kummer_twist(*q));
        }
    }

    #[test]
    fn conjugacy_reference() {
        assert_eq!(are_conjugate(p(1, 8, 1, 1), p(3, 8, 1, 1)), Some(3));
        assert_eq!(are_conjugate(p(1, 4, 3, 4), p(1, 4, 3, 4)), Some(1));
        assert!(are_conjugate(p(3, 4, 5, 4), p(1, 4, 3, 4)).is_some());
        assert!(are_conjugate(p(1, 4, 5, 4), p(1, 4, 1, 2)).is_none());
    }

    #[test]
    fn conjugacy_is_an_equivalence() {
        // Symmetry and transitivity over a sample spanning several moduli.
        let sample: Vec<HDPair> = s2_pairs().iter().copied().step_by(3).collect();
        for &a in &sample {
            for &b in &sample {
                let ab = are_conjugate(a, b).is_some();
                let ba = are_conjugate(b, a).is_some();
                assert_eq!(ab, ba, "{a} {b}");
            }
        }
    }

    #[test]
    fn families_reference() {
        let fam = conjugate_family(p(1, 8, 5, 8)).unwrap();
        assert_eq!(
            fam,
            vec![p(1, 8, 5, 8), p(3, 8, 7, 8), p(5, 8, 9, 8), p(7, 8, 11, 8)]
        );
        assert_eq!(conjugate_family(p(1, 2, 1, 1)).unwrap(), vec![p(1, 2, 1, 1)]);
        assert_eq!(
            conjugate_family(p(1, 4, 1, 1)).unwrap(),
            vec![p(1, 4, 1, 1), p(3, 4, 1, 1)]
        );
    }

    #[test]
    fn galois_reference() {
        assert!(is_galois(&conjugate_family(p(1, 8, 5, 8)).unwrap()));
        assert!(!is_galois(&conjugate_family(p(1, 2, 5, 8)).unwrap()));
        assert!(is_galois(&[p(1, 4, 5, 4)]));
    }

    #[test]
    fn unit_numerator_reference() {
        assert_eq!(normalize_to_unit_numerator(p(3, 4, 5, 4)).unwrap(), p(1, 4, 3, 4));
        assert_eq!(normalize_to_unit_numerator(p(1, 8, 1, 1)).unwrap(), p(1, 8, 1, 1));
        assert_eq!(normalize_to_unit_numerator(p(7, 8, 11, 8)).unwrap(), p(1, 8, 5, 8));
    }

    #[test]
    fn stabilizers() {
        assert_eq!(stabilizer_order(p(1, 2, 1, 1)), 12);
        for q in [p(1, 8, 5, 8), p(1, 4, 3, 4), p(1, 4, 5, 4), p(1, 12, 11, 12)] {
            assert_eq!(stabilizer_order(q), 4, "{q}");
        }
    }
}
