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

use rug::Integer;

use crate::qseries::IntQSeries;
use crate::rat::{gcd, kronecker};
use crate::{Error, HDPair};

/// Quadratic nebentypus of `K2(r,s)(N tau)` on its congruence level,
/// evaluated at `d` coprime to the level.
///
/// Computed by the standard eta-quotient recipe: for a quotient
/// `prod eta(delta tau)^(r_delta)` of odd weight `k`, the character is
/// `d -> ((-1)^k prod delta^(r_delta) | d)` with the product reduced
/// modulo squares. Odd weight makes `chi(-1) = -1` automatic. The value
/// is cross-validated against the Hecke-recursion extraction in tests.
pub fn nebentypus(pair: HDPair, d: i64) -> Result<i32, Error> {
    let lvl = pair.level()?;
    if gcd(d, lvl) != 1 {
        return Err(Error::BadModulus(d, lvl));
    }
    let (e1, e2, e3) = pair.eta_exponents()?;
    let n = pair.n_scale();
    // delta values N/2, 2N, N are all of the form 2^x 3^y; reduce the
    // product of delta^e modulo squares by tracking the 2- and 3-adic
    // valuations mod 2.
    let val2 = |mut m: i64| {
        let mut v = 0i64;
        while m % 2 == 0 {
            m /= 2;
            v += 1;
        }
        v
    };
    let val3 = |mut m: i64| {
        let mut v = 0i64;
        while m % 3 == 0 {
            m /= 3;
            v += 1;
        }
        v
    };
    let deltas = [n / 2, 2 * n, n];
    let exps = [e1, e2, -e3];
    let mut v2 = 0i64;
    let mut v3 = 0i64;
    for (delta, e) in deltas.iter().zip(exps) {
        v2 += e * val2(*delta);
        v3 += e * val3(*delta);
    }
    let sq_free = (1 + (v2.rem_euclid(2))) * (1 + 2 * (v3.rem_euclid(2)));
    // sq_free in {1, 2, 3, 6}; the character is (-sq_free | d).
    Ok(kronecker(-sq_free, d))
}

/// Applies the weight-3 Hecke recursion `B_n = A_(np) + p^2 chi A_(n/p)`
/// to a stored expansion, for `n <= n_max`.
pub(crate) fn hecke_recursion(series: &IntQSeries, p: i64, chi: i32, n_max: usize) -> IntQSeries {
    let p2chi = Integer::from(p * p * chi as i64);
    let mut out = vec![Integer::new(); n_max + 1];
    for (n, slot) in out.iter_mut().enumerate().skip(1) {
        let mut b = series.coeff(n * p as usize);
        if n % p as usize == 0 {
            b += (&p2chi * &series.coeff(n / p as usize)).complete();
        }
        *slot = b;
    }
    IntQSeries::from_coeffs(out)
}

use rug::Complete;

/// Decides whether `a = C * b` over indices `1..=n_max`, allowing `C = 0`
/// when `a` vanishes identically. Requires at least `min_hits` nonzero
/// matches. Returns the constant, or `None` with the first mismatch index.
pub(crate) fn proportional_or_zero(
    a: &IntQSeries,
    b: &IntQSeries,
    n_max: usize,
    min_hits: usize,
) -> Result<rug::Rational, i64> {
    if (1..=n_max).all(|n| a.coeff(n) == 0) {
        return Ok(rug::Rational::new());
    }
    let mut c: Option<rug::Rational> = None;
    let mut hits = 0usize;
    for n in 1..=n_max {
        let av = a.coeff(n);
        let bv = b.coeff(n);
        match (av == 0, bv == 0) {
            (true, true) => continue,
            (false, false) => {
                let q = rug::Rational::from((av, bv));
                match &c {
                    None => c = Some(q),
                    Some(prev) => {
                        if *prev != q {
                            return Err(n as i64);
                        }
                    }
                }
                hits += 1;
            }
            _ => return Err(n as i64),
        }
    }
    match c {
        Some(c) if hits >= min_hits => Ok(c),
        _ => Err(-1),
    }
}

/// Extracts the nebentypus value at a prime `p` empirically: the sign
/// `chi` for which the Hecke image of `from` is a scalar multiple of
/// `onto` (or vanishes). Returns all consistent signs; a healthy
/// extraction yields exactly one.
pub fn nebentypus_extracted(
    from: &IntQSeries,
    onto: &IntQSeries,
    p: i64,
    n_max: usize,
    min_hits: usize,
) -> Vec<i32> {
    let mut out = Vec::new();
    for chi in [1i32, -1] {
        let img = hecke_recursion(from, p, chi, n_max);
        if proportional_or_zero(&img, onto, n_max, min_hits).is_ok() {
            out.push(chi);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::k2_series;

    #[test]
    fn trivial_on_one_mod_level() {
        let pair = HDPair::from_parts(1, 4, 1, 1);
        let lvl = crate::qseries::level(pair);
        assert_eq!(nebentypus(pair, 1 + lvl).unwrap(), 1);
        assert_eq!(nebentypus(pair, 1).unwrap(), 1);
    }

    #[test]
    fn odd_character() {
        for pair in [
            HDPair::from_parts(1, 2, 1, 1),
            HDPair::from_parts(1, 8, 5, 8),
            HDPair::from_parts(1, 12, 11, 12),
        ] {
            assert_eq!(nebentypus(pair, -1).unwrap(), -1);
        }
    }

    #[test]
    fn bad_modulus_is_rejected() {
        let pair = HDPair::from_parts(1, 8, 5, 8); // level 64
        assert!(matches!(nebentypus(pair, 6), Err(Error::BadModulus(..))));
    }

    #[test]
    fn extraction_agrees_with_formula_on_singleton() {
        // (1/2,1) is a one-member family: T_p maps it to a multiple of
        // itself, or to zero at the CM-inert primes.
        let pair = HDPair::from_parts(1, 2, 1, 1);
        let n_max = 160usize;
        let s = k2_series(pair, n_max * 13).unwrap();
        for p in [3i64, 5, 7, 11, 13] {
            let got = nebentypus_extracted(&s, &s, p, n_max, 8);
            assert_eq!(got.len(), 1, "p={p}");
            assert_eq!(got[0], nebentypus(pair, p).unwrap(), "p={p}");
        }
    }

    #[test]
    fn complete_multiplicativity_sample() {
        let pair = HDPair::from_parts(1, 8, 5, 8);
        let lvl = crate::qseries::level(pair);
        for d1 in 1..40 {
            for d2 in 1..40 {
                if gcd(d1, lvl) == 1 && gcd(d2, lvl) == 1 {
                    let lhs = nebentypus(pair, d1 * d2).unwrap();
                    let rhs = nebentypus(pair, d1).unwrap() * nebentypus(pair, d2).unwrap();
                    assert_eq!(lhs, rhs, "d1={d1} d2={d2}");
                }
            }
        }
    }
}
