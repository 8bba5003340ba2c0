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

//! Small exact rationals for parameter arithmetic.

use num_rational::Ratio;
use num_traits::Signed;

use crate::Error;

/// Exact rational parameter type. Always stored reduced with positive
/// denominator (guaranteed by `num_rational`).
pub type Rat = Ratio<i64>;

/// Builds `n/d` as a reduced rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

/// Parses `"a/b"` or `"a"` with exact integer components. Decimal notation
/// is rejected: exactness is the point of the interface.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let bad = || Error::ParseRational(s.to_string());
    let s = s.trim();
    if s.contains('.') {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((a, b)) => {
            let n: i64 = a.trim().parse().map_err(|_| bad())?;
            let d: i64 = b.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: i64 = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
    }
}

/// True when the rational is an integer.
pub fn is_integer(x: Rat) -> bool {
    *x.denom() == 1
}

/// The fractional part in `[0, 1)`.
pub fn frac_part(x: Rat) -> Rat {
    let f = x - x.floor();
    debug_assert!(!f.is_negative() && f < Rat::from_integer(1));
    f
}

/// Lowest common denominator of `1/2`, `r` and `s`; the conjugation modulus.
pub fn lcd_with_half(r: Rat, s: Rat) -> i64 {
    lcm(2, lcm(*r.denom(), *s.denom()))
}

/// Least common multiple of two positive integers.
pub fn lcm(a: i64, b: i64) -> i64 {
    num_integer::lcm(a, b)
}

/// Greatest common divisor.
pub fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

/// Modular inverse of `a` modulo `m` for `gcd(a, m) = 1`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m, a.rem_euclid(m));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(m))
}

/// Kronecker symbol `(a|n)`, extended to all integers.
pub fn kronecker(a: i64, n: i64) -> i32 {
    if n == 0 {
        return if a.unsigned_abs() == 1 { 1 } else { 0 };
    }
    let mut res: i32 = 1;
    let mut n = n;
    if n < 0 {
        if a < 0 {
            res = -res;
        }
        n = -n;
    }
    let mut a = a;
    while n % 2 == 0 {
        n /= 2;
        if a % 2 == 0 {
            return 0;
        }
        match a.rem_euclid(8) {
            3 | 5 => res = -res,
            _ => {}
        }
    }
    // Jacobi on odd n > 0.
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            match n.rem_euclid(8) {
                3 | 5 => res = -res,
                _ => {}
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.rem_euclid(4) == 3 && n.rem_euclid(4) == 3 {
            res = -res;
        }
        a = a.rem_euclid(n);
    }
    if n == 1 {
        res
    } else {
        0
    }
}

/// True for primes (trial division; arguments here stay small).
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_fractions_and_integers() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-5/8").unwrap(), rat(-5, 8));
        assert_eq!(parse_rat("2").unwrap(), rat(2, 1));
        assert_eq!(parse_rat(" 7 / 8 ").unwrap(), rat(7, 8));
    }

    #[test]
    fn parse_rejects_decimals() {
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn kronecker_matches_legendre_on_odd_primes() {
        // (a|7) by Euler's criterion.
        for a in 1..7 {
            let e = {
                let mut x = 1i64;
                for _ in 0..3 {
                    x = (x * a) % 7;
                }
                if x == 1 {
                    1
                } else {
                    -1
                }
            };
            assert_eq!(kronecker(a, 7) as i64, e, "a={a}");
        }
        assert_eq!(kronecker(-2, 7), -1);
        assert_eq!(kronecker(-1, 5), 1);
        assert_eq!(kronecker(2, 7), 1);
        assert_eq!(kronecker(6, 3), 0);
    }

    #[test]
    fn mod_inverse_basics() {
        assert_eq!(mod_inverse(3, 8), Some(3));
        assert_eq!(mod_inverse(5, 24), Some(5));
        assert_eq!(mod_inverse(4, 8), None);
    }
}
