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
use serde::Serialize;

use crate::qseries::HDPair;
use crate::rat::gcd;
use crate::Error;

/// A truncated power series on the exponent grid `(1/48)Z` with exact
/// integer coefficients.
///
/// `coeffs[j]` is the coefficient of `q^((offset + j*step)/48)`. Every
/// exponent `<= reliable` (in 1/48 units) carries an exact coefficient;
/// nothing is stored beyond the reliable order. Multiplication and
/// inversion propagate the reliable order explicitly, so truncation error
/// can never silently corrupt a coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FracQSeries {
    offset: i64,
    step: i64,
    coeffs: Vec<Integer>,
    reliable: i64,
}

impl FracQSeries {
    /// Builds a series from parts; trims storage to the reliable order.
    pub fn from_parts(offset: i64, step: i64, mut coeffs: Vec<Integer>, reliable: i64) -> Self {
        assert!(step > 0, "step must be positive");
        let max_len = if reliable < offset {
            0
        } else {
            ((reliable - offset) / step + 1) as usize
        };
        coeffs.truncate(max_len);
        Self {
            offset,
            step,
            coeffs,
            reliable,
        }
    }

    /// The constant series `1`, reliable through `reliable`.
    pub fn one(reliable: i64) -> Self {
        Self::from_parts(0, 48, vec![Integer::from(1)], reliable)
    }

    /// Exponent of the first stored term, in 1/48 units.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Exponent of the first stored term as a rational power of `q`.
    pub fn lead_exp(&self) -> crate::Rat {
        crate::Rat::new(self.offset, 48)
    }

    /// Grid step in 1/48 units.
    pub fn step(&self) -> i64 {
        self.step
    }

    /// All exponents `<= reliable` (1/48 units) are exact.
    pub fn reliable(&self) -> i64 {
        self.reliable
    }

    /// Number of stored coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at exponent `e48/48`; zero off-grid or beyond storage.
    pub fn coeff_at(&self, e48: i64) -> Integer {
        if e48 < self.offset || (e48 - self.offset) % self.step != 0 {
            return Integer::new();
        }
        let j = ((e48 - self.offset) / self.step) as usize;
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    /// Iterates `(exponent_in_48ths, coefficient)` over nonzero terms.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Integer)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(move |(j, c)| (self.offset + j as i64 * self.step, c))
    }

    /// Truncated product; the reliable order of the result is
    /// `min(r1 + o2, r2 + o1)`.
    pub fn mul(&self, other: &Self) -> Self {
        let offset = self.offset + other.offset;
        let step = gcd(self.step, other.step);
        let reliable = (self.reliable + other.offset).min(other.reliable + self.offset);
        if reliable < offset {
            return Self::from_parts(offset, step, Vec::new(), reliable);
        }
        let len = ((reliable - offset) / step + 1) as usize;
        let mut out = vec![Integer::new(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            let ea = self.offset + i as i64 * self.step;
            for (j, b) in other.coeffs.iter().enumerate() {
                let e = ea + other.offset + j as i64 * other.step;
                if e > reliable {
                    break;
                }
                if *b == 0 {
                    continue;
                }
                let idx = ((e - offset) / step) as usize;
                out[idx] += (a * b).complete();
            }
        }
        Self::from_parts(offset, step, out, reliable)
    }

    /// Multiplicative inverse. The leading coefficient must be `±1`;
    /// the result is reliable through `reliable - 2*offset`.
    pub fn inverse(&self) -> Self {
        let c0 = self.coeffs.first().expect("inverse of empty series");
        assert!(*c0 == 1 || *c0 == -1, "leading coefficient must be a unit");
        let offset = -self.offset;
        let step = self.step;
        let reliable = self.reliable - 2 * self.offset;
        let len = if reliable < offset {
            0
        } else {
            ((reliable - offset) / step + 1) as usize
        };
        let mut out = vec![Integer::new(); len];
        if len == 0 {
            return Self::from_parts(offset, step, out, reliable);
        }
        out[0] = c0.clone(); // 1/c0 = c0 for a unit
        for k in 1..len {
            // Coefficient of index k: solve sum_{j=0..k} a_j * b_{k-j} = 0.
            let mut s = Integer::new();
            for j in 1..=k {
                if j < self.coeffs.len() && self.coeffs[j] != 0 && out[k - j] != 0 {
                    s += (&self.coeffs[j] * &out[k - j]).complete();
                }
            }
            out[k] = -(s * c0.clone());
        }
        Self::from_parts(offset, step, out, reliable)
    }

    /// Integer power by binary exponentiation; negative exponents invert
    /// first. Reliability flows through the constituent multiplications.
    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return Self::one(self.reliable - self.offset);
        }
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc: Option<Self> = None;
        let mut sq = base;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => sq.clone(),
                    Some(a) => a.mul(&sq),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            sq = sq.mul(&sq);
        }
        acc.unwrap()
    }

    /// Rescales `tau -> (m/48') tau`, i.e. multiplies every exponent by
    /// `m/48`... concretely: exponent `e/48` becomes the integer `e*m/48`.
    /// Errors with `Domain` if any stored exponent fails to become integral.
    pub fn rescale_to_int(&self, m: i64, n_max: usize) -> Result<IntQSeries, Error> {
        let mut coeffs = vec![Integer::new(); n_max + 1];
        let reliable_n = self.reliable * m / 48;
        if (reliable_n as usize) < n_max {
            return Err(Error::InsufficientTruncation {
                have: reliable_n,
                need: n_max as i64,
            });
        }
        for (e48, c) in self.iter() {
            let num = e48 * m;
            if num % 48 != 0 {
                return Err(Error::Domain(format!(
                    "exponent {e48}/48 does not rescale integrally by {m}"
                )));
            }
            let n = num / 48;
            if n < 0 {
                return Err(Error::Domain("negative exponent after rescaling".into()));
            }
            if (n as usize) <= n_max {
                coeffs[n as usize] = c.clone();
            }
        }
        Ok(IntQSeries { coeffs })
    }
}

use rug::Complete;

/// An integer-exponent expansion `sum a_n q^n`, `n = 0..=n_max`, all
/// stored coefficients exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntQSeries {
    coeffs: Vec<Integer>,
}

impl IntQSeries {
    pub fn from_coeffs(coeffs: Vec<Integer>) -> Self {
        Self { coeffs }
    }

    /// The zero series reliable through `n_max`.
    pub fn zero(n_max: usize) -> Self {
        Self {
            coeffs: vec![Integer::new(); n_max + 1],
        }
    }

    /// Largest reliable index.
    pub fn n_max(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient `a_n` (zero beyond storage).
    pub fn coeff(&self, n: usize) -> Integer {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, n: usize) -> Option<&Integer> {
        self.coeffs.get(n)
    }

    /// Iterates `(n, a_n)` over nonzero terms.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Integer)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }

    /// Serializes to the exchange schema: coefficients as decimal strings.
    pub fn to_json(&self, pair: HDPair) -> serde_json::Value {
        let coeffs: Vec<(usize, String)> =
            self.iter().map(|(n, c)| (n, c.to_string())).collect();
        serde_json::json!({
            "pair": [*pair.r().numer(), *pair.r().denom(), *pair.s().numer(), *pair.s().denom()],
            "N": pair.n_scale(),
            "level": super::level(pair),
            "coeffs": coeffs,
        })
    }
}

/// Serde view of the exchange schema (used by the CLI round-trip tests).
#[derive(Debug, Serialize, serde::Deserialize)]
pub struct SeriesJson {
    pub pair: [i64; 4],
    #[serde(rename = "N")]
    pub n: i64,
    pub level: i64,
    pub coeffs: Vec<(usize, String)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn mul_tracks_reliability() {
        // (1 - q) * (1 + q + q^2 + ...) with the right factor reliable to q^2
        let a = FracQSeries::from_parts(0, 48, ints(&[1, -1]), 96);
        let b = FracQSeries::from_parts(0, 48, ints(&[1, 1, 1]), 96);
        let p = a.mul(&b);
        assert_eq!(p.reliable(), 96);
        assert_eq!(p.coeff_at(0), 1);
        assert_eq!(p.coeff_at(48), 0);
        assert_eq!(p.coeff_at(96), 0);
    }

    #[test]
    fn inverse_of_geometric() {
        // 1/(1 - q) = 1 + q + q^2 + ...
        let a = FracQSeries::from_parts(0, 48, ints(&[1, -1, 0, 0, 0, 0]), 48 * 5);
        let inv = a.inverse();
        for j in 0..=5 {
            assert_eq!(inv.coeff_at(48 * j), 1, "j={j}");
        }
    }

    #[test]
    fn inverse_reliability_with_positive_offset() {
        // a = q^(1/48) * (1 - q), reliable to 1 + 48*4
        let a = FracQSeries::from_parts(1, 48, ints(&[1, -1, 0, 0, 0]), 1 + 48 * 4);
        let inv = a.inverse();
        assert_eq!(inv.offset(), -1);
        assert_eq!(inv.reliable(), 1 + 48 * 4 - 2);
        let p = a.mul(&inv);
        assert_eq!(p.coeff_at(0), 1);
        for e in 1..=p.reliable() {
            assert_eq!(p.coeff_at(e), 0, "e={e}");
        }
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = FracQSeries::from_parts(2, 24, ints(&[1, 3, -2, 1, 0, 5]), 2 + 24 * 5);
        let p3 = a.pow(3);
        let q3 = a.mul(&a).mul(&a);
        assert_eq!(p3, q3);
    }

    #[test]
    fn negative_pow_cancels() {
        let a = FracQSeries::from_parts(2, 24, ints(&[1, 3, -2, 1, 0, 5, 7, -1, 2, 0, 1]), 2 + 24 * 10);
        let m = a.pow(3).mul(&a.pow(-3));
        assert_eq!(m.coeff_at(0), 1);
        for e in 1..=m.reliable() {
            assert_eq!(m.coeff_at(e), 0, "e={e}");
        }
    }
}
