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

use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;
use rug::Integer;

use crate::qseries::{FracQSeries, HDPair, IntQSeries};
use crate::Error;

/// Sign of the pentagonal-number coefficient of the eta product: the
/// coefficient of `q^(1/24 + k)` is `(-1)^j` when `k = j(3j +- 1)/2`,
/// else zero.
fn pentagonal_sign(k: i64) -> i64 {
    // j(3j-1)/2 = k  =>  24k + 1 = (6j - 1)^2
    let d = 24 * k + 1;
    let r = (d as f64).sqrt() as i64;
    for cand in [r - 1, r, r + 1] {
        if cand >= 0 && cand * cand == d {
            if cand % 6 == 5 {
                // cand = 6j - 1
                let j = (cand + 1) / 6;
                return if j % 2 == 0 { 1 } else { -1 };
            }
            if cand % 6 == 1 {
                // cand = 6j + 1, from j(3j+1)/2 with j -> -j
                let j = (cand - 1) / 6;
                return if j % 2 == 0 { 1 } else { -1 };
            }
        }
    }
    0
}

/// Eta on a rescaled argument as a grid series: `unit = 1` gives
/// `eta(tau/2)` (lead `1/48`), `unit = 2` gives `eta(tau)` (lead `1/24`),
/// `unit = 4` gives `eta(2 tau)` (lead `1/12`). Exact through `reliable`.
fn eta_on_grid(unit: i64, reliable: i64) -> FracQSeries {
    let offset = unit;
    let step = 24 * unit;
    let len = if reliable < offset {
        0
    } else {
        ((reliable - offset) / step + 1) as usize
    };
    let mut coeffs = vec![Integer::new(); len];
    for (k, c) in coeffs.iter_mut().enumerate() {
        *c = Integer::from(pentagonal_sign(k as i64));
    }
    FracQSeries::from_parts(offset, step, coeffs, reliable)
}

/// The Dedekind eta expansion `q^(1/24) prod (1 - q^n)`, exact through
/// exponent `1/24 + truncation`.
pub fn eta_series(truncation: usize) -> FracQSeries {
    eta_on_grid(2, 2 + 48 * truncation as i64)
}

/// Raw eta-quotient expansion with exponents `(e1, e2, e3)` on the factors
/// `eta(tau/2)`, `eta(2 tau)`, `eta(tau)^-1`, exact through grid exponent
/// `target` (1/48 units).
fn eta_quotient(e1: i64, e2: i64, e3: i64, target: i64) -> FracQSeries {
    // Factor offsets in 1/48 units; total lead o1 + o2 + o3.
    let offs = [e1, 4 * e2, -2 * e3];
    let total: i64 = offs.iter().sum();
    let units = [1i64, 4, 2];
    let exps = [e1, e2, -e3];
    let mut factors = Vec::with_capacity(3);
    for i in 0..3 {
        if exps[i] == 0 {
            continue;
        }
        // The product is exact below min_i(rel_i + total - offs[i]), so each
        // factor needs rel_i >= target - total + offs[i]. A negative power
        // additionally loses (|e|+1) * base_offset through inversion and
        // binary powering.
        let mut need = target - total + offs[i] + 2 * 24 * units[i];
        if exps[i] < 0 {
            need += (exps[i].abs() + 1) * units[i];
        }
        let base = eta_on_grid(units[i], need.max(units[i]));
        factors.push(base.pow(exps[i]));
    }
    let mut acc = match factors.pop() {
        Some(f) => f,
        None => return FracQSeries::one(target),
    };
    while let Some(f) = factors.pop() {
        acc = acc.mul(&f);
    }
    debug_assert!(acc.reliable() >= target, "reliability shortfall");
    acc
}

/// Raw expansion of the weight-3 quotient
/// `eta(tau/2)^(16s-8r-12) eta(2 tau)^(8r+8s-12) / eta(tau)^(24s-30)`.
///
/// The leading exponent is `r/2` and the grid step is `1/2`; `terms`
/// coefficients are exact.
pub fn k2_raw_series(pair: HDPair, terms: usize) -> Result<FracQSeries, Error> {
    let (e1, e2, e3) = pair.eta_exponents()?;
    pair.require_s2()?;
    let lead = crate::Rat::from_integer(24) * pair.r();
    debug_assert_eq!(*lead.denom(), 1);
    let target = *lead.numer() + 24 * (terms.saturating_sub(1)) as i64;
    Ok(eta_quotient(e1, e2, e3, target))
}

/// Integer-exponent expansion of `K2(r,s)(m tau)` through `q^n_max`.
///
/// Errors when some raw exponent does not become integral under the
/// rescaling, or when the pair is inadmissible.
pub fn k2_scaled_series(pair: HDPair, m: i64, n_max: usize) -> Result<IntQSeries, Error> {
    let (e1, e2, e3) = pair.eta_exponents()?;
    pair.require_s2()?;
    let target = (48 * n_max as i64 + m - 1) / m + 48;
    let raw = eta_quotient(e1, e2, e3, target);
    raw.rescale_to_int(m, n_max)
}

type CacheKey = (HDPair, i64);
static K2_CACHE: Lazy<Mutex<HashMap<CacheKey, IntQSeries>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Integer-exponent expansion of `K2(r,s)(N tau)` with `N = N(r)`.
///
/// For `r = a/b` reduced, the first term is `q^a` and the coefficient at
/// `n` vanishes unless `n = a (mod b)`. Results are memoized per pair, so
/// repeated Hecke sweeps reuse the largest computed truncation.
pub fn k2_series(pair: HDPair, n_max: usize) -> Result<IntQSeries, Error> {
    let n = pair.n_scale();
    {
        let cache = K2_CACHE.lock().unwrap();
        if let Some(hit) = cache.get(&(pair, n)) {
            if hit.n_max() >= n_max {
                let coeffs = (0..=n_max).map(|k| hit.coeff(k)).collect();
                return Ok(IntQSeries::from_coeffs(coeffs));
            }
        }
    }
    let fresh = k2_scaled_series(pair, n, n_max)?;
    let mut cache = K2_CACHE.lock().unwrap();
    let entry = cache.entry((pair, n)).or_insert_with(|| fresh.clone());
    if entry.n_max() < fresh.n_max() {
        *entry = fresh.clone();
    }
    Ok(fresh)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    /// Brute-force oracle: expand `q^(1/24) prod_{n<=T}(1 - q^n)` directly.
    fn eta_bruteforce(t: usize) -> Vec<i64> {
        let mut c = vec![0i64; t + 1];
        c[0] = 1;
        for n in 1..=t {
            for k in (n..=t).rev() {
                let prev = c[k - n];
                c[k] -= prev;
            }
        }
        c
    }

    #[test]
    fn eta_matches_bruteforce_product() {
        let t = 60;
        let oracle = eta_bruteforce(t);
        let eta = eta_series(t);
        assert_eq!(eta.lead_exp(), rat(1, 24));
        for (k, expect) in oracle.iter().enumerate() {
            assert_eq!(
                eta.coeff_at(2 + 48 * k as i64),
                *expect,
                "coefficient at q^(1/24 + {k})"
            );
        }
    }

    #[test]
    fn eta_truncation_one_is_single_euler_factor() {
        let eta = eta_series(1);
        assert_eq!(eta.coeff_at(2), 1);
        assert_eq!(eta.coeff_at(2 + 48), -1);
    }

    #[test]
    fn eta_pentagonal_pattern() {
        // Coefficient of q^(1/24 + 7) is +1 (7 = 5th generalized pentagonal).
        let eta = eta_series(10);
        assert_eq!(eta.coeff_at(2 + 48 * 7), 1);
        // Nonzero exactly at generalized pentagonal offsets.
        let pent: Vec<i64> = (0..=10)
            .filter(|&k| {
                let d = 24 * k + 1;
                let r = (d as f64).sqrt() as i64;
                (r - 1..=r + 1).any(|c| c * c == d && (c % 6 == 1 || c % 6 == 5))
            })
            .collect();
        for k in 0..=10i64 {
            let nz = eta.coeff_at(2 + 48 * k) != 0;
            assert_eq!(nz, pent.contains(&k), "k={k}");
        }
    }

    #[test]
    fn k2_raw_lead_and_step() {
        // (1/2, 1) collapses to eta(tau)^6: lead 1/4, exponents still on
        // the half-integer grid above the lead.
        let s = k2_raw_series(HDPair::from_parts(1, 2, 1, 1), 8).unwrap();
        assert_eq!(s.lead_exp(), rat(1, 4));
        assert_eq!(s.step() % 24, 0);
        let s = k2_raw_series(HDPair::from_parts(1, 8, 5, 8), 8).unwrap();
        assert_eq!(s.lead_exp(), rat(1, 16));
        assert_eq!(s.step(), 24);
    }

    #[test]
    fn k2_quarter_one_matches_reference_expansion() {
        let s = k2_series(HDPair::from_parts(1, 4, 1, 1), 30).unwrap();
        let expect: &[(usize, i64)] = &[
            (1, 1),
            (5, -2),
            (9, -7),
            (13, 14),
            (17, 18),
            (21, -32),
            (25, -21),
            (29, 14),
        ];
        for &(n, c) in expect {
            assert_eq!(s.coeff(n), c, "n={n}");
        }
        for (n, c) in s.iter() {
            assert!(expect.iter().any(|&(m, v)| m == n && *c == v), "stray ({n},{c})");
        }
    }

    #[test]
    fn k2_quarter_three_quarter_matches_reference_expansion() {
        let s = k2_series(HDPair::from_parts(1, 4, 3, 4), 30).unwrap();
        let expect: &[(usize, i64)] = &[
            (1, 1),
            (5, 2),
            (9, -7),
            (13, -14),
            (17, 18),
            (21, 32),
            (25, -21),
            (29, -14),
        ];
        for &(n, c) in expect {
            assert_eq!(s.coeff(n), c, "n={n}");
        }
    }

    #[test]
    fn k2_support_congruence() {
        // (3/4, 5/4): supported on n = 3 (mod 4).
        let s = k2_series(HDPair::from_parts(3, 4, 5, 4), 50).unwrap();
        for (n, _) in s.iter() {
            assert_eq!(n % 4, 3, "n={n}");
        }
    }

    #[test]
    fn rescaling_consistency_sample() {
        // k2_series equals k2_raw_series with every exponent multiplied
        // by N, term by term.
        for pair in [
            HDPair::from_parts(1, 8, 5, 8),
            HDPair::from_parts(1, 12, 11, 12),
            HDPair::from_parts(1, 2, 1, 1),
        ] {
            let n = pair.n_scale();
            let n_max = 120usize;
            let raw = k2_raw_series(pair, 2 * n_max / n as usize + 4).unwrap();
            let int = k2_series(pair, n_max).unwrap();
            for (e48, c) in raw.iter() {
                let scaled = e48 * n;
                if scaled % 48 == 0 && (scaled / 48) as usize <= n_max {
                    assert_eq!(int.coeff((scaled / 48) as usize), *c);
                }
            }
        }
    }

    #[test]
    fn non_member_is_rejected() {
        assert!(matches!(
            k2_raw_series(HDPair::from_parts(1, 2, 3, 1), 4),
            Err(Error::NotInS2(..))
        ));
    }
}
