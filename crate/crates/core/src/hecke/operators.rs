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

use crate::qseries::neben_internal::{hecke_recursion, proportional_or_zero};
use crate::qseries::{k2_series, nebentypus, IntQSeries};
use crate::rat::{gcd, is_prime};
use crate::{Error, HDPair};

/// Applies `T_p` in weight 3: `B_n = A_(np) + p^2 chi(p) A_(n/p)` for
/// `n <= n_max`, with `chi` the nebentypus of the pair's space.
pub fn hecke_tp(
    series: &IntQSeries,
    p: i64,
    pair: HDPair,
    n_max: usize,
) -> Result<IntQSeries, Error> {
    let lvl = pair.level()?;
    if gcd(p, lvl) != 1 {
        return Err(Error::BadPrime(p, lvl));
    }
    let need = n_max as i64 * p;
    if (series.n_max() as i64) < need {
        return Err(Error::InsufficientTruncation {
            have: series.n_max() as i64,
            need,
        });
    }
    let chi = nebentypus(pair, p)?;
    Ok(hecke_recursion(series, p, chi, n_max))
}

/// A conjugate family indexed by the residues of the `r`-numerators.
#[derive(Debug, Clone)]
pub struct IndexedFamily {
    pub b: i64,
    pub members: std::collections::BTreeMap<i64, HDPair>,
    pub level: i64,
}

impl IndexedFamily {
    /// Indexes a family by residue `a mod b` of each member's `r`-numerator.
    /// Requires pairwise distinct residues (a Galois-style family).
    pub fn new(family: &[HDPair]) -> Result<Self, Error> {
        let b = family
            .first()
            .ok_or_else(|| Error::UnknownFamily("empty family".into()))?
            .b();
        let mut members = std::collections::BTreeMap::new();
        for &p in family {
            if p.b() != b {
                return Err(Error::UnknownFamily(format!(
                    "mixed denominators {b} and {} in one family",
                    p.b()
                )));
            }
            if members.insert(p.a().rem_euclid(b), p).is_some() {
                return Err(Error::UnknownFamily(
                    "repeated residue; family is not Galois".into(),
                ));
            }
        }
        let level = family[0].level()?;
        Ok(Self { b, members, level })
    }

    pub fn residues(&self) -> Vec<i64> {
        self.members.keys().copied().collect()
    }

    pub fn member(&self, i: i64) -> Option<HDPair> {
        self.members.get(&i.rem_euclid(self.b)).copied()
    }

    /// Smallest prime congruent to `i` modulo `b` and coprime to the level.
    pub fn probe_prime(&self, i: i64) -> i64 {
        let mut p = i.rem_euclid(self.b);
        if p == 0 {
            p = self.b;
        }
        loop {
            if is_prime(p) && gcd(p, self.level) == 1 {
                return p;
            }
            p += self.b;
        }
    }
}

/// Outcome of a Hecke-permutation probe: `T_p K_j = c * K_k`.
#[derive(Debug, Clone, Serialize)]
pub struct HeckeConstant {
    pub p: i64,
    pub j: i64,
    pub k: i64,
    /// Integer constant `C(p, j)`; zero exactly when the image vanishes
    /// (the CM case where the target residue is outside the family).
    pub c: i64,
    /// Number of nonzero coefficient matches backing the proportionality.
    pub hits: usize,
}

fn count_hits(img: &IntQSeries, target: &IntQSeries, n_max: usize) -> usize {
    (1..=n_max)
        .filter(|&n| img.coeff(n) != 0 && target.coeff(n) != 0)
        .count()
}

/// The constant `C(p, j)` with `T_p K_j = C(p,j) K_k`, `k = [p j] mod b`,
/// verified by exact proportionality over at least `min_hits` nonzero
/// coefficients (truncation grows automatically until enough nonzero
/// coefficients are seen).
pub fn hecke_constant(
    fam: &IndexedFamily,
    p: i64,
    j: i64,
    min_hits: usize,
) -> Result<HeckeConstant, Error> {
    if gcd(p, fam.level) != 1 {
        return Err(Error::BadPrime(p, fam.level));
    }
    let b = fam.b;
    let i = p.rem_euclid(b);
    let k = (i * j).rem_euclid(b);
    let from = fam
        .member(j)
        .ok_or_else(|| Error::UnknownFamily(format!("no member with residue {j}")))?;
    let mut n_max = (2 * min_hits as i64 * b).max(48) as usize;
    for _attempt in 0..4 {
        let series = k2_series(from, n_max * p as usize)?;
        let img = hecke_tp(&series, p, from, n_max)?;
        let target = match fam.member(k) {
            Some(t) => k2_series(t, n_max)?,
            None => {
                // Residue absent from the family: the image must vanish
                // (CM annihilation), giving C = 0.
                if img.is_zero() {
                    return Ok(HeckeConstant { p, j, k, c: 0, hits: 0 });
                }
                return Err(Error::NotProportional { p, j, at: 0 });
            }
        };
        match proportional_or_zero(&img, &target, n_max, min_hits) {
            Ok(c) => {
                let c = if c.is_integer() {
                    c.numer().to_i64().expect("Hecke constant fits i64")
                } else {
                    return Err(Error::NotProportional { p, j, at: 0 });
                };
                let hits = count_hits(&img, &target, n_max);
                return Ok(HeckeConstant { p, j, k, c, hits });
            }
            Err(-1) => n_max *= 2, // not enough nonzero matches yet
            Err(at) => return Err(Error::NotProportional { p, j, at }),
        }
    }
    Err(Error::InsufficientTruncation {
        have: n_max as i64,
        need: 0,
    })
}

/// The commutation constant `D(p, l)` of `T_l T_p = D(p,l) T_[pl]`,
/// computed as `C(l,j) C(p,[jl]) / C([pl], j)` and verified independent of
/// the probing index `j` across the family. The operator index `[pl]` is
/// realized by its smallest prime representative coprime to the level
/// (the index itself whenever that is prime), and `[pl] = 1` denotes the
/// identity operator.
pub fn d_constant(fam: &IndexedFamily, p: i64, l: i64, min_hits: usize) -> Result<i64, Error> {
    let b = fam.b;
    let pl = (p * l).rem_euclid(b);
    let mut d: Option<rug::Rational> = None;
    for &j in fam.members.keys() {
        let cl = hecke_constant(fam, l, j, min_hits)?;
        let jl = (j * l).rem_euclid(b);
        let cp = hecke_constant(fam, p, jl, min_hits)?;
        let num = Integer::from(cl.c) * Integer::from(cp.c);
        let den = if pl == 1 {
            Integer::from(1)
        } else {
            let q = fam.probe_prime(pl);
            Integer::from(hecke_constant(fam, q, j, min_hits)?.c)
        };
        if den == 0 {
            return Err(Error::Inconsistent { p, l });
        }
        let ratio = rug::Rational::from((num, den));
        match &d {
            None => d = Some(ratio),
            Some(prev) => {
                if *prev != ratio {
                    return Err(Error::Inconsistent { p, l });
                }
            }
        }
    }
    let d = d.ok_or(Error::Inconsistent { p, l })?;
    if !d.is_integer() {
        return Err(Error::Inconsistent { p, l });
    }
    Ok(d.numer().to_i64().expect("D constant fits i64"))
}

/// Exact commutativity check `T_p T_l = T_l T_p` on truncated expansions.
pub fn commute_check(pair: HDPair, p: i64, l: i64, n_max: usize) -> Result<bool, Error> {
    let series = k2_series(pair, n_max * (p * l) as usize)?;
    let tp = hecke_tp(&series, p, pair, n_max * l as usize)?;
    let tl_tp = hecke_tp(&tp, l, pair, n_max)?;
    let tl = hecke_tp(&series, l, pair, n_max * p as usize)?;
    let tp_tl = hecke_tp(&tl, p, pair, n_max)?;
    Ok(tl_tp == tp_tl)
}

/// Report of the exact coefficient sign-pattern comparison between a pair
/// and its Kummer twist.
#[derive(Debug, Clone, Serialize)]
pub struct TwistReport {
    pub pair: HDPair,
    pub partner: HDPair,
    /// Coefficients agree on `n = a (mod N)` and flip on
    /// `n = a + N/2 (mod N)`.
    pub flip_residue: i64,
    pub modulus: i64,
    pub n_checked: usize,
    pub pass: bool,
    pub first_violation: Option<usize>,
}

/// Compares the expansions of a pair and its Kummer twist up to `n_max`:
/// coefficients must agree exactly on `n = a (mod N)` and negate exactly
/// on `n = a + N/2 (mod N)`.
pub fn twist_pair_check(pair: HDPair, n_max: usize) -> Result<TwistReport, Error> {
    let (partner, in_range) = crate::coxeter::kummer_twist_checked(pair);
    if !in_range {
        return Err(Error::Domain(format!(
            "twist of {pair} leaves the modular range"
        )));
    }
    let n = pair.n_scale();
    let a = pair.a().rem_euclid(n);
    let flip = (a + n / 2).rem_euclid(n);
    let s1 = k2_series(pair, n_max)?;
    let s2 = k2_series(partner, n_max)?;
    let mut first_violation = None;
    for idx in 1..=n_max {
        let (x, y) = (s1.coeff(idx), s2.coeff(idx));
        let m = idx as i64 % n;
        let ok = if m == a {
            x == y
        } else if m == flip {
            x == -y
        } else {
            x == 0 && y == 0
        };
        if !ok {
            first_violation = Some(idx);
            break;
        }
    }
    Ok(TwistReport {
        pair,
        partner,
        flip_residue: flip,
        modulus: n,
        n_checked: n_max,
        pass: first_violation.is_none(),
        first_violation,
    })
}
