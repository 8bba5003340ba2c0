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

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coxeter::conjugate_family;
use crate::hecke::operators::{hecke_constant, IndexedFamily};
use crate::hecke::Surd;
use crate::rat::gcd;
use crate::{Error, HDPair};

/// A Hecke eigenform assembled from a conjugate family:
/// `f = sum_i beta_i K2(i/b, s_i)` with exact surd coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenformSpec {
    /// Family label (`"6.a"`, `"10.b"`, ...).
    pub label: String,
    /// Members keyed by the residue of the `r`-numerator, ascending.
    pub family: Vec<HDPair>,
    /// Coefficient of each member, keyed by residue.
    pub betas: BTreeMap<i64, Surd>,
    /// Newform orbit labels associated with the family.
    pub lmfdb: Vec<String>,
}

impl EigenformSpec {
    /// Denominator `b` of the family's `r`-coordinates.
    pub fn b(&self) -> i64 {
        self.family[0].b()
    }

    pub fn level(&self) -> i64 {
        crate::qseries::level(self.family[0])
    }

    pub fn beta(&self, residue: i64) -> Option<&Surd> {
        self.betas.get(&residue.rem_euclid(self.b()))
    }

    pub fn indexed(&self) -> IndexedFamily {
        IndexedFamily::new(&self.family).expect("spec families are indexed")
    }

    /// Human-readable one-liner in the appendix-table style.
    pub fn pretty(&self) -> String {
        let rep = self.family[0];
        let mut terms = Vec::new();
        for p in &self.family {
            let i = p.a().rem_euclid(p.b());
            let beta = &self.betas[&i];
            terms.push(format!("{} K2({},{})", beta, p.r(), p.s()));
        }
        format!("f({},{}) = {}", rep.r(), rep.s(), terms.join(" + "))
    }

    /// JSON per the exchange schema.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "label": self.label,
            "family": self.family.iter()
                .map(|p| [*p.r().numer(), *p.r().denom(), *p.s().numer(), *p.s().denom()])
                .collect::<Vec<_>>(),
            "betas": self.family.iter().map(|p| {
                let i = p.a().rem_euclid(p.b());
                let b = &self.betas[&i];
                serde_json::json!({
                    "pair": [*p.r().numer(), *p.r().denom(), *p.s().numer(), *p.s().denom()],
                    "unit_power": b.unit_power(),
                    "k": b.multiplier(),
                    "m": b.radicand(),
                })
            }).collect::<Vec<_>>(),
            "lmfdb": self.lmfdb,
        })
    }
}

/// Sign conventions and labels fixed once per family. Signs are relative
/// to the principal square root of the computed `beta^2`.
struct SpecRow {
    label: &'static str,
    rep: (i64, i64, i64, i64),
    signs: &'static [(i64, i64)],
    lmfdb: &'static [&'static str],
}

const SPEC_ROWS: &[SpecRow] = &[
    SpecRow { label: "1.a", rep: (1, 2, 1, 1), signs: &[], lmfdb: &["16.3.c.a"] },
    SpecRow { label: "2.a", rep: (1, 4, 5, 4), signs: &[], lmfdb: &["16.3.c.a"] },
    SpecRow { label: "2.b", rep: (1, 4, 1, 2), signs: &[], lmfdb: &["64.3.c.a"] },
    SpecRow { label: "3.a", rep: (1, 3, 7, 6), signs: &[(2, 1)], lmfdb: &["36.3.d.a", "36.3.d.b"] },
    SpecRow { label: "3.b", rep: (1, 3, 2, 3), signs: &[(2, 1)], lmfdb: &["36.3.d.a", "36.3.d.b"] },
    SpecRow { label: "4.a", rep: (1, 8, 9, 8), signs: &[(3, 1)], lmfdb: &["32.3.d.a"] },
    SpecRow { label: "4.b", rep: (1, 8, 1, 2), signs: &[(3, 1)], lmfdb: &["256.3.c.e"] },
    SpecRow { label: "5.a", rep: (1, 4, 3, 4), signs: &[(3, 1)], lmfdb: &["32.3.c.a"] },
    SpecRow { label: "5.b", rep: (1, 4, 1, 1), signs: &[(3, -1)], lmfdb: &["64.3.c.b"] },
    SpecRow { label: "6.a", rep: (1, 8, 5, 8), signs: &[(3, -1), (5, -1), (7, -1)], lmfdb: &["64.3.d.a"] },
    SpecRow { label: "6.b", rep: (1, 8, 1, 1), signs: &[(3, -1), (5, -1), (7, 1)], lmfdb: &["256.3.c.g"] },
    SpecRow { label: "7.a", rep: (1, 8, 7, 8), signs: &[(3, 1), (5, 1), (7, 1)], lmfdb: &["128.3.d.c"] },
    SpecRow { label: "7.b", rep: (1, 8, 3, 4), signs: &[(3, 1), (5, 1), (7, -1)], lmfdb: &["256.3.c.c", "256.3.c.f"] },
    SpecRow { label: "8.a", rep: (1, 12, 11, 12), signs: &[(5, -1), (7, -1), (11, 1)], lmfdb: &["288.3.g.a", "288.3.g.c"] },
    SpecRow { label: "8.b", rep: (1, 12, 2, 3), signs: &[(5, -1), (7, 1), (11, -1)], lmfdb: &["576.3.g.d", "576.3.g.h"] },
    SpecRow { label: "9.a", rep: (1, 24, 23, 24), signs: &[(5, -1), (7, 1), (11, 1), (13, -1), (17, -1), (19, 1), (23, -1)], lmfdb: &["1152.3.b.i"] },
    SpecRow { label: "9.b", rep: (1, 24, 7, 12), signs: &[(5, -1), (7, 1), (11, 1), (13, -1), (17, 1), (19, 1), (23, 1)], lmfdb: &["2304.3.g.p", "2304.3.g.w"] },
    SpecRow { label: "10.a", rep: (1, 24, 17, 24), signs: &[(5, -1), (7, -1), (11, -1), (13, 1), (17, -1), (19, -1), (23, -1)], lmfdb: &["288.3.b.c"] },
    SpecRow { label: "10.b", rep: (1, 24, 5, 6), signs: &[(5, -1), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, -1)], lmfdb: &["2304.3.g.y"] },
];

fn spec_row_for(rep: HDPair) -> Option<&'static SpecRow> {
    SPEC_ROWS
        .iter()
        .find(|row| HDPair::from_parts(row.rep.0, row.rep.1, row.rep.2, row.rep.3) == rep)
}

/// All family representatives with fixed eigenform data, in label order.
pub fn eigenform_representatives() -> Vec<(String, HDPair)> {
    SPEC_ROWS
        .iter()
        .map(|r| {
            (
                r.label.to_string(),
                HDPair::from_parts(r.rep.0, r.rep.1, r.rep.2, r.rep.3),
            )
        })
        .collect()
}

/// Number of proportionality hits required throughout eigenform assembly.
const MIN_HITS: usize = 32;

/// Assembles the Hecke eigenform of a conjugate family.
///
/// For every residue `i` in the family, `beta_i^2 = C(p,1)/C(p,i)` for any
/// prime `p = i (mod b)`; the sign freedom (one quadratic twist per
/// character of the residue group) is resolved by the fixed per-family
/// convention, and the assembled combination is re-verified as a
/// simultaneous eigenvector before being returned.
pub fn build_eigenform(member: HDPair) -> Result<EigenformSpec, Error> {
    let family = conjugate_family(member)?;
    let fam = IndexedFamily::new(&family)?;
    let rep = family
        .iter()
        .copied()
        .min()
        .expect("nonempty family");
    let row = spec_row_for(rep)
        .ok_or_else(|| Error::UnknownFamily(format!("no fixed eigenform data for {rep}")))?;

    let mut betas: BTreeMap<i64, Surd> = BTreeMap::new();
    betas.insert(1, Surd::one());
    for &i in fam.members.keys() {
        if i == 1 {
            continue;
        }
        let p = fam.probe_prime(i);
        let c1 = hecke_constant(&fam, p, 1, MIN_HITS)?;
        let ci = hecke_constant(&fam, p, i, MIN_HITS)?;
        if ci.c == 0 || c1.c % ci.c != 0 {
            return Err(Error::NotEigen { p, j: i });
        }
        let beta_sq = c1.c / ci.c;
        let sign = row
            .signs
            .iter()
            .find(|(res, _)| *res == i)
            .map(|(_, s)| *s)
            .unwrap_or(1);
        let beta = Surd::sqrt_of_int(beta_sq).scale(sign);
        betas.insert(i, beta);
    }

    let spec = EigenformSpec {
        label: row.label.to_string(),
        family,
        betas,
        lmfdb: row.lmfdb.iter().map(|s| s.to_string()).collect(),
    };
    // Re-verify the assembled combination at every probe prime.
    for &i in fam.members.keys() {
        if i == 1 && fam.members.len() > 1 {
            continue;
        }
        let p = fam.probe_prime(i);
        verify_eigen(&spec, p, MIN_HITS)?;
    }
    Ok(spec)
}

/// Verifies `T_p f = lambda_p f` and returns the eigenvalue.
///
/// The members' ordinary supports are disjoint across residues, so the
/// coefficient-wise eigen property is equivalent to the exact relations
/// `lambda_p beta_j = beta_[pj] C(p, [pj])` for every residue `j`, with
/// each `C` backed by proportionality over at least `min_hits` nonzero
/// coefficients. The eigenvalue satisfies `lambda_p^2 = D(p,p)`.
pub fn verify_eigen(spec: &EigenformSpec, p: i64, min_hits: usize) -> Result<Surd, Error> {
    let fam = spec.indexed();
    if gcd(p, fam.level) != 1 {
        return Err(Error::BadPrime(p, fam.level));
    }
    let b = fam.b;
    let i = p.rem_euclid(b);
    // lambda from the residue-i component: T_p K_i = C(p,i) K_1 gives
    // lambda = beta_i C(p,i); an absent residue class means annihilation.
    let lambda = match spec.betas.get(&i) {
        Some(beta_i) => beta_i.scale(hecke_constant(&fam, p, i, min_hits)?.c),
        None => Surd::zero(),
    };
    // T_p K_j = C(p,j) K_k contributes beta_j C(p,j) to component k, so
    // the eigen property reads lambda beta_k = beta_j C(p,j) for every j.
    for (&j, beta_j) in &spec.betas {
        let hc = hecke_constant(&fam, p, j, min_hits)?;
        let lhs = match spec.betas.get(&hc.k) {
            Some(beta_k) => lambda.mul(beta_k),
            None => Surd::zero(),
        };
        let rhs = beta_j.scale(hc.c);
        if lhs != rhs {
            return Err(Error::NotEigen { p, j });
        }
    }
    Ok(lambda)
}

/// Twists an eigenform by a quadratic character of the residue group:
/// `beta_i -> phi(i) beta_i`. The map must be a homomorphism to `{-1,+1}`;
/// the twisted combination is re-verified before being returned.
pub fn twist_by_quadratic(
    spec: &EigenformSpec,
    character: &BTreeMap<i64, i32>,
) -> Result<EigenformSpec, Error> {
    let b = spec.b();
    let units: Vec<i64> = (1..b).filter(|u| gcd(*u, b) == 1).collect();
    let phi = |u: i64| -> Result<i32, Error> {
        match character.get(&u.rem_euclid(b)) {
            Some(v) if *v == 1 || *v == -1 => Ok(*v),
            _ => Err(Error::NotCharacter),
        }
    };
    if b == 1 {
        return Ok(spec.clone());
    }
    if phi(1)? != 1 {
        return Err(Error::NotCharacter);
    }
    for &u in &units {
        for &v in &units {
            if phi(u)? * phi(v)? != phi(u * v)? {
                return Err(Error::NotCharacter);
            }
        }
    }
    let mut betas = BTreeMap::new();
    for (&i, beta) in &spec.betas {
        betas.insert(i, beta.scale(phi(i)? as i64));
    }
    let twisted = EigenformSpec {
        label: format!("{}*", spec.label),
        family: spec.family.clone(),
        betas,
        lmfdb: spec.lmfdb.clone(),
    };
    let fam = twisted.indexed();
    for &i in fam.members.keys().take(2) {
        let p = fam.probe_prime(i);
        verify_eigen(&twisted, p, MIN_HITS)?;
    }
    Ok(twisted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surd(c: i64, delta: u8, m: u64) -> Surd {
        Surd::new(c, delta, m)
    }

    #[test]
    fn class6_data_side() {
        let spec = build_eigenform(HDPair::from_parts(1, 8, 5, 8)).unwrap();
        assert_eq!(spec.label, "6.a");
        assert_eq!(spec.betas[&1], Surd::one());
        assert_eq!(spec.betas[&3], surd(-2, 0, 3));
        assert_eq!(spec.betas[&5], surd(-4, 1, 3));
        assert_eq!(spec.betas[&7], surd(-8, 1, 1));
    }

    #[test]
    fn class6_kummer_side() {
        let spec = build_eigenform(HDPair::from_parts(1, 8, 1, 1)).unwrap();
        assert_eq!(spec.label, "6.b");
        assert_eq!(spec.betas[&3], surd(-2, 1, 3));
        assert_eq!(spec.betas[&5], surd(-4, 0, 3));
        assert_eq!(spec.betas[&7], surd(8, 1, 1));
    }

    #[test]
    fn class5_and_class3() {
        let spec = build_eigenform(HDPair::from_parts(1, 4, 1, 1)).unwrap();
        assert_eq!(spec.label, "5.b");
        assert_eq!(spec.betas[&3], surd(-4, 1, 1));
        let spec = build_eigenform(HDPair::from_parts(1, 3, 2, 3)).unwrap();
        assert_eq!(spec.label, "3.b");
        assert_eq!(spec.betas[&2], surd(2, 0, 1));
    }

    #[test]
    fn eigenvalues_class6() {
        let spec = build_eigenform(HDPair::from_parts(1, 8, 5, 8)).unwrap();
        let l3 = verify_eigen(&spec, 3, 32).unwrap();
        assert_eq!(l3.square_int(), 12);
        assert_eq!(l3, surd(-2, 0, 3));
        let l5 = verify_eigen(&spec, 5, 32).unwrap();
        assert_eq!(l5.square_int(), -48);
    }

    #[test]
    fn eigenvalue_identity_coset_is_rational() {
        // p = 1 (mod b): lambda_p = C(p,1), a rational integer.
        let spec = build_eigenform(HDPair::from_parts(1, 4, 1, 1)).unwrap();
        let l5 = verify_eigen(&spec, 5, 32).unwrap();
        assert_eq!(l5, Surd::integer(-2));
        let l13 = verify_eigen(&spec, 13, 32).unwrap();
        assert_eq!(l13, Surd::integer(14));
    }

    #[test]
    fn trivial_twist_is_identity() {
        let spec = build_eigenform(HDPair::from_parts(1, 8, 5, 8)).unwrap();
        let chi: BTreeMap<i64, i32> = [(1, 1), (3, 1), (5, 1), (7, 1)].into();
        let t = twist_by_quadratic(&spec, &chi).unwrap();
        assert_eq!(t.betas, spec.betas);
    }

    #[test]
    fn four_distinct_twists_mod_8() {
        let spec = build_eigenform(HDPair::from_parts(1, 8, 5, 8)).unwrap();
        let mut seen = std::collections::HashSet::new();
        for s3 in [1i32, -1] {
            for s5 in [1i32, -1] {
                let chi: BTreeMap<i64, i32> =
                    [(1, 1), (3, s3), (5, s5), (7, s3 * s5)].into();
                let t = twist_by_quadratic(&spec, &chi).unwrap();
                seen.insert(format!("{:?}", t.betas));
            }
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn non_character_is_rejected() {
        let spec = build_eigenform(HDPair::from_parts(1, 8, 5, 8)).unwrap();
        // phi(3) phi(5) != phi(15 mod 8 = 7)
        let chi: BTreeMap<i64, i32> = [(1, 1), (3, -1), (5, 1), (7, 1)].into();
        assert!(matches!(
            twist_by_quadratic(&spec, &chi),
            Err(Error::NotCharacter)
        ));
    }
}
