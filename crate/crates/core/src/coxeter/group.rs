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

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::rat::Rat;
use crate::HDPair;

/// Generator letters of the parameter-space symmetry group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Gen {
    /// Atkin–Lehner involution `(r,s) -> (s-r, s)`.
    A,
    /// Kummer transformation `(r,s) -> (1-r, 1/2-r+s)`.
    K,
}

/// A five-component parameter vector `(a, b, c, d, e)`; built from a pair
/// as `(1/2, 1/2, r, 1, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperVector(pub [Rat; 5]);

impl HyperVector {
    pub fn from_pair(p: HDPair) -> Self {
        let half = Rat::new(1, 2);
        HyperVector([half, half, p.r(), Rat::from_integer(1), p.s()])
    }

    /// Lossless inverse of `from_pair` when `a = b = 1/2`, `d = 1`.
    pub fn to_pair(&self) -> Option<HDPair> {
        let half = Rat::new(1, 2);
        if self.0[0] == half && self.0[1] == half && self.0[3] == Rat::from_integer(1) {
            Some(HDPair::new(self.0[2], self.0[4]))
        } else {
            None
        }
    }
}

/// A 5x5 integer matrix acting on parameter vectors, together with the
/// generator word that produced it (empty for the identity).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    mat: [[i64; 5]; 5],
    word: Vec<Gen>,
}

const IDENTITY: [[i64; 5]; 5] = [
    [1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1],
];

// A sends (a,b,c,d,e) to (a,b,e-c,d,e).
const MAT_A: [[i64; 5]; 5] = [
    [1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0],
    [0, 0, -1, 0, 1],
    [0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1],
];

// K sends (a,b,c,d,e) to (a, d-b, d-c, d, d+e-b-c).
const MAT_K: [[i64; 5]; 5] = [
    [1, 0, 0, 0, 0],
    [0, -1, 0, 1, 0],
    [0, 0, -1, 1, 0],
    [0, 0, 0, 1, 0],
    [0, -1, -1, 1, 1],
];

fn mat_mul(x: &[[i64; 5]; 5], y: &[[i64; 5]; 5]) -> [[i64; 5]; 5] {
    let mut out = [[0i64; 5]; 5];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..5).map(|k| x[i][k] * y[k][j]).sum();
        }
    }
    out
}

impl GroupElement {
    pub fn identity() -> Self {
        Self {
            mat: IDENTITY,
            word: Vec::new(),
        }
    }

    pub fn generator(g: Gen) -> Self {
        Self {
            mat: match g {
                Gen::A => MAT_A,
                Gen::K => MAT_K,
            },
            word: vec![g],
        }
    }

    pub fn matrix(&self) -> &[[i64; 5]; 5] {
        &self.mat
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    /// Matrix product `self * other`; as an action, `other` applies first.
    pub fn compose(&self, other: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Self {
            mat: mat_mul(&self.mat, &other.mat),
            word,
        }
    }

    /// Applies the matrix to a parameter vector.
    pub fn apply(&self, v: &HyperVector) -> HyperVector {
        let mut out = [Rat::from_integer(0); 5];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = Rat::from_integer(0);
            for k in 0..5 {
                acc += Rat::from_integer(self.mat[i][k]) * v.0[k];
            }
            *slot = acc;
        }
        HyperVector(out)
    }

    /// Applies the element to a pair through the vector embedding.
    pub fn apply_pair(&self, p: HDPair) -> HDPair {
        self.apply(&HyperVector::from_pair(p))
            .to_pair()
            .expect("group preserves the (1/2,1/2,*,1,*) slice")
    }

    pub fn is_identity(&self) -> bool {
        self.mat == IDENTITY
    }

    /// Multiplicative order of the element.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        for k in 1..=12 {
            if acc.is_identity() {
                return k;
            }
            acc = acc.compose(self);
        }
        // Order divides 12 in this group; unreachable for valid elements.
        unreachable!("element order exceeds group bound")
    }
}

/// Word-to-matrix: the product of generator matrices, reading left to
/// right; the identity for the empty word. As an action on pairs the
/// rightmost letter applies first.
pub fn matrix_of(word: &[Gen]) -> GroupElement {
    word.iter()
        .fold(GroupElement::identity(), |acc, &g| {
            acc.compose(&GroupElement::generator(g))
        })
}

/// Closure of `{A, K}` under multiplication: the full dihedral group of
/// order 12.
pub fn generate_group() -> Vec<GroupElement> {
    let gens = [GroupElement::generator(Gen::A), GroupElement::generator(Gen::K)];
    let mut seen: HashSet<[[i64; 5]; 5]> = HashSet::new();
    let mut out = vec![GroupElement::identity()];
    seen.insert(IDENTITY);
    let mut frontier = out.clone();
    while let Some(e) = frontier.pop() {
        for g in &gens {
            let next = e.compose(g);
            if seen.insert(next.mat) {
                out.push(next.clone());
                frontier.push(next);
            }
        }
    }
    out.sort_by(|x, y| x.word.len().cmp(&y.word.len()).then(x.mat.cmp(&y.mat)));
    out
}

/// The coset representative `M1 = AKA`.
pub fn m1() -> GroupElement {
    matrix_of(&[Gen::A, Gen::K, Gen::A])
}

/// The coset representative `M2 = KAK`.
pub fn m2() -> GroupElement {
    matrix_of(&[Gen::K, Gen::A, Gen::K])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_involutions() {
        for g in [Gen::A, Gen::K] {
            let e = GroupElement::generator(g);
            assert!(e.compose(&e).is_identity());
        }
        assert!(matrix_of(&[Gen::A, Gen::A]).is_identity());
    }

    #[test]
    fn ak_has_order_six() {
        assert_eq!(matrix_of(&[Gen::A, Gen::K]).order(), 6);
    }

    #[test]
    fn group_has_order_twelve_with_dihedral_spectrum() {
        let g = generate_group();
        assert_eq!(g.len(), 12);
        let mut orders: Vec<usize> = g.iter().map(|e| e.order()).collect();
        orders.sort_unstable();
        // D6: identity, 7 involutions, two elements each of orders 3 and 6.
        assert_eq!(orders, vec![1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 6, 6]);
    }

    #[test]
    fn k_matrix_matches_reference() {
        assert_eq!(
            *GroupElement::generator(Gen::K).matrix(),
            [
                [1, 0, 0, 0, 0],
                [0, -1, 0, 1, 0],
                [0, 0, -1, 1, 0],
                [0, 0, 0, 1, 0],
                [0, -1, -1, 1, 1]
            ]
        );
        assert_eq!(
            *matrix_of(&[Gen::A, Gen::K]).matrix(),
            [
                [1, 0, 0, 0, 0],
                [0, -1, 0, 1, 0],
                [0, -1, 0, 0, 1],
                [0, 0, 0, 1, 0],
                [0, -1, -1, 1, 1]
            ]
        );
    }

    #[test]
    fn coset_representatives_are_involutions() {
        let m1 = m1();
        let m2 = m2();
        let m1m2 = m1.compose(&m2);
        for e in [&m1, &m2, &m1m2] {
            assert_eq!(e.order(), 2);
        }
        // {I, M1, M2, M1*M2} is a Klein four-group.
        assert_eq!(m1.compose(&m2).matrix(), m2.compose(&m1).matrix());
    }
}
