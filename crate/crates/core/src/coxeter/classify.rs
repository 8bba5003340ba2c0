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

use serde::Serialize;

use crate::coxeter::action::{
    apply_a, apply_k, are_conjugate, conjugate_family, is_counted_galois, is_galois,
    kummer_twist, s2_pairs,
};
use crate::rat::Rat;
use crate::HDPair;

/// Edge colors of the classification graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    AtkinLehner,
    Kummer,
    Conjugate,
}

/// An undirected edge of the classification graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: HDPair,
    pub to: HDPair,
    pub kind: EdgeKind,
}

/// Static row data transcribed from the published class tables.
struct ClassRow {
    label: u32,
    data: (i64, i64, i64, i64),
    lmfdb: &'static [&'static str],
    k_data: (i64, i64, i64, i64),
    k_lmfdb: &'static [&'static str],
    al_k_data: Option<(i64, i64, i64, i64)>,
    cm: bool,
}

const CLASS_ROWS: &[ClassRow] = &[
    ClassRow { label: 1, data: (1, 2, 1, 1), lmfdb: &["16.3.c.a"], k_data: (1, 2, 1, 1), k_lmfdb: &["16.3.c.a"], al_k_data: Some((1, 2, 1, 1)), cm: true },
    ClassRow { label: 2, data: (1, 4, 5, 4), lmfdb: &["16.3.c.a"], k_data: (1, 4, 1, 2), k_lmfdb: &["64.3.c.a"], al_k_data: Some((1, 1, 5, 4)), cm: true },
    ClassRow { label: 3, data: (1, 3, 7, 6), lmfdb: &["36.3.d.a", "36.3.d.b"], k_data: (1, 3, 2, 3), k_lmfdb: &["36.3.d.a", "36.3.d.b"], al_k_data: Some((1, 6, 5, 6)), cm: true },
    ClassRow { label: 4, data: (1, 8, 9, 8), lmfdb: &["32.3.d.a"], k_data: (1, 8, 1, 2), k_lmfdb: &["256.3.c.e"], al_k_data: Some((1, 1, 9, 8)), cm: true },
    ClassRow { label: 5, data: (1, 4, 3, 4), lmfdb: &["32.3.c.a"], k_data: (1, 4, 1, 1), k_lmfdb: &["64.3.c.b"], al_k_data: Some((1, 2, 3, 4)), cm: false },
    ClassRow { label: 6, data: (1, 8, 5, 8), lmfdb: &["64.3.d.a"], k_data: (1, 8, 1, 1), k_lmfdb: &["256.3.c.g"], al_k_data: Some((1, 2, 5, 8)), cm: false },
    ClassRow { label: 7, data: (1, 8, 7, 8), lmfdb: &["128.3.d.c"], k_data: (1, 8, 3, 4), k_lmfdb: &["256.3.c.c", "256.3.c.f"], al_k_data: Some((1, 4, 5, 8)), cm: false },
    ClassRow { label: 8, data: (1, 12, 11, 12), lmfdb: &["288.3.g.a", "288.3.g.c"], k_data: (1, 12, 2, 3), k_lmfdb: &["576.3.g.d", "576.3.g.h"], al_k_data: Some((1, 6, 7, 12)), cm: false },
    ClassRow { label: 9, data: (1, 24, 17, 24), lmfdb: &["288.3.b.c"], k_data: (1, 24, 5, 6), k_lmfdb: &["2304.3.g.y"], al_k_data: Some((2, 3, 17, 24)), cm: false },
    ClassRow { label: 10, data: (1, 24, 23, 24), lmfdb: &["1152.3.b.i"], k_data: (1, 24, 7, 12), k_lmfdb: &["2304.3.g.p", "2304.3.g.w"], al_k_data: Some((1, 12, 13, 24)), cm: false },
    ClassRow { label: 11, data: (1, 6, 4, 3), lmfdb: &["144.3.g.c"], k_data: (1, 6, 1, 3), k_lmfdb: &["144.3.g.c"], al_k_data: None, cm: true },
    ClassRow { label: 12, data: (1, 24, 5, 24), lmfdb: &["576.3.b.b", "576.3.b.c"], k_data: (1, 24, 1, 3), k_lmfdb: &["2304.3.g.t", "2304.3.g.s"], al_k_data: None, cm: true },
    ClassRow { label: 13, data: (1, 12, 17, 12), lmfdb: &["36.3.d.b", "144.3.g.c"], k_data: (1, 12, 1, 6), k_lmfdb: &["576.3.g.c", "576.3.g.f"], al_k_data: None, cm: true },
    ClassRow { label: 14, data: (1, 8, 11, 8), lmfdb: &["128.3.d.a", "128.3.d.b"], k_data: (1, 8, 1, 4), k_lmfdb: &["256.3.c.b", "256.3.c.d"], al_k_data: None, cm: true },
    ClassRow { label: 15, data: (1, 24, 35, 24), lmfdb: &["1152.3.b.b", "1152.3.b.f"], k_data: (1, 24, 1, 12), k_lmfdb: &["2304.3.g.e", "2304.3.g.i"], al_k_data: None, cm: true },
];

fn pair_of(t: (i64, i64, i64, i64)) -> HDPair {
    HDPair::from_parts(t.0, t.1, t.2, t.3)
}

/// One connected component of the classification graph.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyClass {
    pub label: u32,
    /// Table representative of the component.
    pub data: HDPair,
    pub k_data: HDPair,
    pub al_k_data: Option<HDPair>,
    pub lmfdb: Vec<String>,
    pub k_lmfdb: Vec<String>,
    pub cm: bool,
    /// True when the component contains at least one Galois family
    /// (distinct first coordinates, no degenerate member).
    pub galois: bool,
    /// Conjugate families making up the component, each sorted.
    pub families: Vec<Vec<HDPair>>,
    /// Graph edges within the component.
    pub edges: Vec<Edge>,
}

impl FamilyClass {
    /// All member pairs of the component.
    pub fn pairs(&self) -> Vec<HDPair> {
        let mut out: Vec<HDPair> = self.families.iter().flatten().copied().collect();
        out.sort();
        out
    }
}

/// Pair-count tally reconstructing the classification bookkeeping:
/// `galois_class_pairs + non_galois_conjugates + class11 + shifted = 199`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub galois_class_pairs: usize,
    pub non_galois_conjugates: usize,
    pub class11_pairs: usize,
    pub shifted_pairs: usize,
}

impl Tally {
    pub fn total(&self) -> usize {
        self.galois_class_pairs + self.non_galois_conjugates + self.class11_pairs + self.shifted_pairs
    }
}

/// Full classification output.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub classes: Vec<FamilyClass>,
    pub tally: Tally,
    /// Kummer images leaving the admissible set, recorded as dangling
    /// annotations rather than edges.
    pub dangling_kummer: Vec<(HDPair, (Rat, Rat))>,
}

impl Classification {
    /// The Galois families across all classes.
    pub fn galois_families(&self) -> Vec<&Vec<HDPair>> {
        self.classes
            .iter()
            .flat_map(|c| c.families.iter().filter(|f| is_counted_galois(f)))
            .collect()
    }

    /// Number of components containing at least one Galois family.
    pub fn galois_components(&self) -> usize {
        self.classes.iter().filter(|c| c.galois).count()
    }

    pub fn class(&self, label: u32) -> Option<&FamilyClass> {
        self.classes.iter().find(|c| c.label == label)
    }

    /// One-line summary used by the CLI.
    pub fn summary(&self) -> String {
        let all: usize = self.classes.iter().map(|c| c.pairs().len()).sum();
        let nondeg = s2_pairs()
            .iter()
            .filter(|p| !p.is_degenerate())
            .count();
        format!(
            "{} pairs; {} non-degenerate; {} Galois families; {} Galois components",
            all,
            nondeg,
            self.galois_families().len(),
            self.galois_components()
        )
    }

    /// DOT export in the published figure's conventions: Atkin–Lehner
    /// edges red, Kummer edges solid black, conjugacy dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph classification {\n  node [shape=box, fontsize=10];\n");
        let name = |p: &HDPair| format!("\"({},{})\"", p.r(), p.s());
        for class in &self.classes {
            out.push_str(&format!("  subgraph cluster_{} {{\n    label=\"class {}\";\n", class.label, class.label));
            for p in class.pairs() {
                out.push_str(&format!("    {};\n", name(&p)));
            }
            for e in &class.edges {
                let attr = match e.kind {
                    EdgeKind::AtkinLehner => "[color=red]",
                    EdgeKind::Kummer => "[color=black]",
                    EdgeKind::Conjugate => "[style=dashed]",
                };
                out.push_str(&format!("    {} -- {} {attr};\n", name(&e.from), name(&e.to)));
            }
            out.push_str("  }\n");
        }
        out.push_str("}\n");
        out
    }

    /// JSON export mirroring the published table columns.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "classes": self.classes.iter().map(|c| serde_json::json!({
                "label": c.label,
                "data": format!("{},{}", c.data.r(), c.data.s()),
                "k_data": format!("{},{}", c.k_data.r(), c.k_data.s()),
                "al_k_data": c.al_k_data.map(|p| format!("{},{}", p.r(), p.s())),
                "lmfdb": c.lmfdb,
                "k_lmfdb": c.k_lmfdb,
                "cm": c.cm,
                "galois": c.galois,
                "pairs": c.pairs().iter().map(|p| format!("{},{}", p.r(), p.s())).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "tally": {
                "galois_class_pairs": self.tally.galois_class_pairs,
                "non_galois_conjugates": self.tally.non_galois_conjugates,
                "class11_pairs": self.tally.class11_pairs,
                "shifted_pairs": self.tally.shifted_pairs,
                "total": self.tally.total(),
            },
        })
    }
}

/// Partitions the admissible set into connected components under the
/// Atkin–Lehner map, the Kummer transformation, the Kummer twist, and
/// conjugacy; labels components by the published table representatives.
pub fn classify() -> Classification {
    let pairs = s2_pairs();
    let index: HashMap<HDPair, usize> = pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let n = pairs.len();

    // Union-find.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };

    let mut edges: Vec<Edge> = Vec::new();
    let mut dangling: Vec<(HDPair, (Rat, Rat))> = Vec::new();

    // Conjugate families.
    let mut families: Vec<Vec<HDPair>> = Vec::new();
    let mut family_of: HashMap<HDPair, usize> = HashMap::new();
    for &p in pairs {
        if family_of.contains_key(&p) {
            continue;
        }
        let fam = conjugate_family(p).expect("enumerated pair is admissible");
        let id = families.len();
        for &q in &fam {
            family_of.insert(q, id);
            union(&mut parent, index[&p], index[&q]);
        }
        for w in fam.windows(2) {
            edges.push(Edge { from: w[0], to: w[1], kind: EdgeKind::Conjugate });
        }
        families.push(fam);
    }

    // Map edges.
    for &p in pairs {
        let a = apply_a(p);
        if let Some(&j) = index.get(&a) {
            union(&mut parent, index[&p], j);
            if p < a {
                edges.push(Edge { from: p, to: a, kind: EdgeKind::AtkinLehner });
            }
        }
        let t = kummer_twist(p);
        if let Some(&j) = index.get(&t) {
            union(&mut parent, index[&p], j);
            if p < t {
                edges.push(Edge { from: p, to: t, kind: EdgeKind::Kummer });
            }
        }
        let k = apply_k(p);
        match index.get(&k) {
            Some(&j) => {
                union(&mut parent, index[&p], j);
                if p < k {
                    edges.push(Edge { from: p, to: k, kind: EdgeKind::Kummer });
                }
            }
            None => dangling.push((p, (k.r(), k.s()))),
        }
    }

    // Components keyed by root.
    let mut comp_pairs: HashMap<usize, Vec<HDPair>> = HashMap::new();
    for (i, &p) in pairs.iter().enumerate() {
        comp_pairs.entry(find(&mut parent, i)).or_default().push(p);
    }

    // Build labeled classes from the fixture rows.
    let mut classes = Vec::new();
    for row in CLASS_ROWS {
        let rep = pair_of(row.data);
        let root = find(&mut parent, index[&rep]);
        let members = comp_pairs.get(&root).expect("representative enumerated").clone();
        let mut fam_ids: Vec<usize> = members.iter().map(|p| family_of[p]).collect();
        fam_ids.sort_unstable();
        fam_ids.dedup();
        let class_families: Vec<Vec<HDPair>> =
            fam_ids.iter().map(|&id| families[id].clone()).collect();
        let galois = class_families.iter().any(|f| is_counted_galois(f));
        let class_edges: Vec<Edge> = edges
            .iter()
            .copied()
            .filter(|e| members.contains(&e.from))
            .collect();
        classes.push(FamilyClass {
            label: row.label,
            data: rep,
            k_data: pair_of(row.k_data),
            al_k_data: row.al_k_data.map(pair_of),
            lmfdb: row.lmfdb.iter().map(|s| s.to_string()).collect(),
            k_lmfdb: row.k_lmfdb.iter().map(|s| s.to_string()).collect(),
            cm: row.cm,
            galois,
            families: class_families,
            edges: class_edges,
        });
    }
    assert_eq!(
        classes.iter().map(|c| c.pairs().len()).sum::<usize>(),
        pairs.len(),
        "class table representatives must cover every component"
    );

    // Tally in the form of the published count.
    let shifted = |p: &HDPair| {
        let prev = HDPair::new(p.r() - Rat::from_integer(1), p.s() - Rat::from_integer(1));
        prev.in_s2()
    };
    let count_in = |labels: std::ops::RangeInclusive<u32>, f: &dyn Fn(&HDPair) -> bool| {
        classes
            .iter()
            .filter(|c| labels.contains(&c.label))
            .flat_map(|c| c.pairs())
            .filter(|p| f(p))
            .count()
    };
    let tally = Tally {
        galois_class_pairs: count_in(1..=10, &|_| true),
        non_galois_conjugates: count_in(12..=15, &|p| !shifted(p)),
        class11_pairs: count_in(11..=11, &|_| true),
        shifted_pairs: count_in(12..=15, &shifted),
    };

    Classification { classes, tally, dangling_kummer: dangling }
}
