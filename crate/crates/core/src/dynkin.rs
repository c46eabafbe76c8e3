//! Simply-laced Dynkin diagrams with explicit vertex labels.
//!
//! Labels follow the usual pictures: `A_n` is the chain `1 - 2 - ... - n`;
//! `D_n` has the two leaves `1` and `-1` attached to `2`, followed by the
//! chain `2 - 3 - ... - (n-1)`; `E_n` is the chain `1 - 2 - 3 - 5 - ... - n`
//! with `4` hanging off `3`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub type Label = i32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

/// A connected simply-laced Dynkin diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinDiagram {
    family: Family,
    rank: usize,
}

impl DynkinDiagram {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(DynkinDiagram { family, rank })
        } else {
            Err(Error::RankOutOfRange(format!("{family:?}{rank}")))
        }
    }

    /// `A_n`; panics if `n == 0`.
    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n).expect("A_n needs n >= 1")
    }

    /// `D_n`; panics if `n < 4`.
    pub fn d(n: usize) -> Self {
        Self::new(Family::D, n).expect("D_n needs n >= 4")
    }

    /// `E_n`; panics unless `n` is 6, 7 or 8.
    pub fn e(n: usize) -> Self {
        Self::new(Family::E, n).expect("E_n needs n in 6..=8")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Vertex labels in canonical index order. For `D_n` this is
    /// `[1, -1, 2, ..., n-1]`.
    pub fn labels(&self) -> Vec<Label> {
        let n = self.rank as Label;
        match self.family {
            Family::A | Family::E => (1..=n).collect(),
            Family::D => [1, -1].into_iter().chain(2..n).collect(),
        }
    }

    pub fn index_of(&self, label: Label) -> Result<usize> {
        self.labels()
            .iter()
            .position(|&l| l == label)
            .ok_or(Error::NotAVertex(label))
    }

    /// Undirected edges as pairs of labels.
    pub fn edges(&self) -> Vec<(Label, Label)> {
        let n = self.rank as Label;
        match self.family {
            Family::A => (1..n).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e = vec![(1, 2), (-1, 2)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
            Family::E => {
                let mut e = vec![(1, 2), (2, 3), (3, 4), (3, 5)];
                e.extend((5..n).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Edges as pairs of canonical indices.
    pub fn index_edges(&self) -> Vec<(usize, usize)> {
        self.edges()
            .into_iter()
            .map(|(a, b)| (self.index_of(a).unwrap(), self.index_of(b).unwrap()))
            .collect()
    }

    /// Symmetric Cartan matrix in canonical index order.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in self.index_edges() {
            c[a][b] = -1;
            c[b][a] = -1;
        }
        c
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            _ => 120,
        }
    }

    /// Connected components left after removing `ell`, classified by shape.
    pub fn delete_vertex(&self, ell: Label) -> Result<DiagramUnion> {
        let skip = self.index_of(ell)?;
        let keep: Vec<usize> = (0..self.rank).filter(|&i| i != skip).collect();
        let edges: Vec<(usize, usize)> = self
            .index_edges()
            .into_iter()
            .filter(|&(a, b)| a != skip && b != skip)
            .collect();
        let components = connected_components(&keep, &edges)
            .into_iter()
            .map(|comp| classify_tree(&comp, &edges))
            .collect();
        Ok(DiagramUnion::new(components))
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseDiagram(s.to_string());
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        DynkinDiagram::new(family, rank)
    }
}

/// Disjoint union of Dynkin diagrams, stored in sorted order so that equal
/// unions compare equal. The empty union is the rank-0 diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramUnion {
    components: Vec<DynkinDiagram>,
}

impl DiagramUnion {
    pub fn new(mut components: Vec<DynkinDiagram>) -> Self {
        components.sort();
        DiagramUnion { components }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn components(&self) -> &[DynkinDiagram] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|d| d.rank).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// `D_k` with the conventions `D_2 = A_1 x A_1` and `D_3 = A_3`.
    /// Panics for `k < 2`.
    pub fn type_d(k: usize) -> Self {
        match k {
            0 | 1 => panic!("D_{k} is not defined"),
            2 => Self::new(vec![DynkinDiagram::a(1), DynkinDiagram::a(1)]),
            3 => Self::new(vec![DynkinDiagram::a(3)]),
            _ => Self::new(vec![DynkinDiagram::d(k)]),
        }
    }

    /// `A_k`, empty for `k == 0`.
    pub fn type_a(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Self::new(vec![DynkinDiagram::a(k)])
        }
    }

    pub fn union(&self, other: &DiagramUnion) -> Self {
        Self::new(self.components.iter().chain(&other.components).copied().collect())
    }
}

impl From<DynkinDiagram> for DiagramUnion {
    fn from(d: DynkinDiagram) -> Self {
        DiagramUnion::new(vec![d])
    }
}

impl fmt::Display for DiagramUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "A0");
        }
        let parts: Vec<String> = self.components.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for DiagramUnion {
    type Err = Error;

    /// `A2xA1xA2`; `A0` and the empty string denote the empty union, and
    /// `D2`, `D3` are read as `A1xA1`, `A3`.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = DiagramUnion::empty();
        for part in s.split(['x', 'X']).map(str::trim).filter(|p| !p.is_empty()) {
            let lower = part.to_ascii_lowercase();
            let piece = match lower.as_str() {
                "a0" => DiagramUnion::empty(),
                "d2" => DiagramUnion::type_d(2),
                "d3" => DiagramUnion::type_d(3),
                _ => part.parse::<DynkinDiagram>()?.into(),
            };
            out = out.union(&piece);
        }
        Ok(out)
    }
}

fn connected_components(vertices: &[usize], edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for &v in vertices {
        if !seen.insert(v) {
            continue;
        }
        let mut comp = vec![v];
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for &(a, b) in edges {
                let y = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if seen.insert(y) {
                    comp.push(y);
                    stack.push(y);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

fn neighbours(v: usize, comp: &[usize], edges: &[(usize, usize)]) -> Vec<usize> {
    edges
        .iter()
        .filter_map(|&(a, b)| match (a == v, b == v) {
            (true, _) => Some(b),
            (_, true) => Some(a),
            _ => None,
        })
        .filter(|w| comp.contains(w))
        .collect()
}

/// Classifies a connected subtree by its shape: paths are type A, a single
/// trivalent vertex with arms `(1, 1, k)` is `D_{k+3}`, and arms `(1, 2, 2)`,
/// `(1, 2, 3)`, `(1, 2, 4)` are `E_6`, `E_7`, `E_8`.
fn classify_tree(comp: &[usize], edges: &[(usize, usize)]) -> DynkinDiagram {
    let inner: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|(a, b)| comp.contains(a) && comp.contains(b))
        .collect();
    assert_eq!(inner.len() + 1, comp.len(), "component is not a tree");
    let degree = |v: usize| neighbours(v, comp, &inner).len();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
    match branch.as_slice() {
        [] => DynkinDiagram::a(comp.len()),
        [centre] if degree(*centre) == 3 => {
            let mut arms: Vec<usize> = neighbours(*centre, comp, &inner)
                .into_iter()
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (*centre, start, 1);
                    loop {
                        let next: Vec<usize> = neighbours(cur, comp, &inner)
                            .into_iter()
                            .filter(|&w| w != prev)
                            .collect();
                        match next.as_slice() {
                            [] => break len,
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => unreachable!("second branch vertex on an arm"),
                        }
                    }
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, k] => DynkinDiagram::d(k + 3),
                [1, 2, 2] => DynkinDiagram::e(6),
                [1, 2, 3] => DynkinDiagram::e(7),
                [1, 2, 4] => DynkinDiagram::e(8),
                other => unreachable!("non-Dynkin arms {other:?}"),
            }
        }
        _ => unreachable!("subdiagram of a Dynkin diagram is not Dynkin"),
    }
}
