//! Path algebras of Dynkin quivers: interval modules of type-A quivers, the
//! complex of tau-rigid pairs, and tau-orbits of projectives via the
//! Coxeter transformation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dynkin::DynkinDiagram;
use crate::{Error, Polynomial, Result};

/// Largest total rank accepted by [`tau_rigid_complex`].
pub const COMPLEX_RANK_LIMIT: usize = 8;

/// Quiver on vertices `0..rank` with arrows `(from, to)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedQuiver {
    rank: usize,
    arrows: Vec<(usize, usize)>,
}

impl OrientedQuiver {
    pub fn new(rank: usize, arrows: Vec<(usize, usize)>) -> Self {
        assert!(arrows.iter().all(|&(a, b)| a < rank && b < rank && a != b));
        OrientedQuiver { rank, arrows }
    }

    /// `A_n` from one character per edge, left to right: `+` for
    /// `i -> i+1`, `-` for `i+1 -> i`.
    pub fn type_a(n: usize, orientation: &str) -> Result<Self> {
        if n == 0 || orientation.chars().count() != n - 1 {
            return Err(Error::BadOrientation(orientation.to_string()));
        }
        let arrows = orientation
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '+' => Ok((i, i + 1)),
                '-' => Ok((i + 1, i)),
                _ => Err(Error::BadOrientation(orientation.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(n, arrows))
    }

    /// `1 -> 2 -> ... -> n`.
    pub fn linear_a(n: usize) -> Self {
        Self::type_a(n, &"+".repeat(n.saturating_sub(1))).expect("valid orientation")
    }

    /// All `2^{n-1}` orientations of `A_n`.
    pub fn all_type_a(n: usize) -> Vec<(String, Self)> {
        (0u32..1 << (n - 1))
            .map(|bits| {
                let s: String = (0..n - 1).map(|i| if bits >> i & 1 == 0 { '+' } else { '-' }).collect();
                let q = Self::type_a(n, &s).expect("valid orientation");
                (s, q)
            })
            .collect()
    }

    /// Orientation of a Dynkin diagram in which every edge points from the
    /// smaller to the larger vertex index.
    pub fn from_diagram(d: DynkinDiagram) -> Self {
        Self::new(d.rank(), d.index_edges().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Vertices of `other` are appended after those of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let off = self.rank;
        let mut arrows = self.arrows.clone();
        arrows.extend(other.arrows.iter().map(|&(a, b)| (a + off, b + off)));
        Self::new(self.rank + other.rank, arrows)
    }

    /// Every arrow joins `i` and `i + 1`: a disjoint union of type-A
    /// quivers laid out left to right.
    pub fn is_type_a_forest(&self) -> bool {
        self.arrows.iter().all(|&(a, b)| a.abs_diff(b) == 1)
            && (0..self.rank.saturating_sub(1))
                .all(|i| self.arrows.iter().filter(|&&(a, b)| a.min(b) == i).count() <= 1)
    }

    fn joined(&self, i: usize) -> bool {
        self.arrows.iter().any(|&(a, b)| a.min(b) == i && a.max(b) == i + 1)
    }

    /// Number of paths `a -> b` (0 or 1 on a tree).
    fn reaches(&self, a: usize, b: usize) -> bool {
        let mut seen = vec![false; self.rank];
        let mut stack = vec![a];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            stack.extend(self.arrows.iter().filter(|&&(x, _)| x == v).map(|&(_, y)| y));
        }
        seen[b]
    }

    /// `<a, b> = sum_v a_v b_v - sum_{v -> w} a_v b_w`.
    pub fn euler_form(&self, a: &[i64], b: &[i64]) -> i64 {
        let diag: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        diag - self.arrows.iter().map(|&(v, w)| a[v] * b[w]).sum::<i64>()
    }

    /// Cartan matrix whose column `a` is `dim P(a)`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        (0..n)
            .map(|b| (0..n).map(|a| i64::from(self.reaches(a, b))).collect())
            .collect()
    }
}

/// Thin module supported on the vertex interval `a..=b` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalModule {
    pub a: usize,
    pub b: usize,
}

impl IntervalModule {
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a <= b);
        IntervalModule { a, b }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a <= v && v <= self.b
    }

    pub fn dim(&self) -> usize {
        self.b - self.a + 1
    }

    pub fn dim_vector(&self, rank: usize) -> Vec<i64> {
        (0..rank).map(|v| i64::from(self.contains(v))).collect()
    }

    /// The structure map along `v -> w` is the identity when both ends lie
    /// in the support, and zero otherwise.
    fn arrow_acts(&self, v: usize, w: usize) -> bool {
        self.contains(v) && self.contains(w)
    }
}

/// Every interval of a type-A forest (indecomposables of its path algebra).
pub fn interval_modules(q: &OrientedQuiver) -> Vec<IntervalModule> {
    let mut out = Vec::new();
    for a in 0..q.rank {
        let mut b = a;
        loop {
            out.push(IntervalModule::new(a, b));
            if b + 1 >= q.rank || !q.joined(b) {
                break;
            }
            b += 1;
        }
    }
    out
}

/// Indecomposable projective at `ell` of a type-A forest.
pub fn projective(q: &OrientedQuiver, ell: usize) -> IntervalModule {
    let support: Vec<usize> = (0..q.rank).filter(|&b| q.reaches(ell, b)).collect();
    let m = IntervalModule::new(support[0], *support.last().unwrap());
    assert_eq!(m.dim(), support.len(), "reachable set is an interval");
    m
}

fn rational_rank(mut a: Vec<Vec<BigRational>>) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[r][c];
            for j in c..cols {
                let s = &f * &a[r][j];
                a[i][j] -= s;
            }
        }
        r += 1;
    }
    r
}

/// `dim Hom(m, n)`: one unknown scalar per common support vertex, one
/// commutativity equation per arrow.
pub fn hom_dim(m: &IntervalModule, n: &IntervalModule, q: &OrientedQuiver) -> usize {
    let common: Vec<usize> = (0..q.rank).filter(|&v| m.contains(v) && n.contains(v)).collect();
    if common.is_empty() {
        return 0;
    }
    let col = |v: usize| common.iter().position(|&x| x == v);
    let rows: Vec<Vec<BigRational>> = q
        .arrows
        .iter()
        .map(|&(v, w)| {
            // N_vw f_v - f_w M_vw = 0
            let mut row = vec![BigRational::zero(); common.len()];
            if let (Some(i), true) = (col(v), n.arrow_acts(v, w)) {
                row[i] += BigRational::one();
            }
            if let (Some(j), true) = (col(w), m.arrow_acts(v, w)) {
                row[j] -= BigRational::one();
            }
            row
        })
        .collect();
    common.len() - rational_rank(rows)
}

/// `dim Ext^1(m, n) = dim Hom(m, n) - <dim m, dim n>`.
pub fn ext_dim(m: &IntervalModule, n: &IntervalModule, q: &OrientedQuiver) -> usize {
    let e = q.euler_form(&m.dim_vector(q.rank), &n.dim_vector(q.rank));
    let ext = hom_dim(m, n, q) as i64 - e;
    assert!(ext >= 0, "negative Ext between {m:?} and {n:?}");
    ext as usize
}

/// Vertex of the complex of tau-rigid pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplexVertex {
    Module(IntervalModule),
    /// `P_l[1]`.
    Shifted(usize),
}

impl ComplexVertex {
    pub fn dim(&self) -> usize {
        match self {
            ComplexVertex::Module(m) => m.dim(),
            ComplexVertex::Shifted(_) => 0,
        }
    }
}

/// Flag complex of indecomposable tau-rigid modules and shifted projectives
/// of a hereditary algebra.
#[derive(Clone, Debug)]
pub struct CompatibilityComplex {
    quiver: OrientedQuiver,
    vertices: Vec<ComplexVertex>,
    adjacency: Vec<u128>,
    /// `faces[k]` = number of `k`-element faces.
    faces: Vec<u64>,
    /// `dims[k]` = total module dimension over `k`-element faces.
    dims: Vec<u64>,
    maximal_faces: u64,
}

#[derive(Default)]
struct CliqueStats {
    faces: Vec<u64>,
    dims: Vec<u64>,
    maximal: Vec<u64>,
}

impl CompatibilityComplex {
    pub fn quiver(&self) -> &OrientedQuiver {
        &self.quiver
    }

    pub fn vertices(&self) -> &[ComplexVertex] {
        &self.vertices
    }

    pub fn compatible(&self, i: usize, j: usize) -> bool {
        self.adjacency[i] >> j & 1 == 1
    }

    pub fn face_counts(&self) -> &[u64] {
        &self.faces
    }

    pub fn maximal_face_count(&self) -> u64 {
        self.maximal_faces
    }

    pub fn rank(&self) -> usize {
        self.quiver.rank
    }

    fn cliques(&self, candidates: u128) -> CliqueStats {
        let n = self.vertices.len();
        let mut stats = CliqueStats {
            faces: vec![0; n + 2],
            dims: vec![0; n + 2],
            maximal: vec![0; n + 2],
        };
        self.extend(0, 0, candidates, candidates, &mut stats);
        stats
    }

    // `allowed` = vertices compatible with the whole face; only those above
    // the last chosen index may be added, so each face is visited once.
    fn extend(&self, size: usize, dim: u64, allowed: u128, above: u128, stats: &mut CliqueStats) {
        stats.faces[size] += 1;
        stats.dims[size] += dim;
        if allowed == 0 {
            stats.maximal[size] += 1;
        }
        let mut rest = above;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = allowed & self.adjacency[v];
            self.extend(size + 1, dim + self.vertices[v].dim() as u64, next, next & rest, stats);
        }
    }
}

/// Builds the complex of a type-A forest: modules are compatible when Ext
/// vanishes both ways, `P_l[1]` is compatible with `M` when
/// `Hom(P_l, M) = 0`, and shifted projectives are pairwise compatible.
pub fn tau_rigid_complex(q: &OrientedQuiver) -> Result<CompatibilityComplex> {
    if !q.is_type_a_forest() {
        return Err(Error::NotTypeA);
    }
    if q.rank > COMPLEX_RANK_LIMIT {
        return Err(Error::RankTooLarge { rank: q.rank, limit: COMPLEX_RANK_LIMIT });
    }
    let modules = interval_modules(q);
    let mut vertices: Vec<ComplexVertex> = modules.iter().map(|&m| ComplexVertex::Module(m)).collect();
    vertices.extend((0..q.rank).map(ComplexVertex::Shifted));
    let nv = vertices.len();
    let mut adjacency = vec![0u128; nv];
    for i in 0..nv {
        for j in i + 1..nv {
            let ok = match (vertices[i], vertices[j]) {
                (ComplexVertex::Module(m), ComplexVertex::Module(n)) => {
                    ext_dim(&m, &n, q) == 0 && ext_dim(&n, &m, q) == 0
                }
                (ComplexVertex::Module(m), ComplexVertex::Shifted(l))
                | (ComplexVertex::Shifted(l), ComplexVertex::Module(m)) => {
                    let hom_zero = hom_dim(&projective(q, l), &m, q) == 0;
                    assert_eq!(hom_zero, !m.contains(l));
                    hom_zero
                }
                (ComplexVertex::Shifted(_), ComplexVertex::Shifted(_)) => true,
            };
            if ok {
                adjacency[i] |= 1 << j;
                adjacency[j] |= 1 << i;
            }
        }
    }
    let mut c = CompatibilityComplex {
        quiver: q.clone(),
        vertices,
        adjacency,
        faces: Vec::new(),
        dims: Vec::new(),
        maximal_faces: 0,
    };
    let all = if nv == 128 { u128::MAX } else { (1u128 << nv) - 1 };
    let stats = c.cliques(all);
    if let Some(size) = (0..stats.maximal.len()).find(|&k| stats.maximal[k] > 0 && k != q.rank) {
        return Err(Error::Impure { size, rank: q.rank });
    }
    c.maximal_faces = stats.maximal[q.rank];
    c.faces = stats.faces[..=q.rank].to_vec();
    c.dims = stats.dims[..=q.rank].to_vec();
    Ok(c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyKind {
    F,
    H,
    D,
}

/// f-, h- or d-polynomial read off the faces: `j`-element faces contribute
/// to `t^{n-j}`, counted (f) or weighted by module dimension (d).
pub fn poly_from_complex(c: &CompatibilityComplex, kind: PolyKind) -> Polynomial {
    let n = c.rank();
    let by_exponent = |v: &[u64]| -> Polynomial {
        Polynomial::new((0..=n).map(|e| BigInt::from(v[n - e])).collect())
    };
    match kind {
        PolyKind::F => by_exponent(&c.faces),
        PolyKind::H => by_exponent(&c.faces).substitute_shift(&BigInt::from(-1)),
        PolyKind::D => by_exponent(&c.dims),
    }
}

/// f-polynomial (degree `n - 1`) of the link of a module vertex.
pub fn link_poly(c: &CompatibilityComplex, v: usize) -> Result<Polynomial> {
    if matches!(c.vertices[v], ComplexVertex::Shifted(_)) {
        return Err(Error::NotAModule);
    }
    let stats = c.cliques(c.adjacency[v]);
    let m = c.rank() - 1;
    Ok(Polynomial::new((0..=m).map(|e| BigInt::from(stats.faces[m - e])).collect()))
}

/// `d(B ⊔ C) = d(B) f(C) + f(B) d(C)`, checked on the complex of the
/// disjoint union.
pub fn disjoint_union_d_check(q1: &OrientedQuiver, q2: &OrientedQuiver) -> Result<bool> {
    let joint = tau_rigid_complex(&q1.disjoint_union(q2))?;
    let b = tau_rigid_complex(q1)?;
    let c = tau_rigid_complex(q2)?;
    let lhs = poly_from_complex(&joint, PolyKind::D);
    let rhs = &(&poly_from_complex(&b, PolyKind::D) * &poly_from_complex(&c, PolyKind::F))
        + &(&poly_from_complex(&b, PolyKind::F) * &poly_from_complex(&c, PolyKind::D));
    Ok(lhs == rhs)
}

fn rational_inverse(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().map(|&x| q(x)).chain((0..n).map(|j| q(i64::from(i == j)))).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).expect("invertible");
        a.swap(c, p);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &piv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..2 * n {
                    let s = &f * &a[c][j];
                    a[i][j] -= s;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Inverse Coxeter transformation `Phi^{-1} = -C (C^T)^{-1}`, where `C` has
/// columns `dim P(a)` and `dim tau M = -C^T C^{-1} dim M`.
pub fn inverse_coxeter_matrix(q: &OrientedQuiver) -> Vec<Vec<i64>> {
    let c = q.cartan();
    let n = q.rank;
    let ct: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| c[j][i]).collect()).collect();
    let ct_inv = rational_inverse(&ct);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let s: BigRational = (0..n).map(|k| &ct_inv[k][j] * BigInt::from(c[i][k])).sum();
                    assert!(s.is_integer());
                    -i64::try_from(s.to_integer()).expect("small entries")
                })
                .collect()
        })
        .collect()
}

/// Dimension vectors of `P_l, tau^{-1} P_l, tau^{-2} P_l, ...` up to the
/// last nonzero one.
pub fn tau_orbit(q: &OrientedQuiver, ell: usize) -> Vec<Vec<i64>> {
    let phi_inv = inverse_coxeter_matrix(q);
    let c = q.cartan();
    let mut x: Vec<i64> = (0..q.rank).map(|b| c[b][ell]).collect();
    let mut orbit = Vec::new();
    while x.iter().all(|&v| v >= 0) && x.iter().any(|&v| v > 0) {
        orbit.push(x.clone());
        x = phi_inv.iter().map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum()).collect();
        assert!(orbit.len() <= 64, "tau orbit does not terminate");
    }
    orbit
}

/// `dim_k e_l Pi`, as the total dimension of the preinjective-free tau-orbit
/// of `P_l` in `mod kQ`.
pub fn tau_orbit_dim(q: &OrientedQuiver, ell: usize) -> u64 {
    tau_orbit(q, ell).iter().flatten().map(|&x| x as u64).sum()
}

/// `tau_orbit_dim` at every vertex of a Dynkin diagram, in label order.
pub fn tau_orbit_dims(d: DynkinDiagram) -> Vec<u64> {
    let q = OrientedQuiver::from_diagram(d);
    (0..d.rank()).map(|l| tau_orbit_dim(&q, l)).collect()
}

/// Orbits of all projectives, checked to cover every positive root once.
pub fn orbits_cover_positive_roots(d: DynkinDiagram, q: &OrientedQuiver) -> bool {
    let mut all: Vec<Vec<i64>> = (0..d.rank()).flat_map(|l| tau_orbit(q, l)).collect();
    let total = all.len();
    all.sort();
    all.dedup();
    total == d.positive_root_count() && all.len() == total
}
