//! Reflection representation of a simply-laced Weyl group in root
//! coordinates, absolute length, and the noncrossing interval `[id, c]`.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::dynkin::DynkinDiagram;

pub const MAX_RANK: usize = 12;

/// Square integer matrix of size `rank <= MAX_RANK`, acting on column
/// vectors in the simple-root basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReflectionMatrix {
    n: usize,
    m: [[i32; MAX_RANK]; MAX_RANK],
}

impl std::fmt::Debug for ReflectionMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries((0..self.n).map(|i| &self.m[i][..self.n])).finish()
    }
}

impl ReflectionMatrix {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_RANK, "rank {n} exceeds {MAX_RANK}");
        let mut m = [[0; MAX_RANK]; MAX_RANK];
        for (i, row) in m.iter_mut().enumerate().take(n) {
            row[i] = 1;
        }
        ReflectionMatrix { n, m }
    }

    pub fn from_rows(rows: &[Vec<i32>]) -> Self {
        let mut a = Self::identity(rows.len());
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), rows.len());
            a.m[i][..r.len()].copy_from_slice(r);
        }
        a
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.m[i][j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = ReflectionMatrix { n, m: [[0; MAX_RANK]; MAX_RANK] };
        for i in 0..n {
            for k in 0..n {
                let a = self.m[i][k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.m[i][j] += a * other.m[k][j];
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[i32]) -> Vec<i32> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.m[i][j] * v[j]).sum())
            .collect()
    }

    /// `rank(self - I)`, the codimension of the fixed space.
    pub fn fixed_codim(&self) -> usize {
        let n = self.n;
        let mut a = [[0i64; MAX_RANK]; MAX_RANK];
        for i in 0..n {
            for j in 0..n {
                a[i][j] = i64::from(self.m[i][j]) - i64::from(i == j);
            }
        }
        bareiss_rank(&mut a, n, n)
    }

    /// Column `j` has a negative entry. Columns of Weyl group elements are
    /// roots, so this means `w(alpha_j) < 0`.
    pub fn column_negative(&self, j: usize) -> bool {
        (0..self.n).any(|i| self.m[i][j] < 0)
    }
}

/// Fraction-free Gaussian elimination; returns the rank.
pub fn bareiss_rank(a: &mut [[i64; MAX_RANK]; MAX_RANK], rows: usize, cols: usize) -> usize {
    let mut r = 0;
    let mut prev = 1i64;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        r += 1;
    }
    r
}

/// Simple reflections, positive roots and Cartan matrix of one connected
/// diagram.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub diagram: DynkinDiagram,
    pub cartan: Vec<Vec<i32>>,
    pub positive_roots: Vec<Vec<i32>>,
}

impl RootSystem {
    pub fn new(diagram: DynkinDiagram) -> Self {
        let cartan: Vec<Vec<i32>> = diagram
            .cartan_matrix()
            .into_iter()
            .map(|r| r.into_iter().map(|x| x as i32).collect())
            .collect();
        let n = cartan.len();
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut queue: Vec<Vec<i32>> = Vec::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push(e);
        }
        let mut k = 0;
        while k < queue.len() {
            let beta = queue[k].clone();
            k += 1;
            for i in 0..n {
                let pairing: i32 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                if pairing >= 0 {
                    continue;
                }
                let mut next = beta.clone();
                next[i] -= pairing;
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        queue.sort_by_key(|b| (b.iter().sum::<i32>(), b.clone()));
        RootSystem { diagram, cartan, positive_roots: queue }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `s_beta(x) = x - (beta, x) beta` with `(alpha_i, alpha_j) = C_ij`.
    pub fn reflection(&self, beta: &[i32]) -> ReflectionMatrix {
        let n = self.rank();
        let cb: Vec<i32> = (0..n).map(|j| (0..n).map(|i| beta[i] * self.cartan[i][j]).sum()).collect();
        let mut m = ReflectionMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                m.m[i][j] -= beta[i] * cb[j];
            }
        }
        m
    }

    pub fn simple_reflection(&self, i: usize) -> ReflectionMatrix {
        let mut e = vec![0; self.rank()];
        e[i] = 1;
        self.reflection(&e)
    }

    pub fn reflections(&self) -> Vec<ReflectionMatrix> {
        self.positive_roots.iter().map(|b| self.reflection(b)).collect()
    }

    /// Bipartite order: one colour class of the (bipartite) diagram first.
    pub fn bipartite_order(&self) -> Vec<usize> {
        let n = self.rank();
        let mut colour = vec![usize::MAX; n];
        colour[0] = 0;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if self.cartan[v][w] < 0 && colour[w] == usize::MAX {
                    colour[w] = 1 - colour[v];
                    stack.push(w);
                }
            }
        }
        let mut order: Vec<usize> = (0..n).filter(|&i| colour[i] == 0).collect();
        order.extend((0..n).filter(|&i| colour[i] == 1));
        order
    }

    /// `c = s_{o_1} s_{o_2} ... s_{o_n}` for a permutation `o` of the
    /// vertex indices.
    pub fn coxeter_element(&self, order: &[usize]) -> ReflectionMatrix {
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        assert!(sorted == (0..self.rank()).collect::<Vec<_>>(), "not a vertex ordering");
        order
            .iter()
            .fold(ReflectionMatrix::identity(self.rank()), |acc, &i| acc.mul(&self.simple_reflection(i)))
    }

    /// Visits every group element `w` together with `w^{-1}`, using the tree
    /// in which the parent of `w != id` is `w s_j` for the least right
    /// descent `j`.
    pub fn for_each_element(&self, mut f: impl FnMut(&ReflectionMatrix, &ReflectionMatrix)) {
        let id = ReflectionMatrix::identity(self.rank());
        self.descend(&id, &id, &mut f);
    }

    /// Histogram of `f` over the group. Subtrees of the element tree are
    /// processed in parallel and merged.
    pub fn element_histogram<F>(&self, bins: usize, f: F) -> Vec<u64>
    where
        F: Fn(&ReflectionMatrix, &ReflectionMatrix) -> Option<usize> + Sync,
    {
        let id = ReflectionMatrix::identity(self.rank());
        let mut hist = vec![0u64; bins];
        let mut frontier = vec![(id, id)];
        // split the top of the tree until there is enough work to share
        while !frontier.is_empty() && frontier.len() < 256 {
            let mut next = Vec::new();
            for (w, winv) in &frontier {
                if let Some(b) = f(w, winv) {
                    hist[b] += 1;
                }
                next.extend(self.children(w, winv));
            }
            frontier = next;
        }
        let parts: Vec<Vec<u64>> = frontier
            .par_iter()
            .map(|(w, winv)| {
                let mut local = vec![0u64; bins];
                self.descend(w, winv, &mut |a, b| {
                    if let Some(k) = f(a, b) {
                        local[k] += 1;
                    }
                });
                local
            })
            .collect();
        for part in parts {
            for (h, x) in hist.iter_mut().zip(part) {
                *h += x;
            }
        }
        hist
    }

    fn children(&self, w: &ReflectionMatrix, winv: &ReflectionMatrix) -> Vec<(ReflectionMatrix, ReflectionMatrix)> {
        let n = self.rank();
        let mut out = Vec::new();
        for i in 0..n {
            if w.column_negative(i) {
                continue;
            }
            // w s_i: column i negated, column j gains -C_ij * column i
            let mut child = *w;
            for j in 0..n {
                let c = self.cartan[i][j];
                for r in 0..n {
                    child.m[r][j] -= c * w.m[r][i];
                }
            }
            if (0..i).any(|j| child.column_negative(j)) {
                continue;
            }
            // s_i w^{-1}: row i replaced by row_i - sum_j C_ij row_j
            let mut child_inv = *winv;
            for j in 0..n {
                let c = self.cartan[i][j];
                if c == 0 {
                    continue;
                }
                for col in 0..n {
                    child_inv.m[i][col] -= c * winv.m[j][col];
                }
            }
            out.push((child, child_inv));
        }
        out
    }

    fn descend(
        &self,
        w: &ReflectionMatrix,
        winv: &ReflectionMatrix,
        f: &mut impl FnMut(&ReflectionMatrix, &ReflectionMatrix),
    ) {
        f(w, winv);
        for (child, child_inv) in self.children(w, winv) {
            self.descend(&child, &child_inv, f);
        }
    }

    /// Sizes of the absolute-length levels of `[id, c]`, found by walking up
    /// from the identity one reflection at a time.
    pub fn noncrossing_levels(&self, c: &ReflectionMatrix) -> Vec<u64> {
        let n = self.rank();
        let refl = self.reflections();
        let mut level: HashMap<ReflectionMatrix, ReflectionMatrix> = HashMap::new();
        let id = ReflectionMatrix::identity(n);
        level.insert(id, id);
        let mut sizes = vec![1u64];
        for k in 1..=n {
            let mut next: HashMap<ReflectionMatrix, ReflectionMatrix> = HashMap::new();
            for (w, winv) in &level {
                for r in &refl {
                    let wr = w.mul(r);
                    if next.contains_key(&wr) || wr.fixed_codim() != k {
                        continue;
                    }
                    let wr_inv = r.mul(winv);
                    if wr_inv.mul(c).fixed_codim() == n - k {
                        next.insert(wr, wr_inv);
                    }
                }
            }
            sizes.push(next.len() as u64);
            level = next;
        }
        sizes
    }

    /// Absolute length of every element, by breadth-first search over the
    /// Cayley graph generated by all reflections.
    pub fn reflection_distances(&self) -> HashMap<ReflectionMatrix, usize> {
        let refl = self.reflections();
        let id = ReflectionMatrix::identity(self.rank());
        let mut dist = HashMap::from([(id, 0usize)]);
        let mut frontier = vec![id];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for w in &frontier {
                for r in &refl {
                    let wr = w.mul(r);
                    if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(wr) {
                        e.insert(d);
                        next.push(wr);
                    }
                }
            }
            frontier = next;
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn rational_rank(rows: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        let (nr, nc) = (a.len(), a.first().map_or(0, Vec::len));
        let mut r = 0;
        for c in 0..nc {
            let Some(p) = (r..nr).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            for i in r + 1..nr {
                let f = &a[i][c] / &a[r][c];
                for j in c..nc {
                    let s = &f * &a[r][j];
                    a[i][j] -= s;
                }
            }
            r += 1;
        }
        r
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_rational_elimination(
            n in 1usize..7,
            entries in proptest::collection::vec(-3i64..=3, 49),
            zero_rows in proptest::collection::vec(any::<bool>(), 7),
        ) {
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| if zero_rows[i] && i % 2 == 0 { 0 } else { entries[i * 7 + j] }).collect())
                .collect();
            let mut a = [[0i64; MAX_RANK]; MAX_RANK];
            for i in 0..n { for j in 0..n { a[i][j] = rows[i][j]; } }
            prop_assert_eq!(bareiss_rank(&mut a, n, n), rational_rank(&rows));
        }
    }

    #[test]
    fn positive_root_counts() {
        for d in [DynkinDiagram::a(4), DynkinDiagram::d(5), DynkinDiagram::e(6), DynkinDiagram::e(7), DynkinDiagram::e(8)] {
            let rs = RootSystem::new(d);
            assert_eq!(rs.positive_roots.len(), d.positive_root_count(), "{d}");
        }
    }

    #[test]
    fn element_tree_visits_group_once() {
        for (d, order) in [(DynkinDiagram::a(3), 24usize), (DynkinDiagram::d(4), 192), (DynkinDiagram::a(4), 120)] {
            let rs = RootSystem::new(d);
            let mut seen = HashSet::new();
            let id = ReflectionMatrix::identity(rs.rank());
            rs.for_each_element(|w, winv| {
                assert_eq!(w.mul(winv), id);
                assert!(seen.insert(*w));
            });
            assert_eq!(seen.len(), order, "{d}");
        }
    }

    #[test]
    fn fixed_codim_matches_reflection_distance() {
        for d in [DynkinDiagram::a(4), DynkinDiagram::d(4)] {
            let rs = RootSystem::new(d);
            let dist = rs.reflection_distances();
            for (w, l) in &dist {
                assert_eq!(w.fixed_codim(), *l);
            }
        }
    }

    #[test]
    fn coxeter_element_has_full_codim() {
        let rs = RootSystem::new(DynkinDiagram::e(6));
        let c = rs.coxeter_element(&rs.bipartite_order());
        assert_eq!(c.fixed_codim(), 6);
        // Coxeter number 12
        let mut p = ReflectionMatrix::identity(6);
        for k in 1..=12 {
            p = p.mul(&c);
            assert_eq!(p == ReflectionMatrix::identity(6), k == 12);
        }
    }
}
