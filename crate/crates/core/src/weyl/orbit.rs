//! Eulerian polynomials from the orbit of `rho` in the fundamental weight
//! basis. For `x = w(rho)`, `x_i < 0` exactly when `s_i` is a left descent
//! of `w`, so counting negative coordinates over the orbit counts descents.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::dynkin::DynkinDiagram;
use crate::Polynomial;

/// Point of the `rho` orbit, in fundamental weight coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightPoint {
    rank: u8,
    coords: [i8; 16],
}

impl WeightPoint {
    pub fn rho(rank: usize) -> Self {
        assert!(rank <= 16);
        let mut coords = [0; 16];
        coords[..rank].fill(1);
        WeightPoint { rank: rank as u8, coords }
    }

    pub fn coords(&self) -> &[i8] {
        &self.coords[..self.rank as usize]
    }

    pub fn negatives(&self) -> usize {
        self.coords().iter().filter(|&&x| x < 0).count()
    }

    /// `s_i(x)_j = x_j - x_i C_ij`.
    pub fn reflect(&self, i: usize, cartan: &[Vec<i64>]) -> Self {
        let mut out = *self;
        let xi = self.coords[i];
        for j in 0..self.rank as usize {
            out.coords[j] -= xi * cartan[i][j] as i8;
        }
        out
    }

    fn first_negative(&self) -> Option<usize> {
        self.coords().iter().position(|&x| x < 0)
    }
}

/// Descent histogram over the whole group, walking the orbit as a tree: the
/// parent of `x != rho` is `s_j x` for the least `j` with `x_j < 0`.
pub fn eulerian_weight_orbit(d: DynkinDiagram) -> Polynomial {
    let cartan = d.cartan_matrix();
    let n = d.rank();
    let mut hist = vec![0u64; n + 1];
    let mut frontier = vec![WeightPoint::rho(n)];
    while !frontier.is_empty() && frontier.len() < 256 {
        let mut next = Vec::new();
        for x in &frontier {
            hist[x.negatives()] += 1;
            next.extend(children(x, &cartan));
        }
        frontier = next;
    }
    let parts: Vec<Vec<u64>> = frontier
        .par_iter()
        .map(|root| {
            let mut local = vec![0u64; n + 1];
            let mut stack = vec![*root];
            while let Some(x) = stack.pop() {
                local[x.negatives()] += 1;
                stack.extend(children(&x, &cartan));
            }
            local
        })
        .collect();
    for part in parts {
        for (h, c) in hist.iter_mut().zip(part) {
            *h += c;
        }
    }
    Polynomial::new(hist.into_iter().map(BigInt::from).collect())
}

fn children<'a>(x: &'a WeightPoint, cartan: &'a [Vec<i64>]) -> impl Iterator<Item = WeightPoint> + 'a {
    (0..x.rank as usize).filter_map(move |i| {
        if x.coords[i] <= 0 {
            return None;
        }
        let y = x.reflect(i, cartan);
        (y.first_negative() == Some(i)).then_some(y)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::perm;

    #[test]
    fn orbit_matches_permutation_models() {
        for k in 1..=6 {
            assert_eq!(eulerian_weight_orbit(DynkinDiagram::a(k)), perm::eulerian_a_enumerate(k));
        }
        for n in 4..=6 {
            assert_eq!(eulerian_weight_orbit(DynkinDiagram::d(n)), perm::eulerian_d_enumerate(n));
        }
    }

    #[test]
    fn e6_orbit_size_and_symmetry() {
        let p = eulerian_weight_orbit(DynkinDiagram::e(6));
        let total: BigInt = p.coeffs().iter().sum();
        assert_eq!(total, BigInt::from(51840));
        assert!(p.is_palindromic(6));
    }
}
