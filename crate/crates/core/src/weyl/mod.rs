//! W-Eulerian and W-Narayana polynomials of finite simply-laced Weyl groups.

pub mod orbit;
pub mod perm;
pub mod reflection;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::binomial;

use crate::dynkin::{DiagramUnion, DynkinDiagram, Family};
use crate::{Error, Polynomial, Result};

pub use orbit::WeightPoint;
pub use perm::{Permutation, SignedPermutation};
pub use reflection::{ReflectionMatrix, RootSystem};

/// Largest rank handled by the full-group oracles without the E8 opt-in.
pub const ORACLE_RANK_LIMIT: usize = 7;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Allow enumerating all of `W(E_8)`.
    pub enable_e8: bool,
    /// Use brute-force enumeration even where a faster route exists.
    pub oracle: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Eulerian,
    Narayana,
}

fn cache() -> &'static Mutex<HashMap<(Kind, DynkinDiagram), Polynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<(Kind, DynkinDiagram), Polynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn memoized(kind: Kind, d: DynkinDiagram, f: impl FnOnce() -> Result<Polynomial>) -> Result<Polynomial> {
    if let Some(p) = cache().lock().unwrap().get(&(kind, d)) {
        return Ok(p.clone());
    }
    let p = f()?;
    cache().lock().unwrap().insert((kind, d), p.clone());
    Ok(p)
}

fn check_e8(d: DynkinDiagram, opts: &Options, what: &str) -> Result<()> {
    if d.family() == Family::E && d.rank() == 8 && !opts.enable_e8 {
        return Err(Error::FeatureDisabled(format!("{what} of E8")));
    }
    Ok(())
}

/// `Eul(u; t)` with default options.
pub fn eulerian_poly(u: &DiagramUnion) -> Result<Polynomial> {
    eulerian_poly_with(u, &Options::default())
}

/// Product over components of `sum_w t^des(w)`.
pub fn eulerian_poly_with(u: &DiagramUnion, opts: &Options) -> Result<Polynomial> {
    u.components()
        .iter()
        .map(|&d| eulerian_component(d, opts))
        .product()
}

fn eulerian_component(d: DynkinDiagram, opts: &Options) -> Result<Polynomial> {
    check_e8(d, opts, "descent enumeration")?;
    let n = d.rank();
    if opts.oracle {
        return Ok(match d.family() {
            Family::A => perm::eulerian_a_enumerate(n),
            Family::D => perm::eulerian_d_enumerate(n),
            Family::E => orbit::eulerian_weight_orbit(d),
        });
    }
    memoized(Kind::Eulerian, d, || {
        Ok(match d.family() {
            Family::A if n < 16 => perm::eulerian_a_prefix_count(n),
            Family::D if n <= 14 => perm::eulerian_d_prefix_count(n),
            Family::E => orbit::eulerian_weight_orbit(d),
            _ => return Err(Error::RankOutOfRange(format!("descent counting for {d}"))),
        })
    })
}

/// `Nar(A_k; t) = sum_j C(k+1, j) C(k+1, j+1) / (k+1) t^j`.
pub fn narayana_type_a(k: usize) -> Polynomial {
    let m = BigInt::from(k + 1);
    Polynomial::new(
        (0..=k)
            .map(|j| binomial(m.clone(), BigInt::from(j)) * binomial(m.clone(), BigInt::from(j + 1)) / &m)
            .collect(),
    )
}

/// `Cat(u; t)` with default options.
pub fn narayana_poly(u: &DiagramUnion) -> Result<Polynomial> {
    narayana_poly_with(u, &Options::default())
}

/// Product over components of `sum_{w in [id, c]} t^{l_Ab(w)}`.
pub fn narayana_poly_with(u: &DiagramUnion, opts: &Options) -> Result<Polynomial> {
    u.components()
        .iter()
        .map(|&d| {
            if opts.oracle {
                narayana_oracle(d, opts)
            } else if d.family() == Family::A {
                Ok(narayana_type_a(d.rank()))
            } else {
                memoized(Kind::Narayana, d, || Ok(narayana_interval(d, None)))
            }
        })
        .product()
}

/// Level sizes of `[id, c]`, generated upward from the identity by
/// multiplying with reflections. `order` picks the Coxeter element; the
/// default is a bipartite one.
pub fn narayana_interval(d: DynkinDiagram, order: Option<&[usize]>) -> Polynomial {
    let rs = RootSystem::new(d);
    let order = order.map_or_else(|| rs.bipartite_order(), <[usize]>::to_vec);
    let c = rs.coxeter_element(&order);
    Polynomial::new(rs.noncrossing_levels(&c).into_iter().map(BigInt::from).collect())
}

/// `l_Ab(w) = rank(w - I)`.
pub fn absolute_length(m: &ReflectionMatrix) -> usize {
    m.fixed_codim()
}

/// Brute-force `Cat(d; t)`: every group element `w` with
/// `l_Ab(w) + l_Ab(w^{-1} c) = rank` contributes `t^{l_Ab(w)}`.
pub fn narayana_oracle(d: DynkinDiagram, opts: &Options) -> Result<Polynomial> {
    let rs = RootSystem::new(d);
    narayana_oracle_with_order(d, &rs.bipartite_order(), opts)
}

pub fn narayana_oracle_with_order(d: DynkinDiagram, order: &[usize], opts: &Options) -> Result<Polynomial> {
    let n = d.rank();
    if n > ORACLE_RANK_LIMIT {
        if d.family() == Family::E {
            check_e8(d, opts, "absolute-order enumeration")?;
        } else {
            return Err(Error::RankTooLarge { rank: n, limit: ORACLE_RANK_LIMIT });
        }
    }
    let rs = RootSystem::new(d);
    let c = rs.coxeter_element(order);
    let hist = rs.element_histogram(n + 1, |w, winv| {
        let l = absolute_length(w);
        (l + absolute_length(&winv.mul(&c)) == n).then_some(l)
    });
    Ok(Polynomial::new(hist.into_iter().map(BigInt::from).collect()))
}

/// Admissible vertex order for an orientation given as arrows `(from, to)`
/// between vertex indices: sources of each arrow come first.
pub fn admissible_order(rank: usize, arrows: &[(usize, usize)]) -> Vec<usize> {
    let mut indeg = vec![0usize; rank];
    for &(_, b) in arrows {
        indeg[b] += 1;
    }
    let mut ready: Vec<usize> = (0..rank).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(rank);
    while let Some(v) = ready.pop() {
        order.push(v);
        for &(a, b) in arrows {
            if a == v {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.push(b);
                }
            }
        }
    }
    assert_eq!(order.len(), rank, "orientation has a cycle");
    order
}
