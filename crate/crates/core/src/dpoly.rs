//! d-, f- and h-polynomials of preprojective algebras `Pi(Q)` and path
//! algebras `kQ` of Dynkin type.
//!
//! For a connected diagram the d-polynomial is a sum over vertices `l` of a
//! per-vertex dimension times `Eul(Q_l; t+1)` (preprojective) or
//! `Cat(Q_l; t+1)` (path), where `Q_l` is `Q` with `l` deleted.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::dynkin::{DiagramUnion, DynkinDiagram, Family, Label};
use crate::weyl::{self, Options};
use crate::{lattice, Error, Polynomial, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraFamily {
    Preprojective,
    Path,
}

impl FromStr for AlgebraFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "preprojective" | "ppa" => Ok(AlgebraFamily::Preprojective),
            "path" => Ok(AlgebraFamily::Path),
            _ => Err(Error::ParseDiagram(s.to_string())),
        }
    }
}

impl fmt::Display for AlgebraFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraFamily::Preprojective => "preprojective",
            AlgebraFamily::Path => "path",
        })
    }
}

/// `Pi(Q)` or `kQ` for a (possibly disconnected, possibly empty) Dynkin
/// diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    pub family: AlgebraFamily,
    pub diagram: DiagramUnion,
}

impl AlgebraSpec {
    pub fn new(family: AlgebraFamily, diagram: impl Into<DiagramUnion>) -> Self {
        AlgebraSpec { family, diagram: diagram.into() }
    }

    pub fn preprojective(diagram: impl Into<DiagramUnion>) -> Self {
        Self::new(AlgebraFamily::Preprojective, diagram)
    }

    pub fn path(diagram: impl Into<DiagramUnion>) -> Self {
        Self::new(AlgebraFamily::Path, diagram)
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }
}

/// Per-vertex data for type E, in label order `1..=n`.
pub struct EDimTable;

impl EDimTable {
    /// `Dim([e_l Pi]_s)`: total dimension of the support tau-tilting
    /// summands of `e_l Pi`.
    pub fn stilt_dims(n: usize) -> &'static [u64] {
        match n {
            6 => &[216, 3240, 15120, 792, 3240, 216],
            7 => &[2142, 66528, 483840, 14112, 151200, 19656, 756],
            8 => &[99360, 6289920, 65318400, 1175040, 26611200, 5080320, 383040, 6960],
            _ => panic!("E_{n} does not exist"),
        }
    }

    /// `dim_k e_l Pi`.
    pub fn projective_dims(n: usize) -> &'static [u64] {
        match n {
            6 => &[16, 30, 42, 22, 30, 16],
            7 => &[34, 66, 96, 49, 75, 52, 27],
            8 => &[92, 182, 270, 136, 220, 168, 114, 58],
            _ => panic!("E_{n} does not exist"),
        }
    }
}

fn check_bounds(d: DynkinDiagram) -> Result<()> {
    let ok = match d.family() {
        Family::A => d.rank() <= 15,
        Family::D => d.rank() <= 11,
        Family::E => true,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::RankOutOfRange(format!("{d} is outside the supported ranks (A <= 15, D <= 11)")))
    }
}

/// Per-vertex weight in the d-polynomial formula, at the vertex with index
/// `i` and label `l`.
pub fn vertex_weight(family: AlgebraFamily, d: DynkinDiagram, i: usize) -> BigInt {
    let n = d.rank();
    let l: Label = d.labels()[i];
    match (family, d.family()) {
        (AlgebraFamily::Preprojective, Family::A) => lattice::dim_orbit_ppa_a(n, l as usize).expect("vertex"),
        (AlgebraFamily::Preprojective, Family::D) => lattice::dim_orbit_ppa_d(n, l).expect("vertex"),
        (AlgebraFamily::Preprojective, Family::E) => BigInt::from(EDimTable::stilt_dims(n)[i]),
        (AlgebraFamily::Path, Family::A) => BigInt::from(l as usize * (n - l as usize + 1)),
        (AlgebraFamily::Path, Family::D) => {
            if l.abs() == 1 {
                BigInt::from(n * (n - 1) / 2)
            } else {
                let l = l as usize;
                BigInt::from((n - l) * (n + l - 1))
            }
        }
        (AlgebraFamily::Path, Family::E) => BigInt::from(EDimTable::projective_dims(n)[i]),
    }
}

/// `Eul(u; t)` or `Cat(u; t)`.
fn face_h(family: AlgebraFamily, u: &DiagramUnion, opts: &Options) -> Result<Polynomial> {
    match family {
        AlgebraFamily::Preprojective => weyl::eulerian_poly_with(u, opts),
        AlgebraFamily::Path => weyl::narayana_poly_with(u, opts),
    }
}

fn d_cache() -> &'static Mutex<HashMap<(AlgebraFamily, DynkinDiagram), Polynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<(AlgebraFamily, DynkinDiagram), Polynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn d_connected(family: AlgebraFamily, d: DynkinDiagram) -> Result<Polynomial> {
    check_bounds(d)?;
    if let Some(p) = d_cache().lock().unwrap().get(&(family, d)) {
        return Ok(p.clone());
    }
    let one = BigInt::from(1);
    let mut total = Polynomial::zero();
    for (i, l) in d.labels().into_iter().enumerate() {
        let rest = d.delete_vertex(l)?;
        let h = face_h(family, &rest, &Options::default())?;
        total = &total + &h.substitute_shift(&one).scale(&vertex_weight(family, d, i));
    }
    d_cache().lock().unwrap().insert((family, d), total.clone());
    Ok(total)
}

/// `d(A; t)`. Disjoint unions combine by `d(B x C) = d(B) f(C) + f(B) d(C)`;
/// the empty algebra has `d = 0`.
pub fn d_polynomial(a: &AlgebraSpec) -> Result<Polynomial> {
    if let [c] = a.diagram.components() {
        return d_connected(a.family, *c);
    }
    let mut d = Polynomial::zero();
    let mut f = Polynomial::one();
    for &c in a.diagram.components() {
        let dc = d_connected(a.family, c)?;
        let fc = f_polynomial(&AlgebraSpec::new(a.family, c))?;
        d = &(&d * &fc) + &(&f * &dc);
        f = &f * &fc;
    }
    Ok(d)
}

/// `h(A; t)` with default options.
pub fn h_polynomial(a: &AlgebraSpec) -> Result<Polynomial> {
    h_polynomial_with(a, &Options::default())
}

/// `Eul(Q; t)` for `Pi(Q)`, `Cat(Q; t)` for `kQ`.
pub fn h_polynomial_with(a: &AlgebraSpec, opts: &Options) -> Result<Polynomial> {
    for &c in a.diagram.components() {
        check_bounds(c)?;
    }
    face_h(a.family, &a.diagram, opts)
}

/// `f(t) = h(t + 1)`.
pub fn f_polynomial(a: &AlgebraSpec) -> Result<Polynomial> {
    f_polynomial_with(a, &Options::default())
}

pub fn f_polynomial_with(a: &AlgebraSpec, opts: &Options) -> Result<Polynomial> {
    Ok(h_polynomial_with(a, opts)?.substitute_shift(&BigInt::from(1)))
}

/// `(d_0, d_{n-1})`: the total dimension of indecomposable tau-rigid
/// modules (leading coefficient) and of support tau-tilting modules
/// (constant term).
pub fn aggregate_dims(a: &AlgebraSpec) -> Result<(BigInt, BigInt)> {
    let d = d_polynomial(a)?;
    let n = a.rank();
    if n == 0 {
        return Ok((BigInt::from(0), BigInt::from(0)));
    }
    Ok((d.coeff(n - 1), d.coeff(0)))
}

fn catalan(k: u64) -> BigInt {
    binomial(BigInt::from(2 * k), BigInt::from(k)) / BigInt::from(k + 1)
}

fn factorial(k: u64) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// `((s+t)/s) C(s, t)`.
fn bracket(s: u64, t: u64) -> BigInt {
    BigInt::from(s + t) * binomial(BigInt::from(s), BigInt::from(t)) / BigInt::from(s)
}

/// Closed forms of `(d_0, d_{n-1})` as stated for the connected A and D
/// families. `None` where no closed form is given (type E, preprojective D
/// constant term).
pub fn aggregate_closed_forms(family: AlgebraFamily, d: DynkinDiagram) -> (Option<BigInt>, Option<BigInt>) {
    let n = d.rank() as u64;
    let nb = BigInt::from(n);
    match (family, d.family()) {
        (AlgebraFamily::Preprojective, Family::A) => (
            // n(n+1)2^{n-2}, written as n(n+1)2^n / 4
            Some((BigInt::from(n * (n + 1)) << n) / 4),
            // (1/6)(n+2)! C(n+1, 2)
            Some(factorial(n + 2) * binomial(BigInt::from(n + 1), BigInt::from(2)) / 6),
        ),
        (AlgebraFamily::Path, Family::A) => (
            Some(BigInt::from(n * (n + 1) * (n + 2) / 6)),
            Some((BigInt::from(1) << (2 * (n + 1))) - BigInt::from(n + 2) * catalan(n + 2)),
        ),
        (AlgebraFamily::Path, Family::D) => {
            let stilt = &nb * (n - 1) * catalan(n)
                + (2..n)
                    .map(|l| BigInt::from((n - l) * (n + l - 1)) * catalan(n - l) * bracket(2 * l - 1, l - 1))
                    .sum::<BigInt>();
            (Some(BigInt::from(n * (n + 1) * (2 * n + 1) / 3)), Some(stilt))
        }
        (AlgebraFamily::Preprojective, Family::D) => {
            let irigid: BigInt = d
                .labels()
                .into_iter()
                .map(|l| lattice::dim_orbit_ppa_d(n as usize, l).expect("vertex"))
                .sum();
            (Some(irigid), None)
        }
        (_, Family::E) => (None, None),
    }
}

/// `(1/3)(n-1)n(2n-1)`: total dimension of the indecomposable projectives
/// of a type-`D_n` path algebra, which is also its leading d-coefficient.
pub fn path_d_irigid(n: usize) -> BigInt {
    let n = n as u64;
    BigInt::from((n - 1) * n * (2 * n - 1) / 3)
}

/// `sum_l Dim_l * #W(Q_l)`, the constant term predicted from group orders.
pub fn stilt_from_group_orders(family: AlgebraFamily, d: DynkinDiagram) -> Result<BigInt> {
    let mut total = BigInt::from(0);
    for (i, l) in d.labels().into_iter().enumerate() {
        let rest = d.delete_vertex(l)?;
        let size = face_h(family, &rest, &Options::default())?.evaluate(&BigInt::from(1));
        total += vertex_weight(family, d, i) * size;
    }
    Ok(total)
}

/// One row of a d-table: `d_0, .., d_{n-1}` with `d_j` the coefficient of
/// `t^{n-1-j}`.
pub fn table_row(d: &Polynomial, n: usize) -> Vec<BigInt> {
    (0..n).map(|j| d.coeff(n - 1 - j)).collect()
}

/// Family and diagrams of the six d-tables.
pub fn table_layout(k: usize) -> Option<(AlgebraFamily, Vec<DynkinDiagram>)> {
    use AlgebraFamily::*;
    let a = || (1..=9).map(DynkinDiagram::a).collect();
    let d = || (4..=9).map(DynkinDiagram::d).collect();
    let e = || (6..=8).map(DynkinDiagram::e).collect();
    Some(match k {
        1 => (Preprojective, a()),
        2 => (Preprojective, d()),
        3 => (Preprojective, e()),
        4 => (Path, a()),
        5 => (Path, d()),
        6 => (Path, e()),
        _ => return None,
    })
}

/// Rows `(n, [d_0, .., d_{n-1}])` of table `k` in `1..=6`.
pub fn reproduce_table(k: usize) -> Result<Vec<(usize, Vec<BigInt>)>> {
    let (family, diagrams) =
        table_layout(k).ok_or_else(|| Error::RankOutOfRange(format!("no table {k}")))?;
    diagrams
        .into_iter()
        .map(|d| {
            let p = d_polynomial(&AlgebraSpec::new(family, d))?;
            Ok((d.rank(), table_row(&p, d.rank())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hereditary;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn big(x: u64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn worked_examples() {
        let a3 = DynkinDiagram::a(3);
        assert_eq!(d_polynomial(&AlgebraSpec::preprojective(a3)).unwrap(), p(&[120, 120, 24]));
        assert_eq!(h_polynomial(&AlgebraSpec::preprojective(a3)).unwrap(), p(&[1, 11, 11, 1]));
        assert_eq!(f_polynomial(&AlgebraSpec::preprojective(a3)).unwrap(), p(&[24, 36, 14, 1]));
        assert_eq!(d_polynomial(&AlgebraSpec::path(a3)).unwrap(), p(&[46, 46, 10]));
        assert_eq!(h_polynomial(&AlgebraSpec::path(a3)).unwrap(), p(&[1, 6, 6, 1]));
        assert_eq!(f_polynomial(&AlgebraSpec::path(a3)).unwrap(), p(&[14, 21, 9, 1]));
        assert_eq!(f_polynomial(&AlgebraSpec::path(DynkinDiagram::a(1))).unwrap(), p(&[2, 1]));
        assert_eq!(h_polynomial(&AlgebraSpec::preprojective(DynkinDiagram::a(1))).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn named_rows() {
        assert_eq!(
            d_polynomial(&AlgebraSpec::preprojective(DynkinDiagram::e(6))).unwrap(),
            p(&[4043520, 10108800, 9072000, 3499200, 538128, 22824])
        );
        assert_eq!(d_polynomial(&AlgebraSpec::path(DynkinDiagram::d(4))).unwrap(), p(&[332, 498, 222, 28]));
        assert_eq!(
            d_polynomial(&AlgebraSpec::preprojective(DynkinDiagram::d(4))).unwrap(),
            p(&[2688, 4032, 1728, 192])
        );
    }

    #[test]
    fn empty_and_union_conventions() {
        let empty = AlgebraSpec::path(DiagramUnion::empty());
        assert_eq!(d_polynomial(&empty).unwrap(), Polynomial::zero());
        assert_eq!(h_polynomial(&empty).unwrap(), Polynomial::one());
        assert_eq!(f_polynomial(&empty).unwrap(), Polynomial::one());
        // k x k: 2 d(k) f(k) = 2(t + 2)
        let two: DiagramUnion = "A1xA1".parse().unwrap();
        assert_eq!(d_polynomial(&AlgebraSpec::path(two)).unwrap(), p(&[4, 2]));
    }

    #[test]
    fn aggregates() {
        let a3 = DynkinDiagram::a(3);
        assert_eq!(aggregate_dims(&AlgebraSpec::preprojective(a3)).unwrap(), (big(24), big(120)));
        assert_eq!(aggregate_dims(&AlgebraSpec::path(a3)).unwrap(), (big(10), big(46)));
        let d4 = DynkinDiagram::d(4);
        assert_eq!(aggregate_dims(&AlgebraSpec::path(d4)).unwrap(), (big(28), big(332)));
        let dims: u64 = hereditary::tau_orbit_dims(d4).iter().sum();
        assert_eq!(dims, 28);
        for n in 1..=9 {
            let a = DynkinDiagram::a(n);
            for fam in [AlgebraFamily::Preprojective, AlgebraFamily::Path] {
                let (d0, dn) = aggregate_dims(&AlgebraSpec::new(fam, a)).unwrap();
                let (c0, cn) = aggregate_closed_forms(fam, a);
                assert_eq!(Some(d0), c0, "{fam} A{n}");
                assert_eq!(Some(dn), cn, "{fam} A{n}");
            }
        }
        for n in 4..=9 {
            let d = DynkinDiagram::d(n);
            let (_, dn) = aggregate_dims(&AlgebraSpec::path(d)).unwrap();
            assert_eq!(Some(dn), aggregate_closed_forms(AlgebraFamily::Path, d).1, "path D{n}");
            let (d0, _) = aggregate_dims(&AlgebraSpec::preprojective(d)).unwrap();
            assert_eq!(Some(d0), aggregate_closed_forms(AlgebraFamily::Preprojective, d).0);
        }
    }

    #[test]
    fn path_d_leading_coefficient_is_sum_of_projective_dims() {
        for n in 4..=9u64 {
            let d = DynkinDiagram::d(n as usize);
            let (d0, _) = aggregate_dims(&AlgebraSpec::path(d)).unwrap();
            let dims: u64 = hereditary::tau_orbit_dims(d).iter().sum();
            assert_eq!(d0, big(dims));
            assert_eq!(d0, big((n - 1) * n * (2 * n - 1) / 3));
        }
    }

    #[test]
    fn constant_terms_from_group_orders() {
        for d in [DynkinDiagram::e(6), DynkinDiagram::d(4), DynkinDiagram::d(7), DynkinDiagram::a(5)] {
            for fam in [AlgebraFamily::Preprojective, AlgebraFamily::Path] {
                let (_, dn) = aggregate_dims(&AlgebraSpec::new(fam, d)).unwrap();
                assert_eq!(dn, stilt_from_group_orders(fam, d).unwrap(), "{fam} {d}");
            }
        }
        assert_eq!(stilt_from_group_orders(AlgebraFamily::Preprojective, DynkinDiagram::e(6)).unwrap(), big(4043520));
    }

    #[test]
    fn e_dims_match_tau_orbits() {
        for n in 6..=8 {
            assert_eq!(hereditary::tau_orbit_dims(DynkinDiagram::e(n)), EDimTable::projective_dims(n));
        }
    }

    #[test]
    fn shifted_d_is_palindromic_and_unimodal() {
        let minus_one = BigInt::from(-1);
        let mut specs = Vec::new();
        for n in 1..=9 {
            specs.push(DynkinDiagram::a(n));
        }
        for n in 4..=9 {
            specs.push(DynkinDiagram::d(n));
        }
        for d in specs {
            for fam in [AlgebraFamily::Preprojective, AlgebraFamily::Path] {
                let s = d_polynomial(&AlgebraSpec::new(fam, d)).unwrap().substitute_shift(&minus_one);
                assert!(s.is_palindromic(d.rank() - 1), "{fam} {d}");
                assert!(s.is_unimodal(), "{fam} {d}");
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(
            d_polynomial(&AlgebraSpec::path(DynkinDiagram::d(12))),
            Err(Error::RankOutOfRange(_))
        ));
        assert!(reproduce_table(7).is_err());
    }

    #[test]
    fn small_table_rows() {
        let t1 = reproduce_table(1).unwrap();
        assert_eq!(t1[4], (5, [240u64, 3900, 16500, 25200, 12600].map(big).to_vec()));
        let t4 = reproduce_table(4).unwrap();
        assert_eq!(t4[1], (2, vec![big(4), big(8)]));
    }
}
