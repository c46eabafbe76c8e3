//! Lattice-path and sign-sequence models for the dimensions of the
//! support tau-tilting summands of `e_l Pi` in types A and D.
//!
//! Rectangle paths live in `L(s, t)` (from `(0,0)` to `(s,t)`), corner paths
//! in `L'(n-1)` (any endpoint, length `n-1`), and sign sequences are
//! strictly decreasing tuples over `{+-1, .., +-n}`.

use num_bigint::BigInt;
use num_integer::binomial;

use crate::dynkin::Label;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    East,
    North,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath(pub Vec<Step>);

impl LatticePath {
    /// `E`/`N` string, e.g. `"NEENENE"`.
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c.to_ascii_uppercase() {
                'E' => Ok(Step::East),
                'N' => Ok(Step::North),
                _ => Err(Error::MalformedPath(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(LatticePath)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    fn count(&self, step: Step) -> usize {
        self.0.iter().filter(|&&s| s == step).count()
    }

    /// Unit squares under the path, counted column by column: each East
    /// step covers as many squares as the current height.
    pub fn area_under(&self) -> u64 {
        let mut height = 0;
        let mut area = 0;
        for s in &self.0 {
            match s {
                Step::North => height += 1,
                Step::East => area += height,
            }
        }
        area
    }

    /// Unit squares of the corner region underneath or to the right of a
    /// path of length `n - 1`. A North step taken at position `k` (from 0)
    /// leaves `n - 1 - k` cells of its row to the right.
    pub fn corner_area(&self) -> u64 {
        let len = self.0.len() as u64;
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Step::North)
            .map(|(k, _)| len - k as u64)
            .sum()
    }
}

/// `area(p)` for `p` in `L(s, t)`.
pub fn area_rect(p: &LatticePath, s: usize, t: usize) -> Result<u64> {
    if p.count(Step::East) != s || p.count(Step::North) != t {
        return Err(Error::MalformedPath(format!(
            "expected {s} East and {t} North steps, got {} and {}",
            p.count(Step::East),
            p.count(Step::North)
        )));
    }
    Ok(p.area_under())
}

/// Every path in `L(s, t)`.
pub fn rectangle_paths(s: usize, t: usize) -> Vec<LatticePath> {
    fn go(s: usize, t: usize, prefix: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        if s == 0 && t == 0 {
            out.push(LatticePath(prefix.clone()));
            return;
        }
        for (step, left) in [(Step::East, s), (Step::North, t)] {
            if left > 0 {
                prefix.push(step);
                let (s2, t2) = if step == Step::East { (s - 1, t) } else { (s, t - 1) };
                go(s2, t2, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(s, t, &mut Vec::new(), &mut out);
    out
}

/// Every path of length `len` from the origin.
pub fn corner_paths(len: usize) -> Vec<LatticePath> {
    (0u64..1 << len)
        .map(|bits| {
            LatticePath((0..len).map(|k| if bits >> k & 1 == 1 { Step::North } else { Step::East }).collect())
        })
        .collect()
}

/// `T(p, q) = (p+1)(p+2)/2 * C(p, q)`, zero outside `0 <= q <= p`.
pub fn t_number(p: i64, q: i64) -> BigInt {
    if p < 0 || q < 0 || q > p {
        return BigInt::from(0);
    }
    BigInt::from((p + 1) * (p + 2) / 2) * binomial(BigInt::from(p), BigInt::from(q))
}

fn check_a(n: usize, ell: usize) -> Result<()> {
    if n == 0 || ell == 0 || ell > n {
        return Err(Error::RankOutOfRange(format!("vertex {ell} of A_{n}")));
    }
    Ok(())
}

/// `Dim([e_l Pi]_s)` for `Pi(A_n)`: `T(n-1, n-l)`.
pub fn dim_orbit_ppa_a(n: usize, ell: usize) -> Result<BigInt> {
    check_a(n, ell)?;
    Ok(t_number(n as i64 - 1, (n - ell) as i64))
}

/// Area sum and path count over `L(l, n-l+1)`.
pub fn dim_orbit_ppa_a_oracle(n: usize, ell: usize) -> Result<(u64, u64)> {
    check_a(n, ell)?;
    let paths = rectangle_paths(ell, n - ell + 1);
    Ok((paths.iter().map(LatticePath::area_under).sum(), paths.len() as u64))
}

fn check_d(n: usize, ell: Label) -> Result<()> {
    if n < 4 {
        return Err(Error::RankOutOfRange(format!("D_{n}")));
    }
    if !(ell == -1 || (1..n as Label).contains(&ell)) {
        return Err(Error::NotAVertex(ell));
    }
    Ok(())
}

/// `Dim([e_l Pi]_s)` for `Pi(D_n)`: `n(n-1)2^{n-3}` at `l = +-1`, otherwise
/// `(n-l)(n+l-1) 2^{n-l-1} C(n, l)`.
pub fn dim_orbit_ppa_d(n: usize, ell: Label) -> Result<BigInt> {
    check_d(n, ell)?;
    let n_big = BigInt::from(n);
    Ok(if ell.abs() == 1 {
        &n_big * (n - 1) << (n - 3)
    } else {
        let l = ell as usize;
        BigInt::from((n - l) * (n + l - 1)) * binomial(n_big, BigInt::from(l)) << (n - l - 1)
    })
}

/// Corner-path area sum and path count over `L'(n-1)`.
pub fn dim_orbit_ppa_d_oracle_pm1(n: usize) -> (u64, u64) {
    assert!((1..=21).contains(&n));
    let paths = corner_paths(n - 1);
    (paths.iter().map(LatticePath::corner_area).sum(), paths.len() as u64)
}

/// Strictly decreasing `u = (u_{l+1}, .., u_n)` with entries in
/// `{+-1, .., +-n}` and no two entries of equal absolute value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignSequence {
    ell: usize,
    entries: Vec<i32>,
}

impl SignSequence {
    pub fn new(n: usize, ell: usize, entries: Vec<i32>) -> Option<Self> {
        let ok = entries.len() + ell == n
            && entries.iter().all(|&u| u != 0 && u.unsigned_abs() as usize <= n)
            && entries.windows(2).all(|w| w[0] > w[1])
            && distinct_abs(&entries);
        ok.then_some(SignSequence { ell, entries })
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    /// `n(u) = sum_{i=l+1}^{n} (i + u_i*)` with `u* = u` for `u < 0` and
    /// `u - 2` for `u > 0`.
    pub fn statistic(&self) -> i64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(k, &u)| {
                let i = (self.ell + 1 + k) as i64;
                let star = if u < 0 { u } else { u - 2 };
                i + i64::from(star)
            })
            .sum()
    }
}

fn distinct_abs(entries: &[i32]) -> bool {
    let mut seen = 0u64;
    entries.iter().all(|u| {
        let bit = 1u64 << u.unsigned_abs();
        let fresh = seen & bit == 0;
        seen |= bit;
        fresh
    })
}

/// All of `U_l` for `D_n`: `(n-l)`-subsets of `{+-1, .., +-n}` with
/// distinct absolute values, sorted decreasingly.
pub fn sign_sequences(n: usize, ell: usize) -> Vec<SignSequence> {
    let alphabet: Vec<i32> = (1..=n as i32).rev().chain((1..=n as i32).map(|x| -x)).collect();
    let k = n - ell;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn go(alpha: &[i32], start: usize, k: usize, chosen: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if chosen.len() == k {
            out.push(chosen.clone());
            return;
        }
        for i in start..alpha.len() {
            if chosen.iter().any(|c: &i32| c.abs() == alpha[i].abs()) {
                continue;
            }
            chosen.push(alpha[i]);
            go(alpha, i + 1, k, chosen, out);
            chosen.pop();
        }
    }
    let mut raw = Vec::new();
    go(&alphabet, 0, k, &mut chosen, &mut raw);
    for entries in raw {
        out.push(SignSequence::new(n, ell, entries).expect("alphabet is sorted decreasingly"));
    }
    out
}

/// Sum of `n(u)` and count over `U_l`, for `2 <= l <= n-1`.
pub fn dim_orbit_ppa_d_oracle_mid(n: usize, ell: usize) -> Result<(i64, u64)> {
    if !(2..n).contains(&ell) || n > 14 {
        return Err(Error::RankOutOfRange(format!("vertex {ell} of D_{n}")));
    }
    let seqs = sign_sequences(n, ell);
    Ok((seqs.iter().map(SignSequence::statistic).sum(), seqs.len() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: u64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn rectangle_area_examples() {
        let p = |s| LatticePath::parse(s).unwrap();
        assert_eq!(area_rect(&p("NNNEEEE"), 4, 3).unwrap(), 12);
        assert_eq!(area_rect(&p("EEEENNN"), 4, 3).unwrap(), 0);
        assert_eq!(area_rect(&p("NEENENE"), 4, 3).unwrap(), 7);
        assert!(matches!(area_rect(&p("NEE"), 4, 3), Err(Error::MalformedPath(_))));
        assert!(LatticePath::parse("NEX").is_err());
    }

    #[test]
    fn corner_area_examples() {
        let p = |s| LatticePath::parse(s).unwrap();
        assert_eq!(p("EEEEE").corner_area(), 0);
        assert_eq!(p("EEEEN").corner_area(), 1);
        assert_eq!(p("NNNNN").corner_area(), 15);
        assert_eq!(dim_orbit_ppa_d_oracle_pm1(2), (1, 2));
        assert_eq!(dim_orbit_ppa_d_oracle_pm1(4), (24, 8));
        assert_eq!(dim_orbit_ppa_d_oracle_pm1(6).0, 240);
    }

    #[test]
    fn type_a_examples() {
        assert_eq!(dim_orbit_ppa_a(1, 1).unwrap(), big(1));
        let row: Vec<BigInt> = (1..=4).map(|l| dim_orbit_ppa_a(4, l).unwrap()).collect();
        assert_eq!(row, vec![big(10), big(30), big(30), big(10)]);
        assert_eq!(dim_orbit_ppa_a(3, 2).unwrap(), big(12));
        assert_eq!(dim_orbit_ppa_a_oracle(3, 2).unwrap(), (12, 6));
        assert_eq!(dim_orbit_ppa_a_oracle(1, 1).unwrap(), (1, 2));
        assert_eq!(dim_orbit_ppa_a_oracle(9, 4).unwrap().0, 2520);
        assert!(dim_orbit_ppa_a(3, 4).is_err());
    }

    #[test]
    fn type_d_examples() {
        assert_eq!(dim_orbit_ppa_d(4, 1).unwrap(), big(24));
        assert_eq!(dim_orbit_ppa_d(4, -1).unwrap(), big(24));
        assert_eq!(dim_orbit_ppa_d(4, 2).unwrap(), big(120));
        assert_eq!(dim_orbit_ppa_d(5, 4).unwrap(), big(40));
        assert_eq!(dim_orbit_ppa_d_oracle_mid(4, 2).unwrap(), (120, 24));
        assert_eq!(dim_orbit_ppa_d_oracle_mid(4, 3).unwrap(), (24, 8));
        assert!(matches!(dim_orbit_ppa_d(4, 4), Err(Error::NotAVertex(4))));
        // 24 + 24 + 120 + 24 = 192
        let d0: BigInt = [1, -1, 2, 3].iter().map(|&l| dim_orbit_ppa_d(4, l).unwrap()).sum();
        assert_eq!(d0, big(192));
    }

    #[test]
    fn zero_sequence_has_zero_statistic() {
        for n in 3..8 {
            for ell in 2..n {
                let u: Vec<i32> = (ell as i32 + 1..=n as i32).map(|i| -i).collect();
                assert_eq!(SignSequence::new(n, ell, u).unwrap().statistic(), 0);
            }
        }
    }

    #[test]
    fn enumerations_match_closed_forms() {
        for n in 1..=12usize {
            for ell in 1..=n {
                let (sum, count) = dim_orbit_ppa_a_oracle(n, ell).unwrap();
                assert_eq!(big(sum), dim_orbit_ppa_a(n, ell).unwrap());
                assert_eq!(big(count), binomial(big(n as u64 + 1), big(ell as u64)));
                let max = rectangle_paths(ell, n - ell + 1).iter().map(LatticePath::area_under).max();
                assert_eq!(max, Some((ell * (n - ell + 1)) as u64));
            }
            let total: BigInt = (1..=n).map(|l| dim_orbit_ppa_a(n, l).unwrap()).sum();
            // n(n+1)2^{n-2}, doubled to stay integral at n = 1
            assert_eq!(total * 4, big((n * (n + 1)) as u64) << n);
        }
        for n in 4..=12usize {
            let (sum, count) = dim_orbit_ppa_d_oracle_pm1(n);
            assert_eq!(big(sum), dim_orbit_ppa_d(n, 1).unwrap());
            assert_eq!(count, 1 << (n - 1));
            for ell in 2..n {
                let (sum, count) = dim_orbit_ppa_d_oracle_mid(n, ell).unwrap();
                assert_eq!(BigInt::from(sum), dim_orbit_ppa_d(n, ell as Label).unwrap());
                assert_eq!(big(count), binomial(big(n as u64), big(ell as u64)) << (n - ell));
                let max = sign_sequences(n, ell).iter().map(SignSequence::statistic).max();
                assert_eq!(max, Some(((n - ell) * (n + ell - 1)) as i64));
            }
        }
    }

    #[test]
    fn area_sums_satisfy_recurrence() {
        // S(a, b) = enumerated area sum for n = a + 1, l = a + 1 - b
        let s = |a: i64, b: i64| -> BigInt {
            if a < 0 || b < 0 || b > a {
                return big(0);
            }
            big(dim_orbit_ppa_a_oracle((a + 1) as usize, (a + 1 - b) as usize).unwrap().0)
        };
        for n in 1..=12i64 {
            for l in 1..=n {
                let rhs = s(n - 2, n - l - 1) + s(n - 2, n - l) + binomial(big(n as u64), big(l as u64)) * l;
                assert_eq!(s(n - 1, n - l), rhs, "n={n} l={l}");
            }
        }
    }

    proptest! {
        #[test]
        fn rectangle_area_complements(bits in proptest::collection::vec(any::<bool>(), 0..16)) {
            // the reversed step sequence is the path rotated by 180 degrees
            let path = LatticePath(bits.iter().map(|&b| if b { Step::North } else { Step::East }).collect());
            let s = path.count(Step::East);
            let t = path.count(Step::North);
            let flipped = LatticePath(path.0.iter().rev().copied().collect());
            prop_assert_eq!(path.area_under() + flipped.area_under(), (s * t) as u64);
        }
    }
}
