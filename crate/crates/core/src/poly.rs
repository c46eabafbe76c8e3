//! Dense univariate polynomials in `t`, generic over the coefficient ring.
//!
//! [`Polynomial`] (arbitrary-precision integers) carries every d-, f-, h-,
//! Eulerian and Narayana polynomial; [`RatPolynomial`] is the coefficient
//! ring of the truncated series in [`crate::series`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Scalar;

/// Polynomial `sum_i coeffs[i] * t^i`.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `t + delta`.
    pub fn linear(delta: T) -> Self {
        Self::new(vec![delta, T::one()])
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Exact value at `x` by Horner's rule.
    pub fn evaluate(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `p(t + delta)`, by Horner's rule in `(t + delta)`.
    pub fn substitute_shift(&self, delta: &T) -> Self {
        let step = Self::linear(delta.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &step) + &Self::constant(c.clone()))
    }

    /// `a_i == a_{degree - i}` for every `0 <= i <= degree`, treating missing
    /// coefficients as zero.
    pub fn is_palindromic(&self, degree: usize) -> bool {
        (0..=degree).all(|i| self.coeff(i) == self.coeff(degree - i))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<T: Scalar + PartialOrd> Poly<T> {
    /// Coefficients rise weakly to a peak and then fall weakly.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let mut i = 0;
        while i + 1 < c.len() && c[i] <= c[i + 1] {
            i += 1;
        }
        while i + 1 < c.len() && c[i] >= c[i + 1] {
            i += 1;
        }
        i + 1 >= c.len()
    }
}

impl<T: Scalar> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<'a, T: Scalar> Neg for &'a Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $f(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Scalar> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Poly<T> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<T: Scalar> std::iter::Sum for Poly<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |a, b| &a + &b)
    }
}

impl<T: Scalar> std::iter::Product for Poly<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Poly::one(), |a, b| &a * &b)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Poly<T> {
    /// Descending powers, e.g. `t^3 + 6t^2 + 6t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == "1";
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}t")?,
                _ if unit => write!(f, "t^{i}")?,
                _ => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}

/// JSON form: array of decimal strings in ascending powers of `t`.
impl<T: Scalar + fmt::Display> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de, T: Scalar + FromStr> Deserialize<'de> for Poly<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings
            .iter()
            .map(|s| {
                s.parse::<T>()
                    .map_err(|_| D::Error::custom(format!("bad coefficient {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Polynomial, RatPolynomial};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn add_and_mul() {
        assert_eq!(&p(&[1, 1]) + &p(&[1, 1]), p(&[2, 2]));
        assert_eq!(&Polynomial::zero() + &p(&[3, 0, 1]), p(&[3, 0, 1]));
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(&p(&[1, 1]) * &Polynomial::zero(), Polynomial::zero());
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), Polynomial::zero());
    }

    #[test]
    fn normalization_drops_trailing_zeros() {
        assert_eq!(p(&[1, 0, 0]).coeffs().len(), 1);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[0, 0, 5]).degree(), Some(2));
    }

    #[test]
    fn shift_examples() {
        // h -> f for kQ and Pi(A_3)
        assert_eq!(
            p(&[1, 6, 6, 1]).substitute_shift(&BigInt::from(1)),
            p(&[14, 21, 9, 1])
        );
        assert_eq!(
            p(&[1, 11, 11, 1]).substitute_shift(&BigInt::from(1)),
            p(&[24, 36, 14, 1])
        );
        let q = p(&[4, -3, 7]);
        assert_eq!(q.substitute_shift(&BigInt::from(0)), q);
    }

    #[test]
    fn shifted_d_polynomial_is_palindromic_and_unimodal() {
        // 24(t-1)^2 + 120(t-1) + 120 = 24t^2 + 72t + 24
        let d = p(&[120, 120, 24]);
        let shifted = d.substitute_shift(&BigInt::from(-1));
        assert_eq!(shifted, p(&[24, 72, 24]));
        assert!(shifted.is_palindromic(2));
        assert!(shifted.is_unimodal());
    }

    #[test]
    fn palindromes_and_unimodality() {
        assert!(p(&[1, 6, 6, 1]).is_palindromic(3));
        assert!(p(&[1]).is_palindromic(0));
        assert!(!p(&[1, 2]).is_palindromic(1));
        // padding: t as degree-2 polynomial 0 + t + 0
        assert!(p(&[0, 1]).is_palindromic(2));
        assert!(p(&[1, 3, 1]).is_unimodal());
        assert!(!p(&[2, 1, 2]).is_unimodal());
        assert!(Polynomial::zero().is_unimodal());
        assert!(p(&[5, 5, 1]).is_unimodal());
    }

    #[test]
    fn evaluate_at_points() {
        assert_eq!(p(&[7, 2, 3]).evaluate(&BigInt::from(0)), BigInt::from(7));
        assert_eq!(p(&[7, 2, 3]).evaluate(&BigInt::from(2)), BigInt::from(23));
    }

    #[test]
    fn display_and_json() {
        assert_eq!(p(&[1, 6, 6, 1]).to_string(), "t^3 + 6t^2 + 6t + 1");
        assert_eq!(p(&[-1, 0, -2]).to_string(), "-2t^2 - 1");
        let big = p(&[1]).scale(&BigInt::parse_bytes(b"123112120320123112120320", 10).unwrap());
        let json = serde_json::to_string(&big).unwrap();
        assert_eq!(json, r#"["123112120320123112120320"]"#);
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, big);
        let r = RatPolynomial::new(vec![BigRational::new(1.into(), 2.into())]);
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"["1/2"]"#);
    }

    #[test]
    fn generic_over_machine_scalars() {
        let q: Poly<i64> = Poly::new(vec![1, 1]);
        assert_eq!((&q * &q).coeffs(), &[1, 2, 1]);
        let f: Poly<f64> = Poly::new(vec![0.5, 1.0]);
        assert_eq!(f.evaluate(&2.0), 2.5);
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-50i64..50, 0..6).prop_map(|v| p(&v))
    }

    proptest! {
        #[test]
        fn shift_round_trip(q in small_poly(), d in -5i64..5) {
            let d = BigInt::from(d);
            prop_assert_eq!(q.substitute_shift(&d).substitute_shift(&-d.clone()), q);
        }

        #[test]
        fn mul_commutative_associative(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn shift_then_evaluate(q in small_poly(), d in -5i64..5, x in -6i64..6) {
            let lhs = q.substitute_shift(&BigInt::from(d)).evaluate(&BigInt::from(x));
            prop_assert_eq!(lhs, q.evaluate(&BigInt::from(x + d)));
        }

        #[test]
        fn json_round_trip(q in small_poly()) {
            let back: Polynomial = serde_json::from_str(&serde_json::to_string(&q).unwrap()).unwrap();
            prop_assert_eq!(back, q);
        }
    }
}
