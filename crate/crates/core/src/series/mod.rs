//! Power series in `z` truncated at a fixed order, with polynomial-in-`t`
//! coefficients. Only ring operations are provided; closed forms involving
//! quotients or square roots are checked after clearing denominators.

pub mod identities;

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::poly::Poly;
use crate::{Error, Polynomial, RatPolynomial, Result, Scalar, TruncatedSeries};

/// `sum_{n <= order} coeffs[n] z^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<T> {
    order: usize,
    coeffs: Vec<Poly<T>>,
}

impl<T: Scalar> Series<T> {
    /// Truncates or zero-pads `coeffs` to exactly `order + 1` terms.
    pub fn new(mut coeffs: Vec<Poly<T>>, order: usize) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        Series { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn constant(c: Poly<T>, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Poly::one(), order)
    }

    /// `c z^k`.
    pub fn monomial(c: Poly<T>, k: usize, order: usize) -> Self {
        let mut coeffs = vec![Poly::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Poly<T>] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Poly<T> {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order)].to_vec(), order.min(self.order))
    }

    /// Multiplies every coefficient by the polynomial `c`.
    pub fn scale(&self, c: &Poly<T>) -> Self {
        Series { order: self.order, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.order), |acc, _| &acc * self)
    }

    /// Term-by-term `d/dz`; the order drops by one.
    pub fn derivative_z(&self) -> Self {
        assert!(self.order >= 1, "derivative of an order-0 series");
        let coeffs = (1..=self.order)
            .map(|n| self.coeffs[n].scale(&T::from_usize(n).expect("order fits the scalar type")))
            .collect();
        Series { order: self.order - 1, coeffs }
    }

    /// Replaces `t` by `t + delta` in every coefficient.
    pub fn shift_t(&self, delta: &T) -> Self {
        Series { order: self.order, coeffs: self.coeffs.iter().map(|a| a.substitute_shift(delta)).collect() }
    }

    /// `e^{lambda(t) z} = sum_n lambda^n z^n / n!`.
    pub fn exp_of_zt(lambda: &Poly<T>, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Poly::one();
        for n in 0..=order {
            if n > 0 {
                let n_inv = T::one() / T::from_usize(n).expect("order fits the scalar type");
                term = (&term * lambda).scale(&n_inv);
            }
            coeffs.push(term.clone());
        }
        Series { order, coeffs }
    }

    /// Least exponent where `self` and `other` differ, over the common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        (0..=self.order.min(other.order)).find(|&n| self.coeffs[n] != other.coeffs[n])
    }
}

impl TruncatedSeries {
    /// Ordinary (`sum p_n z^n`) or exponential (`sum p_n z^n / n!`)
    /// generating function of `polys[0..=order]`.
    pub fn from_polynomials(polys: &[Polynomial], exponential: bool, order: usize) -> Result<Self> {
        if polys.len() < order + 1 {
            return Err(Error::InsufficientTerms { needed: order + 1, got: polys.len() });
        }
        let mut factorial = BigInt::from(1);
        let coeffs = polys[..=order]
            .iter()
            .enumerate()
            .map(|(n, p)| {
                if n > 0 {
                    factorial *= n;
                }
                let q: RatPolynomial = p.map(|c| BigRational::from_integer(c.clone()));
                if exponential {
                    q.scale(&BigRational::new(BigInt::from(1), factorial.clone()))
                } else {
                    q
                }
            })
            .collect();
        Ok(Series { order, coeffs })
    }
}

impl<'a, T: Scalar> Add<&'a Series<T>> for &'a Series<T> {
    type Output = Series<T>;
    fn add(self, rhs: &'a Series<T>) -> Series<T> {
        let order = self.order.min(rhs.order);
        Series { order, coeffs: (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect() }
    }
}

impl<'a, T: Scalar> Sub<&'a Series<T>> for &'a Series<T> {
    type Output = Series<T>;
    fn sub(self, rhs: &'a Series<T>) -> Series<T> {
        let order = self.order.min(rhs.order);
        Series { order, coeffs: (0..=order).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect() }
    }
}

impl<'a, T: Scalar> Mul<&'a Series<T>> for &'a Series<T> {
    type Output = Series<T>;
    fn mul(self, rhs: &'a Series<T>) -> Series<T> {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|n| (0..=n).map(|k| &self.coeffs[k] * &rhs.coeffs[n - k]).sum())
            .collect();
        Series { order, coeffs }
    }
}

impl<'a, T: Scalar> Neg for &'a Series<T> {
    type Output = Series<T>;
    fn neg(self) -> Series<T> {
        Series { order: self.order, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr<Series<T>> for Series<T> {
            type Output = Series<T>;
            fn $m(self, rhs: Series<T>) -> Series<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
