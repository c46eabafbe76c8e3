//! Exact d-, f- and h-polynomials of path algebras and preprojective algebras
//! of simply-laced Dynkin type, together with brute-force oracles that
//! recompute every closed formula independently.
//!
//! The arithmetic layer ([`poly`], [`series`]) is generic over the coefficient
//! ring; the concrete aliases below fix the exact rings used throughout.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

pub mod checks;
pub mod dpoly;
pub mod dynkin;
pub mod error;
pub mod hereditary;
pub mod lattice;
pub mod poly;
pub mod series;
pub mod weyl;

pub use error::{Error, Result};

/// Coefficient ring of [`poly::Poly`] and [`series::Series`].
pub trait Scalar: Num + Clone + Neg<Output = Self> + FromPrimitive + Debug {}

impl<T: Num + Clone + Neg<Output = T> + FromPrimitive + Debug> Scalar for T {}

/// Polynomial in `t` over arbitrary-precision integers.
pub type Polynomial = poly::Poly<num_bigint::BigInt>;
/// Polynomial in `t` over exact rationals.
pub type RatPolynomial = poly::Poly<num_rational::BigRational>;
/// Power series in `z` with [`RatPolynomial`] coefficients.
pub type TruncatedSeries = series::Series<num_rational::BigRational>;

pub use dynkin::{DiagramUnion, DynkinDiagram, Family};
