//! Generating-function identities for the type-A families, checked by exact
//! coefficient comparison. Closed forms with quotients or square roots are
//! multiplied out first.
//!
//! Series used here, all indexed so that the `z^n` term belongs to rank `n-1`:
//! `S = sum Eul(A_{n-1}) z^n/n!`, `C = sum Cat(A_{n-1}) z^n`,
//! `Dpp = sum d(Pi(A_{n-1})) z^n/n!`, `Dpath = sum d(kA_{n-1}) z^n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::dpoly::{d_polynomial, AlgebraSpec};
use crate::weyl::{eulerian_poly, narayana_type_a};
use crate::{DiagramUnion, Polynomial, RatPolynomial, Result, TruncatedSeries};

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub order: usize,
    pub pass: bool,
    /// Least power of `z` whose coefficients disagree.
    pub first_failure: Option<usize>,
}

impl IdentityReport {
    fn compare(identity: &str, order: usize, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Self {
        let first_failure = lhs.truncate(order).first_difference(&rhs.truncate(order));
        IdentityReport { identity: identity.to_string(), order, pass: first_failure.is_none(), first_failure }
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Polynomial in `t` with small integer coefficients.
fn rp(c: &[i64]) -> RatPolynomial {
    RatPolynomial::new(c.iter().map(|&x| q(x)).collect())
}

/// Series with constant-in-`z` polynomial coefficients listed by power of `z`.
fn zpoly(c: &[RatPolynomial], order: usize) -> TruncatedSeries {
    TruncatedSeries::new(c.to_vec(), order)
}

fn indexed(order: usize, f: impl Fn(usize) -> Result<Polynomial>) -> Result<Vec<Polynomial>> {
    (0..=order).map(|n| f(n.saturating_sub(1))).collect()
}

/// `S(t, z)`; needs `Eul(A_{order-1})`.
pub fn euler_series(order: usize) -> Result<TruncatedSeries> {
    let polys = indexed(order, |k| eulerian_poly(&DiagramUnion::type_a(k)))?;
    TruncatedSeries::from_polynomials(&polys, true, order)
}

/// `C(t, z)`.
pub fn narayana_series(order: usize) -> Result<TruncatedSeries> {
    let polys = indexed(order, |k| Ok(narayana_type_a(k)))?;
    TruncatedSeries::from_polynomials(&polys, false, order)
}

/// Exponential generating function of `d(Pi(A_{n-1}); t)`.
pub fn ppa_d_series(order: usize) -> Result<TruncatedSeries> {
    let polys = indexed(order, |k| d_polynomial(&AlgebraSpec::preprojective(DiagramUnion::type_a(k))))?;
    TruncatedSeries::from_polynomials(&polys, true, order)
}

/// Ordinary generating function of `d(kA_{n-1}; t)`.
pub fn path_d_series(order: usize) -> Result<TruncatedSeries> {
    let polys = indexed(order, |k| d_polynomial(&AlgebraSpec::path(DiagramUnion::type_a(k))))?;
    TruncatedSeries::from_polynomials(&polys, false, order)
}

/// `dS/dz = t S^2 + (1 - t) S` through `z^{order-1}`.
pub fn euler_ode(order: usize) -> Result<IdentityReport> {
    let s = euler_series(order)?;
    let rhs = &(&s * &s).scale(&RatPolynomial::t()) + &s.scale(&rp(&[1, -1]));
    Ok(IdentityReport::compare("euler-ode", order - 1, &s.derivative_z(), &rhs))
}

/// `S (t - e^{z(t-1)}) = t - 1`.
pub fn euler_closed_form(order: usize) -> Result<IdentityReport> {
    let s = euler_series(order)?;
    let denom = &TruncatedSeries::constant(RatPolynomial::t(), order) - &TruncatedSeries::exp_of_zt(&rp(&[-1, 1]), order);
    let rhs = TruncatedSeries::constant(rp(&[-1, 1]), order);
    Ok(IdentityReport::compare("euler-closed-form", order, &(&s * &denom), &rhs))
}

/// `t z C^2 - (1 + z(t-1)) C + 1 = 0`.
pub fn narayana_quadratic(order: usize) -> Result<IdentityReport> {
    let c = narayana_series(order)?;
    let tz = zpoly(&[rp(&[]), rp(&[0, 1])], order);
    let lin = zpoly(&[rp(&[1]), rp(&[-1, 1])], order);
    let lhs = &(&(&tz * &(&c * &c)) - &(&lin * &c)) + &TruncatedSeries::one(order);
    Ok(IdentityReport::compare("narayana-quadratic", order, &lhs, &TruncatedSeries::zero(order)))
}

/// `f(t, z) = 1 + z(t-1) - 2tz C(t, z)`, the root of the discriminant with
/// `f(t, 0) = 1`, recovered from the Narayana series.
fn discriminant_root(c: &TruncatedSeries) -> TruncatedSeries {
    discriminant_root_signed(c, 1)
}

fn discriminant_root_signed(c: &TruncatedSeries, sign: i64) -> TruncatedSeries {
    let order = c.order();
    let lin = zpoly(&[rp(&[1]), rp(&[-sign, sign])], order);
    let two_tz = zpoly(&[rp(&[]), rp(&[0, 2])], order);
    &lin - &(&two_tz * c)
}

/// `f^2 = 1 - 2z(t+1) + z^2(t-1)^2`.
pub fn narayana_discriminant(order: usize) -> Result<IdentityReport> {
    let f = discriminant_root(&narayana_series(order)?);
    let rhs = zpoly(&[rp(&[1]), rp(&[-2, -2]), rp(&[1, -2, 1])], order);
    Ok(IdentityReport::compare("narayana-discriminant", order, &(&f * &f), &rhs))
}

/// `Dpp(t-1, z) = (z^2/2) (dS/dz)^2`.
pub fn dpoly_genfun_ppa(order: usize) -> Result<IdentityReport> {
    let d = ppa_d_series(order)?.shift_t(&q(-1));
    let sz = euler_series(order + 1)?.derivative_z();
    let half_z2 = TruncatedSeries::monomial(RatPolynomial::constant(BigRational::new(1.into(), 2.into())), 2, order);
    Ok(IdentityReport::compare("dpoly-genfun-ppa", order, &d, &(&half_z2 * &(&sz * &sz))))
}

fn e_zt(scale: i64, shift: i64, order: usize) -> TruncatedSeries {
    TruncatedSeries::exp_of_zt(&rp(&[shift * scale, scale]), order)
}

/// `z^2 t^4`.
fn z2t4(order: usize) -> TruncatedSeries {
    TruncatedSeries::monomial(rp(&[0, 0, 0, 0, 1]), 2, order)
}

/// `t + 1 - e^{zt}`.
fn ppa_denominator(order: usize) -> TruncatedSeries {
    &TruncatedSeries::constant(rp(&[1, 1]), order) - &e_zt(1, 0, order)
}

/// `e^z (t+1) - e^{z(t+1)}`.
fn ppa_denominator_shifted(order: usize) -> TruncatedSeries {
    &TruncatedSeries::exp_of_zt(&rp(&[1]), order).scale(&rp(&[1, 1])) - &e_zt(1, 1, order)
}

/// `2 Dpp (t + 1 - e^{zt})^4 = z^2 t^4 e^{2zt}`.
pub fn dpoly_closed_form_ppa(order: usize) -> Result<IdentityReport> {
    let d = ppa_d_series(order)?;
    let lhs = (&d * &ppa_denominator(order).pow(4)).scale(&rp(&[2]));
    let rhs = &z2t4(order) * &e_zt(2, 0, order);
    Ok(IdentityReport::compare("dpoly-closed-form-ppa", order, &lhs, &rhs))
}

/// `2 Dpp (e^z(t+1) - e^{z(t+1)})^4 = z^2 t^4 e^{2z(t+2)}`.
pub fn dpoly_closed_form_ppa_shifted(order: usize) -> Result<IdentityReport> {
    let d = ppa_d_series(order)?;
    let lhs = (&d * &ppa_denominator_shifted(order).pow(4)).scale(&rp(&[2]));
    let rhs = &z2t4(order) * &e_zt(2, 2, order);
    Ok(IdentityReport::compare("dpoly-closed-form-ppa-shifted", order, &lhs, &rhs))
}

/// The two closed forms for `Dpp` agree after cross-multiplying.
pub fn dpoly_closed_forms_agree(order: usize) -> IdentityReport {
    let lhs = &(&z2t4(order) * &e_zt(2, 2, order)) * &ppa_denominator(order).pow(4);
    let rhs = &(&z2t4(order) * &e_zt(2, 0, order)) * &ppa_denominator_shifted(order).pow(4);
    IdentityReport::compare("dpoly-closed-forms-agree", order, &lhs, &rhs)
}

/// `Dpath(t-1, z) = z^2 (dC/dz)^2`.
pub fn dpoly_genfun_path(order: usize) -> Result<IdentityReport> {
    let d = path_d_series(order)?.shift_t(&q(-1));
    let cz = narayana_series(order + 1)?.derivative_z();
    let z2 = TruncatedSeries::monomial(rp(&[1]), 2, order);
    Ok(IdentityReport::compare("dpoly-genfun-path", order, &d, &(&z2 * &(&cz * &cz))))
}

/// `4 (t+1)^2 z^2 F^2 Dpath = (z(t+2) - 1 + F)^2` with `F = f(t+1, z)`,
/// taking `F` from the Narayana series. This is `z^2 (dC/dz)^2` at `t+1`
/// written in closed form.
pub fn dpoly_closed_form_path(order: usize) -> Result<IdentityReport> {
    let num = |f: &TruncatedSeries, _f2: &TruncatedSeries| &zpoly(&[rp(&[-1]), rp(&[2, 1])], order) + f;
    path_closed_form("dpoly-closed-form-path", order, num)
}

/// The printed variant with numerator `(z(t+2) - z^2 t^2 + F - F^2)^2`.
pub fn dpoly_closed_form_path_printed(order: usize) -> Result<IdentityReport> {
    let num = |f: &TruncatedSeries, f2: &TruncatedSeries| {
        &(&zpoly(&[rp(&[]), rp(&[2, 1]), rp(&[0, 0, -1])], order) + f) - f2
    };
    path_closed_form("dpoly-closed-form-path-printed", order, num)
}

fn path_closed_form(
    name: &str,
    order: usize,
    numerator: impl Fn(&TruncatedSeries, &TruncatedSeries) -> TruncatedSeries,
) -> Result<IdentityReport> {
    let d = path_d_series(order)?;
    let f = discriminant_root(&narayana_series(order)?).shift_t(&q(1));
    let f2 = &f * &f;
    let num = numerator(&f, &f2);
    let lhs = &(&TruncatedSeries::monomial(rp(&[4, 8, 4]), 2, order) * &f2) * &d;
    Ok(IdentityReport::compare(name, order, &lhs, &(&num * &num)))
}

/// Every identity above, in a fixed order.
pub fn all(order: usize) -> Result<Vec<IdentityReport>> {
    Ok(vec![
        euler_ode(order)?,
        euler_closed_form(order)?,
        narayana_quadratic(order)?,
        narayana_discriminant(order)?,
        dpoly_genfun_ppa(order)?,
        dpoly_closed_form_ppa(order)?,
        dpoly_closed_form_ppa_shifted(order)?,
        dpoly_closed_forms_agree(order),
        dpoly_genfun_path(order)?,
        dpoly_closed_form_path(order)?,
    ])
}
