//! Arbitrary-precision numeric substrate: reals, complex values, exact
//! rationals, elementary/special scalar functions, and rational
//! reconstruction. Every operation is a pure function of its inputs and the
//! explicitly passed [`PrecCtx`]; values are immutable after construction.

mod complex;
mod prec;
mod rational;
mod real;
mod zeta;

pub use complex::BigComplex;
pub use prec::PrecCtx;
pub use rational::{rational_reconstruct, Rational};
pub use real::{agm, pi, BigReal};
pub use zeta::{hurwitz_zeta, zeta_even};

use crate::error::{Error, Result};

/// `base^exponent` with the principal branch for non-integer exponents.
///
/// Integer exponents are dispatched to exact binary powering, so complex
/// bases never touch the branch cut in that case. Otherwise the value is
/// `exp(exponent * log(base))` with the principal logarithm
/// (argument in `(-pi, pi]`).
pub fn cpow(base: &BigComplex, exponent: &BigComplex, ctx: PrecCtx) -> Result<BigComplex> {
    if let Some(k) = exponent.as_integer() {
        if base.is_zero() {
            if k > 0 {
                return Ok(BigComplex::zero(ctx));
            }
            return Err(Error::Domain(
                "cpow: zero base with nonpositive exponent".into(),
            ));
        }
        return Ok(base.powi(k));
    }
    if base.is_zero() {
        if exponent.re().is_positive() && exponent.im().is_zero() {
            return Ok(BigComplex::zero(ctx));
        }
        return Err(Error::Domain(
            "cpow: zero base with non-integer exponent of nonpositive real part".into(),
        ));
    }
    Ok((&base.ln() * exponent).exp())
}
