//! Arbitrary-precision real scalar backed by MPFR via `rug::Float`.
//!
//! The wrapper enforces the crate's conventions: precision comes from a
//! [`PrecCtx`] at construction, binary operations work at the larger operand
//! precision, and non-finite values never escape (they panic, since domain
//! checks at API boundaries must catch every legitimate failure first).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use super::prec::PrecCtx;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct BigReal(Float);

/// pi at working precision.
pub fn pi(ctx: PrecCtx) -> BigReal {
    BigReal(Float::with_val(ctx.prec_bits(), Constant::Pi))
}

/// Arithmetic-geometric mean of two positive reals.
///
/// Quadratic convergence; iterates until `|a_n - b_n|` drops below the
/// working-precision threshold relative to the iterates.
pub fn agm(a: &BigReal, b: &BigReal, ctx: PrecCtx) -> Result<BigReal> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::Domain("agm requires positive arguments".into()));
    }
    let prec = ctx.prec_bits().max(a.prec()).max(b.prec());
    let mut x = Float::with_val(prec, a.as_raw());
    let mut y = Float::with_val(prec, b.as_raw());
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32) - 4));
    for _ in 0..10_000 {
        let diff = Float::with_val(prec, &x - &y);
        let scale = Float::with_val(prec, &x).abs();
        if diff.abs() <= Float::with_val(prec, &eps * &scale) {
            break;
        }
        let am = Float::with_val(prec, &x + &y) / 2u32;
        let gm = Float::with_val(prec, &x * &y).sqrt();
        x = am;
        y = gm;
    }
    Ok(BigReal::from_raw(x))
}

impl BigReal {
    pub(crate) fn from_raw(f: Float) -> Self {
        debug_assert!(f.is_finite(), "non-finite BigReal");
        BigReal(f)
    }

    pub(crate) fn as_raw(&self) -> &Float {
        &self.0
    }

    pub fn zero(ctx: PrecCtx) -> Self {
        BigReal(Float::with_val(ctx.prec_bits(), 0))
    }

    pub fn one(ctx: PrecCtx) -> Self {
        BigReal(Float::with_val(ctx.prec_bits(), 1))
    }

    pub fn from_i64(v: i64, ctx: PrecCtx) -> Self {
        BigReal(Float::with_val(ctx.prec_bits(), v))
    }

    pub fn from_f64(v: f64, ctx: PrecCtx) -> Self {
        assert!(v.is_finite());
        BigReal(Float::with_val(ctx.prec_bits(), v))
    }

    pub fn from_rational(r: &Rational, ctx: PrecCtx) -> Self {
        BigReal(Float::with_val(ctx.prec_bits(), r))
    }

    /// Parse a decimal literal (`-1.5`, `2.3e-4`) or a fraction (`3/8`).
    pub fn parse(s: &str, ctx: PrecCtx) -> Result<Self> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let r: Rational = format!("{}/{}", num.trim(), den.trim())
                .parse()
                .map_err(|_| Error::Domain(format!("invalid rational literal `{s}`")))?;
            return Ok(Self::from_rational(&r, ctx));
        }
        let incomplete =
            Float::parse(s).map_err(|_| Error::Domain(format!("invalid real literal `{s}`")))?;
        let f = Float::with_val(ctx.prec_bits(), incomplete);
        if !f.is_finite() {
            return Err(Error::Domain(format!("non-finite real literal `{s}`")));
        }
        Ok(BigReal(f))
    }

    /// `10^-(working digits)` for the given context.
    pub fn eps(ctx: PrecCtx) -> Self {
        let p = ctx.prec_bits();
        BigReal(Float::with_val(p, 10).pow(-(ctx.working_digits() as i32)))
    }

    /// `10^-k` at the context's working precision.
    pub fn pow10(k: i32, ctx: PrecCtx) -> Self {
        BigReal(Float::with_val(ctx.prec_bits(), 10).pow(k))
    }

    /// `10^k` at this value's precision.
    pub fn pow10_like(&self, k: i32) -> Self {
        BigReal(Float::with_val(self.prec(), 10).pow(k))
    }

    /// `self * 10^k`.
    pub fn scale_pow10(&self, k: i32) -> Self {
        self * &self.pow10_like(k)
    }

    /// Rational converted at this value's precision.
    pub fn from_rational_like(r: &Rational, model: &BigReal) -> Self {
        BigReal(Float::with_val(model.prec(), r))
    }

    /// Exact integer value, if the float is integral.
    pub fn to_integer(&self) -> Option<rug::Integer> {
        self.0.to_integer()
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    /// Zero at this value's precision.
    pub fn zero_like(&self) -> Self {
        BigReal(Float::with_val(self.prec(), 0))
    }

    /// One at this value's precision.
    pub fn one_like(&self) -> Self {
        BigReal(Float::with_val(self.prec(), 1))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_sign_positive() && !self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Some(k) when the value is exactly the integer `k`.
    pub fn as_integer(&self) -> Option<i64> {
        if !self.0.is_integer() {
            return None;
        }
        self.0.to_integer().and_then(|z| z.to_i64())
    }

    pub fn abs(&self) -> Self {
        BigReal(Float::with_val(self.prec(), self.0.abs_ref()))
    }

    pub fn sqrt(&self) -> Self {
        assert!(
            !self.is_negative(),
            "sqrt of negative real (guard this at the call site)"
        );
        BigReal::from_raw(Float::with_val(self.prec(), self.0.sqrt_ref()))
    }

    pub fn exp(&self) -> Self {
        BigReal::from_raw(Float::with_val(self.prec(), self.0.exp_ref()))
    }

    pub fn ln(&self) -> Self {
        assert!(self.is_positive(), "ln of non-positive real");
        BigReal::from_raw(Float::with_val(self.prec(), self.0.ln_ref()))
    }

    pub fn sin(&self) -> Self {
        BigReal::from_raw(Float::with_val(self.prec(), self.0.sin_ref()))
    }

    pub fn cos(&self) -> Self {
        BigReal::from_raw(Float::with_val(self.prec(), self.0.cos_ref()))
    }

    pub fn sinh(&self) -> Self {
        BigReal::from_raw(Float::with_val(self.prec(), self.0.sinh_ref()))
    }

    pub fn cosh(&self) -> Self {
        BigReal::from_raw(Float::with_val(self.prec(), self.0.cosh_ref()))
    }

    /// Principal angle of the point `(x, y)`, in `(-pi, pi]`.
    pub fn atan2(y: &BigReal, x: &BigReal) -> Self {
        let p = y.prec().max(x.prec());
        BigReal::from_raw(Float::with_val(p, y.0.atan2_ref(&x.0)))
    }

    pub fn floor(&self) -> Self {
        BigReal(Float::with_val(self.prec(), self.0.floor_ref()))
    }

    /// Round half away from zero to the nearest integer.
    pub fn round(&self) -> Self {
        BigReal(Float::with_val(self.prec(), self.0.round_ref()))
    }

    /// Fractional part in `[0, 1)`.
    pub fn fract_unit(&self) -> Self {
        let f = self - &self.floor();
        if f.0.is_zero() {
            BigReal(Float::with_val(self.prec(), 0))
        } else {
            f
        }
    }

    pub fn powi(&self, k: i64) -> Self {
        BigReal::from_raw(Float::with_val(self.prec(), (&self.0).pow(k as i32)))
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        BigReal::from_raw(Float::with_val(self.prec(), self.0.recip_ref()))
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        BigReal(Float::with_val(self.prec(), &self.0 * k))
    }

    pub fn div_u32(&self, k: u32) -> Self {
        assert!(k != 0);
        BigReal(Float::with_val(self.prec(), &self.0 / k))
    }

    pub fn max(&self, other: &BigReal) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Format with `sig` significant digits in explicit exponent notation,
    /// e.g. `-8.658964e-2`. Deterministic for a given value and `sig`.
    pub fn to_sig_string(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.0.is_zero() {
            let frac = if sig > 1 {
                format!(".{}", "0".repeat(sig - 1))
            } else {
                String::new()
            };
            return format!("0{frac}e0");
        }
        let (neg, digits, exp) = self.0.to_sign_string_exp(10, Some(sig));
        let exp = exp.unwrap_or(0);
        let digits = if digits.len() < sig {
            format!("{digits}{}", "0".repeat(sig - digits.len()))
        } else {
            digits
        };
        let (head, tail) = digits.split_at(1);
        let sign = if neg { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{}", exp - 1)
        } else {
            format!("{sign}{head}.{tail}e{}", exp - 1)
        }
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = (self.prec() as f64 / 3.3219) as usize;
        write!(f, "{}", self.to_sig_string(sig.max(6)))
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let p = self.prec().max(rhs.prec());
                BigReal::from_raw(Float::with_val(p, &self.0 $op &rhs.0))
            }
        }
        impl $trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self) $op (&rhs)
            }
        }
        impl $trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                (&self) $op rhs
            }
        }
        impl $trait<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self $op (&rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(Float::with_val(self.prec(), -&self.0))
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecCtx {
        PrecCtx::new(30).unwrap()
    }

    #[test]
    fn pi_matches_known_digits() {
        let p = pi(ctx());
        let s = p.to_sig_string(31);
        assert!(s.starts_with("3.141592653589793238462643383279"), "{s}");
    }

    #[test]
    fn pi_refinement_consistency() {
        let a = pi(PrecCtx::new(50).unwrap());
        let b = pi(PrecCtx::new(100).unwrap());
        let diff = (&a - &b).abs();
        assert!(diff < BigReal::pow10(-70, PrecCtx::new(100).unwrap()));
    }

    #[test]
    fn sin_of_pi_vanishes() {
        let c = ctx();
        let s = pi(c).sin().abs();
        assert!(s < BigReal::eps(c));
    }

    #[test]
    fn agm_fixed_point_and_symmetry() {
        let c = ctx();
        let one = BigReal::one(c);
        let r = agm(&one, &one, c).unwrap();
        assert!((&r - &one).abs() < BigReal::eps(c));

        let a = BigReal::parse("1.7", c).unwrap();
        let b = BigReal::parse("0.3", c).unwrap();
        let ab = agm(&a, &b, c).unwrap();
        let ba = agm(&b, &a, c).unwrap();
        assert!((&ab - &ba).abs() < BigReal::eps(c));
    }

    #[test]
    fn agm_rejects_nonpositive() {
        let c = ctx();
        let one = BigReal::one(c);
        assert!(agm(&BigReal::zero(c), &one, c).is_err());
        assert!(agm(&BigReal::from_i64(-2, c), &one, c).is_err());
    }

    // agm(1, sqrt 2) = pi / varpi with the paper's decimal for varpi.
    #[test]
    fn agm_one_sqrt2_is_pi_over_lemniscate() {
        let c = PrecCtx::new(40).unwrap();
        let s2 = BigReal::from_i64(2, c).sqrt();
        let m = agm(&BigReal::one(c), &s2, c).unwrap();
        let expected = BigReal::parse("1.198140234735592207439922492280323878227", c).unwrap();
        assert!((&m - &expected).abs() < BigReal::pow10(-36, c));
        // leading digits of pi/2.62205... per the paper's decimal
        assert!(m.to_sig_string(7).starts_with("1.198140"));
    }

    #[test]
    fn sig_string_formatting() {
        let c = ctx();
        let x = BigReal::parse("-0.086589", c).unwrap();
        assert_eq!(x.to_sig_string(5), "-8.6589e-2");
        assert_eq!(BigReal::zero(c).to_sig_string(3), "0.00e0");
        let y = BigReal::from_i64(1440, c);
        assert_eq!(y.to_sig_string(3), "1.44e3");
    }

    #[test]
    fn fract_unit_in_range() {
        let c = ctx();
        let x = BigReal::parse("-2.25", c).unwrap();
        let f = x.fract_unit();
        assert_eq!(f.to_f64(), 0.75);
    }
}
