//! Arbitrary-precision complex value as a pair of [`BigReal`]s.
//!
//! Elementary functions use the component formulas
//! (`exp(x+iy) = e^x(cos y + i sin y)`, `sinh(x+iy) = sinh x cos y +
//! i cosh x sin y`, ...) and the principal branch for `ln`/`arg`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::prec::PrecCtx;
use super::rational::Rational;
use super::real::{pi, BigReal};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct BigComplex {
    re: BigReal,
    im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        BigComplex { re, im }
    }

    pub fn from_real(re: BigReal) -> Self {
        let z = re.zero_like();
        BigComplex { re, im: z }
    }

    pub fn zero(ctx: PrecCtx) -> Self {
        BigComplex::new(BigReal::zero(ctx), BigReal::zero(ctx))
    }

    pub fn one(ctx: PrecCtx) -> Self {
        BigComplex::new(BigReal::one(ctx), BigReal::zero(ctx))
    }

    pub fn i(ctx: PrecCtx) -> Self {
        BigComplex::new(BigReal::zero(ctx), BigReal::one(ctx))
    }

    pub fn from_i64(v: i64, ctx: PrecCtx) -> Self {
        BigComplex::new(BigReal::from_i64(v, ctx), BigReal::zero(ctx))
    }

    pub fn from_rational(r: &Rational, ctx: PrecCtx) -> Self {
        BigComplex::new(BigReal::from_rational(r, ctx), BigReal::zero(ctx))
    }

    /// `e^{i theta}` for real `theta`.
    pub fn cis(theta: &BigReal) -> Self {
        BigComplex::new(theta.cos(), theta.sin())
    }

    /// `rho = e^{2 pi i / 3}`, the primitive cube root of unity in the
    /// upper half-plane.
    pub fn rho(ctx: PrecCtx) -> Self {
        let two_thirds_pi = pi(ctx).mul_i64(2).div_u32(3);
        Self::cis(&two_thirds_pi)
    }

    /// `e^{pi i / n}`.
    pub fn root_of_unity_2n(n: u32, ctx: PrecCtx) -> Self {
        Self::cis(&pi(ctx).div_u32(n))
    }

    pub fn re(&self) -> &BigReal {
        &self.re
    }

    pub fn im(&self) -> &BigReal {
        &self.im
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Some(k) when the value is exactly the real integer `k`.
    pub fn as_integer(&self) -> Option<i64> {
        if !self.im.is_zero() {
            return None;
        }
        self.re.as_integer()
    }

    pub fn conj(&self) -> Self {
        BigComplex::new(self.re.clone(), -&self.im)
    }

    pub fn mul_i(&self) -> Self {
        BigComplex::new(-&self.im, self.re.clone())
    }

    pub fn norm_sqr(&self) -> BigReal {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> BigReal {
        self.norm_sqr().sqrt()
    }

    /// Principal argument in `(-pi, pi]`.
    pub fn arg(&self) -> BigReal {
        assert!(!self.is_zero(), "arg of zero");
        BigReal::atan2(&self.im, &self.re)
    }

    pub fn scale(&self, r: &BigReal) -> Self {
        BigComplex::new(&self.re * r, &self.im * r)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        BigComplex::new(self.re.mul_i64(k), self.im.mul_i64(k))
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "reciprocal of zero");
        BigComplex::new(&self.re / &n, -&(&self.im / &n))
    }

    pub fn exp(&self) -> Self {
        let r = self.re.exp();
        BigComplex::new(&r * &self.im.cos(), &r * &self.im.sin())
    }

    /// Principal logarithm: `ln|z| + i arg z`.
    pub fn ln(&self) -> Self {
        assert!(!self.is_zero(), "ln of zero");
        BigComplex::new(self.norm_sqr().ln().div_u32(2), self.arg())
    }

    pub fn sin(&self) -> Self {
        BigComplex::new(
            &self.re.sin() * &self.im.cosh(),
            &self.re.cos() * &self.im.sinh(),
        )
    }

    pub fn cos(&self) -> Self {
        BigComplex::new(
            &self.re.cos() * &self.im.cosh(),
            -&(&self.re.sin() * &self.im.sinh()),
        )
    }

    pub fn sinh(&self) -> Self {
        BigComplex::new(
            &self.re.sinh() * &self.im.cos(),
            &self.re.cosh() * &self.im.sin(),
        )
    }

    pub fn cosh(&self) -> Self {
        BigComplex::new(
            &self.re.cosh() * &self.im.cos(),
            &self.re.sinh() * &self.im.sin(),
        )
    }

    /// Exact binary powering for integer exponents.
    pub fn powi(&self, k: i64) -> Self {
        let mut result = BigComplex::new(self.re.one_like(), self.re.zero_like());
        if k == 0 {
            return result;
        }
        let mut base = if k < 0 { self.recip() } else { self.clone() };
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let r = self.abs();
        let half_arg = self.arg().div_u32(2);
        Self::cis(&half_arg).scale(&r.sqrt())
    }

    /// Format both components with `sig` significant digits.
    pub fn to_sig_string(&self, sig: usize) -> String {
        let re = self.re.to_sig_string(sig);
        let im = self.im.to_sig_string(sig);
        if let Some(stripped) = im.strip_prefix('-') {
            format!("{re} - {stripped}i")
        } else {
            format!("{re} + {im}i")
        }
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = (self.prec() as f64 / 3.3219) as usize;
        write!(f, "{}", self.to_sig_string(sig.max(6)))
    }
}

impl Add<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        BigComplex::new(re, im)
    }
}

impl Div<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        self * &rhs.recip()
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-&self.re, -&self.im)
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpcore::cpow;

    fn ctx() -> PrecCtx {
        PrecCtx::new(30).unwrap()
    }

    #[test]
    fn integer_power_is_exact() {
        let c = ctx();
        let two = BigComplex::from_i64(2, c);
        let eight = two.powi(3);
        assert!((eight.re() - &BigReal::from_i64(8, c)).abs() < BigReal::eps(c));
        assert!(eight.im().is_zero());
    }

    #[test]
    fn principal_branch_sqrt_of_minus_one() {
        let c = ctx();
        let minus_one = BigComplex::from_i64(-1, c);
        let r = cpow(
            &minus_one,
            &BigComplex::new(
                BigReal::parse("0.5", c).unwrap(),
                BigReal::zero(c),
            ),
            c,
        )
        .unwrap();
        let i = BigComplex::i(c);
        assert!((&r - &i).abs() < BigReal::eps(c));
    }

    #[test]
    fn two_to_the_i() {
        let c = ctx();
        let two = BigComplex::from_i64(2, c);
        let i = BigComplex::i(c);
        let v = cpow(&two, &i, c).unwrap();
        let ln2 = BigReal::from_i64(2, c).ln();
        let expected = BigComplex::new(ln2.cos(), ln2.sin());
        assert!((&v - &expected).abs() < BigReal::eps(c));
    }

    #[test]
    fn log_exp_roundtrip() {
        let c = ctx();
        let z = BigComplex::new(
            BigReal::parse("0.7", c).unwrap(),
            BigReal::parse("-2.9", c).unwrap(),
        );
        let w = z.exp().ln();
        assert!((&w - &z).abs() < BigReal::pow10(-(c.working_digits() as i32) + 3, c));
    }

    #[test]
    fn hyperbolic_pythagoras() {
        let c = ctx();
        let z = BigComplex::new(
            BigReal::parse("1.3", c).unwrap(),
            BigReal::parse("0.4", c).unwrap(),
        );
        let s = z.sinh();
        let co = z.cosh();
        let lhs = &(&s * &s) - &(&co * &co);
        let minus_one = BigComplex::from_i64(-1, c);
        assert!((&lhs - &minus_one).abs() < BigReal::pow10(-(c.working_digits() as i32) + 3, c));
    }

    #[test]
    fn cpow_rejects_zero_base_nonpositive_exponent() {
        let c = ctx();
        let zero = BigComplex::zero(c);
        assert!(cpow(&zero, &BigComplex::from_i64(-2, c), c).is_err());
        assert!(cpow(&zero, &BigComplex::from_i64(3, c), c).unwrap().is_zero());
    }
}
