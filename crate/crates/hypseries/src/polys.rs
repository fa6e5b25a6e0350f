//! Exact rational polynomial algebra: Bernoulli polynomials `B_n(x)`, Euler
//! polynomials `E_n(x)`, higher-order Bernoulli polynomials `B_k^<r>(x)`
//! (Taylor coefficients of `(t e^{xt}/(e^t-1))^r`), their lattice-scaled
//! complex evaluations, and the root-of-unity constant `C_h` from the
//! generalized Cauchy-Mellin formula.
//!
//! All polynomial arithmetic is exact; numeric conversion happens only at
//! evaluation time, so closed-form sides of identities accrue no rounding
//! before the final comparison.

use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;
use rug::Integer;

use crate::error::{Error, Result};
use crate::mpcore::{pi, BigComplex, BigReal, PrecCtx, Rational};

/// Dense univariate polynomial with rational coefficients, `coeffs[k]` the
/// coefficient of `x^k`. Trailing zeros are trimmed, the zero polynomial is
/// the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        RationalPoly { coeffs: vec![c] }.trimmed()
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        RationalPoly { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.cmp0() == std::cmp::Ordering::Equal) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        RationalPoly { coeffs: out }.trimmed()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::new(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        RationalPoly { coeffs: out }.trimmed()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalPoly {
            coeffs: self.coeffs.iter().map(|a| Rational::from(a * c)).collect(),
        }
        .trimmed()
    }

    /// `p(a + b x)`, exact.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let mut result = RationalPoly::zero();
        // Horner: p(y) = c_0 + y (c_1 + y (...)), y = a + b x
        let y = RationalPoly::from_coeffs(vec![a.clone(), b.clone()]);
        for c in self.coeffs.iter().rev() {
            result = result.mul(&y).add(&RationalPoly::constant(c.clone()));
        }
        result
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc = Rational::from(&acc * x) + c;
        }
        acc
    }

    pub fn eval_real(&self, x: &BigReal, ctx: PrecCtx) -> BigReal {
        let mut acc = BigReal::zero(ctx);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &BigReal::from_rational(c, ctx);
        }
        acc
    }

    pub fn eval_complex(&self, z: &BigComplex, ctx: PrecCtx) -> BigComplex {
        let mut acc = BigComplex::zero(ctx);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + &BigComplex::from_rational(c, ctx);
        }
        acc
    }
}

pub fn binomial(n: u32, k: u32) -> Integer {
    Integer::from(n).binomial(k)
}

pub fn factorial(n: u32) -> Integer {
    Integer::factorial(n).into()
}

static BERNOULLI_NUMBERS: Lazy<Mutex<Vec<Rational>>> =
    Lazy::new(|| Mutex::new(vec![Rational::from(1)]));

/// Bernoulli number `B_n` (convention `B_1 = -1/2`), exact and memoized.
pub fn bernoulli_number(n: usize) -> Rational {
    let mut cache = BERNOULLI_NUMBERS.lock().unwrap();
    while cache.len() <= n {
        let m = cache.len(); // computing B_m
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        let mut acc = Rational::new();
        for (j, b) in cache.iter().enumerate() {
            acc += Rational::from(b * &binomial(m as u32 + 1, j as u32));
        }
        let bm = -acc / Rational::from(m as u32 + 1);
        cache.push(bm);
    }
    cache[n].clone()
}

static BERNOULLI_POLYS: Lazy<Mutex<Vec<RationalPoly>>> = Lazy::new(|| Mutex::new(Vec::new()));

/// Bernoulli polynomial `B_n(x)` from `t e^{xt}/(e^t - 1)`, exact and cached.
pub fn bernoulli_poly(n: usize) -> RationalPoly {
    let mut cache = BERNOULLI_POLYS.lock().unwrap();
    while cache.len() <= n {
        let m = cache.len();
        // B_m(x) = sum_k C(m, k) B_k x^{m-k}
        let mut coeffs = vec![Rational::new(); m + 1];
        for k in 0..=m {
            let c = Rational::from(&bernoulli_number(k) * &binomial(m as u32, k as u32));
            coeffs[m - k] = c;
        }
        cache.push(RationalPoly::from_coeffs(coeffs));
    }
    cache[n].clone()
}

static EULER_POLYS: Lazy<Mutex<Vec<RationalPoly>>> = Lazy::new(|| Mutex::new(Vec::new()));

/// Euler polynomial `E_n(x)` from `2 e^{xt}/(e^t + 1)`, exact and cached.
pub fn euler_poly(n: usize) -> RationalPoly {
    let mut cache = EULER_POLYS.lock().unwrap();
    while cache.len() <= n {
        let m = cache.len();
        // E_m(x) = x^m - (1/2) sum_{k<m} C(m, k) E_k(x)
        let mut xm = vec![Rational::new(); m + 1];
        xm[m] = Rational::from(1);
        let mut p = RationalPoly::from_coeffs(xm);
        let half = Rational::from((-1, 2));
        for (k, e) in cache.iter().enumerate() {
            let c = Rational::from(&half * &binomial(m as u32, k as u32));
            p = p.add(&e.scale(&c));
        }
        cache.push(p);
    }
    cache[n].clone()
}

static HIGHER_BERNOULLI: Lazy<Mutex<HashMap<(u32, u32), RationalPoly>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Higher-order Bernoulli polynomial `B_k^<r>(x)`: the coefficient of
/// `t^k / k!` in `(t e^{xt}/(e^t - 1))^r`, obtained by an r-fold Cauchy
/// product of the Bernoulli generating series. Cached per `(r, k)`.
pub fn bernoulli_higher_poly(r: u32, k: u32) -> RationalPoly {
    assert!(r >= 1, "order r must be positive");
    if let Some(p) = HIGHER_BERNOULLI.lock().unwrap().get(&(r, k)) {
        return p.clone();
    }
    // base[j] = B_j(x)/j!, the t^j coefficient of the generating function
    let kk = k as usize;
    let base: Vec<RationalPoly> = (0..=kk)
        .map(|j| bernoulli_poly(j).scale(&Rational::from((Integer::from(1), factorial(j as u32)))))
        .collect();
    let mut acc = base.clone();
    for _ in 1..r {
        let mut next = vec![RationalPoly::zero(); kk + 1];
        for i in 0..=kk {
            if acc[i].is_zero() {
                continue;
            }
            for j in 0..=(kk - i) {
                next[i + j] = next[i + j].add(&acc[i].mul(&base[j]));
            }
        }
        acc = next;
    }
    let mut cache = HIGHER_BERNOULLI.lock().unwrap();
    for (j, p) in acc.into_iter().enumerate() {
        let scaled = p.scale(&Rational::from(factorial(j as u32)));
        cache.entry((r, j as u32)).or_insert(scaled);
    }
    cache[&(r, k)].clone()
}

/// Lattice-scaled higher-order Bernoulli value
/// `(2 pi i / omega2)^k B_k^<r>(z)`.
pub fn scaled_b(
    r: u32,
    k: u32,
    z: &BigComplex,
    omega2: &BigComplex,
    ctx: PrecCtx,
) -> Result<BigComplex> {
    if omega2.is_zero() {
        return Err(Error::Domain("scaled_b: omega2 must be nonzero".into()));
    }
    let two_pi_i = BigComplex::i(ctx).scale(&pi(ctx).mul_i64(2));
    let factor = (&two_pi_i / omega2).powi(k as i64);
    let value = bernoulli_higher_poly(r, k).eval_complex(z, ctx);
    Ok(&factor * &value)
}

/// The constant `C_h = sum_{j=0}^{n-1} eta^{j(1-h)}` with `eta = e^{pi i/n}`:
/// `n` when `h = 1 (mod 2n)`, `0` for other odd `h`, and `2/(1 - eta^{1-h})`
/// for even `h`.
pub fn c_h(n: i64, h: i64, ctx: PrecCtx) -> Result<BigComplex> {
    if n < 2 {
        return Err(Error::Domain("c_h requires n >= 2".into()));
    }
    if (h - 1).rem_euclid(2 * n) == 0 {
        return Ok(BigComplex::from_i64(n, ctx));
    }
    if h.rem_euclid(2) != 0 {
        return Ok(BigComplex::zero(ctx));
    }
    // eta^{1-h} = e^{pi i (1-h)/n}
    let angle = &pi(ctx).mul_i64(1 - h) / &BigReal::from_i64(n, ctx);
    let eta_pow = BigComplex::cis(&angle);
    let denom = &BigComplex::one(ctx) - &eta_pow;
    Ok(&BigComplex::from_i64(2, ctx) / &denom)
}
