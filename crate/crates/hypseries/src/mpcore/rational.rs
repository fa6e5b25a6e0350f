//! Exact rationals and continued-fraction rational reconstruction.

use rug::{Integer, Rational as RugRational};

use super::real::BigReal;
use crate::error::{Error, Result};

/// Exact integer-ratio scalar. GMP keeps it canonical
/// (`gcd(num, den) = 1`, `den > 0`).
pub type Rational = RugRational;

/// Recover an exact fraction from a high-precision decimal.
///
/// Walks the continued-fraction expansion of `x` and returns the first
/// convergent `p/q` with `q <= max_den` whose residual satisfies
/// `|x - p/q| < 10^-(digits - 5)`, where `digits` is the decimal precision
/// carried by `x`. Fails with a precision error when `x` does not carry at
/// least `2 log10(max_den) + 10` digits, or when no convergent qualifies.
pub fn rational_reconstruct(x: &BigReal, max_den: &Integer) -> Result<Rational> {
    if *max_den <= 0 {
        return Err(Error::Domain("max_den must be positive".into()));
    }
    let digits = (x.prec() as f64 / 3.321928) as i32;
    let needed = 2.0 * max_den.to_f64().log10() + 10.0;
    if (digits as f64) < needed {
        return Err(Error::Precision(format!(
            "rational_reconstruct: x carries ~{digits} digits, needs at least {needed:.0} for max_den = {max_den}"
        )));
    }
    let tol = x.pow10_like(-(digits - 5));
    let noise = x.pow10_like(-(digits - 3));

    // Convergents h_n / k_n of the continued fraction of x.
    let mut h_m2 = Integer::from(0);
    let mut h_m1 = Integer::from(1);
    let mut k_m2 = Integer::from(1);
    let mut k_m1 = Integer::from(0);
    let mut r = x.clone();
    for _ in 0..(digits as usize + 16) {
        let a_real = r.floor();
        let a = a_real
            .to_integer()
            .ok_or_else(|| Error::Precision("continued fraction term not integral".into()))?;
        let h = Integer::from(&a * &h_m1) + &h_m2;
        let k = Integer::from(&a * &k_m1) + &k_m2;
        if k > *max_den {
            break;
        }
        if k > 0 {
            let cand = Rational::from((h.clone(), k.clone()));
            let resid = (x - &BigReal::from_rational_like(&cand, x)).abs();
            if resid < tol {
                return Ok(cand);
            }
        }
        h_m2 = std::mem::replace(&mut h_m1, h);
        k_m2 = std::mem::replace(&mut k_m1, k);
        let frac = &r - &a_real;
        // Exact termination, or the remaining digits are pure noise.
        if frac.abs() < noise {
            break;
        }
        r = frac.recip();
    }
    Err(Error::Precision(format!(
        "rational_reconstruct: no convergent with denominator <= {max_den} within tolerance"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpcore::PrecCtx;

    #[test]
    fn reconstructs_one_third() {
        let c = PrecCtx::new(40).unwrap();
        let third = BigReal::from_rational(&Rational::from((1, 3)), c);
        let r = rational_reconstruct(&third, &Integer::from(1000)).unwrap();
        assert_eq!(r, Rational::from((1, 3)));
    }

    #[test]
    fn reconstructs_exact_dyadic() {
        let c = PrecCtx::new(40).unwrap();
        let x = BigReal::parse("-0.03125", c).unwrap();
        let r = rational_reconstruct(&x, &Integer::from(1 << 20)).unwrap();
        assert_eq!(r, Rational::from((-1, 32)));
    }

    #[test]
    fn rejects_insufficient_precision() {
        let c = PrecCtx::new(10).unwrap();
        let x = BigReal::parse("0.123456789", c).unwrap();
        let huge = Integer::from(10).pow(40);
        assert!(matches!(
            rational_reconstruct(&x, &huge),
            Err(Error::Precision(_))
        ));
    }

    #[test]
    fn tolerates_eps_perturbation() {
        let c = PrecCtx::new(50).unwrap();
        let q = 97u32;
        let base = BigReal::from_rational(&Rational::from((13, q)), c);
        let eps = BigReal::pow10(-60, c);
        let x = &base + &eps;
        let r = rational_reconstruct(&x, &Integer::from(q)).unwrap();
        assert_eq!(r, Rational::from((13, 97)));
    }
}
