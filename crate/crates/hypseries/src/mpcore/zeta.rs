//! Hurwitz zeta via Euler-Maclaurin summation, and exact `zeta(2n)` values.

use rug::Integer;

use super::complex::BigComplex;
use super::prec::PrecCtx;
use super::rational::Rational;
use super::real::BigReal;
use crate::error::{Error, Result};
use crate::polys::{bernoulli_number, factorial};

/// `zeta(2n)` as the exact rational coefficient of `pi^{2n}`:
/// `zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!)`.
pub fn zeta_even(two_n: u32) -> Result<Rational> {
    if two_n < 2 || two_n % 2 != 0 {
        return Err(Error::Domain(format!(
            "zeta_even requires a positive even argument, got {two_n}"
        )));
    }
    let n = two_n / 2;
    let mut c = Rational::from((Integer::from(1) << (two_n - 1), factorial(two_n)));
    c *= bernoulli_number(two_n as usize);
    if n % 2 == 0 {
        c = -c;
    }
    Ok(c)
}

/// `(a+m)^{-s}`, using exact binary powering when `s` is a small integer.
fn pow_neg_s(base: &BigComplex, s: &BigComplex, s_int: Option<i64>) -> BigComplex {
    match s_int {
        Some(k) => base.powi(-k),
        None => (&base.ln() * &(-s)).exp(),
    }
}

/// Hurwitz zeta `zeta_H(s, a) = sum_{m>=0} (a+m)^{-s}` for `Re(a) > 0`,
/// `s != 1`, by Euler-Maclaurin: direct sum to a cutoff `M`, tail integral,
/// midpoint term, and Bernoulli corrections. `M` and the correction order
/// are raised until the correction tail drops below working precision.
pub fn hurwitz_zeta(s: &BigComplex, a: &BigComplex, ctx: PrecCtx) -> Result<BigComplex> {
    if !a.re().is_positive() {
        return Err(Error::Domain(
            "hurwitz_zeta requires Re(a) > 0".into(),
        ));
    }
    let one = BigComplex::one(ctx);
    let s_minus_1 = s - &one;
    if s_minus_1.abs() < BigReal::pow10(-(ctx.working_digits() as i32) / 2, ctx) {
        return Err(Error::Pole("hurwitz_zeta: s = 1".into()));
    }
    let s_int = s.as_integer();
    let eps = BigReal::eps(ctx).scale_pow10(-4);
    let wd = ctx.working_digits();
    let mut m_cut = ((0.6 * wd as f64).ceil() as i64)
        .max((2.0 * s.abs().to_f64()).ceil() as i64)
        .max(8);

    for _attempt in 0..6 {
        // direct part
        let mut sum = BigComplex::zero(ctx);
        for m in 0..m_cut {
            let base = a + &BigComplex::from_i64(m, ctx);
            sum = &sum + &pow_neg_s(&base, s, s_int);
        }
        let t = a + &BigComplex::from_i64(m_cut, ctx);
        // integral term t^{1-s}/(s-1)
        let t_pow_neg_s = pow_neg_s(&t, s, s_int);
        sum = &sum + &(&(&t_pow_neg_s * &t) / &s_minus_1);
        // midpoint term t^{-s}/2
        sum = &sum + &t_pow_neg_s.scale(&BigReal::from_rational(
            &Rational::from((1, 2)),
            ctx,
        ));
        // Bernoulli corrections: B_{2j}/(2j)! (s)_{2j-1} t^{-s-2j+1}
        let t_recip = t.recip();
        let t_recip_sq = &t_recip * &t_recip;
        let mut poch = s.clone(); // (s)_1
        let mut t_pow = &t_pow_neg_s * &t_recip; // t^{-s-1}
        let mut ok = false;
        let mut prev_mag: Option<BigReal> = None;
        let mut grew = 0u32;
        for j in 1..=(2 * wd as i64 + 60) {
            let b2j = bernoulli_number(2 * j as usize);
            let coeff = Rational::from((Integer::from(1), factorial(2 * j as u32)));
            let term = (&t_pow * &poch)
                .scale(&BigReal::from_rational(&Rational::from(&b2j * &coeff), ctx));
            // t_pow now t^{-s-2j+1}, poch = (s)_{2j-1}
            sum = &sum + &term;
            let mag = term.abs();
            if mag < eps {
                ok = true;
                break;
            }
            if let Some(p) = prev_mag {
                if mag > p {
                    grew += 1;
                    if grew >= 2 {
                        break; // divergent regime; raise M and retry
                    }
                } else {
                    grew = 0;
                }
            }
            prev_mag = Some(mag);
            // advance Pochhammer by two factors and the power by t^{-2}
            let k2 = 2 * j;
            poch = &poch * &(s + &BigComplex::from_i64(k2 - 1, ctx));
            poch = &poch * &(s + &BigComplex::from_i64(k2, ctx));
            t_pow = &t_pow * &t_recip_sq;
        }
        if ok {
            return Ok(sum);
        }
        m_cut *= 2;
    }
    Err(Error::Convergence(
        "hurwitz_zeta: Euler-Maclaurin corrections failed to fall below tolerance".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpcore::pi;

    fn ctx() -> PrecCtx {
        PrecCtx::new(40).unwrap()
    }

    fn real(v: &str, c: PrecCtx) -> BigReal {
        BigReal::parse(v, c).unwrap()
    }

    #[test]
    fn zeta_even_small_values() {
        assert_eq!(zeta_even(2).unwrap(), Rational::from((1, 6)));
        assert_eq!(zeta_even(4).unwrap(), Rational::from((1, 90)));
        assert_eq!(zeta_even(6).unwrap(), Rational::from((1, 945)));
        assert!(zeta_even(3).is_err());
        assert!(zeta_even(0).is_err());
    }

    // zeta_H(2, 1) = zeta(2) = pi^2/6 through the independent zeta_even route.
    #[test]
    fn hurwitz_zeta_at_2_1() {
        let c = ctx();
        let v = hurwitz_zeta(&BigComplex::from_i64(2, c), &BigComplex::one(c), c).unwrap();
        let expected = &pi(c).powi(2) * &BigReal::from_rational(&zeta_even(2).unwrap(), c);
        assert!((v.re() - &expected).abs() < BigReal::pow10(-55, c));
        assert!(v.im().abs() < BigReal::pow10(-55, c));
    }

    // zeta_H(4, 1/2) = (2^4 - 1) zeta(4) = pi^4/6.
    #[test]
    fn hurwitz_zeta_at_4_half() {
        let c = ctx();
        let half = BigComplex::from_rational(&Rational::from((1, 2)), c);
        let v = hurwitz_zeta(&BigComplex::from_i64(4, c), &half, c).unwrap();
        let expected = &pi(c).powi(4)
            * &BigReal::from_rational(&(zeta_even(4).unwrap() * Rational::from(15)), c);
        assert!((v.re() - &expected).abs() < BigReal::pow10(-55, c));
    }

    // Defining recurrence zeta_H(s, a) = a^{-s} + zeta_H(s, a+1).
    #[test]
    fn hurwitz_zeta_recurrence() {
        let c = ctx();
        let cases = [
            ("2.5", "0.0", "0.7", "0.0"),
            ("3.0", "1.5", "1.2", "0.4"),
            ("4.5", "-0.5", "0.3", "1.1"),
        ];
        for (sr, si, ar, ai) in cases {
            let s = BigComplex::new(real(sr, c), real(si, c));
            let a = BigComplex::new(real(ar, c), real(ai, c));
            let lhs = hurwitz_zeta(&s, &a, c).unwrap();
            let rhs = &hurwitz_zeta(&s, &(&a + &BigComplex::one(c)), c).unwrap()
                + &(&a.ln() * &(-&s)).exp();
            assert!(
                (&lhs - &rhs).abs() < BigReal::pow10(-50, c),
                "s={sr}+{si}i a={ar}+{ai}i"
            );
        }
    }

    #[test]
    fn hurwitz_zeta_domain_checks() {
        let c = ctx();
        let s = BigComplex::from_i64(2, c);
        let bad_a = BigComplex::from_i64(-1, c);
        assert!(matches!(hurwitz_zeta(&s, &bad_a, c), Err(Error::Domain(_))));
        let one = BigComplex::one(c);
        assert!(matches!(
            hurwitz_zeta(&one, &one, c),
            Err(Error::Pole(_))
        ));
    }
}
