//! Dense polynomial helpers, coefficients ascending by power. Only what the
//! cyclotomic layer needs: products, remainders by monic divisors, and the
//! extended Euclidean algorithm over the rationals.

use num::bigint::BigInt;
use num::traits::Zero;

use super::rational::Rational;

pub(crate) fn ztrim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

pub(crate) fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

/// Exact division by a monic divisor; panics if the remainder is nonzero.
/// Used only on products of cyclotomic polynomials, where exactness is a
/// structural guarantee.
pub(crate) fn zdiv_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c == &BigInt::from(1)).unwrap_or(false));
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(rem.len() > dd);
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = std::mem::replace(&mut rem[i], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().take(dd).enumerate() {
            let delta = &c * d;
            rem[i - dd + j] -= delta;
        }
        quot[i - dd] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    ztrim(quot)
}

pub(crate) fn rtrim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

pub(crate) fn rmul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    rtrim(out)
}

/// Remainder of `num` modulo a monic divisor with integer coefficients.
pub(crate) fn rrem_monic(num: &[Rational], den: &[BigInt]) -> Vec<Rational> {
    let dd = den.len() - 1;
    debug_assert!(den[dd] == BigInt::from(1));
    let mut rem: Vec<Rational> = num.to_vec();
    if rem.len() <= dd {
        return rtrim(rem);
    }
    for i in (dd..rem.len()).rev() {
        let c = std::mem::replace(&mut rem[i], Rational::zero());
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().take(dd).enumerate() {
            if !d.is_zero() {
                rem[i - dd + j] = &rem[i - dd + j] - &(&c * &Rational::from(d.clone()));
            }
        }
    }
    rem.truncate(dd);
    rtrim(rem)
}

fn rdivmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let den = rtrim(den.to_vec());
    let lead = den.last().unwrap().clone();
    assert!(!lead.is_zero());
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return (vec![Rational::zero()], rtrim(rem));
    }
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = &std::mem::replace(&mut rem[i], Rational::zero()) / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().take(dd).enumerate() {
            rem[i - dd + j] = &rem[i - dd + j] - &(&c * d);
        }
        quot[i - dd] = c;
    }
    rem.truncate(dd.max(1));
    (rtrim(quot), rtrim(rem))
}

fn is_zero_poly(p: &[Rational]) -> bool {
    p.iter().all(|c| c.is_zero())
}

/// Extended Euclid over Q[x]: returns (g, s) with s*a = g (mod b) and g the
/// monic gcd. With b irreducible and a a nonzero residue, g = 1 and s is the
/// inverse of a modulo b.
pub(crate) fn rext_gcd_mod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = rtrim(a.to_vec());
    let mut r1 = rtrim(b.to_vec());
    let mut s0 = vec![Rational::one()];
    let mut s1 = vec![Rational::zero()];
    while !is_zero_poly(&r1) {
        let (q, r) = rdivmod(&r0, &r1);
        let qs = rmul(&q, &s1);
        let mut s = vec![Rational::zero(); s0.len().max(qs.len())];
        for (i, c) in s0.iter().enumerate() {
            s[i] = &s[i] + c;
        }
        for (i, c) in qs.iter().enumerate() {
            s[i] = &s[i] - c;
        }
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = rtrim(s);
    }
    // normalize gcd to monic
    let lead = r0.last().unwrap().clone();
    if !lead.is_zero() && !lead.is_one() {
        let inv = lead.recip().unwrap();
        r0 = r0.iter().map(|c| c * &inv).collect();
        s0 = s0.iter().map(|c| c * &inv).collect();
    }
    (r0, s0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rp(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn integer_product_and_exact_division_invert() {
        let a = zp(&[-1, 0, 2, 1]);
        let b = zp(&[3, 1]);
        let c = zmul(&a, &b);
        assert_eq!(zdiv_exact(&c, &b), a);
    }

    #[test]
    fn monic_remainder() {
        // x^4 mod x^2 + 1 = 1
        let r = rrem_monic(&rp(&[0, 0, 0, 0, 1]), &zp(&[1, 0, 1]));
        assert_eq!(r, rp(&[1]));
        // degree below divisor passes through
        let r = rrem_monic(&rp(&[5, 7]), &zp(&[1, 0, 1]));
        assert_eq!(r, rp(&[5, 7]));
    }

    #[test]
    fn extended_gcd_inverts_residues() {
        // invert x + 1 modulo x^2 + 1: (x+1)(x-1) = x^2 - 1 = -2, so
        // inverse is (1 - x)/2
        let (g, s) = rext_gcd_mod(&rp(&[1, 1]), &rp(&[1, 0, 1]));
        assert_eq!(g, rp(&[1]));
        let prod = rrem_monic(&rmul(&s, &rp(&[1, 1])), &zp(&[1, 0, 1]));
        assert_eq!(prod, rp(&[1]));
    }
}
