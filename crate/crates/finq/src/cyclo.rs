//! Exact cyclotomic arithmetic.
//!
//! A value is a residue in Q[x]/Phi_n(x) for its conductor n, stored as the
//! coefficient vector of length phi(n) in the power basis {r^0, ..,
//! r^(phi(n)-1)} where r = exp(2*pi*i/n). Every operation returns the
//! canonical form: coefficients fully reduced modulo Phi_n and the conductor
//! minimal for the value. Conductors congruent to 2 mod 4 never appear in
//! canonical form because Q(r_2m) = Q(r_m) for odd m.

mod poly;
mod rational;

pub use rational::Rational;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, LazyLock, Mutex};

use num::bigint::BigInt;
use num::complex::Complex64;
use num::integer::Integer;
use num::traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};
use poly::{rext_gcd_mod, rmul, rrem_monic, zdiv_exact, zmul, ztrim};

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let prev = out.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

static CYCLO_CACHE: LazyLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn cyclo_poly_arc(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1);
    if let Some(p) = CYCLO_CACHE.lock().unwrap().get(&n) {
        return p.clone();
    }
    for d in divisors(n) {
        let mut cache = CYCLO_CACHE.lock().unwrap();
        if cache.contains_key(&d) {
            continue;
        }
        let mut acc = vec![BigInt::one()];
        for e in divisors(d) {
            if e < d {
                acc = zmul(&acc, cache.get(&e).expect("divisors processed in order"));
            }
        }
        let mut xn1 = vec![BigInt::zero(); d as usize + 1];
        xn1[0] = BigInt::from(-1);
        xn1[d as usize] = BigInt::one();
        cache.insert(d, Arc::new(ztrim(zdiv_exact(&xn1, &acc))));
    }
    CYCLO_CACHE.lock().unwrap().get(&n).unwrap().clone()
}

/// Coefficients of the n-th cyclotomic polynomial, ascending by power,
/// degree phi(n), monic. n must be at least 1.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    cyclo_poly_arc(n).as_ref().clone()
}

fn pad(mut v: Vec<Rational>, len: usize) -> Vec<Rational> {
    v.resize(len, Rational::zero());
    v
}

/// Residue of x^exp modulo Phi_n, padded to phi(n) coefficients.
fn monomial_residue(n: u64, exp: u64) -> Vec<Rational> {
    let mut raw = vec![Rational::zero(); exp as usize + 1];
    raw[exp as usize] = Rational::one();
    pad(rrem_monic(&raw, &cyclo_poly_arc(n)), euler_phi(n) as usize)
}

/// Solves sum_j c_j * cols[j] = target over the rationals; the columns are
/// linearly independent by construction. None means the target is outside
/// the span.
fn solve_columns(cols: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let m = target.len();
    let k = cols.len();
    let mut aug: Vec<Vec<Rational>> = (0..m)
        .map(|r| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_row_of_col = Vec::with_capacity(k);
    let mut next = 0;
    for c in 0..k {
        let pr = (next..m).find(|&r| !aug[r][c].is_zero())?;
        aug.swap(next, pr);
        let inv = aug[next][c].recip().expect("pivot nonzero");
        for x in aug[next].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m {
            if r != next && !aug[r][c].is_zero() {
                let f = aug[r][c].clone();
                for j in c..=k {
                    let delta = &f * &aug[next][j];
                    aug[r][j] = &aug[r][j] - &delta;
                }
            }
        }
        pivot_row_of_col.push(next);
        next += 1;
    }
    if (next..m).any(|r| !aug[r][k].is_zero()) {
        return None;
    }
    Some((0..k).map(|c| aug[pivot_row_of_col[c]][k].clone()).collect())
}

/// Exact cyclotomic number in canonical conductor-minimal form.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rational::one()],
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(n))
    }

    /// Builds a value from an explicit residue vector of length phi(conductor)
    /// and canonicalizes it.
    pub fn from_coeffs(conductor: u64, coeffs: Vec<Rational>) -> Result<Self> {
        if conductor < 1 {
            return Err(Error::InvalidInput("conductor must be positive".into()));
        }
        if coeffs.len() != euler_phi(conductor) as usize {
            return Err(Error::InvalidInput(format!(
                "expected {} coefficients for conductor {conductor}, got {}",
                euler_phi(conductor),
                coeffs.len()
            )));
        }
        Ok(Self::minimize(conductor, coeffs))
    }

    /// r_n^k, reduced and conductor-minimized. k may be any integer.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "order must be positive");
        let e = k.rem_euclid(n as i64) as u64;
        Self::minimize(n, monomial_residue(n, e))
    }

    fn minimize(n: u64, coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(coeffs.len(), euler_phi(n) as usize);
        if n == 1 {
            return Cyclotomic { conductor: 1, coeffs };
        }
        if coeffs[1..].iter().all(|c| c.is_zero()) {
            return Cyclotomic {
                conductor: 1,
                coeffs: vec![coeffs.into_iter().next().unwrap()],
            };
        }
        for d in divisors(n) {
            if d == 1 || (d % 4 == 2) {
                continue;
            }
            if d == n {
                if n % 4 != 2 {
                    return Cyclotomic { conductor: n, coeffs };
                }
                continue;
            }
            let step = n / d;
            let cols: Vec<Vec<Rational>> = (0..euler_phi(d))
                .map(|j| monomial_residue(n, j * step))
                .collect();
            if let Some(c) = solve_columns(&cols, &coeffs) {
                return Cyclotomic { conductor: d, coeffs: c };
            }
        }
        unreachable!("a conductor not congruent to 2 mod 4 always represents the value")
    }

    /// Canonical form of the value; idempotent. Arithmetic already returns
    /// canonical values, so this matters only for explicitly lifted ones.
    pub fn minimize_conductor(&self) -> Self {
        Self::minimize(self.conductor, self.coeffs.clone())
    }

    /// Re-expresses the value at a larger conductor (a multiple of the
    /// current one). The result is not conductor-minimal; it compares equal
    /// to the original and [`Cyclotomic::minimize_conductor`] restores it.
    pub fn lift_to_conductor(&self, n: u64) -> Result<Self> {
        if n < 1 || n % self.conductor != 0 {
            return Err(Error::InvalidInput(format!(
                "conductor {n} is not a multiple of {}",
                self.conductor
            )));
        }
        Ok(Cyclotomic {
            conductor: n,
            coeffs: self.lifted_coeffs(n),
        })
    }

    fn lifted_coeffs(&self, l: u64) -> Vec<Rational> {
        if l == self.conductor {
            return self.coeffs.clone();
        }
        let step = (l / self.conductor) as usize;
        let mut raw = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[i * step] = c.clone();
            }
        }
        pad(rrem_monic(&raw, &cyclo_poly_arc(l)), euler_phi(l) as usize)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Coefficients in the power basis at the current conductor, ascending.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn rational_part(&self) -> Option<Rational> {
        if self.conductor == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Complex conjugate: maps r^k to r^(n-k). Conjugation is a field
    /// automorphism, so the conductor is unchanged.
    pub fn conj(&self) -> Self {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        let mut raw = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = if i == 0 { 0 } else { n as usize - i };
                raw[e] = &raw[e] + c;
            }
        }
        Cyclotomic {
            conductor: n,
            coeffs: pad(rrem_monic(&raw, &cyclo_poly_arc(n)), euler_phi(n) as usize),
        }
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// a * conj(a); real and non-negative, rational whenever a is rational
    /// or lies in an imaginary quadratic field, cyclotomic in general.
    pub fn abs_squared(&self) -> Self {
        self * &self.conj()
    }

    /// Scalar multiple; cheaper than full multiplication and conductor-safe.
    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo the
    /// (irreducible) cyclotomic polynomial. Errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidInput("inverse of zero".into()));
        }
        let modulus: Vec<Rational> = cyclo_poly_arc(self.conductor)
            .iter()
            .map(|c| Rational::from(c.clone()))
            .collect();
        let (g, s) = rext_gcd_mod(&self.coeffs, &modulus);
        debug_assert!(g.len() == 1 && g[0].is_one(), "cyclotomic polynomial is irreducible");
        let ginv = g[0].recip().expect("gcd of a nonzero residue is nonzero");
        let s: Vec<Rational> = s.iter().map(|c| c * &ginv).collect();
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: pad(
                rrem_monic(&s, &cyclo_poly_arc(self.conductor)),
                euler_phi(self.conductor) as usize,
            ),
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Cyclotomic::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Floating-point embedding with r_n = exp(2*pi*i/n).
    pub fn to_float(&self) -> Complex64 {
        let n = self.conductor as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let theta = 2.0 * std::f64::consts::PI * (i as f64) / n;
                acc += Complex64::new(theta.cos(), theta.sin()) * c.to_f64();
            }
        }
        acc
    }

    /// Exact square root of a non-negative integer, constructed from
    /// quadratic Gauss sums. The result is the non-negative root.
    pub fn sqrt_integer(d: i64) -> Result<Self> {
        if d < 0 {
            return Err(Error::InvalidInput(format!(
                "square root of negative integer {d}"
            )));
        }
        if d == 0 {
            return Ok(Self::zero());
        }
        let mut square_part = 1i64;
        let mut out = Cyclotomic::one();
        for (p, e) in factorize(d as u64) {
            for _ in 0..e / 2 {
                square_part *= p as i64;
            }
            if e % 2 == 1 {
                out = &out * &sqrt_prime(p);
            }
        }
        let out = out.scale(&Rational::from(square_part));
        debug_assert!(&out * &out == Cyclotomic::from_int(d));
        Ok(out)
    }

    /// Exact square root of a non-negative rational: sqrt(p/q) = sqrt(pq)/q.
    pub fn sqrt_rational(r: &Rational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::InvalidInput(format!(
                "square root of negative rational {r}"
            )));
        }
        let p = r.numer().clone();
        let q = r.denom().clone();
        let pq: BigInt = &p * &q;
        let pq_i64 = i64::try_from(pq)
            .map_err(|_| Error::InvalidInput("rational too large for exact square root".into()))?;
        let root = Self::sqrt_integer(pq_i64)?;
        Ok(root.scale(&Rational::from_big(BigInt::one(), q)?))
    }
}

fn modpow(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

/// sqrt(p) for prime p. For odd p the quadratic Gauss sum
/// g = sum legendre(k) r_p^k equals sqrt(p) when p = 1 mod 4 and
/// i*sqrt(p) when p = 3 mod 4; the sign is Gauss's theorem, and the
/// squaring oracle in the test suite revalidates every construction.
fn sqrt_prime(p: u64) -> Cyclotomic {
    if p == 2 {
        return &Cyclotomic::root_of_unity(8, 1) - &Cyclotomic::root_of_unity(8, 3);
    }
    let mut raw = vec![Rational::zero(); p as usize];
    for k in 1..p {
        let ls = modpow(k, (p - 1) / 2, p);
        raw[k as usize] = if ls == 1 {
            Rational::one()
        } else {
            Rational::from(-1)
        };
    }
    let g = Cyclotomic::minimize(
        p,
        pad(rrem_monic(&raw, &cyclo_poly_arc(p)), euler_phi(p) as usize),
    );
    if p % 4 == 1 {
        g
    } else {
        &g * &Cyclotomic::root_of_unity(4, 3)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let l = self.conductor.lcm(&other.conductor);
        self.lifted_coeffs(l) == other.lifted_coeffs(l)
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let l = self.conductor.lcm(&rhs.conductor);
        let a = self.lifted_coeffs(l);
        let b = rhs.lifted_coeffs(l);
        let sum: Vec<Rational> = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
        Cyclotomic::minimize(l, sum)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        let l = self.conductor.lcm(&rhs.conductor);
        let a = self.lifted_coeffs(l);
        let b = rhs.lifted_coeffs(l);
        let prod = rmul(&a, &b);
        Cyclotomic::minimize(
            l,
            pad(rrem_monic(&prod, &cyclo_poly_arc(l)), euler_phi(l) as usize),
        )
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "r{}", self.conductor)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Cyclotomic", 2)?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.serialize_field("conductor", &self.conductor)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            coeffs: Vec<Rational>,
            conductor: u64,
        }
        let raw = Raw::deserialize(deserializer)?;
        Cyclotomic::from_coeffs(raw.conductor, raw.coeffs)
            .map_err(|e| serde::de::Error::custom(format!("{e}")))
    }
}
