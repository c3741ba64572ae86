//! Born-rule observables over natural-number state vectors.
//!
//! States are vectors of nonnegative integers. All probabilities come out
//! as exact rationals built from two invariants of the permutation action:
//! the linear form L(n) = sum n_i and the quadratic form
//! Q(m, n) = sum m_i n_i. Projecting away the all-ones direction gives the
//! complement forms, whose zeros are destructive interference pairs.

use num::BigInt;
use rayon::prelude::*;

use crate::cyclo::{Cyclotomic, Rational};
use crate::{Error, Result};

/// A state vector with natural-number amplitudes.
pub type NatState = Vec<u64>;

fn check_dims(m: &[u64], n: &[u64]) -> Result<()> {
    if m.len() != n.len() {
        return Err(Error::DimensionMismatch(format!(
            "state lengths {} and {} differ",
            m.len(),
            n.len()
        )));
    }
    if m.is_empty() {
        return Err(Error::InvalidInput("states need at least one component".into()));
    }
    Ok(())
}

/// L(n): the sum of the components.
pub fn linear_invariant(n: &[u64]) -> BigInt {
    n.iter().map(|&v| BigInt::from(v)).sum()
}

/// Q(m, n): the componentwise inner product.
pub fn quadratic_invariant(m: &[u64], n: &[u64]) -> Result<BigInt> {
    check_dims(m, n)?;
    Ok(m.iter()
        .zip(n)
        .map(|(&a, &b)| BigInt::from(a) * BigInt::from(b))
        .sum())
}

/// Born probability in the full space: Q(m,n)^2 / (Q(m,m) Q(n,n)).
pub fn born_full(m: &[u64], n: &[u64]) -> Result<Rational> {
    check_dims(m, n)?;
    let qmm = quadratic_invariant(m, m)?;
    let qnn = quadratic_invariant(n, n)?;
    let den = qmm * qnn;
    if den == BigInt::from(0) {
        return Err(Error::InvalidInput("state vector must be nonzero".into()));
    }
    let q = quadratic_invariant(m, n)?;
    Rational::from_big(&q * &q, den)
}

/// Inner product after projecting away the all-ones direction:
/// Q(m,n) - L(m) L(n) / N.
pub fn complement_inner(m: &[u64], n: &[u64]) -> Result<Rational> {
    check_dims(m, n)?;
    let nn = BigInt::from(m.len());
    let num = BigInt::from(m.len()) * quadratic_invariant(m, n)?
        - linear_invariant(m) * linear_invariant(n);
    Rational::from_big(num, nn)
}

/// True when every component is equal; exactly these states vanish under
/// the complement projection.
pub fn is_uniform(v: &[u64]) -> bool {
    v.windows(2).all(|w| w[0] == w[1])
}

/// Born probability in the complement of the all-ones direction.
/// Uniform states carry no complement component and are rejected.
pub fn born_complement(m: &[u64], n: &[u64]) -> Result<Rational> {
    check_dims(m, n)?;
    if is_uniform(m) || is_uniform(n) {
        return Err(Error::InvalidInput(
            "uniform state has no complement component".into(),
        ));
    }
    let cmn = complement_inner(m, n)?;
    let den = complement_inner(m, m)? * complement_inner(n, n)?;
    Ok(&(&cmn * &cmn) / &den)
}

/// All ordered pairs (m, n) of non-uniform states with components in
/// 0..=bound whose complement inner product vanishes: the pairs a detector
/// confined to the complement subspace cannot tell apart from orthogonal
/// ones. Sorted lexicographically; both orderings of each pair appear.
pub fn interference_solutions(dim: usize, bound: u64) -> Vec<(NatState, NatState)> {
    if dim == 0 {
        return Vec::new();
    }
    // all vectors in lexicographic order, uniform ones dropped
    let mut vectors: Vec<NatState> = Vec::new();
    let mut cur = vec![0u64; dim];
    loop {
        if !is_uniform(&cur) {
            vectors.push(cur.clone());
        }
        let mut k = dim;
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            if cur[k] < bound {
                cur[k] += 1;
                for v in &mut cur[k + 1..] {
                    *v = 0;
                }
                break;
            }
            if k == 0 {
                return finish_interference(vectors, dim);
            }
        }
    }
}

fn finish_interference(vectors: Vec<NatState>, dim: usize) -> Vec<(NatState, NatState)> {
    let l: Vec<u128> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| x as u128).sum())
        .collect();
    let mut sols: Vec<(NatState, NatState)> = vectors
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, m)| {
            let vectors = &vectors;
            let l = &l;
            (0..vectors.len()).filter_map(move |j| {
                let n = &vectors[j];
                let q: u128 = m.iter().zip(n).map(|(&a, &b)| a as u128 * b as u128).sum();
                if dim as u128 * q == l[i] * l[j] {
                    Some((m.clone(), n.clone()))
                } else {
                    None
                }
            })
        })
        .collect();
    sols.sort();
    sols
}

/// Hermitian inner product sum conj(a_i) b_i of cyclotomic vectors.
pub fn hermitian_inner(a: &[Cyclotomic], b: &[Cyclotomic]) -> Result<Cyclotomic> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::DimensionMismatch(format!(
            "vector lengths {} and {} unusable",
            a.len(),
            b.len()
        )));
    }
    let mut s = Cyclotomic::zero();
    for (x, y) in a.iter().zip(b) {
        s = &s + &(&x.conj() * y);
    }
    Ok(s)
}

/// Squared norm of the wedge product: sum over i < j of
/// |a_i b_j - a_j b_i|^2. Zero exactly when the vectors are parallel.
pub fn grassmann_norm_squared(a: &[Cyclotomic], b: &[Cyclotomic]) -> Result<Cyclotomic> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::DimensionMismatch(format!(
            "vector lengths {} and {} unusable",
            a.len(),
            b.len()
        )));
    }
    let mut s = Cyclotomic::zero();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let minor = &(&a[i] * &b[j]) - &(&a[j] * &b[i]);
            s = &s + &minor.abs_squared();
        }
    }
    Ok(s)
}

/// Born probability written symmetrically through the wedge norm:
/// |<a,b>|^2 / (|<a,b>|^2 + ||a wedge b||^2). The denominator equals
/// ||a||^2 ||b||^2, so this matches the usual expression; the quotient must
/// come out rational or the value is rejected.
pub fn born_symmetric(a: &[Cyclotomic], b: &[Cyclotomic]) -> Result<Rational> {
    let g = hermitian_inner(a, b)?.abs_squared();
    let w = grassmann_norm_squared(a, b)?;
    let total = &g + &w;
    if total.is_zero() {
        return Err(Error::InvalidInput("state vector must be nonzero".into()));
    }
    let ratio = g.div(&total)?;
    ratio.rational_part().ok_or_else(|| {
        Error::NotRational(format!("probability {ratio} lies outside the rationals"))
    })
}

fn check_three(m: &[u64], n: &[u64]) -> Result<()> {
    check_dims(m, n)?;
    if m.len() != 3 {
        return Err(Error::DimensionMismatch(format!(
            "cyclic three-component forms need length 3, got {}",
            m.len()
        )));
    }
    Ok(())
}

fn shifted_form(m: &[u64], n: &[u64], shift: usize) -> BigInt {
    (0..m.len())
        .map(|i| BigInt::from(m[i]) * BigInt::from(n[(i + shift) % n.len()]))
        .sum()
}

/// Inner product of two three-component states after projecting onto the
/// eigenline of the cyclic shift with eigenvalue exp(2 pi i / 3):
/// (Q + r C + r^2 C') / 3 where C and C' pair each component with its
/// cyclic neighbors.
pub fn c3_inner(m: &[u64], n: &[u64]) -> Result<Cyclotomic> {
    check_three(m, n)?;
    let third = BigInt::from(3);
    let q = Cyclotomic::from_rational(Rational::from_big(shifted_form(m, n, 0), third.clone())?);
    let c = Rational::from_big(shifted_form(m, n, 2), third.clone())?;
    let cp = Rational::from_big(shifted_form(m, n, 1), third)?;
    let r = Cyclotomic::root_of_unity(3, 1);
    let r2 = Cyclotomic::root_of_unity(3, 2);
    Ok(&(&q + &r.scale(&c)) + &r2.scale(&cp))
}

/// Squared modulus of the c3 projected inner product, in closed rational
/// form: (Q(m,m) - C(m,m)) (Q(n,n) - C(n,n)) / 9.
pub fn c3_born_subspace(m: &[u64], n: &[u64]) -> Result<Rational> {
    check_three(m, n)?;
    let wm = shifted_form(m, m, 0) - shifted_form(m, m, 2);
    let wn = shifted_form(n, n, 0) - shifted_form(n, n, 2);
    Rational::from_big(wm * wn, BigInt::from(9))
}
