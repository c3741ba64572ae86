//! Conjugacy classes, class-algebra structure constants, and exact
//! character tables.
//!
//! Character tables are computed modulo a prime l chosen so that the field
//! F_l contains enough roots of unity: l = 1 (mod exponent), l^2 > 4|G|,
//! l does not divide |G|. The class matrices M_i with (M_i)[j][k] = c_ijk
//! share a common eigenbasis over F_l; each eigenvector, scaled to have
//! first entry 1, carries the class scalars w_i = |K_i| x(g_i) / x(1) of one
//! irreducible character x. Dimensions are recovered from the second
//! orthogonality sum and the modular values are lifted to exact cyclotomic
//! numbers through a discrete Fourier inversion over the power map.

use crate::cyclo::{Cyclotomic, Rational};
use crate::perm::FiniteGroup;
use crate::{Error, Result};

/// The conjugacy classes of a group, in a reproducible order: by element
/// order, then class size, then smallest element index. The identity class
/// is always first.
#[derive(Clone)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    representatives: Vec<usize>,
    inverse_class: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn new(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for t in 0..n {
            if class_of[t] != usize::MAX {
                continue;
            }
            let mut members = Vec::new();
            for x in 0..n {
                let c = g.product(g.product(g.inverse_index(x), t), x);
                if class_of[c] == usize::MAX {
                    class_of[c] = classes.len();
                    members.push(c);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes.sort_by_key(|m| (g.element_order(m[0]), m.len(), m[0]));
        for (i, members) in classes.iter().enumerate() {
            for &m in members {
                class_of[m] = i;
            }
        }
        let representatives: Vec<usize> = classes.iter().map(|m| m[0]).collect();
        let inverse_class: Vec<usize> = representatives
            .iter()
            .map(|&r| class_of[g.inverse_index(r)])
            .collect();
        ConjugacyClasses {
            classes,
            class_of,
            representatives,
            inverse_class,
        }
    }

    pub fn count(&self) -> usize {
        self.classes.len()
    }

    /// Member element indices of class i, sorted ascending.
    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn size(&self, i: usize) -> usize {
        self.classes[i].len()
    }

    /// Smallest element index in class i.
    pub fn representative(&self, i: usize) -> usize {
        self.representatives[i]
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Index of the class holding the inverses of class i.
    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse_class[i]
    }

    /// Structure constant c_ijk: the number of pairs (a, b) in K_i x K_j
    /// with a*b equal to the representative of K_k.
    pub fn coefficient(&self, g: &FiniteGroup, i: usize, j: usize, k: usize) -> u64 {
        let t = self.representatives[k];
        self.classes[i]
            .iter()
            .filter(|&&a| self.class_of[g.product(g.inverse_index(a), t)] == j)
            .count() as u64
    }

    /// Class matrix M_i with entries (M_i)[j][k] = c_ijk.
    pub fn class_matrix(&self, g: &FiniteGroup, i: usize) -> Vec<Vec<u64>> {
        let r = self.count();
        let mut m = vec![vec![0u64; r]; r];
        for (k, &t) in self.representatives.iter().enumerate() {
            for &a in &self.classes[i] {
                let b = g.product(g.inverse_index(a), t);
                m[self.class_of[b]][k] += 1;
            }
        }
        m
    }
}

/// An exact character table: one row per irreducible character, one column
/// per conjugacy class, entries cyclotomic. Rows are sorted by dimension,
/// then entrywise descending on the floating embedding (real part before
/// imaginary part), so the trivial character is row 0.
pub struct CharacterTable {
    classes: ConjugacyClasses,
    dimensions: Vec<usize>,
    rows: Vec<Vec<Cyclotomic>>,
    exponent: u64,
    prime: u64,
}

impl CharacterTable {
    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn num_characters(&self) -> usize {
        self.rows.len()
    }

    pub fn dimensions(&self) -> &[usize] {
        &self.dimensions
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn value(&self, character: usize, class: usize) -> &Cyclotomic {
        &self.rows[character][class]
    }

    /// The group exponent used for the cyclotomic lift.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// The working prime of the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }
}

// ---- arithmetic in F_l, l < 2^20 (products fit in u64) ----

#[derive(Clone, Copy)]
struct Fp {
    l: u64,
}

impl Fp {
    fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.l
    }
    fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.l - b) % self.l
    }
    fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.l
    }
    fn pow(self, mut a: u64, mut e: u64) -> u64 {
        a %= self.l;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }
    fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.l != 0);
        self.pow(a, self.l - 2)
    }
}

/// Row-reduce in place; returns the pivot columns.
fn rref(m: &mut [Vec<u64>], f: Fp) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(p, r);
        let inv = f.inv(m[r][c]);
        for cc in c..cols {
            m[r][cc] = f.mul(m[r][cc], inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for cc in c..cols {
                    let d = f.mul(factor, m[r][cc]);
                    m[i][cc] = f.sub(m[i][cc], d);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the kernel of a square matrix, as column vectors.
fn kernel(a: &[Vec<u64>], f: Fp) -> Vec<Vec<u64>> {
    let m = a.len();
    let mut work: Vec<Vec<u64>> = a.to_vec();
    let pivots = rref(&mut work, f);
    let mut basis = Vec::new();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; m];
    for (row, col) in pivots.iter().copied().enumerate() {
        pivot_of_col[col] = Some(row);
    }
    for free in 0..m {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; m];
        v[free] = 1;
        for col in 0..m {
            if let Some(row) = pivot_of_col[col] {
                v[col] = f.sub(0, work[row][free]);
            }
        }
        basis.push(v);
    }
    basis
}

/// Matrix of the operator restricted to the span of the basis columns.
/// Requires the span to be invariant.
fn restrict(op: &[Vec<u64>], basis: &[Vec<u64>], f: Fp) -> Result<Vec<Vec<u64>>> {
    let n = op.len();
    let m = basis.len();
    let mut aug = vec![vec![0u64; 2 * m]; n];
    for (j, b) in basis.iter().enumerate() {
        for i in 0..n {
            aug[i][j] = b[i];
        }
        for i in 0..n {
            let mut s = 0u64;
            for k in 0..n {
                s = f.add(s, f.mul(op[i][k], b[k]));
            }
            aug[i][m + j] = s;
        }
    }
    let pivots = rref(&mut aug, f);
    if pivots.len() < m || pivots[..m] != (0..m).collect::<Vec<_>>()[..] {
        return Err(Error::Internal(
            "subspace not invariant under class matrix".into(),
        ));
    }
    let mut a = vec![vec![0u64; m]; m];
    for i in 0..m {
        for j in 0..m {
            a[i][j] = aug[i][m + j];
        }
    }
    Ok(a)
}

/// Characteristic polynomial, ascending coefficients, monic. Uses a
/// Hessenberg reduction so it stays valid when the dimension exceeds l.
fn char_poly(a: &[Vec<u64>], f: Fp) -> Vec<u64> {
    let m = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    for k in 0..m.saturating_sub(2) {
        let Some(p) = (k + 1..m).find(|&r| h[r][k] != 0) else {
            continue;
        };
        if p != k + 1 {
            h.swap(p, k + 1);
            for row in h.iter_mut() {
                row.swap(p, k + 1);
            }
        }
        let pivinv = f.inv(h[k + 1][k]);
        for r in k + 2..m {
            let factor = f.mul(h[r][k], pivinv);
            if factor == 0 {
                continue;
            }
            for c in 0..m {
                let d = f.mul(factor, h[k + 1][c]);
                h[r][c] = f.sub(h[r][c], d);
            }
            for rr in 0..m {
                let d = f.mul(factor, h[rr][r]);
                h[rr][k + 1] = f.add(h[rr][k + 1], d);
            }
        }
    }
    // p_k(x) = (x - H[k-1][k-1]) p_{k-1}
    //          - sum_i H[i][k-1] (prod_{j=i..k-2} H[j+1][j]) p_i
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=m {
        let mut pk = vec![0u64; k + 1];
        for (idx, &c) in polys[k - 1].iter().enumerate() {
            pk[idx + 1] = f.add(pk[idx + 1], c);
            let d = f.mul(h[k - 1][k - 1], c);
            pk[idx] = f.sub(pk[idx], d);
        }
        let mut tail = 1u64;
        for i in (0..k.saturating_sub(1)).rev() {
            tail = f.mul(tail, h[i + 1][i]);
            let coef = f.mul(h[i][k - 1], tail);
            if coef == 0 {
                continue;
            }
            for (idx, &c) in polys[i].iter().enumerate() {
                let d = f.mul(coef, c);
                pk[idx] = f.sub(pk[idx], d);
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

fn poly_roots(p: &[u64], f: Fp) -> Vec<u64> {
    let degree = p.len().saturating_sub(1);
    let mut roots = Vec::new();
    for x in 0..f.l {
        let mut acc = 0u64;
        for &c in p.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        if acc == 0 {
            roots.push(x);
            if roots.len() == degree {
                break;
            }
        }
    }
    roots
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime l = 1 (mod e) with l^2 > 4n, l not dividing n, l < 2^20.
fn working_prime(e: u64, n: u64) -> Result<u64> {
    let mut l = e + 1;
    while l < (1 << 20) {
        if l * l > 4 * n && n % l != 0 && is_prime(l) {
            return Ok(l);
        }
        l += e;
    }
    Err(Error::InvalidInput(format!(
        "no working prime below 2^20 for exponent {e} and order {n}"
    )))
}

fn primitive_root(f: Fp) -> u64 {
    let mut factors = Vec::new();
    let mut m = f.l - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..f.l)
        .find(|&w| factors.iter().all(|&p| f.pow(w, (f.l - 1) / p) != 1))
        .expect("every prime field has a primitive root")
}

/// Orders two character rows: dimension ascending, then entrywise
/// descending on (re, im) of the floating embedding at the first class
/// where the exact values differ.
fn compare_rows(
    a: &(usize, Vec<Cyclotomic>),
    b: &(usize, Vec<Cyclotomic>),
) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    a.0.cmp(&b.0).then_with(|| {
        for (x, y) in a.1.iter().zip(&b.1) {
            if x == y {
                continue;
            }
            let (xf, yf) = (x.to_float(), y.to_float());
            let ord = yf
                .re
                .partial_cmp(&xf.re)
                .unwrap()
                .then(yf.im.partial_cmp(&xf.im).unwrap());
            if ord != Ordering::Equal {
                return ord;
            }
            // distinct values whose floats collide: any fixed exact key
            return x.to_string().cmp(&y.to_string());
        }
        Ordering::Equal
    })
}

/// Computes the exact character table of a finite permutation group.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let classes = ConjugacyClasses::new(g);
    let r = classes.count();
    let n = g.order() as u64;
    let e = g.exponent();
    let l = working_prime(e, n)?;
    let f = Fp { l };
    let z = f.pow(primitive_root(f), (l - 1) / e);

    let class_mats: Vec<Vec<Vec<u64>>> = (1..r)
        .map(|i| {
            classes
                .class_matrix(g, i)
                .into_iter()
                .map(|row| row.into_iter().map(|v| v % l).collect())
                .collect()
        })
        .collect();

    // split the common eigenbasis, one class matrix at a time
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for m in &class_mats {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let a = restrict(m, &space, f)?;
            let dim = space.len();
            let mut found = 0;
            for root in poly_roots(&char_poly(&a, f), f) {
                let shifted: Vec<Vec<u64>> = (0..dim)
                    .map(|i| {
                        (0..dim)
                            .map(|j| {
                                if i == j {
                                    f.sub(a[i][j], root)
                                } else {
                                    a[i][j]
                                }
                            })
                            .collect()
                    })
                    .collect();
                // one eigenspace of this operator inside the parent space
                let eigenspace: Vec<Vec<u64>> = kernel(&shifted, f)
                    .into_iter()
                    .map(|coords| {
                        (0..r)
                            .map(|i| {
                                let mut s = 0u64;
                                for (j, b) in space.iter().enumerate() {
                                    s = f.add(s, f.mul(coords[j], b[i]));
                                }
                                s
                            })
                            .collect()
                    })
                    .collect();
                found += eigenspace.len();
                if !eigenspace.is_empty() {
                    next.push(eigenspace);
                }
            }
            if found != dim {
                return Err(Error::Internal(
                    "class matrix is not diagonalizable over the working prime".into(),
                ));
            }
        }
        spaces = next;
    }

    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Internal(
            "class matrices failed to separate the characters".into(),
        ));
    }

    let sqrt_n = (1..).take_while(|d| d * d <= n).last().unwrap_or(1);
    let mut rows: Vec<(usize, Vec<Cyclotomic>)> = Vec::with_capacity(r);
    for space in &spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(Error::Internal("eigenvector vanishes on the identity".into()));
        }
        let scale = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, scale)).collect();

        // second orthogonality: d^2 = |G| / sum_i w_i w_{i'} / |K_i|
        let mut s = 0u64;
        for i in 0..r {
            let term = f.mul(
                f.mul(omega[i], omega[classes.inverse_class(i)]),
                f.inv(classes.size(i) as u64 % l),
            );
            s = f.add(s, term);
        }
        let target = f.mul(n % l, f.inv(s));
        let d = (1..=sqrt_n)
            .find(|&d| f.mul(d % l, d % l) == target)
            .ok_or_else(|| Error::Internal("no dimension matches the eigenvector".into()))?;

        let theta: Vec<u64> = (0..r)
            .map(|i| f.mul(f.mul(d % l, omega[i]), f.inv(classes.size(i) as u64 % l)))
            .collect();

        // lift each class value from the theta values on its power classes
        let zinv = f.inv(z);
        let einv = f.inv(e % l);
        let mut row = Vec::with_capacity(r);
        for i in 0..r {
            let rep = classes.representative(i);
            let mut power_class = Vec::with_capacity(e as usize);
            let mut idx = 0usize;
            for _ in 0..e {
                power_class.push(classes.class_of(idx));
                idx = g.product(idx, rep);
            }
            let mut value = Cyclotomic::zero();
            let mut total = 0u64;
            for t in 0..e {
                let mut acc = 0u64;
                for (s_exp, &pc) in power_class.iter().enumerate() {
                    let w = f.pow(zinv, (s_exp as u64 * t) % e);
                    acc = f.add(acc, f.mul(theta[pc], w));
                }
                let mult = f.mul(einv, acc);
                total += mult;
                if mult != 0 {
                    let root = Cyclotomic::root_of_unity(e, t as i64);
                    value = &value + &root.scale(&Rational::new(mult as i64, 1));
                }
            }
            if total != d {
                return Err(Error::Internal(
                    "root multiplicities do not sum to the dimension".into(),
                ));
            }
            row.push(value);
        }
        rows.push((d as usize, row));
    }

    rows.sort_by(compare_rows);
    if rows.iter().map(|(d, _)| (d * d) as u64).sum::<u64>() != n {
        return Err(Error::Internal(
            "squared dimensions do not sum to the group order".into(),
        ));
    }
    let dimensions = rows.iter().map(|(d, _)| *d).collect();
    let table_rows = rows.into_iter().map(|(_, row)| row).collect();
    Ok(CharacterTable {
        classes,
        dimensions,
        rows: table_rows,
        exponent: e,
        prime: l,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{Permutation, DEFAULT_CAP};

    fn group(gens: &[(&str, usize)]) -> FiniteGroup {
        let perms: Vec<Permutation> = gens
            .iter()
            .map(|&(text, degree)| Permutation::parse(text, degree).unwrap())
            .collect();
        FiniteGroup::generate(&perms, DEFAULT_CAP).unwrap()
    }

    fn s3() -> FiniteGroup {
        group(&[("(2,3)", 3), ("(1,3,2)", 3)])
    }

    fn cyc(v: i64) -> Cyclotomic {
        Cyclotomic::from_int(v)
    }

    fn r3(k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(3, k)
    }

    #[test]
    fn s3_classes_are_ordered_and_sized() {
        let g = s3();
        let cl = ConjugacyClasses::new(&g);
        assert_eq!(cl.count(), 3);
        let sizes: Vec<usize> = (0..3).map(|i| cl.size(i)).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        let reps: Vec<String> = (0..3)
            .map(|i| g.element(cl.representative(i)).cycle_string())
            .collect();
        assert_eq!(reps, vec!["()", "(2,3)", "(1,3,2)"]);
        for i in 0..3 {
            assert_eq!(cl.inverse_class(i), i);
            for &m in cl.class(i) {
                assert_eq!(cl.class_of(m), i);
            }
        }
    }

    #[test]
    fn s3_structure_constants_frozen() {
        let g = s3();
        let cl = ConjugacyClasses::new(&g);
        assert_eq!(cl.coefficient(&g, 1, 1, 0), 3);
        assert_eq!(cl.coefficient(&g, 1, 1, 2), 3);
        assert_eq!(cl.coefficient(&g, 1, 2, 1), 2);
        assert_eq!(cl.coefficient(&g, 2, 2, 0), 2);
        assert_eq!(cl.coefficient(&g, 2, 2, 2), 1);
        assert_eq!(cl.coefficient(&g, 1, 1, 1), 0);
        // mass balance: sum_k c_ijk |K_k| = |K_i| |K_j|
        for i in 0..3 {
            for j in 0..3 {
                let total: u64 = (0..3)
                    .map(|k| cl.coefficient(&g, i, j, k) * cl.size(k) as u64)
                    .sum();
                assert_eq!(total, (cl.size(i) * cl.size(j)) as u64);
            }
        }
    }

    #[test]
    fn class_matrix_rows_match_coefficients() {
        let g = group(&[("(1,2,3,4)", 4), ("(1,2)", 4)]);
        let cl = ConjugacyClasses::new(&g);
        for i in 0..cl.count() {
            let m = cl.class_matrix(&g, i);
            for j in 0..cl.count() {
                for k in 0..cl.count() {
                    assert_eq!(m[j][k], cl.coefficient(&g, i, j, k));
                }
            }
        }
    }

    #[test]
    fn cyclic3_table_frozen() {
        let g = group(&[("(1,2,3)", 3)]);
        let t = character_table(&g).unwrap();
        assert_eq!(t.prime(), 7);
        assert_eq!(t.exponent(), 3);
        assert_eq!(t.dimensions(), &[1, 1, 1]);
        let expect = vec![
            vec![cyc(1), cyc(1), cyc(1)],
            vec![cyc(1), r3(1), r3(2)],
            vec![cyc(1), r3(2), r3(1)],
        ];
        assert_eq!(t.rows(), &expect[..]);
    }

    #[test]
    fn s3_table_frozen() {
        let t = character_table(&s3()).unwrap();
        assert_eq!(t.prime(), 7);
        assert_eq!(t.dimensions(), &[1, 1, 2]);
        let expect = vec![
            vec![cyc(1), cyc(1), cyc(1)],
            vec![cyc(1), cyc(-1), cyc(1)],
            vec![cyc(2), cyc(0), cyc(-1)],
        ];
        assert_eq!(t.rows(), &expect[..]);
    }

    #[test]
    fn cyclic4_table_frozen() {
        let g = group(&[("(1,2,3,4)", 4)]);
        let t = character_table(&g).unwrap();
        assert_eq!(t.prime(), 5);
        // classes: (), (1,3)(2,4), (1,2,3,4), (1,4,3,2)
        let reps: Vec<String> = (0..4)
            .map(|i| g.element(t.classes().representative(i)).cycle_string())
            .collect();
        assert_eq!(reps, vec!["()", "(1,3)(2,4)", "(1,2,3,4)", "(1,4,3,2)"]);
        let i = Cyclotomic::root_of_unity(4, 1);
        let expect = vec![
            vec![cyc(1), cyc(1), cyc(1), cyc(1)],
            vec![cyc(1), cyc(1), cyc(-1), cyc(-1)],
            vec![cyc(1), cyc(-1), i.clone(), -&i],
            vec![cyc(1), cyc(-1), -&i, i.clone()],
        ];
        assert_eq!(t.rows(), &expect[..]);
    }

    #[test]
    fn alternating4_table_frozen() {
        let g = group(&[("(1,2,3)", 4), ("(2,3,4)", 4)]);
        let t = character_table(&g).unwrap();
        assert_eq!(t.prime(), 7);
        assert_eq!(t.dimensions(), &[1, 1, 1, 3]);
        let sizes: Vec<usize> = (0..4).map(|i| t.classes().size(i)).collect();
        assert_eq!(sizes, vec![1, 3, 4, 4]);
        let reps: Vec<String> = (0..4)
            .map(|i| g.element(t.classes().representative(i)).cycle_string())
            .collect();
        assert_eq!(reps, vec!["()", "(1,2)(3,4)", "(2,3,4)", "(1,2,3)"]);
        let expect = vec![
            vec![cyc(1), cyc(1), cyc(1), cyc(1)],
            vec![cyc(1), cyc(1), r3(1), r3(2)],
            vec![cyc(1), cyc(1), r3(2), r3(1)],
            vec![cyc(3), cyc(-1), cyc(0), cyc(0)],
        ];
        assert_eq!(t.rows(), &expect[..]);
    }

    #[test]
    fn trivial_group_table() {
        let g = FiniteGroup::generate(&[Permutation::identity(1)], DEFAULT_CAP).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.dimensions(), &[1]);
        assert_eq!(t.rows(), &[vec![cyc(1)]]);
    }

    #[test]
    fn tables_satisfy_orthogonality_and_degree_constraints() {
        let groups = [
            s3(),
            group(&[("(1,2,3,4)", 4)]),
            group(&[("(1,2,3,4)", 4), ("(1,3)", 4)]),
            group(&[("(1,2,3,4)(5,6,7,8)", 8), ("(1,5,3,7)(2,8,4,6)", 8)]),
            group(&[("(1,2,3)", 4), ("(2,3,4)", 4)]),
            group(&[("(1,2,3,4)", 4), ("(1,2)", 4)]),
        ];
        for g in &groups {
            let t = character_table(g).unwrap();
            let n = g.order();
            let r = t.num_characters();
            assert_eq!(r, t.classes().count());
            let dim_sq: usize = t.dimensions().iter().map(|d| d * d).sum();
            assert_eq!(dim_sq, n);
            for &d in t.dimensions() {
                assert_eq!(n % d, 0, "degree {d} must divide order {n}");
            }
            // row orthogonality, conjugating the second factor
            for a in 0..r {
                for b in 0..r {
                    let mut s = Cyclotomic::zero();
                    for i in 0..t.classes().count() {
                        let term = t.value(a, i) * &t.value(b, i).conj();
                        s = &s + &term.scale(&Rational::new(t.classes().size(i) as i64, 1));
                    }
                    let expect = if a == b { cyc(n as i64) } else { cyc(0) };
                    assert_eq!(s, expect);
                }
            }
            // column orthogonality
            for i in 0..t.classes().count() {
                for j in 0..t.classes().count() {
                    let mut s = Cyclotomic::zero();
                    for a in 0..r {
                        s = &s + &(t.value(a, i) * &t.value(a, j).conj());
                    }
                    let expect = if i == j {
                        cyc((n / t.classes().size(i)) as i64)
                    } else {
                        cyc(0)
                    };
                    assert_eq!(s, expect);
                }
            }
            // identity column carries the dimensions
            for a in 0..r {
                assert_eq!(t.value(a, 0), &cyc(t.dimensions()[a] as i64));
            }
        }
    }

    #[test]
    fn class_scalars_satisfy_structure_constants() {
        // w_i w_j = sum_k c_ijk w_k with w_i = |K_i| x(i) / x(1)
        for g in [s3(), group(&[("(1,2,3,4)(5,6,7,8)", 8), ("(1,5,3,7)(2,8,4,6)", 8)])] {
            let t = character_table(&g).unwrap();
            let cl = t.classes();
            for a in 0..t.num_characters() {
                let d = t.dimensions()[a] as i64;
                let omega: Vec<Cyclotomic> = (0..cl.count())
                    .map(|i| t.value(a, i).scale(&Rational::new(cl.size(i) as i64, d)))
                    .collect();
                for i in 0..cl.count() {
                    for j in 0..cl.count() {
                        let mut rhs = Cyclotomic::zero();
                        for k in 0..cl.count() {
                            let c = cl.coefficient(&g, i, j, k);
                            if c > 0 {
                                rhs = &rhs + &omega[k].scale(&Rational::new(c as i64, 1));
                            }
                        }
                        assert_eq!(&omega[i] * &omega[j], rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn working_primes_frozen() {
        assert_eq!(character_table(&s3()).unwrap().prime(), 7);
        assert_eq!(
            character_table(&group(&[("(1,2,3,4)", 4), ("(1,2)", 4)]))
                .unwrap()
                .prime(),
            13
        );
        assert_eq!(
            character_table(&group(&[("(1,2,3,4)", 4), ("(1,3)", 4)]))
                .unwrap()
                .prime(),
            13
        );
    }

    #[test]
    fn dihedral_and_quaternion_tables_are_integral() {
        for gens in [
            [("(1,2,3,4)", 4), ("(1,3)", 4)],
            [("(1,2,3,4)(5,6,7,8)", 8), ("(1,5,3,7)(2,8,4,6)", 8)],
        ] {
            let g = group(&gens);
            let t = character_table(&g).unwrap();
            let mut dims = t.dimensions().to_vec();
            dims.sort_unstable();
            assert_eq!(dims, vec![1, 1, 1, 1, 2]);
            for row in t.rows() {
                for v in row {
                    assert!(v.is_rational(), "expected integer entry, got {v}");
                }
            }
        }
    }
}
