//! Exact matrices over the cyclotomic numbers, permutation representations,
//! and their decomposition into irreducible invariant blocks.
//!
//! A permutation p of n points is represented by the 0/1 matrix with
//! entry (i, p(i)) equal to 1, so matrices compose in the same order as
//! permutations. Decomposition produces a unitary transform whose columns
//! are orthonormal eigenbasis vectors extracted from the isotypic
//! projectors, refined into irreducible blocks where a splitting operator
//! from the action's centralizer algebra is available.

use num::BigInt;
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::classalg::{character_table, CharacterTable, ConjugacyClasses};
use crate::cyclo::{Cyclotomic, Rational};
use crate::perm::{CosetAction, FiniteGroup, Permutation};
use crate::{Error, Result};

/// A dense matrix with cyclotomic entries, stored row-major.
#[derive(Clone, PartialEq)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Cyclotomic>>,
}

impl CycMatrix {
    pub fn new(entries: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let rows = entries.len();
        if rows == 0 {
            return Err(Error::InvalidInput("matrix needs at least one row".into()));
        }
        let cols = entries[0].len();
        if cols == 0 {
            return Err(Error::InvalidInput("matrix needs at least one column".into()));
        }
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("matrix rows have unequal length".into()));
        }
        Ok(CycMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        CycMatrix {
            rows,
            cols,
            entries: vec![vec![Cyclotomic::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CycMatrix::zero(n, n);
        for i in 0..n {
            m.entries[i][i] = Cyclotomic::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Cyclotomic) {
        self.entries[i][j] = value;
    }

    pub fn entries(&self) -> &[Vec<Cyclotomic>] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<Cyclotomic> {
        self.entries.iter().map(|row| row[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Cyclotomic>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn from_columns(columns: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::InvalidInput("matrix needs at least one column".into()));
        }
        let rows = columns[0].len();
        if rows == 0 || columns.iter().any(|c| c.len() != rows) {
            return Err(Error::InvalidInput("columns have unequal length".into()));
        }
        let entries = (0..rows)
            .map(|i| columns.iter().map(|c| c[i].clone()).collect())
            .collect();
        CycMatrix::new(entries)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(CycMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = CycMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.entries[k][j];
                    if !b.is_zero() {
                        out.entries[i][j] = &out.entries[i][j] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot apply {}x{} to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(self
            .entries
            .iter()
            .map(|row| {
                let mut s = Cyclotomic::zero();
                for (a, x) in row.iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        s = &s + &(a * x);
                    }
                }
                s
            })
            .collect())
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|x| x.scale(r)).collect())
                .collect(),
        }
    }

    pub fn scale_cyclotomic(&self, c: &Cyclotomic) -> Self {
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.entries[i][j].clone()).collect())
            .collect();
        CycMatrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn conjugate_transpose(&self) -> Self {
        let entries = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.entries[i][j].conj()).collect())
            .collect();
        CycMatrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn trace(&self) -> Result<Cyclotomic> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "trace of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut s = Cyclotomic::zero();
        for i in 0..self.rows {
            s = &s + &self.entries[i][i];
        }
        Ok(s)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(|x| x.is_zero()))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.entries.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
            })
    }

    /// Exact inverse by Gauss-Jordan elimination over the cyclotomic field.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "inverse of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut work = self.entries.clone();
        let mut inv = CycMatrix::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !work[r][col].is_zero())
                .ok_or_else(|| Error::InvalidInput("matrix is singular".into()))?;
            work.swap(col, pivot);
            inv.swap(col, pivot);
            let scale = work[col][col].inv()?;
            for j in 0..n {
                work[col][j] = &work[col][j] * &scale;
                inv[col][j] = &inv[col][j] * &scale;
            }
            for r in 0..n {
                if r == col || work[r][col].is_zero() {
                    continue;
                }
                let factor = work[r][col].clone();
                for j in 0..n {
                    work[r][j] = &work[r][j] - &(&factor * &work[col][j]);
                    inv[r][j] = &inv[r][j] - &(&factor * &inv[col][j]);
                }
            }
        }
        Ok(CycMatrix { rows: n, cols: n, entries: inv })
    }

    fn accumulate(&mut self, i: usize, j: usize, v: &Cyclotomic) {
        self.entries[i][j] = &self.entries[i][j] + v;
    }

    /// Rows reordered so row i of the result is row p(i) of self; this is
    /// the product perm_matrix(p) * self without the general multiply.
    fn permuted_rows(&self, p: &Permutation) -> Self {
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| self.entries[p.image_of(i)].clone())
                .collect(),
        }
    }
}

impl std::fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for CycMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CycMatrix", 3)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &self.entries)?;
        st.serialize_field("rows", &self.rows)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct RawMatrix {
    cols: usize,
    entries: Vec<Vec<Cyclotomic>>,
    rows: usize,
}

impl<'de> Deserialize<'de> for CycMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawMatrix::deserialize(deserializer)?;
        let m = CycMatrix::new(raw.entries).map_err(D::Error::custom)?;
        if m.rows != raw.rows || m.cols != raw.cols {
            return Err(D::Error::custom("matrix dimension fields disagree with entries"));
        }
        Ok(m)
    }
}

/// The 0/1 matrix of a permutation: entry (i, p(i)) is 1.
pub fn perm_matrix(p: &Permutation) -> CycMatrix {
    let n = p.degree();
    let mut m = CycMatrix::zero(n, n);
    for i in 0..n {
        m.set(i, p.image_of(i), Cyclotomic::one());
    }
    m
}

/// Characteristic polynomial of any permutation matrix with the given
/// cycle type: the product of (x^len - 1)^count. Ascending coefficients.
pub fn char_poly_from_cycle_type(cycle_type: &[(usize, usize)]) -> Vec<BigInt> {
    let mut acc = vec![BigInt::from(1)];
    for &(len, count) in cycle_type {
        for _ in 0..count {
            let mut next = vec![BigInt::from(0); acc.len() + len];
            for (i, c) in acc.iter().enumerate() {
                next[i + len] += c;
                next[i] -= c;
            }
            acc = next;
        }
    }
    acc
}

fn float_descending(a: &Cyclotomic, b: &Cyclotomic) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    if a == b {
        return Ordering::Equal;
    }
    let (fa, fb) = (a.to_float(), b.to_float());
    fb.re
        .partial_cmp(&fa.re)
        .unwrap()
        .then(fb.im.partial_cmp(&fa.im).unwrap())
        .then_with(|| a.to_string().cmp(&b.to_string()))
}

/// Eigenvalues of the permutation matrix, with multiplicity: for each
/// cycle of length len, all len-th roots of unity. Sorted descending by
/// (re, im) of the floating embedding.
pub fn perm_eigenvalues(p: &Permutation) -> Vec<Cyclotomic> {
    let mut out = Vec::with_capacity(p.degree());
    for (len, count) in p.cycle_type() {
        for k in 0..len {
            let root = Cyclotomic::root_of_unity(len as u64, k as i64);
            for _ in 0..count {
                out.push(root.clone());
            }
        }
    }
    out.sort_by(float_descending);
    out
}

/// Group-averaged inner product of two class functions:
/// (1/|G|) sum_i |K_i| a_i conj(b_i).
pub fn class_function_inner(
    classes: &ConjugacyClasses,
    order: usize,
    a: &[Cyclotomic],
    b: &[Cyclotomic],
) -> Result<Cyclotomic> {
    if a.len() != classes.count() || b.len() != classes.count() {
        return Err(Error::DimensionMismatch(
            "class function length differs from the class count".into(),
        ));
    }
    let mut s = Cyclotomic::zero();
    for i in 0..classes.count() {
        let term = &a[i] * &b[i].conj();
        s = &s + &term.scale(&Rational::new(classes.size(i) as i64, 1));
    }
    Ok(s.scale(&Rational::new(1, order as i64)))
}

/// A group acting by permutation matrices: each group element carries an
/// image permutation of the representation's points.
pub struct PermRepresentation {
    group: FiniteGroup,
    images: Vec<Permutation>,
}

impl PermRepresentation {
    /// The group acting on its own points.
    pub fn natural(g: &FiniteGroup) -> Self {
        PermRepresentation {
            group: g.clone(),
            images: g.elements().to_vec(),
        }
    }

    /// The group acting on itself by right multiplication.
    pub fn regular(g: &FiniteGroup) -> Self {
        PermRepresentation {
            group: g.clone(),
            images: g.regular_action().element_images().to_vec(),
        }
    }

    /// The action of g on the cosets described by `action`.
    pub fn from_action(g: &FiniteGroup, action: &CosetAction) -> Result<Self> {
        if action.element_images().len() != g.order() {
            return Err(Error::DimensionMismatch(
                "coset action does not match the group's element count".into(),
            ));
        }
        Ok(PermRepresentation {
            group: g.clone(),
            images: action.element_images().to_vec(),
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dimension(&self) -> usize {
        self.images[0].degree()
    }

    pub fn image(&self, element: usize) -> &Permutation {
        &self.images[element]
    }

    pub fn matrix(&self, element: usize) -> CycMatrix {
        perm_matrix(&self.images[element])
    }

    /// Fixed-point count of each class representative.
    pub fn permutation_character(&self, classes: &ConjugacyClasses) -> Vec<u64> {
        (0..classes.count())
            .map(|i| {
                let img = &self.images[classes.representative(i)];
                (0..img.degree()).filter(|&p| img.image_of(p) == p).count() as u64
            })
            .collect()
    }
}

/// Projection onto the isotypic component of character row j:
/// (d_j / |G|) sum_g conj(x_j(g)) rho(g).
pub fn isotypic_projector(
    rep: &PermRepresentation,
    table: &CharacterTable,
    j: usize,
) -> CycMatrix {
    let g = rep.group();
    let classes = table.classes();
    let dim = rep.dimension();
    let d = table.dimensions()[j] as i64;
    let coeff: Vec<Cyclotomic> = (0..classes.count())
        .map(|i| {
            table
                .value(j, i)
                .conj()
                .scale(&Rational::new(d, g.order() as i64))
        })
        .collect();
    let mut p = CycMatrix::zero(dim, dim);
    for x in 0..g.order() {
        let c = &coeff[classes.class_of(x)];
        if c.is_zero() {
            continue;
        }
        let img = rep.image(x);
        for i in 0..dim {
            p.accumulate(i, img.image_of(i), c);
        }
    }
    p
}

fn inner(a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
    let mut s = Cyclotomic::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s = &s + &(&x.conj() * y);
        }
    }
    s
}

/// Gram-Schmidt over the cyclotomic field with the standard hermitian
/// inner product. Dependent candidates are skipped; each kept vector is
/// scaled to unit norm, which requires the squared norm to be rational.
fn orthonormalize(candidates: Vec<Vec<Cyclotomic>>) -> Result<Vec<Vec<Cyclotomic>>> {
    let mut basis: Vec<Vec<Cyclotomic>> = Vec::new();
    for v in candidates {
        let mut w = v;
        for b in &basis {
            let c = inner(b, &w);
            if !c.is_zero() {
                for (wk, bk) in w.iter_mut().zip(b) {
                    *wk = &*wk - &(bk * &c);
                }
            }
        }
        if w.iter().all(|x| x.is_zero()) {
            continue;
        }
        let norm2 = inner(&w, &w);
        let r = norm2.rational_part().ok_or_else(|| {
            Error::NotRational(format!(
                "squared norm {norm2} of a basis vector lies outside the rationals"
            ))
        })?;
        let scale = Cyclotomic::sqrt_rational(&r)?.inv()?;
        basis.push(w.iter().map(|x| x * &scale).collect());
    }
    Ok(basis)
}

/// One diagonal stretch of a decomposed representation. A block with
/// multiplicity 1 is irreducible of the stated dimension; multiplicity
/// m > 1 marks an isotypic stretch of width dimension * m that no
/// available splitting operator separated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub character: usize,
    pub dimension: usize,
    pub multiplicity: usize,
}

impl Block {
    pub fn span(&self) -> usize {
        self.dimension * self.multiplicity
    }
}

/// Result of decomposing a permutation representation.
pub struct Decomposition {
    pub table: CharacterTable,
    pub permutation_character: Vec<u64>,
    pub multiplicities: Vec<usize>,
    pub transform: CycMatrix,
    pub blocks: Vec<Block>,
}

/// Orbits of the action on ordered point pairs whose indicator matrices
/// are permutation matrices. These commute with every image matrix, so
/// their eigenspaces are invariant subspaces.
fn permutation_orbitals(rep: &PermRepresentation) -> Vec<Permutation> {
    let pts = rep.dimension();
    let gens: Vec<&Permutation> = rep
        .group
        .generator_indices()
        .iter()
        .map(|&gi| rep.image(gi))
        .collect();
    let mut seen = vec![vec![false; pts]; pts];
    let mut out = Vec::new();
    for p0 in 0..pts {
        for q0 in 0..pts {
            if seen[p0][q0] {
                continue;
            }
            let mut stack = vec![(p0, q0)];
            seen[p0][q0] = true;
            let mut pairs = Vec::new();
            while let Some((p, q)) = stack.pop() {
                pairs.push((p, q));
                for g in &gens {
                    let next = (g.image_of(p), g.image_of(q));
                    if !seen[next.0][next.1] {
                        seen[next.0][next.1] = true;
                        stack.push(next);
                    }
                }
            }
            let mut map = vec![usize::MAX; pts];
            let mut hit = vec![false; pts];
            let mut ok = true;
            for (p, q) in pairs {
                if map[p] != usize::MAX || hit[q] {
                    ok = false;
                    break;
                }
                map[p] = q;
                hit[q] = true;
            }
            if ok && map.iter().all(|&v| v != usize::MAX) {
                out.push(Permutation::from_images_unchecked(map));
            }
        }
    }
    out
}

/// Tries to split an isotypic component of multiplicity m and irreducible
/// dimension d into m invariant blocks, using the eigenspaces of a
/// centralizer permutation operator restricted to the component. Returns
/// the refined orthonormal columns, or None when no operator separates
/// the copies.
fn split_isotypic(
    basis: &[Vec<Cyclotomic>],
    candidates: &[Permutation],
    d: usize,
    m: usize,
) -> Result<Option<Vec<Vec<Cyclotomic>>>> {
    let u = CycMatrix::from_columns(basis.to_vec())?;
    let udag = u.conjugate_transpose();
    let width = d * m;
    'candidate: for cand in candidates {
        let o = cand.order();
        if o <= 1 {
            continue;
        }
        let r = udag.mul(&u.permuted_rows(cand))?;
        let mut powers = vec![CycMatrix::identity(width)];
        for _ in 1..o {
            powers.push(powers.last().unwrap().mul(&r)?);
        }
        let mut split_cols: Vec<Vec<Cyclotomic>> = Vec::new();
        for k in 0..o {
            let mut q = CycMatrix::zero(width, width);
            for (t, rt) in powers.iter().enumerate() {
                let w = Cyclotomic::root_of_unity(o, -((k * t as u64) as i64));
                q = q.add(&rt.scale_cyclotomic(&w))?;
            }
            q = q.scale_rational(&Rational::new(1, o as i64));
            if q.is_zero() {
                continue;
            }
            let eig = match orthonormalize(q.columns()) {
                Ok(eig) => eig,
                // irrational norms make this operator unusable, not fatal
                Err(Error::NotRational(_)) => continue 'candidate,
                Err(e) => return Err(e),
            };
            if eig.is_empty() {
                continue;
            }
            if eig.len() != d {
                continue 'candidate;
            }
            for coords in eig {
                split_cols.push(u.apply(&coords)?);
            }
        }
        if split_cols.len() == width {
            return Ok(Some(split_cols));
        }
    }
    Ok(None)
}

/// Decomposes a permutation representation: computes the character table,
/// the multiplicity of every irreducible character, and a unitary
/// transform bringing all image matrices to common block-diagonal form.
pub fn decompose(rep: &PermRepresentation) -> Result<Decomposition> {
    let g = rep.group();
    let table = character_table(g)?;
    let classes = table.classes();
    let dim = rep.dimension();

    let fixed = rep.permutation_character(classes);
    let fixed_cyc: Vec<Cyclotomic> = fixed.iter().map(|&v| Cyclotomic::from_int(v as i64)).collect();

    let mut multiplicities = Vec::with_capacity(table.num_characters());
    for j in 0..table.num_characters() {
        let m = class_function_inner(classes, g.order(), &fixed_cyc, &table.rows()[j])?;
        let r = m
            .rational_part()
            .filter(|r| r.is_integer() && !r.is_negative())
            .ok_or_else(|| {
                Error::Internal(format!("multiplicity {m} is not a whole number"))
            })?;
        multiplicities.push(
            r.numer()
                .try_into()
                .map_err(|_| Error::Internal("multiplicity out of range".into()))?,
        );
    }
    let total: usize = multiplicities
        .iter()
        .zip(table.dimensions())
        .map(|(m, d)| m * d)
        .sum();
    if total != dim {
        return Err(Error::Internal(
            "multiplicities do not account for the full dimension".into(),
        ));
    }

    let mut orbitals: Option<Vec<Permutation>> = None;
    let mut columns: Vec<Vec<Cyclotomic>> = Vec::with_capacity(dim);
    let mut blocks = Vec::new();
    for j in 0..table.num_characters() {
        let (m, d) = (multiplicities[j], table.dimensions()[j]);
        if m == 0 {
            continue;
        }
        let p = isotypic_projector(rep, &table, j);
        if p.trace()? != Cyclotomic::from_int((d * m) as i64) {
            return Err(Error::Internal(
                "projector trace differs from dimension times multiplicity".into(),
            ));
        }
        let basis = orthonormalize(p.columns())?;
        if basis.len() != d * m {
            return Err(Error::Internal(
                "projector rank differs from dimension times multiplicity".into(),
            ));
        }
        if d == 1 {
            // scalar action: every line in the component is invariant
            columns.extend(basis);
            for _ in 0..m {
                blocks.push(Block { character: j, dimension: 1, multiplicity: 1 });
            }
        } else if m == 1 {
            columns.extend(basis);
            blocks.push(Block { character: j, dimension: d, multiplicity: 1 });
        } else {
            let cands = orbitals.get_or_insert_with(|| permutation_orbitals(rep));
            match split_isotypic(&basis, cands, d, m)? {
                Some(split) => {
                    columns.extend(split);
                    for _ in 0..m {
                        blocks.push(Block { character: j, dimension: d, multiplicity: 1 });
                    }
                }
                None => {
                    columns.extend(basis);
                    blocks.push(Block { character: j, dimension: d, multiplicity: m });
                }
            }
        }
    }

    let transform = CycMatrix::from_columns(columns)?;
    Ok(Decomposition {
        table,
        permutation_character: fixed,
        multiplicities,
        transform,
        blocks,
    })
}

/// t^-1 * m * t with exact arithmetic.
pub fn conjugate_by(m: &CycMatrix, t: &CycMatrix) -> Result<CycMatrix> {
    t.inverse()?.mul(m)?.mul(t)
}

/// Frozen exact matrices for the symmetric group on three points: the
/// monomial form of its two-dimensional irreducible component and the
/// transforms that expose it from the natural representation.
pub mod fixtures {
    use super::CycMatrix;
    use crate::cyclo::{Cyclotomic, Rational};
    use crate::perm::Permutation;

    fn int(v: i64) -> Cyclotomic {
        Cyclotomic::from_int(v)
    }

    fn r3(k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(3, k)
    }

    fn m(entries: Vec<Vec<Cyclotomic>>) -> CycMatrix {
        CycMatrix::new(entries).unwrap()
    }

    /// The six permutations of three points in a fixed study order:
    /// identity, the three transpositions, then the two rotations.
    pub fn s3_elements() -> Vec<Permutation> {
        ["()", "(2,3)", "(1,3)", "(1,2)", "(1,2,3)", "(1,3,2)"]
            .iter()
            .map(|t| Permutation::parse(t, 3).unwrap())
            .collect()
    }

    /// Monomial images of the two-dimensional irreducible component,
    /// indexed like [`s3_elements`]: each matrix has a single nonzero
    /// cube-root-of-unity entry per row.
    pub fn s3_monomial_matrices() -> Vec<CycMatrix> {
        vec![
            CycMatrix::identity(2),
            m(vec![vec![int(0), r3(2)], vec![r3(1), int(0)]]),
            m(vec![vec![int(0), r3(1)], vec![r3(2), int(0)]]),
            m(vec![vec![int(0), int(1)], vec![int(1), int(0)]]),
            m(vec![vec![r3(2), int(0)], vec![int(0), r3(1)]]),
            m(vec![vec![r3(1), int(0)], vec![int(0), r3(2)]]),
        ]
    }

    /// Unitary transform and its inverse taking every natural 3x3
    /// permutation matrix of three points to the block form
    /// diag(1, monomial image). Its columns diagonalize the rotation
    /// subgroup.
    pub fn s3_monomial_transform() -> (CycMatrix, CycMatrix) {
        let s = Cyclotomic::sqrt_rational(&Rational::new(1, 3)).unwrap();
        let t = m(vec![
            vec![int(1), int(1), r3(2)],
            vec![int(1), r3(2), int(1)],
            vec![int(1), r3(1), r3(1)],
        ])
        .scale_cyclotomic(&s);
        let tinv = m(vec![
            vec![int(1), int(1), int(1)],
            vec![int(1), r3(1), r3(2)],
            vec![r3(1), int(1), r3(2)],
        ])
        .scale_cyclotomic(&s);
        (t, tinv)
    }

    /// Real orthogonal transform and its inverse (its transpose) taking
    /// the natural 3x3 permutation matrices to diag(1, real rotation or
    /// reflection).
    pub fn s3_orthogonal_transform() -> (CycMatrix, CycMatrix) {
        let a = Cyclotomic::sqrt_rational(&Rational::new(1, 3)).unwrap();
        let b = Cyclotomic::sqrt_rational(&Rational::new(2, 3)).unwrap();
        let c = Cyclotomic::sqrt_rational(&Rational::new(1, 6)).unwrap();
        let d = Cyclotomic::sqrt_rational(&Rational::new(1, 2)).unwrap();
        let t = m(vec![
            vec![a.clone(), b, int(0)],
            vec![a.clone(), -&c, -&d],
            vec![a, -&c, d.clone()],
        ]);
        let tinv = t.transpose();
        (t, tinv)
    }

    /// Real image of the transposition fixing the first point, in the
    /// basis of [`s3_orthogonal_transform`]: a reflection.
    pub fn s3_orthogonal_reflection() -> CycMatrix {
        m(vec![vec![int(1), int(0)], vec![int(0), int(-1)]])
    }

    /// Real image of the rotation sending the first point to the third,
    /// in the basis of [`s3_orthogonal_transform`]: a rotation by a third
    /// of a turn.
    pub fn s3_orthogonal_rotation() -> CycMatrix {
        let half = Cyclotomic::from_rational(Rational::new(1, 2));
        let s = Cyclotomic::sqrt_rational(&Rational::new(3, 4)).unwrap();
        m(vec![
            vec![-&half, s.clone()],
            vec![-&s, -&half],
        ])
    }
}
