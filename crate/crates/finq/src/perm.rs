//! Permutations on 1-based points and finite permutation groups.
//!
//! Composition acts on the right: (p*q)(i) = q(p(i)), so the left factor is
//! applied first. Cycle text also composes factors left to right, which
//! coincides with the usual reading when the cycles are disjoint.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num::integer::Integer;

use crate::{Error, Result};

/// Default ceiling on group order during closure.
pub const DEFAULT_CAP: usize = 100_000;

/// A permutation of {1, .., degree}, stored as a 0-based image table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Caller guarantees the image table is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images.iter().all(|&v| {
                let fresh = v < seen.len() && !seen[v];
                if fresh {
                    seen[v] = true;
                }
                fresh
            })
        });
        Permutation { images }
    }

    /// Builds a permutation from a 1-based image sequence.
    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v < 1 || v > n {
                return Err(Error::InvalidInput(format!(
                    "image {v} out of range 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidInput(format!("image {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&v| v - 1).collect(),
        })
    }

    /// Parses cycle notation like "(1,2)(3,4)"; "()" is the identity.
    /// Points are 1-based and must not exceed the degree. Overlapping cycles
    /// compose left to right under the right-action convention.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::InvalidInput("empty permutation text".into()));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(|| {
                Error::InvalidInput(format!("expected '(' in permutation text `{text}`"))
            })?;
            let (body, tail) = inner.split_once(')').ok_or_else(|| {
                Error::InvalidInput(format!("unclosed cycle in permutation text `{text}`"))
            })?;
            rest = tail;
            if body.is_empty() {
                continue;
            }
            let mut points = Vec::new();
            for tok in body.split(',') {
                let p: usize = tok.parse().map_err(|_| {
                    Error::InvalidInput(format!("malformed point `{tok}` in `{text}`"))
                })?;
                if p < 1 || p > degree {
                    return Err(Error::InvalidInput(format!(
                        "point {p} out of range 1..={degree}"
                    )));
                }
                if points.contains(&p) {
                    return Err(Error::InvalidInput(format!(
                        "point {p} repeated within a cycle"
                    )));
                }
                points.push(p);
            }
            let mut cyc: Vec<usize> = (0..degree).collect();
            for (w, &p) in points.iter().enumerate() {
                cyc[p - 1] = points[(w + 1) % points.len()] - 1;
            }
            for img in images.iter_mut() {
                *img = cyc[*img];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of a 0-based point.
    pub fn image_of(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Right-action product: applies self first, then rhs.
    pub fn compose(&self, rhs: &Permutation) -> Result<Permutation> {
        if self.degree() != rhs.degree() {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose degree {} with degree {}",
                self.degree(),
                rhs.degree()
            )));
        }
        Ok(Permutation {
            images: self.images.iter().map(|&v| rhs.images[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// Multiset of cycle lengths as (length, count) pairs, ascending by
    /// length, fixed points included.
    pub fn cycle_type(&self) -> Vec<(usize, usize)> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            *counts.entry(len).or_insert(0) += 1;
        }
        let mut out: Vec<(usize, usize)> = counts.into_iter().collect();
        out.sort_unstable();
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, (len, _)| acc.lcm(&(len as u64)))
    }

    /// Canonical disjoint-cycle text: each cycle starts at its smallest
    /// point, cycles ordered by smallest point, fixed points omitted.
    pub fn cycle_string(&self) -> String {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    out.push(',');
                }
                out.push_str(&(p + 1).to_string());
                first = false;
                p = self.images[p];
            }
            out.push(')');
        }
        if out.is_empty() {
            "()".into()
        } else {
            out
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

/// A finite permutation group with a fixed, reproducible element order:
/// breadth-first from the generators, ties broken by image-sequence
/// lexicographic order. Element 0 is the identity.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Vec<usize>, usize>,
    generators: Vec<usize>,
    inverses: Vec<usize>,
    closure_multiplications: u64,
}

impl FiniteGroup {
    /// Breadth-first closure of the generator set. The element order depends
    /// only on the set of generators, not on their order in the slice.
    /// Aborts with [`Error::CapExceeded`] when the order would exceed `cap`.
    pub fn generate(gens: &[Permutation], cap: usize) -> Result<FiniteGroup> {
        if gens.is_empty() {
            return Err(Error::InvalidInput("at least one generator required".into()));
        }
        let degree = gens[0].degree();
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(Error::InvalidInput("generators have mixed degrees".into()));
        }
        if cap == 0 {
            return Err(Error::CapExceeded { cap });
        }
        let mut distinct: Vec<Permutation> = gens.to_vec();
        distinct.sort();
        distinct.dedup();
        let working: Vec<Permutation> = distinct
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();

        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id.images.clone(), 0usize);
        let mut mults = 0u64;

        let mut level: Vec<usize> = Vec::new();
        for g in &working {
            if !index.contains_key(&g.images) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(g.images.clone(), elements.len());
                level.push(elements.len());
                elements.push(g.clone());
            }
        }
        while !level.is_empty() {
            let mut batch: Vec<Permutation> = Vec::new();
            for &xi in &level {
                for g in &working {
                    let y = elements[xi].compose(g).expect("uniform degree");
                    mults += 1;
                    if !index.contains_key(&y.images) {
                        batch.push(y);
                    }
                }
            }
            batch.sort();
            batch.dedup();
            level = Vec::new();
            for y in batch {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(y.images.clone(), elements.len());
                level.push(elements.len());
                elements.push(y);
            }
        }

        let generators = distinct
            .iter()
            .map(|g| index[&g.images])
            .collect::<BTreeSet<usize>>()
            .into_iter()
            .collect();
        let inverses = elements
            .iter()
            .map(|e| index[&e.inverse().images])
            .collect();
        Ok(FiniteGroup {
            degree,
            elements,
            index,
            generators,
            inverses,
            closure_multiplications: mults,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Indices of the (distinct) generators within the element list.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(&p.images).copied()
    }

    /// Index of elements[i] * elements[j] (right-action product).
    pub fn product(&self, i: usize, j: usize) -> usize {
        let p = self.elements[i]
            .compose(&self.elements[j])
            .expect("group elements share degree");
        *self
            .index
            .get(&p.images)
            .expect("group is closed under products")
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.elements[i].order()
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .fold(1u64, |acc, e| acc.lcm(&e.order()))
    }

    /// Number of products evaluated during closure; instrumentation for the
    /// generation cost contract.
    pub fn closure_multiplications(&self) -> u64 {
        self.closure_multiplications
    }

    /// Action on the right cosets of the subgroup spanned by the given
    /// element indices. The subgroup must contain the identity and be closed
    /// under products; cosets are ordered by their smallest element index,
    /// so the subgroup itself is point 1.
    pub fn coset_action(&self, subgroup: &[usize]) -> Result<CosetAction> {
        let h: BTreeSet<usize> = subgroup.iter().copied().collect();
        if h.is_empty() {
            return Err(Error::InvalidInput("empty subgroup".into()));
        }
        if let Some(&bad) = h.iter().find(|&&i| i >= self.order()) {
            return Err(Error::InvalidInput(format!(
                "element index {bad} out of range"
            )));
        }
        if !h.contains(&0) {
            return Err(Error::InvalidInput("subgroup must contain the identity".into()));
        }
        for &a in &h {
            for &b in &h {
                if !h.contains(&self.product(a, b)) {
                    return Err(Error::InvalidInput(format!(
                        "subset is not closed: elements {a} and {b} multiply outside it"
                    )));
                }
            }
        }

        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        let mut representatives: Vec<usize> = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let cid = cosets.len();
            let mut members: Vec<usize> = h.iter().map(|&a| self.product(a, g)).collect();
            members.sort_unstable();
            for &m in &members {
                debug_assert!(coset_of[m] == usize::MAX, "cosets partition the group");
                coset_of[m] = cid;
            }
            representatives.push(g);
            cosets.push(members);
        }

        let points = cosets.len();
        let element_images: Vec<Permutation> = (0..n)
            .map(|x| Permutation {
                images: (0..points)
                    .map(|p| coset_of[self.product(representatives[p], x)])
                    .collect(),
            })
            .collect();
        let gen_images: Vec<Permutation> = self
            .generators
            .iter()
            .map(|&gi| element_images[gi].clone())
            .collect();
        let group = FiniteGroup::generate(&gen_images, n.max(1))?;
        Ok(CosetAction {
            subgroup: h.into_iter().collect(),
            cosets,
            representatives,
            element_images,
            group,
        })
    }

    /// Action of the group on itself by right multiplication.
    pub fn regular_action(&self) -> CosetAction {
        self.coset_action(&[0])
            .expect("the identity alone is always a subgroup")
    }
}

/// The permutation action of a group on the right cosets of a subgroup.
pub struct CosetAction {
    subgroup: Vec<usize>,
    cosets: Vec<Vec<usize>>,
    representatives: Vec<usize>,
    element_images: Vec<Permutation>,
    group: FiniteGroup,
}

impl CosetAction {
    pub fn degree(&self) -> usize {
        self.cosets.len()
    }

    pub fn subgroup(&self) -> &[usize] {
        &self.subgroup
    }

    /// Element indices of each coset, each sorted ascending; cosets ordered
    /// by smallest element index.
    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    /// Image permutation of each parent-group element, indexed like the
    /// parent element list.
    pub fn element_images(&self) -> &[Permutation] {
        &self.element_images
    }

    /// The image group of the action, generated by the images of the parent
    /// generators. Its order divides the parent order.
    pub fn image_group(&self) -> &FiniteGroup {
        &self.group
    }

    /// True iff only the identity acts trivially.
    pub fn is_faithful(&self) -> bool {
        self.element_images
            .iter()
            .enumerate()
            .all(|(i, p)| (i == 0) == p.is_identity())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse(text, degree).unwrap()
    }

    fn s3() -> FiniteGroup {
        FiniteGroup::generate(&[p("(2,3)", 3), p("(1,3,2)", 3)], DEFAULT_CAP).unwrap()
    }

    #[test]
    fn parse_and_print_round_trip() {
        for (text, degree) in [
            ("()", 3),
            ("(2,3)", 3),
            ("(1,3,2)", 3),
            ("(1,2)(3,4)", 4),
            ("(1,2,3,4)(5,6)", 6),
        ] {
            let q = p(text, degree);
            assert_eq!(q.cycle_string(), text);
            assert_eq!(Permutation::parse(&q.cycle_string(), degree).unwrap(), q);
        }
    }

    #[test]
    fn parse_rejects_malformed_text() {
        assert!(Permutation::parse("(0,1)", 3).is_err());
        assert!(Permutation::parse("(1,4)", 3).is_err());
        assert!(Permutation::parse("(1,1)", 3).is_err());
        assert!(Permutation::parse("(1,2", 3).is_err());
        assert!(Permutation::parse("1,2)", 3).is_err());
        assert!(Permutation::parse("(1,x)", 3).is_err());
        assert!(Permutation::parse("", 3).is_err());
        assert!(Permutation::parse("(1,2)x(2,3)", 3).is_err());
    }

    #[test]
    fn overlapping_cycles_compose_left_to_right() {
        // right-action: (1,2)(2,3) applies (1,2) first
        let q = p("(1,2)(2,3)", 3);
        assert_eq!(q, p("(1,3,2)", 3));
    }

    #[test]
    fn composition_applies_left_factor_first() {
        let a = p("(1,2,3)", 3);
        let b = a.compose(&a).unwrap();
        assert_eq!(b, p("(1,3,2)", 3));
        let x = p("(1,2)", 3);
        let y = p("(1,3)", 3);
        assert_eq!(x.compose(&y).unwrap(), p("(1,2,3)", 3));
        assert!(x.compose(&p("(1,2)", 4)).is_err());
    }

    #[test]
    fn images_are_one_based_externally() {
        assert_eq!(p("(2,3)", 3).images_one_based(), vec![1, 3, 2]);
        assert_eq!(
            Permutation::from_images_one_based(&[1, 3, 2]).unwrap(),
            p("(2,3)", 3)
        );
        assert!(Permutation::from_images_one_based(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images_one_based(&[0, 1, 2]).is_err());
    }

    #[test]
    fn inverse_cancels_for_random_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=10);
            let mut imgs: Vec<usize> = (1..=n).collect();
            imgs.shuffle(&mut rng);
            let q = Permutation::from_images_one_based(&imgs).unwrap();
            assert_eq!(q.compose(&q.inverse()).unwrap(), Permutation::identity(n));
            assert_eq!(q.inverse().compose(&q).unwrap(), Permutation::identity(n));
        }
    }

    #[test]
    fn cycle_type_and_order() {
        let q = p("(1,2)(3,4,5)", 5);
        assert_eq!(q.cycle_type(), vec![(2, 1), (3, 1)]);
        assert_eq!(q.order(), 6);
        let t = p("(2,3)", 3);
        assert_eq!(t.cycle_type(), vec![(1, 1), (2, 1)]);
        assert_eq!(Permutation::identity(4).cycle_type(), vec![(1, 4)]);
        assert_eq!(Permutation::identity(4).order(), 1);
    }

    #[test]
    fn s3_closure_order_and_frozen_element_sequence() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.exponent(), 6);
        let seq: Vec<String> = g.elements().iter().map(|e| e.cycle_string()).collect();
        // breadth-first levels: identity; the generators sorted by image
        // sequence; then their new products sorted likewise
        assert_eq!(seq, vec!["()", "(2,3)", "(1,3,2)", "(1,2)", "(1,2,3)", "(1,3)"]);
    }

    #[test]
    fn generation_is_independent_of_generator_order() {
        let a = p("(2,3)", 3);
        let b = p("(1,3,2)", 3);
        let g1 = FiniteGroup::generate(&[a.clone(), b.clone()], DEFAULT_CAP).unwrap();
        let g2 = FiniteGroup::generate(&[b, a], DEFAULT_CAP).unwrap();
        assert_eq!(g1.elements(), g2.elements());
    }

    #[test]
    fn common_group_orders() {
        let s4 = FiniteGroup::generate(&[p("(1,2,3,4)", 4), p("(1,2)", 4)], DEFAULT_CAP).unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.exponent(), 12);
        let a4 = FiniteGroup::generate(&[p("(1,2,3)", 4), p("(2,3,4)", 4)], DEFAULT_CAP).unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.exponent(), 6);
        let d4 = FiniteGroup::generate(&[p("(1,2,3,4)", 4), p("(1,3)", 4)], DEFAULT_CAP).unwrap();
        assert_eq!(d4.order(), 8);
        let q8 = FiniteGroup::generate(
            &[p("(1,2,3,4)(5,6,7,8)", 8), p("(1,5,3,7)(2,8,4,6)", 8)],
            DEFAULT_CAP,
        )
        .unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.exponent(), 4);
        let c4 = FiniteGroup::generate(&[p("(1,2,3,4)", 4)], DEFAULT_CAP).unwrap();
        assert_eq!(c4.order(), 4);
        let trivial = FiniteGroup::generate(&[Permutation::identity(1)], DEFAULT_CAP).unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.exponent(), 1);
    }

    #[test]
    fn cap_aborts_generation() {
        let gens = [p("(1,2,3,4)", 4), p("(1,2)", 4)];
        match FiniteGroup::generate(&gens, 10) {
            Err(Error::CapExceeded { cap: 10 }) => {}
            other => panic!("expected cap abort, got {:?}", other.map(|g| g.order())),
        }
        assert!(FiniteGroup::generate(&gens, 24).is_ok());
    }

    #[test]
    fn closure_multiplication_count_within_contract() {
        for (gens, _name) in [
            (vec![p("(2,3)", 3), p("(1,3,2)", 3)], "S3"),
            (vec![p("(1,2,3,4)", 4), p("(1,2)", 4)], "S4"),
            (
                vec![p("(1,2,3,4)(5,6,7,8)", 8), p("(1,5,3,7)(2,8,4,6)", 8)],
                "Q8",
            ),
        ] {
            let ng = gens.len() as u64;
            let g = FiniteGroup::generate(&gens, DEFAULT_CAP).unwrap();
            let n = g.order() as u64;
            let bound = ng * (n - ng - 1) + ng * ng;
            assert!(
                g.closure_multiplications() <= bound,
                "{} multiplications exceed bound {}",
                g.closure_multiplications(),
                bound
            );
        }
    }

    #[test]
    fn group_products_and_inverses_close() {
        let g = s3();
        for i in 0..g.order() {
            assert_eq!(g.product(i, g.inverse_index(i)), 0);
            for j in 0..g.order() {
                let k = g.product(i, j);
                let expect = g.element(i).compose(g.element(j)).unwrap();
                assert_eq!(g.element(k), &expect);
            }
        }
    }

    #[test]
    fn coset_action_on_point_stabilizer() {
        let g = s3();
        // subgroup generated by (2,3): indices of () and (2,3)
        let h: Vec<usize> = [0, 1].into();
        let act = g.coset_action(&h).unwrap();
        assert_eq!(act.degree(), 3);
        assert_eq!(act.degree() * 2, g.order());
        assert!(act.is_faithful());
        // transitivity: the orbit of point 0 under the image group is everything
        let mut orbit = BTreeSet::from([0usize]);
        for e in act.image_group().elements() {
            for s in orbit.clone() {
                orbit.insert(e.image_of(s));
            }
        }
        assert_eq!(orbit.len(), act.degree());
    }

    #[test]
    fn coset_action_whole_group_and_trivial_subgroup() {
        let g = s3();
        let whole: Vec<usize> = (0..g.order()).collect();
        let act = g.coset_action(&whole).unwrap();
        assert_eq!(act.degree(), 1);
        assert!(!act.is_faithful());
        let regular = g.regular_action();
        assert_eq!(regular.degree(), 6);
        assert!(regular.is_faithful());
        assert_eq!(regular.image_group().order(), 6);
    }

    #[test]
    fn coset_action_rejects_non_subgroups() {
        let g = s3();
        // {(), (1,2,3)} is not closed: (1,2,3)^2 = (1,3,2) is outside
        let idx = g.index_of(&p("(1,2,3)", 3)).unwrap();
        assert!(g.coset_action(&[0, idx]).is_err());
        assert!(g.coset_action(&[]).is_err());
        assert!(g.coset_action(&[1]).is_err(), "must contain the identity");
        assert!(g.coset_action(&[0, 99]).is_err());
    }

    #[test]
    fn unfaithful_coset_action_detected() {
        // D4 modulo its center acts on 4 cosets with kernel = center
        let d4 = FiniteGroup::generate(&[p("(1,2,3,4)", 4), p("(1,3)", 4)], DEFAULT_CAP).unwrap();
        let z = d4.index_of(&p("(1,3)(2,4)", 4)).unwrap();
        let act = d4.coset_action(&[0, z]).unwrap();
        assert_eq!(act.degree(), 4);
        assert!(!act.is_faithful());
        assert_eq!(act.image_group().order(), 4);
    }

    #[test]
    fn generate_rejects_bad_input() {
        assert!(FiniteGroup::generate(&[], DEFAULT_CAP).is_err());
        assert!(FiniteGroup::generate(&[p("(1,2)", 2), p("(1,2)", 3)], DEFAULT_CAP).is_err());
    }
}
