//! Fully enumerated permutation groups and subgroup arithmetic.
//!
//! Every group holds its complete, sorted element list. All structural
//! computations (conjugacy, normalizers, Sylow subgroups) are exact brute
//! force over that list; nothing here uses stabilizer chains.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use std::collections::HashMap;

/// Default cap on the number of elements a group may have.
pub const DEFAULT_ELEMENT_BOUND: usize = 100_000;

#[derive(Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::from_generators_bounded(degree, gens, DEFAULT_ELEMENT_BOUND)
    }

    pub fn from_generators_bounded(
        degree: usize,
        gens: Vec<Permutation>,
        bound: usize,
    ) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        let elements = closure(degree, &gens, bound)?;
        Self::from_element_list(degree, gens, elements)
    }

    /// Wraps an already-complete element set (checked for closure).
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        let gens = elements.clone();
        let mut g = Self::from_element_list(degree, gens, elements)?;
        for i in 0..g.order() {
            for j in 0..g.order() {
                let x = g.element(i).compose(g.element(j));
                if !g.index.contains_key(&x) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        g.generators = g.minimal_generators();
        Ok(g)
    }

    fn from_element_list(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let inverses = elements
            .iter()
            .map(|p| index.get(&p.inverse()).copied().ok_or(Error::NotASubgroup))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let identity = *index
            .get(&Permutation::identity(degree))
            .ok_or(Error::NotASubgroup)?;
        Ok(FiniteGroup {
            degree,
            generators,
            elements,
            index,
            inverses,
            identity,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let p = self.elements[i].compose(&self.elements[j]);
        self.index[&p]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// g x g^{-1} by element indices.
    pub fn conj(&self, g: usize, x: usize) -> usize {
        let p = self.elements[g]
            .compose(&self.elements[x])
            .compose(&self.elements[self.inverses[g]]);
        self.index[&p]
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.elements[i].order()
    }

    /// Greedy small generating set for the whole group.
    pub fn minimal_generators(&self) -> Vec<Permutation> {
        let all: Vec<usize> = (0..self.order()).collect();
        let idxs = greedy_generators(self, &all);
        idxs.into_iter().map(|i| self.elements[i].clone()).collect()
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            elements: vec![self.identity],
            gens: vec![],
        }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        let elements: Vec<usize> = (0..self.order()).collect();
        let gens = greedy_generators(self, &elements);
        Subgroup { elements, gens }
    }

    /// Subgroup generated by the given element indices.
    pub fn subgroup_closure(&self, gen_idxs: &[usize]) -> Subgroup {
        let mut in_sub = vec![false; self.order()];
        in_sub[self.identity] = true;
        let mut elems = vec![self.identity];
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gen_idxs {
                let y = self.mul(x, g);
                if !in_sub[y] {
                    in_sub[y] = true;
                    elems.push(y);
                    frontier.push(y);
                }
            }
        }
        elems.sort_unstable();
        let gens = gen_idxs
            .iter()
            .copied()
            .filter(|&g| g != self.identity)
            .collect();
        Subgroup {
            elements: elems,
            gens,
        }
    }

    /// Validates that a sorted index set is closed under multiplication.
    pub fn subgroup_from_indices(&self, mut elements: Vec<usize>) -> Result<Subgroup> {
        elements.sort_unstable();
        elements.dedup();
        if elements.binary_search(&self.identity).is_err() {
            return Err(Error::NotASubgroup);
        }
        for &a in &elements {
            for &b in &elements {
                if elements.binary_search(&self.mul(a, b)).is_err() {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        let gens = greedy_generators(self, &elements);
        Ok(Subgroup { elements, gens })
    }

    /// The commuting decomposition x = x_p * x_{p'} with x_p of p-power order.
    pub fn p_part(&self, x: usize, p: u64) -> ElementDecomposition {
        let ord = self.element_order(x);
        let mut pe: u64 = 1;
        let mut q = ord;
        while q.is_multiple_of(p) {
            q /= p;
            pe *= p;
        }
        // x_p = x^(q * (q^{-1} mod p^e)); for pe = 1 the exponent is 0.
        let exp = if pe == 1 {
            0
        } else {
            q * mod_inverse(q % pe, pe)
        };
        let xp = self.elements[x].pow(exp);
        let xp_idx = self.index[&xp];
        let xpp_idx = self.mul(x, self.inv(xp_idx));
        ElementDecomposition {
            x,
            x_p: xp_idx,
            x_p_prime: xpp_idx,
        }
    }
}

/// x written as commuting p-part times p'-part (all element indices).
#[derive(Debug, Clone, Copy)]
pub struct ElementDecomposition {
    pub x: usize,
    pub x_p: usize,
    pub x_p_prime: usize,
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid; gcd(a, m) = 1 expected
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m as i128) as u64
}

fn closure(degree: usize, gens: &[Permutation], bound: usize) -> Result<Vec<Permutation>> {
    let mut seen: HashMap<Permutation, ()> = HashMap::new();
    let id = Permutation::identity(degree);
    seen.insert(id.clone(), ());
    let mut frontier = vec![id];
    let mut all = vec![];
    while let Some(x) = frontier.pop() {
        all.push(x.clone());
        for g in gens {
            let y = x.compose(g);
            if !seen.contains_key(&y) {
                if seen.len() >= bound {
                    return Err(Error::GroupTooLarge { bound });
                }
                seen.insert(y.clone(), ());
                frontier.push(y);
            }
        }
    }
    Ok(all)
}

/// A subgroup stored as sorted element indices into its parent group.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<usize>,
    gens: Vec<usize>,
}

// equality is by element set; generating sets are derived data
impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.elements.binary_search(&idx).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }

    pub fn key(&self) -> &[usize] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// True when some element generates the whole subgroup.
    pub fn is_cyclic(&self, group: &FiniteGroup) -> bool {
        self.elements
            .iter()
            .any(|&e| group.element_order(e) as usize == self.order())
    }

    pub fn describe_gens(&self, group: &FiniteGroup) -> String {
        if self.gens.is_empty() {
            return "()".to_string();
        }
        self.gens
            .iter()
            .map(|&g| group.element(g).to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn greedy_generators(group: &FiniteGroup, elements: &[usize]) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut have = group.subgroup_closure(&gens);
    for &e in elements {
        if !have.contains(e) {
            gens.push(e);
            have = group.subgroup_closure(&gens);
            if have.order() == elements.len() {
                break;
            }
        }
    }
    gens
}

pub fn conjugate_subgroup(group: &FiniteGroup, sub: &Subgroup, g: usize) -> Subgroup {
    let mut elements: Vec<usize> = sub.elements.iter().map(|&x| group.conj(g, x)).collect();
    elements.sort_unstable();
    let gens = sub.gens.iter().map(|&x| group.conj(g, x)).collect();
    Subgroup { elements, gens }
}

pub fn normalizer(group: &FiniteGroup, sub: &Subgroup) -> Subgroup {
    let members: Vec<usize> = (0..group.order())
        .filter(|&g| sub.gens().iter().all(|&h| sub.contains(group.conj(g, h))))
        .collect();
    let gens = greedy_generators(group, &members);
    Subgroup {
        elements: members,
        gens,
    }
}

/// Elements of `region` normalizing `sub` (the normalizer taken inside a
/// subgroup rather than the whole group).
pub fn normalizer_in(group: &FiniteGroup, region: &Subgroup, sub: &Subgroup) -> Subgroup {
    let members: Vec<usize> = region
        .elements()
        .iter()
        .copied()
        .filter(|&g| sub.gens().iter().all(|&h| sub.contains(group.conj(g, h))))
        .collect();
    let gens = greedy_generators(group, &members);
    Subgroup {
        elements: members,
        gens,
    }
}

pub fn centralizer(group: &FiniteGroup, sub: &Subgroup) -> Subgroup {
    let members: Vec<usize> = (0..group.order())
        .filter(|&g| sub.gens().iter().all(|&h| group.conj(g, h) == h))
        .collect();
    let gens = greedy_generators(group, &members);
    Subgroup {
        elements: members,
        gens,
    }
}

/// Tests conjugacy gAg^{-1} = B, returning a witness g. Candidates are
/// deduplicated by left cosets of N_G(A).
pub fn are_conjugate_subgroups(group: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Option<usize> {
    if a.order() != b.order() {
        return None;
    }
    if a == b {
        return Some(group.identity_index());
    }
    let norm = normalizer(group, a);
    let mut seen_coset = vec![false; group.order()];
    for g in 0..group.order() {
        if seen_coset[g] {
            continue;
        }
        for &n in norm.elements() {
            seen_coset[group.mul(g, n)] = true;
        }
        if a.gens().iter().all(|&h| b.contains(group.conj(g, h)))
            && conjugate_subgroup(group, a, g) == *b
        {
            return Some(g);
        }
    }
    None
}

pub fn is_normal_in(group: &FiniteGroup, k: &Subgroup, n: &Subgroup) -> bool {
    n.elements()
        .iter()
        .all(|&g| k.gens().iter().all(|&h| k.contains(group.conj(g, h))))
}

/// A Sylow p-subgroup, grown from a p-element by repeatedly adjoining
/// p-elements of the normalizer.
pub fn sylow_subgroup(group: &FiniteGroup, p: u64) -> Subgroup {
    let mut target = group.order();
    let mut p_part = 1usize;
    while target.is_multiple_of(p as usize) {
        target /= p as usize;
        p_part *= p as usize;
    }
    let mut current = group.trivial_subgroup();
    while current.order() < p_part {
        let norm = normalizer(group, &current);
        let next = norm
            .elements()
            .iter()
            .copied()
            .find(|&x| {
                if current.contains(x) {
                    return false;
                }
                let ord = group.element_order(x);
                ord > 1 && is_power_of(ord, p)
            })
            .expect("a p-element of the normalizer must exist below the Sylow order");
        let mut gens: Vec<usize> = current.gens().to_vec();
        gens.push(next);
        current = group.subgroup_closure(&gens);
    }
    current
}

pub fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Product set A*B, which must form a subgroup (e.g. P*C_G(P) inside N_G(P)).
pub fn product_subgroup(group: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    let mut elements: Vec<usize> = Vec::new();
    for &x in a.elements() {
        for &y in b.elements() {
            elements.push(group.mul(x, y));
        }
    }
    elements.sort_unstable();
    elements.dedup();
    let product_size = elements.len();
    let sub = group.subgroup_from_indices(elements)?;
    if sub.order() != product_size {
        return Err(Error::NotASubgroup);
    }
    Ok(sub)
}
