//! Multiplication-table groups: quotients N/K, automizers, and small-order
//! shape classification.

use crate::error::{Error, Result};
use crate::group::{
    centralizer, is_normal_in, normalizer, product_subgroup, FiniteGroup, Subgroup,
};
use std::collections::HashMap;

/// A finite group given by its multiplication table; element 0 is the
/// identity.
#[derive(Clone, Debug)]
pub struct SmallGroup {
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl SmallGroup {
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        let ok = mul.iter().all(|row| row.len() == n)
            && (0..n).all(|i| mul[0][i] == i && mul[i][0] == i);
        if !ok {
            return Err(Error::Internal("malformed multiplication table".into()));
        }
        let mut inv = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                if mul[i][j] == 0 {
                    inv[i] = j;
                }
            }
        }
        if inv.contains(&usize::MAX) {
            return Err(Error::Internal("table has no inverses".into()));
        }
        Ok(SmallGroup { mul, inv })
    }

    pub fn trivial() -> Self {
        SmallGroup {
            mul: vec![vec![0]],
            inv: vec![0],
        }
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, a| num_integer::lcm(acc, self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        (0..n).any(|a| self.element_order(a) == n)
    }

    /// Count of elements of each order, as (order, count) sorted by order.
    pub fn order_census(&self) -> Vec<(usize, usize)> {
        let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
        for a in 0..self.order() {
            *counts.entry(self.element_order(a)).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut in_sub = vec![false; self.order()];
        in_sub[0] = true;
        let mut elems = vec![0];
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !in_sub[y] {
                    in_sub[y] = true;
                    elems.push(y);
                    frontier.push(y);
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    /// The derived subgroup, generated by all commutators.
    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let n = self.order();
        let mut comms = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                comms.push(c);
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.subgroup_closure(&comms)
    }

    /// Quotient by a normal subgroup given as a sorted element list.
    /// Returns the quotient and the projection map element -> coset index.
    pub fn quotient_by(&self, normal: &[usize]) -> (SmallGroup, Vec<usize>) {
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            for &k in normal {
                coset_of[self.mul(x, k)] = c;
            }
            reps.push(x);
        }
        // identity coset comes first because x = 0 is scanned first
        let m = reps.len();
        let mul = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| coset_of[self.mul(reps[i], reps[j])])
                    .collect()
            })
            .collect();
        let q = SmallGroup::from_table(mul).expect("quotient table is a group");
        (q, coset_of)
    }

    /// Complete subgroup enumeration by incremental generator growth.
    pub fn all_subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: Vec<Vec<usize>> = vec![vec![0]];
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
        seen.insert(vec![0], ());
        let mut frontier = vec![vec![0usize]];
        while let Some(sub) = frontier.pop() {
            for g in 1..self.order() {
                if sub.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens: Vec<usize> = sub.clone();
                gens.push(g);
                let new = self.subgroup_closure(&gens);
                if !seen.contains_key(&new) {
                    seen.insert(new.clone(), ());
                    found.push(new.clone());
                    frontier.push(new);
                }
            }
        }
        found.sort();
        found
    }

    /// Order of a largest p'-subgroup: the p'-part of the order for cyclic
    /// groups, otherwise a direct search over all subgroups.
    pub fn max_p_prime_subgroup_order(&self, p: u64) -> usize {
        if self.is_cyclic() {
            let mut n = self.order();
            while n.is_multiple_of(p as usize) {
                n /= p as usize;
            }
            return n;
        }
        self.all_subgroups()
            .iter()
            .map(|s| s.len())
            .filter(|&s| s % (p as usize) != 0)
            .max()
            .unwrap_or(1)
    }
}

/// A quotient N/K of subgroups of an ambient permutation group, with coset
/// bookkeeping kept so elements of N can be projected.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    pub group: SmallGroup,
    /// Parent element index of each coset representative; reps[0] represents K.
    pub coset_reps: Vec<usize>,
    coset_of: HashMap<usize, usize>,
}

impl QuotientGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Coset index of a parent element, which must lie in N.
    pub fn project(&self, parent_idx: usize) -> Option<usize> {
        self.coset_of.get(&parent_idx).copied()
    }
}

/// Coset group N/K. Fails unless K is normal in N.
pub fn quotient(group: &FiniteGroup, n: &Subgroup, k: &Subgroup) -> Result<QuotientGroup> {
    if !k.is_subset_of(n) || !is_normal_in(group, k, n) {
        return Err(Error::NotNormal);
    }
    let mut coset_of: HashMap<usize, usize> = HashMap::new();
    let mut reps: Vec<usize> = Vec::new();
    for &x in n.elements() {
        if coset_of.contains_key(&x) {
            continue;
        }
        let c = reps.len();
        for &h in k.elements() {
            coset_of.insert(group.mul(x, h), c);
        }
        reps.push(x);
    }
    let m = reps.len();
    debug_assert_eq!(m * k.order(), n.order());
    let mul: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| coset_of[&group.mul(reps[i], reps[j])])
                .collect()
        })
        .collect();
    let sg = SmallGroup::from_table(mul)?;
    Ok(QuotientGroup {
        group: sg,
        coset_reps: reps,
        coset_of,
    })
}

/// N_G(P)/C_G(P), the automorphisms of P induced by conjugation in G.
pub fn automizer(group: &FiniteGroup, p: &Subgroup) -> Result<QuotientGroup> {
    let n = normalizer(group, p);
    let c = centralizer(group, p);
    quotient(group, &n, &c)
}

/// N_G(P)/(P * C_G(P)); for abelian P this equals the automizer.
pub fn automizer_reduced(group: &FiniteGroup, p: &Subgroup) -> Result<QuotientGroup> {
    let n = normalizer(group, p);
    let c = centralizer(group, p);
    let pc = product_subgroup(group, p, &c)?;
    quotient(group, &n, &pc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Cyclic(usize),
    KleinFour,
    Dihedral8,
    Quaternion8,
    Other,
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Shape::Cyclic(n) => write!(f, "cyclic {n}"),
            Shape::KleinFour => write!(f, "klein-four"),
            Shape::Dihedral8 => write!(f, "dihedral 8"),
            Shape::Quaternion8 => write!(f, "quaternion 8"),
            Shape::Other => write!(f, "other"),
        }
    }
}

pub const SHAPE_ORDER_BOUND: usize = 16;

/// Classifies a group of order at most 16 by its element-order census.
/// Quaternion of order 8 is the census with exactly one involution and six
/// order-4 elements.
pub fn small_group_shape(g: &SmallGroup) -> Result<Shape> {
    let n = g.order();
    if n > SHAPE_ORDER_BOUND {
        return Err(Error::OrderTooLarge {
            order: n,
            bound: SHAPE_ORDER_BOUND,
        });
    }
    if g.is_cyclic() {
        return Ok(Shape::Cyclic(n));
    }
    if n == 4 {
        return Ok(Shape::KleinFour);
    }
    if n == 8 {
        let census = g.order_census();
        if census == vec![(1, 1), (2, 5), (4, 2)] {
            return Ok(Shape::Dihedral8);
        }
        if census == vec![(1, 1), (2, 1), (4, 6)] {
            return Ok(Shape::Quaternion8);
        }
    }
    Ok(Shape::Other)
}
