//! Conjugacy classes of p-subgroups of a fixed Sylow subgroup.
//!
//! Every p-subgroup of G is conjugate into the chosen Sylow subgroup S, so the
//! table enumerates all subgroups of S once and records two fusions of that
//! list: conjugacy inside S and conjugacy inside G. Functions defined on
//! S-classes and on G-classes are kept as distinct types by the callers; the
//! table provides the map between the two.

use crate::error::{Error, Result};
use crate::group::{
    are_conjugate_subgroups, centralizer, conjugate_subgroup, normalizer, sylow_subgroup,
    FiniteGroup, Subgroup,
};
use std::collections::HashMap;

/// Which conjugation action classifies the subgroups of the Sylow subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Classes under conjugation in the Sylow subgroup itself.
    Sylow,
    /// Classes under conjugation in the whole group.
    Group,
}

pub const DEFAULT_SUBGROUP_BOUND: usize = 20_000;

pub struct ClassTable {
    pub p: u64,
    pub sylow: Subgroup,
    /// Every subgroup of the Sylow subgroup, sorted by (order, elements).
    pub subgroups: Vec<Subgroup>,
    sub_index: HashMap<Vec<usize>, usize>,
    pub s_class_of: Vec<usize>,
    pub g_class_of: Vec<usize>,
    /// Subgroup index of each class representative (class 0 is trivial).
    pub s_reps: Vec<usize>,
    pub g_reps: Vec<usize>,
    /// G-class containing each S-class.
    pub s_to_g: Vec<usize>,
    pub s_cyclic: Vec<bool>,
    pub g_cyclic: Vec<bool>,
    /// Normalizers and centralizers in G of each G-class representative.
    pub g_normalizers: Vec<Subgroup>,
    pub g_centralizers: Vec<Subgroup>,
}

impl ClassTable {
    pub fn class_count(&self, scope: Scope) -> usize {
        match scope {
            Scope::Sylow => self.s_reps.len(),
            Scope::Group => self.g_reps.len(),
        }
    }

    pub fn reps(&self, scope: Scope) -> &[usize] {
        match scope {
            Scope::Sylow => &self.s_reps,
            Scope::Group => &self.g_reps,
        }
    }

    pub fn class_of(&self, sub_idx: usize, scope: Scope) -> usize {
        match scope {
            Scope::Sylow => self.s_class_of[sub_idx],
            Scope::Group => self.g_class_of[sub_idx],
        }
    }

    pub fn cyclic_flags(&self, scope: Scope) -> &[bool] {
        match scope {
            Scope::Sylow => &self.s_cyclic,
            Scope::Group => &self.g_cyclic,
        }
    }

    pub fn rep_subgroup(&self, class: usize, scope: Scope) -> &Subgroup {
        &self.subgroups[self.reps(scope)[class]]
    }

    /// Number of conjugacy classes of cyclic p-subgroups of G.
    pub fn cyclic_class_count(&self, scope: Scope) -> usize {
        self.cyclic_flags(scope).iter().filter(|&&c| c).count()
    }

    /// Class index of an arbitrary enumerated p-subgroup of the Sylow.
    pub fn class_of_subgroup(&self, sub: &Subgroup, scope: Scope) -> Option<usize> {
        self.sub_index
            .get(sub.key())
            .map(|&i| self.class_of(i, scope))
    }

    pub fn subgroup_index(&self, sub: &Subgroup) -> Option<usize> {
        self.sub_index.get(sub.key()).copied()
    }

    /// Pairs of distinct S-classes lying in one G-class, one pair per merge:
    /// (first S-class of the G-class, other S-class).
    pub fn fused_pairs(&self) -> Vec<(usize, usize)> {
        let mut first: Vec<Option<usize>> = vec![None; self.g_reps.len()];
        let mut pairs = Vec::new();
        for s in 0..self.s_reps.len() {
            let g = self.s_to_g[s];
            match first[g] {
                None => first[g] = Some(s),
                Some(f) => pairs.push((f, s)),
            }
        }
        pairs
    }

    /// Human-readable label of a class: generators of its representative.
    pub fn class_label(&self, group: &FiniteGroup, class: usize, scope: Scope) -> String {
        let rep = self.rep_subgroup(class, scope);
        format!("<{}>", rep.describe_gens(group))
    }
}

/// Enumerates all subgroups of the Sylow p-subgroup layer by layer: a group
/// of order p^k is generated by one of its maximal subgroups together with a
/// normalizing element.
fn enumerate_sylow_subgroups(
    group: &FiniteGroup,
    sylow: &Subgroup,
    bound: usize,
) -> Result<Vec<Subgroup>> {
    let mut all: Vec<Subgroup> = vec![group.trivial_subgroup()];
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
    seen.insert(all[0].key().to_vec(), ());
    let mut layer: Vec<Subgroup> = all.clone();
    while !layer.is_empty() {
        let mut next: Vec<Subgroup> = Vec::new();
        for q in &layer {
            // normalizer of q inside the Sylow subgroup
            let candidates: Vec<usize> = sylow
                .elements()
                .iter()
                .copied()
                .filter(|&x| {
                    !q.contains(x) && q.gens().iter().all(|&h| q.contains(group.conj(x, h)))
                })
                .collect();
            for x in candidates {
                let mut gens = q.gens().to_vec();
                gens.push(x);
                let bigger = group.subgroup_closure(&gens);
                if seen.contains_key(bigger.key()) {
                    continue;
                }
                if all.len() + next.len() >= bound {
                    return Err(Error::LatticeTooLarge { bound });
                }
                seen.insert(bigger.key().to_vec(), ());
                next.push(bigger);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| (a.order(), a.key()).cmp(&(b.order(), b.key())));
    Ok(all)
}

/// Partitions a subgroup list into conjugacy classes of `ambient`, restricted
/// to conjugating elements from `conjugators`.
fn fuse(
    group: &FiniteGroup,
    subs: &[Subgroup],
    conjugators: &Subgroup,
) -> (Vec<usize>, Vec<usize>) {
    let index: HashMap<&[usize], usize> =
        subs.iter().enumerate().map(|(i, s)| (s.key(), i)).collect();
    let mut class_of = vec![usize::MAX; subs.len()];
    let mut reps = Vec::new();
    for i in 0..subs.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let class = reps.len();
        reps.push(i);
        // orbit of subs[i] under conjugation
        let mut orbit = vec![i];
        class_of[i] = class;
        let mut k = 0;
        while k < orbit.len() {
            let cur = orbit[k];
            k += 1;
            for &g in conjugators.gens() {
                let img = conjugate_subgroup(group, &subs[cur], g);
                if let Some(&j) = index.get(img.key()) {
                    if class_of[j] == usize::MAX {
                        class_of[j] = class;
                        orbit.push(j);
                    }
                } else {
                    // conjugator must permute the enumerated set
                    unreachable!("conjugate left the subgroup list");
                }
            }
        }
    }
    (class_of, reps)
}

pub fn p_subgroup_classes(group: &FiniteGroup, p: u64) -> Result<ClassTable> {
    p_subgroup_classes_bounded(group, p, DEFAULT_SUBGROUP_BOUND)
}

pub fn p_subgroup_classes_bounded(group: &FiniteGroup, p: u64, bound: usize) -> Result<ClassTable> {
    let sylow = sylow_subgroup(group, p);
    let subgroups = enumerate_sylow_subgroups(group, &sylow, bound)?;
    let sub_index: HashMap<Vec<usize>, usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.key().to_vec(), i))
        .collect();

    // S-classes: conjugation by the Sylow subgroup permutes the full list.
    let (s_class_of, s_reps) = fuse(group, &subgroups, &sylow);

    // G-classes: conjugation by G can leave the list (the image is a subgroup
    // of some other Sylow), so fuse S-classes by pairwise conjugacy tests.
    let mut g_class_of_s_class: Vec<usize> = vec![usize::MAX; s_reps.len()];
    let mut g_rep_s: Vec<usize> = Vec::new();
    for i in 0..s_reps.len() {
        if g_class_of_s_class[i] != usize::MAX {
            continue;
        }
        let class = g_rep_s.len();
        g_class_of_s_class[i] = class;
        g_rep_s.push(i);
        for j in i + 1..s_reps.len() {
            if g_class_of_s_class[j] != usize::MAX {
                continue;
            }
            if subgroups[s_reps[i]].order() != subgroups[s_reps[j]].order() {
                continue;
            }
            if are_conjugate_subgroups(group, &subgroups[s_reps[i]], &subgroups[s_reps[j]])
                .is_some()
            {
                g_class_of_s_class[j] = class;
            }
        }
    }
    let g_class_of: Vec<usize> = s_class_of.iter().map(|&s| g_class_of_s_class[s]).collect();
    let g_reps: Vec<usize> = g_rep_s.iter().map(|&s| s_reps[s]).collect();
    let s_to_g = g_class_of_s_class;

    let s_cyclic: Vec<bool> = s_reps
        .iter()
        .map(|&i| subgroups[i].is_cyclic(group))
        .collect();
    let g_cyclic: Vec<bool> = g_reps
        .iter()
        .map(|&i| subgroups[i].is_cyclic(group))
        .collect();

    let g_normalizers: Vec<Subgroup> = g_reps
        .iter()
        .map(|&i| normalizer(group, &subgroups[i]))
        .collect();
    let g_centralizers: Vec<Subgroup> = g_reps
        .iter()
        .map(|&i| centralizer(group, &subgroups[i]))
        .collect();

    Ok(ClassTable {
        p,
        sylow,
        subgroups,
        sub_index,
        s_class_of,
        g_class_of,
        s_reps,
        g_reps,
        s_to_g,
        s_cyclic,
        g_cyclic,
        g_normalizers,
        g_centralizers,
    })
}

/// Frobenius criterion: G is p-nilpotent iff every automizer of a p-subgroup
/// is a p-group.
pub fn is_p_nilpotent(table: &ClassTable) -> Result<bool> {
    for class in 0..table.g_reps.len() {
        let n = &table.g_normalizers[class];
        let c = &table.g_centralizers[class];
        let automizer_order = n.order() / c.order();
        if !crate::group::is_power_of(automizer_order.max(1) as u64, table.p) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether H realizes every G-conjugation map between subgroups of S: for
/// each subgroup P of S and each g with gPg^{-1} <= S, some h in H induces
/// the same homomorphism P -> S. Maps are deduplicated by their value tables.
pub fn controls_fusion(
    group: &FiniteGroup,
    h: &Subgroup,
    s: &Subgroup,
    table: &ClassTable,
) -> Result<bool> {
    if table.sylow.key() != s.key() {
        return Err(Error::Precondition(
            "fusion control test requires the table's Sylow subgroup".into(),
        ));
    }
    if !s.is_subset_of(h) {
        return Err(Error::Precondition("fusion control requires S <= H".into()));
    }
    for &rep in &table.s_reps {
        let p_sub = &table.subgroups[rep];
        let g_maps = induced_maps(group, p_sub, s, None);
        let h_maps = induced_maps(group, p_sub, s, Some(h));
        if g_maps != h_maps {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The weaker subgroup-level condition: any two G-conjugate subgroups of S
/// are already H-conjugate. Reported as a diagnostic only.
pub fn controls_fusion_weak(group: &FiniteGroup, h: &Subgroup, table: &ClassTable) -> Result<bool> {
    for (i, j) in table.fused_pairs() {
        let a = &table.subgroups[table.s_reps[i]];
        let b = &table.subgroups[table.s_reps[j]];
        let witness = are_conjugate_subgroups(group, a, b)
            .ok_or_else(|| Error::Internal("fused pair without witness".into()))?;
        let _ = witness;
        // search for an H-witness
        let found = h
            .elements()
            .iter()
            .any(|&g| conjugate_subgroup(group, a, g) == *b);
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All conjugation-induced injections P -> S coming from `within` (or all of
/// G), each encoded by the image list of P's sorted elements.
fn induced_maps(
    group: &FiniteGroup,
    p_sub: &Subgroup,
    s: &Subgroup,
    within: Option<&Subgroup>,
) -> std::collections::BTreeSet<Vec<usize>> {
    let mut maps = std::collections::BTreeSet::new();
    let candidates: Vec<usize> = match within {
        Some(h) => h.elements().to_vec(),
        None => (0..group.order()).collect(),
    };
    for g in candidates {
        if !p_sub.gens().iter().all(|&x| s.contains(group.conj(g, x))) {
            continue;
        }
        let image: Vec<usize> = p_sub.elements().iter().map(|&x| group.conj(g, x)).collect();
        if image.iter().all(|&y| s.contains(y)) {
            maps.insert(image);
        }
    }
    maps
}
