//! Integer-valued functions on p-subgroup classes, the mark function of a
//! coset action, dimension (sign) functions, and stability under fusion.
//!
//! A `SuperclassFunction` is indexed by G-classes; a `SylowFunction` is
//! indexed by S-classes. Keeping the two apart makes "stable" a typed
//! conversion instead of a silent assumption.

use crate::classes::{ClassTable, Scope};
use crate::error::{Error, Result};
use crate::group::{normalizer, FiniteGroup, Subgroup};

/// Integer values on G-conjugacy classes of p-subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperclassFunction {
    pub values: Vec<i64>,
}

/// Integer values on S-conjugacy classes of subgroups of the Sylow subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowFunction {
    pub values: Vec<i64>,
}

/// A sign vector on S-classes; `true` encodes the sign -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignFunction {
    pub bits: Vec<bool>,
}

impl SuperclassFunction {
    pub fn new(values: Vec<i64>) -> Self {
        SuperclassFunction { values }
    }

    pub fn zero(table: &ClassTable) -> Self {
        SuperclassFunction {
            values: vec![0; table.class_count(Scope::Group)],
        }
    }

    pub fn constant(table: &ClassTable, c: i64) -> Self {
        SuperclassFunction {
            values: vec![c; table.class_count(Scope::Group)],
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        SuperclassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        SuperclassFunction {
            values: self.values.iter().map(|v| c * v).collect(),
        }
    }

    /// View on S-classes (always well-defined).
    pub fn restrict_to_sylow(&self, table: &ClassTable) -> SylowFunction {
        SylowFunction {
            values: (0..table.class_count(Scope::Sylow))
                .map(|s| self.values[table.s_to_g[s]])
                .collect(),
        }
    }
}

impl SylowFunction {
    pub fn new(values: Vec<i64>) -> Self {
        SylowFunction { values }
    }

    /// Promotes to a function on G-classes; requires G-stability.
    pub fn to_superclass(&self, table: &ClassTable) -> Result<SuperclassFunction> {
        if let Some((i, j)) = is_g_stable(self, table) {
            return Err(Error::Precondition(format!(
                "function is not stable: S-classes {i} and {j} are fused but carry different values"
            )));
        }
        let mut values = vec![0i64; table.class_count(Scope::Group)];
        for s in 0..self.values.len() {
            values[table.s_to_g[s]] = self.values[s];
        }
        Ok(SuperclassFunction { values })
    }
}

impl SignFunction {
    pub fn plus(n: usize) -> Self {
        SignFunction {
            bits: vec![false; n],
        }
    }

    pub fn all_minus(n: usize) -> Self {
        SignFunction {
            bits: vec![true; n],
        }
    }

    /// Pointwise product of signs (group operation).
    pub fn mul(&self, other: &Self) -> Self {
        SignFunction {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        self.bits.iter().map(|&b| if b { -1 } else { 1 }).collect()
    }
}

/// Number of fixed cosets of each class representative acting on G/K.
pub fn mark_function(group: &FiniteGroup, k: &Subgroup, table: &ClassTable) -> SuperclassFunction {
    // coset representatives of K in G
    let mut coset_reps: Vec<usize> = Vec::new();
    let mut seen = vec![false; group.order()];
    for g in 0..group.order() {
        if seen[g] {
            continue;
        }
        coset_reps.push(g);
        for &h in k.elements() {
            seen[group.mul(g, h)] = true;
        }
    }
    let values = table
        .reps(Scope::Group)
        .iter()
        .map(|&rep| {
            let p_sub = &table.subgroups[rep];
            coset_reps
                .iter()
                .filter(|&&g| {
                    // P g K = g K iff g^{-1} x g in K for all x in P
                    let gi = group.inv(g);
                    p_sub
                        .gens()
                        .iter()
                        .all(|&x| k.contains(group.mul(group.mul(gi, x), g)))
                })
                .count() as i64
        })
        .collect();
    SuperclassFunction { values }
}

/// Pointwise (-1)^f as a sign vector on S-classes.
pub fn dim_function(f: &SuperclassFunction, table: &ClassTable) -> SignFunction {
    dim_of_sylow_function(&f.restrict_to_sylow(table))
}

pub fn dim_of_sylow_function(f: &SylowFunction) -> SignFunction {
    SignFunction {
        bits: f.values.iter().map(|v| v.rem_euclid(2) == 1).collect(),
    }
}

/// Returns a violating pair of fused S-classes, or None when f is constant on
/// G-classes.
pub fn is_g_stable(f: &SylowFunction, table: &ClassTable) -> Option<(usize, usize)> {
    for (i, j) in table.fused_pairs() {
        if f.values[i] != f.values[j] {
            return Some((i, j));
        }
    }
    None
}

/// Instance check of the reduction to cyclic classes: a function satisfying
/// the defining conditions that is stable at every cyclic class must be
/// stable everywhere. Returns whether f is stable on cyclic classes; if it
/// is, full stability is asserted.
pub fn stable_from_cyclics_check(
    f: &SylowFunction,
    table: &ClassTable,
    system: &crate::borel_smith::BsSystem,
) -> Result<bool> {
    let violations = system.check(&f.values);
    if !violations.is_empty() {
        return Err(Error::NotBorelSmith(violations[0].provenance.clone()));
    }
    let stable_on_cyclics = table
        .fused_pairs()
        .iter()
        .all(|&(i, j)| !table.s_cyclic[i] || !table.s_cyclic[j] || f.values[i] == f.values[j]);
    if stable_on_cyclics && is_g_stable(f, table).is_some() {
        return Err(Error::Internal(
            "stable on cyclic classes but not stable everywhere".into(),
        ));
    }
    Ok(stable_on_cyclics)
}

/// Sum of the conjugates of f over coset representatives of S in N_G(S).
/// The result is N_G(S)-stable.
pub fn trace_to_stable(
    f: &SylowFunction,
    group: &FiniteGroup,
    table: &ClassTable,
) -> SylowFunction {
    let ns = normalizer(group, &table.sylow);
    let mut coset_reps: Vec<usize> = Vec::new();
    let mut seen: std::collections::HashSet<usize> = Default::default();
    for &g in ns.elements() {
        if seen.contains(&g) {
            continue;
        }
        coset_reps.push(g);
        for &s in table.sylow.elements() {
            seen.insert(group.mul(g, s));
        }
    }
    let values = (0..table.class_count(Scope::Sylow))
        .map(|class| {
            let p_sub = &table.subgroups[table.s_reps[class]];
            coset_reps
                .iter()
                .map(|&g| {
                    let gi = group.inv(g);
                    let conj = crate::group::conjugate_subgroup(group, p_sub, gi);
                    let c = table
                        .class_of_subgroup(&conj, Scope::Sylow)
                        .expect("conjugate by a normalizer element stays in the Sylow subgroup");
                    f.values[c]
                })
                .sum()
        })
        .collect();
    SylowFunction { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::p_subgroup_classes;
    use crate::families::{named_group, Family};

    #[test]
    fn marks_of_regular_action() {
        let c2 = named_group(Family::Cyclic(2)).unwrap();
        let t = p_subgroup_classes(&c2, 2).unwrap();
        let m = mark_function(&c2, &c2.trivial_subgroup(), &t);
        assert_eq!(m.values, vec![2, 0]);
    }

    #[test]
    fn marks_of_full_subgroup_are_one() {
        let s4 = named_group(Family::Symmetric(4)).unwrap();
        let t = p_subgroup_classes(&s4, 2).unwrap();
        let m = mark_function(&s4, &s4.full_subgroup(), &t);
        assert!(m.values.iter().all(|&v| v == 1));
    }

    #[test]
    fn mark_at_trivial_class_is_index_and_sylow_self_fixed() {
        let s4 = named_group(Family::Symmetric(4)).unwrap();
        let t = p_subgroup_classes(&s4, 2).unwrap();
        let d8 = t.sylow.clone();
        let m = mark_function(&s4, &d8, &t);
        assert_eq!(m.values[0], 3); // [G : D8]
        let sylow_class = t
            .class_of_subgroup(&d8, Scope::Group)
            .expect("Sylow subgroup is enumerated");
        assert_eq!(m.values[sylow_class], 1); // self-normalizing Sylow
    }

    #[test]
    fn marks_monotone_under_containment() {
        let s4 = named_group(Family::Symmetric(4)).unwrap();
        let t = p_subgroup_classes(&s4, 2).unwrap();
        for k_rep in t.reps(Scope::Group) {
            let k = t.subgroups[*k_rep].clone();
            let m = mark_function(&s4, &k, &t);
            for a in 0..t.subgroups.len() {
                for b in 0..t.subgroups.len() {
                    if t.subgroups[a].is_subset_of(&t.subgroups[b]) {
                        let va = m.values[t.g_class_of[a]];
                        let vb = m.values[t.g_class_of[b]];
                        assert!(vb <= va, "marks must shrink up the subgroup order");
                    }
                }
            }
        }
    }

    #[test]
    fn dim_is_multiplicative() {
        let d8 = named_group(Family::Dihedral(8)).unwrap();
        let t = p_subgroup_classes(&d8, 2).unwrap();
        let f = SuperclassFunction::new(vec![2, 1, 1, 0, 0, 3, -1, 5]);
        let g = SuperclassFunction::new(vec![1, -2, 4, 1, 1, 0, 7, 2]);
        let lhs = dim_function(&f.add(&g), &t);
        let rhs = dim_function(&f, &t).mul(&dim_function(&g, &t));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dim_constants() {
        let d8 = named_group(Family::Dihedral(8)).unwrap();
        let t = p_subgroup_classes(&d8, 2).unwrap();
        let ones = SuperclassFunction::constant(&t, 1);
        assert!(dim_function(&ones, &t).bits.iter().all(|&b| b));
        let zeros = SuperclassFunction::zero(&t);
        assert!(!dim_function(&zeros, &t).bits.iter().any(|b| *b));
    }

    #[test]
    fn stability_on_d8_inside_s4() {
        let s4 = named_group(Family::Symmetric(4)).unwrap();
        let t = p_subgroup_classes(&s4, 2).unwrap();
        // constant functions are stable
        let f = SylowFunction::new(vec![1; t.class_count(Scope::Sylow)]);
        assert!(is_g_stable(&f, &t).is_none());
        // S_4 fuses the center of the Sylow with one reflection class, so
        // some pair of fused S-classes exists
        assert!(!t.fused_pairs().is_empty());
        let (i, j) = t.fused_pairs()[0];
        let mut v = vec![0i64; t.class_count(Scope::Sylow)];
        v[i] = 1;
        let f = SylowFunction::new(v);
        assert_eq!(is_g_stable(&f, &t), Some((i, j)));
    }

    #[test]
    fn trace_identity_when_sylow_self_normalizing() {
        let s4 = named_group(Family::Symmetric(4)).unwrap();
        let t = p_subgroup_classes(&s4, 2).unwrap();
        let f = SylowFunction::new((0..t.class_count(Scope::Sylow) as i64).collect());
        assert_eq!(trace_to_stable(&f, &s4, &t), f);
    }

    #[test]
    fn trace_preserves_stable_parities() {
        // [N_G(S):S] is odd, so the trace of a function whose parities are
        // already constant on fused classes keeps its parities
        let a4 = named_group(Family::Alternating(4)).unwrap();
        let t = p_subgroup_classes(&a4, 2).unwrap();
        let lat =
            crate::borel_smith::borel_smith_basis(&a4, &t, crate::classes::Scope::Sylow).unwrap();
        for row in &lat.rows {
            let parities: Vec<i64> = row.iter().map(|v| v.rem_euclid(2)).collect();
            let stable_parity = t
                .fused_pairs()
                .iter()
                .all(|&(i, j)| parities[i] == parities[j]);
            if !stable_parity {
                continue;
            }
            let traced = trace_to_stable(&SylowFunction::new(row.clone()), &a4, &t);
            for (a, b) in traced.values.iter().zip(row) {
                assert_eq!(a.rem_euclid(2), b.rem_euclid(2));
            }
        }
    }

    #[test]
    fn stability_of_reference_rows_under_s4() {
        // the row of the non-normal maximal noncyclic subgroup is unstable on
        // its own; subtracting the maximal-cyclic row repairs it
        let s4 = named_group(Family::Symmetric(4)).unwrap();
        let t = p_subgroup_classes(&s4, 2).unwrap();
        let labels = crate::report::dihedral_class_labels(&s4, &t).unwrap();
        let class = |l: &str| crate::report::labeled_class(&labels, l).unwrap();
        let n = t.class_count(Scope::Sylow);
        let mut f_h2 = vec![0i64; n];
        for (l, v) in [("1", 1), ("K2", 1), ("C2", 1), ("H2", 1)] {
            f_h2[class(l)] = v;
        }
        let mut f_c4 = vec![0i64; n];
        for (l, v) in [("1", 1), ("C2", 1), ("C4", 1)] {
            f_c4[class(l)] = v;
        }
        // K1 fuses with the center in S_4, so f_H2 (value 0 at K1, 1 at C2)
        // is not stable
        assert!(is_g_stable(&SylowFunction::new(f_h2.clone()), &t).is_some());
        let diff: Vec<i64> = f_h2.iter().zip(&f_c4).map(|(a, b)| a - b).collect();
        assert!(is_g_stable(&SylowFunction::new(diff), &t).is_none());
    }

    #[test]
    fn stable_on_cyclics_implies_stable() {
        // quantified over random lattice elements; the check errors out if
        // the implication ever fails
        for (fam, p) in [
            (Family::Symmetric(4), 2u64),
            (Family::Alternating(6), 2),
            (Family::S2pNormalizer(3), 3),
        ] {
            let g = named_group(fam).unwrap();
            let t = p_subgroup_classes(&g, p).unwrap();
            let sys = crate::borel_smith::build_constraints(&g, &t, crate::classes::Scope::Sylow);
            let lat = crate::borel_smith::borel_smith_basis(&g, &t, crate::classes::Scope::Sylow)
                .unwrap();
            let mut seed = 0x9e3779b97f4a7c15u64;
            for _ in 0..40 {
                let coeffs: Vec<i64> = (0..lat.rank())
                    .map(|_| {
                        seed ^= seed << 13;
                        seed ^= seed >> 7;
                        seed ^= seed << 17;
                        (seed % 7) as i64 - 3
                    })
                    .collect();
                let f = SylowFunction::new(lat.combine(&coeffs));
                // returns Err(Internal) if stability fails the reduction
                let _ = stable_from_cyclics_check(&f, &t, &sys).unwrap();
            }
        }
    }

    #[test]
    fn trace_averages_over_a4() {
        // V4 normal in A4: three cosets permute the three order-2 subgroups
        let a4 = named_group(Family::Alternating(4)).unwrap();
        let t = p_subgroup_classes(&a4, 2).unwrap();
        assert_eq!(t.class_count(Scope::Sylow), 5); // 1, three C2, V4
        let mut v = vec![0i64; 5];
        // put weight on one order-2 class
        let c2 = (0..5)
            .find(|&c| t.rep_subgroup(c, Scope::Sylow).order() == 2)
            .unwrap();
        v[c2] = 2;
        let traced = trace_to_stable(&SylowFunction::new(v), &a4, &t);
        // all three order-2 classes now carry equal value 2
        for c in 0..5 {
            if t.rep_subgroup(c, Scope::Sylow).order() == 2 {
                assert_eq!(traced.values[c], 2);
            }
        }
        assert!(is_g_stable(&traced, &t).is_none());
    }
}
