//! Sign vectors on Sylow-level classes over the two-element field: the unit
//! group of the Burnside ring of a p-group via its marks, its stable part
//! under fusion, and the p = 2 surjectivity test with certificates.
//!
//! For 2-groups the unit group is realized operationally as the image of the
//! dimension homomorphism on the lattice of admissible functions; the stable
//! part of that image and the stable units coincide at the level of mark
//! vectors, and both are handled here as row spaces over F_2.

use crate::borel_smith::{borel_smith_basis, IntegerLattice};
use crate::classes::{ClassTable, Scope};
use crate::error::{Error, Result};
use crate::group::{is_power_of, normalizer, FiniteGroup};
use crate::superclass::{
    dim_function, dim_of_sylow_function, is_g_stable, trace_to_stable, SignFunction,
    SuperclassFunction, SylowFunction,
};

/// A subspace of F_2^ambient stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignSpace {
    pub ambient: usize,
    pub basis: Vec<Vec<bool>>,
}

impl SignSpace {
    pub fn span(ambient: usize, rows: Vec<Vec<bool>>) -> Self {
        let mut basis: Vec<Vec<bool>> = Vec::new();
        for row in rows {
            assert_eq!(row.len(), ambient);
            insert_reduced(&mut basis, row);
        }
        SignSpace { ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[bool]) -> bool {
        let mut r = v.to_vec();
        reduce_against(&self.basis, &mut r);
        r.iter().all(|&b| !b)
    }

    pub fn contains_sign(&self, s: &SignFunction) -> bool {
        self.contains(&s.bits)
    }

    pub fn equal(&self, other: &SignSpace) -> bool {
        self == other
    }

    /// Some basis vector of self outside `other` (None when self <= other).
    pub fn witness_outside(&self, other: &SignSpace) -> Option<SignFunction> {
        self.basis
            .iter()
            .find(|b| !other.contains(b))
            .map(|b| SignFunction { bits: b.clone() })
    }
}

fn pivot(row: &[bool]) -> Option<usize> {
    row.iter().position(|&b| b)
}

fn reduce_against(basis: &[Vec<bool>], row: &mut [bool]) {
    for b in basis {
        let p = pivot(b).expect("basis rows are nonzero");
        if row[p] {
            for (r, &x) in row.iter_mut().zip(b) {
                *r ^= x;
            }
        }
    }
}

fn insert_reduced(basis: &mut Vec<Vec<bool>>, mut row: Vec<bool>) {
    reduce_against(basis, &mut row);
    let Some(p) = pivot(&row) else { return };
    // back-substitute into earlier rows and keep rows ordered by pivot
    for b in basis.iter_mut() {
        if b[p] {
            for (x, &r) in b.iter_mut().zip(&row) {
                *x ^= r;
            }
        }
    }
    let pos = basis
        .iter()
        .position(|b| pivot(b).expect("nonzero") > p)
        .unwrap_or(basis.len());
    basis.insert(pos, row);
}

/// Solves sum of a subset of `gens` = target over F_2; returns the subset
/// selector.
pub fn solve_f2(gens: &[Vec<bool>], target: &[bool]) -> Option<Vec<bool>> {
    let mut rows: Vec<(Vec<bool>, Vec<bool>)> = Vec::new(); // (vector, combo)
    for (i, g) in gens.iter().enumerate() {
        let mut v = g.clone();
        let mut combo = vec![false; gens.len()];
        combo[i] = true;
        for (bv, bc) in &rows {
            if let Some(p) = pivot(bv) {
                if v[p] {
                    for (x, &y) in v.iter_mut().zip(bv) {
                        *x ^= y;
                    }
                    for (x, &y) in combo.iter_mut().zip(bc) {
                        *x ^= y;
                    }
                }
            }
        }
        if pivot(&v).is_some() {
            rows.push((v, combo));
        }
    }
    let mut t = target.to_vec();
    let mut combo = vec![false; gens.len()];
    for (bv, bc) in &rows {
        let p = pivot(bv).expect("nonzero");
        if t[p] {
            for (x, &y) in t.iter_mut().zip(bv) {
                *x ^= y;
            }
            for (x, &y) in combo.iter_mut().zip(bc) {
                *x ^= y;
            }
        }
    }
    if t.iter().all(|&b| !b) {
        Some(combo)
    } else {
        None
    }
}

/// Image of the dimension homomorphism on the Sylow-level lattice: the unit
/// group of the Burnside ring of the Sylow subgroup, via marks. For odd p the
/// only units are the constants.
pub fn unit_space_of_sylow(group: &FiniteGroup, table: &ClassTable) -> Result<SignSpace> {
    let n = table.class_count(Scope::Sylow);
    if table.p != 2 {
        return Ok(SignSpace::span(n, vec![vec![true; n]]));
    }
    let basis = borel_smith_basis(group, table, Scope::Sylow)?;
    let rows = basis
        .rows
        .iter()
        .map(|r| dim_of_sylow_function(&SylowFunction::new(r.clone())).bits)
        .collect();
    Ok(SignSpace::span(n, rows))
}

/// Standalone entry point: the unit group of the Burnside ring of a p-group,
/// as sign vectors on its own subgroup classes.
pub fn unit_group_of_p_group(s: &FiniteGroup, p: u64) -> Result<SignSpace> {
    if !is_power_of(s.order() as u64, p) {
        return Err(Error::NotPGroup { p });
    }
    let table = crate::classes::p_subgroup_classes(s, p)?;
    unit_space_of_sylow(s, &table)
}

/// Subspace of sign functions constant on fused classes.
pub fn stable_sign_subspace(space: &SignSpace, table: &ClassTable) -> SignSpace {
    let pairs = table.fused_pairs();
    if pairs.is_empty() || space.dim() == 0 {
        return space.clone();
    }
    // kernel of the pair-difference map restricted to the space
    let diff_rows: Vec<Vec<bool>> = space
        .basis
        .iter()
        .map(|b| pairs.iter().map(|&(i, j)| b[i] ^ b[j]).collect())
        .collect();
    let mut stable_rows = Vec::new();
    for combo in kernel_f2(&diff_rows, pairs.len()) {
        let mut v = vec![false; space.ambient];
        for (i, &used) in combo.iter().enumerate() {
            if used {
                for (x, &y) in v.iter_mut().zip(&space.basis[i]) {
                    *x ^= y;
                }
            }
        }
        stable_rows.push(v);
    }
    SignSpace::span(space.ambient, stable_rows)
}

/// Basis of { c : sum_i c_i rows_i = 0 } over F_2.
fn kernel_f2(rows: &[Vec<bool>], width: usize) -> Vec<Vec<bool>> {
    let n = rows.len();
    let mut reduced: Vec<(Vec<bool>, Vec<bool>)> = Vec::new();
    let mut kernel = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut v = r.clone();
        assert_eq!(v.len(), width);
        let mut combo = vec![false; n];
        combo[i] = true;
        for (bv, bc) in &reduced {
            if let Some(p) = pivot(bv) {
                if v[p] {
                    for (x, &y) in v.iter_mut().zip(bv) {
                        *x ^= y;
                    }
                    for (x, &y) in combo.iter_mut().zip(bc) {
                        *x ^= y;
                    }
                }
            }
        }
        if pivot(&v).is_some() {
            reduced.push((v, combo));
        } else {
            kernel.push(combo);
        }
    }
    kernel
}

/// Outcome of the exact p = 2 surjectivity test over the two-element field.
pub struct P2Surjectivity {
    pub surjective: bool,
    /// image of the stable lattice under the dimension map
    pub image: SignSpace,
    /// stable part of the unit group of the Sylow subgroup
    pub stable_units: SignSpace,
    /// for each basis unit, a stable function mapping onto it (when surjective)
    pub preimage_basis: Vec<(SignFunction, SuperclassFunction)>,
    /// a stable unit with no stable preimage (when not surjective)
    pub missing_unit: Option<SignFunction>,
}

/// The exact criterion at p = 2: the map onto the stable units is surjective
/// iff every stable unit is the sign vector of a stable admissible function.
pub fn p2_surjectivity(group: &FiniteGroup, table: &ClassTable) -> Result<P2Surjectivity> {
    if table.p != 2 {
        return Err(Error::Precondition("p2_surjectivity requires p = 2".into()));
    }
    let g_basis = borel_smith_basis(group, table, Scope::Group)?;
    let image_rows: Vec<Vec<bool>> = g_basis
        .rows
        .iter()
        .map(|r| dim_function(&SuperclassFunction::new(r.clone()), table).bits)
        .collect();
    let image = SignSpace::span(table.class_count(Scope::Sylow), image_rows);
    let units = unit_space_of_sylow(group, table)?;
    let stable_units = stable_sign_subspace(&units, table);
    // the image consists of stable units, so inclusion always holds
    if let Some(out) = image.witness_outside(&stable_units) {
        return Err(Error::Internal(format!(
            "image vector {:?} is not a stable unit",
            out.signs()
        )));
    }
    if let Some(missing) = stable_units.witness_outside(&image) {
        return Ok(P2Surjectivity {
            surjective: false,
            image,
            stable_units,
            preimage_basis: Vec::new(),
            missing_unit: Some(missing),
        });
    }
    let mut preimage_basis = Vec::new();
    for unit_bits in &stable_units.basis {
        let u = SignFunction {
            bits: unit_bits.clone(),
        };
        let f = lift_in_basis(&g_basis, table, &u)
            .ok_or_else(|| Error::Internal("unit in image without a lift".into()))?;
        preimage_basis.push((u, f));
    }
    Ok(P2Surjectivity {
        surjective: true,
        image,
        stable_units,
        preimage_basis,
        missing_unit: None,
    })
}

fn lift_in_basis(
    g_basis: &IntegerLattice,
    table: &ClassTable,
    u: &SignFunction,
) -> Option<SuperclassFunction> {
    let gens: Vec<Vec<bool>> = g_basis
        .rows
        .iter()
        .map(|r| dim_function(&SuperclassFunction::new(r.clone()), table).bits)
        .collect();
    let combo = solve_f2(&gens, &u.bits)?;
    let coeffs: Vec<i64> = combo.iter().map(|&b| if b { 1 } else { 0 }).collect();
    let f = SuperclassFunction::new(g_basis.combine(&coeffs));
    debug_assert_eq!(dim_function(&f, table).bits, u.bits);
    Some(f)
}

/// A stable admissible function whose sign vector is the given stable unit.
/// Solved in the stable lattice first; if that fails but the Sylow
/// normalizer controls fusion, a Sylow-level lift is traced to a stable one.
pub fn lift_unit(
    u: &SignFunction,
    group: &FiniteGroup,
    table: &ClassTable,
) -> Result<SuperclassFunction> {
    let g_basis = borel_smith_basis(group, table, Scope::Group)?;
    if let Some(f) = lift_in_basis(&g_basis, table, u) {
        return Ok(f);
    }
    let ns = normalizer(group, &table.sylow);
    let sylow = table.sylow.clone();
    if crate::classes::controls_fusion(group, &ns, &sylow, table)? {
        let s_basis = borel_smith_basis(group, table, Scope::Sylow)?;
        let gens: Vec<Vec<bool>> = s_basis
            .rows
            .iter()
            .map(|r| dim_of_sylow_function(&SylowFunction::new(r.clone())).bits)
            .collect();
        if let Some(combo) = solve_f2(&gens, &u.bits) {
            let coeffs: Vec<i64> = combo.iter().map(|&b| if b { 1 } else { 0 }).collect();
            let f_s = SylowFunction::new(s_basis.combine(&coeffs));
            let traced = trace_to_stable(&f_s, group, table);
            if is_g_stable(&traced, table).is_none()
                && dim_of_sylow_function(&traced).bits == u.bits
            {
                return traced.to_superclass(table);
            }
        }
    }
    Err(Error::NoLift)
}
