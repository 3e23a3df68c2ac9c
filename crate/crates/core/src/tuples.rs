//! Reduced coherent character tuples for odd p: one character of
//! N_G(P)/PC_G(P) per p-subgroup class, tied together by the p-part
//! compatibility relation, solved exactly over Z/m.
//!
//! Stability inside one class costs nothing: characters kill commutators and
//! conjugation by a normalizer element acts as an inner automorphism on the
//! quotient. Cross-class compatibility is carried by transport to class
//! representatives, so the only emitted rows come from the p-part relation.

use crate::abelian::{hom_to_roots, FiniteAbelianGroup, HomGroup};
use crate::borel_smith::{BsSystem, ConstraintRow};
use crate::classes::{ClassTable, Scope};
use crate::error::{Error, Result};
use crate::group::{are_conjugate_subgroups, normalizer, FiniteGroup, Subgroup};
use crate::intmat::{self, Mat};
use crate::quotient::{automizer_reduced, QuotientGroup};
use num_bigint::BigInt;
use std::collections::HashMap;

pub struct TupleComponent {
    /// G-class this component sits at.
    pub class: usize,
    /// N_G(P)/(P*C_G(P)) for the class representative P.
    pub quotient: QuotientGroup,
    pub hom: HomGroup,
    /// First coordinate of this component in the concatenated layout.
    pub offset: usize,
}

#[derive(Clone, Debug)]
pub struct CoherenceConstraint {
    /// Coefficients mod m over the concatenated hom coordinates.
    pub coeffs: Vec<u64>,
    pub provenance: String,
}

pub struct TupleGroup {
    pub m: u64,
    pub components: Vec<TupleComponent>,
    pub total_coords: usize,
    pub constraints: Vec<CoherenceConstraint>,
    pub structure: FiniteAbelianGroup,
    /// One tuple per invariant factor; basis[j] generates a cyclic factor of
    /// order structure.invariant_factors[j].
    pub basis: Vec<Vec<u64>>,
}

impl TupleGroup {
    pub fn order(&self) -> u64 {
        self.structure.order()
    }

    /// Exponent of each concatenated coordinate.
    pub fn coordinate_orders(&self) -> Vec<u64> {
        self.components
            .iter()
            .flat_map(|c| c.hom.factors.iter().copied())
            .collect()
    }

    /// Value in Z/m of a tuple's class component at x in N_G(P_class).
    pub fn eval(&self, tuple: &[u64], class: usize, x: usize) -> Option<u64> {
        let comp = self.components.iter().find(|c| c.class == class)?;
        let coset = comp.quotient.project(x)?;
        let n = comp.hom.coordinate_count();
        Some(comp.hom.eval(&tuple[comp.offset..comp.offset + n], coset))
    }

    pub fn satisfies_constraints(&self, tuple: &[u64]) -> bool {
        self.constraints.iter().all(|c| {
            let dot: u64 = c
                .coeffs
                .iter()
                .zip(tuple)
                .map(|(a, b)| a * b % self.m)
                .sum::<u64>()
                % self.m;
            dot == 0
        })
    }

    /// Membership: the solution group is exactly the constraint-satisfying
    /// tuples, so containment is a constraint check on reduced coordinates.
    pub fn contains(&self, tuple: &[u64]) -> bool {
        let orders = self.coordinate_orders();
        tuple.len() == self.total_coords
            && tuple.iter().zip(&orders).all(|(&t, &e)| t < e)
            && self.satisfies_constraints(tuple)
    }
}

/// The compatibility rows: for each class representative P and x in N_G(P)
/// whose p-part escapes P, the value at P must match the transported value
/// at the class of P<x_p>. Rows are deduplicated; trivially zero rows drop.
pub fn coherence_constraints(
    group: &FiniteGroup,
    table: &ClassTable,
    components: &[TupleComponent],
) -> Result<Vec<CoherenceConstraint>> {
    let p = table.p;
    let total: usize = components.iter().map(|c| c.hom.coordinate_count()).sum();
    let m = components.first().map(|c| c.hom.m).unwrap_or(1);
    let mut rows: Vec<CoherenceConstraint> = Vec::new();
    let mut seen: std::collections::HashSet<Vec<u64>> = Default::default();
    // memoized class lookup with witness for subgroups not inside the Sylow
    let mut located: HashMap<Vec<usize>, (usize, usize)> = HashMap::new();

    for comp in components {
        let p_sub = table.rep_subgroup(comp.class, Scope::Group).clone();
        let n_of_p = &table.g_normalizers[comp.class];
        for &x in n_of_p.elements() {
            let dec = group.p_part(x, p);
            if p_sub.contains(dec.x_p) {
                continue;
            }
            let mut gens = p_sub.gens().to_vec();
            gens.push(dec.x_p);
            let q = group.subgroup_closure(&gens);
            debug_assert!(q.order() > p_sub.order());
            let (q_class, witness) = locate_class(group, table, &q, &mut located)?;
            debug_assert_ne!(q_class, comp.class);
            let y = group.conj(witness, x);

            let mut coeffs = vec![0u64; total];
            let coset = comp
                .quotient
                .project(x)
                .ok_or_else(|| Error::Internal("x not in its own normalizer quotient".into()))?;
            for (i, v) in comp.hom.eval_row(coset).into_iter().enumerate() {
                coeffs[comp.offset + i] = (coeffs[comp.offset + i] + v) % m;
            }
            let target = components
                .iter()
                .find(|c| c.class == q_class)
                .ok_or_else(|| Error::Internal("missing component".into()))?;
            let y_coset = target
                .quotient
                .project(y)
                .ok_or_else(|| Error::Internal("transported element escapes normalizer".into()))?;
            for (i, v) in target.hom.eval_row(y_coset).into_iter().enumerate() {
                let neg = (m - v % m) % m;
                coeffs[target.offset + i] = (coeffs[target.offset + i] + neg) % m;
            }
            if coeffs.iter().all(|&c| c == 0) {
                continue;
            }
            if seen.insert(coeffs.clone()) {
                rows.push(CoherenceConstraint {
                    coeffs,
                    provenance: format!(
                        "class {} element {} feeds class {}",
                        comp.class,
                        group.element(x),
                        q_class
                    ),
                });
            }
        }
    }
    Ok(rows)
}

fn locate_class(
    group: &FiniteGroup,
    table: &ClassTable,
    q: &Subgroup,
    memo: &mut HashMap<Vec<usize>, (usize, usize)>,
) -> Result<(usize, usize)> {
    if let Some(&hit) = memo.get(q.key()) {
        return Ok(hit);
    }
    for class in 0..table.class_count(Scope::Group) {
        let rep = table.rep_subgroup(class, Scope::Group);
        if rep.order() != q.order() {
            continue;
        }
        if let Some(g) = are_conjugate_subgroups(group, q, rep) {
            memo.insert(q.key().to_vec(), (class, g));
            return Ok((class, g));
        }
    }
    Err(Error::Internal(
        "p-subgroup not conjugate to any class representative".into(),
    ))
}

/// Assembles one character group per p-subgroup class, imposes the
/// compatibility rows, and solves for the group of coherent tuples with an
/// explicit basis.
pub fn reduced_tuple_group(group: &FiniteGroup, table: &ClassTable, m: u64) -> Result<TupleGroup> {
    if table.p == 2 {
        return Err(Error::Precondition(
            "the reduced tuple group is computed for odd p".into(),
        ));
    }
    if m == 0 {
        return Err(Error::Precondition("unit order m must be positive".into()));
    }
    if m.is_multiple_of(table.p) {
        return Err(Error::Precondition(
            "the unit order of a characteristic-p field is coprime to p".into(),
        ));
    }
    let mut components = Vec::new();
    let mut offset = 0usize;
    for class in 0..table.class_count(Scope::Group) {
        let rep = table.rep_subgroup(class, Scope::Group);
        let quotient = automizer_reduced(group, rep)?;
        let hom = hom_to_roots(&quotient, m)?;
        if class == 0 && !hom.is_trivial() {
            return Err(Error::Internal(
                "the trivial class contributes no characters".into(),
            ));
        }
        let n = hom.coordinate_count();
        components.push(TupleComponent {
            class,
            quotient,
            hom,
            offset,
        });
        offset += n;
    }
    let total = offset;
    let constraints = coherence_constraints(group, table, &components)?;
    let exponents: Vec<u64> = components
        .iter()
        .flat_map(|c| c.hom.factors.iter().copied())
        .collect();

    // lattice of integer coordinate vectors satisfying all rows mod m
    let system = BsSystem {
        scope: Scope::Group,
        vars: total,
        rows: constraints
            .iter()
            .map(|c| ConstraintRow {
                coeffs: c.coeffs.iter().map(|&x| x as i64).collect(),
                modulus: Some(m as i64),
                provenance: c.provenance.clone(),
            })
            .collect(),
    };
    let solution_lattice = crate::borel_smith::solve_system(&system)?;
    if solution_lattice.rank() != total {
        return Err(Error::Internal(
            "coordinate-order relations must lie in the solution lattice".into(),
        ));
    }

    // quotient by the coordinate-order lattice: rows e_i * u_i in basis coords
    let basis_big: Vec<Vec<BigInt>> = solution_lattice
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut x_rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, &e) in exponents.iter().enumerate() {
        let mut target = vec![BigInt::from(0); total];
        target[i] = BigInt::from(e);
        let coords = intmat::solve_in_hnf(&basis_big, &target)
            .ok_or_else(|| Error::Internal("order relation escapes the solution lattice".into()))?;
        x_rows.push(coords);
    }
    let (factors, gen_rows) = quotient_structure(x_rows, total);
    // generator tuples: coordinate vectors of the generators, reduced
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut invariant_factors: Vec<u64> = Vec::new();
    for (d, t) in factors.iter().zip(gen_rows) {
        if *d <= 1 {
            continue;
        }
        let mut tuple = vec![0u64; total];
        for (j, &c) in t.iter().enumerate() {
            if c != 0 {
                for k in 0..total {
                    let v = (c as i128 * solution_lattice.rows[j][k] as i128)
                        .rem_euclid(exponents[k] as i128) as u64;
                    tuple[k] = (tuple[k] + v) % exponents[k];
                }
            }
        }
        invariant_factors.push(*d);
        basis.push(tuple);
    }
    let structure = FiniteAbelianGroup { invariant_factors };

    // order cross-check: |solutions| = prod(e_i) / [Z^k : L]
    let det: i64 = (0..total)
        .map(|i| solution_lattice.rows[i][i])
        .product::<i64>()
        .max(1);
    let ambient: u64 = exponents.iter().product();
    if ambient / det.unsigned_abs() != structure.order() {
        return Err(Error::Internal(format!(
            "solution order mismatch: {} vs {}",
            ambient / det.unsigned_abs(),
            structure.order()
        )));
    }

    let mut out = TupleGroup {
        m,
        components,
        total_coords: total,
        constraints,
        structure,
        basis,
    };
    echelonize_prime_exponent(&mut out, &exponents);
    debug_assert!(out.basis.iter().all(|b| out.contains(b)));
    Ok(out)
}

/// Invariant factors and generator coordinates of Z^n / rowspan(x_rows).
fn quotient_structure(x_rows: Vec<Vec<BigInt>>, n: usize) -> (Vec<u64>, Vec<Vec<i64>>) {
    if n == 0 {
        return (vec![], vec![]);
    }
    let m = Mat::from_rows(x_rows);
    let snf = intmat::smith(&m);
    let diag: Vec<u64> = snf
        .diag
        .iter()
        .map(|d| u64::try_from(d).expect("nonnegative"))
        .collect();
    // generator of the j-th factor has coordinates row j of V^{-1}
    let gens: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|k| i64::try_from(&snf.v_inv[(j, k)]).expect("small entry"))
                .collect()
        })
        .collect();
    (diag, gens)
}

/// When the solution group and all coordinate orders share one prime
/// exponent q, replace the basis by its reduced row echelon form over F_q
/// (components ordered trivial class first, Sylow class last), which gives a
/// canonical basis whose trailing rows vanish on the leading components.
fn echelonize_prime_exponent(tg: &mut TupleGroup, exponents: &[u64]) {
    let q = match tg.structure.invariant_factors.first() {
        Some(&q) if crate::families::is_prime(q) => q,
        _ => return,
    };
    if !tg.structure.invariant_factors.iter().all(|&d| d == q) || !exponents.iter().all(|&e| e == q)
    {
        return;
    }
    let mut rows = tg.basis.clone();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..tg.total_coords {
        let Some(r) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, r);
        // scale pivot to 1
        let inv = mod_inverse_u64(rows[rank][col], q);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % q;
        }
        for r2 in 0..rows.len() {
            if r2 != rank && rows[r2][col] != 0 {
                let c = rows[r2][col];
                for k in 0..tg.total_coords {
                    rows[r2][k] = (rows[r2][k] + (q - c) * rows[rank][k]) % q;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    if rank == tg.basis.len() {
        tg.basis = rows;
    }
}

fn mod_inverse_u64(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

/// Convenience entry point matching the CLI surface.
pub fn reduced_tuple_group_of(
    group: &FiniteGroup,
    p: u64,
    m: u64,
) -> Result<(crate::classes::ClassTable, TupleGroup)> {
    let table = crate::classes::p_subgroup_classes(group, p)?;
    let tg = reduced_tuple_group(group, &table, m)?;
    Ok((table, tg))
}

/// The sign tuple used as a non-surjectivity witness: trivial at every class
/// except the Sylow class, where it is the sign character cutting out the
/// normalizer of one block subgroup.
pub fn sylow_sign_tuple(
    group: &FiniteGroup,
    table: &ClassTable,
    tg: &TupleGroup,
    kernel_subgroup: &Subgroup,
) -> Option<Vec<u64>> {
    let sylow_class = table.class_of_subgroup(&table.sylow, Scope::Group)?;
    let comp = tg.components.iter().find(|c| c.class == sylow_class)?;
    let n_ker = normalizer(group, kernel_subgroup);
    // search the component's characters for the one with kernel N_G(kernel)
    let k = comp.hom.coordinate_count();
    let mut coords = vec![0u64; k];
    loop {
        let matches = comp
            .quotient
            .coset_reps
            .iter()
            .enumerate()
            .all(|(coset, &rep)| {
                let expected = if n_ker.contains(rep) { 0 } else { tg.m / 2 };
                comp.hom.eval(&coords, coset) == expected
            });
        if matches {
            let mut tuple = vec![0u64; tg.total_coords];
            tuple[comp.offset..comp.offset + k].copy_from_slice(&coords);
            return Some(tuple);
        }
        // advance mixed-radix counter
        let mut i = 0;
        loop {
            if i == k {
                return None;
            }
            coords[i] += 1;
            if coords[i] < comp.hom.factors[i] {
                break;
            }
            coords[i] = 0;
            i += 1;
        }
    }
}
