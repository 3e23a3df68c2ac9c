//! The defining congruence/equality conditions on superclass functions, the
//! integer lattice they cut out, and constructions inside that lattice.
//!
//! The lattice of admissible functions is computed exactly: congruence rows
//! gain one auxiliary variable each (with coefficient equal to the modulus),
//! the kernel of the stacked integer matrix is found through one Smith
//! normal form, auxiliaries are projected away, and the result is put in
//! Hermite normal form, which serves as the canonical representative for all
//! lattice comparisons.

use crate::classes::{ClassTable, Scope};
use crate::error::{Error, Result};
use crate::group::{is_normal_in, normalizer_in, FiniteGroup};
use crate::intmat::{self, Mat};
use crate::quotient::{quotient, small_group_shape, Shape};
use crate::superclass::{SuperclassFunction, SylowFunction};
use num_bigint::BigInt;

#[derive(Clone, Debug)]
pub struct ConstraintRow {
    pub coeffs: Vec<i64>,
    /// None for an equality row; Some(2) or Some(4) for a congruence row.
    pub modulus: Option<i64>,
    pub provenance: String,
}

impl ConstraintRow {
    pub fn holds(&self, values: &[i64]) -> bool {
        let dot: i64 = self.coeffs.iter().zip(values).map(|(c, v)| c * v).sum();
        match self.modulus {
            None => dot == 0,
            Some(m) => dot.rem_euclid(m) == 0,
        }
    }
}

pub struct BsSystem {
    pub scope: Scope,
    pub vars: usize,
    pub rows: Vec<ConstraintRow>,
}

impl BsSystem {
    pub fn check(&self, values: &[i64]) -> Vec<&ConstraintRow> {
        assert_eq!(values.len(), self.vars, "value vector has wrong length");
        self.rows.iter().filter(|r| !r.holds(values)).collect()
    }

    pub fn check_superclass(&self, f: &SuperclassFunction) -> Vec<&ConstraintRow> {
        debug_assert!(matches!(self.scope, Scope::Group));
        self.check(&f.values)
    }

    pub fn check_sylow(&self, f: &SylowFunction) -> Vec<&ConstraintRow> {
        debug_assert!(matches!(self.scope, Scope::Sylow));
        self.check(&f.values)
    }
}

/// Enumerates, inside the Sylow subgroup, every chain generating a condition
/// on superclass functions, with coefficients accumulated on classes of the
/// requested scope. Rows are deduplicated by their reduced coefficient
/// vectors; the first chain found is kept as provenance.
pub fn build_constraints(group: &FiniteGroup, table: &ClassTable, scope: Scope) -> BsSystem {
    let p = table.p as i64;
    let vars = table.class_count(scope);
    let mut rows: Vec<ConstraintRow> = Vec::new();
    let mut seen: std::collections::HashSet<(Vec<i64>, Option<i64>)> = Default::default();

    let mut push = |coeffs: Vec<i64>, modulus: Option<i64>, provenance: String| {
        let key = match modulus {
            Some(m) => (
                coeffs.iter().map(|c| c.rem_euclid(m)).collect::<Vec<_>>(),
                modulus,
            ),
            None => {
                let mut c = coeffs.clone();
                if let Some(first) = c.iter().find(|&&x| x != 0) {
                    if *first < 0 {
                        c.iter_mut().for_each(|x| *x = -*x);
                    }
                }
                (c, None)
            }
        };
        if key.0.iter().all(|&c| c == 0) {
            return;
        }
        if seen.insert(key) {
            rows.push(ConstraintRow {
                coeffs,
                modulus,
                provenance,
            });
        }
    };

    let subs = &table.subgroups;
    let label = |i: usize| format!("<{}>", subs[i].describe_gens(group));

    // order-p steps (odd p): f(Q) = f(R) mod 2 for R < Q of index p
    if p != 2 {
        for (qi, q) in subs.iter().enumerate() {
            for (ri, r) in subs.iter().enumerate() {
                if r.order() * p as usize == q.order() && r.is_subset_of(q) {
                    let mut coeffs = vec![0i64; vars];
                    coeffs[table.class_of(qi, scope)] += 1;
                    coeffs[table.class_of(ri, scope)] -= 1;
                    push(
                        coeffs,
                        Some(2),
                        format!("index-p step {} < {}", label(ri), label(qi)),
                    );
                }
            }
        }
    }

    // doubling steps (p = 2): chains H < K < L inside N_S(H) with [K:H] = 2
    // and K/H the unique order-2 layer of L/H. A cyclic L/H of order 4
    // forces f(K) = f(H) mod 2; a quaternion L/H of order 8 (whose unique
    // involution layer is its center) forces the congruence mod 4.
    if p == 2 {
        for (hi, h) in subs.iter().enumerate() {
            let ns_h = normalizer_in(group, &table.sylow, h);
            for l in subs.iter() {
                let ratio = l.order() / h.order().max(1);
                if !h.is_subset_of(l)
                    || !l.is_subset_of(&ns_h)
                    || (ratio != 4 && ratio != 8)
                    || l.order() % h.order() != 0
                {
                    continue;
                }
                let qt = quotient(group, l, h).expect("L normalizes H");
                let modulus = match small_group_shape(&qt.group) {
                    Ok(Shape::Cyclic(4)) => 2,
                    Ok(Shape::Quaternion8) => 4,
                    _ => continue,
                };
                // both shapes have exactly one subgroup of order 2, so the
                // middle layer K is unique
                let ki = subs
                    .iter()
                    .position(|k| {
                        k.order() == 2 * h.order() && h.is_subset_of(k) && k.is_subset_of(l)
                    })
                    .expect("a middle layer exists");
                let mut coeffs = vec![0i64; vars];
                coeffs[table.class_of(ki, scope)] += 1;
                coeffs[table.class_of(hi, scope)] -= 1;
                let kind = if modulus == 2 {
                    "cyclic-4"
                } else {
                    "quaternion"
                };
                push(
                    coeffs,
                    Some(modulus),
                    format!(
                        "doubling step {} < {} under <{}> ({kind} layer)",
                        label(hi),
                        label(ki),
                        l.describe_gens(group),
                    ),
                );
            }
        }
    }

    // rank-two panels: R normal in Q with Q/R elementary abelian of rank 2;
    // f(R) + p f(Q) = sum of f over the p+1 intermediate subgroups
    for (qi, q) in subs.iter().enumerate() {
        for (ri, r) in subs.iter().enumerate() {
            if r.order() * (p * p) as usize != q.order() || !r.is_subset_of(q) {
                continue;
            }
            if !is_normal_in(group, r, q) {
                continue;
            }
            let qt = quotient(group, q, r).expect("normality was checked");
            if qt.group.exponent() != p as usize {
                continue; // cyclic of order p^2
            }
            let mut coeffs = vec![0i64; vars];
            coeffs[table.class_of(ri, scope)] += 1;
            coeffs[table.class_of(qi, scope)] += p;
            let mut mid = 0;
            for (xi, x) in subs.iter().enumerate() {
                if x.order() == r.order() * p as usize && r.is_subset_of(x) && x.is_subset_of(q) {
                    coeffs[table.class_of(xi, scope)] -= 1;
                    mid += 1;
                }
            }
            assert_eq!(mid, p + 1, "a rank-two panel has p+1 intermediate layers");
            push(
                coeffs,
                None,
                format!("rank-two panel {} < {}", label(ri), label(qi)),
            );
        }
    }

    BsSystem { scope, vars, rows }
}

/// A sublattice of Z^ambient given by a canonical Hermite-normal-form basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLattice {
    pub ambient: usize,
    pub rows: Vec<Vec<i64>>,
}

impl IntegerLattice {
    /// Spans the given vectors and stores the canonical basis.
    pub fn span(ambient: usize, rows: Vec<Vec<i64>>) -> Self {
        let big = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), ambient);
                r.into_iter().map(BigInt::from).collect()
            })
            .collect();
        let hnf = intmat::hnf_rows(big);
        IntegerLattice {
            ambient,
            rows: hnf.iter().map(|r| intmat::to_i64_vec(r)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.coords_of(v).is_some()
    }

    /// Coordinates of v in the basis, if v lies in the lattice.
    pub fn coords_of(&self, v: &[i64]) -> Option<Vec<i64>> {
        let basis: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let target: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        intmat::solve_in_hnf(&basis, &target).map(|c| intmat::to_i64_vec(&c))
    }

    /// Combination of basis rows with the given coefficients.
    pub fn combine(&self, coeffs: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.ambient];
        for (c, row) in coeffs.iter().zip(&self.rows) {
            for (o, x) in out.iter_mut().zip(row) {
                *o += c * x;
            }
        }
        out
    }
}

/// Bases are not unique, so lattices compare by Hermite normal form.
pub fn lattice_equal(a: &IntegerLattice, b: &IntegerLattice) -> bool {
    a.ambient == b.ambient && a.rows == b.rows
}

/// Solves the mixed equality/congruence system cut out by the defining
/// conditions and returns a canonical basis of the solution lattice. The
/// rank is checked against the count of cyclic classes in the scope.
pub fn borel_smith_basis(
    group: &FiniteGroup,
    table: &ClassTable,
    scope: Scope,
) -> Result<IntegerLattice> {
    let system = build_constraints(group, table, scope);
    let lattice = solve_system(&system)?;
    let expected = table.cyclic_class_count(scope);
    if lattice.rank() != expected {
        return Err(Error::Internal(format!(
            "solution lattice has rank {} but there are {} cyclic classes",
            lattice.rank(),
            expected
        )));
    }
    Ok(lattice)
}

/// Kernel-lattice solve of an arbitrary constraint system (used for the
/// lattice above and reused by the character-tuple computation).
pub fn solve_system(system: &BsSystem) -> Result<IntegerLattice> {
    let n = system.vars;
    let congruences: Vec<usize> = system
        .rows
        .iter()
        .enumerate()
        .filter(|(_, r)| r.modulus.is_some())
        .map(|(i, _)| i)
        .collect();
    let total_cols = n + congruences.len();
    let mut m = Mat::zero(system.rows.len(), total_cols);
    let mut aux = 0;
    for (i, row) in system.rows.iter().enumerate() {
        for (j, &c) in row.coeffs.iter().enumerate() {
            m[(i, j)] = BigInt::from(c);
        }
        if let Some(md) = row.modulus {
            m[(i, n + aux)] = BigInt::from(md);
            aux += 1;
        }
    }
    let kernel = intmat::kernel_basis(&m);
    let projected: Vec<Vec<i64>> = kernel.iter().map(|v| intmat::to_i64_vec(&v[..n])).collect();
    Ok(IntegerLattice::span(n, projected))
}

/// Independent functions, one per cyclic class, each nonzero at its own
/// cyclic class and zero at every other cyclic class. Built by solving for a
/// rational diagonal family at the Sylow level, summing over fusion orbits,
/// and clearing denominators.
pub fn diagonal_basis(group: &FiniteGroup, table: &ClassTable) -> Result<Vec<SuperclassFunction>> {
    let s_basis = borel_smith_basis(group, table, Scope::Sylow)?;
    let s_count = table.class_count(Scope::Sylow);
    let cyclic_cols: Vec<usize> = (0..s_count).filter(|&c| table.s_cyclic[c]).collect();
    let s = cyclic_cols.len();
    debug_assert_eq!(s, s_basis.rank());

    // For each cyclic S-class j: integer coefficients c and denominator d > 0
    // with (c . basis) equal to d at class j and 0 at the other cyclic
    // classes. The kernel of the (s x s+1) system [Bc^T | -e_j] is a line.
    let mut partials: Vec<(Vec<i64>, i64)> = Vec::new();
    for (jpos, _) in cyclic_cols.iter().enumerate() {
        let mut m = Mat::zero(s, s + 1);
        for (col, brow) in s_basis.rows.iter().enumerate() {
            for (row, &cyc) in cyclic_cols.iter().enumerate() {
                m[(row, col)] = BigInt::from(brow[cyc]);
            }
        }
        m[(jpos, s)] = BigInt::from(-1);
        let kernel = intmat::kernel_basis(&m);
        if kernel.len() != 1 {
            return Err(Error::Internal(
                "restriction to cyclic classes is not invertible".into(),
            ));
        }
        let v = intmat::to_i64_vec(&kernel[0]);
        let (coeffs, d) = (v[..s].to_vec(), v[s]);
        if d == 0 {
            return Err(Error::Internal("diagonal solve degenerated".into()));
        }
        if d < 0 {
            partials.push((coeffs.iter().map(|c| -c).collect(), -d));
        } else {
            partials.push((coeffs, d));
        }
    }

    // orbit sums over fused cyclic S-classes, one function per cyclic G-class
    let g_cyclic: Vec<usize> = (0..table.class_count(Scope::Group))
        .filter(|&c| table.g_cyclic[c])
        .collect();
    let mut out = Vec::new();
    for &gc in &g_cyclic {
        let orbit: Vec<usize> = (0..s)
            .filter(|&jpos| table.s_to_g[cyclic_cols[jpos]] == gc)
            .collect();
        let denom_lcm = orbit
            .iter()
            .fold(1i64, |acc, &j| num_integer::lcm(acc, partials[j].1));
        let mut vec = vec![0i64; s_count];
        for &j in &orbit {
            let scale = denom_lcm / partials[j].1;
            let combo = s_basis.combine(&partials[j].0);
            for (v, x) in vec.iter_mut().zip(&combo) {
                *v += scale * x;
            }
        }
        // shrink by the largest factor keeping the vector inside the lattice
        let coords = s_basis
            .coords_of(&vec)
            .ok_or_else(|| Error::Internal("orbit sum left the lattice".into()))?;
        let g = coords
            .iter()
            .fold(0i64, |acc, &c| num_integer::gcd(acc, c.abs()));
        let vec = if g > 1 {
            s_basis.combine(&coords.iter().map(|c| c / g).collect::<Vec<_>>())
        } else {
            vec
        };
        let f = SylowFunction::new(vec).to_superclass(table)?;
        out.push(f);
    }
    Ok(out)
}

/// Completes values given on the cyclic S-classes to a full function on all
/// S-classes, or reports that no completion exists. `cyclic_values` follows
/// the order of the cyclic classes among S-classes.
pub fn extend_from_cyclics(
    group: &FiniteGroup,
    table: &ClassTable,
    cyclic_values: &[i64],
) -> Result<SylowFunction> {
    let p = table.p as i64;
    let s_count = table.class_count(Scope::Sylow);
    let cyclic_classes: Vec<usize> = (0..s_count).filter(|&c| table.s_cyclic[c]).collect();
    if cyclic_values.len() != cyclic_classes.len() {
        return Err(Error::Precondition(format!(
            "expected {} cyclic-class values, got {}",
            cyclic_classes.len(),
            cyclic_values.len()
        )));
    }
    let mut values: Vec<Option<i64>> = vec![None; s_count];
    for (&c, &v) in cyclic_classes.iter().zip(cyclic_values) {
        values[c] = Some(v);
    }
    // class indices are sorted by subgroup order, so a single pass suffices
    for c in 0..s_count {
        if values[c].is_some() {
            continue;
        }
        let q_idx = table.s_reps[c];
        let q = &table.subgroups[q_idx];
        let mut found: Option<i64> = None;
        for (ri, r) in table.subgroups.iter().enumerate() {
            if r.order() * (p * p) as usize != q.order()
                || !r.is_subset_of(q)
                || !is_normal_in(group, r, q)
            {
                continue;
            }
            let qt = quotient(group, q, r).expect("normality was checked");
            if qt.group.exponent() != p as usize {
                continue;
            }
            let mut mid_sum = 0i64;
            for (xi, x) in table.subgroups.iter().enumerate() {
                if x.order() == r.order() * p as usize && r.is_subset_of(x) && x.is_subset_of(q) {
                    mid_sum += values[table.s_class_of[xi]]
                        .expect("intermediate layers have smaller order");
                }
            }
            let r_val = values[table.s_class_of[ri]].expect("smaller order");
            let num = mid_sum - r_val;
            if num.rem_euclid(p) != 0 {
                return Err(Error::NonIntegralExtension(format!(
                    "class {} needs value {}/{}",
                    c, num, p
                )));
            }
            let v = num / p;
            match found {
                None => found = Some(v),
                Some(prev) if prev != v => {
                    return Err(Error::InconsistentExtension(format!(
                        "class {} receives both {} and {}",
                        c, prev, v
                    )));
                }
                _ => {}
            }
        }
        values[c] = Some(found.ok_or_else(|| {
            Error::Internal("non-cyclic subgroup without a rank-two panel".into())
        })?);
    }
    Ok(SylowFunction::new(
        values.into_iter().map(|v| v.unwrap()).collect(),
    ))
}
