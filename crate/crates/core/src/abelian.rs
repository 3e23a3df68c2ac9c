//! Invariant-factor structure of finite abelian groups and homomorphism
//! groups into cyclic groups of roots of unity.
//!
//! Structure is computed from the full multiplication-table presentation:
//! one generator per element, one relation per product, and a single Smith
//! normal form. That also yields the coordinates of every element in the
//! invariant-factor decomposition, so character evaluation needs no discrete
//! logarithms.

use crate::error::{Error, Result};
use crate::intmat::{self, Mat};
use crate::quotient::{QuotientGroup, SmallGroup};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A finite abelian group in invariant-factor form d_1 | d_2 | ... | d_t,
/// every factor greater than 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    pub invariant_factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup {
            invariant_factors: vec![],
        }
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn describe(&self) -> String {
        if self.is_trivial() {
            return "1".to_string();
        }
        self.invariant_factors
            .iter()
            .map(|d| format!("C{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// Minimal size of a generating set: the number of invariant factors.
pub fn min_generators(a: &FiniteAbelianGroup) -> usize {
    a.invariant_factors.len()
}

/// Invariant factors of an abelian multiplication-table group together with
/// the coordinate vector of each element (entry i taken mod the i-th factor).
pub fn abelian_structure(g: &SmallGroup) -> (FiniteAbelianGroup, Vec<Vec<u64>>) {
    assert!(g.is_abelian(), "invariant factors need an abelian group");
    let n = g.order();
    if n == 1 {
        return (FiniteAbelianGroup::trivial(), vec![vec![]]);
    }
    // relations of the presentation Z^n -> g, e_i -> element i
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in a..n {
            let mut row = vec![BigInt::zero(); n];
            row[a] += BigInt::one();
            row[b] += BigInt::one();
            row[g.mul(a, b)] -= BigInt::one();
            rows.push(row);
        }
    }
    let m = Mat::from_rows(rows);
    let snf = intmat::smith(&m);
    let diag: Vec<u64> = snf
        .diag
        .iter()
        .map(|d| u64::try_from(d).expect("finite group has nonnegative diagonal"))
        .collect();
    debug_assert_eq!(diag.iter().product::<u64>(), n as u64);
    // coordinates of element a: row a of V, reduced mod the diagonal
    let keep: Vec<usize> = (0..n).filter(|&i| diag[i] > 1).collect();
    let coords: Vec<Vec<u64>> = (0..n)
        .map(|a| {
            keep.iter()
                .map(|&i| {
                    let v = &snf.v[(a, i)];
                    let d = BigInt::from(diag[i]);
                    u64::try_from(&((v % &d + &d) % &d)).expect("reduced coordinate")
                })
                .collect()
        })
        .collect();
    (
        FiniteAbelianGroup {
            invariant_factors: keep.iter().map(|&i| diag[i]).collect(),
        },
        coords,
    )
}

/// The character group Hom(Q^ab, C_m) of a multiplication-table group, with
/// an explicit evaluation map. Values live additively in Z/m.
#[derive(Clone, Debug)]
pub struct HomGroup {
    pub m: u64,
    /// orders of the cyclic factors of the hom group (all > 1)
    pub factors: Vec<u64>,
    /// abelianization coordinates of every element of Q, one entry per
    /// invariant factor of Q^ab that meets C_m nontrivially
    eval_coords: Vec<Vec<u64>>,
    /// m / factor, the step size of each character generator
    steps: Vec<u64>,
}

impl HomGroup {
    pub fn structure(&self) -> FiniteAbelianGroup {
        FiniteAbelianGroup {
            invariant_factors: self.factors.clone(),
        }
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn coordinate_count(&self) -> usize {
        self.factors.len()
    }

    /// Value in Z/m of the character with the given coordinates at element q.
    pub fn eval(&self, coords: &[u64], q: usize) -> u64 {
        debug_assert_eq!(coords.len(), self.factors.len());
        let mut acc = 0u64;
        for (i, &c) in coords.iter().enumerate() {
            acc = (acc + c % self.factors[i] * self.steps[i] % self.m * self.eval_coords[q][i])
                % self.m;
        }
        acc % self.m
    }

    /// Coefficient vector of the linear form `coords -> eval(coords, q)`,
    /// entry i multiplying the i-th coordinate, taken mod m.
    pub fn eval_row(&self, q: usize) -> Vec<u64> {
        (0..self.factors.len())
            .map(|i| self.steps[i] * self.eval_coords[q][i] % self.m)
            .collect()
    }
}

/// Hom(Q / [Q,Q], C_m) with evaluation on cosets of the original quotient.
pub fn hom_to_roots(q: &QuotientGroup, m: u64) -> Result<HomGroup> {
    hom_of_small_group(&q.group, m)
}

pub fn hom_of_small_group(g: &SmallGroup, m: u64) -> Result<HomGroup> {
    if m == 0 {
        return Err(Error::Precondition("unit order m must be positive".into()));
    }
    let derived = g.commutator_subgroup();
    let (ab, proj) = g.quotient_by(&derived);
    let (structure, coords) = abelian_structure(&ab);
    // keep only the factors meeting C_m
    let keep: Vec<usize> = (0..structure.invariant_factors.len())
        .filter(|&i| num_integer::gcd(structure.invariant_factors[i], m) > 1)
        .collect();
    let factors: Vec<u64> = keep
        .iter()
        .map(|&i| num_integer::gcd(structure.invariant_factors[i], m))
        .collect();
    let steps: Vec<u64> = factors.iter().map(|&e| m / e).collect();
    // element coordinates pulled back through the abelianization projection,
    // restricted to the kept factors and reduced mod the hom factor order
    let eval_coords: Vec<Vec<u64>> = (0..g.order())
        .map(|x| {
            let a = proj[x];
            keep.iter()
                .enumerate()
                .map(|(pos, &i)| coords[a][i] % factors[pos].max(1))
                .collect()
        })
        .collect();
    Ok(HomGroup {
        m,
        factors,
        eval_coords,
        steps,
    })
}
