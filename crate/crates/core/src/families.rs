//! Named group families used throughout the test corpus and the CLI.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_ELEMENT_BOUND};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Cyclic group of order n, acting on n points.
    Cyclic(usize),
    /// Dihedral group of the given order (order = 2n, acting on n points).
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    /// (C_p)^n on n disjoint blocks of p points.
    ElementaryAbelian(u64, usize),
    /// N_{S_2p}(<(1..p),(p+1..2p)>), built by brute force inside S_2p.
    S2pNormalizer(u64),
    /// (C_p x| C_{p-1})^n x| S_n inside S_np.
    WreathFamily(u64, usize),
}

impl Family {
    /// Parses a descriptor such as `dihedral:8` or `wreath_family:3,2`.
    pub fn parse(desc: &str) -> Result<Family> {
        let (name, params) = match desc.split_once(':') {
            Some((n, p)) => (n, p),
            None => (desc, ""),
        };
        let nums: Vec<u64> = if params.is_empty() {
            vec![]
        } else {
            params
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::BadParams(format!("bad integer '{t}'")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        let need = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::BadParams(format!(
                    "family '{name}' expects {k} parameter(s)"
                )))
            }
        };
        match name {
            "cyclic" => {
                need(1)?;
                Ok(Family::Cyclic(nums[0] as usize))
            }
            "dihedral" => {
                need(1)?;
                Ok(Family::Dihedral(nums[0] as usize))
            }
            "symmetric" => {
                need(1)?;
                Ok(Family::Symmetric(nums[0] as usize))
            }
            "alternating" => {
                need(1)?;
                Ok(Family::Alternating(nums[0] as usize))
            }
            "elementary_abelian" => {
                need(2)?;
                Ok(Family::ElementaryAbelian(nums[0], nums[1] as usize))
            }
            "s2p_normalizer" => {
                need(1)?;
                Ok(Family::S2pNormalizer(nums[0]))
            }
            "wreath_family" => {
                need(2)?;
                Ok(Family::WreathFamily(nums[0], nums[1] as usize))
            }
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Family::Cyclic(n) => format!("cyclic:{n}"),
            Family::Dihedral(n) => format!("dihedral:{n}"),
            Family::Symmetric(n) => format!("symmetric:{n}"),
            Family::Alternating(n) => format!("alternating:{n}"),
            Family::ElementaryAbelian(p, n) => format!("elementary_abelian:{p},{n}"),
            Family::S2pNormalizer(p) => format!("s2p_normalizer:{p}"),
            Family::WreathFamily(p, n) => format!("wreath_family:{p},{n}"),
        }
    }
}

pub fn named_group(family: Family) -> Result<FiniteGroup> {
    named_group_bounded(family, DEFAULT_ELEMENT_BOUND)
}

pub fn named_group_bounded(family: Family, bound: usize) -> Result<FiniteGroup> {
    match family {
        Family::Cyclic(n) => {
            if n == 0 {
                return Err(Error::BadParams("cyclic: n must be positive".into()));
            }
            let gen = Permutation::from_cycles(n, &[(0..n).collect()])?;
            FiniteGroup::from_generators_bounded(n, vec![gen], bound)
        }
        Family::Dihedral(order) => dihedral(order, bound),
        Family::Symmetric(n) => {
            if n == 0 {
                return Err(Error::BadParams("symmetric: n must be positive".into()));
            }
            let mut gens = vec![];
            if n >= 2 {
                gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
            }
            if n >= 3 {
                gens.push(Permutation::from_cycles(n, &[(0..n).collect()])?);
            }
            FiniteGroup::from_generators_bounded(n, gens, bound)
        }
        Family::Alternating(n) => {
            if n == 0 {
                return Err(Error::BadParams("alternating: n must be positive".into()));
            }
            // consecutive 3-cycles generate A_n
            let mut gens = vec![];
            for i in 0..n.saturating_sub(2) {
                gens.push(Permutation::from_cycles(n, &[vec![i, i + 1, i + 2]])?);
            }
            FiniteGroup::from_generators_bounded(n.max(1), gens, bound)
        }
        Family::ElementaryAbelian(p, n) => {
            if !is_prime(p) || n == 0 {
                return Err(Error::BadParams(
                    "elementary_abelian: need a prime p and n >= 1".into(),
                ));
            }
            let p = p as usize;
            let degree = p * n;
            let gens = (0..n)
                .map(|b| Permutation::from_cycles(degree, &[(b * p..(b + 1) * p).collect()]))
                .collect::<Result<Vec<_>>>()?;
            FiniteGroup::from_generators_bounded(degree, gens, bound)
        }
        Family::S2pNormalizer(p) => s2p_normalizer(p),
        Family::WreathFamily(p, n) => wreath_family(p, n, bound),
    }
}

fn dihedral(order: usize, bound: usize) -> Result<FiniteGroup> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(Error::BadParams(
            "dihedral: order must be even and at least 4".into(),
        ));
    }
    if order == 4 {
        // Klein four as <(1 2),(3 4)>
        let gens = vec![
            Permutation::from_cycles(4, &[vec![0, 1]])?,
            Permutation::from_cycles(4, &[vec![2, 3]])?,
        ];
        return FiniteGroup::from_generators_bounded(4, gens, bound);
    }
    let n = order / 2;
    let rotation = Permutation::from_cycles(n, &[(0..n).collect()])?;
    // reflection fixing vertex 0: i -> n - i (mod n)
    let images: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    let reflection = Permutation::new(images)?;
    FiniteGroup::from_generators_bounded(n, vec![rotation, reflection], bound)
}

/// Streams all of S_2p and keeps the elements normalizing the fixed
/// elementary abelian subgroup generated by the two block p-cycles.
fn s2p_normalizer(p: u64) -> Result<FiniteGroup> {
    if !is_prime(p) || p > 5 {
        return Err(Error::BadParams(
            "s2p_normalizer: p must be a prime at most 5".into(),
        ));
    }
    let p = p as usize;
    let degree = 2 * p;
    let a = Permutation::from_cycles(degree, &[(0..p).collect()])?;
    let b = Permutation::from_cycles(degree, &[(p..2 * p).collect()])?;
    let s = FiniteGroup::from_generators(degree, vec![a.clone(), b.clone()])?;

    let mut members = Vec::new();
    let mut images: Vec<usize> = (0..degree).collect();
    permute_all(&mut images, 0, &mut |imgs| {
        let g = Permutation::new(imgs.to_vec()).expect("valid by construction");
        let gi = g.inverse();
        let ca = g.compose(&a).compose(&gi);
        if s.index_of(&ca).is_none() {
            return;
        }
        let cb = g.compose(&b).compose(&gi);
        if s.index_of(&cb).is_some() {
            members.push(g);
        }
    });
    FiniteGroup::from_elements(degree, members)
}

fn permute_all(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn wreath_family(p: u64, n: usize, bound: usize) -> Result<FiniteGroup> {
    if !is_prime(p) || p < 3 || n == 0 {
        return Err(Error::BadParams(
            "wreath_family: need an odd prime p and n >= 1".into(),
        ));
    }
    let g = primitive_root(p);
    let p = p as usize;
    let degree = n * p;
    let mut gens = Vec::new();
    for block in 0..n {
        let base = block * p;
        // translation x -> x + 1 on Z_p
        gens.push(Permutation::from_cycles(
            degree,
            &[(base..base + p).collect()],
        )?);
        // multiplication x -> g*x on Z_p, a (p-1)-cycle on the nonzero points
        let mut images: Vec<usize> = (0..degree).collect();
        for x in 0..p {
            images[base + x] = base + (x * g as usize) % p;
        }
        gens.push(Permutation::new(images)?);
    }
    if n >= 2 {
        // block transposition (0 1) and block n-cycle
        let mut swap: Vec<usize> = (0..degree).collect();
        for x in 0..p {
            swap[x] = p + x;
            swap[p + x] = x;
        }
        gens.push(Permutation::new(swap)?);
        let mut cycle: Vec<usize> = (0..degree).collect();
        for block in 0..n {
            let target = (block + 1) % n;
            for x in 0..p {
                cycle[block * p + x] = target * p + x;
            }
        }
        gens.push(Permutation::new(cycle)?);
    }
    FiniteGroup::from_generators_bounded(degree, gens, bound)
}

fn primitive_root(p: u64) -> u64 {
    'cand: for g in 2..p {
        let mut x = 1u64;
        for _ in 0..p - 2 {
            x = x * g % p;
            if x == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
