//! Permutations on a finite point set.
//!
//! Points are 0-based internally; all parsing and printing uses 1-based cycle
//! notation, e.g. `(1 2 3)(4 5)`.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its image list, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation { degree: n });
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from a list of cycles over 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt >= degree {
                    return Err(Error::InvalidPermutation { degree });
                }
                if touched[pt] {
                    return Err(Error::InvalidPermutation { degree });
                }
                touched[pt] = true;
                images[pt] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn pow(&self, e: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u64 {
        let mut ord: u64 = 1;
        for c in self.cycles_with_fixed(false) {
            ord = num_integer::lcm(ord, c.len() as u64);
        }
        ord
    }

    /// Nontrivial cycles, each starting from its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_with_fixed(false)
    }

    fn cycles_with_fixed(&self, include_fixed: bool) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut pt = self.images[start];
            while pt != start {
                seen[pt] = true;
                cycle.push(pt);
                pt = self.images[pt];
            }
            if cycle.len() > 1 || include_fixed {
                out.push(cycle);
            }
        }
        out
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`. Points may be
    /// separated by whitespace or commas. `()` denotes the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 0,
            msg: msg.to_string(),
        };
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(bad("expected '(' in cycle notation"));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| bad("unbalanced parenthesis in cycle notation"))?;
            let inner = &rest[1..close];
            let mut cycle = Vec::new();
            for tok in inner.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let pt: usize = tok
                    .parse()
                    .map_err(|_| bad(&format!("bad point '{tok}'")))?;
                if pt == 0 || pt > degree {
                    return Err(bad(&format!("point {pt} out of range 1..{degree}")));
                }
                cycle.push(pt - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, pt) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
