//! Exact p-local invariants of finite permutation groups.
//!
//! Given a finite group presented by permutation generators and a prime p,
//! this crate computes, with exact integer arithmetic throughout:
//!
//! - conjugacy classes of p-subgroups of a Sylow p-subgroup, under fusion in
//!   the Sylow subgroup itself and under fusion in the whole group;
//! - the lattice of integer-valued superclass functions satisfying the
//!   Borel-Smith conditions, together with its stable sublattice;
//! - for p = 2, the unit group of the Burnside ring of the Sylow subgroup
//!   (via mark vectors) and its stable subgroup;
//! - for odd p, homomorphism groups of automizer quotients into roots of
//!   unity and the reduced coherent character tuple group;
//! - surjectivity and kernel-membership verdicts for the Euler-characteristic
//!   (Lefschetz) homomorphism out of the group of endotrivial complexes.
//!
//! Groups are fully enumerated (default bound 100000 elements); every
//! operation is a pure function of immutable inputs.

pub mod abelian;
pub mod borel_smith;
pub mod classes;
pub mod error;
pub mod families;
pub mod group;
pub mod groupfile;
pub mod intmat;
pub mod perm;
pub mod quotient;
pub mod report;
pub mod signspace;
pub mod superclass;
pub mod tuples;
pub mod verdict;

pub use error::{Error, Result};
