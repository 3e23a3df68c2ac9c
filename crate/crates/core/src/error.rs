use thiserror::Error;

/// Errors surfaced by the library. `GroupTooLarge` and `LatticeTooLarge` are
/// resource-bound violations; everything else is an input or precondition
/// failure.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: images are not a bijection on 0..{degree}")]
    InvalidPermutation { degree: usize },

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("group too large: closure exceeds the element bound {bound}")]
    GroupTooLarge { bound: usize },

    #[error("lattice too large: subgroup enumeration exceeds the bound {bound}")]
    LatticeTooLarge { bound: usize },

    #[error("not a subgroup: the given element set is not closed")]
    NotASubgroup,

    #[error("subgroup is not normal in the ambient subgroup")]
    NotNormal,

    #[error("expected a p-group for p = {p}")]
    NotPGroup { p: u64 },

    #[error("Sylow {p}-subgroup is not cyclic or is trivial")]
    NotCyclicSylow { p: u64 },

    #[error("group order {order} exceeds the shape-classification bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },

    #[error("unknown group family '{0}'")]
    UnknownFamily(String),

    #[error("bad family parameters: {0}")]
    BadParams(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("values on cyclic classes do not extend integrally ({0})")]
    NonIntegralExtension(String),

    #[error("values on cyclic classes extend inconsistently ({0})")]
    InconsistentExtension(String),

    #[error("function violates the defining conditions: {0}")]
    NotBorelSmith(String),

    #[error("no lift: the sign function is not in the image of the dimension homomorphism")]
    NoLift,

    #[error("{0}")]
    Precondition(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
