use thiserror::Error;

/// Errors produced by the group, Lie and harness layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed Cayley table: {0}")]
    InvalidTable(String),
    #[error("operation is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("subgroup is not normal: conjugating {element} by {conjugator} leaves it")]
    NotNormal { conjugator: usize, element: usize },
    #[error("input of size {size} exceeds the cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("map is not an automorphism: f({x}*{y}) != f({x})*f({y})")]
    ActionNotAutomorphic { x: usize, y: usize },
    #[error("action is not a homomorphism at ({0}, {1})")]
    ActionNotHomomorphic(usize, usize),
    #[error("orders of actor ({actor}) and target ({target}) are not coprime")]
    NotCoprime { actor: usize, target: usize },
    #[error("group of order {0} is not a {1}-group")]
    NotAQGroup(usize, u64),
    #[error("no object found: {0}")]
    NotFound(String),
    #[error("kernel is not normal (witness conjugator {0})")]
    KernelNotNormal(usize),
    #[error("subgroups do not form a complement pair: {0}")]
    NotComplement(String),
    #[error("complement element {h} fixes kernel element {f}")]
    FixedPointWitness { h: usize, f: usize },
    #[error("group or ring is not nilpotent")]
    NotNilpotent,
    #[error("antisymmetry fails at basis pair ({0}, {1})")]
    AntisymmetryFail(usize, usize),
    #[error("Jacobi identity fails at basis triple ({0}, {1}, {2})")]
    JacobiFail(usize, usize, usize),
    #[error("lower central factor {0} is not elementary abelian for a single prime")]
    MixedExponentLayer(usize),
    #[error("fixed space is not closed under the bracket")]
    NotASubalgebra,
    #[error("automorphism does not have order dividing {0}")]
    OrderMismatch(u64),
    #[error("field has no primitive {0}-th root of unity")]
    NoRootOfUnity(u64),
    #[error("residue must be nonzero")]
    ZeroResidue,
    #[error("Vandermonde system is singular (repeated eigenvalue exponents)")]
    SingularSystem,
    #[error("hypothesis fails: {0}")]
    HypothesisFail(String),
    #[error("matrix is not a Lie automorphism: {0}")]
    NotLieAutomorphism(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
