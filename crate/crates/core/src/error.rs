use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("distinguished element p = {0} must be at least 3")]
    InvalidP(u64),
    #[error("generator {0} is not a positive integer")]
    InvalidGenerator(u64),
    #[error("generators {0:?} have gcd {1}, expected 1")]
    NonCoprimeGenerators(Vec<u64>, u64),
    #[error("p = {0} is not an element of the generated semigroup")]
    PNotInSemigroup(u64),
    #[error("the Frobenius number of N is not defined")]
    FrobeniusOfN,
    #[error("vector {0:?} does not satisfy the Apery inequalities for p = {1}")]
    NotInCone(Vec<u64>, u64),
    #[error("expected a vector with {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("p = {p} exceeds the supported bound {max} for this operation")]
    UnsupportedP { p: u64, max: u64 },
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("point ({0}, {1}) lies outside the gap triangle")]
    PointOutsideTriangle(u64, u64),
    #[error("{0} is not a gap of <{1}, {2}>")]
    NotAGap(u64, u64, u64),
    #[error("semigroup does not contain both {0} and {1}")]
    NotContainingQ(u64, u64),
    #[error("lattice path is not admissible")]
    NotAdmissible,
    #[error("invalid lattice path: {0}")]
    InvalidPath(String),
    #[error("unknown closed form `{0}`")]
    UnknownFormula(String),
    #[error("closed form `{0}` has no value at residue {1}")]
    UndefinedBranch(String, u64),
    #[error("counting direction {alpha:?} is orthogonal to edge {edge:?}")]
    EdgeInHyperplane { alpha: Vec<u64>, edge: Vec<u64> },
    #[error("counting direction {0:?} is not a primitive non-zero vector")]
    InvalidAlpha(Vec<u64>),
    #[error("residue class {residue} has {got} samples, need at least {need}")]
    InsufficientSamples { residue: usize, got: usize, need: usize },
    #[error("value at n = {n} is {actual}, quasi-polynomial predicts {predicted}")]
    VerificationMismatch { n: usize, actual: String, predicted: String },
    #[error("no quasi-polynomial with period <= {max_period} and degree <= {max_degree} fits")]
    NoFit { max_period: usize, max_degree: usize },
    #[error("integer overflow")]
    Overflow,
}
