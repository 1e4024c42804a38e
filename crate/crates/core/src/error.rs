use thiserror::Error;

/// Errors produced by the library. Each variant has a stable machine-readable
/// name (see [`Error::kind`]) which the CLI prints on failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {0} is not prime")]
    NonPrimeDegree(u64),
    #[error("vectors have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("vectors live over different fields (F_{0} and F_{1})")]
    ModulusMismatch(u32, u32),
    #[error("the defining exponent vector must be nonzero")]
    ZeroAlpha,
    #[error("vector is not in the degree-zero hyperplane (residue sum {0})")]
    NotInHyperplane(u32),
    #[error("a cyclic curve needs at least 3 branch points, got {0}")]
    TooFewBranchPoints(usize),
    #[error("branch points {0} and {1} coincide")]
    DuplicateBranchPoints(usize, usize),
    #[error("exponent at position {0} is zero mod d")]
    ZeroExponent(usize),
    #[error("exponent sum is {0} mod d, so the map ramifies over infinity")]
    RamifiedAtInfinity(u32),
    #[error("invalid ramification profile: {0}")]
    InvalidProfile(String),
    #[error("2g = {0} is not divisible by d - 1 = {1}")]
    NotDivisible(u64, u64),
    #[error("beta is a multiple of alpha and defines no unramified cover")]
    TrivialCover,
    #[error("no quotient genus {g0} is possible for d = {d}, r = {r}")]
    NoSuchQuotientGenus { g0: u64, d: u32, r: usize },
    #[error("the covers are not isomorphic")]
    NotIsomorphic,
    #[error("beta2 = beta1 + m*alpha only; no y^j/z coordinate change exists")]
    OrientationMismatch,
    #[error("position {0} is out of range for {1} branch points")]
    PositionOutOfRange(usize, usize),
    #[error("the two chosen positions coincide")]
    SamePosition,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,
    #[error("factor degree {0} is not divisible by d = {1}")]
    DegreeNotDivisible(usize, u32),
    #[error("the product of the factors is not squarefree")]
    NotSquarefree,
    #[error("a factor is constant")]
    ConstantFactor,
    #[error("malformed input: {0}")]
    Format(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonPrimeDegree(_) => "NonPrimeDegree",
            Error::LengthMismatch(..) => "LengthMismatch",
            Error::ModulusMismatch(..) => "ModulusMismatch",
            Error::ZeroAlpha => "ZeroAlpha",
            Error::NotInHyperplane(_) => "NotInHyperplane",
            Error::TooFewBranchPoints(_) => "TooFewBranchPoints",
            Error::DuplicateBranchPoints(..) => "DuplicateBranchPoints",
            Error::ZeroExponent(_) => "ZeroExponent",
            Error::RamifiedAtInfinity(_) => "RamifiedAtInfinity",
            Error::InvalidProfile(_) => "InvalidProfile",
            Error::NotDivisible(..) => "NotDivisible",
            Error::TrivialCover => "TrivialCover",
            Error::NoSuchQuotientGenus { .. } => "NoSuchQuotientGenus",
            Error::NotIsomorphic => "NotIsomorphic",
            Error::OrientationMismatch => "OrientationMismatch",
            Error::PositionOutOfRange(..) => "PositionOutOfRange",
            Error::SamePosition => "SamePosition",
            Error::DivisionByZero => "DivisionByZero",
            Error::InexactDivision => "InexactDivision",
            Error::DegreeNotDivisible(..) => "DegreeNotDivisible",
            Error::NotSquarefree => "NotSquarefree",
            Error::ConstantFactor => "ConstantFactor",
            Error::Format(_) => "Format",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
