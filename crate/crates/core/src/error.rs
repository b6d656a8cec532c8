use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
///
/// Every variant corresponds to a violated precondition; none of them is
/// recoverable by retrying with the same input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different base fields or extensions")]
    DescriptorMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero input where a nonzero element is required")]
    ZeroInput,
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("generators span a module of rank < 2")]
    RankDeficient,
    #[error("norm {0} exceeds the factoring bound")]
    NormBoundExceeded(String),
    #[error("element is not fundamental: {0}")]
    NotFundamental(String),
    #[error("basis is not closed under multiplication by Omega")]
    NotAnIdeal,
    #[error("basis elements are linearly dependent")]
    DegenerateBasis,
    #[error("operation is only available over the rational base field")]
    UnsupportedBaseField,
    #[error("discriminant {0} is not a totally positive unit square times D")]
    DiscriminantOutsideOrbit(String),
    #[error("form is not primitive")]
    NotPrimitive,
    #[error("basis orientation does not match the sign of det M")]
    AlignmentViolated,
    #[error("value {0} is not integral")]
    NonIntegral(String),
    #[error("matrix determinant is not a totally positive unit")]
    DeterminantNotTotallyPositiveUnit,
    #[error("scalar is not a unit")]
    NotAUnit,
    #[error("cube is not projective")]
    NotProjective,
    #[error("cube entry {0} is not integral")]
    NonIntegralEntry(String),
    #[error("product of the triple is not the unit ideal")]
    ProductNotUnitIdeal,
    #[error("product of determinants is not a totally positive unit")]
    DetProductNotTotallyPositiveUnit,
    #[error("product of the triple is not the principal oriented ideal of the supplied generator")]
    WitnessMismatch,
    #[error("scaling factors do not multiply to a unit of totally positive norm")]
    ScaleNotAllowed,
    #[error("no principal generator available for this input")]
    GeneratorUnavailable,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

impl Error {
    /// Stable variant name, used in machine-readable error payloads.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DescriptorMismatch => "DescriptorMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::ZeroInput => "ZeroInput",
            Error::GcdOfZeros => "GcdOfZeros",
            Error::RankDeficient => "RankDeficient",
            Error::NormBoundExceeded(_) => "NormBoundExceeded",
            Error::NotFundamental(_) => "NotFundamental",
            Error::NotAnIdeal => "NotAnIdeal",
            Error::DegenerateBasis => "DegenerateBasis",
            Error::UnsupportedBaseField => "UnsupportedBaseField",
            Error::DiscriminantOutsideOrbit(_) => "DiscriminantOutsideOrbit",
            Error::NotPrimitive => "NotPrimitive",
            Error::AlignmentViolated => "AlignmentViolated",
            Error::NonIntegral(_) => "NonIntegral",
            Error::DeterminantNotTotallyPositiveUnit => "DeterminantNotTotallyPositiveUnit",
            Error::NotAUnit => "NotAUnit",
            Error::NotProjective => "NotProjective",
            Error::NonIntegralEntry(_) => "NonIntegralEntry",
            Error::ProductNotUnitIdeal => "ProductNotUnitIdeal",
            Error::DetProductNotTotallyPositiveUnit => "DetProductNotTotallyPositiveUnit",
            Error::WitnessMismatch => "WitnessMismatch",
            Error::ScaleNotAllowed => "ScaleNotAllowed",
            Error::GeneratorUnavailable => "GeneratorUnavailable",
            Error::OutOfRange(_) => "OutOfRange",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
