use thiserror::Error;

/// Everything that can go wrong across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("residue {residue} out of range for modulus {modulus}")]
    ResidueOutOfRange { residue: u64, modulus: u64 },
    #[error("exception {0} is not below the threshold")]
    ExceptionAboveThreshold(u64),
    #[error("index {0} listed as both included and excluded")]
    OverlappingExceptions(u64),
    #[error("regions do not partition the natural numbers: {0}")]
    RegionsNotPartition(String),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("order is undefined over the complex field")]
    ComplexOrderUndefined,
    #[error("sign is indeterminate on a region known only up to finite precision")]
    IndeterminateSign,
    #[error("element is not q-positive")]
    NotQPositive,
    #[error("leading coefficient {0} is not the square of a rational")]
    IrrationalLeadingCoefficient(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("idempotent with non-real structure found: {0}")]
    NonRealIdempotent(String),
    #[error("input has regions known only up to finite precision")]
    IndeterminateInput,
    #[error("quaternion components must be real")]
    NonRealComponent,
    #[error("ideal generators must be exact")]
    InexactGenerator,
    #[error("element must be exact")]
    InexactElement,
    #[error("an ideal needs at least one generator")]
    EmptyGenerators,
    #[error("generator component {0} is not contained in the norm ideal")]
    ContainmentViolation(String),
    #[error("inputs must be exact")]
    InexactInput,
    #[error("point {0} lies outside the closed unit ball")]
    UnboundedPoint(String),
    #[error("polynomial of degree {0} exceeds the supported degree 2")]
    DegreeTooHigh(usize),
    #[error("polynomials over {0} and {1} variables cannot be combined")]
    ArityMismatch(usize, usize),
    #[error("polynomial coefficients must be exact")]
    InexactCoefficient,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("syntax error at offset {offset}: expected {}", expected.join(", "))]
    Syntax { offset: usize, expected: Vec<String> },
    #[error("cannot evaluate expression: {0}")]
    Evaluation(String),
}

impl Error {
    /// Stable machine-readable name, used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroModulus => "zero_modulus",
            Error::ResidueOutOfRange { .. } => "residue_out_of_range",
            Error::ExceptionAboveThreshold(_) => "exception_above_threshold",
            Error::OverlappingExceptions(_) => "overlapping_exceptions",
            Error::RegionsNotPartition(_) => "regions_not_partition",
            Error::NotAUnit => "not_a_unit",
            Error::ComplexOrderUndefined => "complex_order_undefined",
            Error::IndeterminateSign => "indeterminate_sign",
            Error::NotQPositive => "not_q_positive",
            Error::IrrationalLeadingCoefficient(_) => "irrational_leading_coefficient",
            Error::NotIdempotent => "not_idempotent",
            Error::NonRealIdempotent(_) => "non_real_idempotent",
            Error::IndeterminateInput => "indeterminate_input",
            Error::NonRealComponent => "non_real_component",
            Error::InexactGenerator => "inexact_generator",
            Error::InexactElement => "inexact_element",
            Error::EmptyGenerators => "empty_generators",
            Error::ContainmentViolation(_) => "containment_violation",
            Error::InexactInput => "inexact_input",
            Error::UnboundedPoint(_) => "unbounded_point",
            Error::DegreeTooHigh(_) => "degree_too_high",
            Error::ArityMismatch(..) => "arity_mismatch",
            Error::InexactCoefficient => "inexact_coefficient",
            Error::PreconditionFailed(_) => "precondition_failed",
            Error::Syntax { .. } => "syntax",
            Error::Evaluation(_) => "evaluation",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
