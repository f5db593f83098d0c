use thiserror::Error;

/// Errors raised by the kernel. Every partial operation refuses with one of
/// these instead of returning an approximate or guessed value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ordinal notation overflow: {0}")]
    NotationOverflow(String),
    #[error("ordinal exponentiation 0^0 is not defined here")]
    ZeroToZero,
    #[error("{0} is not an epsilon number")]
    NotAnEpsilonNumber(String),
    #[error("coefficient {0} is not dyadic; exact sign expansion refused")]
    NonDyadicCoefficient(String),
    #[error("sign sequence of transfinite length cannot be parsed into a normal form")]
    UnsupportedTransfiniteParse,
    #[error("invalid cut: {0}")]
    InvalidCut(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("oracle input too deep: birthday {birthday} exceeds bound {bound}")]
    InputTooDeep { birthday: usize, bound: usize },
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("argument must be positive: {0}")]
    PositiveRequired(String),
    #[error("g is not supported at {0}")]
    UnsupportedGDomain(String),
    #[error("h is not supported at {0}")]
    UnsupportedHDomain(String),
    #[error("not exactly representable: {0}")]
    NotExactlyRepresentable(String),
    #[error("nonpositive argument to ln: {0}")]
    NonpositiveArgument(String),
    #[error("approximation-flagged value refused by {0}")]
    ApproximateInput(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("syntax error at column {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error("{op}: {source}")]
    In {
        op: String,
        #[source]
        source: Box<Error>,
    },
    #[error("evaluation error: {0}")]
    Eval(String),
}

impl Error {
    /// Name of the error variant, looking through operation tags.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotationOverflow(_) => "NotationOverflow",
            Error::ZeroToZero => "ZeroToZero",
            Error::NotAnEpsilonNumber(_) => "NotAnEpsilonNumber",
            Error::NonDyadicCoefficient(_) => "NonDyadicCoefficient",
            Error::UnsupportedTransfiniteParse => "UnsupportedTransfiniteParse",
            Error::InvalidCut(_) => "InvalidCut",
            Error::DivisionByZero => "DivisionByZero",
            Error::InputTooDeep { .. } => "InputTooDeep",
            Error::ZeroArgument => "ZeroArgument",
            Error::PositiveRequired(_) => "PositiveRequired",
            Error::UnsupportedGDomain(_) => "UnsupportedGDomain",
            Error::UnsupportedHDomain(_) => "UnsupportedHDomain",
            Error::NotExactlyRepresentable(_) => "NotExactlyRepresentable",
            Error::NonpositiveArgument(_) => "NonpositiveArgument",
            Error::ApproximateInput(_) => "ApproximateInput",
            Error::Precondition(_) => "Precondition",
            Error::Internal(_) => "Internal",
            Error::Syntax { .. } => "Syntax",
            Error::In { source, .. } => source.kind(),
            Error::Eval(_) => "Eval",
        }
    }

    /// Tags an error with the operation it surfaced from.
    pub fn within(self, op: &str) -> Error {
        match self {
            e @ Error::In { .. } => e,
            e => Error::In {
                op: op.to_string(),
                source: Box::new(e),
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
