use thiserror::Error;

/// Errors raised by the semigroup toolkit.
///
/// Variants split into two families: input validation (the caller handed us
/// something outside a precondition) and defects (an internal consistency
/// check or a mathematical law failed on valid input). See [`Error::is_defect`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,
    #[error("generator {0} appears more than once")]
    DuplicateGenerator(u64),
    #[error("gcd is {0}, must be 1")]
    GcdNotOne(u64),
    #[error("generator {0} is below 2")]
    GeneratorBelowTwo(u64),
    #[error("arithmetic overflow while computing {0}")]
    ArithmeticOverflow(&'static str),
    #[error("expected exactly 4 generators, got {0}")]
    NotFourGenerators(usize),
    #[error("expected exactly 3 generators, got {0}")]
    NotThreeGenerators(usize),
    #[error("generating set is not minimal: {redundant} is generated by the others")]
    NotMinimal { redundant: u64 },
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("numerator truncation inconsistency for {generators:?}: {detail}")]
    TruncationInconsistency {
        generators: Vec<u64>,
        detail: String,
    },
    #[error("classification contradiction for {generators:?}: {detail}")]
    ClassificationContradiction {
        generators: Vec<u64>,
        detail: String,
    },
    #[error("defect for {generators:?}: {detail}")]
    Defect {
        generators: Vec<u64>,
        detail: String,
    },
}

impl Error {
    /// True for internal defects (exit code 3 on the command line), false for
    /// input validation failures.
    pub fn is_defect(&self) -> bool {
        matches!(
            self,
            Error::TruncationInconsistency { .. }
                | Error::ClassificationContradiction { .. }
                | Error::Defect { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
