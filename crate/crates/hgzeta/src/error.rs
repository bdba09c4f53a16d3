use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("kernel of A' has rank {0}, expected rank 1")]
    KernelRank(usize),
    #[error("divisibility assumption fails: {0}")]
    Asm1Violation(String),
    #[error("field size {0} exceeds table cap {1}")]
    CapExceeded(u64, u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("character and element live at different levels ({0} vs {1})")]
    LevelMismatch(u32, u32),
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("value {0} is not within {1} of an integer")]
    RoundingGap(String, String),
    #[error("recurrence fitting unstable at horizon {0}")]
    DegreeUndetermined(usize),
    #[error("polynomial coefficient {0} fails the integrality check")]
    Integrality(String),
    #[error("no index permutation gives a diagonally dominant exponent matrix (X_0 singular)")]
    NotNormalizable,
    #[error("enumeration budget exceeded: {0} > {1}")]
    BudgetExceeded(u64, u64),
    #[error("assumption violated: {0}")]
    AssumptionViolation(String),
    #[error("truncation ratio did not stabilize mod p^{0}")]
    Stabilization(u32),
    #[error("p-adic denominator not a unit (precision loss)")]
    PrecisionLoss,
    #[error("root of magnitude {0} matches no half-integer weight")]
    UnclassifiableRoot(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("verification mismatch: {0}")]
    Verification(String),
}

impl Error {
    /// Process exit code for the CLI: 2 config, 3 assumption violation,
    /// 4 verification mismatch, 5 budget exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::NotPrime(_) => 2,
            Error::AssumptionViolation(_)
            | Error::Asm1Violation(_)
            | Error::KernelRank(_)
            | Error::NotNormalizable
            | Error::Stabilization(_)
            | Error::PrecisionLoss => 3,
            Error::BudgetExceeded(_, _) | Error::CapExceeded(_, _) => 5,
            _ => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
