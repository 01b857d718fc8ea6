use alloc::string::String;

/// Every failure the library can report.
///
/// Variants are grouped by the layer that raises them; callers in the CLI map
/// [`Error::is_validation`] failures to a distinct exit status.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("geometric expansion of a monomial of auxiliary degree 0 does not terminate")]
    AuxDegreeZero,
    #[error("geometric expansion needs a monomial with nonnegative exponents, got {0:?}")]
    NegativeMonomial(alloc::vec::Vec<i64>),
    #[error("auxiliary variable sets differ: {left:?} vs {right:?}")]
    VariableMismatch {
        left: alloc::vec::Vec<String>,
        right: alloc::vec::Vec<String>,
    },
    #[error("exponent {exponent} of `{var}` lies beyond the truncation bound {bound}")]
    OutOfBounds { var: String, exponent: i64, bound: i64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,
    #[error("pole at q = 1 does not cancel (order {order} coefficient is nonzero)")]
    PoleNotCancelled { order: i64 },
    #[error("q = 1 limit is not a polynomial in t with integer coefficients")]
    NotPolynomial,
    #[error("weights are not generic: {0}")]
    NonGeneric(String),
    #[error("weights are not small: {0}")]
    NotSmall(String),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("sigma = {0} is a critical value")]
    CriticalSigma(String),
    #[error("sigma coincides with the lower bound sigma_m = {0}")]
    SigmaAtMinimum(String),
    #[error("two walls coincide at sigma_c = {0}")]
    CoincidentWalls(String),
    #[error("wall (d_M = {d_m}) is not genuine: N = {n} < 0")]
    NonGenuineWall { d_m: i64, n: i64 },
    #[error("no genuine walls: dimension cannot be read off a flip")]
    NoWalls,
    #[error("flip dimensions disagree across walls: {0} vs {1}")]
    DimensionMismatch(i64, i64),
    #[error("decomposition ranks or degrees do not add up: {0}")]
    RankDegreeMismatch(String),
    #[error("results for Delta_0 = 1 and Delta_0 = 2 differ in {0}")]
    Delta0Mismatch(String),
    #[error("genericity check too large: {0} candidate combinations")]
    GenericityCheckTooLarge(u128),
}

impl Error {
    /// True for failures caused by invalid or non-generic input rather than by
    /// an internal inconsistency.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::NonGeneric(_)
                | Error::NotSmall(_)
                | Error::InvalidWeights(_)
                | Error::InvalidParams(_)
                | Error::CriticalSigma(_)
                | Error::SigmaAtMinimum(_)
                | Error::CoincidentWalls(_)
                | Error::GenericityCheckTooLarge(_)
        )
    }
}

pub type Result<T> = core::result::Result<T, Error>;
