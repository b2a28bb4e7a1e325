use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square")]
    NotSquare,
    #[error("diagonal entry a[{}][{}] = {value} must equal 2", .index + 1, .index + 1)]
    DiagonalNotTwo { index: usize, value: String },
    #[error("off-diagonal entry a[{}][{}] = {value} must be <= 0", .row + 1, .col + 1)]
    PositiveOffDiagonal { row: usize, col: usize, value: String },
    #[error("a[{}][{}] and a[{}][{}] must vanish together", .row + 1, .col + 1, .col + 1, .row + 1)]
    ZeroAsymmetry { row: usize, col: usize },
    #[error("generator {} out of range 1..={rank}", .index + 1)]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage error: {0}")]
    Usage(String),

    #[error("matrix is not in the Weyl group (no reduction to identity within {bound} steps)")]
    NotInGroup { bound: usize },
    #[error("word {} is not reduced", one_based(.word))]
    NotReduced { word: Vec<usize> },
    #[error("subset {subset:?} is not spherical")]
    NotSpherical { subset: Vec<usize> },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("inexact division by a linear form (internal arithmetic error)")]
    InexactDivision,
    #[error("polynomials have {left} and {right} variables")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("rank-two tables require ab >= 4 (got a = {a}, b = {b})")]
    NotHyperbolicOrAffine { a: u64, b: u64 },
    #[error("generalized binomial {which}({n},{m}) is not an integer")]
    NonIntegral { which: char, n: usize, m: usize },
    #[error("twisted Leibniz system is inconsistent in degree {degree}")]
    UnderdeterminedSystem { degree: usize },
    #[error("the matrix method needs an odd prime (got {0})")]
    OddPrimeRequired(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("degree {degree} exceeds the table bound {bound}")]
    BoundExceeded { degree: usize, bound: usize },
    #[error("identity check failed: {0}")]
    TheoremViolation(String),
}

impl Error {
    /// Errors that can only arise if a proven identity fails, i.e. a bug in
    /// the arithmetic rather than a bad input.
    pub fn is_theorem_violation(&self) -> bool {
        matches!(
            self,
            Error::InexactDivision
                | Error::NonIntegral { .. }
                | Error::UnderdeterminedSystem { .. }
                | Error::TheoremViolation(_)
        )
    }
}

fn one_based(word: &[usize]) -> String {
    let parts: Vec<String> = word.iter().map(|i| (i + 1).to_string()).collect();
    format!("[{}]", parts.join(","))
}
