use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("singular curve: discriminant of y^2 = x^3 + {a}x + {b} is zero")]
    SingularCurve { a: i64, b: i64 },

    #[error("{p} is not prime")]
    InvalidPrime { p: u64 },

    #[error("bad reduction at p = {p}")]
    BadReduction { p: u64 },

    #[error("invalid bad-prime data: {0}")]
    InvalidBadPrime(String),

    #[error("group order at p = {p} is ambiguous after {points} points")]
    AmbiguousOrder { p: u64, points: usize },

    #[error("a_p = {a_p} violates the Hasse bound at p = {p}")]
    HasseViolation { p: u64, a_p: i64 },

    #[error("range end {hi} exceeds the sieve cap {cap}")]
    RangeTooLarge { hi: u64, cap: u64 },

    #[error("invalid range [{lo}, {hi})")]
    InvalidRange { lo: u64, hi: u64 },

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("invalid interval [{alpha}, {beta}]")]
    InvalidInterval { alpha: f64, beta: f64 },

    #[error("quadrature did not converge within {nodes} nodes (last change {last_change:e})")]
    QuadratureFailure { nodes: usize, last_change: f64 },

    #[error("inconsistent local data: {0}")]
    InconsistentLocalData(String),

    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    #[error("gamma factor has a pole at s = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("curve {label}: {source}")]
    Curve {
        label: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn for_curve(self, label: &str) -> Error {
        match self {
            e @ Error::Curve { .. } => e,
            e => Error::Curve {
                label: label.to_string(),
                source: Box::new(e),
            },
        }
    }
}
