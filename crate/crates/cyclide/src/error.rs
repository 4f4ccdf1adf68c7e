//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A hypergeometric series parameter set makes the series undefined
    /// (bottom parameter a nonpositive integer).
    #[error("divergent parameters: {0}")]
    DivergentParameters(String),

    /// A series or refinement loop hit its hard cap before reaching the
    /// requested tolerance.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// The quadrature integrand lost positivity on the grid; the inversion
    /// center must lie strictly outside the torus.
    #[error("singular integrand: {0}")]
    SingularIntegrand(String),

    /// A circle-pair configuration without two exterior circles (d <= r1 + r2).
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),

    /// A recurrence denominator vanished.
    #[error("zero denominator: {0}")]
    ZeroDenominator(String),

    /// A requested isoperimetric ratio lies outside the two-branch overlap
    /// interval.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// The square torus (major radius sqrt(2)) has a single monotone branch;
    /// the non-uniqueness search refuses it.
    #[error("square torus rejected: {0}")]
    RejectSquare(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code class for the CLI: bad user input maps to 2, internal
    /// numerical failures to 1.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Domain(_) | Error::OutOfRange(_) | Error::RejectSquare(_)
        )
    }
}
