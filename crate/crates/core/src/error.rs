use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate polynomial: leading coefficient is below the trim tolerance")]
    DegeneratePolynomial,

    #[error("invalid interval ({lo}, {hi}): lower end must be below upper end")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("tolerance must be strictly positive, got {0}")]
    InvalidTolerance(f64),

    #[error("coefficient {name} must be strictly positive (all a_i > 0 and b_i > 0 are required)")]
    NonPositiveCoefficient { name: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("not a valid quintic from a quartic operator: leading coefficient must be positive")]
    InvalidQuintic,

    #[error("degenerate depressed cubic: |a| is below tolerance")]
    DegenerateCubic,

    #[error("casus irreducibilis precondition violated: Q = {0} is not negative")]
    CasusIrreducibilis(f64),

    #[error("cos(alpha) argument {0} lies outside [-1, 1]")]
    AngleOutOfRange(f64),

    #[error("closed form unavailable: {0}")]
    ClosedFormUnavailable(String),

    #[error("complex extrema: radicand {0} is negative")]
    ComplexExtrema(f64),

    #[error("closed form degenerate: extrema {0} and {1} coincide within tolerance")]
    ClosedFormDegenerate(f64, f64),

    #[error("not certified as fixed point: xi = {xi}, residual = {residual}")]
    NotCertified { xi: f64, residual: f64 },

    #[error("quadrature did not converge for {what}: last two estimates {previous} and {last}")]
    QuadratureNotConverged { what: String, previous: f64, last: f64 },

    #[error("invalid quadrature configuration: {0}")]
    InvalidQuadrature(String),

    #[error("invalid potential set: {0}")]
    InvalidPotential(String),

    #[error("closed form only was requested but the regime requires the oracle")]
    ClosedFormRefused,

    #[error("config error: {0}")]
    Config(String),
}
