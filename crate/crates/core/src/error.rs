use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("ideal is not Borel-fixed: multiplying generator {gen} by {missing_factor} leaves the ideal")]
    NotBorelFixed { gen: String, missing_factor: String },
    #[error("ideal is not stable: exchange at generator {gen} leaves the ideal")]
    NotStable { gen: String },
    #[error("monomial {0} is not in the ideal")]
    NotInIdeal(String),
    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,
    #[error("ideal is the unit ideal (empty variety)")]
    UnitIdeal,
    #[error("zero ideal has no generators to work with")]
    ZeroIdeal,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("generators are not homogeneous of a common degree")]
    Inhomogeneous,
    #[error("chart coefficient key ({a}, {b}) is outside F x R")]
    BadChartKey { a: String, b: String },
    #[error("weight exponent {0} is not a nonnegative integer after scaling")]
    NonIntegralExponent(String),
    #[error("base ideal is not extremal for any admissible weight vector")]
    NotExtremal,
    #[error("Hilbert polynomial interpolation failed its verification point (degree {degree}: interpolated {expected}, actual {actual})")]
    HilbertInconsistent {
        degree: u32,
        expected: String,
        actual: String,
    },
    #[error("ideals have different Hilbert polynomials: {0} vs {1}")]
    HilbertMismatch(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
