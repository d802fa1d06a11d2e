use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot invert an element of zero norm")]
    InversionOfZero,

    #[error("expected a pure-imaginary quaternion (|Re| = {re_abs:.3e}, tol {tol:.1e})")]
    NotPureImaginary { re_abs: f64, tol: f64 },

    #[error("octonion convention mismatch: {lhs} vs {rhs}")]
    ConventionMismatch { lhs: &'static str, rhs: &'static str },

    #[error("point lives in {found}, expected {expected}")]
    SpaceMismatch { expected: String, found: String },

    #[error("point outside the domain of chart {chart}")]
    OutOfChart { chart: usize },

    #[error("membership defect {defect:.3e} exceeds tol {tol:.1e}")]
    MembershipViolation { defect: f64, tol: f64 },

    #[error("map is not equivariant: defect {defect:.3e} exceeds tol {tol:.1e}")]
    EquivarianceViolation { defect: f64, tol: f64 },

    #[error("homotopy interpolant degenerates: norm {norm:.3e} below floor {floor:.1e}")]
    DegenerateHomotopy { norm: f64, floor: f64 },

    #[error("no candidate square commutes within tol")]
    DiagramUnresolved,

    #[error("could not sample {region}: {accepted}/{requested} points after {attempts} draws")]
    Unsampled {
        region: String,
        requested: usize,
        accepted: usize,
        attempts: usize,
    },

    #[error("evaluation failed at sample {index}: {what}")]
    EvaluationFailure { index: usize, what: String },

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
