//! Error type shared by the walk, statistics, envelope, and cycle modules.

use core::fmt;

/// Everything that can go wrong when driving the simulation core.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// An angle or amplitude was NaN or infinite.
    NonFinite(&'static str),
    /// Custom coin amplitudes must satisfy |a|^2 + |b|^2 = 1.
    Unnormalized { norm_sqr: f64 },
    /// Requested step count exceeds the dense-storage budget.
    StepLimit { requested: usize, max: usize },
    /// Angle outside [0, pi/2], where the envelope model is defined.
    ThetaRange { theta: f64 },
    /// Distributions of different support sizes cannot be compared.
    SizeMismatch { left: usize, right: usize },
    /// The decoupled-recurrence check needs at least three states.
    HistoryTooShort { got: usize },
    /// States passed to the recurrence check must be consecutive steps.
    HistoryNotConsecutive,
    /// Probabilities must be nonnegative and sum to one.
    InvalidDistribution { total: f64 },
    /// A cycle needs at least one vertex.
    EmptyCycle,
    /// Averaging horizons and step caps must be at least one.
    BadHorizon { got: usize },
    /// Mixing thresholds live in (0, 1].
    BadEpsilon { epsilon: f64 },
    /// Parameter grids must be nonempty.
    EmptyGrid,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite(what) => write!(f, "{what} must be finite"),
            Error::Unnormalized { norm_sqr } => {
                write!(f, "coin amplitudes have squared norm {norm_sqr}, expected 1")
            }
            Error::StepLimit { requested, max } => {
                write!(f, "{requested} steps exceed the dense-storage limit of {max}")
            }
            Error::ThetaRange { theta } => {
                write!(f, "theta = {theta} outside [0, pi/2]")
            }
            Error::SizeMismatch { left, right } => {
                write!(f, "distribution sizes differ: {left} vs {right}")
            }
            Error::HistoryTooShort { got } => {
                write!(f, "need at least 3 consecutive states, got {got}")
            }
            Error::HistoryNotConsecutive => {
                write!(f, "states must be consecutive steps of one walk")
            }
            Error::InvalidDistribution { total } => {
                write!(f, "probabilities must be nonnegative and sum to 1, got total {total}")
            }
            Error::EmptyCycle => write!(f, "cycle needs at least one vertex"),
            Error::BadHorizon { got } => write!(f, "horizon must be at least 1, got {got}"),
            Error::BadEpsilon { epsilon } => {
                write!(f, "epsilon = {epsilon} outside (0, 1]")
            }
            Error::EmptyGrid => write!(f, "parameter grid is empty"),
        }
    }
}

impl core::error::Error for Error {}
