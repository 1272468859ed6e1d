//! Numerically exact simulation of discrete-time quantum walks driven by a
//! three-parameter SU(2) coin, on the line and on the n-cycle.
//!
//! The crate is `no_std` (with `alloc`): the simulation core carries no IO.
//! The companion `qwalk-cli` crate wraps it in a command line with CSV output.
//!
//! - [`coin`]: the coin family `U(xi, theta, zeta)`, its Pauli/Hadamard
//!   limits, and phase-equivalence classes.
//! - [`line`]: state-vector evolution on the line, one-step closed forms, and
//!   the equivalent recurrence formulations.
//! - [`stats`]: position-distribution moments, Shannon entropy, and symmetry
//!   diagnostics.
//! - [`envelope`]: the smooth envelope model and the variance law
//!   `sigma^2 = N^2 (1 - sin theta)`.
//! - [`cycle`]: the walk on the n-cycle, time-averaged distributions, and
//!   mixing times.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod coin;
pub mod cycle;
pub mod envelope;
pub mod error;
pub mod line;
pub mod stats;

pub use coin::{coin_matrix, phase_equivalent, CoinMatrix, CoinParams};
pub use cycle::{
    mixing_time, time_averaged, tv_distance, uniform, CycleState, MixingOutcome,
    TimeAveragedDistribution,
};
pub use envelope::{analytic_variance, fit_c_theta, variance_quadrature, EnvelopeModel};
pub use error::Error;
pub use line::{
    check_decoupled_recurrence, evolve, initial_state, one_step_side_probabilities,
    recurrence_evolve, InitialCondition, WalkState,
};
pub use num_complex::Complex64;
pub use stats::{distribution, DistributionSummary, PositionDistribution};
