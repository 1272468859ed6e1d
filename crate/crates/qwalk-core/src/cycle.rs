//! Walk on the n-cycle: modular shift, time-averaged distributions, and
//! mixing-time measurement.
//!
//! The instantaneous distribution of a unitary walk never settles, but its
//! running (Cesaro) average does; mixing time is the first horizon at which
//! that average comes within a total-variation threshold of uniform.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::coin::{CoinMatrix, CoinParams};
use crate::error::Error;
use crate::line::InitialCondition;

/// Amplitude pairs over the vertices `0..n` of an n-cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleState {
    steps: usize,
    a: Vec<Complex64>,
    b: Vec<Complex64>,
}

impl CycleState {
    /// Places the walker on vertex 0 of an `n`-vertex cycle.
    pub fn new(vertices: usize, init: InitialCondition) -> Result<Self, Error> {
        if vertices == 0 {
            return Err(Error::EmptyCycle);
        }
        // Reuse the line-walk validation of the coin amplitudes.
        let origin = crate::line::initial_state(init)?;
        let (a0, b0) = origin.amplitudes(0);
        let mut a = vec![Complex64::new(0.0, 0.0); vertices];
        let mut b = vec![Complex64::new(0.0, 0.0); vertices];
        a[0] = a0;
        b[0] = b0;
        Ok(Self { steps: 0, a, b })
    }

    pub fn vertices(&self) -> usize {
        self.a.len()
    }

    pub fn steps_taken(&self) -> usize {
        self.steps
    }

    /// Coin applied per vertex, then `|0>` amplitude moves to `(v - 1) mod n`
    /// and `|1>` amplitude to `(v + 1) mod n`.
    pub fn step(&self, coin: &CoinMatrix) -> CycleState {
        let n = self.vertices();
        let mut a = vec![Complex64::new(0.0, 0.0); n];
        let mut b = vec![Complex64::new(0.0, 0.0); n];
        for v in 0..n {
            let (post_a, post_b) = coin.apply(self.a[v], self.b[v]);
            a[(v + n - 1) % n] += post_a;
            b[(v + 1) % n] += post_b;
        }
        CycleState { steps: self.steps + 1, a, b }
    }

    /// Vertex probabilities, tracing out the coin.
    pub fn distribution(&self) -> Vec<f64> {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(a, b)| a.norm_sqr() + b.norm_sqr())
            .collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(a, b)| a.norm_sqr() + b.norm_sqr())
            .sum()
    }
}

/// Arithmetic mean of the per-step vertex distributions for `t = 0..T-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeAveragedDistribution {
    horizon: usize,
    probs: Vec<f64>,
}

impl TimeAveragedDistribution {
    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }
}

/// Averages the walk's vertex distribution over the first `horizon` time
/// steps, the initial distribution (`t = 0`) included.
pub fn time_averaged(
    init: InitialCondition,
    coin: &CoinParams,
    vertices: usize,
    horizon: usize,
) -> Result<TimeAveragedDistribution, Error> {
    if horizon == 0 {
        return Err(Error::BadHorizon { got: 0 });
    }
    let matrix = coin.matrix();
    let mut state = CycleState::new(vertices, init)?;
    let mut acc = vec![0.0f64; vertices];
    for t in 0..horizon {
        for (slot, p) in acc.iter_mut().zip(state.distribution()) {
            *slot += p;
        }
        if t + 1 < horizon {
            state = state.step(&matrix);
        }
    }
    for slot in &mut acc {
        *slot /= horizon as f64;
    }
    Ok(TimeAveragedDistribution { horizon, probs: acc })
}

/// Total variation distance `(1/2) sum_v |a_v - b_v|`.
pub fn tv_distance(a: &[f64], b: &[f64]) -> Result<f64, Error> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch { left: a.len(), right: b.len() });
    }
    Ok(0.5 * a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum::<f64>())
}

/// The uniform distribution on `vertices` vertices.
pub fn uniform(vertices: usize) -> Vec<f64> {
    vec![1.0 / vertices as f64; vertices]
}

/// Result of a mixing-time search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixingOutcome {
    /// Smallest horizon `T <= t_max` whose time-averaged distribution is
    /// within `epsilon` of uniform, or `None` if none is.
    pub mixed_at: Option<usize>,
    /// Even cycles need not average to uniform at all; flag rather than fail.
    pub even_cycle_warning: bool,
}

/// Searches for the smallest averaging horizon within `epsilon` total
/// variation of uniform.
pub fn mixing_time(
    init: InitialCondition,
    coin: &CoinParams,
    vertices: usize,
    epsilon: f64,
    t_max: usize,
) -> Result<MixingOutcome, Error> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::BadEpsilon { epsilon });
    }
    if t_max == 0 {
        return Err(Error::BadHorizon { got: 0 });
    }
    let matrix = coin.matrix();
    let mut state = CycleState::new(vertices, init)?;
    let flat = 1.0 / vertices as f64;
    let mut acc = vec![0.0f64; vertices];
    let mut mixed_at = None;
    for t in 1..=t_max {
        for (slot, p) in acc.iter_mut().zip(state.distribution()) {
            *slot += p;
        }
        let tv = 0.5 * acc.iter().map(|s| (s / t as f64 - flat).abs()).sum::<f64>();
        if tv <= epsilon {
            mixed_at = Some(t);
            break;
        }
        state = state.step(&matrix);
    }
    Ok(MixingOutcome { mixed_at, even_cycle_warning: vertices % 2 == 0 })
}
