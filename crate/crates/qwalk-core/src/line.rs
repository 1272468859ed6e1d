//! State-vector evolution of the walk on the line.
//!
//! One step applies the coin to every position's amplitude pair and then
//! shifts all post-coin `|0>` amplitude one position to the left and all
//! post-coin `|1>` amplitude one position to the right. After `n` steps the
//! state is supported on `[-n, n]` and is stored densely over that interval,
//! checkerboard zeros included.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::coin::{CoinMatrix, CoinParams};
use crate::error::Error;

/// Dense storage budget for [`evolve`] and [`recurrence_evolve`].
pub const MAX_STEPS: usize = 1_000_000;

/// Normalization tolerance for custom initial amplitudes.
pub const INIT_NORM_TOL: f64 = 1e-12;

/// Coin state of the walker before the first step. The walker itself always
/// starts at position 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialCondition {
    /// Coin `|0>`.
    Basis0,
    /// Coin `|1>`.
    Basis1,
    /// `(|0> + i|1>)/sqrt(2)`, the superposition that keeps an unbiased walk
    /// left-right symmetric.
    Symmetric,
    /// Arbitrary normalized pair `a|0> + b|1>`.
    Custom { a: Complex64, b: Complex64 },
}

impl InitialCondition {
    /// Builds a custom initial coin state, rejecting unnormalized pairs.
    pub fn custom(a: Complex64, b: Complex64) -> Result<Self, Error> {
        let init = Self::Custom { a, b };
        init.validate()?;
        Ok(init)
    }

    /// The coin amplitude pair `(a, b)` this condition places at the origin.
    pub fn amplitudes(&self) -> (Complex64, Complex64) {
        let half_sqrt = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        match *self {
            Self::Basis0 => (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
            Self::Basis1 => (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)),
            Self::Symmetric => (half_sqrt, Complex64::new(0.0, 1.0) * half_sqrt),
            Self::Custom { a, b } => (a, b),
        }
    }

    fn validate(&self) -> Result<(), Error> {
        let (a, b) = self.amplitudes();
        if !(a.re.is_finite() && a.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
            return Err(Error::NonFinite("initial amplitude"));
        }
        let norm_sqr = a.norm_sqr() + b.norm_sqr();
        if (norm_sqr - 1.0).abs() > INIT_NORM_TOL {
            return Err(Error::Unnormalized { norm_sqr });
        }
        Ok(())
    }
}

/// Walker state after some number of steps: amplitude pairs `(a_m, b_m)` over
/// positions `m` in `[-n, n]`, where `a` is the coin-`|0>` component and `b`
/// the coin-`|1>` component.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkState {
    steps: usize,
    a: Vec<Complex64>,
    b: Vec<Complex64>,
}

impl WalkState {
    pub fn steps_taken(&self) -> usize {
        self.steps
    }

    pub fn min_position(&self) -> i64 {
        -(self.steps as i64)
    }

    pub fn max_position(&self) -> i64 {
        self.steps as i64
    }

    /// Amplitude pair at position `m`; zero outside the reachable interval.
    pub fn amplitudes(&self, m: i64) -> (Complex64, Complex64) {
        match self.index_of(m) {
            Some(j) => (self.a[j], self.b[j]),
            None => (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)),
        }
    }

    /// Probability of finding the walker at position `m`, tracing out the coin.
    pub fn probability(&self, m: i64) -> f64 {
        let (a, b) = self.amplitudes(m);
        a.norm_sqr() + b.norm_sqr()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(a, b)| a.norm_sqr() + b.norm_sqr())
            .sum()
    }

    /// One coin-then-shift step.
    pub fn step(&self, coin: &CoinMatrix) -> WalkState {
        let len = 2 * (self.steps + 1) + 1;
        let mut a = vec![Complex64::new(0.0, 0.0); len];
        let mut b = vec![Complex64::new(0.0, 0.0); len];
        for j in 0..self.a.len() {
            let (post_a, post_b) = coin.apply(self.a[j], self.b[j]);
            // Old index j is position j - steps, which is index j + 1 in the
            // widened array; |0> lands one position left, |1> one right.
            a[j] = post_a;
            b[j + 2] = post_b;
        }
        WalkState { steps: self.steps + 1, a, b }
    }

    fn index_of(&self, m: i64) -> Option<usize> {
        if m < self.min_position() || m > self.max_position() {
            None
        } else {
            Some((m + self.steps as i64) as usize)
        }
    }
}

/// Places the walker at the origin in the requested coin state.
pub fn initial_state(init: InitialCondition) -> Result<WalkState, Error> {
    init.validate()?;
    let (a, b) = init.amplitudes();
    Ok(WalkState { steps: 0, a: vec![a], b: vec![b] })
}

/// Runs `steps` coin-then-shift iterations with no intermediate measurement.
pub fn evolve(init: InitialCondition, coin: &CoinParams, steps: usize) -> Result<WalkState, Error> {
    if steps > MAX_STEPS {
        return Err(Error::StepLimit { requested: steps, max: MAX_STEPS });
    }
    let matrix = coin.matrix();
    let mut state = initial_state(init)?;
    for _ in 0..steps {
        state = state.step(&matrix);
    }
    Ok(state)
}

/// Closed-form single-step probabilities `(p_left, p_right)` for the
/// symmetric initial state.
///
/// Expanding the squared amplitudes of one step gives
/// `p_left = (1 + sin(2 theta) sin(xi - zeta)) / 2`: the `+` sign belongs to
/// the left side, so positive `xi - zeta` drifts the walker leftward.
pub fn one_step_side_probabilities(coin: &CoinParams) -> (f64, f64) {
    let bias = (2.0 * coin.theta()).sin() * (coin.xi() - coin.zeta()).sin();
    (0.5 * (1.0 + bias), 0.5 * (1.0 - bias))
}

/// Evolves the walk through the first-order amplitude recurrences instead of
/// the matrix step, as an independent route to the same state.
///
/// In the shift convention used here (`|0>` moves left) the recurrences read
///
/// ```text
/// a[m, n] =  e^{+i xi}   cos(theta) a[m+1, n-1] + e^{+i zeta} sin(theta) b[m+1, n-1]
/// b[m, n] =  e^{-i zeta} sin(theta) a[m-1, n-1] - e^{-i xi}   cos(theta) b[m-1, n-1]
/// ```
///
/// the coin-`|0>` amplitude gathering from the right neighbor and the
/// coin-`|1>` amplitude from the left.
pub fn recurrence_evolve(
    init: InitialCondition,
    coin: &CoinParams,
    steps: usize,
) -> Result<WalkState, Error> {
    if steps > MAX_STEPS {
        return Err(Error::StepLimit { requested: steps, max: MAX_STEPS });
    }
    let cos_t = coin.theta().cos();
    let sin_t = coin.theta().sin();
    let e_xi = Complex64::from_polar(1.0, coin.xi());
    let e_zeta = Complex64::from_polar(1.0, coin.zeta());
    let (ca_a, ca_b) = (e_xi * cos_t, e_zeta * sin_t);
    let (cb_a, cb_b) = (e_zeta.conj() * sin_t, -e_xi.conj() * cos_t);

    let mut state = initial_state(init)?;
    for n in 1..=steps {
        let len = 2 * n + 1;
        let mut a = vec![Complex64::new(0.0, 0.0); len];
        let mut b = vec![Complex64::new(0.0, 0.0); len];
        for j in 0..len {
            let m = j as i64 - n as i64;
            let (a_right, b_right) = state.amplitudes(m + 1);
            let (a_left, b_left) = state.amplitudes(m - 1);
            a[j] = ca_a * a_right + ca_b * b_right;
            b[j] = cb_a * a_left + cb_b * b_left;
        }
        state = WalkState { steps: n, a, b };
    }
    Ok(state)
}

/// Largest residual of the decoupled second-order recurrence over a run of
/// consecutive states.
///
/// Eliminating `b` from the first-order recurrences (and symmetrically `a`)
/// shows that both amplitude families satisfy the same three-term relation,
/// in which `zeta` cancels out entirely:
///
/// ```text
/// x[m, n+1] - x[m, n-1] = cos(theta) (e^{+i xi} x[m+1, n] - e^{-i xi} x[m-1, n])
/// ```
///
/// for `x` either `a` or `b`. A correct simulation keeps the residual at
/// rounding level for every `m` and every interior `n` of the history.
pub fn check_decoupled_recurrence(
    history: &[WalkState],
    coin: &CoinParams,
) -> Result<f64, Error> {
    if history.len() < 3 {
        return Err(Error::HistoryTooShort { got: history.len() });
    }
    if history[0].steps_taken() < 1 {
        return Err(Error::HistoryNotConsecutive);
    }
    if history.windows(2).any(|w| w[1].steps_taken() != w[0].steps_taken() + 1) {
        return Err(Error::HistoryNotConsecutive);
    }

    let cos_t = coin.theta().cos();
    let e_xi = Complex64::from_polar(1.0, coin.xi());
    let mut worst = 0.0f64;
    for triple in history.windows(3) {
        let (prev, cur, next) = (&triple[0], &triple[1], &triple[2]);
        for m in next.min_position()..=next.max_position() {
            let (a_next, b_next) = next.amplitudes(m);
            let (a_prev, b_prev) = prev.amplitudes(m);
            let (a_r, b_r) = cur.amplitudes(m + 1);
            let (a_l, b_l) = cur.amplitudes(m - 1);
            let res_a = a_next - a_prev - cos_t * (e_xi * a_r - e_xi.conj() * a_l);
            let res_b = b_next - b_prev - cos_t * (e_xi * b_r - e_xi.conj() * b_l);
            worst = worst.max(res_a.norm()).max(res_b.norm());
        }
    }
    Ok(worst)
}
