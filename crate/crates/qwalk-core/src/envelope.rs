//! Smooth analytic envelope of the walk distribution and the closed-form
//! variance law `sigma^2 = N^2 (1 - sin(theta))`.
//!
//! The envelope treats the exact, heavily oscillating distribution as a
//! smooth bathtub-shaped density supported on `(-N cos(theta), N cos(theta))`
//! and zero beyond. It is an approximation; comparisons against simulation
//! carry percent-level tolerances, not machine precision.

use alloc::vec::Vec;

use num_traits::Float;

use crate::coin::CoinParams;
use crate::error::Error;
use crate::line::{evolve, InitialCondition};
use crate::stats::distribution;

/// Default panel count for the quadrature routines.
pub const DEFAULT_PANELS: usize = 16_384;

/// The envelope `P(i) = [1 + cos^2(2 theta)] exp(K (i^2 / (N cos theta)^2 - 1)) / sqrt(N)`
/// with its shape constant
/// `K(theta) = (sqrt(N)/2) cos(theta) [1 + cos^2(2 theta)] [1 + sin(theta)]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeModel {
    theta: f64,
    steps: usize,
    k_constant: f64,
}

impl EnvelopeModel {
    pub fn new(theta: f64, steps: usize) -> Result<Self, Error> {
        check_theta(theta)?;
        if steps == 0 {
            return Err(Error::BadHorizon { got: 0 });
        }
        let n = steps as f64;
        let k_constant = 0.5
            * n.sqrt()
            * theta.cos()
            * (1.0 + (2.0 * theta).cos().powi(2))
            * (1.0 + theta.sin());
        Ok(Self { theta, steps, k_constant })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn k_constant(&self) -> f64 {
        self.k_constant
    }

    /// Edge of the support, `N cos(theta)`.
    pub fn support_edge(&self) -> f64 {
        self.steps as f64 * self.theta.cos()
    }

    /// Envelope density at (real-valued) position `i`; zero outside the
    /// support.
    pub fn density(&self, i: f64) -> f64 {
        let edge = self.support_edge();
        if i.abs() >= edge || edge == 0.0 {
            return 0.0;
        }
        self.density_on_support(i)
    }

    /// The density formula without the support cutoff. Quadratures over the
    /// support use this so that the edge samples see the one-sided limit
    /// instead of the jump to zero.
    fn density_on_support(&self, i: f64) -> f64 {
        let edge = self.support_edge();
        let n = self.steps as f64;
        let shape = 1.0 + (2.0 * self.theta).cos().powi(2);
        shape * (self.k_constant * (i * i / (edge * edge) - 1.0)).exp() / n.sqrt()
    }

    /// Total envelope mass over the support, by composite Simpson quadrature.
    ///
    /// The printed normalization only claims an approximate unit mass; this
    /// reports the actual value so the residual can be inspected.
    pub fn total_mass(&self, panels: usize) -> f64 {
        let edge = self.support_edge();
        if edge == 0.0 {
            return 0.0;
        }
        simpson(|i| self.density_on_support(i), -edge, edge, panels)
    }
}

/// Closed-form variance `N^2 (1 - sin(theta))` of an `N`-step walk.
pub fn analytic_variance(theta: f64, steps: usize) -> Result<f64, Error> {
    check_theta(theta)?;
    let n = steps as f64;
    Ok(n * n * (1.0 - theta.sin()))
}

/// Variance of the envelope by direct quadrature of the parametrized
/// integral
///
/// ```text
/// sigma^2 = integral over phi in [-pi/2, pi/2] of
///           P(f(phi)) f(phi)^2 f'(phi) dphi,   f(phi) = N cos(theta) sin(phi)
/// ```
///
/// evaluated exactly as written, with no normalization of the envelope mass.
/// This is the cross-check route for [`analytic_variance`]; any systematic
/// gap between the two is reported by the caller rather than absorbed here.
pub fn variance_quadrature(theta: f64, steps: usize, panels: usize) -> Result<f64, Error> {
    let model = EnvelopeModel::new(theta, steps)?;
    let edge = model.support_edge();
    let n = steps as f64;
    let integrand = |phi: f64| {
        let pos = edge * phi.sin();
        let jacobian = n * theta.cos() * phi.cos();
        model.density(pos) * pos * pos * jacobian
    };
    Ok(simpson(
        integrand,
        -core::f64::consts::FRAC_PI_2,
        core::f64::consts::FRAC_PI_2,
        panels,
    ))
}

/// Measured `C_theta = sigma^2 / N^2` over a grid of mixing angles, running
/// the simulator with coin `(xi = eta, zeta = 0)` from the symmetric start.
pub fn fit_c_theta(
    theta_grid: &[f64],
    steps: usize,
    eta: f64,
) -> Result<Vec<(f64, f64)>, Error> {
    if theta_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let n = steps as f64;
    let mut out = Vec::with_capacity(theta_grid.len());
    for &theta in theta_grid {
        let coin = CoinParams::new(eta, theta, 0.0)?;
        let state = evolve(InitialCondition::Symmetric, &coin, steps)?;
        let c = distribution(&state).variance() / (n * n);
        out.push((theta, c));
    }
    Ok(out)
}

fn check_theta(theta: f64) -> Result<(), Error> {
    if !theta.is_finite() {
        return Err(Error::NonFinite("theta"));
    }
    if !(0.0..=core::f64::consts::FRAC_PI_2).contains(&theta) {
        return Err(Error::ThetaRange { theta });
    }
    Ok(())
}

/// Composite Simpson rule; `panels` is rounded up to the next even count.
fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let n = panels.max(2) + panels % 2;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for j in 1..n {
        let w = if j % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + h * j as f64);
    }
    acc * h / 3.0
}
