//! The three-parameter SU(2) coin operator.
//!
//! The coin family is
//!
//! ```text
//!                 | e^{i xi} cos(theta)    e^{i zeta} sin(theta)  |
//! U(xi,th,zeta) = |                                               |
//!                 | e^{-i zeta} sin(theta) -e^{-i xi} cos(theta)  |
//! ```
//!
//! `theta` sets how strongly the two coin states mix (and thereby the spread of
//! the walk), while the phase difference `xi - zeta` biases the walk left or
//! right. `U(0, pi/4, 0)` is the Hadamard coin; `U(0, 0, 0)` and
//! `U(0, pi/2, 0)` are the Pauli Z and X limits.

use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use num_complex::Complex64;
use num_traits::Float;

use crate::error::Error;

/// Per-entry tolerance for the unitarity and determinant self-checks.
pub const UNITARITY_TOL: f64 = 1e-12;
/// Tolerance for entrywise phase-ratio comparisons in [`phase_equivalent`].
pub const PHASE_TOL: f64 = 1e-10;

/// Wrap an angle into `[0, 2*pi)`.
fn canonical(angle: f64) -> f64 {
    let wrapped = angle - TAU * (angle / TAU).floor();
    // Rounding can land exactly on 2*pi for tiny negative inputs.
    if wrapped >= TAU {
        0.0
    } else {
        wrapped
    }
}

/// Wrap an angle into `(-pi, pi]`.
fn canonical_signed(angle: f64) -> f64 {
    let wrapped = canonical(angle);
    if wrapped > PI {
        wrapped - TAU
    } else {
        wrapped
    }
}

/// Caley-Klein angles `(xi, theta, zeta)` selecting one coin from the family.
///
/// Angles are accepted in radians and canonicalized into `[0, 2*pi)` on
/// construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinParams {
    xi: f64,
    theta: f64,
    zeta: f64,
}

impl CoinParams {
    pub fn new(xi: f64, theta: f64, zeta: f64) -> Result<Self, Error> {
        if !(xi.is_finite() && theta.is_finite() && zeta.is_finite()) {
            return Err(Error::NonFinite("coin angle"));
        }
        Ok(Self {
            xi: canonical(xi),
            theta: canonical(theta),
            zeta: canonical(zeta),
        })
    }

    /// The Hadamard coin `U(0, pi/4, 0)`.
    pub fn hadamard() -> Self {
        Self { xi: 0.0, theta: FRAC_PI_4, zeta: 0.0 }
    }

    /// The Pauli Z limit `U(0, 0, 0)`: ballistic motion without diffusion.
    pub fn pauli_z() -> Self {
        Self { xi: 0.0, theta: 0.0, zeta: 0.0 }
    }

    /// The Pauli X limit `U(0, pi/2, 0)`: the walker stays near the origin.
    pub fn pauli_x() -> Self {
        Self { xi: 0.0, theta: FRAC_PI_2, zeta: 0.0 }
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn zeta(&self) -> f64 {
        self.zeta
    }

    /// Bias angle `eta = |xi - zeta|`, the difference wrapped into `(-pi, pi]`
    /// before taking the absolute value.
    pub fn eta(&self) -> f64 {
        canonical_signed(self.xi - self.zeta).abs()
    }

    /// Builds the concrete 2x2 coin matrix.
    pub fn matrix(&self) -> CoinMatrix {
        coin_matrix(self)
    }
}

/// A concrete coin matrix. Unitary with determinant -1 by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinMatrix {
    c00: Complex64,
    c01: Complex64,
    c10: Complex64,
    c11: Complex64,
}

/// Materialize `U(xi, theta, zeta)` as a matrix.
pub fn coin_matrix(params: &CoinParams) -> CoinMatrix {
    let cos_t = params.theta.cos();
    let sin_t = params.theta.sin();
    let e_xi = Complex64::from_polar(1.0, params.xi);
    let e_zeta = Complex64::from_polar(1.0, params.zeta);
    CoinMatrix {
        c00: e_xi * cos_t,
        c01: e_zeta * sin_t,
        c10: e_zeta.conj() * sin_t,
        c11: -e_xi.conj() * cos_t,
    }
}

impl CoinMatrix {
    pub fn c00(&self) -> Complex64 {
        self.c00
    }

    pub fn c01(&self) -> Complex64 {
        self.c01
    }

    pub fn c10(&self) -> Complex64 {
        self.c10
    }

    pub fn c11(&self) -> Complex64 {
        self.c11
    }

    /// Applies the coin to one position's amplitude pair.
    #[inline]
    pub fn apply(&self, a: Complex64, b: Complex64) -> (Complex64, Complex64) {
        (self.c00 * a + self.c01 * b, self.c10 * a + self.c11 * b)
    }

    pub fn determinant(&self) -> Complex64 {
        self.c00 * self.c11 - self.c01 * self.c10
    }

    /// Largest per-entry deviation of `M * M^dagger` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let rows = [[self.c00, self.c01], [self.c10, self.c11]];
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                let dot = rows[i][0] * rows[j][0].conj() + rows[i][1] * rows[j][1].conj();
                let expect = if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
                worst = worst.max((dot - expect).norm());
            }
        }
        worst
    }

    fn row(&self, i: usize) -> [Complex64; 2] {
        if i == 0 {
            [self.c00, self.c01]
        } else {
            [self.c10, self.c11]
        }
    }
}

/// Whether two parameter triples produce the same coin up to row phases.
///
/// Each row is allowed an independent unit phase; a scalar global phase is the
/// special case of equal row phases. Row phases commute through the
/// conditional shift, so equivalent coins drive identical walks for any walker
/// released at the origin. In particular `U(xi, theta, zeta)` is equivalent to
/// `U(xi - zeta, theta, 0)` and to `U(0, theta, zeta - xi)`.
pub fn phase_equivalent(a: &CoinParams, b: &CoinParams) -> bool {
    let ma = a.matrix();
    let mb = b.matrix();
    row_phase_consistent(ma.row(0), mb.row(0)) && row_phase_consistent(ma.row(1), mb.row(1))
}

/// True when `a = e^{i phi} * b` entrywise for a single phi, comparing only
/// entries that are nonzero on both sides and requiring both-zero agreement.
fn row_phase_consistent(a: [Complex64; 2], b: [Complex64; 2]) -> bool {
    let mut phase: Option<Complex64> = None;
    for k in 0..2 {
        let (x, y) = (a[k], b[k]);
        if x.norm() <= PHASE_TOL && y.norm() <= PHASE_TOL {
            continue;
        }
        if x.norm() <= PHASE_TOL || y.norm() <= PHASE_TOL {
            return false;
        }
        let ratio = x / y;
        if (ratio.norm() - 1.0).abs() > PHASE_TOL {
            return false;
        }
        match phase {
            None => phase = Some(ratio),
            Some(p) => {
                if (ratio - p).norm() > PHASE_TOL {
                    return false;
                }
            }
        }
    }
    true
}
