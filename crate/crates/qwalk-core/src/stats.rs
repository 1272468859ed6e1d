//! Position-distribution statistics: moments, Shannon entropy, and
//! symmetry diagnostics.

use alloc::vec::Vec;

use num_traits::Float;

use crate::error::Error;
use crate::line::WalkState;

/// Tolerance on the total probability of a valid distribution.
pub const DISTRIBUTION_TOL: f64 = 1e-9;

/// Probabilities over a contiguous run of integer positions.
#[derive(Debug, Clone, PartialEq)]
pub struct PositionDistribution {
    offset: i64,
    probs: Vec<f64>,
}

impl PositionDistribution {
    /// Wraps a probability vector whose first entry sits at position `offset`.
    pub fn new(offset: i64, probs: Vec<f64>) -> Result<Self, Error> {
        let mut total = 0.0;
        for &p in &probs {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::InvalidDistribution { total: p });
            }
            total += p;
        }
        if (total - 1.0).abs() > DISTRIBUTION_TOL {
            return Err(Error::InvalidDistribution { total });
        }
        Ok(Self { offset, probs })
    }

    /// First stored position.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    /// Probability at position `m`; zero outside the stored range.
    pub fn probability(&self, m: i64) -> f64 {
        let j = m - self.offset;
        if j < 0 || j as usize >= self.probs.len() {
            0.0
        } else {
            self.probs[j as usize]
        }
    }

    /// Iterates over `(position, probability)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.probs
            .iter()
            .enumerate()
            .map(move |(j, &p)| (self.offset + j as i64, p))
    }

    pub fn mean(&self) -> f64 {
        self.iter().map(|(m, p)| p * m as f64).sum()
    }

    /// Second moment about the empirical mean.
    pub fn variance(&self) -> f64 {
        let mean = self.mean();
        let var: f64 = self
            .iter()
            .map(|(m, p)| {
                let d = m as f64 - mean;
                p * d * d
            })
            .sum();
        var.max(0.0)
    }

    /// Shannon entropy in bits; zero-probability positions contribute nothing.
    pub fn entropy_bits(&self) -> f64 {
        let h = -self
            .probs
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| p * p.log2())
            .sum::<f64>();
        // A point mass whose probability rounds just above 1 would otherwise
        // come out at -1e-16.
        h.max(0.0)
    }

    /// Left-right imbalance `(1/2) * sum_i |p_i - p_{-i}|` about position 0,
    /// treating positions outside the stored range as zero. Zero exactly for a
    /// mirror-symmetric distribution, one for fully one-sided mass.
    pub fn asymmetry(&self) -> f64 {
        let reach = self
            .offset
            .abs()
            .max((self.offset + self.probs.len() as i64 - 1).abs());
        (1..=reach)
            .map(|m| (self.probability(m) - self.probability(-m)).abs())
            .sum()
    }

    pub fn summary(&self) -> DistributionSummary {
        DistributionSummary {
            mean: self.mean(),
            variance: self.variance(),
            entropy_bits: self.entropy_bits(),
        }
    }
}

/// Mean, variance, and measurement entropy of one distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionSummary {
    pub mean: f64,
    pub variance: f64,
    pub entropy_bits: f64,
}

/// Position distribution of a walk state: `p_m = |a_m|^2 + |b_m|^2`.
pub fn distribution(state: &WalkState) -> PositionDistribution {
    let probs = (state.min_position()..=state.max_position())
        .map(|m| state.probability(m))
        .collect();
    PositionDistribution { offset: state.min_position(), probs }
}
