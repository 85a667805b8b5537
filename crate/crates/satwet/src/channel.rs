//! Shadowed-Rician fading and its moment-matched gamma surrogate.
//!
//! The land-mobile-satellite channel power |h|^2 follows a shadowed Rician
//! distribution with shadowing severity `m`, scatter power `b0` and
//! line-of-sight power `omega`. The energy pipeline only ever uses the MEAN
//! of the gamma surrogate; the Monte-Carlo sampler exists as an empirical
//! oracle for that mean and never feeds the deterministic path.
//!
//! ```
//! use satwet::channel::{gamma_params, mean_channel_power, FadingParams};
//!
//! // Light shadowing: m = 19.4, b0 = 0.158, Omega = 1.29.
//! let fading = FadingParams::new(19.4, 0.158, 1.29).unwrap();
//! let approx = gamma_params(&fading);
//! assert!((approx.alpha_s - 2.5769).abs() < 1e-4);
//! assert!((approx.beta_s - 0.6232).abs() < 1e-4);
//! assert!((mean_channel_power(&approx) - 1.606).abs() < 1e-12);
//! ```
//!
//! Sampling is exact gamma sampling, deterministic for a fixed 64-bit seed:
//!
//! ```
//! use satwet::channel::{gamma_params, sample_channel_power, FadingParams};
//!
//! let approx = gamma_params(&FadingParams::new(19.4, 0.158, 1.29).unwrap());
//! let draws = sample_channel_power(&approx, 42, 10_000).unwrap();
//! assert!(draws.iter().all(|&x| x > 0.0));
//! let mean = draws.iter().sum::<f64>() / draws.len() as f64;
//! assert!((mean - 1.606).abs() < 0.05);
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ChannelError {
    #[error("{0} must be strictly positive and finite, got {1}")]
    InvalidParam(&'static str, f64),
    #[error("sample count must be at least 1")]
    EmptySample,
}

/// Shadowed-Rician fading parameters (m, b0, Omega).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FadingParams {
    /// Shadowing severity m (> 0).
    pub m: f64,
    /// Scatter component power b0 (> 0).
    pub b0: f64,
    /// Line-of-sight component power Omega (>= 0).
    pub omega: f64,
}

impl FadingParams {
    pub fn new(m: f64, b0: f64, omega: f64) -> Result<Self, ChannelError> {
        if !m.is_finite() || m <= 0.0 {
            return Err(ChannelError::InvalidParam("m", m));
        }
        if !b0.is_finite() || b0 <= 0.0 {
            return Err(ChannelError::InvalidParam("b0", b0));
        }
        if !omega.is_finite() || omega < 0.0 {
            return Err(ChannelError::InvalidParam("omega", omega));
        }
        Ok(Self { m, b0, omega })
    }
}

/// Gamma surrogate of the shadowed-Rician power: shape `alpha_s`, scale `beta_s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaApprox {
    pub alpha_s: f64,
    pub beta_s: f64,
}

/// Moment-matched gamma surrogate of the shadowed-Rician power distribution.
///
/// alpha_s = m (2 b0 + Omega)^2 / (4 m b0^2 + 4 m b0 Omega + Omega^2)
/// beta_s  = (4 m b0^2 + 4 m b0 Omega + Omega^2) / (m (2 b0 + Omega))
///
/// The product alpha_s * beta_s equals 2 b0 + Omega, the mean power of the
/// underlying shadowed-Rician model.
pub fn gamma_params(fading: &FadingParams) -> GammaApprox {
    let (m, b0, om) = (fading.m, fading.b0, fading.omega);
    let total = 2.0 * b0 + om;
    let denom = 4.0 * m * b0 * b0 + 4.0 * m * b0 * om + om * om;
    GammaApprox {
        alpha_s: m * total * total / denom,
        beta_s: denom / (m * total),
    }
}

/// Mean channel power gain alpha_s * beta_s.
pub fn mean_channel_power(approx: &GammaApprox) -> f64 {
    approx.alpha_s * approx.beta_s
}

/// Draw `n` independent channel power gains from the gamma surrogate.
///
/// Deterministic for a fixed seed; used only as a statistical oracle.
pub fn sample_channel_power(
    approx: &GammaApprox,
    seed: u64,
    n: usize,
) -> Result<Vec<f64>, ChannelError> {
    if n == 0 {
        return Err(ChannelError::EmptySample);
    }
    let dist = Gamma::new(approx.alpha_s, approx.beta_s)
        .map_err(|_| ChannelError::InvalidParam("alpha_s", approx.alpha_s))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n).map(|_| dist.sample(&mut rng)).collect())
}
