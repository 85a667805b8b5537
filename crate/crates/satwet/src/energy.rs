//! Link budget, threshold-gated harvesting and the closed-form pass energy.
//!
//! The received power follows the Friis equation with the mean gamma-surrogate
//! channel gain; harvesting is gated by the circuit sensitivity threshold and
//! linear above it. The pass energy integral
//!
//! ```text
//! E = mu * integral 0..T of dt / (A - B cos(omega t))
//! ```
//!
//! with `A = (R+H)^2 + R^2` and `B = 2 R (R+H) cos(phi)` has the closed form
//!
//! ```text
//! E = (2 mu / (omega sqrt(A^2 - B^2))) * atan(sqrt((A+B)/(A-B)) * tan(omega T / 2))
//! ```
//!
//! which [`numeric_energy`] cross-checks by adaptive quadrature:
//!
//! ```
//! use satwet::energy::{closed_form_energy, numeric_energy, PassMode};
//! use satwet::geometry::{angular_velocity, horizon_angle, OrbitGeometry};
//!
//! let geom = OrbitGeometry::new(6.378e6, 200e3, 6.67e-11, 5.97e24, 0.5f64.to_radians()).unwrap();
//! let window = 0.8 * horizon_angle(&geom) / angular_velocity(&geom);
//! let mu = 8493.0;
//!
//! let closed = closed_form_energy(&geom, mu, window, PassMode::Full).unwrap();
//! let oracle = numeric_energy(&geom, mu, window, PassMode::Full, 1e-10).unwrap();
//! assert!((closed - oracle).abs() / oracle < 1e-9);
//! ```
//!
//! The satellite grid contributes a coherent array gain that degrades from
//! `M N^2` toward `M N` as the phase-error variance grows:
//!
//! ```
//! use satwet::energy::{array_gain, misalignment_efficiency, ArrayConfig};
//!
//! let aligned = ArrayConfig::new(10, 4, 0.0).unwrap();
//! assert_eq!(array_gain(&aligned), 400.0); // M N^2
//!
//! let noisy = ArrayConfig::new(10, 4, 1.0).unwrap();
//! let g = array_gain(&noisy);
//! assert!(g > 40.0 && g < 400.0); // always within [M N, M N^2]
//!
//! // Fraction of the coherent gain surviving misalignment; independent of M.
//! let eff = misalignment_efficiency(&noisy);
//! assert!((eff - (1.0 + 9.0 * (-1.0f64).exp()) / 10.0).abs() < 1e-15);
//! ```

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::channel::{gamma_params, mean_channel_power, FadingParams, GammaApprox};
use crate::geometry::{angular_velocity, cutoff_angle, horizon_angle, OrbitGeometry};
use crate::quad::{self, QuadError};
use crate::units;

/// Received power above which the reference harvester circuit may saturate;
/// flagged in [`PassResult`] diagnostics.
pub const SATURATION_WARN_W: f64 = 5.011872336272725e-4; // -3 dBm

#[derive(Debug, Error, PartialEq)]
pub enum EnergyError {
    #[error("{0} must be strictly positive and finite, got {1}")]
    InvalidParam(&'static str, f64),
    #[error("{0} out of range: {1}")]
    OutOfRange(&'static str, f64),
    #[error("charging window exceeds the half orbit (omega*T = {0} >= pi)")]
    WindowTooLong(f64),
    #[error("quadrature error: {0}")]
    Quadrature(#[from] QuadError),
}

/// RF link budget and harvester circuit parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkBudget {
    /// Transmit power P_t (W).
    pub tx_power_w: f64,
    /// Transmit antenna gain G_T (linear).
    pub tx_gain: f64,
    /// Receive antenna gain G_R (linear).
    pub rx_gain: f64,
    /// Carrier frequency f (Hz).
    pub carrier_hz: f64,
    /// Harvester conversion efficiency eta_h, in (0, 1].
    pub harvest_efficiency: f64,
    /// Circuit sensitivity threshold P_th (W); 0 means an ideal circuit.
    pub sensitivity_w: f64,
}

impl LinkBudget {
    pub fn new(
        tx_power_w: f64,
        tx_gain: f64,
        rx_gain: f64,
        carrier_hz: f64,
        harvest_efficiency: f64,
        sensitivity_w: f64,
    ) -> Result<Self, EnergyError> {
        for (name, v) in [
            ("tx_power_w", tx_power_w),
            ("tx_gain", tx_gain),
            ("rx_gain", rx_gain),
            ("carrier_hz", carrier_hz),
        ] {
            if !v.is_finite() || v <= 0.0 {
                return Err(EnergyError::InvalidParam(name, v));
            }
        }
        if !harvest_efficiency.is_finite()
            || harvest_efficiency <= 0.0
            || harvest_efficiency > 1.0
        {
            return Err(EnergyError::OutOfRange("harvest_efficiency", harvest_efficiency));
        }
        if !sensitivity_w.is_finite() || sensitivity_w < 0.0 {
            return Err(EnergyError::OutOfRange("sensitivity_w", sensitivity_w));
        }
        Ok(Self {
            tx_power_w,
            tx_gain,
            rx_gain,
            carrier_hz,
            harvest_efficiency,
            sensitivity_w,
        })
    }

    /// Carrier wavelength lambda = c / f (m).
    pub fn wavelength_m(&self) -> f64 {
        units::wavelength_m(self.carrier_hz)
    }
}

/// Satellite grid layout: N satellites, M antennas each, per-satellite phase
/// error variance sigma_psi^2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArrayConfig {
    pub num_satellites: u32,
    pub antennas_per_satellite: u32,
    /// Variance of the per-satellite phase error (rad^2).
    pub phase_error_var: f64,
}

impl ArrayConfig {
    pub fn new(
        num_satellites: u32,
        antennas_per_satellite: u32,
        phase_error_var: f64,
    ) -> Result<Self, EnergyError> {
        if num_satellites < 1 {
            return Err(EnergyError::OutOfRange("num_satellites", num_satellites as f64));
        }
        if antennas_per_satellite < 1 {
            return Err(EnergyError::OutOfRange(
                "antennas_per_satellite",
                antennas_per_satellite as f64,
            ));
        }
        if !phase_error_var.is_finite() || phase_error_var < 0.0 {
            return Err(EnergyError::OutOfRange("phase_error_var", phase_error_var));
        }
        Ok(Self {
            num_satellites,
            antennas_per_satellite,
            phase_error_var,
        })
    }
}

/// Half-pass (zenith to window edge) vs full symmetric pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PassMode {
    Half,
    #[default]
    Full,
}

/// Coherent MRT gain convention: the displayed `M N^2` factor (default) or the
/// `(M N)^2` reading of "square of the total number of antennas".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum GainConvention {
    #[default]
    #[serde(rename = "MN2")]
    Mn2,
    #[serde(rename = "(MN)^2")]
    MnSquared,
}

impl std::str::FromStr for GainConvention {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "MN2" | "mn2" => Ok(Self::Mn2),
            "(MN)^2" | "(mn)^2" | "MN_squared" => Ok(Self::MnSquared),
            other => Err(format!("unknown gain convention '{other}' (expected MN2 or (MN)^2)")),
        }
    }
}

impl std::str::FromStr for PassMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "half" => Ok(Self::Half),
            "full" => Ok(Self::Full),
            other => Err(format!("unknown pass mode '{other}' (expected half or full)")),
        }
    }
}

/// Options shared by the pass pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PassOptions {
    pub pass_mode: PassMode,
    pub gain_convention: GainConvention,
}

/// Cut-off distance: finite when the sensitivity threshold binds, unbounded
/// for an ideal (zero-threshold) circuit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CutoffDistance {
    Finite(f64),
    Unbounded,
}

impl CutoffDistance {
    /// Distance in metres; `f64::INFINITY` for the unbounded case.
    pub fn distance_m(&self) -> f64 {
        match self {
            Self::Finite(d) => *d,
            Self::Unbounded => f64::INFINITY,
        }
    }
}

/// Which constraint closed the charging window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WindowLimit {
    Sensitivity,
    Horizon,
    /// No charging opportunity at all (window empty or no visibility).
    None,
}

/// Outcome of one satellite pass.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PassResult {
    /// Half-pass charging window T (s).
    pub window_s: f64,
    /// Cut-off distance d_c (m); infinite for an ideal circuit.
    pub cutoff_distance_m: f64,
    /// Cut-off angle theta_c (rad), clamped to [0, pi].
    pub cutoff_angle_rad: f64,
    /// Harvested energy E_h (J) for the configured pass mode.
    pub harvested_j: f64,
    /// MRT upper bound E_hu (J): full-pass, phi = 0, zero phase error.
    pub upper_bound_j: f64,
    /// Charging efficiency eta_c = E_h / E_h(P_th = 0).
    pub efficiency: f64,
    /// Constraint that closed the window.
    pub window_limited_by: WindowLimit,
    /// Received power at closest approach (W).
    pub peak_received_w: f64,
    /// True when the peak received power exceeds the -3 dBm reference
    /// saturation level of the harvester circuit.
    pub saturation_warning: bool,
}

/// Energy coefficient mu = eta_h P_t G_T G_R (lambda / 4 pi)^2 alpha_s beta_s (W m^2).
pub fn mu_coefficient(link: &LinkBudget, approx: &GammaApprox) -> f64 {
    let lam = link.wavelength_m();
    link.harvest_efficiency
        * link.tx_power_w
        * link.tx_gain
        * link.rx_gain
        * lam
        * lam
        / (4.0 * PI * 4.0 * PI)
        * mean_channel_power(approx)
}

/// Mean received power at slant range `distance_m` (W). Excludes the
/// harvester efficiency; `array_gain` scales the effective EIRP.
pub fn received_power(
    link: &LinkBudget,
    approx: &GammaApprox,
    distance_m: f64,
    array_gain: f64,
) -> Result<f64, EnergyError> {
    if !(distance_m > 0.0) {
        return Err(EnergyError::InvalidParam("distance_m", distance_m));
    }
    let ratio = link.wavelength_m() / (4.0 * PI * distance_m);
    Ok(array_gain
        * link.tx_power_w
        * link.tx_gain
        * link.rx_gain
        * ratio
        * ratio
        * mean_channel_power(approx))
}

/// Threshold-gated harvested power (W): zero below P_th, linear above.
pub fn harvested_power(received_w: f64, link: &LinkBudget) -> f64 {
    if received_w < link.sensitivity_w {
        0.0
    } else {
        link.harvest_efficiency * received_w
    }
}

/// Slant range at which the received power falls to exactly P_th.
///
/// d_c = (lambda / 4 pi) sqrt(array_gain P_t G_T G_R alpha_s beta_s / P_th)
pub fn cutoff_distance(link: &LinkBudget, approx: &GammaApprox, array_gain: f64) -> CutoffDistance {
    if link.sensitivity_w == 0.0 {
        return CutoffDistance::Unbounded;
    }
    let d = link.wavelength_m() / (4.0 * PI)
        * (array_gain * link.tx_power_w * link.tx_gain * link.rx_gain * mean_channel_power(approx)
            / link.sensitivity_w)
            .sqrt();
    CutoffDistance::Finite(d)
}

/// Array gain of the satellite grid under the given convention.
///
/// The cross-satellite coherent terms are attenuated by exp(-sigma_psi^2);
/// intra-satellite antennas stay perfectly phase aligned. Under the default
/// MN2 convention the gain is `M (N + N(N-1) exp(-sigma^2))`, which recovers
/// `M N^2` at zero phase error and `M N` (incoherent addition) as the error
/// variance grows.
pub fn array_gain_with(cfg: &ArrayConfig, convention: GainConvention) -> f64 {
    let n = cfg.num_satellites as f64;
    let m = cfg.antennas_per_satellite as f64;
    let per_sat = match convention {
        GainConvention::Mn2 => m,
        GainConvention::MnSquared => m * m,
    };
    per_sat * (n + n * (n - 1.0) * (-cfg.phase_error_var).exp())
}

/// Array gain under the default MN2 convention.
pub fn array_gain(cfg: &ArrayConfig) -> f64 {
    array_gain_with(cfg, GainConvention::Mn2)
}

/// Fraction of the coherent array gain surviving phase misalignment:
/// `(1 + (N-1) exp(-sigma^2)) / N`. Independent of M.
pub fn misalignment_efficiency(cfg: &ArrayConfig) -> f64 {
    let n = cfg.num_satellites as f64;
    (1.0 + (n - 1.0) * (-cfg.phase_error_var).exp()) / n
}

/// Closed-form pass energy (J) over the window `[0, T]` (half) or `[-T, T]`
/// (full), with `mu` already carrying any array gain.
pub fn closed_form_energy(
    geom: &OrbitGeometry,
    mu: f64,
    window_s: f64,
    pass_mode: PassMode,
) -> Result<f64, EnergyError> {
    if !(window_s >= 0.0) {
        return Err(EnergyError::OutOfRange("window_s", window_s));
    }
    if window_s == 0.0 {
        return Ok(0.0);
    }
    let omega = angular_velocity(geom);
    let x = omega * window_s;
    if x >= PI {
        return Err(EnergyError::WindowTooLong(x));
    }
    let a = geom.const_a();
    let b = geom.const_b();
    // sqrt(A^2 - B^2) via the factored form; A - B = (R+H-R cos phi)^2-ish > 0
    let sqrt_a2b2 = ((a - b) * (a + b)).sqrt();
    let half = 2.0 * mu / (omega * sqrt_a2b2)
        * (((a + b) / (a - b)).sqrt() * (0.5 * x).tan()).atan();
    Ok(match pass_mode {
        PassMode::Half => half,
        PassMode::Full => 2.0 * half,
    })
}

/// Pass energy (J) by adaptive quadrature of `mu / (A - B cos(omega t))` over
/// `[0, T]`; the independent oracle for [`closed_form_energy`].
pub fn numeric_energy(
    geom: &OrbitGeometry,
    mu: f64,
    window_s: f64,
    pass_mode: PassMode,
    rel_tol: f64,
) -> Result<f64, EnergyError> {
    if !(window_s >= 0.0) {
        return Err(EnergyError::OutOfRange("window_s", window_s));
    }
    let omega = angular_velocity(geom);
    let a = geom.const_a();
    let b = geom.const_b();
    let half = quad::integrate(|t| mu / (a - b * (omega * t).cos()), 0.0, window_s, rel_tol)?;
    Ok(match pass_mode {
        PassMode::Half => half,
        PassMode::Full => 2.0 * half,
    })
}

/// Phi = 0 closed form (half pass):
/// `mu (pi - 2 atan(H cot(omega T / 2) / (H + 2R))) / (H^2 omega + 2 H R omega)`.
///
/// Agrees with [`closed_form_energy`] at phi = 0 through the complementary
/// arctangent identity.
pub fn phi_zero_energy(geom: &OrbitGeometry, mu: f64, window_s: f64) -> f64 {
    if window_s == 0.0 {
        return 0.0;
    }
    let omega = angular_velocity(geom);
    let h = geom.altitude_m;
    let r = geom.earth_radius_m;
    let cot = 1.0 / (0.5 * omega * window_s).tan();
    mu * (PI - 2.0 * (h * cot / (h + 2.0 * r)).atan()) / (h * h * omega + 2.0 * h * r * omega)
}

/// Theoretical MRT upper bound E_hu (J): the full symmetric pass at phi = 0
/// with the zero-phase-error coherent gain `M N^2` applied to `mu`.
pub fn mrt_upper_bound(
    geom: &OrbitGeometry,
    mu: f64,
    cfg: &ArrayConfig,
    window_s: f64,
) -> f64 {
    let n = cfg.num_satellites as f64;
    let m = cfg.antennas_per_satellite as f64;
    let zenith = OrbitGeometry {
        azimuth_offset_rad: 0.0,
        ..*geom
    };
    2.0 * m * n * n * phi_zero_energy(&zenith, mu, window_s)
}

/// Full pass pipeline: window from the sensitivity and horizon limits, then
/// the closed-form energy, efficiency and diagnostics.
pub fn compute_pass(
    geom: &OrbitGeometry,
    link: &LinkBudget,
    fading: &FadingParams,
    cfg: &ArrayConfig,
    opts: PassOptions,
) -> Result<PassResult, EnergyError> {
    let approx = gamma_params(fading);
    let gain = array_gain_with(cfg, opts.gain_convention);
    let d_c = cutoff_distance(link, &approx, gain);
    let theta_c = cutoff_angle(geom, d_c.distance_m());
    let theta_h = horizon_angle(geom);
    let theta = theta_c.min(theta_h);
    let omega = angular_velocity(geom);
    let window_s = theta / omega;

    let limit = if theta <= 0.0 {
        WindowLimit::None
    } else if theta_c < theta_h {
        WindowLimit::Sensitivity
    } else {
        WindowLimit::Horizon
    };

    let mu_gained = mu_coefficient(link, &approx) * gain;
    let harvested_j = closed_form_energy(geom, mu_gained, window_s, opts.pass_mode)?;
    let ideal_j = closed_form_energy(geom, mu_gained, theta_h / omega, opts.pass_mode)?;
    let efficiency = if ideal_j > 0.0 { harvested_j / ideal_j } else { 0.0 };

    // Bound under the same convention: the (MN)^2 reading carries an extra M.
    let convention_scale = match opts.gain_convention {
        GainConvention::Mn2 => 1.0,
        GainConvention::MnSquared => cfg.antennas_per_satellite as f64,
    };
    let upper_bound_j =
        convention_scale * mrt_upper_bound(geom, mu_coefficient(link, &approx), cfg, window_s);

    let peak_received_w = received_power(link, &approx, geom.closest_approach_m(), gain)?;

    Ok(PassResult {
        window_s,
        cutoff_distance_m: d_c.distance_m(),
        cutoff_angle_rad: theta_c,
        harvested_j,
        upper_bound_j,
        efficiency,
        window_limited_by: limit,
        peak_received_w,
        saturation_warning: peak_received_w > SATURATION_WARN_W,
    })
}

/// Charging efficiency eta_c = E_h(P_th) / E_h(P_th = 0) over the same pass.
pub fn charging_efficiency(
    geom: &OrbitGeometry,
    link: &LinkBudget,
    fading: &FadingParams,
    cfg: &ArrayConfig,
    opts: PassOptions,
) -> Result<f64, EnergyError> {
    Ok(compute_pass(geom, link, fading, cfg, opts)?.efficiency)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{dbm_to_watts, watts_to_dbm};
    use proptest::prelude::*;

    fn baseline_geom(phi_rad: f64) -> OrbitGeometry {
        OrbitGeometry::new(6.378e6, 200e3, 6.67e-11, 5.97e24, phi_rad).unwrap()
    }

    fn baseline_link(sensitivity_w: f64) -> LinkBudget {
        LinkBudget::new(10.0, 1e5, 10.0, 868e6, 0.7, sensitivity_w).unwrap()
    }

    fn baseline_fading() -> FadingParams {
        FadingParams::new(19.4, 0.158, 1.29).unwrap()
    }

    #[test]
    fn link_budget_validation() {
        assert!(LinkBudget::new(0.0, 1e5, 10.0, 868e6, 0.7, 0.0).is_err());
        assert!(LinkBudget::new(10.0, 1e5, 10.0, 868e6, 0.0, 0.0).is_err());
        assert!(LinkBudget::new(10.0, 1e5, 10.0, 868e6, 1.1, 0.0).is_err());
        assert!(LinkBudget::new(10.0, 1e5, 10.0, 868e6, 0.7, -1.0).is_err());
    }

    #[test]
    fn mu_scales_inverse_square_in_frequency() {
        let approx = gamma_params(&baseline_fading());
        let mu1 = mu_coefficient(&baseline_link(0.0), &approx);
        let double_f = LinkBudget::new(10.0, 1e5, 10.0, 2.0 * 868e6, 0.7, 0.0).unwrap();
        let mu2 = mu_coefficient(&double_f, &approx);
        assert!((mu1 / mu2 - 4.0).abs() < 1e-12);
    }

    #[test]
    fn mu_constructed_identity() {
        // eta = 1 and P_t G_T G_R alpha beta = (4 pi)^2 / lambda^2 gives mu = 1
        let approx = GammaApprox { alpha_s: 1.0, beta_s: 1.0 };
        let lam = units::wavelength_m(868e6);
        let pt = (4.0 * PI).powi(2) / (lam * lam);
        let link = LinkBudget::new(pt, 1.0, 1.0, 868e6, 1.0, 0.0).unwrap();
        assert!((mu_coefficient(&link, &approx) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mu_baseline_value() {
        // Independent evaluation: 0.7 * 10 * 1e5 * 10 * lambda^2/(4pi)^2 * 1.606
        let approx = gamma_params(&baseline_fading());
        let lam = units::wavelength_m(868e6);
        let expected = 0.7 * 1e7 * lam * lam / (4.0 * PI).powi(2) * 1.606;
        let mu = mu_coefficient(&baseline_link(0.0), &approx);
        assert!((mu - expected).abs() / expected < 1e-12);
        assert!(mu > 8000.0 && mu < 9000.0);
    }

    #[test]
    fn received_power_spot_check_minus_3_dbm() {
        // N=20, M=4 coherent grid at d = 200 km under the default link budget.
        let approx = gamma_params(&baseline_fading());
        let cfg = ArrayConfig::new(20, 4, 0.0).unwrap();
        let p = received_power(&baseline_link(0.0), &approx, 200e3, array_gain(&cfg)).unwrap();
        let dbm = watts_to_dbm(p);
        assert!((dbm - (-3.0)).abs() < 1.0, "got {dbm} dBm");
    }

    #[test]
    fn received_power_inverse_square() {
        let approx = gamma_params(&baseline_fading());
        let link = baseline_link(0.0);
        let p1 = received_power(&link, &approx, 200e3, 1.0).unwrap();
        let p2 = received_power(&link, &approx, 400e3, 1.0).unwrap();
        assert!((p1 / p2 - 4.0).abs() < 1e-12);
        assert!(received_power(&link, &approx, 0.0, 1.0).is_err());
    }

    #[test]
    fn received_power_at_cutoff_equals_threshold() {
        let approx = gamma_params(&baseline_fading());
        let link = baseline_link(dbm_to_watts(-10.0));
        let gain = 400.0;
        match cutoff_distance(&link, &approx, gain) {
            CutoffDistance::Finite(d) => {
                let p = received_power(&link, &approx, d, gain).unwrap();
                assert!((p - link.sensitivity_w).abs() / link.sensitivity_w < 1e-12);
            }
            CutoffDistance::Unbounded => panic!("expected finite cutoff"),
        }
    }

    #[test]
    fn harvested_power_threshold_gate() {
        let link = baseline_link(1e-4);
        assert_eq!(harvested_power(1e-4 - 1e-12, &link), 0.0);
        assert!((harvested_power(1e-4, &link) - 0.7e-4).abs() < 1e-18);
        let ideal = baseline_link(0.0);
        assert!((harvested_power(1e-3, &ideal) - 0.7e-3).abs() < 1e-18);
    }

    #[test]
    fn cutoff_distance_scaling_and_unbounded() {
        let approx = gamma_params(&baseline_fading());
        let link = baseline_link(1e-4);
        let d1 = cutoff_distance(&link, &approx, 100.0).distance_m();
        let d4 = cutoff_distance(&link, &approx, 400.0).distance_m();
        assert!((d4 / d1 - 2.0).abs() < 1e-12);
        assert_eq!(
            cutoff_distance(&baseline_link(0.0), &approx, 100.0),
            CutoffDistance::Unbounded
        );
    }

    #[test]
    fn closed_form_zero_window() {
        let geom = baseline_geom(0.0);
        assert_eq!(closed_form_energy(&geom, 1.0, 0.0, PassMode::Full).unwrap(), 0.0);
    }

    #[test]
    fn closed_form_rejects_overlong_window() {
        let geom = baseline_geom(0.0);
        let t = PI / angular_velocity(&geom);
        assert!(matches!(
            closed_form_energy(&geom, 1.0, t, PassMode::Half),
            Err(EnergyError::WindowTooLong(_))
        ));
    }

    #[test]
    fn closed_form_matches_phi_zero_form() {
        let geom = baseline_geom(0.0);
        let t = 0.6 * horizon_angle(&geom) / angular_velocity(&geom);
        let general = closed_form_energy(&geom, 1.0, t, PassMode::Half).unwrap();
        let special = phi_zero_energy(&geom, 1.0, t);
        assert!((general - special).abs() / special < 1e-12);
    }

    #[test]
    fn closed_form_matches_quadrature() {
        let geom = baseline_geom(1.0f64.to_radians());
        let t = 0.8 * horizon_angle(&geom) / angular_velocity(&geom);
        let cf = closed_form_energy(&geom, 8493.0, t, PassMode::Full).unwrap();
        let nq = numeric_energy(&geom, 8493.0, t, PassMode::Full, 1e-10).unwrap();
        assert!((cf - nq).abs() / nq < 1e-9);
    }

    #[test]
    fn quadrature_constant_integrand_limit() {
        // With B forced to zero the integrand is constant and the integral is
        // mu * T / A; exercises the quadrature path the pass never hits.
        let geom = baseline_geom(0.0);
        let a = geom.const_a();
        let mu = 8493.0;
        let t = 100.0;
        let v = quad::integrate(|_| mu / a, 0.0, t, 1e-10).unwrap();
        assert!((v - mu * t / a).abs() / (mu * t / a) < 1e-12);
    }

    #[test]
    fn array_gain_values() {
        assert_eq!(array_gain(&ArrayConfig::new(1, 1, 0.0).unwrap()), 1.0);
        assert_eq!(array_gain(&ArrayConfig::new(10, 4, 0.0).unwrap()), 400.0);
        let incoherent = array_gain(&ArrayConfig::new(10, 4, 1e9).unwrap());
        assert!((incoherent - 40.0).abs() < 1e-9);
        // always within [MN, MN^2]
        let mid = array_gain(&ArrayConfig::new(10, 4, 1.0).unwrap());
        assert!(mid > 40.0 && mid < 400.0);
        // (MN)^2 convention at zero error
        let sq = array_gain_with(&ArrayConfig::new(10, 4, 0.0).unwrap(), GainConvention::MnSquared);
        assert_eq!(sq, 1600.0);
    }

    #[test]
    fn misalignment_efficiency_values() {
        assert_eq!(misalignment_efficiency(&ArrayConfig::new(10, 4, 0.0).unwrap()), 1.0);
        assert_eq!(misalignment_efficiency(&ArrayConfig::new(1, 4, 5.0).unwrap()), 1.0);
        let v = misalignment_efficiency(&ArrayConfig::new(10, 1, 1.0).unwrap());
        let expected = (1.0 + 9.0 * (-1.0f64).exp()) / 10.0;
        assert!((v - expected).abs() < 1e-15);
        assert!((expected - 0.431).abs() < 1e-3);
        // limit 1/N as the variance grows
        let lim = misalignment_efficiency(&ArrayConfig::new(10, 1, 1e9).unwrap());
        assert!((lim - 0.1).abs() < 1e-9);
    }

    #[test]
    fn mrt_upper_bound_scaling() {
        let geom = baseline_geom(0.0);
        let t = 0.5 * horizon_angle(&geom) / angular_velocity(&geom);
        let e11 = mrt_upper_bound(&geom, 1.0, &ArrayConfig::new(1, 1, 0.0).unwrap(), t);
        let e21 = mrt_upper_bound(&geom, 1.0, &ArrayConfig::new(2, 1, 0.0).unwrap(), t);
        let e12 = mrt_upper_bound(&geom, 1.0, &ArrayConfig::new(1, 2, 0.0).unwrap(), t);
        assert!((e21 / e11 - 4.0).abs() < 1e-12);
        assert!((e12 / e11 - 2.0).abs() < 1e-12);
        // N = M = 1 equals twice the phi=0 half-pass form
        assert!((e11 - 2.0 * phi_zero_energy(&geom, 1.0, t)).abs() / e11 < 1e-12);
    }

    #[test]
    fn compute_pass_no_window() {
        // Threshold so high the cut-off lies inside the closest approach.
        let geom = baseline_geom(0.0);
        let link = baseline_link(1.0);
        let cfg = ArrayConfig::new(1, 1, 0.0).unwrap();
        let pass =
            compute_pass(&geom, &link, &baseline_fading(), &cfg, PassOptions::default()).unwrap();
        assert_eq!(pass.window_s, 0.0);
        assert_eq!(pass.harvested_j, 0.0);
        assert_eq!(pass.efficiency, 0.0);
        assert_eq!(pass.window_limited_by, WindowLimit::None);
    }

    #[test]
    fn compute_pass_ideal_is_horizon_limited() {
        let geom = baseline_geom(0.0);
        let link = baseline_link(0.0);
        let cfg = ArrayConfig::new(10, 4, 0.0).unwrap();
        let pass =
            compute_pass(&geom, &link, &baseline_fading(), &cfg, PassOptions::default()).unwrap();
        assert_eq!(pass.window_limited_by, WindowLimit::Horizon);
        assert_eq!(pass.efficiency, 1.0);
        assert!(pass.cutoff_distance_m.is_infinite());
        assert!(pass.harvested_j > 0.0);
        assert!(pass.harvested_j <= pass.upper_bound_j * (1.0 + 1e-9));
    }

    #[test]
    fn compute_pass_sensitivity_limited() {
        let geom = baseline_geom(0.0);
        let link = baseline_link(dbm_to_watts(-10.0));
        let cfg = ArrayConfig::new(20, 4, 0.0).unwrap();
        let pass =
            compute_pass(&geom, &link, &baseline_fading(), &cfg, PassOptions::default()).unwrap();
        assert_eq!(pass.window_limited_by, WindowLimit::Sensitivity);
        assert!(pass.efficiency > 0.0 && pass.efficiency < 1.0);
        // window consistency: slant range at the window edge equals d_c
        let d_edge = crate::geometry::slant_range(&geom, pass.window_s);
        assert!((d_edge - pass.cutoff_distance_m).abs() / pass.cutoff_distance_m < 1e-9);
    }

    #[test]
    fn charging_efficiency_bounds() {
        let geom = baseline_geom(0.0);
        let fading = baseline_fading();
        let cfg = ArrayConfig::new(10, 4, 0.0).unwrap();
        let ideal =
            charging_efficiency(&geom, &baseline_link(0.0), &fading, &cfg, PassOptions::default())
                .unwrap();
        assert_eq!(ideal, 1.0);
        let dead =
            charging_efficiency(&geom, &baseline_link(1.0), &fading, &cfg, PassOptions::default())
                .unwrap();
        assert_eq!(dead, 0.0);
    }

    proptest! {
        #[test]
        fn closed_form_agrees_with_quadrature(
            alt_km in 160.0f64..2000.0,
            phi_deg in 0.0f64..5.0,
            frac in 0.01f64..1.0,
            mu in 1.0f64..1e7,
        ) {
            let geom = OrbitGeometry::new(
                6.378e6, alt_km * 1e3, 6.67e-11, 5.97e24, phi_deg.to_radians(),
            ).unwrap();
            let t = frac * horizon_angle(&geom) / angular_velocity(&geom);
            prop_assume!(t > 0.0);
            let cf = closed_form_energy(&geom, mu, t, PassMode::Half).unwrap();
            let nq = numeric_energy(&geom, mu, t, PassMode::Half, 1e-10).unwrap();
            prop_assert!((cf - nq).abs() / nq.max(f64::MIN_POSITIVE) < 1e-9);
        }

        #[test]
        fn closed_form_monotone_in_window(
            alt_km in 160.0f64..2000.0,
            phi_deg in 0.0f64..5.0,
            frac in 0.01f64..0.99,
        ) {
            let geom = OrbitGeometry::new(
                6.378e6, alt_km * 1e3, 6.67e-11, 5.97e24, phi_deg.to_radians(),
            ).unwrap();
            let t_max = horizon_angle(&geom) / angular_velocity(&geom);
            let e1 = closed_form_energy(&geom, 1.0, frac * t_max, PassMode::Full).unwrap();
            let e2 = closed_form_energy(&geom, 1.0, t_max, PassMode::Full).unwrap();
            prop_assert!(e1 <= e2 + 1e-18);
        }

        #[test]
        fn pass_energy_never_exceeds_mrt_bound(
            phi_deg in 0.0f64..5.0,
            sigma in 0.0f64..4.0,
            n in 1u32..30,
            m in 1u32..8,
            pth_dbm in -40.0f64..0.0,
        ) {
            let geom = OrbitGeometry::new(
                6.378e6, 200e3, 6.67e-11, 5.97e24, phi_deg.to_radians(),
            ).unwrap();
            let link = baseline_link(dbm_to_watts(pth_dbm));
            let cfg = ArrayConfig::new(n, m, sigma).unwrap();
            let pass = compute_pass(
                &geom, &link, &baseline_fading(), &cfg, PassOptions::default(),
            ).unwrap();
            prop_assert!(pass.harvested_j <= pass.upper_bound_j * (1.0 + 1e-9) + 1e-300);
            prop_assert!(pass.efficiency >= 0.0 && pass.efficiency <= 1.0 + 1e-12);
        }
    }
}
