//! Self-validation: the closed-form pass energy against the quadrature
//! oracle, the phi = 0 arctangent identity, and the gamma channel surrogate
//! against Monte-Carlo sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::channel::{gamma_params, mean_channel_power, sample_channel_power, FadingParams};
use crate::energy::{closed_form_energy, numeric_energy, phi_zero_energy, PassMode};
use crate::geometry::{angular_velocity, horizon_angle, OrbitGeometry};

/// One validation check: name, pass flag, and a short diagnostic.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn random_geometry(rng: &mut ChaCha8Rng) -> OrbitGeometry {
    let alt_km = rng.gen_range(160.0..2000.0);
    let phi_deg: f64 = rng.gen_range(0.0..5.0);
    OrbitGeometry::new(6.378e6, alt_km * 1e3, 6.67e-11, 5.97e24, phi_deg.to_radians())
        .expect("random geometry in valid range")
}

/// Closed form vs adaptive quadrature over `tuples` random parameter points.
pub fn check_closed_form_vs_quadrature(tuples: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..tuples {
        let geom = random_geometry(&mut rng);
        let t_max = horizon_angle(&geom) / angular_velocity(&geom);
        let t = rng.gen_range(1e-6..=1.0) * t_max;
        let mu = 10f64.powf(rng.gen_range(0.0..7.0));
        let cf = closed_form_energy(&geom, mu, t, PassMode::Half).expect("valid window");
        let nq = numeric_energy(&geom, mu, t, PassMode::Half, 1e-10).expect("quadrature");
        let rel = (cf - nq).abs() / nq.max(f64::MIN_POSITIVE);
        worst = worst.max(rel);
    }
    Check {
        name: format!("closed_form_vs_quadrature({tuples})"),
        passed: worst <= 1e-9,
        detail: format!("worst relative error {worst:.3e} (bound 1e-9)"),
    }
}

/// General closed form vs the phi = 0 arctangent form over random (H, T).
pub fn check_phi_zero_identity(pairs: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..pairs {
        let alt_km = rng.gen_range(160.0..2000.0);
        let geom =
            OrbitGeometry::new(6.378e6, alt_km * 1e3, 6.67e-11, 5.97e24, 0.0).expect("geometry");
        let t_max = horizon_angle(&geom) / angular_velocity(&geom);
        let t = rng.gen_range(1e-3..=1.0) * t_max;
        let general = closed_form_energy(&geom, 1.0, t, PassMode::Half).expect("valid window");
        let special = phi_zero_energy(&geom, 1.0, t);
        let rel = (general - special).abs() / special.max(f64::MIN_POSITIVE);
        worst = worst.max(rel);
    }
    Check {
        name: format!("phi_zero_identity({pairs})"),
        passed: worst <= 1e-12,
        detail: format!("worst relative error {worst:.3e} (bound 1e-12)"),
    }
}

/// Monte-Carlo sample mean of the gamma surrogate against alpha_s beta_s,
/// plus the exact mean identity alpha_s beta_s = 2 b0 + Omega.
pub fn check_channel_oracle(samples: usize, seed: u64) -> Check {
    let fading = FadingParams::new(19.4, 0.158, 1.29).expect("fading");
    let approx = gamma_params(&fading);
    let analytic = mean_channel_power(&approx);
    let identity_err = (analytic - (2.0 * fading.b0 + fading.omega)).abs() / analytic;
    let draws = sample_channel_power(&approx, seed, samples).expect("sampler");
    let mean = draws.iter().sum::<f64>() / samples as f64;
    let se = approx.alpha_s.sqrt() * approx.beta_s / (samples as f64).sqrt();
    let sigmas = (mean - analytic).abs() / se;
    Check {
        name: format!("channel_monte_carlo({samples})"),
        passed: sigmas <= 3.0 && identity_err <= 1e-12,
        detail: format!(
            "sample mean {mean:.6} vs {analytic:.6} ({sigmas:.2} sigma); \
             mean identity error {identity_err:.3e}"
        ),
    }
}

/// Run the full self-validation suite.
pub fn run_validation(tuples: usize, seed: u64) -> ValidationReport {
    ValidationReport {
        checks: vec![
            check_closed_form_vs_quadrature(tuples, seed),
            check_phi_zero_identity(100, seed.wrapping_add(1)),
            check_channel_oracle(1_000_000, seed.wrapping_add(2)),
        ],
    }
}
