//! Orbital pass geometry for a circular LEO orbit over a fixed ground device.
//!
//! The satellite grid moves on a circular orbit of radius `R + H`; the device
//! sits on the surface at an azimuth offset `phi` from the orbit's ground-track
//! plane. Time `t = 0` is the zenith-crossing (closest-approach) instant and
//! the pass is symmetric about it.
//!
//! ```
//! use satwet::geometry::{angular_velocity, charging_window, horizon_angle, OrbitGeometry};
//!
//! let geom = OrbitGeometry::new(6.378e6, 200e3, 6.67e-11, 5.97e24, 0.0).unwrap();
//! let theta_h = horizon_angle(&geom);
//! assert!((theta_h - 0.2472).abs() < 1e-4);
//!
//! // Ideal circuit: pass an unbounded cut-off, the horizon limits the window.
//! let window = charging_window(&geom, f64::INFINITY);
//! assert!((window - theta_h / angular_velocity(&geom)).abs() < 1e-12);
//! assert!(window > 200.0 && window < 220.0); // seconds, half pass
//! ```

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("{0} must be strictly positive, got {1}")]
    NonPositive(&'static str, f64),
    #[error("azimuth offset must lie in [0, pi/2), got {0} rad")]
    AzimuthOutOfRange(f64),
    #[error("{0} must be finite")]
    NonFinite(&'static str),
}

/// Circular-orbit pass geometry: Earth constants, satellite altitude and the
/// device's azimuth offset from the ground-track plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrbitGeometry {
    /// Earth radius R (m).
    pub earth_radius_m: f64,
    /// Satellite height H above the surface (m).
    pub altitude_m: f64,
    /// Gravitational constant G (m^3 kg^-1 s^-2).
    pub grav_const: f64,
    /// Earth mass M_e (kg).
    pub earth_mass_kg: f64,
    /// Azimuth offset phi of the device from the orbit plane (rad), in [0, pi/2).
    pub azimuth_offset_rad: f64,
}

impl OrbitGeometry {
    pub fn new(
        earth_radius_m: f64,
        altitude_m: f64,
        grav_const: f64,
        earth_mass_kg: f64,
        azimuth_offset_rad: f64,
    ) -> Result<Self, GeometryError> {
        for (name, v) in [
            ("earth_radius_m", earth_radius_m),
            ("altitude_m", altitude_m),
            ("grav_const", grav_const),
            ("earth_mass_kg", earth_mass_kg),
        ] {
            if !v.is_finite() {
                return Err(GeometryError::NonFinite(name));
            }
            if v <= 0.0 {
                return Err(GeometryError::NonPositive(name, v));
            }
        }
        if !azimuth_offset_rad.is_finite()
            || azimuth_offset_rad < 0.0
            || azimuth_offset_rad >= PI / 2.0
        {
            return Err(GeometryError::AzimuthOutOfRange(azimuth_offset_rad));
        }
        Ok(Self {
            earth_radius_m,
            altitude_m,
            grav_const,
            earth_mass_kg,
            azimuth_offset_rad,
        })
    }

    /// Orbit radius R + H (m).
    pub fn orbit_radius_m(&self) -> f64 {
        self.earth_radius_m + self.altitude_m
    }

    /// Denominator constant A = (R+H)^2 + R^2 of the pass integrand.
    pub fn const_a(&self) -> f64 {
        let rh = self.orbit_radius_m();
        rh * rh + self.earth_radius_m * self.earth_radius_m
    }

    /// Oscillating constant B = 2 R (R+H) cos(phi) of the pass integrand.
    pub fn const_b(&self) -> f64 {
        2.0 * self.earth_radius_m * self.orbit_radius_m() * self.azimuth_offset_rad.cos()
    }

    /// Slant range at closest approach, sqrt(A - B) (m). Equals H at phi = 0.
    pub fn closest_approach_m(&self) -> f64 {
        (self.const_a() - self.const_b()).sqrt()
    }
}

/// Satellite angular velocity omega = sqrt(G M_e / (R+H)^3) (rad/s).
pub fn angular_velocity(geom: &OrbitGeometry) -> f64 {
    let rh = geom.orbit_radius_m();
    (geom.grav_const * geom.earth_mass_kg / (rh * rh * rh)).sqrt()
}

/// Slant range d(t) from the satellite to the device (m), with `t` measured
/// from the zenith crossing. Even in `t`.
///
/// d(t) = sqrt((R+H)^2 + R^2 - 2 (R+H) R cos(phi) cos(omega t))
pub fn slant_range(geom: &OrbitGeometry, t_s: f64) -> f64 {
    let omega = angular_velocity(geom);
    (geom.const_a() - geom.const_b() * (omega * t_s).cos()).sqrt()
}

/// Orbital angle at which the satellite crosses the device's geometric horizon
/// (zero elevation), i.e. where the slant range reaches sqrt((R+H)^2 - R^2).
///
/// theta_h = arccos(R / ((R+H) cos(phi))). Returns 0 when the pass never rises
/// above the horizon (cos argument > 1).
pub fn horizon_angle(geom: &OrbitGeometry) -> f64 {
    let arg = geom.earth_radius_m / (geom.orbit_radius_m() * geom.azimuth_offset_rad.cos());
    if arg >= 1.0 {
        0.0
    } else {
        arg.acos()
    }
}

/// Orbital angle at which the slant range equals `cutoff_distance_m`.
///
/// theta_c = arccos((A - d_c^2) / B). The arccos argument is clamped: > 1
/// (cut-off inside the closest approach) yields 0, < -1 (cut-off beyond the
/// antipode) yields pi. `f64::INFINITY` is accepted and yields pi.
pub fn cutoff_angle(geom: &OrbitGeometry, cutoff_distance_m: f64) -> f64 {
    debug_assert!(cutoff_distance_m >= 0.0);
    let arg = (geom.const_a() - cutoff_distance_m * cutoff_distance_m) / geom.const_b();
    if arg > 1.0 {
        0.0
    } else if arg < -1.0 {
        PI
    } else {
        arg.acos()
    }
}

/// Half-pass charging window T = min(theta_c, theta_h) / omega (s).
///
/// Zero means no charging opportunity. Pass `f64::INFINITY` for an ideal
/// (zero-threshold) circuit; the window is then horizon-limited.
pub fn charging_window(geom: &OrbitGeometry, cutoff_distance_m: f64) -> f64 {
    let theta = cutoff_angle(geom, cutoff_distance_m).min(horizon_angle(geom));
    theta / angular_velocity(geom)
}
