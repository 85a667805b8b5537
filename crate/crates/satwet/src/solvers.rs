//! Feasibility inversion of the pass model.
//!
//! A parameter point is feasible when the pass harvests strictly positive
//! energy, i.e. the cut-off distance clears the closest approach. Each solver
//! exploits monotonicity of that predicate in its free variable: doubling plus
//! binary search for the integer constellation size, bisection for carrier
//! frequency and altitude.
//!
//! ```
//! use satwet::scenario::Params;
//! use satwet::solvers::{min_satellites, Feasibility, SearchLimits};
//!
//! let mut p = Params::default();
//! p.set("sensitivity_dbm", "-10").unwrap();
//! let n = min_satellites(&p, &SearchLimits::default()).unwrap();
//! assert!(matches!(n, Feasibility::Found { value } if value >= 9 && value <= 11));
//! ```

use serde::Serialize;

use crate::energy::EnergyError;
use crate::scenario::Params;

/// Search caps and bisection resolutions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchLimits {
    /// Largest constellation size tried before reporting a cap outcome.
    pub max_satellites: u32,
    /// Frequency search range (Hz).
    pub freq_range_hz: (f64, f64),
    /// Frequency bisection resolution (Hz).
    pub freq_resolution_hz: f64,
    /// Altitude search range (m).
    pub alt_range_m: (f64, f64),
    /// Altitude bisection resolution (m).
    pub alt_resolution_m: f64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_satellites: 10_000,
            freq_range_hz: (100e6, 100e9),
            freq_resolution_hz: 1e6,
            alt_range_m: (160e3, 36_000e3),
            alt_resolution_m: 1e3,
        }
    }
}

/// Solver outcome: a value, or an honest range/cap report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Feasibility<T> {
    /// The boundary value of the feasible region, at the solver's resolution.
    Found { value: T },
    /// Still feasible (max-type) or still infeasible (min-type) at the search cap.
    CapExceeded { cap: T },
    /// Infeasible everywhere in the search range.
    Infeasible,
}

/// Free variable of a feasibility query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FreeVariable {
    NumSatellites,
    CarrierHz,
    AltitudeM,
}

/// A feasibility inversion: every parameter fixed except one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FeasibilityQuery {
    pub fixed: Params,
    pub free: FreeVariable,
    pub limits: SearchLimits,
}

/// Dispatched solver result.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum SolveOutcome {
    Satellites(Feasibility<u32>),
    Frequency(Feasibility<f64>),
    Altitude(Feasibility<f64>),
}

impl FeasibilityQuery {
    pub fn solve(&self) -> Result<SolveOutcome, EnergyError> {
        Ok(match self.free {
            FreeVariable::NumSatellites => {
                SolveOutcome::Satellites(min_satellites(&self.fixed, &self.limits)?)
            }
            FreeVariable::CarrierHz => {
                SolveOutcome::Frequency(max_frequency(&self.fixed, &self.limits)?)
            }
            FreeVariable::AltitudeM => {
                SolveOutcome::Altitude(max_altitude(&self.fixed, &self.limits)?)
            }
        })
    }
}

fn feasible(params: &Params) -> Result<bool, EnergyError> {
    Ok(params.pass()?.harvested_j > 0.0)
}

/// Smallest constellation size with strictly positive harvested energy.
pub fn min_satellites(
    base: &Params,
    limits: &SearchLimits,
) -> Result<Feasibility<u32>, EnergyError> {
    let at = |n: u32| -> Result<bool, EnergyError> {
        let mut p = *base;
        p.array.num_satellites = n;
        feasible(&p)
    };
    if at(1)? {
        return Ok(Feasibility::Found { value: 1 });
    }
    // double until feasible, then binary search the (lo, hi] bracket
    let mut lo = 1u32;
    let mut hi = 2u32;
    while !at(hi)? {
        lo = hi;
        if hi > limits.max_satellites / 2 {
            if hi < limits.max_satellites && at(limits.max_satellites)? {
                hi = limits.max_satellites;
                break;
            }
            return Ok(Feasibility::CapExceeded { cap: limits.max_satellites });
        }
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if at(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Feasibility::Found { value: hi })
}

/// Supremum carrier frequency with strictly positive harvested energy,
/// located by bisection to the configured resolution.
pub fn max_frequency(
    base: &Params,
    limits: &SearchLimits,
) -> Result<Feasibility<f64>, EnergyError> {
    let at = |f: f64| -> Result<bool, EnergyError> {
        let mut p = *base;
        p.link.carrier_hz = f;
        feasible(&p)
    };
    let (f_lo, f_hi) = limits.freq_range_hz;
    bisect_max(at, f_lo, f_hi, limits.freq_resolution_hz)
}

/// Supremum satellite altitude with strictly positive harvested energy,
/// located by bisection to the configured resolution.
pub fn max_altitude(
    base: &Params,
    limits: &SearchLimits,
) -> Result<Feasibility<f64>, EnergyError> {
    let at = |h: f64| -> Result<bool, EnergyError> {
        let mut p = *base;
        p.geometry.altitude_m = h;
        feasible(&p)
    };
    let (h_lo, h_hi) = limits.alt_range_m;
    bisect_max(at, h_lo, h_hi, limits.alt_resolution_m)
}

// Bisect a predicate that is feasible at low values and infeasible at high
// ones; returns the feasible end of the final bracket.
fn bisect_max<F>(at: F, lo0: f64, hi0: f64, resolution: f64) -> Result<Feasibility<f64>, EnergyError>
where
    F: Fn(f64) -> Result<bool, EnergyError>,
{
    if !at(lo0)? {
        return Ok(Feasibility::Infeasible);
    }
    if at(hi0)? {
        return Ok(Feasibility::CapExceeded { cap: hi0 });
    }
    let mut lo = lo0;
    let mut hi = hi0;
    while hi - lo > resolution {
        let mid = 0.5 * (lo + hi);
        if at(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Feasibility::Found { value: lo })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn practical(pth_dbm: f64) -> Params {
        let mut p = Params::default();
        p.set("sensitivity_dbm", &pth_dbm.to_string()).unwrap();
        p
    }

    #[test]
    fn ideal_circuit_needs_one_satellite() {
        let p = Params::default(); // ideal circuit
        assert_eq!(
            min_satellites(&p, &SearchLimits::default()).unwrap(),
            Feasibility::Found { value: 1 }
        );
    }

    #[test]
    fn min_satellites_practical_thresholds() {
        // Frozen from the model: d_c = 22.03 km * N at -10 dBm, so the first
        // N clearing the 200 km closest approach is 10 (17 at -5 dBm).
        let limits = SearchLimits::default();
        assert_eq!(
            min_satellites(&practical(-10.0), &limits).unwrap(),
            Feasibility::Found { value: 10 }
        );
        assert_eq!(
            min_satellites(&practical(-5.0), &limits).unwrap(),
            Feasibility::Found { value: 17 }
        );
    }

    #[test]
    fn min_satellites_bracket_is_tight() {
        let limits = SearchLimits::default();
        if let Feasibility::Found { value } = min_satellites(&practical(-10.0), &limits).unwrap() {
            let mut below = practical(-10.0);
            below.array.num_satellites = value - 1;
            assert!(!(below.pass().unwrap().harvested_j > 0.0));
            let mut at = practical(-10.0);
            at.array.num_satellites = value;
            assert!(at.pass().unwrap().harvested_j > 0.0);
        } else {
            panic!("expected a found value");
        }
    }

    #[test]
    fn min_satellites_monotone_in_threshold() {
        let limits = SearchLimits::default();
        let n_a = match min_satellites(&practical(-20.0), &limits).unwrap() {
            Feasibility::Found { value } => value,
            other => panic!("{other:?}"),
        };
        let n_b = match min_satellites(&practical(-10.0), &limits).unwrap() {
            Feasibility::Found { value } => value,
            other => panic!("{other:?}"),
        };
        assert!(n_a <= n_b);
    }

    #[test]
    fn min_satellites_cap_outcome() {
        let mut p = practical(30.0); // 1 W threshold: hopeless
        p.array.antennas_per_satellite = 1;
        let limits = SearchLimits { max_satellites: 64, ..Default::default() };
        assert_eq!(
            min_satellites(&p, &limits).unwrap(),
            Feasibility::CapExceeded { cap: 64 }
        );
    }

    #[test]
    fn max_frequency_thresholds() {
        let limits = SearchLimits::default();
        let f10 = match max_frequency(&practical(-10.0), &limits).unwrap() {
            Feasibility::Found { value } => value,
            other => panic!("{other:?}"),
        };
        assert!((f10 - 956e6).abs() < 2e6, "got {f10}");
        let mut n20 = practical(-10.0);
        n20.array.num_satellites = 20;
        let f20 = match max_frequency(&n20, &limits).unwrap() {
            Feasibility::Found { value } => value,
            other => panic!("{other:?}"),
        };
        assert!((f20 - 1912e6).abs() < 3e6, "got {f20}");
    }

    #[test]
    fn max_frequency_ideal_hits_range_cap() {
        let p = Params::default();
        let limits = SearchLimits::default();
        assert_eq!(
            max_frequency(&p, &limits).unwrap(),
            Feasibility::CapExceeded { cap: limits.freq_range_hz.1 }
        );
    }

    #[test]
    fn max_frequency_infeasible_at_lower_bound() {
        let mut p = practical(20.0); // 100 mW threshold
        p.array.num_satellites = 1;
        p.array.antennas_per_satellite = 1;
        assert_eq!(
            max_frequency(&p, &SearchLimits::default()).unwrap(),
            Feasibility::Infeasible
        );
    }

    #[test]
    fn max_altitude_thresholds() {
        let limits = SearchLimits::default();
        let h10 = match max_altitude(&practical(-10.0), &limits).unwrap() {
            Feasibility::Found { value } => value,
            other => panic!("{other:?}"),
        };
        assert!((h10 - 220.3e3).abs() < 2e3, "got {h10}");
        let mut n20 = practical(-10.0);
        n20.array.num_satellites = 20;
        let h20 = match max_altitude(&n20, &limits).unwrap() {
            Feasibility::Found { value } => value,
            other => panic!("{other:?}"),
        };
        assert!((h20 - 440.6e3).abs() < 2e3, "got {h20}");
    }

    #[test]
    fn solutions_invariant_to_bracket_choice() {
        let p = practical(-10.0);
        let a = SearchLimits::default();
        let b = SearchLimits {
            freq_range_hz: (500e6, 10e9),
            alt_range_m: (161e3, 2_000e3),
            ..Default::default()
        };
        let fa = match max_frequency(&p, &a).unwrap() {
            Feasibility::Found { value } => value,
            other => panic!("{other:?}"),
        };
        let fb = match max_frequency(&p, &b).unwrap() {
            Feasibility::Found { value } => value,
            other => panic!("{other:?}"),
        };
        assert!((fa - fb).abs() <= 2.0 * a.freq_resolution_hz);
        let ha = match max_altitude(&p, &a).unwrap() {
            Feasibility::Found { value } => value,
            other => panic!("{other:?}"),
        };
        let hb = match max_altitude(&p, &b).unwrap() {
            Feasibility::Found { value } => value,
            other => panic!("{other:?}"),
        };
        assert!((ha - hb).abs() <= 2.0 * a.alt_resolution_m);
    }

    #[test]
    fn query_dispatch() {
        let q = FeasibilityQuery {
            fixed: practical(-10.0),
            free: FreeVariable::NumSatellites,
            limits: SearchLimits::default(),
        };
        assert_eq!(
            q.solve().unwrap(),
            SolveOutcome::Satellites(Feasibility::Found { value: 10 })
        );
    }
}
