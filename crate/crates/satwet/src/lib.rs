//! Space-to-ground wireless energy transfer from multi-antenna LEO satellite
//! grids.
//!
//! A grid of `N` satellites, each with `M` antennas, beamforms power to a
//! ground device during a pass. This crate models the pass geometry, the
//! shadowed-Rician channel through its gamma surrogate, the threshold-gated
//! harvest, and the closed-form pass energy, and layers feasibility solvers
//! and a parameter-sweep engine on top.
//!
//! ```
//! use satwet::scenario::Params;
//!
//! // Default profile: 200 km altitude, 868 MHz, 40 dBm / 50 dB / 10 dB
//! // link budget, N = 10 satellites with M = 4 antennas, ideal circuit.
//! let pass = Params::default().pass().unwrap();
//! assert!(pass.harvested_j > 1e-3); // milli-joule level per pass
//! assert_eq!(pass.efficiency, 1.0); // ideal circuit harvests the whole window
//! ```
//!
//! Setting a sensitivity threshold shrinks the charging window and may make
//! small constellations infeasible:
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

pub mod channel;
pub mod energy;
pub mod geometry;
pub mod quad;
pub mod scenario;
pub mod solvers;
pub mod units;
pub mod validate;
