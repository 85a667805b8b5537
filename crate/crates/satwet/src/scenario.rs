//! Parameter profiles, config ingestion and the declarative sweep engine.
//!
//! A [`Params`] value is a fully resolved simulation profile. The default
//! profile carries the standard L-band LEO setup (868 MHz, 200 km altitude,
//! 40 dBm transmit power, 50/10 dB antenna gains, light-shadowing fading,
//! N = 10 satellites with M = 4 antennas each, ideal circuit). All keys are
//! settable from a flat key-value config file or `key=value` override
//! strings; dB/dBm/km/MHz conversions happen here and only here.
//!
//! The sweep engine evaluates one axis against overlaid parameter variants;
//! failed cells are zeroed and flagged, never aborting the table:
//!
//! ```
//! use satwet::scenario::{run_sweep, Axis, Overlay, OutputKind, Params, SweepSpec};
//!
//! let spec = SweepSpec {
//!     base: Params::default(),
//!     axis: Axis::range("num_satellites", 1.0, 30.0, 1.0),
//!     overlays: vec![
//!         Overlay::new("ideal", &[("sensitivity_dbm", "ideal")]),
//!         Overlay::new("practical", &[("sensitivity_dbm", "-10")]),
//!     ],
//!     outputs: vec![OutputKind::HarvestedJ],
//! };
//! let table = run_sweep(&spec).unwrap();
//! assert_eq!(table.rows.len(), 30);
//! // the practical circuit needs a minimum constellation before energy flows
//! let onset = table.rows.iter().find(|r| r[3] > 0.0).unwrap();
//! assert!((onset[0] - 10.0).abs() < 0.5);
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::channel::FadingParams;
use crate::energy::{
    compute_pass, misalignment_efficiency, ArrayConfig, EnergyError, GainConvention, LinkBudget,
    PassMode, PassOptions, PassResult,
};
use crate::geometry::OrbitGeometry;
use crate::units::{
    dbm_to_watts, db_to_linear, deg_to_rad, hz_to_mhz, km_to_m, linear_to_db, m_to_km, mhz_to_hz,
    rad_to_deg, watts_to_dbm,
};

/// All recognized config keys, in canonical order.
pub const VALID_KEYS: &[&str] = &[
    "earth_radius_km",
    "altitude_km",
    "tx_power_dbm",
    "tx_gain_db",
    "rx_gain_db",
    "carrier_mhz",
    "sensitivity_dbm",
    "harvest_efficiency",
    "m",
    "b0",
    "omega",
    "num_satellites",
    "antennas_per_satellite",
    "phase_error_var",
    "azimuth_deg",
    "pass_mode",
    "gain_convention",
];

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("unknown key '{0}' (valid keys: {})", VALID_KEYS.join(", "))]
    UnknownKey(String),
    #[error("invalid value '{value}' for key '{key}': {reason}")]
    InvalidValue {
        key: String,
        value: String,
        reason: String,
    },
    #[error("config line {0} is not 'key = value': {1}")]
    Malformed(usize, String),
    #[error("sweep axis must hold at least one finite, strictly monotone value")]
    BadAxis,
    #[error("axis key '{0}' is not sweepable (numeric keys only)")]
    BadAxisKey(String),
    #[error("sweep requested no outputs")]
    NoOutputs,
    #[error("pass evaluation failed: {0}")]
    Energy(#[from] EnergyError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// A fully resolved simulation profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Params {
    pub geometry: OrbitGeometry,
    pub link: LinkBudget,
    pub fading: FadingParams,
    pub array: ArrayConfig,
    pub options: PassOptions,
}

impl Default for Params {
    fn default() -> Self {
        Self {
            geometry: OrbitGeometry::new(6.378e6, 200e3, 6.67e-11, 5.97e24, 0.0)
                .expect("default geometry"),
            link: LinkBudget::new(10.0, 1e5, 10.0, 868e6, 0.7, 0.0).expect("default link"),
            fading: FadingParams::new(19.4, 0.158, 1.29).expect("default fading"),
            array: ArrayConfig::new(10, 4, 0.0).expect("default array"),
            options: PassOptions::default(),
        }
    }
}

impl Params {
    /// Set a parameter from its config-key string form.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ScenarioError> {
        let invalid = |reason: &str| ScenarioError::InvalidValue {
            key: key.to_string(),
            value: value.to_string(),
            reason: reason.to_string(),
        };
        match key {
            "sensitivity_dbm" => {
                if value.eq_ignore_ascii_case("ideal") {
                    self.link.sensitivity_w = 0.0;
                    return self.revalidate(key, value);
                }
                let v: f64 = value.parse().map_err(|_| invalid("expected dBm or 'ideal'"))?;
                self.link.sensitivity_w = dbm_to_watts(v);
                self.revalidate(key, value)
            }
            "pass_mode" => {
                self.options.pass_mode = value.parse().map_err(|e: String| invalid(&e))?;
                Ok(())
            }
            "gain_convention" => {
                self.options.gain_convention = value.parse().map_err(|e: String| invalid(&e))?;
                Ok(())
            }
            _ => {
                let v: f64 = value.parse().map_err(|_| invalid("expected a number"))?;
                self.set_numeric(key, v)
            }
        }
    }

    /// Set a numeric parameter; units follow the config-key convention
    /// (km, dBm, dB, MHz, degrees).
    pub fn set_numeric(&mut self, key: &str, v: f64) -> Result<(), ScenarioError> {
        let value = v.to_string();
        match key {
            "earth_radius_km" => self.geometry.earth_radius_m = km_to_m(v),
            "altitude_km" => self.geometry.altitude_m = km_to_m(v),
            "azimuth_deg" => self.geometry.azimuth_offset_rad = deg_to_rad(v),
            "tx_power_dbm" => self.link.tx_power_w = dbm_to_watts(v),
            "tx_gain_db" => self.link.tx_gain = db_to_linear(v),
            "rx_gain_db" => self.link.rx_gain = db_to_linear(v),
            "carrier_mhz" => self.link.carrier_hz = mhz_to_hz(v),
            "sensitivity_dbm" => self.link.sensitivity_w = dbm_to_watts(v),
            "harvest_efficiency" => self.link.harvest_efficiency = v,
            "m" => self.fading.m = v,
            "b0" => self.fading.b0 = v,
            "omega" => self.fading.omega = v,
            "num_satellites" => self.array.num_satellites = round_count(key, v, &value)?,
            "antennas_per_satellite" => {
                self.array.antennas_per_satellite = round_count(key, v, &value)?
            }
            "phase_error_var" => self.array.phase_error_var = v,
            "pass_mode" | "gain_convention" => {
                return Err(ScenarioError::BadAxisKey(key.to_string()))
            }
            _ => return Err(ScenarioError::UnknownKey(key.to_string())),
        }
        self.revalidate(key, &value)
    }

    // Re-run the domain-type constructors so every mutation path enforces
    // the same invariants.
    fn revalidate(&self, key: &str, value: &str) -> Result<(), ScenarioError> {
        let g = &self.geometry;
        let l = &self.link;
        let f = &self.fading;
        let a = &self.array;
        let wrap = |reason: String| ScenarioError::InvalidValue {
            key: key.to_string(),
            value: value.to_string(),
            reason,
        };
        OrbitGeometry::new(
            g.earth_radius_m,
            g.altitude_m,
            g.grav_const,
            g.earth_mass_kg,
            g.azimuth_offset_rad,
        )
        .map_err(|e| wrap(e.to_string()))?;
        LinkBudget::new(
            l.tx_power_w,
            l.tx_gain,
            l.rx_gain,
            l.carrier_hz,
            l.harvest_efficiency,
            l.sensitivity_w,
        )
        .map_err(|e| wrap(e.to_string()))?;
        FadingParams::new(f.m, f.b0, f.omega).map_err(|e| wrap(e.to_string()))?;
        ArrayConfig::new(a.num_satellites, a.antennas_per_satellite, a.phase_error_var)
            .map_err(|e| wrap(e.to_string()))?;
        Ok(())
    }

    /// Evaluate one pass under this profile.
    pub fn pass(&self) -> Result<PassResult, EnergyError> {
        compute_pass(&self.geometry, &self.link, &self.fading, &self.array, self.options)
    }

    /// Render every parameter back in config-key units, canonical order.
    pub fn to_key_values(&self) -> Vec<(String, String)> {
        let sens = if self.link.sensitivity_w == 0.0 {
            "ideal".to_string()
        } else {
            format!("{}", watts_to_dbm(self.link.sensitivity_w))
        };
        let conv = match self.options.gain_convention {
            GainConvention::Mn2 => "MN2",
            GainConvention::MnSquared => "(MN)^2",
        };
        let mode = match self.options.pass_mode {
            PassMode::Half => "half",
            PassMode::Full => "full",
        };
        vec![
            ("earth_radius_km".into(), m_to_km(self.geometry.earth_radius_m).to_string()),
            ("altitude_km".into(), m_to_km(self.geometry.altitude_m).to_string()),
            ("tx_power_dbm".into(), watts_to_dbm(self.link.tx_power_w).to_string()),
            ("tx_gain_db".into(), linear_to_db(self.link.tx_gain).to_string()),
            ("rx_gain_db".into(), linear_to_db(self.link.rx_gain).to_string()),
            ("carrier_mhz".into(), hz_to_mhz(self.link.carrier_hz).to_string()),
            ("sensitivity_dbm".into(), sens),
            ("harvest_efficiency".into(), self.link.harvest_efficiency.to_string()),
            ("m".into(), self.fading.m.to_string()),
            ("b0".into(), self.fading.b0.to_string()),
            ("omega".into(), self.fading.omega.to_string()),
            ("num_satellites".into(), self.array.num_satellites.to_string()),
            ("antennas_per_satellite".into(), self.array.antennas_per_satellite.to_string()),
            ("phase_error_var".into(), self.array.phase_error_var.to_string()),
            ("azimuth_deg".into(), rad_to_deg(self.geometry.azimuth_offset_rad).to_string()),
            ("pass_mode".into(), mode.to_string()),
            ("gain_convention".into(), conv.to_string()),
        ]
    }
}

fn round_count(key: &str, v: f64, value: &str) -> Result<u32, ScenarioError> {
    let n = v.round();
    if !v.is_finite() || n < 1.0 || n > u32::MAX as f64 || (v - n).abs() > 1e-6 {
        return Err(ScenarioError::InvalidValue {
            key: key.to_string(),
            value: value.to_string(),
            reason: "expected a positive integer".to_string(),
        });
    }
    Ok(n as u32)
}

/// Parse a flat `key = value` config file. `#` starts a comment; blank lines
/// are ignored; values may be quoted.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>, ScenarioError> {
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| ScenarioError::Malformed(i + 1, raw.to_string()))?;
        let key = key.trim().to_string();
        let value = value.trim().trim_matches('"').trim_matches('\'').to_string();
        if !VALID_KEYS.contains(&key.as_str()) {
            return Err(ScenarioError::UnknownKey(key));
        }
        pairs.push((key, value));
    }
    Ok(pairs)
}

/// Apply parsed config pairs, then `--set` style overrides, onto a profile.
pub fn apply_overrides(
    base: &mut Params,
    pairs: &[(String, String)],
) -> Result<(), ScenarioError> {
    for (k, v) in pairs {
        base.set(k, v)?;
    }
    Ok(())
}

/// Quantity emitted per sweep cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputKind {
    HarvestedJ,
    Efficiency,
    ReceivedDbm,
    WindowS,
    MisalignmentEfficiency,
}

impl OutputKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::HarvestedJ => "harvested_j",
            Self::Efficiency => "efficiency",
            Self::ReceivedDbm => "received_dbm",
            Self::WindowS => "window_s",
            Self::MisalignmentEfficiency => "misalignment_efficiency",
        }
    }
}

impl std::str::FromStr for OutputKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "harvested_j" => Ok(Self::HarvestedJ),
            "efficiency" => Ok(Self::Efficiency),
            "received_dbm" => Ok(Self::ReceivedDbm),
            "window_s" => Ok(Self::WindowS),
            "misalignment_efficiency" => Ok(Self::MisalignmentEfficiency),
            other => Err(format!(
                "unknown output '{other}' (expected one of harvested_j, efficiency, \
                 received_dbm, window_s, misalignment_efficiency)"
            )),
        }
    }
}

/// Swept variable: a config key plus its strictly monotone value list.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Axis {
    pub key: String,
    pub values: Vec<f64>,
}

impl Axis {
    pub fn range(key: &str, start: f64, stop: f64, step: f64) -> Self {
        let mut values = Vec::new();
        let mut v = start;
        if step > 0.0 {
            while v <= stop + 1e-9 * step.abs() {
                values.push(v);
                v += step;
            }
        }
        Self { key: key.to_string(), values }
    }
}

/// Named set of parameter overrides layered on the sweep base.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Overlay {
    pub label: String,
    pub sets: Vec<(String, String)>,
}

impl Overlay {
    pub fn new(label: &str, sets: &[(&str, &str)]) -> Self {
        Self {
            label: label.to_string(),
            sets: sets.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        }
    }
}

/// Declarative sweep: base profile, one axis, overlays and output columns.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSpec {
    pub base: Params,
    pub axis: Axis,
    pub overlays: Vec<Overlay>,
    pub outputs: Vec<OutputKind>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), ScenarioError> {
        if self.axis.values.is_empty()
            || self.axis.values.iter().any(|v| !v.is_finite())
            || self.axis.values.windows(2).any(|w| w[1] <= w[0])
        {
            return Err(ScenarioError::BadAxis);
        }
        if self.outputs.is_empty() {
            return Err(ScenarioError::NoOutputs);
        }
        // axis key must be numeric-settable
        let mut probe = self.base;
        probe.set_numeric(&self.axis.key, self.axis.values[0])?;
        // every overlay key must name a real parameter
        for overlay in &self.overlays {
            let mut p = self.base;
            apply_overrides(&mut p, &overlay.sets)?;
        }
        Ok(())
    }
}

/// Tabular sweep output: axis column first, then one value column per
/// (overlay, output) pair and one feasibility flag column per overlay.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    /// Resolved base parameters, artifact version and timestamp.
    pub metadata: BTreeMap<String, String>,
    /// Per-cell evaluation errors, as `(row, column, message)`.
    pub cell_errors: Vec<(usize, String, String)>,
}

/// Evaluate a sweep. Cells that fail to evaluate are flagged and zeroed,
/// never aborting the rest of the table.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult, ScenarioError> {
    spec.validate()?;
    let overlays: Vec<Overlay> = if spec.overlays.is_empty() {
        vec![Overlay { label: "base".to_string(), sets: Vec::new() }]
    } else {
        spec.overlays.clone()
    };

    let mut columns = vec![spec.axis.key.clone()];
    for overlay in &overlays {
        for out in &spec.outputs {
            columns.push(format!("{}.{}", overlay.label, out.name()));
        }
        columns.push(format!("{}.feasible", overlay.label));
    }

    let mut rows = Vec::with_capacity(spec.axis.values.len());
    let mut cell_errors = Vec::new();
    for (row_idx, &axis_value) in spec.axis.values.iter().enumerate() {
        let mut row = vec![axis_value];
        for overlay in &overlays {
            let cell = (|| -> Result<(PassResult, Params), ScenarioError> {
                let mut p = spec.base;
                p.set_numeric(&spec.axis.key, axis_value)?;
                apply_overrides(&mut p, &overlay.sets)?;
                Ok((p.pass()?, p))
            })();
            match cell {
                Ok((pass, p)) => {
                    for out in &spec.outputs {
                        row.push(match out {
                            OutputKind::HarvestedJ => pass.harvested_j,
                            OutputKind::Efficiency => pass.efficiency,
                            OutputKind::ReceivedDbm => watts_to_dbm(pass.peak_received_w),
                            OutputKind::WindowS => pass.window_s,
                            OutputKind::MisalignmentEfficiency => {
                                misalignment_efficiency(&p.array)
                            }
                        });
                    }
                    row.push(if pass.harvested_j > 0.0 { 1.0 } else { 0.0 });
                }
                Err(e) => {
                    for _ in &spec.outputs {
                        row.push(0.0);
                    }
                    row.push(0.0);
                    cell_errors.push((row_idx, overlay.label.clone(), e.to_string()));
                }
            }
        }
        rows.push(row);
    }

    let mut metadata = BTreeMap::new();
    for (k, v) in spec.base.to_key_values() {
        metadata.insert(format!("base.{k}"), v);
    }
    metadata.insert("axis".to_string(), spec.axis.key.clone());
    metadata.insert("version".to_string(), env!("CARGO_PKG_VERSION").to_string());
    metadata.insert(
        "timestamp_unix".to_string(),
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs().to_string())
            .unwrap_or_default(),
    );

    Ok(SweepResult { columns, rows, metadata, cell_errors })
}

impl SweepResult {
    /// Write the table as CSV: `#`-prefixed metadata comment block, then an
    /// RFC-4180 header row and data rows. The body below the comment block is
    /// deterministic for a given spec.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> Result<(), ScenarioError> {
        for (k, v) in &self.metadata {
            writeln!(w, "# {k} = {v}")?;
        }
        for (row, overlay, msg) in &self.cell_errors {
            writeln!(w, "# cell_error row={row} overlay={overlay}: {msg}")?;
        }
        writeln!(w, "{}", self.columns.iter().map(|c| csv_quote(c)).collect::<Vec<_>>().join(","))?;
        for row in &self.rows {
            let mut line = String::new();
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    line.push(',');
                }
                let _ = write!(line, "{v}");
            }
            writeln!(w, "{line}")?;
        }
        Ok(())
    }

    /// CSV body only (header + data rows, no metadata comments).
    pub fn csv_body(&self) -> String {
        let mut out = Vec::new();
        self.write_csv(&mut out).expect("write to vec");
        String::from_utf8(out)
            .expect("utf8")
            .lines()
            .filter(|l| !l.starts_with('#'))
            .collect::<Vec<_>>()
            .join("\n")
            + "\n"
    }

    /// JSON rendering with the same schema as the CSV.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "metadata": self.metadata,
            "columns": self.columns,
            "rows": self.rows,
            "cell_errors": self.cell_errors,
        })
    }
}

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Pre-canned figure reproductions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    /// Harvested energy vs constellation size, per sensitivity and azimuth.
    Fig2,
    /// Harvested energy vs carrier frequency, per constellation size and circuit.
    Fig3,
    /// Harvested energy vs satellite altitude, per constellation size and circuit.
    Fig4,
    /// Charging efficiency vs azimuth offset, per constellation size and sensitivity.
    Fig5a,
    /// Misalignment efficiency vs phase error variance, per constellation size.
    Fig5b,
}

impl std::str::FromStr for FigureId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fig2" => Ok(Self::Fig2),
            "fig3" => Ok(Self::Fig3),
            "fig4" => Ok(Self::Fig4),
            "fig5a" => Ok(Self::Fig5a),
            "fig5b" => Ok(Self::Fig5b),
            other => Err(format!("unknown figure '{other}' (expected fig2..fig5b)")),
        }
    }
}

/// Build the sweep spec for one of the canned figures, on the default profile.
pub fn builtin_figure(figure: FigureId) -> SweepSpec {
    let base = Params::default();
    match figure {
        FigureId::Fig2 => SweepSpec {
            base,
            axis: Axis::range("num_satellites", 1.0, 30.0, 1.0),
            overlays: vec![
                Overlay::new("ideal_phi0", &[("sensitivity_dbm", "ideal"), ("azimuth_deg", "0")]),
                Overlay::new("pth-10_phi0", &[("sensitivity_dbm", "-10"), ("azimuth_deg", "0")]),
                Overlay::new("pth-5_phi0", &[("sensitivity_dbm", "-5"), ("azimuth_deg", "0")]),
                Overlay::new("ideal_phi1", &[("sensitivity_dbm", "ideal"), ("azimuth_deg", "1")]),
                Overlay::new("pth-10_phi1", &[("sensitivity_dbm", "-10"), ("azimuth_deg", "1")]),
                Overlay::new("pth-5_phi1", &[("sensitivity_dbm", "-5"), ("azimuth_deg", "1")]),
            ],
            outputs: vec![OutputKind::HarvestedJ],
        },
        FigureId::Fig3 => SweepSpec {
            base,
            axis: Axis::range("carrier_mhz", 300.0, 3000.0, 25.0),
            overlays: vec![
                Overlay::new("n10_ideal", &[("num_satellites", "10"), ("sensitivity_dbm", "ideal")]),
                Overlay::new("n10_pth-10", &[("num_satellites", "10"), ("sensitivity_dbm", "-10")]),
                Overlay::new("n20_ideal", &[("num_satellites", "20"), ("sensitivity_dbm", "ideal")]),
                Overlay::new("n20_pth-10", &[("num_satellites", "20"), ("sensitivity_dbm", "-10")]),
            ],
            outputs: vec![OutputKind::HarvestedJ],
        },
        FigureId::Fig4 => SweepSpec {
            base,
            axis: Axis::range("altitude_km", 160.0, 600.0, 5.0),
            overlays: vec![
                Overlay::new("n10_ideal", &[("num_satellites", "10"), ("sensitivity_dbm", "ideal")]),
                Overlay::new("n10_pth-10", &[("num_satellites", "10"), ("sensitivity_dbm", "-10")]),
                Overlay::new("n20_ideal", &[("num_satellites", "20"), ("sensitivity_dbm", "ideal")]),
                Overlay::new("n20_pth-10", &[("num_satellites", "20"), ("sensitivity_dbm", "-10")]),
            ],
            outputs: vec![OutputKind::HarvestedJ, OutputKind::WindowS],
        },
        FigureId::Fig5a => SweepSpec {
            base,
            axis: Axis::range("azimuth_deg", 0.0, 3.0, 0.05),
            overlays: vec![
                Overlay::new("n10_pth-10", &[("num_satellites", "10"), ("sensitivity_dbm", "-10")]),
                Overlay::new("n20_pth-10", &[("num_satellites", "20"), ("sensitivity_dbm", "-10")]),
                Overlay::new("n20_pth-5", &[("num_satellites", "20"), ("sensitivity_dbm", "-5")]),
            ],
            outputs: vec![OutputKind::Efficiency],
        },
        FigureId::Fig5b => SweepSpec {
            base,
            axis: Axis::range("phase_error_var", 0.0, 5.0, 0.1),
            overlays: vec![
                Overlay::new("n5", &[("num_satellites", "5")]),
                Overlay::new("n10", &[("num_satellites", "10")]),
                Overlay::new("n20", &[("num_satellites", "20")]),
            ],
            outputs: vec![OutputKind::MisalignmentEfficiency, OutputKind::HarvestedJ],
        },
    }
}
