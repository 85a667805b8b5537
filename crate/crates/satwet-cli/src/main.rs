//! `satwet` command line: single-pass evaluation, sweeps, figure
//! reproduction, feasibility solvers and self-validation.
//!
//! Exit codes: 0 success, 2 argument/config error, 3 infeasibility or
//! search-cap outcome, 4 validation failure.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use satwet::scenario::{
    apply_overrides, builtin_figure, parse_config, run_sweep, Axis, FigureId, Params, SweepResult,
    SweepSpec,
};
use satwet::solvers::{
    max_altitude, max_frequency, min_satellites, Feasibility, SearchLimits,
};
use satwet::units::{hz_to_mhz, m_to_km, watts_to_dbm};
use satwet::validate::run_validation;

const EXIT_USAGE: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;
const EXIT_VALIDATION: u8 = 4;

#[derive(Parser)]
#[command(name = "satwet", version, about = "LEO satellite-grid wireless energy transfer simulator")]
struct Cli {
    /// Flat key-value config file; defaults apply when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Inline override, repeatable: --set key=value (applied after --config).
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    sets: Vec<String>,

    /// Output file; stdout when omitted.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    /// Output format for tabular results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Verbose diagnostics on stderr.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one satellite pass and print the result.
    Pass,
    /// Run a parameter sweep over one axis.
    Sweep(SweepArgs),
    /// Reproduce a canned figure sweep (fig2, fig3, fig4, fig5a, fig5b).
    Figure { name: String },
    /// Invert the pass model for a feasibility boundary.
    Solve(SolveArgs),
    /// Cross-check the closed form against the quadrature and channel oracles.
    Validate {
        /// Random parameter tuples for the closed-form check.
        #[arg(long, default_value_t = 1000)]
        tuples: usize,
        #[arg(long, default_value_t = 20260826)]
        seed: u64,
    },
}

#[derive(Args)]
struct SweepArgs {
    /// Config key to sweep (numeric keys only).
    #[arg(long)]
    axis: String,
    /// Explicit axis values, comma separated (alternative to start/stop/step).
    #[arg(long, value_delimiter = ',')]
    values: Vec<f64>,
    #[arg(long)]
    start: Option<f64>,
    #[arg(long)]
    stop: Option<f64>,
    #[arg(long)]
    step: Option<f64>,
    /// Output columns, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "harvested_j,efficiency,window_s")]
    outputs: Vec<String>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(value_enum)]
    target: SolveTarget,
    #[arg(long, default_value_t = 10_000)]
    cap_satellites: u32,
    /// Frequency search range in MHz.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], default_values_t = [100.0, 100_000.0])]
    freq_range_mhz: Vec<f64>,
    /// Altitude search range in km.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], default_values_t = [160.0, 36_000.0])]
    alt_range_km: Vec<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveTarget {
    MinSatellites,
    MaxFrequency,
    MaxAltitude,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

type Failure = (u8, String);

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let params = resolve_params(&cli)?;
    match &cli.command {
        Command::Pass => cmd_pass(&cli, &params),
        Command::Sweep(args) => {
            let spec = sweep_spec(&params, args)?;
            emit_sweep(&cli, &spec)
        }
        Command::Figure { name } => {
            let fig: FigureId = name
                .parse()
                .map_err(|e: String| (EXIT_USAGE, format!("figure: {e}")))?;
            let mut spec = builtin_figure(fig);
            spec.base = params;
            emit_sweep(&cli, &spec)
        }
        Command::Solve(args) => cmd_solve(&cli, &params, args),
        Command::Validate { tuples, seed } => cmd_validate(&cli, *tuples, *seed),
    }
}

fn resolve_params(cli: &Cli) -> Result<Params, Failure> {
    let mut params = Params::default();
    if let Some(path) = &cli.config {
        let text = fs::read_to_string(path)
            .map_err(|e| (EXIT_USAGE, format!("config: cannot read {}: {e}", path.display())))?;
        let pairs = parse_config(&text).map_err(|e| (EXIT_USAGE, format!("config: {e}")))?;
        apply_overrides(&mut params, &pairs)
            .map_err(|e| (EXIT_USAGE, format!("config: {e}")))?;
    }
    for set in &cli.sets {
        let (key, value) = set
            .split_once('=')
            .ok_or_else(|| (EXIT_USAGE, format!("set: '{set}' is not key=value")))?;
        params
            .set(key.trim(), value.trim())
            .map_err(|e| (EXIT_USAGE, format!("set: {e}")))?;
    }
    Ok(params)
}

fn write_output(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| (EXIT_USAGE, format!("output: cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| (EXIT_USAGE, format!("output: {e}")))
        }
    }
}

fn cmd_pass(cli: &Cli, params: &Params) -> Result<ExitCode, Failure> {
    let pass = params
        .pass()
        .map_err(|e| (EXIT_USAGE, format!("pass: {e}")))?;
    let dc = if pass.cutoff_distance_m.is_finite() {
        format!("{:.3} km", m_to_km(pass.cutoff_distance_m))
    } else {
        "unbounded (ideal circuit)".to_string()
    };
    let mut text = String::new();
    text.push_str(&format!(
        "pass @ {:.1} MHz, H = {:.1} km, N = {}, M = {}, phi = {:.3} deg\n",
        hz_to_mhz(params.link.carrier_hz),
        m_to_km(params.geometry.altitude_m),
        params.array.num_satellites,
        params.array.antennas_per_satellite,
        params.geometry.azimuth_offset_rad.to_degrees(),
    ));
    text.push_str(&format!("  charging window     : {:.2} s (half pass)\n", pass.window_s));
    text.push_str(&format!("  window limited by   : {:?}\n", pass.window_limited_by));
    text.push_str(&format!("  cutoff distance     : {dc}\n"));
    text.push_str(&format!(
        "  peak received power : {:.4e} W ({:.2} dBm){}\n",
        pass.peak_received_w,
        watts_to_dbm(pass.peak_received_w),
        if pass.saturation_warning { "  [above -3 dBm saturation level]" } else { "" },
    ));
    text.push_str(&format!(
        "  harvested energy    : {:.4e} J ({:.4} mJ)\n",
        pass.harvested_j,
        pass.harvested_j * 1e3
    ));
    text.push_str(&format!(
        "  MRT upper bound     : {:.4e} J\n  charging efficiency : {:.4}\n",
        pass.upper_bound_j, pass.efficiency
    ));
    // machine-readable block
    let machine = serde_json::json!({
        "params": params,
        "result": pass,
    });
    text.push_str(&format!("{machine}\n"));
    write_output(cli, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn sweep_spec(params: &Params, args: &SweepArgs) -> Result<SweepSpec, Failure> {
    let axis = if !args.values.is_empty() {
        Axis { key: args.axis.clone(), values: args.values.clone() }
    } else {
        match (args.start, args.stop, args.step) {
            (Some(start), Some(stop), Some(step)) => Axis::range(&args.axis, start, stop, step),
            _ => {
                return Err((
                    EXIT_USAGE,
                    "sweep: provide --values or all of --start/--stop/--step".to_string(),
                ))
            }
        }
    };
    let mut outputs = Vec::new();
    for name in &args.outputs {
        outputs.push(
            name.parse()
                .map_err(|e: String| (EXIT_USAGE, format!("sweep: {e}")))?,
        );
    }
    Ok(SweepSpec { base: *params, axis, overlays: vec![], outputs })
}

fn emit_sweep(cli: &Cli, spec: &SweepSpec) -> Result<ExitCode, Failure> {
    let result = run_sweep(spec).map_err(|e| (EXIT_USAGE, format!("sweep: {e}")))?;
    if cli.verbose {
        for (row, overlay, msg) in &result.cell_errors {
            eprintln!("warning: cell row={row} overlay={overlay}: {msg}");
        }
    }
    let text = render(cli, &result)?;
    write_output(cli, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn render(cli: &Cli, result: &SweepResult) -> Result<String, Failure> {
    match cli.format {
        Format::Csv => {
            let mut buf = Vec::new();
            result
                .write_csv(&mut buf)
                .map_err(|e| (EXIT_USAGE, format!("csv: {e}")))?;
            String::from_utf8(buf).map_err(|e| (EXIT_USAGE, format!("csv: {e}")))
        }
        Format::Json => Ok(format!("{:#}\n", result.to_json())),
    }
}

fn cmd_solve(cli: &Cli, params: &Params, args: &SolveArgs) -> Result<ExitCode, Failure> {
    let limits = SearchLimits {
        max_satellites: args.cap_satellites,
        freq_range_hz: (args.freq_range_mhz[0] * 1e6, args.freq_range_mhz[1] * 1e6),
        alt_range_m: (args.alt_range_km[0] * 1e3, args.alt_range_km[1] * 1e3),
        ..Default::default()
    };
    let solve_err = |e: satwet::energy::EnergyError| (EXIT_USAGE, format!("solve: {e}"));
    let (label, outcome_json, exit) = match args.target {
        SolveTarget::MinSatellites => {
            let outcome = min_satellites(params, &limits).map_err(solve_err)?;
            let exit = matches!(outcome, Feasibility::Found { .. });
            match outcome {
                Feasibility::Found { value } => {
                    println!("min_satellites = {value}");
                }
                Feasibility::CapExceeded { cap } => {
                    eprintln!("error: infeasible-up-to-cap: no feasible N below {cap}");
                }
                Feasibility::Infeasible => eprintln!("error: infeasible"),
            }
            ("min_satellites", serde_json::to_value(&outcome).unwrap(), exit)
        }
        SolveTarget::MaxFrequency => {
            let outcome = max_frequency(params, &limits).map_err(solve_err)?;
            let exit = matches!(outcome, Feasibility::Found { .. });
            match outcome {
                Feasibility::Found { value } => {
                    println!("max_frequency_mhz = {:.3}", hz_to_mhz(value));
                }
                Feasibility::CapExceeded { cap } => {
                    eprintln!(
                        "error: range-cap: still feasible at the {:.0} MHz search cap",
                        hz_to_mhz(cap)
                    );
                }
                Feasibility::Infeasible => {
                    eprintln!("error: infeasible: no harvest even at the lower frequency bound");
                }
            }
            ("max_frequency", serde_json::to_value(&outcome).unwrap(), exit)
        }
        SolveTarget::MaxAltitude => {
            let outcome = max_altitude(params, &limits).map_err(solve_err)?;
            let exit = matches!(outcome, Feasibility::Found { .. });
            match outcome {
                Feasibility::Found { value } => {
                    println!("max_altitude_km = {:.3}", m_to_km(value));
                }
                Feasibility::CapExceeded { cap } => {
                    eprintln!(
                        "error: range-cap: still feasible at the {:.0} km search cap",
                        m_to_km(cap)
                    );
                }
                Feasibility::Infeasible => {
                    eprintln!("error: infeasible: no harvest even at the lower altitude bound");
                }
            }
            ("max_altitude", serde_json::to_value(&outcome).unwrap(), exit)
        }
    };
    if let Some(path) = &cli.output {
        let doc = serde_json::json!({ "target": label, "outcome": outcome_json, "params": params });
        fs::write(path, format!("{doc:#}\n"))
            .map_err(|e| (EXIT_USAGE, format!("output: {e}")))?;
    }
    Ok(if exit { ExitCode::SUCCESS } else { ExitCode::from(EXIT_INFEASIBLE) })
}

fn cmd_validate(cli: &Cli, tuples: usize, seed: u64) -> Result<ExitCode, Failure> {
    let report = run_validation(tuples, seed);
    let mut text = String::new();
    for check in &report.checks {
        text.push_str(&format!(
            "{}: {} ({})\n",
            check.name,
            if check.passed { "PASS" } else { "FAIL" },
            check.detail
        ));
    }
    write_output(cli, &text)?;
    if report.all_passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Err((EXIT_VALIDATION, "validation: one or more checks failed".to_string()))
    }
}
