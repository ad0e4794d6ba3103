//! nanoshuttle: simulate and analyze single-electron transport through a
//! vibrating nanoscale quantum box.
//!
//! Exit codes: 0 success, 1 internal error, 2 user/input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nanoshuttle_core::analysis::{
    assign_threshold_state, build_report, detect_peaks, estimate_alpha, median_peak_spacing,
    PeakReport, DEFAULT_MIN_HEIGHT_PA, DEFAULT_MIN_PROMINENCE_PA,
};
use nanoshuttle_core::config::load_device_config;
use nanoshuttle_core::electrostatics::{
    charging_energy_mev, gate_alpha_from_period, junction_capacitance_af, rc_limited_current,
    NOMINAL_RC_CAPACITANCE_F,
};
use nanoshuttle_core::mechanics::{
    coupling_lambda, displacement_from_noise_nm, mechanical_work_mev, oscillator_frequencies,
};
use nanoshuttle_core::spectrum::{enumerate_levels, state_energy, table_to_csv, QuantumState};
use nanoshuttle_core::transport::{
    simulate_drain_sweep, simulate_gate_sweep, trace_from_csv, trace_to_csv, DeviceModel, IVTrace,
    SweepConfig, SweepDirection, SweepKind,
};
use nanoshuttle_core::Error as CoreError;

const SEED_ENV: &str = "NANOSHUTTLE_SEED";

#[derive(Parser)]
#[command(
    name = "nanoshuttle",
    version,
    about = "Single-electron transport simulator for a vibrating quantum box"
)]
struct Cli {
    /// Device config file ([geometry]/[junction]/[gate]/[mechanics]/[transport]).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Output file (defaults: spectrum.csv, trace.csv, report.csv).
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the quantized level ladder and export it as CSV.
    Spectrum {
        /// Enumeration cutoff (meV).
        #[arg(long, default_value_t = 950.0)]
        cutoff: f64,
    },
    /// Synthesize an I-V sweep and export the trace as CSV.
    Simulate {
        /// Sweep the drain bias or the gate.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Start voltage (V).
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        /// End voltage (V).
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        /// Voltage step (V).
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        /// Sweep direction; must match the from/to ordering.
        #[arg(long, value_enum)]
        direction: DirectionArg,
        /// Noise seed; falls back to NANOSHUTTLE_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        /// Drain bias held during gate sweeps (V).
        #[arg(long, default_value_t = 0.05)]
        vds: f64,
    },
    /// Analyze a trace CSV: peaks, spacing, E_c, gate coupling, states.
    Analyze {
        /// Trace CSV (voltage_V,current_pA,annotation).
        trace: PathBuf,
        /// Interpret the trace as a drain or gate sweep.
        #[arg(long, value_enum, default_value_t = KindArg::Drain)]
        kind: KindArg,
        /// State-assignment tolerance (meV).
        #[arg(long, default_value_t = 5.0)]
        tol: f64,
        /// Drain bias the gate trace was taken at (V).
        #[arg(long, default_value_t = 0.05)]
        vds: f64,
    },
    /// Print the derived-parameter panel for the configured device.
    Constants,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Drain,
    Gate,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DirectionArg {
    Up,
    Down,
}

impl From<DirectionArg> for SweepDirection {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Up => SweepDirection::Up,
            DirectionArg::Down => SweepDirection::Down,
        }
    }
}

/// User/input errors exit 2, anything else 1.
fn exit_code_for(err: &CoreError) -> u8 {
    match err {
        CoreError::Config { .. }
        | CoreError::TraceParse { .. }
        | CoreError::InvalidSweep(_)
        | CoreError::InvalidParameter(_)
        | CoreError::TargetAboveCutoff { .. }
        | CoreError::Io(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn run(cli: Cli) -> Result<(), CoreError> {
    let model = load_device_config(cli.config.as_deref())?;
    match cli.command {
        Command::Spectrum { cutoff } => {
            cmd_spectrum(&model, cutoff, out_path(&cli.out, "spectrum.csv"))
        }
        Command::Simulate {
            kind,
            from,
            to,
            step,
            direction,
            seed,
            vds,
        } => {
            let seed = resolve_seed(seed)?;
            let sweep = SweepConfig {
                v_start: from,
                v_end: to,
                step_v: step,
                direction: direction.into(),
                kind: match kind {
                    KindArg::Drain => SweepKind::DrainSweep,
                    KindArg::Gate => SweepKind::GateSweep,
                },
                seed,
            };
            cmd_simulate(&model, &sweep, vds, out_path(&cli.out, "trace.csv"))
        }
        Command::Analyze {
            trace,
            kind,
            tol,
            vds,
        } => cmd_analyze(
            &model,
            &trace,
            kind,
            tol,
            vds,
            out_path(&cli.out, "report.csv"),
        ),
        Command::Constants => cmd_constants(&model),
    }
}

fn out_path(out: &Option<PathBuf>, default: &str) -> PathBuf {
    out.clone().unwrap_or_else(|| PathBuf::from(default))
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, CoreError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var(SEED_ENV) {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            CoreError::InvalidParameter(format!(
                "{SEED_ENV} must be an unsigned integer, got {raw:?}"
            ))
        }),
        Err(_) => Ok(0),
    }
}

fn cmd_spectrum(model: &DeviceModel, cutoff: f64, out: PathBuf) -> Result<(), CoreError> {
    if cutoff <= 0.0 {
        return Err(CoreError::InvalidParameter(format!(
            "cutoff must be positive, got {cutoff} meV"
        )));
    }
    let table = enumerate_levels(model.geometry, cutoff);
    std::fs::write(&out, table_to_csv(&table))?;

    println!(
        "level ladder of the {} x {} x {} nm box up to {cutoff} meV: {} levels, {} states",
        model.geometry.length_l_nm,
        model.geometry.width_w_nm,
        model.geometry.height_h_nm,
        table.levels.len(),
        table.levels.iter().map(|l| l.degeneracy()).sum::<usize>()
    );
    for level in &table.levels {
        let n = level
            .occupation_number()
            .map(|n| n.to_string())
            .unwrap_or_else(|| "mixed".into());
        println!(
            "  {:>9.4} meV  N = {:<5} deg {}  {}",
            level.energy_mev,
            n,
            level.degeneracy(),
            level.label()
        );
    }
    println!("wrote {}", out.display());
    Ok(())
}

fn cmd_simulate(
    model: &DeviceModel,
    sweep: &SweepConfig,
    vds: f64,
    out: PathBuf,
) -> Result<(), CoreError> {
    let trace = match sweep.kind {
        SweepKind::DrainSweep => simulate_drain_sweep(model, sweep)?,
        SweepKind::GateSweep => simulate_gate_sweep(model, sweep, vds)?,
    };
    std::fs::write(&out, trace_to_csv(&trace))?;

    println!(
        "simulated {} sweep: {} -> {} V in {} samples (seed {})",
        match sweep.kind {
            SweepKind::DrainSweep => "drain",
            SweepKind::GateSweep => "gate",
        },
        sweep.v_start,
        sweep.v_end,
        trace.points.len(),
        sweep.seed
    );
    for (v, label) in &trace.annotations {
        println!("  {:<17} at {v:.4} V", label.as_str());
    }
    let peaks = detect_peaks(&trace, DEFAULT_MIN_HEIGHT_PA, DEFAULT_MIN_PROMINENCE_PA);
    println!("  peaks detected: {}", peaks.len());

    if sweep.kind == SweepKind::GateSweep {
        gate_peak_assignments(model, &trace, vds);
    }
    println!("wrote {}", out.display());
    Ok(())
}

/// Per-peak drive energies e(V_ds + alpha*V_gs) and their state matches,
/// using the configured gate coupling.
fn gate_peak_assignments(model: &DeviceModel, trace: &IVTrace, vds: f64) {
    let onset = model.gate.onset_vgs_v;
    let period = model.gate.period_dvgs_v;
    let v_max = trace
        .points
        .iter()
        .fold(f64::NEG_INFINITY, |acc, &(v, _)| acc.max(v));
    let mut centers = Vec::new();
    let mut c = onset;
    while c <= v_max {
        centers.push(c);
        c += period;
    }
    if centers.is_empty() {
        return;
    }
    let max_energy = 1e3 * (vds + model.gate.alpha * v_max) + 50.0;
    let table = enumerate_levels(model.geometry, max_energy.max(100.0));
    for v_gs in centers {
        let drive = 1e3 * (vds + model.gate.alpha * v_gs);
        let label = assign_threshold_state(drive / 1e3, &table, 10.0)
            .ok()
            .and_then(|levels| levels.first().cloned())
            .map(|l| format!("{} ({:.4} meV)", l.label(), l.energy_mev))
            .unwrap_or_else(|| "no state within 10 meV".into());
        println!("  charge step at Vgs = {v_gs:.4} V, drive {drive:.4} meV -> {label}");
    }
}

fn cmd_analyze(
    model: &DeviceModel,
    trace_path: &Path,
    kind: KindArg,
    tol: f64,
    vds: f64,
    out: PathBuf,
) -> Result<(), CoreError> {
    let text = std::fs::read_to_string(trace_path)?;
    let trace = trace_from_csv(&text)?;

    let max_abs_v = trace
        .points
        .iter()
        .fold(0.0f64, |acc, &(v, _)| acc.max(v.abs()));
    let cutoff = match kind {
        KindArg::Drain => (max_abs_v * 1e3 + 50.0).max(100.0),
        // Gate peaks map through the drive energy e(V_ds + alpha*V_gs).
        KindArg::Gate => (1e3 * (vds + model.gate.alpha * max_abs_v) + 50.0).max(100.0),
    };
    let table = enumerate_levels(model.geometry, cutoff);

    // The voltage -> drive-energy state assignment only makes sense for
    // drain traces; gate peaks are assigned through the drive energy below.
    let report = match kind {
        KindArg::Drain => build_report(&trace, &table, tol),
        KindArg::Gate => {
            let peaks = detect_peaks(&trace, DEFAULT_MIN_HEIGHT_PA, DEFAULT_MIN_PROMINENCE_PA);
            let median_spacing_v = median_peak_spacing(&peaks).ok();
            PeakReport {
                peaks,
                median_spacing_v,
                ec_estimate_mev: None,
                assigned_states: Vec::new(),
            }
        }
    };
    std::fs::write(&out, report.to_csv())?;
    print!("{}", report.summary());

    if kind == KindArg::Gate {
        let c_af = junction_capacitance_af(&model.junction);
        match estimate_alpha(&trace, c_af) {
            Ok((alpha, cg)) => {
                println!("alpha estimate = {alpha:.4} (C = {c_af:.4} aF)");
                println!("C_g estimate   = {cg:.4} aF");
            }
            Err(err) => println!("alpha estimate unavailable: {err}"),
        }
        for (idx, &(v_gs, _)) in report.peaks.iter().enumerate() {
            let drive = 1e3 * (vds + model.gate.alpha * v_gs);
            if drive / 1e3 <= table.cutoff_mev / 1e3 {
                if let Ok(levels) = assign_threshold_state(drive / 1e3, &table, tol) {
                    if let Some(best) = levels.first() {
                        println!(
                            "peak {idx} drive {drive:.4} meV -> {} ({:.4} meV)",
                            best.label(),
                            best.energy_mev
                        );
                    }
                }
            }
        }
    } else if let Some(&(v_t, _)) = report.peaks.first() {
        match assign_threshold_state(v_t.abs(), &table, tol) {
            Ok(levels) if !levels.is_empty() => {
                println!(
                    "threshold {:.4} V -> {} ({:.4} meV)",
                    v_t,
                    levels[0].label(),
                    levels[0].energy_mev
                );
            }
            _ => println!("threshold {v_t:.4} V matches no level within {tol} meV"),
        }
    }
    println!("wrote {}", out.display());
    Ok(())
}

fn cmd_constants(model: &DeviceModel) -> Result<(), CoreError> {
    let j = &model.junction;
    let m = &model.mech;
    let c_af = junction_capacitance_af(j);
    let ec = charging_energy_mev(c_af);
    let (alpha, cg) = gate_alpha_from_period(model.gate.period_dvgs_v, c_af)?;
    let dx = displacement_from_noise_nm(
        m.noise_amplitude_di_pa,
        j.face_area_a_nm2,
        m.charge_density_ne_per_cm3,
        m.tunnel_rate_gamma_per_s,
        false,
    );
    let dx3 = displacement_from_noise_nm(
        m.noise_amplitude_di_pa,
        j.face_area_a_nm2,
        m.charge_density_ne_per_cm3,
        m.tunnel_rate_gamma_per_s,
        true,
    );
    let work = mechanical_work_mev(m.spring_k_n_per_m, 0.3);
    let (omega0, omega_net) =
        oscillator_frequencies(m.spring_k_n_per_m, m.density_rho_kg_per_m3, m.box_volume_m3);
    let (tau, i_peak) = rc_limited_current(j.junction_resistance_r_ohm, NOMINAL_RC_CAPACITANCE_F);
    let gap = state_energy(
        QuantumState {
            nx: 3,
            ny: 2,
            nz: 2,
        },
        model.geometry,
    ) - state_energy(
        QuantumState {
            nx: 2,
            ny: 2,
            nz: 2,
        },
        model.geometry,
    );
    let spacing = model.ec_spacing_mev;

    println!("C = {c_af:.4} aF (C = eps_r*eps0*A/D)");
    println!("E_c = {ec:.4} meV (E_c = e^2/2C)");
    println!("peak spacing = {spacing:.4} mV (configured charging ladder step)");
    println!(
        "alpha = {alpha:.4} (alpha = sqrt(e/(dVgs*C)), dVgs = {:.4} V)",
        model.gate.period_dvgs_v
    );
    println!("C_g = {cg:.4} aF (C_g = alpha*C)");
    println!(
        "K = {:.4} N/m (sigma*A calibration, sigma = {:.4e} Pa)",
        m.spring_k_n_per_m, m.stress_sigma_pa
    );
    println!(
        "dX = {dx:.4} nm (dX = dI/(e*A*n_e*Gamma), dI = {:.4} pA)",
        m.noise_amplitude_di_pa
    );
    println!("dX_alt = {dx3:.4} nm (same, with n_e prop. A*dX/3)");
    println!("work = {work:.4} meV (W = K*dX^2/2 at dX = 0.3 nm)");
    println!("omega0 = {omega0:.4e} 1/s (omega0 = sqrt(K/(rho*V)))");
    println!("omega_net = {omega_net:.4e} 1/s (59*omega0)");
    println!("tau = {tau:.4e} s (tau = R*C_nom, C_nom = 1 aF)");
    println!("I_peak = {:.4} pA (I = e/tau)", i_peak * 1e12);
    println!("dE_n = {gap:.4} meV (E[3,2,2] - E[2,2,2])");
    match (
        coupling_lambda(spacing, 30.0),
        coupling_lambda(spacing, gap),
    ) {
        (Ok((dee_a, la)), Ok((dee_b, lb))) => {
            let (dee_lo, dee_hi) = (dee_a.min(dee_b), dee_a.max(dee_b));
            let (l_lo, l_hi) = (la.min(lb), la.max(lb));
            println!("dE_e = {dee_lo:.4} - {dee_hi:.4} meV (dE_e = E_c - dE_n; dE_n = 30 / exact)");
            println!("lambda = {l_lo:.4} - {l_hi:.4} (lambda = dE_e/dE_n)");
        }
        _ => println!("lambda = n/a (spacing does not exceed the level gap)"),
    }
    Ok(())
}
