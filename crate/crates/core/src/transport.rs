//! Phenomenological I-V synthesis.
//!
//! Drain sweeps superpose Gaussian conduction peaks on the drive-energy
//! axis (1 V of drain bias maps to 1000 meV of drive energy). The forward
//! branch carries the charging-energy peak ladder with the 2e staircase
//! and its hysteresis window; the reverse branch carries the quantum-state
//! sequence with interference modulation, satellite peaks, a hard zero
//! channel-closure window, and broader reopened peaks. Sub-threshold
//! samples receive the seeded zig-zag noise. Gate sweeps oscillate with
//! the configured onset and period. Every trace is a pure function of
//! (model, sweep), bitwise reproducible per seed.

use crate::electrostatics::{
    rc_limited_current, GateParams, JunctionParams, NOMINAL_RC_CAPACITANCE_F,
};
use crate::error::{Error, Result};
use crate::mechanics::{zigzag_noise, MechanicalParams};
use crate::spectrum::{enumerate_levels, state_energy, BoxGeometry, QuantumState};

/// Drive energy (meV) carried per volt of drain bias.
const MEV_PER_V: f64 = 1e3;

/// Reverse-bias charging sequence: the first eight peaks, in order.
pub const REVERSE_SEQUENCE: [(u32, u32, u32); 8] = [
    (3, 2, 1),
    (4, 2, 1),
    (4, 3, 1),
    (5, 2, 1),
    (4, 4, 1),
    (6, 1, 1),
    (6, 2, 1),
    (6, 3, 1),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepDirection {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    DrainSweep,
    GateSweep,
}

/// Charge package delivered per pump cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PumpMode {
    SingleE,
    DoubleE,
}

impl PumpMode {
    pub fn multiplier(self) -> f64 {
        match self {
            PumpMode::SingleE => 1.0,
            PumpMode::DoubleE => 2.0,
        }
    }
}

/// Reverse-bias channel condition, monotone in drive energy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ChannelPhase {
    Open,
    Interfering,
    Closed,
    Reopened,
}

/// Event markers written to the trace annotation column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Annotation {
    Threshold,
    Mode2e,
    Mode1e,
    PhaseInterfering,
    PhaseClosed,
    PhaseReopened,
    SatelliteOnset,
}

impl Annotation {
    pub fn as_str(self) -> &'static str {
        match self {
            Annotation::Threshold => "THRESHOLD",
            Annotation::Mode2e => "MODE_2E",
            Annotation::Mode1e => "MODE_1E",
            Annotation::PhaseInterfering => "PHASE_INTERFERING",
            Annotation::PhaseClosed => "PHASE_CLOSED",
            Annotation::PhaseReopened => "PHASE_REOPENED",
            Annotation::SatelliteOnset => "SATELLITE_ONSET",
        }
    }

    pub fn parse(token: &str) -> Option<Self> {
        Some(match token {
            "THRESHOLD" => Annotation::Threshold,
            "MODE_2E" => Annotation::Mode2e,
            "MODE_1E" => Annotation::Mode1e,
            "PHASE_INTERFERING" => Annotation::PhaseInterfering,
            "PHASE_CLOSED" => Annotation::PhaseClosed,
            "PHASE_REOPENED" => Annotation::PhaseReopened,
            "SATELLITE_ONSET" => Annotation::SatelliteOnset,
            _ => return None,
        })
    }
}

/// One voltage sweep request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub v_start: f64,
    pub v_end: f64,
    pub step_v: f64,
    pub direction: SweepDirection,
    pub kind: SweepKind,
    pub seed: u64,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.step_v.is_nan() || self.step_v <= 0.0 {
            return Err(Error::InvalidSweep(format!(
                "step must be positive, got {}",
                self.step_v
            )));
        }
        if self.v_start != self.v_end {
            let ascending = self.v_end > self.v_start;
            let consistent = match self.direction {
                SweepDirection::Up => ascending,
                SweepDirection::Down => !ascending,
            };
            if !consistent {
                return Err(Error::InvalidSweep(format!(
                    "direction {:?} inconsistent with bounds {} -> {} V",
                    self.direction, self.v_start, self.v_end
                )));
            }
        }
        Ok(())
    }
}

/// Full device description driving the simulator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviceModel {
    pub geometry: BoxGeometry,
    pub junction: JunctionParams,
    pub gate: GateParams,
    pub mech: MechanicalParams,
    /// Gaussian peak width (mV on the bias axis, meV on the energy axis).
    pub peak_width_mv: f64,
    /// Peak current ceiling (pA); defaults to e/RC of the junction.
    pub peak_current_pa: f64,
    /// Forward peak spacing E_c/e (meV); the charging-energy ladder step.
    pub ec_spacing_mev: f64,
    /// Enable the negative counter-current dip after the [1,2,2] doublet.
    pub counter_current_enabled: bool,
    /// Place forward peaks on the quantum ladder instead of the E_c ladder.
    pub quantum_ladder: bool,
}

impl Default for DeviceModel {
    fn default() -> Self {
        let junction = JunctionParams::default();
        let (_, i_peak_a) =
            rc_limited_current(junction.junction_resistance_r_ohm, NOMINAL_RC_CAPACITANCE_F);
        Self {
            geometry: BoxGeometry::default(),
            junction,
            gate: GateParams::default(),
            mech: MechanicalParams::default(),
            peak_width_mv: 5.0,
            peak_current_pa: i_peak_a * 1e12,
            ec_spacing_mev: 35.0,
            counter_current_enabled: false,
            quantum_ladder: false,
        }
    }
}

impl DeviceModel {
    pub fn validate(&self) -> Result<()> {
        self.junction.validate()?;
        self.gate.validate()?;
        self.mech.validate()?;
        if self.peak_width_mv <= 0.0 || self.peak_current_pa <= 0.0 || self.ec_spacing_mev <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "peak_width, peak_current and ec_spacing must be positive: {} mV, {} pA, {} meV",
                self.peak_width_mv, self.peak_current_pa, self.ec_spacing_mev
            )));
        }
        Ok(())
    }

    fn energy_of(&self, nx: u32, ny: u32, nz: u32) -> f64 {
        state_energy(QuantumState { nx, ny, nz }, self.geometry)
    }

    /// Forward conduction threshold: the [3,2,2]/[2,3,2] doublet.
    pub fn threshold_energy_mev(&self) -> f64 {
        self.energy_of(3, 2, 2)
    }

    /// Up-sweep staircase jump: the [5,4,4]/[4,5,4] doublet.
    pub fn staircase_jump_mev(&self) -> f64 {
        self.energy_of(5, 4, 4)
    }

    /// Down-sweep staircase drop: the [4,4,4] singlet.
    pub fn staircase_drop_mev(&self) -> f64 {
        self.energy_of(4, 4, 4)
    }

    /// Reverse conduction threshold: the [3,2,1]/[2,3,1] doublet.
    pub fn reverse_threshold_mev(&self) -> f64 {
        self.energy_of(3, 2, 1)
    }

    /// Satellite series onset: the [4,4,1] singlet.
    pub fn satellite_onset_mev(&self) -> f64 {
        self.energy_of(4, 4, 1)
    }

    /// Channel closure: the [4,4,2] singlet.
    pub fn closure_energy_mev(&self) -> f64 {
        self.energy_of(4, 4, 2)
    }

    /// Channel reopening: the [5,4,2]/[4,5,2] doublet.
    pub fn reopen_energy_mev(&self) -> f64 {
        self.energy_of(5, 4, 2)
    }

    /// Interference marker: the [6,1,1] state, where |nx-ny| reaches 5.
    pub fn interference_onset_mev(&self) -> f64 {
        self.energy_of(6, 1, 1)
    }

    /// Energy window of the counter-current dip, between the [1,2,2]
    /// doublet and the [2,2,2] singlet.
    pub fn counter_window_mev(&self) -> (f64, f64) {
        (self.energy_of(1, 2, 2), self.energy_of(2, 2, 2))
    }

    /// Reverse-bias channel condition at a drive energy.
    pub fn channel_phase(&self, energy_mev: f64) -> ChannelPhase {
        if energy_mev > self.closure_energy_mev() && energy_mev < self.reopen_energy_mev() {
            ChannelPhase::Closed
        } else if energy_mev >= self.reopen_energy_mev() {
            ChannelPhase::Reopened
        } else if energy_mev >= self.interference_onset_mev() {
            ChannelPhase::Interfering
        } else {
            ChannelPhase::Open
        }
    }
}

/// Captured sweep result.
#[derive(Debug, Clone, PartialEq)]
pub struct IVTrace {
    /// (voltage V, current pA) in sweep order.
    pub points: Vec<(f64, f64)>,
    pub sweep: SweepConfig,
    /// (voltage, label) event markers in sweep order.
    pub annotations: Vec<(f64, Annotation)>,
}

impl IVTrace {
    pub fn annotation_voltages(&self, label: Annotation) -> Vec<f64> {
        self.annotations
            .iter()
            .filter(|(_, a)| *a == label)
            .map(|(v, _)| *v)
            .collect()
    }
}

fn gaussian(x: f64) -> f64 {
    (-0.5 * x * x).exp()
}

/// Forward conduction peak positions (meV) up to `max_energy_mev`.
///
/// The default ladder starts at the threshold doublet and steps by the
/// charging energy; the quantum-ladder variant places peaks on every
/// enumerated level at or above threshold instead.
pub fn forward_peak_energies(model: &DeviceModel, max_energy_mev: f64) -> Vec<f64> {
    let threshold = model.threshold_energy_mev();
    if max_energy_mev < threshold {
        return Vec::new();
    }
    if model.quantum_ladder {
        enumerate_levels(model.geometry, max_energy_mev)
            .levels
            .iter()
            .map(|l| l.energy_mev)
            .filter(|e| *e >= threshold)
            .collect()
    } else {
        let mut peaks = Vec::new();
        let mut e = threshold;
        while e <= max_energy_mev {
            peaks.push(e);
            e += model.ec_spacing_mev;
        }
        peaks
    }
}

/// The eight reverse-bias peaks as (energy, state), in charging order.
pub fn reverse_peak_energies(model: &DeviceModel) -> Vec<(f64, QuantumState)> {
    REVERSE_SEQUENCE
        .iter()
        .map(|&(nx, ny, nz)| {
            let s = QuantumState { nx, ny, nz };
            (state_energy(s, model.geometry), s)
        })
        .collect()
}

/// Interference amplitude factor 1/(1 + |nx-ny|/2); 1 for balanced states,
/// monotone decreasing with the lateral imbalance.
pub fn interference_modulation(state: QuantumState) -> f64 {
    1.0 / (1.0 + state.lateral_imbalance() as f64 / 2.0)
}

/// One step of the staircase hysteresis: jump to 2e when sweeping up
/// through `jump_mev`, drop back to 1e when sweeping down to `drop_mev`,
/// otherwise keep the current mode.
pub fn hysteresis_step(
    mode: PumpMode,
    direction: SweepDirection,
    energy_mev: f64,
    jump_mev: f64,
    drop_mev: f64,
) -> PumpMode {
    match (mode, direction) {
        (PumpMode::SingleE, SweepDirection::Up) if energy_mev >= jump_mev => PumpMode::DoubleE,
        (PumpMode::DoubleE, SweepDirection::Down) if energy_mev <= drop_mev => PumpMode::SingleE,
        _ => mode,
    }
}

/// Ascending sample grid shared by up and down sweeps over the same range,
/// so that hysteresis comparisons see bitwise-identical voltages.
fn ascending_grid(cfg: &SweepConfig) -> Vec<f64> {
    if cfg.v_start == cfg.v_end {
        return Vec::new();
    }
    let lo = cfg.v_start.min(cfg.v_end);
    let hi = cfg.v_start.max(cfg.v_end);
    let n = ((hi - lo) / cfg.step_v + 1e-9).floor() as usize + 1;
    (0..n).map(|k| lo + k as f64 * cfg.step_v).collect()
}

/// Reverse-bias peak-height decay, linear in energy from 1 at the first
/// reverse peak down to a floor at the closure state chosen so the
/// closure-state peak would sit at 10% of the first peak after
/// interference factors.
fn reverse_decay(model: &DeviceModel, energy_mev: f64) -> f64 {
    let start = model.reverse_threshold_mev();
    let end = model.closure_energy_mev();
    let f_first = interference_modulation(QuantumState {
        nx: 3,
        ny: 2,
        nz: 1,
    });
    let f_close = interference_modulation(QuantumState {
        nx: 4,
        ny: 4,
        nz: 2,
    });
    let floor = 0.1 * f_first / f_close;
    if energy_mev <= start {
        1.0
    } else {
        let t = ((energy_mev - start) / (end - start)).min(1.0);
        1.0 + t * (floor - 1.0)
    }
}

struct ReverseShape {
    /// (center meV, height pA, width meV) of main, satellite, and
    /// reopened peaks.
    peaks: Vec<(f64, f64, f64)>,
}

fn build_reverse_shape(model: &DeviceModel, max_energy_mev: f64) -> ReverseShape {
    let w = model.peak_width_mv;
    let pc = model.peak_current_pa;
    let mains: Vec<(f64, f64)> = reverse_peak_energies(model)
        .into_iter()
        .map(|(e, s)| (e, pc * interference_modulation(s) * reverse_decay(model, e)))
        .collect();

    let mut peaks: Vec<(f64, f64, f64)> = mains.iter().map(|&(e, h)| (e, h, w)).collect();

    // Satellite series: interleaved at midpoints once charging reaches the
    // [4,4,1] state, at half width and half the local main-peak height.
    let onset = model.satellite_onset_mev();
    for pair in mains.windows(2) {
        let (e0, h0) = pair[0];
        let (e1, h1) = pair[1];
        if e0 >= onset {
            peaks.push(((e0 + e1) / 2.0, 0.5 * (h0 + h1) / 2.0, w / 2.0));
        }
    }

    // Broader peaks resume past the reopening state, on the quantum ladder.
    let reopen = model.reopen_energy_mev();
    if max_energy_mev + 6.0 * 2.0 * w >= reopen {
        for level in enumerate_levels(model.geometry, max_energy_mev + 6.0 * 2.0 * w).levels {
            if level.energy_mev >= reopen {
                peaks.push((level.energy_mev, pc, 2.0 * w));
            }
        }
    }
    ReverseShape { peaks }
}

fn reverse_current_at(model: &DeviceModel, shape: &ReverseShape, energy_mev: f64) -> f64 {
    if model.channel_phase(energy_mev) == ChannelPhase::Closed {
        return 0.0;
    }
    shape
        .peaks
        .iter()
        .map(|&(center, height, width)| height * gaussian((energy_mev - center) / width))
        .sum()
}

fn forward_current_at(model: &DeviceModel, peaks: &[f64], energy_mev: f64) -> f64 {
    let w = model.peak_width_mv;
    let pc = model.peak_current_pa;
    peaks
        .iter()
        .map(|&center| pc * gaussian((energy_mev - center) / w))
        .sum()
}

/// Counter-current dip inside the (E[1,2,2], E[2,2,2]) window, truncated
/// to the window so the trace stays non-negative outside it.
fn counter_current_at(model: &DeviceModel, energy_mev: f64) -> f64 {
    if !model.counter_current_enabled {
        return 0.0;
    }
    let (lo, hi) = model.counter_window_mev();
    if energy_mev <= lo || energy_mev >= hi {
        return 0.0;
    }
    let center = 0.5 * (lo + hi);
    let width = (hi - lo) / 8.0;
    -model.peak_current_pa * gaussian((energy_mev - center) / width)
}

/// Simulate a drain-bias sweep. Positive voltages drive the forward
/// charging branch, negative voltages the reverse branch; the drive
/// energy is 1000·|V| meV either way.
pub fn simulate_drain_sweep(model: &DeviceModel, sweep: &SweepConfig) -> Result<IVTrace> {
    if sweep.kind != SweepKind::DrainSweep {
        return Err(Error::InvalidSweep(format!(
            "expected a drain sweep, got {:?}",
            sweep.kind
        )));
    }
    sweep.validate()?;
    model.validate()?;

    let grid = ascending_grid(sweep);
    let n = grid.len();
    let noise = zigzag_noise(&model.mech, n, sweep.seed).samples;

    let max_abs_v = grid.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let max_e = max_abs_v * MEV_PER_V;
    let fwd_peaks = forward_peak_energies(model, max_e + 6.0 * model.peak_width_mv);
    let rev_shape = build_reverse_shape(model, max_e);

    let threshold = model.threshold_energy_mev();
    let rev_threshold = model.reverse_threshold_mev();
    let jump = model.staircase_jump_mev();
    let drop = model.staircase_drop_mev();
    let satellite_onset = model.satellite_onset_mev();

    let order: Vec<usize> = match sweep.direction {
        SweepDirection::Up => (0..n).collect(),
        SweepDirection::Down => (0..n).rev().collect(),
    };

    let mut points = Vec::with_capacity(n);
    let mut annotations = Vec::new();

    // Initial pump mode: a sweep starting at or above the jump energy is
    // taken to have already made the irreversible jump.
    let mut mode = match order.first().map(|&k| grid[k]) {
        Some(v0) if v0 >= 0.0 && v0 * MEV_PER_V >= jump => PumpMode::DoubleE,
        _ => PumpMode::SingleE,
    };

    let mut prev_above_threshold: Option<bool> = None;
    let mut prev_phase: Option<ChannelPhase> = None;
    let mut prev_past_satellites: Option<bool> = None;

    for &k in &order {
        let v = grid[k];
        let current = if v >= 0.0 {
            let e = v * MEV_PER_V;
            let next_mode = hysteresis_step(mode, sweep.direction, e, jump, drop);
            if next_mode != mode {
                annotations.push((
                    v,
                    match next_mode {
                        PumpMode::DoubleE => Annotation::Mode2e,
                        PumpMode::SingleE => Annotation::Mode1e,
                    },
                ));
                mode = next_mode;
            }
            let above = e >= threshold;
            if prev_above_threshold.is_some_and(|p| p != above) {
                annotations.push((v, Annotation::Threshold));
            }
            prev_above_threshold = Some(above);

            let mut i = mode.multiplier() * forward_current_at(model, &fwd_peaks, e);
            i += counter_current_at(model, e);
            if e < threshold {
                i += noise[k];
            }
            i
        } else {
            let e = -v * MEV_PER_V;
            let phase = model.channel_phase(e);
            if prev_phase.is_some_and(|p| p != phase) {
                let label = match phase {
                    ChannelPhase::Interfering => Some(Annotation::PhaseInterfering),
                    ChannelPhase::Closed => Some(Annotation::PhaseClosed),
                    ChannelPhase::Reopened => Some(Annotation::PhaseReopened),
                    ChannelPhase::Open => None,
                };
                if let Some(label) = label {
                    annotations.push((v, label));
                }
            }
            prev_phase = Some(phase);

            let above = e >= rev_threshold;
            if prev_above_threshold.is_some_and(|p| p != above) {
                annotations.push((v, Annotation::Threshold));
            }
            prev_above_threshold = Some(above);

            let past_sat = e >= satellite_onset;
            if prev_past_satellites.is_some_and(|p| p != past_sat) {
                annotations.push((v, Annotation::SatelliteOnset));
            }
            prev_past_satellites = Some(past_sat);

            let mut i = reverse_current_at(model, &rev_shape, e);
            if e < rev_threshold {
                i += noise[k];
            }
            i
        };
        points.push((v, current));
    }

    Ok(IVTrace {
        points,
        sweep: *sweep,
        annotations,
    })
}

/// Simulate a gate sweep at fixed drain bias: oscillation peaks at
/// onset + k·period with the zig-zag noise superposed on every sample.
pub fn simulate_gate_sweep(
    model: &DeviceModel,
    sweep: &SweepConfig,
    _v_ds: f64,
) -> Result<IVTrace> {
    if sweep.kind != SweepKind::GateSweep {
        return Err(Error::InvalidSweep(format!(
            "expected a gate sweep, got {:?}",
            sweep.kind
        )));
    }
    sweep.validate()?;
    model.validate()?;

    let grid = ascending_grid(sweep);
    let n = grid.len();
    let noise = zigzag_noise(&model.mech, n, sweep.seed).samples;

    let onset = model.gate.onset_vgs_v;
    let period = model.gate.period_dvgs_v;
    let width_v = model.peak_width_mv / 1e3;
    let pc = model.peak_current_pa;

    let v_max = grid.last().copied().unwrap_or(0.0);
    let mut centers = Vec::new();
    let mut c = onset;
    while c <= v_max + 6.0 * width_v {
        centers.push(c);
        c += period;
    }

    let order: Vec<usize> = match sweep.direction {
        SweepDirection::Up => (0..n).collect(),
        SweepDirection::Down => (0..n).rev().collect(),
    };

    let mut points = Vec::with_capacity(n);
    let mut annotations = Vec::new();
    let mut prev_charging: Option<bool> = None;

    for &k in &order {
        let v = grid[k];
        let charging = v >= onset;
        if prev_charging.is_some_and(|p| p != charging) {
            annotations.push((v, Annotation::Threshold));
        }
        prev_charging = Some(charging);

        let peak_sum: f64 = centers
            .iter()
            .map(|&center| pc * gaussian((v - center) / width_v))
            .sum();
        points.push((v, peak_sum + noise[k]));
    }

    Ok(IVTrace {
        points,
        sweep: *sweep,
        annotations,
    })
}

/// Trace CSV: voltage_V,current_pA,annotation. Coincident markers are
/// ';'-joined in the annotation cell.
pub fn trace_to_csv(trace: &IVTrace) -> String {
    let mut out = String::from("voltage_V,current_pA,annotation\n");
    for &(v, i) in &trace.points {
        let labels: Vec<&str> = trace
            .annotations
            .iter()
            .filter(|(av, _)| *av == v)
            .map(|(_, a)| a.as_str())
            .collect();
        out.push_str(&format!("{v:.6},{i:.6},{}\n", labels.join(";")));
    }
    out
}

/// Parse a trace CSV written by [`trace_to_csv`]. Sweep metadata is
/// reconstructed from the voltage column (kind defaults to a drain sweep).
pub fn trace_from_csv(text: &str) -> Result<IVTrace> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == "voltage_V,current_pA,annotation" => {}
        Some((_, header)) => {
            return Err(Error::TraceParse {
                line: 1,
                message: format!("unexpected header {header:?}"),
            })
        }
        None => {
            return Err(Error::TraceParse {
                line: 1,
                message: "empty file".into(),
            })
        }
    }

    let mut points = Vec::new();
    let mut annotations = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::TraceParse {
                line: line_no,
                message: format!("expected 3 columns, found {}", fields.len()),
            });
        }
        let v: f64 = fields[0].trim().parse().map_err(|_| Error::TraceParse {
            line: line_no,
            message: format!("bad voltage {:?}", fields[0]),
        })?;
        let i: f64 = fields[1].trim().parse().map_err(|_| Error::TraceParse {
            line: line_no,
            message: format!("bad current {:?}", fields[1]),
        })?;
        for token in fields[2].trim().split(';').filter(|t| !t.is_empty()) {
            let ann = Annotation::parse(token).ok_or_else(|| Error::TraceParse {
                line: line_no,
                message: format!("unknown annotation {token:?}"),
            })?;
            annotations.push((v, ann));
        }
        points.push((v, i));
    }

    let (v_start, v_end) = match (points.first(), points.last()) {
        (Some(&(a, _)), Some(&(b, _))) => (a, b),
        _ => (0.0, 0.0),
    };
    let step = if points.len() > 1 {
        (points[1].0 - points[0].0).abs()
    } else {
        1e-3
    };
    let sweep = SweepConfig {
        v_start,
        v_end,
        step_v: step.max(f64::MIN_POSITIVE),
        direction: if v_end >= v_start {
            SweepDirection::Up
        } else {
            SweepDirection::Down
        },
        kind: SweepKind::DrainSweep,
        seed: 0,
    };
    Ok(IVTrace {
        points,
        sweep,
        annotations,
    })
}
