//! Trace analysis: peak detection, spacing statistics, charging-energy
//! and gate-coupling estimation, and threshold-to-state assignment.

use crate::electrostatics::gate_alpha_from_period;
use crate::error::{Error, Result};
use crate::spectrum::{find_states_near, EnergyLevel, StateTable};
use crate::transport::IVTrace;

/// Default peak-detection floor (pA).
pub const DEFAULT_MIN_HEIGHT_PA: f64 = 0.2;
/// Default prominence floor (pA).
pub const DEFAULT_MIN_PROMINENCE_PA: f64 = 0.1;

/// Extracted peaks and the physics derived from them.
#[derive(Debug, Clone, PartialEq)]
pub struct PeakReport {
    /// (voltage V, height pA), sorted by voltage.
    pub peaks: Vec<(f64, f64)>,
    /// Median inter-peak spacing (V); present with >= 2 peaks.
    pub median_spacing_v: Option<f64>,
    /// Charging-energy estimate (meV) from the median spacing.
    pub ec_estimate_mev: Option<f64>,
    /// Per-peak candidate levels (peak index, levels nearest first).
    pub assigned_states: Vec<(usize, Vec<EnergyLevel>)>,
}

/// Local maxima above `min_height` whose prominence (height above the
/// higher of the two flanking valleys) exceeds `min_prominence`. Plateau
/// maxima report their center sample. Output is sorted by voltage.
pub fn detect_peaks(
    trace: &IVTrace,
    min_height_pa: f64,
    min_prominence_pa: f64,
) -> Vec<(f64, f64)> {
    let pts = &trace.points;
    let n = pts.len();
    let mut peaks: Vec<(f64, f64)> = Vec::new();
    if n < 3 {
        return peaks;
    }
    let y = |k: usize| pts[k].1;

    let mut i = 1;
    while i < n - 1 {
        if y(i) > y(i - 1) {
            // Extend across a flat top.
            let mut j = i;
            while j + 1 < n && y(j + 1) == y(i) {
                j += 1;
            }
            if j < n - 1 && y(j + 1) < y(i) {
                let mid = (i + j) / 2;
                let height = y(mid);
                if height > min_height_pa && prominence(pts, i, j) > min_prominence_pa {
                    peaks.push((pts[mid].0, height));
                }
            }
            i = j + 1;
        } else {
            i += 1;
        }
    }
    peaks.sort_by(|a, b| a.0.total_cmp(&b.0));
    peaks
}

/// Drop from the peak to the higher of the two valleys that separate it
/// from the nearest strictly higher samples (or the trace ends).
fn prominence(pts: &[(f64, f64)], left_edge: usize, right_edge: usize) -> f64 {
    let height = pts[left_edge].1;
    let mut left_min = height;
    let mut k = left_edge;
    while k > 0 {
        k -= 1;
        if pts[k].1 > height {
            break;
        }
        left_min = left_min.min(pts[k].1);
    }
    let mut right_min = height;
    let mut k = right_edge;
    while k + 1 < pts.len() {
        k += 1;
        if pts[k].1 > height {
            break;
        }
        right_min = right_min.min(pts[k].1);
    }
    height - left_min.max(right_min)
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}

/// Median inter-peak spacing in volts.
pub fn median_peak_spacing(peaks: &[(f64, f64)]) -> Result<f64> {
    if peaks.len() < 2 {
        return Err(Error::InsufficientPeaks { found: peaks.len() });
    }
    let mut spacings: Vec<f64> = peaks.windows(2).map(|p| p[1].0 - p[0].0).collect();
    spacings.sort_by(|a, b| a.total_cmp(b));
    Ok(median(&spacings))
}

/// Charging-energy estimate: the median spacing read as meV (1 V of bias
/// maps to 1000 meV of drive energy).
pub fn estimate_charging_energy(peaks: &[(f64, f64)]) -> Result<f64> {
    Ok(median_peak_spacing(peaks)? * 1e3)
}

/// Gate coupling from a gate trace: the detected oscillation period feeds
/// the alpha/Cg inversion against the junction capacitance (aF).
pub fn estimate_alpha(gate_trace: &IVTrace, capacitance_af: f64) -> Result<(f64, f64)> {
    let peaks = detect_peaks(gate_trace, DEFAULT_MIN_HEIGHT_PA, DEFAULT_MIN_PROMINENCE_PA);
    let period = median_peak_spacing(&peaks)?;
    gate_alpha_from_period(period, capacitance_af)
}

/// Candidate levels for a threshold voltage, nearest first.
pub fn assign_threshold_state(
    v_t: f64,
    table: &StateTable,
    tol_mev: f64,
) -> Result<Vec<EnergyLevel>> {
    find_states_near(table, v_t * 1e3, tol_mev)
}

/// Full report for a drain-style trace: detected peaks, spacing/E_c
/// statistics, and per-peak state candidates from the table.
pub fn build_report(trace: &IVTrace, table: &StateTable, tol_mev: f64) -> PeakReport {
    let peaks = detect_peaks(trace, DEFAULT_MIN_HEIGHT_PA, DEFAULT_MIN_PROMINENCE_PA);
    let median_spacing_v = median_peak_spacing(&peaks).ok();
    let ec_estimate_mev = median_spacing_v.map(|s| s * 1e3);
    let assigned_states = peaks
        .iter()
        .enumerate()
        .map(|(idx, (v, _))| {
            let candidates = find_states_near(table, v.abs() * 1e3, tol_mev).unwrap_or_default();
            (idx, candidates)
        })
        .collect();
    PeakReport {
        peaks,
        median_spacing_v,
        ec_estimate_mev,
        assigned_states,
    }
}

impl PeakReport {
    /// CSV export: peak_V,height_pA,candidate_states with levels
    /// ';'-joined and states inside a level '/'-joined.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("peak_V,height_pA,candidate_states\n");
        for (idx, &(v, h)) in self.peaks.iter().enumerate() {
            let candidates = self
                .assigned_states
                .iter()
                .find(|(i, _)| *i == idx)
                .map(|(_, levels)| {
                    levels
                        .iter()
                        .map(|l| l.label())
                        .collect::<Vec<_>>()
                        .join(";")
                })
                .unwrap_or_default();
            out.push_str(&format!("{v:.6},{h:.6},{candidates}\n"));
        }
        out
    }

    /// Plain-text summary block.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("peaks detected: {}\n", self.peaks.len()));
        if let Some(s) = self.median_spacing_v {
            out.push_str(&format!("median spacing = {:.4} V\n", s));
        }
        if let Some(ec) = self.ec_estimate_mev {
            out.push_str(&format!("E_c estimate   = {:.4} meV\n", ec));
        }
        for (idx, levels) in &self.assigned_states {
            if let Some(best) = levels.first() {
                out.push_str(&format!(
                    "peak {} at {:.4} V -> {} ({:.4} meV)\n",
                    idx,
                    self.peaks[*idx].0,
                    best.label(),
                    best.energy_mev
                ));
            }
        }
        out
    }
}
