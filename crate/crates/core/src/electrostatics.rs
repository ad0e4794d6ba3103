//! Junction capacitance, charging energy, gate coupling, and RC bounds
//! for the double-barrier device.

use crate::constants::{ELEMENTARY_CHARGE, MEV_PER_VOLT, VACUUM_PERMITTIVITY};
use crate::error::{Error, Result};

/// Nominal single-junction capacitance (F) used for the RC current bound
/// and the default peak current. The charging analysis keeps its own,
/// geometry-derived capacitance.
pub const NOMINAL_RC_CAPACITANCE_F: f64 = 1e-18;

/// One tunnel junction: plate area, barrier, dielectric, resistance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JunctionParams {
    /// Tunnel face area L x H (nm²).
    pub face_area_a_nm2: f64,
    /// Nitride barrier thickness (nm).
    pub barrier_thickness_d_nm: f64,
    /// Relative permittivity of the barrier.
    pub relative_permittivity: f64,
    /// Total junction resistance (ohm).
    pub junction_resistance_r_ohm: f64,
}

impl Default for JunctionParams {
    fn default() -> Self {
        Self {
            face_area_a_nm2: 64.0,
            barrier_thickness_d_nm: 3.0,
            relative_permittivity: 11.7,
            junction_resistance_r_ohm: 1e11,
        }
    }
}

impl JunctionParams {
    pub fn validate(&self) -> Result<()> {
        let ok = self.face_area_a_nm2 > 0.0
            && self.barrier_thickness_d_nm > 0.0
            && self.relative_permittivity > 0.0
            && self.junction_resistance_r_ohm > 0.0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "junction parameters must all be positive: {self:?}"
            )))
        }
    }
}

/// Side-gate coupling parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateParams {
    /// Gate-dot coupling strength, in (0, 1).
    pub alpha: f64,
    /// Gate capacitance (aF).
    pub gate_capacitance_cg_af: f64,
    /// Gate voltage at which charging begins (V).
    pub onset_vgs_v: f64,
    /// Gate-sweep oscillation period (V).
    pub period_dvgs_v: f64,
}

impl Default for GateParams {
    /// Fitted scalars for the 9 nm side oxide: alpha ~ 0.37, Cg ~ 0.83 aF,
    /// charging onset 1.0 V with 0.5 V periodicity.
    fn default() -> Self {
        Self {
            alpha: 0.37,
            gate_capacitance_cg_af: 0.83,
            onset_vgs_v: 1.0,
            period_dvgs_v: 0.5,
        }
    }
}

impl GateParams {
    pub fn validate(&self) -> Result<()> {
        let ok = self.alpha > 0.0
            && self.alpha < 1.0
            && self.gate_capacitance_cg_af > 0.0
            && self.period_dvgs_v > 0.0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "gate parameters out of range: {self:?}"
            )))
        }
    }
}

/// Parallel-plate junction capacitance eps_r*eps0*A/D in aF.
pub fn junction_capacitance_af(p: &JunctionParams) -> f64 {
    // eps0 [F/m] * A [nm²] / D [nm] = eps0 * 1e-9 F; 1 F = 1e18 aF.
    p.relative_permittivity * VACUUM_PERMITTIVITY * p.face_area_a_nm2 / p.barrier_thickness_d_nm
        * 1e9
}

/// Charging energy e²/2C in meV for a capacitance in aF.
pub fn charging_energy_mev(capacitance_af: f64) -> f64 {
    ELEMENTARY_CHARGE / (2.0 * capacitance_af * 1e-18) * MEV_PER_VOLT
}

/// Invert the gate-charging identities e = alpha*dVgs*Cg and Cg = alpha*C
/// for (alpha, Cg) given the observed sweep period and the junction
/// capacitance. Errors when alpha would reach 1.
pub fn gate_alpha_from_period(period_dvgs_v: f64, capacitance_af: f64) -> Result<(f64, f64)> {
    if period_dvgs_v <= 0.0 || capacitance_af <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "period and capacitance must be positive, got {period_dvgs_v} V, {capacitance_af} aF"
        )));
    }
    let ratio = ELEMENTARY_CHARGE / (period_dvgs_v * capacitance_af * 1e-18);
    if ratio >= 1.0 {
        return Err(Error::GateAlphaUnphysical { ratio });
    }
    let alpha = ratio.sqrt();
    Ok((alpha, alpha * capacitance_af))
}

/// Total drive energy e(V_ds + alpha*V_gs) per electron, in meV.
pub fn total_drive_energy_mev(v_ds: f64, v_gs: f64, alpha: f64) -> f64 {
    MEV_PER_VOLT * (v_ds + alpha * v_gs)
}

/// RC charging time and the e/RC current ceiling.
/// Inputs in ohm and farad; returns (tau in s, I_peak in A).
pub fn rc_limited_current(resistance_ohm: f64, capacitance_f: f64) -> (f64, f64) {
    let tau = resistance_ohm * capacitance_f;
    (tau, ELEMENTARY_CHARGE / tau)
}
