//! Physical constants (exact SI / CODATA 2018 values) and the derived
//! unit-conversion coefficients used throughout the crate.

use std::f64::consts::PI;

/// Elementary charge (C). Exact SI value.
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;

/// Planck constant (J·s). Exact SI value.
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Reduced Planck constant (J·s).
pub const HBAR: f64 = PLANCK / (2.0 * PI);

/// Free electron mass (kg). CODATA 2018.
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;

/// Vacuum permittivity (F/m). CODATA 2018.
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;

/// Hard-wall box energy coefficient pi^2*hbar^2/(2*m_e) in meV·nm².
///
/// Uses the free electron mass; the measured level ladder of the
/// nitride-encased box tracks the free-mass spectrum. Evaluates to
/// ~376.030 meV·nm² (0.376030 eV·nm²).
pub const BOX_ENERGY_COEFF_MEV_NM2: f64 =
    PI * PI * HBAR * HBAR / (2.0 * ELECTRON_MASS) / ELEMENTARY_CHARGE * 1e21;

/// meV carried by one elementary charge per volt.
pub const MEV_PER_VOLT: f64 = 1e3;
