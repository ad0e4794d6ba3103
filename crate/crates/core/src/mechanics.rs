//! Electromechanical shuttle arithmetic: spring constant, displacement,
//! stored work, vibration frequencies, coupling ratio, and the seeded
//! sub-threshold zig-zag noise generator.

use crate::constants::ELEMENTARY_CHARGE;
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Fundamental-to-net vibration mode factor of the box, a finite-element
/// modal-analysis result: the box vibrates at 59 times omega_0.
pub const NET_MODE_FACTOR: f64 = 59.0;

/// Calibration point mapping elastic stress over the tunnel face to the
/// spring constant: 200 GPa over 64 nm² gives 0.16 N/m.
const SPRING_CAL_SIGMA_PA: f64 = 200e9;
const SPRING_CAL_AREA_NM2: f64 = 64.0;
const SPRING_CAL_K_N_PER_M: f64 = 0.16;

/// Shuttle and noise parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MechanicalParams {
    /// Nitride spring constant (N/m).
    pub spring_k_n_per_m: f64,
    /// Nominal elastic stress (Pa); informational.
    pub stress_sigma_pa: f64,
    /// Mass density (kg/m³).
    pub density_rho_kg_per_m3: f64,
    /// Vibrating box volume (m³).
    pub box_volume_m3: f64,
    /// Tunneling rate (1/s).
    pub tunnel_rate_gamma_per_s: f64,
    /// Induced charge density (1/cm³).
    pub charge_density_ne_per_cm3: f64,
    /// Nominal zig-zag excursion magnitude (pA). Zero disables the noise.
    pub noise_amplitude_di_pa: f64,
    /// Up/down excursion imbalance in [0, 1).
    pub asymmetry: f64,
}

impl Default for MechanicalParams {
    fn default() -> Self {
        Self {
            spring_k_n_per_m: 0.16,
            stress_sigma_pa: 200e9,
            density_rho_kg_per_m3: 2.4e3,
            box_volume_m3: 2e-25,
            tunnel_rate_gamma_per_s: 1e12,
            charge_density_ne_per_cm3: 1e16,
            noise_amplitude_di_pa: 3.0,
            asymmetry: 0.3,
        }
    }
}

impl MechanicalParams {
    pub fn validate(&self) -> Result<()> {
        let ok = self.spring_k_n_per_m > 0.0
            && self.density_rho_kg_per_m3 > 0.0
            && self.box_volume_m3 > 0.0
            && self.tunnel_rate_gamma_per_s > 0.0
            && self.charge_density_ne_per_cm3 > 0.0
            && self.noise_amplitude_di_pa >= 0.0
            && (0.0..1.0).contains(&self.asymmetry);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "mechanical parameters out of range: {self:?}"
            )))
        }
    }
}

/// Deterministic alternating-sign noise realization.
#[derive(Debug, Clone, PartialEq)]
pub struct ZigzagSignal {
    /// Current excursions (pA); signs strictly alternate starting positive.
    pub samples: Vec<f64>,
    pub seed: u64,
    pub mean_pa: f64,
}

/// Spring constant from stress over the tunnel face, linear through the
/// (200 GPa, 64 nm²) -> 0.16 N/m calibration point. The quoted stress
/// unit does not reduce to N/m dimensionally, so the mapping is kept as
/// a calibration rather than a raw product.
pub fn spring_constant(sigma_pa: f64, area_a_nm2: f64) -> f64 {
    SPRING_CAL_K_N_PER_M * (sigma_pa / SPRING_CAL_SIGMA_PA) * (area_a_nm2 / SPRING_CAL_AREA_NM2)
}

/// Elastic work K(dX)²/2 stored in the flexed barrier, in meV.
pub fn mechanical_work_mev(spring_k_n_per_m: f64, dx_nm: f64) -> f64 {
    let dx_m = dx_nm * 1e-9;
    0.5 * spring_k_n_per_m * dx_m * dx_m / ELEMENTARY_CHARGE * 1e3
}

/// Invert dI = e * (A*dX) * n_e * Gamma for the displacement dX (nm).
///
/// The affected volume is taken as A*dX; `divide_by_three` applies the
/// alternative n_e ∝ A*dX/3 convention, which triples the inferred dX.
pub fn displacement_from_noise_nm(
    di_pa: f64,
    area_a_nm2: f64,
    ne_per_cm3: f64,
    gamma_per_s: f64,
    divide_by_three: bool,
) -> f64 {
    let di_a = di_pa * 1e-12;
    let area_cm2 = area_a_nm2 * 1e-14;
    let dx_cm = di_a / (ELEMENTARY_CHARGE * area_cm2 * ne_per_cm3 * gamma_per_s);
    let factor = if divide_by_three { 3.0 } else { 1.0 };
    dx_cm * factor * 1e7
}

/// Forward form of the same relation: dI (pA) from a displacement (nm).
pub fn noise_current_from_displacement_pa(
    dx_nm: f64,
    area_a_nm2: f64,
    ne_per_cm3: f64,
    gamma_per_s: f64,
    divide_by_three: bool,
) -> f64 {
    let area_cm2 = area_a_nm2 * 1e-14;
    let dx_cm = dx_nm * 1e-7;
    let factor = if divide_by_three { 3.0 } else { 1.0 };
    ELEMENTARY_CHARGE * area_cm2 * (dx_cm / factor) * ne_per_cm3 * gamma_per_s * 1e12
}

/// Fundamental and net vibration frequencies (1/s): omega_0 = sqrt(K/M)
/// with M = rho*V, and the 59*omega_0 net mode.
pub fn oscillator_frequencies(
    spring_k_n_per_m: f64,
    density_rho_kg_per_m3: f64,
    volume_m3: f64,
) -> (f64, f64) {
    let mass = density_rho_kg_per_m3 * volume_m3;
    let omega0 = (spring_k_n_per_m / mass).sqrt();
    (omega0, NET_MODE_FACTOR * omega0)
}

/// Split the charging energy across the level gap: dE_e = E_c - dE_n and
/// lambda = dE_e/dE_n. Errors when E_c does not exceed the gap.
pub fn coupling_lambda(ec_mev: f64, den_mev: f64) -> Result<(f64, f64)> {
    if den_mev <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "level gap must be positive, got {den_mev} meV"
        )));
    }
    if ec_mev <= den_mev {
        return Err(Error::NoMechanicalBudget {
            ec_mev,
            gap_mev: den_mev,
        });
    }
    let dee = ec_mev - den_mev;
    Ok((dee, dee / den_mev))
}

/// Generate `n_samples` alternating-sign excursions. Even samples are
/// positive with magnitude dI*(1+asymmetry), odd samples negative with
/// dI*(1-asymmetry); each carries multiplicative jitter in [0.5, 1.5)
/// from a seeded generator.
pub fn zigzag_noise(params: &MechanicalParams, n_samples: usize, seed: u64) -> ZigzagSignal {
    let mut rng = SplitMix64::new(seed);
    let di = params.noise_amplitude_di_pa;
    let samples: Vec<f64> = (0..n_samples)
        .map(|k| {
            let jitter = rng.uniform(0.5, 1.5);
            if k % 2 == 0 {
                di * (1.0 + params.asymmetry) * jitter
            } else {
                -di * (1.0 - params.asymmetry) * jitter
            }
        })
        .collect();
    let mean_pa = if samples.is_empty() {
        0.0
    } else {
        samples.iter().sum::<f64>() / samples.len() as f64
    };
    ZigzagSignal {
        samples,
        seed,
        mean_pa,
    }
}

/// CSV export: sample_index,current_pA.
pub fn zigzag_to_csv(signal: &ZigzagSignal) -> String {
    let mut out = String::from("sample_index,current_pA\n");
    for (k, value) in signal.samples.iter().enumerate() {
        out.push_str(&format!("{k},{value:.6}\n"));
    }
    out
}
