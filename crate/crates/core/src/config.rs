//! Device config files: flat INI-style sections with `key = value` lines.
//!
//! Every key is optional and falls back to the built-in defaults; unknown
//! sections or keys are rejected by name. Lines starting with `#` or `;`
//! are comments.
//!
//! ```text
//! [geometry]
//! length_l = 8.0      # nm
//! [transport]
//! ec_spacing_mev = 35.0
//! ```

use std::path::Path;

use crate::electrostatics::{rc_limited_current, NOMINAL_RC_CAPACITANCE_F};
use crate::error::{Error, Result};
use crate::transport::DeviceModel;

const SECTIONS: [&str; 5] = ["geometry", "junction", "gate", "mechanics", "transport"];

/// Parse a config document into a device model over the defaults.
pub fn parse_device_config(text: &str) -> Result<DeviceModel> {
    let mut model = DeviceModel::default();
    let mut section: Option<String> = None;
    let mut peak_current_set = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let name = name.trim().to_ascii_lowercase();
            if !SECTIONS.contains(&name.as_str()) {
                return Err(Error::Config {
                    line: line_no,
                    message: format!("unknown section [{name}]"),
                });
            }
            section = Some(name);
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Config {
                line: line_no,
                message: format!("expected `key = value`, got {line:?}"),
            });
        };
        let key = key.trim().to_ascii_lowercase();
        // Allow trailing comments after the value.
        let value = value
            .split(['#', ';'])
            .next()
            .unwrap_or("")
            .trim()
            .to_string();
        let Some(section) = section.as_deref() else {
            return Err(Error::Config {
                line: line_no,
                message: format!("key {key:?} appears before any [section]"),
            });
        };

        let num = |v: &str| -> Result<f64> {
            v.parse().map_err(|_| Error::Config {
                line: line_no,
                message: format!("expected a number for {key:?}, got {v:?}"),
            })
        };
        let flag = |v: &str| -> Result<bool> {
            match v.to_ascii_lowercase().as_str() {
                "true" | "1" | "yes" | "on" => Ok(true),
                "false" | "0" | "no" | "off" => Ok(false),
                other => Err(Error::Config {
                    line: line_no,
                    message: format!("expected a boolean for {key:?}, got {other:?}"),
                }),
            }
        };

        match (section, key.as_str()) {
            ("geometry", "length_l") => model.geometry.length_l_nm = num(&value)?,
            ("geometry", "width_w") => model.geometry.width_w_nm = num(&value)?,
            ("geometry", "height_h") => model.geometry.height_h_nm = num(&value)?,

            ("junction", "face_area_a") => model.junction.face_area_a_nm2 = num(&value)?,
            ("junction", "barrier_thickness_d") => {
                model.junction.barrier_thickness_d_nm = num(&value)?
            }
            ("junction", "relative_permittivity") => {
                model.junction.relative_permittivity = num(&value)?
            }
            ("junction", "junction_resistance_r") => {
                model.junction.junction_resistance_r_ohm = num(&value)?
            }

            ("gate", "alpha") => model.gate.alpha = num(&value)?,
            ("gate", "gate_capacitance_cg") => model.gate.gate_capacitance_cg_af = num(&value)?,
            ("gate", "onset_vgs") => model.gate.onset_vgs_v = num(&value)?,
            ("gate", "period_dvgs") => model.gate.period_dvgs_v = num(&value)?,

            ("mechanics", "spring_k") => model.mech.spring_k_n_per_m = num(&value)?,
            ("mechanics", "stress_sigma") => model.mech.stress_sigma_pa = num(&value)?,
            ("mechanics", "density_rho") => model.mech.density_rho_kg_per_m3 = num(&value)?,
            ("mechanics", "box_volume") => model.mech.box_volume_m3 = num(&value)?,
            ("mechanics", "tunnel_rate_gamma") => model.mech.tunnel_rate_gamma_per_s = num(&value)?,
            ("mechanics", "charge_density_ne") => {
                model.mech.charge_density_ne_per_cm3 = num(&value)?
            }
            ("mechanics", "noise_amplitude_di") => model.mech.noise_amplitude_di_pa = num(&value)?,
            ("mechanics", "asymmetry") => model.mech.asymmetry = num(&value)?,

            ("transport", "peak_width_mv") => model.peak_width_mv = num(&value)?,
            ("transport", "peak_current_pa") => {
                model.peak_current_pa = num(&value)?;
                peak_current_set = true;
            }
            ("transport", "ec_spacing_mev") => model.ec_spacing_mev = num(&value)?,
            ("transport", "counter_current_enabled") => {
                model.counter_current_enabled = flag(&value)?
            }
            ("transport", "quantum_ladder") => model.quantum_ladder = flag(&value)?,

            (section, key) => {
                return Err(Error::Config {
                    line: line_no,
                    message: format!("unknown key {key:?} in section [{section}]"),
                })
            }
        }
    }

    // The default peak current tracks e/RC of the configured junction
    // unless set explicitly.
    if !peak_current_set {
        let (_, i_peak_a) = rc_limited_current(
            model.junction.junction_resistance_r_ohm,
            NOMINAL_RC_CAPACITANCE_F,
        );
        model.peak_current_pa = i_peak_a * 1e12;
    }

    if model.geometry.length_l_nm <= 0.0
        || model.geometry.width_w_nm <= 0.0
        || model.geometry.height_h_nm <= 0.0
    {
        return Err(Error::InvalidParameter(format!(
            "box dimensions must be positive: {:?}",
            model.geometry
        )));
    }
    model.validate()?;
    Ok(model)
}

/// Load a config file, or the defaults when no path is given.
pub fn load_device_config(path: Option<&Path>) -> Result<DeviceModel> {
    match path {
        None => Ok(DeviceModel::default()),
        Some(p) => parse_device_config(&std::fs::read_to_string(p)?),
    }
}
