//! Shared fixtures for the benchmark targets.

use nanoshuttle_core::transport::{DeviceModel, SweepConfig, SweepDirection, SweepKind};

/// Default device with the noise generator silenced, so peak synthesis
/// dominates the measurement.
pub fn quiet_model() -> DeviceModel {
    let mut model = DeviceModel::default();
    model.mech.noise_amplitude_di_pa = 0.0;
    model
}

/// Full forward sweep at 1 mV resolution.
pub fn forward_sweep() -> SweepConfig {
    SweepConfig {
        v_start: 0.0,
        v_end: 1.0,
        step_v: 1e-3,
        direction: SweepDirection::Up,
        kind: SweepKind::DrainSweep,
        seed: 1,
    }
}

/// Full reverse sweep at 1 mV resolution.
pub fn reverse_sweep() -> SweepConfig {
    SweepConfig {
        v_start: 0.0,
        v_end: -1.0,
        step_v: 1e-3,
        direction: SweepDirection::Down,
        kind: SweepKind::DrainSweep,
        seed: 1,
    }
}
