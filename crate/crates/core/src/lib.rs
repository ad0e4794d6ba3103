//! Deterministic simulator and analysis toolkit for single-electron
//! transport through a nanoscale quantum box with electromechanical
//! feedback.
//!
//! The crate is organized around the experiment's pipeline:
//!
//! - [`spectrum`]: hard-wall box levels, degeneracy grouping, state lookup
//! - [`electrostatics`]: junction capacitance, charging energy, gate coupling
//! - [`mechanics`]: shuttle spring/work/frequency arithmetic and zig-zag noise
//! - [`transport`]: forward/reverse/gate I-V synthesis with staircase
//!   hysteresis, interference, and channel closure
//! - [`analysis`]: peak detection and parameter recovery from traces
//! - [`config`]: INI-style device config files
//!
//! All simulation is a pure function of (model, sweep) and bitwise
//! reproducible for a given seed.

pub mod analysis;
pub mod config;
pub mod constants;
pub mod electrostatics;
pub mod error;
pub mod mechanics;
pub mod rng;
pub mod spectrum;
pub mod transport;

pub use analysis::PeakReport;
pub use electrostatics::{GateParams, JunctionParams};
pub use error::{Error, Result};
pub use mechanics::{MechanicalParams, ZigzagSignal};
pub use spectrum::{BoxGeometry, EnergyLevel, QuantumState, StateTable};
pub use transport::{
    Annotation, ChannelPhase, DeviceModel, IVTrace, PumpMode, SweepConfig, SweepDirection,
    SweepKind,
};
