//! Configured scenarios: radial sweeps over drives and upper sublevels, and
//! their CSV output.

mod config;
mod csv;
mod sweep;

pub use config::{load_config, preset, to_config_text, ConfigError, DriveSpec, SweepConfig, PAPER_FIG2_FIG4, PRESETS};
pub use csv::{emit_csv, format_value, write_csv, CSV_HEADER};
pub use sweep::{radii, resolve_drive, run_sweep, run_sweep_with, SweepRow, SweepTable};
