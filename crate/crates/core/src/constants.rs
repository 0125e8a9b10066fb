//! Physical constants (CODATA 2018), SI units.

use std::f64::consts::PI;

/// Elementary charge, C.
pub const E_CHARGE: f64 = 1.602_176_634e-19;
/// Reduced Planck constant, J s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// Electron mass, kg.
pub const M_ELECTRON: f64 = 9.109_383_701_5e-31;
/// Speed of light in vacuum, m/s.
pub const C: f64 = 2.997_924_58e8;
/// Vacuum permittivity, F/m.
pub const EPSILON_0: f64 = 8.854_187_812_8e-12;
/// Vacuum permeability, derived from `EPSILON_0` and `C`.
pub const MU_0: f64 = 1.0 / (EPSILON_0 * C * C);

/// Free-space decay rate of the Rb 4D5/2 level, 1/s.
pub const GAMMA_RB_4D52: f64 = 1.119e7;

/// Angular frequency for a vacuum wavelength.
pub fn angular_frequency(wavelength: f64) -> f64 {
    2.0 * PI * C / wavelength
}
