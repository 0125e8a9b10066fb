use num_complex::Complex64;

use super::ModeSolution;
use crate::error::{domain, Result};

/// A mode driven with given direction, circulation, power and detuning.
#[derive(Clone, Debug, PartialEq)]
pub struct DriveConfig {
    /// Mode normalized to `power`.
    pub mode: ModeSolution,
    /// Propagation direction, ±1.
    pub f: i32,
    /// Polarization circulation, ±1. Ignored (taken as +1) for TE/TM.
    pub p: i32,
    /// Guided power, W.
    pub power: f64,
    /// Detuning `ω - ω0`, rad/s.
    pub detuning: f64,
}

impl DriveConfig {
    pub fn new(mode: &ModeSolution, f: i32, p: i32, power: f64, detuning: f64) -> Result<Self> {
        if f.abs() != 1 || p.abs() != 1 {
            return Err(domain(format!("f and p must be ±1, got f = {f}, p = {p}")));
        }
        if !detuning.is_finite() {
            return Err(domain("detuning must be finite"));
        }
        Ok(DriveConfig {
            mode: mode.normalize_power(power)?,
            f,
            p,
            power,
            detuning,
        })
    }

    /// Circulation that enters the field; TE/TM modes carry a single polarization.
    pub fn effective_p(&self) -> i32 {
        if self.mode.id.is_hybrid() {
            self.p
        } else {
            1
        }
    }

    pub fn l(&self) -> i32 {
        self.mode.id.l as i32
    }

    /// Photon angular momentum per ħ, `p l`.
    pub fn photon_angular_momentum(&self) -> i32 {
        self.effective_p() * self.l()
    }
}

/// Complex field amplitude at one point in cylindrical `(r, φ, z)` and
/// fiber-frame Cartesian `(x, y, z)` components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldAmplitude {
    pub cylindrical: [Complex64; 3],
    pub cartesian: [Complex64; 3],
}

/// `(e_r r̂ + p e_φ φ̂ + f e_z ẑ) exp(i f β z + i p l φ)`.
pub fn field_amplitude(drive: &DriveConfig, r: f64, phi: f64, z: f64) -> FieldAmplitude {
    let prof = drive.mode.profile(r);
    let p = drive.effective_p() as f64;
    let f = drive.f as f64;
    let phase = Complex64::from_polar(1.0, f * drive.mode.beta * z + p * drive.l() as f64 * phi);
    let cyl = [prof.e[0] * phase, p * prof.e[1] * phase, f * prof.e[2] * phase];
    let (s, c) = phi.sin_cos();
    let cart = [c * cyl[0] - s * cyl[1], s * cyl[0] + c * cyl[1], cyl[2]];
    FieldAmplitude {
        cylindrical: cyl,
        cartesian: cart,
    }
}
