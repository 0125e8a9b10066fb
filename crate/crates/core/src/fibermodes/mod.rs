//! Guided modes of a two-layer step-index circular waveguide.

pub mod bessel;
mod field;
mod profile;
mod solver;

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

pub use bessel::{bessel_j_orders, bessel_k_orders, bessel_suite, BesselSuite};
pub use field::{field_amplitude, DriveConfig, FieldAmplitude};
pub use profile::{ModeProfile, ModeSolution};
pub use solver::{characteristic_residual, solve_modes, SCAN_POINTS};

/// Radius and refractive indices of a core surrounded by an infinite cladding.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FiberSpec {
    /// Core radius, m.
    pub radius: f64,
    pub n_core: f64,
    pub n_clad: f64,
}

impl FiberSpec {
    pub fn new(radius: f64, n_core: f64, n_clad: f64) -> Result<Self> {
        if !(radius > 0.0) {
            return Err(domain(format!("fiber radius must be positive, got {radius}")));
        }
        if !(n_clad >= 1.0 && n_core > n_clad) {
            return Err(domain(format!(
                "need n_core > n_clad >= 1, got n_core = {n_core}, n_clad = {n_clad}"
            )));
        }
        Ok(FiberSpec { radius, n_core, n_clad })
    }

    /// Silica nanofiber in vacuum, 280 nm radius, index at 516.5 nm.
    pub fn silica_nanofiber() -> Self {
        FiberSpec {
            radius: 280e-9,
            n_core: 1.4615,
            n_clad: 1.0,
        }
    }
}

/// Normalized frequency `V = (2πa/λ) sqrt(n1² - n2²)`.
pub fn vnumber(fiber: &FiberSpec, wavelength: f64) -> f64 {
    2.0 * std::f64::consts::PI * fiber.radius / wavelength
        * (fiber.n_core * fiber.n_core - fiber.n_clad * fiber.n_clad).sqrt()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModeKind {
    HE,
    EH,
    TE,
    TM,
}

/// Mode family with azimuthal order `l` and radial order `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeId {
    pub kind: ModeKind,
    pub l: u32,
    pub m: u32,
}

impl ModeId {
    pub fn new(kind: ModeKind, l: u32, m: u32) -> Result<Self> {
        let l_ok = match kind {
            ModeKind::HE | ModeKind::EH => l >= 1,
            ModeKind::TE | ModeKind::TM => l == 0,
        };
        if !l_ok || m == 0 {
            return Err(domain(format!("invalid mode orders l = {l}, m = {m} for {kind:?}")));
        }
        Ok(ModeId { kind, l, m })
    }

    pub const HE11: ModeId = ModeId {
        kind: ModeKind::HE,
        l: 1,
        m: 1,
    };
    pub const TE01: ModeId = ModeId {
        kind: ModeKind::TE,
        l: 0,
        m: 1,
    };
    pub const TM01: ModeId = ModeId {
        kind: ModeKind::TM,
        l: 0,
        m: 1,
    };
    pub const HE21: ModeId = ModeId {
        kind: ModeKind::HE,
        l: 2,
        m: 1,
    };

    pub fn is_hybrid(&self) -> bool {
        matches!(self.kind, ModeKind::HE | ModeKind::EH)
    }
}

impl fmt::Display for ModeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}{}", self.kind, self.l, self.m)
    }
}

impl FromStr for ModeId {
    type Err = Error;

    /// `HE11`, `TE01`, `EH12`; two-digit orders may be written `HE1_12`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || domain(format!("unrecognized mode name {s:?}"));
        if s.len() < 4 || !s.is_char_boundary(2) {
            return Err(bad());
        }
        let kind = match &s[..2].to_ascii_uppercase()[..] {
            "HE" => ModeKind::HE,
            "EH" => ModeKind::EH,
            "TE" => ModeKind::TE,
            "TM" => ModeKind::TM,
            _ => return Err(bad()),
        };
        let digits = &s[2..];
        let (l, m) = match digits.split_once('_') {
            Some((l, m)) => (l.parse().map_err(|_| bad())?, m.parse().map_err(|_| bad())?),
            None if digits.len() == 2 && digits.bytes().all(|b| b.is_ascii_digit()) => (
                (digits.as_bytes()[0] - b'0') as u32,
                (digits.as_bytes()[1] - b'0') as u32,
            ),
            None => return Err(bad()),
        };
        ModeId::new(kind, l, m)
    }
}
