use crate::angular::HalfInt;
use crate::dynamics::torque_weak_field;
use crate::error::{Error, Result};
use crate::exec::{map_ordered, Execution};
use crate::fibermodes::{solve_modes, vnumber, DriveConfig, ModeId, ModeSolution};
use crate::quadcoupling::Position;

use super::{DriveSpec, SweepConfig};

/// One (drive, M', r) evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub mode: ModeId,
    pub f: i32,
    pub p: i32,
    pub m: HalfInt,
    pub m_prime: HalfInt,
    /// m
    pub r: f64,
    /// rad/s
    pub abs_omega: f64,
    /// N·m
    pub torque_z: f64,
    /// N
    pub force_phi: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepTable {
    pub rows: Vec<SweepRow>,
}

/// `n` evenly spaced radii from `r_min` to `r_max` inclusive.
pub fn radii(r_min: f64, r_max: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![r_min],
        _ => (0..n)
            .map(|i| {
                if i + 1 == n {
                    r_max
                } else {
                    r_min + (r_max - r_min) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

/// Finds the configured mode among `modes` and normalizes it to the drive power.
pub fn resolve_drive(cfg: &SweepConfig, modes: &[ModeSolution], spec: &DriveSpec) -> Result<DriveConfig> {
    let mode = modes
        .iter()
        .find(|m| m.id == spec.mode)
        .ok_or_else(|| Error::ModeNotGuided {
            mode: spec.mode.to_string(),
            v_number: vnumber(&cfg.fiber, cfg.transition.wavelength),
        })?;
    DriveConfig::new(mode, spec.f, spec.p, spec.power, spec.detuning)
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepTable> {
    run_sweep_with(cfg, Execution::default())
}

/// Weak-field |Ω|, T_z and F_φ for every drive, upper sublevel and radius,
/// ordered by drive, then M', then ascending r.
pub fn run_sweep_with(cfg: &SweepConfig, exec: Execution) -> Result<SweepTable> {
    let modes = solve_modes(&cfg.fiber, cfg.transition.wavelength)?;
    let drives = cfg
        .drives
        .iter()
        .map(|d| resolve_drive(cfg, &modes, d))
        .collect::<Result<Vec<_>>>()?;
    let specs = cfg
        .sublevels
        .iter()
        .map(|&mp| cfg.transition.with_m_prime(mp))
        .collect::<Result<Vec<_>>>()?;
    let rs = radii(cfg.r_min, cfg.r_max, cfg.n_points);

    let mut tasks = Vec::with_capacity(drives.len() * specs.len() * rs.len());
    for (di, _) in drives.iter().enumerate() {
        for (si, _) in specs.iter().enumerate() {
            for &r in &rs {
                tasks.push((di, si, r));
            }
        }
    }
    let rows = map_ordered(&tasks, exec, |&(di, si, r)| {
        let (drive, spec) = (&drives[di], &specs[si]);
        let res = torque_weak_field(spec, drive, Position::radial(r))?;
        Ok(SweepRow {
            mode: drive.mode.id,
            f: drive.f,
            p: drive.p,
            m: spec.m,
            m_prime: spec.m_prime,
            r,
            abs_omega: res.omega.norm(),
            torque_z: res.torque_z,
            force_phi: res.force_phi,
        })
    });
    Ok(SweepTable {
        rows: rows.into_iter().collect::<Result<_>>()?,
    })
}
