//! Two-level optical Bloch equations and the axial orbital torque.
//!
//! With `ρ_gg = 1 - ρ_ee` the populations and coherence obey
//!
//! ```text
//! ρ̇_ee = (i/2)(ρ_ge Ω - ρ_eg Ω*) - Γ ρ_ee
//! ρ̇_ge = (i/2) Ω* (ρ_ee - ρ_gg) - (iΔ + Γ/2) ρ_ge
//! ```
//!
//! and the torque `T_z = (iħ/2)(pl - M' + M)(ρ_ge Ω - ρ_eg Ω*)` equals
//! `ħ (pl - M' + M)(Γ ρ_ee + ρ̇_ee)` at every instant.

use num_complex::Complex64;

use crate::angular::TransitionSpec;
use crate::constants::HBAR;
use crate::error::{domain, Error, Result};
use crate::fibermodes::DriveConfig;
use crate::quadcoupling::{rabi_frequency, Position};

const I: Complex64 = Complex64::new(0.0, 1.0);
const POSITIVITY_SLACK: f64 = 1e-9;

/// Internal state of the two-level atom.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AtomState {
    pub rho_ee: f64,
    pub rho_ge: Complex64,
}

impl AtomState {
    pub const GROUND: AtomState = AtomState {
        rho_ee: 0.0,
        rho_ge: Complex64::new(0.0, 0.0),
    };
    pub const EXCITED: AtomState = AtomState {
        rho_ee: 1.0,
        rho_ge: Complex64::new(0.0, 0.0),
    };

    pub fn rho_gg(&self) -> f64 {
        1.0 - self.rho_ee
    }

    pub fn rho_eg(&self) -> Complex64 {
        self.rho_ge.conj()
    }

    /// Amount by which the state leaves the physical set, zero when inside.
    pub fn positivity_violation(&self) -> f64 {
        let pop = (-self.rho_ee).max(self.rho_ee - 1.0).max(0.0);
        let coh = (self.rho_ge.norm_sqr() - self.rho_ee * self.rho_gg()).max(0.0);
        pop.max(coh)
    }
}

/// Right-hand side of the Bloch equations: `(ρ̇_ee, ρ̇_ge)`.
pub fn bloch_rhs(state: &AtomState, omega: Complex64, detuning: f64, gamma: f64) -> (f64, Complex64) {
    let drive = 0.5 * I * (state.rho_ge * omega - state.rho_eg() * omega.conj());
    let d_ee = drive.re - gamma * state.rho_ee;
    let d_ge = 0.5 * I * omega.conj() * (state.rho_ee - state.rho_gg()) - (I * detuning + 0.5 * gamma) * state.rho_ge;
    (d_ee, d_ge)
}

/// Exact fixed point of the Bloch equations.
pub fn steady_state(omega: Complex64, detuning: f64, gamma: f64) -> Result<AtomState> {
    if !(gamma > 0.0) {
        return Err(domain(format!("decay rate must be positive, got {gamma}")));
    }
    let lorentz = 4.0 * detuning * detuning + gamma * gamma;
    let rabi_sq = omega.norm_sqr();
    let rho_ee = rabi_sq / (lorentz + 2.0 * rabi_sq);
    let rho_ge = 0.5 * I * omega.conj() * (2.0 * rho_ee - 1.0) / (I * detuning + 0.5 * gamma);
    Ok(AtomState { rho_ee, rho_ge })
}

/// One recorded step of a trajectory.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrajectoryPoint {
    pub t: f64,
    pub state: AtomState,
    /// `ρ̇_ee` evaluated from the equations of motion at this state.
    pub rho_ee_dot: f64,
}

fn axpy(state: &AtomState, h: f64, k: (f64, Complex64)) -> AtomState {
    AtomState {
        rho_ee: state.rho_ee + h * k.0,
        rho_ge: state.rho_ge + h * k.1,
    }
}

/// Fixed-step RK4 integration from `t = 0` to `t_final`.
pub fn evolve(
    initial: AtomState,
    omega: Complex64,
    detuning: f64,
    gamma: f64,
    t_final: f64,
    dt: f64,
) -> Result<Vec<TrajectoryPoint>> {
    if !(dt > 0.0) || !(t_final >= 0.0) || gamma < 0.0 {
        return Err(domain(format!(
            "need dt > 0, t_final >= 0, Γ >= 0 (dt = {dt}, t_final = {t_final}, Γ = {gamma})"
        )));
    }
    let fastest = omega.norm().max(gamma).max(detuning.abs());
    if fastest > 0.0 && dt > 0.01 / fastest * (1.0 + 1e-12) {
        return Err(domain(format!(
            "dt = {dt:e} s does not resolve the fastest rate {fastest:e} 1/s"
        )));
    }
    let rhs = |s: &AtomState| bloch_rhs(s, omega, detuning, gamma);
    let record = |t: f64, s: AtomState| TrajectoryPoint {
        t,
        state: s,
        rho_ee_dot: rhs(&s).0,
    };

    let steps = (t_final / dt).round() as usize;
    let mut out = Vec::with_capacity(steps + 1);
    let mut state = initial;
    out.push(record(0.0, state));
    for n in 1..=steps {
        let k1 = rhs(&state);
        let k2 = rhs(&axpy(&state, 0.5 * dt, k1));
        let k3 = rhs(&axpy(&state, 0.5 * dt, k2));
        let k4 = rhs(&axpy(&state, dt, k3));
        state = AtomState {
            rho_ee: state.rho_ee + dt / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
            rho_ge: state.rho_ge + dt / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
        };
        let t = n as f64 * dt;
        let violation = state.positivity_violation();
        if violation > POSITIVITY_SLACK {
            return Err(Error::Integration {
                t,
                reason: format!("density matrix leaves the physical set by {violation:e}"),
            });
        }
        out.push(record(t, state));
    }
    Ok(out)
}

/// `T_z = (iħ/2)(pl - M' + M)(ρ_ge Ω - ρ_eg Ω*) = -ħ (pl - M' + M) Im(ρ_ge Ω)`, N·m.
pub fn torque_axial(state: &AtomState, omega: Complex64, winding: i32) -> f64 {
    -HBAR * winding as f64 * (state.rho_ge * omega).im
}

/// `ħ (pl - M' + M)(Γ ρ_ee + ρ̇_ee)`, the absorption-rate form of the torque.
pub fn torque_from_absorption(point: &TrajectoryPoint, gamma: f64, winding: i32) -> f64 {
    HBAR * winding as f64 * (gamma * point.state.rho_ee + point.rho_ee_dot)
}

/// Torque and azimuthal force on the atom at one position.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TorqueResult {
    /// Rabi frequency, rad/s.
    pub omega: Complex64,
    /// Axial orbital torque, N·m.
    pub torque_z: f64,
    /// Azimuthal force, N.
    pub force_phi: f64,
    pub r: f64,
    /// `p l - M' + M`.
    pub winding: i32,
}

/// Weak-field torque `ħ (pl - M' + M) |Ω|² Γ / (4Δ² + Γ²)` using the decay
/// rate stored in `spec`.
pub fn torque_weak_field(spec: &TransitionSpec, drive: &DriveConfig, pos: Position) -> Result<TorqueResult> {
    torque_weak_field_with_gamma(spec, drive, pos, spec.gamma)
}

/// As [`torque_weak_field`] with an explicit (e.g. position-dependent) decay rate.
pub fn torque_weak_field_with_gamma(
    spec: &TransitionSpec,
    drive: &DriveConfig,
    pos: Position,
    gamma: f64,
) -> Result<TorqueResult> {
    if !(gamma > 0.0) {
        return Err(domain(format!("decay rate must be positive, got {gamma}")));
    }
    let sample = rabi_frequency(spec, drive, pos)?;
    let rabi = sample.omega.norm();
    if rabi >= 0.1 * gamma {
        log::warn!("|Ω| = {rabi:e} rad/s is not small against Γ = {gamma:e} 1/s; weak-field torque is approximate");
    }
    let winding = drive.photon_angular_momentum() - spec.q();
    let d = drive.detuning;
    let torque_z = HBAR * winding as f64 * rabi * rabi * gamma / (4.0 * d * d + gamma * gamma);
    Ok(TorqueResult {
        omega: sample.omega,
        torque_z,
        force_phi: torque_z / pos.r,
        r: pos.r,
        winding,
    })
}
