//! Field-gradient factors and the electric-quadrupole Rabi frequency.
//!
//! For a guided field `(e_r r̂ + p e_φ φ̂ + f e_z ẑ) exp(i f β z + i p l φ)` the
//! contraction `Σ_ij u_ij^(q) ∂E_j/∂x_i` factorizes as
//! `V_q(r) exp(i f β z + i (p l - q) φ)`, with the radial factors evaluated
//! here in closed form from the mode profiles and their derivatives.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::angular::{wigner_3j, HalfInt, TransitionSpec};
use crate::constants::{E_CHARGE, HBAR};
use crate::error::{domain, Result};
use crate::fibermodes::DriveConfig;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Atom position in fiber cylindrical coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Position {
    pub r: f64,
    pub phi: f64,
    pub z: f64,
}

impl Position {
    pub fn new(r: f64, phi: f64, z: f64) -> Self {
        Position { r, phi, z }
    }

    pub fn radial(r: f64) -> Self {
        Position { r, phi: 0.0, z: 0.0 }
    }
}

/// `V_q(r)` for `q = -2..=2`, V/m².
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GradientFactors {
    pub r: f64,
    values: [Complex64; 5],
}

impl GradientFactors {
    pub fn get(&self, q: i32) -> Result<Complex64> {
        check_q(q)?;
        Ok(self.values[(q + 2) as usize])
    }
}

fn check_q(q: i32) -> Result<()> {
    if q.abs() > 2 {
        return Err(domain(format!("tensor component q = {q} outside -2..=2")));
    }
    Ok(())
}

fn check_outside(drive: &DriveConfig, r: f64) -> Result<()> {
    let a = drive.mode.fiber.radius;
    if !(r > a) {
        return Err(domain(format!(
            "atom at r = {r:e} m is not outside the fiber (a = {a:e} m)"
        )));
    }
    Ok(())
}

pub fn gradient_factors(drive: &DriveConfig, r: f64) -> Result<GradientFactors> {
    check_outside(drive, r)?;
    let prof = drive.mode.profile(r);
    let [er, ephi, ez] = prof.e;
    let [der, dephi, dez] = prof.de;
    let beta = drive.mode.beta;
    let f = drive.f as f64;
    let p = drive.effective_p() as f64;
    let l = drive.l() as f64;
    let pl = p * l;

    let v0 = -(der + er / r + I * l * ephi / r - 2.0 * I * beta * ez) / 6f64.sqrt();
    let v_pm1 = |s: f64| -s * 0.5 * f * (I * beta * (er - s * I * p * ephi) + dez + s * pl / r * ez);
    let v_pm2 = |s: f64| 0.5 * (der - s * I * p * dephi - (1.0 - s * pl) / r * (er - s * I * p * ephi));
    Ok(GradientFactors {
        r,
        values: [v_pm2(-1.0), v_pm1(-1.0), v0, v_pm1(1.0), v_pm2(1.0)],
    })
}

/// `Σ_ij u_ij^(q) ∂E_j/∂x_i` at `pos`.
pub fn gradient_tensor(drive: &DriveConfig, pos: Position, q: i32) -> Result<Complex64> {
    check_q(q)?;
    let factors = gradient_factors(drive, pos.r)?;
    Ok(factors.get(q)? * tensor_phase(drive, pos, q))
}

fn tensor_phase(drive: &DriveConfig, pos: Position, q: i32) -> Complex64 {
    let f = drive.f as f64;
    let winding = (drive.photon_angular_momentum() - q) as f64;
    Complex64::from_polar(1.0, f * drive.mode.beta * pos.z + winding * pos.phi)
}

/// Rabi frequency at one position, with `q = M' - M`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RabiSample {
    /// rad/s
    pub omega: Complex64,
    pub position: Position,
    pub q: i32,
}

/// `(e/2ħ) (-1)^(F'-M') (F' 2 F; -M' q M) <F'||T||F>` in units of s/(V·m⁻²)·rad.
pub fn coupling_prefactor(spec: &TransitionSpec) -> Result<f64> {
    let q = spec.q();
    if q.abs() > 2 {
        return Ok(0.0);
    }
    let three_j = wigner_3j(
        spec.f_prime,
        HalfInt::int(2),
        spec.f,
        -spec.m_prime,
        HalfInt::int(q),
        spec.m,
    );
    let phase = (spec.f_prime - spec.m_prime)
        .as_integer()
        .ok_or_else(|| domain("F' - M' must be an integer"))?;
    let sign = if phase.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    Ok(E_CHARGE / (2.0 * HBAR) * sign * three_j * spec.reduced_element_f()?)
}

pub fn rabi_frequency(spec: &TransitionSpec, drive: &DriveConfig, pos: Position) -> Result<RabiSample> {
    check_outside(drive, pos.r)?;
    let q = spec.q();
    let prefactor = coupling_prefactor(spec)?;
    let omega = if prefactor == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        prefactor * gradient_tensor(drive, pos, q)?
    };
    Ok(RabiSample {
        omega,
        position: pos,
        q,
    })
}

/// Relative residual between a Richardson-extrapolated `∂Ω/∂φ` and
/// `i (p l - M' + M) Ω`; zero when `Ω = 0`.
pub fn phase_gradient_check(spec: &TransitionSpec, drive: &DriveConfig, r: f64) -> Result<f64> {
    let omega_at = |phi: f64| rabi_frequency(spec, drive, Position::new(r, phi, 0.0)).map(|s| s.omega);
    let center = omega_at(0.0)?;
    if center.norm() == 0.0 {
        return Ok(0.0);
    }
    let central = |h: f64| -> Result<Complex64> { Ok((omega_at(h)? - omega_at(-h)?) / (2.0 * h)) };
    let step = 1e-2 * FRAC_1_SQRT_2;
    let coarse = central(step)?;
    let fine = central(0.5 * step)?;
    let derivative = (4.0 * fine - coarse) / 3.0;
    let factor = (drive.photon_angular_momentum() - spec.q()) as f64;
    Ok((derivative - I * factor * center).norm() / center.norm())
}
