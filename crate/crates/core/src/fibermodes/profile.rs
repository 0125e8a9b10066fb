//! Field profiles of a solved mode and their power normalization.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::bessel::{bessel_j_orders, bessel_k_orders};
use super::{FiberSpec, ModeId};
use crate::constants::{C, EPSILON_0, MU_0};
use crate::error::{domain, Error, Result};
use crate::quadrature::integrate;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Cylindrical components `(r, φ, z)` of a mode at one radius, with the radial
/// derivatives of the electric components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModeProfile {
    /// Electric field, V/m.
    pub e: [Complex64; 3],
    /// Magnetic field, A/m.
    pub h: [Complex64; 3],
    /// `∂e/∂r`, V/m².
    pub de: [Complex64; 3],
}

/// A guided mode: eigenvalue plus the coefficients of its two-region solution.
///
/// Profiles follow the `exp(i β z + i l φ - i ω t)` mode (forward, counterclockwise)
/// with `e_r` real and `e_φ`, `e_z` imaginary.
#[derive(Clone, Debug, PartialEq)]
pub struct ModeSolution {
    pub id: ModeId,
    pub fiber: FiberSpec,
    pub wavelength: f64,
    /// Angular frequency, rad/s.
    pub omega: f64,
    /// Propagation constant, rad/m.
    pub beta: f64,
    /// Amplitude scale applied to the unit-coefficient solution, V/m.
    pub norm: f64,
    /// Axial power carried at the current `norm`, W.
    pub power: f64,
    /// Transverse wavenumbers inside (`h`) and outside (`q`) the core.
    pub h: f64,
    pub q: f64,
    /// Core amplitudes of `E_z` and `c μ0 H_z` for unit `norm`.
    coeff_e: Complex64,
    coeff_h: Complex64,
}

/// Values needed from the radial function of one region at `x = s r`.
struct Radial {
    z: f64,
    dz: f64,
    d2z: f64,
    /// `Z(x)/x` and its derivative; zero for `l = 0` where they never enter.
    z_over_x: f64,
    d_z_over_x: f64,
}

fn j_at(j: &[f64], n: i64) -> f64 {
    let v = j[n.unsigned_abs() as usize];
    if n < 0 && n % 2 != 0 {
        -v
    } else {
        v
    }
}

fn core_radial(l: usize, x: f64) -> Radial {
    let j = bessel_j_orders(l + 3, x);
    let li = l as i64;
    let dj = |n: i64| 0.5 * (j_at(&j, n - 1) - j_at(&j, n + 1));
    let (z_over_x, d_z_over_x) = if l == 0 {
        (0.0, 0.0)
    } else {
        (
            (j_at(&j, li - 1) + j_at(&j, li + 1)) / (2.0 * l as f64),
            (dj(li - 1) + dj(li + 1)) / (2.0 * l as f64),
        )
    };
    Radial {
        z: j[l],
        dz: dj(li),
        d2z: 0.25 * (j_at(&j, li - 2) - 2.0 * j[l] + j_at(&j, li + 2)),
        z_over_x,
        d_z_over_x,
    }
}

fn clad_radial(l: usize, x: f64) -> Radial {
    let k = bessel_k_orders(l + 3, x).expect("cladding argument is positive");
    let k_at = |n: i64| k[n.unsigned_abs() as usize];
    let li = l as i64;
    let dk = |n: i64| -0.5 * (k_at(n - 1) + k_at(n + 1));
    let (z_over_x, d_z_over_x) = if l == 0 {
        (0.0, 0.0)
    } else {
        (
            (k_at(li + 1) - k_at(li - 1)) / (2.0 * l as f64),
            (dk(li + 1) - dk(li - 1)) / (2.0 * l as f64),
        )
    };
    Radial {
        z: k[l],
        dz: dk(li),
        d2z: 0.25 * (k_at(li - 2) + 2.0 * k[l] + k_at(li + 2)),
        z_over_x,
        d_z_over_x,
    }
}

impl ModeSolution {
    /// Builds the two-region solution for a root `beta` of the eigenvalue equation.
    /// The result carries `norm = 1`; call [`normalize_power`](Self::normalize_power).
    pub fn from_root(fiber: FiberSpec, wavelength: f64, id: ModeId, beta: f64) -> Result<Self> {
        let k = 2.0 * PI / wavelength;
        if !(beta > fiber.n_clad * k && beta < fiber.n_core * k) {
            return Err(domain(format!("β = {beta} outside the guided band for {id}")));
        }
        let a = fiber.radius;
        let h = (fiber.n_core.powi(2) * k * k - beta * beta).sqrt();
        let q = (beta * beta - fiber.n_clad.powi(2) * k * k).sqrt();
        let omega = k * C;
        let (coeff_e, coeff_h) = match id.kind {
            super::ModeKind::TE => (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)),
            super::ModeKind::TM => (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
            _ => {
                // Continuity of E_φ at r = a fixes H_z / E_z.
                let l = id.l as usize;
                let core = core_radial(l, h * a);
                let clad = clad_radial(l, q * a);
                let sum = core.dz / (h * core.z) + clad.dz / (q * clad.z);
                let ratio = beta * id.l as f64 * (1.0 / (h * h) + 1.0 / (q * q)) / (a * omega * MU_0 * sum);
                // stored as c μ0 H_z so both coefficients are V/m
                (Complex64::new(1.0, 0.0), I * ratio * C * MU_0)
            }
        };
        Ok(ModeSolution {
            id,
            fiber,
            wavelength,
            omega,
            beta,
            norm: 1.0,
            power: f64::NAN,
            h,
            q,
            coeff_e,
            coeff_h,
        })
    }

    pub fn k(&self) -> f64 {
        self.omega / C
    }

    /// Effective index `β/k`.
    pub fn neff(&self) -> f64 {
        self.beta / self.k()
    }

    /// Profiles for the forward, counterclockwise mode.
    pub fn profile(&self, r: f64) -> ModeProfile {
        self.profile_directed(r, 1, 1)
    }

    /// Profiles of the exact Maxwell solution with `exp(i f β z + i p l φ)`
    /// dependence, built from the same unit core amplitude of `E_z`.
    pub fn profile_directed(&self, r: f64, f: i32, p: i32) -> ModeProfile {
        let beta = f as f64 * self.beta;
        let l = p as f64 * self.id.l as f64;
        let lu = self.id.l as usize;
        let a = self.fiber.radius;
        let omega = self.omega;

        let inside = r < a;
        let (radial, scale, gamma_sq, n_sq) = if inside {
            (
                core_radial(lu, self.h * r),
                self.h,
                self.h * self.h,
                self.fiber.n_core.powi(2),
            )
        } else {
            (
                clad_radial(lu, self.q * r),
                self.q,
                -self.q * self.q,
                self.fiber.n_clad.powi(2),
            )
        };
        // Outside amplitudes follow from continuity of E_z and H_z at r = a.
        let (amp_e, amp_h) = {
            // H_z / E_z flips with f·p (it is odd in β and in l).
            let hz = self.coeff_h * (f * p) as f64;
            if inside {
                (self.coeff_e, hz)
            } else {
                let ratio = core_radial(lu, self.h * a).z / clad_radial(lu, self.q * a).z;
                (self.coeff_e * ratio, hz * ratio)
            }
        };
        let amp_h = amp_h / (C * MU_0);

        let ez = amp_e * radial.z;
        let ezp = amp_e * scale * radial.dz;
        let ezpp = amp_e * scale * scale * radial.d2z;
        let ez_r = amp_e * scale * radial.z_over_x;
        let d_ez_r = amp_e * scale * scale * radial.d_z_over_x;
        let hz = amp_h * radial.z;
        let hzp = amp_h * scale * radial.dz;
        let hzpp = amp_h * scale * scale * radial.d2z;
        let hz_r = amp_h * scale * radial.z_over_x;
        let d_hz_r = amp_h * scale * scale * radial.d_z_over_x;

        let eps = EPSILON_0 * n_sq;
        let e_r = (I * beta * ezp - l * omega * MU_0 * hz_r) / gamma_sq;
        let e_phi = (-beta * l * ez_r - I * omega * MU_0 * hzp) / gamma_sq;
        let h_r = (I * beta * hzp + l * omega * eps * ez_r) / gamma_sq;
        let h_phi = (-beta * l * hz_r + I * omega * eps * ezp) / gamma_sq;
        let de_r = (I * beta * ezpp - l * omega * MU_0 * d_hz_r) / gamma_sq;
        let de_phi = (-beta * l * d_ez_r - I * omega * MU_0 * hzpp) / gamma_sq;

        // Global phase -i makes e_r real.
        let s = -I * self.norm;
        ModeProfile {
            e: [s * e_r, s * e_phi, s * ez],
            h: [s * h_r, s * h_phi, s * hz],
            de: [s * de_r, s * de_phi, s * ezp],
        }
    }

    /// Axial Poynting flux density `(1/2) Re(E × H*)·ẑ`, W/m².
    pub fn flux_density(&self, r: f64, f: i32) -> f64 {
        let pr = self.profile_directed(r, f, 1);
        0.5 * (pr.e[0] * pr.h[1].conj() - pr.e[1] * pr.h[0].conj()).re
    }

    /// Total axial power for propagation direction `f`, W.
    pub fn axial_power_directed(&self, f: i32) -> Result<f64> {
        let a = self.fiber.radius;
        let density = |r: f64| 2.0 * PI * r * self.flux_density(r, f);
        let inner = integrate(density, 0.0, a, 1e-11)?;
        // K_l(q r)² decays as exp(-2 q r); 40/q leaves exp(-80).
        let outer = integrate(density, a, a + 40.0 / self.q, 1e-11)?;
        Ok(inner + outer)
    }

    pub fn axial_power(&self) -> Result<f64> {
        self.axial_power_directed(1)
    }

    /// Same mode rescaled to carry `power` watts.
    pub fn normalize_power(&self, power: f64) -> Result<Self> {
        if !(power > 0.0) {
            return Err(domain(format!("power must be positive, got {power}")));
        }
        let current = self.axial_power()?;
        if !(current > 0.0) || !current.is_finite() {
            return Err(Error::Internal(format!(
                "mode {} carries non-positive flux {current}",
                self.id
            )));
        }
        let mut out = self.clone();
        out.norm = self.norm * (power / current).sqrt();
        out.power = power;
        Ok(out)
    }
}
