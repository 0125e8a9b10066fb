//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

pub mod racah;

use std::f64::consts::PI;

use num_complex::Complex64;
use quadtorque::angular::quad_tensor_matrix;
use quadtorque::fibermodes::{field_amplitude, solve_modes, DriveConfig, FiberSpec, ModeId, ModeSolution};

pub const LAMBDA0: f64 = 516.5e-9;
pub const RADIUS: f64 = 280e-9;

pub fn paper_modes() -> Vec<ModeSolution> {
    solve_modes(&FiberSpec::silica_nanofiber(), LAMBDA0).unwrap()
}

pub fn drive_for(modes: &[ModeSolution], id: ModeId, f: i32, p: i32, power: f64) -> DriveConfig {
    let mode = modes.iter().find(|m| m.id == id).expect("mode solved");
    DriveConfig::new(mode, f, p, power, 0.0).unwrap()
}

fn cartesian_field(drive: &DriveConfig, x: f64, y: f64, z: f64) -> [Complex64; 3] {
    let r = x.hypot(y);
    let phi = y.atan2(x);
    field_amplitude(drive, r, phi, z).cartesian
}

/// `∂E_j/∂x_i` as `[i][j]`: central differences in x and y with one
/// Richardson step, analytic `i f β E` along z.
pub fn cartesian_gradient(drive: &DriveConfig, r: f64, phi: f64, z: f64) -> [[Complex64; 3]; 3] {
    const STEP: f64 = 1e-12;
    let (x0, y0) = (r * phi.cos(), r * phi.sin());
    let central = |dx: f64, dy: f64| {
        let plus = cartesian_field(drive, x0 + dx, y0 + dy, z);
        let minus = cartesian_field(drive, x0 - dx, y0 - dy, z);
        let h = 2.0 * (dx + dy);
        [0, 1, 2].map(|j| (plus[j] - minus[j]) / h)
    };
    let richardson = |dx: f64, dy: f64| {
        let coarse = central(dx, dy);
        let fine = central(0.5 * dx, 0.5 * dy);
        [0, 1, 2].map(|j| (4.0 * fine[j] - coarse[j]) / 3.0)
    };
    let e = cartesian_field(drive, x0, y0, z);
    let dz_factor = Complex64::new(0.0, drive.f as f64 * drive.mode.beta);
    [richardson(STEP, 0.0), richardson(0.0, STEP), e.map(|v| dz_factor * v)]
}

/// `Σ_ij u_ij^(q) ∂E_j/∂x_i` from the finite-difference gradient.
pub fn contracted_gradient(drive: &DriveConfig, r: f64, phi: f64, z: f64, q: i32) -> Complex64 {
    quad_tensor_matrix(q)
        .unwrap()
        .contract(&cartesian_gradient(drive, r, phi, z))
}

pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

/// Composite Simpson on a uniform grid, split at the interface.
pub fn simpson_power(m: &ModeSolution, f: i32) -> f64 {
    let integrand = |r: f64| 2.0 * PI * r * m.flux_density(r, f);
    let simpson = |a: f64, b: f64, n: usize| {
        let h = (b - a) / n as f64;
        let mut s = integrand(a) + integrand(b);
        for i in 1..n {
            s += integrand(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        s * h / 3.0
    };
    // e_r jumps at the interface, so the core piece stops just short of it
    let a = m.fiber.radius;
    simpson(1e-15, a * (1.0 - 1e-15), 1000) + simpson(a, a + 60.0 / m.q, 10000)
}
