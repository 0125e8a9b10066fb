//! Eigenvalue equations of the step-index fiber and the guided-mode census.

use std::f64::consts::PI;

use super::bessel::{bessel_j_orders, bessel_k_orders};
use super::profile::ModeSolution;
use super::{FiberSpec, ModeId, ModeKind};
use crate::error::Result;

/// Uniform samples of β per (kind, l) used to bracket roots.
pub const SCAN_POINTS: usize = 2000;

/// Highest azimuthal order tried; far beyond any nanofiber's cutoff.
const MAX_AZIMUTHAL_ORDER: u32 = 64;

struct Params {
    u: f64,
    w: f64,
    n1sq: f64,
    n2sq: f64,
    beta_over_k: f64,
}

fn params(fiber: &FiberSpec, k: f64, beta: f64) -> Params {
    let a = fiber.radius;
    let n1sq = fiber.n_core * fiber.n_core;
    let n2sq = fiber.n_clad * fiber.n_clad;
    Params {
        u: a * (n1sq * k * k - beta * beta).sqrt(),
        w: a * (beta * beta - n2sq * k * k).sqrt(),
        n1sq,
        n2sq,
        beta_over_k: beta / k,
    }
}

/// Pole-free form of the eigenvalue equation for `kind` and `l`, returned as
/// two terms whose difference vanishes at a guided root.
fn characteristic_terms(fiber: &FiberSpec, k: f64, kind: ModeKind, l: u32, beta: f64) -> (f64, f64) {
    let p = params(fiber, k, beta);
    let (u, w) = (p.u, p.w);
    let lu = l as usize;
    let jv = bessel_j_orders(lu + 1, u);
    let kv = bessel_k_orders(lu + 1, w).expect("w > 0 strictly inside the guided band");
    match kind {
        // J1(u)/(u J0(u)) + K1(w)/(w K0(w)) = 0, times u w J0 K0
        ModeKind::TE => (w * jv[1] * kv[0], -u * kv[1] * jv[0]),
        ModeKind::TM => (p.n1sq * w * jv[1] * kv[0], -p.n2sq * u * kv[1] * jv[0]),
        ModeKind::HE | ModeKind::EH => {
            let lf = l as f64;
            let j = jv[lu];
            let dj = jv[lu - 1] - lf / u * j;
            let dk = -kv[lu - 1] - lf / w * kv[lu];
            let y = dk / (w * kv[lu]);
            let inv = 1.0 / (u * u) + 1.0 / (w * w);
            let contrast = (p.n1sq - p.n2sq) / (2.0 * p.n1sq) * y;
            let coupling = lf * p.beta_over_k / p.n1sq.sqrt() * inv;
            // u² R, finite as u -> 0
            let u2r = (contrast * contrast * u.powi(4) + coupling * coupling * u.powi(4)).sqrt();
            let branch = if kind == ModeKind::HE { -1.0 } else { 1.0 };
            let u2_rhs = -(p.n1sq + p.n2sq) / (2.0 * p.n1sq) * y * u * u + branch * u2r;
            // J'/(uJ) = RHS  <=>  u J' = J u² RHS
            (u * dj, j * u2_rhs)
        }
    }
}

fn characteristic(fiber: &FiberSpec, k: f64, kind: ModeKind, l: u32, beta: f64) -> f64 {
    let (lhs, rhs) = characteristic_terms(fiber, k, kind, l, beta);
    lhs - rhs
}

/// Residual of the eigenvalue equation at `beta`, relative to the size of its terms.
pub fn characteristic_residual(fiber: &FiberSpec, wavelength: f64, id: ModeId, beta: f64) -> f64 {
    let k = 2.0 * PI / wavelength;
    let (lhs, rhs) = characteristic_terms(fiber, k, id.kind, id.l, beta);
    (lhs - rhs).abs() / (lhs.abs() + rhs.abs())
}

fn bisect<F: Fn(f64) -> f64>(g: F, mut lo: f64, mut hi: f64) -> f64 {
    let mut g_lo = g(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let g_mid = g(mid);
        if g_mid == 0.0 {
            return mid;
        }
        if (g_mid > 0.0) == (g_lo > 0.0) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Propagation constants of every root for one (kind, l), descending.
fn roots(fiber: &FiberSpec, k: f64, kind: ModeKind, l: u32) -> Vec<f64> {
    let lo = fiber.n_clad * k;
    let hi = fiber.n_core * k;
    let step = (hi - lo) / SCAN_POINTS as f64;
    let g = |b: f64| characteristic(fiber, k, kind, l, b);
    let samples: Vec<(f64, f64)> = (1..SCAN_POINTS)
        .map(|i| {
            let b = lo + step * i as f64;
            (b, g(b))
        })
        .collect();
    let mut found: Vec<f64> = samples
        .windows(2)
        .filter_map(|w| {
            let ((b0, g0), (b1, g1)) = (w[0], w[1]);
            if g0 == 0.0 {
                Some(b0)
            } else if (g0 > 0.0) != (g1 > 0.0) {
                Some(bisect(g, b0, b1))
            } else {
                None
            }
        })
        .collect();
    found.sort_by(|a, b| b.total_cmp(a));
    found
}

/// Every guided mode of `fiber` at vacuum wavelength `wavelength`, each
/// normalized to 1 W of axial power. Ordered HE, EH, TE, TM, then by `l`, `m`.
pub fn solve_modes(fiber: &FiberSpec, wavelength: f64) -> Result<Vec<ModeSolution>> {
    if !(wavelength > 0.0) {
        return Err(crate::error::domain(format!(
            "wavelength must be positive, got {wavelength}"
        )));
    }
    let k = 2.0 * PI / wavelength;
    let mut ids = Vec::new();
    for kind in [ModeKind::HE, ModeKind::EH] {
        for l in 1..=MAX_AZIMUTHAL_ORDER {
            let betas = roots(fiber, k, kind, l);
            if betas.is_empty() {
                break;
            }
            ids.extend(betas.into_iter().enumerate().map(|(i, b)| {
                (
                    ModeId {
                        kind,
                        l,
                        m: i as u32 + 1,
                    },
                    b,
                )
            }));
        }
    }
    for kind in [ModeKind::TE, ModeKind::TM] {
        let betas = roots(fiber, k, kind, 0);
        ids.extend(betas.into_iter().enumerate().map(|(i, b)| {
            (
                ModeId {
                    kind,
                    l: 0,
                    m: i as u32 + 1,
                },
                b,
            )
        }));
    }
    ids.into_iter()
        .map(|(id, beta)| ModeSolution::from_root(*fiber, wavelength, id, beta)?.normalize_power(1.0))
        .collect()
}
