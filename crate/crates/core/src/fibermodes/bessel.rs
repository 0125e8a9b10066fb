//! Bessel functions of the first kind `J_n` and modified Bessel functions of
//! the second kind `K_n` for non-negative integer orders.
//!
//! `J_n` uses Miller's backward recurrence normalized by
//! `J_0 + 2 Σ J_2k = 1`, which yields every order up to `n` in one pass.
//! `K_0`, `K_1` use the ascending series for `x <= 2` and Steed's continued
//! fraction above; higher orders follow from the (stable) upward recurrence.

use crate::error::{domain, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const EPS: f64 = 1e-17;
const RESCALE: f64 = 1e250;

/// Values and first derivatives of `J_n(x)` and `K_n(x)` at one order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BesselSuite {
    pub j: f64,
    pub dj: f64,
    pub k: f64,
    pub dk: f64,
}

/// `J_n(x)`, `J_n'(x)`, `K_n(x)`, `K_n'(x)` for one integer order.
pub fn bessel_suite(order: usize, x: f64) -> Result<BesselSuite> {
    if !(x > 0.0) {
        return Err(domain(format!("K_{order}(x) requires x > 0, got {x}")));
    }
    let j = bessel_j_orders(order + 1, x);
    let k = bessel_k_orders(order + 1, x)?;
    let (dj, dk) = if order == 0 {
        (-j[1], -k[1])
    } else {
        (
            j[order - 1] - order as f64 / x * j[order],
            -k[order - 1] - order as f64 / x * k[order],
        )
    };
    Ok(BesselSuite {
        j: j[order],
        dj,
        k: k[order],
        dk,
    })
}

/// `J_0(x) ..= J_nmax(x)`.
pub fn bessel_j_orders(nmax: usize, x: f64) -> Vec<f64> {
    let mut out = vec![0.0; nmax + 1];
    if x == 0.0 {
        out[0] = 1.0;
        return out;
    }
    if x < 0.0 {
        let mut v = bessel_j_orders(nmax, -x);
        for (n, val) in v.iter_mut().enumerate() {
            if n % 2 == 1 {
                *val = -*val;
            }
        }
        return v;
    }

    // Start well above both the requested order and the turning point n ~ x.
    let top = (nmax as f64).max(x);
    let mut start = (top + 30.0 + 6.0 * top.sqrt()).ceil() as usize;
    start += start % 2;

    let two_over_x = 2.0 / x;
    let mut j_next = 0.0; // J_{n+1}
    let mut j_cur = 1e-300; // J_n
    let mut norm = 0.0;
    for n in (1..=start).rev() {
        let j_prev = n as f64 * two_over_x * j_cur - j_next;
        j_next = j_cur;
        j_cur = j_prev;
        // j_cur now holds J_{n-1}
        let m = n - 1;
        if m <= nmax {
            out[m] = j_cur;
        }
        if m > 0 && m % 2 == 0 {
            norm += 2.0 * j_cur;
        }
        if j_cur.abs() > RESCALE {
            j_cur /= RESCALE;
            j_next /= RESCALE;
            norm /= RESCALE;
            for v in out.iter_mut() {
                *v /= RESCALE;
            }
        }
    }
    norm += j_cur;
    for v in out.iter_mut() {
        *v /= norm;
    }
    out
}

/// `K_0(x) ..= K_nmax(x)` for `x > 0`.
pub fn bessel_k_orders(nmax: usize, x: f64) -> Result<Vec<f64>> {
    if !(x > 0.0) {
        return Err(domain(format!("K_n(x) requires x > 0, got {x}")));
    }
    let (k0, k1) = if x <= 2.0 { k01_series(x) } else { k01_steed(x) };
    let mut out = Vec::with_capacity(nmax + 1);
    out.push(k0);
    if nmax >= 1 {
        out.push(k1);
    }
    for n in 1..nmax {
        let next = out[n - 1] + 2.0 * n as f64 / x * out[n];
        out.push(next);
    }
    Ok(out)
}

fn k01_series(x: f64) -> (f64, f64) {
    let t = 0.25 * x * x;
    let log_half = (0.5 * x).ln();

    // I_0, I_1 and the digamma-weighted sums, accumulated together.
    let mut i0 = 0.0;
    let mut i1 = 0.0;
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    let mut term0 = 1.0; // t^k / (k!)^2
    let mut term1 = 1.0; // t^k / (k! (k+1)!)
    let mut harmonic = 0.0; // H_k
    for k in 0..200 {
        let kf = k as f64;
        if k > 0 {
            harmonic += 1.0 / kf;
            term0 *= t / (kf * kf);
            term1 *= t / (kf * (kf + 1.0));
        }
        let psi_k1 = -EULER_GAMMA + harmonic;
        let psi_k2 = psi_k1 + 1.0 / (kf + 1.0);
        i0 += term0;
        i1 += term1;
        s0 += psi_k1 * term0;
        s1 += (psi_k1 + psi_k2) * term1;
        if term0 < EPS * i0 && k > 2 {
            break;
        }
    }
    i1 *= 0.5 * x;
    let k0 = -log_half * i0 + s0;
    let k1 = 1.0 / x + log_half * i1 - 0.25 * x * s1;
    (k0, k1)
}

/// Steed's continued fraction (CF2) for `K_0`, `K_1`; accurate for `x >= 2`.
fn k01_steed(x: f64) -> (f64, f64) {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..100_000 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    h *= a1;
    let k0 = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}
