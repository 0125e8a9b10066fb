//! Adaptive Gauss–Kronrod (7/15) integration of smooth real functions.

use crate::error::{Error, Result};

// Published node and weight values, kept at full length.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const MAX_DEPTH: u32 = 40;

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let dx = half * XGK[i];
        let pair = f(center - dx) + f(center + dx);
        kron += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    (kron * half, ((kron - gauss) * half).abs())
}

fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> Result<f64> {
    let (est, err) = kronrod(f, a, b);
    debug_assert!(est.is_finite());
    if err <= tol || (b - a).abs() < 1e-15 * a.abs().max(b.abs()) {
        return Ok(est);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::Internal(format!(
            "quadrature did not converge on [{a:e}, {b:e}] (error estimate {err:e}, total {whole:e})"
        )));
    }
    let mid = 0.5 * (a + b);
    Ok(adapt(f, a, mid, whole, 0.5 * tol, depth + 1)? + adapt(f, mid, b, whole, 0.5 * tol, depth + 1)?)
}

/// `∫_a^b f` to the given relative tolerance.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<f64> {
    let (rough, _) = kronrod(&f, a, b);
    let tol = rel_tol * rough.abs().max(f64::MIN_POSITIVE);
    adapt(&f, a, b, rough, tol, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let v = integrate(|x| 3.0 * x * x, 0.0, 2.0, 1e-14).unwrap();
        assert!((v - 8.0).abs() < 1e-13);
    }

    #[test]
    fn decaying_exponential() {
        let v = integrate(|x| (-3.0 * x).exp(), 0.0, 30.0, 1e-12).unwrap();
        assert!((v - (1.0 - (-90f64).exp()) / 3.0).abs() < 1e-12);
    }
}
