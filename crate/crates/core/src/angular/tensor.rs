use num_complex::Complex64;

use crate::error::{domain, Result};

/// Cartesian form `u_ij^(q)` of the spherical component `q` of a symmetric,
/// traceless rank-2 tensor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadTensorMatrix {
    pub q: i32,
    pub entries: [[Complex64; 3]; 3],
}

impl QuadTensorMatrix {
    /// `Σ_ij u_ij g_ij` for a tensor `g` indexed `[i][j]`.
    pub fn contract(&self, g: &[[Complex64; 3]; 3]) -> Complex64 {
        self.entries
            .iter()
            .zip(g)
            .flat_map(|(u, g)| u.iter().zip(g))
            .map(|(u, g)| u * g)
            .sum()
    }

    pub fn trace(&self) -> Complex64 {
        (0..3).map(|i| self.entries[i][i]).sum()
    }
}

pub fn quad_tensor_matrix(q: i32) -> Result<QuadTensorMatrix> {
    let z = Complex64::new(0.0, 0.0);
    let r = |x: f64| Complex64::new(x, 0.0);
    let i = |x: f64| Complex64::new(0.0, x);
    let entries = match q {
        2 => [[r(0.5), i(-0.5), z], [i(-0.5), r(-0.5), z], [z, z, z]],
        1 => [[z, z, r(-0.5)], [z, z, i(0.5)], [r(-0.5), i(0.5), z]],
        0 => {
            let s = 1.0 / 6f64.sqrt();
            [[r(-s), z, z], [z, r(-s), z], [z, z, r(2.0 * s)]]
        }
        -1 => [[z, z, r(0.5)], [z, z, i(0.5)], [r(0.5), i(0.5), z]],
        -2 => [[r(0.5), i(0.5), z], [i(0.5), r(-0.5), z], [z, z, z]],
        _ => return Err(domain(format!("tensor component q = {q} outside -2..=2"))),
    };
    Ok(QuadTensorMatrix { q, entries })
}
