//! Exact Racah sums in big rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn fact(n: i32) -> BigInt {
    (1..=n as i64).fold(BigInt::one(), |acc, k| acc * k)
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// Exact 3j as sign * sqrt(square), with all arithmetic in big rationals.
pub fn oracle_3j(j: [i32; 3], m: [i32; 3]) -> f64 {
    let [j1, j2, j3] = j;
    let [m1, m2, m3] = m;
    if m1 + m2 + m3 != 0 || j3 > j1 + j2 || j3 < (j1 - j2).abs() || (j1 + j2 + j3) % 2 != 0 {
        return 0.0;
    }
    for (jj, mm) in j.iter().zip(m.iter()) {
        if mm.abs() > *jj || (jj - mm) % 2 != 0 {
            return 0.0;
        }
    }
    let half = |x: i32| x / 2;
    let tri = ratio(
        fact(half(j1 + j2 - j3)) * fact(half(j1 - j2 + j3)) * fact(half(-j1 + j2 + j3)),
        fact(half(j1 + j2 + j3) + 1),
    );
    let proj: BigInt = [(j1, m1), (j2, m2), (j3, m3)]
        .iter()
        .map(|&(jj, mm)| fact(half(jj + mm)) * fact(half(jj - mm)))
        .product();
    let square_prefactor = tri * BigRational::from_integer(proj);
    let mut sum = BigRational::zero();
    for k in 0..=60 {
        let args = [
            k,
            half(j3 - j2 + m1) + k,
            half(j3 - j1 - m2) + k,
            half(j1 + j2 - j3) - k,
            half(j1 - m1) - k,
            half(j2 + m2) - k,
        ];
        if args.iter().any(|&a| a < 0) {
            continue;
        }
        let den: BigInt = args.iter().map(|&a| fact(a)).product();
        let term = ratio(BigInt::one(), den);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_zero() {
        return 0.0;
    }
    let phase = half(j1 - j2 - m3);
    let sign = if (phase % 2 == 0) == sum.is_positive() {
        1.0
    } else {
        -1.0
    };
    let square = square_prefactor * &sum * &sum;
    sign * square.to_f64().unwrap().sqrt()
}

pub fn oracle_6j(j: [i32; 6]) -> f64 {
    let [j1, j2, j3, j4, j5, j6] = j;
    let triads = [(j1, j2, j3), (j1, j5, j6), (j4, j2, j6), (j4, j5, j3)];
    if triads
        .iter()
        .any(|&(a, b, c)| c > a + b || c < (a - b).abs() || (a + b + c) % 2 != 0)
    {
        return 0.0;
    }
    let delta = |(a, b, c): (i32, i32, i32)| {
        ratio(
            fact((a + b - c) / 2) * fact((a - b + c) / 2) * fact((-a + b + c) / 2),
            fact((a + b + c) / 2 + 1),
        )
    };
    let square_prefactor = triads
        .iter()
        .map(|&t| delta(t))
        .fold(BigRational::one(), |acc, d| acc * d);
    let a: Vec<i32> = triads.iter().map(|&(x, y, z)| (x + y + z) / 2).collect();
    let b = [
        (j1 + j2 + j4 + j5) / 2,
        (j2 + j3 + j5 + j6) / 2,
        (j3 + j1 + j6 + j4) / 2,
    ];
    let mut sum = BigRational::zero();
    for t in 0..=80 {
        if a.iter().any(|&ai| t < ai) || b.iter().any(|&bi| t > bi) {
            continue;
        }
        let den: BigInt =
            a.iter().map(|&ai| fact(t - ai)).product::<BigInt>() * b.iter().map(|&bi| fact(bi - t)).product::<BigInt>();
        let term = ratio(fact(t + 1), den);
        if t % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_zero() {
        return 0.0;
    }
    let sign = if sum.is_positive() { 1.0 } else { -1.0 };
    sign * (square_prefactor * &sum * &sum).to_f64().unwrap().sqrt()
}
