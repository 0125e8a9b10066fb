//! Wigner 3j and 6j symbols by the Racah factorial sums.

use std::sync::OnceLock;

use super::HalfInt;

const FACTORIAL_TABLE_LEN: usize = 101;

fn factorial(n: i32) -> f64 {
    static TABLE: OnceLock<[f64; FACTORIAL_TABLE_LEN]> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = [1.0; FACTORIAL_TABLE_LEN];
        // Exact integer products while they fit in u128 (n <= 34).
        let mut exact: u128 = 1;
        for (n, slot) in t.iter_mut().enumerate().skip(1) {
            if n <= 34 {
                exact *= n as u128;
                *slot = exact as f64;
            }
        }
        for n in 35..FACTORIAL_TABLE_LEN {
            t[n] = t[n - 1] * n as f64;
        }
        t
    });
    assert!(
        n >= 0 && (n as usize) < FACTORIAL_TABLE_LEN,
        "factorial argument {n} outside table"
    );
    table[n as usize]
}

/// `(-1)^k` for an integer given as twice its value.
fn parity_twice(twice: i32) -> f64 {
    debug_assert!(twice % 2 == 0);
    if (twice / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn triangle(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    let (a, b, c) = (a.twice(), b.twice(), c.twice());
    a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && c <= a + b && c >= (a - b).abs()
}

/// Square of the triangle coefficient, `(a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!`.
fn delta(a: HalfInt, b: HalfInt, c: HalfInt) -> f64 {
    let (a, b, c) = (a.twice(), b.twice(), c.twice());
    factorial((a + b - c) / 2) * factorial((a - b + c) / 2) * factorial((-a + b + c) / 2)
        / factorial((a + b + c) / 2 + 1)
}

fn binomial(n: i32, k: i32) -> Option<i128> {
    if k < 0 || k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as i128)? / (i + 1) as i128;
    }
    Some(acc)
}

/// `Σ_k (-1)^k C(c,k) C(p,d-k) C(r,e-k)`, or `None` on overflow.
fn binomial_sum(k_min: i32, k_max: i32, c: i32, p: i32, r: i32, d: i32, e: i32) -> Option<i128> {
    let mut total: i128 = 0;
    for k in k_min..=k_max {
        let term = binomial(c, k)?
            .checked_mul(binomial(p, d - k)?)?
            .checked_mul(binomial(r, e - k)?)?;
        total = if k % 2 == 0 {
            total.checked_add(term)?
        } else {
            total.checked_sub(term)?
        };
    }
    Some(total)
}

fn projection_ok(j: HalfInt, m: HalfInt) -> bool {
    m.twice().abs() <= j.twice() && (j.twice() - m.twice()) % 2 == 0
}

/// Wigner 3j symbol `(j1 j2 j3; m1 m2 m3)`.
///
/// Zero when the triangle or projection-sum conditions fail or a projection
/// exceeds its angular momentum.
pub fn wigner_3j(j1: HalfInt, j2: HalfInt, j3: HalfInt, m1: HalfInt, m2: HalfInt, m3: HalfInt) -> f64 {
    if (m1 + m2 + m3).twice() != 0
        || !triangle(j1, j2, j3)
        || !projection_ok(j1, m1)
        || !projection_ok(j2, m2)
        || !projection_ok(j3, m3)
    {
        return 0.0;
    }
    let (j1, j2, j3) = (j1.twice(), j2.twice(), j3.twice());
    let (m1, m2, m3) = (m1.twice(), m2.twice(), m3.twice());

    // All of these are integers once halved.
    let a = (j3 - j2 + m1) / 2;
    let b = (j3 - j1 - m2) / 2;
    let c = (j1 + j2 - j3) / 2;
    let d = (j1 - m1) / 2;
    let e = (j2 + m2) / 2;
    let k_min = 0.max(-a).max(-b);
    let k_max = c.min(d).min(e);

    // As a sum of binomial products the Racah series is an integer, so exact
    // cancellations come out as exact zeros.
    let (p, r) = ((j1 - j2 + j3) / 2, (-j1 + j2 + j3) / 2);
    let sum = match binomial_sum(k_min, k_max, c, p, r, d, e) {
        Some(s) => s as f64 / (factorial(c) * factorial(p) * factorial(r)),
        None => {
            let mut sum = 0.0;
            for k in k_min..=k_max {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                sum += sign
                    / (factorial(k)
                        * factorial(a + k)
                        * factorial(b + k)
                        * factorial(c - k)
                        * factorial(d - k)
                        * factorial(e - k));
            }
            sum
        }
    };

    let norm = delta(
        HalfInt::from_twice(j1),
        HalfInt::from_twice(j2),
        HalfInt::from_twice(j3),
    ) * factorial((j1 + m1) / 2)
        * factorial((j1 - m1) / 2)
        * factorial((j2 + m2) / 2)
        * factorial((j2 - m2) / 2)
        * factorial((j3 + m3) / 2)
        * factorial((j3 - m3) / 2);
    parity_twice(j1 - j2 - m3) * norm.sqrt() * sum
}

/// Wigner 6j symbol `{j1 j2 j3; j4 j5 j6}`; zero when any triad fails the
/// triangle rule.
pub fn wigner_6j(j1: HalfInt, j2: HalfInt, j3: HalfInt, j4: HalfInt, j5: HalfInt, j6: HalfInt) -> f64 {
    if !(triangle(j1, j2, j3) && triangle(j1, j5, j6) && triangle(j4, j2, j6) && triangle(j4, j5, j3)) {
        return 0.0;
    }
    let norm = (delta(j1, j2, j3) * delta(j1, j5, j6) * delta(j4, j2, j6) * delta(j4, j5, j3)).sqrt();
    let [j1, j2, j3, j4, j5, j6] = [j1, j2, j3, j4, j5, j6].map(HalfInt::twice);
    let a = [
        (j1 + j2 + j3) / 2,
        (j1 + j5 + j6) / 2,
        (j4 + j2 + j6) / 2,
        (j4 + j5 + j3) / 2,
    ];
    let b = [
        (j1 + j2 + j4 + j5) / 2,
        (j2 + j3 + j5 + j6) / 2,
        (j3 + j1 + j6 + j4) / 2,
    ];
    let t_min = *a.iter().max().unwrap();
    let t_max = *b.iter().min().unwrap();
    let mut sum = 0.0;
    for t in t_min..=t_max {
        let sign = if t % 2 == 0 { 1.0 } else { -1.0 };
        let den: f64 = a.iter().map(|&ai| factorial(t - ai)).product::<f64>()
            * b.iter().map(|&bi| factorial(bi - t)).product::<f64>();
        sum += sign * factorial(t + 1) / den;
    }
    norm * sum
}
