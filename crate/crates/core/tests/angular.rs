mod common;

use common::racah::{oracle_3j, oracle_6j};
use quadtorque::angular::*;

fn h(twice: i32) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300) || (a == 0.0 && b == 0.0)
}

#[test]
fn three_j_golden_from_oracle() {
    let v = wigner_3j(h(8), h(4), h(4), h(-8), h(4), h(4));
    let o = oracle_3j([8, 4, 4], [-8, 4, 4]);
    assert!((o - 1.0 / 3.0).abs() < 1e-15);
    assert!(close(v, o, 1e-12));
}

#[test]
fn six_j_closed_form_with_zero() {
    // {j1 j2 j3; 0 j3 j2} = (-1)^(j1+j2+j3) / sqrt((2j2+1)(2j3+1))
    for j1 in 0i32..=6 {
        for j2 in 0..=6 {
            for j3 in 0..=6 {
                if (j1 + j2 + j3) % 2 != 0 || j3 > j1 + j2 || j3 < (j1 - j2).abs() {
                    continue;
                }
                let v = wigner_6j(h(j1), h(j2), h(j3), h(0), h(j3), h(j2));
                let sign = if ((j1 + j2 + j3) / 2) % 2 == 0 { 1.0 } else { -1.0 };
                let expected = sign / (((j2 + 1) * (j3 + 1)) as f64).sqrt();
                assert!(close(v, expected, 1e-13), "{j1} {j2} {j3}: {v} vs {expected}");
                assert!(close(oracle_6j([j1, j2, j3, 0, j3, j2]), expected, 1e-13));
            }
        }
    }
}

#[test]
fn six_j_half_integer_value() {
    let v = wigner_6j(h(1), h(1), h(2), h(1), h(1), h(2));
    assert!(close(v, oracle_6j([1, 1, 2, 1, 1, 2]), 1e-12));
    assert!((v - 1.0 / 6.0).abs() < 1e-15);
}

/// All 3j with j <= 4 (twice-values <= 8) against the exact oracle.
#[test]
fn three_j_exhaustive_oracle() {
    let mut checked = 0;
    for j1 in 0i32..=8 {
        for j2 in 0..=8 {
            for j3 in 0..=8 {
                for m1 in (-j1..=j1).step_by(2) {
                    for m2 in (-j2..=j2).step_by(2) {
                        let m3 = -m1 - m2;
                        if m3.abs() > j3 || (j3 - m3) % 2 != 0 {
                            continue;
                        }
                        let v = wigner_3j(h(j1), h(j2), h(j3), h(m1), h(m2), h(m3));
                        let o = oracle_3j([j1, j2, j3], [m1, m2, m3]);
                        assert!(close(v, o, 1e-12), "({j1} {j2} {j3}; {m1} {m2} {m3}) {v} vs {o}");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn six_j_exhaustive_oracle() {
    for code in 0..7i32.pow(6) {
        let mut j = [0; 6];
        let mut c = code;
        for slot in j.iter_mut() {
            *slot = c % 7;
            c /= 7;
        }
        let v = wigner_6j(h(j[0]), h(j[1]), h(j[2]), h(j[3]), h(j[4]), h(j[5]));
        let o = oracle_6j(j);
        assert!(close(v, o, 1e-12), "{j:?}: {v} vs {o}");
    }
}

fn parity(twice_sum: i32) -> f64 {
    if (twice_sum / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

#[test]
fn three_j_symmetries() {
    for j1 in 0i32..=8 {
        for j2 in 0..=8 {
            for j3 in 0..=8 {
                if (j1 + j2 + j3) % 2 != 0 {
                    continue;
                }
                let phase = parity(j1 + j2 + j3);
                for m1 in (-j1..=j1).step_by(2) {
                    for m2 in (-j2..=j2).step_by(2) {
                        let m3 = -m1 - m2;
                        let base = wigner_3j(h(j1), h(j2), h(j3), h(m1), h(m2), h(m3));
                        // even (cyclic) permutations
                        let c1 = wigner_3j(h(j2), h(j3), h(j1), h(m2), h(m3), h(m1));
                        let c2 = wigner_3j(h(j3), h(j1), h(j2), h(m3), h(m1), h(m2));
                        assert!(close(base, c1, 1e-13) && close(base, c2, 1e-13));
                        // odd permutation
                        let swap = wigner_3j(h(j2), h(j1), h(j3), h(m2), h(m1), h(m3));
                        assert!(close(swap, phase * base, 1e-13));
                        // all projections negated
                        let neg = wigner_3j(h(j1), h(j2), h(j3), h(-m1), h(-m2), h(-m3));
                        assert!(close(neg, phase * base, 1e-13));
                    }
                }
            }
        }
    }
}

#[test]
fn three_j_orthogonality() {
    // Σ_{m1,m2} (2j3+1) (j1 j2 j3; m1 m2 m3)(j1 j2 j3'; m1 m2 m3') = δ δ
    for j1 in 0i32..=6 {
        for j2 in 0..=6 {
            for j3 in 0..=6 {
                for j3p in 0..=6 {
                    for m3 in (-j3..=j3).step_by(2) {
                        for m3p in (-j3p..=j3p).step_by(2) {
                            let mut sum = 0.0;
                            for m1 in (-j1..=j1).step_by(2) {
                                for m2 in (-j2..=j2).step_by(2) {
                                    sum += wigner_3j(h(j1), h(j2), h(j3), h(m1), h(m2), h(-m3))
                                        * wigner_3j(h(j1), h(j2), h(j3p), h(m1), h(m2), h(-m3p));
                                }
                            }
                            sum *= (j3 + 1) as f64;
                            let allowed = (j1 + j2 + j3) % 2 == 0 && j3 <= j1 + j2 && j3 >= (j1 - j2).abs();
                            let expected = if j3 == j3p && m3 == m3p && allowed { 1.0 } else { 0.0 };
                            assert!((sum - expected).abs() < 1e-12, "{j1} {j2} {j3} {j3p} {m3} {m3p}: {sum}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn reduced_element_j_golden() {
    let v = reduced_element_j(8.06e-7, 516.5e-9, h(1)).unwrap();
    // evaluated independently in 30-digit arithmetic
    assert!((v / 8.316_037_402_103_65e-20 - 1.0).abs() < 1e-13);
    let t = TransitionSpec::rb87_5s_4d(2, 4).unwrap();
    assert_eq!(t.reduced_element_j().unwrap(), v);
}

/// Σ_{F',M',q} |3j · <F'||T||F>|² = red_j² / (2J+1) for every F, M.
fn sum_rule(red_j: f64, j: HalfInt, jp: HalfInt, i: HalfInt, f: HalfInt, m: HalfInt) -> f64 {
    let mut total = 0.0;
    let lo = (jp - i).abs().twice();
    let hi = (jp + i).twice();
    for fp in (lo..=hi).step_by(2).map(h) {
        let red_f = reduced_element_f(red_j, j, jp, i, f, fp);
        for mp in fp.projections() {
            let q = mp - m;
            if q.abs() > HalfInt::int(2) {
                continue;
            }
            let w = wigner_3j(fp, HalfInt::int(2), f, -mp, q, m);
            total += (w * red_f).powi(2);
        }
    }
    total
}

#[test]
fn hyperfine_sum_rule() {
    let cases = [
        (h(1), h(5), h(3)), // Rb 5S1/2 -> 4D5/2
        (h(1), h(3), h(3)),
        (h(1), h(5), h(7)),
        (h(3), h(7), h(5)),
    ];
    for (j, jp, i) in cases {
        let expected = 1.0 / j.multiplicity() as f64;
        let lo = (j - i).abs().twice();
        for f in (lo..=(j + i).twice()).step_by(2).map(h) {
            for m in f.projections() {
                let s = sum_rule(1.0, j, jp, i, f, m);
                assert!(
                    (s / expected - 1.0).abs() < 1e-12,
                    "J={j} J'={jp} I={i} F={f} M={m}: {s}"
                );
            }
        }
    }
}

#[test]
fn rb87_hyperfine_reduced_element() {
    let red_j = 8.316_037_402_103_65e-20;
    let v = reduced_element_f(red_j, h(1), h(5), h(3), h(4), h(8));
    assert!((v / 1.018_502_415_852_708e-19 - 1.0).abs() < 1e-13);
    // and it is consistent with the sum rule over F' for F = 2
    let s = sum_rule(red_j, h(1), h(5), h(3), h(4), h(4));
    assert!((s / (red_j * red_j / 2.0) - 1.0).abs() < 1e-12);
}

/// Every (F, F', M, M') with F, F' <= 4 is accepted exactly when the
/// quadrupole rules allow it.
#[test]
fn selection_rule_gate_table() {
    let base = TransitionSpec::rb87_5s_4d(2, 2).unwrap();
    let mut accepted = 0;
    let mut rejected = 0;
    for f2 in 0i32..=8 {
        for fp2 in 0..=8 {
            if (f2 + fp2) % 2 != 0 {
                continue;
            }
            for m2 in (-f2..=f2).step_by(2) {
                for mp2 in (-fp2..=fp2).step_by(2) {
                    let allowed = (fp2 - f2).abs() <= 4 && f2 + fp2 >= 4 && (mp2 - m2).abs() <= 4;
                    let spec = TransitionSpec {
                        f: h(f2),
                        f_prime: h(fp2),
                        m: h(m2),
                        m_prime: h(mp2),
                        ..base.clone()
                    };
                    let result = spec.validated();
                    assert_eq!(result.is_ok(), allowed, "F={f2}/2 F'={fp2}/2 M={m2}/2 M'={mp2}/2");
                    if allowed {
                        accepted += 1;
                    } else {
                        rejected += 1;
                    }
                }
            }
        }
    }
    assert!(accepted > 0 && rejected > 0);
    // J and L rules
    let bad_j = TransitionSpec {
        j_prime: h(7),
        ..base.clone()
    };
    assert!(bad_j.validated().is_err());
    let bad_l = TransitionSpec {
        l_prime: HalfInt::int(1),
        ..base.clone()
    };
    assert!(bad_l.validated().is_err());
    let s_to_s = TransitionSpec {
        l: HalfInt::int(0),
        l_prime: HalfInt::int(0),
        ..base
    };
    assert!(s_to_s.validated().is_err());
}
