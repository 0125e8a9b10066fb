use crate::constants::{angular_frequency, C, GAMMA_RB_4D52, HBAR, M_ELECTRON};
use crate::error::{domain, Error, Result};

use super::{wigner_6j, HalfInt};

/// A single electric-quadrupole transition `|n F M> -> |n' F' M'>`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionSpec {
    pub lower_label: String,
    pub upper_label: String,
    pub f: HalfInt,
    pub m: HalfInt,
    pub f_prime: HalfInt,
    pub m_prime: HalfInt,
    pub j: HalfInt,
    pub j_prime: HalfInt,
    pub nuclear_spin: HalfInt,
    pub l: HalfInt,
    pub l_prime: HalfInt,
    /// Vacuum wavelength of the transition, m.
    pub wavelength: f64,
    /// Free-space oscillator strength of the fine-structure transition `J -> J'`.
    pub oscillator_strength: f64,
    /// Total decay rate of the upper level, 1/s.
    pub gamma: f64,
}

/// Quadrupole selection rules on `F`, `M`, `J` and `L`.
#[allow(clippy::too_many_arguments)]
pub fn selection_rules(
    f: HalfInt,
    f_prime: HalfInt,
    m: HalfInt,
    m_prime: HalfInt,
    j: HalfInt,
    j_prime: HalfInt,
    l: HalfInt,
    l_prime: HalfInt,
) -> Result<()> {
    let two = HalfInt::int(2);
    let rule = |ok: bool, what: String| if ok { Ok(()) } else { Err(Error::SelectionRule(what)) };
    rule(
        (f_prime - f).abs() <= two && two <= f_prime + f,
        format!("|F'-F| <= 2 <= F'+F fails for F = {f}, F' = {f_prime}"),
    )?;
    rule(
        (m_prime - m).abs() <= two,
        format!("|M'-M| <= 2 fails for M = {m}, M' = {m_prime}"),
    )?;
    rule(
        (j_prime - j).abs() <= two && two <= j_prime + j,
        format!("|J'-J| <= 2 <= J'+J fails for J = {j}, J' = {j_prime}"),
    )?;
    let dl = (l_prime - l).abs();
    rule(
        (dl == HalfInt::ZERO || dl == two) && l_prime + l >= two,
        format!("|L'-L| in {{0,2}} and L'+L >= 2 fails for L = {l}, L' = {l_prime}"),
    )
}

fn check_projection(name: &str, j: HalfInt, m: HalfInt) -> Result<()> {
    if j.twice() < 0 || m.twice().abs() > j.twice() || (j.twice() - m.twice()) % 2 != 0 {
        return Err(domain(format!(
            "{name}: projection {m} invalid for angular momentum {j}"
        )));
    }
    Ok(())
}

impl TransitionSpec {
    /// Checks every construction invariant and returns the spec unchanged.
    pub fn validated(self) -> Result<Self> {
        for (name, v) in [
            ("J", self.j),
            ("J'", self.j_prime),
            ("I", self.nuclear_spin),
            ("L", self.l),
            ("L'", self.l_prime),
        ] {
            if v.twice() < 0 {
                return Err(domain(format!("{name} must be non-negative, got {v}")));
            }
        }
        check_projection("lower level", self.f, self.m)?;
        check_projection("upper level", self.f_prime, self.m_prime)?;
        selection_rules(
            self.f,
            self.f_prime,
            self.m,
            self.m_prime,
            self.j,
            self.j_prime,
            self.l,
            self.l_prime,
        )?;
        if !(self.wavelength > 0.0) {
            return Err(domain(format!("wavelength must be positive, got {}", self.wavelength)));
        }
        if !(self.oscillator_strength > 0.0) {
            return Err(domain(format!(
                "oscillator strength must be positive, got {}",
                self.oscillator_strength
            )));
        }
        if !(self.gamma > 0.0) {
            return Err(domain(format!("decay rate must be positive, got {}", self.gamma)));
        }
        Ok(self)
    }

    /// Same transition with a different upper sublevel.
    pub fn with_m_prime(&self, m_prime: HalfInt) -> Result<Self> {
        TransitionSpec {
            m_prime,
            ..self.clone()
        }
        .validated()
    }

    /// `5S1/2 F=2 -> 4D5/2 F'=4` of 87Rb with free-space parameters.
    pub fn rb87_5s_4d(m: i32, m_prime: i32) -> Result<Self> {
        TransitionSpec {
            lower_label: "5S1/2".into(),
            upper_label: "4D5/2".into(),
            f: HalfInt::int(2),
            m: HalfInt::int(m),
            f_prime: HalfInt::int(4),
            m_prime: HalfInt::int(m_prime),
            j: HalfInt::from_twice(1),
            j_prime: HalfInt::from_twice(5),
            nuclear_spin: HalfInt::from_twice(3),
            l: HalfInt::int(0),
            l_prime: HalfInt::int(2),
            wavelength: 516.5e-9,
            oscillator_strength: 8.06e-7,
            gamma: GAMMA_RB_4D52,
        }
        .validated()
    }

    /// Transition angular frequency `ω0 = 2πc/λ0`.
    pub fn omega0(&self) -> f64 {
        angular_frequency(self.wavelength)
    }

    /// `q = M' - M`.
    pub fn q(&self) -> i32 {
        let dq = self.m_prime - self.m;
        dq.as_integer().expect("M' - M is an integer for valid projections")
    }

    pub fn reduced_element_j(&self) -> Result<f64> {
        reduced_element_j(self.oscillator_strength, self.wavelength, self.j)
    }

    pub fn reduced_element_f(&self) -> Result<f64> {
        Ok(reduced_element_f(
            self.reduced_element_j()?,
            self.j,
            self.j_prime,
            self.nuclear_spin,
            self.f,
            self.f_prime,
        ))
    }
}

/// `|<n'J'||T^(2)||nJ>|` in m² from the measured oscillator strength,
/// `sqrt(20 ħ c² (2J+1) f / (m_e ω0³))`.
pub fn reduced_element_j(oscillator_strength: f64, wavelength: f64, j: HalfInt) -> Result<f64> {
    if oscillator_strength < 0.0 || oscillator_strength.is_nan() {
        return Err(domain(format!(
            "oscillator strength must be non-negative, got {oscillator_strength}"
        )));
    }
    if !(wavelength > 0.0) {
        return Err(domain(format!("wavelength must be positive, got {wavelength}")));
    }
    let omega0 = angular_frequency(wavelength);
    let mult = j.multiplicity() as f64;
    Ok((20.0 * HBAR * C * C * mult * oscillator_strength / (M_ELECTRON * omega0.powi(3))).sqrt())
}

/// Hyperfine reduction of the rank-2 reduced element,
/// `<J'IF'||T||JIF> = red_j (-1)^(F'+J+2+I) sqrt((2F'+1)(2F+1)) {J' F' I; F J 2}`.
pub fn reduced_element_f(
    red_j: f64,
    j: HalfInt,
    j_prime: HalfInt,
    nuclear_spin: HalfInt,
    f: HalfInt,
    f_prime: HalfInt,
) -> f64 {
    let six_j = wigner_6j(j_prime, f_prime, nuclear_spin, f, j, HalfInt::int(2));
    if six_j == 0.0 {
        return 0.0;
    }
    let phase_twice = (f_prime + j + HalfInt::int(2) + nuclear_spin).twice();
    // F' + J + I is an integer whenever the 6j is non-zero.
    let sign = if phase_twice.rem_euclid(4) == 0 { 1.0 } else { -1.0 };
    red_j * sign * ((f_prime.multiplicity() * f.multiplicity()) as f64).sqrt() * six_j
}
