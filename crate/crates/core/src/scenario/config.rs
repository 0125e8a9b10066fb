//! Sweep configuration: a TOML document whose dimensional scalars carry
//! explicit units (`"280 nm"`, `"1 nW"`, `"1.119e7 s^-1"`, `"0 MHz"`).
//! Every unit conversion to SI happens here.

use std::fmt::Write as _;
use std::ops::Range;
use std::path::PathBuf;

use serde::Deserialize;
use toml::Spanned;

use crate::angular::{HalfInt, TransitionSpec};
use crate::fibermodes::{FiberSpec, ModeId};
use crate::units::parse_scaled;

/// A configuration problem, located by key and (when known) 1-based line.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("config error at `{key}`{}: {message}", line.map(|l| format!(" (line {l})")).unwrap_or_default())]
pub struct ConfigError {
    pub key: String,
    pub line: Option<usize>,
    pub message: String,
}

/// One guided drive as configured; resolved against the solved modes at run time.
#[derive(Clone, Debug, PartialEq)]
pub struct DriveSpec {
    pub mode: ModeId,
    pub f: i32,
    pub p: i32,
    /// W
    pub power: f64,
    /// rad/s
    pub detuning: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub fiber: FiberSpec,
    /// Transition with `m_prime` set to the first entry of `sublevels`.
    pub transition: TransitionSpec,
    pub drives: Vec<DriveSpec>,
    pub sublevels: Vec<HalfInt>,
    /// m
    pub r_min: f64,
    /// m
    pub r_max: f64,
    pub n_points: usize,
    pub output: Option<PathBuf>,
}

pub const PAPER_FIG2_FIG4: &str = include_str!("../../presets/paper_fig2_fig4.toml");

/// Names of the shipped presets.
pub const PRESETS: &[&str] = &["paper_fig2_fig4"];

pub fn preset(name: &str) -> Option<&'static str> {
    match name {
        "paper_fig2_fig4" => Some(PAPER_FIG2_FIG4),
        _ => None,
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Float(f64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    fiber: RawFiber,
    transition: RawTransition,
    drive: Vec<Spanned<RawDrive>>,
    sweep: RawSweep,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFiber {
    radius: Spanned<Scalar>,
    n_core: Spanned<f64>,
    n_clad: Spanned<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
struct RawTransition {
    #[serde(default)]
    lower: Option<String>,
    #[serde(default)]
    upper: Option<String>,
    F: Spanned<Scalar>,
    M: Spanned<Scalar>,
    Fp: Spanned<Scalar>,
    J: Spanned<Scalar>,
    Jp: Spanned<Scalar>,
    I: Spanned<Scalar>,
    L: Spanned<Scalar>,
    Lp: Spanned<Scalar>,
    wavelength: Spanned<Scalar>,
    oscillator_strength: Spanned<f64>,
    decay_rate: Spanned<Scalar>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDrive {
    mode: Spanned<String>,
    f: Spanned<i64>,
    #[serde(default)]
    p: Option<Spanned<i64>>,
    power: Spanned<Scalar>,
    detuning: Spanned<Scalar>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    sublevels: Spanned<Vec<Scalar>>,
    r_min: Spanned<Scalar>,
    r_max: Spanned<Scalar>,
    points: Spanned<i64>,
    #[serde(default)]
    output: Option<String>,
}

struct Ctx<'a> {
    text: &'a str,
}

impl Ctx<'_> {
    fn line(&self, span: &Range<usize>) -> usize {
        let end = span.start.min(self.text.len());
        self.text[..end].bytes().filter(|&b| b == b'\n').count() + 1
    }

    fn err(&self, key: &str, span: &Range<usize>, message: impl Into<String>) -> ConfigError {
        ConfigError {
            key: key.to_string(),
            line: Some(self.line(span)),
            message: message.into(),
        }
    }

    /// Quantity with a unit suffix, converted to SI.
    fn quantity(&self, key: &str, value: &Spanned<Scalar>, units: &[(&str, Unit)]) -> Result<f64, ConfigError> {
        let allowed = || units.iter().map(|(u, _)| *u).collect::<Vec<_>>().join(", ");
        let text = match value.get_ref() {
            Scalar::Text(t) => t.trim(),
            _ => {
                return Err(self.err(
                    key,
                    &value.span(),
                    format!("missing unit; write e.g. \"{} {}\"", 1, units[0].0),
                ))
            }
        };
        let (number, unit) = match text.find(|c: char| c.is_whitespace()) {
            Some(pos) => (&text[..pos], text[pos..].trim()),
            None => return Err(self.err(key, &value.span(), format!("missing unit (one of {})", allowed()))),
        };
        let Some((_, conv)) = units.iter().find(|(u, _)| *u == unit) else {
            return Err(self.err(
                key,
                &value.span(),
                format!("unknown unit {unit:?} (expected one of {})", allowed()),
            ));
        };
        let parsed = match *conv {
            Unit::Decimal(exp) => parse_scaled(number, exp),
            Unit::Cyclic(exp) => parse_scaled(number, exp).map(|v| 2.0 * std::f64::consts::PI * v),
        };
        match parsed {
            Some(v) if v.is_finite() => Ok(v),
            _ => Err(self.err(key, &value.span(), format!("not a number: {number:?}"))),
        }
    }

    fn half_int(&self, key: &str, value: &Spanned<Scalar>) -> Result<HalfInt, ConfigError> {
        let parsed = match value.get_ref() {
            Scalar::Int(i) => i32::try_from(*i).ok().map(HalfInt::int),
            Scalar::Float(v) => v.to_string().parse().ok(),
            Scalar::Text(t) => t.parse().ok(),
        };
        parsed.ok_or_else(|| {
            self.err(
                key,
                &value.span(),
                "expected an integer or half-integer such as 2 or \"5/2\"",
            )
        })
    }
}

#[derive(Clone, Copy)]
enum Unit {
    /// value × 10^exp
    Decimal(i32),
    /// 2π × value × 10^exp (cyclic frequency to angular)
    Cyclic(i32),
}

const LENGTH: &[(&str, Unit)] = &[
    ("nm", Unit::Decimal(-9)),
    ("um", Unit::Decimal(-6)),
    ("µm", Unit::Decimal(-6)),
    ("m", Unit::Decimal(0)),
];
const POWER: &[(&str, Unit)] = &[
    ("nW", Unit::Decimal(-9)),
    ("uW", Unit::Decimal(-6)),
    ("µW", Unit::Decimal(-6)),
    ("mW", Unit::Decimal(-3)),
    ("W", Unit::Decimal(0)),
];
const RATE: &[(&str, Unit)] = &[
    ("s^-1", Unit::Decimal(0)),
    ("s⁻¹", Unit::Decimal(0)),
    ("1/s", Unit::Decimal(0)),
];
const DETUNING: &[(&str, Unit)] = &[
    ("MHz", Unit::Cyclic(6)),
    ("kHz", Unit::Cyclic(3)),
    ("Hz", Unit::Cyclic(0)),
    ("rad/s", Unit::Decimal(0)),
];

fn toml_error(text: &str, e: toml::de::Error) -> ConfigError {
    let message = e.message().to_string();
    let key = message.split('`').nth(1).map(str::to_string).unwrap_or_default();
    let line = e.span().map(|s| Ctx { text }.line(&s));
    ConfigError { key, line, message }
}

/// Parses and validates a configuration document.
pub fn load_config(text: &str) -> Result<SweepConfig, ConfigError> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| toml_error(text, e))?;
    let cx = Ctx { text };

    let radius = cx.quantity("fiber.radius", &raw.fiber.radius, LENGTH)?;
    let fiber = FiberSpec::new(radius, *raw.fiber.n_core.get_ref(), *raw.fiber.n_clad.get_ref())
        .map_err(|e| cx.err("fiber", &raw.fiber.n_core.span(), e.to_string()))?;

    let t = &raw.transition;
    let sublevels: Vec<HalfInt> = raw
        .sweep
        .sublevels
        .get_ref()
        .iter()
        .map(|s| {
            cx.half_int(
                "sweep.sublevels",
                &Spanned::new(raw.sweep.sublevels.span(), clone_scalar(s)),
            )
        })
        .collect::<Result<_, _>>()?;
    if sublevels.is_empty() {
        return Err(cx.err(
            "sweep.sublevels",
            &raw.sweep.sublevels.span(),
            "at least one upper sublevel required",
        ));
    }
    let transition = TransitionSpec {
        lower_label: t.lower.clone().unwrap_or_default(),
        upper_label: t.upper.clone().unwrap_or_default(),
        f: cx.half_int("transition.F", &t.F)?,
        m: cx.half_int("transition.M", &t.M)?,
        f_prime: cx.half_int("transition.Fp", &t.Fp)?,
        m_prime: sublevels[0],
        j: cx.half_int("transition.J", &t.J)?,
        j_prime: cx.half_int("transition.Jp", &t.Jp)?,
        nuclear_spin: cx.half_int("transition.I", &t.I)?,
        l: cx.half_int("transition.L", &t.L)?,
        l_prime: cx.half_int("transition.Lp", &t.Lp)?,
        wavelength: cx.quantity("transition.wavelength", &t.wavelength, LENGTH)?,
        oscillator_strength: *t.oscillator_strength.get_ref(),
        gamma: cx.quantity("transition.decay_rate", &t.decay_rate, RATE)?,
    };
    for &mp in &sublevels {
        transition.with_m_prime(mp).map_err(|e| {
            cx.err(
                "sweep.sublevels",
                &raw.sweep.sublevels.span(),
                format!("M' = {mp}: {e}"),
            )
        })?;
    }
    let transition = transition
        .validated()
        .map_err(|e| cx.err("transition", &t.F.span(), e.to_string()))?;

    if raw.drive.is_empty() {
        return Err(ConfigError {
            key: "drive".into(),
            line: None,
            message: "at least one [[drive]] required".into(),
        });
    }
    let drives = raw
        .drive
        .iter()
        .map(|d| {
            let span = d.span();
            let d = d.get_ref();
            let mode: ModeId = d
                .mode
                .get_ref()
                .parse()
                .map_err(|e: crate::Error| cx.err("drive.mode", &d.mode.span(), e.to_string()))?;
            let sign = |key: &str, v: &Spanned<i64>| match *v.get_ref() {
                1 => Ok(1),
                -1 => Ok(-1),
                other => Err(cx.err(key, &v.span(), format!("must be +1 or -1, got {other}"))),
            };
            let f = sign("drive.f", &d.f)?;
            let p = match &d.p {
                Some(p) => sign("drive.p", p)?,
                None if !mode.is_hybrid() => 1,
                None => return Err(cx.err("drive.p", &span, format!("{mode} needs a polarization index p"))),
            };
            let power = cx.quantity("drive.power", &d.power, POWER)?;
            if !(power > 0.0) {
                return Err(cx.err("drive.power", &d.power.span(), "power must be positive"));
            }
            let detuning = cx.quantity("drive.detuning", &d.detuning, DETUNING)?;
            Ok(DriveSpec {
                mode,
                f,
                p,
                power,
                detuning,
            })
        })
        .collect::<Result<Vec<_>, ConfigError>>()?;

    let s = &raw.sweep;
    let r_min = cx.quantity("sweep.r_min", &s.r_min, LENGTH)?;
    let r_max = cx.quantity("sweep.r_max", &s.r_max, LENGTH)?;
    if !(r_min > fiber.radius) {
        return Err(cx.err(
            "sweep.r_min",
            &s.r_min.span(),
            format!(
                "atom inside fiber: r_min = {r_min:e} m is not beyond the radius {:e} m",
                fiber.radius
            ),
        ));
    }
    if !(r_max >= r_min) {
        return Err(cx.err("sweep.r_max", &s.r_max.span(), "r_max must not be below r_min"));
    }
    let n_points = *s.points.get_ref();
    if n_points < 2 {
        return Err(cx.err("sweep.points", &s.points.span(), "need at least 2 points"));
    }

    Ok(SweepConfig {
        fiber,
        transition,
        drives,
        sublevels,
        r_min,
        r_max,
        n_points: n_points as usize,
        output: s.output.as_ref().map(PathBuf::from),
    })
}

fn clone_scalar(s: &Scalar) -> Scalar {
    match s {
        Scalar::Int(i) => Scalar::Int(*i),
        Scalar::Float(v) => Scalar::Float(*v),
        Scalar::Text(t) => Scalar::Text(t.clone()),
    }
}

fn quote_half(h: HalfInt) -> String {
    if h.is_integer() {
        h.to_string()
    } else {
        format!("\"{h}\"")
    }
}

/// Writes `cfg` back as a configuration document in SI units.
pub fn to_config_text(cfg: &SweepConfig) -> String {
    let t = &cfg.transition;
    let mut out = String::new();
    let _ = writeln!(out, "[fiber]");
    let _ = writeln!(out, "radius = \"{:e} m\"", cfg.fiber.radius);
    let _ = writeln!(out, "n_core = {:?}", cfg.fiber.n_core);
    let _ = writeln!(out, "n_clad = {:?}", cfg.fiber.n_clad);
    let _ = writeln!(out, "\n[transition]");
    let _ = writeln!(out, "lower = {:?}", t.lower_label);
    let _ = writeln!(out, "upper = {:?}", t.upper_label);
    for (key, v) in [
        ("F", t.f),
        ("M", t.m),
        ("Fp", t.f_prime),
        ("J", t.j),
        ("Jp", t.j_prime),
        ("I", t.nuclear_spin),
        ("L", t.l),
        ("Lp", t.l_prime),
    ] {
        let _ = writeln!(out, "{key} = {}", quote_half(v));
    }
    let _ = writeln!(out, "wavelength = \"{:e} m\"", t.wavelength);
    let _ = writeln!(out, "oscillator_strength = {:e}", t.oscillator_strength);
    let _ = writeln!(out, "decay_rate = \"{:e} s^-1\"", t.gamma);
    for d in &cfg.drives {
        let _ = writeln!(out, "\n[[drive]]");
        let _ = writeln!(out, "mode = \"{}\"", d.mode);
        let _ = writeln!(out, "f = {}", d.f);
        let _ = writeln!(out, "p = {}", d.p);
        let _ = writeln!(out, "power = \"{:e} W\"", d.power);
        let _ = writeln!(out, "detuning = \"{:e} rad/s\"", d.detuning);
    }
    let _ = writeln!(out, "\n[sweep]");
    let levels: Vec<String> = cfg.sublevels.iter().map(|&h| quote_half(h)).collect();
    let _ = writeln!(out, "sublevels = [{}]", levels.join(", "));
    let _ = writeln!(out, "r_min = \"{:e} m\"", cfg.r_min);
    let _ = writeln!(out, "r_max = \"{:e} m\"", cfg.r_max);
    let _ = writeln!(out, "points = {}", cfg.n_points);
    if let Some(path) = &cfg.output {
        let _ = writeln!(out, "output = {:?}", path.display().to_string());
    }
    out
}
