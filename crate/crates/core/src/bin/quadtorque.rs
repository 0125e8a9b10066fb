// Negated comparisons reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};

use quadtorque::angular::HalfInt;
use quadtorque::dynamics::torque_weak_field;
use quadtorque::fibermodes::{characteristic_residual, solve_modes, vnumber, ModeId};
use quadtorque::quadcoupling::{rabi_frequency, Position};
use quadtorque::scenario::{
    emit_csv, format_value, load_config, preset, resolve_drive, run_sweep, write_csv, DriveSpec, SweepConfig, SweepRow,
    SweepTable, PRESETS,
};
use quadtorque::units::{parse_scaled, scale_decimal};

#[derive(Parser)]
#[command(
    name = "quadtorque",
    version,
    about = "Quadrupole Rabi frequencies and optical torques near a nanofiber"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Guided-mode census and propagation constants
    Modes(Common),
    /// Rabi frequency at one radius
    Rabi(Common),
    /// Weak-field torque and azimuthal force at one radius
    Torque(Common),
    /// Full radial sweep written as CSV
    Sweep(Common),
}

#[derive(Args)]
struct Common {
    /// Configuration file (TOML with unit-suffixed scalars)
    #[arg(long, conflicts_with = "preset")]
    config: Option<PathBuf>,
    /// Built-in configuration used when --config is absent
    #[arg(long, default_value = "paper_fig2_fig4")]
    preset: String,
    /// Replace the configured drives with this mode (e.g. HE21)
    #[arg(long)]
    mode: Option<String>,
    /// Polarization circulation, +1 or -1
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    /// Propagation direction, +1 or -1
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    #[arg(long)]
    power_nw: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    detuning_mhz: Option<String>,
    /// Lower sublevel M
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    /// Upper sublevels: a value, a list `0,2,4` or an inclusive range `0..4`
    #[arg(long, allow_hyphen_values = true)]
    mprime: Option<String>,
    /// Atom radius for `rabi` and `torque`
    #[arg(long)]
    r_nm: Option<String>,
    /// Output CSV path (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_sign(name: &str, text: &str) -> anyhow::Result<i32> {
    match text.trim() {
        "1" | "+1" | "+" => Ok(1),
        "-1" | "-" => Ok(-1),
        other => bail!("--{name} must be +1 or -1, got {other:?}"),
    }
}

fn parse_quantity(name: &str, text: &str, exp10: i32) -> anyhow::Result<f64> {
    parse_scaled(text, exp10).ok_or_else(|| anyhow!("--{name}: not a number: {text:?}"))
}

fn parse_sublevels(text: &str) -> anyhow::Result<Vec<HalfInt>> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: HalfInt = lo.parse()?;
        let hi: HalfInt = hi.trim_start_matches('=').parse()?;
        if hi < lo {
            bail!("empty sublevel range {text:?}");
        }
        return Ok((lo.twice()..=hi.twice()).step_by(2).map(HalfInt::from_twice).collect());
    }
    text.split(',').map(|s| s.parse().map_err(Into::into)).collect()
}

impl Common {
    fn load(&self) -> anyhow::Result<SweepConfig> {
        let text = match &self.config {
            Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
            None => preset(&self.preset)
                .ok_or_else(|| anyhow!("unknown preset {:?} (available: {})", self.preset, PRESETS.join(", ")))?
                .to_string(),
        };
        let mut cfg = load_config(&text)?;

        let mut drives = cfg.drives.clone();
        if let Some(mode) = &self.mode {
            let mode: ModeId = mode.parse()?;
            let template = drives[0].clone();
            drives = vec![DriveSpec { mode, ..template }];
        }
        for d in &mut drives {
            if let Some(f) = &self.f {
                d.f = parse_sign("f", f)?;
            }
            if let Some(p) = &self.p {
                d.p = parse_sign("p", p)?;
            }
            if let Some(p) = &self.power_nw {
                d.power = parse_quantity("power-nw", p, -9)?;
                if !(d.power > 0.0) {
                    bail!("--power-nw must be positive");
                }
            }
            if let Some(det) = &self.detuning_mhz {
                d.detuning = 2.0 * std::f64::consts::PI * parse_quantity("detuning-mhz", det, 6)?;
            }
        }
        cfg.drives = drives;
        if let Some(m) = &self.m {
            cfg.transition.m = m.parse()?;
        }
        if let Some(mp) = &self.mprime {
            cfg.sublevels = parse_sublevels(mp)?;
        }
        for &mp in &cfg.sublevels {
            cfg.transition.with_m_prime(mp)?;
        }
        if let Some(out) = &self.out {
            cfg.output = Some(out.clone());
        }
        Ok(cfg)
    }

    fn radius(&self, cfg: &SweepConfig) -> anyhow::Result<f64> {
        let r = match &self.r_nm {
            Some(r) => parse_quantity("r-nm", r, -9)?,
            None => cfg.r_min,
        };
        if !(r > cfg.fiber.radius) {
            bail!("atom inside fiber: r = {r:e} m, radius {:e} m", cfg.fiber.radius);
        }
        Ok(r)
    }
}

fn output(table: &SweepTable, cfg: &SweepConfig) -> anyhow::Result<()> {
    match &cfg.output {
        Some(path) => emit_csv(table, path).with_context(|| format!("writing {}", path.display())),
        None => {
            let stdout = std::io::stdout();
            write_csv(table, stdout.lock())?;
            Ok(())
        }
    }
}

fn modes(cfg: &SweepConfig) -> anyhow::Result<()> {
    let lambda = cfg.transition.wavelength;
    let solved = solve_modes(&cfg.fiber, lambda)?;
    let mut out = std::io::stdout().lock();
    writeln!(out, "# V = {}", vnumber(&cfg.fiber, lambda))?;
    writeln!(out, "mode,neff,beta_rad_per_m,residual")?;
    for m in &solved {
        writeln!(
            out,
            "{},{},{},{:e}",
            m.id,
            m.neff(),
            m.beta,
            characteristic_residual(&cfg.fiber, lambda, m.id, m.beta)
        )?;
    }
    Ok(())
}

fn torque_point(cfg: &SweepConfig, r: f64) -> anyhow::Result<SweepTable> {
    let solved = solve_modes(&cfg.fiber, cfg.transition.wavelength)?;
    let mut rows = Vec::new();
    for d in &cfg.drives {
        let drive = resolve_drive(cfg, &solved, d)?;
        for &mp in &cfg.sublevels {
            let spec = cfg.transition.with_m_prime(mp)?;
            let t = torque_weak_field(&spec, &drive, Position::radial(r))?;
            rows.push(SweepRow {
                mode: drive.mode.id,
                f: drive.f,
                p: drive.p,
                m: spec.m,
                m_prime: mp,
                r,
                abs_omega: t.omega.norm(),
                torque_z: t.torque_z,
                force_phi: t.force_phi,
            });
        }
    }
    Ok(SweepTable { rows })
}

fn rabi_point(cfg: &SweepConfig, r: f64) -> anyhow::Result<()> {
    let solved = solve_modes(&cfg.fiber, cfg.transition.wavelength)?;
    let mut text = String::from("mode,f,p,M,Mprime,r_nm,abs_omega_rad_s,re_omega_rad_s,im_omega_rad_s\n");
    for d in &cfg.drives {
        let drive = resolve_drive(cfg, &solved, d)?;
        for &mp in &cfg.sublevels {
            let spec = cfg.transition.with_m_prime(mp)?;
            let omega = rabi_frequency(&spec, &drive, Position::radial(r))?.omega;
            text.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                drive.mode.id,
                drive.f,
                drive.p,
                spec.m,
                mp,
                format_value(scale_decimal(r, 9)),
                format_value(omega.norm()),
                format_value(omega.re),
                format_value(omega.im),
            ));
        }
    }
    match &cfg.output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Modes(c) => modes(&c.load()?),
        Command::Rabi(c) => {
            let cfg = c.load()?;
            rabi_point(&cfg, c.radius(&cfg)?)
        }
        Command::Torque(c) => {
            let cfg = c.load()?;
            output(&torque_point(&cfg, c.radius(&cfg)?)?, &cfg)
        }
        Command::Sweep(c) => {
            let cfg = c.load()?;
            output(&run_sweep(&cfg)?, &cfg)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
