use std::io::Write;
use std::path::Path;

use super::SweepTable;
use crate::error::Result;
use crate::units::scale_decimal;

pub const CSV_HEADER: &str = "mode,f,p,M,Mprime,r_nm,abs_omega_rad_s,Tz_zN_nm,Fphi_zN";

/// Shortest round-trip decimal; scientific notation only for extreme magnitudes.
pub fn format_value(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    let mag = v.abs();
    if v == 0.0 || (1e-5..1e16).contains(&mag) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

pub fn write_csv<W: Write>(table: &SweepTable, mut out: W) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in &table.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            row.mode,
            row.f,
            row.p,
            row.m,
            row.m_prime,
            format_value(scale_decimal(row.r, 9)),
            format_value(row.abs_omega),
            format_value(scale_decimal(row.torque_z, 30)),
            format_value(scale_decimal(row.force_phi, 21)),
        )?;
    }
    Ok(())
}

/// Writes the table to `path` (UTF-8, `\n` line endings).
pub fn emit_csv(table: &SweepTable, path: &Path) -> Result<()> {
    let mut buf = Vec::new();
    write_csv(table, &mut buf)?;
    std::fs::write(path, buf)?;
    Ok(())
}
