//! Exact decimal rescaling of floating-point values.
//!
//! Multiplying by `1e-9` is not exact in binary, so `280.0 * 1e-9` and the
//! literal `2.8e-7` differ in the last bit. Shifting the decimal exponent of
//! the shortest round-trip representation and re-parsing gives the value a
//! human would write, which keeps unit conversions and CSV output
//! reproducible.

/// `value * 10^exp10`, rounded once from the exact decimal product.
pub fn scale_decimal(value: f64, exp10: i32) -> f64 {
    if value == 0.0 || !value.is_finite() {
        return value;
    }
    let text = format!("{value:e}");
    let (mantissa, exp) = text.split_once('e').expect("`{:e}` always emits an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    format!("{mantissa}e{}", exp + exp10)
        .parse()
        .expect("valid float literal")
}

/// Parses a decimal literal and scales it by `10^exp10` with a single rounding.
pub fn parse_scaled(literal: &str, exp10: i32) -> Option<f64> {
    let literal = literal.trim();
    // Reject things f64::from_str accepts but a config should not.
    if literal.is_empty() || literal.chars().any(|c| c.is_ascii_alphabetic() && c != 'e' && c != 'E') {
        return None;
    }
    let (mantissa, exp) = match literal.find(['e', 'E']) {
        Some(pos) => (&literal[..pos], literal[pos + 1..].parse::<i32>().ok()?),
        None => (literal, 0),
    };
    mantissa.parse::<f64>().ok()?;
    format!("{mantissa}e{}", exp + exp10).parse().ok()
}
