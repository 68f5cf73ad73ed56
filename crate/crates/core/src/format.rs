//! Decimal rendering shared by the CLI and the raster writers.

/// Significant digits used for CSV coordinates.
pub const CSV_DIGITS: usize = 6;
/// Significant digits used for decimals in analysis reports.
pub const REPORT_DIGITS: usize = 12;

/// `x` with `digits` significant digits, in the style of C's `%g`: fixed
/// notation for moderate exponents, scientific otherwise, trailing zeros
/// removed.
pub fn significant(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    // Round first so that the exponent reflects any carry (9.99.. -> 10).
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        format!("{}e{}{:02}", trim_zeros(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
