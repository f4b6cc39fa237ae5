//! Fixed-notation float formatting with 12 significant digits.

pub const SIG_DIGITS: i32 = 12;
const MAX_DECIMALS: i32 = 60;

pub fn format_sig(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    let decimals = (SIG_DIGITS - 1 - exp).clamp(0, MAX_DECIMALS) as usize;
    let s = format!("{v:.decimals$}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0".to_string()
    } else {
        s
    }
}

/// `v` rounded to 12 significant digits, for JSON output.
pub fn round_sig(v: f64) -> f64 {
    if !v.is_finite() {
        return v;
    }
    format_sig(v).parse().expect("formatted float parses")
}
