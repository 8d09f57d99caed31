//! Locale-free number formatting shared by every CSV writer.
//!
//! Measured values use ten digits after the point; error columns use
//! scientific notation with ten significant digits so tiny residuals stay
//! visible.

pub fn value(v: f64) -> String {
    format!("{:.10}", normalize(v))
}

pub fn error(v: f64) -> String {
    format!("{:.9e}", normalize(v))
}

pub fn opt_value(v: Option<f64>) -> String {
    v.map(value).unwrap_or_default()
}

pub fn opt_error(v: Option<f64>) -> String {
    v.map(error).unwrap_or_default()
}

/// Folds `-0.0` into `0.0` so signs never flicker in golden output.
fn normalize(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v
    }
}
