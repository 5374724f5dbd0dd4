//! Canonical text rendering, the JSON record and the table printer.

use hns4_core::{HNum, System};
use serde::Serialize;

/// Result of an evaluation as emitted on the wire: the system name and the
/// four coefficients at full precision. The plain-text rendering is
/// computed from the same coefficients but not serialized.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub system: String,
    pub coeffs: [f64; 4],
    #[serde(skip)]
    pub rendering: String,
}

impl OutputRecord {
    pub fn new(value: &HNum) -> OutputRecord {
        OutputRecord {
            system: value.system().label(),
            coeffs: value.coeffs(),
            rendering: render(value),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Rounds to `digits` significant decimal digits.
fn round_sig(value: f64, digits: usize) -> f64 {
    if value == 0.0 {
        return 0.0;
    }
    format!("{value:.*e}", digits - 1)
        .parse()
        .expect("float round-trips")
}

/// Plain decimal for a positive magnitude: integers without a trailing
/// `.0`, everything else in shortest form (scientific for extreme sizes).
fn format_magnitude(value: f64) -> String {
    if value == value.trunc() && value.abs() < 1e15 {
        format!("{}", value as i64)
    } else {
        format!("{value:?}")
    }
}

/// Canonical text form: terms in basis order, zero terms omitted, unit
/// coefficients as bare basis symbols, six significant digits. The zero
/// value renders as `0`.
pub fn render(value: &HNum) -> String {
    render_digits(value, 6)
}

pub fn render_digits(value: &HNum, digits: usize) -> String {
    let mut out = String::new();
    for (i, coeff) in value.coeffs().iter().enumerate() {
        let rounded = round_sig(*coeff, digits);
        if rounded == 0.0 {
            continue;
        }
        let magnitude = format_magnitude(rounded.abs());
        let body = if i == 0 {
            magnitude
        } else if rounded.abs() == 1.0 {
            format!("e{}", i + 1)
        } else {
            format!("{}*e{}", magnitude, i + 1)
        };
        if out.is_empty() {
            if rounded < 0.0 {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if rounded < 0.0 { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The 5x5 Cayley-table grid: header row and column e1..e4, the system
/// label in the corner, cells like `e3`, `-e4` or `0`.
pub fn table_text(system: &System) -> String {
    let label = system.label();
    let width = label.chars().count().max(2);
    let mut lines = Vec::with_capacity(5);

    let mut header = format!("{label:>width$}");
    for j in 1..=4 {
        header.push_str(&format!("  {:>3}", format!("e{j}")));
    }
    lines.push(header);

    for i in 1..=4 {
        let mut line = format!("{:>width$}", format!("e{i}"));
        for j in 1..=4 {
            line.push_str(&format!("  {:>3}", system.table().entry(i, j).to_string()));
        }
        lines.push(line);
    }
    lines.join("\n")
}
