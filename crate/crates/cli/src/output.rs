//! Float formatting and the JSON/CSV/text emitters.

use std::io::Write;

use anyhow::Result;
use balloon_core::Complex64;
use serde::Serialize;
use serde_json::{Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Machine representation: 17 significant digits, scientific notation.
pub fn machine(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

/// Human representation: 7 significant digits.
pub fn text(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-4..7).contains(&magnitude) {
        return format!("{x:.6e}");
    }
    let decimals = (6 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn text_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        return text(z.re);
    }
    if z.re == 0.0 {
        return format!("{}i", text(z.im));
    }
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{}{}{}i", text(z.re), sign, text(z.im.abs()))
}

/// Rewrites every non-integer number to the machine representation.
fn machine_floats(value: Value) -> Value {
    match value {
        Value::Number(n) if !(n.is_u64() || n.is_i64()) => match n.as_f64() {
            Some(x) => machine(x).parse::<Number>().map_or(Value::Number(n), Value::Number),
            None => Value::Number(n),
        },
        Value::Array(items) => Value::Array(items.into_iter().map(machine_floats).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, machine_floats(v))).collect()),
        other => other,
    }
}

pub fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let value = machine_floats(serde_json::to_value(value)?);
    serde_json::to_writer_pretty(&mut *out, &value)?;
    writeln!(out)?;
    Ok(())
}

pub fn write_csv(out: &mut dyn Write, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

/// Left-aligned text table with two-space gutters.
pub fn write_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_is_round_trip_exact() {
        for x in [0.1, 545.0 / 648.0, 1e-300, -2.5, 0.0] {
            assert_eq!(machine(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(machine(0.25), "2.5000000000000000e-1");
    }

    #[test]
    fn text_has_seven_significant_digits() {
        assert_eq!(text(545.0 / 648.0), "0.8410494");
        assert_eq!(text(19.0 / 36.0), "0.5277778");
        assert_eq!(text(1.0), "1");
        assert_eq!(text(0.75), "0.75");
        assert_eq!(text(1090.6707), "1090.671");
        assert_eq!(text(-3.0), "-3");
        assert_eq!(text(1.5e-9), "1.500000e-9");
    }

    #[test]
    fn complex_text() {
        assert_eq!(text_complex(Complex64::new(0.0, 1.0)), "1i");
        assert_eq!(text_complex(Complex64::new(-0.75, 0.0)), "-0.75");
        assert_eq!(text_complex(Complex64::new(0.5, -0.25)), "0.5-0.25i");
    }

    #[test]
    fn json_floats_are_machine_formatted() {
        let mut buf = Vec::new();
        write_json(&mut buf, &serde_json::json!({"x": 0.5, "n": 3u64})).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(s.contains("5.0000000000000000e-1"));
        assert!(s.contains("\"n\": 3"));
    }

    #[test]
    fn tables_align() {
        let mut buf = Vec::new();
        write_table(&mut buf, &["k", "value"], &[vec!["1".into(), "0.5".into()], vec!["10".into(), "2".into()]])
            .unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "k   value\n1   0.5\n10  2\n");
    }
}
