//! Parsers for flag values: complex literals, lists, grids and target names.

use anyhow::{anyhow, bail, Context, Result};
use balloon_core::{Complex64, FunctionalId, Target};

/// A complex literal: `2`, `-0.5`, `i`, `-2.5i`, `0.3+0.2i`, `1e-3-4e-2i`.
pub fn complex_literal(s: &str) -> Result<Complex64> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        bail!("empty complex value");
    }
    let Some(body) = s.strip_suffix('i') else {
        let re = s.parse::<f64>().with_context(|| format!("invalid number `{s}`"))?;
        return Ok(Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split =
        (1..bytes.len()).rev().find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let re = re.parse::<f64>().with_context(|| format!("invalid real part in `{s}`"))?;
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().with_context(|| format!("invalid imaginary part in `{s}`"))?,
    };
    Ok(Complex64::new(re, im))
}

/// A single complex flag value: either an `re,im` pair or a complex literal.
pub fn complex_value(s: &str) -> Result<Complex64> {
    match s.split_once(',') {
        Some((re, im)) => {
            let re = re.trim().parse::<f64>().with_context(|| format!("invalid real part in `{s}`"))?;
            let im = im.trim().parse::<f64>().with_context(|| format!("invalid imaginary part in `{s}`"))?;
            Ok(Complex64::new(re, im))
        }
        None => complex_literal(s),
    }
}

/// Comma-separated complex literals, e.g. `i,0,0`.
pub fn complex_list(s: &str) -> Result<Vec<Complex64>> {
    s.split(',').map(complex_literal).collect()
}

/// Comma-separated reals with a fixed count.
pub fn real_list<const N: usize>(s: &str) -> Result<[f64; N]> {
    let values = s
        .split(',')
        .map(|v| v.trim().parse::<f64>().with_context(|| format!("invalid number `{v}`")))
        .collect::<Result<Vec<_>>>()?;
    values.try_into().map_err(|v: Vec<f64>| anyhow!("expected {N} comma-separated values, got {}", v.len()))
}

/// `RxA`: radial by angular points of the polar grids.
pub fn grid(s: &str) -> Result<(usize, usize)> {
    let (r, a) = s.split_once(['x', 'X']).ok_or_else(|| anyhow!("grid must look like `24x64`, got `{s}`"))?;
    let r = r.trim().parse().with_context(|| format!("invalid radial count in `{s}`"))?;
    let a = a.trim().parse().with_context(|| format!("invalid angular count in `{s}`"))?;
    Ok((r, a))
}

/// Splits on commas that are not inside parentheses.
pub fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts.into_iter().filter(|p| !p.is_empty()).collect()
}

pub fn functional(s: &str) -> Result<FunctionalId> {
    FunctionalId::parse(&s.to_ascii_lowercase()).ok_or_else(|| anyhow!("unknown functional `{s}`"))
}

/// A functional slug, `a2`…`a5`, or `gamma1`…`gamma3`.
pub fn target(s: &str) -> Result<Target> {
    let lower = s.trim().to_ascii_lowercase();
    if let Some(n) = lower.strip_prefix("gamma").and_then(|n| n.parse::<usize>().ok()) {
        if (1..=3).contains(&n) {
            return Ok(Target::LogCoefficient(n));
        }
        bail!("log coefficient index must be 1..3, got {n}");
    }
    if let Some(n) = lower.strip_prefix('a').and_then(|n| n.parse::<usize>().ok()) {
        if (2..=5).contains(&n) {
            return Ok(Target::Coefficient(n));
        }
        bail!("coefficient index must be 2..5, got {n}");
    }
    Ok(Target::Functional(functional(&lower)?))
}
