//! Argument parsers shared by the subcommands.

use std::f64::consts::PI;

use koshliakov::roots::KoshParam;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("cannot parse `{0}` as p (expected a decimal, `zero` or `inf`)")]
    Param(String),
    #[error("cannot parse `{0}` as a real number")]
    Real(String),
    #[error("cannot parse `{0}` as a complex number (expected a+bi)")]
    Complex(String),
    #[error("cannot parse sweep `{0}` (expected name=start:stop:count)")]
    Sweep(String),
}

/// `zero`, `inf` or a decimal. Decimals past the library cutoff become `Infinity`.
pub fn parse_p(text: &str) -> Result<KoshParam, ParseError> {
    match text.trim().to_ascii_lowercase().as_str() {
        "zero" | "0" => Ok(KoshParam::Zero),
        "inf" | "infinity" => Ok(KoshParam::Infinity),
        other => {
            let v: f64 = other.parse().map_err(|_| ParseError::Param(text.to_string()))?;
            KoshParam::finite(v).map_err(|_| ParseError::Param(text.to_string()))
        }
    }
}

/// Real number; accepts `pi`, `k*pi` and `pi/k` besides plain decimals.
pub fn parse_real(text: &str) -> Result<f64, ParseError> {
    let t = text.trim().to_ascii_lowercase();
    let err = || ParseError::Real(text.to_string());
    if t == "pi" {
        return Ok(PI);
    }
    if let Some(k) = t.strip_suffix("*pi") {
        return k.parse::<f64>().map(|k| k * PI).map_err(|_| err());
    }
    if let Some(k) = t.strip_prefix("pi/") {
        return k.parse::<f64>().map(|k| PI / k).map_err(|_| err());
    }
    if t == "sqrt(pi)" {
        return Ok(PI.sqrt());
    }
    t.parse().map_err(|_| err())
}

/// `a`, `bi`, `a+bi` or `a-bi`, with optional exponents in either part.
pub fn parse_complex(text: &str) -> Result<Complex64, ParseError> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || ParseError::Complex(text.to_string());
    let Some(body) = t.strip_suffix('i') else {
        return parse_real(&t).map(|re| Complex64::new(re, 0.0)).map_err(|_| err());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => s.parse().map_err(|_| err())?,
    };
    let re: f64 = re.parse().map_err(|_| err())?;
    Ok(Complex64::new(re, im))
}

/// A parameter sweep `name=start:stop:count` over evenly spaced values.
#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub name: String,
    pub values: Vec<f64>,
}

pub fn parse_sweep(text: &str) -> Result<Sweep, ParseError> {
    let err = || ParseError::Sweep(text.to_string());
    let (name, range) = text.split_once('=').ok_or_else(err)?;
    let parts: Vec<&str> = range.split(':').collect();
    let [start, stop, count] = parts.as_slice() else {
        return Err(err());
    };
    let start = parse_real(start).map_err(|_| err())?;
    let stop = parse_real(stop).map_err(|_| err())?;
    let count: usize = count.parse().map_err(|_| err())?;
    if count == 0 {
        return Err(err());
    }
    let values = if count == 1 {
        vec![start]
    } else {
        (0..count)
            .map(|i| start + (stop - start) * i as f64 / (count - 1) as f64)
            .collect()
    };
    Ok(Sweep {
        name: name.trim().to_string(),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("2.5").unwrap(), Complex64::new(2.5, 0.0));
        assert_eq!(parse_complex("3+i").unwrap(), Complex64::new(3.0, 1.0));
        assert_eq!(parse_complex("4-2i").unwrap(), Complex64::new(4.0, -2.0));
        assert_eq!(parse_complex("-0.5+3i").unwrap(), Complex64::new(-0.5, 3.0));
        assert_eq!(parse_complex("1e-3-2e1i").unwrap(), Complex64::new(1e-3, -20.0));
        assert_eq!(parse_complex("-2i").unwrap(), Complex64::new(0.0, -2.0));
        assert!(parse_complex("3+xi").is_err());
    }

    #[test]
    fn p_forms() {
        assert_eq!(parse_p("zero").unwrap(), KoshParam::Zero);
        assert_eq!(parse_p("inf").unwrap(), KoshParam::Infinity);
        assert_eq!(parse_p("1.5").unwrap(), KoshParam::Finite(1.5));
        assert!(parse_p("-1").is_err());
        assert!(parse_p("one").is_err());
    }

    #[test]
    fn sweeps() {
        let s = parse_sweep("alpha=0.5:2:4").unwrap();
        assert_eq!(s.name, "alpha");
        assert_eq!(s.values, vec![0.5, 1.0, 1.5, 2.0]);
        assert!(parse_sweep("alpha=1:2").is_err());
    }
}
