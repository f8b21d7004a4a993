//! Parsing of the --coeffs flag: comma-separated real or complex literals
//! like `1`, `-2.5`, `1+2i`, `-1.5e-2-0.25i`, `3i`, `i`.

use num_complex::Complex64;

pub fn parse_coeffs(text: &str) -> Result<Vec<Complex64>, String> {
    let items: Vec<&str> = text.split(',').collect();
    if items.iter().all(|s| s.trim().is_empty()) {
        return Err("empty coefficient list".to_string());
    }
    items.iter().map(|s| parse_complex(s)).collect()
}

pub fn parse_complex(token: &str) -> Result<Complex64, String> {
    let s = token.trim();
    if s.is_empty() {
        return Err("empty coefficient".to_string());
    }
    if let Ok(re) = s.parse::<f64>() {
        return Ok(Complex64::new(re, 0.0));
    }
    let body = s
        .strip_suffix(['i', 'I'])
        .ok_or_else(|| format!("cannot parse coefficient {s:?}"))?;
    // Split at the sign that separates real and imaginary parts: the last
    // '+'/'-' that is neither leading nor an exponent sign.
    let bytes = body.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        let b = bytes[idx];
        if (b == b'+' || b == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
            split = Some(idx);
            break;
        }
    }
    match split {
        Some(idx) => {
            let re: f64 = body[..idx]
                .trim()
                .parse()
                .map_err(|_| format!("bad real part in {s:?}"))?;
            let im = parse_signed_unit(&body[idx..])?;
            Ok(Complex64::new(re, im))
        }
        None => Ok(Complex64::new(0.0, parse_signed_unit(body)?)),
    }
}

fn parse_signed_unit(text: &str) -> Result<f64, String> {
    match text.trim() {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        other => other
            .parse()
            .map_err(|_| format!("bad imaginary part {other:?}")),
    }
}

pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn plain_reals() {
        assert_eq!(parse_coeffs("1,0.5,-3").unwrap(), vec![c(1.0, 0.0), c(0.5, 0.0), c(-3.0, 0.0)]);
        assert_eq!(parse_complex(" 2.5e-3 ").unwrap(), c(2.5e-3, 0.0));
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("1+2i").unwrap(), c(1.0, 2.0));
        assert_eq!(parse_complex("1-2i").unwrap(), c(1.0, -2.0));
        assert_eq!(parse_complex("-1.5e-2+0.25i").unwrap(), c(-0.015, 0.25));
        assert_eq!(parse_complex("3i").unwrap(), c(0.0, 3.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("1+i").unwrap(), c(1.0, 1.0));
        assert_eq!(parse_complex("2e-1i").unwrap(), c(0.0, 0.2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_complex("").is_err());
        assert!(parse_complex("1+2j").is_err());
        assert!(parse_complex("one").is_err());
        assert!(parse_coeffs("").is_err());
        assert!(parse_coeffs("1,,2").is_err());
    }

    #[test]
    fn formatting_round_trip() {
        for z in [c(1.5, 0.0), c(0.0, -2.0), c(1.0, 1.0), c(-0.5, -0.25)] {
            assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
        }
    }
}
