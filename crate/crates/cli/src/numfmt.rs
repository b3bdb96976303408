// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

//! Significant-figure formatting for tabular output.

/// Formats `v` with `digits` significant figures, switching to exponent
/// notation outside `[1e-5, 10^digits)` and dropping trailing zeros, like
/// C's `%g`.
pub fn sig(v: f64, digits: usize) -> String {
    assert!(digits >= 1, "at least one significant digit");
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return "0".to_owned();
    }
    // Let the formatter do the rounding, including carries like 9.999995 -> 10.
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{v:.decimals$}")).to_owned()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::sig;

    #[test]
    fn fixed_range() {
        assert_eq!(sig(0.969_195_4, 6), "0.969195");
        assert_eq!(sig(13.202_413, 6), "13.2024");
        assert_eq!(sig(0.5, 6), "0.5");
        assert_eq!(sig(-2.0, 6), "-2");
        assert_eq!(sig(123_456.4, 6), "123456");
    }

    #[test]
    fn exponent_range() {
        assert_eq!(sig(3.108_624_468_950_438e-15, 6), "3.10862e-15");
        assert_eq!(sig(1_234_567.0, 6), "1.23457e6");
        assert_eq!(sig(0.0, 6), "0");
    }

    #[test]
    fn rounding_carries_into_exponent() {
        assert_eq!(sig(9.999_999_9, 6), "10");
        assert_eq!(sig(999_999.7, 6), "1e6");
    }
}
