//! Locale-independent decimal formatting for reports, CSV and SVG.

/// `x` with exactly `digits` significant digits, positional when the
/// exponent is moderate and scientific otherwise. Negative zero prints as
/// zero.
pub fn significant(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if !x.is_finite() {
        return x.to_string();
    }
    let x = if x == 0.0 { 0.0 } else { x };
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-7..digits as i32).contains(&exp) {
        return sci;
    }
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa),
    };
    let digits_only: String = mantissa.chars().filter(|c| *c != '.').collect();
    let body = if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits_only)
    } else {
        let split = exp as usize + 1;
        let (int, frac) = digits_only.split_at(split);
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    };
    format!("{sign}{body}")
}

/// `%g`-style: `digits` significant digits with trailing zeros removed.
pub fn general(x: f64, digits: usize) -> String {
    let s = significant(x, digits);
    let (num, exp) = match s.split_once('e') {
        Some((n, e)) => (n.to_string(), Some(e.to_string())),
        None => (s, None),
    };
    let num = if num.contains('.') {
        num.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        num
    };
    match exp {
        Some(e) => format!("{num}e{e}"),
        None => num,
    }
}

/// Report decimals: 16 significant digits.
pub fn report(x: f64) -> String {
    significant(x, 16)
}

/// SVG coordinates: three decimals, negative zero normalized.
pub fn svg(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}
