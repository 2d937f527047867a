//! Exact number I/O: `p/q`, integers and terminating decimals in, the same
//! out.

use monopole_core::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{CliError, CliResult};

/// Parses `3`, `-2/7`, `0.125` or `-1.5`. `offset` shifts reported positions.
pub fn parse_rational(field: &str, s: &str, offset: usize) -> CliResult<Rational> {
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    let at = offset + lead;
    if t.is_empty() {
        return Err(CliError::parse(field, at, "empty number"));
    }
    if let Some((p, q)) = t.split_once('/') {
        let num = parse_int(field, p, at)?;
        let den = parse_int(field, q, at + p.len() + 1)?;
        if den.is_zero() {
            return Err(CliError::parse(field, at + p.len() + 1, "zero denominator"));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = whole.trim_start_matches(['-', '+']);
        if !frac.chars().all(|c| c.is_ascii_digit()) || frac.is_empty() {
            return Err(CliError::parse(
                field,
                at + whole.len() + 1,
                format!("bad fraction in '{t}'"),
            ));
        }
        let int_part = if digits.is_empty() {
            BigInt::zero()
        } else {
            parse_int(field, digits, at + whole.len() - digits.len())?
        };
        if int_part.is_negative() {
            return Err(CliError::parse(field, at, format!("bad number '{t}'")));
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part: BigInt = frac.parse().expect("checked digits");
        let value = Rational::new(int_part * &scale + frac_part, scale);
        return Ok(if negative { -value } else { value });
    }
    Ok(Rational::from_integer(parse_int(field, t, at)?))
}

fn parse_int(field: &str, s: &str, at: usize) -> CliResult<BigInt> {
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    if body.is_empty() || !body.chars().all(|c| c.is_ascii_digit()) {
        return Err(CliError::parse(
            field,
            at,
            format!("'{s}' is not an integer"),
        ));
    }
    Ok(s.parse().expect("checked digits"))
}

/// Comma-separated list of rationals.
pub fn parse_rational_vec(field: &str, s: &str) -> CliResult<Vec<Rational>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in s.split(',') {
        out.push(parse_rational(field, part, offset)?);
        offset += part.len() + 1;
    }
    Ok(out)
}

/// Integer vector; a non-integral entry is an integrality failure, not a
/// parse error.
pub fn parse_charge_vec(field: &str, s: &str) -> CliResult<Vec<i64>> {
    let values = parse_rational_vec(field, s)?;
    values
        .iter()
        .map(|q| {
            if !q.is_integer() {
                return Err(CliError::Integrality(format!(
                    "charge entry {q} is not an integer"
                )));
            }
            q.to_integer()
                .to_i64()
                .ok_or_else(|| CliError::Input(format!("charge entry {q} is too large")))
        })
        .collect()
}

/// Integers as `3`, terminating fractions as decimals (`-0.5`), others as `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        return q.numer().to_string();
    }
    let mut den = q.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let (mut a2, mut a5) = (0u32, 0u32);
    while (&den % &two).is_zero() {
        den /= &two;
        a2 += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        a5 += 1;
    }
    if !den.is_one() {
        return format!("{}/{}", q.numer(), q.denom());
    }
    let k = a2.max(a5);
    let scaled = (q.abs() * Rational::from_integer(BigInt::from(10).pow(k))).to_integer();
    let digits = format!("{:0>width$}", scaled.to_string(), width = k as usize + 1);
    let (int_part, frac) = digits.split_at(digits.len() - k as usize);
    let sign = if q.is_negative() { "-" } else { "" };
    format!("{sign}{int_part}.{frac}")
}

pub fn format_vec(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(",")
}
