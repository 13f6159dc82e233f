use num::{BigInt, BigRational, Integer, One, Zero};

use crate::error::{Error, Result};

/// Exact rational number. Always stored reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `n` or `n/d`. The `line` is only used for the error report.
pub fn parse_rational(s: &str, line: usize) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::parse(line, format!("not a rational number: `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::parse(line, format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(num, den))
}

/// Least common multiple of the denominators in `values` (1 for an empty slice).
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales `values` by the lcm of their denominators and returns the integers
/// together with the scale.
pub fn clear_denominators(values: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let scale = denominator_lcm(values);
    let ints = values
        .iter()
        .map(|v| v.numer() * (&scale / v.denom()))
        .collect();
    (ints, scale)
}

pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}
