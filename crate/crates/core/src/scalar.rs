//! Exact rational scalars and conversions to and from `f64`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number used by the exact backend.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Nearest `f64` to `q`.
pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational value of a finite `f64`.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Square root of `q` if it is the square of a rational.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Parses `"p/q"`, an integer, or a decimal literal such as `"-0.75"` or
/// `"1.5e-3"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n = parse_integer(num.trim())?;
        let d = parse_integer(den.trim())?;
        if d.is_zero() {
            return Err(Error::ParseRational);
        }
        return Ok(Rational::new(n, d));
    }
    parse_decimal(s)
}

fn parse_integer(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix('+').unwrap_or(s);
    let body = digits.strip_prefix('-').unwrap_or(digits);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::ParseRational);
    }
    BigInt::parse_bytes(digits.as_bytes(), 10).ok_or(Error::ParseRational)
}

fn parse_decimal(s: &str) -> Result<Rational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], Some(&s[i + 1..])),
        None => (s, None),
    };
    let (negative, unsigned) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (whole, frac) = unsigned.split_once('.').unwrap_or((unsigned, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(Error::ParseRational);
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(Error::ParseRational);
    }
    let mut digits = alloc::string::String::with_capacity(whole.len() + frac.len());
    digits.push_str(whole);
    digits.push_str(frac);
    let mut numer = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or(Error::ParseRational)?;
    if negative {
        numer = -numer;
    }
    let mut scale: i64 = -(frac.len() as i64);
    if let Some(e) = exponent {
        let e: i64 = e.parse().map_err(|_| Error::ParseRational)?;
        if e.abs() > 10_000 {
            return Err(Error::ParseRational);
        }
        scale += e;
    }
    let ten = BigInt::from(10);
    let power = num_traits::pow(ten, scale.unsigned_abs() as usize);
    Ok(if scale >= 0 {
        Rational::from_integer(numer * power)
    } else {
        Rational::new(numer, power)
    })
}

/// Formats `q` as `"p"` or `"p/q"`.
pub fn format_rational(q: &Rational) -> alloc::string::String {
    use alloc::string::ToString;
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

/// True when `q` is an integer.
pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one() || q.numer().is_multiple_of(q.denom())
}
