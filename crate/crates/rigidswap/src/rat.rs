//! Exact rational scalars and the scalar abstraction shared by the floating
//! and exact computation paths.
//!
//! Configurations are stored as rationals so that every rank question can be
//! re-asked in exact arithmetic when a floating verdict is ambiguous.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Canonical text form: `p` for integers, `p/q` otherwise, always reduced.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p`, `p/q`, or a plain decimal such as `-1.25` or `3e2`, exactly.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().ok()?;
        let den: BigInt = d.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Rat::new(num, den));
    }
    rat_from_decimal(s)
}

/// Exact rational value of a decimal literal (optionally with exponent).
pub fn rat_from_decimal(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let neg = int_part.starts_with('-');
    let digits: String = int_part
        .trim_start_matches(['+', '-'])
        .chars()
        .chain(frac_part.chars())
        .collect();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let mut value = Rat::new(digits.parse::<BigInt>().ok()?, BigInt::one());
    let shift = exp - frac_part.len() as i64;
    let ten = rat_i(10);
    if shift > 0 {
        for _ in 0..shift {
            value *= ten.clone();
        }
    } else {
        for _ in 0..(-shift) {
            value /= ten.clone();
        }
    }
    if neg {
        value = -value;
    }
    Some(value)
}

/// The two scalar fields the solvers run over: `f64` and exact rationals.
pub trait Scalar:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + std::ops::Sub<Output = Self>
    + std::ops::Neg<Output = Self>
{
    fn from_rat(r: &Rat) -> Self;
}

impl Scalar for f64 {
    fn from_rat(r: &Rat) -> Self {
        rat_to_f64(r)
    }
}

impl Scalar for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

/// |r| as a rational.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_parsing_is_exact() {
        assert_eq!(rat_from_str("1.25").unwrap(), rat(5, 4));
        assert_eq!(rat_from_str("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(rat_from_str("3").unwrap(), rat_i(3));
        assert_eq!(rat_from_str("2/6").unwrap(), rat(1, 3));
        assert_eq!(rat_from_str("1e3").unwrap(), rat_i(1000));
        assert_eq!(rat_from_str("25e-2").unwrap(), rat(1, 4));
        assert!(rat_from_str("1/0").is_none());
        assert!(rat_from_str("abc").is_none());
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(rat_to_string(&rat(4, 2)), "2");
        assert_eq!(rat_to_string(&rat(-3, 9)), "-1/3");
    }
}
