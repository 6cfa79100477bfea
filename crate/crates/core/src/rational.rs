//! Exact rationals and their text form.
//!
//! Every coefficient in the engine is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. The text form
//! is `p/q` or a bare integer; decimal and floating-point literals are
//! rejected so that case splits on the shift parameter stay exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn half() -> Rational {
    q(1, 2)
}

/// Parses `p/q`, `-p/q`, or an integer literal.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let parse_int = |t: &str| -> Result<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("not an exact rational: {text:?}")));
        }
        t.parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("{text:?}: {e}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(parse_int(n)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Always `p/q`, including `n/1` for integers. Used by every serialized schema.
pub fn to_fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Compact form for human-facing output: `3`, `-1/2`.
pub fn to_compact(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_natural(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

/// Smallest integer not below `|r|`.
pub fn ceil_abs(r: &Rational) -> u32 {
    let a = r.abs();
    let (quot, rem) = a.numer().div_rem(a.denom());
    let c = if rem.is_zero() { quot } else { quot + BigInt::one() };
    u32::try_from(c).unwrap_or(u32::MAX)
}

pub fn to_u32(r: &Rational) -> Option<u32> {
    if is_natural(r) {
        u32::try_from(r.to_integer()).ok()
    } else {
        None
    }
}

pub mod serde_fraction {
    use super::{parse_rational, to_fraction, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_fraction(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("1/2").unwrap(), q(1, 2));
        assert_eq!(parse_rational("-3/6").unwrap(), q(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), qi(7));
        assert_eq!(parse_rational(" -2 ").unwrap(), qi(-2));
    }

    #[test]
    fn rejects_floats_and_garbage() {
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn fraction_form_is_stable() {
        assert_eq!(to_fraction(&qi(3)), "3/1");
        assert_eq!(to_fraction(&q(-2, 4)), "-1/2");
        assert_eq!(to_compact(&qi(3)), "3");
    }

    #[test]
    fn ceil_abs_rounds_up() {
        assert_eq!(ceil_abs(&q(7, 2)), 4);
        assert_eq!(ceil_abs(&q(-1, 3)), 1);
        assert_eq!(ceil_abs(&qi(2)), 2);
        assert_eq!(ceil_abs(&qi(0)), 0);
    }
}
