//! Text form of exact rationals: `"p"` or `"p/q"` with `q > 0` and the
//! fraction in lowest terms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_integer(s: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if allow_sign => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses `"p"` or `"p/q"`. Rejects signs on `q`, `q = 0`, and fractions not
/// in lowest terms, so that every accepted string names one rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Format(format!("{s:?} is not a rational of the form p or p/q"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let numer = parse_integer(p, true).ok_or_else(bad)?;
    let denom = match q {
        Some(q) => parse_integer(q, false).ok_or_else(bad)?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    if !numer.abs().gcd(&denom).is_one() {
        return Err(Error::Format(format!("{s:?} is not in lowest terms")));
    }
    Ok(BigRational::new_raw(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parses_and_formats() {
        assert_eq!(parse_rational("5/2").unwrap(), q(5, 2));
        assert_eq!(parse_rational("-1").unwrap(), q(-1, 1));
        assert_eq!(parse_rational("-7/3").unwrap(), q(-7, 3));
        assert_eq!(parse_rational("0").unwrap(), q(0, 1));
        assert_eq!(format_rational(&q(5, 2)), "5/2");
        assert_eq!(format_rational(&q(-4, 2)), "-2");
        assert_eq!(format_rational(&q(0, 7)), "0");
    }

    #[test]
    fn rejects_malformed() {
        for s in [
            "", "2/4", "1/0", "1/-2", "+3", "1.5", "x", "1/", "/2", "0/5",
        ] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn large_values_roundtrip() {
        let s = "-123456789012345678901234567891/2";
        assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
    }
}
