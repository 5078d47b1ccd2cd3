//! Exact rational arithmetic helpers.
//!
//! All lengths, distances and stretching factors in this crate are exact
//! rationals, so that equalities like `lambda == 1` in fixed-point
//! certificates are decidable rather than approximate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::Error;

/// Crate-wide exact rational type.
pub type Rational = BigRational;

/// Rational from an integer pair. Panics on zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical string form: lowest terms, `"p"` for integers, `"p/q"` otherwise,
/// sign carried by the numerator.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"`, integer, or decimal strings exactly.
///
/// `"0.25"` becomes 1/4, `"1/3"` stays 1/3; no floating point is involved.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::BadRational(s.to_string()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::BadRational(s.to_string()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::BadRational(s.to_string()))?;
        if d.is_zero() {
            return Err(Error::BadRational(s.to_string()));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.trim_start().starts_with('-');
        let i: BigInt = if int_part == "-" || int_part.is_empty() {
            BigInt::zero()
        } else {
            int_part
                .parse()
                .map_err(|_| Error::BadRational(s.to_string()))?
        };
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::BadRational(s.to_string()));
        }
        let f: BigInt = frac_part
            .parse()
            .map_err(|_| Error::BadRational(s.to_string()))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac = Rational::new(f, scale);
        let whole = Rational::from_integer(i.abs());
        let abs = whole + frac;
        return Ok(if negative { -abs } else { abs });
    }
    let n: BigInt = s.parse().map_err(|_| Error::BadRational(s.to_string()))?;
    Ok(Rational::from_integer(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("2").unwrap(), rat_int(2));
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("-0.5").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.2e3").is_err());
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(format_rational(&rat(2, 4)), "1/2");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(format_rational(&rat(-1, 3)), "-1/3");
        assert_eq!(format_rational(&rat(0, 5)), "0");
    }

    #[test]
    fn roundtrip() {
        for s in ["7/12", "0", "-5", "1000000000000000000000/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }
}
