//! Exact rational arithmetic helpers.
//!
//! All scores, loads, budgets and payments in this crate are
//! [`num::BigRational`] values, kept in canonical form (positive
//! denominator, fully reduced) by the `num` crate itself. The `Display`
//! implementation already renders `p/q` for proper fractions and a bare
//! integer when the denominator is one, which is the output format used
//! throughout.

use crate::Error;
use num::bigint::BigInt;
use num::{One, Zero};

pub use num::BigRational as Rat;

/// Rational from an integer.
pub fn rat(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Rational from an unsigned count.
pub fn rat_usize(value: usize) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Rational `numer/denom`. Panics on a zero denominator.
pub fn frac(numer: i64, denom: i64) -> Rat {
    assert!(denom != 0, "zero denominator");
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Ratio of two counts. Panics when `denom` is zero.
pub fn frac_usize(numer: usize, denom: usize) -> Rat {
    assert!(denom != 0, "zero denominator");
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Parses `p` or `p/q` into a canonical rational.
pub fn parse_rat(text: &str) -> Result<Rat, Error> {
    let bad = |msg: &str| Error::Invalid(format!("bad rational `{text}`: {msg}"));
    let mut parts = text.splitn(2, '/');
    let numer: BigInt = parts
        .next()
        .unwrap()
        .trim()
        .parse()
        .map_err(|_| bad("numerator is not an integer"))?;
    let denom: BigInt = match parts.next() {
        Some(d) => d
            .trim()
            .parse()
            .map_err(|_| bad("denominator is not an integer"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rat::new(numer, denom))
}

/// Smallest integer greater than or equal to `value`, as a count.
///
/// `value` must be non-negative.
pub fn ceil_to_usize(value: &Rat) -> usize {
    use num::ToPrimitive;
    let c = value.ceil();
    c.to_integer().to_usize().expect("non-negative ceil")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_rat("3/8").unwrap(), frac(3, 8));
        assert_eq!(parse_rat("19").unwrap(), rat(19));
        assert_eq!(parse_rat("-2/4").unwrap(), frac(-1, 2));
        assert_eq!(frac(83, 6).to_string(), "83/6");
        assert_eq!(frac(38, 2).to_string(), "19");
        assert_eq!(frac(-1, 2).to_string(), "-1/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn canonical_form() {
        let r = frac(6, -8);
        assert_eq!(r, frac(-3, 4));
        assert_eq!(r.to_string(), "-3/4");
    }

    #[test]
    fn ceil_counts() {
        assert_eq!(ceil_to_usize(&frac(7, 3)), 3);
        assert_eq!(ceil_to_usize(&rat(4)), 4);
        assert_eq!(ceil_to_usize(&zero()), 0);
    }
}
