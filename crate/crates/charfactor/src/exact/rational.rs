//! Arbitrary-precision rational scalars and the `p/q` text form used on every
//! external surface (CLI flags, JSON payloads).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::CharError;

/// Exact rational scalar. `BigRational` keeps the canonical form we rely on:
/// gcd(numerator, denominator) = 1 and denominator > 0.
pub type Rat = BigRational;

/// Shorthand for small integer rationals.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on `d = 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse the text form `p/q` (or a bare integer `p`).
pub fn parse_rat(s: &str) -> Result<Rat, CharError> {
    let s = s.trim();
    let mk_err = || CharError::BadRational(s.to_string());
    match s.split_once('/') {
        None => BigInt::from_str(s).map(Rat::from_integer).map_err(|_| mk_err()),
        Some((p, q)) => {
            let num = BigInt::from_str(p.trim()).map_err(|_| mk_err())?;
            let den = BigInt::from_str(q.trim()).map_err(|_| mk_err())?;
            if den.is_zero() {
                return Err(mk_err());
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Render in the `p/q` text form; integers print without the `/q` part.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `base^exponent` with negative exponents via the reciprocal.
///
/// The base must be nonzero; `x̄ = 1/x` is only meaningful away from zero.
pub fn laurent_eval(base: &Rat, exponent: i64) -> Result<Rat, CharError> {
    if base.is_zero() {
        return Err(CharError::ZeroBase);
    }
    let b = if exponent >= 0 { base.clone() } else { base.recip() };
    let mut e = exponent.unsigned_abs();
    let mut acc = Rat::one();
    let mut sq = b;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_eval_examples() {
        assert_eq!(laurent_eval(&rat(2), -2).unwrap(), ratio(1, 4));
        assert_eq!(laurent_eval(&ratio(7, 3), 0).unwrap(), rat(1));
        assert_eq!(laurent_eval(&rat(-3), 3).unwrap(), rat(-27));
        assert!(laurent_eval(&rat(0), 2).is_err());
    }

    #[test]
    fn parse_and_format_roundtrip() {
        for s in ["3", "-4", "5/7", "-12/35", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(parse_rat("4/6").unwrap(), ratio(2, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
