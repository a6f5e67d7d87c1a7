//! Exact rational scalars.
//!
//! Every coefficient in this crate is a [`Rat`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. There is no
//! floating point anywhere in the computational core.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Parse `p` or `p/q` (optionally signed). The denominator must be nonzero.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let p: BigInt = num.trim().parse().map_err(|_| bad())?;
    let q: BigInt = match den {
        Some(q) => q.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(p, q))
}

/// Canonical text form: integers as `p`, everything else as `p/q` with
/// `q > 0` and `gcd(p, q) = 1`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// The integer value of `r`, if it is one.
pub fn to_integer(r: &Rat) -> Option<BigInt> {
    is_integer(r).then(|| r.numer().clone())
}

/// Nearest integers `m` with `|r - m| <= bound` are `ceil(r-bound)..=floor(r+bound)`;
/// used for Gershgorin-style integer eigenvalue candidates.
pub fn integer_range(lo: &Rat, hi: &Rat) -> std::ops::RangeInclusive<i64> {
    use num_traits::ToPrimitive;
    let lo = lo.ceil().numer().to_i64().unwrap_or(i64::MIN);
    let hi = hi.floor().numer().to_i64().unwrap_or(i64::MAX);
    lo..=hi
}

/// |r|
pub fn abs(r: &Rat) -> Rat {
    r.abs()
}
