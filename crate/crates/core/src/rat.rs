//! Exact rational scalars and their string form.
//!
//! Rationals serialize as `"p/q"` in lowest terms with `q > 0`, or `"p"`
//! when the denominator is 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Rat = BigRational;

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rat(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let denom = parse_int(q)?;
            if denom.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(parse_int(p)?, denom))
        }
    }
}

/// Positive lcm of the denominators of all given rationals (1 for none).
pub fn lcm_denoms<'a>(items: impl Iterator<Item = &'a Rat>) -> BigInt {
    let mut l = BigInt::one();
    for r in items {
        l = num_integer::lcm(l, r.denom().abs());
    }
    l
}

/// True when `r` is a nonnegative integer.
pub fn is_natural(r: &Rat) -> bool {
    r.is_integer() && !r.is_negative()
}
