//! Exact rational scalars.
//!
//! All arithmetic in this crate runs over the rationals; nilpotency and
//! ideal-membership tests are meaningless in floating point. Scalars are
//! arbitrary-precision `BigRational`s kept in lowest terms with a positive
//! denominator. In JSON they appear as `"p/q"`, or `"p"` when the
//! denominator is 1.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rat = BigRational;

/// `n/d` as an exact rational. Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rzero() -> Rat {
    Rat::zero()
}

pub fn rone() -> Rat {
    Rat::one()
}

/// Parses `"p/q"` or `"p"`; the inverse of [`format_rat`].
pub fn parse_rat(text: &str) -> Result<Rat, String> {
    let t = text.trim();
    match t.split_once('/') {
        None => t
            .parse::<BigInt>()
            .map(Rat::from_integer)
            .map_err(|e| format!("invalid integer {t:?}: {e}")),
        Some((p, q)) => {
            let num = p
                .trim()
                .parse::<BigInt>()
                .map_err(|e| format!("invalid numerator {p:?}: {e}"))?;
            let den = q
                .trim()
                .parse::<BigInt>()
                .map_err(|e| format!("invalid denominator {q:?}: {e}"))?;
            if den.is_zero() {
                return Err(format!("zero denominator in {t:?}"));
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Renders as `"p/q"`, or `"p"` for integers.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact square root when `r` is a perfect square of a rational.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let sq_num = exact_int_sqrt(r.numer())?;
    let sq_den = exact_int_sqrt(r.denom())?;
    Some(Rat::new(sq_num, sq_den))
}

fn exact_int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let root = n.sqrt();
    if &root * &root == *n {
        Some(root)
    } else {
        None
    }
}
