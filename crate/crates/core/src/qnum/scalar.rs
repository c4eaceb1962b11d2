//! Exact rational scalars and their text form.
//!
//! Every probability, parameter and deformation base in the crate is a
//! [`Rational`]. The text form is `num/den` (or a bare integer), which is what
//! `Display` on [`BigRational`] produces; [`parse_rational`] additionally
//! accepts decimal and scientific notation and converts it exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{QError, Result};

/// Arbitrary-precision rational in canonical (reduced, positive denominator) form.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` as an exact rational. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `x^e` for any integer exponent. Panics when `x = 0` and `e < 0`.
pub fn powi(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        Pow::pow(x, e as u64)
    } else {
        assert!(!x.is_zero(), "zero raised to a negative power");
        Pow::pow(x.recip(), e.unsigned_abs())
    }
}

/// `n choose 2` as a signed exponent.
pub fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Parse `a/b`, an integer, a decimal (`0.25`) or scientific notation (`1e-9`)
/// into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || QError::Parse(format!("`{text}` is not a rational number"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().map_err(|_| bad())?;
        let den: BigInt = d.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(QError::Parse(format!("`{text}` has a zero denominator")));
        }
        return Ok(Rational::new(num, den));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let joined = format!("{whole}{frac}");
    let num: BigInt = if joined.is_empty() { BigInt::zero() } else { joined.parse().map_err(|_| bad())? };
    let ten = int(10);
    let mut value = Rational::from_integer(num) * powi(&ten, exponent - frac.len() as i64);
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Lossless text form: `num/den`, or the bare integer when `den = 1`.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// Smallest `b >= 1` with `2^-b <= e`, for positive `e`.
pub(crate) fn dyadic_bits(e: &Rational) -> u64 {
    (e.denom().bits() + 2).saturating_sub(e.numer().bits()).max(1)
}

/// `x` rounded down to a multiple of `2^-bits`.
pub(crate) fn floor_dyadic(x: &Rational, bits: u64) -> Rational {
    let scale = Rational::from_integer(BigInt::one() << bits);
    (x * &scale).floor() / scale
}

/// `x` rounded up to a multiple of `2^-bits`.
pub(crate) fn ceil_dyadic(x: &Rational, bits: u64) -> Rational {
    let scale = Rational::from_integer(BigInt::one() << bits);
    (x * &scale).ceil() / scale
}

/// Nearest `f64`, for human-facing summaries only.
pub fn approx(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // Both parts overflow f64; shift them down together.
        let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000);
        let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}
