//! Exact rational helpers shared by every module.
//!
//! All counts in this crate are [`Rational`] values. Nothing here ever
//! touches floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `base^exp` for a possibly negative exponent.
pub fn pow_signed(base: u64, exp: i64) -> Rational {
    let b = Rational::from_integer(BigInt::from(base));
    if exp >= 0 {
        num_traits::pow(b, exp as usize)
    } else {
        num_traits::pow(b, (-exp) as usize).recip()
    }
}

/// Canonical text form: `"num/den"`, or just `"num"` for integers.
pub fn to_text(q: &Rational) -> String {
    q.to_string()
}

pub fn parse(text: &str) -> Option<Rational> {
    let q: Rational = text.trim().parse().ok()?;
    // `BigRational::from_str` reduces, so reject inputs that were not canonical
    (to_text(&q) == text.trim()).then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_is_canonical() {
        assert_eq!(to_text(&frac(18, 4)), "9/2");
        assert_eq!(to_text(&frac(-3, 6)), "-1/2");
        assert_eq!(to_text(&int(0)), "0");
        assert_eq!(to_text(&frac(6, 3)), "2");
        assert_eq!(parse("9/2"), Some(frac(9, 2)));
        assert_eq!(parse("18/4"), None);
        assert_eq!(parse("0.5"), None);
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(pow_signed(2, -1), frac(1, 2));
        assert_eq!(pow_signed(3, 0), int(1));
    }
}
