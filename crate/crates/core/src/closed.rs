//! Closed formulas for the unstable cases, used to cross-check the recursion.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::{binomial, factorial, int, pow_signed, Rational};

/// `H^r_{0,1}(d) = d^{m-2} / m!` with `m = d / r`, and zero when `r` does
/// not divide `d`.
pub fn jpt_h01(r: u64, d: u64) -> Rational {
    assert!(r >= 1 && d >= 1, "jpt_h01 needs r, d >= 1");
    if d % r != 0 {
        return Rational::zero();
    }
    let m = d / r;
    pow_signed(d, m as i64 - 2) / Rational::from_integer(factorial(m))
}

/// Two-point genus zero number `H^r_{0,2}(mu1, mu2)`.
///
/// The prefactor is `r` raised to the sum of the fractional parts of
/// `mu1/r` and `mu2/r`, which is `0` or `1` once `r | mu1 + mu2`.
pub fn jpt_h02(r: u64, mu1: u64, mu2: u64) -> Rational {
    assert!(r >= 1 && mu1 >= 1 && mu2 >= 1, "jpt_h02 needs positive arguments");
    if (mu1 + mu2) % r != 0 {
        return Rational::zero();
    }
    let (q1, f1) = mu1.div_rem(&r);
    let (q2, f2) = mu2.div_rem(&r);
    let frac_sum = Rational::new(BigInt::from(f1 + f2), BigInt::from(r));
    assert!(frac_sum.is_integer());
    let exponent = frac_sum.to_integer();
    let prefactor = if exponent.is_zero() { Rational::one() } else { int(r as i64) };

    prefactor / int((mu1 + mu2) as i64) * pow_signed(mu1, q1 as i64) * pow_signed(mu2, q2 as i64)
        / Rational::from_integer(factorial(q1) * factorial(q2))
}

/// Number of labeled trees on `d` nodes, from the edge-deletion recursion
/// `(d-1) T_d = 1/2 sum_{a+b=d} a b C(d,a) T_a T_b` with `T_1 = 1`.
pub fn tree_number(d: u64) -> BigInt {
    assert!(d >= 1, "tree_number needs d >= 1");
    let mut table: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for n in 2..=d {
        let mut sum = Rational::zero();
        for a in 1..n {
            let b = n - a;
            let term = BigInt::from(a * b) * binomial(n, a) * &table[a as usize] * &table[b as usize];
            sum += Rational::from_integer(term);
        }
        let t = sum / int(2 * (n as i64 - 1));
        assert!(t.is_integer(), "tree recursion produced a non-integer at d = {n}");
        table.push(t.to_integer());
    }
    table.swap_remove(d as usize)
}
