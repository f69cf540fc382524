//! The spectral curve side: the r-Lambert curve `x^r = y e^{-r y}`, its
//! global coordinate `x = z e^{-z^r}`, and the unstable free energies
//! `F_{0,1}` and `F_{0,2}` both as closed forms in `z` and as generating
//! functions of the recursion's counts.

use num_traits::{One, Zero};

use crate::hurwitz::MemoTable;
use crate::index::HurwitzIndex;
use crate::rational::{factorial, int, Rational};
use crate::series::{Series1, Series2, SeriesError};

/// Compositional inverse of `x = y / f(y)`:
/// `y = sum_k [y^{k-1}] f(y)^k x^k / k`, which is the derivative form
/// `(d/dy)^{k-1} f^k |_0 / k!` written through coefficients.
///
/// `f` must be known to order `order - 1`.
pub fn lagrange_invert(f: &Series1, order: usize) -> Result<Series1, SeriesError> {
    assert!(order >= 1, "lagrange_invert needs order >= 1");
    assert!(f.order() + 1 >= order, "f is known only to order {}", f.order());
    if f.coeff(0).is_zero() {
        return Err(SeriesError::NotInvertible);
    }
    let f = f.truncate(order - 1);
    let mut power = Series1::one(order - 1);
    let mut coeffs = vec![Rational::zero(); order + 1];
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        power = &power * &f;
        *slot = power.coeff(k - 1) / int(k as i64);
    }
    Ok(Series1::new(coeffs, order))
}

/// `exp(c t)` to the given order.
fn exp_linear(c: &Rational, order: usize) -> Series1 {
    Series1::monomial(1, c.clone(), order).exp().expect("zero constant term")
}

/// `y(x)` on the r-Lambert curve `x^r = y e^{-r y}` with `y = x^r + ...`.
///
/// Inverts `w = y e^{-r y}` in `w = x^r` by Lagrange inversion with
/// `f(y) = e^{r y}`, then substitutes `w = x^r`.
pub fn spectral_curve_y_of_x(r: u64, order: usize) -> Series1 {
    assert!(r >= 1);
    let r_us = r as usize;
    let w_order = (order / r_us).max(1);
    let f = exp_linear(&int(r as i64), w_order);
    let y_of_w = lagrange_invert(&f, w_order).expect("exp has unit constant term");
    // coefficients between r * w_order and order are zero by divisibility
    let spread = y_of_w.spread(r_us);
    let mut coeffs = spread.coeffs().to_vec();
    coeffs.truncate(order + 1);
    Series1::new(coeffs, order)
}

/// `x(z) = z e^{-z^r}`.
pub fn x_of_z(r: u64, order: usize) -> Series1 {
    assert!(r >= 1 && order >= 1);
    let mut exponent = Series1::zero(order);
    if (r as usize) <= order {
        exponent = Series1::monomial(r as usize, int(-1), order);
    }
    let e = exponent.exp().expect("zero constant term");
    (&Series1::variable(order) * &e).truncate(order)
}

/// Closed form `F_{0,1}(x(z)) = z^r / r - z^{2r} / 2`.
pub fn f01_in_z(r: u64, order: usize) -> Series1 {
    let r_us = r as usize;
    let mut out = Series1::zero(order);
    if r_us <= order {
        out = &out + &Series1::monomial(r_us, Rational::new(1.into(), r.into()), order);
    }
    if 2 * r_us <= order {
        out = &out + &Series1::monomial(2 * r_us, Rational::new((-1).into(), 2.into()), order);
    }
    out
}

/// `F_{0,1}(x) = sum_d H^r_{0,1}(d) / d x^d` from the recursion.
pub fn f01_in_x(r: u64, order: usize, memo: &mut MemoTable) -> Series1 {
    Series1::from_fn(order, |d| {
        if d == 0 {
            return Rational::zero();
        }
        let idx = HurwitzIndex::new(r, 0, vec![d as u64]).expect("valid index");
        memo.arrowed(&idx) / int(d as i64)
    })
}

/// `F_{0,1}(x(z))` obtained by substituting `x(z)` into [`f01_in_x`].
pub fn f01_from_counts(r: u64, order: usize, memo: &mut MemoTable) -> Series1 {
    let fx = f01_in_x(r, order, memo);
    fx.compose(&x_of_z(r, order)).expect("x(z) has zero constant term")
}

/// Closed form `F_{0,2}(x(z1), x(z2)) = -log DD(x)(z1, z2) - z1^r - z2^r`,
/// where `DD` is the divided difference. `DD(x)` has constant term 1, so the
/// logarithm needs no branch choice.
pub fn f02_closed_in_z(r: u64, order: usize) -> Series2 {
    assert!(order >= 1);
    let dd = x_of_z(r, order + 1).divided_difference();
    let log = dd.log().expect("divided difference of x(z) starts at 1");
    let zr = Series1::monomial(r as usize, Rational::one(), order);
    &(-&log) - &Series2::sum_separate(&zr, &zr)
}

/// `sum_{mu1, mu2 >= 1} H^r_{0,2}(mu1, mu2) / (mu1 mu2) x(z1)^mu1 x(z2)^mu2`,
/// truncated at total `z` degree `order`.
pub fn f02_from_counts(r: u64, order: usize, memo: &mut MemoTable) -> Series2 {
    let x = x_of_z(r, order);
    let powers: Vec<Series1> = (0..=order).map(|k| x.pow(k)).collect();
    let mut out = Series2::zero(order);
    for mu1 in 1..order {
        for mu2 in 1..=order - mu1 {
            let idx = HurwitzIndex::new(r, 0, vec![mu1 as u64, mu2 as u64]).expect("valid index");
            let c = memo.arrowed(&idx);
            if c.is_zero() {
                continue;
            }
            let c = c / int((mu1 * mu2) as i64);
            out = &out + &Series2::outer(&powers[mu1], &powers[mu2], order).scale(&c);
        }
    }
    out
}

/// `F_{0,2}(x1, x2)` as a series in the `x` variables directly.
pub fn f02_in_x(r: u64, order: usize, memo: &mut MemoTable) -> Series2 {
    Series2::from_fn(order, |i, j| {
        if i == 0 || j == 0 {
            return Rational::zero();
        }
        let idx = HurwitzIndex::new(r, 0, vec![i as u64, j as u64]).expect("valid index");
        memo.arrowed(&idx) / int((i * j) as i64)
    })
}

/// Density of `W_{0,1} = y dlog x`: the coefficients of `y(x)` paired with
/// their degree, degrees not divisible by `r` omitted.
pub fn w01_coefficients(r: u64, order: usize) -> Vec<(u64, Rational)> {
    let y = spectral_curve_y_of_x(r, order);
    (1..=order)
        .filter(|d| *d as u64 % r == 0)
        .map(|d| (d as u64, y.coeff(d).clone()))
        .collect()
}

/// `[x^{r m}] y(x) = (r m)^{m-1} / m!`, read off from Lagrange inversion.
pub fn spectral_curve_coefficient(r: u64, m: u64) -> Rational {
    assert!(m >= 1);
    num_traits::pow(int((r * m) as i64), (m - 1) as usize) / Rational::from_integer(factorial(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn series(cs: &[(i64, i64)], order: usize) -> Series1 {
        Series1::new(cs.iter().map(|&(n, d)| frac(n, d)).collect(), order)
    }

    #[test]
    fn lagrange_exp() {
        let f = exp_linear(&int(1), 3);
        let y = lagrange_invert(&f, 4).unwrap();
        assert_eq!(y, series(&[(0, 1), (1, 1), (1, 1), (3, 2), (8, 3)], 4));
    }

    #[test]
    fn lagrange_identity_and_catalan() {
        assert_eq!(lagrange_invert(&Series1::one(6), 7).unwrap(), Series1::variable(7));
        // x = y (1 - y)
        let f = series(&[(1, 1), (-1, 1)], 4).recip().unwrap();
        let y = lagrange_invert(&f, 5).unwrap();
        assert_eq!(y, series(&[(0, 1), (1, 1), (1, 1), (2, 1), (5, 1), (14, 1)], 5));
        assert_eq!(lagrange_invert(&Series1::variable(3), 3), Err(SeriesError::NotInvertible));
    }

    #[test]
    fn curve_coefficients() {
        assert_eq!(spectral_curve_y_of_x(1, 4), series(&[(0, 1), (1, 1), (1, 1), (3, 2), (8, 3)], 4));
        assert_eq!(
            spectral_curve_y_of_x(2, 6),
            series(&[(0, 1), (0, 1), (1, 1), (0, 1), (2, 1), (0, 1), (6, 1)], 6)
        );
        assert!(spectral_curve_y_of_x(2, 7).coeff(3).is_zero());
        assert_eq!(spectral_curve_y_of_x(3, 7).order(), 7);
        assert_eq!(spectral_curve_coefficient(2, 3), int(6));
    }

    #[test]
    fn x_expansions() {
        assert_eq!(x_of_z(2, 5), series(&[(0, 1), (1, 1), (0, 1), (-1, 1), (0, 1), (1, 2)], 5));
        assert_eq!(x_of_z(1, 3), series(&[(0, 1), (1, 1), (-1, 1), (1, 2)], 3));
        for r in 1..5 {
            assert_eq!(x_of_z(r, 6).coeff(1), &int(1));
        }
    }

    #[test]
    fn f01_closed_forms() {
        assert_eq!(f01_in_z(1, 3), series(&[(0, 1), (1, 1), (-1, 2)], 3));
        assert_eq!(f01_in_z(2, 4), series(&[(0, 1), (0, 1), (1, 2), (0, 1), (-1, 2)], 4));
        assert!(f01_in_z(3, 9).coeff(0).is_zero());
    }

    #[test]
    fn f02_small_coefficients() {
        let closed = f02_closed_in_z(1, 4);
        assert_eq!(closed.coeff(1, 1), &frac(1, 2));
        for k in 0..=4 {
            assert!(closed.coeff(k, 0).is_zero());
            assert!(closed.coeff(0, k).is_zero());
        }
        assert!(closed.is_symmetric());

        let mut memo = MemoTable::new();
        let counts = f02_from_counts(1, 2, &mut memo);
        assert_eq!(counts.coeff(1, 1), &frac(1, 2));
        let counts2 = f02_from_counts(2, 4, &mut memo);
        assert!(counts2.coeff(0, 0).is_zero() && counts2.coeff(1, 0).is_zero() && counts2.coeff(0, 1).is_zero());
    }

    #[test]
    fn w01_lists_divisible_degrees() {
        assert_eq!(w01_coefficients(1, 3), vec![(1, int(1)), (2, int(1)), (3, frac(3, 2))]);
        assert_eq!(w01_coefficients(2, 4), vec![(2, int(1)), (4, int(2))]);
        assert!(w01_coefficients(3, 8).iter().all(|(d, _)| d % 3 == 0));
    }
}
