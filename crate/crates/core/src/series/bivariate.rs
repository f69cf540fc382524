use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Series1, SeriesError};
use crate::rational::{int, Rational};

/// Bivariate series `sum c_{i,j} z1^i z2^j` known for `i + j <= N`.
///
/// Coefficients are stored degree by degree: degree `k` occupies
/// `k (k + 1) / 2 ..` with `j` running `0..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series2 {
    order: usize,
    coeffs: Vec<Rational>,
}

fn slot(i: usize, j: usize) -> usize {
    let k = i + j;
    k * (k + 1) / 2 + j
}

fn exponents(order: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=order).flat_map(|k| (0..=k).map(move |j| (k - j, j)))
}

impl Series2 {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let coeffs = exponents(order).map(|(i, j)| f(i, j)).collect();
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_, _| Rational::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |i, j| if i + j == 0 { Rational::one() } else { Rational::zero() })
    }

    /// `a(z1) * b(z2)`, truncated at total degree `order`.
    pub fn outer(a: &Series1, b: &Series1, order: usize) -> Self {
        assert!(order <= a.order() && order <= b.order(), "outer product order exceeds inputs");
        Self::from_fn(order, |i, j| a.coeff(i) * b.coeff(j))
    }

    /// `a` as a function of `z1` alone.
    pub fn embed_first(a: &Series1, order: usize) -> Self {
        Self::from_fn(order, |i, j| if j == 0 { a.coeff(i).clone() } else { Rational::zero() })
    }

    /// `b` as a function of `z2` alone.
    pub fn embed_second(b: &Series1, order: usize) -> Self {
        Self::from_fn(order, |i, j| if i == 0 { b.coeff(j).clone() } else { Rational::zero() })
    }

    /// `a(z1) + b(z2)`.
    pub fn sum_separate(a: &Series1, b: &Series1) -> Self {
        let order = a.order().min(b.order());
        Self::from_fn(order, |i, j| match (i, j) {
            (0, 0) => a.coeff(0) + b.coeff(0),
            (i, 0) => a.coeff(i).clone(),
            (0, j) => b.coeff(j).clone(),
            _ => Rational::zero(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `z1^i z2^j`.
    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        assert!(i + j <= self.order, "coefficient beyond total order {}", self.order);
        &self.coeffs[slot(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        assert!(i + j <= self.order, "coefficient beyond total order {}", self.order);
        self.coeffs[slot(i, j)] = value;
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order);
        Self { order, coeffs: self.coeffs[..slot(0, order) + 1].to_vec() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { order: self.order, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        exponents(self.order).all(|(i, j)| self.coeff(i, j) == self.coeff(j, i))
    }

    /// Swaps the two variables.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.coeff(j, i).clone())
    }

    /// Sets `z2 = 0`.
    pub fn restrict_second(&self) -> Series1 {
        Series1::from_fn(self.order, |i| self.coeff(i, 0).clone())
    }

    /// Sets `z1 = 0`.
    pub fn restrict_first(&self) -> Series1 {
        Series1::from_fn(self.order, |j| self.coeff(0, j).clone())
    }

    /// Total-degree Euler operator `z1 d/dz1 + z2 d/dz2`.
    pub fn euler(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.coeff(i, j) * int((i + j) as i64))
    }

    /// `z1 d/dz1`.
    pub fn euler_first(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.coeff(i, j) * int(i as i64))
    }

    /// `z2 d/dz2`.
    pub fn euler_second(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.coeff(i, j) * int(j as i64))
    }

    fn euler_inverse(&self) -> Self {
        debug_assert!(self.coeff(0, 0).is_zero());
        Self::from_fn(self.order, |i, j| match i + j {
            0 => Rational::zero(),
            k => self.coeff(i, j) / int(k as i64),
        })
    }

    pub fn recip(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeff(0, 0);
        if c0.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let inv0 = c0.recip();
        let mut out = Self::zero(self.order);
        out.set(0, 0, inv0.clone());
        for (i, j) in exponents(self.order).skip(1) {
            let mut acc = Rational::zero();
            for a in 0..=i {
                for b in 0..=j {
                    if a + b == 0 {
                        continue;
                    }
                    let c = self.coeff(a, b);
                    if !c.is_zero() {
                        acc += c * out.coeff(i - a, j - b);
                    }
                }
            }
            out.set(i, j, -acc * &inv0);
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self * &other.recip()?)
    }

    /// `log f` for `f(0, 0) = 1`, via `E log f = (E f) / f` with `E` the
    /// total-degree Euler operator.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeff(0, 0).is_one() {
            return Err(SeriesError::LogDomain);
        }
        Ok((&self.euler() * &self.recip()?).euler_inverse())
    }

    /// `exp f` for `f(0, 0) = 0`, solving `E g = g E f` degree by degree.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeff(0, 0).is_zero() {
            return Err(SeriesError::ExpDomain);
        }
        let ef = self.euler();
        let mut out = Self::zero(self.order);
        out.set(0, 0, Rational::one());
        for (i, j) in exponents(self.order).skip(1) {
            let mut acc = Rational::zero();
            for a in 0..=i {
                for b in 0..=j {
                    if a + b > 0 && !ef.coeff(a, b).is_zero() {
                        acc += ef.coeff(a, b) * out.coeff(i - a, j - b);
                    }
                }
            }
            out.set(i, j, acc / int((i + j) as i64));
        }
        Ok(out)
    }

    /// Non-zero coefficients as `((i, j), value)`, ordered by total degree.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        exponents(self.order).zip(self.coeffs.iter()).filter(|(_, c)| !c.is_zero())
    }
}

impl Add for &Series2 {
    type Output = Series2;
    fn add(self, rhs: &Series2) -> Series2 {
        let order = self.order.min(rhs.order);
        Series2::from_fn(order, |i, j| self.coeff(i, j) + rhs.coeff(i, j))
    }
}

impl Sub for &Series2 {
    type Output = Series2;
    fn sub(self, rhs: &Series2) -> Series2 {
        let order = self.order.min(rhs.order);
        Series2::from_fn(order, |i, j| self.coeff(i, j) - rhs.coeff(i, j))
    }
}

impl Neg for &Series2 {
    type Output = Series2;
    fn neg(self) -> Series2 {
        Series2 { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Series2 {
    type Output = Series2;
    fn mul(self, rhs: &Series2) -> Series2 {
        let order = self.order.min(rhs.order);
        let mut out = Series2::zero(order);
        for ((i, j), a) in self.truncate(order).terms() {
            for ((k, l), b) in rhs.truncate(order - i - j).terms() {
                out.coeffs[slot(i + k, j + l)] += a * b;
            }
        }
        out
    }
}
