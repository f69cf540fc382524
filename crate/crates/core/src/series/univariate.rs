use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Series2, SeriesError};
use crate::rational::{int, Rational};

/// `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series1 {
    coeffs: Vec<Rational>,
}

impl Series1 {
    /// Builds a series of the given order; missing coefficients are zero and
    /// coefficients above `order` are dropped.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Self { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, Rational::one(), order)
    }

    /// `c t^k`, or the zero series if `k > order`.
    pub fn monomial(k: usize, c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The identity series `t`.
    pub fn variable(order: usize) -> Self {
        Self::monomial(1, Rational::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`.
    ///
    /// # Panics
    ///
    /// If `k` exceeds the truncation order, since that coefficient is unknown.
    pub fn coeff(&self, k: usize) -> &Rational {
        assert!(k <= self.order(), "coefficient t^{k} is beyond the truncation order {}", self.order());
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Index of the first non-zero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplies by `t^k`; the known order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `t^k`. The low `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(k <= self.order(), "shift exceeds truncation order");
        assert!(self.coeffs[..k].iter().all(Zero::is_zero), "series is not divisible by t^{k}");
        Self { coeffs: self.coeffs[k..].to_vec() }
    }

    /// Substitutes `t -> t^r`; the result is known to order `r N`.
    pub fn spread(&self, r: usize) -> Self {
        assert!(r >= 1);
        let mut out = Self::zero(r * self.order());
        for (k, c) in self.coeffs.iter().enumerate() {
            out.coeffs[r * k] = c.clone();
        }
        out
    }

    /// `d/dt`, known to order `N - 1` (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        Self::from_fn(order, |k| {
            self.coeffs.get(k + 1).map_or_else(Rational::zero, |c| c * int(k as i64 + 1))
        })
    }

    /// Euler operator `t d/dt`; keeps the order.
    pub fn euler(&self) -> Self {
        Self { coeffs: self.coeffs.iter().enumerate().map(|(k, c)| c * int(k as i64)).collect() }
    }

    /// Inverse of the Euler operator on series with zero constant term.
    fn euler_inverse(&self) -> Self {
        debug_assert!(self.coeffs[0].is_zero());
        Self::from_fn(self.order(), |k| {
            if k == 0 {
                Rational::zero()
            } else {
                &self.coeffs[k] / int(k as i64)
            }
        })
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn recip(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for k in 1..=self.order() {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-acc * &inv0);
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self * &other.recip()?)
    }

    /// `log f`, for `f(0) = 1`, via `t (log f)' = t f' / f`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::LogDomain);
        }
        Ok((&self.euler() * &self.recip()?).euler_inverse())
    }

    /// `exp f`, for `f(0) = 0`, from `k g_k = sum_j j f_j g_{k-j}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ExpDomain);
        }
        let mut out = vec![Rational::one()];
        for k in 1..=self.order() {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * int(j as i64) * &out[k - j];
            }
            out.push(acc / int(k as i64));
        }
        Ok(Self { coeffs: out })
    }

    /// `self(inner(t))`, for `inner(0) = 0`.
    ///
    /// Known to order `min(N_self * val(inner), N_inner)`.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::ComposeDomain);
        }
        let order = match inner.valuation() {
            None => inner.order(),
            Some(v) => (self.order() * v).min(inner.order()),
        };
        let inner = inner.truncate(order);
        // Horner from the top coefficient
        let mut acc = Self::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Divided difference `(f(z1) - f(z2)) / (z1 - z2)` as a bivariate
    /// series of total order `N - 1`.
    ///
    /// Uses `z1^n - z2^n = (z1 - z2) h_{n-1}(z1, z2)`, so the coefficient of
    /// `z1^i z2^j` is `c_{i+j+1}`.
    pub fn divided_difference(&self) -> Series2 {
        assert!(self.order() >= 1, "divided difference needs order >= 1");
        Series2::from_fn(self.order() - 1, |i, j| self.coeffs[i + j + 1].clone())
    }

    /// Non-zero coefficients as `(exponent, value)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl fmt::Display for Series1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.terms() {
            write!(f, "{c}*t^{k} + ")?;
        }
        write!(f, "O(t^{})", self.order() + 1)
    }
}

impl Add for &Series1 {
    type Output = Series1;
    fn add(self, rhs: &Series1) -> Series1 {
        let order = self.order().min(rhs.order());
        Series1::from_fn(order, |k| &self.coeffs[k] + &rhs.coeffs[k])
    }
}

impl Sub for &Series1 {
    type Output = Series1;
    fn sub(self, rhs: &Series1) -> Series1 {
        let order = self.order().min(rhs.order());
        Series1::from_fn(order, |k| &self.coeffs[k] - &rhs.coeffs[k])
    }
}

impl Neg for &Series1 {
    type Output = Series1;
    fn neg(self) -> Series1 {
        Series1 { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Series1 {
    type Output = Series1;
    fn mul(self, rhs: &Series1) -> Series1 {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series1 { coeffs: out }
    }
}
