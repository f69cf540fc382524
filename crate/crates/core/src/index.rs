use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("orbifold order r must be at least 1")]
    ZeroOrder,
    #[error("profile must have at least one part")]
    EmptyProfile,
    #[error("profile parts must be positive, got {0:?}")]
    NonPositivePart(Vec<u64>),
    #[error("r = {r} does not divide the degree d = {d}")]
    NotDivisible { r: u64, d: u64 },
}

/// The triple `(r, g, mu)` naming one orbifold Hurwitz counting problem.
///
/// `mu` keeps the caller's order; the counts themselves are symmetric in it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HurwitzIndex {
    r: u64,
    g: u64,
    mu: Vec<u64>,
}

impl HurwitzIndex {
    pub fn new(r: u64, g: u64, mu: Vec<u64>) -> Result<Self, IndexError> {
        if r == 0 {
            return Err(IndexError::ZeroOrder);
        }
        if mu.is_empty() {
            return Err(IndexError::EmptyProfile);
        }
        if mu.iter().any(|&p| p == 0) {
            return Err(IndexError::NonPositivePart(mu));
        }
        Ok(Self { r, g, mu })
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn genus(&self) -> u64 {
        self.g
    }

    pub fn mu(&self) -> &[u64] {
        &self.mu
    }

    pub fn n(&self) -> usize {
        self.mu.len()
    }

    /// Degree `d = mu_1 + ... + mu_n`.
    pub fn degree(&self) -> u64 {
        self.mu.iter().sum()
    }

    pub fn is_admissible(&self) -> bool {
        self.degree() % self.r == 0
    }

    /// Number of faces `m = d / r`, when `r | d`.
    pub fn faces(&self) -> Option<u64> {
        self.is_admissible().then(|| self.degree() / self.r)
    }

    /// Edge count `s = 2g - 2 + d/r + n`; may be negative for degenerate
    /// indices such as `(g, n) = (0, 1)` below the base degree.
    pub fn edges(&self) -> Result<i64, IndexError> {
        let m = self.faces().ok_or(IndexError::NotDivisible {
            r: self.r,
            d: self.degree(),
        })?;
        Ok(2 * self.g as i64 - 2 + m as i64 + self.n() as i64)
    }
}

impl fmt::Display for HurwitzIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mu: Vec<String> = self.mu.iter().map(u64::to_string).collect();
        write!(f, "r={} g={} mu=({})", self.r, self.g, mu.join(","))
    }
}

/// Number of simple ramification points (edges of the Hurwitz graph).
pub fn simple_ramification_count(idx: &HurwitzIndex) -> Result<i64, IndexError> {
    idx.edges()
}
