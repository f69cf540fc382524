//! Truncated power series with exact rational coefficients.
//!
//! [`Series1`] is univariate and truncated at a fixed order `N` (the
//! coefficients `c_0..=c_N` are known, everything above is `O(t^{N+1})`).
//! [`Series2`] is bivariate and truncated by total degree. Binary
//! operations return the smaller of the two input orders.

mod bivariate;
mod univariate;

pub use bivariate::Series2;
pub use univariate::Series1;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series with zero constant term is not invertible")]
    NotInvertible,
    #[error("logarithm needs constant term 1")]
    LogDomain,
    #[error("exponential needs constant term 0")]
    ExpDomain,
    #[error("inner series of a composition must have zero constant term")]
    ComposeDomain,
}
