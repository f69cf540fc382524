//! Exact orbifold Hurwitz numbers and their mirror spectral curve.
//!
//! * [`hurwitz`]: the edge-contraction recursion for the arrowed counts
//!   `H^r_{g,n}(mu)` and the orbifold Hurwitz numbers derived from them.
//! * [`closed`]: tree numbers and the genus zero one- and two-point formulas.
//! * [`series`] and [`mirror`]: truncated exact power series, Lagrange
//!   inversion, the r-Lambert curve, and the free energies `F_{0,1}`, `F_{0,2}`.
//! * [`oracle`]: an independent monodromy count in the symmetric group.
//! * [`verify`]: suites that cross-check all of the above.
//!
//! Every number is an exact [`Rational`]; there is no floating point.

pub mod closed;
pub mod hurwitz;
pub mod index;
pub mod mirror;
pub mod oracle;
pub mod profiles;
pub mod rational;
pub mod report;
pub mod series;
pub mod verify;

pub use closed::{jpt_h01, jpt_h02, tree_number};
pub use hurwitz::{arrowed_hurwitz, orbifold_hurwitz, MemoTable};
pub use index::{simple_ramification_count, HurwitzIndex, IndexError};
pub use oracle::{count_monodromy_tuples, EnumerationLimits, FactorizationInstance, OracleError, PermutationTuple};
pub use rational::Rational;
pub use report::{CaseResult, Summary, VerificationReport};
pub use series::{Series1, Series2, SeriesError};
