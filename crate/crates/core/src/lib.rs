//! Numerics for the dilogarithm and trilogarithm families on `[0, 1]`,
//! arcsin power series, Wallis-type integral transforms and a registry of
//! identities that can be checked numerically.
//!
//! ```
//! use dilogkit::special::li2;
//!
//! let v = li2(0.5).unwrap();
//! let closed = std::f64::consts::PI.powi(2) / 12.0 - std::f64::consts::LN_2.powi(2) / 2.0;
//! assert!((v - closed).abs() < 1e-14);
//! ```

pub mod compensated;
pub mod constants;
pub mod error;
pub mod exec;
pub mod expansion;
pub mod identities;
pub mod quadrature;
pub mod special;

pub use constants::{constants, Constant, ConstantsTable, Provenance};
pub use error::{Error, Result};
pub use exec::Execution;
pub use expansion::SeriesExpansion;
pub use identities::{IdentityCase, Registry, VerificationReport};
pub use quadrature::{Integrand, QuadResult, QuadratureConfig};
pub use special::{Family, SeriesValue};
