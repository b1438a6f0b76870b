//! Exact and high-precision computation for Hermite, Chebyshev, Humbert,
//! two-variable Legendre and Gegenbauer polynomial families.
//!
//! The crate is organized around three pillars:
//!
//! - exact arithmetic over arbitrary-precision rationals ([`rational`]), with
//!   truncated formal power series ([`fps`]) acting as the independent oracle
//!   for every generating-function identity;
//! - the polynomial families themselves ([`hermite`], [`legendre`],
//!   [`umbral`]), each evaluable both in closed form and through series or
//!   integral routes;
//! - a verification harness ([`identities`]) that cross-checks derivative
//!   formulas, shifted generating functions, scaling and multiplication
//!   theorems, operational definitions and asymptotic limits by comparing
//!   independent computation routes — exactly (zero tolerance) wherever the
//!   arithmetic permits.
//!
//! Laplace-type integral representations are evaluated with generalized
//! Gauss-Laguerre quadrature ([`quadrature`]) in arbitrary-precision floating
//! point ([`hiprec`], MPFR-backed, 50 significant digits by default).

pub mod error;
pub mod fps;
pub mod hermite;
pub mod hiprec;
pub mod identities;
pub mod legendre;
pub mod poly;
pub mod quadrature;
pub mod rational;
pub mod report;
pub mod umbral;

pub use error::{Error, Result};
pub use rational::Rational;
pub use report::{Status, VerificationReport};
