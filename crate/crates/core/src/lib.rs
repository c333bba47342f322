//! Exact-arithmetic generalized Bell polynomials, certified real-root
//! isolation, and executable zero-structure verification suites.

pub mod error;
pub mod genbell;
pub mod laguerre;
pub mod phi;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod series;
pub mod stirling;
pub mod verify;

pub use error::{Error, Result};
pub use laguerre::{AlphaVector, MultiIndex};
pub use phi::{PhiSequence, Tail};
pub use poly::ExactPoly;
pub use rational::Rational;
pub use roots::{InterlacingVerdict, RootIsolation, RootLoc};
