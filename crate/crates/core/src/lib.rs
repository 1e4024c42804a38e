//! Strongly cyclic covers of prime-degree cyclic curves.
//!
//! A cyclic curve `y^d = prod (x - b_i)^{alpha_i}` with `d` prime and `r`
//! branch points carries `d^(r-2)` distinguished d-torsion points, each
//! defining an unramified cyclic cover. This crate enumerates those covers,
//! computes the genera involved, classifies them up to isomorphism, counts
//! them by the genus of their quotients and writes down explicit equations,
//! all in exact arithmetic.

pub mod cli;
pub mod covers;
pub mod curves;
pub mod equations;
pub mod error;
pub mod ff_linear;
pub mod rational;
pub mod verify;

pub use covers::{CoverSpec, IsoClass, Quotient};
pub use curves::{validate_curve, CyclicCurve, RamificationProfile};
pub use equations::{
    CoordinateChange, EquationSystem, FactoredForm, Polynomial, RationalFunction, TwoPointTransform,
};
pub use error::{Error, Result};
pub use ff_linear::{enumerate_degree_zero, ExponentVector, PrimeDegree};
