//! Exact-arithmetic toolkit for simultaneous rational approximation on
//! manifolds that are Cartesian products of one-variable polynomial curves.
//!
//! Everything is computed with arbitrary-precision rationals or rigorous
//! rational enclosures; no floating point enters any result. The crate is
//! `no_std`-compatible (with `alloc`); IO, file formats and the command-line
//! front end live in the companion `dioph-lab` crate.
//!
//! The main pieces:
//!
//! - [`rational`], [`interval`], [`real`], [`exponent`]: the arithmetic
//!   foundation — the nearest-integer norm, dyadic enclosures, refinable
//!   reals and rigorous approximation exponents.
//! - [`poly`], [`manifold`]: integer polynomials, variable groups, and the
//!   derived curve constants.
//! - [`bounds`]: every closed-form Hausdorff-dimension bound, exact.
//! - [`liouville`], [`lift`]: constructed numbers of prescribed approximation
//!   exponent and the lift `q -> q^d` onto polynomial coordinates.
//! - [`scan`], [`verify`]: exhaustive denominator scans, best-approximation
//!   records, and the divisibility / lcm-structure verifiers.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bounds;
pub mod exponent;
pub mod interval;
pub mod lift;
pub mod liouville;
pub mod manifold;
pub mod poly;
pub mod rational;
pub mod real;
pub mod scan;
pub mod verify;

pub use bounds::{full_report, BoundReport, Lambda, ReportInput};
pub use exponent::{Exponent, ExponentBounds};
pub use interval::{DyadicInterval, NormBounds, RatInterval};
pub use lift::{lift_and_verify, LiftWitness};
pub use liouville::{build_liouville, build_simultaneous, LiouvilleSeries};
pub use manifold::{curve_constants, CurveConstants, ManifoldSpec, VariableGroup};
pub use poly::Polynomial;
pub use rational::{nearest_int_distance, parse_rational, Rational};
pub use real::{decide_distance, DistanceDecision, RefinableReal};
pub use scan::{convergents, scan_records, ApproxRecord, ScanConfig, ScanOutcome};
pub use verify::{verify_lcm_structure, verify_lemma, DivisibilityReport, LcmStructureReport};
