//! Refinable reals: numbers evaluable to any requested absolute error, and
//! the rigorous comparison of `‖q·x‖` against a threshold.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::interval::{nearest_int_distance_interval, DyadicInterval, NormBounds};
use crate::liouville::LiouvilleSeries;
use crate::rational::{nearest_int_distance, pow2_neg, Rational};

/// Default precision cap in bits. Tails of the constructed series shrink
/// doubly fast, so the doubling ladder terminates long before this.
pub const DEFAULT_PRECISION_CAP: u32 = 1 << 20;

const PRECISION_START: u32 = 64;

/// A real number with a deterministic evaluator producing nested enclosures
/// of width `≤ 2^{-m}` at precision level `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefinableReal {
    /// An exact rational; every enclosure contains the exact value.
    Exact(Rational),
    /// A lacunary series of prescribed approximation exponent.
    Liouville(LiouvilleSeries),
}

/// Evaluator kind tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealKind {
    ExactRational,
    LiouvilleSeries,
}

impl RefinableReal {
    pub fn exact(r: Rational) -> Self {
        RefinableReal::Exact(r)
    }

    pub fn kind(&self) -> RealKind {
        match self {
            RefinableReal::Exact(_) => RealKind::ExactRational,
            RefinableReal::Liouville(_) => RealKind::LiouvilleSeries,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            RefinableReal::Exact(r) => Some(r),
            RefinableReal::Liouville(_) => None,
        }
    }

    /// Enclosure of width at most `2^{-precision}`; enclosures at increasing
    /// precision are nested.
    pub fn enclosure(&self, precision: u32) -> DyadicInterval {
        match self {
            RefinableReal::Exact(r) => {
                DyadicInterval::new(r - pow2_neg(precision + 1), pow2_neg(precision))
            }
            RefinableReal::Liouville(s) => s.enclosure(precision),
        }
    }

    /// A sound upper bound for `|value|`, from a coarse enclosure.
    pub fn abs_upper_bound(&self) -> Rational {
        match self {
            RefinableReal::Exact(r) => r.abs(),
            RefinableReal::Liouville(s) => {
                let e = s.enclosure(2);
                let lo_abs = e.lower().abs();
                let hi_abs = e.upper().abs();
                if lo_abs >= hi_abs {
                    lo_abs
                } else {
                    hi_abs
                }
            }
        }
    }
}

/// Verdict of a rigorous comparison of `‖q·x‖` against a threshold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistanceDecision {
    /// `‖qx‖ < threshold`, certified; carries the final bounds.
    Below(NormBounds),
    /// `‖qx‖ ≥ threshold`, certified.
    AboveOrEqual(NormBounds),
    /// `‖qx‖ = 0` proven (exact-rational inputs only).
    ExactZero,
    /// The precision cap was reached with the enclosure still straddling the
    /// threshold; raise the cap or exclude this denominator.
    Ambiguous(NormBounds),
}

/// Rigorous bounds on `‖q·x‖` at one precision level.
pub fn norm_bounds_at(x: &RefinableReal, q: &BigInt, precision: u32) -> NormBounds {
    match x {
        RefinableReal::Exact(r) => {
            NormBounds::exact(nearest_int_distance(&(Rational::from(q.clone()) * r)))
        }
        RefinableReal::Liouville(_) => {
            let scaled = x
                .enclosure(precision)
                .as_interval()
                .scale(&Rational::from(q.clone()));
            nearest_int_distance_interval(&scaled)
        }
    }
}

/// The doubling precision ladder: 64, 128, … capped at `max_precision`.
fn precision_ladder(max_precision: u32) -> impl Iterator<Item = u32> {
    let mut current = PRECISION_START.min(max_precision);
    let mut done = false;
    core::iter::from_fn(move || {
        if done {
            return None;
        }
        let m = current;
        if m >= max_precision {
            done = true;
        } else {
            current = (current * 2).min(max_precision);
        }
        Some(m)
    })
}

/// Refines `x` until the enclosure of `‖q·x‖` lies strictly on one side of
/// `threshold`, `‖q·x‖ = 0` is proven, or `max_precision` is exhausted.
///
/// The verdict is monotone in precision: once decided at level `m`, all
/// deeper levels agree, because enclosures nest.
pub fn decide_distance(
    x: &RefinableReal,
    q: &BigInt,
    threshold: &Rational,
    max_precision: u32,
) -> DistanceDecision {
    if let RefinableReal::Exact(r) = x {
        let d = nearest_int_distance(&(Rational::from(q.clone()) * r));
        return if d.is_zero() {
            DistanceDecision::ExactZero
        } else if d < *threshold {
            DistanceDecision::Below(NormBounds::exact(d))
        } else {
            DistanceDecision::AboveOrEqual(NormBounds::exact(d))
        };
    }
    let mut last = None;
    for m in precision_ladder(max_precision) {
        let bounds = norm_bounds_at(x, q, m);
        if bounds.hi < *threshold {
            return DistanceDecision::Below(bounds);
        }
        if bounds.lo >= *threshold {
            return DistanceDecision::AboveOrEqual(bounds);
        }
        last = Some(bounds);
    }
    DistanceDecision::Ambiguous(last.unwrap_or_else(|| norm_bounds_at(x, q, max_precision)))
}
