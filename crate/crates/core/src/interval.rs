//! Rational intervals with exact endpoints: the enclosure machinery behind
//! every rigorous comparison in the crate.

use num_traits::{Signed, Zero};

use crate::rational::{nearest_int_distance, one_half, rat_int, Rational};

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn add_scalar(&self, s: &Rational) -> Self {
        Self::new(&self.lo + s, &self.hi + s)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let c1 = &self.lo * &other.lo;
        let c2 = &self.lo * &other.hi;
        let c3 = &self.hi * &other.lo;
        let c4 = &self.hi * &other.hi;
        let mut lo = c1.clone();
        let mut hi = c1;
        for c in [c2, c3, c4] {
            if c < lo {
                lo = c.clone();
            }
            if c > hi {
                hi = c;
            }
        }
        Self { lo, hi }
    }

    /// Multiplication by an exact scalar, flipping endpoints when negative.
    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_negative() {
            Self::new(&self.hi * s, &self.lo * s)
        } else {
            Self::new(&self.lo * s, &self.hi * s)
        }
    }
}

/// Enclosure produced by a refinable-real evaluator: the represented value
/// lies in `[lower, lower + width]`, with `width ≤ 2^{-m}` at precision
/// level `m`. Width is always strictly positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicInterval {
    lower: Rational,
    width: Rational,
}

impl DyadicInterval {
    pub fn new(lower: Rational, width: Rational) -> Self {
        assert!(width.is_positive(), "enclosure width must be positive");
        Self { lower, width }
    }

    pub fn lower(&self) -> &Rational {
        &self.lower
    }

    pub fn width(&self) -> &Rational {
        &self.width
    }

    pub fn upper(&self) -> Rational {
        &self.lower + &self.width
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lower <= *x && *x <= self.upper()
    }

    pub fn as_interval(&self) -> RatInterval {
        RatInterval::new(self.lower.clone(), self.upper())
    }
}

/// Rigorous bounds on a nearest-integer distance: `0 ≤ lo ≤ hi ≤ 1/2`.
/// `lo == hi` when the distance is known exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormBounds {
    pub lo: Rational,
    pub hi: Rational,
}

impl NormBounds {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(!lo.is_negative() && lo <= hi && hi <= one_half());
        Self { lo, hi }
    }

    pub fn exact(d: Rational) -> Self {
        Self::new(d.clone(), d)
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_exact_zero(&self) -> bool {
        self.hi.is_zero()
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    /// Pointwise maximum: bounds on `max(a, b)` given bounds on `a` and `b`.
    pub fn join_max(&self, other: &Self) -> Self {
        Self {
            lo: if self.lo >= other.lo {
                self.lo.clone()
            } else {
                other.lo.clone()
            },
            hi: if self.hi >= other.hi {
                self.hi.clone()
            } else {
                other.hi.clone()
            },
        }
    }
}

/// Exact range of the nearest-integer distance over a rational interval.
///
/// The image of a closed interval under `x ↦ ‖x‖` is computed exactly, so
/// enclosures stay as tight as the input allows and nest when inputs nest.
pub fn nearest_int_distance_interval(iv: &RatInterval) -> NormBounds {
    let one = rat_int(1);
    if iv.width() >= one {
        return NormBounds::new(rat_int(0), one_half());
    }
    // Shift so the lower endpoint lands in [0, 1); the upper then lies in [0, 2).
    let shift = iv.lo.floor();
    let a = &iv.lo - &shift;
    let b = &iv.hi - &shift;
    let contains_integer = a.is_zero() || b >= one;
    let half = one_half();
    let three_halves = &half + &one;
    let contains_half = (a <= half && b >= half) || b >= three_halves;
    let f = |x: &Rational| nearest_int_distance(x);
    let (fa, fb) = (f(&a), f(&b));
    let lo = if contains_integer {
        rat_int(0)
    } else if fa <= fb {
        fa.clone()
    } else {
        fb.clone()
    };
    let hi = if contains_half {
        half
    } else if fa >= fb {
        fa
    } else {
        fb
    };
    NormBounds::new(lo, hi)
}
