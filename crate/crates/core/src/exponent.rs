//! Rigorous approximation exponents.
//!
//! For a denominator `q ≥ 2` achieving error `ε = max_j ‖qζ_j‖`, the achieved
//! exponent is `e(q) = -log ε / log q`. Logarithms are evaluated as exact
//! rational intervals with outward rounding, so every reported exponent
//! carries a rigorous error bar. The documented relative accuracy of the
//! logarithm evaluation is `10^-9`; the fixed working precision below
//! overshoots that by a wide margin for any input this crate produces.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::interval::{NormBounds, RatInterval};
use crate::rational::{rat_int, Rational};

/// Fractional bits carried by the logarithm evaluation. At `2^-96` absolute
/// slack per logarithm the relative error of `e(q)` stays far below the
/// documented `10^-9` for all representable inputs.
const LOG_BITS: u32 = 96;

/// Rigorous enclosure `[lo, hi]` of a finite exponent value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentBounds {
    pub lo: Rational,
    pub hi: Rational,
}

impl ExponentBounds {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    /// True when the exponent is certainly at least `x`.
    pub fn certainly_at_least(&self, x: &Rational) -> bool {
        self.lo >= *x
    }

    /// True when the whole enclosure lies within `[center - slack, center + slack]`.
    pub fn within(&self, center: &Rational, slack: &Rational) -> bool {
        self.lo >= center - slack && self.hi <= center + slack
    }
}

/// An achieved exponent: finite with error bar, or `+∞` for an exact hit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exponent {
    Finite(ExponentBounds),
    Infinite,
}

impl Exponent {
    pub fn certainly_at_least(&self, x: &Rational) -> bool {
        match self {
            Exponent::Finite(b) => b.certainly_at_least(x),
            Exponent::Infinite => true,
        }
    }

    pub fn as_finite(&self) -> Option<&ExponentBounds> {
        match self {
            Exponent::Finite(b) => Some(b),
            Exponent::Infinite => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExponentError {
    #[error("denominator must be at least 2, got {0}")]
    DenominatorTooSmall(BigInt),
    #[error("error bounds include zero but are not exactly zero; refine first")]
    UndecidedZero,
    #[error("negative error value")]
    NegativeError,
}

/// `e(q) = -log(max_err)/log(q)` with a rigorous error bar, or `+∞` when
/// `max_err = 0`.
pub fn exponent_estimate(q: &BigInt, max_err: &Rational) -> Result<Exponent, ExponentError> {
    if *q < BigInt::from(2) {
        return Err(ExponentError::DenominatorTooSmall(q.clone()));
    }
    if max_err.is_negative() {
        return Err(ExponentError::NegativeError);
    }
    if max_err.is_zero() {
        return Ok(Exponent::Infinite);
    }
    let num = neg_ln_interval(max_err);
    let den = ln_interval(&Rational::from(q.clone()));
    Ok(Exponent::Finite(divide_intervals(&num, &den)))
}

/// Exponent enclosure from rigorous error bounds instead of an exact value.
///
/// Bounds that include zero without being exactly zero cannot be classified;
/// the caller must refine the error first.
pub fn exponent_from_bounds(q: &BigInt, err: &NormBounds) -> Result<Exponent, ExponentError> {
    if *q < BigInt::from(2) {
        return Err(ExponentError::DenominatorTooSmall(q.clone()));
    }
    if err.is_exact_zero() {
        return Ok(Exponent::Infinite);
    }
    if err.lo.is_zero() {
        return Err(ExponentError::UndecidedZero);
    }
    // -log is decreasing: the largest error gives the lowest exponent.
    let num_lo = neg_ln_interval(&err.hi);
    let num_hi = neg_ln_interval(&err.lo);
    let num = RatInterval::new(num_lo.lo, num_hi.hi);
    let den = ln_interval(&Rational::from(q.clone()));
    Ok(Exponent::Finite(divide_intervals(&num, &den)))
}

/// `[num]/[den]` with `den.lo > 0`, outward rounded.
fn divide_intervals(num: &RatInterval, den: &RatInterval) -> ExponentBounds {
    debug_assert!(den.lo.is_positive());
    let c1 = &num.lo / &den.lo;
    let c2 = &num.lo / &den.hi;
    let c3 = &num.hi / &den.lo;
    let c4 = &num.hi / &den.hi;
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
    ExponentBounds { lo, hi }
}

/// Enclosure of `-ln(x)` for `x > 0`.
fn neg_ln_interval(x: &Rational) -> RatInterval {
    let l = ln_interval(x);
    RatInterval::new(-l.hi, -l.lo)
}

/// Enclosure of `ln(x)` for a positive rational `x`, width ≤ `2^{-LOG_BITS+2}`
/// plus a term proportional to the bit length of `x`.
pub(crate) fn ln_interval(x: &Rational) -> RatInterval {
    debug_assert!(x.is_positive());
    let num = ln_big(x.numer());
    let den = ln_big(x.denom());
    RatInterval::new(&num.lo - &den.hi, &num.hi - &den.lo)
}

/// Enclosure of `ln(n)` for an integer `n ≥ 1`.
///
/// Writes `n = 2^e · m` with `m ∈ [1, 2)`, truncates `m` to a dyadic value,
/// and evaluates `ln(m) = 2·atanh((m-1)/(m+1))` by its series with an exact
/// tail bound. `ln 2` comes from the same series at `z = 1/3`.
fn ln_big(n: &BigInt) -> RatInterval {
    debug_assert!(n.is_positive());
    if n.is_one() {
        return RatInterval::point(Rational::zero());
    }
    let e = n.bits() - 1;
    // Extra guard bits absorb the multiplication of ln 2's slack by e.
    let guard = 64 + (64 - e.leading_zeros());
    let k = LOG_BITS + guard;
    // m_hat = floor(n · 2^k / 2^e) / 2^k, so m_hat ≤ m < m_hat + 2^-k.
    let scaled: BigInt = (n << k) >> e;
    // |ln m - ln m_hat| ≤ (m - m_hat)/m_hat ≤ 2^-k since m_hat ≥ 1.
    let slack = Rational::new(BigInt::one(), BigInt::one() << k);
    let ln_m = {
        // z = (m_hat - 1)/(m_hat + 1) ∈ [0, 1/3).
        let z_num = &scaled - (BigInt::one() << k);
        let z_den = scaled + (BigInt::one() << k);
        let s = two_atanh(&z_num, &z_den, k);
        RatInterval::new(s.lo, s.hi + &slack)
    };
    let ln2 = two_atanh(&BigInt::one(), &BigInt::from(3), k);
    let e_rat = Rational::from(BigInt::from(e));
    RatInterval::new(&ln2.lo * &e_rat + &ln_m.lo, &ln2.hi * &e_rat + &ln_m.hi)
}

/// Enclosure of `2·atanh(z) = 2·Σ z^{2j+1}/(2j+1)` for `0 ≤ z = num/den ≤ 1/3`,
/// with total slack below `2^-(k+3)`.
///
/// The series runs in fixed point with `f = k + 32` fractional bits and
/// floor rounding throughout, so the computed sum is a lower bound. Each of
/// the ~k/3 terms carries a deficit of at most `5·2^-f` (the per-step loss
/// contracts by z² ≤ 1/9), and the truncation tail after `J` terms is at
/// most `z^{2J+3}·9/8 ≤ 2^-(k+7)`; both are absorbed into the upper bound.
fn two_atanh(z_num: &BigInt, z_den: &BigInt, k: u32) -> RatInterval {
    debug_assert!(!z_num.is_negative() && z_num * BigInt::from(3) <= *z_den);
    if z_num.is_zero() {
        return RatInterval::point(Rational::zero());
    }
    let f = k + 32;
    let z_fix: BigInt = (z_num << f) / z_den;
    let z2 = (&z_fix * &z_fix) >> f;
    // 2·terms + 3 quotient bits of 3 exceed k + 8: the tail is ≤ 2^-(k+7).
    let terms = (k as u64 + 8) * 100 / 317 + 2;
    let mut power = z_fix.clone();
    let mut sum = z_fix;
    for j in 1..=terms {
        power = (&power * &z2) >> f;
        sum += &power / BigInt::from(2 * j + 1);
    }
    let slack = BigInt::from(8 * (terms + 2)) + (BigInt::one() << (f - k - 6));
    let denom = BigInt::one() << (f - 1); // halved: the result is 2·atanh
    RatInterval::new(
        Rational::new(sum.clone(), denom.clone()),
        Rational::new(sum + slack, denom),
    )
}
