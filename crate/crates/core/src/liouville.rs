//! Lacunary series with prescribed approximation exponent.
//!
//! A series `ζ = Σ_n c_n b^{-a_n}` with digits `c_n ∈ {1, …, b-1}` and a
//! doubly-exponential exponent schedule `a_1 = 1`, `a_{n+1} = ⌈(τ+1)·a_n⌉`
//! realizes approximation exponent `τ` at the denominators `q_n = b^{a_n}`:
//! the fractional part of `q_n ζ` is exactly the scaled series tail, of size
//! about `b^{a_n - a_{n+1}} ≈ q_n^{-τ}`. The minimal-growth schedule keeps
//! the denominators small enough for exact desk-scale arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::interval::{DyadicInterval, RatInterval};
use crate::rational::{big_pow, rat_int, Rational};
use crate::real::RefinableReal;

/// Largest supported schedule exponent: `b^{a_n}` beyond this would exceed
/// any sensible memory budget.
const MAX_SCHEDULE_EXPONENT: u64 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiouvilleError {
    #[error("base must be at least 2, got {0}")]
    BaseTooSmall(u32),
    #[error("target exponent must exceed 1")]
    ExponentTooSmall,
    #[error("digit {digit} outside 1..={max}")]
    DigitOutOfRange { digit: u32, max: u32 },
    #[error("need at least 2 terms, got {0}")]
    TooFewTerms(usize),
    #[error("{s} coordinates need {s} distinct nonzero digits, but base {base} offers only {available}")]
    DigitCollision { s: u32, base: u32, available: u32 },
    #[error("coordinate count must be positive")]
    NoCoordinates,
}

/// An infinite lacunary series, evaluable to any precision. Immutable after
/// construction; all methods are pure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiouvilleSeries {
    base: u32,
    tau: Rational,
    /// Explicit digits for the leading terms; later terms use `fill_digit`.
    digits: Vec<u32>,
    fill_digit: u32,
}

impl LiouvilleSeries {
    pub fn new(
        base: u32,
        tau: Rational,
        digits: Vec<u32>,
        fill_digit: u32,
    ) -> Result<Self, LiouvilleError> {
        if base < 2 {
            return Err(LiouvilleError::BaseTooSmall(base));
        }
        if tau <= rat_int(1) {
            return Err(LiouvilleError::ExponentTooSmall);
        }
        for &d in digits.iter().chain(core::iter::once(&fill_digit)) {
            if d == 0 || d >= base {
                return Err(LiouvilleError::DigitOutOfRange {
                    digit: d,
                    max: base - 1,
                });
            }
        }
        Ok(Self {
            base,
            tau,
            digits,
            fill_digit,
        })
    }

    /// Constant digit 1, the default construction.
    pub fn with_unit_digits(base: u32, tau: Rational) -> Result<Self, LiouvilleError> {
        Self::new(base, tau, Vec::new(), 1)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn tau(&self) -> &Rational {
        &self.tau
    }

    /// Digit of term `n` (1-indexed).
    pub fn digit(&self, n: usize) -> u32 {
        self.digits.get(n - 1).copied().unwrap_or(self.fill_digit)
    }

    /// Schedule exponent `a_n` (1-indexed): `a_1 = 1`,
    /// `a_{n+1} = ⌈(τ+1)·a_n⌉`.
    pub fn schedule_exponent(&self, n: usize) -> u64 {
        assert!(n >= 1);
        let num = self.tau.numer() + self.tau.denom(); // τ + 1 = num/den
        let den = self.tau.denom();
        let mut a = BigInt::one();
        for _ in 1..n {
            a = (&a * &num + (den - BigInt::one())) / den; // ceiling division
        }
        let a: u64 = (&a).try_into().unwrap_or(u64::MAX);
        assert!(
            a <= MAX_SCHEDULE_EXPONENT,
            "schedule exponent {a} exceeds the supported range"
        );
        a
    }

    /// Denominator `q_n = b^{a_n}`.
    pub fn denominator(&self, n: usize) -> BigInt {
        big_pow(
            &BigInt::from(self.base),
            self.schedule_exponent(n) as u32,
        )
    }

    /// Exact partial sum of the first `n` terms.
    pub fn partial_sum(&self, n: usize) -> Rational {
        let b = BigInt::from(self.base);
        let mut sum = Rational::zero();
        for m in 1..=n {
            let a = self.schedule_exponent(m) as u32;
            sum += Rational::new(BigInt::from(self.digit(m)), big_pow(&b, a));
        }
        sum
    }

    /// Rigorous enclosure of the tail `Σ_{m>n} c_m b^{-a_m}`.
    ///
    /// Lower bound: the single next term. Upper bound: next term plus
    /// `b^{1-a_{n+2}}`, which dominates every later term even with maximal
    /// digits.
    pub fn tail_bounds(&self, n: usize) -> RatInterval {
        let b = BigInt::from(self.base);
        let a1 = self.schedule_exponent(n + 1) as u32;
        let a2 = self.schedule_exponent(n + 2) as u32;
        let next = Rational::new(BigInt::from(self.digit(n + 1)), big_pow(&b, a1));
        let rest = Rational::new(BigInt::from(self.base), big_pow(&b, a2));
        RatInterval::new(next.clone(), next + rest)
    }

    /// Number of leading terms whose tail enclosure has width ≤ `2^{-precision}`.
    pub fn terms_for_precision(&self, precision: u32) -> usize {
        // Tail width is b^{1-a_{n+2}} ≤ 2^{1-a_{n+2}}; a_{n+2} ≥ precision + 1
        // suffices for any base ≥ 2.
        let needed = precision as u64 + 1;
        let mut n = 0;
        while self.schedule_exponent(n + 2) < needed {
            n += 1;
        }
        n
    }

    /// Enclosure of width at most `2^{-precision}`. Enclosures are nested:
    /// higher precision yields a sub-interval.
    pub fn enclosure(&self, precision: u32) -> DyadicInterval {
        let n = self.terms_for_precision(precision);
        let sum = self.partial_sum(n);
        let tail = self.tail_bounds(n);
        DyadicInterval::new(sum + tail.lo.clone(), tail.width())
    }

    /// The convergent pair `(q_n, p_n)` with `q_n = b^{a_n}` and
    /// `p_n = q_n · (partial sum)`, the nearest integer to `q_n ζ`.
    pub fn convergent(&self, n: usize) -> (BigInt, BigInt) {
        let q = self.denominator(n);
        let p = (Rational::from(q.clone()) * self.partial_sum(n)).to_integer();
        (q, p)
    }

    /// Rigorous bounds on `‖q_n ζ‖`: `q_n ζ` is an integer plus the scaled
    /// tail, so the norm is the tail enclosure pushed through the
    /// nearest-integer distance.
    pub fn norm_at_term(&self, n: usize) -> crate::interval::NormBounds {
        let q = Rational::from(self.denominator(n));
        crate::interval::nearest_int_distance_interval(&self.tail_bounds(n).scale(&q))
    }

    /// Measured exponent `e(q_n)` with a rigorous error bar.
    pub fn measured_exponent(&self, n: usize) -> crate::exponent::Exponent {
        crate::exponent::exponent_from_bounds(&self.denominator(n), &self.norm_at_term(n))
            .expect("schedule denominators are ≥ 2 with positive norm bounds")
    }
}

/// Builds `ζ = Σ b^{-a_n}` with exponent `τ` plus its first `terms`
/// convergent pairs `(q_n, p_n)`.
pub fn build_liouville(
    base: u32,
    tau: Rational,
    terms: usize,
) -> Result<(RefinableReal, Vec<(BigInt, BigInt)>), LiouvilleError> {
    build_liouville_with_digits(base, tau, terms, Vec::new(), 1)
}

/// As [`build_liouville`] with explicit digit choices for the leading terms;
/// later terms use `fill_digit`.
pub fn build_liouville_with_digits(
    base: u32,
    tau: Rational,
    terms: usize,
    digits: Vec<u32>,
    fill_digit: u32,
) -> Result<(RefinableReal, Vec<(BigInt, BigInt)>), LiouvilleError> {
    if terms < 2 {
        return Err(LiouvilleError::TooFewTerms(terms));
    }
    let series = LiouvilleSeries::new(base, tau, digits, fill_digit)?;
    let convergents = (1..=terms).map(|n| series.convergent(n)).collect();
    Ok((RefinableReal::Liouville(series), convergents))
}

/// Builds `s` coordinates sharing one base and one schedule, with coordinate
/// `i` (1-indexed) using constant digit `i`. The shared denominators
/// `q_n = b^{a_n}` approximate all coordinates simultaneously.
pub fn build_simultaneous(
    base: u32,
    tau: Rational,
    s: u32,
    terms: usize,
) -> Result<Vec<RefinableReal>, LiouvilleError> {
    if s == 0 {
        return Err(LiouvilleError::NoCoordinates);
    }
    if base < 2 {
        return Err(LiouvilleError::BaseTooSmall(base));
    }
    if s > base - 1 {
        return Err(LiouvilleError::DigitCollision {
            s,
            base,
            available: base - 1,
        });
    }
    if terms < 2 {
        return Err(LiouvilleError::TooFewTerms(terms));
    }
    (1..=s)
        .map(|i| Ok(RefinableReal::Liouville(LiouvilleSeries::new(base, tau.clone(), vec![], i)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::Exponent;
    use crate::rational::{pow2_neg, rat};

    #[test]
    fn schedule_examples() {
        let s = LiouvilleSeries::with_unit_digits(2, rat_int(3)).unwrap();
        let a: Vec<u64> = (1..=4).map(|n| s.schedule_exponent(n)).collect();
        assert_eq!(a, [1, 4, 16, 64]);

        let s = LiouvilleSeries::with_unit_digits(10, rat_int(2)).unwrap();
        let a: Vec<u64> = (1..=3).map(|n| s.schedule_exponent(n)).collect();
        assert_eq!(a, [1, 3, 9]);

        // Fractional τ: ceiling applies at every step.
        let s = LiouvilleSeries::with_unit_digits(2, rat(3, 2)).unwrap();
        let a: Vec<u64> = (1..=4).map(|n| s.schedule_exponent(n)).collect();
        assert_eq!(a, [1, 3, 8, 20]);
    }

    #[test]
    fn construction_rejections() {
        assert!(matches!(
            LiouvilleSeries::with_unit_digits(1, rat_int(3)),
            Err(LiouvilleError::BaseTooSmall(1))
        ));
        assert!(matches!(
            LiouvilleSeries::with_unit_digits(2, rat_int(1)),
            Err(LiouvilleError::ExponentTooSmall)
        ));
        assert!(matches!(
            LiouvilleSeries::new(2, rat_int(3), vec![2], 1),
            Err(LiouvilleError::DigitOutOfRange { .. })
        ));
        assert!(matches!(
            build_simultaneous(2, rat_int(2), 2, 3),
            Err(LiouvilleError::DigitCollision { .. })
        ));
        assert!(build_liouville(2, rat_int(3), 1).is_err());
    }

    #[test]
    fn partial_sums_and_convergents() {
        let (zeta, convergents) = build_liouville(2, rat_int(3), 4).unwrap();
        let series = match &zeta {
            RefinableReal::Liouville(s) => s,
            _ => unreachable!(),
        };
        // ζ = 2^-1 + 2^-4 + 2^-16 + 2^-64 + …
        assert_eq!(series.partial_sum(2), rat(9, 16));
        let (q2, p2) = convergents[1].clone();
        assert_eq!(q2, BigInt::from(16));
        assert_eq!(p2, BigInt::from(9));
        // q_n · partial_sum(n) is the nearest integer: the tail is tiny.
        let (q3, p3) = convergents[2].clone();
        assert_eq!(q3, BigInt::one() << 16);
        assert_eq!(
            Rational::from(q3) * series.partial_sum(3),
            Rational::from(p3)
        );
    }

    #[test]
    fn tail_enclosure_is_rigorous() {
        let s = LiouvilleSeries::with_unit_digits(2, rat_int(3)).unwrap();
        for n in 1..=3 {
            let t = s.tail_bounds(n);
            // Unit digits: the tail lies strictly inside (b^-a_{n+1}, 2·b^-a_{n+1}).
            let base_term = Rational::new(
                BigInt::one(),
                BigInt::one() << s.schedule_exponent(n + 1) as u32,
            );
            assert!(t.lo >= base_term);
            assert!(t.hi < &base_term + &base_term);
            // A deeper partial sum plus its own tail must stay inside.
            let deeper = s.partial_sum(n + 2) + s.tail_bounds(n + 2).lo - s.partial_sum(n);
            assert!(t.contains(&deeper));
        }
    }

    #[test]
    fn enclosures_nest_and_obey_width() {
        let s = LiouvilleSeries::with_unit_digits(3, rat(5, 2)).unwrap();
        let mut prev: Option<DyadicInterval> = None;
        for m in [4u32, 16, 64, 256, 1024] {
            let e = s.enclosure(m);
            assert!(*e.width() <= pow2_neg(m));
            if let Some(p) = prev {
                assert!(e.as_interval().is_subset_of(&p.as_interval()));
            }
            prev = Some(e);
        }
    }

    #[test]
    fn measured_exponents_track_tau() {
        // ‖q_n ζ‖ = q_n · tail(n) exactly while the tail stays below 1/(2 q_n).
        let s = LiouvilleSeries::with_unit_digits(2, rat_int(3)).unwrap();
        for n in 2..=4 {
            let b = match s.measured_exponent(n) {
                Exponent::Finite(b) => b,
                Exponent::Infinite => unreachable!(),
            };
            let a_n = rat_int(s.schedule_exponent(n) as i64);
            let slack = rat_int(2) / &a_n;
            assert!(
                b.lo >= rat_int(3) - &slack,
                "n={n}: lo {} below 3 - 2/a_n",
                b.lo
            );
            assert!(
                b.hi <= rat_int(3) + &slack + rat_int(1) / &a_n,
                "n={n}: hi {} above 3 + slack",
                b.hi
            );
        }
    }

    #[test]
    fn simultaneous_coordinates_share_denominators() {
        let coords = build_simultaneous(3, rat_int(2), 2, 3).unwrap();
        let series: Vec<&LiouvilleSeries> = coords
            .iter()
            .map(|c| match c {
                RefinableReal::Liouville(s) => s,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(series[0].digit(1), 1);
        assert_eq!(series[1].digit(1), 2);
        assert_eq!(series[0].denominator(3), series[1].denominator(3));
        assert_ne!(series[0].partial_sum(2), series[1].partial_sum(2));
    }
}
