//! Lifting a good simultaneous approximation of the free variables to a
//! good approximation of every polynomial coordinate.
//!
//! For a vector ζ of constructed series with exponent `τ = d′λ + d′ - 1`
//! (d′ the largest coordinate degree) and a schedule denominator
//! `q = b^{a_n}`, the lifted denominator `Q = q^{d′}` approximates all k
//! coordinate values `P_{i,j}(ζ_i)` with exponent at least about λ. The
//! witness records rigorous error enclosures and measured exponents for all
//! coordinates, plus the exact norm identity `‖Qζ_i‖ = q^{d′-1}·‖qζ_i‖`
//! on the identity coordinates.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bounds::Lambda;
use crate::exponent::{exponent_from_bounds, Exponent};
use crate::interval::{nearest_int_distance_interval, NormBounds, RatInterval};
use crate::liouville::LiouvilleSeries;
use crate::manifold::ManifoldSpec;
use crate::rational::{big_pow, one_half, rat, rat_int, Rational};
use crate::real::RefinableReal;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiftError {
    #[error("expected {expected} coordinates, got {got}")]
    CoordinateCount { expected: usize, got: usize },
    #[error("lifting requires series-built coordinates, not exact rationals")]
    ExactCoordinate,
    #[error("coordinates must share one base and schedule")]
    MismatchedSeries,
    #[error("coordinate series were built with exponent {built}, lifting needs {needed}")]
    WrongExponent { built: Rational, needed: Rational },
    #[error("witness index must be at least 2")]
    TermIndexTooSmall,
    #[error("could not refine coordinate (group {group}, poly {poly}) to a decisive enclosure")]
    PrecisionExhausted { group: usize, poly: usize },
}

/// One coordinate of a lift witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateWitness {
    pub group: usize,
    pub poly: usize,
    /// Rigorous enclosure of `‖Q · P(ζ_group)‖`.
    pub err: NormBounds,
    pub exponent: Exponent,
    /// Exponent certified ≥ λ - tolerance.
    pub passed: bool,
}

/// Certified check of `‖Qζ_i‖ ≤ q^{d-1}·‖qζ_i‖` on one identity coordinate.
///
/// Both sides share the scaled series tail, so when both fractional parts
/// are certified below 1/2 the two norms are equal as reals and the
/// inequality holds exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstBlockCheck {
    pub group: usize,
    pub lifted_norm: NormBounds,
    pub scaled_base_norm: NormBounds,
    /// Equality of the two sides was certified exactly.
    pub exact_equality: bool,
    pub holds: bool,
}

/// The full lift witness at one schedule index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftWitness {
    pub term_index: usize,
    pub q: BigInt,
    /// `Q = q^{d′}`.
    pub lifted_q: BigInt,
    pub lift_degree: u32,
    pub tolerance: Rational,
    pub coordinates: Vec<CoordinateWitness>,
    pub first_block: Vec<FirstBlockCheck>,
    pub passed: bool,
}

impl LiftWitness {
    /// The coordinate that caused failure, if any.
    pub fn offending_coordinate(&self) -> Option<&CoordinateWitness> {
        self.coordinates.iter().find(|c| !c.passed)
    }
}

/// Default tolerance for the measured exponents: the hidden constants decay
/// with the schedule, so later witnesses are held to a tighter bar.
pub fn default_tolerance(term_index: usize) -> Rational {
    if term_index <= 3 {
        rat(1, 10)
    } else {
        rat(1, 50)
    }
}

/// The series exponent required for lifting at parameter λ:
/// `τ = d′·λ + d′ - 1`.
pub fn required_tau(manifold: &ManifoldSpec, lambda: &Lambda) -> Rational {
    let d = rat_int(manifold.d_max() as i64);
    &d * lambda.value() + &d - rat_int(1)
}

fn series_of(coord: &RefinableReal) -> Result<&LiouvilleSeries, LiftError> {
    match coord {
        RefinableReal::Liouville(s) => Ok(s),
        RefinableReal::Exact(_) => Err(LiftError::ExactCoordinate),
    }
}

/// Builds and verifies the lift witness at schedule index `n`.
///
/// Passes iff every coordinate's measured exponent is certified at least
/// `λ - eps_tol` and the norm identity holds on each identity coordinate.
pub fn lift_and_verify(
    manifold: &ManifoldSpec,
    zeta: &[RefinableReal],
    lambda: &Lambda,
    n: usize,
    eps_tol: &Rational,
) -> Result<LiftWitness, LiftError> {
    if zeta.len() != manifold.s() as usize {
        return Err(LiftError::CoordinateCount {
            expected: manifold.s() as usize,
            got: zeta.len(),
        });
    }
    if n < 2 {
        return Err(LiftError::TermIndexTooSmall);
    }
    let series: Vec<&LiouvilleSeries> = zeta
        .iter()
        .map(series_of)
        .collect::<Result<_, _>>()?;
    let first = series[0];
    if series
        .iter()
        .any(|s| s.base() != first.base() || s.tau() != first.tau())
    {
        return Err(LiftError::MismatchedSeries);
    }
    let needed = required_tau(manifold, lambda);
    if *first.tau() != needed {
        return Err(LiftError::WrongExponent {
            built: first.tau().clone(),
            needed,
        });
    }

    let d_lift = manifold.d_max();
    let q = first.denominator(n);
    let big_q = big_pow(&q, d_lift);
    let big_q_rat = Rational::from(big_q.clone());
    let threshold = lambda.value() - eps_tol;

    let mut coordinates = Vec::new();
    let mut first_block = Vec::new();
    let mut all_passed = true;

    for (gi, group) in manifold.groups().iter().enumerate() {
        let s = series[gi];
        for (pi, poly) in group.polys().iter().enumerate() {
            // Evaluate ‖Q·P(ζ)‖ from the exact partial sum plus the tail
            // enclosure; escalate the number of included terms until the
            // error enclosure excludes zero and is relatively tight.
            let mut found = None;
            for depth in n..n + 6 {
                let center = s.partial_sum(depth);
                let tail = s.tail_bounds(depth);
                let shifted = poly.taylor_shift(&center);
                // Σ_{m≥1} g_m · tail^m by Horner, then the constant term.
                let mut acc = RatInterval::point(Rational::zero());
                for g in shifted.iter().skip(1).rev() {
                    acc = acc.mul(&tail).add_scalar(g);
                }
                let value = acc.mul(&tail).add_scalar(&shifted[0]);
                let scaled = value.scale(&big_q_rat);
                let err = nearest_int_distance_interval(&scaled);
                if err.is_exact_zero() || !err.lo.is_zero() && tight_enough(&err) {
                    found = Some(err);
                    break;
                }
            }
            let err = found.ok_or(LiftError::PrecisionExhausted {
                group: gi,
                poly: pi,
            })?;
            let exponent = exponent_from_bounds(&big_q, &err)
                .map_err(|_| LiftError::PrecisionExhausted { group: gi, poly: pi })?;
            let passed = exponent.certainly_at_least(&threshold);
            all_passed &= passed;
            coordinates.push(CoordinateWitness {
                group: gi,
                poly: pi,
                err,
                exponent,
                passed,
            });

            if pi == 0 {
                let check = first_block_check(s, &q, &big_q, d_lift, n, gi);
                all_passed &= check.holds;
                first_block.push(check);
            }
        }
    }

    Ok(LiftWitness {
        term_index: n,
        q,
        lifted_q: big_q,
        lift_degree: d_lift,
        tolerance: eps_tol.clone(),
        coordinates,
        first_block,
        passed: all_passed,
    })
}

fn tight_enough(err: &NormBounds) -> bool {
    // Relative width below 2^-20 keeps the exponent error bar negligible.
    err.width() * rat_int(1 << 20) <= err.lo
}

/// On an identity coordinate both `q^d·ζ` and `q^{d-1}·(q·ζ)` reduce modulo
/// 1 to the same scaled tail, because `q·partial_sum(n)` is an integer. The
/// inequality `‖q^d ζ‖ ≤ q^{d-1}‖qζ‖` therefore holds with exact equality
/// once both scaled tails are certified below 1/2.
fn first_block_check(
    s: &LiouvilleSeries,
    q: &BigInt,
    big_q: &BigInt,
    d_lift: u32,
    n: usize,
    group: usize,
) -> FirstBlockCheck {
    let tail = s.tail_bounds(n);
    let lifted = tail.scale(&Rational::from(big_q.clone()));
    let base = tail.scale(&Rational::from(q.clone()));
    let half = one_half();
    let certified = lifted.hi < half && base.hi < half;
    let lifted_norm = nearest_int_distance_interval(&lifted);
    let base_norm = nearest_int_distance_interval(&base);
    let factor = Rational::from(big_pow(q, d_lift - 1));
    let scaled_base = NormBounds::new(&base_norm.lo * &factor, &base_norm.hi * &factor);
    // Fallback when the tails are not yet small: compare enclosures outright.
    let holds = certified || lifted_norm.hi <= scaled_base.lo;
    FirstBlockCheck {
        group,
        lifted_norm,
        scaled_base_norm: scaled_base,
        exact_equality: certified,
        holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liouville::build_liouville;
    use crate::manifold::tests::{m2, monomial};
    use crate::manifold::{ManifoldSpec, VariableGroup};
    use crate::poly::Polynomial;
    use crate::real::norm_bounds_at;
    use alloc::vec;

    fn parabola() -> ManifoldSpec {
        ManifoldSpec::new(vec![VariableGroup::new(
            "x",
            vec![Polynomial::identity(), monomial(2)],
        )
        .unwrap()])
        .unwrap()
    }

    #[test]
    fn required_tau_examples() {
        let lambda = Lambda::new(rat_int(3)).unwrap();
        assert_eq!(required_tau(&parabola(), &lambda), rat_int(7));
        let lambda = Lambda::new(rat_int(2)).unwrap();
        assert_eq!(required_tau(&m2(), &lambda), rat_int(11));
    }

    #[test]
    fn parabola_witness_passes() {
        let m = parabola();
        let lambda = Lambda::new(rat_int(3)).unwrap();
        let (zeta, _) = build_liouville(2, rat_int(7), 4).unwrap();
        let w = lift_and_verify(&m, &[zeta.clone()], &lambda, 3, &rat(1, 10)).unwrap();
        assert!(w.passed, "witness failed: {:?}", w.offending_coordinate());
        assert_eq!(w.coordinates.len(), 2);
        assert!(w.first_block[0].exact_equality);

        // Oracle: recompute each coordinate error through the generic
        // enclosure path and check the witness enclosures overlap it.
        for c in &w.coordinates {
            let poly = &m.groups()[c.group].polys()[c.poly];
            let value = match &zeta {
                RefinableReal::Liouville(s) => {
                    let iv = s.enclosure(4096).as_interval();
                    poly.eval_interval(&iv)
                }
                _ => unreachable!(),
            };
            let scaled = value.scale(&Rational::from(w.lifted_q.clone()));
            let oracle = nearest_int_distance_interval(&scaled);
            assert!(
                oracle.lo <= c.err.hi && c.err.lo <= oracle.hi,
                "disjoint enclosures for coordinate {:?}",
                (c.group, c.poly)
            );
        }
    }

    #[test]
    fn degree_one_manifold_lift_is_identity() {
        let m = ManifoldSpec::new(vec![
            VariableGroup::new("x", vec![Polynomial::identity()]).unwrap(),
        ])
        .unwrap();
        let lambda = Lambda::new(rat_int(2)).unwrap();
        // d = 1: τ = λ and Q = q.
        assert_eq!(required_tau(&m, &lambda), rat_int(2));
        let (zeta, _) = build_liouville(2, rat_int(2), 4).unwrap();
        let w = lift_and_verify(&m, &[zeta], &lambda, 3, &rat(1, 10)).unwrap();
        assert_eq!(w.q, w.lifted_q);
        assert!(w.passed);
    }

    #[test]
    fn rejections() {
        let m = parabola();
        let lambda = Lambda::new(rat_int(3)).unwrap();
        let (zeta, _) = build_liouville(2, rat_int(7), 4).unwrap();
        assert!(matches!(
            lift_and_verify(&m, &[], &lambda, 3, &rat(1, 10)),
            Err(LiftError::CoordinateCount { .. })
        ));
        assert!(matches!(
            lift_and_verify(&m, &[zeta.clone()], &lambda, 1, &rat(1, 10)),
            Err(LiftError::TermIndexTooSmall)
        ));
        // Wrong τ.
        let (wrong, _) = build_liouville(2, rat_int(5), 4).unwrap();
        assert!(matches!(
            lift_and_verify(&m, &[wrong], &lambda, 3, &rat(1, 10)),
            Err(LiftError::WrongExponent { .. })
        ));
        // Exact coordinates cannot be lifted.
        assert!(matches!(
            lift_and_verify(
                &m,
                &[RefinableReal::exact(rat(1, 3))],
                &lambda,
                3,
                &rat(1, 10)
            ),
            Err(LiftError::ExactCoordinate)
        ));
    }

    #[test]
    fn lift_soundness_across_indices() {
        // e_j(q_n^d) ≥ λ - 2/a_n for every coordinate when τ = dλ + d - 1.
        let m = parabola();
        let lambda = Lambda::new(rat_int(3)).unwrap();
        let (zeta, _) = build_liouville(3, rat_int(7), 5).unwrap();
        let series = match &zeta {
            RefinableReal::Liouville(s) => s.clone(),
            _ => unreachable!(),
        };
        for n in 2..=4 {
            let slack = rat_int(2) / rat_int(series.schedule_exponent(n) as i64);
            let w = lift_and_verify(&m, &[zeta.clone()], &lambda, n, &slack).unwrap();
            assert!(w.passed, "n={n}");
        }
    }

    #[test]
    fn first_block_agrees_with_direct_norms() {
        let m = parabola();
        let lambda = Lambda::new(rat_int(3)).unwrap();
        let (zeta, _) = build_liouville(2, rat_int(7), 4).unwrap();
        let w = lift_and_verify(&m, &[zeta.clone()], &lambda, 3, &rat(1, 10)).unwrap();
        let check = &w.first_block[0];
        // Direct enclosure of ‖Qζ‖ from the evaluator must overlap.
        let direct = norm_bounds_at(&zeta, &w.lifted_q, 4096);
        assert!(direct.lo <= check.lifted_norm.hi && check.lifted_norm.lo <= direct.hi);
    }
}
