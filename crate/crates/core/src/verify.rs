//! Empirical verification of the divisibility criterion and of the lcm
//! structure of simultaneous solutions.
//!
//! The divisibility criterion: for a curve with polynomials of maximal
//! degree `d_k ≥ 2` and diameter `t`, every `x` whose errors satisfy
//! `max_j ‖P_j(ζ)x‖ < C·x^{-t}` with a small enough constant `C` has
//! `x_1^{d_k} | x`, where `x_1` is the Δ-adjusted reduced denominator of
//! `y/x`. The derived constant [`crate::manifold::CurveConstants::c_valid`]
//! is always small enough, so certified runs must produce only passing
//! reports.
//!
//! The lcm structure: on a product of such curves, every denominator whose
//! full coordinate system qualifies (and is large enough that each group's
//! system implies the criterion's hypothesis) decomposes per group as
//! `q = M_i·q_i^{d_i}`, and `f = lcm(q_1, …, q_s)` satisfies `f^d | q`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bounds::Lambda;
use crate::interval::{nearest_int_distance_interval, NormBounds};
use crate::manifold::{curve_constants, x1_of, CurveConstants, ManifoldSpec, VariableGroup};
use crate::poly::Polynomial;
use crate::rational::{big_pow, round_ties_even, Rational};
use crate::real::RefinableReal;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("the divisibility criterion needs a curve of maximal degree at least 2")]
    CurveDegreeTooSmall,
    #[error("λ - ε must exceed the manifold diameter t′ = {t_prime}")]
    LambdaGapTooSmall { t_prime: u32 },
    #[error("expected {expected} point coordinates, got {got}")]
    CoordinateCount { expected: usize, got: usize },
    #[error("x_max must be at least 1")]
    EmptyRange,
}

/// One qualifying denominator of a curve scan and its divisibility check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub x: BigInt,
    /// Nearest integer to `ζ·x` (ties to even).
    pub y: BigInt,
    /// Reduced denominator of `y/x`.
    pub x0: BigInt,
    /// `x0 / gcd(x0, Δ)`.
    pub x1: BigInt,
    pub d_k: u32,
    /// `x1^{d_k}` divides `x`.
    pub passed: bool,
    /// The cofactor `M = x / x1^{d_k}` when the check passes.
    pub cofactor: Option<BigInt>,
}

/// Frozen parameters of a divisibility run, shared across range blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaPlan {
    pub constants: CurveConstants,
    pub c_used: Rational,
    /// True when the constant exceeds the derived valid one; reports may
    /// then legitimately contain failures.
    pub heuristic: bool,
    pub diameter: u32,
    pub d_k: u32,
}

/// Outcome of a divisibility verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaOutcome {
    pub plan: LemmaPlan,
    pub reports: Vec<DivisibilityReport>,
    /// Denominators whose qualification stayed undecidable at the cap.
    pub unresolved: Vec<u64>,
    pub all_passed: bool,
}

pub fn lemma_plan(
    curve: &VariableGroup,
    zeta: &RefinableReal,
    c_override: Option<Rational>,
) -> Result<LemmaPlan, VerifyError> {
    if curve.max_degree() < 2 {
        return Err(VerifyError::CurveDegreeTooSmall);
    }
    let constants = curve_constants(curve, zeta);
    let (c_used, heuristic) = match c_override {
        Some(c) => {
            let heuristic = c > constants.c_valid;
            (c, heuristic)
        }
        None => (constants.c_valid.clone(), false),
    };
    Ok(LemmaPlan {
        c_used,
        heuristic,
        diameter: curve.diameter(),
        d_k: curve.max_degree(),
        constants,
    })
}

/// Rigorous per-coordinate error bounds for `‖value·x‖`, refined on demand.
enum CoordValue<'a> {
    Exact(Rational),
    Series(&'a Polynomial, &'a crate::liouville::LiouvilleSeries),
}

impl CoordValue<'_> {
    fn of<'a>(poly: &'a Polynomial, zeta: &'a RefinableReal) -> CoordValue<'a> {
        match zeta {
            RefinableReal::Exact(r) => CoordValue::Exact(poly.eval(r)),
            RefinableReal::Liouville(s) => CoordValue::Series(poly, s),
        }
    }

    fn norm_bounds(&self, x: &BigInt, precision: u32) -> NormBounds {
        match self {
            CoordValue::Exact(v) => NormBounds::exact(crate::rational::nearest_int_distance(
                &(Rational::from(x.clone()) * v),
            )),
            CoordValue::Series(poly, series) => {
                let iv = poly.eval_interval(&series.enclosure(precision).as_interval());
                nearest_int_distance_interval(&iv.scale(&Rational::from(x.clone())))
            }
        }
    }

    fn is_exact(&self) -> bool {
        matches!(self, CoordValue::Exact(_))
    }
}

/// Three-way qualification of one coordinate against a threshold, strict
/// (`<`) or non-strict (`≤`).
fn qualify_coord(
    value: &CoordValue<'_>,
    x: &BigInt,
    passes: &dyn Fn(&Rational) -> bool,
    precision_cap: u32,
) -> Option<bool> {
    if value.is_exact() {
        let b = value.norm_bounds(x, 0);
        return Some(passes(&b.hi));
    }
    let mut m = 64u32.min(precision_cap);
    loop {
        let b = value.norm_bounds(x, m);
        if passes(&b.hi) {
            return Some(true);
        }
        if !passes(&b.lo) {
            return Some(false);
        }
        if m >= precision_cap {
            return None;
        }
        m = (m * 2).min(precision_cap);
    }
}

/// Nearest integer to `ζ·x`, refined until the enclosure pins it down.
fn nearest_integer_to_scaled(
    zeta: &RefinableReal,
    x: &BigInt,
    precision_cap: u32,
) -> Option<BigInt> {
    match zeta {
        RefinableReal::Exact(r) => Some(round_ties_even(&(Rational::from(x.clone()) * r))),
        RefinableReal::Liouville(_) => {
            let mut m = 64u32.min(precision_cap);
            loop {
                let iv = zeta
                    .enclosure(m)
                    .as_interval()
                    .scale(&Rational::from(x.clone()));
                let lo = round_ties_even(&iv.lo);
                let hi = round_ties_even(&iv.hi);
                if lo == hi {
                    return Some(lo);
                }
                if m >= precision_cap {
                    return None;
                }
                m = (m * 2).min(precision_cap);
            }
        }
    }
}

fn divisibility_report(
    x: u64,
    y: BigInt,
    delta: &BigInt,
    d_k: u32,
) -> DivisibilityReport {
    let x_big = BigInt::from(x);
    let x0 = &x_big / x_big.gcd(&y);
    let x1 = x1_of(&x0, delta);
    let power = big_pow(&x1, d_k);
    let passed = (&x_big % &power).is_zero();
    let cofactor = passed.then(|| &x_big / &power);
    DivisibilityReport {
        x: x_big,
        y,
        x0,
        x1,
        d_k,
        passed,
        cofactor,
    }
}

/// Scans `start..=end` for qualifying denominators and checks each one.
/// Blocks are independent; concatenating block outputs by ascending start
/// reproduces the single-block run exactly.
pub fn verify_lemma_range(
    curve: &VariableGroup,
    zeta: &RefinableReal,
    plan: &LemmaPlan,
    start: u64,
    end: u64,
    precision_cap: u32,
) -> (Vec<DivisibilityReport>, Vec<u64>) {
    let values: Vec<CoordValue<'_>> = curve
        .polys()
        .iter()
        .map(|p| CoordValue::of(p, zeta))
        .collect();
    let mut reports = Vec::new();
    let mut unresolved = Vec::new();
    'next_x: for x in start.max(1)..=end {
        let x_big = BigInt::from(x);
        // Threshold C·x^{-t}: err < C/x^t  <=>  err·x^t < C.
        let x_pow = Rational::from(big_pow(&x_big, plan.diameter));
        let passes = |err: &Rational| err * &x_pow < plan.c_used;
        for v in &values {
            match qualify_coord(v, &x_big, &passes, precision_cap) {
                Some(true) => {}
                Some(false) => continue 'next_x,
                None => {
                    unresolved.push(x);
                    continue 'next_x;
                }
            }
        }
        let Some(y) = nearest_integer_to_scaled(zeta, &x_big, precision_cap) else {
            unresolved.push(x);
            continue;
        };
        reports.push(divisibility_report(x, y, &plan.constants.delta, plan.d_k));
    }
    (reports, unresolved)
}

/// Full divisibility verification over `1..=x_max`.
///
/// Without an override the derived valid constant is used and every report
/// must pass; override runs with a larger constant are labeled heuristic and
/// may legitimately contain failures.
pub fn verify_lemma(
    curve: &VariableGroup,
    zeta: &RefinableReal,
    x_max: u64,
    c_override: Option<Rational>,
    precision_cap: u32,
) -> Result<LemmaOutcome, VerifyError> {
    if x_max == 0 {
        return Err(VerifyError::EmptyRange);
    }
    let plan = lemma_plan(curve, zeta, c_override)?;
    let (reports, unresolved) = verify_lemma_range(curve, zeta, &plan, 1, x_max, precision_cap);
    let all_passed = reports.iter().all(|r| r.passed);
    Ok(LemmaOutcome {
        plan,
        reports,
        unresolved,
        all_passed,
    })
}

/// Decomposition of one qualifying denominator within one variable group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDecomposition {
    /// Δ-adjusted reduced denominator recovered from the identity coordinate.
    pub q_i: BigInt,
    /// Nearest integer to `q·ζ_i`.
    pub y_i: BigInt,
    /// Group degree `d_i` (largest degree in the group).
    pub d_i: u32,
    /// `q_i^{d_i}` divides `q`.
    pub power_divides: bool,
    /// `M_i = q / q_i^{d_i}` when it divides.
    pub m_i: Option<BigInt>,
}

/// One qualifying denominator of a full-system scan and its lcm check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmStructureReport {
    pub q: BigInt,
    pub groups: Vec<GroupDecomposition>,
    /// `f = lcm(q_1, …, q_s)`.
    pub f: BigInt,
    /// `d = min_i d_i`, the exponent of the lcm divisibility.
    pub d: u32,
    /// `f^d` divides `q`.
    pub passed: bool,
}

/// Frozen parameters of an lcm-structure run, shared across range blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmPlan {
    /// `λ - ε` as an exact fraction `p/r`.
    pub exponent: Rational,
    /// Smallest q at which every group's qualifying system implies the
    /// divisibility criterion's hypothesis; the lcm decomposition is
    /// asserted only from this point on.
    pub cutoff: u64,
    pub d: u32,
    pub degrees: Vec<u32>,
    pub deltas: Vec<BigInt>,
    /// Non-monic groups make the run empirical: the Δ-adjusted structure is
    /// checked but not asserted sound.
    pub empirical: bool,
}

/// Outcome of an lcm-structure verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmOutcome {
    pub plan: LcmPlan,
    pub reports: Vec<LcmStructureReport>,
    /// Denominators whose systems qualify but sit below the cutoff; reported
    /// for transparency, with no divisibility claim attached.
    pub below_cutoff: Vec<u64>,
    pub unresolved: Vec<u64>,
    pub all_passed: bool,
}

pub fn lcm_plan(
    manifold: &ManifoldSpec,
    zeta: &[RefinableReal],
    lambda: &Lambda,
    eps: &Rational,
) -> Result<LcmPlan, VerifyError> {
    if zeta.len() != manifold.s() as usize {
        return Err(VerifyError::CoordinateCount {
            expected: manifold.s() as usize,
            got: zeta.len(),
        });
    }
    let t_prime = manifold.t_prime();
    let exponent = lambda.value() - eps;
    if exponent <= Rational::from(BigInt::from(t_prime)) {
        return Err(VerifyError::LambdaGapTooSmall { t_prime });
    }
    // Per-group cutoff: q^{-(λ-ε)} < C_i·q^{-t_i}, i.e. q^{λ-ε-t_i} > 1/C_i.
    let mut cutoff = 1u64;
    for (group, z) in manifold.groups().iter().zip(zeta) {
        if group.max_degree() < 2 {
            continue; // the decomposition is trivial for identity-only groups
        }
        let c = curve_constants(group, z).c_valid;
        let margin = &exponent - Rational::from(BigInt::from(group.diameter()));
        cutoff = cutoff.max(smallest_power_exceeding(&margin, &c));
    }
    Ok(LcmPlan {
        exponent,
        cutoff,
        d: manifold.d_min(),
        degrees: manifold
            .groups()
            .iter()
            .map(VariableGroup::max_degree)
            .collect(),
        deltas: manifold.groups().iter().map(VariableGroup::delta).collect(),
        empirical: !manifold.is_monic(),
    })
}

/// Smallest `q ≥ 1` with `q^margin > 1/c`, for positive rational `margin`.
fn smallest_power_exceeding(margin: &Rational, c: &Rational) -> u64 {
    let holds = |q: u64| -> bool {
        // q^{p/r} > 1/c  <=>  q^p · c_num^r > c_den^r (all positive).
        let p: u32 = margin.numer().try_into().expect("small exponent");
        let r: u32 = margin.denom().try_into().expect("small exponent");
        let lhs = big_pow(&BigInt::from(q), p) * big_pow(c.numer(), r);
        lhs > big_pow(c.denom(), r)
    };
    let mut hi = 1u64;
    while !holds(hi) {
        hi = hi.saturating_mul(2);
    }
    let mut lo = hi / 2;
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if holds(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Scans `start..=end` for denominators whose full coordinate system
/// qualifies (errors `≤ q^{-(λ-ε)}` on all k coordinates) and checks the
/// per-group decomposition and lcm divisibility of each one at or above the
/// plan cutoff.
pub fn verify_lcm_range(
    manifold: &ManifoldSpec,
    zeta: &[RefinableReal],
    plan: &LcmPlan,
    start: u64,
    end: u64,
    precision_cap: u32,
) -> (Vec<LcmStructureReport>, Vec<u64>, Vec<u64>) {
    let coords: Vec<(usize, CoordValue<'_>)> = manifold
        .coordinates()
        .map(|(gi, _, poly)| (gi, CoordValue::of(poly, &zeta[gi])))
        .collect();
    let p: u32 = plan.exponent.numer().try_into().expect("small exponent");
    let r: u32 = plan.exponent.denom().try_into().expect("small exponent");
    let mut reports = Vec::new();
    let mut below_cutoff = Vec::new();
    let mut unresolved = Vec::new();
    'next_q: for q in start.max(1)..=end {
        let q_big = BigInt::from(q);
        let q_pow = big_pow(&q_big, p);
        // err ≤ q^{-p/r}  <=>  err_num^r · q^p ≤ err_den^r.
        let passes = |err: &Rational| {
            big_pow(err.numer(), r) * &q_pow <= big_pow(err.denom(), r)
        };
        for (_, v) in &coords {
            match qualify_coord(v, &q_big, &passes, precision_cap) {
                Some(true) => {}
                Some(false) => continue 'next_q,
                None => {
                    unresolved.push(q);
                    continue 'next_q;
                }
            }
        }
        if q < plan.cutoff {
            below_cutoff.push(q);
            continue;
        }
        let mut groups = Vec::with_capacity(zeta.len());
        let mut f = BigInt::one();
        for (i, z) in zeta.iter().enumerate() {
            let Some(y_i) = nearest_integer_to_scaled(z, &q_big, precision_cap) else {
                unresolved.push(q);
                continue 'next_q;
            };
            let x0 = &q_big / q_big.gcd(&y_i);
            let q_i = x1_of(&x0, &plan.deltas[i]);
            let d_i = plan.degrees[i];
            let power = big_pow(&q_i, d_i);
            let power_divides = (&q_big % &power).is_zero();
            let m_i = power_divides.then(|| &q_big / &power);
            f = f.lcm(&q_i);
            groups.push(GroupDecomposition {
                q_i,
                y_i,
                d_i,
                power_divides,
                m_i,
            });
        }
        let passed = (&q_big % big_pow(&f, plan.d)).is_zero();
        reports.push(LcmStructureReport {
            q: q_big,
            groups,
            f,
            d: plan.d,
            passed,
        });
    }
    (reports, below_cutoff, unresolved)
}

/// Full lcm-structure verification over `1..=q_max`.
pub fn verify_lcm_structure(
    manifold: &ManifoldSpec,
    zeta: &[RefinableReal],
    lambda: &Lambda,
    eps: &Rational,
    q_max: u64,
    precision_cap: u32,
) -> Result<LcmOutcome, VerifyError> {
    if q_max == 0 {
        return Err(VerifyError::EmptyRange);
    }
    let plan = lcm_plan(manifold, zeta, lambda, eps)?;
    let (reports, below_cutoff, unresolved) =
        verify_lcm_range(manifold, zeta, &plan, 1, q_max, precision_cap);
    let all_passed = reports.iter().all(|r| r.passed);
    Ok(LcmOutcome {
        plan,
        reports,
        below_cutoff,
        unresolved,
        all_passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifold::tests::monomial;
    use crate::poly::Polynomial;
    use crate::rational::{rat, rat_int};
    use alloc::vec;

    fn parabola_group() -> VariableGroup {
        VariableGroup::new("x", vec![Polynomial::identity(), monomial(2)]).unwrap()
    }

    #[test]
    fn lemma_example_third() {
        // Curve (X, X²) at ζ = 1/3 with C = 1/8: qualifying x are exactly
        // the multiples of 9, each passing with x1 = 3.
        let curve = parabola_group();
        let zeta = RefinableReal::exact(rat(1, 3));
        let out = verify_lemma(&curve, &zeta, 100, Some(rat(1, 8)), 64).unwrap();
        assert!(!out.plan.heuristic); // 1/8 is below the derived constant 3/10
        let xs: Vec<u64> = out
            .reports
            .iter()
            .map(|r| (&r.x).try_into().unwrap())
            .collect();
        assert_eq!(xs, vec![9, 18, 27, 36, 45, 54, 63, 72, 81, 90, 99]);
        assert!(out.all_passed);
        for r in &out.reports {
            assert_eq!(r.x0, BigInt::from(3));
            assert_eq!(r.x1, BigInt::from(3));
            assert_eq!(r.cofactor, Some(&r.x / BigInt::from(9)));
        }
    }

    #[test]
    fn lemma_half_and_integer_points() {
        let curve = parabola_group();
        // ζ = 1/2, x = 4: y = 2, x0 = 2, 2² | 4.
        let out = verify_lemma(
            &curve,
            &RefinableReal::exact(rat(1, 2)),
            4,
            None,
            64,
        )
        .unwrap();
        let r4 = out.reports.iter().find(|r| r.x == BigInt::from(4)).unwrap();
        assert_eq!(r4.y, BigInt::from(2));
        assert_eq!(r4.x0, BigInt::from(2));
        assert!(r4.passed);

        // Integer ζ: every x qualifies with x0 = 1.
        let out = verify_lemma(
            &curve,
            &RefinableReal::exact(rat_int(7)),
            50,
            None,
            64,
        )
        .unwrap();
        assert_eq!(out.reports.len(), 50);
        assert!(out.all_passed);
        assert!(out.reports.iter().all(|r| r.x0.is_one()));
    }

    #[test]
    fn lemma_rejects_degree_one() {
        let curve = VariableGroup::new("x", vec![Polynomial::identity()]).unwrap();
        assert!(matches!(
            verify_lemma(&curve, &RefinableReal::exact(rat(1, 3)), 10, None, 64),
            Err(VerifyError::CurveDegreeTooSmall)
        ));
    }

    #[test]
    fn heuristic_label_follows_constant() {
        let curve = parabola_group();
        let zeta = RefinableReal::exact(rat(1, 3));
        let plan = lemma_plan(&curve, &zeta, Some(rat(10, 1))).unwrap();
        assert!(plan.heuristic);
        let plan = lemma_plan(&curve, &zeta, Some(rat(1, 100))).unwrap();
        assert!(!plan.heuristic);
    }

    fn two_parabolas() -> ManifoldSpec {
        ManifoldSpec::new(vec![
            VariableGroup::new("x", vec![Polynomial::identity(), monomial(2)]).unwrap(),
            VariableGroup::new("y", vec![Polynomial::identity(), monomial(2)]).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn lcm_example_half_third() {
        let m = two_parabolas();
        let zeta = vec![
            RefinableReal::exact(rat(1, 2)),
            RefinableReal::exact(rat(1, 3)),
        ];
        let lambda = Lambda::new(rat_int(3)).unwrap();
        let out = verify_lcm_structure(&m, &zeta, &lambda, &rat(1, 10), 2000, 64).unwrap();
        assert!(out.all_passed);
        assert!(!out.plan.empirical);
        let qs: Vec<u64> = out
            .reports
            .iter()
            .map(|r| (&r.q).try_into().unwrap())
            .collect();
        let expected: Vec<u64> = (1..=2000 / 36).map(|m| 36 * m).collect();
        assert_eq!(qs, expected);
        for r in &out.reports {
            assert_eq!(r.f, BigInt::from(6));
            assert_eq!(r.d, 2);
            assert_eq!(r.groups[0].q_i, BigInt::from(2));
            assert_eq!(r.groups[1].q_i, BigInt::from(3));
            assert!(r.groups.iter().all(|g| g.power_divides));
        }
        // q = 1 qualifies trivially but sits below the cutoff.
        assert!(out.below_cutoff.contains(&1));
    }

    #[test]
    fn lcm_integer_point_is_trivial() {
        let m = two_parabolas();
        let zeta = vec![
            RefinableReal::exact(rat_int(2)),
            RefinableReal::exact(rat_int(5)),
        ];
        let lambda = Lambda::new(rat_int(2)).unwrap();
        let out = verify_lcm_structure(&m, &zeta, &lambda, &rat(1, 10), 100, 64).unwrap();
        assert!(out.all_passed);
        for r in &out.reports {
            assert!(r.f.is_one());
        }
    }

    #[test]
    fn lcm_single_group_matches_divisibility_conclusions() {
        // One group: f = q_1 and the lcm check is q_1^{d_1} | q.
        let m = ManifoldSpec::new(vec![parabola_group()]).unwrap();
        let zeta = vec![RefinableReal::exact(rat(1, 3))];
        let lambda = Lambda::new(rat_int(2)).unwrap();
        let out = verify_lcm_structure(&m, &zeta, &lambda, &rat(1, 10), 500, 64).unwrap();
        assert!(out.all_passed);
        assert!(!out.reports.is_empty());
        for r in &out.reports {
            assert_eq!(r.f, r.groups[0].q_i);
            assert_eq!(r.groups[0].q_i, BigInt::from(3));
            assert!(r.groups[0].power_divides);
        }
    }

    #[test]
    fn lcm_rejects_small_lambda() {
        let m = two_parabolas();
        let zeta = vec![
            RefinableReal::exact(rat(1, 2)),
            RefinableReal::exact(rat(1, 3)),
        ];
        let lambda = Lambda::new(rat_int(1)).unwrap();
        assert!(matches!(
            verify_lcm_structure(&m, &zeta, &lambda, &rat(1, 10), 100, 64),
            Err(VerifyError::LambdaGapTooSmall { t_prime: 1 })
        ));
    }

    #[test]
    fn block_split_matches_whole_range() {
        let curve = parabola_group();
        let zeta = RefinableReal::exact(rat(2, 7));
        let plan = lemma_plan(&curve, &zeta, None).unwrap();
        let (whole, _) = verify_lemma_range(&curve, &zeta, &plan, 1, 3000, 64);
        let (mut a, _) = verify_lemma_range(&curve, &zeta, &plan, 1, 1700, 64);
        let (b, _) = verify_lemma_range(&curve, &zeta, &plan, 1701, 3000, 64);
        a.extend(b);
        assert_eq!(whole, a);
    }

    #[test]
    fn cutoff_power_search() {
        // margin = 1, c = 1/10: smallest q with q > 10 is 11.
        assert_eq!(smallest_power_exceeding(&rat_int(1), &rat(1, 10)), 11);
        // margin = 9/10, c = 1/4: q^{9/10} > 4 first holds at q = 5
        // (4^9 = 262144 ≤ 4^10, 5^9 = 1953125 > 4^10 = 1048576).
        assert_eq!(smallest_power_exceeding(&rat(9, 10), &rat(1, 4)), 5);
    }
}
