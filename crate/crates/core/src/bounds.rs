//! The closed-form dimension-bound calculus.
//!
//! Every bound is an exact rational with an explicit validity range; at a
//! range boundary the bound is reported undefined with an explanatory note
//! (the underlying statements hold for strict inequalities). Nothing here
//! touches floating point.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::manifold::DegreeProfile;
use crate::rational::{rat_int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("the approximation parameter must be positive")]
    NonPositiveLambda,
    #[error("projection exponents need λ > t′ = {t_prime}")]
    LambdaNotAboveDiameter { t_prime: u32 },
}

/// The approximation parameter λ > 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Lambda(Rational);

impl Lambda {
    pub fn new(value: Rational) -> Result<Self, BoundsError> {
        if !value.is_positive() {
            return Err(BoundsError::NonPositiveLambda);
        }
        Ok(Self(value))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

/// `(k+1)/(1+λ)` for λ ≥ 1/k; below that the ambient set is all of `R^k`
/// and the bound is reported undefined.
pub fn jarnik_dimension(k: u32, lambda: &Lambda) -> Option<Rational> {
    debug_assert!(k >= 1);
    if lambda.value() * rat_int(k as i64) >= rat_int(1) {
        Some(rat_int(k as i64 + 1) / (rat_int(1) + lambda.value()))
    } else {
        None
    }
}

/// Lower bound `(s+1)/(d_max·(λ+1))` for λ ≥ 1/s, where `d_max` is the
/// maximal total degree among the coordinate polynomials.
pub fn lower_bound(s: u32, d_max: u32, lambda: &Lambda) -> Option<Rational> {
    debug_assert!(s >= 1 && d_max >= 1);
    if lambda.value() * rat_int(s as i64) >= rat_int(1) {
        Some(rat_int(s as i64 + 1) / (rat_int(d_max as i64) * (lambda.value() + rat_int(1))))
    } else {
        None
    }
}

/// The structural upper bound `(s+1)/(1+λ)` for λ ≥ 1/s: projecting onto the
/// s free coordinates is locally bi-Lipschitz.
pub fn trivial_upper(s: u32, lambda: &Lambda) -> Option<Rational> {
    debug_assert!(s >= 1);
    if lambda.value() * rat_int(s as i64) >= rat_int(1) {
        Some(rat_int(s as i64 + 1) / (rat_int(1) + lambda.value()))
    } else {
        None
    }
}

/// Validity threshold for the unconditional upper bound: `λ > max(t′, 1)`.
///
/// For manifolds whose groups all have two polynomials this coincides with
/// `λ > max(d′-1, 1)` (the diameter of such a group is its top degree minus
/// one); the uniform rule covers both statements on their shared domain.
fn upper_bound_valid(profile: &DegreeProfile, lambda: &Lambda) -> bool {
    let threshold = rat_int(profile.t_prime().max(1) as i64);
    *lambda.value() > threshold
}

/// Unconditional upper bound `(s+1)/(d·(λ+1))` for λ > max(t′, 1), with
/// `d` the smallest per-group maximal degree.
pub fn upper_bound(profile: &DegreeProfile, lambda: &Lambda) -> Option<Rational> {
    if !upper_bound_valid(profile, lambda) {
        return None;
    }
    Some(
        rat_int(profile.s() as i64 + 1)
            / (rat_int(profile.d_min() as i64) * (lambda.value() + rat_int(1))),
    )
}

/// Conditional upper bound `(2/(1+λ))·Σ_i 1/d_{i,σ_i}` for λ > t′, valid
/// only under the product-dimension conjecture; always flagged conditional
/// and never merged into the unconditional bound.
pub fn conditional_upper(profile: &DegreeProfile, lambda: &Lambda) -> Option<Rational> {
    if *lambda.value() <= rat_int(profile.t_prime() as i64) {
        return None;
    }
    let sum: Rational = profile
        .group_max_degrees()
        .iter()
        .map(|&d| rat_int(1) / rat_int(d as i64))
        .sum();
    Some(rat_int(2) / (rat_int(1) + lambda.value()) * sum)
}

/// The exponents appearing in the projection inclusions for λ > t′.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionExponents {
    /// Per-variable product inclusion: coordinate `i` projects into the
    /// simply-approximable set with exponent `d_{i,σ_i}·λ + d_{i,σ_i} - 1`.
    pub per_variable: Vec<Rational>,
    /// Exponent `d·λ + d - 1` of the simultaneous set containing the
    /// projection.
    pub simultaneous_target: Rational,
    /// Exponent `d′·λ + d′ - 1` of the simultaneous set contained in the
    /// projection (lifting direction).
    pub lifting_source: Rational,
}

pub fn projection_exponents(
    profile: &DegreeProfile,
    lambda: &Lambda,
) -> Result<ProjectionExponents, BoundsError> {
    let t_prime = profile.t_prime();
    if *lambda.value() <= rat_int(t_prime as i64) {
        return Err(BoundsError::LambdaNotAboveDiameter { t_prime });
    }
    let raise = |d: u32| rat_int(d as i64) * lambda.value() + rat_int(d as i64 - 1);
    Ok(ProjectionExponents {
        per_variable: profile.group_max_degrees().iter().map(|&d| raise(d)).collect(),
        simultaneous_target: raise(profile.d_min()),
        lifting_source: raise(profile.d_max()),
    })
}

/// All bounds at one parameter, with validity notes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub lambda: Rational,
    pub jarnik_ambient: Option<Rational>,
    pub trivial_upper: Option<Rational>,
    pub lower: Option<Rational>,
    pub upper_unconditional: Option<Rational>,
    /// Valid only under the product-dimension conjecture; see `notes`.
    pub upper_conditional: Option<Rational>,
    pub equality: bool,
    pub per_variable_exponents: Vec<Rational>,
    pub notes: BTreeMap<String, String>,
}

/// Input to [`full_report`]: either the full separate-variable structure, or
/// just `(s, d_max)` for a general manifold where only the maximal total
/// degree enters the lower bound.
#[derive(Clone, Debug)]
pub enum ReportInput<'a> {
    Product(&'a DegreeProfile),
    General { s: u32, d_max: u32 },
}

pub fn full_report(input: ReportInput<'_>, lambda: &Lambda) -> BoundReport {
    let mut notes = BTreeMap::new();
    let mut note = |key: &str, text: String| {
        notes.insert(String::from(key), text);
    };

    let (s, d_max, profile) = match input {
        ReportInput::Product(p) => (p.s(), p.d_max(), Some(p)),
        ReportInput::General { s, d_max } => (s, d_max, None),
    };

    let jarnik_ambient = match profile {
        Some(p) => {
            let k = p.k();
            let j = jarnik_dimension(k, lambda);
            if j.is_none() {
                note(
                    "jarnik_ambient",
                    format!("ambient: for λ < 1/{k} the set is all of R^{k}, dimension {k}"),
                );
            }
            j
        }
        None => {
            note(
                "jarnik_ambient",
                String::from("undefined: the ambient coordinate count is not determined by (s, d_max)"),
            );
            None
        }
    };

    let lower = lower_bound(s, d_max, lambda);
    if lower.is_none() {
        note("lower", format!("undefined: requires λ ≥ 1/{s}"));
    }
    let trivial = trivial_upper(s, lambda);
    if trivial.is_none() {
        note("trivial_upper", format!("undefined: requires λ ≥ 1/{s}"));
    }

    let (upper_unconditional, upper_conditional, equality, per_variable_exponents) =
        match profile {
            Some(p) => {
                let upper = upper_bound(p, lambda);
                if upper.is_none() {
                    note(
                        "upper_unconditional",
                        format!("undefined: requires λ > max(t′, 1) = {}", p.t_prime().max(1)),
                    );
                }
                let cond = conditional_upper(p, lambda);
                match &cond {
                    Some(_) => note(
                        "upper_conditional",
                        String::from(
                            "valid only under the product-dimension conjecture; never merged into the unconditional bound",
                        ),
                    ),
                    None => note(
                        "upper_conditional",
                        format!("undefined: requires λ > t′ = {}", p.t_prime()),
                    ),
                }
                if let (Some(u), Some(c)) = (&upper, &cond) {
                    note(
                        "comparison",
                        if c < u {
                            String::from("conditional < unconditional: the conditional bound is stronger here")
                        } else {
                            String::from("unconditional ≤ conditional: the unconditional bound is stronger here")
                        },
                    );
                }
                let equality = upper.is_some() && p.d_min() == p.d_max();
                if equality {
                    note(
                        "equality",
                        String::from("all group degrees agree: lower and upper bounds coincide, the dimension is exact"),
                    );
                }
                let pve = match projection_exponents(p, lambda) {
                    Ok(pe) => pe.per_variable,
                    Err(_) => {
                        note(
                            "per_variable_exponents",
                            format!("undefined: requires λ > t′ = {}", p.t_prime()),
                        );
                        Vec::new()
                    }
                };
                (upper, cond, equality, pve)
            }
            None => {
                note(
                    "upper_unconditional",
                    String::from("undefined: needs the separate-variable degree structure"),
                );
                note(
                    "upper_conditional",
                    String::from("undefined: needs the separate-variable degree structure"),
                );
                (None, None, false, Vec::new())
            }
        };

    let report = BoundReport {
        lambda: lambda.value().clone(),
        jarnik_ambient,
        trivial_upper: trivial,
        lower,
        upper_unconditional,
        upper_conditional,
        equality,
        per_variable_exponents,
        notes,
    };
    debug_assert!(report.ordering_holds());
    report
}

impl BoundReport {
    /// `lower ≤ upper ≤ trivial_upper` whenever the pairs are defined, and
    /// equality implies `lower == upper` exactly.
    pub fn ordering_holds(&self) -> bool {
        if let (Some(l), Some(u)) = (&self.lower, &self.upper_unconditional) {
            if l > u {
                return false;
            }
            if self.equality && l != u {
                return false;
            }
        }
        if let (Some(u), Some(t)) = (&self.upper_unconditional, &self.trivial_upper) {
            if u > t {
                return false;
            }
        }
        true
    }
}
