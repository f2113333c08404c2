//! Manifolds in separate variables: groups of one-variable integer
//! polynomials, their derived degree data, and the curve constants that
//! drive the divisibility criterion.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::poly::Polynomial;
use crate::rational::{big_pow, one_half, rat_int, Rational};
use crate::real::RefinableReal;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ManifoldError {
    #[error("group `{0}` has no polynomials")]
    EmptyGroup(String),
    #[error("group `{0}` is missing the identity polynomial X")]
    MissingIdentity(String),
    #[error("group `{0}` contains a constant polynomial")]
    ConstantPolynomial(String),
    #[error("manifold has no variable groups")]
    NoGroups,
}

/// The polynomials attached to one variable, sorted by nondecreasing degree
/// with the identity `X` first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableGroup {
    name: String,
    polys: Vec<Polynomial>,
    /// `permutation[slot]` is the index the polynomial occupied in the input.
    permutation: Vec<usize>,
}

impl VariableGroup {
    pub fn new(name: impl Into<String>, polys: Vec<Polynomial>) -> Result<Self, ManifoldError> {
        let name = name.into();
        if polys.is_empty() {
            return Err(ManifoldError::EmptyGroup(name));
        }
        if polys.iter().any(|p| p.degree() == 0) {
            return Err(ManifoldError::ConstantPolynomial(name));
        }
        let identity_at = polys
            .iter()
            .position(Polynomial::is_identity)
            .ok_or_else(|| ManifoldError::MissingIdentity(name.clone()))?;
        let mut order: Vec<usize> = (0..polys.len()).collect();
        order.sort_by_key(|&i| (polys[i].degree(), i));
        // The identity leads regardless of how other degree-1 entries sort.
        let slot = order.iter().position(|&i| i == identity_at).unwrap();
        order.remove(slot);
        order.insert(0, identity_at);
        let sorted = order.iter().map(|&i| polys[i].clone()).collect();
        Ok(Self {
            name,
            polys: sorted,
            permutation: order,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    /// Indices the sorted polynomials occupied in the constructor input.
    pub fn input_permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Group size σ.
    pub fn sigma(&self) -> u32 {
        self.polys.len() as u32
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.polys.iter().map(Polynomial::degree).collect()
    }

    /// Largest degree in the group.
    pub fn max_degree(&self) -> u32 {
        self.polys.iter().map(Polynomial::degree).max().unwrap()
    }

    /// Diameter `t`: the largest gap between consecutive degrees, `0` for a
    /// single-polynomial group (the gap set is empty).
    pub fn diameter(&self) -> u32 {
        let d = self.degrees();
        d.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0)
    }

    /// True when every leading coefficient has absolute value 1, so the
    /// constants Δ and D are trivial.
    pub fn is_monic(&self) -> bool {
        self.polys
            .iter()
            .all(|p| p.leading_coefficient().abs().is_one())
    }

    /// Δ: product of the absolute leading coefficients.
    pub fn delta(&self) -> BigInt {
        self.polys
            .iter()
            .map(|p| p.leading_coefficient().abs())
            .product()
    }
}

/// A manifold given as a Cartesian product of polynomial curves, one
/// variable group per factor. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldSpec {
    groups: Vec<VariableGroup>,
}

impl ManifoldSpec {
    pub fn new(groups: Vec<VariableGroup>) -> Result<Self, ManifoldError> {
        if groups.is_empty() {
            return Err(ManifoldError::NoGroups);
        }
        Ok(Self { groups })
    }

    pub fn groups(&self) -> &[VariableGroup] {
        &self.groups
    }

    /// Number of variables s.
    pub fn s(&self) -> u32 {
        self.groups.len() as u32
    }

    /// Total coordinate count k = σ_1 + … + σ_s.
    pub fn k(&self) -> u32 {
        self.groups.iter().map(VariableGroup::sigma).sum()
    }

    /// Largest degree gap over all groups.
    pub fn t_prime(&self) -> u32 {
        self.groups
            .iter()
            .map(VariableGroup::diameter)
            .max()
            .unwrap()
    }

    /// d: the smallest of the per-group maximal degrees.
    pub fn d_min(&self) -> u32 {
        self.groups
            .iter()
            .map(VariableGroup::max_degree)
            .min()
            .unwrap()
    }

    /// d′: the largest degree appearing anywhere.
    pub fn d_max(&self) -> u32 {
        self.groups
            .iter()
            .map(VariableGroup::max_degree)
            .max()
            .unwrap()
    }

    pub fn is_monic(&self) -> bool {
        self.groups.iter().all(VariableGroup::is_monic)
    }

    /// Degree data alone, for the bound calculus (coefficients never enter
    /// any dimension formula).
    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile {
            per_group: self.groups.iter().map(VariableGroup::degrees).collect(),
        }
    }

    /// Iterates `(group index, polynomial index, polynomial)` over all k
    /// coordinates in order.
    pub fn coordinates(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        self.groups
            .iter()
            .enumerate()
            .flat_map(|(i, g)| g.polys().iter().enumerate().map(move |(j, p)| (i, j, p)))
    }
}

/// Per-group degree lists, sorted ascending with the leading 1 of the
/// identity. This is all the dimension-bound calculus needs, so manifolds
/// with rational coefficients can be handled by supplying their degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    per_group: Vec<Vec<u32>>,
}

impl DegreeProfile {
    /// Degrees per group, each list nondecreasing and starting at 1.
    pub fn new(per_group: Vec<Vec<u32>>) -> Result<Self, ManifoldError> {
        if per_group.is_empty() {
            return Err(ManifoldError::NoGroups);
        }
        for g in &per_group {
            if g.is_empty() {
                return Err(ManifoldError::EmptyGroup(String::from("<degrees>")));
            }
            if g[0] != 1 || g.windows(2).any(|w| w[1] < w[0]) {
                return Err(ManifoldError::MissingIdentity(String::from("<degrees>")));
            }
        }
        Ok(Self { per_group })
    }

    pub fn s(&self) -> u32 {
        self.per_group.len() as u32
    }

    pub fn k(&self) -> u32 {
        self.per_group.iter().map(|g| g.len() as u32).sum()
    }

    pub fn group_max_degrees(&self) -> Vec<u32> {
        self.per_group
            .iter()
            .map(|g| *g.last().unwrap())
            .collect()
    }

    pub fn t_prime(&self) -> u32 {
        self.per_group
            .iter()
            .map(|g| g.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0))
            .max()
            .unwrap()
    }

    pub fn d_min(&self) -> u32 {
        *self.group_max_degrees().iter().min().unwrap()
    }

    pub fn d_max(&self) -> u32 {
        *self.group_max_degrees().iter().max().unwrap()
    }
}

/// The constants controlling the divisibility criterion for one curve at a
/// point ζ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveConstants {
    /// Δ: product of absolute leading coefficients.
    pub delta: BigInt,
    /// D = Δ^{d_k} with d_k the largest degree in the group.
    pub big_d: BigInt,
    /// Rigorous upper bound for `max_j max_{|z-ζ|≤1/2} |P_j'(z)|`.
    pub sigma_upper: Rational,
    /// A valid threshold constant: `1 / (2·D·Σ_upper)`. Any smaller constant
    /// also validates the criterion.
    pub c_valid: Rational,
}

/// Computes Δ, D, a triangle-inequality bound for Σ, and the derived valid
/// constant. The bound evaluates `Σ |i·c_i|·R^{i-1}` at `R = |ζ| + 1/2`
/// using an upper enclosure of `|ζ|`, so `Σ_upper` dominates the true
/// maximum of `|P'|` on the unit-width window around ζ.
pub fn curve_constants(group: &VariableGroup, zeta: &RefinableReal) -> CurveConstants {
    let delta = group.delta();
    let big_d = big_pow(&delta, group.max_degree());
    let radius = zeta.abs_upper_bound() + one_half();
    let sigma_upper = group
        .polys()
        .iter()
        .map(|p| p.derivative_abs_bound(&radius))
        .max()
        .unwrap();
    let c_valid = rat_int(1) / (rat_int(2) * Rational::from(big_d.clone()) * &sigma_upper);
    CurveConstants {
        delta,
        big_d,
        sigma_upper,
        c_valid,
    }
}

/// `x_1 = x_0 / gcd(x_0, Δ)`: strips from `x_0` the part shared with the
/// leading-coefficient product.
pub fn x1_of(x0: &BigInt, delta: &BigInt) -> BigInt {
    debug_assert!(x0.is_positive() && delta.is_positive());
    x0 / x0.gcd(delta)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::rational::rat;
    use alloc::vec;
    use num_traits::Zero;

    pub(crate) fn poly(cs: &[i64]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&c| BigInt::from(c)).collect()).unwrap()
    }

    pub(crate) fn monomial(degree: u32) -> Polynomial {
        let mut cs = vec![BigInt::zero(); degree as usize + 1];
        cs[degree as usize] = BigInt::one();
        Polynomial::new(cs).unwrap()
    }

    fn group(name: &str, degrees: &[u32]) -> VariableGroup {
        VariableGroup::new(name, degrees.iter().map(|&d| monomial(d)).collect()).unwrap()
    }

    /// (X, X³, X⁴) × (Y, Y⁶).
    pub(crate) fn m1() -> ManifoldSpec {
        ManifoldSpec::new(vec![group("x", &[1, 3, 4]), group("y", &[1, 6])]).unwrap()
    }

    /// Two copies of the degree-4 Veronese curve.
    pub(crate) fn m2() -> ManifoldSpec {
        ManifoldSpec::new(vec![group("x", &[1, 2, 3, 4]), group("y", &[1, 2, 3, 4])]).unwrap()
    }

    /// (X, X²) × (Y, Y⁵, Y⁷).
    pub(crate) fn m3() -> ManifoldSpec {
        ManifoldSpec::new(vec![group("x", &[1, 2]), group("y", &[1, 5, 7])]).unwrap()
    }

    #[test]
    fn derived_quantities_for_worked_manifolds() {
        let m = m1();
        assert_eq!(m.s(), 2);
        assert_eq!(m.k(), 5);
        assert_eq!(m.groups()[0].diameter(), 2);
        assert_eq!(m.groups()[1].diameter(), 5);
        assert_eq!(m.t_prime(), 5);
        assert_eq!(m.d_min(), 4);
        assert_eq!(m.d_max(), 6);

        let m = m2();
        assert_eq!((m.s(), m.k()), (2, 8));
        assert_eq!(m.t_prime(), 1);
        assert_eq!((m.d_min(), m.d_max()), (4, 4));

        let m = m3();
        assert_eq!(m.t_prime(), 4);
        assert_eq!((m.d_min(), m.d_max()), (2, 7));

        let single = ManifoldSpec::new(vec![group("x", &[1])]).unwrap();
        assert_eq!((single.s(), single.k(), single.t_prime()), (1, 1, 0));
        assert_eq!((single.d_min(), single.d_max()), (1, 1));
    }

    #[test]
    fn group_sorting_and_permutation() {
        // Input out of order: X⁴, X, X³.
        let g = VariableGroup::new(
            "x",
            vec![monomial(4), Polynomial::identity(), monomial(3)],
        )
        .unwrap();
        assert_eq!(g.degrees(), vec![1, 3, 4]);
        assert_eq!(g.input_permutation(), &[1, 2, 0]);
        // Sorting never changes the derived data.
        let sorted = VariableGroup::new(
            "x",
            vec![Polynomial::identity(), monomial(3), monomial(4)],
        )
        .unwrap();
        assert_eq!(g.delta(), sorted.delta());
        assert_eq!(g.diameter(), sorted.diameter());
    }

    #[test]
    fn group_rejections() {
        assert!(matches!(
            VariableGroup::new("x", vec![]),
            Err(ManifoldError::EmptyGroup(_))
        ));
        assert!(matches!(
            VariableGroup::new("x", vec![monomial(2)]),
            Err(ManifoldError::MissingIdentity(_))
        ));
        assert!(matches!(
            VariableGroup::new("x", vec![Polynomial::identity(), poly(&[5])]),
            Err(ManifoldError::ConstantPolynomial(_))
        ));
    }

    #[test]
    fn curve_constants_examples() {
        // Group (X, X²) at ζ = 1/2: R = 1, Σ = max(1, 2) = 2, C = 1/4.
        let g = group("c", &[1, 2]);
        let c = curve_constants(&g, &RefinableReal::exact(rat(1, 2)));
        assert_eq!(c.delta, BigInt::one());
        assert_eq!(c.big_d, BigInt::one());
        assert_eq!(c.sigma_upper, rat(2, 1));
        assert_eq!(c.c_valid, rat(1, 4));

        // Monic group: Δ = D = 1 regardless of the point.
        let g = group("c", &[1, 2, 3]);
        let c = curve_constants(&g, &RefinableReal::exact(rat(7, 3)));
        assert_eq!((c.delta, c.big_d), (BigInt::one(), BigInt::one()));

        // (X, 2X³) at ζ = 0: Δ = 2, D = 2³ = 8.
        let g = VariableGroup::new("c", vec![Polynomial::identity(), poly(&[0, 0, 0, 2])])
            .unwrap();
        let c = curve_constants(&g, &RefinableReal::exact(rat_int(0)));
        assert_eq!(c.delta, BigInt::from(2));
        assert_eq!(c.big_d, BigInt::from(8));
    }

    #[test]
    fn sigma_upper_dominates_true_maximum() {
        // P' of X² is 2z: on |z - 1/2| ≤ 1/2 the true max is 2 at z = 1;
        // P' of 2X³+X is 6z²+1, increasing in |z|, max at the window edge.
        let g = VariableGroup::new(
            "c",
            vec![Polynomial::identity(), monomial(2), poly(&[0, 1, 0, 2])],
        )
        .unwrap();
        let zeta = rat(1, 2);
        let c = curve_constants(&g, &RefinableReal::exact(zeta.clone()));
        let edge = &zeta + one_half();
        let true_sigma = [
            rat_int(1),
            rat_int(2) * &edge,
            rat_int(6) * &edge * &edge + rat_int(1),
        ]
        .into_iter()
        .max()
        .unwrap();
        assert!(c.sigma_upper >= true_sigma);
        assert!(c.c_valid <= rat_int(1) / (rat_int(2) * &true_sigma));
    }

    #[test]
    fn x1_examples() {
        assert_eq!(x1_of(&BigInt::from(6), &BigInt::from(4)), BigInt::from(3));
        assert_eq!(x1_of(&BigInt::from(5), &BigInt::one()), BigInt::from(5));
        assert_eq!(x1_of(&BigInt::from(8), &BigInt::from(8)), BigInt::one());
    }

    #[test]
    fn diameter_bounded_by_span() {
        for degrees in [&[1u32, 3, 4][..], &[1, 6], &[1, 2, 3, 4], &[1, 5, 7]] {
            let g = group("g", degrees);
            assert!(g.diameter() <= g.max_degree() - 1);
        }
    }
}
