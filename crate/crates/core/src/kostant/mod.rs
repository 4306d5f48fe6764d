//! Weight multiplicities of the spin-c quantization.
//!
//! Two independent engines:
//!
//! * the counting path ([`multiplicity`]): a signed sum, over fixed
//!   components, of half-integer partition counts (isolated points) and
//!   single-term Chern integrals (codimension-2 components);
//! * the rational path ([`character_rational`]): every component contributes
//!   an exact rational function of `q = λ^{1/2}`; the sum is divided out to a
//!   Laurent polynomial and read as a character.
//!
//! [`character_series`] is a third, brute-force route through truncated
//! power series, used as an oracle for the other two.

mod partition;
mod rational;
mod series;

pub use partition::{partition_count, PartitionQuery};
pub use rational::{character_rational, component_term, rational_character};
pub use series::character_series;

use thiserror::Error;

use crate::charring::CharError;
use crate::fpdata::{validate, Codim2Component, ComponentTopology, FixedPointData, ValidationReport};

/// How the surface integral behind a codimension-2 term is expanded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PbarIntegrand {
    /// `∫_F e^{c1(L)/2} · e^{-k c1(NF)}`, the expansion of
    /// `e^{c̃1(L)/2} / (2 sinh(c̃1(NF)/2))`, degree-2 part `c_L/2 - k c_N`.
    #[default]
    Expanded,
    /// `∫_F e^{[c1(L) - c1(NF)]/2} · e^{-k c1(NF)}`, degree-2 part
    /// `(c_L - c_N)/2 - k c_N`. Shifts every surface term by an extra
    /// `-c_N/2`.
    Literal,
}

/// Sign and integrand conventions for codimension-2 components.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Conventions {
    /// Multiply every codimension-2 contribution by `(-1)^{m(F)} = -1`.
    /// A point component then contributes with the opposite sign to an
    /// isolated point with the same weights.
    pub negate_codim2: bool,
    pub pbar: PbarIntegrand,
}

impl Conventions {
    pub fn literal() -> Self {
        Self {
            negate_codim2: true,
            pbar: PbarIntegrand::Literal,
        }
    }

    pub(crate) fn codim2_factor(self) -> i64 {
        if self.negate_codim2 {
            -1
        } else {
            1
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KostantError {
    #[error("invalid fixed-point data:\n{0}")]
    InvalidData(ValidationReport),
    #[error("data is not polarized: every weight must be positive")]
    NotPolarized,
    #[error("the isolated-point formula does not accept codimension-2 components")]
    Codim2Present,
    #[error("multiplicity of weight {beta} is not an integer (doubled value {doubled}): inconsistent data")]
    NonIntegerMultiplicity { beta: i64, doubled: i64 },
    #[error("character is not a Laurent polynomial: data is not the fixed-point data of a closed manifold")]
    NotDivisible,
    #[error("half-weight q^{exponent} leaked into the character")]
    OddExponent { exponent: i64 },
    #[error("integer overflow")]
    Overflow,
}

impl From<CharError> for KostantError {
    fn from(e: CharError) -> Self {
        match e {
            CharError::NotDivisible | CharError::ZeroDenominator => KostantError::NotDivisible,
            CharError::OddExponent { exponent } => KostantError::OddExponent { exponent },
            CharError::Overflow { .. } => KostantError::Overflow,
        }
    }
}

pub(crate) fn require_valid(data: &FixedPointData) -> Result<(), KostantError> {
    let report = validate(data);
    if report.is_valid() {
        Ok(())
    } else {
        Err(KostantError::InvalidData(report))
    }
}

pub(crate) fn require_polarized(data: &FixedPointData) -> Result<(), KostantError> {
    require_valid(data)?;
    if data.is_polarized() {
        Ok(())
    } else {
        Err(KostantError::NotPolarized)
    }
}

/// The Chern integral `p̄_{k,F}` of a polarized codimension-2 component at
/// the half-integer `k = k_doubled / 2`, returned doubled.
///
/// Points integrate the unit class. On a surface the degree-2 part of the
/// integrand is `c_L/2 - k·c_N` (or `(c_L - c_N)/2 - k·c_N` with
/// [`PbarIntegrand::Literal`]).
///
/// # Panics
///
/// If `k_doubled` is not a positive odd integer, or on overflow.
pub fn pbar(c: &Codim2Component, k_doubled: i64, conv: Conventions) -> i64 {
    assert!(
        k_doubled > 0 && k_doubled % 2 == 1,
        "k must be a positive half-integer, got {k_doubled}/2"
    );
    let doubled = match c.topology {
        ComponentTopology::Point => 2,
        ComponentTopology::Surface { chern_l, chern_n } => {
            let base = match conv.pbar {
                PbarIntegrand::Expanded => chern_l,
                PbarIntegrand::Literal => chern_l.checked_sub(chern_n).expect("pbar overflow"),
            };
            k_doubled
                .checked_mul(chern_n)
                .and_then(|t| base.checked_sub(t))
                .expect("pbar overflow")
        }
    };
    conv.codim2_factor() * doubled
}

/// Doubled contribution `(-1)^F · N̄_F(β - μ_F/2)` of one polarized
/// codimension-2 component. The solution set has at most one element,
/// `k = (μ_F/2 - β)/α_F`, which counts only when it is a positive
/// half-integer.
pub fn codim2_contribution(c: &Codim2Component, beta: i64, conv: Conventions) -> i64 {
    debug_assert!(c.normal_weight > 0);
    let numer = c.det_weight - 2 * beta;
    if numer <= 0 || numer % c.normal_weight != 0 {
        return 0;
    }
    let k_doubled = numer / c.normal_weight;
    if k_doubled % 2 == 0 {
        return 0;
    }
    c.sign.value() * pbar(c, k_doubled, conv)
}

/// `#(β, Q(M))` for polarized data whose fixed points are all isolated:
/// `Σ_p (-1)^p · N̄_p(β - μ_p/2)`.
pub fn multiplicity_isolated(data: &FixedPointData, beta: i64) -> Result<i64, KostantError> {
    require_polarized(data)?;
    if !data.codim2.is_empty() {
        return Err(KostantError::Codim2Present);
    }
    let mut total: i64 = 0;
    for p in &data.isolated {
        let q = PartitionQuery::new(p.weights.clone(), 2 * beta - p.det_weight)?;
        let n = i64::try_from(partition_count(&q)).map_err(|_| KostantError::Overflow)?;
        total = total.checked_add(p.sign.value() * n).ok_or(KostantError::Overflow)?;
    }
    Ok(total)
}

/// `#(β, Q(M))` for polarized data with isolated points and codimension-2
/// components. Contributions are summed doubled; an odd total means the
/// data cannot come from a manifold.
pub fn multiplicity(data: &FixedPointData, beta: i64, conv: Conventions) -> Result<i64, KostantError> {
    require_polarized(data)?;
    let mut doubled: i64 = 0;
    for p in &data.isolated {
        let q = PartitionQuery::new(p.weights.clone(), 2 * beta - p.det_weight)?;
        let n = i64::try_from(partition_count(&q)).map_err(|_| KostantError::Overflow)?;
        doubled = n
            .checked_mul(2 * p.sign.value())
            .and_then(|t| doubled.checked_add(t))
            .ok_or(KostantError::Overflow)?;
    }
    for c in &data.codim2 {
        doubled = doubled
            .checked_add(codim2_contribution(c, beta, conv))
            .ok_or(KostantError::Overflow)?;
    }
    if doubled % 2 != 0 {
        return Err(KostantError::NonIntegerMultiplicity { beta, doubled });
    }
    Ok(doubled / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpdata::{IsolatedFixedPoint, Sign};
    use crate::sphere::{sphere_data, SphereStructure};

    fn sphere(k: i64, n: i64) -> FixedPointData {
        sphere_data(SphereStructure::new(k, n))
    }

    #[test]
    fn sphere_multiplicities_from_counting() {
        assert_eq!(multiplicity_isolated(&sphere(0, 2), 1).unwrap(), 1);
        assert_eq!(multiplicity_isolated(&sphere(0, 2), 0).unwrap(), 0);
        assert_eq!(multiplicity_isolated(&sphere(2, -3), 1).unwrap(), -1);
        assert_eq!(multiplicity(&sphere(1, 2), 2, Conventions::default()).unwrap(), 1);
    }

    #[test]
    fn isolated_engine_checks_preconditions() {
        let unpolarized = FixedPointData::new(1).with_isolated(IsolatedFixedPoint::new(vec![-1], 1, Sign::Plus));
        assert_eq!(multiplicity_isolated(&unpolarized, 0), Err(KostantError::NotPolarized));
        let bad = FixedPointData::new(1).with_isolated(IsolatedFixedPoint::new(vec![1], 0, Sign::Plus));
        assert!(matches!(
            multiplicity_isolated(&bad, 0),
            Err(KostantError::InvalidData(_))
        ));
        let mixed = FixedPointData::new(1).with_codim2(Codim2Component::point(1, 1, Sign::Plus));
        assert_eq!(multiplicity_isolated(&mixed, 0), Err(KostantError::Codim2Present));
    }

    #[test]
    fn pbar_values() {
        let conv = Conventions::default();
        let literal = Conventions {
            pbar: PbarIntegrand::Literal,
            ..Conventions::default()
        };
        let pt = Codim2Component::point(1, 1, Sign::Plus);
        assert_eq!(pbar(&pt, 1, conv), 2);
        assert_eq!(pbar(&pt, 7, conv), 2);
        // c_L = 2, c_N = 0, k = 1/2: both integrands give 1
        let s = Codim2Component::surface(1, 1, Sign::Plus, 2, 0);
        assert_eq!(pbar(&s, 1, conv), 2);
        assert_eq!(pbar(&s, 1, literal), 2);
        // c_L = 0, c_N = 2, k = 3/2: literal (0-2)/2 - 3 = -4, expanded 0 - 3 = -3
        let s = Codim2Component::surface(1, 1, Sign::Plus, 0, 2);
        assert_eq!(pbar(&s, 3, literal), -8);
        assert_eq!(pbar(&s, 3, conv), -6);
        // the negated convention flips everything
        assert_eq!(pbar(&pt, 1, Conventions::literal()), -2);
    }

    #[test]
    #[should_panic]
    fn pbar_rejects_integer_k() {
        pbar(&Codim2Component::point(1, 1, Sign::Plus), 2, Conventions::default());
    }

    #[test]
    fn point_component_at_and_past_threshold() {
        let d = FixedPointData::new(1).with_codim2(Codim2Component::point(1, 1, Sign::Plus));
        assert_eq!(multiplicity(&d, 0, Conventions::default()).unwrap(), 1);
        assert_eq!(multiplicity(&d, 1, Conventions::default()).unwrap(), 0);
        let iso = FixedPointData::new(1).with_isolated(IsolatedFixedPoint::new(vec![1], 1, Sign::Plus));
        for beta in -10..=10 {
            assert_eq!(
                multiplicity(&d, beta, Conventions::default()).unwrap(),
                multiplicity(&iso, beta, Conventions::default()).unwrap()
            );
        }
    }

    #[test]
    fn negated_codim2_disagrees_with_isolated_formula() {
        let d = FixedPointData::new(1).with_codim2(Codim2Component::point(1, 1, Sign::Plus));
        let conv = Conventions {
            negate_codim2: true,
            ..Conventions::default()
        };
        assert_eq!(multiplicity(&d, 0, conv).unwrap(), -1);
    }

    #[test]
    fn half_integer_total_is_reported() {
        // literal integrand on an odd c_N leaves a half
        let d = FixedPointData::new(2).with_codim2(Codim2Component::surface(1, 1, Sign::Plus, 1, 1));
        let conv = Conventions {
            pbar: PbarIntegrand::Literal,
            ..Conventions::default()
        };
        assert!(matches!(
            multiplicity(&d, 0, conv),
            Err(KostantError::NonIntegerMultiplicity { beta: 0, .. })
        ));
        assert!(multiplicity(&d, 0, Conventions::default()).is_ok());
    }

    #[test]
    fn even_normal_weight_skips_integer_k() {
        // α = 2, μ = 0: doubled k = -β, so only negative odd weights appear
        let d = FixedPointData::new(1).with_codim2(Codim2Component::point(2, 0, Sign::Plus));
        for beta in -6..=6 {
            let expected = i64::from(beta < 0 && beta % 2 != 0);
            assert_eq!(
                multiplicity(&d, beta, Conventions::default()).unwrap(),
                expected,
                "beta = {beta}"
            );
        }
        // μ = 2: doubled k = 1 - β, odd for even β ≤ 0
        let d = FixedPointData::new(1).with_codim2(Codim2Component::point(2, 2, Sign::Plus));
        assert_eq!(multiplicity(&d, 0, Conventions::default()).unwrap(), 1);
        assert_eq!(multiplicity(&d, -1, Conventions::default()).unwrap(), 0);
        assert_eq!(multiplicity(&d, -2, Conventions::default()).unwrap(), 1);
    }
}
