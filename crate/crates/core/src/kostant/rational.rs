//! Exact rational-function form of the localization sum.
//!
//! An isolated point with weights `α_j` contributes
//! `(-1)^p · q^μ / Π_j (q^{α_j} - q^{-α_j})`. A codimension-2 surface
//! contributes
//!
//! ```text
//! (-1)^F · q^μ · [c_L (q^α - q^-α) - c_N (q^α + q^-α)] / (2 (q^α - q^-α)^2)
//! ```
//!
//! which is the closed form of `Σ_{l≥0} x^l (c_L/2 - (l+½) c_N)` times
//! `λ^{(μ-α)/2}`, with `x = λ^{-α}`. Neither expression depends on
//! polarization.

use crate::charring::{to_character, LaurentPoly, RationalChar, VirtualCharacter};
use crate::fpdata::{Codim2Component, ComponentTopology, FixedPointData, IsolatedFixedPoint};

use super::{require_valid, Conventions, KostantError, PbarIntegrand};

fn isolated_term(p: &IsolatedFixedPoint) -> RationalChar {
    let den = p
        .weights
        .iter()
        .fold(LaurentPoly::one(), |acc, a| &acc * &LaurentPoly::weyl_factor(*a));
    RationalChar::new(LaurentPoly::monomial(p.det_weight, p.sign.value()), den)
        .expect("nonzero weights give a nonzero denominator")
}

fn codim2_term(c: &Codim2Component, conv: Conventions) -> RationalChar {
    let sign = c.sign.value() * conv.codim2_factor();
    let v = LaurentPoly::weyl_factor(c.normal_weight);
    let lead = LaurentPoly::monomial(c.det_weight, sign);
    let term = match c.topology {
        ComponentTopology::Point => RationalChar::new(lead, v),
        ComponentTopology::Surface { chern_l, chern_n } => {
            let cl = match conv.pbar {
                PbarIntegrand::Expanded => chern_l,
                PbarIntegrand::Literal => chern_l - chern_n,
            };
            let w = LaurentPoly::weyl_cofactor(c.normal_weight);
            let bracket = &v.scale(cl) - &w.scale(chern_n);
            RationalChar::new(&lead * &bracket, (&v * &v).scale(2))
        }
    };
    term.expect("nonzero normal weight gives a nonzero denominator")
}

/// The rational contribution of every fixed component, isolated points
/// first, in list order.
pub fn component_term(data: &FixedPointData, index: usize, conv: Conventions) -> Option<RationalChar> {
    if index < data.isolated.len() {
        Some(isolated_term(&data.isolated[index]))
    } else {
        data.codim2
            .get(index - data.isolated.len())
            .map(|c| codim2_term(c, conv))
    }
}

/// The character as an unreduced rational function of `q`.
pub fn rational_character(data: &FixedPointData, conv: Conventions) -> Result<RationalChar, KostantError> {
    require_valid(data)?;
    let terms: Vec<RationalChar> = data
        .isolated
        .iter()
        .map(isolated_term)
        .chain(data.codim2.iter().map(|c| codim2_term(c, conv)))
        .collect();
    Ok(crate::charring::rational_combine(&terms))
}

/// The full character of `Q(M)`.
///
/// Fails with [`KostantError::NotDivisible`] when the localization sum is
/// not a Laurent polynomial, which happens exactly when the data does not
/// come from a closed manifold.
pub fn character_rational(data: &FixedPointData, conv: Conventions) -> Result<VirtualCharacter, KostantError> {
    let r = rational_character(data, conv)?;
    let poly = r.to_poly()?;
    Ok(to_character(&poly)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpdata::{polarize, Sign};
    use crate::sphere::{sphere_data, SphereStructure};

    fn ch(pairs: &[(i64, i64)]) -> VirtualCharacter {
        VirtualCharacter::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn p01_is_lambda() {
        let d = sphere_data(SphereStructure::new(0, 1));
        assert_eq!(character_rational(&d, Conventions::default()).unwrap(), ch(&[(1, 1)]));
    }

    #[test]
    fn p00_is_zero() {
        let d = sphere_data(SphereStructure::new(0, 0));
        assert!(character_rational(&d, Conventions::default()).unwrap().is_zero());
    }

    #[test]
    fn empty_data_is_zero() {
        assert!(character_rational(&FixedPointData::new(1), Conventions::default())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn lone_point_is_not_a_manifold() {
        let d = FixedPointData::new(1).with_isolated(IsolatedFixedPoint::new(vec![1], 1, Sign::Plus));
        assert_eq!(
            character_rational(&d, Conventions::default()),
            Err(KostantError::NotDivisible)
        );
    }

    #[test]
    fn displayed_isolated_factor_matches_simplified() {
        // (q^-α - q^α) / ((1 - q^{2α})(1 - q^{-2α})) == 1 / (q^α - q^-α)
        for alpha in 1..=8 {
            let displayed = RationalChar::new(
                LaurentPoly::from_terms([(-alpha, 1), (alpha, -1)]),
                &LaurentPoly::from_terms([(0, 1), (2 * alpha, -1)])
                    * &LaurentPoly::from_terms([(0, 1), (-2 * alpha, -1)]),
            )
            .unwrap();
            let simplified = RationalChar::new(LaurentPoly::one(), LaurentPoly::weyl_factor(alpha)).unwrap();
            assert!(displayed.equivalent(&simplified), "alpha = {alpha}");
        }
    }

    /// Point with weights (1,1) and μ = -2 together with a line (α = 1, μ = 1,
    /// ∫c1(L) = 3, ∫c1(N) = 1): the circle action on CP^2 fixing a point and
    /// a line, with the anticanonical spin-c structure. Quantization is the
    /// trivial representation.
    fn cp2() -> FixedPointData {
        FixedPointData::new(2)
            .with_isolated(IsolatedFixedPoint::new(vec![-1, -1], -2, Sign::Plus))
            .with_codim2(Codim2Component::surface(1, 1, Sign::Plus, 3, 1))
    }

    #[test]
    fn cp2_has_trivial_quantization() {
        assert_eq!(
            character_rational(&cp2(), Conventions::default()).unwrap(),
            ch(&[(0, 1)])
        );
        let p = polarize(&cp2()).unwrap();
        assert_eq!(character_rational(&p, Conventions::default()).unwrap(), ch(&[(0, 1)]));
    }

    #[test]
    fn cp2_is_not_divisible_under_literal_integrand() {
        let conv = Conventions {
            pbar: PbarIntegrand::Literal,
            ..Conventions::default()
        };
        assert!(character_rational(&cp2(), conv).is_err());
        assert!(character_rational(&cp2(), Conventions::literal()).is_err());
    }

    #[test]
    fn point_component_matches_isolated_point() {
        for (a, mu) in [(1, 1), (1, -3), (2, 0), (3, 5)] {
            for sign in [Sign::Plus, Sign::Minus] {
                let iso = FixedPointData::new(1).with_isolated(IsolatedFixedPoint::new(vec![a], mu, sign));
                let pt = FixedPointData::new(1).with_codim2(Codim2Component::point(a, mu, sign));
                assert_eq!(
                    component_term(&iso, 0, Conventions::default()),
                    component_term(&pt, 0, Conventions::default())
                );
            }
        }
    }
}
