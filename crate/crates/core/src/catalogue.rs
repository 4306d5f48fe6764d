//! Fixed-point data of manifolds whose quantization is known to exist,
//! paired with a cut along a hypersurface with free circle action.
//!
//! Everything here is polarized. Disjoint unions of entries are again
//! realizable, with the cut taken piecewise.

use std::collections::BTreeMap;

use crate::cutting::{CutSpecification, ReducedComponent, Side};
use crate::fpdata::{Codim2Component, FixedPointData, IsolatedFixedPoint, Sign};
use crate::sphere::{canonical_cut_spec, sphere_data, SphereStructure};

/// Realizable data together with a valid cut of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutExample {
    pub data: FixedPointData,
    pub spec: CutSpecification,
}

impl CutExample {
    /// Puts every component on one side with nothing reduced: the
    /// hypersurface sits in a collar where it bounds the empty set.
    pub fn one_sided(data: FixedPointData, side: Side) -> Self {
        let spec = CutSpecification {
            assignments: (0..data.component_count()).map(|i| (i, side)).collect(),
            reduced: Vec::new(),
        };
        Self { data, spec }
    }
}

/// `P_{k,n}` cut along the equator.
pub fn sphere(s: SphereStructure) -> CutExample {
    CutExample {
        data: sphere_data(s),
        spec: canonical_cut_spec(),
    }
}

/// `S^2` rotating with speed `speed > 0`. The south pole has determinant
/// weight `mu_south ≡ speed (mod 2)` and the quantization has dimension `n`.
///
/// The equator has stabilizer `Z/speed`, so only one-sided cuts are offered
/// through [`CutExample::one_sided`].
pub fn weighted_sphere(speed: i64, mu_south: i64, n: i64) -> FixedPointData {
    assert!(speed > 0, "speed must be positive");
    FixedPointData::new(1)
        .with_isolated(IsolatedFixedPoint::new(
            vec![speed],
            mu_south + 2 * speed * n,
            Sign::Plus,
        ))
        .with_isolated(IsolatedFixedPoint::new(vec![speed], mu_south, Sign::Minus))
}

/// `S^2 × S^2` with the circle rotating the first factor as `first` and the
/// second with speed `speed`, as in [`weighted_sphere`].
///
/// Cut along `equator × S^2`; the reduced space is the second factor with
/// trivial normal bundle.
pub fn sphere_product(first: SphereStructure, speed: i64, mu_south: i64, n: i64) -> CutExample {
    let a = sphere_data(first);
    let b = weighted_sphere(speed, mu_south, n);
    let mut data = FixedPointData::new(2);
    let mut assignments = BTreeMap::new();
    for (i, p) in a.isolated.iter().enumerate() {
        for q in &b.isolated {
            assignments.insert(data.isolated.len(), if i == 0 { Side::Plus } else { Side::Minus });
            data.isolated.push(IsolatedFixedPoint::new(
                vec![p.weights[0], q.weights[0]],
                p.det_weight + q.det_weight,
                p.sign * q.sign,
            ));
        }
    }
    CutExample {
        data,
        spec: CutSpecification {
            assignments,
            reduced: vec![ReducedComponent::Surface {
                chern_lred: 2 * n,
                chern_nminus: 0,
            }],
        },
    }
}

/// The `S^2`-bundle `P(O ⊕ O(e))` over `S^2`, rotating the fibres.
///
/// The zero section has self-intersection `e`, determinant weight `mu_zero`
/// (odd) and `∫c1(L) = chern_zero ≡ e (mod 2)`; `fibre_degree` is the
/// (even) degree of the determinant line on a fibre. Cut along the sphere
/// bundle of radius one half; the reduced space is the base.
pub fn ruled_surface(e: i64, mu_zero: i64, chern_zero: i64, fibre_degree: i64) -> CutExample {
    assert!(mu_zero % 2 != 0, "mu_zero must be odd");
    assert!((chern_zero - e) % 2 == 0, "chern_zero must have the parity of e");
    assert!(fibre_degree % 2 == 0, "fibre_degree must be even");
    let zero = Codim2Component::surface(1, mu_zero, Sign::Plus, chern_zero, e);
    // the infinity section has normal weight -1 and self-intersection -e;
    // polarizing flips both along with the sign
    let infinity = Codim2Component::surface(1, mu_zero - fibre_degree, Sign::Minus, chern_zero - fibre_degree * e, e);
    CutExample {
        data: FixedPointData::new(2).with_codim2(zero).with_codim2(infinity),
        spec: CutSpecification {
            assignments: BTreeMap::from([(0, Side::Plus), (1, Side::Minus)]),
            reduced: vec![ReducedComponent::Surface {
                chern_lred: chern_zero - e * mu_zero,
                chern_nminus: e,
            }],
        },
    }
}

/// `CP^2` fixing a point and a line, with the anticanonical structure.
pub fn cp2() -> FixedPointData {
    FixedPointData::new(2)
        .with_isolated(IsolatedFixedPoint::new(vec![1, 1], -2, Sign::Plus))
        .with_codim2(Codim2Component::surface(1, 1, Sign::Plus, 3, 1))
}

/// Disjoint union, cutting each piece as given.
///
/// # Panics
///
/// If the pieces have different dimensions.
pub fn disjoint_union(half_dimension: u32, pieces: &[CutExample]) -> CutExample {
    let mut data = FixedPointData::new(half_dimension);
    let mut iso = Vec::new();
    let mut c2 = Vec::new();
    let mut reduced = Vec::new();
    for piece in pieces {
        assert_eq!(piece.data.half_dimension, half_dimension, "dimension mismatch in union");
        let n_iso = piece.data.isolated.len();
        for (index, side) in &piece.spec.assignments {
            if *index < n_iso {
                iso.push((data.isolated.len() + index, *side));
            } else {
                c2.push((data.codim2.len() + index - n_iso, *side));
            }
        }
        data.isolated.extend(piece.data.isolated.iter().cloned());
        data.codim2.extend(piece.data.codim2.iter().copied());
        reduced.extend(piece.spec.reduced.iter().copied());
    }
    let offset = data.isolated.len();
    let assignments = iso
        .into_iter()
        .chain(c2.into_iter().map(|(i, s)| (offset + i, s)))
        .collect();
    CutExample {
        data,
        spec: CutSpecification { assignments, reduced },
    }
}
