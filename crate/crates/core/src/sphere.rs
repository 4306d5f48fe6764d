//! The two-sphere with its rotation action: every equivariant spin-c
//! structure is one of the `P_{k,n}`, and everything about them is known in
//! closed form. This is the reference catalogue the engines are checked
//! against.

use std::collections::BTreeMap;
use std::fmt;

use crate::cutting::{CutSpecification, ReducedComponent, Side};
use crate::fpdata::{FixedPointData, IsolatedFixedPoint, Sign};

/// The spin-c structure `P_{k,n}` on `S^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SphereStructure {
    pub k: i64,
    pub n: i64,
}

impl SphereStructure {
    pub fn new(k: i64, n: i64) -> Self {
        Self { k, n }
    }
}

impl fmt::Display for SphereStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P_{{{},{}}}", self.k, self.n)
    }
}

/// Fixed-point data of `P_{k,n}`, polarized: the north pole carries
/// determinant weight `2k + 2n + 1`, the south pole `2k + 1` with the
/// orientation sign flipped by polarization.
pub fn sphere_data(s: SphereStructure) -> FixedPointData {
    FixedPointData::new(1)
        .with_isolated(IsolatedFixedPoint::new(vec![1], 2 * s.k + 2 * s.n + 1, Sign::Plus))
        .with_isolated(IsolatedFixedPoint::new(vec![1], 2 * s.k + 1, Sign::Minus))
}

/// `#(β, Q_{k,n})`: `1` if `0 < β-k ≤ n`, `-1` if `n < β-k ≤ 0`, else `0`.
pub fn closed_form_multiplicity(s: SphereStructure, beta: i64) -> i64 {
    let d = beta - s.k;
    if 0 < d && d <= s.n {
        1
    } else if s.n < d && d <= 0 {
        -1
    } else {
        0
    }
}

/// `(P_{k,n})^+_cut = P_{0,k+n}` and `(P_{k,n})^-_cut = P_{k,-k}`, cutting
/// along the equator.
pub fn cut_identity(s: SphereStructure) -> (SphereStructure, SphereStructure) {
    (SphereStructure::new(0, s.k + s.n), SphereStructure::new(s.k, -s.k))
}

/// North pole to the `+` side, south pole to the `-` side, one reduced
/// point (the equator modulo the circle).
pub fn canonical_cut_spec() -> CutSpecification {
    CutSpecification {
        assignments: BTreeMap::from([(0, Side::Plus), (1, Side::Minus)]),
        reduced: vec![ReducedComponent::Point],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pole_weights() {
        let d = sphere_data(SphereStructure::new(0, 1));
        assert_eq!(d.isolated[0].det_weight, 3);
        assert_eq!(d.isolated[1].det_weight, 1);
        let d = sphere_data(SphereStructure::new(0, 0));
        assert_eq!((d.isolated[0].det_weight, d.isolated[1].det_weight), (1, 1));
        let d = sphere_data(SphereStructure::new(1, -3));
        assert_eq!((d.isolated[0].det_weight, d.isolated[1].det_weight), (-3, 3));
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(closed_form_multiplicity(SphereStructure::new(0, 2), 2), 1);
        assert_eq!(closed_form_multiplicity(SphereStructure::new(2, -3), 0), -1);
        assert_eq!(closed_form_multiplicity(SphereStructure::new(5, 7), 5), 0);
        assert!((-20..20).all(|b| closed_form_multiplicity(SphereStructure::new(3, 0), b) == 0));
    }

    #[test]
    fn cut_identities() {
        let s = SphereStructure::new;
        assert_eq!(cut_identity(s(1, 2)), (s(0, 3), s(1, -1)));
        assert_eq!(cut_identity(s(0, 0)), (s(0, 0), s(0, 0)));
        assert_eq!(cut_identity(s(-2, 5)), (s(0, 3), s(-2, 2)));
    }

    #[test]
    fn display() {
        assert_eq!(SphereStructure::new(1, -1).to_string(), "P_{1,-1}");
    }
}
