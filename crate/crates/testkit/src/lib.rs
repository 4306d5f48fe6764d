//! Random fixed-point data for property and acceptance tests.
//!
//! Two kinds: [`valid_polarized`] passes every structural rule but need not
//! come from a manifold; [`realizable_cut`] is a disjoint union of catalogue
//! manifolds with a valid cut, so every engine must succeed on it.

use rand::seq::SliceRandom;
use rand::Rng;

use spinc_core::catalogue::{self, CutExample};
use spinc_core::cutting::{ReducedComponent, Side};
use spinc_core::fpdata::{Codim2Component, ComponentTopology, FixedPointData, IsolatedFixedPoint, Sign};
use spinc_core::sphere::SphereStructure;

/// Size limits on generated data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_components: usize,
    pub max_weight: i64,
    pub max_det_weight: i64,
    pub max_chern: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_components: 6,
            max_weight: 4,
            max_det_weight: 9,
            max_chern: 3,
        }
    }
}

impl Bounds {
    pub fn admits(&self, data: &FixedPointData) -> bool {
        data.component_count() <= self.max_components
            && data.isolated.iter().all(|p| {
                p.det_weight.abs() <= self.max_det_weight && p.weights.iter().all(|a| a.abs() <= self.max_weight)
            })
            && data.codim2.iter().all(|c| {
                c.det_weight.abs() <= self.max_det_weight
                    && c.normal_weight.abs() <= self.max_weight
                    && match c.topology {
                        ComponentTopology::Point => true,
                        ComponentTopology::Surface { chern_l, chern_n } => {
                            chern_l.abs() <= self.max_chern && chern_n.abs() <= self.max_chern
                        }
                    }
            })
    }

    pub fn admits_cut(&self, ex: &CutExample) -> bool {
        self.admits(&ex.data)
            && ex.spec.reduced.iter().all(|r| match r {
                ReducedComponent::Point => true,
                ReducedComponent::Surface {
                    chern_lred,
                    chern_nminus,
                } => chern_lred.abs() <= self.max_chern && chern_nminus.abs() <= self.max_chern,
            })
    }
}

fn sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// A value in `[-bound, bound]` congruent to `parity` mod 2.
fn with_parity<R: Rng>(rng: &mut R, bound: i64, parity: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if (v - parity).rem_euclid(2) == 0 {
            return v;
        }
    }
}

/// Valid polarized data of half-dimension `m ∈ {1, 2}` with at least one
/// component.
pub fn valid_polarized<R: Rng>(rng: &mut R, m: u32, b: Bounds) -> FixedPointData {
    assert!(m == 1 || m == 2);
    let mut data = FixedPointData::new(m);
    let total = rng.gen_range(1..=b.max_components);
    let n_iso = rng.gen_range(0..=total);
    for _ in 0..n_iso {
        let weights: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=b.max_weight)).collect();
        let mu = with_parity(rng, b.max_det_weight, weights.iter().sum());
        data.isolated.push(IsolatedFixedPoint::new(weights, mu, sign(rng)));
    }
    for _ in n_iso..total {
        let a = rng.gen_range(1..=b.max_weight);
        let mu = with_parity(rng, b.max_det_weight, a);
        let s = sign(rng);
        data.codim2.push(if m == 1 {
            Codim2Component::point(a, mu, s)
        } else {
            let cn = rng.gen_range(-b.max_chern..=b.max_chern);
            let cl = with_parity(rng, b.max_chern, cn);
            Codim2Component::surface(a, mu, s, cl, cn)
        });
    }
    data
}

/// Reverses the complex structure on a random subset of weight lines:
/// each flipped weight and its normal Chern number change sign and the
/// orientation sign flips. Always flips at least one line when there is one.
pub fn unpolarize<R: Rng>(rng: &mut R, data: &FixedPointData) -> FixedPointData {
    let mut out = data.clone();
    let mut flipped = false;
    for p in &mut out.isolated {
        for w in &mut p.weights {
            if rng.gen() {
                *w = -*w;
                p.sign = p.sign.flip();
                flipped = true;
            }
        }
    }
    for c in &mut out.codim2 {
        if rng.gen() {
            flip_codim2(c);
            flipped = true;
        }
    }
    if !flipped {
        if let Some(p) = out.isolated.first_mut() {
            p.weights[0] = -p.weights[0];
            p.sign = p.sign.flip();
        } else if let Some(c) = out.codim2.first_mut() {
            flip_codim2(c);
        }
    }
    out
}

fn flip_codim2(c: &mut Codim2Component) {
    c.normal_weight = -c.normal_weight;
    c.sign = c.sign.flip();
    if let ComponentTopology::Surface { chern_n, .. } = &mut c.topology {
        *chern_n = -*chern_n;
    }
}

fn side<R: Rng>(rng: &mut R) -> Side {
    if rng.gen() {
        Side::Plus
    } else {
        Side::Minus
    }
}

fn block_m1<R: Rng>(rng: &mut R) -> CutExample {
    match rng.gen_range(0..3) {
        0 | 1 => {
            let k = rng.gen_range(-4..=4);
            let n = rng.gen_range(-4..=4);
            let ex = catalogue::sphere(SphereStructure::new(k, n));
            if rng.gen_ratio(1, 4) {
                CutExample::one_sided(ex.data, side(rng))
            } else {
                ex
            }
        }
        _ => {
            let speed = rng.gen_range(1..=4);
            let mu_south = with_parity(rng, 5, speed);
            let n = rng.gen_range(-1..=1);
            CutExample::one_sided(catalogue::weighted_sphere(speed, mu_south, n), side(rng))
        }
    }
}

fn block_m2<R: Rng>(rng: &mut R) -> CutExample {
    match rng.gen_range(0..5) {
        0 | 1 => {
            let e = rng.gen_range(-2..=2);
            let mu_zero = with_parity(rng, 5, 1);
            let chern_zero = with_parity(rng, 3, e);
            let fibre = 2 * rng.gen_range(-1..=1);
            catalogue::ruled_surface(e, mu_zero, chern_zero, fibre)
        }
        2 | 3 => {
            let first = SphereStructure::new(rng.gen_range(-2..=2), rng.gen_range(-2..=2));
            let speed = rng.gen_range(1..=4);
            let mu_south = with_parity(rng, 3, speed);
            let n = rng.gen_range(-1..=1);
            catalogue::sphere_product(first, speed, mu_south, n)
        }
        _ => CutExample::one_sided(catalogue::cp2(), side(rng)),
    }
}

/// A disjoint union of catalogue manifolds of half-dimension `m ∈ {1, 2}`
/// within `b`, with a valid cut. Resamples until the bounds hold.
pub fn realizable_cut<R: Rng>(rng: &mut R, m: u32, b: Bounds) -> CutExample {
    loop {
        let mut pieces = Vec::new();
        let mut count = 0;
        let target = rng.gen_range(1..=b.max_components);
        while count < target {
            let piece = if m == 1 { block_m1(rng) } else { block_m2(rng) };
            if count + piece.data.component_count() > b.max_components {
                break;
            }
            count += piece.data.component_count();
            pieces.push(piece);
        }
        if pieces.is_empty() {
            continue;
        }
        pieces.shuffle(rng);
        let ex = catalogue::disjoint_union(m, &pieces);
        if b.admits_cut(&ex) {
            return ex;
        }
    }
}
