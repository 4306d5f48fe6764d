//! Brute-force character coefficients from truncated power series.
//!
//! Each component's contribution is `λ^{top}` times a power series in
//! `x = λ^{-1}`, so only the first `top - β_min + 1` coefficients can land in
//! a window `[β_min, β_max]`. Series are built by multiplying truncated
//! geometric series; nothing here shares code with the partition counter or
//! the closed-form Chern integral.

use std::collections::BTreeMap;

use crate::fpdata::{ComponentTopology, FixedPointData};

use super::{require_polarized, Conventions, KostantError, PbarIntegrand};

type Series = Vec<i128>;

/// `1 / (1 - x^step)` up to `x^{len-1}`.
fn geometric(step: i64, len: usize) -> Series {
    let step = step as usize;
    (0..len).map(|d| i128::from(d % step == 0)).collect()
}

fn mul(a: &Series, b: &Series) -> Series {
    let len = a.len();
    let mut out = vec![0i128; len];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
        for (j, y) in b.iter().take(len - i).enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn shifted(a: &Series, by: i64) -> Series {
    let by = by as usize;
    let mut out = vec![0i128; a.len()];
    if by < a.len() {
        out[by..].copy_from_slice(&a[..a.len() - by]);
    }
    out
}

/// Adds `scale · λ^{top} · series(λ^{-1})` to the doubled accumulator.
fn deposit(acc: &mut BTreeMap<i64, i128>, top: i64, s: &Series, scale: i128, hi: i64) {
    for (d, c) in s.iter().enumerate() {
        let beta = top - d as i64;
        if beta <= hi && *c != 0 {
            *acc.entry(beta).or_insert(0) += scale * c;
        }
    }
}

/// Multiplicities of every weight in `[lo, hi]`, read off the expanded
/// localization series of polarized data.
///
/// The returned map has one entry per weight in the window, zeros included.
pub fn character_series(
    data: &FixedPointData,
    lo: i64,
    hi: i64,
    conv: Conventions,
) -> Result<BTreeMap<i64, i64>, KostantError> {
    require_polarized(data)?;
    let mut doubled: BTreeMap<i64, i128> = BTreeMap::new();
    let window_len = |top: i64| -> Option<usize> { (top >= lo && lo <= hi).then(|| (top - lo + 1) as usize) };

    for p in &data.isolated {
        let sum: i64 = p.weights.iter().sum();
        let top = (p.det_weight - sum) / 2;
        let Some(len) = window_len(top) else { continue };
        let mut series = vec![0i128; len];
        series[0] = 1;
        for a in &p.weights {
            series = mul(&series, &geometric(*a, len));
        }
        deposit(&mut doubled, top, &series, 2 * i128::from(p.sign.value()), hi);
    }

    for c in &data.codim2 {
        let a = c.normal_weight;
        let top = (c.det_weight - a) / 2;
        let Some(len) = window_len(top) else { continue };
        let sign = i128::from(c.sign.value() * conv.codim2_factor());
        let g = geometric(a, len);
        match c.topology {
            ComponentTopology::Point => deposit(&mut doubled, top, &g, 2 * sign, hi),
            ComponentTopology::Surface { chern_l, chern_n } => {
                // 2·term = c_L·G - c_N·(1 + x^α)·G²
                let cl = match conv.pbar {
                    PbarIntegrand::Expanded => chern_l,
                    PbarIntegrand::Literal => chern_l - chern_n,
                };
                let g2 = mul(&g, &g);
                let h: Series = g2.iter().zip(shifted(&g2, a)).map(|(x, y)| x + y).collect();
                let s: Series = g
                    .iter()
                    .zip(&h)
                    .map(|(gv, hv)| i128::from(cl) * gv - i128::from(chern_n) * hv)
                    .collect();
                deposit(&mut doubled, top, &s, sign, hi);
            }
        }
    }

    let mut out = BTreeMap::new();
    for beta in lo..=hi {
        let d = doubled.get(&beta).copied().unwrap_or(0);
        if d % 2 != 0 {
            return Err(KostantError::NonIntegerMultiplicity {
                beta,
                doubled: i64::try_from(d).map_err(|_| KostantError::Overflow)?,
            });
        }
        out.insert(beta, i64::try_from(d / 2).map_err(|_| KostantError::Overflow)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::{sphere_data, SphereStructure};

    fn nonzero(m: &BTreeMap<i64, i64>) -> Vec<(i64, i64)> {
        m.iter().filter(|(_, v)| **v != 0).map(|(k, v)| (*k, *v)).collect()
    }

    #[test]
    fn sphere_windows() {
        let s = character_series(&sphere_data(SphereStructure::new(1, 2)), -5, 5, Conventions::default()).unwrap();
        assert_eq!(nonzero(&s), vec![(2, 1), (3, 1)]);
        assert_eq!(s.len(), 11);
        let s = character_series(&sphere_data(SphereStructure::new(1, -1)), -5, 5, Conventions::default()).unwrap();
        assert_eq!(nonzero(&s), vec![(1, -1)]);
    }

    #[test]
    fn empty_data_gives_zeros() {
        let s = character_series(&FixedPointData::new(2), -3, 3, Conventions::default()).unwrap();
        assert_eq!(s.len(), 7);
        assert!(s.values().all(|v| *v == 0));
    }

    #[test]
    fn needs_polarized_input() {
        use crate::fpdata::{IsolatedFixedPoint, Sign};
        let d = FixedPointData::new(1)
            .with_isolated(IsolatedFixedPoint::new(vec![-1], 1, Sign::Plus))
            .with_isolated(IsolatedFixedPoint::new(vec![1], 1, Sign::Plus));
        assert_eq!(
            character_series(&d, -2, 2, Conventions::default()),
            Err(KostantError::NotPolarized)
        );
    }

    #[test]
    fn truncated_products() {
        // 1/(1-x)^2 = 1 + 2x + 3x^2 + ...
        let g = geometric(1, 5);
        assert_eq!(mul(&g, &g), vec![1, 2, 3, 4, 5]);
        assert_eq!(shifted(&g, 2), vec![0, 0, 1, 1, 1]);
        assert_eq!(geometric(2, 5), vec![1, 0, 1, 0, 1]);
    }
}
