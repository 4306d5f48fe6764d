//! Counting positive half-integer solutions of `β + Σ k_j α_j = 0`.

use super::KostantError;

/// A partition-function query: positive weights `α_j` and a target
/// `β ∈ ½Z` carried as `2β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionQuery {
    alphas: Vec<i64>,
    target_doubled: i64,
}

impl PartitionQuery {
    pub fn new(alphas: Vec<i64>, target_doubled: i64) -> Result<Self, KostantError> {
        if alphas.is_empty() || alphas.iter().any(|a| *a <= 0) {
            return Err(KostantError::NotPolarized);
        }
        Ok(Self { alphas, target_doubled })
    }

    pub fn alphas(&self) -> &[i64] {
        &self.alphas
    }

    pub fn target_doubled(&self) -> i64 {
        self.target_doubled
    }
}

/// Number of tuples `(k_1, …, k_m) ∈ (Z + ½)^m` with every `k_j > 0` and
/// `target + Σ k_j α_j = 0`.
///
/// Doubling everything, this counts positive odd `κ_j` with
/// `Σ κ_j α_j = -2·target`. Each `κ_j` is bounded by `-2·target / α_j`.
pub fn partition_count(q: &PartitionQuery) -> u64 {
    count_odd(&q.alphas, -q.target_doubled)
}

fn count_odd(alphas: &[i64], remaining: i64) -> u64 {
    let Some((&a, rest)) = alphas.split_first() else {
        return u64::from(remaining == 0);
    };
    if remaining <= 0 {
        return 0;
    }
    if rest.is_empty() {
        let fits = remaining % a == 0 && (remaining / a) % 2 == 1;
        return u64::from(fits);
    }
    let mut total = 0;
    let mut kappa = 1;
    // the remaining weights each need at least one positive odd multiple
    while kappa * a < remaining {
        total += count_odd(rest, remaining - kappa * a);
        kappa += 2;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent check: walk every doubled tuple in a box.
    fn brute(alphas: &[i64], target_doubled: i64) -> u64 {
        let bound = 2 * target_doubled.abs() + 2;
        let mut count = 0;
        let mut idx = vec![1i64; alphas.len()];
        loop {
            let s: i64 = idx.iter().zip(alphas).map(|(k, a)| k * a).sum();
            if s == -target_doubled {
                count += 1;
            }
            let mut j = 0;
            loop {
                if j == idx.len() {
                    return count;
                }
                idx[j] += 2;
                if idx[j] <= bound {
                    break;
                }
                idx[j] = 1;
                j += 1;
            }
        }
    }

    fn count(alphas: &[i64], target_doubled: i64) -> u64 {
        partition_count(&PartitionQuery::new(alphas.to_vec(), target_doubled).unwrap())
    }

    #[test]
    fn two_unit_weights() {
        // (1/2, 5/2), (3/2, 3/2), (5/2, 1/2)
        assert_eq!(count(&[1, 1], -6), 3);
    }

    #[test]
    fn weights_one_two() {
        // only (3/2, 1/2)
        assert_eq!(count(&[1, 2], -5), 1);
    }

    #[test]
    fn positive_target_has_no_solution() {
        assert_eq!(count(&[1], 1), 0);
        assert_eq!(count(&[1, 1], 0), 0);
    }

    #[test]
    fn single_weight_parity() {
        assert_eq!(count(&[2], -2), 1); // k = 1/2
        assert_eq!(count(&[2], -4), 0); // k = 1 is not a half-integer
        assert_eq!(count(&[3], -9), 1); // k = 3/2
    }

    #[test]
    fn rejects_bad_queries() {
        assert_eq!(PartitionQuery::new(vec![], -1), Err(KostantError::NotPolarized));
        assert_eq!(PartitionQuery::new(vec![1, -1], -1), Err(KostantError::NotPolarized));
    }

    #[test]
    fn agrees_with_box_enumeration() {
        for alphas in [
            vec![1],
            vec![2],
            vec![1, 1],
            vec![1, 3],
            vec![2, 2],
            vec![1, 2, 3],
            vec![4, 1, 1],
        ] {
            for t in -24..=3 {
                assert_eq!(count(&alphas, t), brute(&alphas, t), "alphas {alphas:?} target {t}");
            }
        }
    }
}
