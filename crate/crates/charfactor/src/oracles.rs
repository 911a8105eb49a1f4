//! Independent reference implementations used by the test suites. Each one
//! deliberately avoids the code path it is meant to check: the core oracle
//! removes rim hooks one at a time instead of rewriting the whole beta-set,
//! and the asymmetric-membership oracle rebuilds partitions from Frobenius
//! data instead of inspecting beta-set deletions.

use crate::partition::{beta_from_entries, beta_set, partition_from_beta, Partition};

/// t-core by repeated single rim-hook removal: while some beta entry `b` has
/// `b ≥ t` and `b − t` free, replace it (this is exactly the removal of one
/// t-rim-hook from the diagram). The result a t-core reaches this way is
/// unique regardless of removal order.
pub fn rim_hook_core(lambda: &Partition, t: usize) -> Partition {
    let ell = lambda.length().max(1);
    let mut entries: Vec<usize> = beta_set(lambda, ell).unwrap().entries().to_vec();
    loop {
        let mut changed = false;
        for i in 0..entries.len() {
            let b = entries[i];
            if b >= t && !entries.contains(&(b - t)) {
                entries[i] = b - t;
                entries.sort_unstable_by(|a, b| b.cmp(a));
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    partition_from_beta(&beta_from_entries(entries))
}

/// Brute-force membership in Q_{z1,z2,k}: rebuild the candidate partition
/// from the Frobenius recipe of the definition and compare. Returns every k
/// that certifies `λ` (the library claims there is at most one).
pub fn asymmetric_ks_by_definition(lambda: &Partition, z1: usize, z2: usize) -> Vec<usize> {
    let coords = crate::partition::frobenius(lambda);
    let r = coords.rank();
    let mut out = Vec::new();
    for k in 0..=r {
        let beta_side: Vec<usize> = if k == 0 {
            coords.alpha.iter().map(|&a| a + z1).collect()
        } else {
            let mut b: Vec<usize> = coords
                .alpha
                .iter()
                .enumerate()
                .filter(|&(j, _)| j + 1 != k)
                .map(|(_, &a)| a + z1)
                .collect();
            b.push(z2);
            b.sort_unstable_by(|x, y| y.cmp(x));
            b
        };
        if beta_side.windows(2).any(|w| w[0] <= w[1]) {
            continue;
        }
        let candidate = crate::partition::from_frobenius(&crate::partition::FrobeniusCoords {
            alpha: coords.alpha.clone(),
            beta: beta_side,
        });
        if candidate.as_ref() == Ok(lambda) {
            out.push(k);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rim_hook_core_small_cases() {
        let p = |v: &[usize]| Partition::new(v.to_vec());
        assert_eq!(rim_hook_core(&p(&[4, 2, 1]), 2), p(&[1]));
        assert_eq!(rim_hook_core(&p(&[3, 1, 1]), 3), p(&[3, 1, 1]));
        assert_eq!(rim_hook_core(&Partition::empty(), 4), Partition::empty());
    }
}
