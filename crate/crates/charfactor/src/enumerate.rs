//! Exhaustive enumeration helpers: partitions by size, partitions with a
//! length bound, and t-cores. These power the verification sweeps and the
//! brute-force generating-function counts, so they are exact and
//! deterministic.

use crate::partition::{beta_from_entries, is_t_core, partition_from_beta, Partition, ResidueProfile};

/// All partitions of exactly `n`, in lexicographically decreasing part order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(remaining: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(stack.clone()));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            stack.push(part);
            rec(remaining - part, part, stack, out);
            stack.pop();
        }
    }
    rec(n, n.max(1), &mut stack, &mut out);
    out
}

/// All partitions of size ≤ `max_size` (including the empty partition).
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        out.extend(partitions_of(n));
    }
    out
}

/// All partitions of size ≤ `max_size` with at most `max_len` parts.
pub fn partitions_up_to_bounded(max_size: usize, max_len: usize) -> Vec<Partition> {
    partitions_up_to(max_size)
        .into_iter()
        .filter(|p| p.length() <= max_len)
        .collect()
}

/// All t-cores of size ≤ `max_size`, sorted by (size, parts).
///
/// Enumerates all partitions and keeps the fixed points of the core map.
/// Desk-scale sizes keep this instant, and it cannot miss anything.
pub fn t_cores_up_to(t: usize, max_size: usize) -> Vec<Partition> {
    assert!(t >= 2);
    let mut out: Vec<Partition> = partitions_up_to(max_size)
        .into_iter()
        .filter(|p| is_t_core(p, t))
        .collect();
    out.sort_by_key(|p| (p.size(), p.parts().to_vec()));
    out
}

/// The unique t-core whose beta-set at padding `ℓ = Σ counts` is
/// `{tj + i : 0 ≤ j < counts[i]}`. Inverse direction of the
/// core ↔ residue-profile correspondence.
pub fn core_from_profile(t: usize, counts: &[usize]) -> Partition {
    assert_eq!(counts.len(), t);
    let mut entries = Vec::with_capacity(counts.iter().sum());
    for (i, &ni) in counts.iter().enumerate() {
        for j in 0..ni {
            entries.push(t * j + i);
        }
    }
    entries.sort_unstable_by(|a, b| b.cmp(a));
    partition_from_beta(&beta_from_entries(entries))
}

/// Size of the t-core determined by a residue profile:
/// `|λ| = Σ_i (i·n_i + t·n_i(n_i−1)/2) − ℓ(ℓ−1)/2` with `ℓ = Σ n_i`.
pub fn core_size_from_profile(t: usize, counts: &[usize]) -> i64 {
    let ell: usize = counts.iter().sum();
    let mut total: i64 = 0;
    for (i, &ni) in counts.iter().enumerate() {
        let ni = ni as i64;
        total += i as i64 * ni + t as i64 * ni * (ni - 1) / 2;
    }
    total - (ell as i64) * (ell as i64 - 1) / 2
}

/// Independent second route to the t-core list: walk the residue-profile
/// lattice (deviations `c_i = n_i − n` with `Σ c_i = 1` at padding tn+1)
/// instead of filtering partitions. Used to cross-check [`t_cores_up_to`].
pub fn t_cores_up_to_lattice(t: usize, max_size: usize) -> Vec<Partition> {
    // t/2 · Σ c_i² − t/2 ≤ |λ| plus a linear term bounded by (t−1)·Σ|c_i|;
    // a generous per-coordinate bound keeps the search exact and small.
    let bound = (1..).find(|&b| t as i64 * b * b / 2 - (t as i64) * b > max_size as i64).unwrap();
    let mut out = Vec::new();
    let mut c = vec![0i64; t];
    walk(t, max_size, bound, 0, 0, &mut c, &mut out);
    out.sort_by_key(|p: &Partition| (p.size(), p.parts().to_vec()));
    out.dedup();
    out
}

fn walk(t: usize, max_size: usize, bound: i64, idx: usize, sum: i64, c: &mut Vec<i64>, out: &mut Vec<Partition>) {
    if idx == t - 1 {
        let last = 1 - sum;
        if last.abs() > bound {
            return;
        }
        c[t - 1] = last;
        let n = c.iter().map(|&x| (-x).max(0)).max().unwrap_or(0);
        let counts: Vec<usize> = c.iter().map(|&x| (x + n) as usize).collect();
        if core_size_from_profile(t, &counts) <= max_size as i64 {
            let core = core_from_profile(t, &counts);
            if core.size() <= max_size {
                out.push(core);
            }
        }
        return;
    }
    for v in -bound..=bound {
        c[idx] = v;
        walk(t, max_size, bound, idx + 1, sum + v, c, out);
    }
}

/// Residue profile of a t-core reconstructed from per-class deviations at a
/// chosen padding; used by the lattice bijection.
pub fn profile_from_deviations(t: usize, deviations: &[i64]) -> ResidueProfile {
    let n = deviations.iter().map(|&x| (-x).max(0)).max().unwrap_or(0);
    let counts: Vec<usize> = deviations.iter().map(|&x| (x + n) as usize).collect();
    ResidueProfile {
        t,
        padded_length: counts.iter().sum(),
        counts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        // p(0..10) = 1,1,2,3,5,7,11,15,22,30,42
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n).len(), e, "p({n})");
        }
    }

    #[test]
    fn core_enumeration_two_routes_agree() {
        for t in 2..=5 {
            let filtered = t_cores_up_to(t, 16);
            let lattice = t_cores_up_to_lattice(t, 16);
            assert_eq!(filtered, lattice, "t={t}");
        }
    }

    #[test]
    fn two_cores_are_staircases() {
        for c in t_cores_up_to(2, 15) {
            let ell = c.length();
            let staircase: Vec<usize> = (1..=ell).rev().collect();
            assert_eq!(c.parts(), staircase.as_slice());
        }
    }

    #[test]
    fn profile_size_formula_matches() {
        for t in 2..=4 {
            for core in t_cores_up_to(t, 12) {
                let ell = core.length().max(1);
                let prof = crate::partition::residue_profile(&core, ell, t).unwrap();
                assert_eq!(core_size_from_profile(t, &prof.counts), core.size() as i64);
                assert_eq!(core_from_profile(t, &prof.counts), core);
            }
        }
    }
}
