//! Partitions, beta-sets, Frobenius coordinates, residue profiles, t-cores,
//! t-quotients, and the residue-sorting permutation with its sign.
//!
//! Everything downstream (vanishing classification, character factorization,
//! the core-lattice bijection) is driven by the beta-set
//! `β_i(λ, ℓ) = λ_i + ℓ − i` and the residue counts `n_i(λ, ℓ)` of its
//! entries mod t. The padding `ℓ` is always explicit: the t-quotient is only
//! defined up to a cyclic rotation that depends on `ℓ`, and the theorem
//! formulas fix specific paddings.

use serde_json::Value;

use crate::error::CharError;

/// Integer partition in canonical form: weakly decreasing positive parts,
/// trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Canonicalize a weakly decreasing sequence (trailing zeros allowed).
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// 1-based part access; parts beyond the length are zero.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// First part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// JSON array form, e.g. `[4,2,1]`; the empty partition is `[]`.
    pub fn to_json(&self) -> Value {
        Value::Array(self.parts.iter().map(|&p| Value::from(p as u64)).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self, CharError> {
        let arr = v.as_array().ok_or_else(|| CharError::BadJson("partition".into()))?;
        let mut parts = Vec::with_capacity(arr.len());
        for e in arr {
            let p = e
                .as_u64()
                .ok_or_else(|| CharError::BadJson("partition entry".into()))?;
            parts.push(p as usize);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(CharError::BadJson("partition must be weakly decreasing".into()));
        }
        Ok(Partition::new(parts))
    }

    /// Parse the JSON array text form used on the command line.
    pub fn parse(s: &str) -> Result<Self, CharError> {
        let v: Value = serde_json::from_str(s.trim())
            .map_err(|_| CharError::BadJson(format!("partition `{s}`")))?;
        Self::from_json(&v)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// Beta-set `β(λ, ℓ)`: the strictly decreasing sequence `λ_i + ℓ − i`,
/// `1 ≤ i ≤ ℓ`, with `λ_i = 0` past the length of `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaSet {
    entries: Vec<usize>,
    padded_length: usize,
}

impl BetaSet {
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn padded_length(&self) -> usize {
        self.padded_length
    }

    /// Membership test on the strictly decreasing entry list.
    pub fn contains(&self, v: usize) -> bool {
        self.entries.binary_search_by(|e| v.cmp(e)).is_ok()
    }
}

/// `β(λ, ℓ)`; requires `ℓ ≥ length(λ)`.
pub fn beta_set(lambda: &Partition, ell: usize) -> Result<BetaSet, CharError> {
    if ell < lambda.length() {
        return Err(CharError::PaddingTooShort {
            given: ell,
            needed: lambda.length(),
        });
    }
    let entries = (1..=ell).map(|i| lambda.part(i) + ell - i).collect();
    Ok(BetaSet {
        entries,
        padded_length: ell,
    })
}

/// Inverse of [`beta_set`]: recover the partition from a beta-set.
pub fn partition_from_beta(beta: &BetaSet) -> Partition {
    let ell = beta.padded_length;
    let parts = beta
        .entries
        .iter()
        .enumerate()
        .map(|(idx, &b)| b + idx + 1 - ell)
        .collect();
    Partition::new(parts)
}

/// Build a beta-set directly from a strictly decreasing list of distinct
/// nonnegative integers.
pub fn beta_from_entries(entries: Vec<usize>) -> BetaSet {
    assert!(entries.windows(2).all(|w| w[0] > w[1]), "beta entries must strictly decrease");
    BetaSet {
        padded_length: entries.len(),
        entries,
    }
}

/// Conjugate (transpose of the Young diagram).
pub fn conjugate(lambda: &Partition) -> Partition {
    let ell = lambda.length();
    if ell == 0 {
        return Partition::empty();
    }
    let parts = (1..=lambda.first())
        .map(|j| lambda.parts.iter().take_while(|&&p| p >= j).count())
        .collect();
    Partition::new(parts)
}

/// Frobenius coordinates `(α | β)`: arm and leg lengths along the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn rank(&self) -> usize {
        self.alpha.len()
    }
}

/// Frobenius coordinates of `λ`: rank `r = max{j : λ_j ≥ j}`,
/// `α_i = λ_i − i`, `β_j = λ′_j − j`.
pub fn frobenius(lambda: &Partition) -> FrobeniusCoords {
    let conj = conjugate(lambda);
    let rank = (1..=lambda.length())
        .take_while(|&j| lambda.part(j) >= j)
        .count();
    let alpha = (1..=rank).map(|i| lambda.part(i) - i).collect();
    let beta = (1..=rank).map(|j| conj.part(j) - j).collect();
    FrobeniusCoords { alpha, beta }
}

/// Rebuild the partition with Frobenius coordinates `(α | β)`.
/// Both sides must be strictly decreasing and of equal length.
pub fn from_frobenius(coords: &FrobeniusCoords) -> Result<Partition, CharError> {
    let r = coords.alpha.len();
    if coords.beta.len() != r {
        return Err(CharError::InvalidAsymmetricSpec(
            "Frobenius coordinate sides differ in length".into(),
        ));
    }
    let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
    if !strict(&coords.alpha) || !strict(&coords.beta) {
        return Err(CharError::InvalidAsymmetricSpec(
            "Frobenius coordinates must strictly decrease".into(),
        ));
    }
    if r == 0 {
        return Ok(Partition::empty());
    }
    // Beta-set at padding ℓ = β_1 + 1 (the length of the partition):
    // {α_i + ℓ} together with [0, ℓ−1] minus {ℓ−1−β_j}.
    let ell = coords.beta[0] + 1;
    let mut entries: Vec<usize> = coords.alpha.iter().map(|&a| a + ell).collect();
    let deleted: Vec<usize> = coords.beta.iter().map(|&b| ell - 1 - b).collect();
    for v in (0..ell).rev() {
        if !deleted.contains(&v) {
            entries.push(v);
        }
    }
    Ok(partition_from_beta(&beta_from_entries(entries)))
}

/// Residue counts `n_i(λ, ℓ)`: how many beta-set entries are ≡ i (mod t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueProfile {
    pub t: usize,
    pub padded_length: usize,
    pub counts: Vec<usize>,
}

impl ResidueProfile {
    pub fn count(&self, i: usize) -> usize {
        self.counts[i % self.t]
    }
}

pub fn residue_profile(lambda: &Partition, ell: usize, t: usize) -> Result<ResidueProfile, CharError> {
    assert!(t >= 2, "t must be at least 2");
    let beta = beta_set(lambda, ell)?;
    let mut counts = vec![0usize; t];
    for &b in beta.entries() {
        counts[b % t] += 1;
    }
    Ok(ResidueProfile {
        t,
        padded_length: ell,
        counts,
    })
}

/// The t-core, computed by the beta-number rewrite: the core's beta-set at
/// padding ℓ is `{tj + i : 0 ≤ j < n_i(λ, ℓ)}`. The result is independent of
/// the admissible padding and is a fixed point of this operation.
pub fn t_core(lambda: &Partition, t: usize, ell: usize) -> Result<Partition, CharError> {
    let profile = residue_profile(lambda, ell, t)?;
    let mut entries: Vec<usize> = Vec::with_capacity(ell);
    for (i, &ni) in profile.counts.iter().enumerate() {
        for j in 0..ni {
            entries.push(t * j + i);
        }
    }
    entries.sort_unstable_by(|a, b| b.cmp(a));
    Ok(partition_from_beta(&beta_from_entries(entries)))
}

/// Is `λ` its own t-core?
pub fn is_t_core(lambda: &Partition, t: usize) -> bool {
    let ell = lambda.length().max(1);
    t_core(lambda, t, ell).map(|c| &c == lambda).unwrap_or(false)
}

/// The t-quotient "necklace" at padding ℓ: component `i` collects the
/// beta entries ≡ i (mod t), written `β^{(i)}_j = t·β̃_j + i`, and unwinds
/// them to the partition `λ^{(i)}_j = β̃_j − n_i + j`.
///
/// Components are stored in canonical (trimmed) form; the untrimmed part
/// counts are exactly the residue profile at the same padding. Increasing ℓ
/// by one rotates the necklace one step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientNecklace {
    pub components: Vec<Partition>,
    pub padded_length: usize,
}

impl QuotientNecklace {
    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i % self.components.len()]
    }

    /// `|core| + t·Σ_i |λ^{(i)}|` reconstructs `|λ|`.
    pub fn total_component_size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }
}

pub fn t_quotient(lambda: &Partition, t: usize, ell: usize) -> Result<QuotientNecklace, CharError> {
    let beta = beta_set(lambda, ell)?;
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); t];
    for &b in beta.entries() {
        classes[b % t].push(b / t);
    }
    let components = classes
        .into_iter()
        .map(|tilde| {
            // `tilde` is decreasing because the beta entries are.
            let ni = tilde.len();
            let parts = tilde
                .into_iter()
                .enumerate()
                .map(|(idx, bt)| bt + idx + 1 - ni)
                .collect();
            Partition::new(parts)
        })
        .collect();
    Ok(QuotientNecklace {
        components,
        padded_length: ell,
    })
}

/// A permutation of `{1..ℓ}` in one-line notation together with its sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub one_line: Vec<usize>,
    pub sign: i8,
}

pub fn inversion_parity_sign(one_line: &[usize]) -> i8 {
    let mut inv = 0usize;
    for i in 0..one_line.len() {
        for j in i + 1..one_line.len() {
            if one_line[i] > one_line[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The permutation `σ^E_λ` that regroups `β(λ, ℓ)` by residue class mod t:
/// first the classes listed in `E` (a strictly decreasing list of residues),
/// then the remaining classes in increasing order, each class internally in
/// decreasing beta order. Entry `j` of the one-line form is the position of
/// the j-th regrouped value inside `β(λ, ℓ)`.
pub fn sigma_permutation(
    lambda: &Partition,
    ell: usize,
    t: usize,
    class_order: &[usize],
) -> Result<SignedPermutation, CharError> {
    if class_order.iter().any(|&e| e >= t) {
        return Err(CharError::InvalidResidueList(format!(
            "residues must lie in [0, {}]",
            t - 1
        )));
    }
    if !class_order.windows(2).all(|w| w[0] > w[1]) {
        return Err(CharError::InvalidResidueList(
            "residue list must be strictly decreasing".into(),
        ));
    }
    let beta = beta_set(lambda, ell)?;
    let mut order: Vec<usize> = class_order.to_vec();
    for r in 0..t {
        if !class_order.contains(&r) {
            order.push(r);
        }
    }
    let mut one_line = Vec::with_capacity(ell);
    for &class in &order {
        for (pos, &b) in beta.entries().iter().enumerate() {
            if b % t == class {
                one_line.push(pos + 1);
            }
        }
    }
    let sign = inversion_parity_sign(&one_line);
    Ok(SignedPermutation { one_line, sign })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::rim_hook_core;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn beta_set_examples() {
        assert_eq!(beta_set(&p(&[4, 2, 1]), 3).unwrap().entries(), &[6, 3, 1]);
        assert_eq!(beta_set(&Partition::empty(), 4).unwrap().entries(), &[3, 2, 1, 0]);
        assert_eq!(beta_set(&p(&[1]), 4).unwrap().entries(), &[4, 2, 1, 0]);
        assert!(matches!(
            beta_set(&p(&[4, 2, 1]), 2),
            Err(CharError::PaddingTooShort { .. })
        ));
    }

    #[test]
    fn partition_from_beta_examples() {
        let b = beta_from_entries(vec![6, 3, 1]);
        assert_eq!(partition_from_beta(&b), p(&[4, 2, 1]));
        let b = beta_from_entries(vec![3, 2, 1, 0]);
        assert_eq!(partition_from_beta(&b), Partition::empty());
        let b = beta_from_entries(vec![5, 2, 1, 0]);
        assert_eq!(partition_from_beta(&b), p(&[2]));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p(&[4, 2, 1])), p(&[3, 2, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&p(&[3, 3])), p(&[2, 2, 2]));
    }

    #[test]
    fn frobenius_examples() {
        let f = frobenius(&p(&[3, 2, 1]));
        assert_eq!((f.alpha.as_slice(), f.beta.as_slice()), (&[2, 0][..], &[2, 0][..]));
        let f = frobenius(&p(&[1]));
        assert_eq!((f.alpha.as_slice(), f.beta.as_slice()), (&[0][..], &[0][..]));
        let f = frobenius(&p(&[2, 1]));
        assert_eq!((f.alpha.as_slice(), f.beta.as_slice()), (&[1][..], &[1][..]));
    }

    #[test]
    fn residue_profile_examples() {
        // Empty partition at ℓ = tn+1 has n+1 zero-residues and n of each other.
        for t in 2..=5 {
            for n in 1..=2 {
                let prof = residue_profile(&Partition::empty(), t * n + 1, t).unwrap();
                assert_eq!(prof.counts[0], n + 1);
                assert!(prof.counts[1..].iter().all(|&c| c == n));
            }
        }
        let prof = residue_profile(&p(&[4, 2, 1]), 3, 2).unwrap();
        assert_eq!(prof.counts, vec![1, 2]);
        let prof = residue_profile(&p(&[6, 4, 2]), 4, 3).unwrap();
        assert_eq!(prof.counts, vec![4, 0, 0]);
    }

    #[test]
    fn t_core_examples() {
        assert_eq!(t_core(&p(&[4, 2, 1]), 2, 3).unwrap(), p(&[1]));
        assert_eq!(t_core(&Partition::empty(), 3, 4).unwrap(), Partition::empty());
        // (3,1,1) is already a 3-core.
        assert_eq!(t_core(&p(&[3, 1, 1]), 3, 3).unwrap(), p(&[3, 1, 1]));
        assert!(is_t_core(&p(&[3, 1, 1]), 3));
    }

    #[test]
    fn t_quotient_examples() {
        let q = t_quotient(&p(&[4, 2, 1]), 2, 3).unwrap();
        assert_eq!(q.components, vec![p(&[3]), Partition::empty()]);
        let q = t_quotient(&Partition::empty(), 3, 5).unwrap();
        assert!(q.components.iter().all(Partition::is_empty));
        // Size conservation on the worked case: 7 = 1 + 2·3.
        let lam = p(&[4, 2, 1]);
        let core = t_core(&lam, 2, 3).unwrap();
        let q = t_quotient(&lam, 2, 3).unwrap();
        assert_eq!(lam.size(), core.size() + 2 * q.total_component_size());
    }

    #[test]
    fn sigma_permutation_examples() {
        // Already residue-sorted: identity.
        let s = sigma_permutation(&p(&[4, 2, 1]), 3, 2, &[]).unwrap();
        assert_eq!(s.one_line, vec![1, 2, 3]);
        assert_eq!(s.sign, 1);
        // Empty partition at ℓ = tn+1 matches the closed-form sign.
        for t in 2..=5usize {
            for n in 1..=2usize {
                let s = sigma_permutation(&Partition::empty(), t * n + 1, t, &[]).unwrap();
                let expected = if (t * (t - 1) / 2) * (n * (n + 1) / 2) % 2 == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(s.sign, expected, "t={t} n={n}");
            }
        }
        // t=3, n=1 one-line form (1,4,3,2).
        let s = sigma_permutation(&Partition::empty(), 4, 3, &[]).unwrap();
        assert_eq!(s.one_line, vec![1, 4, 3, 2]);
        assert!(sigma_permutation(&p(&[1]), 3, 2, &[2]).is_err());
        assert!(sigma_permutation(&p(&[1]), 3, 3, &[1, 2]).is_err());
    }

    #[test]
    fn core_matches_rim_hook_oracle_exhaustively() {
        for t in 2..=5 {
            for lam in crate::enumerate::partitions_up_to(20) {
                let ell = lam.length().max(1);
                let core = t_core(&lam, t, ell).unwrap();
                assert_eq!(core, rim_hook_core(&lam, t), "t={t} λ={lam}");
                // Idempotence and ℓ-independence.
                assert_eq!(t_core(&core, t, core.length().max(1)).unwrap(), core);
                assert_eq!(t_core(&lam, t, ell + 7).unwrap(), core);
                // Residue profiles agree at equal padding.
                let ell2 = ell + 3;
                assert_eq!(
                    residue_profile(&lam, ell2, t).unwrap().counts,
                    residue_profile(&core, ell2, t).unwrap().counts
                );
            }
        }
    }

    #[test]
    fn quotient_size_identity_and_rotation() {
        for t in 2..=5 {
            for lam in crate::enumerate::partitions_up_to(30) {
                let ell = lam.length().max(1);
                let core = t_core(&lam, t, ell).unwrap();
                let q = t_quotient(&lam, t, ell).unwrap();
                assert_eq!(lam.size(), core.size() + t * q.total_component_size());
                // ℓ+1 rotates the necklace one step; ℓ+t restores it.
                let q1 = t_quotient(&lam, t, ell + 1).unwrap();
                for i in 0..t {
                    assert_eq!(q1.components[(i + 1) % t], q.components[i]);
                }
                let qt = t_quotient(&lam, t, ell + t).unwrap();
                assert_eq!(qt.components, q.components);
            }
        }
    }

    /// Frobenius rank of a t-core from its residue profile (the two rank
    /// lemmas, at paddings tn and tn+1).
    #[test]
    fn rank_from_profile_lemmas() {
        for t in 2..=5usize {
            for core in crate::enumerate::t_cores_up_to(t, 18) {
                for n in 1..=3usize {
                    let r = frobenius(&core).rank();
                    if core.length() <= t * n {
                        let prof = residue_profile(&core, t * n, t).unwrap();
                        let sum: usize = prof.counts.iter().map(|&c| c.saturating_sub(n)).sum();
                        assert_eq!(r, sum, "t={t} n={n} core={core}");
                    }
                    if core.length() <= t * n + 1 {
                        let prof = residue_profile(&core, t * n + 1, t).unwrap();
                        let mut sum = prof.counts[0].saturating_sub(n + 1);
                        sum += prof.counts[1..]
                            .iter()
                            .map(|&c| c.saturating_sub(n))
                            .sum::<usize>();
                        assert_eq!(r, sum, "t={t} n={n} core={core}");
                    }
                }
            }
        }
    }

    fn arb_partition(max_size: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..=8, 0..=6).prop_map(move |mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            let mut total = 0;
            let mut parts = Vec::new();
            for x in v {
                if total + x > max_size {
                    break;
                }
                total += x;
                parts.push(x);
            }
            Partition::new(parts)
        })
    }

    proptest! {
        #[test]
        fn beta_roundtrip(lam in arb_partition(30), pad in 0usize..10) {
            let ell = lam.length() + pad;
            if ell > 0 {
                let beta = beta_set(&lam, ell).unwrap();
                prop_assert_eq!(partition_from_beta(&beta), lam);
            }
        }

        #[test]
        fn conjugate_involution_and_frobenius_size(lam in arb_partition(30)) {
            prop_assert_eq!(conjugate(&conjugate(&lam)), lam.clone());
            let f = frobenius(&lam);
            let total: usize = f.rank() + f.alpha.iter().sum::<usize>() + f.beta.iter().sum::<usize>();
            prop_assert_eq!(total, lam.size());
            prop_assert_eq!(from_frobenius(&f).unwrap(), lam);
        }

        #[test]
        fn sigma_sign_matches_inversion_parity(lam in arb_partition(20), t in 2usize..=5, pad in 0usize..4) {
            let ell = lam.length() + pad;
            if ell > 0 {
                let s = sigma_permutation(&lam, ell, t, &[]).unwrap();
                // The one-line form must be a permutation of 1..=ℓ.
                let mut sorted = s.one_line.clone();
                sorted.sort_unstable();
                prop_assert_eq!(sorted, (1..=ell).collect::<Vec<_>>());
                prop_assert_eq!(s.sign, inversion_parity_sign(&s.one_line));
            }
        }
    }
}
