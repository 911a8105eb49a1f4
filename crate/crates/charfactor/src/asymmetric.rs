//! (z1, z2, k)-asymmetric partitions and the residue-profile classifiers
//! that decide when a specialized character vanishes.
//!
//! A partition is (z1, z2, k)-asymmetric when its Frobenius coordinates have
//! the shape `(α_1, …, α_r | α_1+z1, …, α_k+z1 omitted, …, α_r+z1, z2)`
//! (k = 0 omits nothing and appends nothing). The classifiers never inspect
//! Frobenius shapes directly: they read the residue profile of `β(λ, tn+1)`,
//! which is what the factorization theorems actually consume. Pair sums
//! `n_i + n_{t−z−1−i}` must all equal 2n except for a single exceptional
//! slot, whose position is the reported index `i0`.

use serde_json::{json, Value};

use crate::error::CharError;
use crate::partition::{
    beta_set, frobenius, from_frobenius, residue_profile, FrobeniusCoords, Partition,
    ResidueProfile,
};

/// Parameters (z1, z2, k) of an asymmetric-partition family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AsymmetricSpec {
    pub z1: usize,
    pub z2: usize,
    pub k: usize,
}

impl AsymmetricSpec {
    pub fn new(z1: usize, z2: usize, k: usize) -> Result<Self, CharError> {
        if z1 <= z2 {
            return Err(CharError::InvalidAsymmetricSpec(format!(
                "need z1 > z2 ≥ 0, got z1={z1}, z2={z2}"
            )));
        }
        Ok(AsymmetricSpec { z1, z2, k })
    }

    /// The β-side of the Frobenius coordinates this spec prescribes for a
    /// given strict α-side.
    fn beta_side(&self, alpha: &[usize]) -> Result<Vec<usize>, CharError> {
        let r = alpha.len();
        if self.k > r {
            return Err(CharError::InvalidAsymmetricSpec(format!(
                "k={} exceeds the rank {r}",
                self.k
            )));
        }
        let mut side: Vec<usize> = if self.k == 0 {
            alpha.iter().map(|&a| a + self.z1).collect()
        } else {
            let mut b: Vec<usize> = alpha
                .iter()
                .enumerate()
                .filter(|&(j, _)| j + 1 != self.k)
                .map(|(_, &a)| a + self.z1)
                .collect();
            b.push(self.z2);
            b
        };
        side.sort_unstable_by(|x, y| y.cmp(x));
        if side.windows(2).any(|w| w[0] <= w[1]) {
            return Err(CharError::InvalidAsymmetricSpec(
                "β-side of the Frobenius coordinates is not strictly decreasing".into(),
            ));
        }
        Ok(side)
    }
}

/// Which clause of a factorization theorem applies to a nonvanishing case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremCase {
    /// GL: nonzero with core ν of at most m parts.
    GlCore,
    /// Odd orthogonal, self-paired middle residue (t odd, i0 = (t−1)/2).
    OddMiddle,
    /// Odd orthogonal, binomial y-prefactor case.
    OddBinomial,
    /// Symplectic, top residue class flagged (i0 = t−1).
    SympTop,
    /// Symplectic, self-paired middle residue (t even, i0 = (t−2)/2).
    SympMiddle,
    /// Symplectic, binomial y-prefactor case.
    SympBinomial,
    /// Even orthogonal, (1,0,0)-asymmetric core (i0 = 0).
    EvenZeroAsym,
    /// Even orthogonal, self-paired middle residue (t even, i0 = t/2).
    EvenMiddle,
    /// Even orthogonal, symmetric-sum y-prefactor case.
    EvenSum,
}

impl TheoremCase {
    pub fn tag(&self) -> &'static str {
        match self {
            TheoremCase::GlCore => "gl-core",
            TheoremCase::OddMiddle => "oo-middle",
            TheoremCase::OddBinomial => "oo-binomial",
            TheoremCase::SympTop => "sp-top-residue",
            TheoremCase::SympMiddle => "sp-middle",
            TheoremCase::SympBinomial => "sp-binomial",
            TheoremCase::EvenZeroAsym => "oe-zero-asymmetric",
            TheoremCase::EvenMiddle => "oe-middle",
            TheoremCase::EvenSum => "oe-symmetric-sum",
        }
    }
}

/// Outcome of a vanishing classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Vanishes,
    NonZero { i0: usize, case: TheoremCase },
}

impl Classification {
    pub fn vanishes(&self) -> bool {
        matches!(self, Classification::Vanishes)
    }

    /// JSON form: `{"vanishes":true}` or `{"vanishes":false,"i0":…,"case":…}`.
    pub fn to_json(&self) -> Value {
        match self {
            Classification::Vanishes => json!({"vanishes": true}),
            Classification::NonZero { i0, case } => {
                json!({"vanishes": false, "i0": i0, "case": case.tag()})
            }
        }
    }
}

/// Full residue-profile classification data for one of the z-families.
/// `pair_index` is the exceptional slot in the theorem's normalized range
/// (the lower member of a pair, a self-paired middle, or a standalone top
/// residue); `excess_index` is the member of that slot whose count exceeds
/// n — the index the worked examples quote. The factorization formulas
/// consume `pair_index`; `Classification` reports `excess_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct ZOutcome {
    pub pair_index: usize,
    pub excess_index: usize,
    pub self_paired: bool,
}

/// Classify a residue profile for the family with parameter `z`
/// (z = 0: odd orthogonal; z = 1: symplectic; z = −1: even orthogonal;
/// larger z only feed the core-lattice bijection). Slots pair residue `i`
/// with `(t − z − 1 − i) mod t`; all pair sums must be 2n except one
/// exceptional slot carrying a single extra unit.
pub(crate) fn classify_profile(profile: &ResidueProfile, n: usize, z: i64) -> Option<ZOutcome> {
    let t = profile.t as i64;
    debug_assert!(-1 <= z && z <= t);
    debug_assert_eq!(profile.padded_length, profile.t * n + 1);
    let counts = &profile.counts;
    let lo_top = div_floor(t - z - 1, 2);
    let mut exceptional: Option<ZOutcome> = None;
    let mut set = |out: ZOutcome, exceptional: &mut Option<ZOutcome>| -> bool {
        if exceptional.is_some() {
            return false;
        }
        *exceptional = Some(out);
        true
    };
    // Pair slots 0 ≤ i ≤ ⌊(t−z−1)/2⌋.
    let mut i = 0i64;
    while i <= lo_top {
        let partner = (t - z - 1 - i).rem_euclid(t);
        let iu = i as usize;
        let pu = partner as usize;
        if iu == pu {
            // Self-paired slot: count must be n, or n+1 at the exceptional slot.
            if counts[iu] == n + 1 {
                if !set(
                    ZOutcome { pair_index: iu, excess_index: iu, self_paired: true },
                    &mut exceptional,
                ) {
                    return None;
                }
            } else if counts[iu] != n {
                return None;
            }
        } else {
            let sum = counts[iu] + counts[pu];
            if sum == 2 * n + 1 {
                let excess = if counts[iu] > n { iu } else { pu };
                if !set(
                    ZOutcome { pair_index: iu, excess_index: excess, self_paired: false },
                    &mut exceptional,
                ) {
                    return None;
                }
            } else if sum != 2 * n {
                return None;
            }
        }
        i += 1;
    }
    // Standalone top slots t−z ≤ i ≤ t−1 (present only for z ≥ 1).
    let mut h = (t - z).max(lo_top + 1);
    while h <= t - 1 {
        let hu = h as usize;
        if counts[hu] == n + 1 {
            if !set(
                ZOutcome { pair_index: hu, excess_index: hu, self_paired: false },
                &mut exceptional,
            ) {
                return None;
            }
        } else if counts[hu] != n {
            return None;
        }
        h += 1;
    }
    exceptional
}

fn div_floor(a: i64, b: i64) -> i64 {
    let q = a / b;
    if a % b != 0 && (a < 0) != (b < 0) {
        q - 1
    } else {
        q
    }
}

/// Build the (z1, z2, k)-asymmetric partition with α-side `alpha`.
pub fn build_asymmetric(alpha: &[usize], spec: &AsymmetricSpec) -> Result<Partition, CharError> {
    if alpha.windows(2).any(|w| w[0] <= w[1]) {
        return Err(CharError::InvalidAsymmetricSpec(
            "α must be strictly decreasing".into(),
        ));
    }
    let beta = spec.beta_side(alpha)?;
    from_frobenius(&FrobeniusCoords {
        alpha: alpha.to_vec(),
        beta,
    })
}

/// The unique k with `λ ∈ Q_{z1,z2,k}`, if any. Uniqueness holds because the
/// candidate β-sides for distinct k differ as sets.
pub fn detect_asymmetric(lambda: &Partition, z1: usize, z2: usize) -> Option<usize> {
    assert!(z1 > z2, "need z1 > z2 ≥ 0");
    let coords = frobenius(lambda);
    let spec_for = |k| AsymmetricSpec { z1, z2, k };
    let mut found = None;
    for k in 0..=coords.rank() {
        if let Ok(side) = spec_for(k).beta_side(&coords.alpha) {
            if side == coords.beta {
                debug_assert!(found.is_none(), "multiple asymmetric certificates");
                found = Some(k);
                #[cfg(not(debug_assertions))]
                break;
            }
        }
    }
    found
}

/// Beta-set deletion criterion: `β(λ, ℓ)` must equal
/// `{α_i + ℓ}` joined with `[0, ℓ−1]` minus the deleted values
/// `{ℓ−1−z2} ∪ {ℓ−1−z1−α_j : j ≠ k}` (for k = 0: minus
/// `{ℓ−1−z1−α_j : all j}` with no z2 deletion). Equivalent to membership in
/// Q_{z1,z2,k} for every admissible padding.
pub fn beta_deletion_check(
    lambda: &Partition,
    ell: usize,
    spec: &AsymmetricSpec,
) -> Result<bool, CharError> {
    let actual = beta_set(lambda, ell)?;
    let coords = frobenius(lambda);
    let r = coords.rank();
    if spec.k > r {
        return Ok(false);
    }
    let mut deletions: Vec<i64> = Vec::new();
    if spec.k > 0 {
        deletions.push(ell as i64 - 1 - spec.z2 as i64);
    }
    for (j, &a) in coords.alpha.iter().enumerate() {
        if j + 1 == spec.k {
            continue;
        }
        deletions.push(ell as i64 - 1 - spec.z1 as i64 - a as i64);
    }
    if deletions.iter().any(|&d| d < 0) {
        return Ok(false);
    }
    let mut sorted = deletions.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != deletions.len() {
        return Ok(false);
    }
    let deleted: Vec<usize> = deletions.iter().map(|&d| d as usize).collect();
    let mut expected: Vec<usize> = coords.alpha.iter().map(|&a| a + ell).collect();
    for v in (0..ell).rev() {
        if !deleted.contains(&v) {
            expected.push(v);
        }
    }
    Ok(expected == actual.entries())
}

/// GL classification: `s_λ(X, ωX, …, y, …)` is nonzero iff the residue
/// profile at `ℓ = tn+m` has exactly m classes with count n+1 (and the rest
/// n), in which case the core is the partition ν with `β_i(ν, m) = e_i` over
/// those classes. Returns that core, or None when the character vanishes.
pub fn classify_schur(
    lambda: &Partition,
    t: usize,
    n: usize,
    m: usize,
) -> Result<Option<Partition>, CharError> {
    let bound = t * n + m;
    if lambda.length() > bound {
        return Err(CharError::LengthBound {
            length: lambda.length(),
            bound,
        });
    }
    let profile = residue_profile(lambda, bound, t)?;
    let mut raised: Vec<usize> = Vec::new();
    for (i, &c) in profile.counts.iter().enumerate() {
        if c == n + 1 {
            raised.push(i);
        } else if c != n {
            return Ok(None);
        }
    }
    if raised.len() != m {
        return Ok(None);
    }
    // e_i sorted decreasing; ν_i = e_i − m + i (1-based i).
    raised.sort_unstable_by(|a, b| b.cmp(a));
    let parts: Vec<usize> = raised
        .iter()
        .enumerate()
        .map(|(idx, &e)| e + idx + 1 - m)
        .collect();
    Ok(Some(Partition::new(parts)))
}

fn check_length_tn1(lambda: &Partition, t: usize, n: usize) -> Result<(), CharError> {
    let bound = t * n + 1;
    if lambda.length() > bound {
        return Err(CharError::LengthBound {
            length: lambda.length(),
            bound,
        });
    }
    Ok(())
}

/// Odd orthogonal (z = 0) vanishing classification at padding tn+1.
pub fn classify_odd(lambda: &Partition, t: usize, n: usize) -> Result<Classification, CharError> {
    check_length_tn1(lambda, t, n)?;
    let profile = residue_profile(lambda, t * n + 1, t)?;
    Ok(match classify_profile(&profile, n, 0) {
        None => Classification::Vanishes,
        Some(out) => {
            let case = if out.self_paired {
                TheoremCase::OddMiddle
            } else {
                TheoremCase::OddBinomial
            };
            Classification::NonZero {
                i0: out.excess_index,
                case,
            }
        }
    })
}

/// Symplectic (z = 1) vanishing classification at padding tn+1.
pub fn classify_symp(lambda: &Partition, t: usize, n: usize) -> Result<Classification, CharError> {
    check_length_tn1(lambda, t, n)?;
    let profile = residue_profile(lambda, t * n + 1, t)?;
    Ok(match classify_profile(&profile, n, 1) {
        None => Classification::Vanishes,
        Some(out) => {
            let case = if out.pair_index == t - 1 {
                TheoremCase::SympTop
            } else if out.self_paired {
                TheoremCase::SympMiddle
            } else {
                TheoremCase::SympBinomial
            };
            Classification::NonZero {
                i0: out.excess_index,
                case,
            }
        }
    })
}

/// Even orthogonal (z = −1) vanishing classification at padding tn+1.
/// Three-way: the (1,0,0)-asymmetric case reports i0 = 0.
pub fn classify_even(lambda: &Partition, t: usize, n: usize) -> Result<Classification, CharError> {
    check_length_tn1(lambda, t, n)?;
    let profile = residue_profile(lambda, t * n + 1, t)?;
    Ok(match classify_profile(&profile, n, -1) {
        None => Classification::Vanishes,
        Some(out) => {
            let case = if out.pair_index == 0 {
                TheoremCase::EvenZeroAsym
            } else if out.self_paired {
                TheoremCase::EvenMiddle
            } else {
                TheoremCase::EvenSum
            };
            Classification::NonZero {
                i0: out.excess_index,
                case,
            }
        }
    })
}

/// All t-cores of size ≤ `max_size` that are (z1, z2, k)-asymmetric for the
/// given k.
pub fn enumerate_asymmetric_tcores(
    spec: &AsymmetricSpec,
    t: usize,
    max_size: usize,
) -> Vec<Partition> {
    crate::enumerate::t_cores_up_to(t, max_size)
        .into_iter()
        .filter(|core| detect_asymmetric(core, spec.z1, spec.z2) == Some(spec.k))
        .collect()
}

/// All t-cores of size ≤ `max_size` that are (z1, z2, k)-asymmetric for any k.
pub fn enumerate_asymmetric_tcores_any_k(
    z1: usize,
    z2: usize,
    t: usize,
    max_size: usize,
) -> Vec<Partition> {
    crate::enumerate::t_cores_up_to(t, max_size)
        .into_iter()
        .filter(|core| detect_asymmetric(core, z1, z2).is_some())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::partitions_up_to;
    use crate::oracles::asymmetric_ks_by_definition;
    use crate::partition::t_core;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn build_asymmetric_examples() {
        let s = AsymmetricSpec::new(2, 0, 1).unwrap();
        assert_eq!(build_asymmetric(&[0], &s).unwrap(), p(&[1]));
        let s = AsymmetricSpec::new(2, 1, 1).unwrap();
        assert_eq!(build_asymmetric(&[1], &s).unwrap(), p(&[2, 1]));
        let s = AsymmetricSpec::new(2, 0, 1).unwrap();
        assert_eq!(build_asymmetric(&[2, 0], &s).unwrap(), p(&[3, 2, 1]));
        // k beyond the rank is rejected.
        let s = AsymmetricSpec::new(2, 0, 3).unwrap();
        assert!(build_asymmetric(&[2, 0], &s).is_err());
        assert!(AsymmetricSpec::new(1, 1, 0).is_err());
    }

    #[test]
    fn detect_asymmetric_examples() {
        assert_eq!(detect_asymmetric(&Partition::empty(), 2, 0), Some(0));
        assert_eq!(detect_asymmetric(&p(&[3, 2, 1]), 2, 0), Some(1));
        assert_eq!(detect_asymmetric(&p(&[2]), 2, 0), None);
        assert_eq!(detect_asymmetric(&p(&[1]), 2, 0), Some(1));
        assert_eq!(detect_asymmetric(&p(&[2, 1]), 2, 1), Some(1));
    }

    #[test]
    fn detect_matches_definition_oracle() {
        for lam in partitions_up_to(15) {
            for (z1, z2) in [(1, 0), (2, 0), (2, 1), (3, 0), (3, 2), (4, 1)] {
                let ks = asymmetric_ks_by_definition(&lam, z1, z2);
                assert!(ks.len() <= 1, "λ={lam} admits several k: {ks:?}");
                assert_eq!(detect_asymmetric(&lam, z1, z2), ks.first().copied());
            }
        }
    }

    #[test]
    fn build_then_detect_roundtrip() {
        for z1 in 1..=5usize {
            for z2 in 0..z1 {
                for alpha in [vec![0], vec![1], vec![3, 1], vec![4, 2, 0], vec![5, 3, 2, 0]] {
                    for k in 0..=alpha.len() {
                        let spec = AsymmetricSpec { z1, z2, k };
                        let lam = build_asymmetric(&alpha, &spec).unwrap();
                        assert_eq!(
                            detect_asymmetric(&lam, z1, z2),
                            Some(k),
                            "α={alpha:?} spec=({z1},{z2},{k})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn beta_deletion_examples() {
        let s = AsymmetricSpec::new(2, 0, 1).unwrap();
        assert!(beta_deletion_check(&p(&[1]), 3, &s).unwrap());
        assert!(!beta_deletion_check(&p(&[2]), 3, &s).unwrap());
        let s0 = AsymmetricSpec::new(2, 0, 0).unwrap();
        assert!(beta_deletion_check(&Partition::empty(), 5, &s0).unwrap());
    }

    #[test]
    fn beta_deletion_equivalent_to_detect() {
        for lam in partitions_up_to(18) {
            for (z1, z2) in [(1, 0), (2, 0), (2, 1), (3, 0), (3, 2)] {
                let detected = detect_asymmetric(&lam, z1, z2);
                for pad in 0..3 {
                    let ell = lam.length() + pad;
                    if ell == 0 {
                        continue;
                    }
                    for k in 0..=frobenius(&lam).rank() {
                        let spec = AsymmetricSpec { z1, z2, k };
                        let by_deletion = beta_deletion_check(&lam, ell, &spec).unwrap();
                        assert_eq!(
                            by_deletion,
                            detected == Some(k),
                            "λ={lam} ℓ={ell} spec=({z1},{z2},{k})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn classify_schur_examples() {
        assert_eq!(
            classify_schur(&Partition::empty(), 3, 1, 0).unwrap(),
            Some(Partition::empty())
        );
        assert_eq!(
            classify_schur(&p(&[2, 1, 1]), 2, 1, 1).unwrap(),
            Some(Partition::empty())
        );
        assert_eq!(classify_schur(&p(&[1]), 2, 1, 0).unwrap(), None);
        assert!(classify_schur(&p(&[1, 1, 1, 1]), 2, 1, 1).is_err());
    }

    #[test]
    fn classify_examples_from_worked_cases() {
        assert_eq!(
            classify_odd(&p(&[1]), 2, 1).unwrap(),
            Classification::NonZero { i0: 1, case: TheoremCase::OddBinomial }
        );
        assert_eq!(
            classify_odd(&Partition::empty(), 2, 1).unwrap(),
            Classification::NonZero { i0: 0, case: TheoremCase::OddBinomial }
        );
        assert_eq!(
            classify_odd(&p(&[6, 4, 2]), 3, 1).unwrap(),
            Classification::Vanishes
        );
        assert_eq!(
            classify_symp(&p(&[1]), 2, 1).unwrap(),
            Classification::NonZero { i0: 1, case: TheoremCase::SympTop }
        );
        assert_eq!(
            classify_symp(&Partition::empty(), 2, 1).unwrap(),
            Classification::NonZero { i0: 0, case: TheoremCase::SympMiddle }
        );
        assert_eq!(
            classify_symp(&p(&[2, 1]), 2, 1).unwrap(),
            Classification::Vanishes
        );
        assert_eq!(
            classify_even(&Partition::empty(), 2, 1).unwrap(),
            Classification::NonZero { i0: 0, case: TheoremCase::EvenZeroAsym }
        );
        assert_eq!(
            classify_even(&p(&[1]), 2, 1).unwrap(),
            Classification::NonZero { i0: 1, case: TheoremCase::EvenMiddle }
        );
        assert_eq!(
            classify_even(&p(&[2, 1]), 2, 1).unwrap(),
            Classification::Vanishes
        );
    }

    /// The profile classifiers agree with direct asymmetric membership of the
    /// t-core, including the k = 0 cases the corollaries gloss over.
    #[test]
    fn classify_matches_core_membership() {
        for t in 2..=5usize {
            for n in 1..=2usize {
                for lam in partitions_up_to(20) {
                    if lam.length() > t * n + 1 {
                        continue;
                    }
                    let core = t_core(&lam, t, lam.length().max(1)).unwrap();
                    let in_family = |z1: usize, z2s: &[usize]| {
                        z2s.iter()
                            .any(|&z2| detect_asymmetric(&core, z1, z2).is_some())
                    };
                    let odd = !classify_odd(&lam, t, n).unwrap().vanishes();
                    assert_eq!(odd, in_family(2, &[0, 1]), "odd t={t} n={n} λ={lam}");
                    let symp = !classify_symp(&lam, t, n).unwrap().vanishes();
                    assert_eq!(symp, in_family(3, &[0, 2]), "symp t={t} n={n} λ={lam}");
                    let even = !classify_even(&lam, t, n).unwrap().vanishes();
                    assert_eq!(even, in_family(1, &[0]), "even t={t} n={n} λ={lam}");
                }
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let any20 = enumerate_asymmetric_tcores_any_k(2, 0, 2, 3);
        assert!(any20.contains(&Partition::empty()));
        assert!(any20.contains(&p(&[1])));
        let s = AsymmetricSpec::new(2, 1, 1).unwrap();
        assert!(enumerate_asymmetric_tcores(&s, 2, 3).contains(&p(&[2, 1])));
        // Double enumeration: per-k lists partition the any-k list.
        for t in [2usize, 3] {
            for (z1, z2) in [(2usize, 0usize), (3, 2)] {
                let all = enumerate_asymmetric_tcores_any_k(z1, z2, t, 12);
                let mut by_k = Vec::new();
                for k in 0..=6 {
                    by_k.extend(enumerate_asymmetric_tcores(
                        &AsymmetricSpec { z1, z2, k },
                        t,
                        12,
                    ));
                }
                by_k.sort_by_key(|q| (q.size(), q.parts().to_vec()));
                assert_eq!(all, by_k);
            }
        }
    }
}
