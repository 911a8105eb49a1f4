//! Enumerative layer: the staircase bijection for (z1,z2,k)-asymmetric
//! partitions, their generating function, and the size-tracking bijection ψ
//! between the nonvanishing t-core families and integer lattice labels.
//!
//! Conventions for ψ (these are validated exhaustively by the test suites):
//!
//! * `ψ(λ)_i = n_i(λ, tn+1) − n` for the stored indices
//!   `0 ≤ i ≤ ⌊(t−z−2)/2⌋`, and `v̌` is the exceptional slot index `i0`.
//! * `ψ⁻¹` puts the extra unit on the slot itself when `v̌` is a standalone
//!   top residue (`v̌ ∈ [t−z, t−1]`) or the self-paired middle
//!   (`v̌ = (t−z−1)/2`); otherwise the exceptional pair gets its extra unit
//!   on the partner side: `n_{t−z−1−v̌} = n − v_{v̌} + 1`.
//! * the size of `ψ⁻¹(v, v̌)` is `t‖v‖² − b⃗·v + v̌` in the standalone/middle
//!   branches (with `b_i = t−z−1−2i`), and
//!   `t‖v‖² − b⃗·v − t·v_{v̌} + (t−z−1) − v̌` otherwise.
//!
//! For z = −1 the pair structure wraps: residue 0 is self-paired, so stored
//! coordinate `v_0` only takes the values 0 and 1, and `v_0 = 1` exactly when
//! `v̌ = 0` (the (1,0,0)-asymmetric branch). Labels violating that coupling
//! do not correspond to any t-core and are rejected.

use num::bigint::BigInt;
use num::traits::{One, Zero};
use serde_json::{json, Value};

use crate::asymmetric::{classify_profile, detect_asymmetric};
use crate::enumerate::{core_from_profile, partitions_of};
use crate::error::CharError;
use crate::partition::{frobenius, residue_profile, Partition};

/// Label `(v⃗, v̌)` for a t-core in the z-family, mirroring the lattice side
/// of the bijection ψ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeLabel {
    pub t: usize,
    pub z: i64,
    pub v: Vec<i64>,
    pub check: usize,
}

impl LatticeLabel {
    /// Stored coordinate count ⌊(t−z)/2⌋.
    pub fn dim(t: usize, z: i64) -> usize {
        let d = t as i64 - z;
        if d <= 0 {
            0
        } else {
            (d / 2) as usize
        }
    }

    /// Self-paired middle slot `(t−z−1)/2`, when `t−z` is odd.
    pub fn middle(t: usize, z: i64) -> Option<usize> {
        let d = t as i64 - z - 1;
        if d >= 0 && d % 2 == 0 {
            Some((d / 2) as usize)
        } else {
            None
        }
    }

    /// Valid check-slot values: `[0, ⌊(t−z−1)/2⌋] ∪ [t−z, t−1]`.
    pub fn check_range(t: usize, z: i64) -> Vec<usize> {
        let mut out = Vec::new();
        let lo_top = (t as i64 - z - 1).div_euclid(2);
        let mut i = 0i64;
        while i <= lo_top {
            out.push(i as usize);
            i += 1;
        }
        let mut h = (t as i64 - z).max(lo_top + 1);
        while h <= t as i64 - 1 {
            out.push(h as usize);
            h += 1;
        }
        out
    }

    pub fn validate(&self) -> Result<(), CharError> {
        let t = self.t;
        let z = self.z;
        if z < -1 || z > t as i64 {
            return Err(CharError::InvalidLabel(format!("need −1 ≤ z ≤ t, got z={z}")));
        }
        if self.v.len() != Self::dim(t, z) {
            return Err(CharError::InvalidLabel(format!(
                "expected {} stored coordinates, got {}",
                Self::dim(t, z),
                self.v.len()
            )));
        }
        if !Self::check_range(t, z).contains(&self.check) {
            return Err(CharError::InvalidLabel(format!(
                "check slot {} outside the allowed ranges",
                self.check
            )));
        }
        if z == -1 {
            // Residue 0 is self-paired: v_0 ∈ {0, 1}, the 1 flagging v̌ = 0.
            let v0 = self.v.first().copied().unwrap_or(0);
            let ok = (v0 == 1 && self.check == 0) || (v0 == 0 && self.check != 0);
            if !ok {
                return Err(CharError::InvalidLabel(
                    "for z = −1, v_0 must be 1 exactly when the check slot is 0".into(),
                ));
            }
        }
        Ok(())
    }

    /// JSON form `{"v": […], "check": v̌}`.
    pub fn to_json(&self) -> Value {
        json!({"v": self.v, "check": self.check})
    }

    pub fn from_json(t: usize, z: i64, value: &Value) -> Result<Self, CharError> {
        let bad = || CharError::BadJson("lattice label".into());
        let varr = value.get("v").and_then(Value::as_array).ok_or_else(bad)?;
        let v: Vec<i64> = varr
            .iter()
            .map(|x| x.as_i64().ok_or_else(bad))
            .collect::<Result<_, _>>()?;
        let check = value.get("check").and_then(Value::as_u64).ok_or_else(bad)? as usize;
        let label = LatticeLabel { t, z, v, check };
        label.validate()?;
        Ok(label)
    }
}

/// The staircase image of a (z1,z2,k)-asymmetric partition with k ≥ 1:
/// writing `(α_1 > … > α_r)` for the Frobenius arm lengths,
///
/// ```text
/// (z1(r−1)+r, (2r−1)^{α_r}, (2r−3)^{α_{r−1}−α_r}, …, (2k−1)^{α_k−α_{k+1}},
///  (2k−2)^{α_{k−1}−α_k}, …, 2^{α_1−α_2}, 1^{z2})
/// ```
///
/// Size-preserving and injective on the family. The empty partition (rank 0)
/// maps to itself.
pub fn staircase_image(lambda: &Partition, z1: usize, z2: usize) -> Result<Partition, CharError> {
    let k = detect_asymmetric(lambda, z1, z2).ok_or(CharError::NotAsymmetric {
        z1: z1 as i64,
        z2: z2 as i64,
    })?;
    if lambda.is_empty() {
        return Ok(Partition::empty());
    }
    if k == 0 {
        return Err(CharError::InvalidAsymmetricSpec(
            "the staircase bijection needs k ≥ 1".into(),
        ));
    }
    let alpha = frobenius(lambda).alpha;
    Ok(staircase_from_arms(&alpha, z1, z2, k))
}

/// Build the staircase shape directly from the arm sequence.
pub fn staircase_from_arms(alpha: &[usize], z1: usize, z2: usize, k: usize) -> Partition {
    let r = alpha.len();
    assert!(k >= 1 && k <= r);
    let a = |j: usize| if j <= r { alpha[j - 1] } else { 0 };
    let mut parts = vec![z1 * (r - 1) + r];
    for j in (k..=r).rev() {
        let mult = a(j) - a(j + 1);
        parts.extend(std::iter::repeat(2 * j - 1).take(mult));
    }
    for j in (1..k).rev() {
        let mult = a(j) - a(j + 1);
        parts.extend(std::iter::repeat(2 * j).take(mult));
    }
    parts.extend(std::iter::repeat(1).take(z2));
    Partition::new(parts)
}

/// Coefficients `c_0 … c_M` of a formal power series in q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCoefficients {
    pub coefficients: Vec<BigInt>,
}

impl SeriesCoefficients {
    pub fn coefficient(&self, m: usize) -> &BigInt {
        &self.coefficients[m]
    }
}

/// Generating function for (z1,z2,k)-asymmetric partitions (k ≥ 1):
///
/// ```text
/// Σ_{n ≥ k} q^{z2 + z1(n−1) + n(n−1) + k}
///           / [(1−q²)⋯(1−q^{2k−2}) · (1−q^{2k−1})⋯(1−q^{2n−1})]
/// ```
///
/// truncated to degree M. Terms with n < k would count partitions whose rank
/// is smaller than the omitted coordinate, so the sum starts at n = k.
pub fn gf_coefficients(z1: usize, z2: usize, k: usize, max_degree: usize) -> SeriesCoefficients {
    assert!(z1 > z2, "need z1 > z2 ≥ 0");
    assert!(k >= 1, "the generating function is for k ≥ 1");
    let mut coeffs = vec![BigInt::zero(); max_degree + 1];
    for n in k.max(1).. {
        let exp = z2 + z1 * (n - 1) + n * (n - 1) + k;
        if exp > max_degree {
            break;
        }
        // q^exp / Π (1 − q^{d}) truncated.
        let mut term = vec![BigInt::zero(); max_degree + 1];
        term[exp] = BigInt::one();
        for j in 1..k {
            geometric_divide(&mut term, 2 * j);
        }
        for j in k..=n {
            geometric_divide(&mut term, 2 * j - 1);
        }
        for (c, t) in coeffs.iter_mut().zip(term) {
            *c += t;
        }
    }
    SeriesCoefficients { coefficients: coeffs }
}

/// In-place multiplication by 1/(1−q^d) = 1 + q^d + q^{2d} + …, truncated.
fn geometric_divide(coeffs: &mut [BigInt], d: usize) {
    for i in d..coeffs.len() {
        let prev = coeffs[i - d].clone();
        coeffs[i] += prev;
    }
}

/// Brute-force count of (z1,z2,k)-asymmetric partitions of each size ≤ M,
/// straight from the Frobenius-shape definition.
pub fn brute_force_asymmetric_counts(
    z1: usize,
    z2: usize,
    k: usize,
    max_degree: usize,
) -> Vec<usize> {
    (0..=max_degree)
        .map(|m| {
            partitions_of(m)
                .into_iter()
                .filter(|lam| detect_asymmetric(lam, z1, z2) == Some(k))
                .count()
        })
        .collect()
}

/// ψ: classify the t-core's residue profile and read off the label.
/// The input must be a t-core in `Q^{(t)}_{z+2,0} ∪ Q^{(t)}_{z+2,z+1}`.
pub fn psi(lambda: &Partition, t: usize, z: i64) -> Result<LatticeLabel, CharError> {
    if !crate::partition::is_t_core(lambda, t) {
        return Err(CharError::InvalidLabel(format!("{lambda} is not a {t}-core")));
    }
    // Any padding tn+1 ≥ ℓ(λ) works; the stored coordinates are
    // padding-invariant.
    let n = lambda.length().saturating_sub(1).div_ceil(t).max(1);
    let profile = residue_profile(lambda, t * n + 1, t)?;
    let out = classify_profile(&profile, n, z).ok_or_else(|| {
        CharError::InvalidLabel(format!("{lambda} is not in the z={z} family for t={t}"))
    })?;
    let dim = LatticeLabel::dim(t, z);
    let v: Vec<i64> = (0..dim)
        .map(|i| profile.counts[i] as i64 - n as i64)
        .collect();
    let label = LatticeLabel {
        t,
        z,
        v,
        check: out.pair_index,
    };
    label.validate().expect("ψ produced an invalid label");
    Ok(label)
}

/// ψ⁻¹: rebuild the unique family t-core whose residue profile matches the
/// label's deviations.
pub fn psi_inverse(label: &LatticeLabel) -> Result<Partition, CharError> {
    label.validate()?;
    let t = label.t;
    let z = label.z;
    let dim = LatticeLabel::dim(t, z);
    let middle = LatticeLabel::middle(t, z);
    let mut dev = vec![0i64; t];
    for (i, &vi) in label.v.iter().enumerate() {
        dev[i] = vi;
    }
    if let Some(mid) = middle {
        dev[mid] = if label.check == mid { 1 } else { 0 };
    }
    for i in 0..dim {
        let partner = (t as i64 - z - 1 - i as i64).rem_euclid(t as i64) as usize;
        if partner == i {
            // z = −1, i = 0: the stored value already carries its unit.
            continue;
        }
        let mut c = -label.v[i];
        if label.check == i {
            c += 1;
        }
        dev[partner] = c;
    }
    for h in LatticeLabel::check_range(t, z) {
        if h >= dim && Some(h) != middle && h == label.check {
            // Standalone top residue.
            dev[h] = 1;
        }
    }
    debug_assert_eq!(dev.iter().sum::<i64>(), 1, "profile deviations must sum to 1");
    let shift = dev.iter().map(|&c| (-c).max(0)).max().unwrap_or(0);
    let counts: Vec<usize> = dev.iter().map(|&c| (c + shift) as usize).collect();
    Ok(core_from_profile(t, &counts))
}

/// Size of `psi_inverse(label)` straight from the label:
/// `t‖v‖² − b⃗·v` plus `v̌` on the standalone/middle branches, and
/// `−t·v_{v̌} + (t−z−1) − v̌` otherwise, with `b_i = t−z−1−2i`.
pub fn size_formula(label: &LatticeLabel) -> i64 {
    let t = label.t as i64;
    let z = label.z;
    let norm2: i64 = label.v.iter().map(|&x| x * x).sum();
    let b_dot_v: i64 = label
        .v
        .iter()
        .enumerate()
        .map(|(i, &x)| (t - z - 1 - 2 * i as i64) * x)
        .sum();
    let check = label.check as i64;
    let standalone = check >= t - z && check <= t - 1;
    let middle = LatticeLabel::middle(label.t, z).map(|m| m as i64) == Some(check);
    let branch = if standalone || middle {
        check
    } else {
        -t * label.v[label.check] + (t - z - 1) - check
    };
    t * norm2 - b_dot_v + branch
}

/// All valid labels with stored coordinates bounded by `bound` in absolute
/// value, in a deterministic order.
pub fn labels_with_bound(t: usize, z: i64, bound: i64) -> Vec<LatticeLabel> {
    let dim = LatticeLabel::dim(t, z);
    let mut out = Vec::new();
    let mut v = vec![0i64; dim];
    fn rec(
        t: usize,
        z: i64,
        bound: i64,
        idx: usize,
        v: &mut Vec<i64>,
        out: &mut Vec<LatticeLabel>,
    ) {
        if idx == v.len() {
            for check in LatticeLabel::check_range(t, z) {
                let label = LatticeLabel {
                    t,
                    z,
                    v: v.clone(),
                    check,
                };
                if label.validate().is_ok() {
                    out.push(label);
                }
            }
            return;
        }
        for val in -bound..=bound {
            v[idx] = val;
            rec(t, z, bound, idx + 1, v, out);
        }
    }
    rec(t, z, bound, 0, &mut v, &mut out);
    out
}

/// Witnesses for the infinitude of the family: `count` family t-cores of
/// strictly increasing size (starting from ∅), found by walking labels of
/// growing coordinate bound. When `t − z ≤ 1` the label space is finite and
/// the returned list caps at its actual size.
pub fn infinitude_witness(t: usize, z: i64, count: usize) -> Result<Vec<Partition>, CharError> {
    if z < -1 || z > t as i64 {
        return Err(CharError::Usage(format!("need −1 ≤ z ≤ t, got z={z}")));
    }
    let finite = LatticeLabel::dim(t, z) == 0;
    let mut bound = 1i64;
    loop {
        let mut sized: Vec<(i64, Partition)> = labels_with_bound(t, z, bound)
            .into_iter()
            .map(|label| (size_formula(&label), psi_inverse(&label).unwrap()))
            .collect();
        sized.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.parts().cmp(b.1.parts())));
        let mut out: Vec<Partition> = Vec::new();
        let mut last_size: Option<i64> = None;
        for (size, core) in sized {
            if last_size == Some(size) || out.len() == count {
                continue;
            }
            debug_assert_eq!(size, core.size() as i64);
            last_size = Some(size);
            out.push(core);
        }
        if out.len() >= count || finite {
            return Ok(out);
        }
        bound += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{partitions_up_to, t_cores_up_to};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase_image(&p(&[1]), 2, 0).unwrap(), p(&[1]));
        assert_eq!(staircase_image(&p(&[3, 2, 1]), 2, 0).unwrap(), p(&[4, 1, 1]));
        assert_eq!(staircase_image(&Partition::empty(), 3, 1).unwrap(), Partition::empty());
        assert!(staircase_image(&p(&[2]), 2, 0).is_err());
    }

    #[test]
    fn staircase_injective_and_size_preserving() {
        for (z1, z2) in [(1usize, 0usize), (2, 0), (2, 1), (3, 0), (3, 2)] {
            let mut images = std::collections::BTreeSet::new();
            for lam in partitions_up_to(25) {
                match detect_asymmetric(&lam, z1, z2) {
                    Some(k) if k >= 1 => {
                        let img = staircase_image(&lam, z1, z2).unwrap();
                        assert_eq!(img.size(), lam.size(), "size not preserved for {lam}");
                        assert!(images.insert((k, img)), "collision at {lam}");
                    }
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn gf_small_cases() {
        let gf = gf_coefficients(2, 0, 1, 10);
        // Smallest (2,0,1)-asymmetric partition is (1).
        assert_eq!(gf.coefficient(0), &BigInt::zero());
        assert_eq!(gf.coefficient(1), &BigInt::one());
        let brute = brute_force_asymmetric_counts(2, 0, 1, 10);
        for (m, &count) in brute.iter().enumerate() {
            assert_eq!(gf.coefficient(m), &BigInt::from(count), "m={m}");
        }
    }

    #[test]
    fn rank_one_count_is_indicator() {
        // Rank-1 (z1,z2,1)-asymmetric partitions of n: exactly one for
        // n ≥ z2+1, none below.
        for z2 in 0..=3usize {
            let z1 = z2 + 1;
            for n in 0..=25usize {
                let count = partitions_of(n)
                    .into_iter()
                    .filter(|lam| {
                        frobenius(lam).rank() == 1 && detect_asymmetric(lam, z1, z2) == Some(1)
                    })
                    .count();
                assert_eq!(count, usize::from(n >= z2 + 1), "z2={z2} n={n}");
            }
        }
    }

    #[test]
    fn psi_roundtrip_small() {
        for t in [3usize, 4, 5] {
            for z in [-1i64, 0, 1] {
                for core in t_cores_up_to(t, 20) {
                    if let Ok(label) = psi(&core, t, z) {
                        let back = psi_inverse(&label).unwrap();
                        assert_eq!(back, core, "t={t} z={z}");
                        assert_eq!(size_formula(&label), core.size() as i64, "t={t} z={z} core={core}");
                        assert_eq!(psi(&back, t, z).unwrap(), label);
                    }
                }
            }
        }
    }

    #[test]
    fn psi_label_enumeration_matches_core_enumeration() {
        for t in [3usize, 4] {
            for z in [-1i64, 0, 1] {
                // All family cores of size ≤ 20 via brute force...
                let mut family: Vec<Partition> = t_cores_up_to(t, 20)
                    .into_iter()
                    .filter(|c| psi(c, t, z).is_ok())
                    .collect();
                family.sort_by_key(|c| (c.size(), c.parts().to_vec()));
                // ...and via label walking.
                let mut from_labels: Vec<Partition> = labels_with_bound(t, z, 6)
                    .into_iter()
                    .filter(|l| size_formula(l) <= 20)
                    .map(|l| psi_inverse(&l).unwrap())
                    .collect();
                from_labels.sort_by_key(|c| (c.size(), c.parts().to_vec()));
                from_labels.dedup();
                assert_eq!(family, from_labels, "t={t} z={z}");
            }
        }
    }

    #[test]
    fn infinitude_witness_grows() {
        for t in [3usize, 4, 5] {
            for z in [-1i64, 0, 1] {
                let cores = infinitude_witness(t, z, 10).unwrap();
                assert_eq!(cores.len(), 10, "t={t} z={z}");
                assert_eq!(cores[0], Partition::empty());
                for w in cores.windows(2) {
                    assert!(w[0].size() < w[1].size());
                }
                for core in &cores {
                    assert!(psi(core, t, z).is_ok());
                }
            }
        }
    }
}
