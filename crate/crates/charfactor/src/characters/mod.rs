//! Classical-group characters: direct bialternant evaluation at arbitrary
//! points of Q(ω), the root-of-unity specialization tuples, and the factored
//! forms of the specialization theorems.
//!
//! Direct evaluation uses the Weyl character formulas as determinant ratios:
//!
//! * GL:  `s_λ  = det(x_i^{β_j}) / det(x_i^{N−j})`
//! * SO(2N+1): `so_λ = det(x_i^{β_j+1} − x̄_i^{β_j}) / det(x_i^{N−j+1} − x̄_i^{N−j})`
//!   (the integer-exponent form, so all arithmetic stays in the Laurent ring)
//! * Sp(2N): `sp_λ = det(x_i^{β_j+1} − x̄_i^{β_j+1}) / det(x_i^{N−j+1} − x̄_i^{N−j+1})`
//! * O(2N): `oe_λ = 2·det(x_i^{β_j} + x̄_i^{β_j}) / ((1+δ_{λ_N,0})·det(x_i^{N−j} + x̄_i^{N−j}))`
//!
//! with `β_j = λ_j + N − j`, and each character equal to 0 when λ has more
//! than N parts.

pub mod factor;

use std::collections::BTreeMap;

use num::traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::CharError;
use crate::exact::{laurent_eval, CycNum, EvalPoint, Rat, SquareMatrix};
use crate::partition::Partition;

pub use factor::{
    evaluate_factorization, factor_oe, factor_oo, factor_schur, factor_sp, ArgumentRecipe, Factor,
    FactorProduct, Factorization, YPrefactor,
};

/// The four classical character families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CharacterFamily {
    #[serde(rename = "gl")]
    Gl,
    #[serde(rename = "oo")]
    OrthogonalOdd,
    #[serde(rename = "sp")]
    Symplectic,
    #[serde(rename = "oe")]
    OrthogonalEven,
}

impl CharacterFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            CharacterFamily::Gl => "gl",
            CharacterFamily::OrthogonalOdd => "oo",
            CharacterFamily::Symplectic => "sp",
            CharacterFamily::OrthogonalEven => "oe",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CharError> {
        match s {
            "gl" => Ok(CharacterFamily::Gl),
            "oo" => Ok(CharacterFamily::OrthogonalOdd),
            "sp" => Ok(CharacterFamily::Symplectic),
            "oe" => Ok(CharacterFamily::OrthogonalEven),
            other => Err(CharError::Usage(format!(
                "unknown family `{other}` (expected gl|oo|sp|oe)"
            ))),
        }
    }
}

/// Weakly decreasing integer vector (entries may be negative) indexing a
/// generalized Schur bialternant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSchurIndex {
    entries: Vec<i64>,
}

impl GenSchurIndex {
    pub fn new(entries: Vec<i64>) -> Self {
        assert!(
            entries.windows(2).all(|w| w[0] >= w[1]),
            "generalized Schur index must be weakly decreasing"
        );
        GenSchurIndex { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn pow_cached(base: &CycNum, inv: &CycNum, e: i64, t: usize) -> CycNum {
    let b = if e >= 0 { base } else { inv };
    let mut k = e.unsigned_abs();
    let mut acc = CycNum::one(t);
    let mut sq = b.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = acc.mul(&sq);
        }
        k >>= 1;
        if k > 0 {
            sq = sq.mul(&sq);
        }
    }
    acc
}

/// Direct evaluation of the family character at the given points (all living
/// in Q(ω) of conductor `t`). Returns 0 when λ has more parts than points;
/// a vanishing Weyl denominator is a non-generic-point error.
pub fn weyl_character_direct(
    family: CharacterFamily,
    lambda: &Partition,
    t: usize,
    points: &[CycNum],
) -> Result<CycNum, CharError> {
    let n = points.len();
    if lambda.length() > n {
        return Ok(CycNum::zero(t));
    }
    if n == 0 {
        return Ok(CycNum::one(t));
    }
    for p in points {
        if p.is_zero() {
            return Err(CharError::NonGenericPoint("zero evaluation point".into()));
        }
    }
    let inverses: Vec<CycNum> = points
        .iter()
        .map(|p| p.inverse())
        .collect::<Result<_, _>>()?;
    let beta = |mu: &Partition, j: usize| (mu.part(j) + n - j) as i64;
    let entry = |mu: &Partition, i: usize, j: usize| -> CycNum {
        let b = beta(mu, j + 1);
        let p = &points[i];
        let pi = &inverses[i];
        match family {
            CharacterFamily::Gl => pow_cached(p, pi, b, t),
            CharacterFamily::OrthogonalOdd => {
                pow_cached(p, pi, b + 1, t).sub(&pow_cached(pi, p, b, t))
            }
            CharacterFamily::Symplectic => {
                pow_cached(p, pi, b + 1, t).sub(&pow_cached(pi, p, b + 1, t))
            }
            CharacterFamily::OrthogonalEven => {
                pow_cached(p, pi, b, t).add(&pow_cached(pi, p, b, t))
            }
        }
    };
    let empty = Partition::empty();
    let numerator = SquareMatrix::from_fn(n, |i, j| entry(lambda, i, j)).determinant(t);
    let denominator = SquareMatrix::from_fn(n, |i, j| entry(&empty, i, j)).determinant(t);
    if denominator.is_zero() {
        return Err(CharError::NonGenericPoint(
            "Weyl denominator vanishes at this point".into(),
        ));
    }
    let mut value = numerator.div(&denominator)?;
    if family == CharacterFamily::OrthogonalEven {
        // 2/(1+δ_{λ_N,0}): the leading 2 against the delta convention.
        if lambda.length() == n {
            value = value.scale(&crate::exact::rat(2));
        }
    }
    Ok(value)
}

/// Generalized Schur bialternant `det(p_i^{κ_j + N − j}) / det(p_i^{N − j})`
/// for a weakly decreasing integer index κ of the same length as the point
/// list. Coincident points make the Vandermonde vanish and are rejected.
pub fn generalized_schur(
    index: &GenSchurIndex,
    t: usize,
    points: &[CycNum],
) -> Result<CycNum, CharError> {
    let n = points.len();
    assert_eq!(index.len(), n, "index length must match point count");
    if n == 0 {
        return Ok(CycNum::one(t));
    }
    for p in points {
        if p.is_zero() {
            return Err(CharError::NonGenericPoint("zero evaluation point".into()));
        }
    }
    let inverses: Vec<CycNum> = points
        .iter()
        .map(|p| p.inverse())
        .collect::<Result<_, _>>()?;
    let numerator = SquareMatrix::from_fn(n, |i, j| {
        let e = index.entries()[j] + (n - 1 - j) as i64;
        pow_cached(&points[i], &inverses[i], e, t)
    })
    .determinant(t);
    let denominator = SquareMatrix::from_fn(n, |i, j| {
        pow_cached(&points[i], &inverses[i], (n - 1 - j) as i64, t)
    })
    .determinant(t);
    if denominator.is_zero() {
        return Err(CharError::NonGenericPoint(
            "coincident points in generalized Schur evaluation".into(),
        ));
    }
    numerator.div(&denominator)
}

/// The specialization tuple `X, ωX, …, ω^{t−1}X, y, ωy, …, ω^{m−1}y` as
/// `tn + m` elements of Q(ω).
pub fn specialize_points(pt: &EvalPoint) -> Vec<CycNum> {
    let t = pt.t;
    let mut out = Vec::with_capacity(t * pt.n + pt.m);
    for j in 0..t {
        let w = CycNum::omega_pow(t, j as i64);
        for x in &pt.x_values {
            out.push(w.scale(x));
        }
    }
    for j in 0..pt.m {
        out.push(CycNum::omega_pow(t, j as i64).scale(&pt.y_value));
    }
    out
}

/// Draw a generic point whose Weyl denominators are nonzero for every listed
/// family (GL at `tn+m` variables, the others at `tn+1`), resampling until
/// all checks pass.
pub fn sample_generic_point(
    t: usize,
    n: usize,
    m: usize,
    families: &[CharacterFamily],
    rng: &mut impl Rng,
) -> EvalPoint {
    let empty = Partition::empty();
    'outer: loop {
        let pt = EvalPoint::sample(t, n, m, rng);
        let gl_tuple = specialize_points(&pt);
        let bcd_tuple = if pt.m == 1 {
            gl_tuple.clone()
        } else {
            let alt = EvalPoint { m: 1, ..pt.clone() };
            specialize_points(&alt)
        };
        for family in families {
            let tuple = if *family == CharacterFamily::Gl {
                &gl_tuple
            } else {
                &bcd_tuple
            };
            if weyl_character_direct(*family, &empty, t, tuple).is_err() {
                continue 'outer;
            }
        }
        return pt;
    }
}

/// Coefficients of `s_κ(x_1, …, x_N, z)` as a Laurent polynomial in the last
/// variable z: map from z-degree to the rational coefficient, computed by the
/// single-row branching rule (interlacing sub-indices). The x-values must be
/// nonzero rationals; κ has length N+1 and may contain negative entries.
pub fn gen_schur_z_series(index: &GenSchurIndex, xpoints: &[Rat]) -> BTreeMap<i64, Rat> {
    let total = index.len();
    assert_eq!(total, xpoints.len() + 1);
    let shift = -index.entries().last().copied().unwrap_or(0).min(0);
    let mu: Vec<i64> = index.entries().iter().map(|&e| e + shift).collect();
    debug_assert!(mu.iter().all(|&e| e >= 0));
    // Π x^{-shift} compensates the index shift on the x-variables; the
    // z-variable contributes z^{-shift} as a degree offset below.
    let mut xprod = Rat::from_integer(1.into());
    for x in xpoints {
        xprod *= x;
    }
    let scale = laurent_eval(&xprod, -(shift as i64)).expect("nonzero x values");
    let mut out: BTreeMap<i64, Rat> = BTreeMap::new();
    let mu_size: i64 = mu.iter().sum();
    // Interlacing μ_1 ≥ ν_1 ≥ μ_2 ≥ … ≥ μ_{N+1}.
    let mut nu = vec![0i64; total - 1];
    enumerate_interlacing(&mu, 0, &mut nu, &mut |nu| {
        let nu_size: i64 = nu.iter().sum();
        let idx = GenSchurIndex::new(nu.to_vec());
        let val = schur_rational(&idx, xpoints);
        let degree = mu_size - nu_size - shift as i64;
        let slot = out.entry(degree).or_insert_with(Rat::zero);
        *slot += val * &scale;
    });
    out.retain(|_, v| !v.is_zero());
    out
}

fn enumerate_interlacing(
    mu: &[i64],
    pos: usize,
    nu: &mut Vec<i64>,
    f: &mut impl FnMut(&[i64]),
) {
    if pos == nu.len() {
        f(nu);
        return;
    }
    let hi = mu[pos];
    let lo = mu[pos + 1];
    for v in (lo..=hi).rev() {
        nu[pos] = v;
        enumerate_interlacing(mu, pos + 1, nu, f);
    }
}

/// Rational-point evaluation of a generalized Schur bialternant (no ω).
fn schur_rational(index: &GenSchurIndex, points: &[Rat]) -> Rat {
    let n = points.len();
    assert_eq!(index.len(), n);
    if n == 0 {
        return Rat::from_integer(1.into());
    }
    let num = rat_det(n, |i, j| {
        laurent_eval(&points[i], index.entries()[j] + (n - 1 - j) as i64).unwrap()
    });
    let den = rat_det(n, |i, j| {
        laurent_eval(&points[i], (n - 1 - j) as i64).unwrap()
    });
    assert!(!den.is_zero(), "coincident rational points");
    num / den
}

fn rat_det(n: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Rat {
    let mut m: Vec<Vec<Rat>> = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
    let mut det = Rat::from_integer(1.into());
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return Rat::zero(),
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for j in col..n {
                let sub = &factor * &m[col][j];
                m[r][j] -= sub;
            }
        }
    }
    det
}
