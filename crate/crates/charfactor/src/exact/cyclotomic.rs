//! The cyclotomic field Q(ω) = Q[x]/(Φ_t(x)), with ω a primitive t-th root of
//! unity kept symbolic. All specialized character values live here, so every
//! identity check in the crate is an exact field computation with no
//! tolerances.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::CharError;
use crate::exact::rational::{format_rat, parse_rat, Rat};

/// Coefficients of the t-th cyclotomic polynomial Φ_t, lowest degree first.
/// Monic with integer coefficients; degree φ(t).
///
/// Computed by exact division: Φ_t = (x^t − 1) / Π_{d | t, d < t} Φ_d.
pub fn cyclotomic_polynomial(t: usize) -> Vec<BigInt> {
    assert!(t >= 1, "conductor must be positive");
    let divisors: Vec<usize> = (1..=t).filter(|d| t % d == 0).collect();
    let mut phis: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for &d in &divisors {
        // x^d - 1
        let mut p = vec![BigInt::zero(); d + 1];
        p[0] = -BigInt::one();
        p[d] = BigInt::one();
        for &(e, ref phi) in &phis {
            if d % e == 0 {
                p = int_poly_div_exact(&p, phi);
            }
        }
        phis.push((d, p));
    }
    phis.pop().unwrap().1
}

/// Exact division of integer polynomials; the divisor must be monic and the
/// division must leave no remainder.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

/// Element of Q(ω) with ω a primitive `t`-th root of unity, stored as a
/// residue mod Φ_t: `coeffs[j]` is the coefficient of ω^j, `0 ≤ j < φ(t)`.
///
/// The representation is canonical, so equality and zero tests are
/// coefficient comparisons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycNum {
    t: usize,
    coeffs: Vec<Rat>,
}

impl CycNum {
    /// The rational `r`, embedded in Q(ω) of conductor `t`.
    pub fn from_rat(t: usize, r: Rat) -> Self {
        let deg = phi_degree(t);
        let mut coeffs = vec![Rat::zero(); deg];
        coeffs[0] = r;
        CycNum { t, coeffs }
    }

    pub fn zero(t: usize) -> Self {
        Self::from_rat(t, Rat::zero())
    }

    pub fn one(t: usize) -> Self {
        Self::from_rat(t, Rat::one())
    }

    /// ω^j, reduced mod Φ_t. Negative `j` wraps via ω^t = 1.
    pub fn omega_pow(t: usize, j: i64) -> Self {
        let jm = j.rem_euclid(t as i64) as usize;
        let mut raw = vec![Rat::zero(); jm + 1];
        raw[jm] = Rat::one();
        Self::reduce(t, raw)
    }

    fn reduce(t: usize, mut raw: Vec<Rat>) -> Self {
        let phi = cyclotomic_polynomial(t);
        let deg = phi.len() - 1;
        while raw.len() > deg {
            let k = raw.len() - 1;
            let c = raw[k].clone();
            if !c.is_zero() {
                for i in 0..deg {
                    let adj = &c * Rat::from_integer(phi[i].clone());
                    raw[k - deg + i] -= adj;
                }
            }
            raw.pop();
        }
        raw.resize(deg, Rat::zero());
        CycNum { t, coeffs: raw }
    }

    pub fn conductor(&self) -> usize {
        self.t
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Some(r) when the value lies in Q, i.e. all ω-coefficients above degree
    /// zero vanish.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(self.t, other.t, "mixed cyclotomic conductors");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycNum { t: self.t, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycNum { t: self.t, coeffs }
    }

    pub fn neg(&self) -> Self {
        CycNum {
            t: self.t,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let mut raw = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        Self::reduce(self.t, raw)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        CycNum {
            t: self.t,
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]:
    /// Φ_t is irreducible over Q, so any nonzero residue is a unit.
    pub fn inverse(&self) -> Result<Self, CharError> {
        if self.is_zero() {
            return Err(CharError::DivisionByZero);
        }
        let phi: Vec<Rat> = cyclotomic_polynomial(self.t)
            .into_iter()
            .map(Rat::from_integer)
            .collect();
        // Bezout: a * self + b * Φ_t = gcd = nonzero constant.
        let (g, a) = ext_gcd_first(&trim(self.coeffs.clone()), &phi);
        debug_assert_eq!(g.len(), 1, "Φ_t must be coprime to a nonzero residue");
        let ginv = g[0].clone().recip();
        let raw = a.into_iter().map(|c| c * &ginv).collect();
        Ok(Self::reduce(self.t, raw))
    }

    pub fn div(&self, other: &Self) -> Result<Self, CharError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// `self^e`; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self, CharError> {
        let base = if e >= 0 { self.clone() } else { self.inverse()? };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one(self.t);
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// JSON form `{"t": t, "coeffs": ["p/q", …]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "t": self.t,
            "coeffs": self.coeffs.iter().map(format_rat).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, CharError> {
        let bad = || CharError::BadJson("cyclotomic number".into());
        let t = v.get("t").and_then(Value::as_u64).ok_or_else(bad)? as usize;
        let arr = v.get("coeffs").and_then(Value::as_array).ok_or_else(bad)?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for c in arr {
            coeffs.push(parse_rat(c.as_str().ok_or_else(bad)?)?);
        }
        if coeffs.len() != phi_degree(t) {
            return Err(bad());
        }
        Ok(CycNum { t, coeffs })
    }
}

/// deg Φ_t = φ(t), Euler's totient.
pub fn phi_degree(t: usize) -> usize {
    cyclotomic_polynomial(t).len() - 1
}

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

/// Extended gcd in Q[x] returning (gcd, u) with u*f ≡ gcd (mod g).
fn ext_gcd_first(f: &[Rat], g: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r0 = f.to_vec();
    let mut r1 = g.to_vec();
    let mut u0 = vec![Rat::one()];
    let mut u1 = vec![Rat::zero()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = rat_poly_divmod(&r0, &r1);
        let u = rat_poly_sub(&u0, &rat_poly_mul(&q, &u1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u;
    }
    (r0, u0)
}

fn rat_poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let den = trim(den.to_vec());
    let lead = den.last().unwrap().clone();
    let mut rem = trim(num.to_vec());
    if rem.len() < den.len() {
        return (vec![Rat::zero()], rem);
    }
    let qn = rem.len() - den.len();
    let mut quot = vec![Rat::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = &rem[k + den.len() - 1] / &lead;
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                let adj = &c * d;
                rem[k + i] -= adj;
            }
        }
        quot[k] = c;
    }
    (trim(quot), trim(rem))
}

fn rat_poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn rat_poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn int_coeffs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), int_coeffs(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), int_coeffs(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), int_coeffs(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), int_coeffs(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), int_coeffs(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), int_coeffs(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn omega_relations() {
        // ω·ω^{t-1} = 1 for every small conductor.
        for t in 2..=8 {
            let w = CycNum::omega_pow(t, 1);
            let winv = CycNum::omega_pow(t, t as i64 - 1);
            assert_eq!(w.mul(&winv), CycNum::one(t));
        }
        // t = 2: ω = −1, so ω² = 1.
        let w2 = CycNum::omega_pow(2, 1);
        assert_eq!(w2, CycNum::from_rat(2, rat(-1)));
        assert_eq!(w2.mul(&w2), CycNum::one(2));
        // t = 3: 1 + ω + ω² = 0.
        let s = CycNum::one(3)
            .add(&CycNum::omega_pow(3, 1))
            .add(&CycNum::omega_pow(3, 2));
        assert!(s.is_zero());
    }

    #[test]
    fn inverses_and_powers() {
        let t = 5;
        let a = CycNum::omega_pow(t, 2)
            .scale(&rat(3))
            .add(&CycNum::from_rat(t, rat(7)));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), CycNum::one(t));
        assert_eq!(a.pow(-3).unwrap(), inv.pow(3).unwrap());
        assert!(CycNum::zero(t).inverse().is_err());
    }

    #[test]
    fn json_roundtrip() {
        let a = CycNum::omega_pow(4, 1).scale(&rat(2)).add(&CycNum::from_rat(4, rat(-5)));
        let b = CycNum::from_json(&a.to_json()).unwrap();
        assert_eq!(a, b);
    }
}
