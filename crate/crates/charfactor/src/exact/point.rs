//! Rational sample data for the root-of-unity specializations.
//!
//! An [`EvalPoint`] carries `(t, n, m)` together with the rational values
//! `x_1, …, x_n` and `y` that define the variable tuple
//! `X, ωX, …, ω^{t−1}X, y, ωy, …, ω^{m−1}y`. The genericity conditions below
//! keep all Vandermonde-type denominators that depend only on `x^{±t}` and
//! `y^{±t}` away from zero; the remaining (family-specific) Weyl denominators
//! are checked by the sampling loop in `characters`.

use num::traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::CharError;
use crate::exact::rational::{laurent_eval, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint {
    pub t: usize,
    pub n: usize,
    pub m: usize,
    pub x_values: Vec<Rat>,
    pub y_value: Rat,
}

impl EvalPoint {
    /// Validates the genericity invariants:
    /// nonzero `x_i` and `y`; `x_i^t` pairwise distinct; `x_i^t ≠ x_j^{−t}`
    /// for all `i, j` (so in particular `x_i^{2t} ≠ 1`); `y ∉ {0, ±1}`; and
    /// `y^t ∉ {x_i^{±t}}`.
    pub fn new(t: usize, n: usize, m: usize, x_values: Vec<Rat>, y_value: Rat) -> Result<Self, CharError> {
        if t < 2 {
            return Err(CharError::Usage("t must be at least 2".into()));
        }
        if x_values.len() != n {
            return Err(CharError::Usage(format!("expected {n} x-values, got {}", x_values.len())));
        }
        if m >= t {
            return Err(CharError::Usage(format!("m must satisfy 0 ≤ m ≤ t−1, got m={m}")));
        }
        let point = EvalPoint { t, n, m, x_values, y_value };
        point.check_generic()?;
        Ok(point)
    }

    fn check_generic(&self) -> Result<(), CharError> {
        let te = self.t as i64;
        for x in &self.x_values {
            if x.is_zero() {
                return Err(CharError::NonGenericPoint("x value is zero".into()));
            }
        }
        let y = &self.y_value;
        if y.is_zero() || y == &Rat::one() || y == &(-Rat::one()) {
            return Err(CharError::NonGenericPoint("y must avoid {0, 1, -1}".into()));
        }
        let xt: Vec<Rat> = self
            .x_values
            .iter()
            .map(|x| laurent_eval(x, te).unwrap())
            .collect();
        let xti: Vec<Rat> = xt.iter().map(|v| v.recip()).collect();
        for i in 0..xt.len() {
            for j in 0..xt.len() {
                if i != j && xt[i] == xt[j] {
                    return Err(CharError::NonGenericPoint("coincident x_i^t values".into()));
                }
                if xt[i] == xti[j] {
                    return Err(CharError::NonGenericPoint("x_i^t equals some x_j^{-t}".into()));
                }
            }
        }
        let yt = laurent_eval(y, te).unwrap();
        if xt.contains(&yt) || xti.contains(&yt) {
            return Err(CharError::NonGenericPoint("y^t collides with x_i^{±t}".into()));
        }
        Ok(())
    }

    /// Draw small random rationals (numerators and denominators up to 50)
    /// until the genericity invariants hold. Deterministic for a fixed RNG
    /// stream.
    pub fn sample(t: usize, n: usize, m: usize, rng: &mut impl Rng) -> Self {
        loop {
            let mut xs = Vec::with_capacity(n);
            for _ in 0..n {
                xs.push(random_small_rat(rng));
            }
            let y = random_small_rat(rng);
            if let Ok(pt) = EvalPoint::new(t, n, m, xs, y) {
                return pt;
            }
        }
    }
}

fn random_small_rat(rng: &mut impl Rng) -> Rat {
    loop {
        let num: i64 = rng.gen_range(-50..=50);
        if num == 0 {
            continue;
        }
        let den: i64 = rng.gen_range(1..=50);
        return Rat::new(num.into(), den.into());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, ratio};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn rejects_degenerate_points() {
        assert!(EvalPoint::new(2, 1, 1, vec![rat(2)], rat(1)).is_err());
        assert!(EvalPoint::new(2, 1, 1, vec![rat(0)], rat(3)).is_err());
        // x^{2t} = 1 rejected even with a single x.
        assert!(EvalPoint::new(2, 1, 1, vec![rat(-1)], rat(3)).is_err());
        // x_1^t = x_2^t collision for even t.
        assert!(EvalPoint::new(2, 2, 1, vec![rat(2), rat(-2)], rat(3)).is_err());
        assert!(EvalPoint::new(2, 2, 1, vec![rat(2), ratio(1, 2)], rat(3)).is_err());
        assert!(EvalPoint::new(2, 1, 1, vec![rat(2)], ratio(1, 2)).is_err());
        assert!(EvalPoint::new(2, 1, 1, vec![rat(2)], rat(3)).is_ok());
    }

    #[test]
    fn sampling_is_deterministic() {
        let mut a = StdRng::seed_from_u64(7);
        let mut b = StdRng::seed_from_u64(7);
        for (t, n, m) in [(2, 1, 1), (3, 2, 2), (5, 2, 1)] {
            assert_eq!(EvalPoint::sample(t, n, m, &mut a), EvalPoint::sample(t, n, m, &mut b));
        }
    }
}
