//! The theorem verification sweep: for a family and a grid cell (t, n[, m]),
//! enumerate all admissible partitions up to a size cap, build each
//! factorization, and compare it against the direct determinant evaluation
//! at seeded generic points — exactly, no tolerances. Any disagreement is
//! reported with enough data to replay it.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::asymmetric::{classify_even, classify_odd, classify_symp, Classification, TheoremCase};
use crate::characters::{
    evaluate_factorization, factor::factor_for_family, factor::specialized_character_direct,
    sample_generic_point, CharacterFamily, Factorization,
};
use crate::enumerate::partitions_up_to_bounded;
use crate::error::CharError;
use crate::exact::{format_rat, CycNum, EvalPoint};
use crate::partition::Partition;

/// One verified (λ, point) pair that failed, with both values.
#[derive(Clone, Debug)]
pub struct Mismatch {
    pub family: CharacterFamily,
    pub t: usize,
    pub n: usize,
    pub m: usize,
    pub lambda: Partition,
    pub point: EvalPoint,
    pub direct: CycNum,
    pub factored: CycNum,
}

impl Mismatch {
    pub fn render(&self) -> String {
        let xs: Vec<String> = self.point.x_values.iter().map(format_rat).collect();
        format!(
            "family={} t={} n={} m={} lambda={} x=[{}] y={} direct={} factored={}",
            self.family.tag(),
            self.t,
            self.n,
            self.m,
            self.lambda,
            xs.join(","),
            format_rat(&self.point.y_value),
            self.direct.to_json(),
            self.factored.to_json(),
        )
    }
}

/// Summary of one sweep cell.
#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub checked_pairs: usize,
    pub nonzero_cases: usize,
    pub zero_cases: usize,
    pub mismatches: Vec<Mismatch>,
    /// How often each theorem clause fired (for case-coverage assertions).
    pub case_counts: BTreeMap<TheoremCase, usize>,
    /// λ where the Zero/nonzero decision disagreed with the direct values.
    pub vanishing_disagreements: Vec<Partition>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty() && self.vanishing_disagreements.is_empty()
    }

    fn merge(mut self, other: SweepReport) -> SweepReport {
        self.checked_pairs += other.checked_pairs;
        self.nonzero_cases += other.nonzero_cases;
        self.zero_cases += other.zero_cases;
        self.mismatches.extend(other.mismatches);
        for (case, count) in other.case_counts {
            *self.case_counts.entry(case).or_insert(0) += count;
        }
        self.vanishing_disagreements.extend(other.vanishing_disagreements);
        self
    }
}

/// One sweep cell. `m` is only meaningful for the GL family; the
/// other families always specialize with a single extra y variable.
#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub family: CharacterFamily,
    pub t: usize,
    pub n: usize,
    pub m: usize,
    pub max_size: usize,
    pub points: usize,
    pub seed: u64,
}

/// The theorem case a nonzero λ falls into (None when it vanishes).
pub fn theorem_case(
    family: CharacterFamily,
    lambda: &Partition,
    t: usize,
    n: usize,
    m: usize,
) -> Result<Option<TheoremCase>, CharError> {
    Ok(match family {
        CharacterFamily::Gl => {
            crate::asymmetric::classify_schur(lambda, t, n, m)?.map(|_| TheoremCase::GlCore)
        }
        CharacterFamily::OrthogonalOdd => match classify_odd(lambda, t, n)? {
            Classification::Vanishes => None,
            Classification::NonZero { case, .. } => Some(case),
        },
        CharacterFamily::Symplectic => match classify_symp(lambda, t, n)? {
            Classification::Vanishes => None,
            Classification::NonZero { case, .. } => Some(case),
        },
        CharacterFamily::OrthogonalEven => match classify_even(lambda, t, n)? {
            Classification::Vanishes => None,
            Classification::NonZero { case, .. } => Some(case),
        },
    })
}

/// Run one sweep cell. Points are drawn once per cell from the seeded
/// stream, so a fixed seed replays the identical grid; partitions fan out
/// across worker threads and results merge in input order.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, CharError> {
    let SweepConfig { family, t, n, m, max_size, points, seed } = *config;
    let m_eff = if family == CharacterFamily::Gl { m } else { 1 };
    let bound = t * n + m_eff;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample_pts: Vec<EvalPoint> = (0..points.max(2))
        .map(|_| sample_generic_point(t, n, m_eff, &[family], &mut rng))
        .collect();
    let lambdas = partitions_up_to_bounded(max_size, bound);
    let reports: Vec<Result<SweepReport, CharError>> = lambdas
        .par_iter()
        .map(|lambda| check_lambda(family, lambda, t, n, m_eff, &sample_pts, points))
        .collect();
    let mut total = SweepReport::default();
    for r in reports {
        total = total.merge(r?);
    }
    Ok(total)
}

fn check_lambda(
    family: CharacterFamily,
    lambda: &Partition,
    t: usize,
    n: usize,
    m: usize,
    sample_pts: &[EvalPoint],
    points: usize,
) -> Result<SweepReport, CharError> {
    let mut report = SweepReport::default();
    let factorization = factor_for_family(family, lambda, t, n, m)?;
    match theorem_case(family, lambda, t, n, m)? {
        Some(case) => {
            *report.case_counts.entry(case).or_insert(0) += 1;
            report.nonzero_cases += 1;
        }
        None => report.zero_cases += 1,
    }
    // Zero/nonzero agreement against two independent points.
    let d0 = specialized_character_direct(family, lambda, &sample_pts[0])?;
    let d1 = specialized_character_direct(family, lambda, &sample_pts[1])?;
    if factorization.is_zero() != (d0.is_zero() && d1.is_zero()) {
        report.vanishing_disagreements.push(lambda.clone());
    }
    if let Factorization::Zero = factorization {
        // Still confirm the direct value is zero at every sampled point.
        for pt in sample_pts.iter().take(points) {
            report.checked_pairs += 1;
            let direct = specialized_character_direct(family, lambda, pt)?;
            if !direct.is_zero() {
                report.mismatches.push(Mismatch {
                    family,
                    t,
                    n,
                    m,
                    lambda: lambda.clone(),
                    point: pt.clone(),
                    direct,
                    factored: CycNum::zero(t),
                });
            }
        }
        return Ok(report);
    }
    for pt in sample_pts.iter().take(points) {
        report.checked_pairs += 1;
        let direct = specialized_character_direct(family, lambda, pt)?;
        let factored = evaluate_factorization(&factorization, pt)?;
        if direct != factored {
            report.mismatches.push(Mismatch {
                family,
                t,
                n,
                m,
                lambda: lambda.clone(),
                point: pt.clone(),
                direct,
                factored,
            });
        }
    }
    Ok(report)
}
