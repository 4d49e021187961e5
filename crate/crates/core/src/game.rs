//! The refutation game: for any `k` adversary lines, produce a convex set that
//! is stabbed by at least an `ε` fraction of the rulings yet missed by every
//! adversary line. Also the finishing steps that make such a configuration
//! robust: inflating each witness by a small ball and perturbing the rulings
//! into general position, both re-verified exactly.

use serde::{Deserialize, Serialize};

use crate::geometry::{
    first_non_skew_pair, line_body_distance_sq, line_meets_body, line_meets_interior, perturb_line,
    ConvexBody, ConvexPolygon3, GeometryError, Line3,
};
use crate::ruling::{
    build_witness, verify_witness, witness_plan, RulingError, RulingFamily, VerificationReport,
    WitnessPlan,
};
use crate::scalar::{ceil_usize, Extended, Scalar};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GameError {
    #[error("epsilon {0} is not strictly between 0 and 1")]
    BadEpsilon(Scalar),
    #[error("k must be positive")]
    BadK,
    #[error("n = {n} does not satisfy n(1 - epsilon) > k = {k}")]
    NTooSmall { n: usize, k: usize },
    #[error("family has {got} rulings, expected {expected}")]
    FamilySizeMismatch { got: usize, expected: usize },
    #[error("{got} adversary lines exceed k = {k}")]
    TooManyAdversaryLines { got: usize, k: usize },
    #[error("family of bodies is empty")]
    EmptyFamily,
    #[error("inflation radius {0} is not positive")]
    NonpositiveRadius(Scalar),
    #[error("expected {expected} jitter vectors, got {got}")]
    JitterCount { got: usize, expected: usize },
    #[error(transparent)]
    Ruling(#[from] RulingError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("hardening failed: {failed:?}")]
    HardeningFailed {
        failed: Vec<HardenCheck>,
        report: Box<HardenReport>,
    },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GameParams {
    pub epsilon: Scalar,
    pub k: usize,
    pub n: usize,
}

fn check_epsilon(epsilon: &Scalar) -> Result<(), GameError> {
    if !epsilon.is_positive() || *epsilon >= Scalar::one() {
        return Err(GameError::BadEpsilon(epsilon.clone()));
    }
    Ok(())
}

impl GameParams {
    pub fn new(epsilon: Scalar, k: usize, n: usize) -> Result<Self, GameError> {
        check_epsilon(&epsilon)?;
        if k == 0 {
            return Err(GameError::BadK);
        }
        if Scalar::from(n) * (Scalar::one() - &epsilon) <= Scalar::from(k) {
            return Err(GameError::NTooSmall { n, k });
        }
        Ok(GameParams { epsilon, k, n })
    }

    /// `ceil(ε n)`, the number of rulings a witness must stab.
    pub fn required_stabs(&self) -> usize {
        ceil_usize(&(&self.epsilon * &Scalar::from(self.n)))
    }
}

/// Smallest `n` with `n (1 - ε) > k`.
pub fn minimal_n(epsilon: &Scalar, k: usize) -> Result<usize, GameError> {
    check_epsilon(epsilon)?;
    if k == 0 {
        return Err(GameError::BadK);
    }
    let bound = Scalar::from(k) / (Scalar::one() - epsilon);
    let n = bound.floor() + 1;
    Ok(usize::try_from(n).expect("n fits in usize"))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RefutationWitness {
    pub body: ConvexBody,
    pub polygon: ConvexPolygon3,
    pub plan: WitnessPlan,
    /// Family indices of the stabbed rulings.
    pub stabbed: Vec<usize>,
    pub adversary: Vec<Line3>,
    pub required: usize,
    pub report: VerificationReport,
}

impl RefutationWitness {
    pub fn ok(&self) -> bool {
        self.report.ok() && self.stabbed.len() >= self.required
    }
}

/// Answer the adversary's lines with a witness stabbing every ruling the
/// adversary did not pick.
pub fn refute(
    fam: &RulingFamily,
    params: &GameParams,
    adversary: &[Line3],
) -> Result<RefutationWitness, GameError> {
    if fam.len() != params.n {
        return Err(GameError::FamilySizeMismatch {
            got: fam.len(),
            expected: params.n,
        });
    }
    if adversary.len() > params.k {
        return Err(GameError::TooManyAdversaryLines {
            got: adversary.len(),
            k: params.k,
        });
    }
    let lines = fam.lines();
    let b: Vec<usize> = (0..lines.len())
        .filter(|&i| !adversary.contains(&lines[i]))
        .collect();
    let plan = witness_plan(fam, &b, adversary)?;
    let polygon = build_witness(&plan)?;
    let b_lines: Vec<Line3> = plan.b.iter().map(|&i| lines[i].clone()).collect();
    let report = verify_witness(&polygon, &b_lines, adversary);
    let stabbed = report.stabbed.iter().map(|&j| plan.b[j]).collect();
    Ok(RefutationWitness {
        body: polygon.to_body(),
        polygon,
        plan,
        stabbed,
        adversary: adversary.to_vec(),
        required: params.required_stabs(),
        report,
    })
}

pub fn inflate(body: &ConvexBody, delta_prime: &Scalar) -> Result<ConvexBody, GameError> {
    if !delta_prime.is_positive() {
        return Err(GameError::NonpositiveRadius(delta_prime.clone()));
    }
    Ok(body.with_inflation(body.inflation() + delta_prime)?)
}

/// Squared miss margin `max_K min_r dist²(r, K)`; positive iff some body is
/// missed by every line. Infinite when there are no lines.
pub fn miss_margin(bodies: &[ConvexBody], lines: &[Line3]) -> Result<Extended, GameError> {
    if bodies.is_empty() {
        return Err(GameError::EmptyFamily);
    }
    let margin = bodies
        .iter()
        .map(|k| {
            lines
                .iter()
                .map(|r| line_body_distance_sq(r, k))
                .min()
                .map(Extended::Finite)
                .unwrap_or(Extended::Infinite)
        })
        .max()
        .expect("nonempty");
    Ok(margin)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HardenCheck {
    InteriorHit,
    AdversaryMiss,
    PairwiseSkew,
}

/// A (witness, line) pair that broke a hardening check.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Offender {
    pub witness: usize,
    pub line: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct HardenReport {
    /// Stabbing rulings that fail to meet the interior of the inflated
    /// witness, before or after perturbation.
    pub interior_misses: Vec<Offender>,
    /// Adversary lines that meet their inflated witness.
    pub adversary_hits: Vec<Offender>,
    /// First pair of perturbed rulings that is not skew.
    pub non_skew_pair: Option<(usize, usize)>,
}

impl HardenReport {
    pub fn failed(&self) -> Vec<HardenCheck> {
        let mut out = Vec::new();
        if !self.interior_misses.is_empty() {
            out.push(HardenCheck::InteriorHit);
        }
        if !self.adversary_hits.is_empty() {
            out.push(HardenCheck::AdversaryMiss);
        }
        if self.non_skew_pair.is_some() {
            out.push(HardenCheck::PairwiseSkew);
        }
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HardenedConfig {
    pub inflated: Vec<ConvexBody>,
    pub perturbed: Vec<Line3>,
    pub report: HardenReport,
}

/// Inflate every witness by `delta_prime`, move ruling `i` by `jitters[i]`
/// (each component at most `jitter_bound`), and re-check everything exactly.
pub fn harden(
    fam: &RulingFamily,
    witnesses: &[RefutationWitness],
    delta_prime: &Scalar,
    jitters: &[[Scalar; 6]],
    jitter_bound: &Scalar,
) -> Result<HardenedConfig, GameError> {
    if jitters.len() != fam.len() {
        return Err(GameError::JitterCount {
            got: jitters.len(),
            expected: fam.len(),
        });
    }
    let lines = fam.lines();
    let perturbed = lines
        .iter()
        .zip(jitters)
        .map(|(l, j)| perturb_line(l, j, jitter_bound))
        .collect::<Result<Vec<_>, _>>()?;
    let inflated = witnesses
        .iter()
        .map(|w| inflate(&w.body, delta_prime))
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = HardenReport::default();
    for (wi, (w, k)) in witnesses.iter().zip(&inflated).enumerate() {
        for &i in &w.stabbed {
            if !line_meets_interior(&lines[i], k) || !line_meets_interior(&perturbed[i], k) {
                report.interior_misses.push(Offender {
                    witness: wi,
                    line: i,
                });
            }
        }
        for (j, r) in w.adversary.iter().enumerate() {
            if line_meets_body(r, k) {
                report.adversary_hits.push(Offender {
                    witness: wi,
                    line: j,
                });
            }
        }
    }
    report.non_skew_pair = first_non_skew_pair(&perturbed);
    let failed = report.failed();
    if !failed.is_empty() {
        return Err(GameError::HardeningFailed {
            failed,
            report: Box::new(report),
        });
    }
    Ok(HardenedConfig {
        inflated,
        perturbed,
        report,
    })
}
