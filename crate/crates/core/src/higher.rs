//! Lifting the 3D construction into `R^d`.
//!
//! `S` is the span of the first three coordinate axes; embedding pads with
//! zeros and projecting onto `S` truncates. A line of `R^d` meeting a set in
//! `S` has its projection meeting that set too, which is what lets the 3D
//! lower bound carry over. The converse fails and is not checked.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::geometry::{line_meets_body, point_in_body, ConvexBody, Line3, Point3, Vec3};
use crate::rng::{self, Rng};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HigherError {
    #[error("dimension {0} is below 3")]
    DimensionTooSmall(usize),
    #[error("anchor has {anchor} coordinates but direction has {dir}")]
    DimensionMismatch { anchor: usize, dir: usize },
    #[error("line direction is the zero vector")]
    ZeroDirection,
}

/// A point (or vector) of `R^d`, `d >= 3`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct PointD(Vec<Scalar>);

impl PointD {
    pub fn new(coords: Vec<Scalar>) -> Result<Self, HigherError> {
        if coords.len() < 3 {
            return Err(HigherError::DimensionTooSmall(coords.len()));
        }
        Ok(PointD(coords))
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    /// Coordinates beyond the first three.
    pub fn normal_part(&self) -> &[Scalar] {
        &self.0[3..]
    }

    /// Projection onto `S`.
    pub fn truncate(&self) -> Point3 {
        Point3::new(self.0[0].clone(), self.0[1].clone(), self.0[2].clone())
    }
}

impl<'de> Deserialize<'de> for PointD {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        PointD::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LineD {
    anchor: PointD,
    dir: PointD,
}

#[derive(Deserialize)]
struct RawLineD {
    anchor: PointD,
    dir: PointD,
}

impl<'de> Deserialize<'de> for LineD {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawLineD::deserialize(d)?;
        LineD::new(raw.anchor, raw.dir).map_err(serde::de::Error::custom)
    }
}

impl LineD {
    pub fn new(anchor: PointD, dir: PointD) -> Result<Self, HigherError> {
        if anchor.dim() != dir.dim() {
            return Err(HigherError::DimensionMismatch {
                anchor: anchor.dim(),
                dir: dir.dim(),
            });
        }
        if dir.is_zero() {
            return Err(HigherError::ZeroDirection);
        }
        Ok(LineD { anchor, dir })
    }

    pub fn anchor(&self) -> &PointD {
        &self.anchor
    }

    pub fn dir(&self) -> &PointD {
        &self.dir
    }

    pub fn dim(&self) -> usize {
        self.anchor.dim()
    }

    pub fn point_at(&self, t: &Scalar) -> PointD {
        PointD(
            self.anchor
                .0
                .iter()
                .zip(&self.dir.0)
                .map(|(a, v)| a + &(v * t))
                .collect(),
        )
    }
}

pub fn embed_point(p: &Point3, d: usize) -> Result<PointD, HigherError> {
    if d < 3 {
        return Err(HigherError::DimensionTooSmall(d));
    }
    let mut c: Vec<Scalar> = p.coords().into_iter().cloned().collect();
    c.resize(d, Scalar::zero());
    Ok(PointD(c))
}

pub fn embed_line(l: &Line3, d: usize) -> Result<LineD, HigherError> {
    Ok(LineD {
        anchor: embed_point(l.anchor(), d)?,
        dir: embed_point(l.dir(), d)?,
    })
}

/// Image of a line under projection onto `S`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProjectedLine {
    Line {
        line: Line3,
    },
    /// The line was orthogonal to `S`.
    Point {
        point: Point3,
    },
}

impl ProjectedLine {
    pub fn meets(&self, k: &ConvexBody) -> bool {
        match self {
            ProjectedLine::Line { line } => line_meets_body(line, k),
            ProjectedLine::Point { point } => point_in_body(point, k),
        }
    }
}

pub fn project_line_to_s(l: &LineD) -> ProjectedLine {
    let a = l.anchor.truncate();
    match Line3::new(a.clone(), l.dir.truncate()) {
        Ok(line) => ProjectedLine::Line { line },
        Err(_) => ProjectedLine::Point { point: a },
    }
}

/// Exact test of `l` against `K ⊂ S` in `R^d`.
///
/// A line leaving `S` meets it in at most one point, found from the normal
/// coordinates; a line parallel to `S` is either inside it or disjoint.
pub fn line_meets_embedded_body(l: &LineD, k: &ConvexBody) -> bool {
    let a = l.anchor.normal_part();
    let v = l.dir.normal_part();
    let Some(i) = v.iter().position(|x| !x.is_zero()) else {
        return a.iter().all(Scalar::is_zero)
            && ProjectedLine::Line {
                line: Line3::new(l.anchor.truncate(), l.dir.truncate())
                    .expect("direction lies in S"),
            }
            .meets(k);
    };
    let t = -(&a[i] / &v[i]);
    let p = l.point_at(&t);
    p.normal_part().iter().all(Scalar::is_zero) && point_in_body(&p.truncate(), k)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ProjectionCheck {
    pub line: LineD,
    pub projected: ProjectedLine,
    pub meets_lifted: bool,
    pub meets_projected: bool,
}

impl ProjectionCheck {
    /// Only `lifted ⇒ projected` is required.
    pub fn holds(&self) -> bool {
        !self.meets_lifted || self.meets_projected
    }
}

pub fn verify_projection_property(l: &LineD, k: &ConvexBody) -> ProjectionCheck {
    let projected = project_line_to_s(l);
    ProjectionCheck {
        meets_lifted: line_meets_embedded_body(l, k),
        meets_projected: projected.meets(k),
        projected,
        line: l.clone(),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ProjectionRun {
    pub d: usize,
    pub trials: u64,
    pub seed: u64,
    pub lifted_hits: u64,
    pub violations: Vec<ProjectionCheck>,
}

impl ProjectionRun {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

const DEN: i64 = 64;

/// A random point of `K`: a convex combination with positive weights, then a
/// bounded offset inside the inflation ball when there is one.
fn sample_in_body(rng: &mut Rng, k: &ConvexBody) -> Point3 {
    let w: Vec<Scalar> = k
        .vertices()
        .iter()
        .map(|_| rng::grid(rng, 1, 16, 1))
        .collect();
    let total: Scalar = w.iter().sum();
    let mut p = Vec3::zero();
    for (v, wi) in k.vertices().iter().zip(&w) {
        p = &p + &v.scale(&(wi / &total));
    }
    if k.inflation().is_positive() {
        // each coordinate within r/2 keeps the offset inside the ball
        let half = k.inflation() * &Scalar::ratio(1, 2);
        let off = Vec3::new(
            rng::symmetric(rng, &half, 1000),
            rng::symmetric(rng, &half, 1000),
            rng::symmetric(rng, &half, 1000),
        );
        p = &p + &off;
    }
    p
}

/// A line through a random point of `embed(K)` with a random direction in
/// `R^d`; about a third have no component along `S` and so project to a
/// point.
pub fn random_hitting_line(rng: &mut Rng, k: &ConvexBody, d: usize) -> Result<LineD, HigherError> {
    let anchor = embed_point(&sample_in_body(rng, k), d)?;
    let vertical = rng::index(rng, 3) == 0;
    loop {
        let dir: Vec<Scalar> = (0..d)
            .map(|i| {
                if vertical && i < 3 {
                    Scalar::zero()
                } else {
                    rng::grid(rng, -8, 8, DEN)
                }
            })
            .collect();
        let dir = PointD(dir);
        if !dir.is_zero() {
            return LineD::new(anchor, dir);
        }
    }
}

/// Check the implication on `trials` constructed lines meeting `embed(K)`.
pub fn verify_projection_batch(
    k: &ConvexBody,
    d: usize,
    trials: u64,
    seed: u64,
) -> Result<ProjectionRun, HigherError> {
    if d < 3 {
        return Err(HigherError::DimensionTooSmall(d));
    }
    let checks: Vec<ProjectionCheck> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut r = rng::trial_rng(seed, i);
            let l = random_hitting_line(&mut r, k, d).expect("dimension checked");
            verify_projection_property(&l, k)
        })
        .collect();
    Ok(ProjectionRun {
        d,
        trials,
        seed,
        lifted_hits: checks.iter().filter(|c| c.meets_lifted).count() as u64,
        violations: checks.into_iter().filter(|c| !c.holds()).collect(),
    })
}
