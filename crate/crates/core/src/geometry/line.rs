use serde::{Deserialize, Deserializer, Serialize};

use super::vec::{Point3, Vec3};
use super::GeometryError;
use crate::scalar::Scalar;

/// A line in R^3, stored in canonical form.
///
/// The direction is scaled so its first nonzero component is 1 and the anchor
/// is the foot of the perpendicular from the origin. Two values compare equal
/// iff they describe the same point set.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Line3 {
    anchor: Point3,
    dir: Vec3,
}

impl Line3 {
    pub fn new(anchor: Point3, dir: Vec3) -> Result<Self, GeometryError> {
        if dir.is_zero() {
            return Err(GeometryError::ZeroDirection);
        }
        let lead = [&dir.x, &dir.y, &dir.z]
            .into_iter()
            .find(|c| !c.is_zero())
            .cloned()
            .expect("nonzero direction");
        let inv = lead.recip().expect("nonzero lead");
        let dir = dir.scale(&inv);
        let anchor = anchor.reject(&dir);
        Ok(Line3 { anchor, dir })
    }

    pub fn through(p: &Point3, q: &Point3) -> Result<Self, GeometryError> {
        Line3::new(p.clone(), q - p)
    }

    pub fn anchor(&self) -> &Point3 {
        &self.anchor
    }

    pub fn dir(&self) -> &Vec3 {
        &self.dir
    }

    pub fn point_at(&self, t: &Scalar) -> Point3 {
        &self.anchor + &self.dir.scale(t)
    }

    /// True iff `p` lies on the line.
    pub fn contains(&self, p: &Point3) -> bool {
        (p - &self.anchor).cross(&self.dir).is_zero()
    }

    /// Squared distance from `p` to the line.
    pub fn point_dist_sq(&self, p: &Point3) -> Scalar {
        let w = p - &self.anchor;
        w.cross(&self.dir).norm_sq() / self.dir.norm_sq()
    }

    pub fn is_parallel_to(&self, other: &Line3) -> bool {
        self.dir.cross(&other.dir).is_zero()
    }
}

#[derive(Deserialize)]
struct RawLine3 {
    anchor: Point3,
    dir: Vec3,
}

impl<'de> Deserialize<'de> for Line3 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawLine3::deserialize(deserializer)?;
        Line3::new(raw.anchor, raw.dir).map_err(serde::de::Error::custom)
    }
}

/// The plane `{p : normal . p = offset}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Plane3 {
    pub normal: Vec3,
    pub offset: Scalar,
}

impl Plane3 {
    pub fn new(normal: Vec3, offset: Scalar) -> Result<Self, GeometryError> {
        if normal.is_zero() {
            return Err(GeometryError::ZeroNormal);
        }
        Ok(Plane3 { normal, offset })
    }

    /// The plane through `p` with the given normal.
    pub fn through(p: &Point3, normal: Vec3) -> Result<Self, GeometryError> {
        let offset = normal.dot(p);
        Plane3::new(normal, offset)
    }

    /// Signed value `normal . p - offset`.
    pub fn eval(&self, p: &Point3) -> Scalar {
        self.normal.dot(p) - &self.offset
    }

    pub fn contains(&self, p: &Point3) -> bool {
        self.eval(p).is_zero()
    }
}

/// Result of intersecting a line with a plane.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", content = "point")]
pub enum LinePlane {
    Point(Point3),
    ContainedInPlane,
    ParallelDisjoint,
}

pub fn line_plane_intersection(l: &Line3, plane: &Plane3) -> LinePlane {
    let nd = plane.normal.dot(l.dir());
    let f = plane.eval(l.anchor());
    if nd.is_zero() {
        if f.is_zero() {
            LinePlane::ContainedInPlane
        } else {
            LinePlane::ParallelDisjoint
        }
    } else {
        let t = -(f / nd);
        LinePlane::Point(l.point_at(&t))
    }
}

/// Exact squared distance between two lines; zero iff they meet.
pub fn line_line_dist_sq(a: &Line3, b: &Line3) -> Scalar {
    let c = a.dir().cross(b.dir());
    let w = b.anchor() - a.anchor();
    if c.is_zero() {
        a.point_dist_sq(b.anchor())
    } else {
        w.dot(&c).square() / c.norm_sq()
    }
}

/// Lines that share no point and are not parallel.
pub fn is_skew(a: &Line3, b: &Line3) -> bool {
    !a.is_parallel_to(b) && !line_line_dist_sq(a, b).is_zero()
}

/// The first pair `(i, j)`, `i < j`, that is not skew.
pub fn first_non_skew_pair(lines: &[Line3]) -> Option<(usize, usize)> {
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if !is_skew(&lines[i], &lines[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// General position: every pair of lines is skew and non-parallel.
pub fn pairwise_skew(lines: &[Line3]) -> bool {
    first_non_skew_pair(lines).is_none()
}

/// Shift the canonical anchor by `jitter[0..3]` and the canonical direction
/// by `jitter[3..6]`. Every component must satisfy `|jitter[i]| <= bound`.
pub fn perturb_line(
    l: &Line3,
    jitter: &[Scalar; 6],
    bound: &Scalar,
) -> Result<Line3, GeometryError> {
    if let Some(j) = jitter.iter().find(|j| j.abs() > *bound) {
        return Err(GeometryError::JitterOutOfBounds {
            value: Box::new(j.clone()),
            bound: Box::new(bound.clone()),
        });
    }
    let da = Vec3::new(jitter[0].clone(), jitter[1].clone(), jitter[2].clone());
    let dd = Vec3::new(jitter[3].clone(), jitter[4].clone(), jitter[5].clone());
    Line3::new(l.anchor() + &da, l.dir() + &dd)
}

/// A rational basis `(e1, e2)` of the plane orthogonal to `d`.
pub fn perp_basis(d: &Vec3) -> (Vec3, Vec3) {
    // cross with the axis along which d has the smallest magnitude
    let ax = d.x.abs();
    let ay = d.y.abs();
    let az = d.z.abs();
    let axis = if ax <= ay && ax <= az {
        Vec3::from_ints(1, 0, 0)
    } else if ay <= az {
        Vec3::from_ints(0, 1, 0)
    } else {
        Vec3::from_ints(0, 0, 1)
    };
    let e1 = d.cross(&axis);
    let e2 = d.cross(&e1);
    (e1, e2)
}
