//! Planar rays, half-strips and joint regions.
//!
//! A triple of rays is *separated* when the directions are pairwise
//! non-parallel and no line meets all three rays. For such a triple each ray
//! misses the side of the origin triangle opposite its own origin; sweeping
//! that side along the ray's direction gives a half-strip, and the joint
//! region is the intersection of the three half-strips. Every point of the
//! joint region lies in every triangle with one vertex on each ray.

use serde::{Deserialize, Deserializer, Serialize};

use crate::geometry::{orient2d, point_in_hull, Point2, Vec2};
use crate::scalar::{Extended, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RaysError {
    #[error("ray direction is the zero vector")]
    ZeroDirection,
    #[error("line normal is the zero vector")]
    ZeroNormal,
    #[error("ray origins are collinear")]
    DegenerateOriginTriangle,
    #[error("rays do not form a separated triple")]
    NotSeparated,
    #[error("ray {0} is parallel to its opposite side")]
    DegenerateStrip(usize),
    #[error("ray index {0} out of range")]
    BadIndex(usize),
    #[error("ray parameter {0} is negative")]
    NegativeParameter(Scalar),
}

/// The line `{p : normal . p = offset}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Line2 {
    pub normal: Vec2,
    pub offset: Scalar,
}

impl Line2 {
    pub fn new(normal: Vec2, offset: Scalar) -> Result<Self, RaysError> {
        if normal.is_zero() {
            return Err(RaysError::ZeroNormal);
        }
        Ok(Line2 { normal, offset })
    }

    pub fn through(p: &Point2, q: &Point2) -> Option<Self> {
        let normal = (q - p).perp();
        if normal.is_zero() {
            return None;
        }
        let offset = normal.dot(p);
        Some(Line2 { normal, offset })
    }

    /// The line through `p` with direction `d`.
    pub fn with_direction(p: &Point2, d: &Vec2) -> Option<Self> {
        let normal = d.perp();
        if normal.is_zero() {
            return None;
        }
        let offset = normal.dot(p);
        Some(Line2 { normal, offset })
    }

    pub fn eval(&self, p: &Point2) -> Scalar {
        self.normal.dot(p) - &self.offset
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Ray2 {
    origin: Point2,
    dir: Vec2,
}

impl Ray2 {
    pub fn new(origin: Point2, dir: Vec2) -> Result<Self, RaysError> {
        if dir.is_zero() {
            return Err(RaysError::ZeroDirection);
        }
        Ok(Ray2 { origin, dir })
    }

    pub fn origin(&self) -> &Point2 {
        &self.origin
    }

    pub fn dir(&self) -> &Vec2 {
        &self.dir
    }

    pub fn point_at(&self, t: &Scalar) -> Point2 {
        &self.origin + &self.dir.scale(t)
    }
}

impl<'de> Deserialize<'de> for Ray2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            origin: Point2,
            dir: Vec2,
        }
        let raw = Raw::deserialize(deserializer)?;
        Ray2::new(raw.origin, raw.dir).map_err(serde::de::Error::custom)
    }
}

/// Exact: does the line meet the ray `{origin + t dir : t >= 0}`?
pub fn line2_meets_ray(line: &Line2, r: &Ray2) -> bool {
    let f = line.eval(r.origin()).signum();
    let g = line.normal.dot(r.dir()).signum();
    f == 0 || f * g < 0
}

/// Three rays; [`is_separated_triple`] decides whether they are separated.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RayTriple {
    pub rays: [Ray2; 3],
}

impl RayTriple {
    pub fn new(r1: Ray2, r2: Ray2, r3: Ray2) -> Self {
        RayTriple { rays: [r1, r2, r3] }
    }

    pub fn ray(&self, i: usize) -> &Ray2 {
        &self.rays[i]
    }

    pub fn origins(&self) -> [&Point2; 3] {
        [
            self.rays[0].origin(),
            self.rays[1].origin(),
            self.rays[2].origin(),
        ]
    }

    fn directions_pairwise_nonparallel(&self) -> bool {
        (0..3).all(|i| {
            let j = (i + 1) % 3;
            !self.rays[i].dir().cross(self.rays[j].dir()).is_zero()
        })
    }

    fn origins_collinear(&self) -> bool {
        let [a, b, c] = self.origins();
        orient2d(a, b, c) == 0
    }

    /// Shift each ray's origin by `jitter[i][0..2]` and direction by
    /// `jitter[i][2..4]`.
    pub fn perturbed(&self, jitter: &[[Scalar; 4]; 3]) -> Result<RayTriple, RaysError> {
        let mut out = Vec::with_capacity(3);
        for (r, j) in self.rays.iter().zip(jitter) {
            let o = r.origin() + &Vec2::new(j[0].clone(), j[1].clone());
            let d = r.dir() + &Vec2::new(j[2].clone(), j[3].clone());
            out.push(Ray2::new(o, d)?);
        }
        let [a, b, c]: [Ray2; 3] = out.try_into().expect("three rays");
        Ok(RayTriple::new(a, b, c))
    }
}

/// The best offset for lines with normal `n`: each ray bounds the offset
/// from one side by the projection of its origin (or fixes it, when
/// perpendicular to `n`). Returns a feasible line if the bounds are
/// compatible.
fn transversal_with_normal(t: &RayTriple, n: &Vec2) -> Option<Line2> {
    let mut lower: Option<Scalar> = None;
    let mut upper: Option<Scalar> = None;
    for r in &t.rays {
        let c = n.dot(r.origin());
        let s = n.dot(r.dir()).signum();
        if s >= 0 {
            lower = Some(lower.map_or(c.clone(), |l| l.max(c.clone())));
        }
        if s <= 0 {
            upper = Some(upper.map_or(c.clone(), |u| u.min(c.clone())));
        }
    }
    let offset = match (lower, upper) {
        (Some(l), Some(u)) if l > u => return None,
        (Some(l), _) => l,
        (None, Some(u)) => u,
        (None, None) => unreachable!("three rays"),
    };
    Some(Line2 {
        normal: n.clone(),
        offset,
    })
}

/// A line meeting all three rays, if one exists.
///
/// For a fixed normal direction the admissible offsets form an interval cut
/// out by the projected origins, and which side each ray bounds depends only
/// on the sign of its direction against the normal. Both change only at
/// normals perpendicular to a ray direction or to a difference of origins.
/// Testing those critical normals and one normal inside every arc between
/// them therefore covers every combinatorial case exactly.
pub fn find_transversal(t: &RayTriple) -> Option<Line2> {
    let o = t.origins();
    let mut critical: Vec<Vec2> = Vec::with_capacity(12);
    let mut add = |v: Vec2| {
        if !v.is_zero() {
            let p = v.perp();
            critical.push(-&p);
            critical.push(p);
        }
    };
    for r in &t.rays {
        add(r.dir().clone());
    }
    for i in 0..3 {
        for j in i + 1..3 {
            add(o[j] - o[i]);
        }
    }
    let mut candidates = critical.clone();
    for (i, a) in critical.iter().enumerate() {
        // the arc next to a critical normal may be a half-circle
        candidates.push(a.perp());
        for b in &critical[i + 1..] {
            let s = a + b;
            if !s.is_zero() {
                candidates.push(s);
            }
        }
    }
    candidates
        .iter()
        .find_map(|n| transversal_with_normal(t, n))
}

pub fn is_separated_triple(t: &RayTriple) -> bool {
    t.directions_pairwise_nonparallel() && find_transversal(t).is_none()
}

fn check_separated(t: &RayTriple, i: usize) -> Result<(), RaysError> {
    if i >= 3 {
        return Err(RaysError::BadIndex(i));
    }
    if t.origins_collinear() {
        return Err(RaysError::DegenerateOriginTriangle);
    }
    if !is_separated_triple(t) {
        return Err(RaysError::NotSeparated);
    }
    Ok(())
}

/// The side of the origin triangle disjoint from ray `i` (0-based), as its
/// two endpoints: the origins of the other two rays, in cyclic order.
pub fn opposite_side(t: &RayTriple, i: usize) -> Result<(Point2, Point2), RaysError> {
    check_separated(t, i)?;
    let o = t.origins();
    let (a, b) = (o[(i + 1) % 3], o[(i + 2) % 3]);
    // the two sides through o[i] always touch the ray; this one must not
    let l = Line2::through(a, b).expect("non-collinear origins");
    if line2_meets_ray(&l, t.ray(i)) {
        return Err(RaysError::NotSeparated);
    }
    Ok((a.clone(), b.clone()))
}

/// A closed half-plane `{p : normal . p <= offset}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Halfplane {
    pub normal: Vec2,
    pub offset: Scalar,
}

impl Halfplane {
    /// Slack `offset - normal . p`; nonnegative inside.
    pub fn slack(&self, p: &Point2) -> Scalar {
        &self.offset - self.normal.dot(p)
    }

    /// The half-plane `{p : w . p + w0 >= 0}`.
    fn at_least_zero(w: Vec2, w0: Scalar) -> Halfplane {
        Halfplane {
            normal: -&w,
            offset: w0,
        }
    }
}

/// Linear constraint `a . p <= c` (or `<` when strict) used by the solver.
#[derive(Clone, Debug)]
struct Constraint {
    a: Vec2,
    c: Scalar,
    strict: bool,
}

/// Interval of admissible values for one variable.
struct Interval {
    lo: Option<(Scalar, bool)>,
    hi: Option<(Scalar, bool)>,
    empty: bool,
}

impl Interval {
    fn full() -> Self {
        Interval {
            lo: None,
            hi: None,
            empty: false,
        }
    }

    /// Intersect with `alpha * x <= beta` (strict if requested).
    fn restrict(&mut self, alpha: &Scalar, beta: &Scalar, strict: bool) {
        match alpha.signum() {
            0 => {
                let ok = if strict {
                    beta.is_positive()
                } else {
                    !beta.is_negative()
                };
                if !ok {
                    self.empty = true;
                }
            }
            s => {
                let bound = beta / alpha;
                let slot = if s > 0 { &mut self.hi } else { &mut self.lo };
                let tighter = match slot {
                    None => true,
                    Some((b, st)) => {
                        let cmp = if s > 0 { bound < *b } else { bound > *b };
                        cmp || (bound == *b && strict && !*st)
                    }
                };
                if tighter {
                    *slot = Some((bound, strict));
                }
            }
        }
    }

    fn pick(&self) -> Option<Scalar> {
        if self.empty {
            return None;
        }
        match (&self.lo, &self.hi) {
            (None, None) => Some(Scalar::zero()),
            (Some((l, _)), None) => Some(l + &Scalar::one()),
            (None, Some((h, _))) => Some(h - &Scalar::one()),
            (Some((l, ls)), Some((h, hs))) => {
                if l < h {
                    Some((l + h) / Scalar::from_int(2))
                } else if l == h && !ls && !hs {
                    Some(l.clone())
                } else {
                    None
                }
            }
        }
    }
}

/// A feasible point of the system, or `None` if it is infeasible.
/// Fourier-Motzkin elimination of `y`, then back substitution.
fn solve(cons: &[Constraint]) -> Option<Point2> {
    let mut uppers = Vec::new();
    let mut lowers = Vec::new();
    let mut xi = Interval::full();
    for k in cons {
        match k.a.y.signum() {
            1 => uppers.push(k),
            -1 => lowers.push(k),
            _ => xi.restrict(&k.a.x, &k.c, k.strict),
        }
    }
    for lo in &lowers {
        for up in &uppers {
            // up.a.y * lo  +  (-lo.a.y) * up  eliminates y
            let ku = &up.a.y;
            let kl = -&lo.a.y;
            let alpha = ku * &lo.a.x + &kl * &up.a.x;
            let beta = ku * &lo.c + &kl * &up.c;
            xi.restrict(&alpha, &beta, lo.strict || up.strict);
        }
    }
    let x = xi.pick()?;
    let mut yi = Interval::full();
    for k in uppers.iter().chain(lowers.iter()) {
        let beta = &k.c - &(&k.a.x * &x);
        yi.restrict(&k.a.y, &beta, k.strict);
    }
    let y = yi.pick()?;
    Some(Point2::new(x, y))
}

/// Intersection of closed half-planes.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConvexRegion2 {
    pub halfplanes: Vec<Halfplane>,
}

impl ConvexRegion2 {
    pub fn new(halfplanes: Vec<Halfplane>) -> Self {
        ConvexRegion2 { halfplanes }
    }

    pub fn intersect(&self, other: &ConvexRegion2) -> ConvexRegion2 {
        let mut hp = self.halfplanes.clone();
        hp.extend(other.halfplanes.iter().cloned());
        ConvexRegion2::new(hp)
    }

    fn constraints(&self, strict: bool) -> Vec<Constraint> {
        self.halfplanes
            .iter()
            .map(|h| Constraint {
                a: h.normal.clone(),
                c: h.offset.clone(),
                strict,
            })
            .collect()
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.halfplanes.iter().all(|h| !h.slack(p).is_negative())
    }

    /// Strictly inside every half-plane.
    pub fn contains_strictly(&self, p: &Point2) -> bool {
        self.halfplanes.iter().all(|h| h.slack(p).is_positive())
    }

    pub fn feasible_point(&self) -> Option<Point2> {
        solve(&self.constraints(false))
    }

    pub fn is_empty(&self) -> bool {
        self.feasible_point().is_none()
    }

    /// A point satisfying every constraint strictly, if the region has
    /// nonempty interior.
    pub fn interior_point(&self) -> Option<Point2> {
        solve(&self.constraints(true))
    }

    /// True iff no point of the region lies strictly outside `h`.
    pub fn within_halfplane(&self, h: &Halfplane) -> bool {
        let mut cons = self.constraints(false);
        cons.push(Constraint {
            a: -&h.normal,
            c: -&h.offset,
            strict: true,
        });
        solve(&cons).is_none()
    }

    /// Exact containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &ConvexRegion2) -> bool {
        other.halfplanes.iter().all(|h| self.within_halfplane(h))
    }

    /// True iff the region is nonempty and contains no ray.
    pub fn is_bounded(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let one = Scalar::one();
        let zero = Scalar::zero();
        let dirs = [
            (Some(one.clone()), None),
            (Some(-&one), None),
            (Some(zero.clone()), Some(one.clone())),
            (Some(zero.clone()), Some(-&one)),
        ];
        // recession cone {d : normal . d <= 0} must be trivial
        for (dx, dy) in dirs {
            let mut cons: Vec<Constraint> = self
                .halfplanes
                .iter()
                .map(|h| Constraint {
                    a: h.normal.clone(),
                    c: Scalar::zero(),
                    strict: false,
                })
                .collect();
            let fix = |cons: &mut Vec<Constraint>, a: Vec2, v: &Scalar| {
                cons.push(Constraint {
                    a: a.clone(),
                    c: v.clone(),
                    strict: false,
                });
                cons.push(Constraint {
                    a: -&a,
                    c: -v,
                    strict: false,
                });
            };
            if let Some(v) = &dx {
                fix(&mut cons, Vec2::from_ints(1, 0), v);
            }
            if let Some(v) = &dy {
                fix(&mut cons, Vec2::from_ints(0, 1), v);
            }
            if solve(&cons).is_some() {
                return false;
            }
        }
        true
    }

    /// Vertices of a bounded region in counterclockwise order; `None` when
    /// the region is empty or unbounded.
    pub fn vertices(&self) -> Option<Vec<Point2>> {
        if !self.is_bounded() {
            return None;
        }
        let hp = &self.halfplanes;
        let mut pts: Vec<Point2> = Vec::new();
        for i in 0..hp.len() {
            for j in i + 1..hp.len() {
                let det = hp[i].normal.cross(&hp[j].normal);
                if det.is_zero() {
                    continue;
                }
                // Cramer's rule for n_i . p = c_i, n_j . p = c_j
                let x = (&hp[i].offset * &hp[j].normal.y - &hp[j].offset * &hp[i].normal.y) / &det;
                let y = (&hp[i].normal.x * &hp[j].offset - &hp[j].normal.x * &hp[i].offset) / &det;
                let p = Point2::new(x, y);
                if self.contains(&p) && !pts.contains(&p) {
                    pts.push(p);
                }
            }
        }
        let hull = crate::geometry::convex_hull_indices(&pts);
        Some(hull.into_iter().map(|i| pts[i].clone()).collect())
    }
}

/// Squared distance from `p` to the nearest bounding line when `p` satisfies
/// every constraint strictly, zero otherwise. Unconstrained regions are
/// unbounded in every direction.
pub fn interior_margin(region: &ConvexRegion2, p: &Point2) -> Extended {
    if !region.contains_strictly(p) {
        return Extended::Finite(Scalar::zero());
    }
    region
        .halfplanes
        .iter()
        .map(|h| h.slack(p).square() / h.normal.norm_sq())
        .min()
        .map(Extended::Finite)
        .unwrap_or(Extended::Infinite)
}

/// The half-strip swept by the side opposite ray `i` along that ray's
/// direction, as three half-planes: the side's own line and the two lines
/// through its endpoints parallel to the ray.
pub fn half_strip(t: &RayTriple, i: usize) -> Result<ConvexRegion2, RaysError> {
    let (a, b) = opposite_side(t, i)?;
    let d = t.ray(i).dir();
    let e = &b - &a;
    let det = e.cross(d);
    if det.is_zero() {
        return Err(RaysError::DegenerateStrip(i));
    }
    // p = a + u e + s d with u = (p - a) x d / det and s = e x (p - a) / det
    let g = Vec2::new(d.y.clone(), -&d.x).scale(&det.recip().unwrap());
    let h = Vec2::new(-&e.y, e.x.clone()).scale(&det.recip().unwrap());
    let u_ge_0 = Halfplane::at_least_zero(g.clone(), -g.dot(&a));
    let u_le_1 = Halfplane::at_least_zero(-&g, Scalar::one() + g.dot(&a));
    let s_ge_0 = Halfplane::at_least_zero(h.clone(), -h.dot(&a));
    Ok(ConvexRegion2::new(vec![s_ge_0, u_ge_0, u_le_1]))
}

/// Intersection of the three half-strips.
pub fn joint_region(t: &RayTriple) -> Result<ConvexRegion2, RaysError> {
    let mut hp = Vec::with_capacity(9);
    for i in 0..3 {
        hp.extend(half_strip(t, i)?.halfplanes);
    }
    Ok(ConvexRegion2::new(hp))
}

/// The triangle spanned by the ray origins, as a region.
pub fn origin_triangle(t: &RayTriple) -> Result<ConvexRegion2, RaysError> {
    if t.origins_collinear() {
        return Err(RaysError::DegenerateOriginTriangle);
    }
    let [a, b, c] = t.origins();
    let ccw = orient2d(a, b, c) > 0;
    let edges = if ccw {
        [(a, b), (b, c), (c, a)]
    } else {
        [(a, c), (c, b), (b, a)]
    };
    let hp = edges
        .iter()
        .map(|(p, q)| {
            // inside is to the left of p -> q
            let n = (*q - *p).perp();
            Halfplane::at_least_zero(n.clone(), -n.dot(p))
        })
        .collect();
    Ok(ConvexRegion2::new(hp))
}

/// A possibly degenerate triangle.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Triangle2 {
    pub a: Point2,
    pub b: Point2,
    pub c: Point2,
}

impl Triangle2 {
    /// Closed containment; boundary counts.
    pub fn contains(&self, p: &Point2) -> bool {
        let s = [
            orient2d(&self.a, &self.b, p),
            orient2d(&self.b, &self.c, p),
            orient2d(&self.c, &self.a, p),
        ];
        if orient2d(&self.a, &self.b, &self.c) == 0 {
            return point_in_hull(&[self.a.clone(), self.b.clone(), self.c.clone()], p);
        }
        s.iter().all(|&x| x >= 0) || s.iter().all(|&x| x <= 0)
    }
}

/// The triangle with vertex `origin_i + params[i] * dir_i` on each ray.
pub fn spanned_triangle(t: &RayTriple, params: [&Scalar; 3]) -> Result<Triangle2, RaysError> {
    if let Some(p) = params.iter().find(|p| p.is_negative()) {
        return Err(RaysError::NegativeParameter((*p).clone()));
    }
    Ok(Triangle2 {
        a: t.ray(0).point_at(params[0]),
        b: t.ray(1).point_at(params[1]),
        c: t.ray(2).point_at(params[2]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    fn ray(o: (i64, i64), d: (i64, i64)) -> Ray2 {
        Ray2::new(Point2::from_ints(o.0, o.1), Vec2::from_ints(d.0, d.1)).unwrap()
    }

    /// A = (-2,-1), B = (2,-1), C = (0,2) with outward directions.
    pub(crate) fn abc() -> RayTriple {
        RayTriple::new(
            ray((-2, -1), (-2, -1)),
            ray((2, -1), (2, -1)),
            ray((0, 2), (0, 1)),
        )
    }

    fn y_axis_line() -> Line2 {
        // y = 0
        Line2::new(Vec2::from_ints(0, 1), Scalar::zero()).unwrap()
    }

    #[test]
    fn line_meets_ray_examples() {
        assert!(line2_meets_ray(&y_axis_line(), &ray((0, 1), (0, -1))));
        assert!(!line2_meets_ray(&y_axis_line(), &ray((0, 1), (0, 1))));
        assert!(line2_meets_ray(&y_axis_line(), &ray((5, 0), (1, 1))));
    }

    #[test]
    fn separated_examples() {
        let collinear = RayTriple::new(
            ray((0, 0), (0, 1)),
            ray((1, 0), (1, 1)),
            ray((2, 0), (-1, 1)),
        );
        assert!(!is_separated_triple(&collinear));
        assert!(find_transversal(&collinear).is_some());
        assert!(is_separated_triple(&abc()));
        let parallel = RayTriple::new(
            ray((-2, -1), (-2, -1)),
            ray((2, -1), (2, 1)),
            ray((0, 2), (4, 2)),
        );
        assert!(!is_separated_triple(&parallel));
    }

    #[test]
    fn transversal_certificates_meet_all_rays() {
        // rays all pointing the same way always admit a transversal
        let t = RayTriple::new(
            ray((0, 0), (1, 3)),
            ray((5, 1), (1, 2)),
            ray((2, 7), (2, 1)),
        );
        let l = find_transversal(&t).unwrap();
        assert!(t.rays.iter().all(|r| line2_meets_ray(&l, r)));
        // shared origins
        let t = RayTriple::new(
            ray((0, 0), (1, 0)),
            ray((0, 0), (0, 1)),
            ray((3, 3), (1, 1)),
        );
        let l = find_transversal(&t).unwrap();
        assert!(t.rays.iter().all(|r| line2_meets_ray(&l, r)));
        // directions in an open half-plane: only lines far below all origins
        // work, and none of them passes through an origin parallel to a ray
        let half = |o: (i64, i64), d: (i64, i64)| {
            Ray2::new(
                Point2::new(Scalar::ratio(o.0, 2), Scalar::ratio(o.1, 2)),
                Vec2::from_ints(d.0, d.1),
            )
            .unwrap()
        };
        let t = RayTriple::new(
            half((-1, -1), (3, -1)),
            half((-1, 3), (-1, -2)),
            half((0, 3), (1, -3)),
        );
        let l = find_transversal(&t).unwrap();
        assert!(t.rays.iter().all(|r| line2_meets_ray(&l, r)));
        assert!(!is_separated_triple(&t));
        let below = Line2::new(Vec2::from_ints(0, 1), q("-1")).unwrap();
        assert!(t.rays.iter().all(|r| line2_meets_ray(&below, r)));
    }

    #[test]
    fn opposite_sides() {
        let t = abc();
        assert_eq!(
            opposite_side(&t, 2).unwrap(),
            (Point2::from_ints(-2, -1), Point2::from_ints(2, -1))
        );
        assert_eq!(
            opposite_side(&t, 0).unwrap(),
            (Point2::from_ints(2, -1), Point2::from_ints(0, 2))
        );
        let collinear = RayTriple::new(
            ray((0, 0), (0, 1)),
            ray((1, 0), (1, 1)),
            ray((2, 0), (-1, 1)),
        );
        assert_eq!(
            opposite_side(&collinear, 0),
            Err(RaysError::DegenerateOriginTriangle)
        );
        assert_eq!(opposite_side(&abc(), 3), Err(RaysError::BadIndex(3)));
    }

    #[test]
    fn half_strip_examples() {
        let t = abc();
        let x3 = half_strip(&t, 2).unwrap();
        assert_eq!(x3.halfplanes.len(), 3);
        for (p, inside) in [
            ((0, 0), true),
            ((2, 100), true),
            ((-2, -1), true),
            ((3, 0), false),
            ((0, -2), false),
            ((100, 100), false),
        ] {
            assert_eq!(x3.contains(&Point2::from_ints(p.0, p.1)), inside, "{p:?}");
        }
        // (0,0) = B + (1/2)(C - B) + (1/2)(-2,-1)
        let x1 = half_strip(&t, 0).unwrap();
        assert!(x1.contains_strictly(&Point2::zero()));
        assert!(x1.contains(&Point2::new(q("1"), q("1/2"))));
        assert!(!x1.contains(&Point2::from_ints(1000, 1000)));
    }

    #[test]
    fn joint_region_examples() {
        let t = abc();
        let y = joint_region(&t).unwrap();
        assert!(y.contains_strictly(&Point2::zero()));
        assert!(y.interior_point().is_some());
        assert!(y.is_bounded());
        assert!(y.is_subset_of(&origin_triangle(&t).unwrap()));
        let verts = y.vertices().unwrap();
        assert!(verts.len() >= 3);
    }

    #[test]
    fn empty_joint_region() {
        let t = RayTriple::new(
            ray((-2, -1), (-2, 1)),
            ray((2, -1), (-1, -2)),
            ray((0, 2), (1, 1)),
        );
        assert!(is_separated_triple(&t));
        let y = joint_region(&t).unwrap();
        assert!(y.is_empty());
        assert!(y.vertices().is_none());
    }

    #[test]
    fn spanned_triangle_examples() {
        let t = abc();
        let one = Scalar::one();
        let tri = spanned_triangle(&t, [&one, &one, &one]).unwrap();
        assert_eq!(tri.a, Point2::from_ints(-4, -2));
        assert_eq!(tri.b, Point2::from_ints(4, -2));
        assert_eq!(tri.c, Point2::from_ints(0, 3));
        assert!(tri.contains(&Point2::zero()));
        let zero = Scalar::zero();
        let x = spanned_triangle(&t, [&zero, &zero, &zero]).unwrap();
        assert!(x.contains(&Point2::zero()));
        assert!(!x.contains(&Point2::from_ints(100, 100)));
        assert!(spanned_triangle(&t, [&zero, &q("-1"), &zero]).is_err());
        let flat = Triangle2 {
            a: Point2::from_ints(0, 0),
            b: Point2::from_ints(2, 2),
            c: Point2::from_ints(1, 1),
        };
        assert!(flat.contains(&Point2::from_ints(2, 2)));
        assert!(!flat.contains(&Point2::from_ints(3, 3)));
    }

    #[test]
    fn margin_examples() {
        let t = abc();
        let x3 = half_strip(&t, 2).unwrap();
        assert_eq!(
            interior_margin(&x3, &Point2::zero()),
            Extended::Finite(Scalar::one())
        );
        assert_eq!(
            interior_margin(&x3, &Point2::from_ints(2, 5)),
            Extended::Finite(Scalar::zero())
        );
        assert_eq!(
            interior_margin(&x3, &Point2::from_ints(5, 5)),
            Extended::Finite(Scalar::zero())
        );
        assert_eq!(
            interior_margin(&ConvexRegion2::new(vec![]), &Point2::zero()),
            Extended::Infinite
        );
    }

    #[test]
    fn solver_strictness() {
        // x <= 0 and x >= 0 is feasible, but not strictly
        let r = ConvexRegion2::new(vec![
            Halfplane {
                normal: Vec2::from_ints(1, 0),
                offset: Scalar::zero(),
            },
            Halfplane {
                normal: Vec2::from_ints(-1, 0),
                offset: Scalar::zero(),
            },
        ]);
        assert!(!r.is_empty());
        assert!(r.interior_point().is_none());
        assert!(!r.is_bounded());
    }
}
