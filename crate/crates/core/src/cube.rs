//! The cube gadget: three blue lines along disjoint edges of `[-1,1]³`, four
//! red lines near the main diagonals, and the three-cube assembly in which
//! every convex set meeting the nine blue lines is hit by one of thirteen red
//! lines.
//!
//! Blue lines are `ℓ_x = (t,1,-1)`, `ℓ_y = (-1,t,1)`, `ℓ_z = (1,-1,t)`. The
//! cyclic coordinate shift `σ(a,b,c) = (c,a,b)` maps `ℓ_x → ℓ_y → ℓ_z → ℓ_x`
//! and the diagonal `(1,-1,1)` to `(1,1,-1)` and then to `(-1,1,1)`, so the
//! last three diagonals are one case up to symmetry.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::geometry::{
    first_non_skew_pair, line_meets_body, line_meets_polygon_interior, pairwise_skew, ConvexBody,
    ConvexPolygon3, Line3, Point2, Point3, Vec2, Vec3,
};
use crate::planar::{interior_margin, is_separated_triple, joint_region, Ray2, RayTriple};
use crate::rng::{self, Rng};
use crate::scalar::{Extended, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CubeError {
    #[error("perturbation budget {0} is not strictly between 0 and 1")]
    BadEps(Scalar),
    #[error("diagonal index {0} is not in 1..=4")]
    BadDiagonal(usize),
    #[error("projection direction is the zero vector")]
    ZeroDirection,
    #[error("cube centers are {0} apart; at least 100 is required")]
    SeparationTooSmall(Scalar),
    #[error("degenerate placement: {0}")]
    DegeneratePlacement(String),
}

/// `σ(a,b,c) = (c,a,b)`.
pub fn cyclic_shift(p: &Vec3) -> Vec3 {
    Vec3::new(p.z.clone(), p.x.clone(), p.y.clone())
}

fn blue_point(axis: usize, t: &Scalar) -> Point3 {
    let one = Scalar::one;
    match axis {
        0 => Point3::new(t.clone(), one(), -one()),
        1 => Point3::new(-one(), t.clone(), one()),
        _ => Point3::new(one(), -one(), t.clone()),
    }
}

fn axis(i: usize) -> Vec3 {
    match i {
        0 => Vec3::from_ints(1, 0, 0),
        1 => Vec3::from_ints(0, 1, 0),
        _ => Vec3::from_ints(0, 0, 1),
    }
}

pub fn blue_lines() -> [Line3; 3] {
    [0, 1, 2].map(|i| Line3::new(blue_point(i, &Scalar::zero()), axis(i)).expect("axis"))
}

/// Directions of the main diagonals `(t,t,t)`, `(t,t,-t)`, `(t,-t,t)`, `(-t,t,t)`.
pub fn diagonal_directions() -> [Vec3; 4] {
    [
        Vec3::from_ints(1, 1, 1),
        Vec3::from_ints(1, 1, -1),
        Vec3::from_ints(1, -1, 1),
        Vec3::from_ints(-1, 1, 1),
    ]
}

pub fn main_diagonals() -> [Line3; 4] {
    diagonal_directions().map(|u| Line3::new(Point3::zero(), u).expect("nonzero"))
}

/// `incidence()[j][i]`: does diagonal `j` meet blue line `i`?
pub fn incidence() -> [[bool; 3]; 4] {
    let blue = blue_lines();
    main_diagonals()
        .map(|d| [0, 1, 2].map(|i| crate::geometry::line_line_dist_sq(&d, &blue[i]).is_zero()))
}

/// A triangle in space, possibly degenerate.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Triangle3 {
    pub a: Point3,
    pub b: Point3,
    pub c: Point3,
}

impl Triangle3 {
    pub fn vertices(&self) -> [Point3; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn centroid(&self) -> Point3 {
        (&(&self.a + &self.b) + &self.c).scale(&Scalar::ratio(1, 3))
    }

    pub fn normal(&self) -> Vec3 {
        (&self.b - &self.a).cross(&(&self.c - &self.a))
    }

    pub fn to_polygon(&self) -> Option<ConvexPolygon3> {
        ConvexPolygon3::new(self.vertices().to_vec()).ok()
    }

    /// Does `l` meet the relative interior?
    pub fn meets_interior(&self, l: &Line3) -> bool {
        self.to_polygon()
            .is_some_and(|p| p.vertices().len() == 3 && line_meets_polygon_interior(l, &p))
    }

    /// Smallest barycentric coordinate of the point where `l` crosses the
    /// triangle's plane; positive iff that point is interior. `None` when
    /// the triangle is degenerate or `l` is parallel to its plane.
    pub fn crossing_depth(&self, l: &Line3) -> Option<Scalar> {
        let n = self.normal();
        let nn = n.norm_sq();
        if nn.is_zero() {
            return None;
        }
        let nd = n.dot(l.dir());
        if nd.is_zero() {
            return None;
        }
        let t = -(n.dot(&(l.anchor() - &self.a)) / nd);
        let x = l.point_at(&t);
        let bary = |p: &Point3, q: &Point3| (p - &x).cross(&(q - &x)).dot(&n) / &nn;
        let la = bary(&self.b, &self.c);
        let lb = bary(&self.c, &self.a);
        let lc = bary(&self.a, &self.b);
        Some(la.min(lb).min(lc))
    }
}

/// `T(x1,x2,x3)`, the triangle with one vertex on each blue line.
pub fn triangle_t(x: [&Scalar; 3]) -> Triangle3 {
    Triangle3 {
        a: blue_point(0, x[0]),
        b: blue_point(1, x[1]),
        c: blue_point(2, x[2]),
    }
}

/// Orthogonal projection along `u` onto `u⊥`, in coordinates of a fixed
/// orthogonal rational basis `b1, b2` of `u⊥`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Projection {
    pub u: Vec3,
    pub b1: Vec3,
    pub b2: Vec3,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Projected<T> {
    Proper {
        value: T,
    },
    /// The direction was parallel to `u`; only the image of the base point
    /// remains.
    Point {
        point: Point2,
    },
}

impl Projection {
    pub fn along(u: &Vec3) -> Result<Self, CubeError> {
        if u.is_zero() {
            return Err(CubeError::ZeroDirection);
        }
        let v = |x, y, z| Vec3::from_ints(x, y, z);
        let (b1, b2) = if *u == v(1, 1, 1) {
            (v(1, -1, 0), v(1, 1, -2))
        } else if *u == v(1, -1, 1) {
            (v(1, 1, 0), v(1, -1, -2))
        } else if *u == v(1, 1, -1) {
            (cyclic_shift(&v(1, 1, 0)), cyclic_shift(&v(1, -1, -2)))
        } else if *u == v(-1, 1, 1) {
            let s = |p: &Vec3| cyclic_shift(&cyclic_shift(p));
            (s(&v(1, 1, 0)), s(&v(1, -1, -2)))
        } else {
            // cross with the axis least aligned with u
            let ax = [u.x.abs(), u.y.abs(), u.z.abs()];
            let i = (0..3)
                .min_by(|&i, &j| ax[i].cmp(&ax[j]))
                .expect("three axes");
            let b1 = u.cross(&axis(i));
            let b2 = u.cross(&b1);
            (b1, b2)
        };
        Ok(Projection {
            u: u.clone(),
            b1,
            b2,
        })
    }

    pub fn vector(&self, d: &Vec3) -> Vec2 {
        Vec2::new(
            d.dot(&self.b1) / self.b1.norm_sq(),
            d.dot(&self.b2) / self.b2.norm_sq(),
        )
    }

    pub fn point(&self, p: &Point3) -> Point2 {
        self.vector(p)
    }

    pub fn ray(&self, r: &Ray3) -> Projected<Ray2> {
        let o = self.point(&r.origin);
        match Ray2::new(o.clone(), self.vector(&r.dir)) {
            Ok(value) => Projected::Proper { value },
            Err(_) => Projected::Point { point: o },
        }
    }
}

/// `{origin + t dir : t >= 0}` in space.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Ray3 {
    pub origin: Point3,
    pub dir: Vec3,
}

impl Ray3 {
    fn shifted(&self) -> Ray3 {
        Ray3 {
            origin: cyclic_shift(&self.origin),
            dir: cyclic_shift(&self.dir),
        }
    }
}

/// The ray `{x_i >= 2}` or `{x_i <= -2}` on each blue line, by the sign of
/// `signs[i]`. Rays starting at `+2` and pointing back through the cube are
/// not used: for the `(t,t,t)` diagonal that triple has a common transversal.
fn blue_rays(signs: [i64; 3]) -> [Ray3; 3] {
    [0, 1, 2].map(|i| Ray3 {
        origin: blue_point(i, &Scalar::from_int(2 * signs[i])),
        dir: axis(i).scale(&Scalar::from_int(signs[i])),
    })
}

/// The `R` and `Q` ray triples attached to diagonal `which` (1-based, in the
/// order of [`diagonal_directions`]).
pub fn rays_for_diagonal(which: usize) -> Result<([Ray3; 3], [Ray3; 3]), CubeError> {
    let base = || (blue_rays([1, -1, 1]), blue_rays([-1, 1, -1]));
    // σ moves the ray on line i to line i+1, so reorder to keep ray i on line i
    let shift = |t: [Ray3; 3]| {
        let [a, b, c] = t.map(|r| r.shifted());
        [c, a, b]
    };
    match which {
        1 => Ok((blue_rays([1, 1, 1]), blue_rays([-1, -1, -1]))),
        3 => Ok(base()),
        2 => {
            let (r, q) = base();
            Ok((shift(r), shift(q)))
        }
        4 => {
            let (r, q) = base();
            Ok((shift(shift(r)), shift(shift(q))))
        }
        w => Err(CubeError::BadDiagonal(w)),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TripleCase {
    pub label: String,
    pub rays: Option<RayTriple>,
    pub separated: bool,
    pub joint_nonempty: bool,
    /// Squared distance from the origin to the joint region's boundary;
    /// zero when the origin is not interior.
    pub origin_margin: Extended,
}

impl TripleCase {
    pub fn passed(&self) -> bool {
        self.separated
            && self.joint_nonempty
            && self.origin_margin > Extended::Finite(Scalar::zero())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JointRegionCase {
    pub which: usize,
    pub u: Vec3,
    pub cases: Vec<TripleCase>,
}

impl JointRegionCase {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(TripleCase::passed)
    }
}

fn project_triple(p: &Projection, rays: &[Ray3; 3]) -> Option<RayTriple> {
    let mut out = Vec::with_capacity(3);
    for r in rays {
        match p.ray(r) {
            Projected::Proper { value } => out.push(value),
            Projected::Point { .. } => return None,
        }
    }
    let [a, b, c]: [Ray2; 3] = out.try_into().ok()?;
    Some(RayTriple::new(a, b, c))
}

fn triple_case(label: &str, t: Option<RayTriple>) -> TripleCase {
    let zero = Extended::Finite(Scalar::zero());
    let Some(t) = t else {
        return TripleCase {
            label: label.into(),
            rays: None,
            separated: false,
            joint_nonempty: false,
            origin_margin: zero,
        };
    };
    let separated = is_separated_triple(&t);
    let region = if separated {
        joint_region(&t).ok()
    } else {
        None
    };
    let joint_nonempty = region.as_ref().is_some_and(|r| !r.is_empty());
    let origin_margin = region
        .map(|r| interior_margin(&r, &Point2::zero()))
        .unwrap_or(zero);
    TripleCase {
        label: label.into(),
        rays: Some(t),
        separated,
        joint_nonempty,
        origin_margin,
    }
}

/// Project both ray triples of diagonal `which` along it and check that each
/// is separated with the origin strictly inside its joint region.
pub fn check_joint_region_case(which: usize) -> Result<JointRegionCase, CubeError> {
    let (r, q) = rays_for_diagonal(which)?;
    let u = diagonal_directions()[which - 1].clone();
    let p = Projection::along(&u)?;
    Ok(JointRegionCase {
        which,
        cases: vec![
            triple_case("R", project_triple(&p, &r)),
            triple_case("Q", project_triple(&p, &q)),
        ],
        u,
    })
}

/// A line certified to be an `eps`-perturbation of the line through the
/// origin with direction `base`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PerturbationCert {
    pub base: Vec3,
    pub anchor: Point3,
    pub dir: Vec3,
    pub eps: Scalar,
}

impl PerturbationCert {
    pub fn line(&self) -> Line3 {
        Line3::new(self.anchor.clone(), self.dir.clone()).expect("nonzero direction")
    }

    /// Exact re-validation: distance to the origin below `eps`, and
    /// `u·u' > (1-eps)|u||u'|` restated without square roots.
    pub fn validate(&self) -> bool {
        if self.dir.is_zero() || !self.eps.is_positive() || self.eps >= Scalar::one() {
            return false;
        }
        let dist_ok = self.line().point_dist_sq(&Point3::zero()) < self.eps.square();
        let uu = self.base.dot(&self.dir);
        let bound = (Scalar::one() - &self.eps).square() * self.base.norm_sq() * self.dir.norm_sq();
        dist_ok && uu.is_positive() && uu.square() > bound
    }
}

const SAMPLE_DEN: i64 = 1_000_000;

/// Draw a random `eps`-perturbation of the line through the origin along
/// `base`, resampling until the certificate validates.
pub fn sample_perturbation(
    base: &Vec3,
    eps: &Scalar,
    rng: &mut Rng,
) -> Result<PerturbationCert, CubeError> {
    if !eps.is_positive() || *eps >= Scalar::one() {
        return Err(CubeError::BadEps(eps.clone()));
    }
    // the admissible angle is about sqrt(2 eps); sample a slightly larger box
    let tilt = (Scalar::from_int(3) * eps * base.norm_sq())
        .sqrt_upper(SAMPLE_DEN as u64)
        .expect("nonnegative");
    loop {
        let s = |rng: &mut Rng, b: &Scalar| rng::symmetric(rng, b, SAMPLE_DEN);
        let anchor = Point3::new(s(rng, eps), s(rng, eps), s(rng, eps));
        let v = Vec3::new(s(rng, &tilt), s(rng, &tilt), s(rng, &tilt));
        let cert = PerturbationCert {
            base: base.clone(),
            anchor,
            dir: base + &v,
            eps: eps.clone(),
        };
        if cert.validate() {
            return Ok(cert);
        }
    }
}

/// One sampled instance of the diagonal claim.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DiagTrial {
    pub index: u64,
    pub x: [Scalar; 3],
    /// First red line meeting the interior of `T(x)`, if any.
    pub hit: Option<usize>,
    /// Largest crossing depth over the four red lines (zero if none crosses).
    pub depth: Scalar,
}

/// Check a specific `x` against four given red lines.
pub fn diag_trial(index: u64, x: [Scalar; 3], reds: &[Line3]) -> DiagTrial {
    let tri = triangle_t([&x[0], &x[1], &x[2]]);
    let depths: Vec<Option<Scalar>> = reds.iter().map(|m| tri.crossing_depth(m)).collect();
    // a line in the plane of the triangle has no crossing depth
    let hit = reds.iter().zip(&depths).position(|(m, d)| match d {
        Some(d) => d.is_positive(),
        None => tri.meets_interior(m),
    });
    let depth = depths
        .into_iter()
        .flatten()
        .max()
        .unwrap_or_else(Scalar::zero)
        .max(Scalar::zero());
    DiagTrial {
        index,
        x,
        hit,
        depth,
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DiagClaimReport {
    pub eps: Scalar,
    pub trials: u64,
    pub seed: u64,
    /// How often each red line was the first certifier.
    pub certifier_counts: [u64; 4],
    pub worst_depth: Option<Scalar>,
    pub counterexamples: Vec<DiagTrial>,
    pub samples: Vec<DiagTrial>,
}

impl DiagClaimReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn sample_x(rng: &mut Rng) -> [Scalar; 3] {
    [0, 1, 2].map(|_| {
        let m = rng::log_uniform(rng, 2, 1000, 1000);
        if rng::coin(rng) {
            m
        } else {
            -m
        }
    })
}

/// Sample `trials` points `x` with every `|x_i| >= 2` (all sign patterns,
/// magnitudes roughly log-uniform in `[2, 1000]`) and fresh perturbations of
/// the four diagonals; each `T(x)` must have its interior met by one of them.
pub fn verify_diag_claim(
    eps: &Scalar,
    trials: u64,
    seed: u64,
) -> Result<DiagClaimReport, CubeError> {
    if !eps.is_positive() || *eps >= Scalar::one() {
        return Err(CubeError::BadEps(eps.clone()));
    }
    let dirs = diagonal_directions();
    let samples: Vec<DiagTrial> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut r = rng::trial_rng(seed, i);
            let x = sample_x(&mut r);
            let reds: Vec<Line3> = dirs
                .iter()
                .map(|u| {
                    sample_perturbation(u, eps, &mut r)
                        .expect("eps checked")
                        .line()
                })
                .collect();
            diag_trial(i, x, &reds)
        })
        .collect();
    let mut counts = [0u64; 4];
    for s in &samples {
        if let Some(j) = s.hit {
            counts[j] += 1;
        }
    }
    Ok(DiagClaimReport {
        eps: eps.clone(),
        trials,
        seed,
        certifier_counts: counts,
        worst_depth: samples.iter().map(|s| s.depth.clone()).min(),
        counterexamples: samples
            .iter()
            .filter(|s| s.hit.is_none())
            .cloned()
            .collect(),
        samples,
    })
}

/// The perturbation budget used by default: the first candidate of
/// [`search_eps`] (start `1/100`, `10⁴` trials, seed 0) already passed, with
/// smallest crossing depth about `6.2·10⁻⁴`.
pub fn derived_eps() -> Scalar {
    Scalar::ratio(1, 100)
}

/// Start at `start` and halve until a run of `verify_diag_claim` is clean,
/// giving up after `max_halvings` halvings.
pub fn search_eps(
    start: &Scalar,
    trials: u64,
    seed: u64,
    max_halvings: u32,
) -> Result<Option<Scalar>, CubeError> {
    let mut eps = start.clone();
    for _ in 0..=max_halvings {
        if verify_diag_claim(&eps, trials, seed)?.passed() {
            return Ok(Some(eps));
        }
        eps = eps * Scalar::ratio(1, 2);
    }
    Ok(None)
}

/// A rigid motion `p ↦ R p + t` with a rational (near-)rotation `R`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Placement {
    pub rotation: [Vec3; 3],
    pub translation: Vec3,
}

impl Placement {
    /// The exact rotation of the unit quaternion `(a,b,c,d)/|q|`; rational
    /// because its entries are quadratic in the quaternion over `|q|²`.
    pub fn from_quaternion(q: [i64; 4], translation: Vec3) -> Self {
        let [a, b, c, d] = q;
        let n = a * a + b * b + c * c + d * d;
        assert!(n > 0, "zero quaternion");
        let s = |x: i64| Scalar::ratio(x, n);
        let rotation = [
            Vec3::new(
                s(a * a + b * b - c * c - d * d),
                s(2 * (b * c - a * d)),
                s(2 * (b * d + a * c)),
            ),
            Vec3::new(
                s(2 * (b * c + a * d)),
                s(a * a - b * b + c * c - d * d),
                s(2 * (c * d - a * b)),
            ),
            Vec3::new(
                s(2 * (b * d - a * c)),
                s(2 * (c * d + a * b)),
                s(a * a - b * b - c * c + d * d),
            ),
        ];
        Placement {
            rotation,
            translation,
        }
    }

    pub fn identity(translation: Vec3) -> Self {
        Placement::from_quaternion([1, 0, 0, 0], translation)
    }

    pub fn rotate(&self, v: &Vec3) -> Vec3 {
        Vec3::new(
            self.rotation[0].dot(v),
            self.rotation[1].dot(v),
            self.rotation[2].dot(v),
        )
    }

    pub fn apply(&self, p: &Point3) -> Point3 {
        &self.rotate(p) + &self.translation
    }

    pub fn apply_line(&self, l: &Line3) -> Line3 {
        Line3::new(self.apply(l.anchor()), self.rotate(l.dir()))
            .expect("rotation keeps directions nonzero")
    }

    /// Largest `|R Rᵀ - I|` entry.
    pub fn orthogonality_defect(&self) -> Scalar {
        let mut worst = Scalar::zero();
        for i in 0..3 {
            for j in 0..3 {
                let target = if i == j {
                    Scalar::one()
                } else {
                    Scalar::zero()
                };
                let e = (self.rotation[i].dot(&self.rotation[j]) - target).abs();
                worst = worst.max(e);
            }
        }
        worst
    }
}

/// `√3/2` to well within `10⁻⁶`.
fn half_sqrt3() -> Scalar {
    Scalar::ratio(1351, 1560)
}

/// Centers `(0,0,0)`, `(s,0,0)`, `(s/2, s·√3/2, 0)` with a rational `√3`, and
/// three fixed distinct rational rotations.
pub fn default_placements(separation: &Scalar) -> Vec<Placement> {
    let centers = [
        Vec3::zero(),
        Vec3::new(separation.clone(), Scalar::zero(), Scalar::zero()),
        Vec3::new(
            separation * &Scalar::ratio(1, 2),
            separation * &half_sqrt3(),
            Scalar::zero(),
        ),
    ];
    let quats = [[5, 1, 2, 3], [4, -3, 1, 2], [6, 2, -1, 1]];
    quats
        .iter()
        .zip(centers)
        .map(|(q, c)| Placement::from_quaternion(*q, c))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RedCert {
    pub cube: usize,
    pub diagonal: usize,
    pub cert: PerturbationCert,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MultiCubeConfig {
    pub eps: Scalar,
    pub placements: Vec<Placement>,
    /// Cube-major: lines `3i..3i+3` are the blue lines of cube `i`.
    pub blue: Vec<Line3>,
    /// Lines `4i..4i+4` perturb the diagonals of cube `i`; line 12 is the axis.
    pub red: Vec<Line3>,
    pub certs: Vec<RedCert>,
    pub barycenter: Point3,
}

const ROTATION_TOL: (i64, i64) = (1, 1_000_000);

fn check_placements(placements: &[Placement]) -> Result<(), CubeError> {
    if placements.len() != 3 {
        return Err(CubeError::DegeneratePlacement(format!(
            "expected 3 placements, got {}",
            placements.len()
        )));
    }
    let tol = Scalar::ratio(ROTATION_TOL.0, ROTATION_TOL.1);
    for (i, p) in placements.iter().enumerate() {
        if p.orthogonality_defect() > tol {
            return Err(CubeError::DegeneratePlacement(format!(
                "placement {i} is not a near-rotation"
            )));
        }
    }
    let c: Vec<&Vec3> = placements.iter().map(|p| &p.translation).collect();
    let sides: Vec<Scalar> = (0..3).map(|i| (c[(i + 1) % 3] - c[i]).norm_sq()).collect();
    let min_side = sides.iter().min().expect("three sides");
    if *min_side < Scalar::from_int(100 * 100) {
        let approx = min_side.sqrt_upper(1000).expect("nonnegative");
        return Err(CubeError::SeparationTooSmall(approx));
    }
    if (c[1] - c[0]).cross(&(c[2] - c[0])).is_zero() {
        return Err(CubeError::DegeneratePlacement("collinear centers".into()));
    }
    // side ratios within 1e-6 of 1, compared via squares
    let lo = (Scalar::one() - &tol).square();
    let hi = (Scalar::one() + &tol).square();
    for i in 0..3 {
        for j in 0..3 {
            let r = &sides[i] / &sides[j];
            if r < lo || r > hi {
                return Err(CubeError::DegeneratePlacement(
                    "centers are not near-equilateral".into(),
                ));
            }
        }
    }
    Ok(())
}

/// Place three cubes, give each four perturbed diagonals, and add the axis
/// line through the barycenter of the centers orthogonal to their plane.
pub fn assemble_three_cubes(
    placements: &[Placement],
    eps: &Scalar,
    seed: u64,
) -> Result<MultiCubeConfig, CubeError> {
    if !eps.is_positive() || *eps >= Scalar::one() {
        return Err(CubeError::BadEps(eps.clone()));
    }
    check_placements(placements)?;
    let mut rng = rng::seeded(seed);
    let mut blue = Vec::with_capacity(9);
    let mut red = Vec::with_capacity(13);
    let mut certs = Vec::with_capacity(12);
    let dirs = diagonal_directions();
    for (i, p) in placements.iter().enumerate() {
        blue.extend(blue_lines().iter().map(|l| p.apply_line(l)));
        for (j, u) in dirs.iter().enumerate() {
            let cert = sample_perturbation(u, eps, &mut rng)?;
            red.push(p.apply_line(&cert.line()));
            certs.push(RedCert {
                cube: i,
                diagonal: j,
                cert,
            });
        }
    }
    let c: Vec<&Vec3> = placements.iter().map(|p| &p.translation).collect();
    let barycenter = (&(c[0] + c[1]) + c[2]).scale(&Scalar::ratio(1, 3));
    let normal = (c[1] - c[0]).cross(&(c[2] - c[0]));
    red.push(Line3::new(barycenter.clone(), normal).expect("non-collinear centers"));
    let all: Vec<Line3> = blue.iter().chain(red.iter()).cloned().collect();
    if let Some((a, b)) = first_non_skew_pair(&all) {
        return Err(CubeError::DegeneratePlacement(format!(
            "lines {a} and {b} are not skew"
        )));
    }
    debug_assert!(pairwise_skew(&all));
    Ok(MultiCubeConfig {
        eps: eps.clone(),
        placements: placements.to_vec(),
        blue,
        red,
        certs,
        barycenter,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// Every point outside the doubled cube of its own cube.
    Far,
    /// Every point inside the doubled cube of its own cube.
    Inside,
    /// Each point independently far or inside.
    Mixed,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NineTrial {
    pub index: u64,
    pub regime: Regime,
    /// Blue-line parameters, cube-major.
    pub params: Vec<Scalar>,
    /// Cubes none of whose three points lie in the doubled cube.
    pub far_cubes: Vec<usize>,
    /// First red line meeting the hull, if any.
    pub certifier: Option<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NineThirteenReport {
    pub trials: u64,
    pub seed: u64,
    pub regime_counts: [u64; 3],
    pub certifier_counts: Vec<u64>,
    pub failures: Vec<NineTrial>,
    pub samples: Vec<NineTrial>,
}

impl NineThirteenReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn far_param(rng: &mut Rng) -> Scalar {
    let m = rng::log_uniform(rng, 3, 10_000, 100);
    if rng::coin(rng) {
        m
    } else {
        -m
    }
}

fn inside_param(rng: &mut Rng) -> Scalar {
    rng::grid(rng, -2, 2, 1000)
}

/// Test the hull of one point per blue line against all red lines.
pub fn nine_trial(
    cfg: &MultiCubeConfig,
    index: u64,
    regime: Regime,
    params: Vec<Scalar>,
) -> NineTrial {
    let pts: Vec<Point3> = (0..9)
        .map(|k| cfg.placements[k / 3].apply(&blue_point(k % 3, &params[k])))
        .collect();
    let body = ConvexBody::polytope(pts).expect("nine points");
    let certifier = cfg.red.iter().position(|r| line_meets_body(r, &body));
    let two = Scalar::from_int(2);
    let far_cubes = (0..3)
        .filter(|&i| (0..3).all(|j| params[3 * i + j].abs() > two))
        .collect();
    NineTrial {
        index,
        regime,
        params,
        far_cubes,
        certifier,
    }
}

/// Sample `trials` nine-point hulls, cycling through the far, inside and
/// mixed regimes, and check each is met by some red line.
pub fn verify_nine_thirteen(cfg: &MultiCubeConfig, trials: u64, seed: u64) -> NineThirteenReport {
    let samples: Vec<NineTrial> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut r = rng::trial_rng(seed, i);
            let regime = [Regime::Far, Regime::Inside, Regime::Mixed][(i % 3) as usize];
            let params = (0..9)
                .map(|_| match regime {
                    Regime::Far => far_param(&mut r),
                    Regime::Inside => inside_param(&mut r),
                    Regime::Mixed => {
                        if rng::coin(&mut r) {
                            far_param(&mut r)
                        } else {
                            inside_param(&mut r)
                        }
                    }
                })
                .collect();
            nine_trial(cfg, i, regime, params)
        })
        .collect();
    let mut regime_counts = [0u64; 3];
    let mut certifier_counts = vec![0u64; cfg.red.len()];
    for s in &samples {
        regime_counts[s.regime as usize] += 1;
        if let Some(c) = s.certifier {
            certifier_counts[c] += 1;
        }
    }
    NineThirteenReport {
        trials,
        seed,
        regime_counts,
        certifier_counts,
        failures: samples
            .iter()
            .filter(|s| s.certifier.is_none())
            .cloned()
            .collect(),
        samples,
    }
}
