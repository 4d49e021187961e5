//! Instance generators and brute-force oracles shared by the integration
//! suites. The oracles deliberately avoid the library's own predicates.

#![allow(dead_code)]

use linenet_core::geometry::{line_line_dist_sq, ConvexBody, Line3, Point2, Point3, Vec2, Vec3};
use linenet_core::planar::{is_separated_triple, joint_region, ConvexRegion2, Ray2, RayTriple};
use linenet_core::rng::{self, Rng};
use linenet_core::ruling::{ell_line, lambda_line, RulingFamily};
use linenet_core::Scalar;

pub fn q(s: &str) -> Scalar {
    s.parse().unwrap()
}

pub fn grid_point(r: &mut Rng, lo: i64, hi: i64, den: i64) -> Point3 {
    Point3::new(
        rng::grid(r, lo, hi, den),
        rng::grid(r, lo, hi, den),
        rng::grid(r, lo, hi, den),
    )
}

/// A line through two distinct grid points of `[lo, hi]³`.
pub fn grid_line(r: &mut Rng, lo: i64, hi: i64, den: i64) -> Line3 {
    loop {
        let p = grid_point(r, lo, hi, den);
        let p2 = grid_point(r, lo, hi, den);
        if let Ok(l) = Line3::through(&p, &p2) {
            return l;
        }
    }
}

/// `n` distinct positive rationals in increasing order.
pub fn random_alphas(r: &mut Rng, n: usize) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::with_capacity(n);
    while out.len() < n {
        let a = rng::rational_between(r, &q("0"), &q("12"), 6);
        if !out.contains(&a) {
            out.push(a);
        }
    }
    out.sort();
    out
}

pub struct RulingInstance {
    pub fam: RulingFamily,
    pub b: Vec<usize>,
    pub r: Vec<Line3>,
}

/// Random family of size at most 12, a nonempty `B`, and `R` mixing unused
/// family rulings, fresh `λ` rulings, `ℓ` rulings and generic lines.
pub fn ruling_instance(r: &mut Rng) -> RulingInstance {
    let n = rng::int_in(r, 1, 12) as usize;
    let fam = RulingFamily::new(random_alphas(r, n)).unwrap();
    let mut b: Vec<usize> = (0..n).filter(|_| rng::coin(r)).collect();
    if b.is_empty() {
        b.push(rng::index(r, n));
    }
    let b_lines: Vec<Line3> = b.iter().map(|&i| lambda_line(&fam.alphas()[i])).collect();
    let mut lines = Vec::new();
    for i in (0..n).filter(|i| !b.contains(i)) {
        if rng::coin(r) {
            lines.push(lambda_line(&fam.alphas()[i]));
        }
    }
    for _ in 0..rng::int_in(r, 0, 4) {
        let l = match rng::int_in(r, 0, 2) {
            0 => lambda_line(&rng::rational_between(r, &q("0"), &q("12"), 6)),
            1 => ell_line(&rng::grid(r, -6, 6, 3)),
            _ => grid_line(r, -6, 6, 4),
        };
        if !b_lines.contains(&l) && !lines.contains(&l) {
            lines.push(l);
        }
    }
    RulingInstance { fam, b, r: lines }
}

/// Adversary of at most `k` lines against `fam`: each line is an unused
/// family ruling or a generic line kept at distance at least 1 from `ℓ_1`.
pub fn game_adversary(r: &mut Rng, fam: &RulingFamily, k: usize) -> Vec<Line3> {
    let lines = fam.lines();
    let ell1 = ell_line(&Scalar::one());
    let m = rng::int_in(r, 0, k as i64) as usize;
    let mut out: Vec<Line3> = Vec::with_capacity(m);
    while out.len() < m {
        let l = if rng::coin(r) {
            lines[rng::index(r, lines.len())].clone()
        } else {
            let l = grid_line(r, -4, 4, 8);
            if line_line_dist_sq(&l, &ell1) < Scalar::one() {
                continue;
            }
            l
        };
        if !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

/// Random separated triple whose joint region has an interior point, with
/// that point.
pub fn separated_triple(r: &mut Rng) -> (RayTriple, ConvexRegion2, Point2) {
    loop {
        let ray = |r: &mut Rng| loop {
            let o = Vec2::new(rng::grid(r, -4, 4, 4), rng::grid(r, -4, 4, 4));
            let d = Vec2::new(rng::grid(r, -4, 4, 1), rng::grid(r, -4, 4, 1));
            if let Ok(x) = Ray2::new(o, d) {
                break x;
            }
        };
        let t = RayTriple::new(ray(r), ray(r), ray(r));
        if !is_separated_triple(&t) {
            continue;
        }
        let Ok(region) = joint_region(&t) else {
            continue;
        };
        if let Some(x) = region.interior_point() {
            return (t, region, x);
        }
    }
}

/// Squared distance from `p` to `l`, from the cross-product formula.
pub fn point_line_dist_sq(p: &Point3, l: &Line3) -> Scalar {
    let w = (p - l.anchor()).cross(l.dir());
    w.norm_sq() / l.dir().norm_sq()
}

/// Squared distance from `l` to the segment `[a, b]` by minimising the
/// quadratic in the segment parameter over `[0, 1]`.
pub fn line_segment_dist_sq(l: &Line3, a: &Point3, b: &Point3) -> Scalar {
    let d = l.dir();
    let w = (a - l.anchor()).cross(d);
    let v = (b - a).cross(d);
    let vv = v.norm_sq();
    let dd = d.norm_sq();
    let u = if vv.is_zero() {
        Scalar::zero()
    } else {
        (-(w.dot(&v) / &vv)).max(Scalar::zero()).min(Scalar::one())
    };
    (&w + &v.scale(&u)).norm_sq() / dd
}

/// Closed line/triangle incidence by triple-product signs; `None` when the
/// triangle is degenerate or coplanar with the line.
pub fn line_hits_triangle(l: &Line3, a: &Point3, b: &Point3, c: &Point3) -> Option<bool> {
    if (b - a).cross(&(c - a)).is_zero() {
        return None;
    }
    let p = l.anchor();
    let d = l.dir();
    let s = |u: &Point3, v: &Point3| d.dot(&(u - p).cross(&(v - p))).signum();
    let signs = [s(a, b), s(b, c), s(c, a)];
    if signs.iter().all(|&x| x == 0) {
        return None;
    }
    Some(signs.iter().all(|&x| x >= 0) || signs.iter().all(|&x| x <= 0))
}

/// Brute-force squared distance from `l` to `conv(vertices)`: zero if some
/// vertex triangle is hit, otherwise the least distance to a vertex pair.
pub fn brute_line_body_dist_sq(l: &Line3, vertices: &[Point3]) -> Scalar {
    let n = vertices.len();
    if n == 1 {
        return point_line_dist_sq(&vertices[0], l);
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if line_hits_triangle(l, &vertices[i], &vertices[j], &vertices[k]) == Some(true) {
                    return Scalar::zero();
                }
            }
        }
    }
    let mut best = point_line_dist_sq(&vertices[0], l);
    for i in 0..n {
        for j in i + 1..n {
            best = best.min(line_segment_dist_sq(l, &vertices[i], &vertices[j]));
        }
    }
    best
}

pub fn random_body(r: &mut Rng, max_vertices: i64) -> ConvexBody {
    let m = rng::int_in(r, 1, max_vertices) as usize;
    ConvexBody::polytope((0..m).map(|_| grid_point(r, -3, 3, 2)).collect()).unwrap()
}

/// Convex combination of the vertices with positive integer weights.
pub fn point_in(r: &mut Rng, vertices: &[Point3]) -> Point3 {
    let w: Vec<Scalar> = vertices.iter().map(|_| rng::grid(r, 1, 9, 1)).collect();
    let total: Scalar = w.iter().sum();
    let mut p = Vec3::zero();
    for (v, wi) in vertices.iter().zip(&w) {
        p = &p + &v.scale(&(wi / &total));
    }
    p
}
