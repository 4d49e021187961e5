//! Planar convex polygons and convex polytopes in R^3, with the exact
//! line-incidence and distance predicates built on them.

use serde::{Deserialize, Deserializer, Serialize};

use super::hull2::{convex_hull_indices, locate_in_hull, HullLocation};
use super::line::{perp_basis, Line3};
use super::vec::{det3, Point2, Point3, Vec3};
use super::GeometryError;
use crate::scalar::Scalar;

/// A convex polygon in R^3 with vertices in cyclic order.
///
/// One vertex (a point) and two vertices (a segment) are legal.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ConvexPolygon3 {
    vertices: Vec<Point3>,
}

impl ConvexPolygon3 {
    /// Validates coplanarity and strict convex position in the given order.
    pub fn new(vertices: Vec<Point3>) -> Result<Self, GeometryError> {
        match vertices.len() {
            0 => return Err(GeometryError::EmptyVertexList),
            1 => {}
            2 => {
                if vertices[0] == vertices[1] {
                    return Err(GeometryError::NotConvex);
                }
            }
            n => {
                let normal = polygon_normal(&vertices).ok_or(GeometryError::NotConvex)?;
                for v in &vertices[3..] {
                    if !det3(
                        &(&vertices[1] - &vertices[0]),
                        &(&vertices[2] - &vertices[0]),
                        &(v - &vertices[0]),
                    )
                    .is_zero()
                    {
                        return Err(GeometryError::NotCoplanar);
                    }
                }
                // every other vertex strictly left of every directed edge
                for i in 0..n {
                    let a = &vertices[i];
                    let e = &vertices[(i + 1) % n] - a;
                    for (k, v) in vertices.iter().enumerate() {
                        if k == i || k == (i + 1) % n {
                            continue;
                        }
                        if !e.cross(&(v - a)).dot(&normal).is_positive() {
                            return Err(GeometryError::NotConvex);
                        }
                    }
                }
            }
        }
        Ok(ConvexPolygon3 { vertices })
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    /// Normal of the supporting plane, oriented so the vertices run
    /// counterclockwise around it; `None` for points and segments.
    pub fn normal(&self) -> Option<Vec3> {
        if self.vertices.len() < 3 {
            None
        } else {
            polygon_normal(&self.vertices)
        }
    }

    pub fn to_body(&self) -> ConvexBody {
        ConvexBody::new(self.vertices.clone(), Scalar::zero()).expect("nonempty polygon")
    }
}

fn polygon_normal(vs: &[Point3]) -> Option<Vec3> {
    let a = &vs[0];
    for i in 1..vs.len() {
        for j in i + 1..vs.len() {
            let n = (&vs[i] - a).cross(&(&vs[j] - a));
            if !n.is_zero() {
                return Some(n);
            }
        }
    }
    None
}

impl<'de> Deserialize<'de> for ConvexPolygon3 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: Vec<Point3>,
        }
        let raw = Raw::deserialize(deserializer)?;
        ConvexPolygon3::new(raw.vertices).map_err(serde::de::Error::custom)
    }
}

/// `conv(vertices)` Minkowski-summed with a closed ball of radius `inflation`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ConvexBody {
    vertices: Vec<Point3>,
    inflation: Scalar,
}

impl ConvexBody {
    pub fn new(vertices: Vec<Point3>, inflation: Scalar) -> Result<Self, GeometryError> {
        if vertices.is_empty() {
            return Err(GeometryError::EmptyVertexList);
        }
        if inflation.is_negative() {
            return Err(GeometryError::NegativeInflation(inflation));
        }
        Ok(ConvexBody {
            vertices,
            inflation,
        })
    }

    pub fn polytope(vertices: Vec<Point3>) -> Result<Self, GeometryError> {
        ConvexBody::new(vertices, Scalar::zero())
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn inflation(&self) -> &Scalar {
        &self.inflation
    }

    pub fn with_inflation(&self, inflation: Scalar) -> Result<Self, GeometryError> {
        ConvexBody::new(self.vertices.clone(), inflation)
    }

    /// Dimension of the affine hull of the vertices (0..=3).
    pub fn affine_dim(&self) -> usize {
        affine_dim(&self.vertices)
    }
}

impl<'de> Deserialize<'de> for ConvexBody {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: Vec<Point3>,
            #[serde(default)]
            inflation: Scalar,
        }
        let raw = Raw::deserialize(deserializer)?;
        ConvexBody::new(raw.vertices, raw.inflation).map_err(serde::de::Error::custom)
    }
}

pub fn affine_dim(vs: &[Point3]) -> usize {
    let Some(a) = vs.first() else { return 0 };
    let diffs: Vec<Vec3> = vs
        .iter()
        .skip(1)
        .map(|v| v - a)
        .filter(|d| !d.is_zero())
        .collect();
    let Some(d0) = diffs.first() else { return 0 };
    let Some(n) = diffs.iter().map(|d| d0.cross(d)).find(|c| !c.is_zero()) else {
        return 1;
    };
    if diffs.iter().any(|d| !n.dot(d).is_zero()) {
        3
    } else {
        2
    }
}

/// True iff `l` meets the (closed) convex polygon.
///
/// A transversal line reduces to point-in-polygon at the piercing point; a
/// line in the polygon's plane reduces to a side-of-line test.
pub fn line_intersects_polygon(l: &Line3, poly: &ConvexPolygon3) -> bool {
    let vs = poly.vertices();
    match vs.len() {
        1 => l.contains(&vs[0]),
        2 => line_meets_segment(l, &vs[0], &vs[1]),
        _ => {
            let normal = poly.normal().expect("validated polygon");
            let a = l.anchor();
            let d = l.dir();
            let nd = normal.dot(d);
            let f = normal.dot(&(a - &vs[0]));
            if !nd.is_zero() {
                let x = l.point_at(&-(f / nd));
                let n = vs.len();
                (0..n).all(|i| {
                    let e = &vs[(i + 1) % n] - &vs[i];
                    !e.cross(&(&x - &vs[i])).dot(&normal).is_negative()
                })
            } else if f.is_zero() {
                let side = |v: &Point3| (v - a).cross(d).dot(&normal).signum();
                let signs: Vec<i32> = vs.iter().map(side).collect();
                !(signs.iter().all(|&s| s > 0) || signs.iter().all(|&s| s < 0))
            } else {
                false
            }
        }
    }
}

/// True iff `l` meets the relative interior of a polygon with at least three
/// vertices. Points and segments have empty two-dimensional interior.
pub fn line_meets_polygon_interior(l: &Line3, poly: &ConvexPolygon3) -> bool {
    let vs = poly.vertices();
    let Some(normal) = poly.normal() else {
        return false;
    };
    let a = l.anchor();
    let d = l.dir();
    let nd = normal.dot(d);
    let f = normal.dot(&(a - &vs[0]));
    if !nd.is_zero() {
        let x = l.point_at(&-(f / nd));
        let n = vs.len();
        (0..n).all(|i| {
            let e = &vs[(i + 1) % n] - &vs[i];
            e.cross(&(&x - &vs[i])).dot(&normal).is_positive()
        })
    } else if f.is_zero() {
        let signs: Vec<i32> = vs
            .iter()
            .map(|v| (v - a).cross(d).dot(&normal).signum())
            .collect();
        signs.iter().any(|&s| s > 0) && signs.iter().any(|&s| s < 0)
    } else {
        false
    }
}

fn line_meets_segment(l: &Line3, p: &Point3, q: &Point3) -> bool {
    let e = q - p;
    let d = l.dir();
    let n = d.cross(&e);
    let w = p - l.anchor();
    if n.is_zero() {
        return l.contains(p);
    }
    if !w.dot(&n).is_zero() {
        return false;
    }
    // coplanar: p and q must not be strictly on the same side of l
    let sp = w.cross(d).dot(&n).signum();
    let sq = (q - l.anchor()).cross(d).dot(&n).signum();
    sp * sq <= 0
}

/// The vertices of a body seen along `l`: for each vertex `v`, the component
/// of `v - anchor` orthogonal to the line, together with rational plane
/// coordinates of that component.
struct ProjectedBody {
    perp: Vec<Vec3>,
    hull: Vec<usize>,
    planar: Vec<Point2>,
}

impl ProjectedBody {
    fn new(l: &Line3, vertices: &[Point3]) -> Self {
        let d = l.dir();
        let (e1, e2) = perp_basis(d);
        let rel: Vec<Vec3> = vertices.iter().map(|v| v - l.anchor()).collect();
        let planar: Vec<Point2> = rel
            .iter()
            .map(|w| Point2::new(w.dot(&e1), w.dot(&e2)))
            .collect();
        let hull = convex_hull_indices(&planar);
        let perp = rel.iter().map(|w| w.reject(d)).collect();
        ProjectedBody { perp, hull, planar }
    }

    fn locate_line(&self) -> HullLocation {
        let hull: Vec<Point2> = self.hull.iter().map(|&i| self.planar[i].clone()).collect();
        locate_in_hull(&hull, &Point2::zero())
    }
}

/// Squared distance from the origin to the segment `[p, q]`.
pub fn origin_segment_dist_sq(p: &Vec3, q: &Vec3) -> Scalar {
    let e = q - p;
    let ee = e.norm_sq();
    if ee.is_zero() {
        return p.norm_sq();
    }
    let t = -(p.dot(&e) / &ee);
    if !t.is_positive() {
        p.norm_sq()
    } else if t >= Scalar::one() {
        q.norm_sq()
    } else {
        (p + &e.scale(&t)).norm_sq()
    }
}

/// Exact squared distance between `l` and `conv(vertices)`, ignoring any
/// inflation radius.
///
/// Looking along the line, the body becomes a planar polygon and the line a
/// point. The distance is zero if that point lies in the polygon (a face of
/// the body is hit); otherwise it is attained at a vertex or on an edge of the
/// projected outline, and each candidate is evaluated in the true metric.
pub fn line_body_distance_sq(l: &Line3, body: &ConvexBody) -> Scalar {
    let proj = ProjectedBody::new(l, body.vertices());
    if proj.locate_line() != HullLocation::Outside {
        return Scalar::zero();
    }
    let h = &proj.hull;
    let mut best = proj.perp[h[0]].norm_sq();
    for i in 0..h.len() {
        let p = &proj.perp[h[i]];
        let q = &proj.perp[h[(i + 1) % h.len()]];
        let d = origin_segment_dist_sq(p, q);
        if d < best {
            best = d;
        }
    }
    best
}

/// Closed incidence with the inflated body.
pub fn line_meets_body(l: &Line3, body: &ConvexBody) -> bool {
    if body.inflation().is_zero() {
        return ProjectedBody::new(l, body.vertices()).locate_line() != HullLocation::Outside;
    }
    let r2 = body.inflation().square();
    some_vertex_within(l, body, |d| d <= &r2) || line_body_distance_sq(l, body) <= r2
}

/// Incidence with the interior of the inflated body. With zero inflation only
/// full-dimensional polytopes have interior.
pub fn line_meets_interior(l: &Line3, body: &ConvexBody) -> bool {
    if body.inflation().is_zero() {
        if body.affine_dim() < 3 {
            return false;
        }
        return ProjectedBody::new(l, body.vertices()).locate_line() == HullLocation::Interior;
    }
    let r2 = body.inflation().square();
    some_vertex_within(l, body, |d| d < &r2) || line_body_distance_sq(l, body) < r2
}

// The body distance never exceeds a vertex distance, so a close vertex
// settles the inflated predicates without building the projection.
fn some_vertex_within(l: &Line3, body: &ConvexBody, close: impl Fn(&Scalar) -> bool) -> bool {
    body.vertices().iter().any(|v| close(&l.point_dist_sq(v)))
}

/// Closed membership of `p` in `conv(vertices)`.
///
/// Enumerates affinely independent vertex subsets of the hull's dimension
/// (Carathéodory) and tests barycentric coordinates exactly.
pub fn point_in_polytope(p: &Point3, vertices: &[Point3]) -> bool {
    let dim = affine_dim(vertices);
    let n = vertices.len();
    match dim {
        0 => vertices.first() == Some(p),
        1 => {
            // extreme points along the common direction
            let a = &vertices[0];
            let Some(d) = vertices.iter().map(|v| v - a).find(|w| !w.is_zero()) else {
                return false;
            };
            if !(p - a).cross(&d).is_zero() {
                return false;
            }
            let t = |v: &Point3| (v - a).dot(&d);
            let tp = t(p);
            let lo = vertices.iter().map(t).min().unwrap();
            let hi = vertices.iter().map(t).max().unwrap();
            lo <= tp && tp <= hi
        }
        2 => {
            let normal = polygon_normal(vertices).unwrap();
            if !normal.dot(&(p - &vertices[0])).is_zero() {
                return false;
            }
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        if point_in_triangle_coplanar(
                            p,
                            &vertices[i],
                            &vertices[j],
                            &vertices[k],
                            &normal,
                        ) {
                            return true;
                        }
                    }
                }
            }
            false
        }
        _ => {
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        for m in k + 1..n {
                            if point_in_tetra(
                                p,
                                [&vertices[i], &vertices[j], &vertices[k], &vertices[m]],
                            ) {
                                return true;
                            }
                        }
                    }
                }
            }
            false
        }
    }
}

/// Squared distance from `p` to the closed triangle `abc`, which may be
/// degenerate.
pub fn point_triangle_dist_sq(p: &Point3, a: &Point3, b: &Point3, c: &Point3) -> Scalar {
    let edges = [(a, b), (b, c), (c, a)].map(|(u, v)| origin_segment_dist_sq(&(u - p), &(v - p)));
    let edge_best = edges.into_iter().min().expect("three edges");
    let n = (b - a).cross(&(c - a));
    let nn = n.norm_sq();
    if nn.is_zero() {
        return edge_best;
    }
    let h = n.dot(&(p - a));
    let foot = p - &n.scale(&(&h / &nn));
    if point_in_triangle_coplanar(&foot, a, b, c, &n) {
        h.square() / nn
    } else {
        edge_best
    }
}

/// Exact squared distance from `p` to `conv(vertices)`.
///
/// Outside the hull the nearest point lies on a boundary face, and every face
/// is covered by triangles on the vertices, so minimising over all vertex
/// triples is exact. Cubic in the vertex count.
pub fn point_polytope_dist_sq(p: &Point3, vertices: &[Point3]) -> Scalar {
    if point_in_polytope(p, vertices) {
        return Scalar::zero();
    }
    let n = vertices.len();
    let mut best = vertices
        .iter()
        .map(|v| (v - p).norm_sq())
        .min()
        .expect("nonempty body");
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let d = point_triangle_dist_sq(p, &vertices[i], &vertices[j], &vertices[k]);
                if d < best {
                    best = d;
                }
            }
            let d = origin_segment_dist_sq(&(&vertices[i] - p), &(&vertices[j] - p));
            if d < best {
                best = d;
            }
        }
    }
    best
}

/// Closed membership in the inflated body.
pub fn point_in_body(p: &Point3, body: &ConvexBody) -> bool {
    if body.inflation().is_zero() {
        return point_in_polytope(p, body.vertices());
    }
    point_polytope_dist_sq(p, body.vertices()) <= body.inflation().square()
}

fn point_in_triangle_coplanar(
    p: &Point3,
    a: &Point3,
    b: &Point3,
    c: &Point3,
    normal: &Vec3,
) -> bool {
    let orient = |u: &Point3, v: &Point3| (v - u).cross(&(p - u)).dot(normal).signum();
    let area = (b - a).cross(&(c - a)).dot(normal).signum();
    if area == 0 {
        return false;
    }
    let s = [orient(a, b), orient(b, c), orient(c, a)];
    s.iter().all(|&x| x * area >= 0)
}

fn point_in_tetra(p: &Point3, t: [&Point3; 4]) -> bool {
    let [a, b, c, d] = t;
    let (ab, ac, ad) = (b - a, c - a, d - a);
    let vol = det3(&ab, &ac, &ad);
    if vol.is_zero() {
        return false;
    }
    let ap = p - a;
    let l1 = det3(&ap, &ac, &ad);
    let l2 = det3(&ab, &ap, &ad);
    let l3 = det3(&ab, &ac, &ap);
    let l0 = &vol - &l1 - &l2 - &l3;
    let s = vol.signum();
    [l0, l1, l2, l3].iter().all(|x| x.signum() * s >= 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    fn v(x: &str, y: &str, z: &str) -> Vec3 {
        Vec3::new(q(x), q(y), q(z))
    }

    fn line(a: Vec3, d: Vec3) -> Line3 {
        Line3::new(a, d).unwrap()
    }

    fn witness_segment() -> ConvexPolygon3 {
        ConvexPolygon3::new(vec![v("1", "4/3", "4/3"), v("2", "7/6", "7/3")]).unwrap()
    }

    fn tetra() -> ConvexBody {
        ConvexBody::polytope(vec![
            Vec3::from_ints(0, 0, 0),
            Vec3::from_ints(1, 0, 0),
            Vec3::from_ints(0, 1, 0),
            Vec3::from_ints(0, 0, 1),
        ])
        .unwrap()
    }

    #[test]
    fn polygon_validation() {
        assert!(ConvexPolygon3::new(vec![]).is_err());
        let square = vec![
            Vec3::from_ints(0, 0, 0),
            Vec3::from_ints(1, 0, 0),
            Vec3::from_ints(1, 1, 0),
            Vec3::from_ints(0, 1, 0),
        ];
        assert!(ConvexPolygon3::new(square.clone()).is_ok());
        let mut bowtie = square.clone();
        bowtie.swap(2, 3);
        assert_eq!(ConvexPolygon3::new(bowtie), Err(GeometryError::NotConvex));
        let mut bent = square;
        bent[2] = Vec3::from_ints(1, 1, 1);
        assert_eq!(ConvexPolygon3::new(bent), Err(GeometryError::NotCoplanar));
    }

    #[test]
    fn polygon_incidence_examples() {
        let lambda2 = line(Vec3::from_ints(2, 0, 0), Vec3::from_ints(0, 1, 2));
        let ell0 = line(Vec3::zero(), Vec3::from_ints(1, 0, 0));
        assert!(line_intersects_polygon(&lambda2, &witness_segment()));
        assert!(!line_intersects_polygon(&ell0, &witness_segment()));

        let tri = ConvexPolygon3::new(vec![
            Vec3::from_ints(0, 0, 0),
            Vec3::from_ints(2, 0, 0),
            Vec3::from_ints(0, 2, 0),
        ])
        .unwrap();
        let through_vertex = line(Vec3::from_ints(2, 0, 0), Vec3::from_ints(0, 0, 1));
        assert!(line_intersects_polygon(&through_vertex, &tri));
        assert!(!line_meets_polygon_interior(&through_vertex, &tri));
        let through_middle = line(v("1/2", "1/2", "0"), Vec3::from_ints(1, 1, 1));
        assert!(line_meets_polygon_interior(&through_middle, &tri));
        // coplanar cases
        let along_edge = line(Vec3::zero(), Vec3::from_ints(1, 0, 0));
        assert!(line_intersects_polygon(&along_edge, &tri));
        assert!(!line_meets_polygon_interior(&along_edge, &tri));
        let across = line(v("1/2", "0", "0"), Vec3::from_ints(0, 1, 0));
        assert!(line_meets_polygon_interior(&across, &tri));
        let beside = line(Vec3::from_ints(0, 3, 0), Vec3::from_ints(1, -1, 0));
        assert!(!line_intersects_polygon(&beside, &tri));
        let above = line(Vec3::from_ints(0, 0, 1), Vec3::from_ints(1, 0, 0));
        assert!(!line_intersects_polygon(&above, &tri));
    }

    #[test]
    fn body_distance_examples() {
        let x_axis = line(Vec3::zero(), Vec3::from_ints(1, 0, 0));
        let pt = ConvexBody::polytope(vec![Vec3::from_ints(0, 0, 1)]).unwrap();
        assert_eq!(line_body_distance_sq(&x_axis, &pt), Scalar::one());

        let lambda1 = line(Vec3::from_ints(1, 0, 0), Vec3::from_ints(0, 1, 1));
        let p1 = ConvexBody::polytope(vec![v("1", "4/3", "4/3")]).unwrap();
        assert_eq!(line_body_distance_sq(&lambda1, &p1), Scalar::zero());

        // segment vs x-axis: minimize (y^2 + z^2) along the segment
        // y = 4/3 - u/6, z = 4/3 + u, u in [0,1]; minimum at u = 0 -> 32/9
        let seg = witness_segment().to_body();
        assert_eq!(line_body_distance_sq(&x_axis, &seg), q("32/9"));
        let inflated = seg.with_inflation(Scalar::from_int(2)).unwrap();
        assert!(line_meets_body(&x_axis, &inflated));
        assert!(!line_meets_body(&x_axis, &seg));
    }

    #[test]
    fn tetra_incidence_examples() {
        let diag = line(Vec3::zero(), Vec3::from_ints(1, 1, 1));
        assert!(line_meets_body(&diag, &tetra()));
        assert!(line_meets_interior(&diag, &tetra()));
        let high = line(Vec3::from_ints(0, 0, 2), Vec3::from_ints(1, 1, 0));
        assert!(!line_meets_body(&high, &tetra()));
        assert!(line_body_distance_sq(&high, &tetra()).is_positive());
        // along an edge: meets, but not the interior
        let edge = line(Vec3::zero(), Vec3::from_ints(1, 0, 0));
        assert!(line_meets_body(&edge, &tetra()));
        assert!(!line_meets_interior(&edge, &tetra()));
        // a flat body has no interior without inflation
        let flat = witness_segment().to_body();
        let lambda2 = line(Vec3::from_ints(2, 0, 0), Vec3::from_ints(0, 1, 2));
        assert!(line_meets_body(&lambda2, &flat));
        assert!(!line_meets_interior(&lambda2, &flat));
        assert!(line_meets_interior(
            &lambda2,
            &flat.with_inflation(q("1/1000")).unwrap()
        ));
    }

    #[test]
    fn point_in_polytope_all_dimensions() {
        let t = tetra();
        assert!(point_in_polytope(&v("1/4", "1/4", "1/4"), t.vertices()));
        assert!(point_in_polytope(&v("1/2", "1/2", "0"), t.vertices()));
        assert!(!point_in_polytope(&v("1/2", "1/2", "1/2"), t.vertices()));
        let seg = witness_segment();
        assert!(point_in_polytope(&v("3/2", "5/4", "11/6"), seg.vertices()));
        assert!(!point_in_polytope(&v("3", "1", "10/3"), seg.vertices()));
        let tri = [
            Vec3::from_ints(0, 0, 0),
            Vec3::from_ints(2, 0, 0),
            Vec3::from_ints(0, 2, 0),
        ];
        assert!(point_in_polytope(&Vec3::from_ints(1, 1, 0), &tri));
        assert!(!point_in_polytope(&v("1", "1", "1/10"), &tri));
        assert!(point_in_polytope(&Vec3::from_ints(0, 0, 0), &tri[..1]));
    }

    #[test]
    fn affine_dims() {
        assert_eq!(affine_dim(&[Vec3::zero(), Vec3::zero()]), 0);
        assert_eq!(affine_dim(witness_segment().vertices()), 1);
        assert_eq!(affine_dim(tetra().vertices()), 3);
        assert_eq!(affine_dim(&tetra().vertices()[..3]), 2);
    }

    #[test]
    fn point_distances() {
        let t = tetra();
        assert!(point_polytope_dist_sq(&v("1/4", "1/4", "1/4"), t.vertices()).is_zero());
        assert_eq!(
            point_polytope_dist_sq(&Vec3::from_ints(0, 0, -2), t.vertices()),
            q("4")
        );
        assert_eq!(
            point_polytope_dist_sq(&Vec3::from_ints(-1, -1, 0), t.vertices()),
            q("2")
        );
        // nearest point interior to the slanted face x+y+z=1
        assert_eq!(
            point_polytope_dist_sq(&Vec3::from_ints(1, 1, 1), t.vertices()),
            q("4/3")
        );
        let ball = t.with_inflation(q("2")).unwrap();
        assert!(point_in_body(&Vec3::from_ints(0, 0, -2), &ball));
        assert!(!point_in_body(&Vec3::from_ints(0, 0, -3), &ball));
        assert!(!point_in_body(&Vec3::from_ints(0, 0, -2), &t));
    }
}
