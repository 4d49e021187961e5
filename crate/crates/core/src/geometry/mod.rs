//! Exact 3D primitives: lines, planes, planar convex polygons, convex bodies
//! and the incidence/distance predicates the rest of the crate relies on.

mod hull2;
mod line;
mod polytope;
mod vec;

pub use hull2::{convex_hull_indices, locate_in_hull, on_segment, point_in_hull, HullLocation};
pub use line::{
    first_non_skew_pair, is_skew, line_line_dist_sq, line_plane_intersection, pairwise_skew,
    perp_basis, perturb_line, Line3, LinePlane, Plane3,
};
pub use polytope::{
    affine_dim, line_body_distance_sq, line_intersects_polygon, line_meets_body,
    line_meets_interior, line_meets_polygon_interior, origin_segment_dist_sq, point_in_body,
    point_in_polytope, point_polytope_dist_sq, point_triangle_dist_sq, ConvexBody, ConvexPolygon3,
};
pub use vec::{det3, orient2d, Point2, Point3, Vec2, Vec3};

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("line direction is the zero vector")]
    ZeroDirection,
    #[error("plane normal is the zero vector")]
    ZeroNormal,
    #[error("vertex list is empty")]
    EmptyVertexList,
    #[error("polygon vertices are not coplanar")]
    NotCoplanar,
    #[error("polygon vertices are not in strictly convex cyclic order")]
    NotConvex,
    #[error("negative inflation radius {0}")]
    NegativeInflation(Scalar),
    #[error("jitter component {value} exceeds bound {bound}")]
    JitterOutOfBounds {
        value: Box<Scalar>,
        bound: Box<Scalar>,
    },
}
