//! Exact planar convex hulls and point location.

use super::vec::{orient2d, Point2};

/// Convex hull of `pts` as indices into `pts`, counterclockwise, without
/// collinear points. A single point yields one index, collinear input yields
/// the two extreme points.
pub fn convex_hull_indices(pts: &[Point2]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&i, &j| (&pts[i].x, &pts[i].y).cmp(&(&pts[j].x, &pts[j].y)));
    idx.dedup_by(|a, b| pts[*a] == pts[*b]);
    if idx.len() <= 2 {
        return idx;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * idx.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(idx.iter())
        } else {
            Box::new(idx.iter().rev())
        };
        for &i in iter {
            while hull.len() >= start + 2
                && orient2d(
                    &pts[hull[hull.len() - 2]],
                    &pts[hull[hull.len() - 1]],
                    &pts[i],
                ) <= 0
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    if hull.len() == 2 && pts[hull[0]] == pts[hull[1]] {
        hull.truncate(1);
    }
    hull
}

/// Where a point sits relative to a convex hull.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HullLocation {
    Outside,
    Boundary,
    Interior,
}

/// Locate `p` relative to the hull given as counterclockwise points (as
/// returned by [`convex_hull_indices`]). Degenerate hulls have no interior.
pub fn locate_in_hull(hull: &[Point2], p: &Point2) -> HullLocation {
    match hull.len() {
        0 => HullLocation::Outside,
        1 => {
            if hull[0] == *p {
                HullLocation::Boundary
            } else {
                HullLocation::Outside
            }
        }
        2 => {
            if on_segment(&hull[0], &hull[1], p) {
                HullLocation::Boundary
            } else {
                HullLocation::Outside
            }
        }
        n => {
            let mut boundary = false;
            for i in 0..n {
                match orient2d(&hull[i], &hull[(i + 1) % n], p) {
                    s if s < 0 => return HullLocation::Outside,
                    0 => boundary = true,
                    _ => {}
                }
            }
            if boundary {
                HullLocation::Boundary
            } else {
                HullLocation::Interior
            }
        }
    }
}

/// Closed segment membership.
pub fn on_segment(a: &Point2, b: &Point2, p: &Point2) -> bool {
    if orient2d(a, b, p) != 0 {
        return false;
    }
    let ab = b - a;
    let ap = p - a;
    let t = ab.dot(&ap);
    !t.is_negative() && t <= ab.norm_sq()
}

/// Closed membership of `p` in the convex hull of `pts`.
pub fn point_in_hull(pts: &[Point2], p: &Point2) -> bool {
    let hull: Vec<Point2> = convex_hull_indices(pts)
        .into_iter()
        .map(|i| pts[i].clone())
        .collect();
    locate_in_hull(&hull, p) != HullLocation::Outside
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    #[test]
    fn hull_of_square_with_inner_and_collinear_points() {
        let pts = vec![
            p(0, 0),
            p(2, 0),
            p(1, 0),
            p(2, 2),
            p(0, 2),
            p(1, 1),
            p(0, 0),
        ];
        let h = convex_hull_indices(&pts);
        let hp: Vec<_> = h.iter().map(|&i| pts[i].clone()).collect();
        assert_eq!(hp, vec![p(0, 0), p(2, 0), p(2, 2), p(0, 2)]);
        assert_eq!(locate_in_hull(&hp, &p(1, 1)), HullLocation::Interior);
        assert_eq!(locate_in_hull(&hp, &p(1, 0)), HullLocation::Boundary);
        assert_eq!(locate_in_hull(&hp, &p(3, 1)), HullLocation::Outside);
    }

    #[test]
    fn degenerate_hulls() {
        let pts = vec![p(1, 1), p(1, 1)];
        assert_eq!(convex_hull_indices(&pts).len(), 1);
        let line = vec![p(0, 0), p(1, 1), p(3, 3), p(2, 2)];
        let h = convex_hull_indices(&line);
        assert_eq!(h.len(), 2);
        assert!(point_in_hull(&line, &p(2, 2)));
        assert!(!point_in_hull(&line, &p(4, 4)));
        assert!(!point_in_hull(&line, &p(1, 0)));
    }
}
