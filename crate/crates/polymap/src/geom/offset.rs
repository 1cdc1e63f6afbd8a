//! Inward parallel offsets of boundary components: the second tour's
//! containment guide.

use super::point::Point;
use super::polygon::{segments_properly_cross, segments_touch, Polygon};
use crate::exact::Real;

/// Polyline parallel to the ring at separation `d` on the interior side
/// (the left of the ring's travel direction). Returns one offset vertex per
/// ring vertex; `None` when an offset corner cannot be solved (parallel
/// consecutive edges are excluded by polygon validation).
pub fn offset_polyline(ring: &[Point], d: &Real) -> Vec<Point> {
    let n = ring.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let prev = &ring[(i + n - 1) % n];
        let cur = &ring[i];
        let next = &ring[(i + 1) % n];
        // Offset lines of the two incident edges; the new vertex is their
        // intersection. Line for edge (a, E): cross(E, w - a) = d |E|, i.e.
        // -E.y w.x + E.x w.y = d|E| + cross(E, a).
        let e1 = cur.sub(prev);
        let e2 = next.sub(cur);
        let r1 = d.mul(&e1.norm2().sqrt().expect("edge length")).add(&e1.cross(prev));
        let r2 = d.mul(&e2.norm2().sqrt().expect("edge length")).add(&e2.cross(cur));
        // Cramer on [[-e1.y, e1.x], [-e2.y, e2.x]]; the determinant is
        // cross(e1, e2), nonzero because consecutive edges are never
        // collinear.
        let det = e1.cross(&e2);
        let wx = r1.mul(&e2.x).sub(&r2.mul(&e1.x)).div(&det).expect("non-collinear corner");
        let wy = r1.mul(&e2.y).sub(&r2.mul(&e1.y)).div(&det).expect("non-collinear corner");
        out.push(Point::new(wx, wy));
    }
    out
}

/// Validity of an offset approximation: simple, disjoint from the polygon
/// boundary, not flipped, and disjoint from all previously accepted
/// approximations.
pub fn offset_valid(p: &Polygon, ring: &[Point], offset: &[Point], priors: &[Vec<Point>]) -> bool {
    let n = offset.len();
    if n < 3 {
        return false;
    }
    // Edge flips: each offset edge must keep its source edge's direction.
    for i in 0..n {
        let src = ring[(i + 1) % n].sub(&ring[i]);
        let dst = offset[(i + 1) % n].sub(&offset[i]);
        if !src.dot(&dst).is_positive() {
            return false;
        }
    }
    // Simplicity.
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let (a1, b1) = (&offset[i], &offset[(i + 1) % n]);
            let (a2, b2) = (&offset[j], &offset[(j + 1) % n]);
            if adjacent {
                if segments_properly_cross(a1, b1, a2, b2) {
                    return false;
                }
            } else if segments_touch(a1, b1, a2, b2) {
                return false;
            }
        }
    }
    // Disjoint from the boundary.
    for i in 0..n {
        let (a, b) = (&offset[i], &offset[(i + 1) % n]);
        for e in p.edge_ids() {
            let (c, d) = p.edge(e);
            if segments_touch(a, b, c, d) {
                return false;
            }
        }
    }
    // Disjoint from prior approximations.
    for prior in priors {
        let m = prior.len();
        for i in 0..n {
            for j in 0..m {
                if segments_touch(
                    &offset[i],
                    &offset[(i + 1) % n],
                    &prior[j],
                    &prior[(j + 1) % m],
                ) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn square_offsets() {
        let p = Polygon::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4)], &[]).unwrap();
        let ring = p.rings()[0].clone();
        let off = offset_polyline(&ring, &Real::one());
        assert_eq!(
            off,
            vec![
                Point::from_ints(1, 1),
                Point::from_ints(3, 1),
                Point::from_ints(3, 3),
                Point::from_ints(1, 3),
            ]
        );
        assert!(offset_valid(&p, &ring, &off, &[]));

        // d = 2 collapses the square to its center.
        let collapsed = offset_polyline(&ring, &Real::from_int(2));
        assert!(!offset_valid(&p, &ring, &collapsed, &[]));
    }

    #[test]
    fn hole_offset_expands_into_interior() {
        let p = Polygon::from_ints(
            &[(0, 0), (10, 0), (10, 10), (0, 10)],
            &[&[(4, 4), (4, 6), (6, 6), (6, 4)]],
        )
        .unwrap();
        let hole = p.rings()[1].clone();
        let off = offset_polyline(&hole, &Real::from_rational(rat(1, 2)));
        // The hole's interior-left offset grows outward into the polygon.
        assert_eq!(
            off,
            vec![
                Point::from_fractions((7, 2), (7, 2)),
                Point::from_fractions((7, 2), (13, 2)),
                Point::from_fractions((13, 2), (13, 2)),
                Point::from_fractions((13, 2), (7, 2)),
            ]
        );
        let outer_off = offset_polyline(&p.rings()[0].clone(), &Real::from_rational(rat(1, 2)));
        assert!(offset_valid(&p, &hole, &off, &[outer_off]));
    }

    #[test]
    fn offsets_nest() {
        let p = Polygon::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4)], &[]).unwrap();
        let ring = p.rings()[0].clone();
        let d = Real::one();
        let half = Real::from_rational(rat(1, 2));
        let far = offset_polyline(&ring, &d);
        let near = offset_polyline(&ring, &half);
        // near lies strictly between the ring and far: each near-vertex is
        // inside the ring and outside the far polyline.
        for q in &near {
            assert!(super::super::polygon::point_in_ring_pub(q, &ring));
            assert!(!super::super::polygon::point_in_ring_pub(q, &far));
        }
    }
}
