//! Vertex and edge Voronoi predicates: closest visible vertex, closest
//! boundary segment, PVor/LVor membership, and the exit of a ray through
//! the Voronoi edge between two vertices.

use super::point::{dist2_point_segment, Point};
use super::polygon::{EdgeId, Polygon, VertexId};
use super::visibility::{segment_in_polygon, GeomError};
use crate::exact::Real;

/// Closest visible vertex; ties resolved toward the lowest vertex id
/// (stable input order).
pub fn closest_visible_vertex(p: &Polygon, x: &Point) -> Result<VertexId, GeomError> {
    if !p.contains(x) {
        return Err(GeomError::PointOutside);
    }
    let mut best: Option<(VertexId, Real)> = None;
    for v in p.vertex_ids() {
        let q = p.vertex(v);
        if !segment_in_polygon(p, x, q) {
            continue;
        }
        let d = x.dist2(q);
        let better = match &best {
            None => true,
            Some((_, bd)) => d.cmp_exact(bd) == std::cmp::Ordering::Less,
        };
        if better {
            best = Some((v, d));
        }
    }
    best.map(|(v, _)| v).ok_or(GeomError::PointOutside)
}

/// Closest boundary edge; ties resolved toward the lowest edge id. The
/// closest edge is always visible, so no visibility filter is needed.
pub fn closest_boundary_segment(p: &Polygon, x: &Point) -> Result<EdgeId, GeomError> {
    if !p.contains(x) {
        return Err(GeomError::PointOutside);
    }
    let mut best: Option<(EdgeId, Real)> = None;
    for e in p.edge_ids() {
        let (a, b) = p.edge(e);
        let d = dist2_point_segment(x, a, b);
        let better = match &best {
            None => true,
            Some((_, bd)) => d.cmp_exact(bd) == std::cmp::Ordering::Less,
        };
        if better {
            best = Some((e, d));
        }
    }
    best.map(|(e, _)| e).ok_or(GeomError::PointOutside)
}

/// Polygon Voronoi region of vertex `v`: `v` is visible from `x` and at
/// least as close as every other vertex visible from `x` (boundaries of
/// the region count as inside).
pub fn pvor_contains(p: &Polygon, v: VertexId, x: &Point) -> Result<bool, GeomError> {
    if !p.contains(x) {
        return Err(GeomError::PointOutside);
    }
    let vq = p.vertex(v);
    if !segment_in_polygon(p, x, vq) {
        return Ok(false);
    }
    let dv = x.dist2(vq);
    for u in p.vertex_ids() {
        if u == v {
            continue;
        }
        let uq = p.vertex(u);
        if !segment_in_polygon(p, x, uq) {
            continue;
        }
        if x.dist2(uq).cmp_exact(&dv) == std::cmp::Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Edge Voronoi region of edge `e` among all boundary edges: `x` is at
/// least as close to `e` as to every other edge.
pub fn lvor_contains(p: &Polygon, e: EdgeId, x: &Point) -> Result<bool, GeomError> {
    if !p.contains(x) {
        return Err(GeomError::PointOutside);
    }
    let (a, b) = p.edge(e);
    let de = dist2_point_segment(x, a, b);
    for f in p.edge_ids() {
        if f == e {
            continue;
        }
        let (c, d) = p.edge(f);
        if dist2_point_segment(x, c, d).cmp_exact(&de) == std::cmp::Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Where the ray from `v` through `x` first leaves the Voronoi cell of `v`
/// within the given set of (visible) vertices: the neighbor whose bisector
/// is hit first, and the hit point. `None` when no bisector is crossed at a
/// positive parameter or the hit is not interior to the Voronoi edge.
pub fn voronoi_edge_hit(
    v: &Point,
    x: &Point,
    visible: &[Point],
) -> Option<(usize, Point)> {
    let dir = x.sub(v);
    if dir.norm2().is_zero() {
        return None;
    }
    // Crossing parameter with the bisector of (v, u): |v + t dir - v|^2 =
    // |v + t dir - u|^2 => 2 t dir.(u - v) = |u - v|^2.
    let mut best: Option<(usize, Real)> = None;
    for (i, u) in visible.iter().enumerate() {
        if u == v {
            continue;
        }
        let uv = u.sub(v);
        let den = dir.dot(&uv).add(&dir.dot(&uv));
        if !den.is_positive() {
            continue; // ray parallel to or moving away from the bisector
        }
        let t = uv.norm2().div(&den).expect("den > 0");
        let better = match &best {
            None => true,
            Some((_, bt)) => t.cmp_exact(bt) == std::cmp::Ordering::Less,
        };
        if better {
            best = Some((i, t));
        }
    }
    let (i, t) = best?;
    let hit = v.add(&x.sub(v).scale(&t));
    // Interior of the Voronoi edge: every other vertex strictly farther.
    let d = hit.dist2(v);
    for (j, u) in visible.iter().enumerate() {
        if j == i || u == v {
            continue;
        }
        if hit.dist2(u).cmp_exact(&d) != std::cmp::Ordering::Greater {
            return None;
        }
    }
    Some((i, hit))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polygon {
        Polygon::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4)], &[]).unwrap()
    }

    #[test]
    fn closest_vertex_examples() {
        let p = square();
        let v = closest_visible_vertex(&p, &Point::from_ints(1, 1)).unwrap();
        assert_eq!(p.vertex(v), &Point::from_ints(0, 0));
        // Tie between (0,0) and (0,4): lowest id wins.
        let v = closest_visible_vertex(&p, &Point::from_ints(1, 2)).unwrap();
        assert_eq!(p.vertex(v), &Point::from_ints(0, 0));
    }

    #[test]
    fn closest_segment_example() {
        let p = square();
        let e = closest_boundary_segment(&p, &Point::from_ints(2, 1)).unwrap();
        let (a, b) = p.edge(e);
        assert_eq!((a, b), (&Point::from_ints(0, 0), &Point::from_ints(4, 0)));
    }

    #[test]
    fn pvor_and_lvor_examples() {
        let p = square();
        let v00 = p.vertex_at(&Point::from_ints(0, 0)).unwrap();
        assert!(pvor_contains(&p, v00, &Point::from_ints(1, 1)).unwrap());
        let bottom = closest_boundary_segment(&p, &Point::from_ints(2, 1)).unwrap();
        assert!(lvor_contains(&p, bottom, &Point::from_ints(2, 1)).unwrap());
        assert!(!lvor_contains(&p, bottom, &Point::from_ints(2, 3)).unwrap());
    }

    #[test]
    fn pvor_in_hole_polygon_prefers_hole_edge() {
        let p = Polygon::from_ints(
            &[(0, 0), (10, 0), (10, 10), (0, 10)],
            &[&[(4, 4), (4, 6), (6, 6), (6, 4)]],
        )
        .unwrap();
        // Next to the hole: closest segment is a hole edge, not the outer.
        let x = Point::from_fractions((7, 2), (5, 1));
        let e = closest_boundary_segment(&p, &x).unwrap();
        assert_eq!(e.ring, 1);
        assert!(lvor_contains(&p, e, &x).unwrap());
    }

    #[test]
    fn voronoi_hit_examples() {
        // Square corner (0,0) with x = (1, 1/2): ray hits the bisector with
        // (4,0) at (2,1).
        let p = square();
        let visible: Vec<Point> = p.vertex_ids().map(|v| p.vertex(v).clone()).collect();
        let v = Point::from_ints(0, 0);
        let x = Point::from_fractions((1, 1), (1, 2));
        let (i, hit) = voronoi_edge_hit(&v, &x, &visible).unwrap();
        assert_eq!(visible[i], Point::from_ints(4, 0));
        assert_eq!(hit, Point::from_ints(2, 1));

        // Steeper ray exits through the bisector with (0,4) instead.
        let x = Point::from_fractions((1, 2), (1, 1));
        let (i, hit) = voronoi_edge_hit(&v, &x, &visible).unwrap();
        assert_eq!(visible[i], Point::from_ints(0, 4));
        assert_eq!(hit, Point::from_ints(1, 2));
    }
}
