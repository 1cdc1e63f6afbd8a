//! Snapshots: everything the robot can see from a point, as a value.
//!
//! A snapshot lists the visible vertices and the maximal visible
//! sub-segments of the boundary, endpoints classified as true vertices or
//! occlusion-induced (`undefined`) points. The robot's Compute function
//! receives nothing else.

use super::point::Point;
use super::polygon::{EdgeId, Polygon};
use super::visibility::{segment_in_polygon, visible_portion, GeomError};
use crate::exact::Real;

#[derive(Clone, Debug)]
pub struct VisibleSegment {
    pub a: Point,
    pub b: Point,
    /// True when the endpoint is a polygon vertex; occlusion endpoints are
    /// the paper's `undefined` points.
    pub a_is_vertex: bool,
    pub b_is_vertex: bool,
    /// World-side bookkeeping for audits and rendering.
    pub edge: EdgeId,
}

#[derive(Clone, Debug)]
pub struct Snapshot {
    pub observer: Point,
    /// Exact positions of all visible polygon vertices (anonymous).
    pub vertices: Vec<Point>,
    pub segments: Vec<VisibleSegment>,
}

impl Snapshot {
    /// The visible vertex nearest the observer, with squared distance;
    /// ties resolved toward the earliest vertex in snapshot order, which
    /// follows the polygon's stable input order.
    pub fn closest_vertex(&self) -> Option<(usize, Real)> {
        let mut best: Option<(usize, Real)> = None;
        for (i, v) in self.vertices.iter().enumerate() {
            let d = self.observer.dist2(v);
            let better = match &best {
                None => true,
                Some((_, bd)) => d.cmp_exact(bd) == std::cmp::Ordering::Less,
            };
            if better {
                best = Some((i, d));
            }
        }
        best
    }

    /// Visible segments lying on the line through `v` and `w`: used to
    /// recognize an incident edge (and its direction) from the geometry.
    pub fn segments_through(&self, v: &Point, w: &Point) -> Vec<&VisibleSegment> {
        use super::point::orient;
        self.segments
            .iter()
            .filter(|s| orient(v, w, &s.a) == 0 && orient(v, w, &s.b) == 0)
            .collect()
    }
}

/// Take a snapshot of the polygon from `x`.
pub fn snapshot(p: &Polygon, x: &Point) -> Result<Snapshot, GeomError> {
    if !p.contains(x) {
        return Err(GeomError::PointOutside);
    }
    let mut vertices = Vec::new();
    for v in p.vertex_ids() {
        let q = p.vertex(v);
        if segment_in_polygon(p, x, q) {
            vertices.push(q.clone());
        }
    }
    let mut segments = Vec::new();
    for e in p.edge_ids() {
        let (a, b) = p.edge(e);
        let dir = b.sub(a);
        for (t0, t1) in visible_portion(p, x, e) {
            let pa = a.add(&dir.scale(&t0));
            let pb = a.add(&dir.scale(&t1));
            segments.push(VisibleSegment {
                a_is_vertex: t0.is_zero(),
                b_is_vertex: t1 == Real::one(),
                a: pa,
                b: pb,
                edge: e,
            });
        }
    }
    Ok(Snapshot { observer: x.clone(), vertices, segments })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polygon {
        Polygon::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4)], &[]).unwrap()
    }

    #[test]
    fn convex_interior_sees_everything() {
        let p = square();
        let s = snapshot(&p, &Point::from_ints(1, 1)).unwrap();
        assert_eq!(s.vertices.len(), 4);
        assert_eq!(s.segments.len(), 4);
        assert!(s.segments.iter().all(|seg| seg.a_is_vertex && seg.b_is_vertex));
    }

    #[test]
    fn hole_occlusion_marks_undefined_endpoints() {
        let p = Polygon::from_ints(
            &[(0, 0), (10, 0), (10, 10), (0, 10)],
            &[&[(4, 4), (4, 6), (6, 6), (6, 4)]],
        )
        .unwrap();
        let s = snapshot(&p, &Point::from_ints(2, 2)).unwrap();
        let undefined: usize = s
            .segments
            .iter()
            .map(|seg| (!seg.a_is_vertex) as usize + (!seg.b_is_vertex) as usize)
            .sum();
        assert!(undefined >= 2, "occlusion endpoints expected, snapshot: {s:?}");
        // The far corner (10,10) is hidden behind the hole.
        assert!(!s.vertices.contains(&Point::from_ints(10, 10)));
        assert!(s.vertices.contains(&Point::from_ints(0, 0)));
    }

    #[test]
    fn observer_on_edge_midpoint() {
        let p = square();
        let s = snapshot(&p, &Point::from_ints(2, 0)).unwrap();
        // All four vertices visible, four full-or-partial edges visible;
        // the observer's own edge is fully visible as one segment.
        assert_eq!(s.vertices.len(), 4);
        assert_eq!(s.segments.len(), 4);
    }

    #[test]
    fn observer_at_vertex_sees_incident_edges() {
        let p = square();
        let s = snapshot(&p, &Point::from_ints(0, 0)).unwrap();
        assert!(s.vertices.contains(&Point::from_ints(0, 0)));
        assert_eq!(s.segments.len(), 4, "square interior is fully visible from a corner");
    }
}
