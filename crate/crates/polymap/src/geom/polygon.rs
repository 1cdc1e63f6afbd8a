//! The polygon model: one counterclockwise external ring plus clockwise
//! hole rings, with the successor convention the exploration follows.
//!
//! Vertices are identified by (ring, index). The successor of a vertex is
//! the next vertex in its ring's stored order; with the outer ring
//! counterclockwise and holes clockwise, walking vertex -> successor always
//! keeps the polygon's interior on the left.

use num_rational::BigRational;

use super::point::{on_segment, orient, Point};
use crate::exact::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub ring: usize,
    pub index: usize,
}

/// Edge from `ring[index]` to its successor in ring order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId {
    pub ring: usize,
    pub index: usize,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolygonError {
    #[error("ring {0} has fewer than 3 vertices")]
    TooFewVertices(usize),
    #[error("duplicate vertex in polygon")]
    DuplicateVertex,
    #[error("ring {0} has three consecutive collinear vertices at index {1}")]
    CollinearVertices(usize, usize),
    #[error("ring {0} is self-intersecting")]
    SelfIntersection(usize),
    #[error("rings {0} and {1} intersect")]
    RingsIntersect(usize, usize),
    #[error("hole {0} is not strictly inside the external boundary")]
    HoleOutsideOuter(usize),
    #[error("ring {0} has the wrong orientation (outer must be CCW, holes CW)")]
    BadOrientation(usize),
}

#[derive(Clone, Debug)]
pub struct Polygon {
    /// `rings[0]` is the external boundary; the rest are holes.
    rings: Vec<Vec<Point>>,
}

impl Polygon {
    pub fn new(
        outer: Vec<(BigRational, BigRational)>,
        holes: Vec<Vec<(BigRational, BigRational)>>,
    ) -> Result<Self, PolygonError> {
        let mut rings = Vec::with_capacity(1 + holes.len());
        rings.push(outer.into_iter().map(|(x, y)| Point::from_rationals(x, y)).collect());
        for h in holes {
            rings.push(h.into_iter().map(|(x, y)| Point::from_rationals(x, y)).collect());
        }
        let p = Polygon { rings };
        p.validate()?;
        Ok(p)
    }

    pub fn from_ints(outer: &[(i64, i64)], holes: &[&[(i64, i64)]]) -> Result<Self, PolygonError> {
        Polygon::new(
            outer.iter().map(|&(x, y)| (crate::exact::rat_int(x), crate::exact::rat_int(y))).collect(),
            holes
                .iter()
                .map(|h| h.iter().map(|&(x, y)| (crate::exact::rat_int(x), crate::exact::rat_int(y))).collect())
                .collect(),
        )
    }

    fn validate(&self) -> Result<(), PolygonError> {
        for (ri, ring) in self.rings.iter().enumerate() {
            if ring.len() < 3 {
                return Err(PolygonError::TooFewVertices(ri));
            }
            let n = ring.len();
            for i in 0..n {
                let a = &ring[i];
                let b = &ring[(i + 1) % n];
                let c = &ring[(i + 2) % n];
                if orient(a, b, c) == 0 {
                    return Err(PolygonError::CollinearVertices(ri, (i + 1) % n));
                }
            }
        }
        // Duplicate vertices anywhere in the polygon.
        let all: Vec<&Point> = self.rings.iter().flatten().collect();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                if all[i] == all[j] {
                    return Err(PolygonError::DuplicateVertex);
                }
            }
        }
        // Ring simplicity: non-adjacent edges must not touch at all;
        // adjacent edges only at the shared vertex (collinearity excluded
        // above).
        for (ri, ring) in self.rings.iter().enumerate() {
            let n = ring.len();
            for i in 0..n {
                for j in i + 1..n {
                    let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                    let (a1, b1) = (&ring[i], &ring[(i + 1) % n]);
                    let (a2, b2) = (&ring[j], &ring[(j + 1) % n]);
                    if adjacent {
                        continue;
                    }
                    if segments_touch(a1, b1, a2, b2) {
                        return Err(PolygonError::SelfIntersection(ri));
                    }
                }
            }
        }
        // Rings pairwise disjoint.
        for ri in 0..self.rings.len() {
            for rj in ri + 1..self.rings.len() {
                for i in 0..self.rings[ri].len() {
                    for j in 0..self.rings[rj].len() {
                        let n1 = self.rings[ri].len();
                        let n2 = self.rings[rj].len();
                        let (a1, b1) = (&self.rings[ri][i], &self.rings[ri][(i + 1) % n1]);
                        let (a2, b2) = (&self.rings[rj][j], &self.rings[rj][(j + 1) % n2]);
                        if segments_touch(a1, b1, a2, b2) {
                            return Err(PolygonError::RingsIntersect(ri, rj));
                        }
                    }
                }
            }
        }
        // Orientation: outer CCW (positive area), holes CW.
        for (ri, ring) in self.rings.iter().enumerate() {
            let area2 = signed_area2(ring);
            let want_positive = ri == 0;
            if want_positive != area2.is_positive() || area2.is_zero() {
                return Err(PolygonError::BadOrientation(ri));
            }
        }
        // Holes strictly inside the outer ring (disjointness already shown,
        // so one strictly-interior vertex suffices).
        for hi in 1..self.rings.len() {
            let v = &self.rings[hi][0];
            if !point_in_ring(v, &self.rings[0]) || on_ring_boundary(v, &self.rings[0]) {
                return Err(PolygonError::HoleOutsideOuter(hi));
            }
        }
        Ok(())
    }

    pub fn rings(&self) -> &[Vec<Point>] {
        &self.rings
    }

    pub fn ring_len(&self, ring: usize) -> usize {
        self.rings[ring].len()
    }

    pub fn vertex(&self, id: VertexId) -> &Point {
        &self.rings[id.ring][id.index]
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.rings
            .iter()
            .enumerate()
            .flat_map(|(ring, r)| (0..r.len()).map(move |index| VertexId { ring, index }))
    }

    pub fn vertex_count(&self) -> usize {
        self.rings.iter().map(Vec::len).sum()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.rings
            .iter()
            .enumerate()
            .flat_map(|(ring, r)| (0..r.len()).map(move |index| EdgeId { ring, index }))
    }

    pub fn edge(&self, id: EdgeId) -> (&Point, &Point) {
        let ring = &self.rings[id.ring];
        (&ring[id.index], &ring[(id.index + 1) % ring.len()])
    }

    pub fn succ(&self, v: VertexId) -> VertexId {
        VertexId { ring: v.ring, index: (v.index + 1) % self.rings[v.ring].len() }
    }

    pub fn pred(&self, v: VertexId) -> VertexId {
        let n = self.rings[v.ring].len();
        VertexId { ring: v.ring, index: (v.index + n - 1) % n }
    }

    /// Edge from `v` to its successor.
    pub fn succ_edge(&self, v: VertexId) -> EdgeId {
        EdgeId { ring: v.ring, index: v.index }
    }

    /// Edge from the predecessor of `v` into `v`.
    pub fn pred_edge(&self, v: VertexId) -> EdgeId {
        let n = self.rings[v.ring].len();
        EdgeId { ring: v.ring, index: (v.index + n - 1) % n }
    }

    /// Interior angle at `v` exceeds pi: the walk pred -> v -> succ turns
    /// right (interior is on the left).
    pub fn is_reflex(&self, v: VertexId) -> bool {
        let p = self.vertex(self.pred(v));
        let q = self.vertex(v);
        let r = self.vertex(self.succ(v));
        q.sub(p).cross(&r.sub(q)).is_negative()
    }

    /// Exact point-in-polygon, boundary included.
    pub fn contains(&self, p: &Point) -> bool {
        for ring in &self.rings {
            if on_ring_boundary(p, ring) {
                return true;
            }
        }
        let mut inside = false;
        for ring in &self.rings {
            if point_in_ring(p, ring) {
                inside = !inside;
            }
        }
        inside
    }

    pub fn on_boundary(&self, p: &Point) -> bool {
        self.rings.iter().any(|ring| on_ring_boundary(p, ring))
    }

    /// Vertex located exactly at `p`, if any.
    pub fn vertex_at(&self, p: &Point) -> Option<VertexId> {
        self.vertex_ids().find(|&id| self.vertex(id) == p)
    }

    /// Squared diameter of the vertex set.
    pub fn diameter2(&self) -> Real {
        let ids: Vec<VertexId> = self.vertex_ids().collect();
        let mut best = Real::zero();
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                let d = self.vertex(ids[i]).dist2(self.vertex(ids[j]));
                if d.cmp_exact(&best) == std::cmp::Ordering::Greater {
                    best = d;
                }
            }
        }
        best
    }

    /// Squared minimum feature clearance: the smallest of edge lengths,
    /// vertex-vertex gaps, vertex-to-nonincident-edge and nonadjacent
    /// edge-pair distances. Everything the local safety radii are scaled
    /// from.
    pub fn clearance2(&self) -> Real {
        let mut best: Option<Real> = None;
        let mut consider = |d: Real| {
            let better = match &best {
                None => true,
                Some(b) => d.cmp_exact(b) == std::cmp::Ordering::Less,
            };
            if better {
                best = Some(d);
            }
        };
        let vids: Vec<VertexId> = self.vertex_ids().collect();
        for i in 0..vids.len() {
            for j in i + 1..vids.len() {
                consider(self.vertex(vids[i]).dist2(self.vertex(vids[j])));
            }
        }
        let eids: Vec<EdgeId> = self.edge_ids().collect();
        for &v in &vids {
            for &e in &eids {
                if e.ring == v.ring {
                    let n = self.ring_len(e.ring);
                    if e.index == v.index || (e.index + 1) % n == v.index {
                        continue;
                    }
                }
                let (a, b) = self.edge(e);
                consider(super::point::dist2_point_segment(self.vertex(v), a, b));
            }
        }
        for i in 0..eids.len() {
            for j in i + 1..eids.len() {
                let (e1, e2) = (eids[i], eids[j]);
                if e1.ring == e2.ring {
                    let n = self.ring_len(e1.ring);
                    let adjacent = (e1.index + 1) % n == e2.index || (e2.index + 1) % n == e1.index;
                    if adjacent {
                        continue;
                    }
                }
                let (a1, b1) = self.edge(e1);
                let (a2, b2) = self.edge(e2);
                consider(segment_dist2(a1, b1, a2, b2));
            }
        }
        best.expect("polygon has features")
    }
}

/// Even-odd containment against an arbitrary ring of exact points.
pub fn point_in_ring_pub(p: &Point, ring: &[Point]) -> bool {
    point_in_ring(p, ring)
}

fn signed_area2(ring: &[Point]) -> Real {
    let mut acc = Real::zero();
    let n = ring.len();
    for i in 0..n {
        acc = acc.add(&ring[i].cross(&ring[(i + 1) % n]));
    }
    acc
}

fn on_ring_boundary(p: &Point, ring: &[Point]) -> bool {
    let n = ring.len();
    (0..n).any(|i| on_segment(p, &ring[i], &ring[(i + 1) % n]))
}

/// Even-odd crossing test for one ring against the rightward ray from `p`,
/// with `p` assumed off the boundary. Half-open in y, so a vertex exactly
/// on the ray is counted for exactly one of its edges.
fn point_in_ring(p: &Point, ring: &[Point]) -> bool {
    let n = ring.len();
    let mut inside = false;
    for i in 0..n {
        let a = &ring[i];
        let b = &ring[(i + 1) % n];
        let a_above = a.y.cmp_exact(&p.y) == std::cmp::Ordering::Greater;
        let b_above = b.y.cmp_exact(&p.y) == std::cmp::Ordering::Greater;
        if a_above != b_above {
            // Crossing point is right of p: for an upward edge that means
            // p lies left of a->b, for a downward edge right of it.
            let o = orient(a, b, p);
            let crosses_right = if b_above { o > 0 } else { o < 0 };
            if crosses_right {
                inside = !inside;
            }
        }
    }
    inside
}

/// True if the closed segments share any point.
pub fn segments_touch(a1: &Point, b1: &Point, a2: &Point, b2: &Point) -> bool {
    segments_properly_cross(a1, b1, a2, b2)
        || on_segment(a1, a2, b2)
        || on_segment(b1, a2, b2)
        || on_segment(a2, a1, b1)
        || on_segment(b2, a1, b1)
}

/// True if the closed segments cross at a point interior to both.
pub fn segments_properly_cross(a1: &Point, b1: &Point, a2: &Point, b2: &Point) -> bool {
    let d1 = orient(a2, b2, a1);
    let d2 = orient(a2, b2, b1);
    let d3 = orient(a1, b1, a2);
    let d4 = orient(a1, b1, b2);
    d1 * d2 < 0 && d3 * d4 < 0
}

/// Squared distance between two closed segments.
pub fn segment_dist2(a1: &Point, b1: &Point, a2: &Point, b2: &Point) -> Real {
    use super::point::dist2_point_segment;
    if segments_touch(a1, b1, a2, b2) {
        return Real::zero();
    }
    let mut best = dist2_point_segment(a1, a2, b2);
    for d in [
        dist2_point_segment(b1, a2, b2),
        dist2_point_segment(a2, a1, b1),
        dist2_point_segment(b2, a1, b1),
    ] {
        if d.cmp_exact(&best) == std::cmp::Ordering::Less {
            best = d;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn square() -> Polygon {
        Polygon::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4)], &[]).unwrap()
    }

    fn square_with_hole() -> Polygon {
        Polygon::from_ints(
            &[(0, 0), (10, 0), (10, 10), (0, 10)],
            &[&[(4, 4), (4, 6), (6, 6), (6, 4)]],
        )
        .unwrap()
    }

    #[test]
    fn validation_rejects_bad_polygons() {
        // Self-intersecting bowtie.
        let r = Polygon::from_ints(&[(0, 0), (4, 4), (4, 0), (0, 4)], &[]);
        assert!(matches!(r, Err(PolygonError::SelfIntersection(0))));
        // Hole orientation must be clockwise.
        let r = Polygon::from_ints(
            &[(0, 0), (10, 0), (10, 10), (0, 10)],
            &[&[(4, 4), (6, 4), (6, 6), (4, 6)]],
        );
        assert!(matches!(r, Err(PolygonError::BadOrientation(1))));
        // Hole outside.
        let r = Polygon::from_ints(
            &[(0, 0), (4, 0), (4, 4), (0, 4)],
            &[&[(8, 8), (8, 9), (9, 9), (9, 8)]],
        );
        assert!(matches!(r, Err(PolygonError::RingsIntersect(..)) | Err(PolygonError::HoleOutsideOuter(_))));
        // Duplicate vertex.
        let r = Polygon::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 0), (0, 4)], &[]);
        assert!(r.is_err());
    }

    #[test]
    fn successor_keeps_interior_left() {
        let p = square();
        let v00 = p.vertex_at(&Point::from_ints(0, 0)).unwrap();
        assert_eq!(p.vertex(p.succ(v00)), &Point::from_ints(4, 0));
        assert_eq!(p.vertex(p.pred(v00)), &Point::from_ints(0, 4));
        assert!(!p.is_reflex(v00));

        let l = Polygon::from_ints(&[(0, 0), (8, 0), (8, 4), (4, 4), (4, 8), (0, 8)], &[]).unwrap();
        let notch = l.vertex_at(&Point::from_ints(4, 4)).unwrap();
        assert!(l.is_reflex(notch));
        // The tour enters the notch from (8,4).
        assert_eq!(l.vertex(l.pred(notch)), &Point::from_ints(8, 4));
        assert_eq!(l.vertex(l.succ(notch)), &Point::from_ints(4, 8));

        let h = square_with_hole();
        let hv = h.vertex_at(&Point::from_ints(4, 6)).unwrap();
        assert!(h.is_reflex(hv));
    }

    #[test]
    fn containment_with_hole() {
        let p = square_with_hole();
        assert!(p.contains(&Point::from_ints(2, 2)));
        assert!(!p.contains(&Point::from_ints(5, 5))); // inside the hole
        assert!(p.contains(&Point::from_ints(4, 5))); // on the hole boundary
        assert!(p.contains(&Point::from_ints(0, 0)));
        assert!(!p.contains(&Point::from_ints(-1, 2)));
    }

    #[test]
    fn clearance_and_diameter() {
        let p = square();
        assert_eq!(p.diameter2(), Real::from_int(32));
        assert_eq!(p.clearance2(), Real::from_int(16));
        let h = square_with_hole();
        // Hole edge length 2 is the smallest feature.
        assert_eq!(h.clearance2(), Real::from_int(4));
    }
}
