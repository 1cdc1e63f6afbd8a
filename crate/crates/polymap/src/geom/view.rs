//! A boundary view: the collection of vertices and boundary segments a
//! predicate runs against. Either the ground-truth polygon or the visible
//! portion of it in a snapshot — the robot's checks use the latter, the
//! simulator's audits the former, through the same code.

use super::point::Point;
use super::polygon::Polygon;
use super::snapshot::Snapshot;

#[derive(Clone, Debug)]
pub struct Boundary {
    pub vertices: Vec<Point>,
    pub segments: Vec<(Point, Point)>,
}

impl Boundary {
    pub fn of_polygon(p: &Polygon) -> Boundary {
        Boundary {
            vertices: p.vertex_ids().map(|v| p.vertex(v).clone()).collect(),
            segments: p
                .edge_ids()
                .map(|e| {
                    let (a, b) = p.edge(e);
                    (a.clone(), b.clone())
                })
                .collect(),
        }
    }

    pub fn of_snapshot(s: &Snapshot) -> Boundary {
        Boundary {
            vertices: s.vertices.clone(),
            segments: s
                .segments
                .iter()
                .map(|seg| (seg.a.clone(), seg.b.clone()))
                .collect(),
        }
    }
}
