//! Exact polygon geometry: visibility, vertex/segment Voronoi predicates,
//! proper closeness, tent paths, circular arcs and offset approximations.

pub mod offset;
pub mod paths;
pub mod point;
pub mod polygon;
pub mod snapshot;
pub mod view;
pub mod visibility;
pub mod voronoi;

pub use paths::{
    arc_point, edge_corridor_clear, edge_corridor_clear_view, properly_close, properly_close_view,
    segment_closer_than, segment_within_of_ring, semicircle_clear, semicircle_clear_view,
    sightline_clear, tangent_apex, tent_path_safe, tent_path_safe_view, PathError, TentPath,
    Trajectory,
};
pub use view::Boundary;
pub use point::{dist2_point_segment, on_segment, orient, Point};
pub use polygon::{EdgeId, Polygon, PolygonError, VertexId};
pub use snapshot::{snapshot, Snapshot, VisibleSegment};
pub use visibility::{is_visible, segment_in_polygon, visible_portion, GeomError};
pub use voronoi::{
    closest_boundary_segment, closest_visible_vertex, lvor_contains, pvor_contains,
    voronoi_edge_hit,
};

pub use offset::{offset_polyline, offset_valid};
