//! Deterministic, exact-arithmetic simulator and verification harness for a
//! finite-state robot that builds a map of a polygon with holes by encoding
//! its entire memory in its position relative to polygon vertices.
//!
//! The crate is organized around the pipeline:
//!
//! - [`exact`]: constructible-real arithmetic with decidable comparisons.
//! - [`codec`]: bit-string codes for numbers, snapshots and robot memory,
//!   and the dyadic embedding that turns a code into a distance or tangent.
//! - [`geom`]: exact polygon geometry (visibility, vertex/segment Voronoi
//!   predicates, tent paths, arcs, offsets).
//! - [`robot`]: the pure Compute function of the robot, a map from
//!   (internal state, snapshot) to (next state, trajectory).
//! - [`world`]: the look-compute-move loop with a non-rigid movement
//!   adversary and a replayable JSONL trace.
//! - [`verify`], [`polyfile`], [`svg`]: verification of decoded maps against
//!   ground truth, the polygon file format, and trace rendering.

pub mod codec;
pub mod exact;
pub mod geom;
pub mod polyfile;
pub mod robot;
pub mod svg;
pub mod verify;
pub mod world;

pub use exact::Real;
