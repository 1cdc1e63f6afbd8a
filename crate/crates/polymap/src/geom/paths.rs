//! Trajectories (segments and circular arcs), tent paths, proper
//! closeness, and the disc/corridor clearance tests the robot's moves rely
//! on.
//!
//! The clearance predicates run against a [`Boundary`] view, so the same
//! code serves the simulator (whole polygon) and the robot (the visible
//! boundary in a snapshot).

use num_rational::BigRational;
use num_traits::Signed;

use super::point::{on_segment, orient, Point};
use super::polygon::Polygon;
use super::view::Boundary;
use super::visibility::segment_in_polygon;
use crate::exact::{rat, Real};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PathError {
    #[error("arc endpoints are not equidistant from the center")]
    UnequalRadii,
    #[error("arc sweep must be in (0, pi/2]")]
    BadSweep,
    #[error("negative rotation parameter")]
    NegativeParameter,
    #[error("tent path needs distinct base points and a positive angle")]
    BadTent,
}

/// One cycle's move: a straight segment or a circular arc with sweep in
/// (0, pi/2]. Longer rotations are issued as several cycles.
#[derive(Clone, Debug, PartialEq)]
pub enum Trajectory {
    Segment { from: Point, to: Point },
    Arc { center: Point, from: Point, to: Point, ccw: bool },
}

impl Trajectory {
    pub fn segment(from: Point, to: Point) -> Trajectory {
        Trajectory::Segment { from, to }
    }

    pub fn zero(at: Point) -> Trajectory {
        Trajectory::Segment { from: at.clone(), to: at }
    }

    pub fn arc(center: Point, from: Point, to: Point, ccw: bool) -> Result<Trajectory, PathError> {
        if center.dist2(&from) != center.dist2(&to) {
            return Err(PathError::UnequalRadii);
        }
        let p = from.sub(&center);
        let q = to.sub(&center);
        let cross = p.cross(&q);
        let dot = p.dot(&q);
        // Sweep in (0, pi/2]: strictly positive cross on the turn side and
        // nonnegative dot.
        let side_ok = if ccw { cross.is_positive() } else { cross.is_negative() };
        if !side_ok || dot.is_negative() {
            return Err(PathError::BadSweep);
        }
        Ok(Trajectory::Arc { center, from, to, ccw })
    }

    pub fn start(&self) -> &Point {
        match self {
            Trajectory::Segment { from, .. } => from,
            Trajectory::Arc { from, .. } => from,
        }
    }

    pub fn end(&self) -> &Point {
        match self {
            Trajectory::Segment { to, .. } => to,
            Trajectory::Arc { to, .. } => to,
        }
    }

    pub fn is_zero_length(&self) -> bool {
        match self {
            Trajectory::Segment { from, to } => from == to,
            Trajectory::Arc { .. } => false,
        }
    }

    /// Tangent of half the arc's sweep angle, positive. For `|p| = |q| = R`
    /// and sweep angle `phi`: `tan(phi/2) = cross / (R^2 + dot)`, rational
    /// in the coordinates.
    pub fn sweep_half_tan(&self) -> Option<Real> {
        match self {
            Trajectory::Segment { .. } => None,
            Trajectory::Arc { center, from, to, ccw } => {
                let p = from.sub(center);
                let q = to.sub(center);
                let cross = if *ccw { p.cross(&q) } else { q.cross(&p) };
                let denom = p.norm2().add(&p.dot(&q));
                Some(cross.div(&denom).expect("sweep < pi"))
            }
        }
    }

    /// Point reached after rotating the start by the angle with tangent
    /// half-parameter `u` (in the arc's direction); `u` ranges over
    /// `(0, sweep_half_tan]`.
    pub fn arc_point_at(&self, u: &Real) -> Option<Point> {
        match self {
            Trajectory::Segment { .. } => None,
            Trajectory::Arc { center, from, ccw, .. } => {
                let p = from.sub(center);
                Some(center.add(&p.rotate_half_tan(u, *ccw)))
            }
        }
    }

    /// Chord length squared: exact lower-bound material for arc lengths.
    pub fn chord2(&self) -> Real {
        match self {
            Trajectory::Segment { from, to } => from.dist2(to),
            Trajectory::Arc { from, to, .. } => from.dist2(to),
        }
    }

    /// Straight-line point at fraction `t` of a segment.
    pub fn segment_point_at(&self, t: &Real) -> Option<Point> {
        match self {
            Trajectory::Segment { from, to } => Some(from.add(&to.sub(from).scale(t))),
            Trajectory::Arc { .. } => None,
        }
    }

    /// Exact containment of the whole trajectory in the polygon.
    pub fn contained_in(&self, p: &Polygon) -> bool {
        match self {
            Trajectory::Segment { from, to } => segment_in_polygon(p, from, to),
            Trajectory::Arc { center, from, to, .. } => {
                if !p.contains(from) || !p.contains(to) {
                    return false;
                }
                // The arc lies inside the hull of its chord and the tangent
                // apex; checking the two hull edges keeps the test exact.
                match tangent_apex(center, from, to) {
                    Some(t) => segment_in_polygon(p, from, &t) && segment_in_polygon(p, &t, to),
                    None => false,
                }
            }
        }
    }
}

/// Intersection of the circle tangents at two points of equal radius;
/// exists while the sweep is below pi.
pub fn tangent_apex(center: &Point, from: &Point, to: &Point) -> Option<Point> {
    let x = from.sub(center);
    let y = to.sub(center);
    let d2 = x.norm2();
    let denom = d2.add(&x.dot(&y));
    if !denom.is_positive() {
        return None;
    }
    let k = d2.div(&denom).expect("denom > 0");
    Some(center.add(&x.add(&y).scale(&k)))
}

/// Point on the circle around `center` through `start`, rotated by the
/// angle `theta` with `tan(theta/2) = t` (counterclockwise if `ccw`).
pub fn arc_point(center: &Point, start: &Point, t: &BigRational, ccw: bool) -> Result<Point, PathError> {
    if t.is_negative() {
        return Err(PathError::NegativeParameter);
    }
    let u = Real::from_rational(t.clone());
    Ok(center.add(&start.sub(center).rotate_half_tan(&u, ccw)))
}

/// Two equal legs from `from` to `to` through an apex on the perpendicular
/// bisector; the apex sits on the left of from -> to (the interior side of
/// a boundary walk) at base angle `alpha` with `tan(alpha) = tan_alpha`.
#[derive(Clone, Debug, PartialEq)]
pub struct TentPath {
    pub from: Point,
    pub to: Point,
    pub tan_alpha: Real,
    pub apex: Point,
}

impl TentPath {
    pub fn new(from: Point, to: Point, tan_alpha: Real) -> Result<TentPath, PathError> {
        TentPath::new_sided(from, to, tan_alpha, true)
    }

    pub fn new_sided(from: Point, to: Point, tan_alpha: Real, left: bool) -> Result<TentPath, PathError> {
        if from == to || !tan_alpha.is_positive() {
            return Err(PathError::BadTent);
        }
        let delta = to.sub(&from);
        let half = Real::from_rational(rat(1, 2));
        let normal = if left { delta.perp() } else { delta.perp().scale(&Real::from_int(-1)) };
        let apex = from
            .midpoint(&to)
            .add(&normal.scale(&tan_alpha.mul(&half)));
        Ok(TentPath { from, to, tan_alpha, apex })
    }

    pub fn legs(&self) -> [(Point, Point); 2] {
        [
            (self.from.clone(), self.apex.clone()),
            (self.apex.clone(), self.to.clone()),
        ]
    }
}

/// True iff every point of [a, b] is at least as close to segment `e` as
/// to segment `f` (squared distances compared exactly, piecewise-quadratic
/// critical points included).
pub fn segment_closer_than(
    a: &Point,
    b: &Point,
    e: (&Point, &Point),
    f: (&Point, &Point),
) -> bool {
    // Subdivide [0,1] where the nearest feature of either segment changes.
    let dir = b.sub(a);
    let mut cuts = vec![Real::zero(), Real::one()];
    for (c, d) in [e, f] {
        let cd = d.sub(c);
        let len2 = cd.norm2();
        if len2.is_zero() {
            continue;
        }
        // (a + t dir - c) . cd = 0 and = len2.
        let base = a.sub(c).dot(&cd);
        let slope = dir.dot(&cd);
        if !slope.is_zero() {
            for target in [Real::zero(), len2] {
                let t = target.sub(&base).div(&slope).expect("slope nonzero");
                if t.is_positive() && t.cmp_exact(&Real::one()) == std::cmp::Ordering::Less {
                    cuts.push(t);
                }
            }
        }
    }
    cuts.sort();
    cuts.dedup();
    let half = Real::from_rational(rat(1, 2));
    for w in cuts.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        let mid_t = lo.add(hi).mul(&half);
        let mid = a.add(&dir.scale(&mid_t));
        // Quadratic coefficients of d^2(y(t), seg) on this piece, where the
        // nearest feature is fixed; pick the feature by the midpoint.
        let coeffs = |seg: (&Point, &Point)| -> (Real, Real, Real) {
            let (c, d) = seg;
            let cd = d.sub(c);
            let len2 = cd.norm2();
            let use_line = if len2.is_zero() {
                false
            } else {
                let t = mid.sub(c).dot(&cd);
                !t.is_negative() && t.cmp_exact(&len2) != std::cmp::Ordering::Greater
            };
            if use_line {
                // (cross(a - c + t dir, cd))^2 / len2
                let u = a.sub(c).cross(&cd);
                let v = dir.cross(&cd);
                (
                    v.mul(&v).div(&len2).expect("len2 > 0"),
                    Real::from_int(2).mul(&u).mul(&v).div(&len2).expect("len2 > 0"),
                    u.mul(&u).div(&len2).expect("len2 > 0"),
                )
            } else {
                let p = if mid.dist2(c).cmp_exact(&mid.dist2(d)) == std::cmp::Ordering::Greater {
                    d
                } else {
                    c
                };
                let w0 = a.sub(p);
                (
                    dir.norm2(),
                    Real::from_int(2).mul(&w0.dot(&dir)),
                    w0.norm2(),
                )
            }
        };
        let (ae, be, ce) = coeffs(e);
        let (af, bf, cf) = coeffs(f);
        let qa = af.sub(&ae);
        let qb = bf.sub(&be);
        let qc = cf.sub(&ce);
        let eval = |t: &Real| qa.mul(t).mul(t).add(&qb.mul(t)).add(&qc);
        if eval(lo).is_negative() || eval(hi).is_negative() {
            return false;
        }
        if qa.is_positive() {
            let tstar = qb.neg().div(&qa.add(&qa)).expect("qa > 0");
            if tstar.cmp_exact(lo) == std::cmp::Ordering::Greater
                && tstar.cmp_exact(hi) == std::cmp::Ordering::Less
                && eval(&tstar).is_negative()
            {
                return false;
            }
        }
    }
    true
}

/// Both legs of the tent stay inside the edge Voronoi region of the base
/// segment, measured against every boundary segment of the view that is
/// not collinear with the base.
pub fn tent_path_safe_view(b: &Boundary, tent: &TentPath) -> bool {
    let base = (&tent.from, &tent.to);
    for (la, lb) in tent.legs() {
        for (c, d) in &b.segments {
            if orient(base.0, base.1, c) == 0 && orient(base.0, base.1, d) == 0 {
                continue;
            }
            if !segment_closer_than(&la, &lb, base, (c, d)) {
                return false;
            }
        }
    }
    true
}

pub fn tent_path_safe(p: &Polygon, tent: &TentPath) -> bool {
    tent_path_safe_view(&Boundary::of_polygon(p), tent)
}

/// Clip the segment [c, d] to a convex region given by its corner points
/// (counterclockwise). Returns the surviving closed parameter range.
pub(crate) fn clip_to_convex(c: &Point, d: &Point, corners: &[Point]) -> Option<(Real, Real)> {
    let mut lo = Real::zero();
    let mut hi = Real::one();
    let n = corners.len();
    let dir = d.sub(c);
    for i in 0..n {
        let a = &corners[i];
        let b = &corners[(i + 1) % n];
        if a == b {
            continue;
        }
        // Keep the left side of a -> b.
        let edge = b.sub(a);
        let f0 = edge.cross(&c.sub(a));
        let slope = edge.cross(&dir);
        match slope.sign() {
            0 => {
                if f0.is_negative() {
                    return None;
                }
            }
            s => {
                let t = f0.neg().div(&slope).expect("slope nonzero");
                if s > 0 {
                    if t.cmp_exact(&lo) == std::cmp::Ordering::Greater {
                        lo = t;
                    }
                } else if t.cmp_exact(&hi) == std::cmp::Ordering::Less {
                    hi = t;
                }
            }
        }
        if lo.cmp_exact(&hi) == std::cmp::Ordering::Greater {
            return None;
        }
    }
    Some((lo, hi))
}

/// How a boundary segment may touch a guard region.
pub(crate) enum TouchRule<'a> {
    /// Only at the listed points.
    OnlyAt(&'a [&'a Point]),
    /// Only along the closed segment between the two points.
    OnlyOn(&'a Point, &'a Point),
}

/// Every boundary segment not skipped must intersect the convex region
/// (counterclockwise corners) only as the rule allows.
pub(crate) fn region_clear<F: Fn(&Point, &Point) -> bool>(
    b: &Boundary,
    corners: &[Point],
    skip: F,
    rule: TouchRule,
) -> bool {
    for (c, d) in &b.segments {
        if skip(c, d) {
            continue;
        }
        let Some((lo, hi)) = clip_to_convex(c, d, corners) else {
            continue;
        };
        let dir = d.sub(c);
        let pa = c.add(&dir.scale(&lo));
        let pb = c.add(&dir.scale(&hi));
        let ok = match &rule {
            TouchRule::OnlyAt(pts) => pa == pb && pts.iter().any(|q| **q == pa),
            TouchRule::OnlyOn(u, v) => on_segment(&pa, u, v) && on_segment(&pb, u, v),
        };
        if !ok {
            return false;
        }
    }
    true
}

fn through(pt: &Point) -> impl Fn(&Point, &Point) -> bool + '_ {
    move |a: &Point, b: &Point| orient(a, b, pt) == 0
}

/// No segment of the view properly crosses [a, c]: the perception-side
/// stand-in for a full segment-in-polygon test.
pub fn sightline_clear(b: &Boundary, a: &Point, c: &Point) -> bool {
    use super::polygon::segments_properly_cross;
    b.segments
        .iter()
        .all(|(s, t)| !segments_properly_cross(a, c, s, t))
}

/// Proper closeness of `x` to the vertex at `vp` whose succeeding vertex is
/// at `sp`: every point `z` of the arc from `x` to the succeeding edge
/// (radius preserved) stays closest to `vp` among the view's vertices,
/// sees `vp`, and sees `sp`.
pub fn properly_close_view(b: &Boundary, x: &Point, vp: &Point, sp: &Point) -> bool {
    let d2 = x.dist2(vp);
    if d2.is_zero() {
        return sightline_clear(b, vp, sp);
    }
    let edge = sp.sub(vp);
    let len2 = edge.norm2();
    if d2.cmp_exact(&len2) == std::cmp::Ordering::Greater {
        return false;
    }
    // The edge point at the same distance from v.
    let scale = d2.div(&len2).expect("len2 > 0").sqrt().expect("nonneg");
    let y = vp.add(&edge.scale(&scale));
    arc_conditions(b, vp, sp, x, &y, &d2, 0)
}

pub fn properly_close(p: &Polygon, x: &Point, v: super::polygon::VertexId) -> bool {
    let vp = p.vertex(v);
    let sp = p.vertex(p.succ(v));
    let d2 = x.dist2(vp);
    if d2.is_zero() {
        return segment_in_polygon(p, vp, sp);
    }
    properly_close_view(&Boundary::of_polygon(p), x, vp, sp)
}

fn arc_conditions(
    b: &Boundary,
    vp: &Point,
    sp: &Point,
    x: &Point,
    y: &Point,
    d2: &Real,
    depth: u32,
) -> bool {
    if depth > 3 {
        return false;
    }
    if x == y {
        let ok_dist = b
            .vertices
            .iter()
            .filter(|u| *u != vp)
            .all(|u| x.dist2(u).cmp_exact(d2) != std::cmp::Ordering::Less);
        return ok_dist && sightline_clear(b, x, vp) && sightline_clear(b, x, sp);
    }
    let xr = x.sub(vp);
    let yr = y.sub(vp);
    let cr = xr.cross(&yr);
    let dot = xr.dot(&yr);
    if cr.is_zero() || dot.is_negative() {
        // Split wide sweeps so the tangent hull exists and stays tight;
        // opposite points split through whichever quarter direction the
        // configuration makes interior (checked recursively anyway).
        let bis = if cr.is_zero() { xr.perp() } else { xr.add(&yr) };
        let k = d2.div(&bis.norm2()).expect("bisector nonzero").sqrt().expect("nonneg");
        let mid = vp.add(&bis.scale(&k));
        return arc_conditions(b, vp, sp, x, &mid, d2, depth + 1)
            && arc_conditions(b, vp, sp, &mid, y, d2, depth + 1);
    }
    let ccw = cr.is_positive();

    // (a) No vertex comes closer than v anywhere on the arc: a vertex whose
    // direction falls inside the arc's cone must be at distance >= 2d,
    // otherwise the arc endpoints decide.
    let in_cone = |w: &Point| {
        let c1 = xr.cross(w);
        let c2 = w.cross(&yr);
        if ccw {
            !c1.is_negative() && !c2.is_negative()
        } else {
            !c1.is_positive() && !c2.is_positive()
        }
    };
    let four_d2 = d2.mul(&Real::from_int(4));
    for u in &b.vertices {
        if u == vp {
            continue;
        }
        let rel = u.sub(vp);
        if in_cone(&rel) {
            if rel.norm2().cmp_exact(&four_d2) == std::cmp::Ordering::Less {
                return false;
            }
        } else if x.dist2(u).cmp_exact(d2) == std::cmp::Ordering::Less
            || y.dist2(u).cmp_exact(d2) == std::cmp::Ordering::Less
        {
            return false;
        }
    }

    // (b) v visible from the whole arc: the pie slice hull {v, x, T, y}
    // must meet no boundary besides segments through v (they end at or
    // pass v and cannot sever a sightline into v).
    let Some(t_apex) = tangent_apex(vp, x, y) else {
        return false;
    };
    let pie = if ccw {
        vec![vp.clone(), x.clone(), t_apex.clone(), y.clone()]
    } else {
        vec![vp.clone(), y.clone(), t_apex.clone(), x.clone()]
    };
    if !region_clear(b, &pie, through(vp), TouchRule::OnlyAt(&[vp])) {
        return false;
    }

    // (c) The succeeding vertex visible from the whole arc: the hull of the
    // arc and that vertex must meet no boundary besides segments through
    // the successor.
    let hull = if ccw {
        vec![x.clone(), t_apex, y.clone(), sp.clone()]
    } else {
        vec![sp.clone(), y.clone(), t_apex, x.clone()]
    };
    region_clear(b, &hull, through(sp), TouchRule::OnlyAt(&[sp]))
}

/// Clip [c, d] to the closed disc |w - center|^2 <= r2.
pub(crate) fn clip_to_disc(c: &Point, d: &Point, center: &Point, r2: &Real) -> Option<(Real, Real)> {
    let dir = d.sub(c);
    let w = c.sub(center);
    let a = dir.norm2();
    if a.is_zero() {
        return if w.norm2().cmp_exact(r2) != std::cmp::Ordering::Greater {
            Some((Real::zero(), Real::one()))
        } else {
            None
        };
    }
    let b = w.dot(&dir).add(&w.dot(&dir));
    let cc = w.norm2().sub(r2);
    let disc = b.mul(&b).sub(&Real::from_int(4).mul(&a).mul(&cc));
    if disc.is_negative() {
        return None;
    }
    let sq = disc.sqrt().expect("nonneg");
    let two_a = a.add(&a);
    let lo = b.neg().sub(&sq).div(&two_a).expect("a > 0");
    let hi = b.neg().add(&sq).div(&two_a).expect("a > 0");
    let lo = if lo.is_negative() { Real::zero() } else { lo };
    let hi = if hi.cmp_exact(&Real::one()) == std::cmp::Ordering::Greater { Real::one() } else { hi };
    if lo.cmp_exact(&hi) == std::cmp::Ordering::Greater {
        None
    } else {
        Some((lo, hi))
    }
}

/// The closed semidisc of radius 2d centered at `head` (diameter along the
/// line tail-head, on the left/interior side) meets no boundary except
/// segments collinear with the base edge.
pub fn semicircle_clear_view(b: &Boundary, tail: &Point, head: &Point, d: &Real) -> bool {
    let dir = head.sub(tail);
    let r2 = d.mul(d).mul(&Real::from_int(4));
    for (c, dd) in &b.segments {
        if orient(tail, head, c) == 0 && orient(tail, head, dd) == 0 {
            continue;
        }
        // Clip to the interior-side halfplane (left of tail -> head).
        let oc = dir.cross(&c.sub(tail));
        let od = dir.cross(&dd.sub(tail));
        let (c1, d1) = match (oc.sign(), od.sign()) {
            (-1, -1) => continue,
            (-1, _) => {
                let t = oc.neg().div(&od.sub(&oc)).expect("crosses the line");
                (c.add(&dd.sub(c).scale(&t)), dd.clone())
            }
            (_, -1) => {
                let t = oc.neg().div(&od.sub(&oc)).expect("crosses the line");
                (c.clone(), c.add(&dd.sub(c).scale(&t)))
            }
            _ => (c.clone(), dd.clone()),
        };
        if let Some((lo, hi)) = clip_to_disc(&c1, &d1, head, &r2) {
            let seg_dir = d1.sub(&c1);
            let pa = c1.add(&seg_dir.scale(&lo));
            let pb = c1.add(&seg_dir.scale(&hi));
            let on_e = on_segment(&pa, tail, head) && on_segment(&pb, tail, head);
            if !on_e {
                return false;
            }
        }
    }
    true
}

pub fn semicircle_clear(p: &Polygon, e: super::polygon::EdgeId, d: &Real) -> bool {
    let (tail, head) = p.edge(e);
    semicircle_clear_view(&Boundary::of_polygon(p), tail, head, d)
}

/// Together with the semidisc condition at radius 2d, certifies that every
/// point of the edge tail-head is visible from every point of the
/// interior-side arcs of radius `d` around `head`: the sightline hull lies
/// inside the rectangle over the edge of height `d` union the 2d-disc at
/// the head.
///
/// The segment arriving at the tail may legitimately occupy the
/// rectangle's tail corner; it is safe exactly when it stays outside the
/// tangent line from the tail to the radius-d circle at the head
/// (`pred_far` is its far endpoint). Segments through the head are the
/// semidisc condition's business and are skipped here.
pub fn edge_corridor_clear_view(
    b: &Boundary,
    tail: &Point,
    head: &Point,
    pred_far: Option<&Point>,
    d: &Real,
) -> bool {
    let dir = head.sub(tail);
    let len2 = dir.norm2();
    let d2 = d.mul(d);
    if d2.cmp_exact(&len2) != std::cmp::Ordering::Less {
        return false;
    }
    if let Some(far) = pred_far {
        // Tangent point from the tail onto the circle D(head, d), interior
        // side: T = head - (d^2/L^2) E + (d sqrt(L^2 - d^2)/L^2) E_perp.
        let root = len2.sub(&d2).sqrt().expect("L > d");
        let t_pt = head
            .sub(&dir.scale(&d2.div(&len2).expect("len2 > 0")))
            .add(&dir.perp().scale(&d.mul(&root).div(&len2).expect("len2 > 0")));
        if orient(tail, &t_pt, far) < 0 {
            return false;
        }
    }
    let lift = dir
        .perp()
        .scale(&d.div(&len2.sqrt().expect("len > 0")).expect("len > 0"));
    let corners = vec![tail.clone(), head.clone(), head.add(&lift), tail.add(&lift)];
    region_clear(
        b,
        &corners,
        |a, c| orient(a, c, tail) == 0 || orient(a, c, head) == 0,
        TouchRule::OnlyOn(tail, head),
    )
}

pub fn edge_corridor_clear(p: &Polygon, e: super::polygon::EdgeId, d: &Real) -> bool {
    let (tail, head) = p.edge(e);
    let tail_vertex = p.vertex_at(tail).expect("edge tail is a vertex");
    let (pa, pb) = p.edge(p.pred_edge(tail_vertex));
    let far = if pa == tail { pb } else { pa };
    edge_corridor_clear_view(&Boundary::of_polygon(p), tail, head, Some(far), d)
}

/// Parameter range of [a, b] at squared distance <= `limit2` from the
/// closed segment [c, d]: the intersection with the segment's capsule,
/// which is convex, so the result is a single closed interval.
fn capsule_interval(
    a: &Point,
    b: &Point,
    c: &Point,
    d: &Point,
    limit2: &Real,
) -> Option<(Real, Real)> {
    let mut lo: Option<Real> = None;
    let mut hi: Option<Real> = None;
    let mut merge = |iv: Option<(Real, Real)>| {
        if let Some((l, h)) = iv {
            lo = Some(match lo.take() {
                None => l,
                Some(prev) => {
                    if l.cmp_exact(&prev) == std::cmp::Ordering::Less { l } else { prev }
                }
            });
            hi = Some(match hi.take() {
                None => h,
                Some(prev) => {
                    if h.cmp_exact(&prev) == std::cmp::Ordering::Greater { h } else { prev }
                }
            });
        }
    };
    merge(clip_to_disc(a, b, c, limit2));
    merge(clip_to_disc(a, b, d, limit2));
    // Slab around the line within the segment's span.
    let cd = d.sub(c);
    let len2 = cd.norm2();
    if !len2.is_zero() {
        let dir = b.sub(a);
        // Span: 0 <= (y(t) - c) . cd <= len2.
        let base = a.sub(c).dot(&cd);
        let slope = dir.dot(&cd);
        let span = linear_range(&base, &slope, &Real::zero(), &len2);
        // Distance to the line: cross(y(t) - c, cd)^2 <= limit2 * len2.
        let cb = a.sub(c).cross(&cd);
        let cs = dir.cross(&cd);
        let bound = limit2.mul(&len2).sqrt().expect("nonneg");
        let slab = linear_range(&cb, &cs, &bound.neg(), &bound);
        if let (Some(s1), Some(s2)) = (span, slab) {
            let l = if s1.0.cmp_exact(&s2.0) == std::cmp::Ordering::Greater { s1.0 } else { s2.0 };
            let h = if s1.1.cmp_exact(&s2.1) == std::cmp::Ordering::Less { s1.1 } else { s2.1 };
            if l.cmp_exact(&h) != std::cmp::Ordering::Greater {
                merge(Some((l, h)));
            }
        }
    }
    match (lo, hi) {
        (Some(l), Some(h)) => Some((l, h)),
        _ => None,
    }
}

/// Solutions of `lo_val <= base + t*slope <= hi_val` clamped to [0, 1].
fn linear_range(base: &Real, slope: &Real, lo_val: &Real, hi_val: &Real) -> Option<(Real, Real)> {
    match slope.sign() {
        0 => {
            let inside = base.cmp_exact(lo_val) != std::cmp::Ordering::Less
                && base.cmp_exact(hi_val) != std::cmp::Ordering::Greater;
            inside.then(|| (Real::zero(), Real::one()))
        }
        s => {
            let t1 = lo_val.sub(base).div(slope).expect("slope nonzero");
            let t2 = hi_val.sub(base).div(slope).expect("slope nonzero");
            let (mut l, mut h) = if s > 0 { (t1, t2) } else { (t2, t1) };
            if l.is_negative() {
                l = Real::zero();
            }
            if h.cmp_exact(&Real::one()) == std::cmp::Ordering::Greater {
                h = Real::one();
            }
            (l.cmp_exact(&h) != std::cmp::Ordering::Greater).then_some((l, h))
        }
    }
}

/// Every point of [a, b] lies within squared distance `limit2` of the ring:
/// the per-edge capsule intervals must cover [0, 1].
pub fn segment_within_of_ring(a: &Point, b: &Point, ring: &[Point], limit2: &Real) -> bool {
    let n = ring.len();
    let mut intervals: Vec<(Real, Real)> = Vec::new();
    for i in 0..n {
        if let Some(iv) = capsule_interval(a, b, &ring[i], &ring[(i + 1) % n], limit2) {
            intervals.push(iv);
        }
    }
    intervals.sort_by(|x, y| x.0.cmp_exact(&y.0));
    let mut covered = Real::zero();
    for (l, h) in intervals {
        if l.cmp_exact(&covered) == std::cmp::Ordering::Greater {
            return false;
        }
        if h.cmp_exact(&covered) == std::cmp::Ordering::Greater {
            covered = h;
            if covered.cmp_exact(&Real::one()) != std::cmp::Ordering::Less {
                return true;
            }
        }
    }
    false
}
