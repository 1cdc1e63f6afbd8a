//! The robot's structured memory and its canonical bit-string form.
//!
//! The decoded form holds every vertex the robot has seen (rational
//! coordinates in the current frame), visit flags, discovered adjacency,
//! the current phase of the exploration, and transit bookkeeping. The
//! serialization is self-delimiting and fixed field-by-field, so a bare bit
//! string decodes unambiguously or fails; `decode(encode(m)) == m` and
//! `encode(decode(b)) == b` for valid `b`.
//!
//! Integers inside memory use the Elias-gamma code rather than the unary
//! code of the plain number codes: the layout of the memory is this
//! module's to fix, and gamma keeps coordinate numerators from expanding
//! the code length linearly in their magnitude.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::bits::{BitReader, BitString, BitsError};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MemoryError {
    #[error(transparent)]
    Bits(#[from] BitsError),
    #[error("invalid tag value {0} for field {1}")]
    BadTag(u64, &'static str),
    #[error("frame index out of range")]
    BadFrameIndex,
    #[error("non-canonical rational in memory")]
    NonCanonical,
    #[error("coincident frame points")]
    CoincidentFramePoints,
}

/// Gamma code: value n >= 0 encodes n+1 as (len-1) zeros then the binary
/// digits of n+1 (which begin with 1).
fn put_gamma(out: &mut BitString, n: u64) {
    let v = n + 1;
    let len = 64 - v.leading_zeros() as usize;
    for _ in 0..len - 1 {
        out.push(false);
    }
    for i in (0..len).rev() {
        out.push(v >> i & 1 == 1);
    }
}

fn get_gamma(r: &mut BitReader) -> Result<u64, MemoryError> {
    let mut zeros = 0usize;
    while !r.read_bit()? {
        zeros += 1;
        if zeros > 63 {
            return Err(MemoryError::BadTag(zeros as u64, "gamma length"));
        }
    }
    let mut v: u64 = 1;
    for _ in 0..zeros {
        v = (v << 1) | r.read_bit()? as u64;
    }
    Ok(v - 1)
}

fn put_bigint_mag(out: &mut BitString, n: &BigInt) {
    let bits = n.bits();
    put_gamma(out, bits);
    for i in (0..bits).rev() {
        out.push(n.bit(i));
    }
}

fn get_bigint_mag(r: &mut BitReader) -> Result<BigInt, MemoryError> {
    let bits = get_gamma(r)?;
    let mut n = BigInt::zero();
    for _ in 0..bits {
        n <<= 1;
        if r.read_bit()? {
            n += 1;
        }
    }
    // Canonical: the stated bit length matches (no leading-zero padding).
    if n.bits() != bits {
        return Err(MemoryError::NonCanonical);
    }
    Ok(n)
}

fn put_rational(out: &mut BitString, x: &BigRational) {
    out.push(x.is_negative());
    put_bigint_mag(out, &x.numer().abs());
    put_bigint_mag(out, x.denom());
}

fn get_rational(r: &mut BitReader) -> Result<BigRational, MemoryError> {
    let neg = r.read_bit()?;
    let p = get_bigint_mag(r)?;
    let q = get_bigint_mag(r)?;
    if q.is_zero() {
        return Err(MemoryError::NonCanonical);
    }
    if !p.is_zero() && num_integer::gcd(p.clone(), q.clone()) != BigInt::one() {
        return Err(MemoryError::NonCanonical);
    }
    if p.is_zero() && (neg || !q.is_one()) {
        return Err(MemoryError::NonCanonical);
    }
    let mag = BigRational::new(p, q);
    Ok(if neg { -mag } else { mag })
}

fn put_opt_index(out: &mut BitString, v: Option<usize>) {
    match v {
        None => out.push(false),
        Some(i) => {
            out.push(true);
            put_gamma(out, i as u64);
        }
    }
}

fn get_opt_index(r: &mut BitReader) -> Result<Option<usize>, MemoryError> {
    if r.read_bit()? {
        Ok(Some(get_gamma(r)? as usize))
    } else {
        Ok(None)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VisitFlag {
    Unvisited,
    VisitedOnce,
    Visited,
}

/// One remembered point: a true polygon vertex unless `undefined` is set,
/// in which case it is an occlusion endpoint carried verbatim from a
/// snapshot and never counted as a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexRecord {
    pub x: BigRational,
    pub y: BigRational,
    pub flag: VisitFlag,
    pub undefined: bool,
    /// Successor along the vertex's boundary component, once walked.
    pub succ: Option<usize>,
    /// Component label, assigned when the component is first toured.
    pub component: Option<usize>,
}

impl VertexRecord {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        VertexRecord {
            x,
            y,
            flag: VisitFlag::Unvisited,
            undefined: false,
            succ: None,
            component: None,
        }
    }
}

/// Micro-phase inside the second tour of one vertex (reflex corners take
/// two snapshots around the external-angle bisector).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TourProgress {
    Walk,
    FirstSnap,
    SecondSnap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Phase {
    FirstTour,
    SecondTour {
        /// Separation code for the inward offset; tour points stay within
        /// d/2 of the component.
        d: BigRational,
        progress: TourProgress,
    },
    Transit {
        /// Departure vertex (visited) and destination vertex (unvisited or
        /// an intermediate retrace stop), as memory indices.
        anchor: usize,
        target: usize,
        /// Rational approximation of (anchor - target)/2 in the robot's
        /// orientation-true local coordinates, present while on the tent.
        w: Option<(BigRational, BigRational)>,
    },
    Done,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RobotMemory {
    /// Indices of the two frame-defining vertices (origin, unit point).
    pub frame: (usize, usize),
    pub vertices: Vec<VertexRecord>,
    pub phase: Phase,
    /// Legal transits taken so far, usable in both directions for retraces.
    pub transit_edges: Vec<(usize, usize)>,
}

impl RobotMemory {
    pub fn encode(&self) -> BitString {
        let mut out = BitString::new();
        match &self.phase {
            Phase::FirstTour => put_gamma(&mut out, 0),
            Phase::SecondTour { d, progress } => {
                put_gamma(&mut out, 1);
                put_rational(&mut out, d);
                put_gamma(
                    &mut out,
                    match progress {
                        TourProgress::Walk => 0,
                        TourProgress::FirstSnap => 1,
                        TourProgress::SecondSnap => 2,
                    },
                );
            }
            Phase::Transit { anchor, target, w } => {
                put_gamma(&mut out, 2);
                put_gamma(&mut out, *anchor as u64);
                put_gamma(&mut out, *target as u64);
                match w {
                    None => out.push(false),
                    Some((wx, wy)) => {
                        out.push(true);
                        put_rational(&mut out, wx);
                        put_rational(&mut out, wy);
                    }
                }
            }
            Phase::Done => put_gamma(&mut out, 3),
        }
        put_gamma(&mut out, self.frame.0 as u64);
        put_gamma(&mut out, self.frame.1 as u64);
        put_gamma(&mut out, self.vertices.len() as u64);
        for v in &self.vertices {
            put_rational(&mut out, &v.x);
            put_rational(&mut out, &v.y);
            put_gamma(
                &mut out,
                match v.flag {
                    VisitFlag::Unvisited => 0,
                    VisitFlag::VisitedOnce => 1,
                    VisitFlag::Visited => 2,
                },
            );
            out.push(v.undefined);
            put_opt_index(&mut out, v.succ);
            put_opt_index(&mut out, v.component);
        }
        put_gamma(&mut out, self.transit_edges.len() as u64);
        for (a, b) in &self.transit_edges {
            put_gamma(&mut out, *a as u64);
            put_gamma(&mut out, *b as u64);
        }
        out
    }

    pub fn decode(bits: &BitString) -> Result<Self, MemoryError> {
        let mut r = BitReader::new(bits);
        let phase = match get_gamma(&mut r)? {
            0 => Phase::FirstTour,
            1 => {
                let d = get_rational(&mut r)?;
                let progress = match get_gamma(&mut r)? {
                    0 => TourProgress::Walk,
                    1 => TourProgress::FirstSnap,
                    2 => TourProgress::SecondSnap,
                    t => return Err(MemoryError::BadTag(t, "tour progress")),
                };
                Phase::SecondTour { d, progress }
            }
            2 => {
                let anchor = get_gamma(&mut r)? as usize;
                let target = get_gamma(&mut r)? as usize;
                let w = if r.read_bit()? {
                    Some((get_rational(&mut r)?, get_rational(&mut r)?))
                } else {
                    None
                };
                Phase::Transit { anchor, target, w }
            }
            3 => Phase::Done,
            t => return Err(MemoryError::BadTag(t, "phase")),
        };
        let frame = (get_gamma(&mut r)? as usize, get_gamma(&mut r)? as usize);
        let n = get_gamma(&mut r)? as usize;
        let mut vertices = Vec::with_capacity(n);
        for _ in 0..n {
            let x = get_rational(&mut r)?;
            let y = get_rational(&mut r)?;
            let flag = match get_gamma(&mut r)? {
                0 => VisitFlag::Unvisited,
                1 => VisitFlag::VisitedOnce,
                2 => VisitFlag::Visited,
                t => return Err(MemoryError::BadTag(t, "visit flag")),
            };
            let undefined = r.read_bit()?;
            let succ = get_opt_index(&mut r)?;
            let component = get_opt_index(&mut r)?;
            vertices.push(VertexRecord { x, y, flag, undefined, succ, component });
        }
        let m = get_gamma(&mut r)? as usize;
        let mut transit_edges = Vec::with_capacity(m);
        for _ in 0..m {
            let a = get_gamma(&mut r)? as usize;
            let b = get_gamma(&mut r)? as usize;
            transit_edges.push((a, b));
        }
        r.finish()?;
        let mem = RobotMemory { frame, vertices, phase, transit_edges };
        mem.validate()?;
        Ok(mem)
    }

    pub fn validate(&self) -> Result<(), MemoryError> {
        let n = self.vertices.len();
        let ok_idx = |i: usize| i < n;
        if n > 0 && (!ok_idx(self.frame.0) || !ok_idx(self.frame.1)) {
            return Err(MemoryError::BadFrameIndex);
        }
        for v in &self.vertices {
            if let Some(s) = v.succ {
                if !ok_idx(s) {
                    return Err(MemoryError::BadFrameIndex);
                }
            }
        }
        if let Phase::Transit { anchor, target, .. } = &self.phase {
            if !ok_idx(*anchor) || !ok_idx(*target) {
                return Err(MemoryError::BadFrameIndex);
            }
        }
        for (a, b) in &self.transit_edges {
            if !ok_idx(*a) || !ok_idx(*b) {
                return Err(MemoryError::BadFrameIndex);
            }
        }
        Ok(())
    }

    /// Index of the true-vertex record at exactly (x, y), if present.
    pub fn find_vertex(&self, x: &BigRational, y: &BigRational) -> Option<usize> {
        self.vertices
            .iter()
            .position(|v| !v.undefined && &v.x == x && &v.y == y)
    }

    pub fn unvisited_exists(&self) -> bool {
        self.vertices
            .iter()
            .any(|v| !v.undefined && v.flag == VisitFlag::Unvisited)
    }

    /// Rewrite all coordinates into a new frame, given the old frame's two
    /// defining points expressed in the new frame. Flags and phase survive
    /// unchanged; `w` is orientation-absolute and also survives.
    pub fn transform_frame(
        &self,
        old_origin: (BigRational, BigRational),
        old_unit: (BigRational, BigRational),
    ) -> Result<RobotMemory, MemoryError> {
        if old_origin == old_unit {
            return Err(MemoryError::CoincidentFramePoints);
        }
        let ex = (&old_unit.0 - &old_origin.0, &old_unit.1 - &old_origin.1);
        // Same handedness: the old y-axis maps to the left normal of ex.
        let ey = (-ex.1.clone(), ex.0.clone());
        let map = |x: &BigRational, y: &BigRational| {
            (
                &old_origin.0 + &(x * &ex.0) + &(y * &ey.0),
                &old_origin.1 + &(x * &ex.1) + &(y * &ey.1),
            )
        };
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                let (x, y) = map(&v.x, &v.y);
                VertexRecord { x, y, ..v.clone() }
            })
            .collect();
        Ok(RobotMemory { vertices, ..self.clone() })
    }
}

/// Snapshot in code form: endpoint records of the maximal visible segments,
/// either exact frame coordinates or the `undefined` occlusion flag with
/// the fixed placeholder point (0, 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnapshotCode {
    pub endpoints: Vec<SnapshotEndpoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SnapshotEndpoint {
    Vertex(BigRational, BigRational),
    Undefined,
}

impl SnapshotCode {
    /// Number-code form: a count followed by per-endpoint records, using
    /// the unary integer code throughout.
    pub fn encode(&self) -> Result<BitString, super::code::CodeError> {
        use super::code::{encode_rational, encode_uint_usize};
        let mut out = encode_uint_usize(self.endpoints.len());
        for e in &self.endpoints {
            match e {
                SnapshotEndpoint::Vertex(x, y) => {
                    out.extend(&encode_uint_usize(0));
                    out.extend(&encode_rational(x)?);
                    out.extend(&encode_rational(y)?);
                }
                SnapshotEndpoint::Undefined => {
                    out.extend(&encode_uint_usize(1));
                    // Placeholder point, kept so every record has the same
                    // shape on the wire.
                    out.extend(&encode_rational(&BigRational::zero())?);
                    out.extend(&encode_rational(&BigRational::zero())?);
                }
            }
        }
        Ok(out)
    }

    pub fn decode(bits: &BitString) -> Result<Self, super::code::CodeError> {
        use super::code::{decode_rational, decode_uint};
        use num_traits::ToPrimitive;
        let mut r = BitReader::new(bits);
        let n = decode_uint(&mut r)?
            .to_usize()
            .ok_or(super::code::CodeError::UnaryOverflow)?;
        let mut endpoints = Vec::with_capacity(n);
        for _ in 0..n {
            let tag = decode_uint(&mut r)?;
            let x = decode_rational(&mut r)?;
            let y = decode_rational(&mut r)?;
            if tag.is_zero() {
                endpoints.push(SnapshotEndpoint::Vertex(x, y));
            } else if tag.is_one() {
                if !x.is_zero() || !y.is_zero() {
                    return Err(super::code::CodeError::NonCanonicalRational);
                }
                endpoints.push(SnapshotEndpoint::Undefined);
            } else {
                return Err(super::code::CodeError::BadAlgebraic);
            }
        }
        r.finish().map_err(super::code::CodeError::Bits)?;
        Ok(SnapshotCode { endpoints })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};

    fn sample_memory() -> RobotMemory {
        RobotMemory {
            frame: (0, 1),
            vertices: vec![
                VertexRecord {
                    x: rat_int(0),
                    y: rat_int(0),
                    flag: VisitFlag::VisitedOnce,
                    undefined: false,
                    succ: Some(1),
                    component: Some(0),
                },
                VertexRecord {
                    x: rat_int(1),
                    y: rat_int(0),
                    flag: VisitFlag::Unvisited,
                    undefined: false,
                    succ: None,
                    component: None,
                },
                VertexRecord::new(rat_int(1), rat(3, 2)),
            ],
            phase: Phase::FirstTour,
            transit_edges: vec![],
        }
    }

    #[test]
    fn roundtrip_structurally_equal() {
        let m = sample_memory();
        let bits = m.encode();
        let back = RobotMemory::decode(&bits).unwrap();
        assert_eq!(m, back);
        assert_eq!(back.encode(), bits);
    }

    #[test]
    fn empty_memory_roundtrip() {
        let m = RobotMemory {
            frame: (0, 0),
            vertices: vec![],
            phase: Phase::Done,
            transit_edges: vec![],
        };
        let bits = m.encode();
        assert_eq!(RobotMemory::decode(&bits).unwrap(), m);
    }

    #[test]
    fn truncation_and_trailing_rejected() {
        let m = sample_memory();
        let bits = m.encode();
        let mut truncated = BitString::new();
        for &b in &bits.bits()[..bits.len() - 3] {
            truncated.push(b);
        }
        assert!(RobotMemory::decode(&truncated).is_err());
        let mut extended = bits.clone();
        extended.push(true);
        assert!(RobotMemory::decode(&extended).is_err());
    }

    #[test]
    fn concatenated_codes_never_decode_as_one() {
        let m = sample_memory();
        let mut double = m.encode();
        double.extend(&m.encode());
        assert!(RobotMemory::decode(&double).is_err());
    }

    #[test]
    fn bit_flips_never_silently_equal() {
        let m = sample_memory();
        let bits = m.encode();
        for i in 0..bits.len() {
            let mut mutated = bits.clone();
            mutated.flip(i);
            match RobotMemory::decode(&mutated) {
                Err(_) => {}
                Ok(other) => assert_ne!(other, m, "flip at bit {i} decoded back to the original"),
            }
        }
    }

    #[test]
    fn frame_transform_examples() {
        let m = sample_memory();
        // Identity: old frame expressed in itself.
        let id = m
            .transform_frame((rat_int(0), rat_int(0)), (rat_int(1), rat_int(0)))
            .unwrap();
        assert_eq!(id, m);

        // Global (3,4) into the frame (u=(1,1), v=(3,1)) is (1, 3/2):
        // the inverse map sends (1, 3/2) back to (3, 4).
        let mut n = sample_memory();
        n.vertices[2].x = rat_int(1);
        n.vertices[2].y = rat(3, 2);
        let out = n
            .transform_frame((rat_int(1), rat_int(1)), (rat_int(3), rat_int(1)))
            .unwrap();
        assert_eq!(out.vertices[2].x, rat_int(3));
        assert_eq!(out.vertices[2].y, rat_int(4));

        // Composition equals the composed single change.
        let f1 = ((rat_int(1), rat_int(1)), (rat_int(3), rat_int(1)));
        let step1 = n.transform_frame(f1.0.clone(), f1.1.clone()).unwrap();
        let f2 = ((rat_int(0), rat_int(2)), (rat_int(0), rat_int(0)));
        let step2 = step1.transform_frame(f2.0.clone(), f2.1.clone()).unwrap();
        // Direct: compose the affine maps on the sample point.
        let direct = n
            .transform_frame(
                {
                    let m0 = RobotMemory {
                        vertices: vec![
                            VertexRecord::new(f1.0 .0.clone(), f1.0 .1.clone()),
                            VertexRecord::new(f1.1 .0.clone(), f1.1 .1.clone()),
                        ],
                        ..n.clone()
                    };
                    let t = m0.transform_frame(f2.0.clone(), f2.1.clone()).unwrap();
                    (t.vertices[0].x.clone(), t.vertices[0].y.clone())
                },
                {
                    let m0 = RobotMemory {
                        vertices: vec![VertexRecord::new(f1.1 .0.clone(), f1.1 .1.clone())],
                        ..n.clone()
                    };
                    let t = m0.transform_frame(f2.0.clone(), f2.1.clone()).unwrap();
                    (t.vertices[0].x.clone(), t.vertices[0].y.clone())
                },
            )
            .unwrap();
        assert_eq!(step2.vertices, direct.vertices);

        assert!(n
            .transform_frame((rat_int(1), rat_int(1)), (rat_int(1), rat_int(1)))
            .is_err());
    }

    #[test]
    fn snapshot_code_roundtrip() {
        let s = SnapshotCode {
            endpoints: vec![
                SnapshotEndpoint::Vertex(rat_int(1), rat(3, 2)),
                SnapshotEndpoint::Undefined,
                SnapshotEndpoint::Vertex(rat(-1, 2), rat_int(0)),
            ],
        };
        let bits = s.encode().unwrap();
        assert_eq!(SnapshotCode::decode(&bits).unwrap(), s);

        let empty = SnapshotCode { endpoints: vec![] };
        let bits = empty.encode().unwrap();
        assert_eq!(bits.to_string(), "1");
        assert_eq!(SnapshotCode::decode(&bits).unwrap(), empty);
    }
}
