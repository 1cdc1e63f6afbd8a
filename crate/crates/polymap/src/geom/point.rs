//! Exact points and vector helpers.

use num_rational::BigRational;

use crate::exact::{rat, Real};

/// A point (or free vector) with constructible-real coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point {
    pub x: Real,
    pub y: Real,
}

impl Point {
    pub fn new(x: Real, y: Real) -> Self {
        Point { x, y }
    }

    pub fn from_rationals(x: BigRational, y: BigRational) -> Self {
        Point::new(Real::from_rational(x), Real::from_rational(y))
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Real::from_int(x), Real::from_int(y))
    }

    pub fn from_fractions(x: (i64, i64), y: (i64, i64)) -> Self {
        Point::from_rationals(rat(x.0, x.1), rat(y.0, y.1))
    }

    pub fn add(&self, v: &Point) -> Point {
        Point::new(self.x.add(&v.x), self.y.add(&v.y))
    }

    pub fn sub(&self, v: &Point) -> Point {
        Point::new(self.x.sub(&v.x), self.y.sub(&v.y))
    }

    pub fn scale(&self, k: &Real) -> Point {
        Point::new(self.x.mul(k), self.y.mul(k))
    }

    pub fn dot(&self, v: &Point) -> Real {
        self.x.mul(&v.x).add(&self.y.mul(&v.y))
    }

    pub fn cross(&self, v: &Point) -> Real {
        self.x.mul(&v.y).sub(&self.y.mul(&v.x))
    }

    /// Left (counterclockwise) perpendicular.
    pub fn perp(&self) -> Point {
        Point::new(self.y.neg(), self.x.clone())
    }

    pub fn norm2(&self) -> Real {
        self.dot(self)
    }

    pub fn dist2(&self, other: &Point) -> Real {
        self.sub(other).norm2()
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        self.add(other).scale(&Real::from_rational(rat(1, 2)))
    }

    /// Exact rational coordinates when both components are rational.
    pub fn to_rationals(&self) -> Option<(BigRational, BigRational)> {
        Some((self.x.to_rational()?, self.y.to_rational()?))
    }

    /// Rotate `self` (as a vector) by the angle `theta` with
    /// `tan(theta/2) = t`; counterclockwise for `ccw`. The rotation matrix
    /// is rational in `t`, so no new radicals appear.
    pub fn rotate_half_tan(&self, t: &Real, ccw: bool) -> Point {
        let one = Real::one();
        let t2 = t.mul(t);
        let denom = one.add(&t2);
        let cos = one.sub(&t2).div(&denom).expect("1 + t^2 > 0");
        let sin = {
            let two_t = t.add(t);
            let s = two_t.div(&denom).expect("1 + t^2 > 0");
            if ccw {
                s
            } else {
                s.neg()
            }
        };
        Point::new(
            self.x.mul(&cos).sub(&self.y.mul(&sin)),
            self.x.mul(&sin).add(&self.y.mul(&cos)),
        )
    }
}

/// Orientation of the triple (a, b, c): sign of the cross product of
/// (b - a) and (c - a). Positive = counterclockwise.
pub fn orient(a: &Point, b: &Point, c: &Point) -> i8 {
    b.sub(a).cross(&c.sub(a)).sign()
}

/// True if `p` lies on the closed segment [a, b].
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if orient(a, b, p) != 0 {
        return false;
    }
    let ap = p.sub(a);
    let ab = b.sub(a);
    let d = ap.dot(&ab);
    !d.is_negative() && d.cmp_exact(&ab.norm2()) != std::cmp::Ordering::Greater
}

/// Squared distance from `p` to the closed segment [a, b].
pub fn dist2_point_segment(p: &Point, a: &Point, b: &Point) -> Real {
    let ab = b.sub(a);
    let ap = p.sub(a);
    let len2 = ab.norm2();
    if len2.is_zero() {
        return ap.norm2();
    }
    let t = ap.dot(&ab);
    if t.is_negative() {
        return ap.norm2();
    }
    if t.cmp_exact(&len2) == std::cmp::Ordering::Greater {
        return p.dist2(b);
    }
    // Distance to the line: cross^2 / |ab|^2.
    let c = ap.cross(&ab);
    c.mul(&c).div(&len2).expect("len2 > 0")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_examples() {
        // t = 1 is a quarter turn: (1,0) -> (0,1) ccw.
        let p = Point::from_ints(1, 0);
        let q = p.rotate_half_tan(&Real::one(), true);
        assert_eq!(q, Point::from_ints(0, 1));
        // t = 1/2 gives cos = 3/5, sin = 4/5: (5,0) -> (3,4).
        let p = Point::from_ints(5, 0);
        let q = p.rotate_half_tan(&Real::from_rational(rat(1, 2)), true);
        assert_eq!(q, Point::from_ints(3, 4));
    }

    #[test]
    fn segment_distance() {
        let a = Point::from_ints(0, 0);
        let b = Point::from_ints(4, 0);
        let p = Point::from_ints(2, 3);
        assert_eq!(dist2_point_segment(&p, &a, &b), Real::from_int(9));
        let q = Point::from_ints(6, 0);
        assert_eq!(dist2_point_segment(&q, &a, &b), Real::from_int(4));
    }

    #[test]
    fn on_segment_checks_bounds() {
        let a = Point::from_ints(0, 0);
        let b = Point::from_ints(4, 4);
        assert!(on_segment(&Point::from_ints(2, 2), &a, &b));
        assert!(!on_segment(&Point::from_ints(5, 5), &a, &b));
        assert!(!on_segment(&Point::from_ints(2, 1), &a, &b));
    }
}
