//! Exact arithmetic over constructible reals (rationals closed under square
//! roots) with decidable sign, plus polynomial real-root counting.

pub mod interval;
pub mod poly;
pub mod rational;
pub mod real;
mod tower;

pub use interval::Interval;
pub use poly::{MonicPoly, PolyError};
pub use rational::{format_rational, parse_rational, rat, rat_int, ParseRationalError};
pub use real::{ExactError, Real};

use num_rational::BigRational;
use std::cmp::Ordering;

/// Exact sign of a constructible real: -1, 0, or +1.
pub fn sign(a: &Real) -> i8 {
    a.sign()
}

/// Total order on constructible reals, consistent with their values.
pub fn cmp(a: &Real, b: &Real) -> Ordering {
    a.cmp_exact(b)
}

/// Interval of width `< eps` containing `a`.
pub fn to_interval(a: &Real, eps: &BigRational) -> Interval {
    a.to_interval(eps)
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_count(p: &MonicPoly, lo: &BigRational, hi: &BigRational) -> Result<usize, PolyError> {
    p.count_roots(lo, hi)
}

/// Isolating interval for the `index`-th smallest real root (1-based).
pub fn isolate_root(p: &MonicPoly, index: usize) -> Result<(BigRational, BigRational), PolyError> {
    p.isolate_root(index)
}
