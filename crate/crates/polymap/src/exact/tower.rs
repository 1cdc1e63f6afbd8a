//! Normal forms over towers of real quadratic extensions.
//!
//! A tower is a list of radicands `r_1, ..., r_n`; level k adjoins
//! `sqrt(r_k)` where `r_k` is a positive element of the level-(k-1) field
//! that is not a square there. Elements are coefficient trees
//! `a + b*sqrt(r_k)` with `a`, `b` from lower levels. Within such a tower,
//! equality and sign are decidable by recursion, which is what makes every
//! comparison in the system exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq)]
pub enum Elem {
    Rat(BigRational),
    /// `a + b * sqrt(radicand(lvl))`, `lvl` is 1-based into the tower.
    Ext { lvl: usize, a: Box<Elem>, b: Box<Elem> },
}

/// Shared list of radicands. `rads[k-1]` is the level-k radicand, an `Elem`
/// whose own levels are all `< k`.
pub type Tower = Arc<Vec<Elem>>;

pub fn trivial_tower() -> Tower {
    Arc::new(Vec::new())
}

impl Elem {
    pub fn zero() -> Self {
        Elem::Rat(BigRational::zero())
    }

    pub fn from_rat(x: BigRational) -> Self {
        Elem::Rat(x)
    }

    pub fn level(&self) -> usize {
        match self {
            Elem::Rat(_) => 0,
            Elem::Ext { lvl, .. } => *lvl,
        }
    }

    /// Split as `(a, b)` relative to level `lvl`: `self = a + b*sqrt(r_lvl)`.
    fn split(&self, lvl: usize) -> (Elem, Elem) {
        match self {
            Elem::Ext { lvl: l, a, b } if *l == lvl => ((**a).clone(), (**b).clone()),
            _ => {
                debug_assert!(self.level() < lvl);
                (self.clone(), Elem::zero())
            }
        }
    }

    pub fn is_rat(&self) -> Option<&BigRational> {
        match self {
            Elem::Rat(x) => Some(x),
            _ => None,
        }
    }
}

/// Structural zero test; sound because construction keeps coefficients of
/// genuine extensions, so `a + b*sqrt(r) = 0` with `b != 0` would force
/// `sqrt(r)` into the lower field.
pub fn is_zero(x: &Elem, tower: &[Elem]) -> bool {
    sign(x, tower) == 0
}

pub fn sign(x: &Elem, tower: &[Elem]) -> i8 {
    match x {
        Elem::Rat(r) => {
            if r.is_zero() {
                0
            } else if r.is_positive() {
                1
            } else {
                -1
            }
        }
        Elem::Ext { lvl, a, b } => {
            let sa = sign(a, tower);
            let sb = sign(b, tower);
            if sb == 0 {
                return sa;
            }
            if sa == 0 {
                return sb; // sqrt(r) > 0
            }
            if sa == sb {
                return sa;
            }
            // Opposite signs: compare a^2 against b^2 * r exactly.
            let r = &tower[*lvl - 1];
            let a2 = mul(a, a, tower);
            let b2r = mul(&mul(b, b, tower), r, tower);
            match sign(&sub(&a2, &b2r, tower), tower) {
                0 => 0,
                1 => sa,
                _ => sb,
            }
        }
    }
}

fn ext(lvl: usize, a: Elem, b: Elem, tower: &[Elem]) -> Elem {
    if is_zero(&b, tower) {
        a
    } else {
        Elem::Ext { lvl, a: Box::new(a), b: Box::new(b) }
    }
}

pub fn add(x: &Elem, y: &Elem, tower: &[Elem]) -> Elem {
    match (x, y) {
        (Elem::Rat(p), Elem::Rat(q)) => Elem::Rat(p + q),
        _ => {
            let lvl = x.level().max(y.level());
            let (xa, xb) = x.split(lvl);
            let (ya, yb) = y.split(lvl);
            ext(lvl, add(&xa, &ya, tower), add(&xb, &yb, tower), tower)
        }
    }
}

pub fn neg(x: &Elem) -> Elem {
    match x {
        Elem::Rat(r) => Elem::Rat(-r),
        Elem::Ext { lvl, a, b } => Elem::Ext {
            lvl: *lvl,
            a: Box::new(neg(a)),
            b: Box::new(neg(b)),
        },
    }
}

pub fn sub(x: &Elem, y: &Elem, tower: &[Elem]) -> Elem {
    add(x, &neg(y), tower)
}

pub fn mul(x: &Elem, y: &Elem, tower: &[Elem]) -> Elem {
    match (x, y) {
        (Elem::Rat(p), Elem::Rat(q)) => Elem::Rat(p * q),
        _ => {
            let lvl = x.level().max(y.level());
            let (xa, xb) = x.split(lvl);
            let (ya, yb) = y.split(lvl);
            let r = &tower[lvl - 1];
            let aa = mul(&xa, &ya, tower);
            let bb = mul(&xb, &yb, tower);
            let a = add(&aa, &mul(&bb, r, tower), tower);
            let b = add(&mul(&xa, &yb, tower), &mul(&xb, &ya, tower), tower);
            ext(lvl, a, b, tower)
        }
    }
}

/// Multiplicative inverse; `x` must be nonzero.
pub fn inv(x: &Elem, tower: &[Elem]) -> Elem {
    match x {
        Elem::Rat(r) => Elem::Rat(r.recip()),
        Elem::Ext { lvl, a, b } => {
            // 1/(a + b sqrt r) = (a - b sqrt r) / (a^2 - b^2 r); the norm is
            // nonzero because r is not a square one level down.
            let r = &tower[*lvl - 1];
            let norm = sub(&mul(a, a, tower), &mul(&mul(b, b, tower), r, tower), tower);
            let ninv = inv(&norm, tower);
            ext(*lvl, mul(a, &ninv, tower), mul(&neg(b), &ninv, tower), tower)
        }
    }
}

pub fn div(x: &Elem, y: &Elem, tower: &[Elem]) -> Elem {
    mul(x, &inv(y, tower), tower)
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let ns = x.numer().sqrt();
    let ds = x.denom().sqrt();
    if &(&ns * &ns) == x.numer() && &(&ds * &ds) == x.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

/// Nonnegative square root of `x` within the field of `rads`, if one exists.
/// `x` must be a nonnegative value.
pub fn sqrt_in(x: &Elem, rads: &[Elem]) -> Option<Elem> {
    let n = rads.len();
    if n == 0 {
        let r = x.is_rat().expect("level-0 element");
        return rational_sqrt(r).map(Elem::Rat);
    }
    let prefix = &rads[..n - 1];
    let top = &rads[n - 1];
    let (a, b) = x.split(n);
    let result = if is_zero(&b, rads) {
        // x lies below the top level: sqrt may be c or d*sqrt(r_n).
        if let Some(c) = sqrt_in(&a, prefix) {
            Some(c)
        } else {
            let q = div(&a, top, rads);
            sqrt_in(&q, prefix).map(|d| ext(n, Elem::zero(), d, rads))
        }
    } else {
        // (c + d sqrt r)^2 = x needs sqrt(a^2 - b^2 r) one level down.
        let disc = sub(&mul(&a, &a, rads), &mul(&mul(&b, &b, rads), top, rads), rads);
        let s = sqrt_in(&disc, prefix)?;
        let half = Elem::Rat(BigRational::new(BigInt::from(1), BigInt::from(2)));
        let mut found = None;
        for t in [
            mul(&add(&a, &s, rads), &half, rads),
            mul(&sub(&a, &s, rads), &half, rads),
        ] {
            if sign(&t, rads) < 0 {
                continue;
            }
            if let Some(c) = sqrt_in(&t, prefix) {
                if is_zero(&c, rads) {
                    continue;
                }
                let d = div(&mul(&b, &half, rads), &c, rads);
                let cand = ext(n, c, d, rads);
                let square = mul(&cand, &cand, rads);
                if is_zero(&sub(&square, x, rads), rads) {
                    found = Some(cand);
                    break;
                }
            }
        }
        found
    };
    result.map(|e| if sign(&e, rads) < 0 { neg(&e) } else { e })
}

/// Rewrite `x`, an element over `from`, as an element over the tower whose
/// radicands are `rads`, given `map[j]` = representation of `sqrt(from[j])`.
fn reexpress(x: &Elem, map: &[Elem], rads: &[Elem]) -> Elem {
    match x {
        Elem::Rat(r) => Elem::Rat(r.clone()),
        Elem::Ext { lvl, a, b } => {
            let a = reexpress(a, map, rads);
            let b = reexpress(b, map, rads);
            add(&a, &mul(&b, &map[*lvl - 1], rads), rads)
        }
    }
}

/// Merge two towers. Returns the combined tower plus rewriting maps for
/// elements of each input tower.
pub struct Merged {
    pub tower: Tower,
    map_a: Vec<Elem>,
    map_b: Vec<Elem>,
}

impl Merged {
    pub fn lift_a(&self, x: &Elem) -> Elem {
        reexpress(x, &self.map_a, &self.tower)
    }
    pub fn lift_b(&self, x: &Elem) -> Elem {
        reexpress(x, &self.map_b, &self.tower)
    }
}

pub fn merge(a: &Tower, b: &Tower) -> Merged {
    if Arc::ptr_eq(a, b) || b.is_empty() {
        let map_a = identity_map(a.len());
        let map_b = map_a.clone();
        return Merged { tower: a.clone(), map_a, map_b };
    }
    if a.is_empty() {
        let map_b = identity_map(b.len());
        return Merged { tower: b.clone(), map_a: Vec::new(), map_b };
    }
    let mut rads: Vec<Elem> = (**a).clone();
    let map_a = identity_map(a.len());
    let mut map_b = Vec::with_capacity(b.len());
    for r in b.iter() {
        let r_new = reexpress(r, &map_b, &rads);
        match sqrt_in(&r_new, &rads) {
            Some(s) => map_b.push(s),
            None => {
                rads.push(r_new);
                let lvl = rads.len();
                map_b.push(Elem::Ext {
                    lvl,
                    a: Box::new(Elem::zero()),
                    b: Box::new(Elem::Rat(BigRational::from(BigInt::from(1)))),
                });
            }
        }
    }
    Merged { tower: Arc::new(rads), map_a, map_b }
}

fn identity_map(n: usize) -> Vec<Elem> {
    (1..=n)
        .map(|lvl| Elem::Ext {
            lvl,
            a: Box::new(Elem::zero()),
            b: Box::new(Elem::Rat(BigRational::from(BigInt::from(1)))),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};

    fn tower_of(rads: &[BigRational]) -> Tower {
        // builds Q(sqrt r1)(sqrt r2)... assuming each genuinely extends
        Arc::new(rads.iter().cloned().map(Elem::Rat).collect())
    }

    fn root(lvl: usize) -> Elem {
        Elem::Ext {
            lvl,
            a: Box::new(Elem::zero()),
            b: Box::new(Elem::Rat(rat_int(1))),
        }
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let t = tower_of(&[rat_int(2)]);
        let s = root(1);
        let sq = mul(&s, &s, &t);
        assert!(is_zero(&sub(&sq, &Elem::Rat(rat_int(2)), &t), &t));
    }

    #[test]
    fn sign_of_mixed_terms() {
        let t = tower_of(&[rat_int(2)]);
        // 3 - 2*sqrt(2) > 0, 1 - sqrt(2) < 0
        let x = add(&Elem::Rat(rat_int(3)), &mul(&Elem::Rat(rat_int(-2)), &root(1), &t), &t);
        assert_eq!(sign(&x, &t), 1);
        let y = add(&Elem::Rat(rat_int(1)), &neg(&root(1)), &t);
        assert_eq!(sign(&y, &t), -1);
    }

    #[test]
    fn sqrt_six_found_in_sqrt2_sqrt3_tower() {
        let t = tower_of(&[rat_int(2), rat_int(3)]);
        let six = Elem::Rat(rat_int(6));
        let s = sqrt_in(&six, &t).expect("sqrt(6) = sqrt(2)sqrt(3)");
        let sq = mul(&s, &s, &t);
        assert!(is_zero(&sub(&sq, &six, &t), &t));
        assert_eq!(sign(&s, &t), 1);
    }

    #[test]
    fn sqrt_in_detects_non_squares() {
        let t = tower_of(&[rat_int(2)]);
        assert!(sqrt_in(&Elem::Rat(rat_int(3)), &t).is_none());
        assert!(sqrt_in(&Elem::Rat(rat_int(2)), &t).is_some());
        assert!(sqrt_in(&Elem::Rat(rat(9, 4)), &t).is_some());
    }

    #[test]
    fn merge_dedupes_equal_radicands() {
        let ta = tower_of(&[rat_int(2)]);
        let tb = tower_of(&[rat_int(8)]); // sqrt 8 = 2 sqrt 2
        let m = merge(&ta, &tb);
        assert_eq!(m.tower.len(), 1);
        let s8 = m.lift_b(&root(1));
        // (sqrt 8)^2 = 8
        let sq = mul(&s8, &s8, &m.tower);
        assert!(is_zero(&sub(&sq, &Elem::Rat(rat_int(8)), &m.tower), &m.tower));
    }

    #[test]
    fn nested_radical_denesting() {
        // sqrt(3 + 2 sqrt 2) = 1 + sqrt 2
        let t = tower_of(&[rat_int(2)]);
        let x = add(&Elem::Rat(rat_int(3)), &mul(&Elem::Rat(rat_int(2)), &root(1), &t), &t);
        let s = sqrt_in(&x, &t).expect("denests");
        let expected = add(&Elem::Rat(rat_int(1)), &root(1), &t);
        assert!(is_zero(&sub(&s, &expected, &t), &t));
    }
}
