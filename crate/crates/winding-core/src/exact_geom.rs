//! Exact rational points and the geometric predicates the rest of the
//! crate is built on.
//!
//! All arithmetic is over arbitrary-precision rationals in canonical
//! reduced form (positive denominator, gcd 1), which `num-rational`
//! maintains after every operation. Distances are kept squared so that
//! no square roots, and therefore no rounding, ever appear.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational scalar: `num/den` in canonical reduced form.
pub type Rat = num_rational::BigRational;

/// `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a rational.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// A point of the plane with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pt {
    pub x: Rat,
    pub y: Rat,
}

impl fmt::Debug for Pt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Pt {
    pub fn new(x: Rat, y: Rat) -> Pt {
        Pt { x, y }
    }

    /// Integer-coordinate point, the common case in tests and sampling.
    pub fn int(x: i64, y: i64) -> Pt {
        Pt::new(rat(x), rat(y))
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Pt, t: &Rat) -> Pt {
        Pt::new(
            &self.x + t * (&other.x - &self.x),
            &self.y + t * (&other.y - &self.y),
        )
    }

    pub fn midpoint(&self, other: &Pt) -> Pt {
        self.lerp(other, &ratio(1, 2))
    }

    /// Point reflection of `self` through `center`.
    pub fn reflect_through(&self, center: &Pt) -> Pt {
        Pt::new(
            &center.x + &center.x - &self.x,
            &center.y + &center.y - &self.y,
        )
    }

    /// Both coordinates as `f64` (diagnostics only).
    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }
}

/// Centroid of a triangle.
pub fn centroid(a: &Pt, b: &Pt, c: &Pt) -> Pt {
    let three = rat(3);
    Pt::new(
        (&a.x + &b.x + &c.x) / &three,
        (&a.y + &b.y + &c.y) / &three,
    )
}

fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact cross product `(b - a) x (c - a)`.
pub fn cross(a: &Pt, b: &Pt, c: &Pt) -> Rat {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Orientation of the triple `(a, b, c)`: `+1` if `c` lies strictly left
/// of the directed line `a -> b`, `-1` if strictly right, `0` if collinear.
pub fn orient(a: &Pt, b: &Pt, c: &Pt) -> i8 {
    sign(&cross(a, b, c))
}

/// Does `p` lie on the closed segment `ab`? A degenerate segment
/// (`a == b`) is a single point.
pub fn on_segment(p: &Pt, a: &Pt, b: &Pt) -> bool {
    if orient(a, b, p) != 0 {
        return false;
    }
    let in_range = |p: &Rat, lo: &Rat, hi: &Rat| {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        lo <= p && p <= hi
    };
    in_range(&p.x, &a.x, &b.x) && in_range(&p.y, &a.y, &b.y)
}

/// Do the closed segments `ab` and `cd` share at least one point?
/// Touching at an endpoint counts.
pub fn segments_intersect(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> bool {
    // Bounding-box reject keeps dense pairwise scans cheap.
    let sep = |pa: &Rat, pb: &Rat, qa: &Rat, qb: &Rat| {
        (pa < qa && pb < qa && pa < qb && pb < qb) || (pa > qa && pb > qa && pa > qb && pb > qb)
    };
    if sep(&a.x, &b.x, &c.x, &d.x) || sep(&a.y, &b.y, &c.y, &d.y) {
        return false;
    }
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if d1 != d2 && d3 != d4 && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0 {
        return true;
    }
    (d1 == 0 && on_segment(a, c, d))
        || (d2 == 0 && on_segment(b, c, d))
        || (d3 == 0 && on_segment(c, a, b))
        || (d4 == 0 && on_segment(d, a, b))
}

fn dist2_points(p: &Pt, q: &Pt) -> Rat {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    &dx * &dx + &dy * &dy
}

/// Exact squared Euclidean distance from `p` to the closed segment `ab`.
pub fn dist2_point_segment(p: &Pt, a: &Pt, b: &Pt) -> Rat {
    let len2 = dist2_points(a, b);
    if len2.is_zero() {
        return dist2_points(p, a);
    }
    // Projection parameter of p onto line ab, clamped to the segment.
    let t = ((&p.x - &a.x) * (&b.x - &a.x) + (&p.y - &a.y) * (&b.y - &a.y)) / &len2;
    let t = match (t.cmp(&Rat::zero()), t.cmp(&rat(1))) {
        (Ordering::Less, _) => Rat::zero(),
        (_, Ordering::Greater) => rat(1),
        _ => t,
    };
    dist2_points(p, &a.lerp(b, &t))
}

/// Exact squared distance between the closed segments `ab` and `cd`;
/// zero exactly when they intersect.
pub fn dist2_segments(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> Rat {
    if segments_intersect(a, b, c, d) {
        return Rat::zero();
    }
    let mut best = dist2_point_segment(a, c, d);
    for cand in [
        dist2_point_segment(b, c, d),
        dist2_point_segment(c, a, b),
        dist2_point_segment(d, a, b),
    ] {
        if cand < best {
            best = cand;
        }
    }
    best
}
