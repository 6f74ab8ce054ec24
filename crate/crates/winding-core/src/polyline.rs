//! Open and closed polygonal lines: concatenation algebra, exact winding
//! numbers of closed lines, and float turning numbers of open lines.
//!
//! The exact winding number is computed by signed crossings of a
//! horizontal ray, never by angles: crossing counts are decidable over
//! the rationals. The angle-sum turning number is float-only and serves
//! as a diagnostic (and as an independent oracle in the test suites).

use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::error::Error;
use crate::exact_geom::{orient, segments_intersect, Pt, Rat};

/// An open polygonal line: at least two points, no zero-length segments.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polyline {
    points: Vec<Pt>,
}

/// A closed polygonal line: at least three points, the closing segment
/// from the last point back to the first is implied, never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    points: Vec<Pt>,
}

fn has_zero_segment(points: &[Pt], closed: bool) -> bool {
    points.windows(2).any(|w| w[0] == w[1])
        || (closed && points.last() == points.first())
}

impl Polyline {
    pub fn new(points: Vec<Pt>) -> Result<Polyline, Error> {
        if points.len() < 2 || has_zero_segment(&points, false) {
            return Err(Error::InvalidPolyline);
        }
        Ok(Polyline { points })
    }

    pub fn points(&self) -> &[Pt] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Pt> {
        self.points
    }

    pub fn first(&self) -> &Pt {
        &self.points[0]
    }

    pub fn last(&self) -> &Pt {
        self.points.last().unwrap()
    }

    pub fn segment_count(&self) -> usize {
        self.points.len() - 1
    }

    /// The segments of the line, in order.
    pub fn segments(&self) -> impl Iterator<Item = (&Pt, &Pt)> {
        self.points.windows(2).map(|w| (&w[0], &w[1]))
    }

    pub fn reverse(&self) -> Polyline {
        let mut points = self.points.clone();
        points.reverse();
        Polyline { points }
    }

    /// Does `p` lie on the union of segments?
    pub fn contains_point(&self, p: &Pt) -> bool {
        point_on(&self.points, false, p)
    }

    pub fn is_simple(&self) -> bool {
        is_simple_points(&self.points, false)
    }
}

impl Cycle {
    pub fn new(points: Vec<Pt>) -> Result<Cycle, Error> {
        if points.len() < 3 || has_zero_segment(&points, true) {
            return Err(Error::InvalidPolyline);
        }
        Ok(Cycle { points })
    }

    pub fn points(&self) -> &[Pt] {
        &self.points
    }

    pub fn segment_count(&self) -> usize {
        self.points.len()
    }

    /// All segments including the implied closing one.
    pub fn segments(&self) -> impl Iterator<Item = (&Pt, &Pt)> {
        let n = self.points.len();
        (0..n).map(move |i| (&self.points[i], &self.points[(i + 1) % n]))
    }

    pub fn reverse(&self) -> Cycle {
        let mut points = self.points.clone();
        points.reverse();
        Cycle { points }
    }

    /// The same cycle with its point list rotated so `start` comes first.
    pub fn rotated(&self, start: usize) -> Cycle {
        assert!(start < self.points.len());
        let mut points = Vec::with_capacity(self.points.len());
        points.extend_from_slice(&self.points[start..]);
        points.extend_from_slice(&self.points[..start]);
        Cycle { points }
    }

    /// The open polyline that traverses the cycle once from the given
    /// basepoint and returns to it (the closing point made explicit).
    pub fn to_open(&self, basepoint: usize) -> Polyline {
        let rot = self.rotated(basepoint);
        let mut points = rot.points;
        points.push(points[0].clone());
        Polyline { points }
    }

    pub fn contains_point(&self, p: &Pt) -> bool {
        point_on(&self.points, true, p)
    }

    pub fn is_simple(&self) -> bool {
        is_simple_points(&self.points, true)
    }

    /// Twice the signed area; positive for counterclockwise orientation.
    pub fn signed_area2(&self) -> Rat {
        let mut acc = Rat::default();
        for (a, b) in self.segments() {
            acc += &a.x * &b.y - &b.x * &a.y;
        }
        acc
    }
}

fn point_on(points: &[Pt], closed: bool, p: &Pt) -> bool {
    let n = points.len();
    let m = if closed { n } else { n - 1 };
    (0..m).any(|i| crate::exact_geom::on_segment(p, &points[i], &points[(i + 1) % n]))
}

fn dot(a: &Pt, b: &Pt, c: &Pt) -> Rat {
    // (b - a) . (c - b)
    (&b.x - &a.x) * (&c.x - &b.x) + (&b.y - &a.y) * (&c.y - &b.y)
}

/// Adjacent segments (a,b), (b,c) meet beyond their shared endpoint only
/// when they are collinear and the direction reverses.
fn adjacent_overlap(a: &Pt, b: &Pt, c: &Pt) -> bool {
    orient(a, b, c) == 0 && dot(a, b, c) < Rat::default()
}

fn is_simple_points(points: &[Pt], closed: bool) -> bool {
    let n = points.len();
    let m = if closed { n } else { n - 1 };
    let seg = |i: usize| (&points[i], &points[(i + 1) % n]);
    for i in 0..m {
        for j in (i + 1)..m {
            let wrap_adjacent = closed && i == 0 && j == m - 1;
            if j == i + 1 {
                let (a, b) = seg(i);
                let c = seg(j).1;
                if adjacent_overlap(a, b, c) {
                    return false;
                }
            } else if wrap_adjacent {
                let (a, b) = seg(j);
                let c = seg(0).1;
                if adjacent_overlap(a, b, c) {
                    return false;
                }
            } else {
                let (a, b) = seg(i);
                let (c, d) = seg(j);
                if segments_intersect(a, b, c, d) {
                    return false;
                }
            }
        }
    }
    true
}

/// Concatenation of two open polylines sharing an endpoint, the shared
/// point listed once.
pub fn concat(l1: &Polyline, l2: &Polyline) -> Result<Polyline, Error> {
    if l1.last() != l2.first() {
        return Err(Error::EndpointMismatch);
    }
    let mut points = l1.points.clone();
    points.extend_from_slice(&l2.points[1..]);
    Ok(Polyline { points })
}

/// The open polyline that starts and ends at the basepoint and traverses
/// the cycle `|n|` times, in the cycle's orientation for `n > 0` and
/// reversed for `n < 0`.
pub fn power(c: &Cycle, n: i64, basepoint: usize) -> Result<Polyline, Error> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    let rot = c.rotated(basepoint);
    let mut lap: Vec<Pt> = rot.points.clone();
    if n < 0 {
        lap[1..].reverse();
    }
    let mut points = Vec::with_capacity(lap.len() * n.unsigned_abs() as usize + 1);
    for _ in 0..n.unsigned_abs() {
        points.extend_from_slice(&lap);
    }
    points.push(lap[0].clone());
    Ok(Polyline { points })
}

/// Exact winding number of a closed polyline around `p`, by signed
/// crossings of the horizontal ray from `p` toward `+x`. The half-open
/// rule (`q.y <= p.y < r.y` upward, mirrored downward) makes crossings
/// through vertices count exactly once without perturbation.
pub fn winding_closed(c: &Cycle, p: &Pt) -> Result<i64, Error> {
    if c.contains_point(p) {
        return Err(Error::PointOnCurve);
    }
    let mut w = 0i64;
    for (q, r) in c.segments() {
        if q.y <= p.y && p.y < r.y {
            if orient(q, r, p) > 0 {
                w += 1;
            }
        } else if r.y <= p.y && p.y < q.y {
            if orient(q, r, p) < 0 {
                w -= 1;
            }
        }
    }
    Ok(w)
}

/// Oriented angle at `p` from `a` to `b`, in `(-pi, pi]`, in floats.
fn angle_at(p: &Pt, a: &Pt, b: &Pt) -> f64 {
    let (px, py) = p.to_f64();
    let (ax, ay) = a.to_f64();
    let (bx, by) = b.to_f64();
    let (ux, uy) = (ax - px, ay - py);
    let (vx, vy) = (bx - px, by - py);
    libm::atan2(ux * vy - uy * vx, ux * vx + uy * vy)
}

///// Turning number of an open polyline around `p`: the sum of oriented
/// angles subtended at `p`, divided by `2*pi`. Float diagnostic only;
/// the off-curve precondition is still checked exactly.
pub fn turning_open(l: &Polyline, p: &Pt) -> Result<f64, Error> {
    if l.contains_point(p) {
        return Err(Error::PointOnCurve);
    }
    let mut sum = 0.0;
    for (a, b) in l.segments() {
        sum += angle_at(p, a, b);
    }
    Ok(sum / core::f64::consts::TAU)
}

/// Do two open polylines share no point at all? Exact all-pairs test.
pub fn disjoint(l1: &Polyline, l2: &Polyline) -> bool {
    for (a, b) in l1.segments() {
        for (c, d) in l2.segments() {
            if segments_intersect(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

/// Exact disjointness of a cycle (closing segment included) and an open
/// polyline.
pub fn cycle_disjoint_from(c: &Cycle, l: &Polyline) -> bool {
    for (a, b) in c.segments() {
        for (q, r) in l.segments() {
            if segments_intersect(a, b, q, r) {
                return false;
            }
        }
    }
    true
}

/// Nearest vertex of a cycle to `p` (squared distance, first on ties).
pub fn nearest_vertex(c: &Cycle, p: &Pt) -> usize {
    let mut best = 0usize;
    let mut best_d2: Option<Rat> = None;
    for (i, q) in c.points().iter().enumerate() {
        let dx = &q.x - &p.x;
        let dy = &q.y - &p.y;
        let d2 = &dx * &dx + &dy * &dy;
        if best_d2.as_ref().map_or(true, |b| d2 < *b) {
            best_d2 = Some(d2);
            best = i;
        }
    }
    best
}

/// `f64` value of a rational, for diagnostics.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
