//! Spiral pairs: two disjoint simple polygonal lines inside a triangle,
//! one joining a vertex to the centroid and one joining the other two
//! vertices, interleaved so that they encode a prescribed number of
//! extra turns around each other.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exact_geom::{centroid, orient, ratio, Pt};
use crate::polyline::{disjoint, winding_closed, Cycle, Polyline};

/// Disjoint simple polylines `gamma: A -> O` and `lambda: B -> C` for a
/// counterclockwise triangle `ABC` with centroid `O`, realizing the
/// closed-winding identities checked in [`spiral_pair`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpiralPair {
    pub gamma: Polyline,
    pub lambda: Polyline,
    pub m: i64,
}

/// Build the spiral pair for turn count `m`.
///
/// For `m = 0` the pair degenerates to the straight segments `AO` and
/// `BC`. Otherwise the two lines zigzag through a rhombus with center at
/// one third of the median from `B`, alternating between `4|m|` rays so
/// that each is simple, the two are disjoint, and closing them up with
/// the segments `OA` and `CB` gives exact windings `m` around `B`
/// (resp. `-m` around `O`) and `0` around the far vertex. All
/// constituent points are midpoints, centroids, ratio-1/3 homothety
/// images and equal subdivisions, so the construction is affine and
/// works for any rational counterclockwise triangle.
///
/// The postconditions (simplicity, disjointness, the four closed-winding
/// identities) are verified at runtime on every call.
pub fn spiral_pair(a: &Pt, b: &Pt, c: &Pt, m: i64) -> Result<SpiralPair, Error> {
    if orient(a, b, c) != 1 {
        return Err(Error::DegenerateTriangle);
    }
    let o = centroid(a, b, c);
    let pair = if m == 0 {
        SpiralPair {
            gamma: Polyline::new(vec![a.clone(), o.clone()])?,
            lambda: Polyline::new(vec![b.clone(), c.clone()])?,
            m,
        }
    } else {
        build_spirals(a, b, c, &o, m)?
    };
    verify(&pair, a, b, c, &o);
    Ok(pair)
}

fn build_spirals(a: &Pt, b: &Pt, c: &Pt, o: &Pt, m: i64) -> Result<SpiralPair, Error> {
    let k = m.unsigned_abs() as i64;
    let third = ratio(1, 3);
    let t = a.midpoint(c);
    let x = b.lerp(&t, &third);
    // For negative m the roles of the two homothety images swap, which
    // reverses the sense of the zigzag.
    let s_end = if m > 0 {
        b.lerp(a, &third)
    } else {
        b.lerp(c, &third)
    };

    // Zigzag from O to T: alternate between subdivision points of the
    // rays X->S and O->T and their reflections through X.
    let mut z: Vec<Pt> = Vec::with_capacity(4 * k as usize + 1);
    z.push(o.clone());
    for i in 1..(2 * k) {
        let frac = ratio(i, 2 * k);
        let s_i = x.lerp(&s_end, &frac);
        let t_i = o.lerp(&t, &frac);
        if i % 2 == 1 {
            z.push(s_i.reflect_through(&x));
            z.push(t_i.reflect_through(&x));
        } else {
            z.push(s_i);
            z.push(t_i);
        }
    }
    z.push(s_end.clone());
    z.push(t.clone());

    // gamma = A followed by Z reversed; lambda = the reflection of Z
    // through X (which starts at B) followed by C.
    let mut gamma_pts = vec![a.clone()];
    gamma_pts.extend(z.iter().rev().cloned());
    let mut lambda_pts: Vec<Pt> = z.iter().map(|p| p.reflect_through(&x)).collect();
    lambda_pts.push(c.clone());

    Ok(SpiralPair {
        gamma: Polyline::new(gamma_pts)?,
        lambda: Polyline::new(lambda_pts)?,
        m,
    })
}

fn verify(pair: &SpiralPair, a: &Pt, b: &Pt, c: &Pt, o: &Pt) {
    assert!(pair.gamma.is_simple(), "spiral gamma must be simple");
    assert!(pair.lambda.is_simple(), "spiral lambda must be simple");
    assert!(
        disjoint(&pair.gamma, &pair.lambda),
        "spiral pair must be disjoint"
    );
    assert_eq!(pair.gamma.first(), a);
    assert_eq!(pair.gamma.last(), o);
    assert_eq!(pair.lambda.first(), b);
    assert_eq!(pair.lambda.last(), c);
    if pair.m != 0 {
        // Closing gamma with the segment OA and lambda with CB gives
        // closed lines with exactly checkable windings.
        let gamma_loop = Cycle::new(pair.gamma.points().to_vec()).expect("gamma closes");
        let lambda_loop = Cycle::new(pair.lambda.points().to_vec()).expect("lambda closes");
        assert_eq!(winding_closed(&gamma_loop, b), Ok(pair.m));
        assert_eq!(winding_closed(&gamma_loop, c), Ok(0));
        assert_eq!(winding_closed(&lambda_loop, o), Ok(-pair.m));
        assert_eq!(winding_closed(&lambda_loop, a), Ok(0));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_zero_is_straight() {
        let pair = spiral_pair(&Pt::int(0, 0), &Pt::int(6, 0), &Pt::int(0, 6), 0).unwrap();
        assert_eq!(pair.gamma.points(), &[Pt::int(0, 0), Pt::int(2, 2)]);
        assert_eq!(pair.lambda.points(), &[Pt::int(6, 0), Pt::int(0, 6)]);
    }

    #[test]
    fn m_one_point_counts() {
        let pair = spiral_pair(&Pt::int(0, 0), &Pt::int(6, 0), &Pt::int(0, 6), 1).unwrap();
        assert_eq!(pair.gamma.points().len(), 6);
        assert_eq!(pair.lambda.points().len(), 6);
    }

    #[test]
    fn winding_identities_small_range() {
        // The identities themselves are asserted inside spiral_pair.
        for m in -5..=5 {
            spiral_pair(&Pt::int(0, 0), &Pt::int(6, 0), &Pt::int(0, 6), m).unwrap();
        }
    }

    #[test]
    fn degenerate_triangles_rejected() {
        assert_eq!(
            spiral_pair(&Pt::int(0, 0), &Pt::int(1, 1), &Pt::int(2, 2), 1),
            Err(Error::DegenerateTriangle)
        );
        // Clockwise orientation is rejected too.
        assert_eq!(
            spiral_pair(&Pt::int(0, 0), &Pt::int(0, 6), &Pt::int(6, 0), 1),
            Err(Error::DegenerateTriangle)
        );
    }
}
