//! Constructive core: spiral pairs, the base simple almost embedding,
//! the finger move, and the realizer that produces an almost embedding
//! of K4 with any prescribed odd-sum winding vector.

mod grid;
mod spiral;

pub use grid::{access_path, separating_loop};
pub use spiral::{spiral_pair, SpiralPair};

use alloc::collections::BTreeMap;

use crate::error::Error;
use crate::exact_geom::{Pt, Rat};
use crate::graph_drawing::{Drawing, Graph};
use crate::polyline::{concat, power, Cycle, Polyline};

/// The ingredients of one finger move: a counterclockwise loop `L`
/// enclosing the image of edge 24 but not of edge 13, an access path `P`
/// from `f(3)` to a vertex of `L` avoiding edge 24, the turn count, and
/// the grid resolution used to build them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FingerMoveParts {
    pub loop_: Cycle,
    pub path: Polyline,
    pub n: i64,
    pub grid_cell: Rat,
}

/// A simple almost embedding of K4 with winding vector
/// `(m1, -m2, m3, 1 - m1 - m2 - m3)`.
///
/// Vertices 1, 2, 3 go to a counterclockwise right triangle scaled by
/// `D = max(1, |m_i|)` (a rational stand-in for the regular triangle:
/// integer windings and all incidence checks are affine-invariant) and
/// vertex 4 to its centroid. Each pair of opposite edges is one spiral
/// pair, built per cyclic triple so the `i4` edge carries the gamma line
/// and the `jk` edge the lambda line.
pub fn base_embedding(m1: i64, m2: i64, m3: i64) -> Drawing {
    let scale = [m1, m2, m3].iter().map(|m| m.abs()).max().unwrap().max(1);
    let f1 = Pt::int(0, 0);
    let f2 = Pt::int(6 * scale, 0);
    let f3 = Pt::int(0, 6 * scale);
    let f4 = Pt::int(2 * scale, 2 * scale);

    let pair_a = spiral_pair(&f1, &f2, &f3, m2).expect("triangle is ccw");
    let pair_b = spiral_pair(&f2, &f3, &f1, m3).expect("triangle is ccw");
    let pair_c = spiral_pair(&f3, &f1, &f2, m1).expect("triangle is ccw");

    let vertex_pos: BTreeMap<u32, Pt> =
        [(1, f1), (2, f2), (3, f3), (4, f4)].into_iter().collect();
    let edge_lines: BTreeMap<(u32, u32), Polyline> = [
        ((1, 4), pair_a.gamma),
        ((2, 3), pair_a.lambda),
        ((2, 4), pair_b.gamma),
        ((1, 3), pair_b.lambda.reverse()),
        ((3, 4), pair_c.gamma),
        ((1, 2), pair_c.lambda),
    ]
    .into_iter()
    .collect();

    Drawing::new(Graph::k4(), vertex_pos, edge_lines).expect("base drawing is well-formed")
}

/// Build the separating loop and access path for a finger move on `g`.
pub fn finger_move_parts(g: &Drawing, n: i64) -> Result<FingerMoveParts, Error> {
    let inner = g.edge_oriented(2, 4);
    let outer = g.edge_oriented(1, 3);
    let (loop_, grid_cell) = separating_loop(&inner, &outer)?;
    let path = access_path(g.vertex_pos(3), &loop_, &inner, &grid_cell)?;
    Ok(FingerMoveParts {
        loop_,
        path,
        n,
        grid_cell,
    })
}

/// Replace the image of edge 13 by `g|13 P L^n P^-1`, wrapping it `n`
/// times around a loop that encloses the image of edge 24. Shifts the
/// winding vector by exactly `(0, +n, 0, -n)`; `n = 0` returns `g`
/// unchanged.
pub fn finger_move(g: &Drawing, n: i64) -> Result<Drawing, Error> {
    if n == 0 {
        return Ok(g.clone());
    }
    if g.edge_lines().values().any(|line| !line.is_simple()) {
        return Err(Error::NotSimple);
    }
    if g.first_violation().is_some() {
        return Err(Error::NotAlmostEmbedding);
    }
    let parts = finger_move_parts(g, n)?;
    let base = parts
        .loop_
        .points()
        .iter()
        .position(|p| p == parts.path.last())
        .expect("access path ends at a loop vertex");
    let detour = power(&parts.loop_, n, base)?;

    let old13 = g.edge_oriented(1, 3);
    let new13 = concat(
        &concat(&concat(&old13, &parts.path)?, &detour)?,
        &parts.path.reverse(),
    )?;
    g.with_edge_line(1, 3, new13)
}

/// An almost embedding of K4 with winding vector exactly
/// `(n1, n2, n3, n4)`; the sum must be odd, which is the only
/// obstruction.
pub fn realize(n1: i64, n2: i64, n3: i64, n4: i64) -> Result<Drawing, Error> {
    let sum = n1 + n2 + n3 + n4;
    if sum.rem_euclid(2) != 1 {
        return Err(Error::ParityViolation);
    }
    let a = (1 - n1 - n2 - n3 - n4) / 2;
    let b = (1 - n1 + n2 - n3 - n4) / 2;
    let g = base_embedding(n1, a, n3);
    finger_move(&g, b)
}
