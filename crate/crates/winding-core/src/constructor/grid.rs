//! Grid-based constructions for the finger move: a simple closed loop
//! separating one polyline from another, and an obstacle-avoiding access
//! path.
//!
//! Both build on an axis-aligned grid of side `h`, a power of two chosen
//! from exact squared distances. The loop is the boundary of a one-cell
//! dilation of the cells touching the inner polyline (pockets filled,
//! pinch corners resolved); if any runtime check fails the cell size is
//! halved and the construction retried.
//!
//! Internally everything runs in integer coordinates: multiplying all
//! inputs by `lcm(denominators) * denom(h)` is a similarity, so
//! orientations, intersections and winding numbers transfer verbatim,
//! and `i128` arithmetic replaces big-rational arithmetic in the hot
//! loops. Magnitudes are capped well below the overflow threshold.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::Error;
use crate::exact_geom::{dist2_segments, ratio, segments_intersect, Pt, Rat};
use crate::polyline::{disjoint, nearest_vertex, Cycle, Polyline};

type Cell = (i64, i64);
type IPt = (i128, i128);

/// Coordinate bound for the scaled scene; keeps every product (cross
/// terms, row clips) far inside `i128`.
const MAX_COORD: i128 = 1 << 40;

/// Cap on the marked-cell count: past this, refining further can only
/// make the construction slower, so the attempt is abandoned instead.
const MAX_REGION_CELLS: usize = 500_000;

// ---------------------------------------------------------------------
// Integer geometry on scaled coordinates.

fn floor_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

fn icross(a: IPt, b: IPt, c: IPt) -> i128 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn iorient(a: IPt, b: IPt, c: IPt) -> i32 {
    let v = icross(a, b, c);
    if v > 0 {
        1
    } else if v < 0 {
        -1
    } else {
        0
    }
}

/// `p` on the closed segment `ab`, assuming the three are collinear.
fn i_on_collinear(p: IPt, a: IPt, b: IPt) -> bool {
    p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

fn i_segments_intersect(a: IPt, b: IPt, c: IPt, d: IPt) -> bool {
    let sep = |pa: i128, pb: i128, qa: i128, qb: i128| {
        (pa.max(pb) < qa.min(qb)) || (pa.min(pb) > qa.max(qb))
    };
    if sep(a.0, b.0, c.0, d.0) || sep(a.1, b.1, c.1, d.1) {
        return false;
    }
    let d1 = iorient(c, d, a);
    let d2 = iorient(c, d, b);
    let d3 = iorient(a, b, c);
    let d4 = iorient(a, b, d);
    if d1 != d2 && d3 != d4 && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0 {
        return true;
    }
    (d1 == 0 && i_on_collinear(a, c, d))
        || (d2 == 0 && i_on_collinear(b, c, d))
        || (d3 == 0 && i_on_collinear(c, a, b))
        || (d4 == 0 && i_on_collinear(d, a, b))
}

fn i_segment_hits(a: IPt, b: IPt, line: &[IPt]) -> bool {
    line.windows(2).any(|w| i_segments_intersect(a, b, w[0], w[1]))
}

/// Winding number of the closed vertex list `verts` (implicit wrap)
/// around `q`; `None` when `q` lies on the curve. Half-open crossing
/// rule, the integer mirror of the rational version.
fn i_winding(verts: &[IPt], q: IPt) -> Option<i64> {
    let n = verts.len();
    let mut w = 0i64;
    for k in 0..n {
        let a = verts[k];
        let b = verts[(k + 1) % n];
        if iorient(a, b, q) == 0 && i_on_collinear(q, a, b) {
            return None;
        }
        if a.1 <= q.1 && q.1 < b.1 && iorient(a, b, q) > 0 {
            w += 1;
        } else if b.1 <= q.1 && q.1 < a.1 && iorient(a, b, q) < 0 {
            w -= 1;
        }
    }
    Some(w)
}

fn i_signed_area2(verts: &[IPt]) -> i128 {
    let n = verts.len();
    let mut s = 0i128;
    for k in 0..n {
        let a = verts[k];
        let b = verts[(k + 1) % n];
        s += a.0 * b.1 - b.0 * a.1;
    }
    s
}

fn i_cycle_is_simple(verts: &[IPt]) -> bool {
    let n = verts.len();
    if n < 3 {
        return false;
    }
    for k in 0..n {
        // Adjacent pair: overlap only if the turn doubles back.
        let a = verts[k];
        let b = verts[(k + 1) % n];
        let c = verts[(k + 2) % n];
        if iorient(a, b, c) == 0 && (b.0 - a.0) * (c.0 - b.0) + (b.1 - a.1) * (c.1 - b.1) < 0 {
            return false;
        }
    }
    for k in 0..n {
        for l in k + 2..n {
            if k == 0 && l == n - 1 {
                continue;
            }
            let (a, b) = (verts[k], verts[(k + 1) % n]);
            let (c, d) = (verts[l], verts[(l + 1) % n]);
            if i_segments_intersect(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------
// Scene scaling.

struct Scene {
    /// Cell size in scaled units.
    c: i128,
    /// Coordinate multiplier `lcm(denoms) * denom(h)`.
    scale: BigInt,
    inner: Vec<IPt>,
    outer: Vec<IPt>,
}

fn lcm_denoms<'a>(points: impl Iterator<Item = &'a Pt>) -> BigInt {
    let mut d = BigInt::one();
    for p in points {
        d = d.lcm(p.x.denom());
        d = d.lcm(p.y.denom());
    }
    d
}

fn big_to_coord(v: &BigInt) -> Option<i128> {
    let x = v.to_i128()?;
    (x.abs() <= MAX_COORD).then_some(x)
}

fn scale_point(p: &Pt, scale: &BigInt) -> Option<IPt> {
    let sx = big_to_coord(&(p.x.numer() * scale / p.x.denom()))?;
    let sy = big_to_coord(&(p.y.numer() * scale / p.y.denom()))?;
    Some((sx, sy))
}

fn scale_points(pts: &[Pt], scale: &BigInt) -> Option<Vec<IPt>> {
    pts.iter().map(|p| scale_point(p, scale)).collect()
}

fn build_scene(inner: &Polyline, outer: &Polyline, h: &Rat) -> Option<Scene> {
    let d = lcm_denoms(inner.points().iter().chain(outer.points()));
    let scale = &d * h.denom();
    let c = big_to_coord(&(&d * h.numer()))?;
    Some(Scene {
        c,
        inner: scale_points(inner.points(), &scale)?,
        outer: scale_points(outer.points(), &scale)?,
        scale,
    })
}

/// Scaled coordinate back to the original frame: `x / scale`.
fn unscale(v: i128, scale: &BigInt) -> Rat {
    Rat::new(BigInt::from(v), scale.clone())
}

// ---------------------------------------------------------------------
// Cell marking.

/// Cell range `[i_min, i_max]` whose closed unit intervals touch the
/// closed interval `[lo/den, hi/den]` for cells of size `c` (den > 0).
fn touching_range(lo: i128, hi: i128, den: i128, c: i128) -> (i64, i64) {
    let m = den * c;
    let i_min = if lo.rem_euclid(m) == 0 {
        floor_div(lo, m) - 1
    } else {
        floor_div(lo, m)
    };
    (i_min as i64, floor_div(hi, m) as i64)
}

/// Mark every cell whose closed square touches the closed segment `pq`.
/// Exact: per grid row, the segment is clipped to the row's slab and the
/// x-extent of the clip (a fraction over `dy`) selects the cells.
fn mark_segment(p: IPt, q: IPt, c: i128, cells: &mut BTreeSet<Cell>) -> bool {
    let (ylo, yhi) = (p.1.min(q.1), p.1.max(q.1));
    let (j_min, j_max) = touching_range(ylo, yhi, 1, c);
    for j in j_min..=j_max {
        let (xlo, xhi, den) = if p.1 == q.1 {
            (p.0.min(q.0), p.0.max(q.0), 1)
        } else {
            let (dx, dy) = (q.0 - p.0, q.1 - p.1);
            // x at height y is p.x + (y - p.y) * dx / dy; evaluate at the
            // slab bounds clamped to the segment's y-extent, as
            // fractions over |dy|.
            let x_num = |y: i128| {
                let y = y.clamp(ylo, yhi);
                let num = p.0 * dy + (y - p.1) * dx;
                if dy > 0 {
                    num
                } else {
                    -num
                }
            };
            let (n1, n2) = (x_num(j as i128 * c), x_num((j as i128 + 1) * c));
            (n1.min(n2), n1.max(n2), dy.abs())
        };
        let (i_min, i_max) = touching_range(xlo, xhi, den, c);
        for i in i_min..=i_max {
            cells.insert((i, j));
        }
        if cells.len() > MAX_REGION_CELLS {
            return false;
        }
    }
    true
}

fn marked_cells(line: &[IPt], c: i128) -> Option<BTreeSet<Cell>> {
    let mut cells = BTreeSet::new();
    for w in line.windows(2) {
        if !mark_segment(w[0], w[1], c, &mut cells) {
            return None;
        }
    }
    Some(cells)
}

// ---------------------------------------------------------------------
// Region shaping.

fn dilate(cells: &BTreeSet<Cell>) -> BTreeSet<Cell> {
    let mut out = BTreeSet::new();
    for &(i, j) in cells {
        for di in -1..=1 {
            for dj in -1..=1 {
                out.insert((i + di, j + dj));
            }
        }
    }
    out
}

/// Fill every bounded component of the region's complement. The tube
/// around a zigzag with sharp wedges encloses small scale-invariant
/// pockets near the wedge apexes, so refining the grid never removes
/// them; filling them leaves a region whose boundary is one cycle.
///
/// Works on per-row runs: complement cells between two region runs of a
/// row form a gap, gaps of adjacent rows overlapping in columns are
/// connected, and a gap bordering a half-infinite side or a row outside
/// the region's span is connected to the unbounded face. Everything not
/// reachable from the unbounded face is a hole.
fn fill_holes(region: &mut BTreeSet<Cell>) {
    // Region columns per row. The set orders (i, j) pairs by i first, so
    // regroup by row and sort columns.
    let mut rows: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for &(i, j) in region.iter() {
        rows.entry(j).or_default().push(i);
    }
    // Gap = (row, i_start, i_end), finite complement run between region
    // cells of the row.
    let mut gaps: Vec<(i64, i64, i64)> = Vec::new();
    let mut gaps_by_row: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (&j, cols) in rows.iter_mut() {
        cols.sort_unstable();
        for w in 0..cols.len() - 1 {
            let (a, b) = (cols[w], cols[w + 1]);
            if b > a + 1 {
                gaps_by_row.entry(j).or_default().push(gaps.len());
                gaps.push((j, a + 1, b - 1));
            }
        }
    }
    if gaps.is_empty() {
        return;
    }

    let mut open = vec![false; gaps.len()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); gaps.len()];
    for (g, &(j, a, b)) in gaps.iter().enumerate() {
        for dj in [-1i64, 1] {
            let jn = j + dj;
            let Some(cols) = rows.get(&jn) else {
                // Row without region cells: unbounded face.
                open[g] = true;
                continue;
            };
            // Columns of [a, b] beyond the neighbor row's region span lie
            // on a half-infinite side; columns within the span and not
            // covered are exactly the finite-gap overlaps linked below.
            if a < *cols.first().unwrap() || b > *cols.last().unwrap() {
                open[g] = true;
            }
            for &gn in gaps_by_row.get(&jn).into_iter().flatten() {
                let (_, an, bn) = gaps[gn];
                if an <= b && a <= bn {
                    adj[g].push(gn);
                }
            }
        }
        if open[g] {
            queue.push_back(g);
        }
    }
    while let Some(g) = queue.pop_front() {
        for &n in &adj[g] {
            if !open[n] {
                open[n] = true;
                queue.push_back(n);
            }
        }
    }
    let mut fills: Vec<Cell> = Vec::new();
    for (g, &(j, a, b)) in gaps.iter().enumerate() {
        if !open[g] {
            for i in a..=b {
                fills.push((i, j));
            }
        }
    }
    region.extend(fills);
}

/// Resolve checkerboard corners (two region cells touching only
/// diagonally) by filling one of the missing orthogonal cells, repeating
/// until no pinch vertex remains. Kept deliberately out of any larger
/// fixpoint with hole filling: alternating the two can zipper a narrow
/// corridor shut, and a corridor may be exactly what must stay open.
fn fill_pinches(region: &mut BTreeSet<Cell>) {
    loop {
        let mut to_add: Vec<Cell> = Vec::new();
        for &(i, j) in region.iter() {
            if region.contains(&(i + 1, j + 1))
                && !region.contains(&(i + 1, j))
                && !region.contains(&(i, j + 1))
            {
                to_add.push((i + 1, j));
            }
            if region.contains(&(i + 1, j - 1))
                && !region.contains(&(i + 1, j))
                && !region.contains(&(i, j - 1))
            {
                to_add.push((i + 1, j));
            }
        }
        if to_add.is_empty() {
            return;
        }
        region.extend(to_add);
    }
}

/// Boundary of a cell region as a single simple grid cycle (vertices in
/// grid units, counterclockwise, collinear runs merged). `None` when the
/// boundary pinches at a corner or has several components.
fn extract_boundary(region: &BTreeSet<Cell>) -> Option<Vec<Cell>> {
    let mut next: BTreeMap<Cell, Cell> = BTreeMap::new();
    let mut add = |from: Cell, to: Cell| next.insert(from, to).is_none();
    for &(i, j) in region {
        // Directed so the region lies on the left: CCW outer boundary.
        if !region.contains(&(i, j - 1)) && !add((i, j), (i + 1, j)) {
            return None;
        }
        if !region.contains(&(i + 1, j)) && !add((i + 1, j), (i + 1, j + 1)) {
            return None;
        }
        if !region.contains(&(i, j + 1)) && !add((i + 1, j + 1), (i, j + 1)) {
            return None;
        }
        if !region.contains(&(i - 1, j)) && !add((i, j + 1), (i, j)) {
            return None;
        }
    }
    let total = next.len();
    let start = *next.keys().next()?;
    let mut verts: Vec<Cell> = Vec::new();
    let mut cur = start;
    for _ in 0..total {
        verts.push(cur);
        cur = *next.get(&cur)?;
        if cur == start {
            break;
        }
    }
    if verts.len() < 4 || *next.get(verts.last()?)? != start {
        return None;
    }
    if verts.len() != total {
        // Leftover edges mean a second component (a hole).
        return None;
    }

    // Merge collinear runs; boundary edges are axis-aligned unit steps.
    let dir = |a: Cell, b: Cell| ((b.0 - a.0).signum(), (b.1 - a.1).signum());
    let mut merged: Vec<Cell> = Vec::with_capacity(verts.len());
    let n = verts.len();
    for idx in 0..n {
        let prev = verts[(idx + n - 1) % n];
        let here = verts[idx];
        let nxt = verts[(idx + 1) % n];
        if dir(prev, here) != dir(here, nxt) {
            merged.push(here);
        }
    }
    let unique: BTreeSet<Cell> = merged.iter().copied().collect();
    if unique.len() != merged.len() || merged.len() < 4 {
        return None;
    }
    Some(merged)
}

// ---------------------------------------------------------------------
// Loop construction and validation.

fn boundary_verts(scene: &Scene) -> Option<Vec<IPt>> {
    let marked = marked_cells(&scene.inner, scene.c)?;
    let mut region = dilate(&marked);
    // Fill wedge pockets, resolve the pinches that filling can expose,
    // then fill the one-cell holes a pinch fill can leave.
    fill_holes(&mut region);
    fill_pinches(&mut region);
    fill_holes(&mut region);
    let cells = extract_boundary(&region)?;
    Some(
        cells
            .into_iter()
            .map(|(i, j)| (i as i128 * scene.c, j as i128 * scene.c))
            .collect(),
    )
}

fn i_loop_valid(verts: &[IPt], scene: &Scene) -> bool {
    if i_signed_area2(verts) <= 0 {
        return false;
    }
    let n = verts.len();
    for k in 0..n {
        let (a, b) = (verts[k], verts[(k + 1) % n]);
        if i_segment_hits(a, b, &scene.inner) || i_segment_hits(a, b, &scene.outer) {
            return false;
        }
    }
    scene.inner.iter().all(|&q| i_winding(verts, q) == Some(1))
        && i_winding(verts, scene.outer[0]) == Some(0)
}

/// Shorten the staircase boundary by greedy chords. A chord between two
/// boundary vertices that misses both polylines either preserves the
/// loop's separation properties or breaks them wholesale; the caller
/// re-validates the result, so the only requirement here is to try
/// plausible chords cheaply. Chord endpoints are grid points, so
/// exactness is untouched.
fn simplify_loop(verts: &[IPt], scene: &Scene) -> Vec<IPt> {
    const WINDOW: usize = 1024;
    let n = verts.len();
    let chord_ok = |a: IPt, b: IPt| {
        !i_segment_hits(a, b, &scene.inner) && !i_segment_hits(a, b, &scene.outer)
    };
    let mut out: Vec<IPt> = vec![verts[0]];
    let mut i = 0usize;
    while i < n {
        let limit = (n - i).min(WINDOW);
        let mut best = 1;
        let mut step = 1;
        while step < limit {
            let trial = (step * 2).min(limit);
            if chord_ok(verts[i], verts[(i + trial) % n]) {
                best = trial;
                step = trial;
            } else {
                break;
            }
        }
        i += best;
        if i < n {
            out.push(verts[i]);
        }
    }
    out
}

fn to_rat_cycle(verts: &[IPt], scale: &BigInt) -> Option<Cycle> {
    let points: Vec<Pt> = verts
        .iter()
        .map(|&(x, y)| Pt::new(unscale(x, scale), unscale(y, scale)))
        .collect();
    Cycle::new(points).ok()
}

// ---------------------------------------------------------------------
// Cell-size selection.

fn min_dist2_between(a: &Polyline, b: &Polyline) -> Rat {
    let mut best: Option<Rat> = None;
    for (p, q) in a.segments() {
        for (r, s) in b.segments() {
            let d2 = dist2_segments(p, q, r, s);
            if best.as_ref().map_or(true, |b| d2 < *b) {
                best = Some(d2);
            }
        }
    }
    best.expect("polylines have segments")
}

/// Minimum squared distance between non-adjacent segments of a simple
/// polyline; `None` when every pair is adjacent.
fn min_self_dist2(l: &Polyline) -> Option<Rat> {
    let pts = l.points();
    let mut best: Option<Rat> = None;
    for i in 0..pts.len() - 1 {
        for j in (i + 2)..pts.len() - 1 {
            let d2 = dist2_segments(&pts[i], &pts[i + 1], &pts[j], &pts[j + 1]);
            if best.as_ref().map_or(true, |b| d2 < *b) {
                best = Some(d2);
            }
        }
    }
    best
}

/// Largest power of two `h` with `32 h^2 <= d2_sep` (i.e. `4 h` at most
/// the infinity-norm separation) and, when a self-clearance bound
/// exists, `64 h^2 <= d2_self`.
fn initial_cell_size(d2_sep: &Rat, d2_self: Option<&Rat>) -> Rat {
    let fits = |h: &Rat| {
        let h2 = h * h;
        &h2 * ratio(32, 1) <= *d2_sep
            && d2_self.map_or(true, |d2| &h2 * ratio(64, 1) <= *d2)
    };
    let two = ratio(2, 1);
    let mut h = Rat::one();
    let mut guard = 0;
    while !fits(&h) && guard < 256 {
        h /= &two;
        guard += 1;
    }
    let mut guard = 0;
    while fits(&(&h * &two)) && guard < 64 {
        h *= &two;
        guard += 1;
    }
    h
}

/// A simple counterclockwise cycle with `inner` in its bounded face and
/// `outer` in its unbounded face, disjoint from both, together with the
/// grid cell size used. Verified exactly; the cell size is refined (at
/// most 12 halvings) until every check passes.
pub fn separating_loop(inner: &Polyline, outer: &Polyline) -> Result<(Cycle, Rat), Error> {
    if !disjoint(inner, outer) {
        return Err(Error::InputsIntersect);
    }
    let d2_sep = min_dist2_between(inner, outer);
    let d2_self = min_self_dist2(inner);
    let mut h = initial_cell_size(&d2_sep, d2_self.as_ref());
    for _ in 0..=12 {
        if let Some(scene) = build_scene(inner, outer, &h) {
            if let Some(verts) = boundary_verts(&scene) {
                if i_loop_valid(&verts, &scene) {
                    let simp = simplify_loop(&verts, &scene);
                    let chosen = if simp.len() >= 3
                        && i_cycle_is_simple(&simp)
                        && i_loop_valid(&simp, &scene)
                    {
                        simp
                    } else {
                        verts
                    };
                    if let Some(cycle) = to_rat_cycle(&chosen, &scene.scale) {
                        return Ok((cycle, h));
                    }
                }
            }
        }
        h /= ratio(2, 1);
    }
    Err(Error::SeparationFailure)
}

// ---------------------------------------------------------------------
// Access path.

/// Cells (in units of `c`) whose closed square contains the scaled point
/// `p`: up to four when `p` lies on a grid line or corner.
fn cells_containing(p: IPt, c: i128) -> Vec<Cell> {
    let axis = |v: i128| -> Vec<i64> {
        if v.rem_euclid(c) == 0 {
            let i = floor_div(v, c) as i64;
            vec![i - 1, i]
        } else {
            vec![floor_div(v, c) as i64]
        }
    };
    let mut out = Vec::new();
    for &i in &axis(p.0) {
        for &j in &axis(p.1) {
            out.push((i, j));
        }
    }
    out
}

fn segment_hits_polyline(a: &Pt, b: &Pt, line: &Polyline) -> bool {
    line.segments().any(|(p, q)| segments_intersect(a, b, p, q))
}

/// A polyline from `start` to some vertex of `loop_`, exactly disjoint
/// from `obstacle`. Tries the straight segment to the nearest loop
/// vertex first, then falls back to BFS over grid cells whose closed
/// squares avoid the obstacle, routing through cell centers.
pub fn access_path(
    start: &Pt,
    loop_: &Cycle,
    obstacle: &Polyline,
    grid_cell: &Rat,
) -> Result<Polyline, Error> {
    if obstacle.contains_point(start) {
        return Err(Error::PointOnCurve);
    }
    let nearest = &loop_.points()[nearest_vertex(loop_, start)];
    if nearest != start && !segment_hits_polyline(start, nearest, obstacle) {
        return Polyline::new(vec![start.clone(), nearest.clone()]);
    }

    // Scale obstacle, loop and start together so the grid works in
    // integers; the loop's vertices and the start all have denominators
    // included in the lcm.
    let d = lcm_denoms(
        obstacle
            .points()
            .iter()
            .chain(loop_.points())
            .chain(core::iter::once(start)),
    );
    let scale = &d * grid_cell.denom();
    let c = big_to_coord(&(&d * grid_cell.numer())).ok_or(Error::PathNotFound)?;
    let obstacle_i = scale_points(obstacle.points(), &scale).ok_or(Error::PathNotFound)?;
    let start_i = scale_point(start, &scale).ok_or(Error::PathNotFound)?;
    let blocked = marked_cells(&obstacle_i, c).ok_or(Error::PathNotFound)?;

    // Search window: everything involved, plus a two-cell margin to
    // allow routing around the obstacle.
    let mut lo = (i64::MAX, i64::MAX);
    let mut hi = (i64::MIN, i64::MIN);
    let mut widen = |cell: Cell| {
        lo = (lo.0.min(cell.0), lo.1.min(cell.1));
        hi = (hi.0.max(cell.0), hi.1.max(cell.1));
    };
    for &cell in &blocked {
        widen(cell);
    }
    let mut loop_cells: Vec<(Cell, usize)> = Vec::new();
    for (idx, p) in loop_.points().iter().enumerate() {
        let pi = scale_point(p, &scale).ok_or(Error::PathNotFound)?;
        for cell in cells_containing(pi, c) {
            widen(cell);
            loop_cells.push((cell, idx));
        }
    }
    for cell in cells_containing(start_i, c) {
        widen(cell);
    }
    let lo = (lo.0 - 2, lo.1 - 2);
    let hi = (hi.0 + 2, hi.1 + 2);
    let in_window = |cell: Cell| {
        cell.0 >= lo.0 && cell.0 <= hi.0 && cell.1 >= lo.1 && cell.1 <= hi.1
    };

    let mut targets: BTreeMap<Cell, usize> = BTreeMap::new();
    for (cell, idx) in loop_cells {
        if in_window(cell) && !blocked.contains(&cell) {
            targets.entry(cell).or_insert(idx);
        }
    }

    let mut queue: VecDeque<Cell> = VecDeque::new();
    let mut parent: BTreeMap<Cell, Cell> = BTreeMap::new();
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    for cell in cells_containing(start_i, c) {
        if in_window(cell) && !blocked.contains(&cell) && seen.insert(cell) {
            queue.push_back(cell);
        }
    }
    if queue.is_empty() {
        return Err(Error::PathNotFound);
    }

    let center = |cell: Cell| {
        let half = ratio(1, 2);
        Pt::new(
            (Rat::from_integer(cell.0.into()) + &half) * grid_cell,
            (Rat::from_integer(cell.1.into()) + &half) * grid_cell,
        )
    };

    while let Some(cell) = queue.pop_front() {
        if let Some(&idx) = targets.get(&cell) {
            let vertex = &loop_.points()[idx];
            let mut cells_path = vec![cell];
            let mut cur = cell;
            while let Some(&p) = parent.get(&cur) {
                cells_path.push(p);
                cur = p;
            }
            cells_path.reverse();
            let mut points = vec![start.clone()];
            points.extend(cells_path.into_iter().map(center));
            points.push(vertex.clone());
            points.dedup();
            let path = Polyline::new(points)?;
            // The grid guarantees clearance; certify it exactly anyway.
            if !disjoint(&path, obstacle) {
                return Err(Error::PathNotFound);
            }
            return Ok(path);
        }
        let (i, j) = cell;
        for n in [(i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)] {
            if in_window(n) && !blocked.contains(&n) && seen.insert(n) {
                parent.insert(n, cell);
                queue.push_back(n);
            }
        }
    }
    Err(Error::PathNotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_geom::rat;
    use crate::polyline::winding_closed;

    fn pl(pts: &[(i64, i64)]) -> Polyline {
        Polyline::new(pts.iter().map(|&(x, y)| Pt::int(x, y)).collect()).unwrap()
    }

    #[test]
    fn separates_parallel_segments() {
        let inner = pl(&[(0, 0), (4, 0)]);
        let outer = pl(&[(0, 10), (4, 10)]);
        let (cycle, _h) = separating_loop(&inner, &outer).unwrap();
        assert!(cycle.signed_area2() > rat(0));
        assert_eq!(winding_closed(&cycle, &Pt::int(0, 0)), Ok(1));
        assert_eq!(winding_closed(&cycle, &Pt::int(4, 0)), Ok(1));
        assert_eq!(winding_closed(&cycle, &Pt::int(0, 10)), Ok(0));
    }

    #[test]
    fn crossing_inputs_rejected() {
        let a = pl(&[(0, 0), (4, 4)]);
        let b = pl(&[(0, 4), (4, 0)]);
        assert_eq!(separating_loop(&a, &b), Err(Error::InputsIntersect));
    }

    #[test]
    fn loop_is_disjoint_and_simple() {
        let inner = pl(&[(0, 0), (4, 0), (4, 4)]);
        let outer = pl(&[(-3, -3), (-3, 8)]);
        let (cycle, _h) = separating_loop(&inner, &outer).unwrap();
        assert!(cycle.is_simple());
        assert!(crate::polyline::cycle_disjoint_from(&cycle, &inner));
        assert!(crate::polyline::cycle_disjoint_from(&cycle, &outer));
    }

    #[test]
    fn straight_access_path() {
        let inner = pl(&[(0, 0), (4, 0)]);
        let outer = pl(&[(0, 20), (4, 20)]);
        let (cycle, h) = separating_loop(&inner, &outer).unwrap();
        let start = Pt::int(2, 20);
        let path = access_path(&start, &cycle, &inner, &h).unwrap();
        assert_eq!(path.first(), &start);
        assert!(cycle.points().contains(path.last()));
        assert!(disjoint(&path, &inner));
    }

    #[test]
    fn detour_access_path() {
        // A wall between the start and the loop forces a grid detour.
        let inner = pl(&[(0, 0), (4, 0)]);
        let wall = pl(&[(-6, -8), (-6, 8)]);
        let (cycle, h) = separating_loop(&inner, &wall).unwrap();
        let start = Pt::int(-10, 0);
        let path = access_path(&start, &cycle, &wall, &h).unwrap();
        assert!(path.points().len() > 2);
        assert!(disjoint(&path, &wall));
        assert!(cycle.points().contains(path.last()));
    }

    #[test]
    fn start_on_obstacle_rejected() {
        let inner = pl(&[(0, 0), (4, 0)]);
        let outer = pl(&[(0, 10), (4, 10)]);
        let (cycle, h) = separating_loop(&inner, &outer).unwrap();
        assert_eq!(
            access_path(&Pt::int(2, 0), &cycle, &inner, &h),
            Err(Error::PointOnCurve)
        );
    }

    #[test]
    fn mark_segment_touch_rules() {
        let mut cells = BTreeSet::new();
        // A horizontal segment on a grid line touches both rows.
        assert!(mark_segment((0, 1), (2, 1), 1, &mut cells));
        assert!(cells.contains(&(0, 0)));
        assert!(cells.contains(&(0, 1)));
        assert!(cells.contains(&(1, 0)));
        // End exactly on a vertical line touches the next column.
        assert!(cells.contains(&(2, 0)) && cells.contains(&(-1, 1)));
    }

    #[test]
    fn winding_mirror_agrees() {
        // Integer winding matches the rational one on a small loop.
        let verts = [(0, 0), (4, 0), (4, 4), (0, 4)].map(|(x, y)| (x as i128, y as i128));
        assert_eq!(i_winding(&verts, (2, 2)), Some(1));
        assert_eq!(i_winding(&verts, (5, 2)), Some(0));
        assert_eq!(i_winding(&verts, (4, 2)), None);
        let rev = [(0, 0), (0, 4), (4, 4), (4, 0)].map(|(x, y)| (x as i128, y as i128));
        assert_eq!(i_winding(&rev, (2, 2)), Some(-1));
    }
}
