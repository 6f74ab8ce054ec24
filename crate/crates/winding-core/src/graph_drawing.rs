//! Graphs, piecewise-linear drawings, almost-embedding validation,
//! winding-number vectors, and a seeded rejection sampler.
//!
//! A drawing stores one polyline per edge under the canonical
//! orientation `(min, max)`; the reversed traversal is produced on
//! demand, so orientation conventions live in exactly one place.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::Error;
use crate::exact_geom::Pt;
use crate::polyline::{disjoint, winding_closed, Cycle, Polyline};

/// A simple graph with 1-based consecutive vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: u32,
    edges: BTreeSet<(u32, u32)>,
}

impl Graph {
    pub fn new(
        vertex_count: u32,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Graph, Error> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v || u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(Error::InvalidDrawing);
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph {
            vertex_count,
            edges: set,
        })
    }

    /// The complete graph on vertices 1..4.
    pub fn k4() -> Graph {
        Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    /// K5 with the edge 45 deleted.
    pub fn k5_minus_45() -> Graph {
        let edges = (1..=5u32)
            .flat_map(|u| ((u + 1)..=5).map(move |v| (u, v)))
            .filter(|&e| e != (4, 5));
        Graph::new(5, edges).unwrap()
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn is_edge(&self, u: u32, v: u32) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }
}

/// A vertex or an edge; two simplices are adjacent when they share a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Simplex {
    Vertex(u32),
    Edge(u32, u32),
}

impl Simplex {
    fn vertices(&self) -> [u32; 2] {
        match *self {
            Simplex::Vertex(v) => [v, v],
            Simplex::Edge(u, v) => [u, v],
        }
    }

    fn adjacent(&self, other: &Simplex) -> bool {
        let a = self.vertices();
        let b = other.vertices();
        a.iter().any(|v| b.contains(v))
    }
}

impl core::fmt::Display for Simplex {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Simplex::Vertex(v) => write!(f, "vertex {v}"),
            Simplex::Edge(u, v) => write!(f, "edge {u}{v}"),
        }
    }
}

/// One offending pair of non-adjacent simplices whose images meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub first: Simplex,
    pub second: Simplex,
    pub witness: String,
}

/// Outcome of the almost-embedding check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub is_almost_embedding: bool,
    pub violations: Vec<Violation>,
    pub windings_defined: bool,
}

/// The four winding numbers `(w_f(1), ..., w_f(4))` of a K4 drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WindingVector {
    pub w1: i64,
    pub w2: i64,
    pub w3: i64,
    pub w4: i64,
}

impl WindingVector {
    pub fn new(w1: i64, w2: i64, w3: i64, w4: i64) -> WindingVector {
        WindingVector { w1, w2, w3, w4 }
    }

    pub fn as_array(&self) -> [i64; 4] {
        [self.w1, self.w2, self.w3, self.w4]
    }

    pub fn sum(&self) -> i64 {
        self.w1 + self.w2 + self.w3 + self.w4
    }
}

impl core::fmt::Display for WindingVector {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w1, self.w2, self.w3, self.w4)
    }
}

/// A piecewise-linear drawing: vertex positions plus one polyline per
/// edge, stored from the smaller to the larger endpoint id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    graph: Graph,
    vertex_pos: BTreeMap<u32, Pt>,
    edge_lines: BTreeMap<(u32, u32), Polyline>,
}

impl Drawing {
    pub fn new(
        graph: Graph,
        vertex_pos: BTreeMap<u32, Pt>,
        edge_lines: BTreeMap<(u32, u32), Polyline>,
    ) -> Result<Drawing, Error> {
        for v in 1..=graph.vertex_count() {
            if !vertex_pos.contains_key(&v) {
                return Err(Error::InvalidDrawing);
            }
        }
        if vertex_pos.len() != graph.vertex_count() as usize {
            return Err(Error::InvalidDrawing);
        }
        let keys: BTreeSet<(u32, u32)> = edge_lines.keys().copied().collect();
        if keys != graph.edges {
            return Err(Error::InvalidDrawing);
        }
        for (&(u, v), line) in &edge_lines {
            if line.first() != &vertex_pos[&u] || line.last() != &vertex_pos[&v] {
                return Err(Error::EndpointMismatch);
            }
        }
        Ok(Drawing {
            graph,
            vertex_pos,
            edge_lines,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_pos(&self, v: u32) -> &Pt {
        &self.vertex_pos[&v]
    }

    pub fn vertex_positions(&self) -> &BTreeMap<u32, Pt> {
        &self.vertex_pos
    }

    pub fn edge_lines(&self) -> &BTreeMap<(u32, u32), Polyline> {
        &self.edge_lines
    }

    /// The stored polyline of the canonical edge `(min, max)`.
    pub fn edge_line(&self, u: u32, v: u32) -> &Polyline {
        &self.edge_lines[&(u.min(v), u.max(v))]
    }

    /// The edge's polyline oriented from `f(u)` to `f(v)`.
    pub fn edge_oriented(&self, u: u32, v: u32) -> Polyline {
        let line = self.edge_line(u, v);
        if u < v {
            line.clone()
        } else {
            line.reverse()
        }
    }

    /// A drawing equal to `self` except that the edge `(u, v)` carries
    /// `line` (oriented from the smaller to the larger id).
    pub fn with_edge_line(&self, u: u32, v: u32, line: Polyline) -> Result<Drawing, Error> {
        let mut edge_lines = self.edge_lines.clone();
        edge_lines.insert((u.min(v), u.max(v)), line);
        Drawing::new(self.graph.clone(), self.vertex_pos.clone(), edge_lines)
    }

    fn simplices(&self) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = (1..=self.graph.vertex_count())
            .map(Simplex::Vertex)
            .collect();
        out.extend(self.graph.edges().map(|(u, v)| Simplex::Edge(u, v)));
        out
    }

    fn check_pair(&self, a: Simplex, b: Simplex) -> Option<Violation> {
        let witness = match (a, b) {
            (Simplex::Vertex(u), Simplex::Vertex(v)) => {
                if self.vertex_pos[&u] == self.vertex_pos[&v] {
                    Some(format!("both map to {:?}", self.vertex_pos[&u]))
                } else {
                    None
                }
            }
            (Simplex::Vertex(w), Simplex::Edge(u, v))
            | (Simplex::Edge(u, v), Simplex::Vertex(w)) => {
                if self.edge_line(u, v).contains_point(&self.vertex_pos[&w]) {
                    Some(format!("f({w}) = {:?} lies on f({u}{v})", self.vertex_pos[&w]))
                } else {
                    None
                }
            }
            (Simplex::Edge(a1, a2), Simplex::Edge(b1, b2)) => {
                if !disjoint(self.edge_line(a1, a2), self.edge_line(b1, b2)) {
                    Some(format!("f({a1}{a2}) meets f({b1}{b2})"))
                } else {
                    None
                }
            }
        };
        witness.map(|witness| Violation {
            first: a,
            second: b,
            witness,
        })
    }

    fn violations(&self, stop_at_first: bool) -> Vec<Violation> {
        let simplices = self.simplices();
        let mut out = Vec::new();
        for i in 0..simplices.len() {
            for j in (i + 1)..simplices.len() {
                let (a, b) = (simplices[i], simplices[j]);
                if a.adjacent(&b) {
                    continue;
                }
                if let Some(v) = self.check_pair(a, b) {
                    out.push(v);
                    if stop_at_first {
                        return out;
                    }
                }
            }
        }
        out
    }

    /// Fast accept/reject used by the sampler and the constructors.
    pub fn first_violation(&self) -> Option<Violation> {
        self.violations(true).into_iter().next()
    }

    /// Check every pair of non-adjacent simplices (vertex-vertex,
    /// vertex-edge, edge-edge) and report all offenders. This is the
    /// simplex-wise definition; for K4 and K5 minus an edge it agrees
    /// with the edge-only one and additionally guarantees that all
    /// winding numbers below are defined.
    pub fn is_almost_embedding(&self) -> ValidationReport {
        let violations = self.violations(false);
        let windings_defined = !violations
            .iter()
            .any(|v| matches!(v.first, Simplex::Vertex(_)) || matches!(v.second, Simplex::Vertex(_)));
        ValidationReport {
            is_almost_embedding: violations.is_empty(),
            violations,
            windings_defined,
        }
    }

    /// The image of the directed cycle `v_1 v_2 ... v_n` as a closed
    /// polyline.
    pub fn restriction_to_cycle(&self, cycle_vertices: &[u32]) -> Result<Cycle, Error> {
        let n = cycle_vertices.len();
        if n < 3 {
            return Err(Error::NotACycle(
                cycle_vertices.first().copied().unwrap_or(0),
                cycle_vertices.last().copied().unwrap_or(0),
            ));
        }
        let mut points = Vec::new();
        for i in 0..n {
            let u = cycle_vertices[i];
            let v = cycle_vertices[(i + 1) % n];
            if !self.graph.is_edge(u, v) {
                return Err(Error::NotACycle(u, v));
            }
            let line = self.edge_oriented(u, v);
            let pts = line.points();
            points.extend_from_slice(&pts[..pts.len() - 1]);
        }
        Cycle::new(points)
    }

    /// The winding vector of a K4 drawing: `w_j` is the winding of the
    /// image of `C_j` (the remaining vertices in ascending order) around
    /// `f(j)`.
    pub fn winding_vector_k4(&self) -> Result<WindingVector, Error> {
        if self.graph != Graph::k4() {
            return Err(Error::InvalidDrawing);
        }
        if self.first_violation().is_some() {
            return Err(Error::NotAlmostEmbedding);
        }
        let mut w = [0i64; 4];
        for j in 1..=4u32 {
            let cycle_vertices: Vec<u32> = (1..=4).filter(|&v| v != j).collect();
            let cycle = self.restriction_to_cycle(&cycle_vertices)?;
            w[j as usize - 1] = winding_closed(&cycle, self.vertex_pos(j))
                .map_err(|_| Error::WindingUndefined(j))?;
        }
        Ok(WindingVector::new(w[0], w[1], w[2], w[3]))
    }

    /// `w(123, 4) - w(123, 5)` for a drawing of K5 minus the edge 45.
    pub fn k5_difference(&self) -> Result<i64, Error> {
        if self.graph != Graph::k5_minus_45() {
            return Err(Error::InvalidDrawing);
        }
        if self.first_violation().is_some() {
            return Err(Error::NotAlmostEmbedding);
        }
        let cycle = self.restriction_to_cycle(&[1, 2, 3])?;
        let w4 = winding_closed(&cycle, self.vertex_pos(4))
            .map_err(|_| Error::WindingUndefined(4))?;
        let w5 = winding_closed(&cycle, self.vertex_pos(5))
            .map_err(|_| Error::WindingUndefined(5))?;
        Ok(w4 - w5)
    }
}

/// Settings for [`sample_random`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplerParams {
    /// Vertex positions are uniform on `{0..=grid_side}^2`.
    pub grid_side: i64,
    /// Each edge gets between 0 and this many interior bend points.
    pub max_bends: u32,
    /// Bends are sampled in the edge's bounding box expanded by this
    /// margin (keeps edges near their chords; raises acceptance).
    pub bend_window: i64,
    /// Rejection attempts before giving up on a drawing.
    pub max_attempts: u32,
}

impl Default for SamplerParams {
    fn default() -> SamplerParams {
        SamplerParams {
            grid_side: 100,
            max_bends: 3,
            bend_window: 10,
            max_attempts: 10_000,
        }
    }
}

fn rand_range(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    // hi inclusive; modulo bias is irrelevant for a rejection sampler.
    debug_assert!(lo <= hi);
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as i64
}

/// Draw a random almost embedding of `g` (K4 or K5 minus 45) by
/// rejection sampling; deterministic given `(seed, params)`. Returns the
/// accepted drawing and the number of attempts it took.
pub fn sample_random_counted(
    g: &Graph,
    seed: u64,
    params: &SamplerParams,
) -> Result<(Drawing, u32), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=params.max_attempts {
        let mut vertex_pos = BTreeMap::new();
        for v in 1..=g.vertex_count() {
            vertex_pos.insert(
                v,
                Pt::int(
                    rand_range(&mut rng, 0, params.grid_side),
                    rand_range(&mut rng, 0, params.grid_side),
                ),
            );
        }
        let mut edge_lines = BTreeMap::new();
        let mut degenerate = false;
        for (u, v) in g.edges() {
            let (a, b) = (&vertex_pos[&u], &vertex_pos[&v]);
            let bends = rand_range(&mut rng, 0, params.max_bends as i64);
            let clip = |t: i64| t.clamp(0, params.grid_side);
            let (ax, ay) = (a.x.to_integer(), a.y.to_integer());
            let (bx, by) = (b.x.to_integer(), b.y.to_integer());
            let (ax, ay): (i64, i64) = (i64::try_from(ax).unwrap(), i64::try_from(ay).unwrap());
            let (bx, by): (i64, i64) = (i64::try_from(bx).unwrap(), i64::try_from(by).unwrap());
            let xlo = clip(ax.min(bx) - params.bend_window);
            let xhi = clip(ax.max(bx) + params.bend_window);
            let ylo = clip(ay.min(by) - params.bend_window);
            let yhi = clip(ay.max(by) + params.bend_window);
            let mut points = Vec::with_capacity(bends as usize + 2);
            points.push(a.clone());
            for _ in 0..bends {
                points.push(Pt::int(
                    rand_range(&mut rng, xlo, xhi),
                    rand_range(&mut rng, ylo, yhi),
                ));
            }
            points.push(b.clone());
            match Polyline::new(points) {
                Ok(line) => {
                    edge_lines.insert((u, v), line);
                }
                Err(_) => {
                    degenerate = true;
                    break;
                }
            }
        }
        if degenerate {
            continue;
        }
        let drawing = Drawing::new(g.clone(), vertex_pos, edge_lines)?;
        if drawing.first_violation().is_none() {
            return Ok((drawing, attempt));
        }
    }
    Err(Error::SamplerExhausted {
        attempts: params.max_attempts,
    })
}

/// [`sample_random_counted`] without the attempt count.
pub fn sample_random(g: &Graph, seed: u64, params: &SamplerParams) -> Result<Drawing, Error> {
    sample_random_counted(g, seed, params).map(|(d, _)| d)
}
