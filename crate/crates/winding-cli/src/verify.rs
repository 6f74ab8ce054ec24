//! Independent oracles and theorem fuzzers: the float angle-sum winding
//! number (cross-checking the exact crossing count), the odd-parity
//! check for K4 winding vectors, and the ±1 check for the K5∖45
//! difference — both fuzzed over seeded random almost embeddings.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use winding_core::graph_drawing::{sample_random_counted, SamplerParams};
use winding_core::{Cycle, Drawing, Error, Graph, Pt};

/// Winding number as the angle sum around the closed traversal, divided
/// by 2π, in floats. Used only to cross-check the exact crossing-count
/// winding; the off-curve precondition is still checked exactly.
pub fn winding_oracle(c: &Cycle, p: &Pt) -> Result<f64, Error> {
    if c.contains_point(p) {
        return Err(Error::PointOnCurve);
    }
    let (px, py) = p.to_f64();
    let mut sum = 0.0;
    for (a, b) in c.segments() {
        let (ax, ay) = a.to_f64();
        let (bx, by) = b.to_f64();
        let (ux, uy) = (ax - px, ay - py);
        let (vx, vy) = (bx - px, by - py);
        sum += f64::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
    }
    Ok(sum / std::f64::consts::TAU)
}

/// Does the K4 drawing's winding vector have odd sum?
pub fn check_parity(d: &Drawing) -> Result<bool, Error> {
    Ok(d.winding_vector_k4()?.sum() % 2 != 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// K4: winding-vector sum must be odd.
    K4Parity,
    /// K5∖45: the winding difference must be ±1.
    K5Pm1,
}

impl GraphKind {
    pub fn graph(self) -> Graph {
        match self {
            GraphKind::K4Parity => Graph::k4(),
            GraphKind::K5Pm1 => Graph::k5_minus_45(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::K4Parity => "k4_parity",
            GraphKind::K5Pm1 => "k5_pm1",
        }
    }
}

/// One accepted sample that violated the fuzzed property. Must never
/// occur: the properties are proved facts, so a failure is a hard bug in
/// the sampler, the validator, or the winding code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzFailure {
    pub seed: u64,
    pub summary: String,
    pub observed: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzReport {
    pub kind_name: &'static str,
    pub samples_attempted: u64,
    pub samples_accepted: u64,
    pub failures: Vec<FuzzFailure>,
    pub elapsed_secs: f64,
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} accepted of {} attempted, {} failures, {:.2}s",
            self.kind_name,
            self.samples_accepted,
            self.samples_attempted,
            self.failures.len(),
            self.elapsed_secs
        )
    }
}

fn drawing_summary(d: &Drawing) -> String {
    let pos: Vec<String> = d
        .vertex_positions()
        .iter()
        .map(|(v, p)| {
            let (x, y) = p.to_f64();
            format!("{v}:({x},{y})")
        })
        .collect();
    pos.join(" ")
}

fn check_sample(kind: GraphKind, d: &Drawing) -> Result<Option<i64>, Error> {
    // Returns the observed bad value, if any.
    match kind {
        GraphKind::K4Parity => {
            let sum = d.winding_vector_k4()?.sum();
            Ok((sum % 2 == 0).then_some(sum))
        }
        GraphKind::K5Pm1 => {
            let diff = d.k5_difference()?;
            Ok((diff != 1 && diff != -1).then_some(diff))
        }
    }
}

/// Draw `count` accepted samples (sample seeds `seed..seed+count`,
/// partitioned across workers) and check the property on each;
/// deterministic per seed.
pub fn fuzz(kind: GraphKind, count: u64, seed: u64) -> Result<FuzzReport, Error> {
    let start = Instant::now();
    let graph = kind.graph();
    let params = SamplerParams::default();
    let results: Vec<(u64, Option<FuzzFailure>)> = (0..count)
        .into_par_iter()
        .map(|i| {
            let sample_seed = seed.wrapping_add(i);
            let (drawing, attempts) = sample_random_counted(&graph, sample_seed, &params)?;
            let failure = check_sample(kind, &drawing)?.map(|observed| FuzzFailure {
                seed: sample_seed,
                summary: drawing_summary(&drawing),
                observed,
            });
            Ok((attempts as u64, failure))
        })
        .collect::<Result<_, Error>>()?;

    let mut report = FuzzReport {
        kind_name: kind.name(),
        samples_attempted: 0,
        samples_accepted: count,
        failures: Vec::new(),
        elapsed_secs: 0.0,
    };
    for (attempts, failure) in results {
        report.samples_attempted += attempts;
        report.failures.extend(failure);
    }
    report.elapsed_secs = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Persist failing seeds for replay: one line per failure,
/// `seed<TAB>graph_kind<TAB>observed`.
pub fn write_failures(report: &FuzzReport, path: &Path) -> std::io::Result<()> {
    let mut out = Vec::new();
    for f in &report.failures {
        writeln!(out, "{}\t{}\t{}", f.seed, report.kind_name, f.observed)?;
    }
    crate::atomic_write(path, &out)
}
