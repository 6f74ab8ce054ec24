//! The exact JSON drawing format: rationals as strings, never floats, so
//! the validator's guarantees survive persistence. Serialization is
//! canonical (sorted keys, reduced fractions), making documents
//! diff-able and hashable.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use winding_core::{Drawing, Graph, Polyline, Pt, Rat};

use crate::error::CliError;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertex_count: u32,
    pub edges: Vec<[u32; 2]>,
}

/// The persisted form of a [`Drawing`]. Coordinates are exact strings
/// `"numerator/denominator"`, the denominator omitted when 1; edge keys
/// are `"u-v"` with `u < v`.
#[derive(Debug, Serialize, Deserialize)]
pub struct DrawingDocument {
    pub format_version: String,
    pub graph: GraphDoc,
    pub vertices: BTreeMap<String, [String; 2]>,
    pub edge_lines: BTreeMap<String, Vec<[String; 2]>>,
}

fn rat_to_string(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rat_from_string(s: &str) -> Result<Rat, CliError> {
    let bad = || CliError::BadRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

fn point_to_doc(p: &Pt) -> [String; 2] {
    [rat_to_string(&p.x), rat_to_string(&p.y)]
}

fn point_from_doc(p: &[String; 2]) -> Result<Pt, CliError> {
    Ok(Pt::new(rat_from_string(&p[0])?, rat_from_string(&p[1])?))
}

pub fn to_document(d: &Drawing) -> DrawingDocument {
    DrawingDocument {
        format_version: FORMAT_VERSION.to_string(),
        graph: GraphDoc {
            vertex_count: d.graph().vertex_count(),
            edges: d.graph().edges().map(|(u, v)| [u, v]).collect(),
        },
        vertices: d
            .vertex_positions()
            .iter()
            .map(|(v, p)| (v.to_string(), point_to_doc(p)))
            .collect(),
        edge_lines: d
            .edge_lines()
            .iter()
            .map(|(&(u, v), line)| {
                (
                    format!("{u}-{v}"),
                    line.points().iter().map(point_to_doc).collect(),
                )
            })
            .collect(),
    }
}

/// Canonical text form: pretty JSON with sorted keys and a trailing
/// newline, deterministic for a given drawing.
pub fn serialize_drawing(d: &Drawing) -> String {
    let mut text =
        serde_json::to_string_pretty(&to_document(d)).expect("document serialization is total");
    text.push('\n');
    text
}

pub fn from_document(doc: &DrawingDocument) -> Result<Drawing, CliError> {
    if doc.format_version != FORMAT_VERSION {
        return Err(CliError::Schema(format!(
            "unsupported format_version {:?}",
            doc.format_version
        )));
    }
    let graph = Graph::new(doc.graph.vertex_count, doc.graph.edges.iter().map(|e| (e[0], e[1])))
        .map_err(|_| CliError::Schema("invalid graph edge list".to_string()))?;

    let mut vertex_pos = BTreeMap::new();
    for (key, p) in &doc.vertices {
        let v: u32 = key
            .parse()
            .map_err(|_| CliError::Schema(format!("vertex key {key:?} is not an id")))?;
        vertex_pos.insert(v, point_from_doc(p)?);
    }

    let mut edge_lines = BTreeMap::new();
    for (key, pts) in &doc.edge_lines {
        let (u, v) = key
            .split_once('-')
            .and_then(|(a, b)| Some((a.parse::<u32>().ok()?, b.parse::<u32>().ok()?)))
            .filter(|&(u, v)| u < v)
            .ok_or_else(|| CliError::Schema(format!("edge key {key:?} is not \"u-v\"")))?;
        let points = pts.iter().map(point_from_doc).collect::<Result<Vec<_>, _>>()?;
        edge_lines.insert((u, v), Polyline::new(points)?);
    }

    Ok(Drawing::new(graph, vertex_pos, edge_lines)?)
}

pub fn parse_drawing(text: &str) -> Result<Drawing, CliError> {
    let doc: DrawingDocument =
        serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))?;
    from_document(&doc)
}
