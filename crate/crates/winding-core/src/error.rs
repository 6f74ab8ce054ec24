//! Error type shared by the geometry and construction modules.

use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Concatenation requires the first line to end where the second starts.
    EndpointMismatch,
    /// `power` is undefined for exponent zero.
    ZeroPower,
    /// The query point lies on the curve, so the winding number is undefined.
    PointOnCurve,
    /// Consecutive vertices of the requested cycle are not adjacent in the graph.
    NotACycle(u32, u32),
    /// The drawing fails the almost-embedding check.
    NotAlmostEmbedding,
    /// The image of the named vertex lies on the image of its opposite cycle.
    WindingUndefined(u32),
    /// The rejection sampler hit its attempt cap without an accepted drawing.
    SamplerExhausted { attempts: u32 },
    /// Spiral construction needs a strictly counterclockwise triangle.
    DegenerateTriangle,
    /// The grid refinement cap was hit without a valid separating loop.
    SeparationFailure,
    /// The two polylines handed to `separating_loop` intersect.
    InputsIntersect,
    /// Grid search found no route from the start point to the loop.
    PathNotFound,
    /// The finger move requires every edge polyline of the input to be simple.
    NotSimple,
    /// Realizable winding vectors of K4 have odd sum.
    ParityViolation,
    /// A point tuple violates a polyline invariant (too short, or a
    /// zero-length segment).
    InvalidPolyline,
    /// A drawing's edge polyline does not start/end at its vertices, or an
    /// edge is missing.
    InvalidDrawing,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EndpointMismatch => write!(f, "concatenation endpoints do not match"),
            Error::ZeroPower => write!(f, "power of a closed polyline is undefined for n = 0"),
            Error::PointOnCurve => write!(f, "point lies on the curve"),
            Error::NotACycle(u, v) => write!(f, "vertices {u} and {v} are not adjacent"),
            Error::NotAlmostEmbedding => write!(f, "drawing is not an almost embedding"),
            Error::WindingUndefined(v) => {
                write!(f, "winding undefined: vertex {v} lies on its opposite cycle")
            }
            Error::SamplerExhausted { attempts } => {
                write!(f, "sampler exhausted after {attempts} attempts")
            }
            Error::DegenerateTriangle => {
                write!(f, "triangle is degenerate or not counterclockwise")
            }
            Error::SeparationFailure => write!(f, "failed to build a separating loop"),
            Error::InputsIntersect => write!(f, "input polylines intersect"),
            Error::PathNotFound => write!(f, "no obstacle-avoiding path found"),
            Error::NotSimple => write!(f, "edge polyline has self-intersections"),
            Error::ParityViolation => write!(f, "winding vector sum must be odd"),
            Error::InvalidPolyline => write!(f, "invalid polyline"),
            Error::InvalidDrawing => write!(f, "invalid drawing"),
        }
    }
}

impl core::error::Error for Error {}
