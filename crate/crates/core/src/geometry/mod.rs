//! Closed balls in 1 to 4 dimensions with exact rational coordinates.
//!
//! Every metric predicate compares squared quantities, so no square roots
//! and no floating point are ever needed.

mod interior;
mod predicates;
mod scene;
mod transform;

pub use interior::{interior_point, interior_point_1d_exact, interior_witness_radius, merged_intervals, TriBool};
pub use predicates::{
    ball_mereo, concentric, diam_tangency, equidistant, point_of, sq_dist, tangency, DiamKind, MereoKind, TangencyKind,
};
pub use scene::{parse_scene, Scene};
pub use transform::{transform, transform_point, Transform};

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Exact rational number.
pub type Rat = BigRational;

pub const MAX_DIM: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeoError {
    #[error("dimension mismatch: {expected} vs {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension {0} outside 1..={MAX_DIM}")]
    DimensionOutOfRange(usize),
    #[error("radius of `{0}` must be positive")]
    NonpositiveRadius(String),
    #[error("scale factor must be positive")]
    NonpositiveScale,
    #[error("not a permutation of the coordinates")]
    InvalidPermutation,
    #[error("exact interior test needs dimension 1, got {0}")]
    DimensionRequired1(usize),
    #[error("solid `{0}` has no parts")]
    EmptySolid(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("label `{0}` used twice")]
    DuplicateLabel(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Parses `7`, `-3/4` and similar.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() || s.contains(char::is_whitespace) {
        return None;
    }
    Rat::from_str(s).ok()
}

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// A closed ball.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ball {
    pub label: String,
    pub center: Vec<Rat>,
    pub radius: Rat,
}

impl Ball {
    pub fn new(label: impl Into<String>, center: Vec<Rat>, radius: Rat) -> Result<Ball, GeoError> {
        let label = label.into();
        if center.is_empty() || center.len() > MAX_DIM {
            return Err(GeoError::DimensionOutOfRange(center.len()));
        }
        if !radius.is_positive() {
            return Err(GeoError::NonpositiveRadius(label));
        }
        Ok(Ball { label, center, radius })
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    /// Same center and radius, labels ignored.
    pub fn same_shape(&self, other: &Ball) -> bool {
        self.center == other.center && self.radius == other.radius
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, coords: &[Rat]) -> fmt::Result {
    f.write_str("(")?;
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{c}")?;
    }
    f.write_str(")")
}

impl fmt::Display for Ball {
    /// Scene-file syntax: `ball A (0, 1/2) 3/4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ball {} ", self.label)?;
        write_tuple(f, &self.center)?;
        write!(f, " {}", self.radius)
    }
}

/// A point, represented by the common center of a concentricity class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GPoint {
    pub coords: Vec<Rat>,
}

impl GPoint {
    pub fn new(coords: Vec<Rat>) -> GPoint {
        GPoint { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

impl fmt::Display for GPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.coords)
    }
}

/// A finite sum of balls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solid {
    pub label: String,
    pub parts: Vec<Ball>,
}

impl Solid {
    pub fn new(label: impl Into<String>, parts: Vec<Ball>) -> Result<Solid, GeoError> {
        let label = label.into();
        let Some(first) = parts.first() else {
            return Err(GeoError::EmptySolid(label));
        };
        let dim = first.dim();
        if let Some(b) = parts.iter().find(|b| b.dim() != dim) {
            return Err(GeoError::DimensionMismatch { expected: dim, found: b.dim() });
        }
        Ok(Solid { label, parts })
    }

    pub fn dim(&self) -> usize {
        self.parts[0].dim()
    }
}

impl From<Ball> for Solid {
    fn from(b: Ball) -> Solid {
        Solid { label: b.label.clone(), parts: vec![b] }
    }
}

pub(crate) fn same_dim(a: usize, b: usize) -> Result<(), GeoError> {
    if a == b {
        Ok(())
    } else {
        Err(GeoError::DimensionMismatch { expected: a, found: b })
    }
}

/// True iff `q` is the square of a rational; returns the root.
pub fn rational_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rat::zero());
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rat::new(n, d))
}
