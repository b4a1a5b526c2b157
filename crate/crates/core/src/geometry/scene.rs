//! `.geo` scene files.
//!
//! ```text
//! dim: 2
//! ball A (0, 1/2) 3/4
//! ball B (1, 0) 1
//! solid S = A B
//! ```

use std::collections::HashSet;
use std::fmt;

use super::{parse_rat, Ball, GeoError, Solid, MAX_DIM};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scene {
    pub dim: usize,
    pub balls: Vec<Ball>,
    pub solids: Vec<Solid>,
}

impl Scene {
    /// Validates dimensions and label uniqueness across balls and solids.
    pub fn new(dim: usize, balls: Vec<Ball>, solids: Vec<Solid>) -> Result<Scene, GeoError> {
        if dim == 0 || dim > MAX_DIM {
            return Err(GeoError::DimensionOutOfRange(dim));
        }
        let mut labels = HashSet::new();
        for b in &balls {
            super::same_dim(dim, b.dim())?;
            if !labels.insert(b.label.as_str()) {
                return Err(GeoError::DuplicateLabel(b.label.clone()));
            }
        }
        for s in &solids {
            super::same_dim(dim, s.dim())?;
            if !labels.insert(s.label.as_str()) {
                return Err(GeoError::DuplicateLabel(s.label.clone()));
            }
        }
        Ok(Scene { dim, balls, solids })
    }

    pub fn ball(&self, label: &str) -> Result<&Ball, GeoError> {
        self.balls.iter().find(|b| b.label == label).ok_or_else(|| GeoError::UnknownLabel(label.to_string()))
    }

    /// A labeled solid, or a ball viewed as a one-part solid.
    pub fn solid(&self, label: &str) -> Result<Solid, GeoError> {
        if let Some(s) = self.solids.iter().find(|s| s.label == label) {
            return Ok(s.clone());
        }
        self.ball(label).map(|b| Solid::from(b.clone()))
    }
}

impl fmt::Display for Scene {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim: {}", self.dim)?;
        for b in &self.balls {
            writeln!(f, "{b}")?;
        }
        for s in &self.solids {
            let parts: Vec<&str> = s.parts.iter().map(|b| b.label.as_str()).collect();
            writeln!(f, "solid {} = {}", s.label, parts.join(" "))?;
        }
        Ok(())
    }
}

fn err(line: usize, message: impl Into<String>) -> GeoError {
    GeoError::Parse { line, message: message.into() }
}

fn is_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

fn parse_ball(line: usize, rest: &str) -> Result<Ball, GeoError> {
    let rest = rest.trim_start();
    let label_end = rest.find(|c: char| c.is_whitespace() || c == '(').unwrap_or(rest.len());
    let label = &rest[..label_end];
    if !is_label(label) {
        return Err(err(line, format!("bad ball label `{label}`")));
    }
    let rest = rest[label_end..].trim_start();
    let Some(inner_and_radius) = rest.strip_prefix('(') else {
        return Err(err(line, "expected `(` before the center"));
    };
    let Some(close) = inner_and_radius.find(')') else {
        return Err(err(line, "unclosed center tuple"));
    };
    let center = inner_and_radius[..close]
        .split(',')
        .map(|c| parse_rat(c).ok_or_else(|| err(line, format!("bad coordinate `{}`", c.trim()))))
        .collect::<Result<Vec<_>, _>>()?;
    let radius_text = inner_and_radius[close + 1..].trim();
    let radius = parse_rat(radius_text).ok_or_else(|| err(line, format!("bad radius `{radius_text}`")))?;
    Ball::new(label, center, radius).map_err(|e| err(line, e.to_string()))
}

pub fn parse_scene(text: &str) -> Result<Scene, GeoError> {
    let mut dim = None;
    let mut balls: Vec<Ball> = Vec::new();
    let mut solid_lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(v) = content.strip_prefix("dim:") {
            if dim.is_some() {
                return Err(err(line, "dimension declared twice"));
            }
            let n: usize = v.trim().parse().map_err(|_| err(line, "bad dimension"))?;
            if n == 0 || n > MAX_DIM {
                return Err(err(line, format!("dimension {n} outside 1..={MAX_DIM}")));
            }
            dim = Some(n);
            continue;
        }
        let Some(n) = dim else {
            return Err(err(line, "expected `dim: N` first"));
        };
        if let Some(rest) = content.strip_prefix("ball ") {
            let b = parse_ball(line, rest)?;
            if b.dim() != n {
                return Err(err(line, format!("ball `{}` has dimension {}, scene has {n}", b.label, b.dim())));
            }
            balls.push(b);
        } else if let Some(rest) = content.strip_prefix("solid ") {
            solid_lines.push((line, rest.to_string()));
        } else {
            return Err(err(line, format!("unrecognized line `{content}`")));
        }
    }
    let dim = dim.ok_or_else(|| err(1, "missing `dim: N`"))?;
    let mut solids = Vec::new();
    for (line, rest) in solid_lines {
        let (label, parts) = rest.split_once('=').ok_or_else(|| err(line, "expected `solid S = A B ...`"))?;
        let label = label.trim();
        if !is_label(label) {
            return Err(err(line, format!("bad solid label `{label}`")));
        }
        let parts = parts
            .split_whitespace()
            .map(|p| {
                balls.iter().find(|b| b.label == p).cloned().ok_or_else(|| err(line, format!("unknown ball `{p}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        solids.push(Solid::new(label, parts).map_err(|e| err(line, e.to_string()))?);
    }
    Scene::new(dim, balls, solids)
}
