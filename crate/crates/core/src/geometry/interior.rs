use std::fmt;

use super::{same_dim, sq_dist, GPoint, GeoError, Rat, Solid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriBool {
    Yes,
    No,
    Undecided,
}

impl TriBool {
    pub fn as_str(self) -> &'static str {
        match self {
            TriBool::Yes => "yes",
            TriBool::No => "no",
            TriBool::Undecided => "undecided",
        }
    }
}

impl From<bool> for TriBool {
    fn from(b: bool) -> TriBool {
        if b {
            TriBool::Yes
        } else {
            TriBool::No
        }
    }
}

impl fmt::Display for TriBool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `Yes` if `p` is inside some open constituent, `No` if it is outside every
/// closed constituent, `Undecided` when it only touches boundary spheres.
pub fn interior_point(p: &GPoint, s: &Solid) -> Result<TriBool, GeoError> {
    let mut on_boundary = false;
    for b in &s.parts {
        let d2 = sq_dist(&p.coords, &b.center)?;
        let r2 = &b.radius * &b.radius;
        if d2 < r2 {
            return Ok(TriBool::Yes);
        }
        on_boundary |= d2 == r2;
    }
    Ok(if on_boundary { TriBool::Undecided } else { TriBool::No })
}

/// A ball centered at `p` contained in some constituent: index of that
/// constituent and a rational radius `(r² - d²) / 2r`, which never exceeds
/// `r - d`.
pub fn interior_witness_radius(p: &GPoint, s: &Solid) -> Result<Option<(usize, Rat)>, GeoError> {
    for (i, b) in s.parts.iter().enumerate() {
        let d2 = sq_dist(&p.coords, &b.center)?;
        let r2 = &b.radius * &b.radius;
        if d2 < r2 {
            let two_r = &b.radius + &b.radius;
            return Ok(Some((i, (r2 - d2) / two_r)));
        }
    }
    Ok(None)
}

/// Maximal disjoint closed intervals covering a 1-D solid, left to right.
pub fn merged_intervals(s: &Solid) -> Result<Vec<(Rat, Rat)>, GeoError> {
    if s.dim() != 1 {
        return Err(GeoError::DimensionRequired1(s.dim()));
    }
    let mut spans: Vec<(Rat, Rat)> =
        s.parts.iter().map(|b| (&b.center[0] - &b.radius, &b.center[0] + &b.radius)).collect();
    spans.sort();
    let mut merged: Vec<(Rat, Rat)> = Vec::new();
    for (lo, hi) in spans {
        match merged.last_mut() {
            Some(last) if lo <= last.1 => {
                if hi > last.1 {
                    last.1 = hi;
                }
            }
            _ => merged.push((lo, hi)),
        }
    }
    Ok(merged)
}

/// Exact interiority in dimension 1.
pub fn interior_point_1d_exact(p: &GPoint, s: &Solid) -> Result<bool, GeoError> {
    same_dim(s.dim(), p.dim())?;
    let x = &p.coords[0];
    Ok(merged_intervals(s)?.iter().any(|(lo, hi)| lo < x && x < hi))
}
