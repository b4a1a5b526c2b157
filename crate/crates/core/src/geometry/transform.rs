use num_traits::Signed;

use super::{same_dim, Ball, GPoint, GeoError, Rat};

/// Similarity transformations that preserve every predicate in this module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transform {
    Translate(Vec<Rat>),
    /// New coordinate `i` is old coordinate `perm[i]`.
    Permute(Vec<usize>),
    /// Negates one coordinate.
    Flip(usize),
    /// Uniform scaling about the origin by a positive factor.
    Scale(Rat),
}

fn map_coords(coords: &[Rat], t: &Transform) -> Result<Vec<Rat>, GeoError> {
    let n = coords.len();
    match t {
        Transform::Translate(v) => {
            same_dim(n, v.len())?;
            Ok(coords.iter().zip(v).map(|(a, b)| a + b).collect())
        }
        Transform::Permute(perm) => {
            same_dim(n, perm.len())?;
            let mut seen = vec![false; n];
            for &p in perm {
                if p >= n || std::mem::replace(&mut seen[p], true) {
                    return Err(GeoError::InvalidPermutation);
                }
            }
            Ok(perm.iter().map(|&p| coords[p].clone()).collect())
        }
        Transform::Flip(i) => {
            if *i >= n {
                return Err(GeoError::DimensionMismatch { expected: n, found: i + 1 });
            }
            let mut out = coords.to_vec();
            out[*i] = -&out[*i];
            Ok(out)
        }
        Transform::Scale(k) => {
            if !k.is_positive() {
                return Err(GeoError::NonpositiveScale);
            }
            Ok(coords.iter().map(|c| c * k).collect())
        }
    }
}

/// Applies `t` to a ball; the label is kept.
pub fn transform(b: &Ball, t: &Transform) -> Result<Ball, GeoError> {
    let center = map_coords(&b.center, t)?;
    let radius = match t {
        Transform::Scale(k) => &b.radius * k,
        _ => b.radius.clone(),
    };
    Ok(Ball { label: b.label.clone(), center, radius })
}

pub fn transform_point(p: &GPoint, t: &Transform) -> Result<GPoint, GeoError> {
    Ok(GPoint::new(map_coords(&p.coords, t)?))
}
