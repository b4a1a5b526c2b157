use num_traits::Zero;

use super::{same_dim, Ball, GPoint, GeoError, Rat};

/// Squared Euclidean distance.
pub fn sq_dist(p: &[Rat], q: &[Rat]) -> Result<Rat, GeoError> {
    same_dim(p.len(), q.len())?;
    Ok(p.iter().zip(q).fold(Rat::zero(), |acc, (a, b)| {
        let d = a - b;
        acc + &d * &d
    }))
}

fn sq(r: &Rat) -> Rat {
    r * r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MereoKind {
    PartOf,
    ProperPart,
    Equal,
    /// Interiors meet.
    Overlap,
    /// Interiors are disjoint; tangent balls count as external.
    Ext,
}

pub fn ball_mereo(kind: MereoKind, a: &Ball, b: &Ball) -> Result<bool, GeoError> {
    let d2 = sq_dist(&a.center, &b.center)?;
    Ok(match kind {
        MereoKind::PartOf => part_of(&d2, a, b),
        MereoKind::Equal => a.same_shape(b),
        MereoKind::ProperPart => part_of(&d2, a, b) && !a.same_shape(b),
        MereoKind::Overlap => d2 < sq(&(&a.radius + &b.radius)),
        MereoKind::Ext => d2 >= sq(&(&a.radius + &b.radius)),
    })
}

fn part_of(d2: &Rat, a: &Ball, b: &Ball) -> bool {
    b.radius >= a.radius && *d2 <= sq(&(&b.radius - &a.radius))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TangencyKind {
    Et,
    It,
}

/// External tangency `d = rA + rB`, or internal tangency of `a` inside `b`
/// (`d = rB - rA` with `a` strictly smaller).
pub fn tangency(kind: TangencyKind, a: &Ball, b: &Ball) -> Result<bool, GeoError> {
    let d2 = sq_dist(&a.center, &b.center)?;
    Ok(match kind {
        TangencyKind::Et => d2 == sq(&(&a.radius + &b.radius)),
        TangencyKind::It => a.radius < b.radius && d2 == sq(&(&b.radius - &a.radius)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiamKind {
    Edt,
    Idt,
}

/// `a` and `b` tangent to the host `c` at antipodal points: externally for
/// `Edt`, internally for `Idt`.
pub fn diam_tangency(kind: DiamKind, a: &Ball, b: &Ball, c: &Ball) -> Result<bool, GeoError> {
    let d2 = sq_dist(&a.center, &b.center)?;
    same_dim(a.dim(), c.dim())?;
    let two_rc = &c.radius + &c.radius;
    Ok(match kind {
        DiamKind::Edt => {
            tangency(TangencyKind::Et, a, c)?
                && tangency(TangencyKind::Et, b, c)?
                && d2 == sq(&(&a.radius + &two_rc + &b.radius))
        }
        DiamKind::Idt => {
            tangency(TangencyKind::It, a, c)?
                && tangency(TangencyKind::It, b, c)?
                && d2 == sq(&(two_rc - &a.radius - &b.radius))
        }
    })
}

pub fn concentric(a: &Ball, b: &Ball) -> Result<bool, GeoError> {
    same_dim(a.dim(), b.dim())?;
    Ok(a.center == b.center)
}

pub fn point_of(b: &Ball) -> GPoint {
    GPoint::new(b.center.clone())
}

/// `p` and `q` lie at the same distance from `c`.
pub fn equidistant(p: &GPoint, q: &GPoint, c: &GPoint) -> Result<bool, GeoError> {
    Ok(sq_dist(&c.coords, &p.coords)? == sq_dist(&c.coords, &q.coords)?)
}
