//! Exact predicates on balls with rational centers and radii.

use mereogeo::geometry::{
    ball_mereo, concentric, diam_tangency, equidistant, int, point_of, rat, tangency, transform, Ball, DiamKind,
    MereoKind, TangencyKind, Transform,
};

fn ball(label: &str, x: i64, y: i64, r: i64) -> Ball {
    Ball::new(label, vec![int(x), int(y)], int(r)).unwrap()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let host = ball("C", 0, 0, 2);
    let (a, b) = (ball("A", -3, 0, 1), ball("B", 3, 0, 1));
    let inner = ball("I", 1, 0, 1);

    println!("ET(A, C) = {}", tangency(TangencyKind::Et, &a, &host)?);
    println!("IT(I, C) = {}", tangency(TangencyKind::It, &inner, &host)?);
    println!("EDT(A, B; C) = {}", diam_tangency(DiamKind::Edt, &a, &b, &host)?);
    println!("PartOf(I, C) = {}", ball_mereo(MereoKind::PartOf, &inner, &host)?);
    println!("Ext(A, C) = {}", ball_mereo(MereoKind::Ext, &a, &host)?);
    println!("CON(C, C') = {}", concentric(&host, &ball("C'", 0, 0, 5))?);
    println!("EQUID(A, B; C) = {}", equidistant(&point_of(&a), &point_of(&b), &point_of(&host))?);

    // Every predicate survives similarities.
    let t = Transform::Scale(rat(3, 7));
    let (a2, c2) = (transform(&a, &t)?, transform(&host, &t)?);
    println!("after scaling by 3/7: {a2}, {c2}, ET = {}", tangency(TangencyKind::Et, &a2, &c2)?);
    Ok(())
}
