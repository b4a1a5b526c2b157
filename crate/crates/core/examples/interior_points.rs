//! Interior points of solids: the three-valued test in any dimension and
//! the exact interval test on the line.

use mereogeo::geometry::{
    int, interior_point, interior_point_1d_exact, interior_witness_radius, merged_intervals, rat, Ball, GPoint, Solid,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = Solid::new("S", vec![Ball::new("A", vec![int(0)], int(1))?, Ball::new("B", vec![int(2)], int(1))?])?;
    println!(
        "intervals of S: {:?}",
        merged_intervals(&s)?.iter().map(|(l, r)| format!("({l}, {r})")).collect::<Vec<_>>()
    );

    for x in [rat(1, 2), int(1), int(3), int(-2)] {
        let p = GPoint::new(vec![x.clone()]);
        let witness = interior_witness_radius(&p, &s)?.map(|(i, r)| format!("ball {} radius {r}", s.parts[i].label));
        println!(
            "x = {x}: three-valued {}, exact {}, witness {}",
            interior_point(&p, &s)?,
            interior_point_1d_exact(&p, &s)?,
            witness.unwrap_or_else(|| "none".into())
        );
    }
    Ok(())
}
