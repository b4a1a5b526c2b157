//! Candidate-restricted versions of the ball definitions, the analytic
//! predicates they are compared with, and witness construction.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::report::{BridgeReport, Classification};
use super::universe::SceneUniverse;
use super::BridgeError;
use crate::geometry::{
    ball_mereo, concentric, diam_tangency, equidistant, interior_point, interior_witness_radius, point_of,
    rational_sqrt, sq_dist, tangency, Ball, DiamKind, MereoKind, Rat, Solid, TangencyKind, TriBool,
};
use crate::model::Mereology;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Definition {
    /// External tangency of two balls.
    Et,
    /// Internal tangency of the first ball in the second.
    It,
    /// `A`, `B` externally tangent to the host `C` at antipodes.
    Edt,
    /// `A`, `B` internally tangent to the host `C` at antipodes.
    Idt,
    /// Concentric balls.
    Con,
    /// The centers of `P` and `Q` are equidistant from the center of `C`.
    Equid,
    /// The center of `P` is an interior point of solid `S`.
    Ipoint,
    /// `S` is a sum of balls.
    TarskiD8,
}

impl Definition {
    pub const ALL: [Definition; 8] = [
        Definition::Et,
        Definition::It,
        Definition::Edt,
        Definition::Idt,
        Definition::Con,
        Definition::Equid,
        Definition::Ipoint,
        Definition::TarskiD8,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Definition::Et => "ET",
            Definition::It => "IT",
            Definition::Edt => "EDT",
            Definition::Idt => "IDT",
            Definition::Con => "CON",
            Definition::Equid => "EQUID",
            Definition::Ipoint => "IPOINT",
            Definition::TarskiD8 => "TarskiD8",
        }
    }

    pub fn parse(s: &str) -> Option<Definition> {
        Definition::ALL.into_iter().find(|d| d.id().eq_ignore_ascii_case(s))
    }

    pub fn arity(self) -> usize {
        match self {
            Definition::TarskiD8 => 1,
            Definition::Et | Definition::It | Definition::Con | Definition::Ipoint => 2,
            Definition::Edt | Definition::Idt | Definition::Equid => 3,
        }
    }

    /// Definitions whose restricted form is a universal statement over the
    /// candidates (adding candidates can only falsify them).
    pub fn is_universal(self) -> bool {
        matches!(self, Definition::Et | Definition::It | Definition::Edt | Definition::Idt | Definition::Con)
    }
}

impl fmt::Display for Definition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BridgeOptions {
    pub inject_witnesses: bool,
}

impl Default for BridgeOptions {
    fn default() -> Self {
        BridgeOptions { inject_witnesses: true }
    }
}

// Scenes have uniform dimension, so these cannot fail.
fn le(a: &Ball, b: &Ball) -> bool {
    ball_mereo(MereoKind::PartOf, a, b).expect("uniform dimension")
}
fn proper(a: &Ball, b: &Ball) -> bool {
    ball_mereo(MereoKind::ProperPart, a, b).expect("uniform dimension")
}
fn ext(a: &Ball, b: &Ball) -> bool {
    ball_mereo(MereoKind::Ext, a, b).expect("uniform dimension")
}
fn et(a: &Ball, b: &Ball) -> bool {
    tangency(TangencyKind::Et, a, b).expect("uniform dimension")
}
fn it(a: &Ball, b: &Ball) -> bool {
    tangency(TangencyKind::It, a, b).expect("uniform dimension")
}
fn edt(a: &Ball, b: &Ball, c: &Ball) -> bool {
    diam_tangency(DiamKind::Edt, a, b, c).expect("uniform dimension")
}
fn idt(a: &Ball, b: &Ball, c: &Ball) -> bool {
    diam_tangency(DiamKind::Idt, a, b, c).expect("uniform dimension")
}
fn conc(a: &Ball, b: &Ball) -> bool {
    concentric(a, b).expect("uniform dimension")
}

/// Result of a restricted evaluation: the truth value and the labels of the
/// candidates that decided it (a falsifying pair, or a satisfying witness).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restricted {
    pub holds: bool,
    pub evidence: Vec<String>,
}

impl Restricted {
    fn yes(evidence: Vec<String>) -> Self {
        Restricted { holds: true, evidence }
    }
    fn no(evidence: Vec<String>) -> Self {
        Restricted { holds: false, evidence }
    }
}

fn labels(balls: &[&Ball]) -> Vec<String> {
    balls.iter().map(|b| b.label.clone()).collect()
}

/// `forall X Y in cands, pre(X) /\ pre'(Y) -> rel(X,Y)`.
fn all_pairs(
    cands: &[Ball],
    left: impl Fn(&Ball) -> bool,
    right: impl Fn(&Ball) -> bool,
    rel: impl Fn(&Ball, &Ball) -> bool,
) -> Restricted {
    let xs: Vec<&Ball> = cands.iter().filter(|x| left(x)).collect();
    let ys: Vec<&Ball> = cands.iter().filter(|y| right(y)).collect();
    for x in &xs {
        for y in &ys {
            if !rel(x, y) {
                return Restricted::no(labels(&[x, y]));
            }
        }
    }
    Restricted::yes(Vec::new())
}

/// Arguments of a definition, resolved against a universe.
#[derive(Clone, Debug)]
pub enum DefArgs {
    Balls(Vec<Ball>),
    /// A ball standing for a point, and a solid.
    PointSolid(Ball, Solid),
    /// A solid label and whether the universe counts it among the solids.
    Solid(String, bool),
}

/// Evaluates the definition with every ball quantifier restricted to `cands`.
/// Defined relations nested inside a definition use their analytic form;
/// parthood and disjointness are the geometric ones.
pub fn evaluate_restricted(def: Definition, args: &DefArgs, cands: &[Ball]) -> Result<Restricted, BridgeError> {
    let r = match (def, args) {
        (Definition::Et, DefArgs::Balls(v)) => {
            let (a, b) = (&v[0], &v[1]);
            if !ext(a, b) {
                return Ok(Restricted::no(Vec::new()));
            }
            let pre = |x: &Ball| le(a, x) && ext(x, b);
            all_pairs(cands, pre, pre, |x, y| le(x, y) || le(y, x))
        }
        (Definition::It, DefArgs::Balls(v)) => {
            let (a, b) = (&v[0], &v[1]);
            if !proper(a, b) {
                return Ok(Restricted::no(Vec::new()));
            }
            let pre = |x: &Ball| le(a, x) && le(x, b);
            all_pairs(cands, pre, pre, |x, y| le(x, y) || le(y, x))
        }
        (Definition::Edt, DefArgs::Balls(v)) => {
            let (a, b, c) = (&v[0], &v[1], &v[2]);
            if !(et(a, c) && et(b, c)) {
                return Ok(Restricted::no(Vec::new()));
            }
            all_pairs(cands, |x| le(a, x) && ext(x, c), |y| le(b, y) && ext(y, c), ext)
        }
        (Definition::Idt, DefArgs::Balls(v)) => {
            let (a, b, c) = (&v[0], &v[1], &v[2]);
            if !(it(a, c) && it(b, c)) {
                return Ok(Restricted::no(Vec::new()));
            }
            all_pairs(cands, |x| et(x, c) && et(a, x), |y| et(y, c) && et(b, y), ext)
        }
        (Definition::Con, DefArgs::Balls(v)) => {
            let (a, b) = (&v[0], &v[1]);
            if a.same_shape(b) {
                return Ok(Restricted::yes(Vec::new()));
            }
            let (inner, outer) = if proper(a, b) {
                (a, b)
            } else if proper(b, a) {
                (b, a)
            } else {
                return Ok(Restricted::no(Vec::new()));
            };
            let mut out = Restricted::yes(Vec::new());
            'search: for x in cands.iter().filter(|x| it(x, outer)) {
                for y in cands.iter().filter(|y| it(y, outer)) {
                    if edt(x, y, inner) && !idt(x, y, outer) {
                        out = Restricted::no(labels(&[x, y]));
                        break 'search;
                    }
                }
            }
            out
        }
        (Definition::Equid, DefArgs::Balls(v)) => {
            let (p, q, c) = (&v[0], &v[1], &v[2]);
            let blocks = |y: &Ball, x: &Ball| (conc(y, p) || conc(y, q)) && (le(y, x) || ext(y, x));
            match cands.iter().find(|x| conc(x, c) && !cands.iter().any(|y| blocks(y, x))) {
                Some(x) => Restricted::yes(vec![x.label.clone()]),
                None => Restricted::no(Vec::new()),
            }
        }
        (Definition::Ipoint, DefArgs::PointSolid(p, s)) => {
            let inside = |a: &Ball| conc(a, p) && s.parts.iter().any(|part| le(a, part));
            match cands.iter().find(|a| inside(a)) {
                Some(a) => Restricted::yes(vec![a.label.clone()]),
                None => Restricted::no(Vec::new()),
            }
        }
        (Definition::TarskiD8, DefArgs::Solid(_, member)) => Restricted { holds: *member, evidence: Vec::new() },
        _ => return Err(BridgeError::ArgumentKind(def.id())),
    };
    Ok(r)
}

/// The analytic counterpart.
pub fn analytic(def: Definition, args: &DefArgs) -> Result<TriBool, BridgeError> {
    Ok(match (def, args) {
        (Definition::Et, DefArgs::Balls(v)) => tangency(TangencyKind::Et, &v[0], &v[1])?.into(),
        (Definition::It, DefArgs::Balls(v)) => tangency(TangencyKind::It, &v[0], &v[1])?.into(),
        (Definition::Edt, DefArgs::Balls(v)) => diam_tangency(DiamKind::Edt, &v[0], &v[1], &v[2])?.into(),
        (Definition::Idt, DefArgs::Balls(v)) => diam_tangency(DiamKind::Idt, &v[0], &v[1], &v[2])?.into(),
        (Definition::Con, DefArgs::Balls(v)) => concentric(&v[0], &v[1])?.into(),
        (Definition::Equid, DefArgs::Balls(v)) => {
            // A point cannot be equidistant from itself at a positive radius.
            let (p, q, c) = (point_of(&v[0]), point_of(&v[1]), point_of(&v[2]));
            (p != c && equidistant(&p, &q, &c)?).into()
        }
        (Definition::Ipoint, DefArgs::PointSolid(p, s)) => interior_point(&point_of(p), s)?,
        (Definition::TarskiD8, DefArgs::Solid(..)) => TriBool::Yes,
        _ => return Err(BridgeError::ArgumentKind(def.id())),
    })
}

struct Witnesses {
    balls: Vec<Ball>,
    /// At least one ball meant to falsify the definition was added.
    refuting: bool,
    /// The analytic answer is true but no exact witness could be built.
    unavailable: bool,
    notes: Vec<String>,
}

fn shifted(c: &[Rat], axis: usize, delta: &Rat) -> Vec<Rat> {
    let mut out = c.to_vec();
    out[axis] = &out[axis] + delta;
    out
}

fn along(c: &[Rat], dir: &[Rat], t: &Rat) -> Vec<Rat> {
    c.iter().zip(dir).map(|(a, d)| a + d * t).collect()
}

fn scaled_diff(a: &[Rat], b: &[Rat], k: &Rat) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| (x - y) / k).collect()
}

const MAX_STEPS: usize = 128;

/// Rational unit vectors tried when looking for a concentricity witness.
fn directions(dim: usize) -> Vec<Vec<Rat>> {
    let unit = |pairs: &[(usize, Rat)]| {
        let mut v = vec![Rat::zero(); dim];
        for (i, x) in pairs {
            v[*i] = x.clone();
        }
        v
    };
    let r = |n: i64, d: i64| Rat::new(n.into(), d.into());
    let mut out: Vec<Vec<Rat>> = (0..dim).map(|i| unit(&[(i, Rat::one())])).collect();
    for i in 0..dim {
        for j in i + 1..dim {
            out.push(unit(&[(i, r(3, 5)), (j, r(4, 5))]));
            out.push(unit(&[(i, r(4, 5)), (j, r(-3, 5))]));
            out.push(unit(&[(i, r(5, 13)), (j, r(12, 13))]));
        }
    }
    out
}

fn build_witnesses(def: Definition, args: &DefArgs, scene: &[Ball]) -> Witnesses {
    let mut w = Witnesses { balls: Vec::new(), refuting: false, unavailable: false, notes: Vec::new() };
    let mk = |label: &str, center: Vec<Rat>, radius: Rat| Ball { label: label.to_string(), center, radius };
    let two = Rat::from_integer(2.into());
    match (def, args) {
        (Definition::Et, DefArgs::Balls(v)) => {
            let (a, b) = (&v[0], &v[1]);
            if et(a, b) {
                // a larger ball still touching b at the same point
                let k = &a.radius + &b.radius;
                let dir = scaled_diff(&a.center, &b.center, &k);
                w.balls.push(mk("w_et", along(&a.center, &dir, &a.radius), &a.radius + &a.radius));
            } else if ext(a, b) {
                let mut delta = a.radius.clone();
                for _ in 0..MAX_STEPS {
                    let x = mk("w_et_x", shifted(&a.center, 0, &delta), &a.radius + &delta);
                    let y = mk("w_et_y", shifted(&a.center, 0, &-&delta), &a.radius + &delta);
                    if ext(&x, b) && ext(&y, b) {
                        w.balls.extend([x, y]);
                        w.refuting = true;
                        break;
                    }
                    delta /= &two;
                }
            }
        }
        (Definition::It, DefArgs::Balls(v)) => {
            let (a, b) = (&v[0], &v[1]);
            if it(a, b) {
                let center = a.center.iter().zip(&b.center).map(|(x, y)| (x + y) / &two).collect();
                w.balls.push(mk("w_it", center, (&a.radius + &b.radius) / &two));
            } else if proper(a, b) {
                let mut delta = (&b.radius - &a.radius) / &two;
                for _ in 0..MAX_STEPS {
                    let x = mk("w_it_x", shifted(&a.center, 0, &delta), &a.radius + &delta);
                    let y = mk("w_it_y", shifted(&a.center, 0, &-&delta), &a.radius + &delta);
                    if le(&x, b) && le(&y, b) {
                        w.balls.extend([x, y]);
                        w.refuting = true;
                        break;
                    }
                    delta /= &two;
                }
            }
        }
        (Definition::Edt, DefArgs::Balls(v)) => {
            let (a, b, c) = (&v[0], &v[1], &v[2]);
            if et(a, c) && et(b, c) {
                let ua = scaled_diff(&a.center, &c.center, &(&a.radius + &c.radius));
                let ub = scaled_diff(&b.center, &c.center, &(&b.radius + &c.radius));
                // grow each ball away from the host along its tangency ray
                let grow = |s: &Rat| {
                    (
                        mk("w_edt_x", along(&a.center, &ua, s), &a.radius + s),
                        mk("w_edt_y", along(&b.center, &ub, s), &b.radius + s),
                    )
                };
                if edt(a, b, c) {
                    let (x, y) = grow(&Rat::one());
                    w.balls.extend([x, y]);
                } else {
                    let mut s = Rat::one();
                    for _ in 0..MAX_STEPS {
                        let (x, y) = grow(&s);
                        if !ext(&x, &y) {
                            w.balls.extend([x, y]);
                            w.refuting = true;
                            break;
                        }
                        s *= &two;
                    }
                }
            }
        }
        (Definition::Idt, DefArgs::Balls(v)) => {
            let (a, b, c) = (&v[0], &v[1], &v[2]);
            if it(a, c) && it(b, c) {
                let ua = scaled_diff(&a.center, &c.center, &(&c.radius - &a.radius));
                let ub = scaled_diff(&b.center, &c.center, &(&c.radius - &b.radius));
                // balls outside the host touching it where a and b do
                let outside = |s: &Rat| {
                    let reach = &c.radius + s;
                    (
                        mk("w_idt_x", along(&c.center, &ua, &reach), s.clone()),
                        mk("w_idt_y", along(&c.center, &ub, &reach), s.clone()),
                    )
                };
                if idt(a, b, c) {
                    let (x, y) = outside(&Rat::one());
                    w.balls.extend([x, y]);
                } else {
                    let mut s = Rat::one();
                    for _ in 0..MAX_STEPS {
                        let (x, y) = outside(&s);
                        if !ext(&x, &y) {
                            w.balls.extend([x, y]);
                            w.refuting = true;
                            break;
                        }
                        s *= &two;
                    }
                }
            }
        }
        (Definition::Con, DefArgs::Balls(v)) => {
            let (a, b) = (&v[0], &v[1]);
            let (inner, outer) = if proper(a, b) {
                (a, b)
            } else if proper(b, a) {
                (b, a)
            } else {
                return w;
            };
            let concentric_pair = conc(a, b);
            let w_vec = scaled_diff(&inner.center, &outer.center, &Rat::one());
            let q = w_vec.iter().fold(Rat::zero(), |acc, x| acc + x * x);
            let (ri, ro) = (&inner.radius, &outer.radius);
            // radius of a ball touching `inner` externally in direction u and
            // `outer` internally
            let solve = |p: &Rat| {
                let den = (p + ri + ro) * &two;
                (ro * ro - ri * ri - &q - p * ri * &two) / den
            };
            for u in directions(inner.dim()) {
                let p = w_vec.iter().zip(&u).fold(Rat::zero(), |acc, (x, y)| acc + x * y);
                let (t, t2) = (solve(&p), solve(&-&p));
                if !t.is_positive() || !t2.is_positive() {
                    continue;
                }
                let neg: Vec<Rat> = u.iter().map(|x| -x).collect();
                let x = mk("w_con_x", along(&inner.center, &u, &(ri + &t)), t);
                let y = mk("w_con_y", along(&inner.center, &neg, &(ri + &t2)), t2);
                if !(edt(&x, &y, inner) && it(&x, outer) && it(&y, outer)) {
                    continue;
                }
                if concentric_pair {
                    w.balls.extend([x, y]);
                    break;
                }
                if !idt(&x, &y, outer) {
                    w.balls.extend([x, y]);
                    w.refuting = true;
                    break;
                }
            }
            if !concentric_pair && !w.refuting {
                w.notes.push("no refuting pair found along the tried directions".into());
            }
        }
        (Definition::Equid, DefArgs::Balls(v)) => {
            let (p, q, c) = (&v[0], &v[1], &v[2]);
            let d2 = sq_dist(&c.center, &p.center).expect("uniform dimension");
            let exact = rational_sqrt(&d2).filter(|r| r.is_positive());
            if let Some(r) = &exact {
                w.balls.push(mk("w_equid_x", c.center.clone(), r.clone()));
            }
            let truth = p.center != c.center
                && equidistant(&point_of(p), &point_of(q), &point_of(c)).expect("uniform dimension");
            if truth {
                if exact.is_none() {
                    w.unavailable = true;
                    w.notes.push("radius sqrt is irrational; no exact witness ball".into());
                }
            } else {
                w.refuting = true;
                w.notes.push("tiny probes at both points added".into());
                let mut eps = c.radius.clone();
                let hosts: Vec<Ball> = scene.iter().chain(&w.balls).filter(|x| conc(x, c)).cloned().collect();
                for _ in 0..MAX_STEPS {
                    let yp = mk("w_equid_p", p.center.clone(), eps.clone());
                    let yq = mk("w_equid_q", q.center.clone(), eps.clone());
                    let refuted = |x: &Ball| le(&yp, x) || ext(&yp, x) || le(&yq, x) || ext(&yq, x);
                    if hosts.iter().all(refuted) {
                        w.balls.extend([yp, yq]);
                        break;
                    }
                    eps /= &two;
                }
            }
        }
        (Definition::Ipoint, DefArgs::PointSolid(p, s)) => {
            if let Ok(Some((_, r))) = interior_witness_radius(&point_of(p), s) {
                w.balls.push(mk("w_ipoint", p.center.clone(), r));
            }
        }
        _ => {}
    }
    w
}

fn resolve(universe: &SceneUniverse, def: Definition, args: &[&str]) -> Result<DefArgs, BridgeError> {
    if args.len() != def.arity() {
        return Err(BridgeError::Arity { definition: def.id(), expected: def.arity(), found: args.len() });
    }
    Ok(match def {
        Definition::Ipoint => DefArgs::PointSolid(universe.ball(args[0])?.clone(), universe.solid(args[1])?),
        Definition::TarskiD8 => {
            let i = universe.index_of(args[0]).ok_or_else(|| BridgeError::UnknownLabel(args[0].to_string()))?;
            let member = universe.constant("solids").is_some_and(|s| s.contains(i));
            DefArgs::Solid(args[0].to_string(), member)
        }
        _ => DefArgs::Balls(args.iter().map(|l| universe.ball(l).cloned()).collect::<Result<_, _>>()?),
    })
}

/// Compares the analytic predicate with the definition restricted to the
/// universe's balls plus any injected witnesses.
pub fn check_definition(
    universe: &SceneUniverse,
    def: Definition,
    args: &[&str],
    options: &BridgeOptions,
) -> Result<BridgeReport, BridgeError> {
    let resolved = resolve(universe, def, args)?;
    let analytic = analytic(def, &resolved)?;
    let mut cands = universe.balls().to_vec();
    let mut witnesses = Witnesses { balls: Vec::new(), refuting: false, unavailable: false, notes: Vec::new() };
    if options.inject_witnesses {
        witnesses = build_witnesses(def, &resolved, universe.balls());
        cands.extend(witnesses.balls.iter().cloned());
    }
    let restricted = evaluate_restricted(def, &resolved, &cands)?;
    let mut notes = witnesses.notes;
    if matches!(def, Definition::Ipoint | Definition::TarskiD8) {
        notes.push("ball below solid only via a single constituent".into());
    }
    let classification = match (analytic, restricted.holds) {
        (TriBool::Undecided, _) => Classification::AnalyticUndecided,
        (TriBool::Yes, true) | (TriBool::No, false) => Classification::Agreement,
        (TriBool::Yes, false) if witnesses.unavailable => Classification::InconclusiveCandidates,
        (TriBool::Yes, false) => Classification::HardDisagreement,
        (TriBool::No, true) if witnesses.refuting => Classification::HardDisagreement,
        (TriBool::No, true) => Classification::InconclusiveCandidates,
    };
    Ok(BridgeReport {
        definition: def,
        args: args.iter().map(|s| s.to_string()).collect(),
        analytic,
        restricted: restricted.holds,
        classification,
        witnesses: witnesses.balls,
        evidence: restricted.evidence,
        notes,
    })
}

/// Every definition on every argument tuple drawn from the scene.
pub fn check_scene(universe: &SceneUniverse, options: &BridgeOptions) -> Result<Vec<BridgeReport>, BridgeError> {
    let balls: Vec<&str> = universe.balls().iter().map(|b| b.label.as_str()).collect();
    let solids: Vec<&str> = universe.solids().iter().map(|s| s.label.as_str()).collect();
    let mut out = Vec::new();
    for def in Definition::ALL {
        match def {
            Definition::Et | Definition::It | Definition::Con => {
                for &a in &balls {
                    for &b in &balls {
                        out.push(check_definition(universe, def, &[a, b], options)?);
                    }
                }
            }
            Definition::Edt | Definition::Idt | Definition::Equid => {
                for &a in &balls {
                    for &b in &balls {
                        for &c in &balls {
                            out.push(check_definition(universe, def, &[a, b, c], options)?);
                        }
                    }
                }
            }
            Definition::Ipoint => {
                for &p in &balls {
                    for &s in solids.iter().chain(&balls) {
                        out.push(check_definition(universe, def, &[p, s], options)?);
                    }
                }
            }
            Definition::TarskiD8 => {
                for &s in &solids {
                    out.push(check_definition(universe, def, &[s], options)?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bridge::scene_to_universe;
    use crate::geometry::{int, parse_scene, rat};

    fn universe(text: &str) -> SceneUniverse {
        SceneUniverse::from_scene(&parse_scene(text).unwrap()).unwrap()
    }

    fn check(u: &SceneUniverse, def: Definition, args: &[&str]) -> BridgeReport {
        check_definition(u, def, args, &BridgeOptions::default()).unwrap()
    }

    #[test]
    fn external_tangency_with_enclosing_candidates() {
        let u = universe("dim: 2\nball A (0,0) 1\nball B (2,0) 1\nball E (0,0) 2\nball F (-1,0) 2\n");
        let r = check(&u, Definition::Et, &["A", "B"]);
        assert_eq!(r.analytic, TriBool::Yes);
        assert_eq!(r.classification, Classification::Agreement);
        let apart = universe("dim: 2\nball A (0,0) 1\nball B (5,0) 1\n");
        let r = check(&apart, Definition::Et, &["A", "B"]);
        assert_eq!((r.analytic, r.restricted), (TriBool::No, false));
        assert_eq!(r.evidence.len(), 2);
    }

    #[test]
    fn internal_tangency_refuted_by_offset_pair() {
        let u = universe("dim: 2\nball A (0,0) 1/4\nball B (0,0) 2\nball X (-1/2,0) 1\nball Y (1/2,0) 1\n");
        let plain =
            check_definition(&u, Definition::It, &["A", "B"], &BridgeOptions { inject_witnesses: false }).unwrap();
        assert!(!plain.restricted);
        assert_eq!(plain.evidence, vec!["X", "Y"]);
        assert_eq!(plain.classification, Classification::Agreement);
    }

    #[test]
    fn diametrical_fixtures() {
        let u = universe("dim: 2\nball A (-2,0) 1\nball B (2,0) 1\nball C (0,0) 1\nball D (0,2) 1\n");
        assert_eq!(check(&u, Definition::Edt, &["A", "B", "C"]).classification, Classification::Agreement);
        let off = check(&u, Definition::Edt, &["A", "D", "C"]);
        assert_eq!((off.analytic, off.restricted), (TriBool::No, false));
        let v = universe("dim: 2\nball L (-1/2,0) 1/2\nball R (1/2,0) 1/2\nball U (0,1/2) 1/2\nball H (0,0) 1\n");
        assert!(check(&v, Definition::Idt, &["L", "R", "H"]).restricted);
        let off = check(&v, Definition::Idt, &["L", "U", "H"]);
        assert_eq!((off.analytic, off.restricted), (TriBool::No, false));
    }

    #[test]
    fn concentricity() {
        let u = universe("dim: 2\nball A (0,0) 1\nball B (0,0) 3\nball C (1,0) 1\n");
        let r = check(&u, Definition::Con, &["A", "B"]);
        assert_eq!((r.analytic, r.restricted), (TriBool::Yes, true));
        let r = check(&u, Definition::Con, &["C", "B"]);
        assert_eq!(r.classification, Classification::Agreement, "{r:?}");
        assert!(!r.witnesses.is_empty());
        let line = universe("dim: 1\nball A (0) 1\nball B (1) 3\n");
        let r = check(&line, Definition::Con, &["A", "B"]);
        assert_eq!(r.classification, Classification::InconclusiveCandidates);
    }

    #[test]
    fn equidistance() {
        let u = universe("dim: 2\nball P (3,0) 1\nball Q (0,4) 1\nball R (3,4) 1\nball C (0,0) 1\n");
        let r = check(&u, Definition::Equid, &["P", "P", "C"]);
        assert_eq!((r.analytic, r.restricted), (TriBool::Yes, true));
        let r = check(&u, Definition::Equid, &["P", "R", "C"]);
        assert_eq!((r.analytic, r.restricted), (TriBool::No, false));
        let r = check(&u, Definition::Equid, &["C", "C", "C"]);
        assert_eq!(r.classification, Classification::Agreement);
    }

    #[test]
    fn interior_points_and_solids() {
        let u = universe("dim: 2\nball A (0,0) 1\nball B (2,0) 1\nball P (1/2,0) 1\nball T (1,0) 1\nsolid S = A B\n");
        assert_eq!(check(&u, Definition::Ipoint, &["P", "S"]).classification, Classification::Agreement);
        assert_eq!(check(&u, Definition::Ipoint, &["T", "S"]).classification, Classification::AnalyticUndecided);
        assert_eq!(check(&u, Definition::TarskiD8, &["S"]).classification, Classification::Agreement);
    }

    #[test]
    fn argument_errors() {
        let u = scene_to_universe(&[Ball::new("A", vec![int(0)], rat(1, 2)).unwrap()], &[]).unwrap();
        assert!(matches!(
            check_definition(&u, Definition::Et, &["A"], &BridgeOptions::default()),
            Err(BridgeError::Arity { .. })
        ));
        assert!(matches!(
            check_definition(&u, Definition::Et, &["A", "Z"], &BridgeOptions::default()),
            Err(BridgeError::UnknownLabel(_))
        ));
        assert_eq!(Definition::parse("equid"), Some(Definition::Equid));
        assert_eq!(Definition::parse("nope"), None);
    }
}
