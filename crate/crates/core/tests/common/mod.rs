#![allow(dead_code)]

use std::path::{Path, PathBuf};

use mereogeo::formula::{BinOp, Formula, QuantDomain, Term};
use mereogeo::geometry::{rat, Ball, Rat};
use mereogeo::model::Functor;
use proptest::prelude::*;
use rand::Rng;

pub fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn registry_path() -> PathBuf {
    crate_dir().join("registry/core.mreg")
}

pub fn files_with_ext(dir: &str, ext: &str) -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(crate_dir().join(dir))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == ext))
        .collect();
    out.sort();
    out
}

pub const CONSTANTS: [&str; 2] = ["empty", "u"];

/// Formula skeleton with variables as indices into the enclosing binders.
#[derive(Clone, Debug)]
pub enum RawTerm {
    Const(usize),
    Var(usize),
    Apply(usize, Vec<RawTerm>),
}

#[derive(Clone, Debug)]
pub enum RawFormula {
    Atom(u8, RawTerm, RawTerm),
    Not(Box<RawFormula>),
    Binary(u8, Box<RawFormula>, Box<RawFormula>),
    Quant(bool, bool, Box<RawFormula>),
}

fn raw_term() -> impl Strategy<Value = RawTerm> {
    let leaf = prop_oneof![(0..CONSTANTS.len()).prop_map(RawTerm::Const), (0usize..8).prop_map(RawTerm::Var)];
    leaf.prop_recursive(2, 6, 2, |inner| {
        (0..Functor::ALL.len(), prop::collection::vec(inner, 2)).prop_map(|(f, mut args)| {
            args.truncate(Functor::ALL[f].arity());
            RawTerm::Apply(f, args)
        })
    })
}

/// Formulas of depth at most six.
pub fn raw_formula() -> impl Strategy<Value = RawFormula> {
    let atom = (0u8..3, raw_term(), raw_term()).prop_map(|(k, a, b)| RawFormula::Atom(k, a, b));
    atom.prop_recursive(5, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|f| RawFormula::Not(Box::new(f))),
            (0u8..4, inner.clone(), inner.clone()).prop_map(|(o, a, b)| RawFormula::Binary(
                o,
                Box::new(a),
                Box::new(b)
            )),
            (any::<bool>(), any::<bool>(), inner).prop_map(|(q, s, f)| RawFormula::Quant(q, s, Box::new(f))),
        ]
    })
}

fn close_term(t: &RawTerm, scope: &[String]) -> Term {
    match t {
        RawTerm::Var(i) if !scope.is_empty() => Term::var(scope[i % scope.len()].clone()),
        RawTerm::Var(i) | RawTerm::Const(i) => Term::constant(CONSTANTS[i % CONSTANTS.len()]),
        RawTerm::Apply(f, args) => Term::apply(Functor::ALL[*f], args.iter().map(|a| close_term(a, scope)).collect()),
    }
}

/// Binds variables `V0, V1, ...` by depth, so names never shadow.
pub fn close(f: &RawFormula, scope: &mut Vec<String>) -> Formula {
    match f {
        RawFormula::Atom(k, a, b) => {
            let (a, b) = (close_term(a, scope), close_term(b, scope));
            match k {
                0 => Formula::eps(a, b),
                1 => Formula::seq(a, b),
                _ => Formula::weq(a, b),
            }
        }
        RawFormula::Not(g) => Formula::not(close(g, scope)),
        RawFormula::Binary(o, a, b) => {
            let op = [BinOp::And, BinOp::Or, BinOp::Implies, BinOp::Iff][*o as usize];
            Formula::binary(op, close(a, scope), close(b, scope))
        }
        RawFormula::Quant(forall, singular, body) => {
            let v = format!("V{}", scope.len());
            let d = if *singular { QuantDomain::Singular } else { QuantDomain::Name };
            scope.push(v.clone());
            let body = close(body, scope);
            scope.pop();
            if *forall {
                Formula::forall(v, d, body)
            } else {
                Formula::exists(v, d, body)
            }
        }
    }
}

pub fn closed_formula() -> impl Strategy<Value = Formula> {
    raw_formula().prop_map(|r| close(&r, &mut Vec::new()))
}

/// Small dyadic rationals, so tangencies and coincidences occur often.
pub fn small_rat<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Rat {
    let d = [1, 2, 4][rng.gen_range(0..3)];
    rat(rng.gen_range(lo * d..=hi * d), d)
}

pub fn random_ball<R: Rng>(rng: &mut R, label: &str, dim: usize) -> Ball {
    let center = (0..dim).map(|_| small_rat(rng, -4, 4)).collect();
    let d = [1, 2, 4][rng.gen_range(0..3)];
    Ball::new(label, center, rat(rng.gen_range(1..=4 * d), d)).unwrap()
}

/// Random triple, sometimes built so that tangencies hold exactly along an axis.
pub fn random_triple<R: Rng>(rng: &mut R, dim: usize) -> [Ball; 3] {
    let [a, b, c] = ["A", "B", "C"].map(|l| random_ball(rng, l, dim));
    let axis = rng.gen_range(0..dim);
    let shifted = |base: &Ball, label: &str, offset: Rat, radius: Rat| {
        let mut center = base.center.clone();
        center[axis] += offset;
        Ball::new(label, center, radius).unwrap()
    };
    match rng.gen_range(0..4) {
        0 => [a, b, c],
        1 => {
            let b = shifted(&a, "B", &a.radius + &b.radius, b.radius.clone());
            [a, b, c]
        }
        2 => {
            let r = &c.radius / Rat::from_integer(rng.gen_range(2..5).into());
            let a = shifted(&c, "A", &c.radius - &r, r.clone());
            let b = shifted(&c, "B", &r - &c.radius, r);
            [a, b, c]
        }
        _ => {
            let r = small_rat(rng, 1, 2);
            let a = shifted(&c, "A", &c.radius + &r, r.clone());
            let b = shifted(&c, "B", -(&c.radius + &r), r);
            [a, b, c]
        }
    }
}

/// Symmetry, order, trichotomy and implication laws for one triple.
pub fn geometry_invariants(a: &Ball, b: &Ball, c: &Ball) -> Result<(), String> {
    use mereogeo::geometry::*;
    let m = |k, x: &Ball, y: &Ball| ball_mereo(k, x, y).unwrap();
    let et = |x: &Ball, y: &Ball| tangency(TangencyKind::Et, x, y).unwrap();
    let it = |x: &Ball, y: &Ball| tangency(TangencyKind::It, x, y).unwrap();
    let con = |x: &Ball, y: &Ball| concentric(x, y).unwrap();
    let check = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(format!("{what}: {a}; {b}; {c}"))
        }
    };

    for k in [MereoKind::Overlap, MereoKind::Equal, MereoKind::Ext] {
        check(m(k, a, b) == m(k, b, a), "symmetry")?;
    }
    check(et(a, b) == et(b, a), "ET symmetry")?;
    check(m(MereoKind::PartOf, a, a) && !m(MereoKind::ProperPart, a, a), "reflexivity")?;
    check(!(m(MereoKind::PartOf, a, b) && m(MereoKind::PartOf, b, a)) || m(MereoKind::Equal, a, b), "antisymmetry")?;
    check(
        !(m(MereoKind::PartOf, a, b) && m(MereoKind::PartOf, b, c)) || m(MereoKind::PartOf, a, c),
        "PartOf transitivity",
    )?;
    check(
        !(m(MereoKind::ProperPart, a, b) && m(MereoKind::ProperPart, b, c)) || m(MereoKind::ProperPart, a, c),
        "ProperPart transitivity",
    )?;
    let ext_only = m(MereoKind::Ext, a, b) && !et(a, b);
    check([ext_only, et(a, b), m(MereoKind::Overlap, a, b)].iter().filter(|&&x| x).count() == 1, "trichotomy")?;
    let far = sq_dist(&a.center, &b.center).unwrap() >= (&a.radius + &b.radius) * (&a.radius + &b.radius);
    check(m(MereoKind::Overlap, a, b) != far, "overlap or far apart")?;
    check(!it(a, b) || m(MereoKind::ProperPart, a, b), "IT implies ProperPart")?;
    check(!et(a, b) || m(MereoKind::Ext, a, b), "ET implies Ext")?;
    check(!diam_tangency(DiamKind::Idt, a, b, c).unwrap() || (it(a, c) && it(b, c)), "IDT implies IT to the host")?;
    check(!diam_tangency(DiamKind::Edt, a, b, c).unwrap() || (et(a, c) && et(b, c)), "EDT implies ET to the host")?;
    check(con(a, a) && con(a, b) == con(b, a) && (!(con(a, b) && con(b, c)) || con(a, c)), "concentric equivalence")?;
    let (p, q, o) = (point_of(a), point_of(b), point_of(c));
    check(equidistant(&p, &q, &o).unwrap() == equidistant(&q, &p, &o).unwrap(), "EQUID symmetry")?;
    check(equidistant(&p, &p, &o).unwrap(), "EQUID reflexivity")?;
    // A ball part of a proper part always exists: the part itself.
    check(!m(MereoKind::ProperPart, b, a) || m(MereoKind::PartOf, b, b), "ball below a part")?;
    Ok(())
}

/// Every predicate value on a triple, in a fixed order.
pub fn predicate_vector(a: &Ball, b: &Ball, c: &Ball) -> Vec<String> {
    use mereogeo::geometry::*;
    let mut out = Vec::new();
    for (x, y) in [(a, b), (b, a), (a, c), (c, b)] {
        for k in [MereoKind::PartOf, MereoKind::ProperPart, MereoKind::Equal, MereoKind::Overlap, MereoKind::Ext] {
            out.push(ball_mereo(k, x, y).unwrap().to_string());
        }
        for k in [TangencyKind::Et, TangencyKind::It] {
            out.push(tangency(k, x, y).unwrap().to_string());
        }
        out.push(concentric(x, y).unwrap().to_string());
    }
    for k in [DiamKind::Edt, DiamKind::Idt] {
        out.push(diam_tangency(k, a, b, c).unwrap().to_string());
    }
    out.push(equidistant(&point_of(a), &point_of(b), &point_of(c)).unwrap().to_string());
    let s = Solid::new("S", vec![a.clone(), b.clone()]).unwrap();
    out.push(interior_point(&point_of(c), &s).unwrap().to_string());
    out
}
