//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use mereogeo::bridge::{check_scene, check_ta4_ta4prime, BridgeOptions, Classification, SceneUniverse};
use mereogeo::checker::{
    check_protothetic_extensionality, check_validity, run_registry, CheckOptions, Reading, Registry, Verdict,
};
use mereogeo::cli::generate_models;
use mereogeo::formula::{parse_formula, print_formula};
use mereogeo::geometry::{
    diam_tangency, int, interior_point, interior_point_1d_exact, merged_intervals, parse_scene, rat, tangency,
    transform, Ball, DiamKind, GPoint, Rat, Solid, TangencyKind, Transform, TriBool,
};
use mereogeo::model::{functor_den, oracle_den, Functor, Mereology, NameDen};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::{
    closed_formula, files_with_ext, geometry_invariants, predicate_vector, random_triple, registry_path, small_rat,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn registry_soundness() -> Outcome {
    let started = Instant::now();
    let registry = Registry::load(&registry_path()).map_err(|e| e.to_string())?;
    let small = run_registry(&generate_models(1..=2).unwrap(), &registry, &CheckOptions::with_reading(Reading::Full));
    let large =
        run_registry(&generate_models(3..=3).unwrap(), &registry, &CheckOptions::with_reading(Reading::Annotated));
    let elapsed = started.elapsed();
    for report in [&small, &large] {
        if let Some(row) = report.failures().next() {
            return Err(format!("{}@{} did not give {}", row.id, row.model_id, row.expected));
        }
    }
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!("{} checks in {:.2} s", small.rows.len() + large.rows.len(), elapsed.as_secs_f64()))
}

fn oracle_equivalence() -> Outcome {
    let mut comparisons = 0u64;
    for model in generate_models(1..=3).unwrap() {
        let names: Vec<NameDen> = (0..1u64 << model.individual_count()).map(NameDen::from_bits).collect();
        for f in Functor::ALL {
            let tuples: Vec<Vec<NameDen>> = if f.arity() == 1 {
                names.iter().map(|&a| vec![a]).collect()
            } else {
                names.iter().flat_map(|&a| names.iter().map(move |&b| vec![a, b])).collect()
            };
            for args in tuples {
                let (d, o) = (functor_den(&model, f, &args), oracle_den(&model, f, &args));
                ensure(d == o, || format!("{f} on {} in {}", model.render(args[0]), model.id()))?;
                comparisons += 1;
            }
        }
    }
    Ok(format!("{comparisons} comparisons"))
}

fn seq_not_reflexive() -> Outcome {
    let options = CheckOptions { max_assignments: u64::MAX, ..CheckOptions::default() };
    let mut witnesses = Vec::new();
    for model in generate_models(1..=6).unwrap() {
        let consts: BTreeSet<String> = model.constant_names().into_iter().collect();
        let f = parse_formula("forall A:name, seq(A,A)", &consts).unwrap();
        let report = check_validity(&model, model.id(), "seq-reflexive", &f, &options).map_err(|e| e.to_string())?;
        let cx = report.counterexample.ok_or_else(|| format!("no witness in {}", model.id()))?;
        witnesses.push(cx.to_string());
    }
    let mut distinct = witnesses.clone();
    distinct.dedup();
    Ok(format!("{} models, witness {}", witnesses.len(), distinct.join(" / ")))
}

fn kl_of_empty() -> Outcome {
    let mut first = None;
    for reading in [Reading::Full, Reading::Annotated] {
        let atoms = if reading == Reading::Full { 1..=2 } else { 1..=6 };
        for model in generate_models(atoms).unwrap() {
            let consts: BTreeSet<String> = model.constant_names().into_iter().collect();
            let options = CheckOptions::with_reading(reading);
            let check = |text: &str| {
                let f = parse_formula(text, &consts).unwrap();
                check_validity(&model, model.id(), "kl-empty", &f, &options).map_err(|e| e.to_string())
            };
            let valid = check("forall A:singular, ~(A eps Kl(empty))")?;
            ensure(valid.verdict == Verdict::Valid, || format!("refuted in {}", model.id()))?;
            let mutant = check("forall A:singular, A eps Kl(empty)")?;
            let again = check("forall A:singular, A eps Kl(empty)")?;
            ensure(mutant.verdict == Verdict::Refuted, || format!("mutant valid in {}", model.id()))?;
            ensure(mutant.counterexample == again.counterexample, || "counterexample not reproducible".into())?;
            if reading == Reading::Annotated && model.atom_count() == 1 {
                first = mutant.counterexample.map(|c| c.to_string());
            }
        }
    }
    Ok(format!("mutant first refuted at {}", first.unwrap_or_default()))
}

fn protothetic() -> Outcome {
    let _ = check_protothetic_extensionality();
    let mut best = Duration::MAX;
    let mut report = None;
    for _ in 0..5 {
        let started = Instant::now();
        let r = check_protothetic_extensionality();
        best = best.min(started.elapsed());
        report = Some(r);
    }
    let report = report.unwrap();
    ensure(report.r2.verdict == Verdict::Valid, || "R2 refuted".into())?;
    ensure(report.r1.verdict == Verdict::Refuted, || "R1 valid".into())?;
    let cx = report.r1.counterexample.as_ref().unwrap().to_string();
    ensure(cx.contains("f = constant-"), || format!("unexpected witness {cx}"))?;
    ensure(best < Duration::from_millis(1), || format!("took {best:?}"))?;
    Ok(format!("R1 refuted by {cx}, {} us", best.as_micros()))
}

fn random_transform<R: Rng>(rng: &mut R, dim: usize, kind: usize) -> Transform {
    match kind {
        0 => Transform::Translate((0..dim).map(|_| small_rat(rng, -5, 5)).collect()),
        1 => {
            let mut perm: Vec<usize> = (0..dim).collect();
            perm.shuffle(rng);
            Transform::Permute(perm)
        }
        2 => Transform::Flip(rng.gen_range(0..dim)),
        _ => Transform::Scale(rat(rng.gen_range(1..=9), rng.gen_range(1..=9))),
    }
}

fn ball(label: &str, c: &[i64], r: Rat) -> Ball {
    Ball::new(label, c.iter().map(|&x| int(x)).collect(), r).unwrap()
}

fn tangency_fixtures() -> Result<usize, String> {
    let et = |a: &Ball, b: &Ball| tangency(TangencyKind::Et, a, b).unwrap();
    let it = |a: &Ball, b: &Ball| tangency(TangencyKind::It, a, b).unwrap();
    let cases = [
        (et(&ball("A", &[0, 0], int(1)), &ball("B", &[3, 0], int(2))), true),
        (et(&ball("A", &[0, 0], int(1)), &ball("B", &[3, 0], rat(19, 10))), false),
        (et(&ball("A", &[0, 0, 0], int(2)), &ball("B", &[3, 4, 0], int(3))), true),
        (it(&ball("A", &[1, 0], int(1)), &ball("B", &[0, 0], int(2))), true),
        (it(&ball("A", &[1], rat(1, 2)), &ball("B", &[0], rat(3, 2))), true),
        (it(&ball("A", &[0, 0], int(2)), &ball("B", &[0, 0], int(2))), false),
        (it(&ball("A", &[1, 0], int(1)), &ball("B", &[0, 0], rat(21, 10))), false),
    ];
    let host = ball("C", &[0, 0], int(2));
    let diam = [
        (DiamKind::Edt, ball("A", &[-3, 0], int(1)), ball("B", &[3, 0], int(1)), true),
        (DiamKind::Edt, ball("A", &[-3, 0], int(1)), ball("B", &[0, 3], int(1)), false),
        (DiamKind::Edt, ball("A", &[-3, 0], int(1)), ball("B", &[4, 0], int(2)), true),
        (DiamKind::Idt, ball("A", &[-1, 0], int(1)), ball("B", &[1, 0], int(1)), true),
        (DiamKind::Idt, ball("A", &[0, -1], int(1)), ball("B", &[0, 1], int(1)), true),
        (DiamKind::Idt, ball("A", &[-1, 0], int(1)), ball("B", &[0, 1], int(1)), false),
    ];
    for (i, (got, want)) in cases.iter().enumerate() {
        ensure(got == want, || format!("tangency fixture {i}"))?;
    }
    for (i, (k, a, b, want)) in diam.iter().enumerate() {
        ensure(diam_tangency(*k, a, b, &host).unwrap() == *want, || format!("diametral fixture {i}"))?;
    }
    Ok(cases.len() + diam.len())
}

fn geometry_suite() -> Outcome {
    let fixtures = tangency_fixtures()?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e0);
    let mut configs = 0;
    for dim in 1..=3 {
        for _ in 0..1000 {
            let triple = random_triple(&mut rng, dim);
            let [a, b, c] = &triple;
            geometry_invariants(a, b, c)?;
            let before = predicate_vector(a, b, c);
            for kind in 0..4 {
                let t = random_transform(&mut rng, dim, kind);
                let moved = triple.clone().map(|x| transform(&x, &t).unwrap());
                let after = predicate_vector(&moved[0], &moved[1], &moved[2]);
                ensure(before == after, || format!("{t:?} changed predicates on {a}; {b}; {c}"))?;
            }
            configs += 1;
        }
    }
    Ok(format!("{configs} configurations x 4 transforms, {fixtures} fixtures"))
}

fn bridge_corpus() -> Outcome {
    let scenes = files_with_ext("scenes", "geo");
    ensure(scenes.len() >= 10, || format!("only {} scenes", scenes.len()))?;
    let mut seen: BTreeSet<(String, bool)> = BTreeSet::new();
    let mut total = 0;
    for path in &scenes {
        let text = std::fs::read_to_string(path).unwrap();
        let scene = parse_scene(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let universe = SceneUniverse::from_scene(&scene).map_err(|e| e.to_string())?;
        let reports = check_scene(&universe, &BridgeOptions::default()).map_err(|e| e.to_string())?;
        if let Some(r) = reports.iter().find(|r| r.is_hard()) {
            return Err(format!("{}: {}", path.display(), r.tsv_line()));
        }
        for r in reports.iter().filter(|r| r.classification == Classification::Agreement) {
            match r.analytic {
                TriBool::Yes => seen.insert((r.definition.id().to_string(), true)),
                TriBool::No => seen.insert((r.definition.id().to_string(), false)),
                TriBool::Undecided => false,
            };
        }
        let ta4 = check_ta4_ta4prime(&universe, "scene");
        ensure(ta4.all_passed(), || format!("{}: solid axioms failed", path.display()))?;
        total += reports.len();
    }
    for def in ["ET", "IT", "EDT", "IDT", "CON", "EQUID", "IPOINT"] {
        for polarity in [true, false] {
            ensure(seen.contains(&(def.to_string(), polarity)), || {
                format!("no agreeing {def} case with analytic {polarity}")
            })?;
        }
    }
    Ok(format!("{} scenes, {total} reports, 0 hard disagreements", scenes.len()))
}

/// Membership of `x` in the closure of the solid, checked ball by ball.
fn covered(x: &Rat, s: &Solid) -> bool {
    s.parts.iter().any(|b| (x - &b.center[0]) * (x - &b.center[0]) <= &b.radius * &b.radius)
}

fn interior_oracle_1d() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1d);
    let mut interior = 0;
    for scene in 0..200 {
        let parts: Vec<Ball> = (0..rng.gen_range(1..=4))
            .map(|i| Ball::new(format!("I{i}"), vec![small_rat(&mut rng, -4, 4)], small_rat(&mut rng, 1, 2)).unwrap())
            .collect();
        let s = Solid::new("S", parts).unwrap();
        let mut ends: Vec<Rat> =
            s.parts.iter().flat_map(|b| [&b.center[0] - &b.radius, &b.center[0] + &b.radius]).collect();
        let x = if rng.gen_bool(0.5) { ends.choose(&mut rng).unwrap().clone() } else { small_rat(&mut rng, -6, 6) };
        ends.push(x.clone());
        ends.sort();
        ends.dedup();
        let gap = ends.windows(2).map(|w| &w[1] - &w[0]).min().unwrap_or_else(|| int(1));
        let step = gap / int(2);
        // Between consecutive endpoints coverage is constant, so x +- step decides.
        let brute = [&x - &step, x.clone(), &x + &step].iter().all(|y| covered(y, &s));
        let p = GPoint::new(vec![x.clone()]);
        let exact = interior_point_1d_exact(&p, &s).unwrap();
        ensure(exact == brute, || format!("scene {scene}: x = {x}, intervals {:?}", merged_intervals(&s).unwrap()))?;
        let three = interior_point(&p, &s).unwrap();
        ensure(!(three == TriBool::Yes && !exact), || format!("scene {scene}: three-valued yes, exact false"))?;
        ensure(!(three == TriBool::No && exact), || format!("scene {scene}: three-valued no, exact true"))?;
        interior += exact as usize;
    }
    Ok(format!("200 scenes, {interior} interior"))
}

fn parser_round_trip() -> Outcome {
    let consts: BTreeSet<String> = common::CONSTANTS.iter().map(|s| s.to_string()).collect();
    let rng = TestRng::from_seed(RngAlgorithm::ChaCha, &[7; 32]);
    let mut runner = TestRunner::new_with_rng(Config::default(), rng);
    let strategy = closed_formula();
    let mut quantified = 0;
    for i in 0..10_000 {
        let f = strategy.new_tree(&mut runner).unwrap().current();
        let text = print_formula(&f);
        let back = parse_formula(&text, &consts).map_err(|e| format!("ast {i}: {}", e.diagnostic(&text)))?;
        ensure(back == f, || format!("ast {i} changed: {text}"))?;
        quantified += (f.quantifier_count() > 0) as usize;
    }
    let mut files = 0;
    for dir in ["registry", "tests/fixtures"] {
        for path in files_with_ext(dir, "mgf") {
            let text = std::fs::read_to_string(&path).unwrap();
            let parsed = parse_formula(&text, &["empty", "u", "planets", "nothing"].map(String::from).into());
            let should_fail = path.file_stem().is_some_and(|s| s == "bad_syntax");
            ensure(parsed.is_err() == should_fail, || format!("{}: {parsed:?}", path.display()))?;
            files += 1;
        }
    }
    Ok(format!("10000 ASTs ({quantified} quantified), {files} files"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("registry soundness", registry_soundness),
        ("oracle equivalence", oracle_equivalence),
        ("seq non-reflexivity witness", seq_not_reflexive),
        ("class of the empty name", kl_of_empty),
        ("propositional extensionality", protothetic),
        ("geometry properties", geometry_suite),
        ("bridge corpus", bridge_corpus),
        ("1-D interior oracle", interior_oracle_1d),
        ("parser round trip", parser_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
