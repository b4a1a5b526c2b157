use std::collections::BTreeSet;

use mereogeo::bridge::{evaluate_restricted, DefArgs, Definition};
use mereogeo::checker::{check_validity, eval_formula, run_registry, CheckOptions, Env, Reading, Registry, Verdict};
use mereogeo::cli::generate_models;
use mereogeo::formula::{parse_formula, print_formula, Formula};
use mereogeo::geometry::{
    ball_mereo, interior_point, interior_witness_radius, point_of, Ball, MereoKind, Solid, TriBool,
};
use mereogeo::model::{eval_epsilon, eval_equality, functor_den, EqualityKind, Functor, Mereology, NameDen};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

mod common;
use common::{closed_formula, geometry_invariants, random_ball, random_triple, registry_path};

fn constants() -> BTreeSet<String> {
    common::CONSTANTS.iter().map(|s| s.to_string()).collect()
}

fn balls(seed: u64, dim: usize, n: usize) -> Vec<Ball> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|i| random_ball(&mut rng, &format!("B{i}"), dim)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn print_then_parse_is_identity(f in closed_formula()) {
        let text = print_formula(&f);
        let back = parse_formula(&text, &constants()).map_err(|e| TestCaseError::fail(e.diagnostic(&text)))?;
        prop_assert_eq!(&back, &f, "{}", text);
    }

    #[test]
    fn parse_errors_point_inside_the_input(text in "[A-Za-z():,~/\\\\<>= -]{0,40}") {
        if let Err(e) = parse_formula(&text, &constants()) {
            let span = e.span();
            prop_assert!(span.start <= span.end && span.end <= text.len(), "{:?} in {:?}", span, text);
        }
    }

    #[test]
    fn ball_relations(seed in any::<u64>(), dim in 1usize..=3) {
        let [a, b, c] = random_triple(&mut ChaCha8Rng::seed_from_u64(seed), dim);
        geometry_invariants(&a, &b, &c).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn interior_witnesses_are_sound(seed in any::<u64>(), dim in 1usize..=3) {
        let v = balls(seed, dim, 4);
        let s = Solid::new("S", v[..3].to_vec()).unwrap();
        let p = point_of(&v[3]);
        let verdict = interior_point(&p, &s).unwrap();
        let witness = interior_witness_radius(&p, &s).unwrap();
        prop_assert_eq!(verdict == TriBool::Yes, witness.is_some());
        if let Some((i, r)) = witness {
            let w = Ball::new("w", p.coords.clone(), r).unwrap();
            prop_assert!(ball_mereo(MereoKind::PartOf, &w, &s.parts[i]).unwrap());
        }
    }

    /// Extra candidates can only falsify a restricted universal definition.
    #[test]
    fn restricted_universals_are_antitone(seed in any::<u64>(), dim in 1usize..=2, extra in 1usize..4) {
        let v = balls(seed, dim, 3 + extra);
        let base = &v[..3];
        for def in [Definition::Et, Definition::It, Definition::Edt, Definition::Idt, Definition::Con] {
            let args = DefArgs::Balls(v[..def.arity()].to_vec());
            let small = evaluate_restricted(def, &args, base).unwrap().holds;
            let large = evaluate_restricted(def, &args, &v).unwrap().holds;
            prop_assert!(small || !large, "{} flipped to true", def.id());
        }
    }
}

#[test]
fn epsilon_matches_its_axiom_by_brute_force() {
    for model in generate_models(1..=2).unwrap() {
        let names: Vec<NameDen> = (0..1u64 << model.individual_count()).map(NameDen::from_bits).collect();
        let singulars: Vec<NameDen> = names.iter().copied().filter(|d| d.is_singular()).collect();
        for &a in &names {
            for &b in &names {
                let rhs = names.iter().any(|&x| eval_epsilon(&model, x, a).unwrap())
                    && singulars.iter().all(|&c| {
                        singulars.iter().all(|&d| {
                            !(eval_epsilon(&model, c, a).unwrap() && eval_epsilon(&model, d, a).unwrap())
                                || eval_epsilon(&model, c, d).unwrap()
                        })
                    })
                    && singulars
                        .iter()
                        .all(|&c| !eval_epsilon(&model, c, a).unwrap() || eval_epsilon(&model, c, b).unwrap());
                let lhs = eval_epsilon(&model, a, b).unwrap();
                assert_eq!(lhs, rhs, "{} eps {}", model.render(a), model.render(b));
                if lhs {
                    assert!(eval_epsilon(&model, a, a).unwrap());
                }
            }
        }
    }
}

#[test]
fn equalities_and_functors_on_denotations() {
    for model in generate_models(1..=3).unwrap() {
        let names: Vec<NameDen> = (0..1u64 << model.individual_count()).map(NameDen::from_bits).collect();
        let n = model.individual_count();
        assert!(names.iter().any(|&a| !eval_equality(&model, EqualityKind::Singular, a, a).unwrap()));
        for &a in &names {
            assert!(eval_equality(&model, EqualityKind::Weak, a, a).unwrap());
            let kl = functor_den(&model, Functor::Kl, &[a]).unwrap();
            assert!(kl.len() <= 1);
            assert_eq!(kl.is_empty(), a.is_empty());
            if !a.is_empty() {
                assert_eq!(functor_den(&model, Functor::Kl, &[kl]).unwrap(), kl);
            }
            for p in (0..n).filter(|&p| eval_epsilon(&model, NameDen::singleton(p), a).unwrap()) {
                assert!(functor_den(&model, Functor::Coll, &[a]).unwrap().contains(p));
            }
        }
        for x in 0..n {
            let sx = NameDen::singleton(x);
            let pt_x = functor_den(&model, Functor::Pt, &[sx]).unwrap();
            assert_eq!(
                functor_den(&model, Functor::El, &[sx]).unwrap(),
                functor_den(&model, Functor::Subcoll, &[sx]).unwrap()
            );
            for y in pt_x.members() {
                assert!(!functor_den(&model, Functor::Pt, &[NameDen::singleton(y)]).unwrap().contains(x));
                assert!(functor_den(&model, Functor::Pt, &[NameDen::singleton(y)]).unwrap().is_subset_of(pt_x));
            }
        }
    }
}

/// Entries written with singular annotations get the same verdicts when
/// every quantifier ranges over all names.
#[test]
fn annotated_and_full_readings_agree_on_small_models() {
    let registry = Registry::load(&registry_path()).unwrap();
    let models = generate_models(1..=2).unwrap();
    let full = run_registry(&models, &registry, &CheckOptions::with_reading(Reading::Full));
    let annotated = run_registry(&models, &registry, &CheckOptions::with_reading(Reading::Annotated));
    let mut compared = 0;
    for (f, a) in full.rows.iter().zip(&annotated.rows) {
        let entry = registry.entries.iter().find(|e| e.id == f.id).unwrap();
        if entry.reading.is_some() {
            continue;
        }
        let (f, a) = (f.outcome.as_ref().unwrap(), a.outcome.as_ref().unwrap());
        assert_eq!(f.verdict, a.verdict, "{}@{}", f.formula_id, f.model_id);
        compared += 1;
    }
    assert!(compared >= 50);
}

#[test]
fn suite_reports_are_deterministic() {
    let registry = Registry::load(&registry_path()).unwrap();
    let models = generate_models(1..=2).unwrap();
    let options = CheckOptions::default();
    let a = run_registry(&models, &registry, &options);
    let b = run_registry(&models, &registry, &options);
    assert_eq!(a.to_tsv(false), b.to_tsv(false));
    assert_eq!(a.to_text(false), b.to_text(false));
}

#[test]
fn counterexamples_replay_to_false() {
    let models = generate_models(1..=2).unwrap();
    let registry = Registry::load(&registry_path()).unwrap();
    for model in &models {
        let consts: BTreeSet<String> = model.constant_names().into_iter().collect();
        for entry in
            registry.entries.iter().filter(|e| e.expect == Verdict::Refuted && e.applies_to(model.atom_count()))
        {
            let f: Formula = parse_formula(&std::fs::read_to_string(&entry.path).unwrap(), &consts).unwrap();
            let options = CheckOptions::with_reading(entry.reading.unwrap_or(Reading::Full));
            let report = check_validity(model, model.id(), &entry.id, &f, &options).unwrap();
            let cx = report.counterexample.expect("refuted");
            let mut body = &f;
            while let mereogeo::formula::FormulaKind::Quant(mereogeo::formula::Quantifier::Forall, _, _, b) = &body.kind
            {
                body = b;
            }
            let env: Env = cx.env.iter().map(|(v, d)| (v.to_string(), d)).collect();
            assert!(!eval_formula(model, &env, body, &options).unwrap(), "{}", entry.id);
        }
    }
}
