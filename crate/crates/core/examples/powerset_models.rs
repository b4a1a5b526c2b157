//! Builds powerset models and evaluates the primitive relations directly.

use std::collections::BTreeMap;

use mereogeo::model::{
    eval_epsilon, eval_equality, functor_den, make_powerset_model, oracle_den, EqualityKind, Functor, Mereology,
    NameDen,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut constants = BTreeMap::new();
    constants.insert("planets".to_string(), vec![vec!["x".to_string()], vec!["y".to_string()]]);
    let model = make_powerset_model(3, &constants)?;
    println!("{}: {} individuals", model.id(), model.individual_count());

    let planets = model.constant("planets").unwrap();
    let x = NameDen::singleton(model.individual_of_mask(0b001));
    let xy = NameDen::singleton(model.individual_of_mask(0b011));
    println!("x eps planets = {}", eval_epsilon(&model, x, planets)?);
    println!("planets eps planets = {}", eval_epsilon(&model, planets, planets)?);
    println!("seq(x, x) = {}", eval_equality(&model, EqualityKind::Singular, x, x)?);
    println!("seq(empty, empty) = {}", eval_equality(&model, EqualityKind::Singular, NameDen::EMPTY, NameDen::EMPTY)?);

    for f in Functor::ALL.into_iter().filter(|f| f.arity() == 1) {
        let den = functor_den(&model, f, &[planets])?;
        assert_eq!(den, oracle_den(&model, f, &[planets])?);
        println!("{:>8}(planets) = {}", f.name(), model.render(den));
    }
    println!("Kl(planets) is {}", model.render(xy));
    Ok(())
}
