//! Propositional extensionality over the four unary truth functions, and
//! the matching name-level check for the mereological functors.

use mereogeo::checker::{check_mereot16, check_protothetic_extensionality, DEFAULT_FUNCTOR_LIBRARY};
use mereogeo::cli::generate_models;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let proto = check_protothetic_extensionality();
    println!("{proto}");

    for model in generate_models(1..=3)? {
        println!("{}", check_mereot16(&model, &DEFAULT_FUNCTOR_LIBRARY)?);
    }
    Ok(())
}
