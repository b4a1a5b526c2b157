//! Runs the bundled formula registry over one to three atoms.

use std::path::Path;

use mereogeo::checker::{run_registry, CheckOptions, Reading, Registry};
use mereogeo::cli::generate_models;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("registry/core.mreg");
    let registry = Registry::load(&path)?;

    let small = run_registry(&generate_models(1..=2)?, &registry, &CheckOptions::with_reading(Reading::Full));
    let large = run_registry(&generate_models(3..=3)?, &registry, &CheckOptions::with_reading(Reading::Annotated));
    for report in [&small, &large] {
        print!("{}", report.to_text(true));
    }
    if !(small.all_passed() && large.all_passed()) {
        std::process::exit(1);
    }
    Ok(())
}
