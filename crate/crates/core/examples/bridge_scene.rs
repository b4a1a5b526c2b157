//! Compares analytic predicates with their definitions restricted to the
//! balls of a scene, then checks the solid axioms in the scene's universe.

use std::path::Path;

use mereogeo::bridge::{
    check_definition, check_scene, check_ta4_ta4prime, summarize, BridgeOptions, Definition, SceneUniverse,
};
use mereogeo::geometry::parse_scene;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "diametral_external".into());
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenes").join(format!("{name}.geo"));
    let universe = SceneUniverse::from_scene(&parse_scene(&std::fs::read_to_string(path)?)?)?;

    let options = BridgeOptions::default();
    println!("{}", check_definition(&universe, Definition::Edt, &["A", "B", "C"], &options)?);
    let bare =
        check_definition(&universe, Definition::Edt, &["A", "E", "C"], &BridgeOptions { inject_witnesses: false })?;
    println!("{}", bare.tsv_line());

    let reports = check_scene(&universe, &options)?;
    for r in reports.iter().filter(|r| !r.agreement()) {
        println!("{}", r.tsv_line());
    }
    println!("{}", summarize(&reports));
    print!("{}", check_ta4_ta4prime(&universe, &name).to_text(false));
    Ok(())
}
