//! Checks a few axioms and a refutable claim on small powerset models.

use std::collections::BTreeSet;

use mereogeo::checker::{check_validity, CheckOptions, Reading};
use mereogeo::cli::generate_models;
use mereogeo::formula::parse_formula;
use mereogeo::model::Mereology;

const CLAIMS: [(&str, &str); 4] = [
    (
        "pt-transitive",
        "forall A:singular, forall B:singular, forall C:singular, A eps pt(B) /\\ B eps pt(C) -> A eps pt(C)",
    ),
    ("kl-unique", "forall A:singular, forall B:singular, forall a:name, A eps Kl(a) /\\ B eps Kl(a) -> seq(A,B)"),
    ("kl-empty", "forall A:singular, ~(A eps Kl(empty))"),
    ("seq-reflexive", "forall A:name, seq(A,A)"),
];

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for reading in [Reading::Full, Reading::Annotated] {
        let options = CheckOptions::with_reading(reading);
        for model in generate_models(1..=3)? {
            let constants: BTreeSet<String> = model.constant_names().into_iter().collect();
            for (id, text) in CLAIMS {
                let f = parse_formula(text, &constants)?;
                let report = check_validity(&model, model.id(), id, &f, &options)?;
                println!("[{}] {report}", reading.as_str());
            }
        }
    }
    Ok(())
}
