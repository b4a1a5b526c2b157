use std::collections::BTreeSet;

use super::universe::SceneUniverse;
use crate::checker::{check_validity, CheckOptions, Reading, SuiteReport, SuiteRow, Verdict};
use crate::formula::parse_formula;

/// The ball and solid theorems as checked over a scene universe.
pub const TA4_FORMULAS: [(&str, &str); 3] = [
    (
        "TA4-literal",
        "forall A:singular, forall B:singular, A eps balls /\\ B eps el(A) -> \
         (exists C:singular, C eps balls -> C eps el(B))",
    ),
    (
        "TA4-strong",
        "forall A:singular, forall B:singular, A eps balls /\\ B eps el(A) -> \
         (exists C:singular, C eps balls /\\ C eps el(B))",
    ),
    ("TA4'", "forall A:singular, forall B:singular, A eps solids /\\ B eps el(A) -> B eps solids"),
];

/// Every ball has a ball among its elements, and elements of solids are solids.
pub fn check_ta4_ta4prime(universe: &SceneUniverse, model_id: &str) -> SuiteReport {
    // scene labels are constants too, but the theorems only need these
    let constants: BTreeSet<String> = ["balls", "solids", "empty"].iter().map(|s| s.to_string()).collect();
    let options = CheckOptions::with_reading(Reading::Annotated);
    let rows = TA4_FORMULAS
        .iter()
        .map(|(id, src)| {
            let f = parse_formula(src, &constants).expect("built-in formula parses");
            SuiteRow {
                id: id.to_string(),
                model_id: model_id.to_string(),
                expected: Verdict::Valid,
                outcome: check_validity(universe, model_id, id, &f, &options),
            }
        })
        .collect();
    SuiteReport { rows }
}
