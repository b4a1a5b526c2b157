//! Parses a formula, prints it in both notations, and shows a diagnostic.

use std::collections::BTreeSet;

use mereogeo::formula::{parse_formula, print_formula_with, Notation};

fn main() {
    let constants: BTreeSet<String> = ["empty".to_string()].into();
    let text = "forall A:singular, forall a:name, A eps Kl(a) -> A eps Kl(Kl(a)) /\\ ~(A eps Kl(empty))";
    let f = parse_formula(text, &constants).expect("well-formed");
    println!("{}", print_formula_with(&f, Notation::Ascii));
    println!("{}", print_formula_with(&f, Notation::Unicode));

    // Unicode output is for reports; the ASCII form parses back to the same tree.
    let reparsed = parse_formula(&print_formula_with(&f, Notation::Ascii), &constants).unwrap();
    assert_eq!(reparsed, f);

    let broken = "forall A:singular,\n  A eps el(A";
    match parse_formula(broken, &constants) {
        Ok(_) => unreachable!(),
        Err(e) => println!("{}", e.diagnostic(broken)),
    }
}
