//! The formula language: AST, parser, printer and the model file reader.

mod ast;
mod model_file;
mod parser;
mod printer;

pub use ast::{BinOp, Formula, FormulaKind, QuantDomain, Quantifier, Span, Term, TermKind};
pub use model_file::{parse_model, ModelFileError};
pub use parser::{parse_call, parse_formula, ParseError};
pub use printer::{print_formula, print_formula_with, print_term, Notation};
