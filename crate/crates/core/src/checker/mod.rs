//! Brute-force validity checking over finite structures, the formula
//! registry, and the propositional and functor-level spot checks.

mod eval;
mod extensionality;
mod registry;
mod report;

pub use eval::{check_validity, eval_formula, CheckOptions, Env, Reading, DEFAULT_MAX_ASSIGNMENTS};
pub use extensionality::{
    check_mereot16, check_protothetic_extensionality, ProtoReport, TruthFn, DEFAULT_FUNCTOR_LIBRARY,
};
pub use registry::{run_registry, Registry, RegistryEntry, RegistryError};
pub use report::{CheckReport, Counterexample, SuiteReport, SuiteRow, Verdict};

use thiserror::Error;

use crate::model::ModelError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("constant `{0}` is not defined in the model")]
    UnknownConstant(String),
    #[error("about {estimated} assignments needed, cap is {cap}")]
    QuantifierBlowup { estimated: u128, cap: u64 },
    #[error("functor library must not be empty")]
    NonemptyLibraryRequired,
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("{path}: {message}")]
    Source { path: String, message: String },
}
