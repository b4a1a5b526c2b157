//! Tarski's ball definitions evaluated over finite candidate sets and
//! compared with the exact analytic predicates.

mod definitions;
mod report;
mod ta4;
mod universe;

pub use definitions::{
    analytic, check_definition, check_scene, evaluate_restricted, BridgeOptions, DefArgs, Definition, Restricted,
};
pub use report::{summarize, BridgeReport, Classification};
pub use ta4::{check_ta4_ta4prime, TA4_FORMULAS};
pub use universe::{scene_to_universe, SceneUniverse};

use thiserror::Error;

use crate::geometry::GeoError;
use crate::model::ModelError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error(transparent)]
    Geo(#[from] GeoError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("unknown definition `{0}`")]
    UnknownDefinition(String),
    #[error("{definition} takes {expected} argument(s), got {found}")]
    Arity { definition: &'static str, expected: usize, found: usize },
    #[error("{0} got arguments of the wrong kind")]
    ArgumentKind(&'static str),
    #[error("label `{0}` is reserved")]
    ReservedLabel(String),
    #[error("scene has {0} individuals, too many for name masks")]
    TooManyIndividuals(usize),
}
