//! Verification engine for finite mereology and exact ball geometry.

pub mod bridge;
pub mod checker;
pub mod cli;
pub mod formula;
pub mod geometry;
pub mod model;
