//! Reader for `.mmod` model files.
//!
//! ```text
//! atoms: x y z
//! name planets = {x} {y} {x,y}
//! name e =
//! ```

use std::collections::BTreeSet;

use thiserror::Error;

use super::parser::is_identifier;
use crate::model::{ModelError, ModelSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Model { line: usize, source: ModelError },
}

fn syntax(line: usize, message: impl Into<String>) -> ModelFileError {
    ModelFileError::Syntax { line, message: message.into() }
}

/// Parses a model description. The first non-comment line declares the atoms.
pub fn parse_model(text: &str) -> Result<ModelSpec, ModelFileError> {
    let mut spec = ModelSpec::default();
    let mut saw_atoms = false;
    let mut names = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if !saw_atoms {
            let rest = line.strip_prefix("atoms:").ok_or_else(|| syntax(line_no, "expected `atoms:` declaration"))?;
            for atom in rest.split_whitespace() {
                if !is_identifier(atom) {
                    return Err(syntax(line_no, format!("invalid atom identifier `{atom}`")));
                }
                if spec.atoms.iter().any(|a| a == atom) {
                    return Err(ModelFileError::Model {
                        line: line_no,
                        source: ModelError::DuplicateAtom(atom.into()),
                    });
                }
                spec.atoms.push(atom.to_string());
            }
            if spec.atoms.is_empty() {
                return Err(ModelFileError::Model { line: line_no, source: ModelError::AtomCountOutOfRange(0) });
            }
            saw_atoms = true;
            continue;
        }
        let rest = line
            .strip_prefix("name")
            .filter(|r| r.starts_with(char::is_whitespace))
            .ok_or_else(|| syntax(line_no, "expected `name <id> = {..} ...`"))?;
        let (name, groups) =
            rest.split_once('=').ok_or_else(|| syntax(line_no, "expected `=` after the constant name"))?;
        let name = name.trim();
        if !is_identifier(name) {
            return Err(syntax(line_no, format!("invalid constant identifier `{name}`")));
        }
        if !names.insert(name.to_string()) {
            return Err(ModelFileError::Model { line: line_no, source: ModelError::DuplicateConstant(name.into()) });
        }
        let mut individuals = Vec::new();
        for group in groups.split_whitespace() {
            let inner = group
                .strip_prefix('{')
                .and_then(|g| g.strip_suffix('}'))
                .ok_or_else(|| syntax(line_no, format!("malformed individual `{group}`")))?;
            if inner.is_empty() {
                return Err(ModelFileError::Model {
                    line: line_no,
                    source: ModelError::EmptySetAsIndividual(name.into()),
                });
            }
            let mut atoms = Vec::new();
            for atom in inner.split(',') {
                if !spec.atoms.iter().any(|a| a == atom) {
                    return Err(ModelFileError::Model {
                        line: line_no,
                        source: ModelError::UnknownAtomInConstant { constant: name.into(), atom: atom.into() },
                    });
                }
                atoms.push(atom.to_string());
            }
            individuals.push(atoms);
        }
        spec.constants.push((name.to_string(), individuals));
    }
    if !saw_atoms {
        return Err(syntax(1, "missing `atoms:` declaration"));
    }
    Ok(spec)
}
