//! `.mreg` registry files.
//!
//! ```text
//! # id | formula file | expected verdict | atom bounds | optional reading
//! D4        | d4.mgf        | expect=valid   | atoms<=3
//! A1-plural | a1-plural.mgf | expect=refuted | atoms<=2 | atoms>=2 | reading=full
//! ```
//!
//! Formula paths are relative to the registry file.

use std::collections::{BTreeSet, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::eval::{check_validity, CheckOptions, Reading};
use super::report::{SuiteReport, SuiteRow, Verdict};
use super::CheckError;
use crate::formula::parse_formula;
use crate::model::{FiniteModel, Mereology, MAX_ATOMS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegistryError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate id `{id}`")]
    DuplicateId { line: usize, id: String },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegistryEntry {
    pub id: String,
    pub path: PathBuf,
    pub expect: Verdict,
    pub min_atoms: usize,
    pub max_atoms: usize,
    /// Overrides the suite-wide reading when set.
    pub reading: Option<Reading>,
}

impl RegistryEntry {
    pub fn applies_to(&self, atoms: usize) -> bool {
        (self.min_atoms..=self.max_atoms).contains(&atoms)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Registry {
    pub entries: Vec<RegistryEntry>,
}

fn syntax(line: usize, message: impl Into<String>) -> RegistryError {
    RegistryError::Syntax { line, message: message.into() }
}

fn parse_bound(line: usize, field: &str, value: &str) -> Result<usize, RegistryError> {
    match value.trim().parse::<usize>() {
        Ok(n) if (1..=MAX_ATOMS).contains(&n) => Ok(n),
        _ => Err(syntax(line, format!("bad atom bound in `{field}`"))),
    }
}

impl Registry {
    /// Parses registry text; relative formula paths are joined onto `base`.
    pub fn parse(text: &str, base: &Path) -> Result<Registry, RegistryError> {
        let mut entries = Vec::new();
        let mut seen = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split('|').map(str::trim).collect();
            if fields.len() < 4 {
                return Err(syntax(line, "expected `id | file | expect=... | atoms<=N`"));
            }
            let id = fields[0];
            if id.is_empty() || id.contains(char::is_whitespace) {
                return Err(syntax(line, "entry id must be a single word"));
            }
            if !seen.insert(id.to_string()) {
                return Err(RegistryError::DuplicateId { line, id: id.to_string() });
            }
            if fields[1].is_empty() {
                return Err(syntax(line, "missing formula file"));
            }
            let path = base.join(fields[1]);
            let mut expect = None;
            let mut min_atoms = 1;
            let mut max_atoms = None;
            let mut reading = None;
            for field in &fields[2..] {
                if let Some(v) = field.strip_prefix("expect=") {
                    expect =
                        Some(Verdict::parse(v.trim()).ok_or_else(|| syntax(line, format!("unknown verdict `{v}`")))?);
                } else if let Some(v) = field.strip_prefix("atoms<=") {
                    max_atoms = Some(parse_bound(line, field, v)?);
                } else if let Some(v) = field.strip_prefix("atoms>=") {
                    min_atoms = parse_bound(line, field, v)?;
                } else if let Some(v) = field.strip_prefix("reading=") {
                    reading =
                        Some(Reading::parse(v.trim()).ok_or_else(|| syntax(line, format!("unknown reading `{v}`")))?);
                } else {
                    return Err(syntax(line, format!("unknown field `{field}`")));
                }
            }
            let expect = expect.ok_or_else(|| syntax(line, "missing `expect=`"))?;
            let max_atoms = max_atoms.ok_or_else(|| syntax(line, "missing `atoms<=`"))?;
            if min_atoms > max_atoms {
                return Err(syntax(line, "empty atom range"));
            }
            entries.push(RegistryEntry { id: id.to_string(), path, expect, min_atoms, max_atoms, reading });
        }
        Ok(Registry { entries })
    }

    pub fn load(path: &Path) -> Result<Registry, RegistryError> {
        let text = fs::read_to_string(path)
            .map_err(|e| RegistryError::Io { path: path.display().to_string(), message: e.to_string() })?;
        Registry::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }
}

/// Checks every entry against every model whose atom count it admits.
/// Rows come out entry-major, in model order; errors are recorded per row.
pub fn run_registry(models: &[FiniteModel], reg: &Registry, options: &CheckOptions) -> SuiteReport {
    let mut rows = Vec::new();
    for entry in &reg.entries {
        let source = fs::read_to_string(&entry.path)
            .map_err(|e| CheckError::Source { path: entry.path.display().to_string(), message: e.to_string() });
        let entry_options = CheckOptions { reading: entry.reading.unwrap_or(options.reading), ..*options };
        for model in models.iter().filter(|m| entry.applies_to(m.atom_count())) {
            let outcome = source.clone().and_then(|text| {
                let constants: BTreeSet<String> = model.constant_names().into_iter().collect();
                let f = parse_formula(&text, &constants).map_err(|e| CheckError::Source {
                    path: entry.path.display().to_string(),
                    message: e.diagnostic(&text),
                })?;
                check_validity(model, model.id(), &entry.id, &f, &entry_options)
            });
            rows.push(SuiteRow {
                id: entry.id.clone(),
                model_id: model.id().to_string(),
                expected: entry.expect,
                outcome,
            });
        }
    }
    SuiteReport { rows }
}
