use std::fmt;
use std::fmt::Write as _;
use std::time::Duration;

use super::eval::Env;
use super::CheckError;
use crate::model::{Functor, Mereology};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Valid,
    Refuted,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Valid => "valid",
            Verdict::Refuted => "refuted",
        }
    }

    pub fn parse(s: &str) -> Option<Verdict> {
        match s {
            "valid" => Some(Verdict::Valid),
            "refuted" => Some(Verdict::Refuted),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A falsifying assignment. `rendered` lists every bound variable with a
/// readable value, in binding order; for name variables it mirrors `env`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub env: Env,
    /// Set when a functor variable was bound as well.
    pub functor: Option<Functor>,
    pub rendered: Vec<(String, String)>,
}

impl Counterexample {
    pub fn from_env<M: Mereology + ?Sized>(model: &M, env: Env) -> Self {
        let rendered = env.render(model);
        Counterexample { env, functor: None, rendered }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rendered.is_empty() {
            return f.write_str("(no free variables)");
        }
        for (i, (v, val)) in self.rendered.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v} = {val}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub formula_id: String,
    pub model_id: String,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
    /// Variable bindings made during the search.
    pub assignments: u64,
    pub elapsed: Duration,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}: {} ({} assignments)", self.formula_id, self.model_id, self.verdict, self.assignments)?;
        if let Some(cx) = &self.counterexample {
            write!(f, "\n  counterexample: {cx}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteRow {
    pub id: String,
    pub model_id: String,
    pub expected: Verdict,
    pub outcome: Result<CheckReport, CheckError>,
}

impl SuiteRow {
    pub fn passed(&self) -> bool {
        matches!(&self.outcome, Ok(r) if r.verdict == self.expected)
    }
}

/// Outcome of running a formula registry over a family of models.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.passed()).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteRow> {
        self.rows.iter().filter(|r| !r.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(SuiteRow::passed)
    }

    pub fn errors(&self) -> impl Iterator<Item = (&SuiteRow, &CheckError)> {
        self.rows.iter().filter_map(|r| r.outcome.as_ref().err().map(|e| (r, e)))
    }

    pub fn elapsed(&self) -> Duration {
        self.rows.iter().filter_map(|r| r.outcome.as_ref().ok()).map(|r| r.elapsed).sum()
    }

    /// One line per row, then a summary line.
    pub fn to_text(&self, timing: bool) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let mark = if row.passed() { "ok  " } else { "FAIL" };
            match &row.outcome {
                Ok(r) => {
                    let _ = write!(
                        out,
                        "{mark} {}@{}: {} (expected {}, {} assignments",
                        row.id, row.model_id, r.verdict, row.expected, r.assignments
                    );
                    if timing {
                        let _ = write!(out, ", {:.3} ms", r.elapsed.as_secs_f64() * 1e3);
                    }
                    out.push_str(")\n");
                    if let Some(cx) = &r.counterexample {
                        let _ = writeln!(out, "     counterexample: {cx}");
                    }
                }
                Err(e) => {
                    let _ = writeln!(out, "{mark} {}@{}: error: {e}", row.id, row.model_id);
                }
            }
        }
        let _ = writeln!(out, "{} of {} passed", self.passed(), self.rows.len());
        out
    }

    /// `id@model<TAB>verdict<TAB>assignments<TAB>millis`, one row per line.
    /// With `timing` off the millis column is always `0`.
    pub fn to_tsv(&self, timing: bool) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let (verdict, assignments, millis) = match &row.outcome {
                Ok(r) => (r.verdict.as_str(), r.assignments, if timing { r.elapsed.as_millis() } else { 0 }),
                Err(_) => ("error", 0, 0),
            };
            let _ = writeln!(out, "{}@{}\t{verdict}\t{assignments}\t{millis}", row.id, row.model_id);
        }
        out
    }
}
