use std::fmt;
use std::fmt::Write as _;

use super::definitions::Definition;
use crate::geometry::{Ball, TriBool};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Agreement,
    /// Analytic true but the restricted definition fails, or analytic false
    /// while the definition survives an injected refutation witness.
    HardDisagreement,
    /// Analytic false, restricted universal true, and no refuting candidate
    /// was available. Expected for finite candidate sets.
    InconclusiveCandidates,
    /// The analytic predicate itself could not decide.
    AnalyticUndecided,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Agreement => "agreement",
            Classification::HardDisagreement => "hard-disagreement",
            Classification::InconclusiveCandidates => "inconclusive-candidates",
            Classification::AnalyticUndecided => "analytic-undecided",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeReport {
    pub definition: Definition,
    pub args: Vec<String>,
    pub analytic: TriBool,
    pub restricted: bool,
    pub classification: Classification,
    /// Balls added to the candidate set for this check.
    pub witnesses: Vec<Ball>,
    /// Candidates that decided the restricted evaluation.
    pub evidence: Vec<String>,
    pub notes: Vec<String>,
}

impl BridgeReport {
    pub fn agreement(&self) -> bool {
        self.analytic == TriBool::from(self.restricted)
    }

    pub fn is_hard(&self) -> bool {
        self.classification == Classification::HardDisagreement
    }

    pub fn head(&self) -> String {
        format!("{}({})", self.definition, self.args.join(","))
    }

    /// `DEF(args)<TAB>analytic<TAB>restricted<TAB>classification`
    pub fn tsv_line(&self) -> String {
        format!("{}\t{}\t{}\t{}", self.head(), self.analytic, self.restricted, self.classification)
    }
}

impl fmt::Display for BridgeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: analytic {}, restricted {}, {}",
            self.head(),
            self.analytic,
            self.restricted,
            self.classification
        )?;
        if !self.evidence.is_empty() {
            write!(f, "\n  decided by: {}", self.evidence.join(", "))?;
        }
        for w in &self.witnesses {
            write!(f, "\n  witness: {w}")?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}

/// Counts per classification, in declaration order.
pub fn summarize(reports: &[BridgeReport]) -> String {
    let mut out = String::new();
    for c in [
        Classification::Agreement,
        Classification::HardDisagreement,
        Classification::InconclusiveCandidates,
        Classification::AnalyticUndecided,
    ] {
        let n = reports.iter().filter(|r| r.classification == c).count();
        let _ = writeln!(out, "{c}: {n}");
    }
    out
}
