//! Checks that need quantification over functions: propositional
//! extensionality by truth table, and functor extensionality over a fixed
//! functor library.

use std::fmt;
use std::time::Instant;

use super::eval::Env;
use super::report::{CheckReport, Counterexample, Verdict};
use super::CheckError;
use crate::model::{
    epsilon, equality, functor_den, EqualityKind, FiniteModel, Functor, Mereology, ModelError, NameDen,
};

/// The four unary truth functions, in enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TruthFn {
    ConstTrue,
    Identity,
    Negation,
    ConstFalse,
}

impl TruthFn {
    pub const ALL: [TruthFn; 4] = [TruthFn::ConstTrue, TruthFn::Identity, TruthFn::Negation, TruthFn::ConstFalse];

    pub fn apply(self, p: bool) -> bool {
        match self {
            TruthFn::ConstTrue => true,
            TruthFn::Identity => p,
            TruthFn::Negation => !p,
            TruthFn::ConstFalse => false,
        }
    }
}

impl fmt::Display for TruthFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthFn::ConstTrue => "constant-true",
            TruthFn::Identity => "identity",
            TruthFn::Negation => "negation",
            TruthFn::ConstFalse => "constant-false",
        })
    }
}

/// Both readings of propositional extensionality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProtoReport {
    /// `forall p q f, (p == q) == (f p == f q)`
    pub r1: CheckReport,
    /// `forall p q, (p == q) == forall f, (f p == f q)`
    pub r2: CheckReport,
}

impl fmt::Display for ProtoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.r1)?;
        write!(f, "{}", self.r2)
    }
}

const BOOLS: [bool; 2] = [true, false];

fn truth_cx(bindings: &[(&str, String)]) -> Counterexample {
    Counterexample {
        env: Env::new(),
        functor: None,
        rendered: bindings.iter().map(|(v, s)| (v.to_string(), s.clone())).collect(),
    }
}

fn proto_report(id: &str, verdict: Verdict, cx: Option<Counterexample>, assignments: u64, t: Instant) -> CheckReport {
    CheckReport {
        formula_id: id.to_string(),
        model_id: "truth-table".to_string(),
        verdict,
        counterexample: cx,
        assignments,
        elapsed: t.elapsed(),
    }
}

/// Evaluates both readings over `p, q` in {true, false} (true first) and the
/// four unary truth functions.
pub fn check_protothetic_extensionality() -> ProtoReport {
    let started = Instant::now();
    let mut assignments = 0;
    let mut witness = None;
    'r1: for p in BOOLS {
        for q in BOOLS {
            for f in TruthFn::ALL {
                assignments += 1;
                if (p == q) != (f.apply(p) == f.apply(q)) {
                    witness = Some(truth_cx(&[("p", p.to_string()), ("q", q.to_string()), ("f", f.to_string())]));
                    break 'r1;
                }
            }
        }
    }
    let verdict = if witness.is_some() { Verdict::Refuted } else { Verdict::Valid };
    let r1 = proto_report("R1", verdict, witness, assignments, started);

    let started = Instant::now();
    let mut assignments = 0;
    let mut witness = None;
    'r2: for p in BOOLS {
        for q in BOOLS {
            assignments += 1;
            let all_f = TruthFn::ALL.iter().all(|f| {
                assignments += 1;
                f.apply(p) == f.apply(q)
            });
            if (p == q) != all_f {
                witness = Some(truth_cx(&[("p", p.to_string()), ("q", q.to_string())]));
                break 'r2;
            }
        }
    }
    let verdict = if witness.is_some() { Verdict::Refuted } else { Verdict::Valid };
    let r2 = proto_report("R2", verdict, witness, assignments, started);
    ProtoReport { r1, r2 }
}

/// Functors checked by default for functor extensionality.
pub const DEFAULT_FUNCTOR_LIBRARY: [Functor; 7] =
    [Functor::Pt, Functor::El, Functor::Kl, Functor::Coll, Functor::Ov, Functor::Distinct, Functor::Ext];

/// `A eps Phi(B) /\ seq(B,C) -> A eps Phi(C)` for every `Phi` in `library`,
/// singular `A` and arbitrary names `B`, `C`.
pub fn check_mereot16(model: &FiniteModel, library: &[Functor]) -> Result<CheckReport, CheckError> {
    let started = Instant::now();
    if library.is_empty() {
        return Err(CheckError::NonemptyLibraryRequired);
    }
    if let Some(f) = library.iter().find(|f| f.arity() != 1) {
        return Err(ModelError::ArityMismatch { functor: f.name(), expected: f.arity(), found: 1 }.into());
    }
    let n = model.individual_count();
    let names: Vec<NameDen> = (0..1u64 << n).map(NameDen::from_bits).collect();
    let mut assignments = 0;
    for &phi in library {
        assignments += 1;
        let image: Vec<NameDen> = names.iter().map(|&b| functor_den(model, phi, &[b])).collect::<Result<_, _>>()?;
        for a in (0..n).map(NameDen::singleton) {
            assignments += 1;
            for (bi, &b) in names.iter().enumerate() {
                assignments += 1;
                for (ci, &c) in names.iter().enumerate() {
                    assignments += 1;
                    let holds =
                        !(epsilon(a, image[bi]) && equality(EqualityKind::Singular, b, c)) || epsilon(a, image[ci]);
                    if !holds {
                        let mut env = Env::new();
                        env.bind("A", a);
                        env.bind("B", b);
                        env.bind("C", c);
                        let mut cx = Counterexample::from_env(model, env);
                        cx.functor = Some(phi);
                        cx.rendered.insert(0, ("Phi".to_string(), phi.name().to_string()));
                        return Ok(CheckReport {
                            formula_id: "MereoT16".to_string(),
                            model_id: model.id().to_string(),
                            verdict: Verdict::Refuted,
                            counterexample: Some(cx),
                            assignments,
                            elapsed: started.elapsed(),
                        });
                    }
                }
            }
        }
    }
    Ok(CheckReport {
        formula_id: "MereoT16".to_string(),
        model_id: model.id().to_string(),
        verdict: Verdict::Valid,
        counterexample: None,
        assignments,
        elapsed: started.elapsed(),
    })
}
