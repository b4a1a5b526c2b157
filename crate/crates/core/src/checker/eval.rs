//! Exhaustive evaluation of formulas over finite structures.

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use super::report::{CheckReport, Counterexample, Verdict};
use super::CheckError;
use crate::formula::{BinOp, Formula, FormulaKind, QuantDomain, Quantifier, Term, TermKind};
use crate::model::{epsilon, equality, functor_den_unchecked, EqualityKind, Functor, Mereology, NameDen};

/// Default cap on the estimated number of variable assignments.
pub const DEFAULT_MAX_ASSIGNMENTS: u64 = 1_000_000_000;

/// How quantifier domain annotations are honored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reading {
    /// Every quantifier ranges over all names, ignoring `:singular`.
    Full,
    /// `:singular` quantifiers range over singular names only.
    Annotated,
}

impl Reading {
    pub fn as_str(self) -> &'static str {
        match self {
            Reading::Full => "full",
            Reading::Annotated => "annotated",
        }
    }

    pub fn parse(s: &str) -> Option<Reading> {
        match s {
            "full" => Some(Reading::Full),
            "annotated" => Some(Reading::Annotated),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub reading: Reading,
    pub max_assignments: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { reading: Reading::Annotated, max_assignments: DEFAULT_MAX_ASSIGNMENTS }
    }
}

impl CheckOptions {
    pub fn with_reading(reading: Reading) -> Self {
        CheckOptions { reading, ..Default::default() }
    }
}

/// Bindings of name variables, in binding order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Env(Vec<(String, NameDen)>);

impl Env {
    pub fn new() -> Self {
        Env(Vec::new())
    }

    pub fn bind(&mut self, var: impl Into<String>, den: NameDen) {
        let var = var.into();
        match self.0.iter_mut().find(|(v, _)| *v == var) {
            Some(slot) => slot.1 = den,
            None => self.0.push((var, den)),
        }
    }

    pub fn get(&self, var: &str) -> Option<NameDen> {
        self.0.iter().find(|(v, _)| v == var).map(|(_, d)| *d)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, NameDen)> {
        self.0.iter().map(|(v, d)| (v.as_str(), *d))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn render<M: Mereology + ?Sized>(&self, model: &M) -> Vec<(String, String)> {
        self.iter().map(|(v, d)| (v.to_string(), model.render(d))).collect()
    }
}

impl FromIterator<(String, NameDen)> for Env {
    fn from_iter<I: IntoIterator<Item = (String, NameDen)>>(iter: I) -> Self {
        let mut env = Env::new();
        for (v, d) in iter {
            env.bind(v, d);
        }
        env
    }
}

impl fmt::Display for Env {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, d)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}={:#x}", d.bits())?;
        }
        Ok(())
    }
}

enum CTerm {
    Den(NameDen),
    Slot(usize),
    Apply1(Functor, Box<CTerm>),
    Apply2(Functor, Box<CTerm>, Box<CTerm>),
}

#[derive(Clone, Copy)]
enum Domain {
    Names,
    Singulars,
}

enum CFormula {
    Eps(CTerm, CTerm),
    Seq(CTerm, CTerm),
    Weq(CTerm, CTerm),
    Not(Box<CFormula>),
    Bin(BinOp, Box<CFormula>, Box<CFormula>),
    Quant(Quantifier, usize, Domain, Box<CFormula>),
}

struct Compiler<'a, M: Mereology + ?Sized> {
    model: &'a M,
    reading: Reading,
    scope: Vec<String>,
}

impl<M: Mereology + ?Sized> Compiler<'_, M> {
    fn term(&self, t: &Term) -> Result<CTerm, CheckError> {
        Ok(match &t.kind {
            TermKind::Const(name) => {
                if let Some(slot) = self.scope.iter().rposition(|v| v == name) {
                    CTerm::Slot(slot)
                } else {
                    CTerm::Den(self.model.constant(name).ok_or_else(|| CheckError::UnknownConstant(name.clone()))?)
                }
            }
            TermKind::Var(name) => CTerm::Slot(
                self.scope.iter().rposition(|v| v == name).ok_or_else(|| CheckError::UnboundVariable(name.clone()))?,
            ),
            TermKind::Apply(f, args) => match args.as_slice() {
                [a] => CTerm::Apply1(*f, Box::new(self.term(a)?)),
                [a, b] => CTerm::Apply2(*f, Box::new(self.term(a)?), Box::new(self.term(b)?)),
                _ => {
                    return Err(CheckError::Model(crate::model::ModelError::ArityMismatch {
                        functor: f.name(),
                        expected: f.arity(),
                        found: args.len(),
                    }))
                }
            },
        })
    }

    fn formula(&mut self, f: &Formula) -> Result<CFormula, CheckError> {
        Ok(match &f.kind {
            FormulaKind::Eps(a, b) => CFormula::Eps(self.term(a)?, self.term(b)?),
            FormulaKind::Seq(a, b) => CFormula::Seq(self.term(a)?, self.term(b)?),
            FormulaKind::Weq(a, b) => CFormula::Weq(self.term(a)?, self.term(b)?),
            FormulaKind::Not(inner) => CFormula::Not(Box::new(self.formula(inner)?)),
            FormulaKind::Binary(op, a, b) => CFormula::Bin(*op, Box::new(self.formula(a)?), Box::new(self.formula(b)?)),
            FormulaKind::Quant(q, v, d, body) => {
                let domain = match (self.reading, d) {
                    (Reading::Annotated, QuantDomain::Singular) => Domain::Singulars,
                    _ => Domain::Names,
                };
                self.scope.push(v.clone());
                let slot = self.scope.len() - 1;
                let body = self.formula(body);
                self.scope.pop();
                CFormula::Quant(*q, slot, domain, Box::new(body?))
            }
        })
    }
}

fn domain_size(domain: Domain, individuals: usize) -> u128 {
    match domain {
        Domain::Names => 1u128 << individuals,
        Domain::Singulars => individuals as u128,
    }
}

/// Upper bound on the number of bindings made while evaluating `f`.
fn estimate(f: &CFormula, individuals: usize) -> u128 {
    match f {
        CFormula::Eps(..) | CFormula::Seq(..) | CFormula::Weq(..) => 0,
        CFormula::Not(inner) => estimate(inner, individuals),
        CFormula::Bin(_, a, b) => estimate(a, individuals).saturating_add(estimate(b, individuals)),
        CFormula::Quant(_, _, d, body) => {
            domain_size(*d, individuals).saturating_mul(1u128.saturating_add(estimate(body, individuals)))
        }
    }
}

struct Machine<'m, M: Mereology + ?Sized> {
    model: &'m M,
    slots: Vec<NameDen>,
    cache: HashMap<(Functor, NameDen, NameDen), NameDen>,
    assignments: u64,
}

impl<'m, M: Mereology + ?Sized> Machine<'m, M> {
    fn new(model: &'m M) -> Self {
        Machine { model, slots: Vec::new(), cache: HashMap::new(), assignments: 0 }
    }

    fn apply(&mut self, f: Functor, a: NameDen, b: NameDen) -> NameDen {
        if let Some(d) = self.cache.get(&(f, a, b)) {
            return *d;
        }
        let d = if f.arity() == 2 {
            functor_den_unchecked(self.model, f, &[a, b])
        } else {
            functor_den_unchecked(self.model, f, &[a])
        };
        self.cache.insert((f, a, b), d);
        d
    }

    fn term(&mut self, t: &CTerm) -> NameDen {
        match t {
            CTerm::Den(d) => *d,
            CTerm::Slot(s) => self.slots[*s],
            CTerm::Apply1(f, a) => {
                let a = self.term(a);
                self.apply(*f, a, NameDen::EMPTY)
            }
            CTerm::Apply2(f, a, b) => {
                let a = self.term(a);
                let b = self.term(b);
                self.apply(*f, a, b)
            }
        }
    }

    fn domain(&self, d: Domain) -> DomainIter {
        let n = self.model.individual_count();
        match d {
            Domain::Names => DomainIter::Names { next: 0, end: 1u128 << n },
            Domain::Singulars => DomainIter::Singulars { next: 0, end: n },
        }
    }

    fn eval(&mut self, f: &CFormula) -> bool {
        match f {
            CFormula::Eps(a, b) => {
                let a = self.term(a);
                let b = self.term(b);
                epsilon(a, b)
            }
            CFormula::Seq(a, b) => {
                let a = self.term(a);
                let b = self.term(b);
                equality(EqualityKind::Singular, a, b)
            }
            CFormula::Weq(a, b) => {
                let a = self.term(a);
                let b = self.term(b);
                equality(EqualityKind::Weak, a, b)
            }
            CFormula::Not(inner) => !self.eval(inner),
            CFormula::Bin(op, a, b) => match op {
                BinOp::And => self.eval(a) && self.eval(b),
                BinOp::Or => self.eval(a) || self.eval(b),
                BinOp::Implies => !self.eval(a) || self.eval(b),
                BinOp::Iff => self.eval(a) == self.eval(b),
            },
            CFormula::Quant(q, slot, d, body) => {
                let want = matches!(q, Quantifier::Exists);
                let saved = self.slots.len();
                debug_assert_eq!(saved, *slot);
                self.slots.push(NameDen::EMPTY);
                let mut result = !want;
                for value in self.domain(*d) {
                    self.assignments += 1;
                    self.slots[*slot] = value;
                    if self.eval(body) == want {
                        result = want;
                        break;
                    }
                }
                self.slots.truncate(saved);
                result
            }
        }
    }
}

enum DomainIter {
    Names { next: u128, end: u128 },
    Singulars { next: usize, end: usize },
}

impl Iterator for DomainIter {
    type Item = NameDen;

    fn next(&mut self) -> Option<NameDen> {
        match self {
            DomainIter::Names { next, end } => {
                if *next >= *end {
                    return None;
                }
                let d = NameDen::from_bits(*next as u64);
                *next += 1;
                Some(d)
            }
            DomainIter::Singulars { next, end } => {
                if *next >= *end {
                    return None;
                }
                let d = NameDen::singleton(*next);
                *next += 1;
                Some(d)
            }
        }
    }
}

fn compile<M: Mereology + ?Sized>(
    model: &M,
    env: &Env,
    f: &Formula,
    options: &CheckOptions,
) -> Result<CFormula, CheckError> {
    let mut compiler =
        Compiler { model, reading: options.reading, scope: env.iter().map(|(v, _)| v.to_string()).collect() };
    let compiled = compiler.formula(f)?;
    let estimated = estimate(&compiled, model.individual_count());
    if estimated > options.max_assignments as u128 {
        return Err(CheckError::QuantifierBlowup { estimated, cap: options.max_assignments });
    }
    Ok(compiled)
}

/// Classical truth value of `f` in `model` under `env`.
pub fn eval_formula<M: Mereology + ?Sized>(
    model: &M,
    env: &Env,
    f: &Formula,
    options: &CheckOptions,
) -> Result<bool, CheckError> {
    for (_, d) in env.iter() {
        model.check_den(d)?;
    }
    let compiled = compile(model, env, f, options)?;
    let mut machine = Machine::new(model);
    machine.slots = env.iter().map(|(_, d)| d).collect();
    Ok(machine.eval(&compiled))
}

/// Splits the leading universal quantifiers off `f`.
fn universal_prefix(f: &Formula) -> (Vec<(&str, QuantDomain)>, &Formula) {
    let mut prefix = Vec::new();
    let mut cur = f;
    while let FormulaKind::Quant(Quantifier::Forall, v, d, body) = &cur.kind {
        prefix.push((v.as_str(), *d));
        cur = body;
    }
    (prefix, cur)
}

/// Decides validity of the closed formula `f`. Assignments to the leading
/// universal quantifiers are enumerated in lexicographic order (first variable
/// slowest, names by increasing bit mask); the first falsifying one is
/// reported as the counterexample.
pub fn check_validity<M: Mereology + ?Sized>(
    model: &M,
    model_id: &str,
    formula_id: &str,
    f: &Formula,
    options: &CheckOptions,
) -> Result<CheckReport, CheckError> {
    let started = Instant::now();
    if let Some(v) = f.free_variables().into_iter().next() {
        return Err(CheckError::UnboundVariable(v));
    }
    let compiled = compile(model, &Env::new(), f, options)?;
    let (prefix, body) = universal_prefix(f);

    // Peel the same prefix off the compiled tree.
    let mut domains = Vec::new();
    let mut cbody = &compiled;
    while domains.len() < prefix.len() {
        match cbody {
            CFormula::Quant(Quantifier::Forall, _, d, inner) => {
                domains.push(*d);
                cbody = inner;
            }
            _ => unreachable!("compiled prefix mirrors the source prefix"),
        }
    }

    let mut machine = Machine::new(model);
    let mut iters: Vec<DomainIter> = domains.iter().map(|d| machine.domain(*d)).collect();
    machine.slots = Vec::with_capacity(prefix.len());
    for it in iters.iter_mut() {
        match it.next() {
            Some(v) => machine.slots.push(v),
            // an empty domain makes the universal vacuous
            None => {
                return Ok(report(formula_id, model_id, Verdict::Valid, None, 0, started));
            }
        }
    }
    let mut refuted = None;
    loop {
        machine.assignments += 1;
        if !machine.eval(cbody) {
            refuted = Some(machine.slots.clone());
            break;
        }
        // odometer: last variable fastest
        let mut k = prefix.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            if let Some(v) = iters[k].next() {
                machine.slots[k] = v;
                for j in k + 1..prefix.len() {
                    iters[j] = machine.domain(domains[j]);
                    machine.slots[j] = iters[j].next().expect("nonempty domain");
                }
                k = usize::MAX;
                break;
            }
        }
        if k != usize::MAX {
            break;
        }
    }
    let assignments = machine.assignments;
    match refuted {
        None => Ok(report(formula_id, model_id, Verdict::Valid, None, assignments, started)),
        Some(values) => {
            let env: Env = prefix.iter().zip(values).map(|((v, _), d)| (v.to_string(), d)).collect();
            // a reported counterexample must falsify the body on its own
            let replay = eval_formula(model, &env, body, options)?;
            assert!(!replay, "counterexample {env} does not falsify {formula_id}");
            let cx = Counterexample::from_env(model, env);
            Ok(report(formula_id, model_id, Verdict::Refuted, Some(cx), assignments, started))
        }
    }
}

fn report(
    formula_id: &str,
    model_id: &str,
    verdict: Verdict,
    counterexample: Option<Counterexample>,
    assignments: u64,
    started: Instant,
) -> CheckReport {
    CheckReport {
        formula_id: formula_id.to_string(),
        model_id: model_id.to_string(),
        verdict,
        counterexample,
        assignments,
        elapsed: started.elapsed(),
    }
}
