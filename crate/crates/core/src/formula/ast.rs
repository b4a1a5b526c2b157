use std::collections::BTreeSet;
use std::fmt;

use crate::model::Functor;

/// Byte range `start..end` in the source text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn to(self, other: Span) -> Span {
        Span::new(self.start, other.end)
    }

    pub fn contains(self, inner: Span) -> bool {
        self.start <= inner.start && inner.end <= self.end
    }
}

#[derive(Clone, Debug)]
pub enum TermKind {
    Const(String),
    Var(String),
    Apply(Functor, Vec<Term>),
}

/// A name-valued expression. Equality ignores spans.
#[derive(Clone, Debug)]
pub struct Term {
    pub kind: TermKind,
    pub span: Span,
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        match (&self.kind, &other.kind) {
            (TermKind::Const(a), TermKind::Const(b)) | (TermKind::Var(a), TermKind::Var(b)) => a == b,
            (TermKind::Apply(f, xs), TermKind::Apply(g, ys)) => f == g && xs == ys,
            _ => false,
        }
    }
}

impl Eq for Term {}

impl Term {
    pub fn constant(name: impl Into<String>) -> Term {
        Term { kind: TermKind::Const(name.into()), span: Span::default() }
    }

    pub fn var(name: impl Into<String>) -> Term {
        Term { kind: TermKind::Var(name.into()), span: Span::default() }
    }

    pub fn apply(f: Functor, args: Vec<Term>) -> Term {
        Term { kind: TermKind::Apply(f, args), span: Span::default() }
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match &self.kind {
            TermKind::Const(_) => {}
            TermKind::Var(v) => {
                if !bound.contains(v) {
                    out.insert(v.clone());
                }
            }
            TermKind::Apply(_, args) => args.iter().for_each(|a| a.collect_free(bound, out)),
        }
    }
}

/// Range of a bound name variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuantDomain {
    /// Every denotation, including empty and plural names.
    Name,
    /// Singular denotations only.
    Singular,
}

impl QuantDomain {
    pub fn keyword(self) -> &'static str {
        match self {
            QuantDomain::Name => "name",
            QuantDomain::Singular => "singular",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Forall,
    Exists,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    And,
    Or,
    Implies,
    Iff,
}

impl BinOp {
    /// Binding strength; higher binds tighter.
    pub fn precedence(self) -> u8 {
        match self {
            BinOp::Iff => 1,
            BinOp::Implies => 2,
            BinOp::Or => 3,
            BinOp::And => 4,
        }
    }

    pub fn is_right_assoc(self) -> bool {
        matches!(self, BinOp::Implies)
    }
}

#[derive(Clone, Debug)]
pub enum FormulaKind {
    Eps(Term, Term),
    Seq(Term, Term),
    Weq(Term, Term),
    Not(Box<Formula>),
    Binary(BinOp, Box<Formula>, Box<Formula>),
    Quant(Quantifier, String, QuantDomain, Box<Formula>),
}

/// A formula of the name calculus. Equality is structural and ignores spans.
#[derive(Clone, Debug)]
pub struct Formula {
    pub kind: FormulaKind,
    pub span: Span,
}

impl PartialEq for Formula {
    fn eq(&self, other: &Self) -> bool {
        use FormulaKind::*;
        match (&self.kind, &other.kind) {
            (Eps(a, b), Eps(c, d)) | (Seq(a, b), Seq(c, d)) | (Weq(a, b), Weq(c, d)) => a == c && b == d,
            (Not(a), Not(b)) => a == b,
            (Binary(o1, a, b), Binary(o2, c, d)) => o1 == o2 && a == c && b == d,
            (Quant(q1, v1, d1, a), Quant(q2, v2, d2, b)) => q1 == q2 && v1 == v2 && d1 == d2 && a == b,
            _ => false,
        }
    }
}

impl Eq for Formula {}

impl Formula {
    fn new(kind: FormulaKind) -> Formula {
        Formula { kind, span: Span::default() }
    }

    pub fn eps(a: Term, b: Term) -> Formula {
        Formula::new(FormulaKind::Eps(a, b))
    }

    pub fn seq(a: Term, b: Term) -> Formula {
        Formula::new(FormulaKind::Seq(a, b))
    }

    pub fn weq(a: Term, b: Term) -> Formula {
        Formula::new(FormulaKind::Weq(a, b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::new(FormulaKind::Not(Box::new(f)))
    }

    pub fn binary(op: BinOp, a: Formula, b: Formula) -> Formula {
        Formula::new(FormulaKind::Binary(op, Box::new(a), Box::new(b)))
    }

    pub fn forall(v: impl Into<String>, d: QuantDomain, body: Formula) -> Formula {
        Formula::new(FormulaKind::Quant(Quantifier::Forall, v.into(), d, Box::new(body)))
    }

    pub fn exists(v: impl Into<String>, d: QuantDomain, body: Formula) -> Formula {
        Formula::new(FormulaKind::Quant(Quantifier::Exists, v.into(), d, Box::new(body)))
    }

    pub fn free_variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    pub fn is_closed(&self) -> bool {
        self.free_variables().is_empty()
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match &self.kind {
            FormulaKind::Eps(a, b) | FormulaKind::Seq(a, b) | FormulaKind::Weq(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            FormulaKind::Not(f) => f.collect_free(bound, out),
            FormulaKind::Binary(_, a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            FormulaKind::Quant(_, v, _, body) => {
                bound.push(v.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Number of quantifiers in the formula.
    pub fn quantifier_count(&self) -> usize {
        match &self.kind {
            FormulaKind::Eps(..) | FormulaKind::Seq(..) | FormulaKind::Weq(..) => 0,
            FormulaKind::Not(f) => f.quantifier_count(),
            FormulaKind::Binary(_, a, b) => a.quantifier_count() + b.quantifier_count(),
            FormulaKind::Quant(_, _, _, body) => 1 + body.quantifier_count(),
        }
    }

    /// Visits every span in the tree, parent before children.
    pub fn visit_spans(&self, visit: &mut dyn FnMut(Span, Span)) {
        fn term(t: &Term, parent: Span, visit: &mut dyn FnMut(Span, Span)) {
            visit(parent, t.span);
            if let TermKind::Apply(_, args) = &t.kind {
                args.iter().for_each(|a| term(a, t.span, visit));
            }
        }
        match &self.kind {
            FormulaKind::Eps(a, b) | FormulaKind::Seq(a, b) | FormulaKind::Weq(a, b) => {
                term(a, self.span, visit);
                term(b, self.span, visit);
            }
            FormulaKind::Not(f) => {
                visit(self.span, f.span);
                f.visit_spans(visit);
            }
            FormulaKind::Binary(_, a, b) => {
                visit(self.span, a.span);
                visit(self.span, b.span);
                a.visit_spans(visit);
                b.visit_spans(visit);
            }
            FormulaKind::Quant(_, _, _, body) => {
                visit(self.span, body.span);
                body.visit_spans(visit);
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::printer::print_term(self))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::printer::print_formula(self))
    }
}
