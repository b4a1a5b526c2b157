use super::ast::{BinOp, Formula, FormulaKind, QuantDomain, Quantifier, Term, TermKind};

/// Output alphabet for the printer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Notation {
    /// Re-parseable ASCII (`eps`, `/\`, `forall`).
    #[default]
    Ascii,
    /// Report-only symbols (`ε`, `∧`, `∀`).
    Unicode,
}

struct Symbols {
    eps: &'static str,
    not: &'static str,
    and: &'static str,
    or: &'static str,
    implies: &'static str,
    iff: &'static str,
    forall: &'static str,
    exists: &'static str,
}

const ASCII: Symbols = Symbols {
    eps: " eps ",
    not: "~",
    and: " /\\ ",
    or: " \\/ ",
    implies: " -> ",
    iff: " <-> ",
    forall: "forall ",
    exists: "exists ",
};

const UNICODE: Symbols =
    Symbols {
        eps: " ε ", not: "¬", and: " ∧ ", or: " ∨ ", implies: " → ", iff: " ↔ ", forall: "∀", exists: "∃"
    };

const NOT_PREC: u8 = 5;
const ATOM_PREC: u8 = 6;
// A quantifier's body runs to the end, so it is the loosest construct.
const QUANT_PREC: u8 = 0;

/// Canonical ASCII text; `parse_formula(print_formula(f))` rebuilds `f`.
pub fn print_formula(f: &Formula) -> String {
    print_formula_with(f, Notation::Ascii)
}

pub fn print_formula_with(f: &Formula, notation: Notation) -> String {
    let syms = match notation {
        Notation::Ascii => &ASCII,
        Notation::Unicode => &UNICODE,
    };
    let mut out = String::new();
    write_formula(f, 0, syms, &mut out);
    out
}

pub fn print_term(t: &Term) -> String {
    let mut out = String::new();
    write_term(t, &mut out);
    out
}

fn write_term(t: &Term, out: &mut String) {
    match &t.kind {
        TermKind::Const(n) | TermKind::Var(n) => out.push_str(n),
        TermKind::Apply(f, args) => {
            out.push_str(f.name());
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_term(a, out);
            }
            out.push(')');
        }
    }
}

fn precedence(f: &Formula) -> u8 {
    match &f.kind {
        FormulaKind::Eps(..) | FormulaKind::Seq(..) | FormulaKind::Weq(..) => ATOM_PREC,
        FormulaKind::Not(_) => NOT_PREC,
        FormulaKind::Binary(op, _, _) => op.precedence(),
        FormulaKind::Quant(..) => QUANT_PREC,
    }
}

fn write_formula(f: &Formula, min_prec: u8, syms: &Symbols, out: &mut String) {
    let prec = precedence(f);
    // Quantifiers are wrapped whenever they are an operand of a connective.
    let wrap = prec < min_prec || (prec == QUANT_PREC && min_prec > 0);
    if wrap {
        out.push('(');
    }
    match &f.kind {
        FormulaKind::Eps(a, b) => {
            write_term(a, out);
            out.push_str(syms.eps);
            write_term(b, out);
        }
        FormulaKind::Seq(a, b) | FormulaKind::Weq(a, b) => {
            out.push_str(if matches!(f.kind, FormulaKind::Seq(..)) { "seq(" } else { "weq(" });
            write_term(a, out);
            out.push(',');
            write_term(b, out);
            out.push(')');
        }
        FormulaKind::Not(inner) => {
            out.push_str(syms.not);
            write_formula(inner, NOT_PREC, syms, out);
        }
        FormulaKind::Binary(op, lhs, rhs) => {
            let p = op.precedence();
            let (lmin, rmin) = if op.is_right_assoc() { (p + 1, p) } else { (p, p + 1) };
            write_formula(lhs, lmin, syms, out);
            out.push_str(match op {
                BinOp::And => syms.and,
                BinOp::Or => syms.or,
                BinOp::Implies => syms.implies,
                BinOp::Iff => syms.iff,
            });
            write_formula(rhs, rmin, syms, out);
        }
        FormulaKind::Quant(q, v, d, body) => {
            out.push_str(match q {
                Quantifier::Forall => syms.forall,
                Quantifier::Exists => syms.exists,
            });
            out.push_str(v);
            out.push(':');
            out.push_str(match d {
                QuantDomain::Name => "name",
                QuantDomain::Singular => "singular",
            });
            out.push_str(", ");
            write_formula(body, 0, syms, out);
        }
    }
    if wrap {
        out.push(')');
    }
}
