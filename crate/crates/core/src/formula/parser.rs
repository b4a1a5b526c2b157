//! Recursive-descent parser for the ASCII formula syntax.
//!
//! Precedence, tightest first: `~`, `/\`, `\/`, `->` (right-associative),
//! `<->`. A quantifier body extends as far to the right as possible.

use std::collections::BTreeSet;

use thiserror::Error;

use super::ast::{BinOp, Formula, FormulaKind, QuantDomain, Quantifier, Span, Term, TermKind};
use crate::model::Functor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("expected {}, found {found}", expected.join(" or "))]
    Syntax { span: Span, expected: Vec<String>, found: String },
    #[error("unknown functor `{name}`")]
    UnknownFunctor { name: String, span: Span },
    #[error("functor `{functor}` takes {expected} argument(s), got {found}")]
    ArityMismatch { functor: String, expected: usize, found: usize, span: Span },
    #[error("unbound variable `{name}`")]
    UnboundVariable { name: String, span: Span },
    #[error("bound variable `{name}` shadows a declared constant")]
    ShadowsConstant { name: String, span: Span },
}

impl ParseError {
    pub fn span(&self) -> Span {
        match self {
            ParseError::Syntax { span, .. }
            | ParseError::UnknownFunctor { span, .. }
            | ParseError::ArityMismatch { span, .. }
            | ParseError::UnboundVariable { span, .. }
            | ParseError::ShadowsConstant { span, .. } => *span,
        }
    }

    /// `line:col: message` followed by the offending line and a caret.
    pub fn diagnostic(&self, source: &str) -> String {
        let span = self.span();
        let start = span.start.min(source.len());
        let line_start = source[..start].rfind('\n').map_or(0, |i| i + 1);
        let line_end = source[start..].find('\n').map_or(source.len(), |i| start + i);
        let line_no = source[..start].matches('\n').count() + 1;
        let col = source[line_start..start].chars().count() + 1;
        let width = source[start..span.end.clamp(start, line_end)].chars().count().max(1);
        format!(
            "{line_no}:{col}: {self}\n  {}\n  {}{}",
            &source[line_start..line_end],
            " ".repeat(col - 1),
            "^".repeat(width)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Colon,
    Tilde,
    And,
    Or,
    Arrow,
    Iff,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::And => "`/\\`".into(),
            Tok::Or => "`\\/`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

const KEYWORDS: [&str; 5] = ["eps", "forall", "exists", "seq", "weq"];

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn lex(src: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), Span::new(start, i)));
            continue;
        } else if src[i..].starts_with("/\\") {
            i += 2;
            Tok::And
        } else if src[i..].starts_with("\\/") {
            i += 2;
            Tok::Or
        } else if src[i..].starts_with("<->") {
            i += 3;
            Tok::Iff
        } else if src[i..].starts_with("->") {
            i += 2;
            Tok::Arrow
        } else {
            i += 1;
            match c {
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b',' => Tok::Comma,
                b':' => Tok::Colon,
                b'~' => Tok::Tilde,
                _ => {
                    let ch = src[start..].chars().next().unwrap_or('?');
                    return Err(ParseError::Syntax {
                        span: Span::new(start, start + ch.len_utf8()),
                        expected: vec!["a token".into()],
                        found: format!("`{ch}`"),
                    });
                }
            }
        };
        out.push((tok, Span::new(start, i)));
    }
    out.push((Tok::Eof, Span::new(src.len(), src.len())));
    Ok(out)
}

pub(crate) struct Parser<'a> {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    constants: &'a BTreeSet<String>,
    scope: Vec<String>,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &str, constants: &'a BTreeSet<String>) -> Result<Self, ParseError> {
        Ok(Parser { toks: lex(src)?, pos: 0, constants, scope: Vec::new() })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError::Syntax {
            span: self.span(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Span, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(self.error(&[what]))
        }
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    pub(crate) fn finish(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error(&["end of input"]))
        }
    }

    pub(crate) fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.implication()?;
        while *self.peek() == Tok::Iff {
            self.bump();
            let rhs = self.implication()?;
            lhs = binary(BinOp::Iff, lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.implication()?;
            return Ok(binary(BinOp::Implies, lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.conjunction()?;
            lhs = binary(BinOp::Or, lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = binary(BinOp::And, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let start = self.span();
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                let inner = self.unary()?;
                let span = start.to(inner.span);
                Ok(Formula { kind: FormulaKind::Not(Box::new(inner)), span })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Ident(kw) if kw == "forall" || kw == "exists" => self.quantified(),
            Tok::Ident(kw) if kw == "seq" || kw == "weq" => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let a = self.term()?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.term()?;
                let end = self.expect(Tok::RParen, "`)`")?;
                let kind = if kw == "seq" { FormulaKind::Seq(a, b) } else { FormulaKind::Weq(a, b) };
                Ok(Formula { kind, span: start.to(end) })
            }
            Tok::Ident(_) => {
                let a = self.term()?;
                if !self.at_keyword("eps") {
                    return Err(self.error(&["`eps`"]));
                }
                self.bump();
                let b = self.term()?;
                let span = a.span.to(b.span);
                Ok(Formula { kind: FormulaKind::Eps(a, b), span })
            }
            _ => Err(self.error(&["`~`", "`(`", "`forall`", "`exists`", "`seq`", "`weq`", "a name"])),
        }
    }

    fn quantified(&mut self) -> Result<Formula, ParseError> {
        let (kw, start) = self.bump();
        let q = match kw {
            Tok::Ident(ref s) if s == "forall" => Quantifier::Forall,
            _ => Quantifier::Exists,
        };
        let (var, var_span) = match self.peek().clone() {
            Tok::Ident(v) if !KEYWORDS.contains(&v.as_str()) => (v, self.bump().1),
            _ => return Err(self.error(&["a variable"])),
        };
        if self.constants.contains(&var) {
            return Err(ParseError::ShadowsConstant { name: var, span: var_span });
        }
        let domain = if *self.peek() == Tok::Colon {
            self.bump();
            match self.peek().clone() {
                Tok::Ident(d) if d == "name" => {
                    self.bump();
                    QuantDomain::Name
                }
                Tok::Ident(d) if d == "singular" => {
                    self.bump();
                    QuantDomain::Singular
                }
                _ => return Err(self.error(&["`name`", "`singular`"])),
            }
        } else {
            QuantDomain::Name
        };
        self.expect(Tok::Comma, "`,`")?;
        self.scope.push(var.clone());
        let body = self.formula();
        self.scope.pop();
        let body = body?;
        let span = start.to(body.span);
        Ok(Formula { kind: FormulaKind::Quant(q, var, domain, Box::new(body)), span })
    }

    pub(crate) fn term(&mut self) -> Result<Term, ParseError> {
        let (name, span) = match self.peek().clone() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                let span = self.bump().1;
                (s, span)
            }
            _ => return Err(self.error(&["a name"])),
        };
        if *self.peek() == Tok::LParen {
            let functor =
                Functor::from_name(&name).ok_or_else(|| ParseError::UnknownFunctor { name: name.clone(), span })?;
            self.bump();
            let mut args = vec![self.term()?];
            while *self.peek() == Tok::Comma {
                self.bump();
                args.push(self.term()?);
            }
            let end = self.expect(Tok::RParen, "`)`")?;
            let span = span.to(end);
            if args.len() != functor.arity() {
                return Err(ParseError::ArityMismatch {
                    functor: name,
                    expected: functor.arity(),
                    found: args.len(),
                    span,
                });
            }
            return Ok(Term { kind: TermKind::Apply(functor, args), span });
        }
        if self.scope.iter().rev().any(|v| *v == name) {
            Ok(Term { kind: TermKind::Var(name), span })
        } else if self.constants.contains(&name) {
            Ok(Term { kind: TermKind::Const(name), span })
        } else {
            Err(ParseError::UnboundVariable { name, span })
        }
    }

    /// `head(arg, ...)` with bare identifiers as arguments.
    pub(crate) fn call(&mut self) -> Result<(String, Vec<String>), ParseError> {
        let head = match self.peek().clone() {
            Tok::Ident(h) => {
                self.bump();
                h
            }
            _ => return Err(self.error(&["a predicate name"])),
        };
        self.expect(Tok::LParen, "`(`")?;
        let mut args = Vec::new();
        loop {
            match self.peek().clone() {
                Tok::Ident(a) => {
                    self.bump();
                    args.push(a);
                }
                _ => return Err(self.error(&["a label"])),
            }
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RParen => {
                    self.bump();
                    break;
                }
                _ => return Err(self.error(&["`,`", "`)`"])),
            }
        }
        Ok((head, args))
    }
}

fn binary(op: BinOp, lhs: Formula, rhs: Formula) -> Formula {
    let span = lhs.span.to(rhs.span);
    Formula { kind: FormulaKind::Binary(op, Box::new(lhs), Box::new(rhs)), span }
}

/// Parses a closed formula. Identifiers that are neither bound nor in
/// `known_constants` are rejected as unbound variables.
pub fn parse_formula(text: &str, known_constants: &BTreeSet<String>) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text, known_constants)?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

/// Parses `head(a, b, ...)`, the query form used for geometric predicates.
pub fn parse_call(text: &str) -> Result<(String, Vec<String>), ParseError> {
    let none = BTreeSet::new();
    let mut p = Parser::new(text, &none)?;
    let call = p.call()?;
    p.finish()?;
    Ok(call)
}
