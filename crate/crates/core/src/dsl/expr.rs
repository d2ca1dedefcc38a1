//! Algebra expressions such as `p{u} - 3/2 s(e) s*(e)`.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary ("*"? unary)*          juxtaposition multiplies
//! unary  := "-" unary | factor
//! factor := INT ("/" INT)? | "p" "{" names "}" | "s" "(" name ")"
//!         | "s" "*" "(" name ")" | "(" expr ")"
//! ```
//!
//! A minus sign directly in front of a numeral is part of the literal.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{is_number, parse_error, tokenize, Tok, Token};
use crate::algebra::{Element, LeavittAlgebra, Scalar};
use crate::error::{Error, Result};
use crate::model::{EdgeId, Ultragraph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Scalar(Scalar),
    P(VertexSet),
    S(EdgeId),
    SStar(EdgeId),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Neg(Box<ExprAst>),
}

impl ExprAst {
    /// Evaluates to canonical form; a scalar `c` stands for `c·p_{G⁰}`.
    pub fn eval(&self, alg: &LeavittAlgebra<'_>) -> Element {
        match self {
            ExprAst::Scalar(c) => alg.scalar(c.clone()),
            ExprAst::P(a) => alg.p(*a),
            ExprAst::S(e) => alg.s(*e),
            ExprAst::SStar(e) => alg.s_star(*e),
            ExprAst::Add(a, b) => alg.add(&a.eval(alg), &b.eval(alg)),
            ExprAst::Sub(a, b) => alg.sub(&a.eval(alg), &b.eval(alg)),
            ExprAst::Mul(a, b) => alg.mul(&a.eval(alg), &b.eval(alg)),
            ExprAst::Neg(a) => -a.eval(alg),
        }
    }

    /// Fully parenthesized form; `parse_expr(&x.display(ug), ug) == x`.
    pub fn display(&self, ug: &Ultragraph) -> String {
        let mut out = String::new();
        self.write(ug, &mut out);
        out
    }

    fn write(&self, ug: &Ultragraph, out: &mut String) {
        let bin = |out: &mut String, a: &ExprAst, op: &str, b: &ExprAst| {
            out.push('(');
            a.write(ug, out);
            let _ = write!(out, " {op} ");
            b.write(ug, out);
            out.push(')');
        };
        match self {
            ExprAst::Scalar(c) if c.is_negative() => {
                let _ = write!(out, "({c})");
            }
            ExprAst::Scalar(c) => {
                let _ = write!(out, "{c}");
            }
            ExprAst::P(a) => {
                let names: Vec<&str> = a.iter().map(|v| ug.vertex_name(v)).collect();
                let _ = write!(out, "p{{{}}}", names.join(","));
            }
            ExprAst::S(e) => {
                let _ = write!(out, "s({})", ug.edge_name(*e));
            }
            ExprAst::SStar(e) => {
                let _ = write!(out, "s*({})", ug.edge_name(*e));
            }
            ExprAst::Add(a, b) => bin(out, a, "+", b),
            ExprAst::Sub(a, b) => bin(out, a, "-", b),
            ExprAst::Mul(a, b) => bin(out, a, "*", b),
            ExprAst::Neg(a) => {
                out.push_str("(-");
                if matches!(**a, ExprAst::Scalar(_)) {
                    out.push('(');
                    a.write(ug, out);
                    out.push(')');
                } else {
                    a.write(ug, out);
                }
                out.push(')');
            }
        }
    }
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    ug: &'a Ultragraph,
    end: (usize, usize),
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|t| &t.tok)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (l, c) = self.toks.get(self.pos).map_or(self.end, |t| (t.line, t.col));
        parse_error(l, c, msg)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn name(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Word(w)) => {
                let w = w.clone();
                self.pos += 1;
                Ok(w)
            }
            _ => Err(self.err("expected a name")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Word(w)) if is_number(w) => {
                let n = w.parse().expect("digits parse");
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err("expected an integer")),
        }
    }

    fn starts_factor(&self) -> bool {
        match self.peek() {
            Some(Tok::Word(_)) | Some(Tok::Sym('(')) => true,
            Some(Tok::Sym('-')) => false,
            _ => false,
        }
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = ExprAst::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = ExprAst::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.starts_factor() {
                lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<ExprAst> {
        if self.eat('-') {
            if let Some(Tok::Word(w)) = self.peek() {
                if is_number(w) {
                    let c = self.scalar()?;
                    return Ok(ExprAst::Scalar(-c));
                }
            }
            return Ok(ExprAst::Neg(Box::new(self.unary()?)));
        }
        self.factor()
    }

    fn scalar(&mut self) -> Result<Scalar> {
        let n = self.integer()?;
        if self.eat('/') {
            let d = self.integer()?;
            if d.is_zero() {
                self.pos -= 1;
                return Err(self.err("zero denominator"));
            }
            Ok(Scalar::new(n, d))
        } else {
            Ok(Scalar::from_integer(n))
        }
    }

    fn edge(&mut self) -> Result<EdgeId> {
        self.expect('(')?;
        let name = self.name()?;
        let e = self.ug.edge_by_name(&name).ok_or(Error::UnknownName { name })?;
        self.expect(')')?;
        Ok(e)
    }

    fn factor(&mut self) -> Result<ExprAst> {
        match self.peek().cloned() {
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let x = self.expr()?;
                self.expect(')')?;
                Ok(x)
            }
            Some(Tok::Word(w)) if is_number(&w) => Ok(ExprAst::Scalar(self.scalar()?)),
            Some(Tok::Word(w)) if w == "p" && self.peek_at(1) == Some(&Tok::Sym('{')) => {
                self.pos += 2;
                let mut set = VertexSet::EMPTY;
                while !self.eat('}') {
                    if self.peek().is_none() {
                        return Err(self.err("expected `}`"));
                    }
                    if set != VertexSet::EMPTY {
                        self.eat(',');
                    }
                    let name = self.name()?;
                    let v = self.ug.vertex_by_name(&name).ok_or(Error::UnknownName { name })?;
                    set.insert(v);
                }
                Ok(ExprAst::P(set))
            }
            Some(Tok::Word(w)) if w == "s" && self.peek_at(1) == Some(&Tok::Sym('*')) && self.peek_at(2) == Some(&Tok::Sym('(')) => {
                self.pos += 2;
                Ok(ExprAst::SStar(self.edge()?))
            }
            Some(Tok::Word(w)) if w == "s" && self.peek_at(1) == Some(&Tok::Sym('(')) => {
                self.pos += 1;
                Ok(ExprAst::S(self.edge()?))
            }
            Some(_) => Err(self.err("expected `p{..}`, `s(..)`, `s*(..)`, a number or `(`")),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

/// Parses an expression and resolves its names against `ug`.
pub fn parse_expr(text: &str, ug: &Ultragraph) -> Result<ExprAst> {
    let toks = tokenize(text)?;
    let end = toks.last().map_or((1, 1), |t| (t.line, t.col + 1));
    let mut p = Parser { toks, pos: 0, ug, end };
    let x = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(x)
}
