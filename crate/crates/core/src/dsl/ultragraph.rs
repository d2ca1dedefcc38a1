//! The line-oriented `.ug` format:
//!
//! ```text
//! ultragraph FAN
//! vertices u w1 w2
//! edge e : u -> { w1 w2 }
//! ```
//!
//! `vertices` may appear more than once; commas between range vertices
//! are optional.

use std::fmt::Write as _;

use super::{parse_error, tokenize, Tok, Token};
use crate::error::{Error, Result};
use crate::model::{EdgeDecl, Ultragraph, UltragraphDoc};

struct Line<'a> {
    toks: &'a [Token],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Line<'a> {
    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or((self.line, self.end_col), |t| (t.line, t.col))
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (l, c) = self.here();
        parse_error(l, c, msg)
    }

    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn word(&mut self, what: &str) -> Result<String> {
        match self.peek() {
            Some(Tok::Word(w)) => {
                self.pos += 1;
                Ok(w.clone())
            }
            _ => Err(self.err(format!("expected {what}"))),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.err("unexpected trailing input")),
        }
    }
}

/// Parses the text format without validating names.
pub fn parse_doc(text: &str) -> Result<UltragraphDoc> {
    let tokens = tokenize(text)?;
    let mut doc = UltragraphDoc::default();
    let mut named = false;
    let mut start = 0;
    while start < tokens.len() {
        let line_no = tokens[start].line;
        let end = tokens[start..].iter().position(|t| t.line != line_no).map_or(tokens.len(), |k| start + k);
        let end_col = text.lines().nth(line_no - 1).map_or(1, |l| l.chars().count() + 1);
        let mut ln = Line { toks: &tokens[start..end], pos: 0, line: line_no, end_col };
        start = end;

        let keyword = ln.word("a keyword")?;
        match keyword.as_str() {
            "ultragraph" => {
                if named {
                    return Err(parse_error(line_no, 1, "duplicate `ultragraph` header"));
                }
                doc.name = ln.word("an ultragraph name")?;
                named = true;
            }
            _ if !named => {
                return Err(parse_error(line_no, 1, "expected `ultragraph NAME` first"));
            }
            "vertices" => {
                while ln.peek().is_some() {
                    doc.vertices.push(ln.word("a vertex name")?);
                }
            }
            "edge" => {
                let name = ln.word("an edge name")?;
                ln.expect(Tok::Sym(':'), "`:`")?;
                let source = ln.word("a source vertex")?;
                ln.expect(Tok::Arrow, "`->`")?;
                ln.expect(Tok::Sym('{'), "`{`")?;
                let mut range = Vec::new();
                loop {
                    match ln.peek() {
                        Some(Tok::Sym('}')) => break,
                        Some(Tok::Sym(',')) if !range.is_empty() => ln.pos += 1,
                        _ => range.push(ln.word("a range vertex or `}`")?),
                    }
                }
                if range.is_empty() {
                    return Err(ln.err(format!("empty range for edge `{name}`")));
                }
                ln.pos += 1;
                doc.edges.push(EdgeDecl { name, source, range });
            }
            other => {
                return Err(parse_error(line_no, 1, format!("unknown keyword `{other}`")));
            }
        }
        ln.finish()?;
    }
    if !named {
        return Err(parse_error(1, 1, "missing `ultragraph NAME` header"));
    }
    Ok(doc)
}

/// Parses and validates.
pub fn parse_ultragraph(text: &str) -> Result<Ultragraph> {
    Ultragraph::from_doc(&parse_doc(text)?)
}

/// Serializes a document; `parse_doc(&to_text(d)) == d` for documents with
/// word-character names.
pub fn to_text(doc: &UltragraphDoc) -> String {
    let mut out = format!("ultragraph {}\n", doc.name);
    out.push_str("vertices");
    for v in &doc.vertices {
        let _ = write!(out, " {v}");
    }
    out.push('\n');
    for e in &doc.edges {
        let _ = writeln!(out, "edge {} : {} -> {{ {} }}", e.name, e.source, e.range.join(" "));
    }
    out
}
