//! Text formats: `.ug` ultragraph descriptions, algebra expressions, and
//! the JSON report envelope.

mod expr;
mod report;
mod ultragraph;

pub use expr::{parse_expr, ExprAst};
pub use report::{emit_error, emit_report, REPORT_TOOL};
pub use ultragraph::{parse_doc, parse_ultragraph, to_text};

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Arrow,
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn is_number(w: &str) -> bool {
    w.bytes().all(|b| b.is_ascii_digit())
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Splits `text` into words (`[A-Za-z0-9_']+`), `->`, and single-character
/// symbols. `#` starts a comment running to the end of the line.
fn tokenize(text: &str) -> Result<Vec<Token>, Error> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (line, col) = (li + 1, i + 1);
            if c == '#' {
                break;
            } else if c.is_whitespace() {
                i += 1;
            } else if is_word_char(c) {
                let start = i;
                while i < chars.len() && is_word_char(chars[i]) {
                    i += 1;
                }
                out.push(Token { tok: Tok::Word(chars[start..i].iter().collect()), line, col });
            } else if c == '-' && chars.get(i + 1) == Some(&'>') {
                out.push(Token { tok: Tok::Arrow, line, col });
                i += 2;
            } else if "{}():,+-*/".contains(c) {
                out.push(Token { tok: Tok::Sym(c), line, col });
                i += 1;
            } else {
                return Err(parse_error(line, col, format!("unexpected character `{c}`")));
            }
        }
    }
    Ok(out)
}
