use std::collections::HashSet;

use thiserror::Error;

use super::{ExprError, KExpression, Label, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok<'a> {
    Open,
    Close,
    Atom(&'a str),
}

struct Token<'a> {
    tok: Tok<'a>,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let line_text = line.split('#').next().unwrap_or("");
        let mut chars = line_text.char_indices().peekable();
        while let Some(&(start, c)) = chars.peek() {
            let column = line_text[..start].chars().count() + 1;
            let pos = |tok| Token { tok, line: li + 1, column };
            match c {
                '(' => {
                    out.push(pos(Tok::Open));
                    chars.next();
                }
                ')' => {
                    out.push(pos(Tok::Close));
                    chars.next();
                }
                c if c.is_whitespace() => {
                    chars.next();
                }
                _ => {
                    let mut end = start;
                    while let Some(&(i, c)) = chars.peek() {
                        if c.is_whitespace() || c == '(' || c == ')' {
                            break;
                        }
                        end = i + c.len_utf8();
                        chars.next();
                    }
                    out.push(pos(Tok::Atom(&line_text[start..end])));
                }
            }
        }
    }
    out
}

struct Parser<'a> {
    tokens: Vec<Token<'a>>,
    pos: usize,
    bound: Option<Label>,
    seen: HashSet<&'a str>,
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    fn error_at(&self, index: usize, message: impl Into<String>) -> ParseError {
        let (line, column) = match self.tokens.get(index) {
            Some(t) => (t.line, t.column),
            None => self.end,
        };
        ParseError { line, column, message: message.into() }
    }

    fn next(&mut self, what: &str) -> Result<Tok<'a>, ParseError> {
        match self.tokens.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.tok)
            }
            None => Err(self.error_at(self.pos, format!("unexpected end of input, expected {what}"))),
        }
    }

    fn expect(&mut self, want: Tok<'static>, what: &str) -> Result<(), ParseError> {
        let at = self.pos;
        if self.next(what)? == want {
            Ok(())
        } else {
            Err(self.error_at(at, format!("expected {what}")))
        }
    }

    fn atom(&mut self, what: &str) -> Result<&'a str, ParseError> {
        let at = self.pos;
        match self.next(what)? {
            Tok::Atom(s) => Ok(s),
            _ => Err(self.error_at(at, format!("expected {what}"))),
        }
    }

    fn label(&mut self) -> Result<Label, ParseError> {
        let at = self.pos;
        let s = self.atom("a label")?;
        let label: Label = s.parse().map_err(|_| self.error_at(at, format!("`{s}` is not a label")))?;
        if label == 0 {
            return Err(self.error_at(at, "labels start at 1"));
        }
        if let Some(k) = self.bound {
            if label > k {
                return Err(self.error_at(at, format!("label {label} is not bound (k = {k})")));
            }
        }
        Ok(label)
    }

    fn pair(&mut self) -> Result<(Label, Label), ParseError> {
        let i = self.label()?;
        let at = self.pos;
        let j = self.label()?;
        if i == j {
            return Err(self.error_at(at, format!("label {i} paired with itself")));
        }
        Ok((i, j))
    }

    fn expr(&mut self) -> Result<Term, ParseError> {
        self.expect(Tok::Open, "`(`")?;
        let at = self.pos;
        let op = self.atom("an operator")?;
        let term = match op {
            "leaf" => {
                let label = self.label()?;
                let at = self.pos;
                let vertex = self.atom("a vertex name")?;
                if !self.seen.insert(vertex) {
                    return Err(self.error_at(at, format!("duplicate vertex `{vertex}`")));
                }
                Term::leaf(label, vertex)
            }
            "union" => {
                let a = self.expr()?;
                let b = self.expr()?;
                Term::union(a, b)
            }
            "rel" => {
                let (i, j) = self.pair()?;
                Term::rel(i, j, self.expr()?)
            }
            "adde" => {
                let (i, j) = self.pair()?;
                Term::adde(i, j, self.expr()?)
            }
            other => return Err(self.error_at(at, format!("unknown operator `{other}`"))),
        };
        self.expect(Tok::Close, "`)`")?;
        Ok(term)
    }
}

fn parse_term(text: &str, bound: Option<Label>) -> Result<Term, ParseError> {
    let line_count = text.lines().count().max(1);
    let last_len = text.lines().last().map_or(0, |l| l.chars().count());
    let mut p = Parser {
        tokens: tokenize(text),
        pos: 0,
        bound,
        seen: HashSet::new(),
        end: (line_count, last_len + 1),
    };
    let term = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(p.error_at(p.pos, "trailing input after expression"));
    }
    Ok(term)
}

impl Term {
    /// Parses one s-expression; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Term, ParseError> {
        parse_term(text, None)
    }
}

impl KExpression {
    /// Parses with label bound `k`, or the largest label used when `k` is
    /// `None`.
    pub fn parse(text: &str, k: Option<Label>) -> Result<KExpression, ParseError> {
        let term = parse_term(text, k)?;
        let k = k.unwrap_or_else(|| term.max_label());
        KExpression::new(k, term).map_err(|e| {
            let message = match e {
                ExprError::ZeroBound => "label bound must be positive".to_string(),
                other => other.to_string(),
            };
            ParseError { line: 1, column: 1, message }
        })
    }
}
