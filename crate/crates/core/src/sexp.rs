//! S-expression reader shared by every textual format. One top-level
//! expression per input; `#` starts a line comment.

use std::fmt;
use thiserror::Error;

/// Byte range into the source text, for error reporting.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> SourceSpan {
        SourceSpan { start, end }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("{message} at {span}")]
pub struct ParseError {
    pub message: String,
    pub span: SourceSpan,
}

impl ParseError {
    pub fn new(message: impl Into<String>, span: SourceSpan) -> ParseError {
        ParseError {
            message: message.into(),
            span,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SexpKind {
    Atom(String),
    List(Vec<Sexp>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sexp {
    pub kind: SexpKind,
    pub span: SourceSpan,
}

impl Sexp {
    pub fn atom(&self) -> Option<&str> {
        match &self.kind {
            SexpKind::Atom(s) => Some(s),
            SexpKind::List(_) => None,
        }
    }

    pub fn list(&self) -> Option<&[Sexp]> {
        match &self.kind {
            SexpKind::Atom(_) => None,
            SexpKind::List(items) => Some(items),
        }
    }

    /// Head atom and arguments of a list form like `(head arg ...)`.
    pub fn head(&self) -> Option<(&str, &[Sexp])> {
        let items = self.list()?;
        let head = items.first()?.atom()?;
        Some((head, &items[1..]))
    }

    pub fn expect_atom(&self) -> Result<&str, ParseError> {
        self.atom()
            .ok_or_else(|| ParseError::new("expected an atom", self.span))
    }

    pub fn expect_usize(&self) -> Result<usize, ParseError> {
        let s = self.expect_atom()?;
        s.parse()
            .map_err(|_| ParseError::new(format!("expected a nonnegative integer, got `{s}`"), self.span))
    }
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SexpKind::Atom(s) => f.write_str(s),
            SexpKind::List(items) => {
                write!(f, "(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{item}")?;
                }
                write!(f, ")")
            }
        }
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug)]
enum Token {
    Open(usize),
    Close(usize),
    Atom(String, SourceSpan),
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_trivia(&mut self) {
        while self.pos < self.src.len() {
            match self.src[self.pos] {
                b' ' | b'\t' | b'\r' | b'\n' => self.pos += 1,
                b'#' => {
                    while self.pos < self.src.len() && self.src[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                _ => break,
            }
        }
    }

    fn next(&mut self) -> Option<Token> {
        self.skip_trivia();
        if self.pos >= self.src.len() {
            return None;
        }
        let start = self.pos;
        match self.src[self.pos] {
            b'(' => {
                self.pos += 1;
                Some(Token::Open(start))
            }
            b')' => {
                self.pos += 1;
                Some(Token::Close(start))
            }
            _ => {
                while self.pos < self.src.len()
                    && !matches!(self.src[self.pos], b'(' | b')' | b' ' | b'\t' | b'\r' | b'\n' | b'#')
                {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos])
                    .expect("atom boundaries fall on ASCII delimiters")
                    .to_owned();
                Some(Token::Atom(text, SourceSpan::new(start, self.pos)))
            }
        }
    }
}

/// Parse exactly one s-expression; trailing non-comment input is an error.
pub fn parse_sexp(src: &str) -> Result<Sexp, ParseError> {
    let mut lexer = Lexer::new(src);
    let expr = parse_one(&mut lexer, src.len())?;
    lexer.skip_trivia();
    if lexer.pos < lexer.src.len() {
        return Err(ParseError::new(
            "unexpected trailing input",
            SourceSpan::new(lexer.pos, src.len()),
        ));
    }
    Ok(expr)
}

fn parse_one(lexer: &mut Lexer, src_len: usize) -> Result<Sexp, ParseError> {
    match lexer.next() {
        None => Err(ParseError::new(
            "unexpected end of input",
            SourceSpan::new(src_len, src_len),
        )),
        Some(Token::Atom(text, span)) => Ok(Sexp {
            kind: SexpKind::Atom(text),
            span,
        }),
        Some(Token::Close(pos)) => Err(ParseError::new(
            "unexpected `)`",
            SourceSpan::new(pos, pos + 1),
        )),
        Some(Token::Open(open_pos)) => {
            let mut items = Vec::new();
            loop {
                let before = lexer.pos;
                lexer.skip_trivia();
                if lexer.pos >= lexer.src.len() {
                    return Err(ParseError::new(
                        "unclosed `(`",
                        SourceSpan::new(open_pos, lexer.pos),
                    ));
                }
                if lexer.src[lexer.pos] == b')' {
                    lexer.pos += 1;
                    return Ok(Sexp {
                        kind: SexpKind::List(items),
                        span: SourceSpan::new(open_pos, lexer.pos),
                    });
                }
                lexer.pos = before;
                items.push(parse_one(lexer, src_len)?);
            }
        }
    }
}
