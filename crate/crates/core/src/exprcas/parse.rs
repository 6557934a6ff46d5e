use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::expr::RatExpr;
use super::rational::RationalNumber;

/// Largest accepted magnitude of an exponent.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unknown character `{0}`")]
    UnknownChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected `{0}`")]
    Unexpected(String),
    #[error("exponent out of range")]
    ExponentOverflow,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(text[start..i].parse().expect("digits")), start));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            let ch = text[i..].chars().next().expect("char boundary");
            return Err(ParseError { kind: ParseErrorKind::UnknownChar(ch), offset: i });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(_, o)| o)
    }

    fn err(&self) -> ParseError {
        let kind = match self.peek() {
            None => ParseErrorKind::UnexpectedEnd,
            Some(Tok::Int(i)) => ParseErrorKind::Unexpected(i.to_string()),
            Some(Tok::Ident(s)) => ParseErrorKind::Unexpected(s.clone()),
            Some(Tok::Sym(c)) => ParseErrorKind::Unexpected(c.to_string()),
        };
        ParseError { kind, offset: self.offset() }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatExpr, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            if self.eat('+') {
                terms.push(self.term()?);
            } else if self.eat('-') {
                terms.push(-self.term()?);
            } else {
                return Ok(RatExpr::sum(terms));
            }
        }
    }

    fn term(&mut self) -> Result<RatExpr, ParseError> {
        let mut acc = self.unary()?;
        let mut factors = Vec::new();
        loop {
            if self.eat('*') {
                factors.push(acc);
                acc = self.unary()?;
            } else if self.eat('/') {
                let rhs = self.unary()?;
                factors.push(acc);
                acc = RatExpr::quotient(RatExpr::product(std::mem::take(&mut factors)), rhs);
            } else {
                factors.push(acc);
                return Ok(RatExpr::product(factors));
            }
        }
    }

    fn unary(&mut self) -> Result<RatExpr, ParseError> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else {
            self.factor()
        }
    }

    fn factor(&mut self) -> Result<RatExpr, ParseError> {
        let base = self.base()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let at = self.offset();
        match self.peek() {
            Some(Tok::Int(i)) => {
                let mag = i.to_u32().filter(|&m| m <= MAX_EXPONENT).ok_or(ParseError {
                    kind: ParseErrorKind::ExponentOverflow,
                    offset: at,
                })?;
                self.pos += 1;
                let e = mag as i32;
                Ok(base.pow(if neg { -e } else { e }))
            }
            _ => Err(self.err()),
        }
    }

    fn base(&mut self) -> Result<RatExpr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(a)) => {
                self.pos += 1;
                // integer "/" positive-integer is a single rational literal
                if let (Some((Tok::Sym('/'), _)), Some((Tok::Int(b), _))) =
                    (self.toks.get(self.pos), self.toks.get(self.pos + 1))
                {
                    if !b.is_zero() {
                        let b = b.clone();
                        self.pos += 2;
                        return Ok(RatExpr::constant(RationalNumber::new(a, b).expect("nonzero")));
                    }
                }
                Ok(RatExpr::constant(RationalNumber::from_integer(a)))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(RatExpr::var(&s))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.eat(')') {
                    Ok(e)
                } else {
                    Err(self.err())
                }
            }
            _ => Err(self.err()),
        }
    }
}

/// Parses an expression in the arithmetic grammar over rationals and
/// identifiers.
pub fn parse_expr(text: &str) -> Result<RatExpr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, end: text.len() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err());
    }
    Ok(e)
}
