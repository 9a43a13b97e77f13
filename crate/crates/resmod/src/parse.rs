//! Compact text syntax for Weierstrass coefficients: two statements
//! `A = <expr>; B = <expr>` over the affine coordinate `t`, with integer
//! literals, `+ - * / ^`, parentheses, and implicit multiplication as in
//! `2t^3` or `3(t + 1)`.
//!
//! ```
//! use resmod::parse::parse_coefficients;
//!
//! let (a, b) = parse_coefficients("A = -3t^2 + 1; B = 2(t^3 - t)")?;
//! assert_eq!(a.degree(), 2);
//! assert_eq!(b.to_string(), "2*t^3 - 2*t");
//! # Ok::<(), resmod::parse::ParseError>(())
//! ```

use crate::binform::QPoly;
use crate::rational::Q;
use num_bigint::BigInt;
use std::fmt;

/// Syntax or arithmetic error, pointing at the offending token.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: u32,
    pub column: u32,
    pub message: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eq,
    Semi,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::Eq => write!(f, "'='"),
            Tok::Semi => write!(f, "';'"),
        }
    }
}

struct Lexed {
    tok: Tok,
    line: u32,
    column: u32,
}

fn err<T>(line: u32, column: u32, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, column, message: message.into() })
}

fn lex(text: &str) -> Result<Vec<Lexed>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1u32;
    let mut column = 1u32;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tok_line, tok_column) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().expect("peeked");
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        let tok = match c {
            '+' => {
                bump(&mut chars);
                Tok::Plus
            }
            '-' => {
                bump(&mut chars);
                Tok::Minus
            }
            '*' => {
                bump(&mut chars);
                Tok::Star
            }
            '/' => {
                bump(&mut chars);
                Tok::Slash
            }
            '^' => {
                bump(&mut chars);
                Tok::Caret
            }
            '(' => {
                bump(&mut chars);
                Tok::LParen
            }
            ')' => {
                bump(&mut chars);
                Tok::RParen
            }
            '=' => {
                bump(&mut chars);
                Tok::Eq
            }
            ';' => {
                bump(&mut chars);
                Tok::Semi
            }
            '0'..='9' => {
                let mut digits = String::new();
                while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                    digits.push(bump(&mut chars));
                }
                let n = digits.parse::<BigInt>().expect("ascii digits");
                Tok::Num(n)
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while chars.peek().is_some_and(|c| c.is_ascii_alphanumeric() && !c.is_ascii_digit()) {
                    name.push(bump(&mut chars));
                }
                Tok::Ident(name)
            }
            other => return err(line, column, format!("unexpected character '{other}'")),
        };
        out.push(Lexed { tok, line: tok_line, column: tok_column });
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Lexed>,
    pos: usize,
    end_line: u32,
    end_column: u32,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|l| &l.tok)
    }

    fn here(&self) -> (u32, u32) {
        self.tokens
            .get(self.pos)
            .map(|l| (l.line, l.column))
            .unwrap_or((self.end_line, self.end_column))
    }

    fn next(&mut self) -> Option<&Lexed> {
        let lexed = self.tokens.get(self.pos);
        if lexed.is_some() {
            self.pos += 1;
        }
        lexed
    }

    fn expect(&mut self, want: &Tok) -> Result<(), ParseError> {
        let (line, column) = self.here();
        match self.next() {
            Some(l) if l.tok == *want => Ok(()),
            Some(l) => err(l.line, l.column, format!("expected {want}, found {}", l.tok)),
            None => err(line, column, format!("expected {want}, found end of input")),
        }
    }

    /// expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<QPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    /// term := factor (('*' | '/') factor | factor-juxtaposed)*
    fn term(&mut self) -> Result<QPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    let (line, column) = self.here();
                    self.next();
                    let rhs = self.factor()?;
                    if !rhs.is_constant() {
                        return err(line, column, "division by a non-constant polynomial");
                    }
                    let c = rhs.coeff(0);
                    if c.is_zero() {
                        return err(line, column, "division by zero");
                    }
                    acc = acc.scale(&c.recip());
                }
                // Juxtaposition multiplies: `2t^3`, `3(t + 1)`.
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    /// factor := '-' factor | power
    fn factor(&mut self) -> Result<QPoly, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.next();
            return Ok(self.factor()?.scale(&Q::int(-1)));
        }
        self.power()
    }

    /// power := primary ('^' integer)?
    fn power(&mut self) -> Result<QPoly, ParseError> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.next();
        let (line, column) = self.here();
        match self.next().map(|l| l.tok.clone()) {
            Some(Tok::Num(n)) => {
                let Ok(e) = u32::try_from(&n) else {
                    return err(line, column, format!("exponent {n} out of range"));
                };
                if e > 64 {
                    return err(line, column, format!("exponent {e} out of range"));
                }
                let mut acc = QPoly::constant(Q::one());
                for _ in 0..e {
                    acc = acc.mul(&base);
                }
                Ok(acc)
            }
            Some(other) => err(line, column, format!("expected an integer exponent, found {other}")),
            None => err(line, column, "expected an integer exponent, found end of input"),
        }
    }

    /// primary := integer | 't' | '(' expr ')'
    fn primary(&mut self) -> Result<QPoly, ParseError> {
        let (line, column) = self.here();
        match self.next().map(|l| l.tok.clone()) {
            Some(Tok::Num(n)) => Ok(QPoly::constant(Q::from_big(n, BigInt::from(1)))),
            Some(Tok::Ident(name)) if name == "t" => {
                Ok(QPoly::new(vec![Q::int(0), Q::int(1)]))
            }
            Some(Tok::Ident(name)) => err(
                line,
                column,
                format!("unknown variable '{name}'; the affine coordinate is 't'"),
            ),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(inner)
            }
            Some(other) => err(line, column, format!("expected a value, found {other}")),
            None => err(line, column, "expected a value, found end of input"),
        }
    }
}

/// Parse `A = <expr>; B = <expr>` (in either order, each exactly once) into
/// the pair of affine polynomials `(A, B)`.
pub fn parse_coefficients(text: &str) -> Result<(QPoly, QPoly), ParseError> {
    let tokens = lex(text)?;
    let lines = text.lines().count().max(1) as u32;
    let end_column = text.lines().last().map(|l| l.chars().count() + 1).unwrap_or(1) as u32;
    let mut parser = Parser { tokens, pos: 0, end_line: lines, end_column };

    let mut a: Option<QPoly> = None;
    let mut b: Option<QPoly> = None;
    loop {
        let (line, column) = parser.here();
        let name = match parser.next().map(|l| l.tok.clone()) {
            Some(Tok::Ident(name)) if name == "A" || name == "B" => name,
            Some(other) => return err(line, column, format!("expected 'A' or 'B', found {other}")),
            None => return err(line, column, "expected 'A' or 'B', found end of input"),
        };
        let slot = if name == "A" { &mut a } else { &mut b };
        if slot.is_some() {
            return err(line, column, format!("'{name}' is defined twice"));
        }
        parser.expect(&Tok::Eq)?;
        *slot = Some(parser.expr()?);

        match parser.peek() {
            Some(Tok::Semi) => {
                parser.next();
                if parser.peek().is_none() {
                    break;
                }
            }
            None => break,
            Some(other) => {
                let (line, column) = parser.here();
                return err(line, column, format!("expected ';', found {other}"));
            }
        }
    }
    let (line, column) = parser.here();
    match (a, b) {
        (Some(a), Some(b)) => Ok((a, b)),
        (None, _) => err(line, column, "missing a definition for 'A'"),
        (_, None) => err(line, column, "missing a definition for 'B'"),
    }
}
