//! Recursive-descent parser for the q-series expression language.
//!
//! ```text
//! expr     := term (("+" | "-") term)*
//! term     := factor (("*" | "/") factor)*
//! factor   := "-" factor | power
//! power    := primary ("^" integer)?
//! primary  := rational | monomial | call | "(" expr ")"
//! monomial := "q" ("^" rational)?
//! rational := integer ("/" positive-integer)?
//! base-arg := "-"? "q" ("^" rational)?
//! ```
//!
//! A rational literal `a/b` must be written without whitespace around the
//! slash; `a / b` is a quotient. Exponents may also be parenthesised, e.g.
//! `q^(-1/24)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ast::{Base, Call, Expr, ExprKind, PochLength, Span};
use crate::forms::RParams;
use crate::series::Rat;
use crate::theta::ThetaArg;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax {
        expected: Vec<String>,
        found: String,
    },
    UnknownFunction(String),
    Arity {
        name: String,
        expected: String,
        found: usize,
    },
    MalformedBase(String),
    InvalidArgument(String),
}

/// Parse failure. `offset` is 1-based: the first byte of the input is
/// offset 1 and the end of an `n`-byte input is offset `n + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax { expected, found } => write!(
                f,
                "syntax error at offset {}: expected {}, found {}",
                self.offset,
                expected.join(" or "),
                found
            ),
            ParseErrorKind::UnknownFunction(name) => {
                write!(f, "unknown function '{name}' at offset {}", self.offset)
            }
            ParseErrorKind::Arity {
                name,
                expected,
                found,
            } => write!(
                f,
                "function '{name}' at offset {} takes {expected} arguments, got {found}",
                self.offset
            ),
            ParseErrorKind::MalformedBase(msg) => {
                write!(
                    f,
                    "malformed base argument at offset {}: {msg}",
                    self.offset
                )
            }
            ParseErrorKind::InvalidArgument(msg) => {
                write!(f, "invalid argument at offset {}: {msg}", self.offset)
            }
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Semi,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("number '{s}'"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Semi => "';'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    start: usize,
    end: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b',' => Some(Tok::Comma),
            b';' => Some(Tok::Semi),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token {
                tok,
                start,
                end: i + 1,
            });
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Int(text[start..i].to_string()),
                start,
                end: i,
            });
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(text[start..i].to_string()),
                start,
                end: i,
            });
        } else if text[i..].starts_with('∞') {
            i += '∞'.len_utf8();
            out.push(Token {
                tok: Tok::Ident("inf".into()),
                start,
                end: i,
            });
        } else {
            let ch = text[i..].chars().next().unwrap();
            return Err(ParseError {
                offset: start + 1,
                kind: ParseErrorKind::Syntax {
                    expected: vec!["an expression".into()],
                    found: format!("'{ch}'"),
                },
            });
        }
    }
    out.push(Token {
        tok: Tok::End,
        start: text.len(),
        end: text.len(),
    });
    Ok(out)
}

const FUNCTIONS: &[&str] = &[
    "phi", "psi", "E", "eta", "kappa", "f", "G", "H", "U", "form", "R", "T5", "U5", "poch",
];

/// Parses one expression; the whole input must be consumed.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    p.expect(Tok::End, "end of input")?;
    Ok(e)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Token {
        &self.tokens[(self.pos + k).min(self.tokens.len() - 1)]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError {
            offset: t.start + 1,
            kind: ParseErrorKind::Syntax {
                expected: expected.iter().map(|s| s.to_string()).collect(),
                found: t.tok.describe(),
            },
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> PResult<Token> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.error_here(&[what]))
        }
    }

    fn prev_end(&self) -> usize {
        self.tokens[self.pos.saturating_sub(1)].end
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            let ctor: fn(Box<Expr>, Box<Expr>) -> ExprKind = match self.peek().tok {
                Tok::Plus => ExprKind::Sum,
                Tok::Minus => ExprKind::Difference,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let span = Span::new(lhs.span.start, rhs.span.end);
            lhs = Expr::new(ctor(Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.factor()?;
        loop {
            let ctor: fn(Box<Expr>, Box<Expr>) -> ExprKind = match self.peek().tok {
                Tok::Star => ExprKind::Product,
                Tok::Slash => ExprKind::Quotient,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.factor()?;
            let span = Span::new(lhs.span.start, rhs.span.end);
            lhs = Expr::new(ctor(Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn factor(&mut self) -> PResult<Expr> {
        if self.peek().tok == Tok::Minus {
            let start = self.bump().start;
            let inner = self.factor()?;
            let span = Span::new(start, inner.span.end);
            return Ok(Expr::new(ExprKind::Negate(Box::new(inner)), span));
        }
        self.power()
    }

    fn power(&mut self) -> PResult<Expr> {
        let base = self.primary()?;
        if self.peek().tok == Tok::Caret {
            self.bump();
            let k = self.signed_integer_maybe_parenthesised()?;
            let span = Span::new(base.span.start, self.prev_end());
            return Ok(Expr::new(ExprKind::Power(Box::new(base), k), span));
        }
        Ok(base)
    }

    fn primary(&mut self) -> PResult<Expr> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(_) => {
                let r = self.unsigned_rational()?;
                Ok(Expr::new(
                    ExprKind::Rational(big(r)),
                    Span::new(t.start, self.prev_end()),
                ))
            }
            Tok::Ident(name) if name == "q" => {
                self.bump();
                let exp = if self.peek().tok == Tok::Caret {
                    self.bump();
                    self.signed_rational()?
                } else {
                    Rat::from_integer(1)
                };
                Ok(Expr::new(
                    ExprKind::Monomial(exp),
                    Span::new(t.start, self.prev_end()),
                ))
            }
            Tok::Ident(name) => {
                if !FUNCTIONS.contains(&name.as_str()) {
                    return Err(ParseError {
                        offset: t.start + 1,
                        kind: ParseErrorKind::UnknownFunction(name.clone()),
                    });
                }
                self.call(name.clone(), t.start)
            }
            Tok::LParen => {
                self.bump();
                let mut e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                e.span = Span::new(t.start, self.prev_end());
                Ok(e)
            }
            _ => Err(self.error_here(&["number", "'q'", "function call", "'('", "'-'"])),
        }
    }

    fn int_token(&mut self) -> PResult<i64> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(s) => {
                self.bump();
                s.parse::<i64>().map_err(|_| ParseError {
                    offset: t.start + 1,
                    kind: ParseErrorKind::InvalidArgument(format!("integer {s} out of range")),
                })
            }
            _ => Err(self.error_here(&["integer"])),
        }
    }

    fn signed_integer(&mut self) -> PResult<i64> {
        if self.peek().tok == Tok::Minus {
            self.bump();
            return Ok(-self.int_token()?);
        }
        self.int_token()
    }

    fn signed_integer_maybe_parenthesised(&mut self) -> PResult<i64> {
        if self.peek().tok == Tok::LParen {
            self.bump();
            let k = self.signed_integer()?;
            self.expect(Tok::RParen, "')'")?;
            return Ok(k);
        }
        self.signed_integer()
    }

    /// `integer ("/" positive-integer)?` with the slash glued to both sides.
    fn unsigned_rational(&mut self) -> PResult<Rat> {
        let first = self.peek().clone();
        let n = self.int_token()?;
        let slash = self.peek().clone();
        let after = self.peek_at(1).clone();
        if slash.tok == Tok::Slash
            && slash.start == first.end
            && matches!(after.tok, Tok::Int(_))
            && after.start == slash.end
        {
            self.bump();
            let d = self.int_token()?;
            if d == 0 {
                return Err(ParseError {
                    offset: after.start + 1,
                    kind: ParseErrorKind::InvalidArgument("zero denominator".into()),
                });
            }
            return Ok(Rat::new(n, d));
        }
        Ok(Rat::from_integer(n))
    }

    /// Optionally negative rational, optionally in parentheses (inside
    /// which the slash may be spaced).
    fn signed_rational(&mut self) -> PResult<Rat> {
        if self.peek().tok == Tok::LParen {
            self.bump();
            let neg = if self.peek().tok == Tok::Minus {
                self.bump();
                true
            } else {
                false
            };
            let n = self.int_token()?;
            let mut r = Rat::from_integer(n);
            if self.peek().tok == Tok::Slash {
                let at = self.bump();
                let d = self.int_token()?;
                if d == 0 {
                    return Err(ParseError {
                        offset: at.end + 1,
                        kind: ParseErrorKind::InvalidArgument("zero denominator".into()),
                    });
                }
                r = Rat::new(n, d);
            }
            self.expect(Tok::RParen, "')'")?;
            return Ok(if neg { -r } else { r });
        }
        if self.peek().tok == Tok::Minus {
            self.bump();
            return Ok(-self.unsigned_rational()?);
        }
        self.unsigned_rational()
    }

    fn base_arg(&mut self) -> PResult<Base> {
        let start = self.peek().start;
        let negative = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match &self.peek().tok {
            Tok::Ident(q) if q == "q" => {
                self.bump();
            }
            other => {
                return Err(ParseError {
                    offset: self.peek().start + 1,
                    kind: ParseErrorKind::MalformedBase(format!(
                        "expected ±q^k, found {}",
                        other.describe()
                    )),
                })
            }
        }
        let exp = if self.peek().tok == Tok::Caret {
            self.bump();
            self.signed_rational()?
        } else {
            Rat::from_integer(1)
        };
        if exp <= Rat::from_integer(0) {
            return Err(ParseError {
                offset: start + 1,
                kind: ParseErrorKind::MalformedBase(format!(
                    "base exponent must be positive, got {exp}"
                )),
            });
        }
        Ok(Base { negative, exp })
    }

    /// `"-"? ("q" ("^" rational)? | "1")`.
    fn theta_arg(&mut self) -> PResult<ThetaArg> {
        let negative = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let t = self.peek().clone();
        let exp = match &t.tok {
            Tok::Ident(q) if q == "q" => {
                self.bump();
                if self.peek().tok == Tok::Caret {
                    self.bump();
                    self.signed_rational()?
                } else {
                    Rat::from_integer(1)
                }
            }
            Tok::Int(s) if s == "1" => {
                self.bump();
                Rat::from_integer(0)
            }
            _ => {
                return Err(ParseError {
                    offset: t.start + 1,
                    kind: ParseErrorKind::MalformedBase(format!(
                        "expected ±q^x or ±1, found {}",
                        t.tok.describe()
                    )),
                })
            }
        };
        Ok(ThetaArg { negative, exp })
    }

    /// Counts the arguments of the call whose '(' is at token `open`.
    fn count_args(&self, open: usize) -> usize {
        let mut depth = 0usize;
        let mut count = 0usize;
        let mut saw = false;
        for t in &self.tokens[open..] {
            match t.tok {
                Tok::LParen => {
                    depth += 1;
                    if depth > 1 {
                        saw = true;
                    }
                }
                Tok::RParen => {
                    depth -= 1;
                    if depth == 0 {
                        break;
                    }
                }
                Tok::Comma | Tok::Semi if depth == 1 => count += 1,
                Tok::End => break,
                _ => saw = true,
            }
        }
        if saw {
            count + 1
        } else {
            count
        }
    }

    fn arity_error(&self, name: &str, start: usize, open: usize, expected: &str) -> ParseError {
        ParseError {
            offset: start + 1,
            kind: ParseErrorKind::Arity {
                name: name.to_string(),
                expected: expected.to_string(),
                found: self.count_args(open),
            },
        }
    }

    fn separator(&mut self, name: &str, start: usize, open: usize, expected: &str) -> PResult<()> {
        match self.peek().tok {
            Tok::Comma => {
                self.bump();
                Ok(())
            }
            Tok::RParen => Err(self.arity_error(name, start, open, expected)),
            _ => Err(self.error_here(&["','"])),
        }
    }

    /// Consumes an optional trailing `("," | ";") base-arg`.
    fn optional_base(&mut self) -> PResult<Base> {
        if matches!(self.peek().tok, Tok::Comma | Tok::Semi) {
            self.bump();
            return self.base_arg();
        }
        Ok(Base::q())
    }

    fn close(&mut self, name: &str, start: usize, open: usize, expected: &str) -> PResult<()> {
        match self.peek().tok {
            Tok::RParen => {
                self.bump();
                Ok(())
            }
            Tok::Comma | Tok::Semi => Err(self.arity_error(name, start, open, expected)),
            _ => Err(self.error_here(&["')'"])),
        }
    }

    fn call(&mut self, name: String, start: usize) -> PResult<Expr> {
        self.bump();
        let open = self.pos;
        self.expect(Tok::LParen, "'('")?;
        let n = name.as_str();
        let call = match n {
            "phi" | "psi" | "E" | "kappa" | "G" | "H" => {
                if self.peek().tok == Tok::RParen {
                    return Err(self.arity_error(n, start, open, "1"));
                }
                let base = self.base_arg()?;
                self.close(n, start, open, "1")?;
                match n {
                    "phi" => Call::Phi(base),
                    "psi" => Call::Psi(base),
                    "E" => Call::E(base),
                    "kappa" => Call::Kappa(base),
                    "G" => Call::G(base),
                    _ => Call::H(base),
                }
            }
            "eta" => {
                let base = if self.peek().tok == Tok::RParen {
                    Base::q()
                } else {
                    self.base_arg()?
                };
                self.close(n, start, open, "0 or 1")?;
                Call::Eta(base)
            }
            "f" => {
                let a = self.theta_arg()?;
                self.separator(n, start, open, "2")?;
                let b = self.theta_arg()?;
                self.close(n, start, open, "2")?;
                Call::F(a, b)
            }
            "U" => {
                let r = self.positive_integer()?;
                self.separator(n, start, open, "2 or 3")?;
                let s = self.positive_integer()?;
                let base = self.optional_base()?;
                self.close(n, start, open, "2 or 3")?;
                Call::U { r, s, base }
            }
            "form" => {
                let a = self.signed_integer()?;
                self.separator(n, start, open, "3 or 4")?;
                let b = self.signed_integer()?;
                self.separator(n, start, open, "3 or 4")?;
                let c = self.signed_integer()?;
                let base = self.optional_base()?;
                self.close(n, start, open, "3 or 4")?;
                Call::Form { a, b, c, base }
            }
            "R" => {
                let eps = self.signed_integer()?;
                self.separator(n, start, open, "9")?;
                let delta = self.signed_integer()?;
                self.separator(n, start, open, "9")?;
                let l = self.signed_rational()?;
                self.separator(n, start, open, "9")?;
                let t = self.signed_rational()?;
                let mut rest = [0i64; 5];
                for slot in rest.iter_mut() {
                    self.separator(n, start, open, "9")?;
                    *slot = self.signed_integer()?;
                }
                self.close(n, start, open, "9")?;
                let params = RParams {
                    eps,
                    delta,
                    l,
                    t,
                    alpha: rest[0],
                    beta: rest[1],
                    m: rest[2],
                    p: rest[3],
                    lambda: rest[4],
                };
                Call::R(params)
            }
            "T5" | "U5" => {
                if self.peek().tok == Tok::RParen {
                    return Err(self.arity_error(n, start, open, "1"));
                }
                let inner = Box::new(self.expr()?);
                self.close(n, start, open, "1")?;
                if n == "T5" {
                    Call::T5(inner)
                } else {
                    Call::U5(inner)
                }
            }
            "poch" => {
                let arg = self.theta_arg()?;
                self.separator(n, start, open, "3")?;
                let step = if matches!(&self.peek().tok, Tok::Ident(q) if q == "q") {
                    self.base_arg()?.exp
                } else {
                    self.signed_rational()?
                };
                self.separator(n, start, open, "3")?;
                let t = self.peek().clone();
                let length = match &t.tok {
                    Tok::Ident(s) if s == "inf" => {
                        self.bump();
                        PochLength::Infinite
                    }
                    Tok::Int(_) => {
                        let k = self.int_token()?;
                        PochLength::Finite(u32::try_from(k).map_err(|_| ParseError {
                            offset: t.start + 1,
                            kind: ParseErrorKind::InvalidArgument(format!(
                                "factor count {k} too large"
                            )),
                        })?)
                    }
                    _ => return Err(self.error_here(&["count", "'inf'"])),
                };
                self.close(n, start, open, "3")?;
                Call::Poch { arg, step, length }
            }
            _ => unreachable!("checked against FUNCTIONS"),
        };
        Ok(Expr::new(
            ExprKind::Call(call),
            Span::new(start, self.prev_end()),
        ))
    }

    fn positive_integer(&mut self) -> PResult<i64> {
        let at = self.peek().start;
        let k = self.signed_integer()?;
        if k <= 0 {
            return Err(ParseError {
                offset: at + 1,
                kind: ParseErrorKind::InvalidArgument(format!(
                    "expected a positive integer, got {k}"
                )),
            });
        }
        Ok(k)
    }
}

fn big(r: Rat) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}
