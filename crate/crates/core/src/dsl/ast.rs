use num_rational::BigRational;

use crate::forms::RParams;
use crate::series::Rat;
use crate::theta::ThetaArg;

/// Byte range `[start, end)` of a node in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }
}

/// Expression node with its source span. Equality ignores spans so that
/// trees parsed from differently formatted text compare equal.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Sum(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Quotient(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, i64),
    Negate(Box<Expr>),
    Rational(BigRational),
    Monomial(Rat),
    Call(Call),
}

/// A base argument `±q^k` with `k > 0`, standing for the substitution
/// `q ↦ ±q^k` applied to a function of `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Base {
    pub negative: bool,
    pub exp: Rat,
}

impl Base {
    pub fn q() -> Self {
        Base {
            negative: false,
            exp: Rat::from_integer(1),
        }
    }
}

/// How many factors a `poch` call multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochLength {
    Finite(u32),
    Infinite,
}

/// The closed set of built-in functions.
#[derive(Debug, Clone, PartialEq)]
pub enum Call {
    Phi(Base),
    Psi(Base),
    E(Base),
    Eta(Base),
    Kappa(Base),
    G(Base),
    H(Base),
    F(ThetaArg, ThetaArg),
    U {
        r: i64,
        s: i64,
        base: Base,
    },
    Form {
        a: i64,
        b: i64,
        c: i64,
        base: Base,
    },
    R(RParams),
    T5(Box<Expr>),
    U5(Box<Expr>),
    Poch {
        arg: ThetaArg,
        step: Rat,
        length: PochLength,
    },
}
