//! Canonical text form of an expression tree. Parsing the printed text
//! yields the same tree.

use std::fmt;

use num_traits::Signed;

use super::ast::{Base, Call, Expr, ExprKind, PochLength};
use crate::series::Rat;
use crate::theta::ThetaArg;

const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const NEGATE: u8 = 3;
const POWER: u8 = 4;
const ATOM: u8 = 5;

fn precedence(e: &Expr) -> u8 {
    match &e.kind {
        ExprKind::Sum(..) | ExprKind::Difference(..) => SUM,
        ExprKind::Product(..) | ExprKind::Quotient(..) => PRODUCT,
        ExprKind::Negate(_) => NEGATE,
        ExprKind::Rational(c) if c.is_negative() => NEGATE,
        ExprKind::Power(..) => POWER,
        _ => ATOM,
    }
}

fn exponent(r: Rat) -> String {
    if r.is_integer() && r.numer() > &0 {
        r.numer().to_string()
    } else {
        format!("({r})")
    }
}

fn monomial(r: Rat) -> String {
    if r == Rat::from_integer(1) {
        "q".into()
    } else {
        format!("q^{}", exponent(r))
    }
}

fn base(b: &Base) -> String {
    format!("{}{}", if b.negative { "-" } else { "" }, monomial(b.exp))
}

fn theta_arg(a: &ThetaArg) -> String {
    let body = if a.exp == Rat::from_integer(0) {
        "1".into()
    } else {
        monomial(a.exp)
    };
    format!("{}{}", if a.negative { "-" } else { "" }, body)
}

fn with_base(name: &str, head: &str, b: &Base) -> String {
    if *b == Base::q() {
        format!("{name}({head})")
    } else {
        format!("{name}({head}, {})", base(b))
    }
}

fn call(c: &Call) -> String {
    match c {
        Call::Phi(b) => format!("phi({})", base(b)),
        Call::Psi(b) => format!("psi({})", base(b)),
        Call::E(b) => format!("E({})", base(b)),
        Call::Kappa(b) => format!("kappa({})", base(b)),
        Call::G(b) => format!("G({})", base(b)),
        Call::H(b) => format!("H({})", base(b)),
        Call::Eta(b) if *b == Base::q() => "eta()".into(),
        Call::Eta(b) => format!("eta({})", base(b)),
        Call::F(a, b) => format!("f({}, {})", theta_arg(a), theta_arg(b)),
        Call::U { r, s, base: b } => with_base("U", &format!("{r}, {s}"), b),
        Call::Form {
            a,
            b: bb,
            c,
            base: b,
        } => with_base("form", &format!("{a}, {bb}, {c}"), b),
        Call::R(p) => format!(
            "R({}, {}, {}, {}, {}, {}, {}, {}, {})",
            p.eps, p.delta, p.l, p.t, p.alpha, p.beta, p.m, p.p, p.lambda
        ),
        Call::T5(e) => format!("T5({e})"),
        Call::U5(e) => format!("U5({e})"),
        Call::Poch { arg, step, length } => {
            let n = match length {
                PochLength::Finite(n) => n.to_string(),
                PochLength::Infinite => "inf".into(),
            };
            format!("poch({}, {step}, {n})", theta_arg(arg))
        }
    }
}

fn child(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let binary = |f: &mut fmt::Formatter<'_>, a: &Expr, op: &str, b: &Expr, level: u8| {
            child(f, a, precedence(a) < level)?;
            write!(f, " {op} ")?;
            child(f, b, precedence(b) <= level)
        };
        match &self.kind {
            ExprKind::Sum(a, b) => binary(f, a, "+", b, SUM),
            ExprKind::Difference(a, b) => binary(f, a, "-", b, SUM),
            ExprKind::Product(a, b) => binary(f, a, "*", b, PRODUCT),
            ExprKind::Quotient(a, b) => binary(f, a, "/", b, PRODUCT),
            ExprKind::Negate(a) => {
                write!(f, "-")?;
                child(f, a, precedence(a) < NEGATE)
            }
            ExprKind::Power(a, k) => {
                // A bare monomial base would merge with the exponent.
                let parens = precedence(a) < ATOM || matches!(a.kind, ExprKind::Monomial(_));
                child(f, a, parens)?;
                if *k < 0 {
                    write!(f, "^({k})")
                } else {
                    write!(f, "^{k}")
                }
            }
            ExprKind::Rational(c) => write!(f, "{c}"),
            ExprKind::Monomial(r) => write!(f, "{}", monomial(*r)),
            ExprKind::Call(c) => write!(f, "{}", call(c)),
        }
    }
}
