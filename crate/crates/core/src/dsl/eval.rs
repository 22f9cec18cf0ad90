use std::fmt;

use super::ast::{Base, Call, Expr, ExprKind, PochLength, Span};
use crate::error::Error;
use crate::forms::{r_function, theta_of_form, QuadForm};
use crate::rogers_ramanujan::{rr_g, rr_h, rr_u};
use crate::series::{int, Rat, Series};
use crate::theta::{
    eta, euler_e, kappa, phi, pochhammer_finite, pochhammer_infinite, psi, theta_f,
};

/// Evaluation failure, pointing at the offending subexpression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalError {
    pub span: Span,
    pub error: Error,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "evaluation error at offsets {}..{}: {}",
            self.span.start + 1,
            self.span.end + 1,
            self.error
        )
    }
}

impl std::error::Error for EvalError {}

type EResult<T> = Result<T, EvalError>;

/// Evaluates `expr` with every leaf built to precision `prec`. The result
/// can be less precise when Laurent factors or quotients are involved; see
/// [`evaluate_to_order`].
pub fn evaluate(expr: &Expr, prec: Rat) -> EResult<Series> {
    let at = |error: Error| EvalError {
        span: expr.span,
        error,
    };
    Ok(match &expr.kind {
        ExprKind::Sum(a, b) => evaluate(a, prec)?.add(&evaluate(b, prec)?),
        ExprKind::Difference(a, b) => evaluate(a, prec)?.sub(&evaluate(b, prec)?),
        ExprKind::Product(a, b) => evaluate(a, prec)?.mul(&evaluate(b, prec)?),
        ExprKind::Quotient(a, b) => {
            let denom = evaluate(b, prec)?.invert().map_err(|error| EvalError {
                span: b.span,
                error,
            })?;
            evaluate(a, prec)?.mul(&denom)
        }
        ExprKind::Power(a, k) => {
            let base = evaluate(a, prec)?;
            let base = if *k < 0 {
                base.invert().map_err(at)?
            } else {
                base
            };
            let k = u32::try_from(k.unsigned_abs())
                .map_err(|_| at(Error::Domain(format!("exponent {k} too large"))))?;
            if k == 0 {
                Series::one(base.precision())
            } else {
                base.pow(k)
            }
        }
        ExprKind::Negate(a) => evaluate(a, prec)?.negate(),
        ExprKind::Rational(c) => Series::constant(c.clone(), prec),
        ExprKind::Monomial(e) => {
            if *e >= prec {
                Series::zero(prec)
            } else {
                Series::monomial(num_traits::One::one(), *e, prec).map_err(at)?
            }
        }
        ExprKind::Call(Call::T5(inner)) => evaluate(inner, prec * 5 + int(5))?.t5().map_err(at)?,
        ExprKind::Call(Call::U5(inner)) => evaluate(inner, prec * 5)?.u5().map_err(at)?,
        ExprKind::Call(call) => evaluate_call(call, prec).map_err(at)?,
    })
}

fn with_base(
    base: Base,
    prec: Rat,
    build: impl Fn(Rat) -> crate::Result<Series>,
) -> crate::Result<Series> {
    let mut s = build(prec / base.exp)?;
    if base.negative {
        s = s.negate_variable()?;
    }
    s.rescale_variable(base.exp)
}

fn evaluate_call(call: &Call, prec: Rat) -> crate::Result<Series> {
    match call {
        Call::Phi(b) => with_base(*b, prec, |p| Ok(phi(p))),
        Call::Psi(b) => with_base(*b, prec, |p| Ok(psi(p))),
        Call::E(b) => with_base(*b, prec, |p| Ok(euler_e(p))),
        Call::Kappa(b) => with_base(*b, prec, |p| Ok(kappa(p))),
        Call::G(b) => with_base(*b, prec, |p| Ok(rr_g(p))),
        Call::H(b) => with_base(*b, prec, |p| Ok(rr_h(p))),
        Call::Eta(b) => {
            if b.negative {
                return Err(Error::Domain(
                    "eta carries q^(1/24) and is not defined at a negated base".into(),
                ));
            }
            with_base(*b, prec, |p| Ok(eta(p)))
        }
        Call::F(a, b) => theta_f(*a, *b, prec),
        Call::U { r, s, base } => with_base(*base, prec, |p| rr_u(*r, *s, p)),
        Call::Form { a, b, c, base } => {
            let form = QuadForm::new(*a, *b, *c)?;
            with_base(*base, prec, |p| Ok(theta_of_form(form, p)))
        }
        Call::R(params) => r_function(params, prec),
        Call::T5(_) | Call::U5(_) => unreachable!("handled in evaluate"),
        Call::Poch { arg, step, length } => match length {
            PochLength::Finite(n) => pochhammer_finite(*arg, *step, *n, prec),
            PochLength::Infinite => pochhammer_infinite(*arg, *step, prec),
        },
    }
}

/// Evaluates `expr` to at least precision `order`, raising the working
/// precision of the leaves until the result is accurate that far.
pub fn evaluate_to_order(expr: &Expr, order: Rat) -> EResult<Series> {
    let mut work = order;
    for _ in 0..8 {
        let s = evaluate(expr, work)?;
        let got = s.precision();
        if got >= order {
            return Ok(s.truncate(order));
        }
        work += order - got;
    }
    Err(EvalError {
        span: expr.span,
        error: Error::Precision(format!(
            "could not reach order {order} after raising the working precision to {work}"
        )),
    })
}
