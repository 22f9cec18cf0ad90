//! A small expression language over the built-in q-series.
//!
//! ```
//! use qseries::dsl::eval_str;
//! use qseries::series::int;
//!
//! let s = eval_str("phi(q)^2 - form(1, 0, 1)", int(50)).unwrap();
//! assert!(s.is_zero());
//! ```

mod ast;
mod eval;
mod parser;
mod print;

pub use ast::{Base, Call, Expr, ExprKind, PochLength, Span};
pub use eval::{evaluate, evaluate_to_order, EvalError};
pub use parser::{parse, ParseError, ParseErrorKind};

use crate::series::{Rat, Series};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Parses `text` and evaluates it to precision `order`.
pub fn eval_str(text: &str, order: Rat) -> Result<Series, DslError> {
    let expr = parse(text)?;
    Ok(evaluate_to_order(&expr, order)?)
}
