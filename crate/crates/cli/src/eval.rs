//! Evaluation of parsed expressions over a chosen system.

use std::fmt;

use hns4_core::{exp_closed, Error, HNum, System};

use crate::output::render;
use crate::parser::{Expr, Func};

/// Evaluation failure. Mixed systems cannot occur here (a single system
/// scopes the whole expression), so the only runtime failure is division
/// by zero or by a zero divisor.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalError {
    /// Canonical rendering of the offending divisor value.
    pub divisor: String,
    pub pseudonorm: f64,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cannot divide by {}: it is zero or a zero divisor (pseudonorm {})",
            self.divisor, self.pseudonorm
        )
    }
}

impl std::error::Error for EvalError {}

pub fn eval(expr: &Expr, system: &System) -> Result<HNum, EvalError> {
    match expr {
        Expr::Literal(value) => Ok(system.one().scale(*value)),
        Expr::BasisElem(index) => Ok(system.basis(*index as usize)),
        Expr::Neg(inner) => Ok(eval(inner, system)?.neg()),
        Expr::Add(lhs, rhs) => Ok(join(eval(lhs, system)?, eval(rhs, system)?, HNum::add)),
        Expr::Sub(lhs, rhs) => Ok(join(eval(lhs, system)?, eval(rhs, system)?, HNum::sub)),
        Expr::Mul(lhs, rhs) => Ok(join(eval(lhs, system)?, eval(rhs, system)?, HNum::mul)),
        Expr::DivRight(lhs, rhs) => {
            let dividend = eval(lhs, system)?;
            let divisor = eval(rhs, system)?;
            dividend
                .div_right(&divisor)
                .map_err(|e| divide_error(e, &divisor))
        }
        // `b \ a` solves b*x = a: the left operand is the divisor.
        Expr::DivLeft(lhs, rhs) => {
            let divisor = eval(lhs, system)?;
            let dividend = eval(rhs, system)?;
            dividend
                .div_left(&divisor)
                .map_err(|e| divide_error(e, &divisor))
        }
        Expr::Call(func, arg) => {
            let value = eval(arg, system)?;
            Ok(match func {
                Func::Exp => exp_closed(&value),
                Func::Conj => value.conj(),
                Func::PNorm => value.system().one().scale(value.pseudonorm()),
                Func::Norm => value.system().one().scale(value.norm()),
            })
        }
    }
}

/// Binary core operations cannot fail on same-system operands.
fn join(lhs: HNum, rhs: HNum, op: fn(&HNum, &HNum) -> Result<HNum, Error>) -> HNum {
    op(&lhs, &rhs).expect("operands share one system")
}

fn divide_error(error: Error, divisor: &HNum) -> EvalError {
    match error {
        Error::ZeroDivisor { pseudonorm } => EvalError {
            divisor: render(divisor),
            pseudonorm,
        },
        other => unreachable!("unexpected evaluation error: {other}"),
    }
}
