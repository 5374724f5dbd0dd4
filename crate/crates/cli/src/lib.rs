//! Expression front-end for the hypercomplex number systems: lexer,
//! parser, evaluator and output formatting behind the `hns4` binary.

pub mod eval;
pub mod lexer;
pub mod output;
pub mod parser;

use hns4_core::System;

/// Errors surfaced by a full evaluation pipeline run.
#[derive(Debug, Clone, PartialEq)]
pub enum ExprError {
    Lex(lexer::LexError),
    Parse(parser::ParseError),
    Eval(eval::EvalError),
}

impl std::fmt::Display for ExprError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExprError::Lex(e) => write!(f, "syntax error: {e}"),
            ExprError::Parse(e) => write!(f, "parse error: {e}"),
            ExprError::Eval(e) => write!(f, "evaluation error: {e}"),
        }
    }
}

impl std::error::Error for ExprError {}

/// Tokenize, parse and evaluate one expression in `system`.
pub fn eval_str(input: &str, system: &System) -> Result<hns4_core::HNum, ExprError> {
    let tokens = lexer::tokenize(input).map_err(ExprError::Lex)?;
    let expr = parser::parse(&tokens).map_err(ExprError::Parse)?;
    eval::eval(&expr, system).map_err(ExprError::Eval)
}
