//! Recursive-descent parser.
//!
//! Grammar, lowest precedence first; `*`, `/` and `\` are left-associative:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/' | '\') unary)*
//! unary   := '-' unary | primary
//! primary := Number | Basis | Ident '(' expr ')' | '(' expr ')'
//! ```
//!
//! `a / b` is the right quotient (solves `x*b = a`); `b \ a` is the left
//! quotient (solves `b*x = a`). There is no implicit multiplication:
//! `2e2` is exponent notation for 200, and `2 e2` is a parse error.

use std::fmt;

use crate::lexer::{Token, TokenKind};

/// Functions callable in expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Exp,
    Conj,
    PNorm,
    Norm,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        match name.to_ascii_lowercase().as_str() {
            "exp" => Some(Func::Exp),
            "conj" => Some(Func::Conj),
            "pnorm" => Some(Func::PNorm),
            "norm" => Some(Func::Norm),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Literal(f64),
    BasisElem(u8),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// `a / b`: solves x*b = a.
    DivRight(Box<Expr>, Box<Expr>),
    /// `b \ a`: solves b*x = a.
    DivLeft(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

const MAX_DEPTH: usize = 256;

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

pub fn parse(tokens: &[Token]) -> Result<Expr, ParseError> {
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.expr(0)?;
    let end = parser.peek();
    if end.kind != TokenKind::End {
        return Err(ParseError {
            column: end.column,
            message: format!("expected end of input, found {:?}", end.lexeme),
        });
    }
    Ok(expr)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &'a Token {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn advance(&mut self) -> &'a Token {
        let token = self.peek();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        token
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<(), ParseError> {
        let token = self.peek();
        if token.kind == kind {
            self.advance();
            Ok(())
        } else {
            let found = if token.kind == TokenKind::End {
                "end of input".to_string()
            } else {
                format!("{:?}", token.lexeme)
            };
            Err(ParseError {
                column: token.column,
                message: format!("expected {what}, found {found}"),
            })
        }
    }

    fn expr(&mut self, depth: usize) -> Result<Expr, ParseError> {
        let mut lhs = self.term(depth)?;
        loop {
            match self.peek().kind {
                TokenKind::Plus => {
                    self.advance();
                    let rhs = self.term(depth)?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                TokenKind::Minus => {
                    self.advance();
                    let rhs = self.term(depth)?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self, depth: usize) -> Result<Expr, ParseError> {
        let mut lhs = self.unary(depth)?;
        loop {
            match self.peek().kind {
                TokenKind::Star => {
                    self.advance();
                    let rhs = self.unary(depth)?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                TokenKind::Slash => {
                    self.advance();
                    let rhs = self.unary(depth)?;
                    lhs = Expr::DivRight(Box::new(lhs), Box::new(rhs));
                }
                TokenKind::Backslash => {
                    self.advance();
                    let rhs = self.unary(depth)?;
                    lhs = Expr::DivLeft(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self, depth: usize) -> Result<Expr, ParseError> {
        let token = self.peek();
        if depth >= MAX_DEPTH {
            return Err(ParseError {
                column: token.column,
                message: "expression too deeply nested".to_string(),
            });
        }
        if token.kind == TokenKind::Minus {
            self.advance();
            let inner = self.unary(depth + 1)?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.primary(depth)
    }

    fn primary(&mut self, depth: usize) -> Result<Expr, ParseError> {
        let token = self.advance();
        match &token.kind {
            TokenKind::Number(value) => Ok(Expr::Literal(*value)),
            TokenKind::Basis(index) => Ok(Expr::BasisElem(*index)),
            TokenKind::LParen => {
                let inner = self.expr(depth + 1)?;
                self.expect(TokenKind::RParen, "')'")?;
                Ok(inner)
            }
            TokenKind::Ident => {
                let func = Func::from_name(&token.lexeme).ok_or_else(|| ParseError {
                    column: token.column,
                    message: format!(
                        "unknown function {:?}: expected exp, conj, pnorm or norm",
                        token.lexeme
                    ),
                })?;
                self.expect(TokenKind::LParen, "'('")?;
                let arg = self.expr(depth + 1)?;
                self.expect(TokenKind::RParen, "')'")?;
                Ok(Expr::Call(func, Box::new(arg)))
            }
            TokenKind::End => Err(ParseError {
                column: token.column,
                message: "expected an expression, found end of input".to_string(),
            }),
            _ => Err(ParseError {
                column: token.column,
                message: format!("expected an expression, found {:?}", token.lexeme),
            }),
        }
    }
}
