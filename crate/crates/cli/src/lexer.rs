//! Tokenizer for the expression language.
//!
//! Longest-match lexing. Numbers are decimal with optional fraction and
//! exponent, so `2e2` is the number 200, not an implicit product; the
//! grammar requires an explicit `*` between a coefficient and a basis
//! element. Columns are 1-based character offsets.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Number(f64),
    /// e1..e4, case-insensitive.
    Basis(u8),
    Plus,
    Minus,
    Star,
    Slash,
    Backslash,
    LParen,
    RParen,
    /// A function name such as `exp`; validated by the parser.
    Ident,
    End,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LexError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for LexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for LexError {}

pub fn tokenize(input: &str) -> Result<Vec<Token>, LexError> {
    let chars: Vec<char> = input.chars().collect();
    let mut tokens = Vec::new();
    let mut pos = 0;

    while pos < chars.len() {
        let c = chars[pos];
        let column = pos + 1;
        match c {
            c if c.is_whitespace() => {
                pos += 1;
            }
            '+' | '-' | '*' | '/' | '\\' | '(' | ')' => {
                let kind = match c {
                    '+' => TokenKind::Plus,
                    '-' => TokenKind::Minus,
                    '*' => TokenKind::Star,
                    '/' => TokenKind::Slash,
                    '\\' => TokenKind::Backslash,
                    '(' => TokenKind::LParen,
                    _ => TokenKind::RParen,
                };
                tokens.push(Token {
                    kind,
                    lexeme: c.to_string(),
                    column,
                });
                pos += 1;
            }
            c if c.is_ascii_digit() => {
                let (token, next) = lex_number(&chars, pos)?;
                tokens.push(token);
                pos = next;
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = pos;
                while pos < chars.len() && (chars[pos].is_alphanumeric() || chars[pos] == '_') {
                    pos += 1;
                }
                let lexeme: String = chars[start..pos].iter().collect();
                let kind = classify_word(&lexeme);
                tokens.push(Token {
                    kind,
                    lexeme,
                    column,
                });
            }
            other => {
                return Err(LexError {
                    column,
                    message: format!("unexpected character {other:?}"),
                });
            }
        }
    }

    tokens.push(Token {
        kind: TokenKind::End,
        lexeme: String::new(),
        column: chars.len() + 1,
    });
    Ok(tokens)
}

/// e1..e4 in any case is a basis element; anything else alphabetic is an
/// identifier.
fn classify_word(word: &str) -> TokenKind {
    let lower = word.to_ascii_lowercase();
    match lower.as_str() {
        "e1" => TokenKind::Basis(1),
        "e2" => TokenKind::Basis(2),
        "e3" => TokenKind::Basis(3),
        "e4" => TokenKind::Basis(4),
        _ => TokenKind::Ident,
    }
}

fn lex_number(chars: &[char], start: usize) -> Result<(Token, usize), LexError> {
    let mut pos = start;
    while pos < chars.len() && chars[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos < chars.len() && chars[pos] == '.' {
        if pos + 1 < chars.len() && chars[pos + 1].is_ascii_digit() {
            pos += 1;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
        } else {
            return Err(LexError {
                column: pos + 1,
                message: "malformed number: expected digits after '.'".to_string(),
            });
        }
    }
    // Consume an exponent only when it is complete; otherwise the 'e' is
    // left for identifier lexing.
    if pos < chars.len() && (chars[pos] == 'e' || chars[pos] == 'E') {
        let mut probe = pos + 1;
        if probe < chars.len() && (chars[probe] == '+' || chars[probe] == '-') {
            probe += 1;
        }
        if probe < chars.len() && chars[probe].is_ascii_digit() {
            pos = probe;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
        }
    }

    let lexeme: String = chars[start..pos].iter().collect();
    let value: f64 = lexeme.parse().map_err(|_| LexError {
        column: start + 1,
        message: format!("malformed number {lexeme:?}"),
    })?;
    if !value.is_finite() {
        return Err(LexError {
            column: start + 1,
            message: format!("number out of range: {lexeme}"),
        });
    }
    Ok((
        Token {
            kind: TokenKind::Number(value),
            lexeme,
            column: start + 1,
        },
        pos,
    ))
}
