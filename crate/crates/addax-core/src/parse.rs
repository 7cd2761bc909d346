//! Parser for algebra presentations like `Q[x,y]/(x*y, x^3, y^2 - x^2)`
//! and for standalone polynomial expressions.
//!
//! Grammar:
//!
//! ```text
//! presentation := IDENT '[' IDENT (',' IDENT)* ']' '/' '(' expr (',' expr)* ')'
//! expr         := ['-'] term (('+'|'-') term)*
//! term         := factor ('*' factor)*
//! factor       := atom ['^' INT]
//! atom         := INT ['/' INT] | IDENT | '(' expr ')'
//! ```
//!
//! `INT '/' INT` is a rational literal; the presentation-level `/` follows
//! the closing bracket of the variable list and never collides with it.

use crate::poly::{Poly, VarSet, MAX_EXPONENT};
use crate::rat::Rat;
use num::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{msg} at byte {pos}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError {
            pos,
            msg: msg.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Slash,
    Plus,
    Minus,
    Star,
    Caret,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '[' => {
                out.push((Tok::LBracket, i));
                i += 1;
            }
            ']' => {
                out.push((Tok::RBracket, i));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            ',' => {
                out.push((Tok::Comma, i));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, i));
                i += 1;
            }
            '+' => {
                out.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((Tok::Int(n), start));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
            }
            other => {
                return Err(ParseError::new(
                    i,
                    format!("unexpected character {other:?}"),
                ))
            }
        }
    }
    Ok(out)
}

/// Arithmetic expression over named symbols with rational literals.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Rat),
    Sym(String, usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Neg(Box<Expr>),
}

/// A parsed quotient-ring presentation.
#[derive(Debug, Clone)]
pub struct AlgebraPresentation {
    pub field: String,
    pub vars: VarSet,
    pub generators: Vec<Poly>,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            len: text.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<usize, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some((t, p)) if t == want => Ok(p),
            _ => Err(ParseError::new(pos, format!("expected {what}"))),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, usize), ParseError> {
        let pos = self.here();
        match self.bump() {
            Some((Tok::Ident(s), p)) => Ok((s, p)),
            _ => Err(ParseError::new(pos, format!("expected {what}"))),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            Expr::Neg(Box::new(self.parse_term()?))
        } else {
            self.parse_term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.parse_term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.parse_term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.parse_factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            acc = Expr::Mul(Box::new(acc), Box::new(self.parse_factor()?));
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.parse_atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let pos = self.here();
            match self.bump() {
                Some((Tok::Int(n), _)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| ParseError::new(pos, "exponent out of range"))?;
                    if e > MAX_EXPONENT {
                        return Err(ParseError::new(pos, "exponent exceeds 2^16"));
                    }
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => Err(ParseError::new(pos, "expected integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some((Tok::Int(n), _)) => {
                // A slash directly after an integer makes a rational literal.
                if matches!(self.peek(), Some(Tok::Slash)) {
                    let save = self.pos;
                    self.bump();
                    match self.bump() {
                        Some((Tok::Int(d), dpos)) => {
                            if num::Zero::is_zero(&d) {
                                return Err(ParseError::new(dpos, "zero denominator"));
                            }
                            Ok(Expr::Num(Rat::new(n, d)))
                        }
                        _ => {
                            self.pos = save;
                            Ok(Expr::Num(Rat::from_integer(n)))
                        }
                    }
                } else {
                    Ok(Expr::Num(Rat::from_integer(n)))
                }
            }
            Some((Tok::Ident(s), p)) => Ok(Expr::Sym(s, p)),
            Some((Tok::LParen, _)) => {
                let e = self.parse_expr()?;
                self.expect(Tok::RParen, "closing parenthesis")?;
                Ok(e)
            }
            _ => Err(ParseError::new(
                pos,
                "expected number, symbol or parenthesized expression",
            )),
        }
    }
}

/// Parses a standalone arithmetic expression.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text)?;
    let e = p.parse_expr()?;
    if !p.at_end() {
        return Err(ParseError::new(p.here(), "trailing input after expression"));
    }
    Ok(e)
}

/// Parses a presentation string into variables and generator polynomials.
pub fn parse_presentation(text: &str) -> Result<AlgebraPresentation, ParseError> {
    let mut p = Parser::new(text)?;
    let (field, _) = p.expect_ident("field identifier")?;
    p.expect(Tok::LBracket, "'['")?;
    let mut names = Vec::new();
    loop {
        let (name, pos) = p.expect_ident("variable name")?;
        if names.contains(&name) {
            return Err(ParseError::new(pos, format!("duplicate variable {name:?}")));
        }
        names.push(name);
        match p.bump() {
            Some((Tok::Comma, _)) => continue,
            Some((Tok::RBracket, _)) => break,
            other => {
                let pos = other.map_or(p.len, |(_, q)| q);
                return Err(ParseError::new(pos, "expected ',' or ']'"));
            }
        }
    }
    p.expect(Tok::Slash, "'/'")?;
    let open = p.expect(Tok::LParen, "'('")?;
    if matches!(p.peek(), Some(Tok::RParen)) {
        return Err(ParseError::new(open, "empty generator list"));
    }
    let mut exprs = Vec::new();
    loop {
        exprs.push(p.parse_expr()?);
        match p.bump() {
            Some((Tok::Comma, _)) => continue,
            Some((Tok::RParen, _)) => break,
            other => {
                let pos = other.map_or(p.len, |(_, q)| q);
                return Err(ParseError::new(pos, "expected ',' or ')'"));
            }
        }
    }
    if !p.at_end() {
        return Err(ParseError::new(
            p.here(),
            "trailing input after presentation",
        ));
    }
    let vars = VarSet::new(names).map_err(|e| ParseError::new(0, e.to_string()))?;
    let generators = exprs
        .iter()
        .map(|e| expr_to_poly(e, &vars))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlgebraPresentation {
        field,
        vars,
        generators,
    })
}

/// Evaluates an expression into a polynomial over the given variables.
pub fn expr_to_poly(expr: &Expr, vars: &VarSet) -> Result<Poly, ParseError> {
    match expr {
        Expr::Num(r) => Ok(Poly::constant(vars, r.clone())),
        Expr::Sym(name, pos) => match vars.index_of(name) {
            Some(i) => Ok(Poly::var(vars, i)),
            None => Err(ParseError::new(*pos, format!("unknown symbol {name:?}"))),
        },
        Expr::Add(a, b) => Ok(expr_to_poly(a, vars)?.add(&expr_to_poly(b, vars)?)),
        Expr::Sub(a, b) => Ok(expr_to_poly(a, vars)?.sub(&expr_to_poly(b, vars)?)),
        Expr::Mul(a, b) => Ok(expr_to_poly(a, vars)?.mul(&expr_to_poly(b, vars)?)),
        Expr::Pow(a, e) => Ok(expr_to_poly(a, vars)?.pow(*e)),
        Expr::Neg(a) => Ok(expr_to_poly(a, vars)?.neg()),
    }
}

/// Splits on top-level commas, respecting bracket nesting; used for
/// `--U "[0,1,0],[0,0,1]"` style vector lists.
pub fn split_top_level(text: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '[' | '(' => {
                depth += 1;
                cur.push(c);
            }
            ']' | ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' if depth == 0 => {
                parts.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        parts.push(cur.trim().to_string());
    }
    parts
}
