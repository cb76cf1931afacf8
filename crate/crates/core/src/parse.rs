//! Input language: polynomial and rational-function expressions with
//! integer literals, `+ - * / ^` and parentheses, plus the line-oriented
//! instance and parametrization files built on top of it.
//!
//! Juxtaposition of a number and a variable or parenthesis (`12y`, `2(x+1)`)
//! is read as multiplication.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{fmt_multi, MultiPoly, RatFunc, UniPoly};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

/// Parsed expression tree; `col` fields are 1-based columns for messages.
#[derive(Clone, Debug)]
pub enum Expr {
    Num(BigInt),
    Var(String, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn tokenize(src: &str, line: usize, col0: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                return Err(err(line, col0 + i, "decimal literals are not supported; write a fraction"));
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token { tok: Tok::Num(digits.parse().expect("digits")), col });
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), col });
        } else if "+-*/^()".contains(c) {
            out.push(Token { tok: Tok::Op(c), col });
            i += 1;
        } else {
            return Err(err(line, col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.col).unwrap_or(self.end_col)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Op('/')) {
                let col = self.col();
                self.pos += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), col);
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Op('('))) {
                // juxtaposition
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let col = self.col();
            match self.toks.get(self.pos).map(|t| t.tok.clone()) {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| err(self.line, col, "exponent too large"))?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => Err(err(self.line, col, "expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let col = self.col();
        match self.toks.get(self.pos).map(|t| t.tok.clone()) {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Var(name, col))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(err(self.line, self.col(), "expected ')'"));
                }
                Ok(e)
            }
            Some(Tok::Op(c)) => Err(err(self.line, col, format!("unexpected '{c}'"))),
            None => Err(err(self.line, col, "unexpected end of input")),
        }
    }
}

/// Parses one expression. `line` and `col0` (1-based) locate `src` inside
/// a larger file for error messages.
pub fn parse_expr_at(src: &str, line: usize, col0: usize) -> Result<Expr> {
    let toks = tokenize(src, line, col0)?;
    let end_col = col0 + src.chars().count();
    let mut p = Parser { toks, pos: 0, line, end_col };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(err(line, p.col(), "unexpected trailing input"));
    }
    Ok(e)
}

pub fn parse_expr(src: &str) -> Result<Expr> {
    parse_expr_at(src, 1, 1)
}

/// Evaluates to a polynomial in the named variables. Division is allowed
/// by nonzero constants only.
pub fn eval_poly(e: &Expr, vars: &[&str], line: usize) -> Result<MultiPoly<Rational>> {
    let n = vars.len();
    let rec = |x: &Expr| eval_poly(x, vars, line);
    Ok(match e {
        Expr::Num(v) => MultiPoly::constant(n, Rational::from_integer(v.clone())),
        Expr::Var(name, col) => match vars.iter().position(|v| v == name) {
            Some(i) => MultiPoly::var(n, i),
            None => {
                return Err(err(line, *col, format!("unknown variable '{name}' (expected one of {})", vars.join(", "))))
            }
        },
        Expr::Neg(a) => -&rec(a)?,
        Expr::Add(a, b) => &rec(a)? + &rec(b)?,
        Expr::Sub(a, b) => &rec(a)? - &rec(b)?,
        Expr::Mul(a, b) => &rec(a)? * &rec(b)?,
        Expr::Pow(a, k) => rec(a)?.pow(*k),
        Expr::Div(a, b, col) => {
            let d = rec(b)?;
            match d.constant_value() {
                Some(c) if !c.is_zero() => rec(a)?.scale(&c.recip()),
                Some(_) => return Err(err(line, *col, "division by zero")),
                None => return Err(err(line, *col, "division by a non-constant is not allowed here")),
            }
        }
    })
}

/// Evaluates to a rational function in one variable.
pub fn eval_ratfunc(e: &Expr, var: &str, line: usize) -> Result<RatFunc<Rational>> {
    let rec = |x: &Expr| eval_ratfunc(x, var, line);
    Ok(match e {
        Expr::Num(v) => RatFunc::constant(Rational::from_integer(v.clone())),
        Expr::Var(name, col) => {
            if name != var {
                return Err(err(line, *col, format!("unknown variable '{name}' (expected {var})")));
            }
            RatFunc::x()
        }
        Expr::Neg(a) => -&rec(a)?,
        Expr::Add(a, b) => &rec(a)? + &rec(b)?,
        Expr::Sub(a, b) => &rec(a)? - &rec(b)?,
        Expr::Mul(a, b) => &rec(a)? * &rec(b)?,
        Expr::Pow(a, k) => {
            let base = rec(a)?;
            let mut acc = RatFunc::constant(Rational::one());
            for _ in 0..*k {
                acc = &acc * &base;
            }
            acc
        }
        Expr::Div(a, b, col) => {
            let d = rec(b)?;
            if d.is_zero() {
                return Err(err(line, *col, "division by zero"));
            }
            &rec(a)? / &d
        }
    })
}

/// Parses a polynomial in the given variables.
pub fn parse_poly(src: &str, vars: &[&str]) -> Result<MultiPoly<Rational>> {
    eval_poly(&parse_expr(src)?, vars, 1)
}

/// Parses a rational function in `var`.
pub fn parse_ratfunc(src: &str, var: &str) -> Result<RatFunc<Rational>> {
    eval_ratfunc(&parse_expr(src)?, var, 1)
}

/// Lines that carry content: `(line number, column of first character, text)`
/// with comments (`#` to end of line) and blank lines removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        let col = body.len() - trimmed.len() + 1;
        let trimmed = trimmed.trim_end();
        (!trimmed.is_empty()).then_some((i + 1, col, trimmed))
    })
}

/// Splits `key <sep> value` and returns the value with its column.
fn after_key<'a>(line: &'a str, col: usize, key: &str, seps: &[char]) -> Option<(&'a str, usize)> {
    let rest = line.strip_prefix(key)?;
    let trimmed = rest.trim_start();
    let sep = trimmed.chars().next()?;
    if !seps.contains(&sep) {
        return None;
    }
    let value = &trimmed[sep.len_utf8()..];
    let offset = line.len() - value.len();
    Some((value, col + offset))
}

/// Reads an instance file: a line `F: <polynomial in y, z>`, where `y`
/// stands for y(x) and `z` for y(x+1). Returns the polynomial in `(y, z)`.
pub fn parse_instance(text: &str) -> Result<MultiPoly<Rational>> {
    let mut found = None;
    for (line, col, body) in content_lines(text) {
        match after_key(body, col, "F", &[':', '=']) {
            Some((value, vcol)) => {
                if found.is_some() {
                    return Err(err(line, col, "equation given twice"));
                }
                let e = parse_expr_at(value, line, vcol)?;
                found = Some((eval_poly(&e, &["y", "z"], line)?, line, col));
            }
            None => return Err(err(line, col, "expected 'F: <polynomial in y, z>'")),
        }
    }
    let Some((f, line, col)) = found else { return Err(err(1, 1, "missing 'F: <polynomial in y, z>' line")) };
    if !f.involves(1) {
        return Err(err(line, col, "equation does not involve z = y(x+1)"));
    }
    Ok(f)
}

/// Canonical text form of an instance; [`parse_instance`] inverts it.
pub fn format_instance(f: &MultiPoly<Rational>) -> String {
    format!("F: {}\n", fmt_multi(f, &["y", "z"]))
}

/// Reads a parametrization file with lines `p1 = <expr in t>` and
/// `p2 = <expr in t>`.
pub fn parse_parametrization(text: &str) -> Result<(RatFunc<Rational>, RatFunc<Rational>)> {
    let mut p1 = None;
    let mut p2 = None;
    for (line, col, body) in content_lines(text) {
        let (slot, value) = if let Some(v) = after_key(body, col, "p1", &['=', ':']) {
            (&mut p1, v)
        } else if let Some(v) = after_key(body, col, "p2", &['=', ':']) {
            (&mut p2, v)
        } else {
            return Err(err(line, col, "expected 'p1 = <expr in t>' or 'p2 = <expr in t>'"));
        };
        if slot.is_some() {
            return Err(err(line, col, "component given twice"));
        }
        let e = parse_expr_at(value.0, line, value.1)?;
        *slot = Some(eval_ratfunc(&e, "t", line)?);
    }
    match (p1, p2) {
        (Some(a), Some(b)) => Ok((a, b)),
        (None, _) => Err(err(1, 1, "missing p1")),
        (_, None) => Err(err(1, 1, "missing p2")),
    }
}

/// Canonical text form of a parametrization.
pub fn format_parametrization(p1: &RatFunc<Rational>, p2: &RatFunc<Rational>) -> String {
    format!("p1 = {}\np2 = {}\n", p1.fmt_var("t"), p2.fmt_var("t"))
}

/// Rational function in `x` from text, e.g. a candidate solution.
pub fn parse_solution(text: &str) -> Result<RatFunc<Rational>> {
    parse_ratfunc(text.trim(), "x")
}

/// Integer-coefficient univariate polynomial from text in `var`.
pub fn parse_uni(src: &str, var: &str) -> Result<UniPoly<Rational>> {
    let p = parse_poly(src, &[var])?;
    Ok(p.to_uni(0).expect("single variable"))
}
