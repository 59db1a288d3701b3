//! A small arithmetic expression language for Lagrangians L(t, u, v, w):
//! parser, evaluator, printer, and symbolic differentiation.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-'? atom ('^' '-'? number)?
//! atom   := number | ident | '(' expr ')'
//! ```
//!
//! Identifiers `t`, `u`, `v`, `w` are the Lagrangian variables; any other
//! identifier is a named parameter. Exponents are numeric literals (possibly
//! negative or fractional), `^` is non-associative, and `-v^2` parses as
//! `-(v^2)`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// The four Lagrangian variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    T,
    U,
    V,
    W,
}

impl Var {
    fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::U => "u",
            Var::V => "v",
            Var::W => "w",
        }
    }
}

/// Expression tree. `Pow` keeps its exponent as a numeric literal so
/// differentiation stays closed-form.
#[derive(Debug, Clone, PartialEq)]
pub enum Ast {
    Num(f64),
    Var(Var),
    Param(String),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, f64),
}

/// Variable and parameter bindings for evaluation.
#[derive(Debug, Clone, Copy)]
pub struct Bindings<'a> {
    pub t: f64,
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub params: &'a HashMap<String, f64>,
}

impl<'a> Bindings<'a> {
    pub fn new(t: f64, u: f64, v: f64, w: f64, params: &'a HashMap<String, f64>) -> Self {
        Bindings { t, u, v, w, params }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Parse { offset: self.pos, expected: expected.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            self.pos += 1;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
        }
        // scientific suffix
        if self.pos < self.src.len() && (self.src[self.pos] | 0x20) == b'e' {
            let mark = self.pos;
            self.pos += 1;
            if self.pos < self.src.len() && (self.src[self.pos] == b'+' || self.src[self.pos] == b'-') {
                self.pos += 1;
            }
            if self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
            } else {
                self.pos = mark; // not an exponent, e.g. an identifier follows
            }
        }
        if self.pos == start {
            return self.err("a number");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<f64>().map_err(|_| Error::Parse {
            offset: start,
            expected: "a valid numeric literal".to_string(),
        })
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err("')'");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => Ok(Ast::Num(self.number()?)),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.ident();
                Ok(match name.as_str() {
                    "t" => Ast::Var(Var::T),
                    "u" => Ast::Var(Var::U),
                    "v" => Ast::Var(Var::V),
                    "w" => Ast::Var(Var::W),
                    _ => Ast::Param(name),
                })
            }
            _ => self.err("a number, an identifier, or '('"),
        }
    }

    fn factor(&mut self) -> Result<Ast> {
        let negated = self.eat(b'-');
        let base = self.atom()?;
        let node = if self.eat(b'^') {
            let neg_exp = self.eat(b'-');
            let mut e = self.number()?;
            if neg_exp {
                e = -e;
            }
            Ast::Pow(Box::new(base), e)
        } else {
            base
        };
        // unary minus binds looser than '^': -v^2 is -(v^2)
        Ok(if negated { Ast::Neg(Box::new(node)) } else { node })
    }

    fn term(&mut self) -> Result<Ast> {
        let mut node = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    node = Ast::Mul(Box::new(node), Box::new(self.factor()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    node = Ast::Div(Box::new(node), Box::new(self.factor()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut node = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    node = Ast::Add(Box::new(node), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    node = Ast::Sub(Box::new(node), Box::new(self.term()?));
                }
                _ => return Ok(node),
            }
        }
    }
}

/// Parse an expression in the grammar above.
pub fn parse(source: &str) -> Result<Ast> {
    let mut p = Parser { src: source.as_bytes(), pos: 0 };
    let ast = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("end of input");
    }
    Ok(ast)
}

/// Evaluate an expression under the given bindings.
pub fn eval_ast(ast: &Ast, env: &Bindings<'_>) -> Result<f64> {
    Ok(match ast {
        Ast::Num(x) => *x,
        Ast::Var(Var::T) => env.t,
        Ast::Var(Var::U) => env.u,
        Ast::Var(Var::V) => env.v,
        Ast::Var(Var::W) => env.w,
        Ast::Param(name) => *env
            .params
            .get(name)
            .ok_or_else(|| Error::Eval(format!("unbound parameter '{name}'")))?,
        Ast::Neg(a) => -eval_ast(a, env)?,
        Ast::Add(a, b) => eval_ast(a, env)? + eval_ast(b, env)?,
        Ast::Sub(a, b) => eval_ast(a, env)? - eval_ast(b, env)?,
        Ast::Mul(a, b) => eval_ast(a, env)? * eval_ast(b, env)?,
        Ast::Div(a, b) => {
            let d = eval_ast(b, env)?;
            if d == 0.0 {
                return Err(Error::Eval("division by zero".into()));
            }
            eval_ast(a, env)? / d
        }
        Ast::Pow(a, e) => {
            let base = eval_ast(a, env)?;
            if base == 0.0 && *e < 0.0 {
                return Err(Error::Eval("zero raised to a negative power".into()));
            }
            base.powf(*e)
        }
    })
}

fn num(x: f64) -> Ast {
    Ast::Num(x)
}

// Local simplifications: constant folding plus identity/zero propagation.
// No CAS-style rewriting. Guards compare floats because float literal
// patterns are deprecated.
#[allow(clippy::redundant_guards)]
fn fold(ast: Ast) -> Ast {
    match ast {
        Ast::Neg(a) => match *a {
            Ast::Num(x) => num(-x),
            Ast::Neg(inner) => *inner,
            other => Ast::Neg(Box::new(other)),
        },
        Ast::Add(a, b) => match (*a, *b) {
            (Ast::Num(x), Ast::Num(y)) => num(x + y),
            (Ast::Num(x), rhs) if x == 0.0 => rhs,
            (lhs, Ast::Num(y)) if y == 0.0 => lhs,
            (lhs, rhs) => Ast::Add(Box::new(lhs), Box::new(rhs)),
        },
        Ast::Sub(a, b) => match (*a, *b) {
            (Ast::Num(x), Ast::Num(y)) => num(x - y),
            (lhs, Ast::Num(y)) if y == 0.0 => lhs,
            (Ast::Num(x), rhs) if x == 0.0 => fold(Ast::Neg(Box::new(rhs))),
            (lhs, rhs) => Ast::Sub(Box::new(lhs), Box::new(rhs)),
        },
        Ast::Mul(a, b) => match (*a, *b) {
            (Ast::Num(x), Ast::Num(y)) => num(x * y),
            (Ast::Num(x), _) | (_, Ast::Num(x)) if x == 0.0 => num(0.0),
            (Ast::Num(x), rhs) if x == 1.0 => rhs,
            (lhs, Ast::Num(y)) if y == 1.0 => lhs,
            // merge nested numeric factors so repeated differentiation
            // yields c*x instead of a*(b*x)
            (Ast::Num(x), Ast::Mul(b1, b2)) => match *b1 {
                Ast::Num(y) => fold(Ast::Mul(Box::new(num(x * y)), b2)),
                other => Ast::Mul(Box::new(num(x)), Box::new(Ast::Mul(Box::new(other), b2))),
            },
            (lhs, rhs) => Ast::Mul(Box::new(lhs), Box::new(rhs)),
        },
        Ast::Div(a, b) => match (*a, *b) {
            (Ast::Num(x), Ast::Num(y)) if y != 0.0 => num(x / y),
            (Ast::Num(x), _) if x == 0.0 => num(0.0),
            (lhs, Ast::Num(y)) if y == 1.0 => lhs,
            (lhs, rhs) => Ast::Div(Box::new(lhs), Box::new(rhs)),
        },
        Ast::Pow(a, e) => match (*a, e) {
            (Ast::Num(x), e) if !(x == 0.0 && e < 0.0) => num(x.powf(e)),
            (base, e) if e == 1.0 => base,
            (_, e) if e == 0.0 => num(1.0),
            (base, e) => Ast::Pow(Box::new(base), e),
        },
        other => other,
    }
}

/// Symbolic derivative with respect to one of the four variables, with
/// constant folding of numeric subtrees. `d(x^c)/dx = c x^(c-1) x'`.
pub fn differentiate(ast: &Ast, var: Var) -> Ast {
    match ast {
        Ast::Num(_) | Ast::Param(_) => num(0.0),
        Ast::Var(v) => num(if *v == var { 1.0 } else { 0.0 }),
        Ast::Neg(a) => fold(Ast::Neg(Box::new(differentiate(a, var)))),
        Ast::Add(a, b) => fold(Ast::Add(
            Box::new(differentiate(a, var)),
            Box::new(differentiate(b, var)),
        )),
        Ast::Sub(a, b) => fold(Ast::Sub(
            Box::new(differentiate(a, var)),
            Box::new(differentiate(b, var)),
        )),
        Ast::Mul(a, b) => {
            let left = fold(Ast::Mul(Box::new(differentiate(a, var)), b.clone()));
            let right = fold(Ast::Mul(a.clone(), Box::new(differentiate(b, var))));
            fold(Ast::Add(Box::new(left), Box::new(right)))
        }
        Ast::Div(a, b) => {
            // (a/b)' = a'/b - a b' / b^2
            let first = fold(Ast::Div(Box::new(differentiate(a, var)), b.clone()));
            let b2 = fold(Ast::Pow(b.clone(), 2.0));
            let second = fold(Ast::Div(
                Box::new(fold(Ast::Mul(a.clone(), Box::new(differentiate(b, var))))),
                Box::new(b2),
            ));
            fold(Ast::Sub(Box::new(first), Box::new(second)))
        }
        Ast::Pow(a, e) => {
            let lowered = fold(Ast::Pow(a.clone(), e - 1.0));
            let scaled = fold(Ast::Mul(Box::new(num(*e)), Box::new(lowered)));
            fold(Ast::Mul(Box::new(scaled), Box::new(differentiate(a, var))))
        }
    }
}

// Printer with minimal parentheses; parse(print(ast)) == ast after folding.
fn precedence(ast: &Ast) -> u8 {
    match ast {
        Ast::Add(..) | Ast::Sub(..) => 1,
        Ast::Mul(..) | Ast::Div(..) => 2,
        Ast::Neg(..) => 3,
        Ast::Pow(..) => 4,
        Ast::Num(_) | Ast::Var(_) | Ast::Param(_) => 5,
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, child: &Ast, min_prec: u8) -> fmt::Result {
    if precedence(child) < min_prec {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

fn write_number(f: &mut fmt::Formatter<'_>, x: f64) -> fmt::Result {
    if x < 0.0 || x.is_sign_negative() {
        write!(f, "({x})")
    } else {
        write!(f, "{x}")
    }
}

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ast::Num(x) => write_number(f, *x),
            Ast::Var(v) => write!(f, "{}", v.name()),
            Ast::Param(p) => write!(f, "{p}"),
            Ast::Neg(a) => {
                // a nested negation must be parenthesized: the grammar
                // allows one unary minus per factor
                write!(f, "-")?;
                write_child(f, a, 4)
            }
            Ast::Add(a, b) => {
                write_child(f, a, 1)?;
                write!(f, "+")?;
                write_child(f, b, 2)
            }
            Ast::Sub(a, b) => {
                write_child(f, a, 1)?;
                write!(f, "-")?;
                write_child(f, b, 2)
            }
            Ast::Mul(a, b) => {
                write_child(f, a, 2)?;
                write!(f, "*")?;
                write_child(f, b, 3)
            }
            Ast::Div(a, b) => {
                write_child(f, a, 2)?;
                write!(f, "/")?;
                write_child(f, b, 3)
            }
            Ast::Pow(a, e) => {
                write_child(f, a, 5)?;
                if *e < 0.0 {
                    write!(f, "^-{}", -e)
                } else {
                    write!(f, "^{e}")
                }
            }
        }
    }
}
