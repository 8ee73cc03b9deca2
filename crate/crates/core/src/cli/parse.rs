//! Input language: polynomials, 1-forms `p*d(x) + ...`, points `(a, b)` and ideals `[f, g]`.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' integer)?
//! atom  := integer | ident | 'd' '(' ident ')' | '(' expr ')'
//! ```
//!
//! `d(...)` is only recognised in forms, and `/` only divides by nonzero constants, which
//! is how `p/q` literals are read.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{Ctx, Monomial, Polynomial, Rational, VarContext};
use crate::error::{Error, Result};
use crate::foliation::OneForm;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push(Token {
                tok: Tok::Num(s.parse().expect("digits")),
                line: l,
                column: col,
            });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push(Token {
                tok: Tok::Ident(s),
                line: l,
                column: col,
            });
        } else if "+-*/^()[],".contains(c) {
            chars.next();
            column += 1;
            out.push(Token {
                tok: Tok::Sym(c),
                line: l,
                column: col,
            });
        } else {
            return Err(err(l, col, format!("unexpected character `{c}`")));
        }
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    ctx: Ctx,
    differentials: bool,
}

impl Parser {
    fn new(src: &str, ctx: &Ctx, differentials: bool) -> Result<Self> {
        Ok(Parser {
            toks: tokenize(src)?,
            pos: 0,
            ctx: ctx.clone(),
            differentials,
        })
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        let t = self.peek();
        Err(err(t.line, t.column, message))
    }

    fn describe(t: &Tok) -> String {
        match t {
            Tok::Num(n) => format!("`{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek().tok == Tok::Sym(c) {
            self.next();
            Ok(())
        } else {
            self.fail(format!("expected `{c}`, found {}", Self::describe(&self.peek().tok)))
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().tok == Tok::End {
            Ok(())
        } else {
            self.fail(format!("unexpected {}", Self::describe(&self.peek().tok)))
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Sym('+') => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Tok::Sym('-') => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Sym('*') => {
                    self.next();
                    acc = &acc * &self.unary()?;
                }
                Tok::Sym('/') => {
                    self.next();
                    let (line, column) = (self.peek().line, self.peek().column);
                    let d = self.unary()?;
                    match d.constant_value() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                        Some(_) => return Err(err(line, column, "division by zero")),
                        None => return Err(err(line, column, "can only divide by a constant")),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.peek().tok == Tok::Sym('-') {
            self.next();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Sym('^') {
            return Ok(base);
        }
        self.next();
        match self.peek().tok.clone() {
            Tok::Num(n) => {
                let Some(e) = n.to_u32() else {
                    return self.fail("exponent too large");
                };
                self.next();
                Ok(base.pow(e))
            }
            t => self.fail(format!("expected a nonnegative integer exponent, found {}", Self::describe(&t))),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Num(n) => {
                self.next();
                Ok(Polynomial::constant(&self.ctx, Rational::from_integer(n)))
            }
            Tok::Ident(name) => {
                if self.differentials && name == "d" && *self.peek_at(1) == Tok::Sym('(') {
                    self.next();
                    self.next();
                    let inner = self.next();
                    let Tok::Ident(v) = inner.tok else {
                        return Err(err(inner.line, inner.column, "expected a variable inside d(...)"));
                    };
                    self.expect(')')?;
                    return match self.ctx.index_of(&diff_name(&v)) {
                        Some(i) => Ok(Polynomial::var(&self.ctx, i)),
                        None => Err(err(inner.line, inner.column, format!("unknown variable `{v}`"))),
                    };
                }
                self.next();
                match self.ctx.index_of(&name) {
                    Some(i) => Ok(Polynomial::var(&self.ctx, i)),
                    None => Err(err(t.line, t.column, format!("unknown variable `{name}`"))),
                }
            }
            Tok::Sym('(') => {
                self.next();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            other => self.fail(format!("expected a number, variable or `(`, found {}", Self::describe(&other))),
        }
    }
}

fn diff_name(v: &str) -> String {
    format!("d({v})")
}

pub fn parse_polynomial(src: &str, ctx: &Ctx) -> Result<Polynomial> {
    let mut p = Parser::new(src, ctx, false)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// `Σ b_i*d(x_i)`; every term must carry exactly one differential.
pub fn parse_form(src: &str, ctx: &Ctx) -> Result<OneForm> {
    let n = ctx.len();
    let mut names: Vec<String> = ctx.names().to_vec();
    names.extend(ctx.names().iter().map(|v| diff_name(v)));
    let wide = VarContext::new(&names)?;
    let mut p = Parser::new(src, &wide, true)?;
    let e = p.expr()?;
    p.finish()?;
    let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); n];
    for (m, c) in e.terms() {
        let e = m.exponents();
        let ds: Vec<usize> = (0..n).filter(|&i| e[n + i] > 0).collect();
        if ds.len() != 1 || e[n + ds[0]] != 1 {
            let shown = Polynomial::monomial(&wide, m.clone(), c.clone());
            return Err(err(1, 1, format!("term `{shown}` is not linear in the differentials")));
        }
        buckets[ds[0]].push((Monomial::from_exponents(e[..n].to_vec()), c.clone()));
    }
    let coeffs = buckets.into_iter().map(|t| Polynomial::from_terms(ctx, t)).collect();
    OneForm::new(ctx, coeffs)
}

/// `[f, g, ...]`; the empty list is allowed.
pub fn parse_ideal(src: &str, ctx: &Ctx) -> Result<Vec<Polynomial>> {
    let mut p = Parser::new(src, ctx, false)?;
    p.expect('[')?;
    let mut out = Vec::new();
    if p.peek().tok != Tok::Sym(']') {
        out.push(p.expr()?);
        while p.peek().tok == Tok::Sym(',') {
            p.next();
            out.push(p.expr()?);
        }
    }
    p.expect(']')?;
    p.finish()?;
    Ok(out)
}

/// `(a, b, ...)` with integer or `p/q` entries.
pub fn parse_point(src: &str) -> Result<Vec<Rational>> {
    let empty = VarContext::new::<&str>(&[])?;
    let mut p = Parser::new(src, &empty, false)?;
    p.expect('(')?;
    let mut out = Vec::new();
    loop {
        let (line, column) = (p.peek().line, p.peek().column);
        let e = p.expr()?;
        match e.constant_value() {
            Some(c) => out.push(c),
            None => return Err(err(line, column, "point coordinates must be rational numbers")),
        }
        if p.peek().tok == Tok::Sym(',') {
            p.next();
        } else {
            break;
        }
    }
    p.expect(')')?;
    p.finish()?;
    Ok(out)
}

/// Variables of the given inputs: differentials first, in order of appearance, then the
/// remaining identifiers. The flag marks inputs that are forms.
pub fn infer_variables(inputs: &[(&str, bool)]) -> Result<Vec<String>> {
    let mut diffs: Vec<String> = Vec::new();
    let mut others: Vec<String> = Vec::new();
    for (src, is_form) in inputs {
        let toks = tokenize(src)?;
        let mut k = 0;
        while k < toks.len() {
            if let Tok::Ident(name) = &toks[k].tok {
                let is_diff = *is_form && name == "d" && toks.get(k + 1).map(|t| &t.tok) == Some(&Tok::Sym('('));
                if is_diff {
                    if let Some(Tok::Ident(v)) = toks.get(k + 2).map(|t| &t.tok) {
                        if !diffs.contains(v) {
                            diffs.push(v.clone());
                        }
                        k += 3;
                        continue;
                    }
                } else if !others.contains(name) {
                    others.push(name.clone());
                }
            }
            k += 1;
        }
    }
    for o in others {
        if !diffs.contains(&o) {
            diffs.push(o);
        }
    }
    Ok(diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn ctx() -> Ctx {
        VarContext::new(&["x", "y"]).unwrap()
    }

    #[test]
    fn polynomials_round_trip() {
        let c = ctx();
        let p = parse_polynomial("-1/2*x^2 + (y - 1)*(y + 1)/2 + 7/2", &c).unwrap();
        assert_eq!(p.to_string(), "-1/2*x^2 + 1/2*y^2 + 3");
        assert_eq!(parse_polynomial(&p.to_string(), &c).unwrap(), p);
        assert_eq!(parse_polynomial("2*-x", &c).unwrap().to_string(), "-2*x");
    }

    #[test]
    fn forms() {
        let c = VarContext::new(&["x", "v"]).unwrap();
        let w = parse_form("(x^2*v^2 - x^2*v)*d(x) + (-x^3)*d(v)", &c).unwrap();
        assert_eq!(w.to_string(), "(x^2*v^2 - x^2*v)*d(x) - x^3*d(v)");
        assert_eq!(parse_form(&w.to_string(), &c).unwrap(), w);
        assert!(matches!(parse_form("x*d(x)*d(v)", &c), Err(Error::Parse { .. })));
        assert!(matches!(parse_form("x + d(v)", &c), Err(Error::Parse { .. })));
    }

    #[test]
    fn errors_carry_positions() {
        let c = ctx();
        assert_eq!(
            parse_polynomial("x +\n  z", &c),
            Err(Error::Parse {
                line: 2,
                column: 3,
                message: "unknown variable `z`".into()
            })
        );
        assert!(matches!(parse_polynomial("x/y", &c), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(parse_polynomial("x/0", &c), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x^-1", &c), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x $ y", &c), Err(Error::Parse { column: 3, .. })));
    }

    #[test]
    fn points_and_ideals() {
        assert_eq!(parse_point("(0, -1/2, 3)").unwrap(), vec![rat(0), ratio(-1, 2), rat(3)]);
        assert!(parse_point("(x)").is_err());
        let gens = parse_ideal("[x*y, y^2]", &ctx()).unwrap();
        assert_eq!(gens.len(), 2);
        assert!(parse_ideal("[]", &ctx()).unwrap().is_empty());
    }

    #[test]
    fn variable_inference() {
        let v = infer_variables(&[("(x^2*v^2 - x^2*v)*d(x) + (-x^3)*d(v)", true)]).unwrap();
        assert_eq!(v, vec!["x", "v"]);
        let v = infer_variables(&[("y*d(x)", true), ("[x*y, z]", false)]).unwrap();
        assert_eq!(v, vec!["x", "y", "z"]);
    }
}
