//! Parser for the canonical text form: integers, symbols, `+ - * / ^`
//! (integer exponents, possibly negative) and parentheses. Juxtaposed
//! factors multiply.

use std::sync::Arc;

use num_bigint::BigInt;

use super::ext::{ExtDescriptor, ExtElem};
use super::poly::Var;
use super::ratfunc::RatFunc;
use super::unipoly::UniPoly;
use super::{Field, FieldElem, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Sym(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut k = 0;
    while k < cs.len() {
        let c = cs[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let st = k;
            while k < cs.len() && cs[k].is_ascii_digit() {
                k += 1;
            }
            let t: String = cs[st..k].iter().collect();
            out.push(Tok::Int(t.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = k;
            while k < cs.len() && (cs[k].is_ascii_alphanumeric() || cs[k] == '_') {
                k += 1;
            }
            out.push(Tok::Sym(cs[st..k].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            k += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
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
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if matches!(
                self.peek(),
                Some(Tok::Sym(_)) | Some(Tok::Int(_)) | Some(Tok::Op('('))
            ) {
                // Juxtaposition, as in `2 * L^-1 Y X`.
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
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let paren = !neg && self.eat('(');
        let neg = neg || (paren && self.eat('-'));
        let e = match self.toks.get(self.pos) {
            Some(Tok::Int(v)) => {
                let v: i64 = v
                    .try_into()
                    .map_err(|_| Error::Parse("exponent too large".into()))?;
                self.pos += 1;
                v
            }
            _ => return Err(Error::Parse("expected an integer exponent".into())),
        };
        if paren && !self.eat(')') {
            return Err(Error::Parse("expected ')' after exponent".into()));
        }
        Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Expr::Int(v))
            }
            Some(Tok::Sym(s)) => {
                self.pos += 1;
                Ok(Expr::Sym(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("unbalanced parentheses".into()));
                }
                Ok(e)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(s)?,
        pos: 0,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(e)
}

/// Evaluates an expression in any ring, with symbol values from `env` and
/// integers embedded by `int`. Division is right division `x * y^-1`.
pub fn eval_expr<T: FieldElem>(
    e: &Expr,
    env: &dyn Fn(&str) -> Option<T>,
    int: &dyn Fn(&BigInt) -> T,
) -> Result<T> {
    let rec = |x: &Expr| eval_expr(x, env, int);
    Ok(match e {
        Expr::Int(v) => int(v),
        Expr::Sym(s) => env(s).ok_or_else(|| Error::Parse(format!("unknown symbol {s:?}")))?,
        Expr::Neg(x) => rec(x)?.neg(),
        Expr::Add(x, y) => rec(x)?.add(&rec(y)?),
        Expr::Sub(x, y) => rec(x)?.sub(&rec(y)?),
        Expr::Mul(x, y) => rec(x)?.mul(&rec(y)?),
        Expr::Div(x, y) => {
            let d = rec(y)?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            rec(x)?.mul(&d.inv().ok_or(Error::NotInvertible)?)
        }
        Expr::Pow(x, k) => rec(x)?.pow_signed(*k).ok_or(Error::NotInvertible)?,
    })
}

fn var_env<F: Scalar>(s: &str) -> Option<RatFunc<F>> {
    Var::from_name(s).map(RatFunc::var)
}

pub fn parse_ratfunc<F: Scalar>(s: &str) -> Result<RatFunc<F>> {
    eval_expr(&parse_expr(s)?, &var_env, &|v| {
        RatFunc::constant(F::from_bigint(v))
    })
}

/// Parses an element of the extension; the generator is referred to by its
/// name.
pub fn parse_ext<F: Scalar>(s: &str, desc: &Arc<ExtDescriptor<F>>) -> Result<ExtElem<F>> {
    let g = ExtElem::generator(desc);
    let name = desc.generator().to_string();
    eval_expr(
        &parse_expr(s)?,
        &|sym| {
            if sym == name {
                Some(g.clone())
            } else {
                var_env(sym).map(|r| ExtElem::from_base(desc, r))
            }
        },
        &|v| ExtElem::from_base(desc, RatFunc::constant(F::from_bigint(v))),
    )
}

/// Parses a polynomial in `var` with rational-function coefficients.
pub fn parse_unipoly<F: Scalar>(s: &str, var: &str) -> Result<UniPoly<RatFunc<F>>> {
    eval_expr(
        &parse_expr(s)?,
        &|sym| {
            if sym == var {
                Some(UniPoly::monomial(1, RatFunc::one()))
            } else {
                var_env(sym).map(UniPoly::constant)
            }
        },
        &|v| UniPoly::constant(RatFunc::constant(F::from_bigint(v))),
    )
}

/// Symbols of an expression, in order of first appearance.
pub fn symbols(e: &Expr) -> Vec<String> {
    fn walk(e: &Expr, out: &mut Vec<String>) {
        match e {
            Expr::Int(_) => {}
            Expr::Sym(s) => {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
            Expr::Neg(x) | Expr::Pow(x, _) => walk(x, out),
            Expr::Add(x, y) | Expr::Sub(x, y) | Expr::Mul(x, y) | Expr::Div(x, y) => {
                walk(x, out);
                walk(y, out);
            }
        }
    }
    let mut out = Vec::new();
    walk(e, &mut out);
    out
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Gf3, Q};

    #[test]
    fn roundtrip_canonical_strings() {
        for s in ["(2*b^2+b+1)/b", "a/2", "-a^2-1", "(2*a-1)/(8*a-2)"] {
            let r: RatFunc<Q> = parse_ratfunc(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
        let g: RatFunc<Gf3> = parse_ratfunc("(2*b^2+b+1)/b").unwrap();
        assert_eq!(g.to_string(), "(2*b^2+b+1)/b");
    }

    #[test]
    fn extension_strings() {
        let l = ExtDescriptor::<Q>::quadratic_a();
        let x = parse_ext("(1+2*i)^-1", &l).unwrap();
        assert_eq!(x.to_string(), "(2*i-1)/(4*a-1)");
        assert_eq!(parse_ext(&x.to_string(), &l).unwrap(), x);
        assert_eq!(parse_ext("i^2", &l).unwrap().to_string(), "a");
    }

    #[test]
    fn errors() {
        assert!(parse_ratfunc::<Q>("1/(a-a)").is_err());
        assert!(parse_ratfunc::<Q>("(a").is_err());
        assert!(parse_ratfunc::<Q>("q").is_err());
    }
}
