//! Ring expressions such as `Z6`, `Z2[y]/(y^2+y+1)` and `Z2[u,v]@3 x Z4`.
//!
//! ```text
//! ringexpr := atom { ("x" | "×") atom }
//! atom     := "Z" nat
//!           | "Z" nat "[" var "]" "/(" upoly ")"
//!           | "Z" nat "[" var { "," var } "]@" nat [ "/(" monomial { "," monomial } ")" ]
//!           | "(" ringexpr ")"
//! ```
//!
//! Variables are single lowercase letters other than `x`. Products associate
//! to the left.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::literal::Cursor;
use crate::ring::{monomial_name, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    Zn(usize),
    /// `Z_n[var]/(f)`; `modulus` holds the ascending coefficients of the
    /// monic `f`, reduced mod `n`.
    UnivarQuot {
        n: usize,
        var: char,
        modulus: Vec<usize>,
    },
    /// `Z_n[vars]/((vars)^degree + extra)`.
    TruncLocal {
        n: usize,
        vars: Vec<char>,
        degree: usize,
        extra: Vec<Vec<u32>>,
    },
    Product(Box<RingExpr>, Box<RingExpr>),
}

impl RingExpr {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let e = ring_expr(&mut cur)?;
        cur.finish()?;
        Ok(e)
    }

    pub fn product(left: RingExpr, right: RingExpr) -> Self {
        RingExpr::Product(Box::new(left), Box::new(right))
    }

    /// Order of the ring this expression denotes, saturating at `u128::MAX`.
    pub fn predicted_order(&self) -> u128 {
        match self {
            RingExpr::Zn(n) => *n as u128,
            RingExpr::UnivarQuot { n, modulus, .. } => pow_sat(*n, modulus.len() - 1),
            RingExpr::TruncLocal {
                n,
                vars,
                degree,
                extra,
            } => pow_sat(*n, trunc_basis_size(vars.len(), *degree, extra)),
            RingExpr::Product(a, b) => a.predicted_order().saturating_mul(b.predicted_order()),
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<FiniteRing> {
        let cap = limits.order_cap;
        let order = self.predicted_order();
        if order > cap as u128 {
            return Err(Error::limit("ring order", order, cap));
        }
        match self {
            RingExpr::Zn(n) => FiniteRing::zn_capped(*n, cap),
            RingExpr::UnivarQuot { n, var, modulus } => {
                FiniteRing::univariate_quotient_capped(*n, *var, modulus, cap)
            }
            RingExpr::TruncLocal {
                n,
                vars,
                degree,
                extra,
            } => FiniteRing::trunc_local_capped(*n, vars, *degree, extra, cap),
            RingExpr::Product(a, b) => {
                let left = Arc::new(a.build(limits)?);
                let right = Arc::new(b.build(limits)?);
                FiniteRing::product_capped(left, right, cap)
            }
        }
    }
}

fn pow_sat(n: usize, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc = acc.saturating_mul(n as u128);
    }
    acc
}

fn trunc_basis_size(k: usize, degree: usize, extra: &[Vec<u32>]) -> usize {
    fn walk(k: usize, left: usize, cur: &mut Vec<u32>, extra: &[Vec<u32>], count: &mut usize) {
        if cur.len() == k {
            if !extra.iter().any(|r| r.iter().zip(cur.iter()).all(|(a, b)| a <= b)) {
                *count += 1;
            }
            return;
        }
        for e in 0..=left {
            cur.push(e as u32);
            walk(k, left - e, cur, extra, count);
            cur.pop();
        }
    }
    let mut count = 0;
    if degree > 0 {
        walk(k, degree - 1, &mut Vec::new(), extra, &mut count);
    }
    count
}

impl std::str::FromStr for RingExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RingExpr::parse(s)
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zn(n) => write!(f, "Z{n}"),
            RingExpr::UnivarQuot { n, var, modulus } => {
                let mut terms = Vec::new();
                for (i, &c) in modulus.iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    let mono = match i {
                        0 => String::new(),
                        1 => var.to_string(),
                        _ => format!("{var}^{i}"),
                    };
                    terms.push(match (c, mono.is_empty()) {
                        (_, true) => c.to_string(),
                        (1, false) => mono,
                        (_, false) => format!("{c}{mono}"),
                    });
                }
                write!(f, "Z{n}[{var}]/({})", terms.join("+"))
            }
            RingExpr::TruncLocal {
                n,
                vars,
                degree,
                extra,
            } => {
                let names: Vec<String> = vars.iter().map(char::to_string).collect();
                write!(f, "Z{n}[{}]@{degree}", names.join(","))?;
                if !extra.is_empty() {
                    let monos: Vec<String> = extra.iter().map(|m| monomial_name(m, vars)).collect();
                    write!(f, "/({})", monos.join(","))?;
                }
                Ok(())
            }
            RingExpr::Product(a, b) => {
                write!(f, "{a} x ")?;
                if matches!(**b, RingExpr::Product(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}

fn ring_expr(cur: &mut Cursor) -> Result<RingExpr> {
    let mut acc = atom(cur)?;
    while cur.eat('x') || cur.eat('×') {
        acc = RingExpr::product(acc, atom(cur)?);
    }
    Ok(acc)
}

fn is_var(c: char) -> bool {
    c.is_ascii_lowercase() && c != 'x'
}

fn var(cur: &mut Cursor) -> Result<char> {
    match cur.peek() {
        Some(c) if is_var(c) => {
            cur.bump();
            Ok(c)
        }
        _ => Err(cur.error(&["variable (lowercase letter other than x)"])),
    }
}

fn atom(cur: &mut Cursor) -> Result<RingExpr> {
    if cur.eat('(') {
        let e = ring_expr(cur)?;
        cur.expect(')')?;
        return Ok(e);
    }
    if !cur.eat('Z') {
        return Err(cur.error(&["'Z'", "'('"]));
    }
    let n = cur.nat()?;
    if n == 0 {
        return Err(Error::invalid("Z0 is not a finite ring"));
    }
    if !cur.eat('[') {
        return Ok(RingExpr::Zn(n));
    }
    let mut vars = vec![var(cur)?];
    while cur.eat(',') {
        let v = var(cur)?;
        if vars.contains(&v) {
            return Err(Error::invalid(format!("variable {v} listed twice")));
        }
        vars.push(v);
    }
    cur.expect(']')?;
    if cur.eat('@') {
        let degree = cur.nat()?;
        if degree == 0 {
            return Err(Error::invalid("truncation degree must be >= 1"));
        }
        let mut extra = Vec::new();
        if cur.eat('/') {
            cur.expect('(')?;
            extra.push(monomial(cur, &vars)?);
            while cur.eat(',') {
                extra.push(monomial(cur, &vars)?);
            }
            cur.expect(')')?;
        }
        if n < 2 {
            return Err(Error::invalid("truncated ring needs n >= 2"));
        }
        return Ok(RingExpr::TruncLocal {
            n,
            vars,
            degree,
            extra,
        });
    }
    if vars.len() != 1 {
        return Err(cur.error(&["'@'"]));
    }
    if cur.peek() != Some('/') {
        return Err(cur.error(&["'@'", "'/'"]));
    }
    cur.expect('/')?;
    cur.expect('(')?;
    let modulus = upoly(cur, n, vars[0])?;
    cur.expect(')')?;
    if n < 2 {
        return Err(Error::invalid("quotient ring needs n >= 2"));
    }
    Ok(RingExpr::UnivarQuot {
        n,
        var: vars[0],
        modulus,
    })
}

/// `term { "+" term }` with `term := nat | [nat ["*"]] var ["^" nat]`.
fn upoly(cur: &mut Cursor, n: usize, v: char) -> Result<Vec<usize>> {
    let mut coeffs: Vec<usize> = Vec::new();
    loop {
        let mut c = 1usize;
        let mut saw_coeff = false;
        if cur.peek().is_some_and(|ch| ch.is_ascii_digit()) {
            c = cur.nat()? % n;
            saw_coeff = true;
        }
        let mut exp = 0usize;
        let star = saw_coeff && cur.eat('*');
        if cur.eat(v) {
            exp = 1;
            if cur.eat('^') {
                exp = cur.nat()?;
            }
        } else if !saw_coeff || star {
            return Err(cur.error(&[&format!("{v:?}")]));
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] = (coeffs[exp] + c) % n;
        if !cur.eat('+') {
            break;
        }
    }
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    if coeffs.len() < 2 {
        return Err(Error::invalid("modulus must have positive degree"));
    }
    if coeffs.last() != Some(&1) {
        return Err(Error::invalid("modulus must be monic"));
    }
    Ok(coeffs)
}

/// Product of bracketed variables with optional powers, e.g. `u^2v` or `u*v`.
fn monomial(cur: &mut Cursor, vars: &[char]) -> Result<Vec<u32>> {
    let mut exps = vec![0u32; vars.len()];
    let mut any = false;
    loop {
        match cur.peek() {
            Some(c) if vars.contains(&c) => {
                cur.bump();
                let e = if cur.eat('^') { cur.nat()? as u32 } else { 1 };
                let i = vars.iter().position(|&v| v == c).unwrap();
                exps[i] += e;
                any = true;
            }
            _ if any => break,
            _ => {
                let expected: Vec<String> = vars.iter().map(|v| format!("{v:?}")).collect();
                let refs: Vec<&str> = expected.iter().map(String::as_str).collect();
                return Err(cur.error(&refs));
            }
        }
        if cur.eat('*') {
            continue;
        }
    }
    if exps.iter().all(|&e| e == 0) {
        return Err(Error::invalid("relation monomial must have positive degree"));
    }
    Ok(exps)
}
