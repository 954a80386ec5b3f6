//! Element literals and monoid-ring literals.
//!
//! Element literal: a canonical element name, or an expression built from
//! integers, ring generators, `+ - *`, juxtaposition, `^` and, for product
//! rings, tuples `(a,b)`.
//!
//! Monoid-ring literal: `term { (+|-) term }` with
//! `term := [coeff] [ ["*"] "X" [ "^" exponent ] ]`. A coefficient is
//! parenthesised when its name contains a comma, a letter or a sign.

use crate::error::{Error, Result, SyntaxError};
use crate::monoid::{Monoid, MonoidElem};
use crate::mring::MRElem;
use crate::ring::{Construction, Elem, FiniteRing};

/// Character cursor shared by the literal and ring-expression parsers.
pub(crate) struct Cursor<'t> {
    text: &'t str,
    pos: usize,
}

impl<'t> Cursor<'t> {
    pub(crate) fn new(text: &'t str) -> Self {
        Cursor { text, pos: 0 }
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn rest(&self) -> &'t str {
        &self.text[self.pos..]
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn error(&mut self, expected: &[&str]) -> Error {
        let found = match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        SyntaxError {
            position: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
        .into()
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[&format!("{c:?}")]))
        }
    }

    pub(crate) fn nat(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits: &str = {
            let rest = self.rest();
            let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            &rest[..end]
        };
        if digits.is_empty() {
            return Err(self.error(&["natural number"]));
        }
        let value = digits.parse().map_err(|_| self.error(&["natural number below 2^64"]))?;
        self.pos += digits.len();
        Ok(value)
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        if self.peek().is_none() {
            Ok(())
        } else {
            Err(self.error(&["end of input"]))
        }
    }
}

/// Parses an element literal against `ring`.
pub fn parse_element(ring: &FiniteRing, text: &str) -> Result<Elem> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(e) = ring.lookup(&compact) {
        return Ok(e);
    }
    let mut cur = Cursor::new(text);
    let e = element_expr(&mut cur, ring)?;
    cur.finish()?;
    Ok(e)
}

fn element_expr(cur: &mut Cursor, ring: &FiniteRing) -> Result<Elem> {
    let mut acc = if cur.eat('-') {
        ring.neg(element_term(cur, ring)?)
    } else {
        element_term(cur, ring)?
    };
    loop {
        if cur.eat('+') {
            acc = ring.add(acc, element_term(cur, ring)?);
        } else if cur.eat('-') {
            acc = ring.sub(acc, element_term(cur, ring)?);
        } else {
            return Ok(acc);
        }
    }
}

fn starts_factor(c: char, ring: &FiniteRing) -> bool {
    c.is_ascii_digit()
        || c == '('
        || ring.generators().iter().any(|&(v, _)| v == c)
}

fn element_term(cur: &mut Cursor, ring: &FiniteRing) -> Result<Elem> {
    let mut acc = element_factor(cur, ring)?;
    loop {
        // Juxtaposition multiplies too.
        if !cur.eat('*') && !cur.peek().is_some_and(|c| starts_factor(c, ring)) {
            return Ok(acc);
        }
        acc = ring.mul(acc, element_factor(cur, ring)?);
    }
}

fn element_factor(cur: &mut Cursor, ring: &FiniteRing) -> Result<Elem> {
    let base = element_atom(cur, ring)?;
    if cur.eat('^') {
        let k = cur.nat()?;
        Ok(ring.pow(base, k))
    } else {
        Ok(base)
    }
}

/// Does the parenthesised group starting at the cursor hold a top-level comma?
fn group_has_comma(rest: &str) -> bool {
    let mut depth = 0i32;
    for c in rest.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return false;
                }
            }
            ',' if depth == 1 => return true,
            _ => {}
        }
    }
    false
}

fn element_atom(cur: &mut Cursor, ring: &FiniteRing) -> Result<Elem> {
    let Some(c) = cur.peek() else {
        return Err(cur.error(&["element"]));
    };
    if c == '(' {
        if group_has_comma(cur.rest()) {
            let Construction::Product(left, right) = ring.construction() else {
                return Err(cur.error(&["element of a non-product ring"]));
            };
            cur.expect('(')?;
            let a = element_expr(cur, left)?;
            cur.expect(',')?;
            let b = element_expr(cur, right)?;
            cur.expect(')')?;
            return Ok(a * right.order() + b);
        }
        cur.expect('(')?;
        let e = element_expr(cur, ring)?;
        cur.expect(')')?;
        return Ok(e);
    }
    if c.is_ascii_digit() {
        if matches!(ring.construction(), Construction::Tables) {
            return table_token(cur, ring);
        }
        let k = cur.nat()?;
        return Ok(ring.from_integer(k as u64));
    }
    if let Some(&(_, g)) = ring.generators().iter().find(|&&(v, _)| v == c) {
        cur.bump();
        return Ok(g);
    }
    if matches!(ring.construction(), Construction::Tables) {
        return table_token(cur, ring);
    }
    let mut expected: Vec<String> = vec!["integer".into(), "'('".into()];
    expected.extend(ring.generators().iter().map(|(v, _)| format!("{v:?}")));
    let refs: Vec<&str> = expected.iter().map(String::as_str).collect();
    Err(cur.error(&refs))
}

fn table_token(cur: &mut Cursor, ring: &FiniteRing) -> Result<Elem> {
    cur.skip_ws();
    let rest = cur.rest();
    let end = rest
        .find(|c: char| c.is_whitespace() || ",()+-*^".contains(c))
        .unwrap_or(rest.len());
    match ring.lookup(&rest[..end]) {
        Some(e) if end > 0 => {
            cur.pos += end;
            Ok(e)
        }
        _ => Err(cur.error(&["element name"])),
    }
}

/// Canonical element text for use as a coefficient.
pub fn coefficient_text(ring: &FiniteRing, c: Elem) -> String {
    let name = ring.name(c);
    if name.starts_with('(') && matching_paren(name) == Some(name.len() - 1) {
        return name.to_string();
    }
    if name
        .chars()
        .any(|ch| ch == ',' || ch == '+' || ch == '-' || ch.is_alphabetic())
    {
        format!("({name})")
    } else {
        name.to_string()
    }
}

/// Canonical text: terms in descending monoid order, joined by ` + `.
pub fn format_mr(f: &MRElem<'_>) -> String {
    let ring = f.ring();
    let monoid = f.monoid();
    if f.is_zero() {
        return "0".to_string();
    }
    let identity = monoid.identity();
    let terms: Vec<String> = f
        .terms()
        .rev()
        .map(|(s, c)| {
            if *s == identity {
                return coefficient_text(ring, c);
            }
            let x = match (monoid, s) {
                (Monoid::Free { arity: 1 }, MonoidElem::Exponents(v)) if v[0] == 1 => "X".to_string(),
                _ => format!("X^{}", monoid.elem_name(s)),
            };
            if c == ring.one() {
                x
            } else {
                format!("{}*{x}", coefficient_text(ring, c))
            }
        })
        .collect();
    terms.join(" + ")
}

/// Parses a monoid-ring literal over `ring[monoid]`.
pub fn parse_mr<'a>(text: &str, ring: &'a FiniteRing, monoid: &'a Monoid) -> Result<MRElem<'a>> {
    let mut cur = Cursor::new(text);
    let mut acc = MRElem::zero(ring, monoid);
    let mut negate = cur.eat('-');
    loop {
        let term = mr_term(&mut cur, ring, monoid)?;
        let term = if negate { term.neg() } else { term };
        acc = acc.add(&term)?;
        if cur.eat('+') {
            negate = false;
        } else if cur.eat('-') {
            negate = true;
        } else {
            break;
        }
    }
    cur.finish()?;
    Ok(acc)
}

/// Parses a polynomial literal over `ring[X]`.
pub fn parse_poly<'a>(text: &str, ring: &'a FiniteRing) -> Result<MRElem<'a>> {
    parse_mr(text, ring, &crate::mring::UNIVARIATE)
}

fn mr_term<'a>(cur: &mut Cursor, ring: &'a FiniteRing, monoid: &'a Monoid) -> Result<MRElem<'a>> {
    let coeff = match cur.peek() {
        Some('X') => ring.one(),
        Some('(') => {
            let start = cur.pos();
            let close = matching_paren(cur.rest()).ok_or_else(|| cur.error(&["')'"]))?;
            let inner = &cur.rest()[..=close];
            let e = parse_element(ring, inner).map_err(|err| shift(err, start))?;
            cur.pos += close + 1;
            e
        }
        Some(_) => {
            cur.skip_ws();
            let rest = cur.rest();
            let end = rest
                .find(|c: char| c.is_whitespace() || "*+-".contains(c))
                .unwrap_or(rest.len());
            if end == 0 {
                return Err(cur.error(&["coefficient", "'X'"]));
            }
            let start = cur.pos();
            let e = parse_element(ring, &rest[..end]).map_err(|err| shift(err, start))?;
            cur.pos += end;
            e
        }
        None => return Err(cur.error(&["coefficient", "'X'"])),
    };
    let has_star = cur.eat('*');
    if cur.eat('X') {
        let exp = if cur.eat('^') {
            mr_exponent(cur, monoid)?
        } else {
            match monoid {
                Monoid::Free { arity: 1 } => MonoidElem::Exponents(vec![1]),
                _ => return Err(cur.error(&["'^'"])),
            }
        };
        Ok(MRElem::monomial(ring, monoid, coeff, exp))
    } else if has_star {
        Err(cur.error(&["'X'"]))
    } else {
        Ok(MRElem::constant(ring, monoid, coeff))
    }
}

fn mr_exponent(cur: &mut Cursor, monoid: &Monoid) -> Result<MonoidElem> {
    cur.skip_ws();
    let rest = cur.rest();
    let end = if rest.starts_with('(') {
        matching_paren(rest).map(|i| i + 1)
    } else {
        Some(
            rest.find(|c: char| !c.is_ascii_alphanumeric())
                .unwrap_or(rest.len()),
        )
    };
    let end = end.ok_or_else(|| cur.error(&["')'"]))?;
    match monoid.parse_elem(&rest[..end]) {
        Some(e) if end > 0 => {
            cur.pos += end;
            Ok(e)
        }
        _ => Err(cur.error(&["monoid element"])),
    }
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn shift(err: Error, offset: usize) -> Error {
    match err {
        Error::Syntax(mut s) => {
            s.position += offset;
            Error::Syntax(s)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mring::UNIVARIATE;
    use std::sync::Arc;

    fn product_of(left: &Arc<FiniteRing>, right: &Arc<FiniteRing>) -> Result<FiniteRing> {
        FiniteRing::product(left.clone(), right.clone())
    }

    #[test]
    fn element_expressions() {
        let r = FiniteRing::trunc_local(2, &['u', 'v'], 3, &[]).unwrap();
        let uv = r.lookup("uv").unwrap();
        assert_eq!(parse_element(&r, "u*v").unwrap(), uv);
        assert_eq!(parse_element(&r, "v u").unwrap(), uv);
        assert_eq!(parse_element(&r, "(u+1)^2").unwrap(), r.lookup("u^2+1").unwrap());
        assert_eq!(parse_element(&r, "u^3").unwrap(), r.zero());
        assert!(matches!(parse_element(&r, "w"), Err(Error::Syntax(_))));

        let z5 = FiniteRing::zn(5).unwrap();
        assert_eq!(parse_element(&z5, "7").unwrap(), 2);
        assert_eq!(parse_element(&z5, "-1").unwrap(), 4);
    }

    #[test]
    fn tuples() {
        let z2 = Arc::new(FiniteRing::zn(2).unwrap());
        let y = Arc::new(FiniteRing::univariate_quotient(3, 'y', &[1, 0, 1]).unwrap());
        let r = product_of(&z2, &y).unwrap();
        let e = parse_element(&r, "(1, y+2)").unwrap();
        assert_eq!(r.name(e), "(1,y+2)");
        let nested = product_of(&Arc::new(r), &z2).unwrap();
        let e = parse_element(&nested, "((1,y),1)").unwrap();
        assert_eq!(nested.name(e), "((1,y),1)");
        assert!(parse_element(&FiniteRing::zn(4).unwrap(), "(1,0)").is_err());
    }

    #[test]
    fn polynomial_literals() {
        let z4 = FiniteRing::zn(4).unwrap();
        let f = parse_poly("2*X^1 + 2", &z4).unwrap();
        assert_eq!(f, MRElem::poly(&z4, &[2, 2]));
        assert_eq!(f.to_string(), "2*X + 2");
        assert_eq!(parse_poly("X^2 - 1", &z4).unwrap().to_string(), "X^2 + 3");
        assert_eq!(parse_poly("0", &z4).unwrap().to_string(), "0");
        assert!(parse_poly("2*", &z4).is_err());
        assert!(parse_poly("5*X + q", &z4).is_err());

        let z2 = Arc::new(FiniteRing::zn(2).unwrap());
        let v4 = product_of(&z2, &z2).unwrap();
        let f = parse_poly("(1,0)*X + (0,1)", &v4).unwrap();
        assert_eq!(f.to_string(), "(1,0)*X + (0,1)");

        let r = FiniteRing::trunc_local(2, &['u', 'v'], 3, &[]).unwrap();
        let f = parse_poly("(u)*X + (v)", &r).unwrap();
        assert_eq!(f.to_string(), "(u)*X + (v)");
        assert_eq!(parse_poly(&f.to_string(), &r).unwrap(), f);
    }

    #[test]
    fn monoid_literals() {
        let z3 = FiniteRing::zn(3).unwrap();
        let c2 = Monoid::cyclic(2).unwrap();
        let f = parse_mr("X^1 - X^0", &z3, &c2).unwrap();
        assert_eq!(f.to_string(), "X^1 + 2");
        assert_eq!(parse_mr(&f.to_string(), &z3, &c2).unwrap(), f);
        assert!(parse_mr("X", &z3, &c2).is_err());

        let m = Monoid::absorbing_example();
        let z2 = FiniteRing::zn(2).unwrap();
        let g = parse_mr("X^a + X^z", &z2, &m).unwrap();
        assert_eq!(g.to_string(), "X^z + X^a");

        let n2 = Monoid::free(2).unwrap();
        let h = parse_mr("X^(1,0) + 2*X^(0,1)", &z3, &n2).unwrap();
        assert_eq!(parse_mr(&h.to_string(), &z3, &n2).unwrap(), h);
        let _ = &UNIVARIATE;
    }
}
