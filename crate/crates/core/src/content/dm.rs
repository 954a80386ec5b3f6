//! Dedekind–Mertens exponents: the least `n` with
//! `c(f)^n c(g) = c(f)^(n-1) c(fg)`.

use serde::Serialize;

use crate::error::Result;
use crate::ideal::{IdealCache, IdealId};
use crate::mring::MRElem;
use crate::ring::Elem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum DMResult {
    Exponent(usize),
    NotFoundUpTo(usize),
}

impl DMResult {
    pub fn exponent(self) -> Option<usize> {
        match self {
            DMResult::Exponent(n) => Some(n),
            DMResult::NotFoundUpTo(_) => None,
        }
    }
}

struct Sides {
    lhs: Vec<IdealId>,
    rhs: Vec<IdealId>,
}

/// Both sides of the formula for `n = 1..=n_max`.
fn sides(cache: &mut IdealCache<'_>, f: &MRElem<'_>, g: &MRElem<'_>, n_max: usize) -> Result<Sides> {
    let fg = f.mul(g)?;
    let cf = cache.generated(f.coefficients());
    let cg = cache.generated(g.coefficients());
    let cfg = cache.generated(fg.coefficients());
    let mut lhs = Vec::with_capacity(n_max);
    let mut rhs = Vec::with_capacity(n_max);
    // power = c(f)^(n-1)
    let mut power = cache.whole_id();
    for _ in 0..n_max {
        rhs.push(cache.product(power, cfg));
        power = cache.product(power, cf);
        lhs.push(cache.product(power, cg));
    }
    Ok(Sides { lhs, rhs })
}

/// Default search bound: one more than the number of terms of `g`.
pub fn default_n_max(g: &MRElem<'_>) -> usize {
    g.term_count() + 1
}

/// The least `n` in `1..=n_max` satisfying the formula.
pub fn dm_exponent(f: &MRElem<'_>, g: &MRElem<'_>, n_max: usize) -> Result<DMResult> {
    let mut cache = IdealCache::new(f.ring());
    let s = sides(&mut cache, f, g, n_max)?;
    Ok((0..n_max)
        .find(|&i| s.lhs[i] == s.rhs[i])
        .map(|i| DMResult::Exponent(i + 1))
        .unwrap_or(DMResult::NotFoundUpTo(n_max)))
}

/// Does the formula hold at exponent `n >= 1`?
pub fn dm_holds(f: &MRElem<'_>, g: &MRElem<'_>, n: usize) -> Result<bool> {
    let mut cache = IdealCache::new(f.ring());
    let s = sides(&mut cache, f, g, n)?;
    Ok(s.lhs[n - 1] == s.rhs[n - 1])
}

/// The least element (by index) on exactly one side at exponent `n`.
pub fn dm_failure_witness(f: &MRElem<'_>, g: &MRElem<'_>, n: usize) -> Result<Option<Elem>> {
    let mut cache = IdealCache::new(f.ring());
    let s = sides(&mut cache, f, g, n)?;
    let (l, r) = (cache.members(s.lhs[n - 1]), cache.members(s.rhs[n - 1]));
    Ok(l.symmetric_difference(r).next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::literal::{parse_mr, parse_poly};
    use crate::monoid::Monoid;
    use crate::ring::FiniteRing;

    #[test]
    fn unit_content_gives_one() {
        let z6 = FiniteRing::zn(6).unwrap();
        let f = parse_poly("1", &z6).unwrap();
        let g = parse_poly("2*X^2 + 3*X", &z6).unwrap();
        assert_eq!(dm_exponent(&f, &g, 3).unwrap(), DMResult::Exponent(1));
        let f = parse_poly("3", &z6).unwrap();
        let g = parse_poly("2*X", &z6).unwrap();
        assert_eq!(dm_exponent(&f, &g, 2).unwrap(), DMResult::Exponent(1));
    }

    #[test]
    fn local_ring_needs_two() {
        let r = FiniteRing::trunc_local(2, &['u', 'v'], 3, &[]).unwrap();
        let f = parse_poly("(u)*X + (v)", &r).unwrap();
        assert_eq!(dm_exponent(&f, &f, 3).unwrap(), DMResult::Exponent(2));
        assert!(!dm_holds(&f, &f, 1).unwrap());
        let w = dm_failure_witness(&f, &f, 1).unwrap().unwrap();
        assert_eq!(r.name(w), "uv");
    }

    #[test]
    fn torsion_monoid_never_satisfies() {
        let z3 = FiniteRing::zn(3).unwrap();
        let c2 = Monoid::cyclic(2).unwrap();
        let f = parse_mr("X^1 - X^0", &z3, &c2).unwrap();
        let g = parse_mr("X^1 + X^0", &z3, &c2).unwrap();
        assert_eq!(dm_exponent(&f, &g, 6).unwrap(), DMResult::NotFoundUpTo(6));
    }
}
