//! Checks that separate content algebras `R[S]` from the rest: unit content,
//! weak content and McCoy's scalar-annihilator property, together with the
//! explicit counterexamples for non-cancellative and torsion monoids.

use super::{content_id, Annihilators, CheckOutcome};
use crate::error::{Error, Result};
use crate::ideal::IdealCache;
use crate::limits::Limits;
use crate::monoid::{Monoid, MonoidElem};
use crate::mring::{MRElem, Truncation};
use crate::ring::{Elem, FiniteRing};

/// `f = X^s`, `g = X^t - X^u` for `s + t = s + u`, `t ≠ u`; then `fg = 0`.
pub fn counterexample_noncancellative<'a>(
    ring: &'a FiniteRing,
    monoid: &'a Monoid,
    s: &MonoidElem,
    t: &MonoidElem,
    u: &MonoidElem,
) -> Result<(MRElem<'a>, MRElem<'a>)> {
    if t == u || monoid.op(s, t) != monoid.op(s, u) {
        return Err(Error::invalid("need s + t = s + u with t != u"));
    }
    let f = MRElem::monomial(ring, monoid, ring.one(), s.clone());
    let g = MRElem::monomial(ring, monoid, ring.one(), t.clone())
        .sub(&MRElem::monomial(ring, monoid, ring.one(), u.clone()))?;
    assert!(f.mul(&g)?.is_zero(), "X^s (X^t - X^u) must vanish");
    Ok((f, g))
}

/// `f = X^s - X^t`, `g = Σ_{i<k} X^((k-i-1)s + it)` for the least `k` with
/// `ks = kt`; then `fg = X^(ks) - X^(kt) = 0` and `g ≠ 0`.
pub fn counterexample_torsion<'a>(
    ring: &'a FiniteRing,
    monoid: &'a Monoid,
    s: &MonoidElem,
    t: &MonoidElem,
) -> Result<(MRElem<'a>, MRElem<'a>, usize)> {
    if s == t {
        return Err(Error::invalid("need s != t"));
    }
    let bound = monoid.default_torsion_bound();
    let k = monoid
        .minimal_torsion_order(s, t, bound)
        .ok_or_else(|| Error::invalid("no n with ns = nt"))?;
    let one = ring.one();
    let f = MRElem::monomial(ring, monoid, one, s.clone())
        .sub(&MRElem::monomial(ring, monoid, one, t.clone()))?;
    let exps: Vec<MonoidElem> = (0..k)
        .map(|i| monoid.op(&monoid.multiple(k - i - 1, s), &monoid.multiple(i, t)))
        .collect();
    for (a, ea) in exps.iter().enumerate() {
        for eb in &exps[..a] {
            if ea == eb {
                return Err(Error::invalid("exponents of the cofactor collide"));
            }
        }
    }
    let g = MRElem::from_terms(ring, monoid, exps.into_iter().map(|e| (e, one)))?;
    assert!(!g.is_zero());
    assert!(f.mul(&g)?.is_zero(), "(X^s - X^t) g must vanish");
    Ok((f, g, k))
}

/// The constructed zero-product pair for a monoid that is not cancellative
/// or not torsion-free.
pub fn constructed_pair<'a>(
    ring: &'a FiniteRing,
    monoid: &'a Monoid,
) -> Option<(MRElem<'a>, MRElem<'a>)> {
    if let Some(w) = monoid.cancellation_witness() {
        let e = MonoidElem::Index;
        return counterexample_noncancellative(ring, monoid, &e(w.s), &e(w.t), &e(w.u)).ok();
    }
    let w = monoid.torsion_witness(monoid.default_torsion_bound())?;
    let e = MonoidElem::Index;
    counterexample_torsion(ring, monoid, &e(w.s), &e(w.t))
        .ok()
        .map(|(f, g, _)| (f, g))
}

/// The least nonzero `r` with `rf = 0`.
pub fn mccoy_witness(f: &MRElem<'_>) -> Option<Elem> {
    let ring = f.ring();
    let coeffs: Vec<Elem> = f.coefficients().collect();
    Annihilators::new(ring).scalar(&coeffs)
}

/// The least nonzero `h` on the degree window with `fh = 0`.
pub fn zero_divisor_oracle<'a>(
    f: &MRElem<'a>,
    degree: usize,
    cap: usize,
) -> Result<Option<MRElem<'a>>> {
    let t = Truncation::new(f.ring(), f.monoid(), degree, cap)?;
    for i in 1..t.len() {
        let h = t.elem(i);
        if f.mul(&h)?.is_zero() {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

fn subject(ring_name: &str, monoid: &Monoid) -> String {
    format!("{ring_name}[{monoid}]")
}

fn window_param(monoid: &Monoid, degree: usize) -> String {
    if monoid.is_finite() {
        "full".to_string()
    } else {
        format!("degree<={degree}")
    }
}

fn pair_budget(n: usize, limits: &Limits) -> Result<()> {
    let pairs = (n as u128) * (n as u128 + 1) / 2;
    if pairs > limits.case_cap as u128 {
        return Err(Error::limit("pair enumeration", pairs, limits.case_cap));
    }
    Ok(())
}

/// Scans unordered pairs `i <= j` of nonzero window elements; returns the
/// first pair for which `violates` holds.
fn scan_pairs(
    t: &Truncation<'_>,
    mut skip: impl FnMut(usize) -> bool,
    mut violates: impl FnMut(usize, usize, &[Elem]) -> bool,
) -> (Option<(usize, usize)>, u64) {
    let coeffs = t.all_coeffs();
    let mut prod = Vec::new();
    let mut cases = 0u64;
    for i in 1..t.len() {
        if skip(i) {
            continue;
        }
        for j in i..t.len() {
            if skip(j) {
                continue;
            }
            cases += 1;
            t.mul_into(&coeffs[i], &coeffs[j], &mut prod);
            if violates(i, j, &prod) {
                return (Some((i, j)), cases);
            }
        }
    }
    (None, cases)
}

fn finish(
    name: &str,
    t: &Truncation<'_>,
    found: Option<(usize, usize)>,
    cases: u64,
    replays: impl Fn(&MRElem<'_>, &MRElem<'_>) -> bool,
) -> CheckOutcome {
    let out = match found {
        None => CheckOutcome::verified(name),
        Some((i, j)) => {
            let least = [t.elem(i).to_string(), t.elem(j).to_string()];
            match constructed_pair(t.ring(), t.monoid()) {
                Some((f, g)) if replays(&f, &g) => {
                    let pair = vec![f.to_string(), g.to_string()];
                    let out = CheckOutcome::refuted(name, pair.clone());
                    if pair == least {
                        out
                    } else {
                        out.note(format!("least violating pair: ({}, {})", least[0], least[1]))
                    }
                }
                _ => CheckOutcome::refuted(name, least.to_vec()),
            }
        }
    };
    out.stat("elements", t.len() as u64 - 1).stat("pairs", cases)
}

/// `c(f) = c(g) = R` implies `c(fg) = R` on the window.
pub fn unit_content_check(
    ring: &FiniteRing,
    ring_name: &str,
    monoid: &Monoid,
    degree: usize,
    limits: &Limits,
) -> Result<CheckOutcome> {
    let t = Truncation::new(ring, monoid, degree, limits.poly_cap)?;
    pair_budget(t.len(), limits)?;
    let mut cache = IdealCache::new(ring);
    let whole = cache.whole_id();
    let unit: Vec<bool> = t
        .all_coeffs()
        .iter()
        .map(|c| content_id(&mut cache, c) == whole)
        .collect();
    let (found, cases) = scan_pairs(&t, |i| !unit[i], |_, _, prod| content_id(&mut cache, prod) != whole);
    let replays = |f: &MRElem<'_>, g: &MRElem<'_>| {
        f.content().is_whole() && g.content().is_whole() && !f.mul(g).unwrap().content().is_whole()
    };
    Ok(finish("unit_content", &t, found, cases, replays)
        .with_subject(subject(ring_name, monoid))
        .param("window", window_param(monoid, degree)))
}

/// `c(f)c(g) ⊆ rad(c(fg))` on the window.
pub fn weak_content_check(
    ring: &FiniteRing,
    ring_name: &str,
    monoid: &Monoid,
    degree: usize,
    limits: &Limits,
) -> Result<CheckOutcome> {
    let t = Truncation::new(ring, monoid, degree, limits.poly_cap)?;
    pair_budget(t.len(), limits)?;
    let mut cache = IdealCache::new(ring);
    let contents: Vec<usize> = t.all_coeffs().iter().map(|c| content_id(&mut cache, c)).collect();
    let zero = cache.zero_id();
    let (found, cases) = scan_pairs(
        &t,
        |_| false,
        |i, j, prod| {
            let lhs = cache.product(contents[i], contents[j]);
            if lhs == zero {
                return false;
            }
            let c = content_id(&mut cache, prod);
            let rad = cache.radical(c);
            !cache.is_subset(lhs, rad)
        },
    );
    let replays = |f: &MRElem<'_>, g: &MRElem<'_>| {
        let lhs = f.content().product(&g.content()).unwrap();
        !lhs.is_subset(&f.mul(g).unwrap().content().radical())
    };
    Ok(finish("weak_content", &t, found, cases, replays)
        .with_subject(subject(ring_name, monoid))
        .param("window", window_param(monoid, degree)))
}

/// On the window: `g` is a zero-divisor exactly when a nonzero scalar
/// kills it. Refutations are pairs `(f, g)` with `f ≠ 0`, `fg = 0` and no
/// scalar annihilator of `g`.
pub fn mccoy_equiv_check(
    ring: &FiniteRing,
    ring_name: &str,
    monoid: &Monoid,
    degree: usize,
    limits: &Limits,
) -> Result<CheckOutcome> {
    let t = Truncation::new(ring, monoid, degree, limits.poly_cap)?;
    let ann = Annihilators::new(ring);
    let coeffs = t.all_coeffs();
    let candidates: Vec<usize> = (1..t.len()).filter(|&i| ann.scalar(&coeffs[i]).is_none()).collect();
    let work = candidates.len() as u128 * t.len() as u128;
    if work > limits.case_cap as u128 {
        return Err(Error::limit("zero-divisor oracle products", work, limits.case_cap));
    }
    let mut cases = 0u64;
    let mut found = None;
    'outer: for &g in &candidates {
        for f in 1..t.len() {
            cases += 1;
            if t.product_is_zero(&coeffs[f], &coeffs[g]) {
                found = Some((f, g));
                break 'outer;
            }
        }
    }
    let replays = |f: &MRElem<'_>, g: &MRElem<'_>| {
        !f.is_zero() && f.mul(g).unwrap().is_zero() && mccoy_witness(g).is_none()
    };
    Ok(finish("mccoy_equiv", &t, found, cases, replays)
        .stat("withoutScalarAnnihilator", candidates.len() as u64)
        .with_subject(subject(ring_name, monoid))
        .param("window", window_param(monoid, degree)))
}
