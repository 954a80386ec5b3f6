//! Transfer of primes, associated primes, zero-divisors, nilpotents and
//! primality from `R` to `R[X]`, checked on polynomials of bounded degree.

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{coeffs_in, content_id, Annihilators, CheckOutcome};
use crate::error::{Error, Result};
use crate::ideal::{
    associated_primes, associated_witness, has_property_a, is_primal, minimal_primes, zd_degree,
    Ideal, IdealCache,
};
use crate::limits::Limits;
use crate::mring::{MRElem, Truncation};
use crate::ring::{Elem, ElemSet, FiniteRing};

fn poly_text(ring: &FiniteRing, coeffs: &[Elem]) -> String {
    MRElem::poly(ring, coeffs).to_string()
}

/// Exact product of ascending coefficient vectors.
fn poly_mul(ring: &FiniteRing, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let zero = ring.zero();
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == zero {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != zero {
                out[i + j] = ring.add(out[i + j], ring.mul(x, y));
            }
        }
    }
    out
}

fn is_zero_poly(ring: &FiniteRing, a: &[Elem]) -> bool {
    a.iter().all(|&c| c == ring.zero())
}

/// Least element of each coset `a + I`, ascending.
fn transversal(ideal: &Ideal<'_>) -> Vec<Elem> {
    let ring = ideal.ring();
    let mut covered = ring.empty_set();
    let mut reps = Vec::new();
    for a in ring.elements() {
        if covered.contains(a) {
            continue;
        }
        reps.push(a);
        for i in ideal.elements() {
            covered.insert(ring.add(a, i));
        }
    }
    reps
}

/// All coefficient vectors of length `len` with entries from `digits`, in
/// mixed-radix order with position 0 varying fastest.
fn vectors_over(digits: &[Elem], len: usize, cap: usize) -> Result<Vec<Vec<Elem>>> {
    let count = (digits.len() as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    if count > cap as u128 + 1 {
        return Err(Error::limit("truncated polynomial enumeration", count - 1, cap));
    }
    let mut out = Vec::with_capacity(count as usize);
    for mut idx in 0..count as usize {
        let mut v = Vec::with_capacity(len);
        for _ in 0..len {
            v.push(digits[idx % digits.len()]);
            idx /= digits.len();
        }
        out.push(v);
    }
    Ok(out)
}

fn polys(ring: &FiniteRing, degree: usize, limits: &Limits) -> Result<Vec<Vec<Elem>>> {
    Ok(Truncation::polys(ring, degree, limits.poly_cap)?.all_coeffs())
}

fn degree_outcome(out: CheckOutcome, degree: usize) -> CheckOutcome {
    out.param("degree", degree)
}

/// `pB` is prime on the truncation: for `f, g ∉ pB` of degree at most `d`,
/// `fg ∉ pB`. Whether `f ∈ pB` depends only on `f mod pB`, so `f` and `g`
/// range over polynomials with coefficients in a transversal of `R/p`.
pub fn prime_extension_check(p: &Ideal<'_>, degree: usize, limits: &Limits) -> Result<CheckOutcome> {
    let ring = p.ring();
    let reps = transversal(p);
    let candidates: Vec<Vec<Elem>> = vectors_over(&reps, degree + 1, limits.poly_cap)?
        .into_iter()
        .filter(|v| !coeffs_in(p.members(), v))
        .collect();
    let pairs = (candidates.len() as u128) * (candidates.len() as u128 + 1) / 2;
    if pairs > limits.case_cap as u128 {
        return Err(Error::limit("pair enumeration", pairs, limits.case_cap));
    }
    let mut cases = 0u64;
    let mut found = None;
    'outer: for (i, f) in candidates.iter().enumerate() {
        for g in &candidates[i..] {
            cases += 1;
            if coeffs_in(p.members(), &poly_mul(ring, f, g)) {
                found = Some((f, g));
                break 'outer;
            }
        }
    }
    let out = match found {
        None => CheckOutcome::verified("prime_extension"),
        Some((f, g)) => CheckOutcome::refuted(
            "prime_extension",
            vec![poly_text(ring, f), poly_text(ring, g)],
        ),
    };
    Ok(degree_outcome(out, degree)
        .param("ideal", p)
        .param("reduction", "coset representatives")
        .stat("cosets", reps.len() as u64)
        .stat("pairs", cases))
}

/// Constants `r` with `c(r) ⊆ I` are exactly the members of `I`.
pub fn contraction_check(ideal: &Ideal<'_>) -> CheckOutcome {
    let ring = ideal.ring();
    let bad = ring
        .elements()
        .find(|&r| Ideal::principal(ring, r).is_subset(ideal) != ideal.contains(r));
    let out = match bad {
        None => CheckOutcome::verified("contraction"),
        Some(r) => CheckOutcome::refuted("contraction", vec![ring.name(r).to_string()]),
    };
    out.param("ideal", ideal).stat("constants", ring.order() as u64)
}

/// For every minimal prime `p`: `pB` is prime and contracts to `p`; distinct
/// minimal primes extend to distinct ideals that are pairwise incomparable.
pub fn min_prime_bijection_check(ring: &FiniteRing, degree: usize, limits: &Limits) -> Result<CheckOutcome> {
    let mins = minimal_primes(ring, limits.ideal_cap)?;
    let mut parts = Vec::new();
    for p in &mins {
        parts.push(prime_extension_check(p, degree, limits)?);
        parts.push(contraction_check(p));
    }
    for (i, p) in mins.iter().enumerate() {
        for q in &mins[i + 1..] {
            // A constant in the symmetric difference separates pB from qB.
            let separated = p.members().symmetric_difference(q.members()).next().is_some();
            // pB ⊆ qB on the truncation iff every a·X^i with a ∈ p lies in qB.
            let p_in_q = p.elements().all(|a| q.contains(a));
            let q_in_p = q.elements().all(|a| p.contains(a));
            if !separated || p_in_q || q_in_p {
                parts.push(CheckOutcome::refuted(
                    "min_prime_separation",
                    vec![p.to_string(), q.to_string()],
                ));
            }
        }
    }
    let out = CheckOutcome::combine("min_prime_bijection", &parts);
    Ok(degree_outcome(out, degree)
        .stat("minimalPrimes", mins.len() as u64)
        .note("surjectivity onto Min(R[X]) is not checked"))
}

/// For each associated prime `p = Ann(x)`: `x·f = 0` exactly when
/// `c(f) ⊆ p`.
pub fn ass_extension_check(ring: &FiniteRing, degree: usize, limits: &Limits) -> Result<CheckOutcome> {
    let ps = polys(ring, degree, limits)?;
    let ass = associated_primes(ring);
    let mut out = CheckOutcome::verified("ass_extension");
    'outer: for p in &ass {
        let x = associated_witness(p).expect("associated prime has a witness");
        for f in &ps {
            let killed = f.iter().all(|&c| ring.mul(x, c) == ring.zero());
            if killed != coeffs_in(p.members(), f) {
                out = CheckOutcome::refuted(
                    "ass_extension",
                    vec![ring.name(x).to_string(), poly_text(ring, f)],
                );
                break 'outer;
            }
        }
    }
    Ok(degree_outcome(out, degree)
        .stat("associatedPrimes", ass.len() as u64)
        .stat("polynomials", ps.len() as u64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMode {
    Ass,
    Min,
}

impl CoverMode {
    fn name(self) -> &'static str {
        match self {
            CoverMode::Ass => "ass",
            CoverMode::Min => "min",
        }
    }
}

/// Zero-divisor polynomials (those with a scalar annihilator) are exactly
/// the union of the extended primes of the family; inclusions between the
/// extensions mirror inclusions between the primes; the number of maximal
/// extensions matches `zd(R)` when `R` has Property (A).
pub fn zd_cover_check(ring: &FiniteRing, degree: usize, mode: CoverMode, limits: &Limits) -> Result<CheckOutcome> {
    let z = ring.zero_divisors();
    let family: Vec<Ideal> = match mode {
        CoverMode::Ass => associated_primes(ring),
        CoverMode::Min => minimal_primes(ring, limits.ideal_cap)?,
    };
    let mut union = ring.empty_set();
    for p in &family {
        union.union_with(p.members());
    }
    let base = |out: CheckOutcome| {
        degree_outcome(out, degree)
            .param("mode", mode.name())
            .stat("primes", family.len() as u64)
    };
    if union != z {
        return Ok(base(CheckOutcome::inconclusive(
            "zd_cover",
            format!("hypothesis unmet: Z(R) is not the union of the {} primes", mode.name()),
        )));
    }
    let ps = polys(ring, degree, limits)?;
    let ann = Annihilators::new(ring);
    let mut extended: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(ps.len()); family.len()];
    let mut zd_count = 0u64;
    for (idx, f) in ps.iter().enumerate().skip(1) {
        let zd = ann.scalar(f).is_some();
        let mut covered = false;
        for (k, p) in family.iter().enumerate() {
            if coeffs_in(p.members(), f) {
                extended[k].insert(idx);
                covered = true;
            }
        }
        zd_count += zd as u64;
        if zd != covered {
            return Ok(base(CheckOutcome::refuted("zd_cover", vec![poly_text(ring, f)])));
        }
    }
    for (i, p) in family.iter().enumerate() {
        for (j, q) in family.iter().enumerate() {
            if extended[i].is_subset(&extended[j]) != p.is_subset(q) {
                return Ok(base(CheckOutcome::refuted(
                    "zd_cover_irredundance",
                    vec![p.to_string(), q.to_string()],
                )));
            }
        }
    }
    let maximal = (0..family.len())
        .filter(|&i| {
            !(0..family.len()).any(|j| {
                j != i && extended[i].is_subset(&extended[j]) && extended[i] != extended[j]
            })
        })
        .count();
    let mut out = CheckOutcome::verified("zd_cover");
    if has_property_a(ring, limits.ideal_cap)? {
        let base_degree = zd_degree(ring, limits.ideal_cap)?.degree();
        if base_degree != Some(maximal) {
            out = CheckOutcome::refuted(
                "zd_degree_transfer",
                vec![format!("{maximal}"), format!("{base_degree:?}")],
            );
        }
    }
    Ok(base(out)
        .stat("zeroDivisorPolynomials", zd_count)
        .stat("coverCount", maximal as u64))
}

/// `f` is regular exactly when `c(f)` contains a regular element.
pub fn regular_content_check(ring: &FiniteRing, degree: usize, limits: &Limits) -> Result<CheckOutcome> {
    let ps = polys(ring, degree, limits)?;
    let ann = Annihilators::new(ring);
    let z = ring.zero_divisors();
    let mut cache = IdealCache::new(ring);
    let mut out = CheckOutcome::verified("regular_content");
    for f in ps.iter().skip(1) {
        let regular = ann.scalar(f).is_none();
        let c = content_id(&mut cache, f);
        let regular_content = !cache.members(c).is_subset(&z);
        if regular != regular_content {
            out = CheckOutcome::refuted("regular_content", vec![poly_text(ring, f)]);
            break;
        }
    }
    Ok(degree_outcome(out, degree).stat("polynomials", ps.len() as u64 - 1))
}

/// `f` is nilpotent exactly when `c(f) ⊆ Nil(R)`. Nilpotency is decided by
/// exact repeated squaring up to an exponent of at least `|R|`.
pub fn nil_extension_check(ring: &FiniteRing, degree: usize, limits: &Limits) -> Result<CheckOutcome> {
    let ps = polys(ring, degree, limits)?;
    let nil = ring.nilpotents();
    let squarings = ring.order().next_power_of_two().trailing_zeros();
    let mut nilpotent_count = 0u64;
    let mut out = CheckOutcome::verified("nil_extension");
    for f in ps.iter().skip(1) {
        let mut power = f.clone();
        for _ in 0..squarings {
            if is_zero_poly(ring, &power) {
                break;
            }
            power = poly_mul(ring, &power, &power);
        }
        let nilpotent = is_zero_poly(ring, &power);
        nilpotent_count += nilpotent as u64;
        if nilpotent != coeffs_in(&nil, f) {
            out = CheckOutcome::refuted("nil_extension", vec![poly_text(ring, f)]);
            break;
        }
    }
    Ok(degree_outcome(out, degree)
        .stat("polynomials", ps.len() as u64 - 1)
        .stat("nilpotent", nilpotent_count))
}

/// The least `n` such that every product of `n` zero-divisors vanishes.
pub fn zero_divisor_nilpotency(ring: &FiniteRing) -> Option<usize> {
    let z: Vec<Elem> = ring.zero_divisors().ones().collect();
    let mut current: ElemSet = ring.zero_divisors();
    for n in 1..=ring.order().max(1) {
        if current.ones().all(|a| a == ring.zero()) {
            return Some(n);
        }
        let mut next = ring.empty_set();
        for a in current.ones() {
            for &b in &z {
                next.insert(ring.mul(a, b));
            }
        }
        if next == current {
            return None;
        }
        current = next;
    }
    None
}

/// With `n` least such that `Z(R)^n = 0`: every product of `n` zero-divisor
/// polynomials of degree at most `d` vanishes.
pub fn zpow_check(ring: &FiniteRing, degree: usize, limits: &Limits) -> Result<CheckOutcome> {
    let Some(n) = zero_divisor_nilpotency(ring) else {
        return Ok(degree_outcome(
            CheckOutcome::inconclusive("zpow", "no n with Z(R)^n = 0"),
            degree,
        ));
    };
    let ann = Annihilators::new(ring);
    let zd: Vec<Vec<Elem>> = polys(ring, degree, limits)?
        .into_iter()
        .skip(1)
        .filter(|f| ann.scalar(f).is_some())
        .collect();
    let base = |out: CheckOutcome| {
        degree_outcome(out, degree)
            .stat("n", n as u64)
            .stat("zeroDivisorPolynomials", zd.len() as u64)
    };
    if zd.is_empty() || n == 1 {
        let out = match zd.first() {
            Some(f) if n == 1 => CheckOutcome::refuted("zpow", vec![poly_text(ring, f)]),
            _ => CheckOutcome::verified("zpow"),
        };
        return Ok(base(out));
    }

    // Deduplicated products of k factors, each with one factorisation.
    let mut layer: Vec<(Vec<Elem>, Vec<usize>)> =
        zd.iter().enumerate().map(|(i, f)| (f.clone(), vec![i])).collect();
    let mut products = 0u64;
    for _ in 2..=n {
        let work = layer.len() as u128 * zd.len() as u128;
        if work > limits.case_cap as u128 {
            return Ok(base(sampled_zpow(ring, &zd, n, limits)));
        }
        let mut seen = std::collections::BTreeMap::new();
        for (p, factors) in &layer {
            for (i, f) in zd.iter().enumerate() {
                products += 1;
                let mut q = poly_mul(ring, p, f);
                while q.len() > 1 && q.last() == Some(&ring.zero()) {
                    q.pop();
                }
                seen.entry(q).or_insert_with(|| {
                    let mut fs = factors.clone();
                    fs.push(i);
                    fs
                });
            }
        }
        layer = seen.into_iter().collect();
    }
    let out = match layer.iter().find(|(q, _)| !is_zero_poly(ring, q)) {
        None => CheckOutcome::verified("zpow"),
        Some((_, factors)) => CheckOutcome::refuted(
            "zpow",
            factors.iter().map(|&i| poly_text(ring, &zd[i])).collect(),
        ),
    };
    Ok(base(out).param("mode", "exhaustive").stat("products", products))
}

/// Stratified sample: the first factor cycles through the zero-divisor
/// polynomials, the others are drawn from a seeded generator.
fn sampled_zpow(ring: &FiniteRing, zd: &[Vec<Elem>], n: usize, limits: &Limits) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
    let samples = limits.case_cap;
    for s in 0..samples {
        let mut factors = vec![s % zd.len()];
        factors.extend((1..n).map(|_| rng.random_range(0..zd.len())));
        let mut acc = zd[factors[0]].clone();
        for &i in &factors[1..] {
            acc = poly_mul(ring, &acc, &zd[i]);
        }
        if !is_zero_poly(ring, &acc) {
            return CheckOutcome::refuted(
                "zpow",
                factors.iter().map(|&i| poly_text(ring, &zd[i])).collect(),
            )
            .param("mode", "sampled")
            .param("seed", limits.seed);
        }
    }
    CheckOutcome::verified("zpow")
        .param("mode", "sampled")
        .param("seed", limits.seed)
        .stat("products", samples as u64)
}

/// `f` is not prime to `IB` (some `g ∉ IB` has `fg ∈ IB`) exactly when
/// `rf ∈ IB` for some `r ∉ I`. The search for `g` is degree-bounded, so a
/// mismatch is rechecked once with `g` of degree `d + 1`.
pub fn prime_to_check(ideal: &Ideal<'_>, degree: usize, limits: &Limits) -> Result<CheckOutcome> {
    let ring = ideal.ring();
    let i_set = ideal.members();
    let fs = polys(ring, degree, limits)?;
    let outside: Vec<Elem> = ring.elements().filter(|&r| !ideal.contains(r)).collect();
    let lhs = |f: &[Elem], gs: &[Vec<Elem>], cases: &mut u64| {
        gs.iter().any(|g| {
            *cases += 1;
            !coeffs_in(i_set, g) && coeffs_in(i_set, &poly_mul(ring, f, g))
        })
    };
    let mut cases = 0u64;
    let mut escalations = 0u64;
    let mut wider: Option<Vec<Vec<Elem>>> = None;
    let mut out = CheckOutcome::verified("prime_to");
    for f in &fs {
        let rhs = outside
            .iter()
            .any(|&r| f.iter().all(|&c| ideal.contains(ring.mul(r, c))));
        if lhs(f, &fs, &mut cases) == rhs {
            continue;
        }
        escalations += 1;
        if wider.is_none() {
            wider = Some(polys(ring, degree + 1, limits)?);
        }
        if lhs(f, wider.as_ref().unwrap(), &mut cases) != rhs {
            out = CheckOutcome::refuted("prime_to", vec![poly_text(ring, f)])
                .note("the search for g is bounded by degree d + 1");
            break;
        }
    }
    Ok(degree_outcome(out, degree)
        .param("ideal", ideal)
        .stat("polynomials", fs.len() as u64)
        .stat("products", cases)
        .stat("escalations", escalations))
}

/// For primal `R` with Property (A): zero-divisor polynomials are those with
/// content inside `Z(R)`, and they are closed under addition.
pub fn primal_extension_check(ring: &FiniteRing, degree: usize, limits: &Limits) -> Result<CheckOutcome> {
    if !is_primal(ring) {
        return Ok(degree_outcome(
            CheckOutcome::inconclusive("primal_extension", "hypothesis unmet: not primal"),
            degree,
        ));
    }
    if !has_property_a(ring, limits.ideal_cap)? {
        return Ok(degree_outcome(
            CheckOutcome::inconclusive("primal_extension", "hypothesis unmet: no Property (A)"),
            degree,
        ));
    }
    let ps = polys(ring, degree, limits)?;
    let ann = Annihilators::new(ring);
    let z = ring.zero_divisors();
    let mut zd = Vec::new();
    for f in &ps {
        let is_zd = ann.scalar(f).is_some();
        if is_zd != coeffs_in(&z, f) {
            return Ok(degree_outcome(
                CheckOutcome::refuted("primal_extension", vec![poly_text(ring, f)]),
                degree,
            ));
        }
        if is_zd {
            zd.push(f);
        }
    }
    let pairs = zd.len() as u128 * zd.len() as u128;
    if pairs > limits.case_cap as u128 {
        return Err(Error::limit("pair enumeration", pairs, limits.case_cap));
    }
    for (i, f) in zd.iter().enumerate() {
        for g in &zd[i..] {
            let sum: Vec<Elem> = f.iter().zip(g.iter()).map(|(&a, &b)| ring.add(a, b)).collect();
            if ann.scalar(&sum).is_none() {
                return Ok(degree_outcome(
                    CheckOutcome::refuted(
                        "primal_additive_closure",
                        vec![poly_text(ring, f), poly_text(ring, g)],
                    ),
                    degree,
                ));
            }
        }
    }
    Ok(degree_outcome(CheckOutcome::verified("primal_extension"), degree)
        .stat("zeroDivisorPolynomials", zd.len() as u64)
        .stat("pairs", (zd.len() * (zd.len() + 1) / 2) as u64))
}

/// Every regular element of `R` is a unit, so `T(R) = R`.
pub fn tq_triviality_check(ring: &FiniteRing) -> CheckOutcome {
    let (units, regulars) = ring.units_and_regulars();
    let out = match regulars.difference(&units).next() {
        None => CheckOutcome::verified("tq_triviality").note("degenerate: T(R) = R"),
        Some(r) => CheckOutcome::refuted("tq_triviality", vec![ring.name(r).to_string()]),
    };
    out.stat("regular", regulars.count_ones(..) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> FiniteRing {
        FiniteRing::zn(n).unwrap()
    }

    #[test]
    fn prime_extension_examples() {
        let limits = Limits::default();
        let z6 = zn(6);
        assert!(prime_extension_check(&Ideal::principal(&z6, 2), 2, &limits)
            .unwrap()
            .is_verified());
        let out = prime_extension_check(&Ideal::zero(&z6), 2, &limits).unwrap();
        assert_eq!(out.witness().unwrap(), ["2", "3"]);
        assert!(contraction_check(&Ideal::principal(&z6, 3)).is_verified());
    }

    #[test]
    fn local_ring_uses_cosets() {
        let limits = Limits::default();
        let r = FiniteRing::trunc_local(2, &['u', 'v'], 3, &[]).unwrap();
        let out = min_prime_bijection_check(&r, 2, &limits).unwrap();
        assert!(out.is_verified(), "{out:?}");
        assert_eq!(out.stats["cosets"], 2);
    }

    #[test]
    fn nilpotents_of_z4() {
        let z4 = zn(4);
        let t = Truncation::polys(&z4, 1, 100).unwrap();
        let nil = z4.nilpotents();
        let names: Vec<String> = (1..t.len())
            .filter(|&i| coeffs_in(&nil, &t.coeffs(i)))
            .map(|i| t.elem(i).to_string())
            .collect();
        assert_eq!(names, ["2", "2*X", "2*X + 2"]);
        let out = nil_extension_check(&z4, 1, &Limits::default()).unwrap();
        assert!(out.is_verified());
        assert_eq!(out.stats["nilpotent"], 3);
    }

    #[test]
    fn zero_divisor_nilpotency_values() {
        assert_eq!(zero_divisor_nilpotency(&zn(4)), Some(2));
        assert_eq!(zero_divisor_nilpotency(&zn(9)), Some(2));
        assert_eq!(zero_divisor_nilpotency(&zn(8)), Some(3));
        assert_eq!(zero_divisor_nilpotency(&zn(6)), None);
        assert_eq!(zero_divisor_nilpotency(&zn(5)), Some(1));
    }

    #[test]
    fn zpow_sampling_agrees() {
        let mut limits = Limits::default();
        let z8 = zn(8);
        assert!(zpow_check(&z8, 2, &limits).unwrap().is_verified());
        limits.case_cap = 100;
        let out = zpow_check(&z8, 2, &limits).unwrap();
        assert!(out.is_verified());
        assert_eq!(out.parameters["mode"], "sampled");
    }

    #[test]
    fn primal_examples() {
        let limits = Limits::default();
        assert!(primal_extension_check(&zn(8), 2, &limits).unwrap().is_verified());
        assert!(primal_extension_check(&zn(6), 2, &limits).unwrap().is_inconclusive());
        assert!(tq_triviality_check(&zn(12)).is_verified());
    }

    #[test]
    fn covers() {
        let limits = Limits::default();
        let out = zd_cover_check(&zn(6), 2, CoverMode::Ass, &limits).unwrap();
        assert!(out.is_verified());
        assert_eq!(out.stats["coverCount"], 2);
        let out = zd_cover_check(&zn(8), 2, CoverMode::Min, &limits).unwrap();
        assert!(out.is_verified());
        assert_eq!(out.stats["coverCount"], 1);
        assert!(zd_cover_check(&zn(7), 2, CoverMode::Ass, &limits).unwrap().is_verified());
    }

    #[test]
    fn prime_to_cases() {
        let limits = Limits::default();
        let z6 = zn(6);
        for g in [2, 3] {
            assert!(prime_to_check(&Ideal::principal(&z6, g), 2, &limits)
                .unwrap()
                .is_verified());
        }
        assert!(prime_to_check(&Ideal::whole(&z6), 1, &limits).unwrap().is_verified());
    }
}
