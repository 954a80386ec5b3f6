//! Ideals of a finite ring and the pieces of the prime spectrum the content
//! theory needs: minimal and associated primes, Property (A), the
//! zero-divisor degree and primality of ideals.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::ring::{Elem, ElemSet, FiniteRing};

/// An ideal, stored as the bitset of its members.
#[derive(Clone)]
pub struct Ideal<'r> {
    ring: &'r FiniteRing,
    members: ElemSet,
}

impl PartialEq for Ideal<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(other.ring) && self.members == other.members
    }
}

impl Eq for Ideal<'_> {}

impl Hash for Ideal<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Ideal<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Cardinality first, then the bitset itself.
impl Ord for Ideal<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cardinality()
            .cmp(&other.cardinality())
            .then_with(|| cmp_bits(&self.members, &other.members))
    }
}

/// Compares two bitsets as binary numbers with element 0 least significant.
pub(crate) fn cmp_bits(a: &ElemSet, b: &ElemSet) -> Ordering {
    let (a, b) = (a.as_slice(), b.as_slice());
    let len = a.len().max(b.len());
    for i in (0..len).rev() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

impl fmt::Debug for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Greedy generator form, e.g. `(2)` or `(u,v)`.
impl fmt::Display for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<&str> = self.generators().iter().map(|&g| self.ring.name(g)).collect();
        if gens.is_empty() {
            write!(f, "(0)")
        } else {
            write!(f, "({})", gens.join(","))
        }
    }
}

impl<'r> Ideal<'r> {
    pub fn zero(ring: &'r FiniteRing) -> Self {
        let mut members = ring.empty_set();
        members.insert(ring.zero());
        Ideal { ring, members }
    }

    pub fn whole(ring: &'r FiniteRing) -> Self {
        let mut members = ring.empty_set();
        members.insert_range(..);
        Ideal { ring, members }
    }

    /// The least ideal containing `gens`.
    pub fn generated(ring: &'r FiniteRing, gens: impl IntoIterator<Item = Elem>) -> Self {
        let mut multiples = ring.empty_set();
        for g in gens {
            for r in ring.elements() {
                multiples.insert(ring.mul(r, g));
            }
        }
        Self::additive_closure(ring, &multiples)
    }

    pub fn principal(ring: &'r FiniteRing, g: Elem) -> Self {
        Self::generated(ring, [g])
    }

    /// Additive subgroup generated by a set that is already closed under
    /// multiplication by ring elements.
    fn additive_closure(ring: &'r FiniteRing, steps: &ElemSet) -> Self {
        let steps: Vec<Elem> = steps.ones().filter(|&s| s != ring.zero()).collect();
        let mut members = ring.empty_set();
        members.insert(ring.zero());
        let mut queue = vec![ring.zero()];
        while let Some(x) = queue.pop() {
            for &s in &steps {
                let y = ring.add(x, s);
                if !members.put(y) {
                    queue.push(y);
                }
            }
        }
        Ideal { ring, members }
    }

    /// Wraps a set the caller knows to be an ideal.
    pub fn from_members_unchecked(ring: &'r FiniteRing, members: ElemSet) -> Self {
        Ideal { ring, members }
    }

    /// Wraps `members` if it is an ideal.
    pub fn from_members(ring: &'r FiniteRing, members: ElemSet) -> Option<Self> {
        is_ideal_set(ring, &members).then_some(Ideal { ring, members })
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones()
    }

    pub fn cardinality(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_zero(&self) -> bool {
        self.cardinality() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.cardinality() == self.ring.order()
    }

    pub fn is_subset(&self, other: &Ideal<'_>) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Elements picked greedily in index order until they generate the ideal.
    pub fn generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = Ideal::zero(self.ring);
        for e in self.elements() {
            if !span.contains(e) {
                gens.push(e);
                span = Ideal::generated(self.ring, gens.iter().copied());
                if span.cardinality() == self.cardinality() {
                    break;
                }
            }
        }
        gens
    }

    /// Element names, in index order.
    pub fn member_names(&self) -> Vec<String> {
        self.elements().map(|e| self.ring.name(e).to_string()).collect()
    }

    fn check_same(&self, other: &Ideal<'_>) -> Result<()> {
        if self.ring.same_as(other.ring) {
            Ok(())
        } else {
            Err(Error::invalid("ideals live in different rings"))
        }
    }

    pub fn sum(&self, other: &Ideal<'_>) -> Result<Ideal<'r>> {
        self.check_same(other)?;
        let mut members = self.ring.empty_set();
        for a in self.elements() {
            for b in other.elements() {
                members.insert(self.ring.add(a, b));
            }
        }
        Ok(Ideal {
            ring: self.ring,
            members,
        })
    }

    pub fn product(&self, other: &Ideal<'_>) -> Result<Ideal<'r>> {
        self.check_same(other)?;
        let mut products = self.ring.empty_set();
        for a in self.elements() {
            for b in other.elements() {
                products.insert(self.ring.mul(a, b));
            }
        }
        Ok(Self::additive_closure(self.ring, &products))
    }

    /// `I^k`, with `I^0 = R`.
    pub fn power(&self, k: usize) -> Ideal<'r> {
        let mut acc = Ideal::whole(self.ring);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    pub fn intersection(&self, other: &Ideal<'_>) -> Result<Ideal<'r>> {
        self.check_same(other)?;
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ok(Ideal {
            ring: self.ring,
            members,
        })
    }

    /// `I : J = { r : rJ ⊆ I }`.
    pub fn colon(&self, other: &Ideal<'_>) -> Result<Ideal<'r>> {
        self.check_same(other)?;
        let mut members = self.ring.empty_set();
        for r in self.ring.elements() {
            if other.elements().all(|j| self.contains(self.ring.mul(r, j))) {
                members.insert(r);
            }
        }
        Ok(Ideal {
            ring: self.ring,
            members,
        })
    }

    /// `I : (r) = { c : cr ∈ I }`.
    pub fn colon_elem(&self, r: Elem) -> Ideal<'r> {
        let mut members = self.ring.empty_set();
        for c in self.ring.elements() {
            if self.contains(self.ring.mul(c, r)) {
                members.insert(c);
            }
        }
        Ideal {
            ring: self.ring,
            members,
        }
    }

    /// `Ann(I) = (0) : I`.
    pub fn annihilator(&self) -> Ideal<'r> {
        Ideal::zero(self.ring).colon(self).expect("same ring")
    }

    /// `{ r : r^t ∈ I for some 1 <= t <= |R| }`.
    pub fn radical(&self) -> Ideal<'r> {
        let ring = self.ring;
        let mut members = ring.empty_set();
        for r in ring.elements() {
            let mut p = r;
            for _ in 0..ring.order() {
                if self.contains(p) {
                    members.insert(r);
                    break;
                }
                p = ring.mul(p, r);
            }
        }
        Ideal { ring, members }
    }

    pub fn is_prime(&self) -> bool {
        if self.is_whole() {
            return false;
        }
        let outside: Vec<Elem> = self.ring.elements().filter(|&a| !self.contains(a)).collect();
        outside
            .iter()
            .all(|&a| outside.iter().all(|&b| !self.contains(self.ring.mul(a, b))))
    }

    /// Proper, and `I + (a) = R` for every `a ∉ I`.
    pub fn is_maximal(&self) -> bool {
        if self.is_whole() {
            return false;
        }
        self.ring.elements().filter(|&a| !self.contains(a)).all(|a| {
            self.sum(&Ideal::principal(self.ring, a))
                .expect("same ring")
                .is_whole()
        })
    }

    /// `S(I)`: elements `r` with `I : (r) ≠ I`.
    pub fn not_prime_to(&self) -> ElemSet {
        let mut s = self.ring.empty_set();
        for r in self.ring.elements() {
            if self.colon_elem(r) != *self {
                s.insert(r);
            }
        }
        s
    }

    /// `I` is primal when `S(I)` is an ideal.
    pub fn is_primal(&self) -> bool {
        is_ideal_set(self.ring, &self.not_prime_to())
    }

    /// `rI` as a set; an ideal because `I` is one.
    pub fn scaled(&self, r: Elem) -> Ideal<'r> {
        let mut members = self.ring.empty_set();
        for a in self.elements() {
            members.insert(self.ring.mul(r, a));
        }
        Ideal {
            ring: self.ring,
            members,
        }
    }
}

/// Is `set` nonempty, closed under addition and under multiplication by `R`?
pub fn is_ideal_set(ring: &FiniteRing, set: &ElemSet) -> bool {
    ideal_set_violation(ring, set).is_none()
}

/// A pair `(a, b)` from `set` with `a + b ∉ set`, or `(r, a)` with `ra ∉ set`.
pub fn ideal_set_violation(ring: &FiniteRing, set: &ElemSet) -> Option<IdealViolation> {
    if !set.contains(ring.zero()) {
        return Some(IdealViolation::MissingZero);
    }
    for a in set.ones() {
        for b in set.ones() {
            if !set.contains(ring.add(a, b)) {
                return Some(IdealViolation::Sum(a, b));
            }
        }
        for r in ring.elements() {
            if !set.contains(ring.mul(r, a)) {
                return Some(IdealViolation::Multiple(r, a));
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealViolation {
    MissingZero,
    Sum(Elem, Elem),
    Multiple(Elem, Elem),
}

/// All ideals of `ring`, sorted by cardinality then bitset.
pub fn enumerate_ideals(ring: &FiniteRing, cap: usize) -> Result<Vec<Ideal<'_>>> {
    if ring.order() > cap {
        return Err(Error::limit("ideal enumeration ring order", ring.order() as u128, cap));
    }
    let principals: Vec<Ideal> = {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in ring.elements() {
            let p = Ideal::principal(ring, g);
            if seen.insert(p.members.clone()) {
                out.push(p);
            }
        }
        out
    };
    let mut all: HashSet<ElemSet> = principals.iter().map(|p| p.members.clone()).collect();
    let mut frontier: Vec<Ideal> = principals.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for i in &frontier {
            for p in &principals {
                let s = i.sum(p).expect("same ring");
                if all.insert(s.members.clone()) {
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    let mut ideals: Vec<Ideal> = all
        .into_iter()
        .map(|members| Ideal { ring, members })
        .collect();
    ideals.sort();
    Ok(ideals)
}

pub fn prime_ideals(ring: &FiniteRing, cap: usize) -> Result<Vec<Ideal<'_>>> {
    Ok(enumerate_ideals(ring, cap)?
        .into_iter()
        .filter(Ideal::is_prime)
        .collect())
}

/// Inclusion-minimal primes.
pub fn minimal_primes(ring: &FiniteRing, cap: usize) -> Result<Vec<Ideal<'_>>> {
    let primes = prime_ideals(ring, cap)?;
    Ok(primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p)))
        .cloned()
        .collect())
}

/// Prime annihilators of nonzero elements.
pub fn associated_primes(ring: &FiniteRing) -> Vec<Ideal<'_>> {
    let mut seen = BTreeSet::new();
    for x in ring.elements().filter(|&x| x != ring.zero()) {
        let ann = Ideal::principal(ring, x).annihilator();
        if ann.is_prime() {
            seen.insert(ann);
        }
    }
    seen.into_iter().collect()
}

/// Nonzero `x` with `Ann(x) = p`, the least by index.
pub fn associated_witness<'r>(p: &Ideal<'r>) -> Option<Elem> {
    let ring = p.ring();
    ring.elements()
        .filter(|&x| x != ring.zero())
        .find(|&x| Ideal::principal(ring, x).annihilator() == *p)
}

pub fn zero_divisor_set(ring: &FiniteRing) -> ElemSet {
    ring.zero_divisors()
}

/// Every ideal inside `Z(R)` has a nonzero annihilator.
pub fn has_property_a(ring: &FiniteRing, cap: usize) -> Result<bool> {
    Ok(property_a_violation(ring, cap)?.is_none())
}

/// An ideal inside `Z(R)` with zero annihilator, if any.
pub fn property_a_violation(ring: &FiniteRing, cap: usize) -> Result<Option<Ideal<'_>>> {
    let z = ring.zero_divisors();
    Ok(enumerate_ideals(ring, cap)?
        .into_iter()
        .filter(|i| i.members.is_subset(&z))
        .find(|i| i.annihilator().is_zero()))
}

/// Result of the few-zero-divisors decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZdDegree<'r> {
    /// `Z(R)` is the union of exactly these pairwise incomparable primes.
    Few { n: usize, maximal_primes: Vec<Ideal<'r>> },
    NotFew,
}

impl ZdDegree<'_> {
    pub fn degree(&self) -> Option<usize> {
        match self {
            ZdDegree::Few { n, .. } => Some(*n),
            ZdDegree::NotFew => None,
        }
    }
}

/// Maximal primes inside `Z(R)` and their number, when they cover `Z(R)`.
pub fn zd_degree(ring: &FiniteRing, cap: usize) -> Result<ZdDegree<'_>> {
    if ring.is_zero_ring() {
        return Ok(ZdDegree::Few {
            n: 0,
            maximal_primes: Vec::new(),
        });
    }
    let z = ring.zero_divisors();
    let inside: Vec<Ideal> = prime_ideals(ring, cap)?
        .into_iter()
        .filter(|p| p.members.is_subset(&z))
        .collect();
    let maximal: Vec<Ideal> = inside
        .iter()
        .filter(|p| !inside.iter().any(|q| q != *p && p.is_subset(q)))
        .cloned()
        .collect();
    let mut union = ring.empty_set();
    for p in &maximal {
        union.union_with(&p.members);
    }
    if union == z {
        Ok(ZdDegree::Few {
            n: maximal.len(),
            maximal_primes: maximal,
        })
    } else {
        Ok(ZdDegree::NotFew)
    }
}

/// `Z(R)` is covered by associated primes contained in it.
pub fn very_few_zd(ring: &FiniteRing) -> bool {
    let z = ring.zero_divisors();
    let mut union = ring.empty_set();
    for p in associated_primes(ring) {
        if p.members.is_subset(&z) {
            union.union_with(&p.members);
        }
    }
    union == z
}

/// `Z(R)` is an ideal.
pub fn is_primal(ring: &FiniteRing) -> bool {
    if ring.is_zero_ring() {
        return false;
    }
    Ideal::zero(ring).is_primal()
}

/// Two zero-divisors whose sum is not a zero-divisor, when `R` is not primal
/// for that reason.
pub fn primal_violation(ring: &FiniteRing) -> Option<(Elem, Elem)> {
    match ideal_set_violation(ring, &ring.zero_divisors()) {
        Some(IdealViolation::Sum(a, b)) => Some((a, b)),
        _ => None,
    }
}

/// Index of the first prime containing `ideal`.
pub fn prime_cover_locate(ideal: &Ideal<'_>, primes: &[Ideal<'_>]) -> Option<usize> {
    primes.iter().position(|p| ideal.is_subset(p))
}

/// Interned ideals with memoised arithmetic, for checks that evaluate the
/// same handful of ideals millions of times.
pub struct IdealCache<'r> {
    ring: &'r FiniteRing,
    sets: Vec<ElemSet>,
    index: HashMap<ElemSet, usize>,
    principal: Vec<Option<usize>>,
    sums: HashMap<(usize, usize), usize>,
    products: HashMap<(usize, usize), usize>,
    radicals: HashMap<usize, usize>,
}

/// Handle to an interned ideal.
pub type IdealId = usize;

impl<'r> IdealCache<'r> {
    pub fn new(ring: &'r FiniteRing) -> Self {
        let mut cache = IdealCache {
            ring,
            sets: Vec::new(),
            index: HashMap::new(),
            principal: vec![None; ring.order()],
            sums: HashMap::new(),
            products: HashMap::new(),
            radicals: HashMap::new(),
        };
        cache.intern(Ideal::zero(ring));
        cache.intern(Ideal::whole(ring));
        cache
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn zero_id(&self) -> IdealId {
        0
    }

    pub fn whole_id(&self) -> IdealId {
        self.index[&Ideal::whole(self.ring).members]
    }

    pub fn intern(&mut self, ideal: Ideal<'_>) -> IdealId {
        if let Some(&id) = self.index.get(&ideal.members) {
            return id;
        }
        let id = self.sets.len();
        self.index.insert(ideal.members.clone(), id);
        self.sets.push(ideal.members);
        id
    }

    pub fn get(&self, id: IdealId) -> Ideal<'r> {
        Ideal {
            ring: self.ring,
            members: self.sets[id].clone(),
        }
    }

    pub fn members(&self, id: IdealId) -> &ElemSet {
        &self.sets[id]
    }

    pub fn principal(&mut self, e: Elem) -> IdealId {
        if let Some(id) = self.principal[e] {
            return id;
        }
        let id = self.intern(Ideal::principal(self.ring, e));
        self.principal[e] = Some(id);
        id
    }

    pub fn sum(&mut self, a: IdealId, b: IdealId) -> IdealId {
        let key = (a.min(b), a.max(b));
        if let Some(&id) = self.sums.get(&key) {
            return id;
        }
        let s = self.get(a).sum(&self.get(b)).expect("same ring");
        let id = self.intern(s);
        self.sums.insert(key, id);
        id
    }

    pub fn product(&mut self, a: IdealId, b: IdealId) -> IdealId {
        let key = (a.min(b), a.max(b));
        if let Some(&id) = self.products.get(&key) {
            return id;
        }
        let p = self.get(a).product(&self.get(b)).expect("same ring");
        let id = self.intern(p);
        self.products.insert(key, id);
        id
    }

    pub fn power(&mut self, a: IdealId, k: usize) -> IdealId {
        let mut acc = self.whole_id();
        for _ in 0..k {
            acc = self.product(acc, a);
        }
        acc
    }

    pub fn radical(&mut self, a: IdealId) -> IdealId {
        if let Some(&id) = self.radicals.get(&a) {
            return id;
        }
        let r = self.get(a).radical();
        let id = self.intern(r);
        self.radicals.insert(a, id);
        id
    }

    /// Ideal generated by a list of elements.
    pub fn generated(&mut self, gens: impl IntoIterator<Item = Elem>) -> IdealId {
        let mut acc = self.zero_id();
        for g in gens {
            if self.sets[acc].contains(g) {
                continue;
            }
            let p = self.principal(g);
            acc = self.sum(acc, p);
        }
        acc
    }

    pub fn is_subset(&self, a: IdealId, b: IdealId) -> bool {
        self.sets[a].is_subset(&self.sets[b])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn zn(n: usize) -> FiniteRing {
        FiniteRing::zn(n).unwrap()
    }

    fn names(i: &Ideal) -> Vec<String> {
        i.member_names()
    }

    #[test]
    fn generation() {
        let z6 = zn(6);
        assert_eq!(names(&Ideal::generated(&z6, [2])), ["0", "2", "4"]);
        assert!(Ideal::generated(&z6, []).is_zero());

        let r = FiniteRing::trunc_local(2, &['u', 'v'], 3, &[]).unwrap();
        let (u, v) = (r.lookup("u").unwrap(), r.lookup("v").unwrap());
        let m = Ideal::generated(&r, [u, v]);
        assert_eq!(m.cardinality(), 32);
        assert!(m.elements().all(|e| !r.units().contains(e)));
        assert_eq!(m.to_string(), "(u,v)");
    }

    #[test]
    fn arithmetic() {
        let z8 = zn(8);
        let four = Ideal::principal(&z8, 4);
        assert_eq!(four.radical(), Ideal::principal(&z8, 2));
        assert_eq!(names(&four.radical()), ["0", "2", "4", "6"]);

        let z4 = zn(4);
        let two = Ideal::principal(&z4, 2);
        assert_eq!(two.annihilator(), two);
        assert!(two.power(0).is_whole());
        assert_eq!(two.sum(&Ideal::zero(&z4)).unwrap(), two);
        assert!(two.power(2).is_zero());

        let z12 = zn(12);
        let i = Ideal::principal(&z12, 4);
        let j = Ideal::principal(&z12, 6);
        assert_eq!(i.intersection(&j).unwrap(), Ideal::zero(&z12));
        assert_eq!(i.sum(&j).unwrap(), Ideal::principal(&z12, 2));
        assert_eq!(i.product(&j).unwrap(), Ideal::zero(&z12));
        assert_eq!(Ideal::zero(&z12).colon(&i).unwrap(), Ideal::principal(&z12, 3));
        assert_eq!(Ideal::principal(&z12, 6).colon_elem(2), Ideal::principal(&z12, 3));
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let a = zn(4);
        let b = zn(4);
        let err = Ideal::zero(&a).sum(&Ideal::zero(&b)).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(_)));
    }

    #[test]
    fn enumeration() {
        let z4 = zn(4);
        let ideals = enumerate_ideals(&z4, 256).unwrap();
        assert_eq!(ideals.iter().map(|i| i.to_string()).collect::<Vec<_>>(), ["(0)", "(2)", "(1)"]);
        let z6 = zn(6);
        let ideals = enumerate_ideals(&z6, 256).unwrap();
        assert_eq!(
            ideals.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
            ["(0)", "(3)", "(2)", "(1)"]
        );
        assert_eq!(enumerate_ideals(&zn(7), 256).unwrap().len(), 2);
        assert!(matches!(
            enumerate_ideals(&zn(300), 256),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn primality() {
        let z6 = zn(6);
        assert!(Ideal::principal(&z6, 2).is_prime());
        assert!(Ideal::principal(&z6, 3).is_prime());
        assert!(!Ideal::zero(&z6).is_prime());
        let z4 = zn(4);
        let two = Ideal::principal(&z4, 2);
        assert!(two.is_prime() && two.is_maximal());
        assert!(!Ideal::whole(&z4).is_prime());
        assert!(!Ideal::whole(&z4).is_maximal());
    }

    #[test]
    fn maximality_matches_lattice() {
        let z2 = Arc::new(zn(2));
        let z4 = Arc::new(zn(4));
        let r = FiniteRing::product(z2, z4).unwrap();
        let all = enumerate_ideals(&r, 256).unwrap();
        for i in &all {
            let between = all
                .iter()
                .any(|j| j != i && !j.is_whole() && i.is_subset(j));
            assert_eq!(i.is_maximal(), !i.is_whole() && !between, "{i}");
        }
    }

    #[test]
    fn min_and_ass() {
        let z6 = zn(6);
        let min: Vec<String> = minimal_primes(&z6, 256).unwrap().iter().map(|p| p.to_string()).collect();
        let ass: Vec<String> = associated_primes(&z6).iter().map(|p| p.to_string()).collect();
        assert_eq!(min, ["(3)", "(2)"]);
        assert_eq!(ass, ["(3)", "(2)"]);
        let z4 = zn(4);
        let ass: Vec<String> = associated_primes(&z4).iter().map(|p| p.to_string()).collect();
        assert_eq!(ass, ["(2)"]);
        let f7 = zn(7);
        let min = minimal_primes(&f7, 256).unwrap();
        assert_eq!(min.len(), 1);
        assert!(min[0].is_zero());
    }

    #[test]
    fn property_a_and_few_zd() {
        let z6 = zn(6);
        assert!(has_property_a(&z6, 256).unwrap());
        assert!(has_property_a(&zn(5), 256).unwrap());
        let r = FiniteRing::trunc_local(2, &['u', 'v'], 3, &[]).unwrap();
        assert!(has_property_a(&r, 256).unwrap());

        assert_eq!(zd_degree(&z6, 256).unwrap().degree(), Some(2));
        let z8 = zn(8);
        match zd_degree(&z8, 256).unwrap() {
            ZdDegree::Few { n, maximal_primes } => {
                assert_eq!(n, 1);
                assert_eq!(maximal_primes[0], Ideal::principal(&z8, 2));
            }
            ZdDegree::NotFew => panic!(),
        }
        let z2 = Arc::new(zn(2));
        let v4 = Arc::new(FiniteRing::product(z2.clone(), z2.clone()).unwrap());
        let v8 = FiniteRing::product(v4, z2).unwrap();
        assert_eq!(zd_degree(&v8, 256).unwrap().degree(), Some(3));
        assert_eq!(zd_degree(&zn(1), 256).unwrap().degree(), Some(0));

        assert!(very_few_zd(&z6));
        assert!(very_few_zd(&zn(4)));
        assert!(very_few_zd(&zn(5)));
    }

    #[test]
    fn primal_rings() {
        assert!(is_primal(&zn(8)));
        let z6 = zn(6);
        assert!(!is_primal(&z6));
        let (a, b) = primal_violation(&z6).unwrap();
        assert!(z6.zero_divisors().contains(a) && z6.zero_divisors().contains(b));
        assert!(!z6.zero_divisors().contains(z6.add(a, b)));
        for n in 2..20 {
            let r = zn(n);
            assert_eq!(Ideal::zero(&r).not_prime_to(), r.zero_divisors());
        }
    }

    #[test]
    fn cover_lookup() {
        let z6 = zn(6);
        let primes = [Ideal::principal(&z6, 2), Ideal::principal(&z6, 3)];
        assert_eq!(prime_cover_locate(&Ideal::principal(&z6, 2), &primes), Some(0));
        assert_eq!(prime_cover_locate(&Ideal::zero(&z6), &primes), Some(0));
        assert_eq!(prime_cover_locate(&Ideal::whole(&z6), &primes), None);
    }

    #[test]
    fn cache_agrees_with_direct_arithmetic() {
        let z12 = zn(12);
        let mut cache = IdealCache::new(&z12);
        let a = cache.principal(4);
        let b = cache.principal(6);
        let s = cache.sum(a, b);
        assert_eq!(cache.get(s), Ideal::principal(&z12, 2));
        let p = cache.product(a, b);
        assert!(cache.get(p).is_zero());
        let g = cache.generated([8, 6]);
        assert_eq!(cache.get(g), Ideal::principal(&z12, 2));
        let rad = cache.radical(a);
        assert_eq!(cache.get(rad), Ideal::principal(&z12, 2));
    }
}
