//! Elements of the monoid ring `R[S]` and the degree-truncated windows used to
//! quantify over it.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::literal;
use crate::monoid::{Monoid, MonoidElem};
use crate::ring::{Elem, FiniteRing};

/// The monoid `N`, making `R[S]` the polynomial ring `R[X]`.
pub static UNIVARIATE: Monoid = Monoid::Free { arity: 1 };

/// A finite sum of monomials with nonzero coefficients.
#[derive(Clone)]
pub struct MRElem<'a> {
    ring: &'a FiniteRing,
    monoid: &'a Monoid,
    terms: BTreeMap<MonoidElem, Elem>,
}

impl PartialEq for MRElem<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(other.ring) && self.monoid == other.monoid && self.terms == other.terms
    }
}

impl Eq for MRElem<'_> {}

impl fmt::Display for MRElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&literal::format_mr(self))
    }
}

impl fmt::Debug for MRElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MRElem({self})")
    }
}

impl<'a> MRElem<'a> {
    pub fn zero(ring: &'a FiniteRing, monoid: &'a Monoid) -> Self {
        MRElem {
            ring,
            monoid,
            terms: BTreeMap::new(),
        }
    }

    /// Sums the given terms, dropping zero coefficients.
    pub fn from_terms(
        ring: &'a FiniteRing,
        monoid: &'a Monoid,
        terms: impl IntoIterator<Item = (MonoidElem, Elem)>,
    ) -> Result<Self> {
        let mut out = MRElem::zero(ring, monoid);
        for (s, r) in terms {
            if !monoid.contains(&s) {
                return Err(Error::invalid("exponent does not belong to the monoid"));
            }
            if r >= ring.order() {
                return Err(Error::invalid("coefficient out of range"));
            }
            out.add_term(s, r);
        }
        Ok(out)
    }

    pub fn monomial(ring: &'a FiniteRing, monoid: &'a Monoid, coeff: Elem, exp: MonoidElem) -> Self {
        let mut out = MRElem::zero(ring, monoid);
        out.add_term(exp, coeff);
        out
    }

    pub fn constant(ring: &'a FiniteRing, monoid: &'a Monoid, coeff: Elem) -> Self {
        Self::monomial(ring, monoid, coeff, monoid.identity())
    }

    /// A polynomial in `R[X]` from ascending coefficients.
    pub fn poly(ring: &'a FiniteRing, coeffs: &[Elem]) -> Self {
        let mut out = MRElem::zero(ring, &UNIVARIATE);
        for (i, &c) in coeffs.iter().enumerate() {
            out.add_term(MonoidElem::Exponents(vec![i as u32]), c);
        }
        out
    }

    fn add_term(&mut self, s: MonoidElem, r: Elem) {
        let zero = self.ring.zero();
        if r == zero {
            return;
        }
        match self.terms.entry(s) {
            Entry::Vacant(slot) => {
                slot.insert(r);
            }
            Entry::Occupied(mut slot) => {
                let sum = self.ring.add(*slot.get(), r);
                if sum == zero {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn ring(&self) -> &'a FiniteRing {
        self.ring
    }

    pub fn monoid(&self) -> &'a Monoid {
        self.monoid
    }

    /// Terms in ascending monoid order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MonoidElem, Elem)> + '_ {
        self.terms.iter().map(|(s, &r)| (s, r))
    }

    pub fn coeff(&self, s: &MonoidElem) -> Elem {
        self.terms.get(s).copied().unwrap_or(self.ring.zero())
    }

    pub fn coefficients(&self) -> impl Iterator<Item = Elem> + '_ {
        self.terms.values().copied()
    }

    pub fn support(&self) -> Vec<MonoidElem> {
        self.terms.keys().cloned().collect()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree of a term; `None` for zero or finite monoids.
    pub fn degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .filter_map(|s| match s {
                MonoidElem::Exponents(v) => Some(v.iter().sum()),
                MonoidElem::Index(_) => None,
            })
            .max()
    }

    fn check_same(&self, other: &MRElem<'_>) -> Result<()> {
        if self.ring.same_as(other.ring) && self.monoid == other.monoid {
            Ok(())
        } else {
            Err(Error::invalid("monoid ring elements over different ambients"))
        }
    }

    pub fn add(&self, other: &MRElem<'_>) -> Result<MRElem<'a>> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (s, r) in other.terms() {
            out.add_term(s.clone(), r);
        }
        Ok(out)
    }

    pub fn neg(&self) -> MRElem<'a> {
        MRElem {
            ring: self.ring,
            monoid: self.monoid,
            terms: self
                .terms
                .iter()
                .map(|(s, &r)| (s.clone(), self.ring.neg(r)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &MRElem<'_>) -> Result<MRElem<'a>> {
        self.add(&other.neg())
    }

    /// Convolution: the coefficient of `w` is the sum of `f(u) g(v)` over
    /// `u + v = w`.
    pub fn mul(&self, other: &MRElem<'_>) -> Result<MRElem<'a>> {
        self.check_same(other)?;
        let mut out = MRElem::zero(self.ring, self.monoid);
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                out.add_term(self.monoid.op(u, v), self.ring.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, r: Elem) -> MRElem<'a> {
        let mut out = MRElem::zero(self.ring, self.monoid);
        for (s, a) in self.terms() {
            out.add_term(s.clone(), self.ring.mul(r, a));
        }
        out
    }

    pub fn pow(&self, k: usize) -> MRElem<'a> {
        let mut acc = MRElem::constant(self.ring, self.monoid, self.ring.one());
        for _ in 0..k {
            acc = acc.mul(self).expect("same ambient");
        }
        acc
    }

    /// `c(f)`: the ideal generated by the coefficients.
    pub fn content(&self) -> Ideal<'a> {
        Ideal::generated(self.ring, self.coefficients())
    }

    /// Is `f ∈ IB`, i.e. every coefficient in `I`?
    pub fn in_extended(&self, ideal: &Ideal<'_>) -> bool {
        self.coefficients().all(|c| ideal.contains(c))
    }
}

/// All elements of `R[S]` supported on a finite window of `S`, addressed by
/// index, with products computed exactly on the window's sumset.
pub struct Truncation<'a> {
    ring: &'a FiniteRing,
    monoid: &'a Monoid,
    window: Vec<MonoidElem>,
    sums: Vec<MonoidElem>,
    /// `sum_index[i * w + j]` is the position of `window[i] + window[j]` in `sums`.
    sum_index: Vec<usize>,
    count: usize,
}

impl<'a> Truncation<'a> {
    /// Window of total degree at most `degree` (or all of a finite monoid),
    /// provided `|R|^w - 1 <= cap`.
    pub fn new(ring: &'a FiniteRing, monoid: &'a Monoid, degree: usize, cap: usize) -> Result<Self> {
        Self::over(ring, monoid, monoid.window(degree), cap)
    }

    pub fn polys(ring: &'a FiniteRing, degree: usize, cap: usize) -> Result<Self> {
        Self::new(ring, &UNIVARIATE, degree, cap)
    }

    pub fn over(
        ring: &'a FiniteRing,
        monoid: &'a Monoid,
        window: Vec<MonoidElem>,
        cap: usize,
    ) -> Result<Self> {
        let w = window.len();
        let mut count: u128 = 1;
        for _ in 0..w {
            count = count.saturating_mul(ring.order() as u128);
            if count > cap as u128 + 1 {
                break;
            }
        }
        if count - 1 > cap as u128 {
            return Err(Error::limit("truncated polynomial enumeration", count - 1, cap));
        }
        let mut sums: Vec<MonoidElem> = Vec::new();
        for a in &window {
            for b in &window {
                sums.push(monoid.op(a, b));
            }
        }
        sums.sort();
        sums.dedup();
        let sum_index = window
            .iter()
            .flat_map(|a| window.iter().map(move |b| (a, b)))
            .map(|(a, b)| sums.binary_search(&monoid.op(a, b)).expect("present"))
            .collect();
        Ok(Truncation {
            ring,
            monoid,
            window,
            sums,
            sum_index,
            count: count as usize,
        })
    }

    pub fn ring(&self) -> &'a FiniteRing {
        self.ring
    }

    pub fn monoid(&self) -> &'a Monoid {
        self.monoid
    }

    pub fn window(&self) -> &[MonoidElem] {
        &self.window
    }

    /// Number of elements, zero included.
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Coefficients of element `idx`, one per window position. Index 0 is
    /// the zero element; the first window position varies fastest.
    pub fn coeffs(&self, mut idx: usize) -> Vec<Elem> {
        let n = self.ring.order();
        let mut out = vec![0; self.window.len()];
        for c in out.iter_mut() {
            *c = idx % n;
            idx /= n;
        }
        out
    }

    pub fn index_of(&self, coeffs: &[Elem]) -> usize {
        let n = self.ring.order();
        coeffs.iter().rev().fold(0, |acc, &c| acc * n + c)
    }

    /// Index of `f` if it is supported on the window.
    pub fn index_of_elem(&self, f: &MRElem<'_>) -> Option<usize> {
        let mut coeffs = vec![self.ring.zero(); self.window.len()];
        for (s, r) in f.terms() {
            let pos = self.window.iter().position(|w| w == s)?;
            coeffs[pos] = r;
        }
        Some(self.index_of(&coeffs))
    }

    pub fn to_elem(&self, coeffs: &[Elem]) -> MRElem<'a> {
        let mut out = MRElem::zero(self.ring, self.monoid);
        for (s, &c) in self.window.iter().zip(coeffs) {
            out.add_term(s.clone(), c);
        }
        out
    }

    pub fn elem(&self, idx: usize) -> MRElem<'a> {
        self.to_elem(&self.coeffs(idx))
    }

    /// All coefficient vectors in index order, zero first.
    pub fn all_coeffs(&self) -> Vec<Vec<Elem>> {
        (0..self.count).map(|i| self.coeffs(i)).collect()
    }

    pub fn product_len(&self) -> usize {
        self.sums.len()
    }

    /// Exact product coefficients, one per element of the window sumset.
    pub fn mul_into(&self, a: &[Elem], b: &[Elem], out: &mut Vec<Elem>) {
        let ring = self.ring;
        let w = self.window.len();
        out.clear();
        out.resize(self.sums.len(), ring.zero());
        for (i, &ai) in a.iter().enumerate() {
            if ai == ring.zero() {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == ring.zero() {
                    continue;
                }
                let k = self.sum_index[i * w + j];
                out[k] = ring.add(out[k], ring.mul(ai, bj));
            }
        }
    }

    pub fn mul(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let mut out = Vec::new();
        self.mul_into(a, b, &mut out);
        out
    }

    pub fn product_is_zero(&self, a: &[Elem], b: &[Elem]) -> bool {
        let mut out = Vec::new();
        self.mul_into(a, b, &mut out);
        out.iter().all(|&c| c == self.ring.zero())
    }

    pub fn product_elem(&self, coeffs: &[Elem]) -> MRElem<'a> {
        let mut out = MRElem::zero(self.ring, self.monoid);
        for (s, &c) in self.sums.iter().zip(coeffs) {
            out.add_term(s.clone(), c);
        }
        out
    }
}

/// Every nonzero polynomial of degree at most `degree` over `ring`, in
/// index order.
pub fn enumerate_polys(
    ring: &FiniteRing,
    degree: usize,
    cap: usize,
) -> Result<impl Iterator<Item = MRElem<'_>>> {
    let t = Truncation::polys(ring, degree, cap)?;
    Ok((1..t.len()).map(move |i| t.elem(i)))
}
