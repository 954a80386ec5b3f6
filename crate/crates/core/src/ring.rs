//! Finite commutative rings with identity, stored as full operation tables.
//!
//! Every ring is immutable once built. Elements are plain indices into the
//! tables; an index is only meaningful together with the ring it came from.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::limits::DEFAULT_ORDER_CAP;
use crate::literal;

/// Index of an element inside its ring's tables.
pub type Elem = usize;

/// A set of elements of one ring, one bit per element index.
pub type ElemSet = FixedBitSet;

/// Tables are stored as `u16`, which bounds any ring regardless of caps.
const HARD_ORDER_LIMIT: usize = 1 << 16;

/// How a ring was built. Drives element naming and element-literal parsing.
#[derive(Debug, Clone)]
pub enum Construction {
    /// Integers modulo `n`.
    Zn(usize),
    /// `Z_n[var]/(modulus)`, modulus monic, coefficients in ascending degree.
    UnivarQuot {
        n: usize,
        var: char,
        modulus: Vec<usize>,
    },
    /// `Z_n[vars]/((vars)^degree + extra monomials)`.
    TruncLocal {
        n: usize,
        vars: Vec<char>,
        degree: usize,
        extra: Vec<Vec<u32>>,
    },
    Product(Arc<FiniteRing>, Arc<FiniteRing>),
    /// Hand-supplied tables; elements are only addressable by name.
    Tables,
}

/// A finite commutative ring with identity.
#[derive(Clone)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: Elem,
    one: Elem,
    names: Vec<String>,
    by_name: HashMap<String, Elem>,
    generators: Vec<(char, Elem)>,
    construction: Construction,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("order", &self.order)
            .field("construction", &self.construction)
            .finish_non_exhaustive()
    }
}

fn check_order(order: u128, cap: usize) -> Result<usize> {
    let cap = cap.min(HARD_ORDER_LIMIT);
    if order > cap as u128 {
        return Err(Error::limit("ring order", order, cap));
    }
    Ok(order as usize)
}

fn checked_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc > u64::MAX as u128 {
            break;
        }
    }
    acc
}

impl FiniteRing {
    /// Integers modulo `n`.
    pub fn zn(n: usize) -> Result<Self> {
        Self::zn_capped(n, DEFAULT_ORDER_CAP)
    }

    pub fn zn_capped(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("Z_n needs n >= 1"));
        }
        let order = check_order(n as u128, cap)?;
        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                add[a * order + b] = ((a + b) % order) as u16;
                mul[a * order + b] = ((a * b) % order) as u16;
            }
        }
        let names = (0..order).map(|a| a.to_string()).collect();
        Ok(Self::assemble(
            add,
            mul,
            0,
            1 % order,
            names,
            Vec::new(),
            Construction::Zn(n),
        ))
    }

    /// `Z_n[var]/(f)` for a monic `f` given by ascending coefficients.
    pub fn univariate_quotient(n: usize, var: char, modulus: &[usize]) -> Result<Self> {
        Self::univariate_quotient_capped(n, var, modulus, DEFAULT_ORDER_CAP)
    }

    pub fn univariate_quotient_capped(
        n: usize,
        var: char,
        modulus: &[usize],
        cap: usize,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("quotient ring needs n >= 2"));
        }
        let mut f: Vec<usize> = modulus.iter().map(|c| c % n).collect();
        while f.last() == Some(&0) {
            f.pop();
        }
        if f.len() < 2 {
            return Err(Error::invalid("modulus must have degree >= 1"));
        }
        if *f.last().unwrap() != 1 {
            return Err(Error::invalid(format!(
                "modulus is not monic over Z{n} (leading coefficient {})",
                f.last().unwrap()
            )));
        }
        let d = f.len() - 1;
        check_order(checked_pow(n, d), cap)?;

        // Reductions of var^k for k < 2d - 1, as coefficient vectors of length d.
        let mut powers: Vec<Vec<usize>> = Vec::with_capacity(2 * d);
        let mut cur = vec![0usize; d + 1];
        cur[0] = 1;
        for _ in 0..(2 * d).max(2) {
            powers.push(cur[..d].to_vec());
            let mut next = vec![0usize; d + 1];
            next[1..(d + 1)].copy_from_slice(&cur[..d]);
            let top = next[d];
            if top != 0 {
                for i in 0..=d {
                    next[i] = (next[i] + n * n - top * f[i] % n) % n;
                }
            }
            cur = next;
        }
        let basis: Vec<Vec<u32>> = (0..d).map(|i| vec![i as u32]).collect();
        let vars = vec![var];
        let (add, mul) = build_algebra(n, d, |i, j| powers[i + j].clone());
        let names = algebra_names(n, &basis, &vars);
        let generator = digits_to_index(&powers[1], n);
        Ok(Self::assemble(
            add,
            mul,
            0,
            1,
            names,
            vec![(var, generator)],
            Construction::UnivarQuot {
                n,
                var,
                modulus: f,
            },
        ))
    }

    /// `Z_n[vars]/((vars)^degree + extra)`, where each extra relation is a
    /// monomial given by its exponent vector.
    pub fn trunc_local(n: usize, vars: &[char], degree: usize, extra: &[Vec<u32>]) -> Result<Self> {
        Self::trunc_local_capped(n, vars, degree, extra, DEFAULT_ORDER_CAP)
    }

    pub fn trunc_local_capped(
        n: usize,
        vars: &[char],
        degree: usize,
        extra: &[Vec<u32>],
        cap: usize,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("truncated ring needs n >= 2"));
        }
        if vars.is_empty() {
            return Err(Error::invalid("truncated ring needs at least one variable"));
        }
        if degree == 0 {
            return Err(Error::invalid("truncation degree must be >= 1"));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::invalid(format!("variable {v} listed twice")));
            }
        }
        for m in extra {
            if m.len() != vars.len() {
                return Err(Error::invalid("relation monomial has wrong arity"));
            }
            if m.iter().all(|&e| e == 0) {
                return Err(Error::invalid("relation monomial must have positive degree"));
            }
        }
        let k = vars.len();
        let killed = |m: &[u32]| -> bool {
            m.iter().sum::<u32>() as usize >= degree
                || extra.iter().any(|r| r.iter().zip(m).all(|(a, b)| a <= b))
        };
        let mut basis: Vec<Vec<u32>> = Vec::new();
        for total in 0..degree as u32 {
            let mut level = Vec::new();
            compositions(total, k, &mut Vec::new(), &mut level);
            // Descending lex within a degree: u^2 before uv before v^2.
            level.sort_by(|a, b| b.cmp(a));
            basis.extend(level.into_iter().filter(|m| !killed(m)));
            if checked_pow(n, basis.len()) > cap.min(HARD_ORDER_LIMIT) as u128 {
                return Err(Error::limit(
                    "ring order",
                    checked_pow(n, basis.len()),
                    cap.min(HARD_ORDER_LIMIT),
                ));
            }
        }
        let dim = basis.len();
        check_order(checked_pow(n, dim), cap)?;
        let position: HashMap<Vec<u32>, usize> =
            basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let (add, mul) = build_algebra(n, dim, |i, j| {
            let prod: Vec<u32> = basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect();
            let mut v = vec![0usize; dim];
            if !killed(&prod) {
                v[position[&prod]] = 1;
            }
            v
        });
        let names = algebra_names(n, &basis, vars);
        let generators = (0..k)
            .map(|i| {
                let mut m = vec![0u32; k];
                m[i] = 1;
                let idx = position.get(&m).map_or(0, |&p| checked_pow(n, p) as usize);
                (vars[i], idx)
            })
            .collect();
        Ok(Self::assemble(
            add,
            mul,
            0,
            1,
            names,
            generators,
            Construction::TruncLocal {
                n,
                vars: vars.to_vec(),
                degree,
                extra: extra.to_vec(),
            },
        ))
    }

    /// Componentwise product; element `(a, b)` has index `a * |right| + b`.
    pub fn product(left: Arc<FiniteRing>, right: Arc<FiniteRing>) -> Result<Self> {
        Self::product_capped(left, right, DEFAULT_ORDER_CAP)
    }

    pub fn product_capped(left: Arc<FiniteRing>, right: Arc<FiniteRing>, cap: usize) -> Result<Self> {
        let (n1, n2) = (left.order, right.order);
        let order = check_order(n1 as u128 * n2 as u128, cap)?;
        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        for a in 0..order {
            let (a1, a2) = (a / n2, a % n2);
            for b in 0..order {
                let (b1, b2) = (b / n2, b % n2);
                add[a * order + b] = (left.add(a1, b1) * n2 + right.add(a2, b2)) as u16;
                mul[a * order + b] = (left.mul(a1, b1) * n2 + right.mul(a2, b2)) as u16;
            }
        }
        let names = (0..order)
            .map(|a| format!("({},{})", left.name(a / n2), right.name(a % n2)))
            .collect();
        let zero = left.zero * n2 + right.zero;
        let one = left.one * n2 + right.one;
        Ok(Self::assemble(
            add,
            mul,
            zero,
            one,
            names,
            Vec::new(),
            Construction::Product(left, right),
        ))
    }

    /// A ring from raw tables. Only shape is validated here; run
    /// [`check_axioms`] to validate the ring laws.
    pub fn from_tables(
        add: Vec<Vec<Elem>>,
        mul: Vec<Vec<Elem>>,
        zero: Elem,
        one: Elem,
        names: Vec<String>,
    ) -> Result<Self> {
        let order = names.len();
        if order == 0 || order > HARD_ORDER_LIMIT {
            return Err(Error::invalid("ring must have between 1 and 65536 elements"));
        }
        let flatten = |t: Vec<Vec<Elem>>, which: &str| -> Result<Vec<u16>> {
            if t.len() != order || t.iter().any(|row| row.len() != order) {
                return Err(Error::invalid(format!("{which} table is not {order}x{order}")));
            }
            let flat: Vec<Elem> = t.into_iter().flatten().collect();
            if flat.iter().any(|&e| e >= order) {
                return Err(Error::invalid(format!("{which} table entry out of range")));
            }
            Ok(flat.into_iter().map(|e| e as u16).collect())
        };
        let add = flatten(add, "addition")?;
        let mul = flatten(mul, "multiplication")?;
        if zero >= order || one >= order {
            return Err(Error::invalid("identity index out of range"));
        }
        Ok(Self::assemble(add, mul, zero, one, names, Vec::new(), Construction::Tables))
    }

    fn assemble(
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: Elem,
        one: Elem,
        names: Vec<String>,
        generators: Vec<(char, Elem)>,
        construction: Construction,
    ) -> Self {
        let order = names.len();
        let neg = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| add[a * order + b] as usize == zero)
                    .unwrap_or(zero) as u16
            })
            .collect();
        let by_name = names.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        FiniteRing {
            order,
            add,
            mul,
            neg,
            zero,
            one,
            names,
            by_name,
            generators,
            construction,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.order + b] as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as Elem
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Exact lookup of a canonical element name.
    pub fn lookup(&self, name: &str) -> Option<Elem> {
        self.by_name.get(name).copied()
    }

    pub fn generators(&self) -> &[(char, Elem)] {
        &self.generators
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    /// Parses an element literal: a canonical name or a ring expression
    /// over integers, generators and (for products) tuples.
    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        literal::parse_element(self, text)
    }

    /// `k * 1` by double-and-add.
    pub fn from_integer(&self, k: u64) -> Elem {
        let mut acc = self.zero;
        let mut base = self.one;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        let mut acc = self.one;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    pub fn empty_set(&self) -> ElemSet {
        FixedBitSet::with_capacity(self.order)
    }

    /// `Z(R)`: elements killed by some nonzero element. Empty for the zero ring.
    pub fn zero_divisors(&self) -> ElemSet {
        let mut set = self.empty_set();
        if self.is_zero_ring() {
            return set;
        }
        for r in self.elements() {
            if self.elements().any(|s| s != self.zero && self.mul(r, s) == self.zero) {
                set.insert(r);
            }
        }
        set
    }

    /// Elements with a multiplicative inverse.
    pub fn units(&self) -> ElemSet {
        let mut set = self.empty_set();
        for r in self.elements() {
            if self.elements().any(|s| self.mul(r, s) == self.one) {
                set.insert(r);
            }
        }
        set
    }

    /// Complement of the zero-divisors.
    pub fn regulars(&self) -> ElemSet {
        let mut set = self.zero_divisors();
        set.toggle_range(..);
        set
    }

    pub fn units_and_regulars(&self) -> (ElemSet, ElemSet) {
        (self.units(), self.regulars())
    }

    pub fn is_nilpotent(&self, a: Elem) -> bool {
        let mut acc = a;
        for _ in 0..self.order {
            if acc == self.zero {
                return true;
            }
            acc = self.mul(acc, a);
        }
        acc == self.zero
    }

    pub fn nilpotents(&self) -> ElemSet {
        let mut set = self.empty_set();
        for a in self.elements().filter(|&a| self.is_nilpotent(a)) {
            set.insert(a);
        }
        set
    }

    pub fn is_reduced(&self) -> bool {
        self.nilpotents().count_ones(..) == 1
    }

    /// Proper zero-divisors `Z(R)*` in index order.
    pub fn proper_zero_divisors(&self) -> Vec<Elem> {
        self.zero_divisors()
            .ones()
            .filter(|&a| a != self.zero)
            .collect()
    }

    pub fn same_as(&self, other: &FiniteRing) -> bool {
        std::ptr::eq(self, other)
    }
}

/// All exponent vectors of length `k` summing to `total`.
fn compositions(total: u32, k: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() + 1 == k {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for e in 0..=total {
        prefix.push(e);
        compositions(total - e, k, prefix, out);
        prefix.pop();
    }
}

fn digits_to_index(digits: &[usize], n: usize) -> Elem {
    digits.iter().rev().fold(0, |acc, &d| acc * n + d)
}

fn index_to_digits(mut idx: Elem, n: usize, dim: usize) -> Vec<usize> {
    let mut out = vec![0; dim];
    for d in out.iter_mut() {
        *d = idx % n;
        idx /= n;
    }
    out
}

/// Tables of a free `Z_n`-algebra with basis `e_0 = 1, e_1, ..`, given the
/// coordinates of each basis product `e_i * e_j`.
fn build_algebra(
    n: usize,
    dim: usize,
    basis_product: impl Fn(usize, usize) -> Vec<usize>,
) -> (Vec<u16>, Vec<u16>) {
    let order = checked_pow(n, dim) as usize;
    let digits: Vec<Vec<usize>> = (0..order).map(|e| index_to_digits(e, n, dim)).collect();
    let place: Vec<usize> = (0..dim).map(|i| checked_pow(n, i) as usize).collect();
    let structure: Vec<Vec<usize>> = (0..dim * dim)
        .map(|ij| basis_product(ij / dim, ij % dim))
        .collect();

    let mut add = vec![0u16; order * order];
    for a in 0..order {
        for b in 0..order {
            let s: usize = (0..dim)
                .map(|i| (digits[a][i] + digits[b][i]) % n * place[i])
                .sum();
            add[a * order + b] = s as u16;
        }
    }

    // scaled[(i * n + c) * order + b] = c * e_i * b
    let mut scaled = vec![0u16; dim * n * order];
    for i in 0..dim {
        for b in 0..order {
            let mut v = vec![0usize; dim];
            for (j, &bj) in digits[b].iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                for (k, &s) in structure[i * dim + j].iter().enumerate() {
                    v[k] = (v[k] + bj * s) % n;
                }
            }
            for c in 0..n {
                let idx: usize = (0..dim).map(|k| v[k] * c % n * place[k]).sum();
                scaled[(i * n + c) * order + b] = idx as u16;
            }
        }
    }

    // Row a = row (a minus its top digit) plus the scaled top basis element.
    let mut mul = vec![0u16; order * order];
    for a in 1..order {
        let top = (0..dim).rev().find(|&i| digits[a][i] != 0).unwrap();
        let c = digits[a][top];
        let rest = a - c * place[top];
        for b in 0..order {
            let partial = mul[rest * order + b] as usize;
            let term = scaled[(top * n + c) * order + b] as usize;
            mul[a * order + b] = add[partial * order + term];
        }
    }
    (add, mul)
}

/// Canonical names of algebra elements: terms by descending degree, then
/// descending exponent vector; unit coefficients omitted on monomials.
fn algebra_names(n: usize, basis: &[Vec<u32>], vars: &[char]) -> Vec<String> {
    let dim = basis.len();
    let order = checked_pow(n, dim) as usize;
    let mut term_order: Vec<usize> = (0..dim).collect();
    term_order.sort_by(|&a, &b| {
        let da: u32 = basis[a].iter().sum();
        let db: u32 = basis[b].iter().sum();
        db.cmp(&da).then_with(|| basis[b].cmp(&basis[a]))
    });
    let monomials: Vec<String> = basis.iter().map(|m| monomial_name(m, vars)).collect();
    (0..order)
        .map(|e| {
            let digits = index_to_digits(e, n, dim);
            let terms: Vec<String> = term_order
                .iter()
                .filter(|&&i| digits[i] != 0)
                .map(|&i| match (digits[i], monomials[i].as_str()) {
                    (c, "") => c.to_string(),
                    (1, m) => m.to_string(),
                    (c, m) => format!("{c}{m}"),
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            }
        })
        .collect()
}

pub(crate) fn monomial_name(exponents: &[u32], vars: &[char]) -> String {
    let mut s = String::new();
    for (&e, &v) in exponents.iter().zip(vars) {
        match e {
            0 => {}
            1 => s.push(v),
            _ => {
                s.push(v);
                s.push('^');
                s.push_str(&e.to_string());
            }
        }
    }
    s
}

/// Which ring law failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    AdditiveIdentity,
    AdditiveInverse,
    AdditiveCommutativity,
    AdditiveAssociativity,
    MultiplicativeIdentity,
    MultiplicativeCommutativity,
    MultiplicativeAssociativity,
    Distributivity,
    ZeroIsOne,
    DuplicateName,
    NameRoundTrip,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: Vec<Elem>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self, axiom: Axiom) -> Option<&AxiomFailure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }
}

/// Exhaustive check of every ring law, O(order^3). Each failed law is
/// reported once, with the first witness found in index order.
pub fn check_axioms(ring: &FiniteRing) -> AxiomReport {
    let mut report = AxiomReport::default();
    let elems = ring.elements();
    let mut fail = |axiom: Axiom, witness: Vec<Elem>| {
        if report.failed(axiom).is_none() {
            report.failures.push(AxiomFailure { axiom, witness });
        }
    };
    let (zero, one) = (ring.zero(), ring.one());

    for a in elems.clone() {
        if ring.add(a, zero) != a || ring.add(zero, a) != a {
            fail(Axiom::AdditiveIdentity, vec![a]);
        }
        if !elems.clone().any(|b| ring.add(a, b) == zero) {
            fail(Axiom::AdditiveInverse, vec![a]);
        }
        if ring.mul(a, one) != a || ring.mul(one, a) != a {
            fail(Axiom::MultiplicativeIdentity, vec![a]);
        }
        for b in elems.clone() {
            if ring.add(a, b) != ring.add(b, a) {
                fail(Axiom::AdditiveCommutativity, vec![a, b]);
            }
            if ring.mul(a, b) != ring.mul(b, a) {
                fail(Axiom::MultiplicativeCommutativity, vec![a, b]);
            }
            for c in elems.clone() {
                if ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)) {
                    fail(Axiom::AdditiveAssociativity, vec![a, b, c]);
                }
                if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)) {
                    fail(Axiom::MultiplicativeAssociativity, vec![a, b, c]);
                }
                if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)) {
                    fail(Axiom::Distributivity, vec![a, b, c]);
                }
            }
        }
    }
    if ring.order() > 1 && zero == one {
        fail(Axiom::ZeroIsOne, vec![zero]);
    }
    let mut seen: HashMap<&str, Elem> = HashMap::new();
    for a in elems.clone() {
        if let Some(&prev) = seen.get(ring.name(a)) {
            fail(Axiom::DuplicateName, vec![prev, a]);
        } else {
            seen.insert(ring.name(a), a);
        }
    }
    for a in elems {
        if literal::parse_element(ring, ring.name(a)).ok() != Some(a) {
            fail(Axiom::NameRoundTrip, vec![a]);
        }
    }
    report
}
