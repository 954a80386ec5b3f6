//! Commutative monoids: the free monoid `N^k` and finite monoids given by a
//! Cayley table, with cancellativity and torsion-freeness predicates.

use std::fmt;

use crate::error::{Error, Result};

/// An element of a [`Monoid`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MonoidElem {
    /// Exponent vector in `N^k`.
    Exponents(Vec<u32>),
    /// Row index into a finite table.
    Index(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiniteKind {
    Cyclic(usize),
    Table,
}

/// `s + t = s + u` with `t ≠ u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CancellationWitness {
    pub s: usize,
    pub t: usize,
    pub u: usize,
}

/// `n·s = n·t` with `s ≠ t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorsionWitness {
    pub n: usize,
    pub s: usize,
    pub t: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Monoid {
    Free {
        arity: usize,
    },
    Finite {
        kind: FiniteKind,
        size: usize,
        table: Vec<usize>,
        identity: usize,
        names: Vec<String>,
    },
}

impl fmt::Display for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monoid::Free { arity } => write!(f, "N^{arity}"),
            Monoid::Finite {
                kind: FiniteKind::Cyclic(n),
                ..
            } => write!(f, "C{n}"),
            Monoid::Finite { names, .. } => write!(f, "table{{{}}}", names.join(",")),
        }
    }
}

impl Monoid {
    pub fn free(arity: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::invalid("free monoid needs at least one generator"));
        }
        Ok(Monoid::Free { arity })
    }

    /// The additive monoid of `Z_n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("cyclic monoid needs n >= 1"));
        }
        let table = (0..n * n).map(|ij| (ij / n + ij % n) % n).collect();
        Ok(Monoid::Finite {
            kind: FiniteKind::Cyclic(n),
            size: n,
            table,
            identity: 0,
            names: (0..n).map(|i| i.to_string()).collect(),
        })
    }

    /// A monoid from its Cayley table, validated exhaustively.
    pub fn from_table(table: Vec<Vec<usize>>, identity: usize, names: Vec<String>) -> Result<Self> {
        let size = names.len();
        if size == 0 || table.len() != size || table.iter().any(|r| r.len() != size) {
            return Err(Error::invalid("monoid table must be square and match the names"));
        }
        if identity >= size {
            return Err(Error::invalid("monoid identity out of range"));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric()) {
                return Err(Error::invalid(format!("monoid element name {name:?} is not alphanumeric")));
            }
            if names[..i].contains(name) {
                return Err(Error::invalid(format!("monoid element name {name} repeated")));
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        if flat.iter().any(|&e| e >= size) {
            return Err(Error::invalid("monoid table entry out of range"));
        }
        let op = |a: usize, b: usize| flat[a * size + b];
        for a in 0..size {
            if op(identity, a) != a {
                return Err(Error::invalid(format!(
                    "{} is not an identity: {} + {} != {}",
                    names[identity], names[identity], names[a], names[a]
                )));
            }
            for b in 0..size {
                if op(a, b) != op(b, a) {
                    return Err(Error::invalid(format!(
                        "table is not commutative at ({}, {})",
                        names[a], names[b]
                    )));
                }
                for c in 0..size {
                    if op(op(a, b), c) != op(a, op(b, c)) {
                        return Err(Error::invalid(format!(
                            "table is not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(Monoid::Finite {
            kind: FiniteKind::Table,
            size,
            table: flat,
            identity,
            names,
        })
    }

    /// `{e, a, z}` with `a + a = a + z = z + z = z`: commutative, not
    /// cancellative.
    pub fn absorbing_example() -> Self {
        // e a z
        let table = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]];
        Monoid::from_table(table, 0, vec!["e".into(), "a".into(), "z".into()])
            .expect("valid table")
    }

    pub fn identity(&self) -> MonoidElem {
        match self {
            Monoid::Free { arity } => MonoidElem::Exponents(vec![0; *arity]),
            Monoid::Finite { identity, .. } => MonoidElem::Index(*identity),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Monoid::Finite { .. })
    }

    pub fn contains(&self, e: &MonoidElem) -> bool {
        match (self, e) {
            (Monoid::Free { arity }, MonoidElem::Exponents(v)) => v.len() == *arity,
            (Monoid::Finite { size, .. }, MonoidElem::Index(i)) => i < size,
            _ => false,
        }
    }

    pub fn op(&self, a: &MonoidElem, b: &MonoidElem) -> MonoidElem {
        match (self, a, b) {
            (Monoid::Free { .. }, MonoidElem::Exponents(x), MonoidElem::Exponents(y)) => {
                MonoidElem::Exponents(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            (Monoid::Finite { size, table, .. }, MonoidElem::Index(i), MonoidElem::Index(j)) => {
                MonoidElem::Index(table[i * size + j])
            }
            _ => panic!("monoid element from a different monoid"),
        }
    }

    /// `k·s`.
    pub fn multiple(&self, k: usize, s: &MonoidElem) -> MonoidElem {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.op(&acc, s);
        }
        acc
    }

    /// Canonical exponent text: `3` in `N`, `(1,0)` in `N^2`, the element
    /// name in a finite monoid.
    pub fn elem_name(&self, e: &MonoidElem) -> String {
        match (self, e) {
            (Monoid::Free { arity: 1 }, MonoidElem::Exponents(v)) => v[0].to_string(),
            (Monoid::Free { .. }, MonoidElem::Exponents(v)) => format!(
                "({})",
                v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            ),
            (Monoid::Finite { names, .. }, MonoidElem::Index(i)) => names[*i].clone(),
            _ => panic!("monoid element from a different monoid"),
        }
    }

    pub fn parse_elem(&self, text: &str) -> Option<MonoidElem> {
        let text = text.trim();
        match self {
            Monoid::Free { arity } => {
                let inner = if *arity == 1 {
                    text.strip_prefix('(')
                        .and_then(|t| t.strip_suffix(')'))
                        .unwrap_or(text)
                } else {
                    text.strip_prefix('(')?.strip_suffix(')')?
                };
                let v: Option<Vec<u32>> = inner.split(',').map(|p| p.trim().parse().ok()).collect();
                v.filter(|v| v.len() == *arity).map(MonoidElem::Exponents)
            }
            Monoid::Finite { names, .. } => {
                names.iter().position(|n| n == text).map(MonoidElem::Index)
            }
        }
    }

    /// Elements of a finite monoid, in index order.
    pub fn finite_elements(&self) -> Option<Vec<MonoidElem>> {
        match self {
            Monoid::Finite { size, .. } => Some((0..*size).map(MonoidElem::Index).collect()),
            Monoid::Free { .. } => None,
        }
    }

    /// The enumeration window: every element of a finite monoid, or the
    /// exponent vectors of total degree at most `degree`, ascending.
    pub fn window(&self, degree: usize) -> Vec<MonoidElem> {
        match self {
            Monoid::Finite { size, .. } => (0..*size).map(MonoidElem::Index).collect(),
            Monoid::Free { arity } => {
                let mut out = Vec::new();
                exponent_vectors(*arity, degree as u32, &mut Vec::new(), &mut out);
                out.sort();
                out.into_iter().map(MonoidElem::Exponents).collect()
            }
        }
    }

    /// First `(s, t, u)` in index order with `s + t = s + u`, `t ≠ u`.
    pub fn cancellation_witness(&self) -> Option<CancellationWitness> {
        let Monoid::Finite { size, table, .. } = self else {
            return None;
        };
        let n = *size;
        for s in 0..n {
            for t in 0..n {
                for u in 0..n {
                    if t != u && table[s * n + t] == table[s * n + u] {
                        return Some(CancellationWitness { s, t, u });
                    }
                }
            }
        }
        None
    }

    pub fn is_cancellative(&self) -> bool {
        self.cancellation_witness().is_none()
    }

    /// First `(n, s, t)` with `n <= bound`, `t < s` and `n·s = n·t`.
    pub fn torsion_witness(&self, bound: usize) -> Option<TorsionWitness> {
        let Monoid::Finite { size, table, identity, .. } = self else {
            return None;
        };
        let m = *size;
        let mut multiples = vec![*identity; m];
        for n in 1..=bound {
            for (s, slot) in multiples.iter_mut().enumerate() {
                *slot = table[*slot * m + s];
            }
            for s in 0..m {
                for t in 0..s {
                    if multiples[s] == multiples[t] {
                        return Some(TorsionWitness { n, s, t });
                    }
                }
            }
        }
        None
    }

    /// Torsion-freeness up to `|M|^2` multiples, which covers the index plus
    /// period of every orbit in a finite monoid.
    pub fn default_torsion_bound(&self) -> usize {
        match self {
            Monoid::Finite { size, .. } => size * size,
            Monoid::Free { .. } => 0,
        }
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion_witness(self.default_torsion_bound()).is_none()
    }

    /// The least `k >= 1` with `k·s = k·t`, if one exists within the bound.
    pub fn minimal_torsion_order(&self, s: &MonoidElem, t: &MonoidElem, bound: usize) -> Option<usize> {
        let (mut a, mut b) = (s.clone(), t.clone());
        for k in 1..=bound {
            if a == b {
                return Some(k);
            }
            a = self.op(&a, s);
            b = self.op(&b, t);
        }
        None
    }
}

fn exponent_vectors(arity: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() == arity {
        out.push(prefix.clone());
        return;
    }
    for e in 0..=budget {
        prefix.push(e);
        exponent_vectors(arity, budget - e, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_monoids_are_cancellative_and_torsion_free() {
        for k in 1..=3 {
            let m = Monoid::free(k).unwrap();
            assert!(m.is_cancellative());
            assert!(m.is_torsion_free());
        }
        let n2 = Monoid::free(2).unwrap();
        assert_eq!(n2.window(1).len(), 3);
        assert_eq!(n2.window(2).len(), 6);
        let n1 = Monoid::free(1).unwrap();
        assert_eq!(n1.window(2), vec![
            MonoidElem::Exponents(vec![0]),
            MonoidElem::Exponents(vec![1]),
            MonoidElem::Exponents(vec![2]),
        ]);
    }

    #[test]
    fn cyclic_torsion() {
        let c2 = Monoid::cyclic(2).unwrap();
        assert!(c2.is_cancellative());
        assert_eq!(c2.torsion_witness(4), Some(TorsionWitness { n: 2, s: 1, t: 0 }));
        let c3 = Monoid::cyclic(3).unwrap();
        assert!(c3.is_cancellative());
        assert_eq!(c3.torsion_witness(9), Some(TorsionWitness { n: 3, s: 1, t: 0 }));
        let c1 = Monoid::cyclic(1).unwrap();
        assert!(c1.is_torsion_free());
    }

    #[test]
    fn absorbing_table() {
        let m = Monoid::absorbing_example();
        let w = m.cancellation_witness().unwrap();
        let name = |i: usize| m.elem_name(&MonoidElem::Index(i));
        assert_eq!((name(w.s), name(w.t), name(w.u)), ("a".into(), "a".into(), "z".into()));
        let (s, t, u) = (MonoidElem::Index(w.s), MonoidElem::Index(w.t), MonoidElem::Index(w.u));
        assert_eq!(m.op(&s, &t), m.op(&s, &u));
        // The table monoid's non-cancellation also hides torsion: 2a = 2z.
        assert!(!m.is_torsion_free());
    }

    #[test]
    fn bad_tables_are_rejected() {
        let names = || vec!["e".to_string(), "a".to_string()];
        let non_comm = Monoid::from_table(vec![vec![0, 1], vec![0, 1]], 0, names());
        assert!(non_comm.is_err());
        let bad_identity = Monoid::from_table(vec![vec![1, 1], vec![1, 1]], 0, names());
        assert!(bad_identity.is_err());
        // Commutative with identity but not associative.
        let t = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 0]];
        let err = Monoid::from_table(t, 0, vec!["e".into(), "a".into(), "b".into()]).unwrap_err();
        assert!(err.to_string().contains("associative"));
    }

    #[test]
    fn element_names_round_trip() {
        let n2 = Monoid::free(2).unwrap();
        for e in n2.window(3) {
            assert_eq!(n2.parse_elem(&n2.elem_name(&e)), Some(e));
        }
        let m = Monoid::absorbing_example();
        for e in m.finite_elements().unwrap() {
            assert_eq!(m.parse_elem(&m.elem_name(&e)), Some(e));
        }
    }
}
