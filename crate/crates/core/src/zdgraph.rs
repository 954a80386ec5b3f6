//! Zero-divisor graphs of finite rings and of degree-truncated polynomial
//! rings, their diameters, the structural diameter classification and the
//! predicted diameter of `Γ(R[X])`.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::content::{zero_divisor_nilpotency, Annihilators, CheckOutcome};
use crate::error::{Error, Result};
use crate::ideal::{has_property_a, is_primal, minimal_primes};
use crate::limits::Limits;
use crate::mring::Truncation;
use crate::ring::{Elem, FiniteRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    BaseRing,
    TruncatedPoly(usize),
}

/// Simple undirected graph with bitset adjacency rows.
#[derive(Debug, Clone)]
pub struct ZDGraph {
    pub kind: GraphKind,
    labels: Vec<String>,
    adjacency: Vec<FixedBitSet>,
}

impl ZDGraph {
    fn new(kind: GraphKind, labels: Vec<String>) -> Self {
        let n = labels.len();
        ZDGraph {
            kind,
            labels,
            adjacency: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    fn connect(&mut self, a: usize, b: usize) {
        self.adjacency[a].insert(b);
        self.adjacency[b].insert(a);
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    pub fn neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[a].ones()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.ones().filter(move |&b| b > a).map(move |b| (a, b)))
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Graphviz text with quoted labels, vertices then edges in index order.
    pub fn to_dot(&self) -> String {
        let q = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
        let mut out = String::from("graph G {\n");
        for l in &self.labels {
            out.push_str(&format!("  {};\n", q(l)));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  {} -- {};\n", q(&self.labels[a]), q(&self.labels[b])));
        }
        out.push_str("}\n");
        out
    }
}

/// `Γ(R)`: proper zero-divisors in index order, joined when the product
/// vanishes.
pub fn gamma_of_ring(ring: &FiniteRing) -> ZDGraph {
    let verts = ring.proper_zero_divisors();
    let labels = verts.iter().map(|&v| ring.name(v).to_string()).collect();
    let mut g = ZDGraph::new(GraphKind::BaseRing, labels);
    for (i, &a) in verts.iter().enumerate() {
        for (j, &b) in verts.iter().enumerate().skip(i + 1) {
            if ring.mul(a, b) == ring.zero() {
                g.connect(i, j);
            }
        }
    }
    g
}

/// Nonzero polynomials of degree at most `d` with a nonzero scalar
/// annihilator, joined when their exact product vanishes.
pub fn gamma_poly_truncated(ring: &FiniteRing, degree: usize, limits: &Limits) -> Result<ZDGraph> {
    let t = Truncation::polys(ring, degree, limits.poly_cap)?;
    let ann = Annihilators::new(ring);
    let verts: Vec<Vec<Elem>> = (1..t.len())
        .map(|i| t.coeffs(i))
        .filter(|c| ann.scalar(c).is_some())
        .collect();
    if verts.len() > limits.vertex_cap {
        return Err(Error::limit("graph vertices", verts.len() as u128, limits.vertex_cap));
    }
    let labels = verts.iter().map(|c| t.to_elem(c).to_string()).collect();
    let mut g = ZDGraph::new(GraphKind::TruncatedPoly(degree), labels);
    let mut prod = Vec::new();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            t.mul_into(&verts[i], &verts[j], &mut prod);
            if prod.iter().all(|&c| c == ring.zero()) {
                g.connect(i, j);
            }
        }
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    /// No vertices.
    Empty,
    Finite(usize),
    Disconnected,
}

impl Diameter {
    pub fn value(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            _ => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Empty => f.write_str("empty"),
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Disconnected => f.write_str("disconnected"),
        }
    }
}

/// Numbers for finite diameters, strings otherwise.
impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Empty => s.serialize_str("empty"),
            Diameter::Disconnected => s.serialize_str("disconnected"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DiameterInfo {
    pub diameter: Diameter,
    /// Least pair `(a, b)`, `a < b` by index, at maximal distance (or
    /// unreachable from each other).
    pub witness: Option<(String, String)>,
    pub connected: bool,
    pub vertices: usize,
    pub edges: usize,
}

/// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
fn bfs(g: &ZDGraph, src: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut visited = FixedBitSet::with_capacity(n);
    let mut frontier = FixedBitSet::with_capacity(n);
    dist[src] = 0;
    visited.insert(src);
    frontier.insert(src);
    let mut level = 0;
    while frontier.count_ones(..) > 0 {
        level += 1;
        let mut next = FixedBitSet::with_capacity(n);
        for v in frontier.ones() {
            next.union_with(&g.adjacency[v]);
        }
        next.difference_with(&visited);
        for v in next.ones() {
            dist[v] = level;
        }
        visited.union_with(&next);
        frontier = next;
    }
    dist
}

pub fn diameter(g: &ZDGraph) -> DiameterInfo {
    let n = g.vertex_count();
    let mut best: Option<(usize, usize, usize)> = None;
    let mut disconnected: Option<(usize, usize)> = None;
    for a in 0..n {
        let dist = bfs(g, a);
        for (b, &d) in dist.iter().enumerate().skip(a + 1) {
            if d == usize::MAX {
                disconnected.get_or_insert((a, b));
            } else if best.is_none_or(|(bd, _, _)| d > bd) {
                best = Some((d, a, b));
            }
        }
    }
    let label = |(a, b): (usize, usize)| (g.labels[a].clone(), g.labels[b].clone());
    let (diameter, witness) = match (n, disconnected, best) {
        (0, _, _) => (Diameter::Empty, None),
        (1, _, _) => (Diameter::Finite(0), None),
        (_, Some(pair), _) => (Diameter::Disconnected, Some(label(pair))),
        (_, None, Some((d, a, b))) => (Diameter::Finite(d), Some(label((a, b)))),
        (_, None, None) => unreachable!("two or more vertices give a pair"),
    };
    DiameterInfo {
        diameter,
        witness,
        connected: diameter != Diameter::Disconnected,
        vertices: n,
        edges: g.edge_count(),
    }
}

/// Ring invariants that decide the diameter of `Γ(R)` and of `Γ(R[X])`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StructuralFacts {
    pub base_diameter: Diameter,
    pub proper_zero_divisors: usize,
    pub reduced: bool,
    /// `ab = 0` for all `a, b ∈ Z(R)`.
    pub z_squared_zero: bool,
    /// `ab = 0` for all distinct `a, b ∈ Z(R)`.
    pub distinct_products_zero: bool,
    pub minimal_primes: usize,
    pub primal: bool,
    pub property_a: bool,
    /// Every two distinct proper zero-divisors share a nonzero annihilator.
    pub pairs_have_common_annihilator: bool,
    /// Least `n` with `Z(R)^n = 0`.
    pub zero_divisor_nilpotency: Option<usize>,
}

pub fn structural_facts(ring: &FiniteRing, limits: &Limits) -> Result<StructuralFacts> {
    let z: Vec<Elem> = ring.zero_divisors().ones().collect();
    let proper = ring.proper_zero_divisors();
    let zero = ring.zero();
    let z_squared_zero = z.iter().all(|&a| z.iter().all(|&b| ring.mul(a, b) == zero));
    let distinct_products_zero = proper
        .iter()
        .all(|&a| proper.iter().all(|&b| a == b || ring.mul(a, b) == zero));
    let ann = Annihilators::new(ring);
    let pairs_have_common_annihilator = proper.iter().enumerate().all(|(i, &a)| {
        proper[i + 1..].iter().all(|&b| ann.scalar(&[a, b]).is_some())
    });
    Ok(StructuralFacts {
        base_diameter: diameter(&gamma_of_ring(ring)).diameter,
        proper_zero_divisors: proper.len(),
        reduced: ring.is_reduced(),
        z_squared_zero,
        distinct_products_zero,
        minimal_primes: minimal_primes(ring, limits.ideal_cap)?.len(),
        primal: is_primal(ring),
        property_a: has_property_a(ring, limits.ideal_cap)?,
        pairs_have_common_annihilator,
        zero_divisor_nilpotency: zero_divisor_nilpotency(ring),
    })
}

/// Diameter of `Γ(R)` read off the structural criteria, without BFS.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GammaClassification {
    pub structural: Diameter,
    pub branch: String,
    pub bfs: Diameter,
}

impl GammaClassification {
    pub fn agrees(&self) -> bool {
        self.structural == self.bfs
    }
}

pub fn classify_facts(f: &StructuralFacts) -> (Diameter, &'static str) {
    let v = f.proper_zero_divisors;
    if v == 0 {
        return (Diameter::Empty, "no proper zero-divisors");
    }
    if v == 1 {
        return (Diameter::Finite(0), "single proper zero-divisor");
    }
    if f.distinct_products_zero {
        return (Diameter::Finite(1), "distinct zero-divisors multiply to zero");
    }
    if f.reduced && f.minimal_primes == 2 && v >= 3 {
        return (Diameter::Finite(2), "reduced with two minimal primes");
    }
    if f.primal && !f.z_squared_zero && f.pairs_have_common_annihilator {
        return (
            Diameter::Finite(2),
            "Z(R) ideal, Z(R)^2 != 0, pairs share an annihilator",
        );
    }
    (Diameter::Finite(3), "none of the diameter 0-2 criteria hold")
}

pub fn classify_gamma(ring: &FiniteRing, limits: &Limits) -> Result<GammaClassification> {
    let facts = structural_facts(ring, limits)?;
    let (structural, branch) = classify_facts(&facts);
    Ok(GammaClassification {
        structural,
        branch: branch.to_string(),
        bfs: facts.base_diameter,
    })
}

/// Predicted diameter of `Γ(R[X])` and the branch that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Prediction {
    /// `None` when no branch applies.
    pub diameter: Option<Diameter>,
    pub branch: String,
    pub trace: Vec<String>,
}

pub fn predict_extension_diam(f: &StructuralFacts) -> Prediction {
    let v = f.proper_zero_divisors;
    let mut trace = vec![format!("diam Γ(R) = {}", f.base_diameter)];
    let (diameter, branch) = match f.base_diameter {
        Diameter::Empty => (Some(Diameter::Empty), "R[X] is a domain"),
        Diameter::Finite(0) => (Some(Diameter::Finite(1)), "single vertex: Z4 or Z2[y]/(y^2)"),
        Diameter::Finite(1) if !f.reduced && v > 1 && f.z_squared_zero => {
            (Some(Diameter::Finite(1)), "nonreduced, Z(R)^2 = 0")
        }
        Diameter::Finite(1) if f.reduced && v == 2 => (Some(Diameter::Finite(2)), "Z2 x Z2"),
        Diameter::Finite(2) if v >= 3 && f.reduced && f.minimal_primes == 2 => {
            (Some(Diameter::Finite(2)), "reduced with two minimal primes")
        }
        Diameter::Finite(2) if v >= 3 && f.primal && !f.z_squared_zero && f.property_a => {
            (Some(Diameter::Finite(2)), "primal, Z(R)^2 != 0, Property (A)")
        }
        Diameter::Finite(2)
            if v >= 3 && f.primal && !f.property_a && f.pairs_have_common_annihilator =>
        {
            (Some(Diameter::Finite(3)), "primal without Property (A)")
        }
        Diameter::Finite(3) => (Some(Diameter::Finite(3)), "diameter 3 is already maximal"),
        _ => (None, "no branch applies"),
    };
    if let (Some(n), true) = (f.zero_divisor_nilpotency, v >= 2) {
        let expected = match n {
            2 => Some(Diameter::Finite(1)),
            n if n > 2 => Some(Diameter::Finite(2)),
            _ => None,
        };
        if let Some(e) = expected {
            let agree = diameter == Some(e);
            trace.push(format!(
                "Z(R)^{n} = 0 minimally gives {e}: {}",
                if agree { "agrees" } else { "conflict" }
            ));
        }
    }
    trace.push(format!("branch: {branch}"));
    Prediction {
        diameter,
        branch: branch.to_string(),
        trace,
    }
}

/// Truncated diameters across `degrees` are stable, never below the base
/// diameter, and equal to the prediction.
pub fn verify_diam(ring: &FiniteRing, degrees: &[usize], limits: &Limits) -> Result<CheckOutcome> {
    let facts = structural_facts(ring, limits)?;
    let prediction = predict_extension_diam(&facts);
    let mut out_stats = Vec::new();
    let mut infos = Vec::new();
    for &d in degrees {
        let info = diameter(&gamma_poly_truncated(ring, d, limits)?);
        out_stats.push((format!("vertices@{d}"), info.vertices as u64));
        infos.push((d, info));
    }
    let list = degrees.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let finish = |o: CheckOutcome| {
        let mut o = o
            .param("degrees", &list)
            .param("baseDiameter", facts.base_diameter)
            .param("branch", &prediction.branch);
        if let Some(p) = prediction.diameter {
            o = o.param("prediction", p);
        }
        for (d, info) in &infos {
            o = o.param(&format!("diameter@{d}"), info.diameter);
        }
        for (k, v) in &out_stats {
            o = o.stat(k, *v);
        }
        o
    };
    let pair = |info: &DiameterInfo| {
        info.witness
            .clone()
            .map(|(a, b)| vec![a, b])
            .unwrap_or_default()
    };
    for (d, info) in &infos {
        if info.diameter < facts.base_diameter || info.diameter == Diameter::Disconnected {
            return Ok(finish(
                CheckOutcome::refuted("diam_lower_bound", pair(info))
                    .note(format!("truncated diameter at degree {d} is below the base diameter")),
            ));
        }
    }
    if infos.windows(2).any(|w| w[0].1.diameter != w[1].1.diameter) {
        return Ok(finish(CheckOutcome::inconclusive(
            "diam",
            "stability: truncated diameters differ across degrees",
        )));
    }
    let Some(predicted) = prediction.diameter else {
        return Ok(finish(CheckOutcome::inconclusive("diam", "no prediction branch applies")));
    };
    let Some((_, last)) = infos.last() else {
        return Ok(finish(CheckOutcome::inconclusive("diam", "empty degree list")));
    };
    if last.diameter == predicted {
        Ok(finish(CheckOutcome::verified("diam")))
    } else {
        Ok(finish(CheckOutcome::refuted("diam", pair(last)).note(format!(
            "predicted {predicted}, truncated graph has {}",
            last.diameter
        ))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn zn(n: usize) -> FiniteRing {
        FiniteRing::zn(n).unwrap()
    }

    fn prod(a: FiniteRing, b: FiniteRing) -> FiniteRing {
        FiniteRing::product(Arc::new(a), Arc::new(b)).unwrap()
    }

    #[test]
    fn small_graphs() {
        let g = gamma_of_ring(&zn(6));
        assert_eq!(g.labels(), ["2", "3", "4"]);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, [(0, 1), (1, 2)]);
        let info = diameter(&g);
        assert_eq!(info.diameter, Diameter::Finite(2));
        assert_eq!(info.witness, Some(("2".into(), "4".into())));
        assert_eq!(diameter(&gamma_of_ring(&zn(4))).diameter, Diameter::Finite(0));
        assert_eq!(diameter(&gamma_of_ring(&zn(7))).diameter, Diameter::Empty);
        let info = diameter(&gamma_of_ring(&prod(zn(2), zn(4))));
        assert_eq!(info.diameter, Diameter::Finite(3));
        assert_eq!(info.witness, Some(("(0,1)".into(), "(1,2)".into())));
    }

    #[test]
    fn dot_output() {
        let dot = gamma_of_ring(&zn(6)).to_dot();
        assert_eq!(
            dot,
            "graph G {\n  \"2\";\n  \"3\";\n  \"4\";\n  \"2\" -- \"3\";\n  \"3\" -- \"4\";\n}\n"
        );
    }

    #[test]
    fn truncated_graphs() {
        let limits = Limits::default();
        let g = gamma_poly_truncated(&zn(4), 1, &limits).unwrap();
        assert_eq!(g.labels(), ["2", "2*X", "2*X + 2"]);
        assert_eq!(diameter(&g).diameter, Diameter::Finite(1));
        let g = gamma_poly_truncated(&prod(zn(2), zn(2)), 1, &limits).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(diameter(&g).diameter, Diameter::Finite(2));
        assert_eq!(gamma_poly_truncated(&zn(5), 2, &limits).unwrap().vertex_count(), 0);
        for r in [zn(6), zn(8), prod(zn(2), zn(4))] {
            let base = gamma_of_ring(&r);
            let zero = gamma_poly_truncated(&r, 0, &limits).unwrap();
            assert_eq!(base.labels(), zero.labels());
            assert_eq!(base.edges().collect::<Vec<_>>(), zero.edges().collect::<Vec<_>>());
        }
    }

    #[test]
    fn classification_branches() {
        let limits = Limits::default();
        let c = classify_gamma(&zn(9), &limits).unwrap();
        assert_eq!((c.structural, c.branch.as_str()), (Diameter::Finite(1), "distinct zero-divisors multiply to zero"));
        let c = classify_gamma(&zn(6), &limits).unwrap();
        assert_eq!(c.branch, "reduced with two minimal primes");
        let c = classify_gamma(&zn(8), &limits).unwrap();
        assert_eq!(c.branch, "Z(R) ideal, Z(R)^2 != 0, pairs share an annihilator");
        assert!(c.agrees());
    }

    #[test]
    fn predictions() {
        let limits = Limits::default();
        let y = FiniteRing::univariate_quotient(2, 'y', &[0, 0, 1]).unwrap();
        let cases = [
            (zn(4), 1),
            (y, 1),
            (zn(9), 1),
            (prod(zn(2), zn(2)), 2),
            (zn(6), 2),
            (zn(8), 2),
            (prod(zn(2), zn(4)), 3),
        ];
        for (r, want) in cases {
            let p = predict_extension_diam(&structural_facts(&r, &limits).unwrap());
            assert_eq!(p.diameter, Some(Diameter::Finite(want)), "{p:?}");
            assert!(!p.trace.iter().any(|t| t.ends_with("conflict")), "{p:?}");
        }
    }

    #[test]
    fn missing_property_a_predicts_three() {
        let facts = StructuralFacts {
            base_diameter: Diameter::Finite(2),
            proper_zero_divisors: 5,
            reduced: false,
            z_squared_zero: false,
            distinct_products_zero: false,
            minimal_primes: 1,
            primal: true,
            property_a: false,
            pairs_have_common_annihilator: true,
            zero_divisor_nilpotency: None,
        };
        let p = predict_extension_diam(&facts);
        assert_eq!(p.diameter, Some(Diameter::Finite(3)));
        assert_eq!(p.branch, "primal without Property (A)");
    }

    #[test]
    fn verify_examples() {
        let limits = Limits::default();
        for r in [zn(4), zn(9), prod(zn(2), zn(2))] {
            let out = verify_diam(&r, &[1, 2], &limits).unwrap();
            assert!(out.is_verified(), "{out:?}");
        }
    }
}
