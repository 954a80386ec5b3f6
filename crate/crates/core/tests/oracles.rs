//! Library results against brute-force computations written independently
//! of the library (number theory for Zn, Floyd–Warshall for graphs).

use contalg::ideal::{self, Ideal};
use contalg::zdgraph::{self, Diameter};
use contalg::{FiniteRing, Limits, MRElem, RingExpr};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn ring(expr: &str) -> FiniteRing {
    RingExpr::parse(expr).unwrap().build(&Limits::default()).unwrap()
}

fn names(r: &FiniteRing, set: &contalg::ElemSet) -> Vec<String> {
    set.ones().map(|e| r.name(e).to_string()).collect()
}

#[test]
fn zn_element_classes() {
    for n in 2..=60 {
        let r = FiniteRing::zn(n).unwrap();
        let primes = prime_factors(n);
        let radical: usize = primes.iter().product();
        let zd: Vec<String> = (0..n).filter(|&a| gcd(a, n) > 1 || a == 0).map(|a| a.to_string()).collect();
        let units: Vec<String> = (0..n).filter(|&a| gcd(a, n) == 1).map(|a| a.to_string()).collect();
        let nil: Vec<String> = (0..n).filter(|&a| a % radical == 0).map(|a| a.to_string()).collect();
        assert_eq!(names(&r, &r.zero_divisors()), zd, "Z{n}");
        assert_eq!(names(&r, &r.units()), units, "Z{n}");
        assert_eq!(names(&r, &r.nilpotents()), nil, "Z{n}");
    }
}

#[test]
fn zn_ideal_lattice() {
    for n in 2..=60 {
        let r = FiniteRing::zn(n).unwrap();
        let divisors = (1..=n).filter(|d| n % d == 0).count();
        assert_eq!(ideal::enumerate_ideals(&r, 256).unwrap().len(), divisors, "Z{n}");
        let primes = prime_factors(n);
        let mut got: Vec<usize> = ideal::prime_ideals(&r, 256)
            .unwrap()
            .iter()
            .map(|p| p.generators().into_iter().map(|g| gcd(g, n)).fold(n, gcd))
            .collect();
        got.sort();
        let expected = if primes == [n] { vec![n] } else { primes.clone() };
        // In a field the only prime is (0), whose gcd with n is n.
        assert_eq!(got, expected, "Z{n}");
        assert_eq!(ideal::zd_degree(&r, 256).unwrap().degree(), Some(primes.len()), "Z{n}");
        assert_eq!(ideal::is_primal(&r), primes.len() == 1, "Z{n}");
    }
}

/// All-pairs shortest paths by Floyd–Warshall on the raw multiplication.
fn naive_diameter(r: &FiniteRing) -> Diameter {
    let v: Vec<usize> = r.elements().filter(|&a| a != r.zero() && r.zero_divisors().contains(a)).collect();
    if v.is_empty() {
        return Diameter::Empty;
    }
    let inf = usize::MAX / 4;
    let n = v.len();
    let mut d = vec![vec![inf; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if i != j && r.mul(v[i], v[j]) == r.zero() {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let m = d.iter().flatten().copied().max().unwrap();
    if m >= inf { Diameter::Disconnected } else { Diameter::Finite(m) }
}

#[test]
fn gamma_diameter_matches_floyd_warshall() {
    let mut exprs: Vec<String> = (2..=40).map(|n| format!("Z{n}")).collect();
    exprs.extend(
        ["Z2xZ2", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ2", "Z4xZ4", "Z2[y]/(y^2)", "Z3[y]/(y^2+1)", "Z2[u,v]@2", "Z2[u,v]@3", "Z4[y]/(y^2+2)"]
            .map(String::from),
    );
    for e in &exprs {
        let r = ring(e);
        let got = zdgraph::diameter(&zdgraph::gamma_of_ring(&r)).diameter;
        assert_eq!(got, naive_diameter(&r), "{e}");
    }
}

#[test]
fn content_is_least_ideal_containing_coefficients() {
    for e in ["Z4", "Z6", "Z8", "Z2xZ2", "Z2xZ4", "Z2[y]/(y^2)", "Z2[u,v]@2"] {
        let r = ring(e);
        let ideals = ideal::enumerate_ideals(&r, 256).unwrap();
        for a in r.elements() {
            for b in r.elements() {
                let f = MRElem::poly(&r, &[a, b]);
                let mut meet = Ideal::whole(&r);
                for i in ideals.iter().filter(|i| i.contains(a) && i.contains(b)) {
                    meet = meet.intersection(i).unwrap();
                }
                assert_eq!(f.content(), meet, "{e}: {f}");
            }
        }
    }
}

#[test]
fn documented_examples() {
    let z6 = ring("Z6");
    assert_eq!(Ideal::principal(&z6, 2).member_names(), ["0", "2", "4"]);
    let z8 = ring("Z8");
    assert_eq!(Ideal::principal(&z8, 4).radical(), Ideal::principal(&z8, 2));
    let gf4 = ring("Z2[y]/(y^2+y+1)");
    assert_eq!(gf4.zero_divisors().count_ones(..), 1);
    let local = ring("Z2[u,v]@3");
    assert_eq!(local.order(), 64);
    let m = Ideal::generated(&local, [local.parse_element("u").unwrap(), local.parse_element("v").unwrap()]);
    assert_eq!(m.cardinality(), 32);
    assert!(ideal::has_property_a(&local, 256).unwrap());
    let z2z4 = ring("Z2xZ4");
    let (a, b) = (z2z4.parse_element("(1,2)").unwrap(), z2z4.parse_element("(0,2)").unwrap());
    assert_eq!(z2z4.mul(a, b), z2z4.zero());
    let info = zdgraph::diameter(&zdgraph::gamma_of_ring(&z2z4));
    assert_eq!(info.diameter, Diameter::Finite(3));
    let z4 = ring("Z4");
    let f = contalg::literal::parse_poly("2*X^1 + 2", &z4).unwrap();
    assert_eq!(f.content(), Ideal::principal(&z4, 2));
    assert_eq!(contalg::content::mccoy_witness(&f), Some(2));
}
