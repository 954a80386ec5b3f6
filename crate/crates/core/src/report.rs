//! Machine-readable ring reports and the named verification suites.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::content::{
    self, ass_extension_check, default_n_max, dm_exponent, mccoy_equiv_check,
    min_prime_bijection_check, nil_extension_check, prime_to_check, primal_extension_check,
    regular_content_check, tq_triviality_check, unit_content_check, weak_content_check,
    zd_cover_check, zpow_check, CheckOutcome, CoverMode, DMResult, Verdict,
};
use crate::error::{Error, Result};
use crate::expr::RingExpr;
use crate::ideal::{associated_primes, enumerate_ideals, has_property_a, is_primal, minimal_primes, zd_degree};
use crate::limits::Limits;
use crate::mring::{Truncation, UNIVARIATE};
use crate::ring::FiniteRing;
use crate::zdgraph::{self, Diameter};

/// Rings exercised by `verify` when no expression is given.
pub const FIXTURES: &[&str] = &["Z4", "Z6", "Z8", "Z9", "Z2xZ2", "Z2xZ4", "Z2[y]/(y^2)"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportLimits {
    pub caps: Limits,
    pub degrees: Vec<usize>,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Witness {
    pub check: String,
    pub subject: String,
    pub elements: Vec<String>,
}

/// Everything known about one ring (or a batch of rings), plus check
/// outcomes. Fields that could not be computed within the caps are `null`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub ring: String,
    pub zero_divisors: Option<Vec<String>>,
    pub nil: Option<Vec<String>>,
    pub min: Option<Vec<String>>,
    pub ass: Option<Vec<String>>,
    pub property_a: Option<bool>,
    pub primal: Option<bool>,
    /// `null` also when `Z(R)` is not a finite union of primes.
    pub zd_degree: Option<usize>,
    pub gamma_diameter: Option<Diameter>,
    pub predicted_extension_diameter: Option<Diameter>,
    pub check_outcomes: Vec<CheckOutcome>,
    pub witnesses: Vec<Witness>,
    pub limits: ReportLimits,
}

/// Options shared by every command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub limits: Limits,
    pub degree: usize,
    pub degrees: Vec<usize>,
    pub n_max: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            limits: Limits::default(),
            degree: 2,
            degrees: vec![1, 2],
            n_max: None,
        }
    }
}

impl Report {
    pub fn empty(ring: impl Into<String>, config: &Config) -> Self {
        Report {
            ring: ring.into(),
            zero_divisors: None,
            nil: None,
            min: None,
            ass: None,
            property_a: None,
            primal: None,
            zd_degree: None,
            gamma_diameter: None,
            predicted_extension_diameter: None,
            check_outcomes: Vec::new(),
            witnesses: Vec::new(),
            limits: ReportLimits {
                caps: config.limits.clone(),
                degrees: config.degrees.clone(),
                seed: config.limits.seed,
            },
        }
    }

    /// Structural analysis of `ring`.
    pub fn analyze(expr: &RingExpr, ring: &FiniteRing, config: &Config) -> Self {
        let cap = config.limits.ideal_cap;
        let names = |s: &crate::ring::ElemSet| s.ones().map(|e| ring.name(e).to_string()).collect();
        let ideal_names = |v: Vec<crate::ideal::Ideal<'_>>| v.iter().map(|i| i.to_string()).collect();
        let mut r = Report::empty(expr.to_string(), config);
        r.zero_divisors = Some(names(&ring.zero_divisors()));
        r.nil = Some(names(&ring.nilpotents()));
        r.min = minimal_primes(ring, cap).ok().map(ideal_names);
        r.ass = Some(ideal_names(associated_primes(ring)));
        r.property_a = has_property_a(ring, cap).ok();
        r.primal = Some(is_primal(ring));
        r.zd_degree = zd_degree(ring, cap).ok().and_then(|z| z.degree());
        r.gamma_diameter = Some(zdgraph::diameter(&zdgraph::gamma_of_ring(ring)).diameter);
        r.predicted_extension_diameter = zdgraph::structural_facts(ring, &config.limits)
            .ok()
            .and_then(|f| zdgraph::predict_extension_diam(&f).diameter);
        r
    }

    pub fn push(&mut self, outcome: CheckOutcome) {
        if let Verdict::Refuted { witness } = &outcome.verdict {
            self.witnesses.push(Witness {
                check: outcome.check.clone(),
                subject: outcome.subject.clone(),
                elements: witness.clone(),
            });
        }
        self.check_outcomes.push(outcome);
    }

    /// 0 when every check verified, 1 on any refutation, 3 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.check_outcomes.iter().any(CheckOutcome::is_refuted) {
            1
        } else if self.check_outcomes.iter().any(CheckOutcome::is_inconclusive) {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let list = |v: &Option<Vec<String>>| match v {
            Some(v) => format!("{{{}}}", v.join(", ")),
            None => "n/a".to_string(),
        };
        let opt = |v: Option<String>| v.unwrap_or_else(|| "n/a".to_string());
        let _ = writeln!(s, "ring: {}", self.ring);
        if self.zero_divisors.is_some() {
            let _ = writeln!(s, "Z(R): {}", list(&self.zero_divisors));
            let _ = writeln!(s, "Nil(R): {}", list(&self.nil));
            let _ = writeln!(s, "Min(R): {}", list(&self.min));
            let _ = writeln!(s, "Ass(R): {}", list(&self.ass));
            let _ = writeln!(s, "Property (A): {}", opt(self.property_a.map(|b| b.to_string())));
            let _ = writeln!(s, "primal: {}", opt(self.primal.map(|b| b.to_string())));
            let _ = writeln!(s, "zd degree: {}", opt(self.zd_degree.map(|b| b.to_string())));
            let _ = writeln!(s, "diam Γ(R): {}", opt(self.gamma_diameter.map(|b| b.to_string())));
            let _ = writeln!(
                s,
                "predicted diam Γ(R[X]): {}",
                opt(self.predicted_extension_diameter.map(|b| b.to_string()))
            );
        }
        for o in &self.check_outcomes {
            let verdict = match &o.verdict {
                Verdict::Verified => "verified".to_string(),
                Verdict::Refuted { witness } => format!("REFUTED by ({})", witness.join(", ")),
                Verdict::Inconclusive { reason } => format!("inconclusive: {reason}"),
            };
            let subject = if o.subject.is_empty() { String::new() } else { format!(" [{}]", o.subject) };
            let _ = writeln!(s, "{}{}: {}", o.check, subject, verdict);
            for n in &o.notes {
                let _ = writeln!(s, "  note: {n}");
            }
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Dm,
    Mccoy,
    Content,
    MinPrimes,
    Ass,
    ZdCover,
    Regular,
    Nil,
    Zpow,
    PrimeTo,
    Primal,
    Diam,
    All,
}

impl Suite {
    pub const EACH: [Suite; 12] = [
        Suite::Dm,
        Suite::Mccoy,
        Suite::Content,
        Suite::MinPrimes,
        Suite::Ass,
        Suite::ZdCover,
        Suite::Regular,
        Suite::Nil,
        Suite::Zpow,
        Suite::PrimeTo,
        Suite::Primal,
        Suite::Diam,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dm => "dm",
            Suite::Mccoy => "mccoy",
            Suite::Content => "content",
            Suite::MinPrimes => "minprimes",
            Suite::Ass => "ass",
            Suite::ZdCover => "zdcover",
            Suite::Regular => "regular",
            Suite::Nil => "nil",
            Suite::Zpow => "zpow",
            Suite::PrimeTo => "primeto",
            Suite::Primal => "primal",
            Suite::Diam => "diam",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown suite {s:?}")))
    }
}

/// Resource limits become inconclusive outcomes; other errors propagate.
fn guard(check: &str, r: Result<CheckOutcome>) -> Result<CheckOutcome> {
    match r {
        Ok(o) => Ok(o),
        Err(e @ Error::ResourceLimit { .. }) => Ok(CheckOutcome::inconclusive(check, e.to_string())),
        Err(e) => Err(e),
    }
}

/// Every pair of truncated polynomials (or a seeded sample when there are
/// too many) has a Dedekind–Mertens exponent within the bound.
pub fn dm_suite(ring: &FiniteRing, config: &Config) -> Result<CheckOutcome> {
    let limits = &config.limits;
    let t = Truncation::polys(ring, config.degree, limits.poly_cap)?;
    let n = t.len() - 1;
    let pairs = n as u128 * n as u128;
    let sampled = pairs > limits.case_cap as u128;
    let picks: Vec<(usize, usize)> = if sampled {
        let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
        (0..limits.case_cap)
            .map(|_| (rng.random_range(1..=n), rng.random_range(1..=n)))
            .collect()
    } else {
        (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect()
    };
    let mut worst = 0usize;
    let mut out = CheckOutcome::verified("dm");
    for &(i, j) in &picks {
        let (f, g) = (t.elem(i), t.elem(j));
        let n_max = config.n_max.unwrap_or_else(|| default_n_max(&g));
        match dm_exponent(&f, &g, n_max)? {
            DMResult::Exponent(e) => worst = worst.max(e),
            DMResult::NotFoundUpTo(_) => {
                out = CheckOutcome::refuted("dm", vec![f.to_string(), g.to_string()])
                    .note(format!("no exponent up to {n_max}"));
                break;
            }
        }
    }
    let mode = if sampled { "sampled" } else { "exhaustive" };
    let mut out = out
        .param("degree", config.degree)
        .param("mode", mode)
        .param("nMax", config.n_max.map_or("terms(g)+1".to_string(), |n| n.to_string()))
        .stat("pairs", picks.len() as u64)
        .stat("maxExponent", worst as u64);
    if sampled {
        out = out.param("seed", limits.seed);
    }
    Ok(out)
}

/// Runs one suite (or all of them) on a ring.
pub fn run_suite(suite: Suite, ring: &FiniteRing, subject: &str, config: &Config) -> Result<Vec<CheckOutcome>> {
    let d = config.degree;
    let limits = &config.limits;
    let mut out = Vec::new();
    match suite {
        Suite::All => {
            for s in Suite::EACH {
                out.extend(run_suite(s, ring, subject, config)?);
            }
            return Ok(out);
        }
        Suite::Dm => out.push(guard("dm", dm_suite(ring, config))?),
        Suite::Mccoy => out.push(guard(
            "mccoy_equiv",
            mccoy_equiv_check(ring, subject, &UNIVARIATE, d, limits),
        )?),
        Suite::Content => {
            out.push(guard("unit_content", unit_content_check(ring, subject, &UNIVARIATE, d, limits))?);
            out.push(guard("weak_content", weak_content_check(ring, subject, &UNIVARIATE, d, limits))?);
        }
        Suite::MinPrimes => out.push(guard("min_prime_bijection", min_prime_bijection_check(ring, d, limits))?),
        Suite::Ass => out.push(guard("ass_extension", ass_extension_check(ring, d, limits))?),
        Suite::ZdCover => {
            out.push(guard("zd_cover", zd_cover_check(ring, d, CoverMode::Ass, limits))?);
            out.push(guard("zd_cover", zd_cover_check(ring, d, CoverMode::Min, limits))?);
        }
        Suite::Regular => out.push(guard("regular_content", regular_content_check(ring, d, limits))?),
        Suite::Nil => out.push(guard("nil_extension", nil_extension_check(ring, d, limits))?),
        Suite::Zpow => out.push(guard("zpow", zpow_check(ring, d, limits))?),
        Suite::PrimeTo => match enumerate_ideals(ring, limits.ideal_cap) {
            Ok(ideals) => {
                for i in ideals.iter().filter(|i| !i.is_whole()) {
                    out.push(guard("prime_to", prime_to_check(i, d, limits))?);
                }
            }
            Err(e) => out.push(guard("prime_to", Err(e))?),
        },
        Suite::Primal => {
            out.push(guard("primal_extension", primal_extension_check(ring, d, limits))?);
            out.push(tq_triviality_check(ring));
        }
        Suite::Diam => out.push(guard("diam", zdgraph::verify_diam(ring, &config.degrees, limits))?),
    }
    for o in &mut out {
        if o.subject.is_empty() {
            o.subject = subject.to_string();
        }
    }
    Ok(out)
}

/// Parses and builds a ring expression, then runs a suite on it.
pub fn verify(suite: Suite, expr: &str, config: &Config) -> Result<Report> {
    let e = RingExpr::parse(expr)?;
    let ring = e.build(&config.limits)?;
    let mut report = Report::analyze(&e, &ring, config);
    for o in run_suite(suite, &ring, &e.to_string(), config)? {
        report.push(o);
    }
    Ok(report)
}

/// Runs a suite over every fixture ring.
pub fn verify_fixtures(suite: Suite, config: &Config) -> Result<Report> {
    let mut report = Report::empty(FIXTURES.join(", "), config);
    for expr in FIXTURES {
        let e = RingExpr::parse(expr)?;
        let ring = e.build(&config.limits)?;
        for o in run_suite(suite, &ring, &e.to_string(), config)? {
            report.push(o);
        }
    }
    Ok(report)
}


/// Dedekind–Mertens exponent of one pair of polynomials over `R[X]`.
pub fn dm_report(expr: &str, f: &str, g: &str, config: &Config) -> Result<Report> {
    let e = RingExpr::parse(expr)?;
    let ring = e.build(&config.limits)?;
    let fp = crate::literal::parse_poly(f, &ring)?;
    let gp = crate::literal::parse_poly(g, &ring)?;
    let n_max = config.n_max.unwrap_or_else(|| default_n_max(&gp));
    let pair = vec![fp.to_string(), gp.to_string()];
    let mut out = match dm_exponent(&fp, &gp, n_max)? {
        DMResult::Exponent(n) => {
            let mut o = CheckOutcome::verified("dm").stat("exponent", n as u64);
            if n > 1 {
                if let Some(w) = content::dm_failure_witness(&fp, &gp, n - 1)? {
                    o = o.note(format!("n = {} fails: {} lies on one side only", n - 1, ring.name(w)));
                }
            }
            o
        }
        DMResult::NotFoundUpTo(m) => {
            CheckOutcome::refuted("dm", pair.clone()).note(format!("no exponent up to {m}"))
        }
    };
    out = out
        .with_subject(format!("{}[X]", e))
        .param("f", &pair[0])
        .param("g", &pair[1])
        .param("nMax", n_max);
    let mut report = Report::analyze(&e, &ring, config);
    report.push(out);
    Ok(report)
}

/// Which zero-divisor graph the `graph` command draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphTarget {
    Base,
    Truncated(usize),
}

/// A zero-divisor graph with its DOT text and a report whose outcome checks
/// the structural classification (base graph) or diameter bounds
/// (truncated graph).
pub fn graph_report(expr: &str, target: GraphTarget, config: &Config) -> Result<(Report, String)> {
    let e = RingExpr::parse(expr)?;
    let ring = e.build(&config.limits)?;
    let mut report = Report::analyze(&e, &ring, config);
    let (graph, subject) = match target {
        GraphTarget::Base => (zdgraph::gamma_of_ring(&ring), format!("Γ({e})")),
        GraphTarget::Truncated(d) => (
            zdgraph::gamma_poly_truncated(&ring, d, &config.limits)?,
            format!("Γ({e}[X]) degree <= {d}"),
        ),
    };
    let info = zdgraph::diameter(&graph);
    let mut out = match target {
        GraphTarget::Base => {
            let c = zdgraph::classify_gamma(&ring, &config.limits)?;
            let o = if c.agrees() {
                CheckOutcome::verified("gamma_classification")
            } else {
                CheckOutcome::refuted(
                    "gamma_classification",
                    info.witness.clone().map(|(a, b)| vec![a, b]).unwrap_or_default(),
                )
            };
            o.param("branch", &c.branch).param("structural", c.structural)
        }
        GraphTarget::Truncated(_) => {
            let base = report.gamma_diameter.unwrap_or(Diameter::Empty);
            if info.diameter >= base && info.diameter != Diameter::Disconnected {
                CheckOutcome::verified("truncated_diameter")
            } else {
                CheckOutcome::refuted(
                    "truncated_diameter",
                    info.witness.clone().map(|(a, b)| vec![a, b]).unwrap_or_default(),
                )
            }
        }
    };
    out = out
        .with_subject(subject)
        .param("diameter", info.diameter)
        .stat("vertices", info.vertices as u64)
        .stat("edges", info.edges as u64);
    if let Some((a, b)) = &info.witness {
        out = out.param("farthestPair", format!("({a}, {b})"));
    }
    report.push(out);
    Ok((report, graph.to_dot()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DemoMonoid {
    /// The cyclic group of the given order.
    Torsion(usize),
    /// `{e, a, z}` with `a + a = z` absorbing.
    NonCancellative,
    /// `N^k`.
    Free(usize),
}

/// Content-algebra checks over `R[M]`, with the explicit zero product when
/// `M` is not cancellative or not torsion-free.
pub fn monoid_demo(expr: &str, kind: DemoMonoid, config: &Config) -> Result<Report> {
    let e = RingExpr::parse(expr)?;
    let ring = e.build(&config.limits)?;
    let monoid = match kind {
        DemoMonoid::Torsion(n) => crate::monoid::Monoid::cyclic(n)?,
        DemoMonoid::NonCancellative => crate::monoid::Monoid::absorbing_example(),
        DemoMonoid::Free(k) => crate::monoid::Monoid::free(k)?,
    };
    let name = e.to_string();
    let limits = &config.limits;
    let d = config.degree;
    let mut report = Report::analyze(&e, &ring, config);
    report.ring = format!("{name}[{monoid}]");
    if let Some((f, g)) = content::constructed_pair(&ring, &monoid) {
        let fg = f.mul(&g)?;
        report.push(
            CheckOutcome::refuted("zero_product", vec![f.to_string(), g.to_string()])
                .with_subject(format!("{name}[{monoid}]"))
                .note(format!("c(f) = c(g) = R while fg = {fg}")),
        );
    }
    report.push(guard("unit_content", unit_content_check(&ring, &name, &monoid, d, limits))?);
    report.push(guard("weak_content", weak_content_check(&ring, &name, &monoid, d, limits))?);
    report.push(guard("mccoy_equiv", mccoy_equiv_check(&ring, &name, &monoid, d, limits))?);
    Ok(report)
}
