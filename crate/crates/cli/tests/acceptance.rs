//! Acceptance gate: one PASS/FAIL line per criterion, each with a pinned
//! wall-clock budget. Run with `--nocapture` to see the table.

use std::time::{Duration, Instant};

use contalg::content::{self, CoverMode, DMResult};
use contalg::ideal::{self, Ideal};
use contalg::zdgraph::{self, Diameter};
use contalg::{CheckOutcome, FiniteRing, Limits, MRElem, Monoid, RingExpr};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn ring(expr: &str) -> FiniteRing {
    RingExpr::parse(expr)
        .and_then(|e| e.build(&Limits::default()))
        .unwrap_or_else(|e| panic!("{expr}: {e}"))
}

fn expect_verified(what: &str, out: contalg::Result<CheckOutcome>) -> Check {
    match out {
        Ok(o) if o.is_verified() => Ok(()),
        Ok(o) => Err(format!("{what}: {:?}", o.verdict)),
        Err(e) => Err(format!("{what}: {e}")),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Check {
    let limits = Limits::default();
    let monoids: Vec<(Monoid, usize)> = vec![
        (Monoid::free(1).unwrap(), 2),
        (Monoid::free(2).unwrap(), 1),
        (Monoid::cyclic(2).unwrap(), 0),
        (Monoid::cyclic(3).unwrap(), 0),
        (Monoid::absorbing_example(), 0),
    ];
    for name in ["Z2", "Z3", "Z4", "Z6"] {
        let r = ring(name);
        for (m, d) in &monoids {
            let good = m.is_cancellative() && m.is_torsion_free();
            let expected = content::constructed_pair(&r, m).map(|(f, g)| vec![f.to_string(), g.to_string()]);
            ensure(good == expected.is_none(), || format!("{name}[{m}]: constructed pair {expected:?}"))?;
            let outs = [
                content::unit_content_check(&r, name, m, *d, &limits),
                content::weak_content_check(&r, name, m, *d, &limits),
                content::mccoy_equiv_check(&r, name, m, *d, &limits),
            ];
            for out in outs {
                let out = out.map_err(|e| format!("{name}[{m}]: {e}"))?;
                let ok = match &expected {
                    None => out.is_verified(),
                    Some(w) => out.witness() == Some(&w[..]),
                };
                ensure(ok, || format!("{} over {name}[{m}]: {:?}, expected {expected:?}", out.check, out.verdict))?;
            }
        }
    }
    Ok(())
}

fn criterion_2() -> Check {
    let r = ring("Z2[u,v]@3");
    let f = contalg::literal::parse_poly("(u)*X + (v)", &r).map_err(|e| e.to_string())?;
    let n = content::dm_exponent(&f, &f, content::default_n_max(&f)).map_err(|e| e.to_string())?;
    ensure(n == DMResult::Exponent(2), || format!("uX+v: {n:?}"))?;
    let w = content::dm_failure_witness(&f, &f, 1).map_err(|e| e.to_string())?;
    ensure(w.map(|w| r.name(w).to_string()).as_deref() == Some("uv"), || format!("n = 1 witness {w:?}"))?;

    let rings = [ring("Z4"), ring("Z6"), ring("Z8")];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    for i in 0..1000 {
        let r = &rings[i % 3];
        let random_poly = |rng: &mut ChaCha8Rng| {
            let d = rng.random_range(0..=3);
            let coeffs: Vec<usize> = (0..=d).map(|_| rng.random_range(0..r.order())).collect();
            MRElem::poly(r, &coeffs)
        };
        let f = random_poly(&mut rng);
        let g = random_poly(&mut rng);
        let bound = content::default_n_max(&g);
        match content::dm_exponent(&f, &g, bound).map_err(|e| e.to_string())? {
            DMResult::Exponent(n) if n <= bound => {}
            other => return Err(format!("pair {i} ({f}, {g}): {other:?}")),
        }
    }
    Ok(())
}

fn criterion_3() -> Check {
    let limits = Limits::default();
    for name in ["Z4", "Z6", "Z8", "Z9", "Z2xZ2", "Z2xZ4", "Z2[u,v]@3"] {
        expect_verified(name, content::min_prime_bijection_check(&ring(name), 2, &limits))?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    let limits = Limits::default();
    for name in ["Z4", "Z6", "Z8", "Z9"] {
        expect_verified(name, content::ass_extension_check(&ring(name), 2, &limits))?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    let limits = Limits::default();
    for name in ["Z4", "Z6", "Z8", "Z9", "Z2xZ2"] {
        let r = ring(name);
        expect_verified(&format!("{name} Ass"), content::zd_cover_check(&r, 2, CoverMode::Ass, &limits))?;
        expect_verified(&format!("{name} Min"), content::zd_cover_check(&r, 2, CoverMode::Min, &limits))?;
    }
    for (name, n) in [("Z4", 1), ("Z8", 1), ("Z6", 2), ("Z2xZ2", 2), ("Z2xZ2xZ2", 3), ("Z4xZ6", 3)] {
        let r = ring(name);
        let got = ideal::zd_degree(&r, limits.ideal_cap).map_err(|e| e.to_string())?.degree();
        ensure(got == Some(n), || format!("zd({name}) = {got:?}, expected {n}"))?;
    }
    Ok(())
}

/// Zn for n <= 50, the 13 rings Zp[y]/(f) with p <= 3 and f monic of
/// degree 2, and every product A x B of two nonzero members with
/// |A||B| <= 64.
fn enumerated_rings() -> Vec<String> {
    let mut base: Vec<(String, usize)> = (1..=50).map(|n| (format!("Z{n}"), n)).collect();
    for p in [2usize, 3] {
        for c1 in 0..p {
            for c0 in 0..p {
                let mut f = "y^2".to_string();
                match c1 {
                    0 => {}
                    1 => f += "+y",
                    c => f += &format!("+{c}y"),
                }
                if c0 > 0 {
                    f += &format!("+{c0}");
                }
                base.push((format!("Z{p}[y]/({f})"), p * p));
            }
        }
    }
    let mut all: Vec<String> = base.iter().map(|(s, _)| s.clone()).collect();
    let nonzero: Vec<_> = base.iter().filter(|(_, n)| *n > 1).collect();
    for (i, (a, na)) in nonzero.iter().enumerate() {
        for (b, nb) in &nonzero[i..] {
            if na * nb <= 64 {
                all.push(format!("({a}) x ({b})"));
            }
        }
    }
    all
}

fn criterion_6() -> Check {
    let limits = Limits::default();
    let mut names = enumerated_rings();
    names.extend(["Z2[u,v]@3", "Z2xZ2xZ2", "Z2[u,v]@2"].map(String::from));
    for name in &names {
        let r = ring(name);
        let a = ideal::has_property_a(&r, limits.ideal_cap).map_err(|e| format!("{name}: {e}"))?;
        ensure(a, || format!("{name} lacks Property (A)"))?;
    }
    for name in ["Z4", "Z6", "Z8", "Z2xZ4"] {
        expect_verified(name, content::regular_content_check(&ring(name), 2, &limits))?;
    }
    Ok(())
}

fn criterion_7() -> Check {
    let limits = Limits::default();
    for (name, g) in [("Z4", "2"), ("Z6", "2"), ("Z6", "3")] {
        let r = ring(name);
        let i = Ideal::principal(&r, r.parse_element(g).unwrap());
        expect_verified(&format!("{name}, ({g})"), content::prime_to_check(&i, 2, &limits))?;
    }
    Ok(())
}

fn criterion_8() -> Check {
    let limits = Limits::default();
    for name in ["Z4", "Z8", "Z9", "Z2[y]/(y^2)"] {
        expect_verified(name, content::primal_extension_check(&ring(name), 2, &limits))?;
    }
    for name in ["Z6", "Z2xZ2"] {
        let r = ring(name);
        ensure(!ideal::is_primal(&r), || format!("{name} reported primal"))?;
        let (a, b) = ideal::primal_violation(&r).ok_or_else(|| format!("{name}: no additive-closure witness"))?;
        let z = r.zero_divisors();
        ensure(z.contains(a) && z.contains(b) && !z.contains(r.add(a, b)), || {
            format!("{name}: bad witness ({}, {})", r.name(a), r.name(b))
        })?;
    }
    Ok(())
}

fn criterion_9() -> Check {
    let limits = Limits::default();
    for (name, n) in [("Z4", 2), ("Z9", 2), ("Z8", 3)] {
        let r = ring(name);
        expect_verified(&format!("nil {name}"), content::nil_extension_check(&r, 2, &limits))?;
        let z = content::zpow_check(&r, 2, &limits).map_err(|e| e.to_string())?;
        ensure(z.is_verified() && z.stats.get("n") == Some(&n), || {
            format!("zpow {name}: {:?} {:?}, expected n = {n}", z.verdict, z.stats)
        })?;
    }
    let z6 = content::zpow_check(&ring("Z6"), 2, &limits).map_err(|e| e.to_string())?;
    ensure(
        matches!(&z6.verdict, contalg::Verdict::Inconclusive { reason } if reason.contains("no n")),
        || format!("zpow Z6: {:?}", z6.verdict),
    )
}

fn criterion_10() -> Check {
    let limits = Limits::default();
    let table = [
        ("Z4", 0, 1),
        ("Z2[y]/(y^2)", 0, 1),
        ("Z9", 1, 1),
        ("Z2xZ2", 1, 2),
        ("Z6", 2, 2),
        ("Z8", 2, 2),
        ("Z2xZ4", 3, 3),
    ];
    for (name, base, predicted) in table {
        let r = ring(name);
        let got = zdgraph::diameter(&zdgraph::gamma_of_ring(&r)).diameter;
        ensure(got == Diameter::Finite(base), || format!("diam Γ({name}) = {got}, expected {base}"))?;
        let facts = zdgraph::structural_facts(&r, &limits).map_err(|e| e.to_string())?;
        let p = zdgraph::predict_extension_diam(&facts).diameter;
        ensure(p == Some(Diameter::Finite(predicted)), || format!("{name}: predicted {p:?}, expected {predicted}"))?;
        let out = zdgraph::verify_diam(&r, &[1, 2], &limits).map_err(|e| e.to_string())?;
        ensure(out.is_verified(), || format!("verify_diam {name}: {:?}", out.verdict))?;
        for d in ["diameter@1", "diameter@2"] {
            let v = out.parameters.get(d).cloned().unwrap_or_default();
            ensure(v == predicted.to_string(), || format!("{name} {d} = {v}, expected {predicted}"))?;
        }
    }
    Ok(())
}

fn criterion_11() -> Check {
    let limits = Limits::default();
    let names = enumerated_rings();
    ensure(names.len() >= 200, || format!("only {} rings enumerated", names.len()))?;
    for name in &names {
        let c = zdgraph::classify_gamma(&ring(name), &limits).map_err(|e| format!("{name}: {e}"))?;
        ensure(c.agrees(), || format!("{name}: structural {} ({}) vs BFS {}", c.structural, c.branch, c.bfs))?;
    }
    Ok(())
}

fn criterion_12() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut runs = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("run{i}.json"));
        let args = ["contalg", "verify", "all", "--json", path.to_str().unwrap()];
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = contalg_cli::run(args, &mut out, &mut err);
        ensure((0..=3).contains(&code), || format!("exit code {code}"))?;
        runs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(!runs[0].is_empty() && runs[0] == runs[1], || "JSON reports differ between runs".into())
}

#[test]
fn acceptance() {
    let criteria: [(fn() -> Check, u64); 12] = [
        (criterion_1, 30),
        (criterion_2, 60),
        (criterion_3, 60),
        (criterion_4, 30),
        (criterion_5, 30),
        (criterion_6, 30),
        (criterion_7, 30),
        (criterion_8, 30),
        (criterion_9, 30),
        (criterion_10, 120),
        (criterion_11, 180),
        (criterion_12, 300),
    ];
    let mut failed = Vec::new();
    for (i, (check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = result.and_then(|()| {
            ensure(took <= Duration::from_secs(budget), || format!("over budget of {budget} s"))
        });
        let n = i + 1;
        match &result {
            Ok(()) => println!("criterion {n:>2}: PASS ({:.2} s, budget {budget} s)", took.as_secs_f64()),
            Err(e) => {
                println!("criterion {n:>2}: FAIL ({:.2} s, budget {budget} s): {e}", took.as_secs_f64());
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
