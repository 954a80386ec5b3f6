//! Browser bindings. Every function returns a JSON string; failures come
//! back as `{"error": "..."}` so the page needs no exception handling.

use contalg::content::{self, DMResult};
use contalg::zdgraph::{self, Diameter};
use contalg::{Config, Limits, Report, RingExpr};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Smaller than the native defaults so a page never stalls for long.
const BROWSER_CAP: usize = 2048;

fn limits() -> Limits {
    let mut l = Limits::default();
    l.set_cap(BROWSER_CAP);
    l
}

#[derive(Serialize)]
struct ErrorBody {
    error: String,
}

fn respond<T: Serialize>(r: contalg::Result<T>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).expect("serializable"),
        Err(e) => serde_json::to_string(&ErrorBody { error: e.to_string() }).expect("serializable"),
    }
}

/// Structural report for a ring expression such as `Z2xZ4`.
#[wasm_bindgen]
pub fn analyze_ring(expr: &str) -> String {
    respond((|| {
        let config = Config { limits: limits(), ..Config::default() };
        let e = RingExpr::parse(expr)?;
        let ring = e.build(&config.limits)?;
        Ok(Report::analyze(&e, &ring, &config))
    })())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct GraphBody {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    diameter: Diameter,
    farthest: Option<(String, String)>,
}

/// Zero-divisor graph of the ring (`degree == 0`) or of its polynomials
/// up to `degree`.
#[wasm_bindgen]
pub fn zero_divisor_graph(expr: &str, degree: u32) -> String {
    respond((|| {
        let limits = limits();
        let ring = RingExpr::parse(expr)?.build(&limits)?;
        let g = match degree {
            0 => zdgraph::gamma_of_ring(&ring),
            d => zdgraph::gamma_poly_truncated(&ring, d as usize, &limits)?,
        };
        let info = zdgraph::diameter(&g);
        Ok(GraphBody {
            labels: g.labels().to_vec(),
            edges: g.edges().collect(),
            diameter: info.diameter,
            farthest: info.witness,
        })
    })())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct DmBody {
    f: String,
    g: String,
    exponent: Option<usize>,
    searched_up_to: usize,
    /// Element separating the two sides at the exponent below the answer.
    previous_failure: Option<String>,
}

/// Least `n` with `c(f)^n c(g) = c(f)^(n-1) c(fg)` in `R[X]`.
#[wasm_bindgen]
pub fn dm_exponent(expr: &str, f: &str, g: &str) -> String {
    respond((|| {
        let ring = RingExpr::parse(expr)?.build(&limits())?;
        let f = contalg::literal::parse_poly(f, &ring)?;
        let g = contalg::literal::parse_poly(g, &ring)?;
        let bound = content::default_n_max(&g);
        let result = content::dm_exponent(&f, &g, bound)?;
        let previous_failure = match result {
            DMResult::Exponent(n) if n > 1 => content::dm_failure_witness(&f, &g, n - 1)?.map(|w| ring.name(w).to_string()),
            _ => None,
        };
        Ok(DmBody {
            f: f.to_string(),
            g: g.to_string(),
            exponent: result.exponent(),
            searched_up_to: bound,
            previous_failure,
        })
    })())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn json(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn analyze() {
        let v = json(analyze_ring("Z6"));
        assert_eq!(v["zdDegree"], 2);
        assert_eq!(v["gammaDiameter"], 2);
        assert!(json(analyze_ring("Z6 x")).get("error").is_some());
        assert!(json(analyze_ring("Z4096")).get("error").is_some());
    }

    #[test]
    fn graph() {
        let v = json(zero_divisor_graph("Z6", 0));
        assert_eq!(v["labels"], serde_json::json!(["2", "3", "4"]));
        assert_eq!(v["edges"], serde_json::json!([[0, 1], [1, 2]]));
        assert_eq!(v["diameter"], 2);
        let v = json(zero_divisor_graph("Z4", 1));
        assert_eq!(v["labels"].as_array().unwrap().len(), 3);
        assert_eq!(v["diameter"], 1);
    }

    #[test]
    fn dm() {
        let v = json(dm_exponent("Z2[u,v]@3", "(u)*X + (v)", "(u)*X + (v)"));
        assert_eq!(v["exponent"], 2);
        assert_eq!(v["previousFailure"], "uv");
        assert!(json(dm_exponent("Z4", "q", "1")).get("error").is_some());
    }
}
