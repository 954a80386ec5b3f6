//! Search and size caps shared by every exhaustive routine.

use serde::Serialize;

pub const DEFAULT_ORDER_CAP: usize = 4096;
pub const DEFAULT_IDEAL_CAP: usize = 256;
pub const DEFAULT_POLY_CAP: usize = 20_000;
pub const DEFAULT_VERTEX_CAP: usize = 20_000;
pub const DEFAULT_CASE_CAP: usize = 1_000_000;
pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

/// Environment variable overriding the order and vertex caps.
pub const CAP_ENV_VAR: &str = "CONTALG_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Limits {
    /// Largest ring (number of elements) that may be constructed.
    pub order_cap: usize,
    /// Largest ring whose full ideal lattice may be enumerated.
    pub ideal_cap: usize,
    /// Largest number of nonzero polynomials a truncation may enumerate.
    pub poly_cap: usize,
    /// Largest vertex set of a truncated zero-divisor graph.
    pub vertex_cap: usize,
    /// Number of products above which the nilpotency check samples.
    pub case_cap: usize,
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: DEFAULT_ORDER_CAP,
            ideal_cap: DEFAULT_IDEAL_CAP,
            poly_cap: DEFAULT_POLY_CAP,
            vertex_cap: DEFAULT_VERTEX_CAP,
            case_cap: DEFAULT_CASE_CAP,
            seed: DEFAULT_SEED,
        }
    }
}

impl Limits {
    /// Defaults, with `CONTALG_CAP` applied to the order and vertex caps when
    /// it holds a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(CAP_ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&c| c > 0)
        {
            limits.set_cap(cap);
        }
        limits
    }

    /// The single user-facing cap knob: order and vertex caps move together.
    pub fn set_cap(&mut self, cap: usize) {
        self.order_cap = cap;
        self.vertex_cap = cap;
    }
}
