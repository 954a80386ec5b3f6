//! Content-theoretic checks over degree-truncated polynomial and monoid
//! rings: Dedekind–Mertens exponents, content-algebra equivalences and the
//! transfer of primes, zero-divisors and nilpotents from `R` to `R[X]`.

mod dm;
mod extension;
mod mccoy;

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::ideal::{IdealCache, IdealId};
use crate::ring::{Elem, FiniteRing};

pub use dm::{default_n_max, dm_exponent, dm_failure_witness, dm_holds, DMResult};
pub use extension::{
    ass_extension_check, contraction_check, min_prime_bijection_check, nil_extension_check,
    prime_extension_check, prime_to_check, primal_extension_check, regular_content_check,
    tq_triviality_check, zd_cover_check, zero_divisor_nilpotency, zpow_check, CoverMode,
};
pub use mccoy::{
    constructed_pair, counterexample_noncancellative, counterexample_torsion, mccoy_equiv_check, mccoy_witness,
    unit_content_check, weak_content_check, zero_divisor_oracle,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum Verdict {
    Verified,
    /// Literal-syntax elements that reproduce the violation.
    Refuted { witness: Vec<String> },
    Inconclusive { reason: String },
}

/// Result of one exhaustive check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckOutcome {
    pub check: String,
    /// Ring (and monoid) the check ran over, as text.
    pub subject: String,
    pub verdict: Verdict,
    pub stats: BTreeMap<String, u64>,
    pub parameters: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckOutcome {
    pub fn new(check: &str, verdict: Verdict) -> Self {
        CheckOutcome {
            check: check.to_string(),
            subject: String::new(),
            verdict,
            stats: BTreeMap::new(),
            parameters: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn verified(check: &str) -> Self {
        Self::new(check, Verdict::Verified)
    }

    pub fn refuted(check: &str, witness: Vec<String>) -> Self {
        Self::new(check, Verdict::Refuted { witness })
    }

    pub fn inconclusive(check: &str, reason: impl Into<String>) -> Self {
        Self::new(check, Verdict::Inconclusive { reason: reason.into() })
    }

    pub fn with_subject(mut self, subject: impl Into<String>) -> Self {
        self.subject = subject.into();
        self
    }

    pub fn stat(mut self, key: &str, value: u64) -> Self {
        self.stats.insert(key.to_string(), value);
        self
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn is_verified(&self) -> bool {
        matches!(self.verdict, Verdict::Verified)
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self.verdict, Verdict::Refuted { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self.verdict, Verdict::Inconclusive { .. })
    }

    pub fn witness(&self) -> Option<&[String]> {
        match &self.verdict {
            Verdict::Refuted { witness } => Some(witness),
            _ => None,
        }
    }

    /// Folds sub-outcomes: first refutation wins, then first inconclusive.
    pub fn combine(check: &str, parts: &[CheckOutcome]) -> CheckOutcome {
        let verdict = parts
            .iter()
            .find(|p| p.is_refuted())
            .or_else(|| parts.iter().find(|p| p.is_inconclusive()))
            .map(|p| p.verdict.clone())
            .unwrap_or(Verdict::Verified);
        let mut out = CheckOutcome::new(check, verdict);
        for p in parts {
            for (k, v) in &p.stats {
                *out.stats.entry(k.clone()).or_insert(0) += v;
            }
            for (k, v) in &p.parameters {
                out.parameters.entry(k.clone()).or_insert_with(|| v.clone());
            }
            for n in &p.notes {
                if !out.notes.contains(n) {
                    out.notes.push(n.clone());
                }
            }
        }
        out
    }
}

/// `ann[a]`: the elements `r` with `r·a = 0`.
pub(crate) struct Annihilators {
    sets: Vec<FixedBitSet>,
    order: usize,
    zero: Elem,
}

impl Annihilators {
    pub(crate) fn new(ring: &FiniteRing) -> Self {
        let sets = ring
            .elements()
            .map(|a| {
                let mut s = ring.empty_set();
                for r in ring.elements() {
                    if ring.mul(r, a) == ring.zero() {
                        s.insert(r);
                    }
                }
                s
            })
            .collect();
        Annihilators {
            sets,
            order: ring.order(),
            zero: ring.zero(),
        }
    }

    /// The least nonzero `r` killing every coefficient.
    pub(crate) fn scalar(&self, coeffs: &[Elem]) -> Option<Elem> {
        let mut acc: Option<FixedBitSet> = None;
        for &c in coeffs {
            if c == self.zero {
                continue;
            }
            match acc.as_mut() {
                None => acc = Some(self.sets[c].clone()),
                Some(s) => s.intersect_with(&self.sets[c]),
            }
        }
        match acc {
            None => (0..self.order).find(|&r| r != self.zero),
            Some(s) => s.ones().find(|&r| r != self.zero),
        }
    }
}

/// `c(f)` for a coefficient vector, interned.
pub(crate) fn content_id(cache: &mut IdealCache<'_>, coeffs: &[Elem]) -> IdealId {
    cache.generated(coeffs.iter().copied())
}

/// Is every coefficient in the set?
pub(crate) fn coeffs_in(set: &FixedBitSet, coeffs: &[Elem]) -> bool {
    coeffs.iter().all(|&c| set.contains(c))
}
