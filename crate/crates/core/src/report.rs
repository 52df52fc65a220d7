//! Versioned JSON and plain-text renderings of verdicts and reports.
//!
//! Rationals are always written as `"num/den"` strings so that values
//! survive a round trip exactly.

use serde::{Deserialize, Serialize};

use crate::form::Point;
use crate::majorize::MajorizationReport;
use crate::rational::{parse_rational, to_fraction_string, Rational};
use crate::search::{SearchStats, Verdict};
use crate::subst::Permutation;

pub const SCHEMA_VERSION: &str = "v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub path: Vec<Vec<usize>>,
    pub point: Vec<String>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationJson {
    pub term: Vec<u32>,
    pub ordering: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessaryJson {
    pub holds: bool,
    pub violations: Vec<ViolationJson>,
    pub checked_orderings: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsJson {
    pub nodes_expanded: u64,
    pub trivially_positive_pruned: u64,
    pub dedup_hits: u64,
    pub max_frontier_size: u64,
    pub budget_exhausted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub schema: String,
    pub verdict: String,
    pub depth: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub necessary: Option<NecessaryJson>,
    pub stats: StatsJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MajorizeJson {
    pub schema: String,
    pub majorizes: bool,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub ordering: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separating_point: Option<Vec<String>>,
}

fn point_strings(p: &Point) -> Vec<String> {
    p.coords().iter().map(to_fraction_string).collect()
}

impl From<&MajorizationReport> for NecessaryJson {
    fn from(r: &MajorizationReport) -> Self {
        NecessaryJson {
            holds: r.holds,
            violations: r
                .violations
                .iter()
                .map(|v| ViolationJson {
                    term: v.term.entries().to_vec(),
                    ordering: v.ordering.images().to_vec(),
                })
                .collect(),
            checked_orderings: r.checked_orderings,
        }
    }
}

impl From<&SearchStats> for StatsJson {
    fn from(s: &SearchStats) -> Self {
        StatsJson {
            nodes_expanded: s.nodes_expanded,
            trivially_positive_pruned: s.trivially_positive_pruned,
            dedup_hits: s.dedup_hits,
            max_frontier_size: s.max_frontier_size,
            budget_exhausted: s.budget_exhausted,
        }
    }
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        VerdictJson {
            schema: SCHEMA_VERSION.to_string(),
            verdict: v.kind.as_str().to_string(),
            depth: v.depth_reached,
            witness: v.witness.as_ref().map(|w| WitnessJson {
                path: w.path.iter().map(|s| s.images().to_vec()).collect(),
                point: point_strings(&w.point),
                value: to_fraction_string(&w.value),
            }),
            necessary: v.necessary.as_ref().map(NecessaryJson::from),
            stats: StatsJson::from(&v.stats),
        }
    }
}

impl WitnessJson {
    /// Decodes the point and value back into exact rationals.
    pub fn decode(&self) -> Option<(Vec<Rational>, Rational)> {
        let point = self
            .point
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Option<Vec<_>>>()?;
        Some((point, parse_rational(&self.value)?))
    }
}

pub fn verdict_text(v: &Verdict) -> String {
    let mut out = String::new();
    out.push_str(&format!("verdict: {}\n", v.kind.as_str()));
    out.push_str(&format!("depth: {}\n", v.depth_reached));
    if let Some(w) = &v.witness {
        let path: Vec<String> = w.path.iter().map(|s| format!("[{s}]")).collect();
        out.push_str(&format!("witness path: {}\n", path.join(" ")));
        let coords: Vec<String> = w.point.coords().iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("witness point: {}\n", coords.join(",")));
        out.push_str(&format!("witness value: {}\n", w.value));
    }
    if let Some(r) = &v.necessary {
        out.push_str(&necessary_text(r));
    }
    let s = &v.stats;
    out.push_str(&format!(
        "stats: nodes_expanded={} trivially_positive_pruned={} dedup_hits={} max_frontier_size={} budget_exhausted={}\n",
        s.nodes_expanded, s.trivially_positive_pruned, s.dedup_hits, s.max_frontier_size, s.budget_exhausted
    ));
    out
}

pub fn necessary_text(r: &MajorizationReport) -> String {
    let mut out = String::new();
    if r.holds {
        out.push_str(&format!(
            "necessary condition: holds ({} orderings checked)\n",
            r.checked_orderings
        ));
        return out;
    }
    out.push_str(&format!(
        "necessary condition: violated ({} violations over {} orderings)\n",
        r.violations.len(),
        r.checked_orderings
    ));
    for v in &r.violations {
        out.push_str(&format!(
            "  term {} {} at ordering {} [{}]\n",
            v.term.monomial_string(),
            v.term,
            v.ordering.ordering_string(),
            v.ordering
        ));
    }
    out
}

pub fn majorize_json(
    alpha: &[u32],
    beta: &[u32],
    sigma: &Permutation,
    holds: bool,
    separating: Option<&Point>,
) -> MajorizeJson {
    MajorizeJson {
        schema: SCHEMA_VERSION.to_string(),
        majorizes: holds,
        alpha: alpha.to_vec(),
        beta: beta.to_vec(),
        ordering: sigma.images().to_vec(),
        separating_point: separating.map(point_strings),
    }
}
