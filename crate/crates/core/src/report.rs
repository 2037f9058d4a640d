//! JSON reports shared by the extractors and the command line.

use serde::Serialize;

use crate::graph::{check_family_free, girth, ForbiddenFamily, Girth, Graph, Verdict};

/// Bumped whenever a field is renamed, removed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InputStats {
    pub n: usize,
    pub m: usize,
}

impl InputStats {
    pub fn of(g: &Graph) -> Self {
        InputStats { n: g.n(), m: g.m() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OutputStats {
    pub edges: usize,
    pub min_degree: usize,
    pub girth: Girth,
}

impl OutputStats {
    pub fn of(g: &Graph) -> Self {
        OutputStats { edges: g.m(), min_degree: g.min_degree(), girth: girth(g) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertStatus {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub family: ForbiddenFamily,
    pub status: CertStatus,
}

impl Certificate {
    /// Runs the certifier on `g`.
    pub fn check(g: &Graph, family: ForbiddenFamily) -> Self {
        let status = match check_family_free(g, family) {
            Verdict::Free => CertStatus::Pass,
            Verdict::Witness { .. } => CertStatus::Fail,
        };
        Certificate { family, status }
    }

    pub fn passed(&self) -> bool {
        self.status == CertStatus::Pass
    }
}

/// Statistics of the embedding trials before greedy saturation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TrialStats {
    pub best_edges: usize,
    pub mean_edges: f64,
    pub best_min_degree: usize,
}

impl TrialStats {
    pub fn of(graphs: &[Graph]) -> Self {
        let n = graphs.len().max(1) as f64;
        TrialStats {
            best_edges: graphs.iter().map(Graph::m).max().unwrap_or(0),
            mean_edges: graphs.iter().map(|g| g.m() as f64).sum::<f64>() / n,
            best_min_degree: graphs.iter().map(Graph::min_degree).max().unwrap_or(0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HostSummary {
    pub label: String,
    pub order: usize,
    pub min_degree: usize,
    pub girth: Girth,
}

/// Informational flags; nothing is gated on them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Preconditions {
    /// The host was sized at the full ⌈2e⁴Δ⌉ rather than the vertex cap.
    pub host_uncapped: bool,
    /// δ > 129·t³·ln Δ.
    pub degree_floor: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeDetails {
    pub host: HostSummary,
    pub t: usize,
    pub q: usize,
    pub rounds_used: usize,
    pub degraded: bool,
    pub residual_events: usize,
    pub degraded_trials: usize,
    pub preconditions: Preconditions,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtractionReport {
    pub schema_version: u32,
    pub command: String,
    pub input: InputStats,
    /// Which candidate won: a pipeline case, or a named fallback.
    pub method: String,
    /// Case chosen by the degree split, when the pipeline ran.
    pub dispatch: Option<String>,
    pub r: usize,
    pub trials: usize,
    pub seed: u64,
    pub odd_free: bool,
    pub output: OutputStats,
    pub certificate: Certificate,
    /// Raw embedding outputs, before saturation.
    pub raw: TrialStats,
    /// Mean edge count of the saturated trial outputs.
    pub trial_mean_edges: f64,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub degree: Option<DegreeDetails>,
    /// Null unless timing was requested; wall time would break byte-identical reruns.
    pub timing_ms: Option<u64>,
}

impl ExtractionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
