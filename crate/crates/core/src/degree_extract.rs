//! Spanning subgraphs of high girth and large minimum degree.
//!
//! The input is colored by the vertices of a high-girth host. Bad colorings
//! (a vertex keeping too few host-compatible edges, or seeing one color too
//! often among its neighbors) are repaired by resampling the colors involved.
//! Among the host-compatible edges, for every pair of color classes only the
//! edges lighter than all their neighbors in that pair are kept. Host girth
//! at least 2r+2 makes the result have girth at least 2r+2; this is certified
//! on every run.

use std::collections::HashMap;

use rand::distributions::Open01;
use rand::Rng;

use crate::edge_extract::{certify, h_prime, spanning_forest, splitmix, HOST_SEED};
use crate::error::{invalid, Error, Result};
use crate::exec::{mix, rng, Execution};
use crate::graph::{check_family_free, saturate, ForbiddenFamily, Graph};
use crate::hosts::{self, dense_subhost, greedy_high_girth, incidence_graph_pg2, prime_for_order, HostGraph};
use crate::report::{
    Certificate, DegreeDetails, ExtractionReport, HostSummary, InputStats, OutputStats, Preconditions, TrialStats,
    SCHEMA_VERSION,
};

pub const DEFAULT_MAX_ROUNDS: usize = 100;

/// Host order cap; above it the host is built for k = HOST_ORDER_CAP / 2.
pub const HOST_ORDER_CAP: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring {
    colors: Vec<u32>,
    ell: usize,
}

impl VertexColoring {
    pub fn new(colors: Vec<usize>, ell: usize) -> Result<Self> {
        if let Some((v, &c)) = colors.iter().enumerate().find(|&(_, &c)| c >= ell) {
            return Err(Error::ColorOutOfRange { vertex: v, color: c, order: ell });
        }
        Ok(VertexColoring { colors: colors.into_iter().map(|c| c as u32).collect(), ell })
    }

    /// Independent uniform colors in `0..ell`.
    pub fn uniform<R: Rng>(n: usize, ell: usize, r: &mut R) -> Self {
        assert!(ell >= 1 || n == 0, "cannot color with zero colors");
        VertexColoring { colors: (0..n).map(|_| r.gen_range(0..ell) as u32).collect(), ell }
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v] as usize
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    fn resample<R: Rng>(&mut self, v: usize, r: &mut R) {
        self.colors[v] = r.gen_range(0..self.ell) as u32;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BadEvent {
    /// The vertex keeps at most q·d(v)/(2ℓ) host-compatible edges.
    TypeA(usize),
    /// More than t neighbors of `vertex` share `color`; `witness` lists t+1 of them.
    TypeB { vertex: usize, color: usize, witness: Vec<usize> },
}

/// All degree-deficient vertices in index order, then one frugality
/// violation per (vertex, color) in that order. Isolated vertices never
/// count as deficient.
pub fn find_bad_events(g: &Graph, chi: &VertexColoring, host: &Graph, q: usize, t: usize) -> Vec<BadEvent> {
    let ell = host.n();
    let mut events = Vec::new();
    for v in 0..g.n() {
        let d = g.degree(v);
        if d == 0 {
            continue;
        }
        let cv = chi.color(v);
        let dh = g.neighbors(v).iter().filter(|&&w| host.has_edge(cv, chi.color(w as usize))).count();
        if 2 * ell * dh <= q * d {
            events.push(BadEvent::TypeA(v));
        }
    }
    let mut by_color: Vec<(u32, u32)> = Vec::new();
    for v in 0..g.n() {
        if g.degree(v) <= t {
            continue;
        }
        by_color.clear();
        by_color.extend(g.neighbors(v).iter().map(|&w| (chi.colors[w as usize], w)));
        by_color.sort_unstable();
        for run in by_color.chunk_by(|a, b| a.0 == b.0) {
            if run.len() > t {
                events.push(BadEvent::TypeB {
                    vertex: v,
                    color: run[0].0 as usize,
                    witness: run[..=t].iter().map(|&(_, w)| w as usize).collect(),
                });
            }
        }
    }
    events
}

#[derive(Clone, Debug)]
pub struct ResampleOutcome {
    pub coloring: VertexColoring,
    pub rounds: usize,
    /// The round cap was hit with bad events left.
    pub degraded: bool,
    pub residual: usize,
}

/// Draws a uniform coloring with `host.n()` colors, then repeatedly resamples
/// the first bad event: v and its neighbors for a deficient v, the witness
/// set for a frugality violation.
pub fn resample_until_clear(
    g: &Graph,
    host: &Graph,
    q: usize,
    t: usize,
    seed: u64,
    max_rounds: usize,
) -> ResampleOutcome {
    let mut r = rng(seed);
    let mut chi = VertexColoring::uniform(g.n(), host.n(), &mut r);
    let mut rounds = 0;
    loop {
        let events = find_bad_events(g, &chi, host, q, t);
        let Some(first) = events.first() else {
            return ResampleOutcome { coloring: chi, rounds, degraded: false, residual: 0 };
        };
        if rounds >= max_rounds {
            return ResampleOutcome { coloring: chi, rounds, degraded: true, residual: events.len() };
        }
        match first {
            BadEvent::TypeA(v) => {
                chi.resample(*v, &mut r);
                for &w in g.neighbors(*v) {
                    chi.resample(w as usize, &mut r);
                }
            }
            BadEvent::TypeB { witness, .. } => {
                for &w in witness {
                    chi.resample(w, &mut r);
                }
            }
        }
        rounds += 1;
    }
}

/// Independent weights in (0, 1) per edge; ties are broken by edge index.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeWeights {
    values: Vec<f64>,
}

impl EdgeWeights {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|&x| !(x > 0.0 && x < 1.0)) {
            return Err(invalid("edge weights must lie in (0, 1)"));
        }
        Ok(EdgeWeights { values })
    }

    pub fn uniform<R: Rng>(m: usize, r: &mut R) -> Self {
        EdgeWeights { values: (0..m).map(|_| r.sample(Open01)).collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Strict total order on edges.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.values[a].total_cmp(&self.values[b]).then(a.cmp(&b)).is_lt()
    }
}

/// Keeps edge uv iff it is lighter than every other edge at u or at v that
/// joins the same two color classes.
pub fn edge_retention(h: &Graph, chi: &VertexColoring, weights: &EdgeWeights) -> Result<Graph> {
    if weights.len() != h.m() {
        return Err(invalid(format!("{} weights for {} edges", weights.len(), h.m())));
    }
    if chi.len() != h.n() {
        return Err(invalid(format!("coloring covers {} of {} vertices", chi.len(), h.n())));
    }
    if let Some((u, v)) = h.edges().find(|&(u, v)| chi.color(u) == chi.color(v)) {
        return Err(Error::ImproperColoring(u, v));
    }
    let mut wins = vec![0u8; h.m()];
    let mut lightest: HashMap<u32, usize> = HashMap::new();
    for u in 0..h.n() {
        lightest.clear();
        for (&w, &e) in h.neighbors(u).iter().zip(h.incident_edges(u)) {
            let e = e as usize;
            lightest
                .entry(chi.colors[w as usize])
                .and_modify(|best| {
                    if weights.less(e, *best) {
                        *best = e;
                    }
                })
                .or_insert(e);
        }
        for &e in lightest.values() {
            wins[e] += 1;
        }
    }
    Ok(h.filter_edges(|i, _, _| wins[i] == 2))
}

/// k = ⌈2e⁴Δ⌉, or half the order cap when 2k would exceed it.
pub fn host_size(max_degree: usize) -> (usize, bool) {
    let k = (2.0 * std::f64::consts::E.powi(4) * max_degree as f64).ceil() as usize;
    if 2 * k > HOST_ORDER_CAP {
        (HOST_ORDER_CAP / 2, true)
    } else {
        (k.max(1), false)
    }
}

/// Host of girth >= 2r+2 and order in (k, 2k] where possible: the projective
/// incidence graph for r = 2, a greedy graph otherwise, thinned to its dense core.
pub fn degree_host(k: usize, r: usize) -> Result<std::sync::Arc<HostGraph>> {
    hosts::cached(format!("degree:r={r}:k={k}"), || {
        let base = if r == 2 {
            incidence_graph_pg2(prime_for_order(k))?
        } else {
            greedy_high_girth((2 * k).max(2 * r + 2), 2 * r + 2, HOST_SEED)?
        };
        dense_subhost(&base, k)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeOptions {
    pub r: usize,
    pub trials: usize,
    pub seed: u64,
    pub max_rounds: usize,
    pub exec: Execution,
}

impl DegreeOptions {
    pub fn new(r: usize, trials: usize, seed: u64) -> Self {
        DegreeOptions { r, trials, seed, max_rounds: DEFAULT_MAX_ROUNDS, exec: Execution::default() }
    }
}

struct Candidate {
    method: &'static str,
    graph: Graph,
    degraded: bool,
    rounds: usize,
    residual: usize,
}

pub fn extract_spanning_high_girth(g: &Graph, r: usize, seed: u64, trials: usize) -> Result<(Graph, ExtractionReport)> {
    extract_degree_with(g, DegreeOptions::new(r, trials, seed))
}

/// Best certified spanning subgraph of girth >= 2r+2 by minimum degree, then
/// non-degraded first, then edge count, then candidate order (trials, the
/// identity, a spanning forest).
pub fn extract_degree_with(g: &Graph, opts: DegreeOptions) -> Result<(Graph, ExtractionReport)> {
    let DegreeOptions { r, trials, seed, max_rounds, exec } = opts;
    if r < 2 {
        return Err(invalid(format!("r must be at least 2, got {r}")));
    }
    if trials == 0 {
        return Err(invalid("trials must be at least 1"));
    }
    if max_rounds == 0 {
        return Err(invalid("max_rounds must be at least 1"));
    }
    let fam = ForbiddenFamily::AllCyclesUpTo(2 * r + 1);
    let delta = g.max_degree();
    let (k, capped) = host_size(delta);
    let host = degree_host(k, r)?;
    let q = host.min_degree.max(1);
    let t = ((delta.max(1) as f64).ln().ceil() as usize).max(1);

    let runs: Vec<Result<(Graph, Candidate)>> = exec.map((0..trials as u64).collect(), |i| {
        let s = mix(seed, i);
        let out = resample_until_clear(g, &host.graph, q, t, s, max_rounds);
        let hp = h_prime(g, &out.coloring, &host.graph)?;
        let weights = EdgeWeights::uniform(hp.m(), &mut rng(splitmix(s)));
        let kept = edge_retention(&hp, &out.coloring, &weights)?;
        certify(&kept, fam, "retention")?;
        let full = saturate(g, &kept, fam, splitmix(splitmix(s)));
        Ok((
            kept,
            Candidate {
                method: "retention",
                graph: full,
                degraded: out.degraded,
                rounds: out.rounds,
                residual: out.residual,
            },
        ))
    });
    let mut raws = Vec::with_capacity(trials);
    let mut candidates = Vec::new();
    for run in runs {
        let (raw, cand) = run?;
        raws.push(raw);
        candidates.push(cand);
    }
    let degraded_trials = candidates.iter().filter(|c| c.degraded).count();
    let trial_mean_edges = candidates.iter().map(|c| c.graph.m() as f64).sum::<f64>() / trials as f64;

    let mut fallbacks = Vec::new();
    if check_family_free(g, fam).is_free() {
        fallbacks.push(("identity", g.clone()));
    }
    fallbacks.push(("spanning-forest", spanning_forest(g)));
    for (j, (method, start)) in fallbacks.into_iter().enumerate() {
        certify(&start, fam, method)?;
        let full = saturate(g, &start, fam, mix(seed, (1 << 40) + j as u64));
        candidates.push(Candidate { method, graph: full, degraded: false, rounds: 0, residual: 0 });
    }

    let key = |c: &Candidate| (c.graph.min_degree(), !c.degraded, c.graph.m());
    let mut best = 0;
    for i in 1..candidates.len() {
        if key(&candidates[i]) > key(&candidates[best]) {
            best = i;
        }
    }
    let win = candidates.swap_remove(best);
    certify(&win.graph, fam, "final")?;

    let delta_f = delta.max(1) as f64;
    let details = DegreeDetails {
        host: HostSummary {
            label: host.label.clone(),
            order: host.order(),
            min_degree: host.min_degree,
            girth: host.certified_girth,
        },
        t,
        q,
        rounds_used: win.rounds,
        degraded: win.degraded,
        residual_events: win.residual,
        degraded_trials,
        preconditions: Preconditions {
            host_uncapped: !capped,
            degree_floor: g.min_degree() as f64 > 129.0 * (t as f64).powi(3) * delta_f.ln(),
        },
    };
    let report = ExtractionReport {
        schema_version: SCHEMA_VERSION,
        command: "extract degree".into(),
        input: InputStats::of(g),
        method: win.method.to_string(),
        dispatch: None,
        r,
        trials,
        seed,
        odd_free: false,
        output: OutputStats::of(&win.graph),
        certificate: Certificate::check(&win.graph, fam),
        raw: TrialStats::of(&raws),
        trial_mean_edges,
        degree: Some(details),
        timing_ms: None,
    };
    Ok((win.graph, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::girth;
    use crate::hosts::{generate, GraphKind};

    fn gen(kind: GraphKind) -> Graph {
        generate(kind).unwrap()
    }

    fn chi(colors: &[usize], ell: usize) -> VertexColoring {
        VertexColoring::new(colors.to_vec(), ell).unwrap()
    }

    #[test]
    fn bad_event_examples() {
        let k4 = gen(GraphKind::Complete(4));
        let host = gen(GraphKind::Complete(6));
        let inj = chi(&[0, 1, 2, 3], 6);
        assert!(find_bad_events(&k4, &inj, &host, 1, 1).is_empty());

        let host = gen(GraphKind::Complete(4));
        assert!(find_bad_events(&k4, &inj, &host, 2, 1).is_empty());

        let claw = gen(GraphKind::Star(3));
        let c = chi(&[0, 1, 1, 1], 2);
        let ev = find_bad_events(&claw, &c, &gen(GraphKind::Complete(2)), 1, 2);
        assert_eq!(ev, vec![BadEvent::TypeB { vertex: 0, color: 1, witness: vec![1, 2, 3] }]);
    }

    #[test]
    fn type_a_uses_exact_comparison() {
        // One of two edges survives in a 4-color host: 2·4·1 <= q·2 iff q >= 4.
        let p3 = gen(GraphKind::Path(3));
        let host = Graph::from_edges(4, [(0, 1)]).unwrap();
        let c = chi(&[2, 0, 1], 4);
        let a = |q| find_bad_events(&p3, &c, &host, q, 2).contains(&BadEvent::TypeA(1));
        assert!(!a(3));
        assert!(a(4));
    }

    #[test]
    fn resampling_examples() {
        let host = gen(GraphKind::Complete(3));
        let out = resample_until_clear(&Graph::empty(4), &host, 1, 1, 5, 10);
        assert_eq!((out.rounds, out.degraded), (0, false));

        let k4 = gen(GraphKind::Complete(4));
        let big = gen(GraphKind::Complete(8));
        for seed in 0..20 {
            let out = resample_until_clear(&k4, &big, 1, 1, seed, 10_000);
            assert!(!out.degraded);
            assert!(find_bad_events(&k4, &out.coloring, &big, 1, 1).is_empty());
            for v in 0..4 {
                let mut cs: Vec<usize> = k4.neighbors(v).iter().map(|&w| out.coloring.color(w as usize)).collect();
                cs.sort_unstable();
                cs.dedup();
                assert_eq!(cs.len(), 3);
            }
        }

        let p3 = gen(GraphKind::Path(3));
        let out = resample_until_clear(&p3, &Graph::empty(1), 1, 1, 0, 25);
        assert!(out.degraded);
        assert_eq!(out.rounds, 25);
        assert!(out.residual > 0);
    }

    #[test]
    fn retention_examples() {
        let claw = gen(GraphKind::Star(3));
        let w = EdgeWeights::new(vec![0.5, 0.2, 0.9]).unwrap();
        let kept = edge_retention(&claw, &chi(&[0, 1, 1, 1], 2), &w).unwrap();
        assert_eq!(kept.edges().collect::<Vec<_>>(), vec![(0, 2)]);

        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let w = EdgeWeights::new(vec![0.3, 0.7]).unwrap();
        assert_eq!(edge_retention(&two, &chi(&[0, 1, 0, 1], 2), &w).unwrap(), two);

        let k3 = gen(GraphKind::Complete(3));
        let w = EdgeWeights::new(vec![0.1, 0.2, 0.3]).unwrap();
        assert_eq!(edge_retention(&k3, &chi(&[0, 1, 2], 3), &w).unwrap(), k3);

        assert!(matches!(edge_retention(&k3, &chi(&[0, 0, 1], 2), &w), Err(Error::ImproperColoring(0, 1))));
        assert!(EdgeWeights::new(vec![1.0]).is_err());
    }

    #[test]
    fn weight_ties_break_by_index() {
        let w = EdgeWeights::new(vec![0.5, 0.5]).unwrap();
        assert!(w.less(0, 1));
        assert!(!w.less(1, 0));
        let p3 = gen(GraphKind::Path(3));
        let kept = edge_retention(&p3, &chi(&[0, 1, 0], 2), &w).unwrap();
        assert_eq!(kept.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn host_sizing() {
        assert_eq!(host_size(1), (110, false));
        assert_eq!(host_size(10), (1092, false));
        let (k, capped) = host_size(1000);
        assert!(capped);
        assert_eq!(k, HOST_ORDER_CAP / 2);
    }

    #[test]
    fn pipeline_examples() {
        let k7 = gen(GraphKind::Complete(7));
        let (out, rep) = extract_spanning_high_girth(&k7, 2, 3, 4).unwrap();
        assert!(girth(&out).is_at_least(6));
        assert!(out.min_degree() >= 1);
        assert!(out.is_spanning_subgraph_of(&k7));
        let d = rep.degree.as_ref().unwrap();
        assert!(d.host.girth.is_at_least(6));
        assert_eq!(d.t, 2);

        let c7 = gen(GraphKind::Cycle(7));
        let (out, rep) = extract_spanning_high_girth(&c7, 2, 0, 2).unwrap();
        assert_eq!(out, c7);
        assert_eq!(rep.method, "identity");

        let apex = gen(GraphKind::CliqueApex { min_deg: 4, max_deg: 6 });
        let (out, rep) = extract_spanning_high_girth(&apex, 2, 1, 3).unwrap();
        assert!(girth(&out).is_at_least(6));
        assert_eq!(rep.output.min_degree, out.min_degree());

        assert!(extract_spanning_high_girth(&k7, 1, 0, 1).is_err());
    }

    #[test]
    fn r3_uses_greedy_host() {
        let g = gen(GraphKind::RandomGnm { n: 30, m: 40, seed: 1 });
        let (out, rep) = extract_spanning_high_girth(&g, 3, 2, 2).unwrap();
        assert!(girth(&out).is_at_least(8));
        assert!(rep.degree.unwrap().host.girth.is_at_least(8));
    }
}
