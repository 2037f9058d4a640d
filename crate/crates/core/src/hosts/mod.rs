//! Certified host graphs for the embeddings, plus generators for inputs.
//!
//! Every [`HostGraph`] is checked against its claimed forbidden family when
//! it is built; construction fails rather than hand out an uncertified host.

mod generate;
mod projective;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{invalid, Error, Result};
use crate::exec::{splitmix64, Execution};
use crate::graph::{check_family_free, ForbiddenFamily, Girth, Graph, GrowingGraph, Verdict};

pub use generate::{generate, GraphKind};
pub use projective::{is_prime, prime_for_order, projective_order};

#[derive(Clone, Debug)]
pub struct HostGraph {
    pub graph: Graph,
    /// `None` when no cycle length is excluded (e.g. a greedy host with target girth 3).
    pub certified_family: Option<ForbiddenFamily>,
    pub certified_girth: Girth,
    pub min_degree: usize,
    pub label: String,
    /// For bipartite hosts: vertices `0..left` form part A, the rest part B.
    pub left: Option<usize>,
    /// Set when a requested degree floor could not be met.
    pub degraded: bool,
}

impl HostGraph {
    /// Certifies `graph` against `family` (and the bipartition, if given).
    pub fn certify(
        graph: Graph,
        family: Option<ForbiddenFamily>,
        label: impl Into<String>,
        left: Option<usize>,
    ) -> Result<Self> {
        let label = label.into();
        if let Some(left) = left {
            check_parts(&graph, left)?;
        }
        if let Some(fam) = family {
            if let Verdict::Witness { cycle } = check_family_free(&graph, fam) {
                return Err(Error::CertificateFailure(format!(
                    "host {label} contains a forbidden cycle {:?}",
                    cycle.vertices
                )));
            }
        }
        let certified_girth = crate::graph::girth_with(&graph, Execution::default());
        Ok(HostGraph {
            min_degree: graph.min_degree(),
            graph,
            certified_family: family,
            certified_girth,
            label,
            left,
            degraded: false,
        })
    }

    pub fn order(&self) -> usize {
        self.graph.n()
    }

    /// Part sizes `(|A|, |B|)` of a bipartite host.
    pub fn parts(&self) -> Option<(usize, usize)> {
        self.left.map(|l| (l, self.graph.n() - l))
    }

    /// The same bipartite host with B relabelled first.
    pub fn flipped(&self) -> Result<HostGraph> {
        let left = self.left.ok_or_else(|| invalid("flip needs a bipartite host"))?;
        let n = self.graph.n();
        let order: Vec<usize> = (left..n).chain(0..left).collect();
        Ok(HostGraph {
            graph: self.graph.induced(&order),
            left: Some(n - left),
            label: format!("flip({})", self.label),
            ..self.clone()
        })
    }

    /// Keeps the `k` highest-degree vertices of part A and all of B.
    pub fn trim_left(&self, k: usize) -> Result<HostGraph> {
        let left = self.left.ok_or_else(|| invalid("trim needs a bipartite host"))?;
        let graph = bipartite_trim(&self.graph, left, k)?;
        let mut host =
            HostGraph::certify(graph, self.certified_family, format!("trim({},k={k})", self.label), Some(k))?;
        host.degraded = self.degraded;
        Ok(host)
    }

    /// Human-readable key-value side-car describing the certificate.
    pub fn metadata(&self) -> String {
        let mut s = String::new();
        writeln!(s, "label = {}", self.label).unwrap();
        writeln!(s, "vertices = {}", self.graph.n()).unwrap();
        writeln!(s, "edges = {}", self.graph.m()).unwrap();
        match self.certified_family {
            Some(f) => writeln!(s, "certified_family = {f}").unwrap(),
            None => writeln!(s, "certified_family = none").unwrap(),
        }
        writeln!(s, "girth = {}", self.certified_girth).unwrap();
        writeln!(s, "min_degree = {}", self.min_degree).unwrap();
        match self.parts() {
            Some((a, b)) => writeln!(s, "parts = {a},{b}").unwrap(),
            None => writeln!(s, "parts = none").unwrap(),
        }
        writeln!(s, "degraded = {}", self.degraded).unwrap();
        s
    }
}

fn check_parts(g: &Graph, left: usize) -> Result<()> {
    if left > g.n() {
        return Err(invalid(format!("part size {left} exceeds {} vertices", g.n())));
    }
    match g.edges().find(|&(u, v)| (u < left) == (v < left)) {
        Some((u, v)) => Err(Error::NotBipartite(u, v)),
        None => Ok(()),
    }
}

/// Graph on the q²+q+1 points of the projective plane over F_q, with
/// x ~ y iff x·y = 0 and x ≠ y. C4-free; absolute points have degree q,
/// all others q+1.
pub fn polarity_graph(q: u32) -> Result<HostGraph> {
    if !is_prime(q) || !(2..=101).contains(&q) {
        return Err(invalid(format!("polarity graph needs a prime 2 <= q <= 101, got {q}")));
    }
    let pts = projective::points(q);
    let mut edges = Vec::new();
    for (x, p) in pts.iter().enumerate() {
        for y in projective::line_points(q, *p) {
            if x < y {
                edges.push((x as u32, y as u32));
            }
        }
    }
    edges.sort_unstable();
    let graph = Graph::from_sorted(pts.len(), edges);
    HostGraph::certify(graph, Some(ForbiddenFamily::EvenCyclesUpTo(4)), format!("polarity(q={q})"), None)
}

/// Point-line incidence graph of PG(2, q): points are `0..N`, lines `N..2N`
/// with N = q²+q+1. (q+1)-regular with girth 6.
pub fn incidence_graph_pg2(q: u32) -> Result<HostGraph> {
    if !is_prime(q) {
        return Err(invalid(format!("incidence graph needs a prime q, got {q}")));
    }
    if q > 1000 {
        return Err(invalid(format!("q = {q} is too large for an in-memory host")));
    }
    let pts = projective::points(q);
    let np = pts.len();
    let mut edges = Vec::with_capacity(np * (q as usize + 1));
    for (p, &pt) in pts.iter().enumerate() {
        // Lines reuse point coordinates; p lies on line L iff p·L = 0, and
        // the points on line L are exactly the lines through point L.
        for l in projective::line_points(q, pt) {
            edges.push((p as u32, (np + l) as u32));
        }
    }
    edges.sort_unstable();
    let graph = Graph::from_sorted(2 * np, edges);
    HostGraph::certify(graph, Some(ForbiddenFamily::AllCyclesUpTo(5)), format!("incidence_pg2(q={q})"), Some(np))
}

/// Random greedy graph of girth >= `min_girth`: scans all vertex pairs in a
/// seeded pseudo-random order and keeps each pair that closes no shorter cycle.
pub fn greedy_high_girth(n: usize, min_girth: usize, seed: u64) -> Result<HostGraph> {
    if min_girth < 3 {
        return Err(invalid(format!("greedy host needs min_girth >= 3, got {min_girth}")));
    }
    let pairs = (n as u64) * (n as u64).saturating_sub(1) / 2;
    let perm = FeistelPermutation::new(pairs, seed);
    let mut grow = GrowingGraph::new(n);
    for i in 0..pairs {
        let (u, v) = decode_pair(perm.apply(i));
        if !grow.within_distance(u, v, min_girth - 2) {
            grow.add_edge(u, v);
        }
    }
    let family = (min_girth >= 4).then_some(ForbiddenFamily::AllCyclesUpTo(min_girth - 1));
    HostGraph::certify(grow.to_graph(), family, format!("greedy(n={n},girth>={min_girth},seed={seed})"), None)
}

/// Bipartite double cover: vertices (x, 0) are `0..n`, (x, 1) are `n..2n`,
/// and each edge x-y becomes (x,0)-(y,1) and (y,0)-(x,1). Girth never drops.
pub fn double_cover(host: &HostGraph) -> Result<HostGraph> {
    let g = &host.graph;
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m());
    for (x, y) in g.edges() {
        edges.push((x, n + y));
        edges.push((y, n + x));
    }
    let cover = Graph::from_edges(2 * n, edges)?;
    // Bipartite, so odd cycles are gone and the family widens to the next odd length.
    let family = match host.certified_family {
        Some(ForbiddenFamily::AllCyclesUpTo(b)) => {
            Some(ForbiddenFamily::AllCyclesUpTo(if b % 2 == 0 { b + 1 } else { b }))
        }
        other => other,
    };
    HostGraph::certify(cover, family, format!("cover({})", host.label), Some(n))
}

/// Vertices of the q-core: the maximal induced subgraph with minimum degree >= q.
pub fn core_vertices(g: &Graph, q: usize) -> Vec<usize> {
    let order = removal_order(g, q);
    let mut removed = vec![false; g.n()];
    for &v in &order {
        removed[v] = true;
    }
    (0..g.n()).filter(|&v| !removed[v]).collect()
}

/// Iteratively deletes vertices of degree < q; the result does not depend on
/// the deletion order.
pub fn prune_min_degree(g: &Graph, q: usize) -> Graph {
    g.induced(&core_vertices(g, q))
}

/// Deletion sequence of the peeling process: FIFO, seeded in index order.
fn removal_order(g: &Graph, q: usize) -> Vec<usize> {
    let mut deg = g.degrees();
    let mut queued = vec![false; g.n()];
    let mut queue = std::collections::VecDeque::new();
    for v in 0..g.n() {
        if deg[v] < q {
            queued[v] = true;
            queue.push_back(v);
        }
    }
    let mut order = Vec::new();
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.neighbors(v) {
            let w = w as usize;
            if queued[w] {
                continue;
            }
            deg[w] -= 1;
            if deg[w] < q {
                queued[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

/// Dense sub-host with order in (k, 2k] when possible and degree floor
/// `edges / (2·2k)`, rounded up.
pub fn dense_subhost(host: &HostGraph, k: usize) -> Result<HostGraph> {
    if k == 0 {
        return Err(invalid("dense_subhost needs k >= 1"));
    }
    let q = host.graph.m().div_ceil(4 * k);
    dense_subhost_with_threshold(host, k, q)
}

/// Peels vertices of degree < q. If peeling would leave k or fewer vertices,
/// the last iterate with more than k vertices is returned and flagged
/// degraded when its minimum degree is below q.
pub fn dense_subhost_with_threshold(host: &HostGraph, k: usize, q: usize) -> Result<HostGraph> {
    let g = &host.graph;
    let order = removal_order(g, q);
    let keep_removed = if g.n() - order.len() > k { order.len() } else { g.n().saturating_sub(k + 1).min(order.len()) };
    let mut removed = vec![false; g.n()];
    for &v in &order[..keep_removed] {
        removed[v] = true;
    }
    let kept: Vec<usize> = (0..g.n()).filter(|&v| !removed[v]).collect();
    let left = host.left.map(|l| kept.iter().filter(|&&v| v < l).count());
    let sub = g.induced(&kept);
    let mut out = HostGraph::certify(sub, host.certified_family, format!("core({},k={k},q={q})", host.label), left)?;
    out.degraded = host.degraded || out.min_degree < q;
    Ok(out)
}

/// Induced subgraph on the `k` highest-degree vertices of part A = `0..left`
/// (ties by lower index, kept in index order) together with all of part B.
pub fn bipartite_trim(g: &Graph, left: usize, k: usize) -> Result<Graph> {
    check_parts(g, left)?;
    if k > left {
        return Err(invalid(format!("cannot keep {k} of {left} vertices in part A")));
    }
    let mut a: Vec<usize> = (0..left).collect();
    a.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    a.truncate(k);
    a.sort_unstable();
    let keep: Vec<usize> = a.into_iter().chain(left..g.n()).collect();
    Ok(g.induced(&keep))
}

/// Process-wide memo for pipeline hosts, which are deterministic in their key.
pub(crate) fn cached<F>(key: String, build: F) -> Result<Arc<HostGraph>>
where
    F: FnOnce() -> Result<HostGraph>,
{
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<HostGraph>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut map = cache.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(h) = map.get(&key) {
        return Ok(h.clone());
    }
    let host = Arc::new(build()?);
    map.insert(key, host.clone());
    Ok(host)
}

/// Pair index in colex order: (u, v) with u < v maps to v(v-1)/2 + u.
fn decode_pair(idx: u64) -> (usize, usize) {
    let mut v = ((1.0 + (1.0 + 8.0 * idx as f64).sqrt()) / 2.0) as u64;
    while v * (v - 1) / 2 > idx {
        v -= 1;
    }
    while (v + 1) * v / 2 <= idx {
        v += 1;
    }
    let u = idx - v * (v - 1) / 2;
    (u as usize, v as usize)
}

/// Keyed bijection on `0..len`: a balanced 4-round Feistel network on the
/// next even bit width, cycle-walked back into range.
struct FeistelPermutation {
    len: u64,
    half_bits: u32,
    keys: [u64; 4],
}

impl FeistelPermutation {
    fn new(len: u64, seed: u64) -> Self {
        let bits = 64 - len.max(2).saturating_sub(1).leading_zeros();
        let half_bits = bits.div_ceil(2).max(1);
        let mut k = seed;
        let keys = std::array::from_fn(|_| {
            k = splitmix64(k);
            k
        });
        FeistelPermutation { len, half_bits, keys }
    }

    fn round(&self, x: u64) -> u64 {
        let mask = (1u64 << self.half_bits) - 1;
        let (mut l, mut r) = (x >> self.half_bits, x & mask);
        for key in self.keys {
            let f = splitmix64(r ^ key) & mask;
            (l, r) = (r, l ^ f);
        }
        (l << self.half_bits) | r
    }

    fn apply(&self, mut x: u64) -> u64 {
        loop {
            x = self.round(x);
            if x < self.len {
                return x;
            }
        }
    }
}
