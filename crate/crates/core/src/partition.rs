//! Local-search (k−1)-partition keeping a per-vertex share of every degree.
//!
//! Starting from a seeded random assignment, any vertex with more than
//! d(v)/(k−1) neighbors in its own part moves to the part where it has the
//! fewest (lowest index on ties). Each move raises the cut by at least one,
//! so the search stops after at most m moves, and at the end every vertex
//! keeps d_out(v) >= (1 − 1/(k−1))·d(v) of its edges across parts.

use std::fmt::Write as _;

use rand::Rng as _;

use crate::error::{invalid, Result};
use crate::exec::rng;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<u32>,
    k: usize,
}

impl Partition {
    /// Number of parts, k − 1.
    pub fn part_count(&self) -> usize {
        self.k - 1
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn part(&self, v: usize) -> usize {
        self.parts[v] as usize
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.parts
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.part_count()];
        for &p in &self.parts {
            s[p as usize] += 1;
        }
        s
    }

    /// `vertex part` lines.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for (v, p) in self.parts.iter().enumerate() {
            writeln!(out, "{v} {p}").unwrap();
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct PartitionOutcome {
    pub partition: Partition,
    /// Spanning subgraph of the edges between different parts.
    pub cross: Graph,
    pub moves: usize,
}

pub fn max_kpartite(g: &Graph, k: usize, seed: u64) -> Result<PartitionOutcome> {
    if k < 3 {
        return Err(invalid(format!("k must be at least 3, got {k}")));
    }
    let parts_n = k - 1;
    let mut r = rng(seed);
    let mut parts: Vec<u32> = (0..g.n()).map(|_| r.gen_range(0..parts_n) as u32).collect();
    let mut counts = vec![0usize; parts_n];
    let mut moves = 0;
    'scan: loop {
        for v in 0..g.n() {
            counts.iter_mut().for_each(|c| *c = 0);
            for &w in g.neighbors(v) {
                counts[parts[w as usize] as usize] += 1;
            }
            let own = counts[parts[v] as usize];
            if own * (k - 1) > g.degree(v) {
                let target = (0..parts_n).min_by_key(|&p| (counts[p], p)).unwrap();
                parts[v] = target as u32;
                moves += 1;
                continue 'scan;
            }
        }
        break;
    }
    let cross = g.filter_edges(|_, u, v| parts[u] != parts[v]);
    Ok(PartitionOutcome { partition: Partition { parts, k }, cross, moves })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hosts::{generate, GraphKind};

    /// Largest cut over all assignments into `p` parts.
    fn brute_max_cut(g: &Graph, p: usize) -> usize {
        let n = g.n();
        let mut best = 0;
        let total = p.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let assign: Vec<usize> = (0..n)
                .map(|_| {
                    let x = c % p;
                    c /= p;
                    x
                })
                .collect();
            best = best.max(g.edges().filter(|&(u, v)| assign[u] != assign[v]).count());
        }
        best
    }

    fn check_guarantee(g: &Graph, out: &PartitionOutcome) {
        let k = out.partition.k();
        for v in 0..g.n() {
            let kept = out.cross.degree(v);
            assert!(kept * (k - 1) >= (k - 2) * g.degree(v), "vertex {v}");
        }
        for (u, v) in out.cross.edges() {
            assert_ne!(out.partition.part(u), out.partition.part(v));
        }
        assert!(out.moves <= g.m());
    }

    #[test]
    fn c5_bipartition_keeps_four() {
        let c5 = generate(GraphKind::Cycle(5)).unwrap();
        assert_eq!(brute_max_cut(&c5, 2), 4);
        for seed in 0..20 {
            let out = max_kpartite(&c5, 3, seed).unwrap();
            check_guarantee(&c5, &out);
            assert_eq!(out.cross.m(), 4);
        }
    }

    #[test]
    fn triangle_into_three_parts_is_rainbow() {
        let k3 = generate(GraphKind::Complete(3)).unwrap();
        for seed in 0..20 {
            let out = max_kpartite(&k3, 4, seed).unwrap();
            assert_eq!(out.cross.m(), 3);
        }
    }

    #[test]
    fn k4_guarantees() {
        let k4 = generate(GraphKind::Complete(4)).unwrap();
        assert_eq!(brute_max_cut(&k4, 2), 4);
        assert_eq!(brute_max_cut(&k4, 3), 5);
        let mut saw_five = false;
        for seed in 0..40 {
            let out = max_kpartite(&k4, 3, seed).unwrap();
            check_guarantee(&k4, &out);
            assert_eq!(out.cross.m(), 4);
            let out = max_kpartite(&k4, 4, seed).unwrap();
            check_guarantee(&k4, &out);
            assert!(out.cross.m() >= 4);
            if out.cross.m() == 5 {
                let mut s = out.partition.sizes();
                s.sort_unstable();
                assert_eq!(s, vec![1, 1, 2]);
                saw_five = true;
            }
        }
        assert!(saw_five);
    }

    #[test]
    fn rejects_small_k() {
        let g = generate(GraphKind::Complete(3)).unwrap();
        assert!(max_kpartite(&g, 2, 0).is_err());
    }

    #[test]
    fn lines_format() {
        let g = generate(GraphKind::Path(3)).unwrap();
        let out = max_kpartite(&g, 3, 1).unwrap();
        assert_eq!(out.partition.to_lines().lines().count(), 3);
    }
}
