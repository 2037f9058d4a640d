//! Mutable adjacency for incremental constructions: greedy high-girth hosts,
//! saturation of extractor outputs, and the exact search in the oracle.

use rand::seq::SliceRandom;

use super::{ForbiddenFamily, Graph};
use crate::exec::rng;

pub struct GrowingGraph {
    adj: Vec<Vec<u32>>,
    m: usize,
    stamp: Vec<u32>,
    seen: Vec<u32>,
    dist: Vec<u32>,
    epoch: u32,
    on_path: Vec<bool>,
    queue: Vec<u32>,
}

impl GrowingGraph {
    pub fn new(n: usize) -> Self {
        GrowingGraph {
            adj: vec![Vec::new(); n],
            m: 0,
            stamp: vec![0; n],
            seen: vec![0; n],
            dist: vec![0; n],
            epoch: 0,
            on_path: vec![false; n],
            queue: Vec::new(),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut gg = GrowingGraph::new(g.n());
        for (u, v) in g.edges() {
            gg.add_edge(u, v);
        }
        gg
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].contains(&(b as u32))
    }

    /// Caller guarantees the edge is new and not a loop.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.has_edge(u, v));
        self.adj[u].push(v as u32);
        self.adj[v].push(u as u32);
        self.m += 1;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        let pu = self.adj[u].iter().position(|&x| x as usize == v).expect("edge present");
        self.adj[u].swap_remove(pu);
        let pv = self.adj[v].iter().position(|&x| x as usize == u).expect("edge present");
        self.adj[v].swap_remove(pv);
        self.m -= 1;
    }

    pub fn to_graph(&self) -> Graph {
        let mut edges: Vec<(u32, u32)> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| (u as u32) < v).map(move |&v| (u as u32, v)))
            .collect();
        edges.sort_unstable();
        Graph::from_sorted(self.n(), edges)
    }

    /// Whether adding the (absent) edge u-v would create a cycle in `fam`.
    pub fn closes_forbidden(&mut self, u: usize, v: usize, fam: ForbiddenFamily) -> bool {
        match fam {
            ForbiddenFamily::AllCyclesUpTo(b) => self.within_distance(u, v, b - 1),
            ForbiddenFamily::EvenCyclesUpTo(b) => self.has_odd_path(u, v, b - 1),
        }
    }

    /// Whether dist(u, v) <= limit, by meeting balls of radius ~limit/2 from both ends.
    pub fn within_distance(&mut self, u: usize, v: usize, limit: usize) -> bool {
        if u == v {
            return true;
        }
        if limit == 0 {
            return false;
        }
        let from_u = limit.div_ceil(2);
        let from_v = limit - from_u;
        self.epoch += 1;
        let ep = self.epoch;
        self.bfs_mark(u, from_u, ep);
        if self.stamp[v] == ep {
            return true;
        }
        let mut frontier = vec![v as u32];
        self.seen[v] = ep;
        for dv in 0..=from_v {
            let mut next = Vec::new();
            for &w in &frontier {
                let w = w as usize;
                if self.stamp[w] == ep && self.dist[w] as usize + dv <= limit {
                    return true;
                }
                if dv == from_v {
                    continue;
                }
                for &y in &self.adj[w] {
                    if self.seen[y as usize] != ep {
                        self.seen[y as usize] = ep;
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        false
    }

    fn bfs_mark(&mut self, s: usize, depth: usize, ep: u32) {
        self.queue.clear();
        self.queue.push(s as u32);
        self.stamp[s] = ep;
        self.dist[s] = 0;
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head] as usize;
            head += 1;
            let dx = self.dist[x];
            if dx as usize >= depth {
                continue;
            }
            for i in 0..self.adj[x].len() {
                let y = self.adj[x][i] as usize;
                if self.stamp[y] != ep {
                    self.stamp[y] = ep;
                    self.dist[y] = dx + 1;
                    self.queue.push(y as u32);
                }
            }
        }
    }

    /// Whether a simple u-v path with an odd number of edges in 3..=limit exists.
    fn has_odd_path(&mut self, u: usize, v: usize, limit: usize) -> bool {
        if limit < 3 {
            return false;
        }
        self.epoch += 1;
        let ep = self.epoch;
        // Distances towards v bound how far the path may still wander.
        self.bfs_mark(v, limit, ep);
        if self.stamp[u] != ep {
            return false;
        }
        self.on_path[u] = true;
        let found = self.odd_path_dfs(u, v, 0, limit, ep);
        self.on_path[u] = false;
        found
    }

    fn odd_path_dfs(&mut self, x: usize, v: usize, len: usize, limit: usize, ep: u32) -> bool {
        for i in 0..self.adj[x].len() {
            let y = self.adj[x][i] as usize;
            let next = len + 1;
            if y == v {
                if next >= 3 && next % 2 == 1 {
                    return true;
                }
                continue;
            }
            if self.on_path[y] || self.stamp[y] != ep || next + self.dist[y] as usize > limit {
                continue;
            }
            self.on_path[y] = true;
            let found = self.odd_path_dfs(y, v, next, limit, ep);
            self.on_path[y] = false;
            if found {
                return true;
            }
        }
        false
    }
}

/// Greedily extends `start` (a `fam`-free spanning subgraph of `base`) with
/// edges of `base` in a seeded random order, skipping any edge that would
/// close a forbidden cycle. The result is maximal: no further edge of `base`
/// can be added.
pub fn saturate(base: &Graph, start: &Graph, fam: ForbiddenFamily, seed: u64) -> Graph {
    debug_assert!(start.is_spanning_subgraph_of(base));
    let mut order: Vec<usize> = (0..base.m()).collect();
    order.shuffle(&mut rng(seed));
    let mut grow = GrowingGraph::from_graph(start);
    for i in order {
        let (u, v) = base.edge(i);
        if grow.has_edge(u, v) {
            continue;
        }
        if !grow.closes_forbidden(u, v, fam) {
            grow.add_edge(u, v);
        }
    }
    grow.to_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::check_family_free;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn distance_checks() {
        let mut g = GrowingGraph::new(6);
        for i in 0..5 {
            g.add_edge(i, i + 1);
        }
        assert!(g.within_distance(0, 5, 5));
        assert!(!g.within_distance(0, 5, 4));
        assert!(g.within_distance(2, 3, 1));
        assert!(!g.within_distance(0, 2, 1));
    }

    #[test]
    fn odd_paths_close_even_cycles() {
        let mut g = GrowingGraph::new(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        // 0..3 has a path of 3 edges: adding 0-3 makes a C4.
        assert!(g.closes_forbidden(0, 3, ForbiddenFamily::EvenCyclesUpTo(4)));
        // 0..2 has only a 2-edge path: a triangle, not even.
        assert!(!g.closes_forbidden(0, 2, ForbiddenFamily::EvenCyclesUpTo(4)));
        assert!(g.closes_forbidden(0, 2, ForbiddenFamily::AllCyclesUpTo(3)));
    }

    #[test]
    fn saturation_is_free_and_maximal() {
        let k7 = complete(7);
        for fam in [ForbiddenFamily::EvenCyclesUpTo(4), ForbiddenFamily::AllCyclesUpTo(5)] {
            for seed in 0..5 {
                let h = saturate(&k7, &Graph::empty(7), fam, seed);
                assert!(check_family_free(&h, fam).is_free());
                for (u, v) in k7.edges() {
                    if !h.has_edge(u, v) {
                        let mut e: Vec<_> = h.edges().collect();
                        e.push((u, v));
                        let bigger = Graph::from_edges(7, e).unwrap();
                        assert!(!check_family_free(&bigger, fam).is_free());
                    }
                }
            }
        }
    }
}
