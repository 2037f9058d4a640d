//! Immutable simple undirected graphs.
//!
//! Vertices are `0..n`. Edges are stored once, normalized so that `u < v`,
//! sorted lexicographically; the edge index used throughout the crate is the
//! position in that sorted list. Adjacency is a compressed sparse row layout
//! with sorted neighbor lists and the matching edge index per slot.

mod cycles;
mod grow;
pub mod io;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};

pub use cycles::{check_family_free, find_short_even_cycle, girth, girth_with, shortest_cycle, Verdict};
pub use grow::{saturate, GrowingGraph};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    slot_edge: Vec<u32>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > u32::MAX as usize {
            return Err(invalid(format!("vertex count {n} exceeds u32 range")));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            list.push((a as u32, b as u32));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0 as usize, w[0].1 as usize));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// `edges` must already be normalized, sorted and duplicate-free.
    pub(crate) fn from_sorted(n: usize, edges: Vec<(u32, u32)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut deg = vec![0usize; n + 1];
        for &(u, v) in &edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0;
        offsets.push(0);
        for d in deg.iter().take(n) {
            acc += d;
            offsets.push(acc);
        }
        let mut fill = offsets.clone();
        let mut neighbors = vec![0u32; acc];
        let mut slot_edge = vec![0u32; acc];
        // Edges are sorted by (u, v); inserting in that order leaves every
        // neighbor list sorted: for vertex x, neighbors below x arrive from
        // edges (w, x) ordered by w, before any edge (x, y).
        for (i, &(u, v)) in edges.iter().enumerate() {
            let (u, v) = (u as usize, v as usize);
            neighbors[fill[u]] = v as u32;
            slot_edge[fill[u]] = i as u32;
            fill[u] += 1;
            neighbors[fill[v]] = u as u32;
            slot_edge[fill[v]] = i as u32;
            fill[v] += 1;
        }
        for x in 0..n {
            let (lo, hi) = (offsets[x], offsets[x + 1]);
            debug_assert!(neighbors[lo..hi].windows(2).all(|w| w[0] < w[1]));
        }
        Graph { n, edges, offsets, neighbors, slot_edge }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, idx: usize) -> (usize, usize) {
        let (u, v) = self.edges[idx];
        (u as usize, v as usize)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Edge indices incident to `v`, aligned with [`Graph::neighbors`].
    pub fn incident_edges(&self, v: usize) -> &[u32] {
        &self.slot_edge[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Zero for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(a).binary_search(&(b as u32)).ok().map(|i| self.incident_edges(a)[i] as usize)
    }

    /// Spanning subgraph on the listed edge indices (order and repeats ignored).
    pub fn edge_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut mask = vec![false; self.m()];
        for &i in keep {
            if i >= self.m() {
                return Err(Error::UnknownEdge(i));
            }
            mask[i] = true;
        }
        Ok(self.filter_edges(|i, _, _| mask[i]))
    }

    /// Spanning subgraph keeping the edges accepted by `keep(index, u, v)`.
    pub fn filter_edges<F>(&self, mut keep: F) -> Graph
    where
        F: FnMut(usize, usize, usize) -> bool,
    {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, &(u, v))| keep(i, u as usize, v as usize))
            .map(|(_, &e)| e)
            .collect();
        Graph::from_sorted(self.n, edges)
    }

    /// Induced subgraph on `vertices`, relabelled in the order given.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut label = vec![u32::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            label[v] = i as u32;
        }
        let mut edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                let (a, b) = (label[u as usize], label[v as usize]);
                (a != u32::MAX && b != u32::MAX).then_some(if a < b { (a, b) } else { (b, a) })
            })
            .collect();
        edges.sort_unstable();
        Graph::from_sorted(vertices.len(), edges)
    }

    /// Whether `self` is a subgraph of `other` on the same vertex set.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Proper 2-coloring if one exists, by BFS per component (lowest vertex gets side 0).
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        let mut queue = Vec::new();
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                for &y in self.neighbors(x) {
                    let y = y as usize;
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        queue.push(y);
                    } else if side[y] == side[x] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (u, v) in self.edges() {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }
}

/// Length of a shortest cycle, ordered so that every finite value is below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

/// A cycle given as its cyclic vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks length >= 3, distinct vertices and cyclic adjacency in `g`.
    pub fn validates_against(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        if k < 3 {
            return false;
        }
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == k && (0..k).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

/// Which short cycles are forbidden.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ForbiddenFamily {
    /// C4, C6, ..., C_bound; bound even and at least 4.
    EvenCyclesUpTo(usize),
    /// C3, C4, ..., C_bound; bound at least 3.
    AllCyclesUpTo(usize),
}

impl ForbiddenFamily {
    pub fn even_up_to(bound: usize) -> Result<Self> {
        if bound < 4 || !bound.is_multiple_of(2) {
            return Err(invalid(format!("even-cycle bound must be even and >= 4, got {bound}")));
        }
        Ok(ForbiddenFamily::EvenCyclesUpTo(bound))
    }

    pub fn all_up_to(bound: usize) -> Result<Self> {
        if bound < 3 {
            return Err(invalid(format!("cycle bound must be >= 3, got {bound}")));
        }
        Ok(ForbiddenFamily::AllCyclesUpTo(bound))
    }

    pub fn bound(self) -> usize {
        match self {
            ForbiddenFamily::EvenCyclesUpTo(b) | ForbiddenFamily::AllCyclesUpTo(b) => b,
        }
    }

    pub fn forbids(self, len: usize) -> bool {
        match self {
            ForbiddenFamily::EvenCyclesUpTo(b) => len.is_multiple_of(2) && len >= 4 && len <= b,
            ForbiddenFamily::AllCyclesUpTo(b) => len >= 3 && len <= b,
        }
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenFamily::EvenCyclesUpTo(b) => write!(f, "even:{b}"),
            ForbiddenFamily::AllCyclesUpTo(b) => write!(f, "all:{b}"),
        }
    }
}

impl std::str::FromStr for ForbiddenFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, bound) =
            s.split_once(':').ok_or_else(|| invalid(format!("family must look like even:4 or all:5, got {s:?}")))?;
        let bound: usize = bound.parse().map_err(|_| invalid(format!("bad family bound {bound:?}")))?;
        match kind {
            "even" => ForbiddenFamily::even_up_to(bound),
            "all" => ForbiddenFamily::all_up_to(bound),
            _ => Err(invalid(format!("unknown family kind {kind:?}"))),
        }
    }
}

impl Serialize for ForbiddenFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let e = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1))));
        assert!(matches!(Graph::from_edges(3, [(0, 3)]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn adjacency_matches_edges() {
        let g = Graph::from_edges(5, [(3, 1), (0, 4), (1, 0), (2, 4)]).unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(g.neighbors(1), &[0, 3]);
        assert_eq!(g.neighbors(4), &[0, 2]);
        for (i, (u, v)) in g.edges().enumerate() {
            assert_eq!(g.edge_index(u, v), Some(i));
            assert_eq!(g.edge_index(v, u), Some(i));
        }
        assert_eq!(g.edge_index(2, 3), None);
    }

    #[test]
    fn edge_subgraph_cases() {
        let k3 = k(3);
        let none = k3.edge_subgraph(&[]).unwrap();
        assert_eq!((none.n(), none.m()), (3, 0));
        assert_eq!(k3.edge_subgraph(&[0, 1, 2]).unwrap(), k3);
        assert!(matches!(k3.edge_subgraph(&[3]), Err(Error::UnknownEdge(3))));

        let k4 = k(4);
        let star: Vec<usize> = (1..4).map(|v| k4.edge_index(0, v).unwrap()).collect();
        let s = k4.edge_subgraph(&star).unwrap();
        assert_eq!(s.m(), 3);
        assert_eq!(girth(&s), Girth::Infinite);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("even:4".parse::<ForbiddenFamily>().unwrap(), ForbiddenFamily::EvenCyclesUpTo(4));
        assert_eq!("all:5".parse::<ForbiddenFamily>().unwrap(), ForbiddenFamily::AllCyclesUpTo(5));
        assert!("even:5".parse::<ForbiddenFamily>().is_err());
        assert!("even:2".parse::<ForbiddenFamily>().is_err());
        assert!("all:2".parse::<ForbiddenFamily>().is_err());
        assert!("odd:5".parse::<ForbiddenFamily>().is_err());
    }

    #[test]
    fn girth_orders_infinite_last() {
        assert!(Girth::Finite(1000) < Girth::Infinite);
        assert!(Girth::Infinite.is_at_least(usize::MAX));
        assert_eq!(serde_json::to_string(&Girth::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&Girth::Finite(6)).unwrap(), "6");
    }
}
