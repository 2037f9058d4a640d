//! Exact answers on tiny inputs, used to check the extractors.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{CycleWitness, ForbiddenFamily, Graph, GrowingGraph};

/// Largest edge count accepted by [`exact_ex`].
pub const EXACT_EDGE_CAP: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub value: usize,
    /// Edge indices of an optimal subgraph, ascending.
    pub witness: Vec<usize>,
    /// Search nodes visited.
    pub explored: u64,
}

/// Maximum number of edges in a `fam`-free subgraph of `g`, by exhaustive
/// branch and bound over edge inclusion.
pub fn exact_ex(g: &Graph, fam: ForbiddenFamily) -> Result<ExactResult> {
    if g.m() > EXACT_EDGE_CAP {
        return Err(Error::TooLarge { m: g.m(), cap: EXACT_EDGE_CAP });
    }
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.sort_by_key(|&i| {
        let (u, v) = g.edge(i);
        (std::cmp::Reverse(g.degree(u) + g.degree(v)), i)
    });
    let mut search =
        Search { g, fam, order, grow: GrowingGraph::new(g.n()), chosen: Vec::new(), best: Vec::new(), explored: 0 };
    // Greedy pass in branch order seeds the bound.
    for k in 0..search.order.len() {
        let (u, v) = g.edge(search.order[k]);
        if !search.grow.closes_forbidden(u, v, fam) {
            search.grow.add_edge(u, v);
            search.best.push(search.order[k]);
        }
    }
    search.grow = GrowingGraph::new(g.n());
    search.descend(0);
    let mut witness = search.best;
    witness.sort_unstable();
    Ok(ExactResult { value: witness.len(), witness, explored: search.explored })
}

struct Search<'a> {
    g: &'a Graph,
    fam: ForbiddenFamily,
    order: Vec<usize>,
    grow: GrowingGraph,
    chosen: Vec<usize>,
    best: Vec<usize>,
    explored: u64,
}

impl Search<'_> {
    fn descend(&mut self, pos: usize) {
        self.explored += 1;
        if self.chosen.len() + (self.order.len() - pos) <= self.best.len() {
            return;
        }
        if pos == self.order.len() {
            self.best = self.chosen.clone();
            return;
        }
        let e = self.order[pos];
        let (u, v) = self.g.edge(e);
        if !self.grow.closes_forbidden(u, v, self.fam) {
            self.grow.add_edge(u, v);
            self.chosen.push(e);
            self.descend(pos + 1);
            self.chosen.pop();
            self.grow.remove_edge(u, v);
        }
        self.descend(pos + 1);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CherryVerdict {
    /// Σ_{a∈A} C(d(a), 2) <= C(|B|, 2), with both sides reported.
    Holds { cherries: u64, capacity: u64 },
    /// Two vertices of B with two common neighbors in A, closing a 4-cycle.
    Violation { pair: (usize, usize), centers: (usize, usize), cycle: CycleWitness },
}

impl CherryVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, CherryVerdict::Holds { .. })
    }
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// Counts cherries centered in A = `0..left` against the pairs of B.
pub fn cherry_check(h: &Graph, left: usize) -> Result<CherryVerdict> {
    if left > h.n() {
        return Err(invalid(format!("part size {left} exceeds {} vertices", h.n())));
    }
    if let Some((u, v)) = h.edges().find(|&(u, v)| (u < left) == (v < left)) {
        return Err(Error::NotBipartite(u, v));
    }
    // Each B-pair may be covered by at most one center; stop at the first repeat.
    let mut owner: HashMap<(u32, u32), u32> = HashMap::new();
    for a in 0..left {
        let nb = h.neighbors(a);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if let Some(&prev) = owner.get(&(nb[i], nb[j])) {
                    let (b1, b2, a0) = (nb[i] as usize, nb[j] as usize, prev as usize);
                    return Ok(CherryVerdict::Violation {
                        pair: (b1, b2),
                        centers: (a0, a),
                        cycle: CycleWitness { vertices: vec![a0, b1, a, b2] },
                    });
                }
                owner.insert((nb[i], nb[j]), a as u32);
            }
        }
    }
    let cherries = (0..left).map(|a| choose2(h.degree(a) as u64)).sum();
    let capacity = choose2((h.n() - left) as u64);
    Ok(CherryVerdict::Holds { cherries, capacity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{check_family_free, find_short_even_cycle};
    use crate::hosts::{generate, GraphKind};

    fn gen(kind: GraphKind) -> Graph {
        generate(kind).unwrap()
    }

    /// Every edge subset, checked by the certifier.
    fn brute_ex(g: &Graph, fam: ForbiddenFamily) -> usize {
        let m = g.m();
        (0u32..1 << m)
            .filter_map(|mask| {
                let keep: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
                let sub = g.edge_subgraph(&keep).unwrap();
                check_family_free(&sub, fam).is_free().then_some(keep.len())
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn anchors() {
        let c4 = ForbiddenFamily::EvenCyclesUpTo(4);
        let k4 = gen(GraphKind::Complete(4));
        assert_eq!(brute_ex(&k4, c4), 4);
        assert_eq!(exact_ex(&k4, c4).unwrap().value, 4);
        assert_eq!(exact_ex(&gen(GraphKind::Cycle(5)), c4).unwrap().value, 5);
        let k33 = gen(GraphKind::CompleteBipartite(3, 3));
        assert_eq!(brute_ex(&k33, c4), 6);
        assert_eq!(exact_ex(&k33, c4).unwrap().value, 6);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        for seed in 0..40 {
            let g = gen(GraphKind::RandomGnm { n: 7, m: 12, seed });
            for fam in [
                ForbiddenFamily::EvenCyclesUpTo(4),
                ForbiddenFamily::EvenCyclesUpTo(6),
                ForbiddenFamily::AllCyclesUpTo(4),
            ] {
                let res = exact_ex(&g, fam).unwrap();
                assert_eq!(res.value, brute_ex(&g, fam), "seed {seed} {fam}");
                let w = g.edge_subgraph(&res.witness).unwrap();
                assert_eq!(w.m(), res.value);
                assert!(check_family_free(&w, fam).is_free());
            }
        }
    }

    #[test]
    fn identity_and_cap() {
        let p = gen(GraphKind::Path(10));
        let res = exact_ex(&p, ForbiddenFamily::AllCyclesUpTo(9)).unwrap();
        assert_eq!(res.value, 9);
        let big = gen(GraphKind::Complete(9));
        assert!(matches!(exact_ex(&big, ForbiddenFamily::EvenCyclesUpTo(4)), Err(Error::TooLarge { m: 36, cap: 30 })));
    }

    #[test]
    fn cherry_examples() {
        // C8 with parts {0,2,4,6} -> relabelled so A = 0..4.
        let c8 = Graph::from_edges(8, (0..4).flat_map(|i| [(i, 4 + i), (i, 4 + (i + 1) % 4)])).unwrap();
        assert_eq!(cherry_check(&c8, 4).unwrap(), CherryVerdict::Holds { cherries: 4, capacity: 6 });

        let k22 = gen(GraphKind::CompleteBipartite(2, 2));
        let v = cherry_check(&k22, 2).unwrap();
        match v {
            CherryVerdict::Violation { cycle, .. } => assert!(cycle.validates_against(&k22)),
            other => panic!("expected a violation, got {other:?}"),
        }

        let star = gen(GraphKind::CompleteBipartite(1, 5));
        assert_eq!(cherry_check(&star, 1).unwrap(), CherryVerdict::Holds { cherries: 10, capacity: 10 });

        assert!(matches!(cherry_check(&gen(GraphKind::Complete(3)), 1), Err(Error::NotBipartite(..))));
    }

    #[test]
    fn cherry_violation_iff_c4() {
        for seed in 0..60 {
            let g = gen(GraphKind::RandomGnm { n: 14, m: 14 + seed as usize % 20, seed });
            // Keep only edges across the split 0..7 | 7..14.
            let h = g.filter_edges(|_, u, v| (u < 7) != (v < 7));
            let verdict = cherry_check(&h, 7).unwrap();
            assert_eq!(!verdict.holds(), find_short_even_cycle(&h, 4).is_some());
            if let CherryVerdict::Holds { cherries, capacity } = verdict {
                assert!(cherries <= capacity);
            }
        }
    }
}
