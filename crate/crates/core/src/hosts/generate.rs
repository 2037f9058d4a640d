use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;

use crate::error::{invalid, Error, Result};
use crate::exec::rng;
use crate::graph::Graph;

/// Input graph families used in experiments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    /// Center 0 joined to leaves 1..=n.
    Star(usize),
    /// `max_deg` disjoint copies of K_{min_deg+1}, plus an apex joined to one
    /// vertex of each copy. The apex is the last vertex.
    CliqueApex {
        min_deg: usize,
        max_deg: usize,
    },
    /// Parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
    /// Uniform over graphs with `m` edges on `n` vertices, given the seed.
    RandomGnm {
        n: usize,
        m: usize,
        seed: u64,
    },
    Complete(usize),
    Cycle(usize),
    Path(usize),
}

pub fn generate(kind: GraphKind) -> Result<Graph> {
    match kind {
        GraphKind::Star(n) => Graph::from_edges(n + 1, (1..=n).map(|v| (0, v))),
        GraphKind::CliqueApex { min_deg, max_deg } => {
            if min_deg < 1 || max_deg < 1 {
                return Err(invalid("clique_apex needs min_deg >= 1 and max_deg >= 1"));
            }
            if max_deg < min_deg + 1 {
                return Err(invalid(format!(
                    "clique_apex needs max_deg >= min_deg + 1 for the apex to attain it, got {min_deg},{max_deg}"
                )));
            }
            let size = min_deg + 1;
            let apex = max_deg * size;
            let mut edges = Vec::new();
            for c in 0..max_deg {
                let base = c * size;
                for i in 0..size {
                    for j in i + 1..size {
                        edges.push((base + i, base + j));
                    }
                }
                edges.push((base, apex));
            }
            Graph::from_edges(apex + 1, edges)
        }
        GraphKind::CompleteBipartite(a, b) => {
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        GraphKind::RandomGnm { n, m, seed } => {
            let pairs = n * n.saturating_sub(1) / 2;
            if m > pairs {
                return Err(invalid(format!("{m} edges do not fit on {n} vertices")));
            }
            let mut r = rng(seed);
            let mut chosen = sample(&mut r, pairs, m).into_vec();
            chosen.sort_unstable();
            let edges = chosen.into_iter().map(|idx| {
                // Row-major over u < v.
                let mut u = 0;
                let mut rest = idx;
                while rest >= n - 1 - u {
                    rest -= n - 1 - u;
                    u += 1;
                }
                (u, u + 1 + rest)
            });
            Graph::from_edges(n, edges)
        }
        GraphKind::Complete(n) => Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))),
        GraphKind::Cycle(n) => {
            if n < 3 {
                return Err(invalid("a cycle needs at least 3 vertices"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        GraphKind::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphKind::Star(n) => write!(f, "star:{n}"),
            GraphKind::CliqueApex { min_deg, max_deg } => write!(f, "clique-apex:{min_deg}:{max_deg}"),
            GraphKind::CompleteBipartite(a, b) => write!(f, "complete-bipartite:{a}:{b}"),
            GraphKind::RandomGnm { n, m, seed } => write!(f, "gnm:{n}:{m}:{seed}"),
            GraphKind::Complete(n) => write!(f, "complete:{n}"),
            GraphKind::Cycle(n) => write!(f, "cycle:{n}"),
            GraphKind::Path(n) => write!(f, "path:{n}"),
        }
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    /// `star:N`, `clique-apex:MIN:MAX`, `complete-bipartite:A:B`,
    /// `gnm:N:M:SEED`, `complete:N`, `cycle:N`, `path:N`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let nums: Vec<u64> = parts
            .map(|p| p.parse().map_err(|_| invalid(format!("bad number {p:?} in {s:?}"))))
            .collect::<Result<_>>()?;
        let want = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(invalid(format!("{name} takes {k} parameter(s), got {s:?}")))
            }
        };
        let u = |i: usize| nums[i] as usize;
        Ok(match name {
            "star" => {
                want(1)?;
                GraphKind::Star(u(0))
            }
            "clique-apex" => {
                want(2)?;
                GraphKind::CliqueApex { min_deg: u(0), max_deg: u(1) }
            }
            "complete-bipartite" => {
                want(2)?;
                GraphKind::CompleteBipartite(u(0), u(1))
            }
            "gnm" => {
                want(3)?;
                GraphKind::RandomGnm { n: u(0), m: u(1), seed: nums[2] }
            }
            "complete" => {
                want(1)?;
                GraphKind::Complete(u(0))
            }
            "cycle" => {
                want(1)?;
                GraphKind::Cycle(u(0))
            }
            "path" => {
                want(1)?;
                GraphKind::Path(u(0))
            }
            _ => return Err(invalid(format!("unknown graph kind {name:?}"))),
        })
    }
}
