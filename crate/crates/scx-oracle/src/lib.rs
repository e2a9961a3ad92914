//! Naive reference implementations used to cross-check `scx`.
//!
//! [`brute_force_distance`] evaluates the weighted distance straight from
//! the d-path definition by exhaustive search, and [`graph_dijkstra`] is the
//! textbook single-source algorithm on an ordinary weighted graph. Neither
//! shares code with the search paths they are meant to verify, and neither
//! is built for speed: the exhaustive search carries a hard node-expansion
//! budget and reports exceeding it as an error rather than guessing.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};

use scx::{Simplex, WeightedComplex};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
    #[error("search budget exhausted after {expansions} node expansions")]
    InstanceTooLarge { expansions: u64 },
}

/// Default node-expansion budget for the exhaustive search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Refuse instances whose dual node count alone makes exhaustion hopeless.
const MAX_FACETS: usize = 5_000;

/// Weighted distance between two (d-1)-simplices, by definition.
///
/// Enumerates every d-path from `source`, with both distinctness clauses
/// enforced literally, and returns the least total weight; infinity when no
/// d-path exists. Intended for small instances only.
pub fn brute_force_distance(
    cx: &WeightedComplex,
    source: &Simplex,
    target: &Simplex,
) -> Result<f64, OracleError> {
    brute_force_distance_with_budget(cx, source, target, DEFAULT_BUDGET)
}

pub fn brute_force_distance_with_budget(
    cx: &WeightedComplex,
    source: &Simplex,
    target: &Simplex,
    budget: u64,
) -> Result<f64, OracleError> {
    for (s, w) in cx.entries() {
        if w.is_nan() || w < 0.0 {
            return Err(OracleError::InvalidWeights(format!("weight {w} on {s:?}")));
        }
    }
    for s in [source, target] {
        if s.cardinality() != cx.dim() || s.max_vertex() > cx.vertex_count() {
            return Err(OracleError::InvalidSimplex(format!(
                "{s:?} is not a ({})-vertex simplex over 1..={}",
                cx.dim(),
                cx.vertex_count()
            )));
        }
    }
    if source == target {
        return Ok(0.0);
    }

    // own dual tables, built by scanning X^d directly
    let mut facet_ids: BTreeMap<Simplex, usize> = BTreeMap::new();
    let mut id_of = |s: Simplex, table: &mut Vec<Vec<(usize, usize, f64)>>| -> usize {
        let next = facet_ids.len();
        let id = *facet_ids.entry(s).or_insert(next);
        if id == next {
            table.push(Vec::new());
        }
        id
    };
    let mut adj: Vec<Vec<(usize, usize, f64)>> = Vec::new();
    for (tau_index, (tau, w)) in cx.entries().enumerate() {
        let ids: Vec<usize> = tau.facets().into_iter().map(|f| id_of(f, &mut adj)).collect();
        for &a in &ids {
            for &b in &ids {
                if a != b {
                    adj[a].push((b, tau_index, w));
                }
            }
        }
    }
    if adj.len() > MAX_FACETS {
        return Err(OracleError::InstanceTooLarge { expansions: 0 });
    }
    let (Some(&src), Some(&tgt)) = (facet_ids.get(source), facet_ids.get(target)) else {
        // a d-path of positive length only touches incident simplices
        return Ok(f64::INFINITY);
    };

    // Admissible remaining-cost bound for branch and bound: the walk
    // distance to the target with both distinctness clauses dropped. Every
    // d-path is such a walk, so pruning on it never cuts an optimal d-path,
    // whether or not the constrained and relaxed optima coincide. Computed
    // by fixpoint relaxation, which shares nothing with the heap search
    // this oracle exists to check.
    let mut floor = vec![f64::INFINITY; adj.len()];
    floor[tgt] = 0.0;
    loop {
        let mut changed = false;
        for u in 0..adj.len() {
            for &(v, _, w) in &adj[u] {
                if floor[v] + w < floor[u] {
                    floor[u] = floor[v] + w;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    if floor[src].is_infinite() {
        // no walk reaches the target, hence no d-path does
        return Ok(f64::INFINITY);
    }

    // most promising steps first so a tight incumbent arrives early
    for list in &mut adj {
        list.sort_by(|a, b| {
            let ka = a.2 + floor[a.0];
            let kb = b.2 + floor[b.0];
            ka.partial_cmp(&kb).expect("finite weights").then(a.0.cmp(&b.0))
        });
    }

    let mut dfs = Dfs {
        adj: &adj,
        target: tgt,
        floor: &floor,
        budget,
        expansions: 0,
        best: f64::INFINITY,
        used_facet: vec![false; adj.len()],
        used_tau: vec![false; cx.simplex_count()],
    };
    dfs.used_facet[src] = true;
    dfs.explore(src, 0.0)?;
    Ok(dfs.best)
}

struct Dfs<'a> {
    adj: &'a [Vec<(usize, usize, f64)>],
    target: usize,
    /// Lower bound on the cost still to pay from each node.
    floor: &'a [f64],
    budget: u64,
    expansions: u64,
    best: f64,
    used_facet: Vec<bool>,
    used_tau: Vec<bool>,
}

impl Dfs<'_> {
    fn explore(&mut self, at: usize, total: f64) -> Result<(), OracleError> {
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(OracleError::InstanceTooLarge { expansions: self.expansions });
        }
        if at == self.target {
            self.best = total;
            return Ok(());
        }
        for &(next, tau, w) in &self.adj[at] {
            if self.used_facet[next] || self.used_tau[tau] {
                continue;
            }
            if total + w + self.floor[next] >= self.best {
                continue; // provably cannot improve the incumbent
            }
            self.used_facet[next] = true;
            self.used_tau[tau] = true;
            self.explore(next, total + w)?;
            self.used_facet[next] = false;
            self.used_tau[tau] = false;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq)]
struct State {
    cost: f64,
    vertex: usize,
}

impl Eq for State {}

impl Ord for State {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .cost
            .partial_cmp(&self.cost)
            .expect("costs are never NaN")
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for State {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Textbook single-source shortest paths on an undirected weighted graph.
///
/// Vertices are `0..vertex_count`; returns one distance per vertex,
/// infinity for the unreachable ones.
pub fn graph_dijkstra(
    vertex_count: usize,
    edges: &[(usize, usize, f64)],
    source: usize,
) -> Result<Vec<f64>, OracleError> {
    if source >= vertex_count {
        return Err(OracleError::InvalidEdge(format!(
            "source {source} outside 0..{vertex_count}"
        )));
    }
    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); vertex_count];
    for &(u, v, w) in edges {
        if u >= vertex_count || v >= vertex_count {
            return Err(OracleError::InvalidEdge(format!(
                "edge ({u}, {v}) outside 0..{vertex_count}"
            )));
        }
        if w.is_nan() || w < 0.0 {
            return Err(OracleError::InvalidWeights(format!(
                "weight {w} on edge ({u}, {v})"
            )));
        }
        adj[u].push((v, w));
        adj[v].push((u, w));
    }

    let mut dist = vec![f64::INFINITY; vertex_count];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(State { cost: 0.0, vertex: source });
    while let Some(State { cost, vertex }) = heap.pop() {
        if cost > dist[vertex] {
            continue;
        }
        for &(next, w) in &adj[vertex] {
            let candidate = cost + w;
            if candidate < dist[next] {
                dist[next] = candidate;
                heap.push(State { cost: candidate, vertex: next });
            }
        }
    }
    Ok(dist)
}
