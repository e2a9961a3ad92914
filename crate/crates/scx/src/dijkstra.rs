//! Single-source shortest d-paths.
//!
//! The search runs on the dual view of the complex: nodes are the incident
//! (d-1)-simplices and each top simplex joins every pair of its facets at
//! its own weight. Those edges are enumerated on the fly from the incidence
//! index rather than materialized, keeping memory proportional to the input.
//! The frontier is a binary heap with lazy deletion: stale entries are
//! skipped at pop time instead of being decreased in place. Ties in
//! extraction resolve toward the lexicographically smaller simplex and an
//! equal-cost relaxation never replaces an existing predecessor, so results
//! are identical run to run.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap, HashSet};

use crate::complex::WeightedComplex;
use crate::error::Error;
use crate::simplex::Simplex;

/// Finalized distances from a source (d-1)-simplex.
///
/// Only reachable simplices are present; absence means infinite distance.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMap {
    source: Simplex,
    entries: BTreeMap<Simplex, DistanceEntry>,
    settled: Vec<Simplex>,
}

/// Distance plus the predecessor record used to reach a simplex.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceEntry {
    pub distance: f64,
    /// `(previous (d-1)-simplex, connecting top simplex)`; `None` only for
    /// the source.
    pub predecessor: Option<(Simplex, Simplex)>,
}

impl DistanceMap {
    pub fn source(&self) -> &Simplex {
        &self.source
    }

    /// The finalized distance, infinite when unreachable.
    pub fn distance(&self, s: &Simplex) -> f64 {
        self.entries.get(s).map_or(f64::INFINITY, |e| e.distance)
    }

    pub fn get(&self, s: &Simplex) -> Option<&DistanceEntry> {
        self.entries.get(s)
    }

    /// Reachable simplices with their entries, in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&Simplex, &DistanceEntry)> {
        self.entries.iter()
    }

    /// Number of reachable simplices, including the source.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Simplices in the order the search finalized them. Distances along
    /// this sequence are non-decreasing.
    pub fn settled(&self) -> &[Simplex] {
        &self.settled
    }

    /// Rebuilds the recorded shortest d-path to `target`, if reachable.
    pub fn path_to(&self, target: &Simplex) -> Option<DPath> {
        let entry = self.entries.get(target)?;
        let mut simplices = vec![target.clone()];
        let mut via = Vec::new();
        let mut cur = entry;
        while let Some((prev, tau)) = &cur.predecessor {
            via.push(tau.clone());
            simplices.push(prev.clone());
            cur = self.entries.get(prev).expect("predecessors are finalized");
        }
        simplices.reverse();
        via.reverse();
        Some(DPath { simplices, via, total: entry.distance })
    }
}

/// A d-path: distinct (d-1)-simplices joined step by step through distinct
/// weighted top simplices.
#[derive(Clone, Debug, PartialEq)]
pub struct DPath {
    simplices: Vec<Simplex>,
    via: Vec<Simplex>,
    total: f64,
}

impl DPath {
    /// The (d-1)-simplex sequence, source first.
    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    /// The connecting top simplices, one per hop.
    pub fn via(&self) -> &[Simplex] {
        &self.via
    }

    pub fn hops(&self) -> usize {
        self.via.len()
    }

    /// Sum of the weights along the path.
    pub fn total(&self) -> f64 {
        self.total
    }
}

/// Why a simplex sequence fails to be a d-path.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PathDefect {
    #[error("empty sequence")]
    Empty,
    #[error("element {index} is not a (d-1)-simplex over the complex")]
    NotALowerSimplex { index: usize },
    #[error("simplex at position {index} occurred earlier in the sequence")]
    RepeatedSimplex { index: usize },
    #[error("union of positions {index} and {} is not a weighted top simplex", index + 1)]
    StepNotInComplex { index: usize },
    #[error("connecting simplex of step {index} was already used")]
    RepeatedConnector { index: usize },
}

#[derive(Clone, Copy, PartialEq)]
struct HeapEntry {
    dist: f64,
    facet: u32,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // reversed so the max-heap pops the smallest (dist, facet)
        other
            .dist
            .partial_cmp(&self.dist)
            .expect("search distances are never NaN")
            .then_with(|| other.facet.cmp(&self.facet))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Search {
    dist: Vec<f64>,
    pred: Vec<Option<(u32, u32)>>,
    visited: Vec<bool>,
    settled: Vec<u32>,
}

fn run_search(cx: &WeightedComplex, source: usize, target: Option<usize>) -> Search {
    let facet_count = cx.incident_facets().len();
    let mut dist = vec![f64::INFINITY; facet_count];
    let mut pred: Vec<Option<(u32, u32)>> = vec![None; facet_count];
    let mut visited = vec![false; facet_count];
    let mut settled = Vec::new();
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(HeapEntry { dist: 0.0, facet: source as u32 });

    while let Some(HeapEntry { dist: d, facet }) = heap.pop() {
        let u = facet as usize;
        if visited[u] {
            continue; // stale entry
        }
        visited[u] = true;
        settled.push(facet);
        if target == Some(u) {
            break;
        }
        for &tau in cx.taus_of_facet(u) {
            let next = d + cx.tau_weight(tau as usize);
            for &v in cx.facets_of_tau(tau as usize) {
                let vi = v as usize;
                // relax unvisited facets only; equality keeps the first predecessor
                if visited[vi] || next >= dist[vi] {
                    continue;
                }
                dist[vi] = next;
                pred[vi] = Some((facet, tau));
                heap.push(HeapEntry { dist: next, facet: v });
            }
        }
    }
    Search { dist, pred, visited, settled }
}

impl WeightedComplex {
    /// Shortest weighted distances from `source` to every (d-1)-simplex.
    ///
    /// Requires non-negative weights and a valid source. A source contained
    /// in no top simplex yields a map holding only itself at distance 0.
    pub fn sssp(&self, source: &Simplex) -> Result<DistanceMap, Error> {
        self.ensure_search_weights()?;
        self.check_query_simplex(source)?;
        Ok(self.sssp_unchecked(source))
    }

    pub(crate) fn sssp_unchecked(&self, source: &Simplex) -> DistanceMap {
        let Some(source_id) = self.facet_index(source) else {
            let mut entries = BTreeMap::new();
            entries.insert(
                source.clone(),
                DistanceEntry { distance: 0.0, predecessor: None },
            );
            return DistanceMap {
                source: source.clone(),
                entries,
                settled: vec![source.clone()],
            };
        };
        let search = run_search(self, source_id, None);
        let facets = self.incident_facets();
        let mut entries = BTreeMap::new();
        let mut settled = Vec::with_capacity(search.settled.len());
        for &id in &search.settled {
            let u = id as usize;
            let simplex = facets[u].clone();
            let predecessor = search.pred[u].map(|(pf, pt)| {
                (facets[pf as usize].clone(), self.tau_simplex(pt as usize).clone())
            });
            entries.insert(
                simplex.clone(),
                DistanceEntry { distance: search.dist[u], predecessor },
            );
            settled.push(simplex);
        }
        DistanceMap { source: facets[source_id].clone(), entries, settled }
    }

    /// One distance map per incident (d-1)-simplex, in lexicographic order
    /// of the sources. Runs the independent searches in parallel when the
    /// `parallel` feature is enabled.
    pub fn sssp_all_sources(&self) -> Result<Vec<DistanceMap>, Error> {
        self.ensure_search_weights()?;
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            Ok(self
                .incident_facets()
                .par_iter()
                .map(|s| self.sssp_unchecked(s))
                .collect())
        }
        #[cfg(not(feature = "parallel"))]
        {
            Ok(self
                .incident_facets()
                .iter()
                .map(|s| self.sssp_unchecked(s))
                .collect())
        }
    }

    /// Sequential twin of [`WeightedComplex::sssp_all_sources`], available
    /// regardless of features.
    pub fn sssp_all_sources_serial(&self) -> Result<Vec<DistanceMap>, Error> {
        self.ensure_search_weights()?;
        Ok(self
            .incident_facets()
            .iter()
            .map(|s| self.sssp_unchecked(s))
            .collect())
    }

    /// The lowest-weight d-path from `source` to `target`, or `None` when
    /// the target is unreachable.
    ///
    /// The search stops as soon as the target is finalized.
    pub fn shortest_path(
        &self,
        source: &Simplex,
        target: &Simplex,
    ) -> Result<Option<DPath>, Error> {
        self.ensure_search_weights()?;
        self.check_query_simplex(source)?;
        self.check_query_simplex(target)?;
        if source == target {
            return Ok(Some(DPath {
                simplices: vec![source.clone()],
                via: Vec::new(),
                total: 0.0,
            }));
        }
        let (Some(source_id), Some(target_id)) =
            (self.facet_index(source), self.facet_index(target))
        else {
            return Ok(None);
        };
        let search = run_search(self, source_id, Some(target_id));
        if !search.visited[target_id] {
            return Ok(None);
        }
        let facets = self.incident_facets();
        let mut simplices = vec![facets[target_id].clone()];
        let mut via = Vec::new();
        let mut cur = target_id;
        while let Some((pf, pt)) = search.pred[cur] {
            via.push(self.tau_simplex(pt as usize).clone());
            simplices.push(facets[pf as usize].clone());
            cur = pf as usize;
        }
        simplices.reverse();
        via.reverse();
        Ok(Some(DPath { simplices, via, total: search.dist[target_id] }))
    }

    /// Checks the d-path conditions in order and reports the first failure:
    /// every element a (d-1)-simplex, all elements distinct, every
    /// consecutive union a weighted top simplex, and all those unions
    /// distinct.
    pub fn check_d_path(&self, simplices: &[Simplex]) -> Result<(), PathDefect> {
        if simplices.is_empty() {
            return Err(PathDefect::Empty);
        }
        for (index, s) in simplices.iter().enumerate() {
            if s.cardinality() != self.dim() || s.max_vertex() > self.vertex_count() {
                return Err(PathDefect::NotALowerSimplex { index });
            }
        }
        let mut seen = HashSet::new();
        for (index, s) in simplices.iter().enumerate() {
            if !seen.insert(s) {
                return Err(PathDefect::RepeatedSimplex { index });
            }
        }
        for (index, pair) in simplices.windows(2).enumerate() {
            if self.weight(&pair[0].union(&pair[1])).is_none() {
                return Err(PathDefect::StepNotInComplex { index });
            }
        }
        let mut connectors = HashSet::new();
        for (index, pair) in simplices.windows(2).enumerate() {
            if !connectors.insert(pair[0].union(&pair[1])) {
                return Err(PathDefect::RepeatedConnector { index });
            }
        }
        Ok(())
    }

    pub fn is_d_path(&self, simplices: &[Simplex]) -> bool {
        self.check_d_path(simplices).is_ok()
    }
}
