//! Weighted complexes with a complete lower skeleton.

use std::fmt;

use crate::error::Error;
use crate::simplex::Simplex;

/// A weighted d-dimensional complex over the vertex universe `1..=n`.
///
/// Only the weighted top-dimensional simplices are stored. The complete
/// (d-1)-skeleton is implicit: any valid d-element vertex set is a
/// (d-1)-simplex of the complex, and those touching no weighted top simplex
/// simply have degree 0 and no neighbors. Construction builds an incidence
/// index from each involved (d-1)-simplex to the top simplices containing
/// it, which is what every query and search runs on.
///
/// The structure is immutable after construction, so shared references can
/// be queried from any number of threads.
#[derive(Clone)]
pub struct WeightedComplex {
    dim: usize,
    vertex_count: u32,
    /// Top simplices, sorted lexicographically.
    simplices: Vec<Simplex>,
    /// Weight of `simplices[i]`.
    weights: Vec<f64>,
    /// Distinct (d-1)-simplices incident to at least one top simplex, sorted.
    facets: Vec<Simplex>,
    /// CSR offsets into `facet_taus`, one range per entry of `facets`.
    facet_offsets: Vec<u32>,
    facet_taus: Vec<u32>,
    /// `dim + 1` facet ids per top simplex, ascending.
    tau_facets: Vec<u32>,
}

/// One neighbor of a (d-1)-simplex: the facet mate, the top simplex whose
/// union produced it, and that simplex's weight.
#[derive(Clone, Debug, PartialEq)]
pub struct NeighborRecord {
    pub neighbor: Simplex,
    pub via: Simplex,
    pub weight: f64,
}

impl WeightedComplex {
    /// Builds a complex of dimension `dim` over vertices `1..=vertex_count`
    /// from weighted top simplices.
    ///
    /// Every simplex must have `dim + 1` vertices within range, appear once,
    /// and carry a finite weight. Negative weights are accepted here and
    /// surfaced by [`WeightedComplex::validate`]; searches reject them.
    pub fn new(
        dim: usize,
        vertex_count: u32,
        entries: Vec<(Simplex, f64)>,
    ) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::InvalidConfig("dimension must be at least 1".into()));
        }
        if vertex_count == 0 {
            return Err(Error::InvalidConfig("vertex count must be at least 1".into()));
        }
        let mut entries = entries;
        for (s, w) in &entries {
            if s.cardinality() != dim + 1 {
                return Err(Error::InvalidSimplex(format!(
                    "{s:?} has {} vertices, expected {}",
                    s.cardinality(),
                    dim + 1
                )));
            }
            if s.max_vertex() > vertex_count {
                return Err(Error::InvalidSimplex(format!(
                    "vertex {} of {s:?} exceeds the universe 1..={vertex_count}",
                    s.max_vertex()
                )));
            }
            if !w.is_finite() {
                return Err(Error::InvalidWeights(format!("non-finite weight on {s:?}")));
            }
        }
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(pair) = entries.windows(2).find(|p| p[0].0 == p[1].0) {
            return Err(Error::InvalidSimplex(format!("duplicate simplex {:?}", pair[0].0)));
        }

        let (simplices, weights): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        let mut incidences: Vec<(Simplex, u32)> = Vec::with_capacity(simplices.len() * (dim + 1));
        for (i, tau) in simplices.iter().enumerate() {
            for facet in tau.facets() {
                incidences.push((facet, i as u32));
            }
        }
        incidences.sort();

        let mut facets: Vec<Simplex> = Vec::new();
        let mut facet_offsets: Vec<u32> = Vec::new();
        let mut facet_taus: Vec<u32> = Vec::with_capacity(incidences.len());
        for (facet, tau) in incidences {
            if facets.last() != Some(&facet) {
                facet_offsets.push(facet_taus.len() as u32);
                facets.push(facet);
            }
            facet_taus.push(tau);
        }
        facet_offsets.push(facet_taus.len() as u32);

        let mut tau_facets = vec![0u32; simplices.len() * (dim + 1)];
        let mut fill = vec![0usize; simplices.len()];
        for u in 0..facets.len() {
            let range = facet_offsets[u] as usize..facet_offsets[u + 1] as usize;
            for &tau in &facet_taus[range] {
                let t = tau as usize;
                tau_facets[t * (dim + 1) + fill[t]] = u as u32;
                fill[t] += 1;
            }
        }

        Ok(Self {
            dim,
            vertex_count,
            simplices,
            weights,
            facets,
            facet_offsets,
            facet_taus,
            tau_facets,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    /// Number of weighted top simplices.
    pub fn simplex_count(&self) -> usize {
        self.simplices.len()
    }

    /// Weighted top simplices in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (&Simplex, f64)> {
        self.simplices.iter().zip(self.weights.iter().copied())
    }

    /// Weight of a top simplex, if present.
    pub fn weight(&self, tau: &Simplex) -> Option<f64> {
        self.simplices
            .binary_search(tau)
            .ok()
            .map(|i| self.weights[i])
    }

    /// The (d-1)-simplices incident to at least one top simplex, sorted
    /// lexicographically. Their number is bounded by `(d + 1) * m`, never by
    /// the size of the complete skeleton.
    pub fn incident_facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub(crate) fn facet_index(&self, s: &Simplex) -> Option<usize> {
        self.facets.binary_search(s).ok()
    }

    pub(crate) fn taus_of_facet(&self, facet: usize) -> &[u32] {
        let range = self.facet_offsets[facet] as usize..self.facet_offsets[facet + 1] as usize;
        &self.facet_taus[range]
    }

    pub(crate) fn facets_of_tau(&self, tau: usize) -> &[u32] {
        &self.tau_facets[tau * (self.dim + 1)..(tau + 1) * (self.dim + 1)]
    }

    pub(crate) fn tau_weight(&self, tau: usize) -> f64 {
        self.weights[tau]
    }

    pub(crate) fn tau_simplex(&self, tau: usize) -> &Simplex {
        &self.simplices[tau]
    }

    /// Validates a query (d-1)-simplex: d vertices, all within the universe.
    pub(crate) fn check_query_simplex(&self, s: &Simplex) -> Result<(), Error> {
        if s.cardinality() != self.dim {
            return Err(Error::InvalidSimplex(format!(
                "{s:?} has {} vertices, expected {} for a query in dimension {}",
                s.cardinality(),
                self.dim,
                self.dim
            )));
        }
        if s.max_vertex() > self.vertex_count {
            return Err(Error::InvalidSimplex(format!(
                "vertex {} of {s:?} exceeds the universe 1..={}",
                s.max_vertex(),
                self.vertex_count
            )));
        }
        Ok(())
    }

    /// Number of top simplices containing `sigma`.
    pub fn degree(&self, sigma: &Simplex) -> Result<usize, Error> {
        self.check_query_simplex(sigma)?;
        Ok(self
            .facet_index(sigma)
            .map_or(0, |u| self.taus_of_facet(u).len()))
    }

    /// All neighbors of `sigma`, sorted lexicographically by neighbor.
    ///
    /// Two (d-1)-simplices are neighbors when their union is a weighted top
    /// simplex; each record carries that simplex and its weight. The result
    /// always has `d * degree(sigma)` records, all neighbors distinct.
    pub fn neighbors(&self, sigma: &Simplex) -> Result<Vec<NeighborRecord>, Error> {
        self.check_query_simplex(sigma)?;
        let Some(u) = self.facet_index(sigma) else {
            return Ok(Vec::new());
        };
        let mut records = Vec::with_capacity(self.taus_of_facet(u).len() * self.dim);
        for &tau in self.taus_of_facet(u) {
            let t = tau as usize;
            for &v in self.facets_of_tau(t) {
                if v as usize != u {
                    records.push(NeighborRecord {
                        neighbor: self.facets[v as usize].clone(),
                        via: self.simplices[t].clone(),
                        weight: self.weights[t],
                    });
                }
            }
        }
        records.sort_by(|a, b| a.neighbor.cmp(&b.neighbor));
        Ok(records)
    }

    /// Scans the stored data and reports every violation found.
    ///
    /// Structural problems cannot arise through the public constructors, but
    /// the scan re-checks them anyway; weight problems are the ones that can
    /// actually occur. With `strict_positive` set, zero weights are also
    /// flagged. Violations are data, not errors: an empty report means valid.
    pub fn validate(&self, strict_positive: bool) -> ValidationReport {
        let mut violations = Vec::new();
        for (s, w) in self.entries() {
            if s.cardinality() != self.dim + 1 {
                violations.push(Violation::MalformedSimplex {
                    simplex: s.clone(),
                    expected_vertices: self.dim + 1,
                });
            }
            if s.max_vertex() > self.vertex_count {
                violations.push(Violation::VertexOutOfRange {
                    simplex: s.clone(),
                    vertex: s.max_vertex(),
                });
            }
            if !w.is_finite() {
                violations.push(Violation::NonFiniteWeight { simplex: s.clone() });
            } else if w < 0.0 {
                violations.push(Violation::NegativeWeight { simplex: s.clone(), weight: w });
            } else if strict_positive && w == 0.0 {
                violations.push(Violation::NonPositiveWeight { simplex: s.clone() });
            }
        }
        ValidationReport { violations }
    }

    /// Rejects weights a shortest-path search cannot handle.
    pub(crate) fn ensure_search_weights(&self) -> Result<(), Error> {
        for (s, w) in self.entries() {
            if w.is_nan() || w < 0.0 {
                return Err(Error::InvalidWeights(format!("weight {w} on {s:?}")));
            }
        }
        Ok(())
    }
}

impl PartialEq for WeightedComplex {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.vertex_count == other.vertex_count
            && self.simplices == other.simplices
            && self.weights == other.weights
    }
}

impl fmt::Debug for WeightedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightedComplex")
            .field("dim", &self.dim)
            .field("vertex_count", &self.vertex_count)
            .field("simplex_count", &self.simplices.len())
            .field("incident_facets", &self.facets.len())
            .finish()
    }
}

/// A single problem found by [`WeightedComplex::validate`].
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    MalformedSimplex { simplex: Simplex, expected_vertices: usize },
    VertexOutOfRange { simplex: Simplex, vertex: u32 },
    NonFiniteWeight { simplex: Simplex },
    NegativeWeight { simplex: Simplex, weight: f64 },
    NonPositiveWeight { simplex: Simplex },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MalformedSimplex { simplex, expected_vertices } => {
                write!(f, "malformed simplex {simplex:?}, expected {expected_vertices} vertices")
            }
            Violation::VertexOutOfRange { simplex, vertex } => {
                write!(f, "vertex {vertex} of {simplex:?} outside the vertex universe")
            }
            Violation::NonFiniteWeight { simplex } => {
                write!(f, "non-finite weight on {simplex:?}")
            }
            Violation::NegativeWeight { simplex, weight } => {
                write!(f, "negative weight {weight} on {simplex:?}")
            }
            Violation::NonPositiveWeight { simplex } => {
                write!(f, "zero weight on {simplex:?} (strictly positive required)")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sx(ids: &[u32]) -> Simplex {
        Simplex::new(ids.to_vec()).unwrap()
    }

    /// Two filled triangles sharing the edge {1,4}.
    fn two_triangles() -> WeightedComplex {
        WeightedComplex::new(
            2,
            4,
            vec![(sx(&[1, 2, 4]), 5.0), (sx(&[1, 3, 4]), 3.0)],
        )
        .unwrap()
    }

    /// Three triangles fanned around the edge {2,3}.
    fn triangle_fan() -> WeightedComplex {
        WeightedComplex::new(
            2,
            5,
            vec![
                (sx(&[1, 2, 3]), 1.0),
                (sx(&[2, 3, 4]), 1.0),
                (sx(&[2, 3, 5]), 1.0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn neighbors_of_shared_edge() {
        let cx = two_triangles();
        let records = cx.neighbors(&sx(&[1, 4])).unwrap();
        let summary: Vec<(Simplex, Simplex)> = records
            .iter()
            .map(|r| (r.neighbor.clone(), r.via.clone()))
            .collect();
        assert_eq!(
            summary,
            vec![
                (sx(&[1, 2]), sx(&[1, 2, 4])),
                (sx(&[1, 3]), sx(&[1, 3, 4])),
                (sx(&[2, 4]), sx(&[1, 2, 4])),
                (sx(&[3, 4]), sx(&[1, 3, 4])),
            ]
        );
        assert!(records.iter().all(|r| r.neighbor.union(&sx(&[1, 4])) == r.via));
    }

    #[test]
    fn neighbors_of_fan_axis() {
        let cx = triangle_fan();
        let got: Vec<Simplex> = cx
            .neighbors(&sx(&[2, 3]))
            .unwrap()
            .into_iter()
            .map(|r| r.neighbor)
            .collect();
        assert_eq!(
            got,
            vec![sx(&[1, 2]), sx(&[1, 3]), sx(&[2, 4]), sx(&[2, 5]), sx(&[3, 4]), sx(&[3, 5])]
        );
    }

    #[test]
    fn degree_counts_containing_simplices() {
        assert_eq!(triangle_fan().degree(&sx(&[2, 3])).unwrap(), 3);
        assert_eq!(two_triangles().degree(&sx(&[1, 4])).unwrap(), 2);
        let empty = WeightedComplex::new(2, 4, vec![]).unwrap();
        assert_eq!(empty.degree(&sx(&[1, 2])).unwrap(), 0);
    }

    #[test]
    fn isolated_simplex_has_no_neighbors() {
        let cx = two_triangles();
        assert!(cx.neighbors(&sx(&[2, 3])).unwrap().is_empty());
        assert_eq!(cx.degree(&sx(&[2, 3])).unwrap(), 0);
    }

    #[test]
    fn query_simplices_are_checked() {
        let cx = two_triangles();
        assert!(matches!(cx.degree(&sx(&[1, 2, 3])), Err(Error::InvalidSimplex(_))));
        assert!(matches!(cx.neighbors(&sx(&[9])), Err(Error::InvalidSimplex(_))));
        assert!(matches!(cx.degree(&sx(&[1, 9])), Err(Error::InvalidSimplex(_))));
    }

    #[test]
    fn construction_rejects_bad_entries() {
        assert!(matches!(
            WeightedComplex::new(2, 4, vec![(sx(&[1, 2]), 1.0)]),
            Err(Error::InvalidSimplex(_))
        ));
        assert!(matches!(
            WeightedComplex::new(2, 4, vec![(sx(&[1, 2, 5]), 1.0)]),
            Err(Error::InvalidSimplex(_))
        ));
        assert!(matches!(
            WeightedComplex::new(2, 4, vec![(sx(&[1, 2, 3]), 1.0), (sx(&[1, 2, 3]), 2.0)]),
            Err(Error::InvalidSimplex(_))
        ));
        assert!(matches!(
            WeightedComplex::new(2, 4, vec![(sx(&[1, 2, 3]), f64::NAN)]),
            Err(Error::InvalidWeights(_))
        ));
        assert!(matches!(WeightedComplex::new(0, 4, vec![]), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn validate_reports_weight_problems() {
        let chain = WeightedComplex::new(
            2,
            7,
            vec![
                (sx(&[1, 2, 3]), 2.0),
                (sx(&[2, 3, 5]), 3.0),
                (sx(&[3, 4, 5]), 5.0),
                (sx(&[2, 5, 6]), 7.0),
                (sx(&[4, 5, 7]), 5.0),
            ],
        )
        .unwrap();
        assert!(chain.validate(true).is_valid());

        let negative = WeightedComplex::new(2, 4, vec![(sx(&[1, 2, 3]), -1.0)]).unwrap();
        let report = negative.validate(false);
        assert_eq!(report.violations().len(), 1);
        assert!(matches!(report.violations()[0], Violation::NegativeWeight { .. }));

        let zero = WeightedComplex::new(2, 4, vec![(sx(&[1, 2, 3]), 0.0)]).unwrap();
        assert!(zero.validate(false).is_valid());
        let report = zero.validate(true);
        assert_eq!(report.violations().len(), 1);
        assert!(matches!(report.violations()[0], Violation::NonPositiveWeight { .. }));
    }

    #[test]
    fn incidences_cover_only_involved_facets() {
        let cx = two_triangles();
        // {1,2},{1,3},{1,4},{2,4},{3,4}: never the full C(4,2) = 6 edges
        assert_eq!(cx.incident_facets().len(), 5);
        assert!(!cx.incident_facets().contains(&sx(&[2, 3])));
    }

    #[test]
    fn equality_ignores_entry_order() {
        let a = two_triangles();
        let b = WeightedComplex::new(
            2,
            4,
            vec![(sx(&[1, 3, 4]), 3.0), (sx(&[1, 2, 4]), 5.0)],
        )
        .unwrap();
        assert_eq!(a, b);
    }
}
