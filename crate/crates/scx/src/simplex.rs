//! Simplices as canonical sorted vertex sets.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A simplex identified by its vertex set.
///
/// Vertex ids are positive integers stored strictly ascending, so equal
/// vertex sets compare equal and the derived ordering is lexicographic.
/// A simplex with `k + 1` vertices has dimension `k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<u32>,
}

impl Simplex {
    /// Builds a simplex from vertex ids given in any order.
    ///
    /// Rejects an empty set, the id 0, and repeated ids.
    pub fn new(mut vertices: Vec<u32>) -> Result<Self, Error> {
        if vertices.is_empty() {
            return Err(Error::InvalidSimplex("empty vertex set".into()));
        }
        if vertices.contains(&0) {
            return Err(Error::InvalidSimplex("vertex ids are 1-based, found 0".into()));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSimplex(format!(
                "repeated vertex in [{}]",
                join(&vertices)
            )));
        }
        Ok(Self { vertices })
    }

    /// Wraps vertices that are already strictly ascending and 1-based.
    pub(crate) fn from_sorted(vertices: Vec<u32>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices[0] >= 1);
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self { vertices }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Number of vertices.
    pub fn cardinality(&self) -> usize {
        self.vertices.len()
    }

    /// Dimension, one less than the number of vertices.
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn max_vertex(&self) -> u32 {
        *self.vertices.last().expect("simplices are nonempty")
    }

    pub fn contains(&self, vertex: u32) -> bool {
        self.vertices.binary_search(&vertex).is_ok()
    }

    /// Subset test against another simplex.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let mut rest = other.vertices.iter();
        self.vertices.iter().all(|v| rest.any(|o| o == v))
    }

    /// All faces of one dimension less, ordered by the deleted vertex.
    ///
    /// A 0-simplex has no such faces.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.vertices.len() == 1 {
            return Vec::new();
        }
        (0..self.vertices.len())
            .map(|skip| {
                let vertices = self
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, v)| *v)
                    .collect();
                Simplex { vertices }
            })
            .collect()
    }

    /// Set union with another simplex.
    pub fn union(&self, other: &Simplex) -> Simplex {
        let (xs, ys) = (&self.vertices, &other.vertices);
        let mut vertices = Vec::with_capacity(xs.len() + ys.len());
        let (mut i, mut j) = (0, 0);
        while i < xs.len() && j < ys.len() {
            match xs[i].cmp(&ys[j]) {
                std::cmp::Ordering::Less => {
                    vertices.push(xs[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    vertices.push(ys[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    vertices.push(xs[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        vertices.extend_from_slice(&xs[i..]);
        vertices.extend_from_slice(&ys[j..]);
        Simplex { vertices }
    }
}

fn join(vertices: &[u32]) -> String {
    let mut out = String::new();
    for (i, v) in vertices.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&v.to_string());
    }
    out
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.vertices))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for Simplex {
    type Err = Error;

    /// Parses comma-separated vertex ids, e.g. `"1,3"`. Order-insensitive.
    fn from_str(s: &str) -> Result<Self, Error> {
        let vertices = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidSimplex(format!("bad vertex id `{tok}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Simplex::new(vertices)
    }
}
