//! Weighted simplicial complexes and shortest d-paths.
//!
//! A [`WeightedComplex`] stores d-dimensional simplices with real weights
//! over a complete (d-1)-skeleton. Two (d-1)-simplices are neighbors when
//! their union is a weighted top simplex; a d-path visits distinct
//! (d-1)-simplices through distinct top simplices; and the weighted distance
//! between two (d-1)-simplices is the least total weight over d-paths.
//! [`WeightedComplex::sssp`] computes single-source distances with a
//! binary-heap search that generalizes the usual graph algorithm, which is
//! recovered exactly at `d = 1`.
//!
//! The crate also ships the seeded [`generate`] sampler for random
//! complexes and the `.scx` text format in [`format`]. With the default
//! `parallel` feature, batch entry points (sampling, all-sources searches)
//! fan out over threads without changing any result.
//!
//! ```
//! use scx::{Simplex, WeightedComplex};
//!
//! let sx = |ids: &[u32]| Simplex::new(ids.to_vec()).unwrap();
//! let cx = WeightedComplex::new(
//!     2,
//!     4,
//!     vec![(sx(&[1, 2, 3]), 1.0), (sx(&[2, 3, 4]), 2.0)],
//! )
//! .unwrap();
//! let map = cx.sssp(&sx(&[1, 2])).unwrap();
//! assert_eq!(map.distance(&sx(&[3, 4])), 3.0);
//! ```

pub mod complex;
pub mod dijkstra;
pub mod error;
pub mod format;
pub mod generate;
pub mod simplex;

pub use complex::{NeighborRecord, ValidationReport, Violation, WeightedComplex};
pub use dijkstra::{DPath, DistanceEntry, DistanceMap, PathDefect};
pub use error::Error;
pub use generate::{generate, generate_serial, GeneratorConfig};
pub use simplex::Simplex;
