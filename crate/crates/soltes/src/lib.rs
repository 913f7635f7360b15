//! Exact combinatorics for the Šoltés property on hypergraphs and weighted
//! graphs: a vertex v is *transmission-preserving* if deleting it leaves the
//! Wiener index unchanged, and a structure is Šoltés if every vertex is.
//!
//! The crate is organized around a handful of small, exact primitives:
//!
//! * [`hypergraph`]: k-uniform hypergraphs, their 2-section, vertex deletion.
//! * [`invariants`]: BFS distance matrices, Wiener index, transmission,
//!   detour sums, and per-vertex Šoltés reports over `u64` distances with an
//!   explicit infinity.
//! * [`weighted`]: graphs with exact rational edge weights (including zero),
//!   Dijkstra over a common-denominator integer scaling, and the weighted
//!   analogues of the invariants.
//! * [`constructions`]: the known Šoltés families (knit hypergraphs, their
//!   r-generalization, a 54-vertex irregular example, weighted prisms,
//!   an alternating-weight cycle) plus plain cycles for contrast.
//! * [`canon`]: canonical labeling for hypergraphs, the basis of
//!   isomorph-free enumeration.
//! * [`search`]: canonical-augmentation enumeration of k-uniform hypergraphs
//!   with deterministic budgets and sharding, a Šoltés witness search, and a
//!   randomized/exhaustive audit of distance-invariant bounds on small
//!   4-uniform hypergraphs.
//! * [`verify`]: the end-to-end checks exercising all of the above, shared
//!   by the `verify-paper` CLI subcommand and the acceptance test suite.
//!
//! Everything is deterministic: seeded RNG, sorted iteration orders, and
//! search results that do not depend on the partition/thread count.
//!
//! The `examples/` directory is the front door; each example is a runnable
//! walkthrough of one capability. A thin `soltes` binary exposes the same
//! operations as subcommands for scripting.

pub mod canon;
pub mod cli;
pub mod constructions;
pub mod distance;
pub mod hypergraph;
pub mod invariants;
pub mod search;
pub mod verify;
pub mod weighted;

pub use distance::{Delta, Distance};
pub use hypergraph::{Hypergraph, HypergraphError};
pub use invariants::{
    detour_sum, diameter, distance_distribution, distance_matrix, is_connected, is_soltes,
    soltes_report, transmission, wiener, DistanceDistribution, DistanceMatrix, SoltesReport,
};
