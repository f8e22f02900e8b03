//! Terrain-like graphs, Dumont derangements of the second kind, and the
//! bijection between them.
//!
//! A graph on vertices 1..=n is *terrain-like* when any two edges {a,c} and
//! {b,d} with a < b < c < d force the edge {a,d}. A permutation of 1..=2n is
//! a *Dumont derangement of the second kind* when every odd position holds a
//! larger value and every even position a smaller one. Both families are
//! counted by the median Genocchi numbers 1, 2, 8, 56, 608, 9440, ...
//!
//! The bijection sends a graph to the composition of one fixed transposition
//! per edge applied to a base derangement; its inverse reads edges back off
//! the permutation one vertex pair at a time. Exhaustive enumerators for
//! both families, a configurable verification engine, and plain-text / JSONL
//! codecs round out the crate.
//!
//! ```
//! use genocchi::{graph_to_permutation, permutation_to_graph, Graph};
//!
//! let g = Graph::from_edges(6, &[(1, 3), (1, 5), (1, 6), (2, 6), (3, 5)])?;
//! let p = graph_to_permutation(&g);
//! assert_eq!(p.to_string(), "4,1,11,3,9,2,8,7,10,5,12,6");
//! assert_eq!(permutation_to_graph(&p)?, g);
//! # Ok::<(), genocchi::Error>(())
//! ```

pub mod bijection;
pub mod dumont;
pub mod error;
pub mod graph;
pub mod io;
pub mod pairs;
pub mod perm;
pub mod sequences;
pub mod terrain;

pub use error::{Error, ParseError, Result};
pub use graph::{Graph, MAX_VERTICES};
pub use pairs::{all_pairs, canonical_valid_order, random_valid_order, ValidOrder, VertexPair};
pub use perm::Permutation;

pub use dumont::{
    apply_pair_transposition, base_derangement, conjugate_adjacent, dumont_violation,
    edge_configuration, enumerate_dumont_derangements, enumerate_dumont_derangements_prefixed,
    is_dumont_derangement, is_dumont_second_kind, pair_transposition, DumontEnumerator,
    DumontViolation,
};
pub use terrain::{
    enumerate_terrain, enumerate_terrain_prefixed, has_all_consecutive_edges, is_terrain_like,
    toggle_consecutive_edge, x_violation, TerrainEnumerator, XViolation,
};

pub use bijection::{
    graph_to_permutation, graph_to_permutation_ordered, peel_minimal_edge, permutation_to_graph,
    permutation_to_graph_ordered, permutation_to_graph_traced, verify_round_trip, verify_with,
    CheckResult, UnmapStep, UnmapTrace, VerificationReport, VerifyOptions, VERIFY_MAX_N,
};
pub use sequences::{
    median_genocchi, normalized_median_genocchi, sequence_record, CountMethod, SequenceRecord,
};

pub use io::{
    parse_graph, parse_permutation, serialize_graph, serialize_permutation, GraphRecord,
    PairedRecord, PermRecord,
};
