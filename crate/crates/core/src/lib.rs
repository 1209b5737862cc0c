//! Automorphism-invariant ("fair") systems of representatives.
//!
//! Given a family of finite sets carried by a group action, a system of
//! representatives is a set meeting every family member; this crate computes
//! invariant systems from arbitrary ones with sharp, exactly-checked bounds,
//! together with the graph machinery the constructions run on:
//!
//! - finite simple graphs, automorphism groups, vertex/edge orbits;
//! - enumeration of pattern copies inside a host graph;
//! - exact minimum hitting sets, plain and restricted to invariant
//!   (orbit-union) edge sets, giving the edge representativeness of a
//!   pattern in a host and its symmetric variant;
//! - symmetrization of systems of k-multiple and weighted representatives
//!   over finite group actions, with exact rational ledgers, plus a product
//!   construction that rederives the weighted case from the multiple case;
//! - the canonical automorphism-invariant minimum vertex cover of a
//!   bipartite graph (Dulmage-Mendelsohn);
//! - a constructive pipeline that, for a "tadpole" pattern K (unique
//!   degree-one vertex whose removal leaves a vertex-transitive body),
//!   turns any edge set hitting all K-copies into an invariant one at most
//!   `(|E(K)| - 1)` times larger.
//!
//! Start from the `examples/` directory; each example exercises one of the
//! capabilities above end to end. A thin `symrep` binary exposes the same
//! operations as subcommands with JSON output.

pub mod cli;
pub mod cover;
pub mod dm;
pub mod graph;
pub mod perm;
pub mod ratio;
pub mod subiso;
pub mod symmetrize;
pub mod tadpole;

pub use cover::{
    edge_representativeness, min_hitting_set, min_orbit_hitting_set, CoverError, FamilyOfSets,
    HittingResult,
};
pub use dm::{
    invariant_min_cover, max_matching, min_cover_membership, BipartiteGraph, Cover,
    CoverMembership, DmError, Matching,
};
pub use graph::{edge, edge_set, Edge, EdgeSet, Graph, GraphError};
pub use perm::{
    automorphism_group, edge_permutation, is_vertex_transitive, orbits, Action, OrbitPartition,
    PermError, PermGroup, Permutation,
};
pub use subiso::{copies_hit_by, enumerate_copies, SubgraphCopy, SubisoError};
pub use symmetrize::{
    check_representatives, check_weighted_representatives, family_invariant, product_oracle,
    symmetrize_multiple, symmetrize_weighted, weight_lift_size, weighted_family_invariant,
    MultipleViolation, OrbitLedgerEntry, SymmetrizationReport, SymmetrizeError, WeightFunction,
    WeightedFamily, WeightedViolation,
};
pub use tadpole::{
    build_delta, build_pair_family, symmetric_tadpole_representatives, validate_tadpole,
    BoundCheck, DeltaGraph, PipelineTrace, TadpoleDecomposition, TadpoleError,
};
