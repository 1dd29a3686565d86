//! Triangle-free graph toolkit: Andrásfai and Vega families, blow-ups and twin
//! quotients, the covering properties D(k) and Q(k), recognition of dense
//! triangle-free graphs, exhaustive enumeration and a registry of structural
//! checks.

pub mod bitset;
pub mod embed;
pub mod error;
pub mod families;
pub mod graph;
pub mod iso;
pub mod properties;
pub mod recognition;
pub mod search;
pub mod twins;
pub mod verify;

pub use bitset::VertexSet;
pub use embed::{find_induced, induced_embeddings, subgraph_embeddings, Embedding};
pub use error::{Error, Result};
pub use graph::{Graph, MAX_ORDER};
pub use iso::{
    adjacency_key, automorphism_order, automorphisms, canonical_form, canonical_labeling,
    isomorphic, Permutation,
};
pub use twins::{
    blowup, h_twins, has_twin_property, quotient, twin_partition, BlowupSpec, TwinPartition,
    TwinViolation,
};
