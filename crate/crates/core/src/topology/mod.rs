//! Planarity, outerplanarity, connectivity and disjoint paths.

pub mod connectivity;
pub mod outerplanar;
pub mod planarity;

pub use connectivity::{
    blocks, connectivity_capped, internally_disjoint_paths, is_block, is_k_connected, local_connectivity,
    separators_of_size, vertex_connectivity, DisjointPaths,
};
pub use outerplanar::{outerplanar_embedding, xy_outerplanar_embedding, OuterplaneEmbedding};
pub use planarity::{
    cycle_interior, face_walks, is_planar, planar_embedding, KuratowskiKind, NonplanarWitness, PlanarEmbedding,
    Planarity,
};
