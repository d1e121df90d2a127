pub mod bfs;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod layout;
pub mod oracle;
pub mod partition;
pub mod planarity;
pub mod render;
pub mod triangulate;

pub use bfs::{bfs_layering, BfsTree, Layering};
pub use embedding::Embedding;
pub use error::{Error, Result};
pub use graph::Graph;
pub use partition::{partition_planar, Mode, Part, Partition, TreeDecomposition, Tripod};
pub use planarity::{is_planar, planar_embed};
pub use triangulate::{triangulate, Triangulation};
pub use layout::{planar_pipeline, validate_queue_layout, Assign, PipelineResult, QueueLayout};
